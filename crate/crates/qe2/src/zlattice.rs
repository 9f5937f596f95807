//! Integer matrices, Smith normal form and kernel lattices.
//!
//! The center of a quantum torus with skew exponent matrix `D` (generators
//! `X_i X_j = q^{D_ij} X_j X_i`) is spanned by the monomials whose exponent
//! vectors lie in `ker D`. This holds only when `q` is not a root of unity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("ragged rows")]
    Ragged,
    #[error("unknown builtin matrix {0}")]
    UnknownBuiltin(String),
    #[error("bad matrix document: {0}")]
    Json(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(LatticeError::Ragged);
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|v| BigInt::from(*v)).collect() })
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(|e| LatticeError::Json(e.to_string()))?;
        Self::from_rows(&rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_rows_i64()).unwrap_or_default()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect()
    }

    /// Entries as machine integers; panics on overflow.
    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|v| i64::try_from(&v).expect("entry fits i64")).collect())
            .collect()
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut r = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = r.get(i, j) + a * o.get(k, j);
                    r.set(i, j, v);
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.set(j, i, self.get(i, j).clone());
            }
        }
        r
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Drops the listed rows and the same columns.
    pub fn delete(&self, idx: &[usize]) -> IntMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !idx.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|i| !idx.contains(i)).collect();
        let mut r = IntMatrix::zeros(keep_r.len(), keep_c.len());
        for (a, i) in keep_r.iter().enumerate() {
            for (b, j) in keep_c.iter().enumerate() {
                r.set(a, b, self.get(*i, *j).clone());
            }
        }
        r
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(a, j) + k * self.get(b, j);
            self.set(a, j, v);
        }
    }

    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, a) + k * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j);
            self.set(a, j, v);
        }
    }
}

/// Smith form with transforms.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Returns `S, U, V` with `U * M * V = S`, `S` diagonal, each diagonal entry
/// dividing the next, and `U`, `V` unimodular.
pub fn snf(m: &IntMatrix) -> Smith {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        let pick = |s: &IntMatrix| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = s.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = pick(&s) else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let k = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row(i, t, &k);
                u.add_row(i, t, &k);
                if !s.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let k = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col(j, t, &k);
                v.add_col(j, t, &k);
                if !s.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let mut best = (t, t);
                for i in t..r {
                    let x = s.get(i, t);
                    if !x.is_zero() && x.abs() < s.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t..c {
                    let x = s.get(t, j);
                    if !x.is_zero() && x.abs() < s.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                s.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let p = s.get(t, t).clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !s.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    s.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { s, u, v }
}

/// Row-style Hermite form of a list of vectors; zero rows dropped.
pub fn hermite(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let n = vectors[0].len();
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut out_rank = 0;
    for col in 0..n {
        loop {
            let nz: Vec<usize> = (out_rank..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).expect("nonempty");
            rows.swap(out_rank, p);
            let mut done = true;
            for i in out_rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let k = rows[i][col].div_floor(&rows[out_rank][col]);
                for j in 0..n {
                    let v = &rows[i][j] - &k * &rows[out_rank][j];
                    rows[i][j] = v;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if out_rank < rows.len() && !rows[out_rank][col].is_zero() {
            if rows[out_rank][col].is_negative() {
                rows[out_rank].iter_mut().for_each(|x| *x = -x.clone());
            }
            for i in 0..out_rank {
                let k = rows[i][col].div_floor(&rows[out_rank][col]);
                if !k.is_zero() {
                    for j in 0..n {
                        let v = &rows[i][j] - &k * &rows[out_rank][j];
                        rows[i][j] = v;
                    }
                }
            }
            out_rank += 1;
        }
    }
    rows.truncate(out_rank);
    rows
}

/// Basis of `{v in Z^cols : M v = 0}` in Hermite form.
pub fn kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let sm = snf(m);
    let rank = sm.rank();
    let basis: Vec<Vec<BigInt>> =
        (rank..m.cols).map(|j| (0..m.cols).map(|i| sm.v.get(i, j).clone()).collect()).collect();
    hermite(&basis)
}

/// Center lattice of a quantum torus; empty means the center is the ground field.
#[derive(Clone, Debug)]
pub struct TorusCenter {
    pub basis: Vec<Vec<BigInt>>,
}

impl TorusCenter {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_trivial() {
            "kernel rank 0; center trivial".to_string()
        } else {
            let vs: Vec<String> = self
                .basis
                .iter()
                .map(|v| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("kernel rank {}; center spanned by {}", self.rank(), vs.join(" "))
        }
    }
}

pub fn torus_center(skew: &IntMatrix) -> Result<TorusCenter, LatticeError> {
    if !skew.is_antisymmetric() {
        return Err(LatticeError::NotAntisymmetric);
    }
    Ok(TorusCenter { basis: kernel(skew) })
}

/// Exponent matrix of `(a, b, c, K, psi, phi)`.
pub fn matrix_d() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 1, 1, 1, 1, 0],
        vec![-1, 0, 0, -1, 0, 1],
        vec![-1, 0, 0, 1, 0, -1],
        vec![-1, 1, -1, 0, 1, -1],
        vec![-1, 0, 0, -1, 0, -1],
        vec![0, -1, 1, 1, 1, 0],
    ])
    .expect("rectangular")
}

/// Exponent matrix of `(K, x1, x2, u, v)` after localizing at `x1, x2`.
pub fn matrix_cx() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 0, 0, 0, 0],
        vec![0, 0, -2, 2, 0],
        vec![0, 2, 0, 0, -2],
        vec![0, -2, 0, 0, 0],
        vec![0, 0, 2, 0, 0],
    ])
    .expect("rectangular")
}

/// Exponent matrix of `(E, K)` in the localization of `U_q` at `E`.
pub fn matrix_uq_e() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, -2], vec![2, 0]]).expect("rectangular")
}

pub const BUILTIN_NAMES: [&str; 4] = ["D", "CX", "D56", "UqE"];

pub fn builtin(name: &str) -> Result<IntMatrix, LatticeError> {
    match name {
        "D" => Ok(matrix_d()),
        "CX" => Ok(matrix_cx()),
        "D56" => Ok(matrix_d().delete(&[4, 5])),
        "UqE" => Ok(matrix_uq_e()),
        _ => Err(LatticeError::UnknownBuiltin(name.to_string())),
    }
}
