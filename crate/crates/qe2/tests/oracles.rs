//! Independent oracles: numeric evaluation with `num_rational`, Pascal
//! recursions, and brute-force minors. Frozen values are written out.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use qe2::gwa::{self, CchiFactor};
use qe2::repmod::{self, TorsionKind};
use qe2::scalar::{qbinom, qint};
use qe2::zlattice::{self, IntMatrix};
use qe2::{catalog, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const POINTS: [i64; 4] = [2, 3, 5, 7];

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rpow(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Evaluates a scalar at `q` and fixed values for the other parameters.
fn eval(s: &Scalar, q: i64) -> BigRational {
    let mut x = s.clone();
    for (name, v) in [("q", q), ("chi", 11), ("alpha", 13), ("gamma", 17)] {
        x = x.specialize_named(name, &Scalar::int(v)).unwrap();
    }
    let constant = |p: &qe2::scalar::Poly| -> BigInt {
        assert!(p.len() <= 1, "not constant after specializing");
        p.terms().next().map(|(_, c)| c.clone()).unwrap_or_default()
    };
    BigRational::new(constant(x.numer()), constant(x.denom()))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let names = ["q", "chi", "alpha"];
    let mut num = Scalar::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let v = Scalar::param(names[rng.gen_range(0..3)]).unwrap().pow(rng.gen_range(-2..=2)).unwrap();
        num = num + v * Scalar::int(rng.gen_range(-4..=4));
    }
    let den = Scalar::q_pow(rng.gen_range(0..=2)) - Scalar::q_pow(rng.gen_range(3..=5)) * Scalar::int(rng.gen_range(1..=2));
    num / den
}

#[test]
fn field_operations_commute_with_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let (a, b) = (random_scalar(&mut rng), random_scalar(&mut rng));
        for q in POINTS {
            let (ea, eb) = (eval(&a, q), eval(&b, q));
            assert_eq!(eval(&(a.clone() + b.clone()), q), &ea + &eb);
            assert_eq!(eval(&(a.clone() - b.clone()), q), &ea - &eb);
            assert_eq!(eval(&(a.clone() * b.clone()), q), &ea * &eb);
            if !b.is_zero() && !eb.is_zero() {
                assert_eq!(eval(&a.div_ref(&b).unwrap(), q), &ea / &eb);
            }
        }
    }
}

/// `[n, m]_t` by `[n, m] = [n-1, m-1] + t^m [n-1, m]`.
fn pascal(n: u32, m: u32, t: &BigRational) -> BigRational {
    let mut row = vec![BigRational::one()];
    for k in 1..=n {
        let mut next = vec![BigRational::one(); k as usize + 1];
        for j in 1..k as usize {
            next[j] = &row[j - 1] + rpow(t, j as i64) * &row[j];
        }
        row = next;
    }
    row[m as usize].clone()
}

#[test]
fn qbinom_matches_pascal() {
    for base in [-2, 1, 2, 3] {
        for n in 0..=7 {
            for m in 0..=n {
                let s = qbinom(n, m, base).unwrap();
                assert!(s.denom().is_one(), "qbinom({n},{m}) not expanded");
                for q in POINTS {
                    let t = rpow(&rat(q), base.into());
                    assert_eq!(eval(&s, q), pascal(n, m, &t), "qbinom({n},{m},q^{base}) at q={q}");
                }
            }
        }
    }
}

#[test]
fn qint_matches_geometric_sum() {
    for base in [-2, 2, 1] {
        for n in -4..=6 {
            for q in POINTS {
                let t = rpow(&rat(q), base.into());
                let want = (BigRational::one() - rpow(&t, n)) / (BigRational::one() - &t);
                assert_eq!(eval(&qint(n, base), q), want, "qint({n}, {base}) at {q}");
            }
        }
    }
}

#[test]
fn frozen_scalar_values() {
    let one = Scalar::one;
    let q = Scalar::q_pow;
    // (1 - q^-6) / (1 - q^-2) = 1 + q^-2 + q^-4
    let x = (one() - q(-6)).div_ref(&(one() - q(-2))).unwrap();
    assert_eq!(x, one() + q(-2) + q(-4));
    assert_eq!(eval(&x, 2), BigRational::new(21.into(), 16.into()));
    // (1 - q^2)/(1 - q) + q = 1 + 2q
    let y = (one() - q(2)).div_ref(&(one() - q(1))).unwrap() + q(1);
    assert_eq!(y, one() + q(1) * Scalar::int(2));
    assert_eq!(eval(&y, 7), rat(15));
}

#[test]
fn fb_cubed_coefficient() {
    let dq = catalog::spec("Dq").unwrap();
    // F precedes b in the generator order, so read the coefficient off b^3 F.
    let x = catalog::parse_in("Dq", "b^3*F").unwrap();
    let a = dq.gen_index("a").unwrap();
    let b = dq.gen_index("b").unwrap();
    let mut mono = vec![0; dq.ngens()];
    mono[a] = 1;
    mono[b] = 2;
    let c = x.coeff(&mono);
    for q in POINTS {
        let t = rpow(&rat(q), -2);
        assert_eq!(eval(&c, q), -(BigRational::one() + &t + &t * &t) * rpow(&rat(q), 3));
    }
}

/// `a(t) = (q^-1 - q^-3)^-1 t^-1 (t - α)` evaluated directly.
fn a_of(t: &BigRational, q: i64) -> BigRational {
    let qr = rat(q);
    let mu = (rpow(&qr, -1) - rpow(&qr, -3)).recip();
    mu * (t - rat(13)) / t
}

#[test]
fn torsion_module_coefficients() {
    let d = gwa::cchip_data(CchiFactor::UTheta, &Scalar::param("alpha").unwrap()).unwrap();
    let m = repmod::gwa_torsion_module(TorsionKind::WGamma, &d).unwrap();
    for k in 1..=6i64 {
        let v = m.act_named("x", &[-k]).unwrap();
        let c = v.coeff(&[1 - k]);
        for q in POINTS {
            let t = rpow(&rat(q), 2 * k) * rat(17);
            assert_eq!(eval(&c, q), a_of(&t, q), "x y^{k} at q={q}");
        }
        let v = m.act_named("y", &[k]).unwrap();
        let c = v.coeff(&[k - 1]);
        for q in POINTS {
            let t = rpow(&rat(q), -2 * (k - 1)) * rat(17);
            assert_eq!(eval(&c, q), a_of(&t, q), "y x^{k} at q={q}");
        }
    }
}

#[test]
fn h_module_coefficients() {
    let m = repmod::cchi_module(repmod::CchiKind::H).unwrap();
    for i in 1..=6i64 {
        let c = m.act_named("x1", &[i, 0]).unwrap().coeff(&[i - 1, 0]);
        for q in POINTS {
            let t = rpow(&rat(q), 2);
            let geo: BigRational = (0..i).map(|k| rpow(&t, k)).sum();
            assert_eq!(eval(&c, q), geo * rat(11));
        }
    }
}

fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].into();
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let s = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors `d_k = gcd of k×k minors`.
fn det_divisors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                g = num_integer::Integer::gcd(&g, &det(&sub));
            }
        }
        out.push(g);
    }
    out
}

#[test]
fn smith_matches_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        let sm = zlattice::snf(&m);
        assert_eq!(sm.u.mul(&m).mul(&sm.v), sm.s);
        assert!(sm.u.det().abs().is_one() && sm.v.det().abs().is_one());
        let diag: Vec<BigInt> = sm.diagonal().iter().map(|x| x.abs()).collect();
        let mut prod = BigInt::one();
        for (k, dk) in det_divisors(&rows).into_iter().enumerate() {
            prod *= &diag[k];
            assert_eq!(prod, dk, "{rows:?}");
        }
        for v in zlattice::kernel(&m) {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }
}

#[test]
fn frozen_lattice_values() {
    assert_eq!(det(&zlattice::matrix_d().to_rows_i64()), BigInt::from(16));
    assert_eq!(det(&zlattice::builtin("D56").unwrap().to_rows_i64()), BigInt::from(4));
    assert_eq!(det_divisors(&[vec![2, 0], vec![0, 3]]), vec![BigInt::from(1), BigInt::from(6)]);
}
