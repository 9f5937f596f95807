use num_bigint::BigInt;
use num_traits::Zero;
use qe2::zlattice::{self, IntMatrix, LatticeError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn rank_nullity() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        let k = zlattice::kernel(&m);
        assert_eq!(zlattice::snf(&m).rank() + k.len(), c, "{rows:?}");
        for v in &k {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn zero_matrices() {
    let z = IntMatrix::zeros(2, 2);
    assert_eq!(zlattice::kernel(&z).len(), 2);
    let c = zlattice::torus_center(&IntMatrix::zeros(1, 1)).unwrap();
    assert_eq!(c.rank(), 1);
    assert!(!c.is_trivial());
}

#[test]
fn builtin_centers() {
    let d = zlattice::torus_center(&zlattice::matrix_d()).unwrap();
    assert!(d.is_trivial());
    assert_eq!(d.summary(), "kernel rank 0; center trivial");
    assert!(zlattice::torus_center(&zlattice::matrix_uq_e()).unwrap().is_trivial());
    for name in zlattice::BUILTIN_NAMES {
        let m = zlattice::builtin(name).unwrap();
        assert!(m.is_antisymmetric(), "{name}");
    }
    assert!(zlattice::builtin("nope").is_err());
}

#[test]
fn json_round_trip() {
    let m = zlattice::matrix_cx();
    assert_eq!(IntMatrix::from_json(&m.to_json()).unwrap(), m);
    assert!(IntMatrix::from_json("[[1, 2], [3]]").is_err());
    assert!(IntMatrix::from_json("not json").is_err());
}

#[test]
fn rejects_non_antisymmetric() {
    let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(matches!(zlattice::torus_center(&m), Err(LatticeError::NotAntisymmetric)));
    let diag = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
    assert!(zlattice::torus_center(&diag).is_err());
}

#[test]
fn hermite_form_spans_kernel() {
    let m = IntMatrix::from_rows(&[vec![0, 2, -2], vec![-2, 0, 4], vec![2, -4, 0]]).unwrap();
    let k = zlattice::kernel(&m);
    assert_eq!(k.len(), 1);
    let v: Vec<BigInt> = [2, 1, 1].map(BigInt::from).to_vec();
    assert!(k[0] == v || k[0] == v.iter().map(|x| -x).collect::<Vec<_>>());
    assert_eq!(zlattice::hermite(&k).len(), 1);
}
