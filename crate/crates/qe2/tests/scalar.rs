use qe2::parse::parse_scalar;
use qe2::scalar::{qint, ScalarFraction};
use qe2::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random(rng: &mut ChaCha8Rng) -> Scalar {
    let names = ["q", "chi", "gamma"];
    let mut num = Scalar::int(rng.gen_range(-2..=2));
    for _ in 0..rng.gen_range(1..=3) {
        let v = Scalar::param(names[rng.gen_range(0..3)]).unwrap().pow(rng.gen_range(-2..=2)).unwrap();
        num = num + v * Scalar::int(rng.gen_range(-3..=3));
    }
    let den = Scalar::one() - Scalar::q_pow(rng.gen_range(1..=3)) * Scalar::int(rng.gen_range(1..=2));
    num / den
}

/// Same value written differently: multiply numerator and denominator.
fn disguise(x: &Scalar, k: i32) -> Scalar {
    let f = Scalar::one() + Scalar::q_pow(k);
    ScalarFraction::from_parts(x.numer().mul(f.numer()), x.denom().mul(f.numer())).unwrap()
}

#[test]
fn equality_is_a_congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..80 {
        let (a, b) = (random(&mut rng), random(&mut rng));
        let (a2, b2) = (disguise(&a, 1), disguise(&b, 2));
        assert_eq!(a, a);
        assert_eq!(a, a2);
        assert_eq!(a2, a);
        assert_eq!(disguise(&a2, 3), a);
        assert_eq!(a.clone() + b.clone(), a2.clone() + b2.clone());
        assert_eq!(a.clone() * b.clone(), a2.clone() * b2.clone());
        assert_eq!(a.clone() - a2.clone(), Scalar::zero());
    }
}

#[test]
fn normalize_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..80 {
        let mut x = disguise(&random(&mut rng), 1);
        x.normalize();
        let (n, d) = (x.numer().clone(), x.denom().clone());
        x.normalize();
        assert_eq!((x.numer(), x.denom()), (&n, &d));
    }
}

#[test]
fn zero_is_canonical() {
    let z = Scalar::q_pow(3) - Scalar::q_pow(3);
    assert!(z.is_zero());
    assert!(z.numer().is_empty());
    assert!(z.denom().is_one());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let x = random(&mut rng);
    assert!((x.clone() - x).is_zero());
}

#[test]
fn worked_values() {
    let q = Scalar::q_pow;
    assert_eq!((q(2) - Scalar::one()).div_ref(&(q(1) - Scalar::one())).unwrap(), q(1) + Scalar::one());
    assert_eq!(qint(3, 2), Scalar::one() + q(2) + q(4));
    assert_eq!(qint(-1, 2), q(-2).neg_ref());
    assert_eq!(qint(0, 2), Scalar::zero());
    assert_eq!(parse_scalar("(q^2-1)/(q-1)").unwrap(), parse_scalar("q+1").unwrap());
    assert_eq!(parse_scalar("q^-1*q").unwrap(), Scalar::one());
    assert!(Scalar::one().div_ref(&Scalar::zero()).is_err());
    assert!(Scalar::zero().pow(-1).is_err());
    assert!(parse_scalar("q^").is_err());
    let chi = Scalar::param("chi").unwrap();
    assert_eq!(chi.specialize_named("chi", &Scalar::int(3)).unwrap(), Scalar::int(3));
}
