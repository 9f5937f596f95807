use qe2::catalog::{self, parse_in};
use qe2::pbw::{check_morphism, diamond_check, AlgebraSpec, Element, MorphismSpec};
use qe2::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn dq(t: &str) -> Element {
    parse_in("Dq", t).unwrap()
}

#[test]
fn ec_in_generator_order() {
    // E precedes c, so E*c is normal and c*E carries the correction.
    assert_eq!(dq("c*E"), dq("E*c - a^-1*K"));
    let s = catalog::spec("Dq").unwrap();
    assert_eq!(s.render(&dq("E*c")), "E*c");
    assert_eq!(dq("F*b^3"), dq("q^-3*b^3*F + (1+q^-2+q^-4)*a*b^2"));
}

#[test]
fn multiplication_examples() {
    let s = catalog::spec("Dq").unwrap();
    let (phi, psi) = (dq("phi"), dq("psi"));
    assert!(s.commutator_q(&phi, &psi, &Scalar::q_pow(1)).unwrap().is_zero());
    assert!(s.commutator_q(&phi, &dq("K"), &Scalar::q_pow(1)).unwrap().is_zero());
    let x = dq("E*c + 3*a^-2*F");
    assert_eq!(s.mul(&s.one(), &x).unwrap(), x);
    assert!(s.commutator_q(&x, &x, &Scalar::one()).unwrap().is_zero());
    let c = catalog::spec("C").unwrap();
    let (x1, u) = (parse_in("C", "x1").unwrap(), parse_in("C", "u").unwrap());
    assert!(c.commutator_q(&x1, &u, &Scalar::q_pow(2)).unwrap().is_zero());
}

#[test]
fn associativity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for id in ["Dq", "C", "A"] {
        let s = catalog::spec(id).unwrap();
        for _ in 0..100 {
            let (x, y, z) = (s.random_element(&mut rng, 2, 2), s.random_element(&mut rng, 2, 2), s.random_element(&mut rng, 2, 2));
            let l = s.mul(&s.mul(&x, &y).unwrap(), &z).unwrap();
            let r = s.mul(&x, &s.mul(&y, &z).unwrap()).unwrap();
            assert_eq!(l, r, "{id}");
        }
    }
}

#[test]
fn involution_examples() {
    let star = catalog::involution();
    assert!(check_morphism(&star).passed());
    let psi = dq("q^-3*K") ;
    let s = catalog::spec("Dq").unwrap();
    assert_eq!(s.mul(&psi, &star.apply(&dq("phi")).unwrap()).unwrap(), dq("psi"));
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let x = s.random_element(&mut rng, 3, 3);
        assert_eq!(star.apply(&star.apply(&x).unwrap()).unwrap(), x);
    }
    let id = MorphismSpec::identity(s.clone());
    let x = dq("phi*psi");
    assert_eq!(id.apply(&x).unwrap(), x);
}

#[test]
fn morphism_checks() {
    let oq = catalog::spec("Oq").unwrap();
    let tau = MorphismSpec::new("tau", oq.clone(), oq.clone(), vec![oq.gen(0), oq.gen(2), oq.gen(1)], false).unwrap();
    assert!(check_morphism(&tau).passed());
    let uq = catalog::spec("Uq").unwrap();
    let k = uq.gen_index("K").unwrap();
    let images = (0..3).map(|g| if g == k { uq.unit_inverse(&uq.gen(k)).unwrap() } else { uq.gen(g) }).collect();
    let bad = MorphismSpec::new("bad", uq.clone(), uq.clone(), images, false).unwrap();
    let r = check_morphism(&bad);
    assert!(!r.passed());
    assert!(r.failures.iter().any(|f| f.relation.contains('K') && f.relation.contains('E')), "{:?}", r.failures);
}

#[test]
fn diamond_examples() {
    let dq = catalog::spec("Dq").unwrap();
    let r = diamond_check(&dq, 2, 0, 0);
    assert!(r.passed());
    assert_eq!(r.generator_triples, 216);
    let mut poly = AlgebraSpec::new("poly", &[("s", false), ("t", false)]);
    poly.skew(1, 0, Scalar::one());
    let poly = Arc::new(poly);
    let r = diamond_check(&poly, 3, 20, 1);
    assert!(r.passed(), "{:?}", r.failures.first());
    // Dropping the correction of c*E leaves a consistent rule set.
    let mut dropped = (*dq).clone();
    let (c, e, a) = (dropped.gen_index("c").unwrap(), dropped.gen_index("E").unwrap(), dropped.gen_index("a").unwrap());
    dropped.set_rule(c, e, Scalar::one(), Element::zero());
    assert!(diamond_check(&dropped, 3, 100, 0).passed());
    let mut broken = (*dq).clone();
    broken.set_rule(c, a, Scalar::one(), Element::zero());
    let r = diamond_check(&broken, 2, 0, 0);
    assert!(!r.passed());
    assert!(!r.failures[0].1.is_empty());
}

#[test]
fn units_and_leading_terms() {
    let s = catalog::spec("Dq").unwrap();
    let x = dq("K^2*a^-1");
    assert!(s.is_unit(&x));
    assert_eq!(s.mul(&x, &s.unit_inverse(&x).unwrap()).unwrap(), s.one());
    assert!(s.unit_inverse(&dq("E")).is_err());
    let (m, c) = s.leading(&dq("3*E*c + a")).unwrap();
    assert_eq!(c, Scalar::int(3));
    assert_eq!(s.filtration_degree(&m), 2);
}
