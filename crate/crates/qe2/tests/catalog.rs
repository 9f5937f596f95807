use qe2::catalog::{self, parse_in};
use qe2::pbw::check_morphism;

#[test]
fn presentations() {
    let dq = catalog::spec("Dq").unwrap();
    assert_eq!(dq.ngens(), 6);
    assert_eq!(dq.rules().count(), 15);
    let pi = catalog::spec("Pi").unwrap();
    assert!(parse_in("Pi", "x*y - q^2*y*x").unwrap().is_zero());
    assert_eq!(pi.ngens(), 2);
    let cchi = catalog::spec("Cchi").unwrap();
    assert!(cchi.gen_index("K").is_none());
    assert!(parse_in("Cchi", "x1*y1 - q^2*y1*x1 - chi").unwrap().is_zero());
    assert!(catalog::spec("Zz").is_err());
}

#[test]
fn named_elements() {
    assert_eq!(catalog::named("phi", "Dq").unwrap(), parse_in("Dq", "(1-q^2)*F*b + q^2*a").unwrap());
    assert_eq!(catalog::named("C", "Uq").unwrap(), parse_in("Uq", "E*F").unwrap());
    let emb = catalog::embedding("C", "Dq").unwrap();
    let u = emb.apply(&catalog::named("u", "C").unwrap()).unwrap();
    assert_eq!(u, parse_in("Dq", "a*psi").unwrap());
    let v = emb.apply(&catalog::named("v", "C").unwrap()).unwrap();
    assert_eq!(v, parse_in("Dq", "a^-1*phi").unwrap());
}

#[test]
fn embeddings_are_morphisms() {
    for (sub, sup) in catalog::EMBEDDINGS {
        let f = catalog::embedding(sub, sup).unwrap();
        assert!(check_morphism(&f).passed(), "{sub} -> {sup}");
    }
    let c = catalog::embedding("C", "Dq").unwrap();
    assert_eq!(c.apply(&parse_in("C", "x1").unwrap()).unwrap(), parse_in("Dq", "a^2*E").unwrap());
    let p = catalog::embedding("Pi", "Oq").unwrap();
    assert!(p.apply(&parse_in("Pi", "x*y - q^2*y*x").unwrap()).unwrap().is_zero());
    let a = catalog::embedding("A", "Dq").unwrap();
    assert_eq!(a.apply(&parse_in("A", "t2").unwrap()).unwrap(), parse_in("Dq", "q^3*a^-1*K^-1*b").unwrap());
}

#[test]
fn suite_entries() {
    let suite = catalog::identity_suite();
    let get = |id: &str| suite.iter().find(|e| e.id == id).unwrap_or_else(|| panic!("{id}"));
    for id in ["fb-power@3", "sanity", "ec-power@4", "phi-psi-commute", "u-is-a-psi", "casimir-central:E"] {
        assert!(catalog::evaluate(get(id)).unwrap().is_zero(), "{id}");
    }
    let e = get("ec-power@4");
    assert_eq!(parse_in("Dq", &e.rhs).unwrap(), parse_in("Dq", "c^4*E + (1+q^-2+q^-4+q^-6)*c^3*a^-1*K").unwrap());
    let r = catalog::run_suite(Some("fb-power"));
    assert_eq!(r.entries.len(), 6);
    assert!(r.passed());
    let ids: Vec<_> = catalog::run_suite(None).entries.into_iter().map(|e| e.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn mirrors_point_at_entries() {
    let suite = catalog::identity_suite();
    for e in suite.iter().filter(|e| e.mirror.is_some()) {
        let m = e.mirror.as_ref().unwrap();
        assert!(suite.iter().any(|x| &x.id == m), "{} -> {m}", e.id);
        assert_eq!(e.algebra, "A");
    }
}
