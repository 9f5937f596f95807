use qe2::gwa::{self, CchiFactor, DqFactor, GgwaData, QgwaData, CCHI_FACTORS, DQ_FACTORS};
use qe2::pbw::{diamond_check, Element};
use qe2::zlattice::IntMatrix;
use qe2::{catalog, Scalar};
use std::collections::BTreeMap;
use std::sync::Arc;

fn el(s: &qe2::pbw::AlgebraSpec, t: &str) -> Element {
    qe2::parse::parse_element(t, s, &()).unwrap()
}

#[test]
fn phi_factor_is_ggwa() {
    let f = gwa::dq_factor(DqFactor::Phi, None);
    assert!(f.data.condition().unwrap().passed());
    let s = gwa::ggwa_build(&f.data, "phi").unwrap();
    assert!(diamond_check(&s, 2, 30, 4).passed());
    let (_, z) = gwa::factor_central(&s, &f).unwrap();
    assert!(gwa::central_element_check(&s, &z).unwrap().passed());
    assert!(gwa::central_element_check(&s, &s.one()).unwrap().passed());
    // yx = a and xy = sigma(a)
    let a = gwa::lift(&f.data.a_elem, s.ngens());
    assert_eq!(s.mul(&el(&s, "c"), &el(&s, "E")).unwrap(), a);
    let sa = gwa::lift(&f.data.sigma.apply(&f.data.a_elem).unwrap(), s.ngens());
    assert_eq!(s.mul(&el(&s, "E"), &el(&s, "c")).unwrap(), sa);
}

#[test]
fn factor_central_elements() {
    for w in DQ_FACTORS {
        let f = gwa::dq_factor(w, None);
        let s = gwa::ggwa_build(&f.data, w.tag()).unwrap();
        if let Some((n, z)) = gwa::factor_central(&s, &f) {
            assert!(gwa::central_report(&s, &z).unwrap().passed(), "{n}");
        }
    }
}

#[test]
fn alpha_zero_gives_units() {
    let s = gwa::dq_factor_spec(DqFactor::PhiPsiAlpha, Some(Scalar::zero())).unwrap();
    assert!(s.is_unit(&s.mul(&el(&s, "E"), &el(&s, "c")).unwrap()));
    assert!(s.is_unit(&s.mul(&el(&s, "c"), &el(&s, "E")).unwrap()));
    let g = gwa::dq_factor_spec(DqFactor::PhiPsiAlpha, Some(Scalar::param("alpha").unwrap())).unwrap();
    assert!(!g.is_unit(&g.mul(&el(&g, "E"), &el(&g, "c")).unwrap()));
}

#[test]
fn trivial_ggwa_commutes() {
    let base = Arc::new(gwa::quantum_base("kh", &[("h", true)], &IntMatrix::zeros(1, 1)));
    let id = gwa::diagonal_map("id", &base, &[Scalar::one()]).unwrap();
    let d = GgwaData { base: base.clone(), sigma: id.clone(), tau: id, a_elem: base.one(), x: "x".into(), y: "y".into() };
    let s = gwa::ggwa_build(&d, "triv").unwrap();
    let (x, y) = (el(&s, "x"), el(&s, "y"));
    assert_eq!(s.mul(&x, &y).unwrap(), s.one());
    assert_eq!(s.mul(&y, &x).unwrap(), s.one());
}

#[test]
fn all_data_sets_satisfy_condition() {
    for w in DQ_FACTORS {
        assert!(gwa::dq_factor(w, None).data.condition().unwrap().passed(), "{}", w.tag());
        for (l, r) in gwa::base_rules_hold_in_dq(w).unwrap() {
            assert!(r.is_none(), "{} {l}", w.tag());
        }
    }
    for w in CCHI_FACTORS {
        assert!(gwa::cchi_factor_data(w, None).data.condition().unwrap().passed(), "{}", w.tag());
    }
    assert!(DqFactor::parse("nope").is_err());
    assert_eq!(CchiFactor::parse("u-theta").unwrap(), CchiFactor::UTheta);
}

#[test]
fn u_quotient_shape() {
    let s = gwa::cchi_factor(CchiFactor::U, None).unwrap();
    let names: Vec<_> = s.gens().iter().map(|g| g.name.clone()).collect();
    assert_eq!(names, ["v", "x1", "x2", "y2"]);
    let lhs = s.mul(&el(&s, "y2"), &el(&s, "x2")).unwrap();
    assert_eq!(lhs, el(&s, "(q^-3-q^-1)^-1*(v - 1)"));
    let theta = el(&s, "v*x1");
    assert!(gwa::central_element_check(&s, &theta).unwrap().passed());
    let omega = {
        let t = gwa::cchi_factor(CchiFactor::V, None).unwrap();
        (el(&t, "u*x2"), t)
    };
    assert!(gwa::central_element_check(&omega.1, &omega.0).unwrap().passed());
}

#[test]
fn u_theta_zero_is_torus() {
    let s = gwa::cchi_factor(CchiFactor::UTheta, Some(Scalar::zero())).unwrap();
    let x1 = el(&s, "x1");
    let x2 = el(&s, "x2");
    let y2 = el(&s, "y2");
    assert!(s.is_unit(&x1));
    assert!(s.is_unit(&s.mul(&y2, &x2).unwrap()));
    assert_eq!(s.mul(&x2, &x1).unwrap(), s.mul(&x1, &x2).unwrap().scale(&Scalar::q_pow(2)));
}

#[test]
fn quantum_gwa() {
    let mut one = BTreeMap::new();
    one.insert(0, Scalar::one());
    let d = QgwaData::from_laurent(&one, 1).unwrap();
    let s = gwa::qgwa_build(&d).unwrap();
    let (x, y) = (el(&s, "x"), el(&s, "y"));
    assert_eq!(s.mul(&x, &y).unwrap(), s.one());
    let d = gwa::cchip_data(CchiFactor::UTheta, &Scalar::param("alpha").unwrap()).unwrap();
    let s = gwa::qgwa_build(&d).unwrap();
    let mut sa = Element::zero();
    for (k, c) in d.shifted(d.q_power) {
        sa.add_term(vec![k, 0, 0], c);
    }
    assert_eq!(s.mul(&el(&s, "x"), &el(&s, "y")).unwrap(), sa);
    assert_eq!(d.zeta, Some(Scalar::param("alpha").unwrap()));
    assert!(diamond_check(&s, 3, 40, 2).passed());
}

#[test]
fn cchip_forms_share_rules() {
    for (w, p) in [(CchiFactor::UTheta, "alpha"), (CchiFactor::VOmega, "beta")] {
        let pv = Scalar::param(p).unwrap();
        let a = gwa::cchi_factor(w, Some(pv.clone())).unwrap();
        let b = gwa::qgwa_build(&gwa::cchip_data(w, &pv).unwrap()).unwrap();
        assert!(gwa::same_rule_table(&a, &b));
    }
}

#[test]
fn presentation_export() {
    let s = gwa::cchi_factor(CchiFactor::U, None).unwrap();
    let js = gwa::export_presentation(&s);
    assert!(js.get("generators").is_some() || js.get("gens").is_some(), "{js}");
    let _ = catalog::spec("Dq").unwrap();
}
