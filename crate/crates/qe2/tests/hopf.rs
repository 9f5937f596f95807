use qe2::catalog;
use qe2::hopf::{self, ULetter, Which};
use qe2::parse::parse_element;

#[test]
fn coproducts() {
    let h = hopf::hopf(Which::Oq);
    let oq = |t: &str| catalog::parse_in("Oq", t).unwrap();
    let t2 = |t: &str| parse_element(t, &h.t2, &()).unwrap();
    assert_eq!(hopf::coproduct(&oq("b"), Which::Oq).unwrap(), t2("b_1*a_2^-1 + a_1*b_2"));
    assert_eq!(hopf::coproduct(&oq("1"), Which::Oq).unwrap(), h.t2.one());
    let ab = hopf::coproduct(&oq("a*b"), Which::Oq).unwrap();
    let prod = h
        .t2
        .mul(&hopf::coproduct(&oq("a"), Which::Oq).unwrap(), &hopf::coproduct(&oq("b"), Which::Oq).unwrap())
        .unwrap();
    assert_eq!(ab, prod);
    assert_eq!(ab, t2("a_1*b_1 + a_1^2*a_2*b_2"));
}

#[test]
fn axioms() {
    for w in [Which::Oq, Which::Uq] {
        let r = hopf::check_hopf_axioms(w);
        assert!(r.passed(), "{r:?}");
    }
    let oq = |t: &str| catalog::parse_in("Oq", t).unwrap();
    let s = hopf::antipode(&oq("a"), Which::Oq).unwrap();
    assert_eq!(catalog::spec("Oq").unwrap().mul(&s, &oq("a")).unwrap(), oq("1"));
    assert!(hopf::counit(&oq("b"), Which::Oq).unwrap().is_zero());
}

#[test]
fn actions_and_cross_relations() {
    let oq = |t: &str| catalog::parse_in("Oq", t).unwrap();
    let dq = |t: &str| catalog::parse_in("Dq", t).unwrap();
    assert_eq!(hopf::act_letter(ULetter::E, &oq("c")).unwrap(), oq("a^-1"));
    assert!(hopf::act_letter(ULetter::F, &oq("a")).unwrap().is_zero());
    assert_eq!(hopf::act_letter(ULetter::F, &oq("b^2")).unwrap(), oq("(1+q^-2)*a*b"));
    assert_eq!(hopf::cross_relation("F", "b").unwrap(), dq("q^-1*b*F + a"));
    assert_eq!(hopf::cross_relation("E", "a").unwrap(), dq("a*E"));
    assert_eq!(hopf::cross_relation("E", "c").unwrap(), dq("c*E + a^-1*K"));
    for u in ["K", "E", "F"] {
        for x in ["a", "b", "c"] {
            let lhs = dq(&format!("{u}*{x}"));
            assert_eq!(hopf::cross_relation(u, x).unwrap(), lhs, "{u}{x}");
        }
    }
}

#[test]
fn coproduct_power_closed_form() {
    for (m, n) in [(0, 0), (1, 1), (3, 2), (4, 4)] {
        assert!(hopf::delta_power(m, n).unwrap().equal(), "({m},{n})");
    }
    assert!(hopf::delta_power(hopf::DELTA_POWER_CAP + 1, 0).is_err());
}
