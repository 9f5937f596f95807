use qe2::autgrp::{self, AutTag, RhoParams};
use qe2::pbw::MorphismSpec;
use qe2::{catalog, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn identity(id: &str) -> MorphismSpec {
    MorphismSpec::identity(catalog::spec(id).unwrap())
}

#[test]
fn inverses_compose_to_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tags = vec![
        AutTag::OqTau,
        AutTag::UqSigma,
        AutTag::OqXi(3),
        AutTag::UqXi(-2),
        AutTag::OqEta(Scalar::int(2), Scalar::q_pow(1), Scalar::int(-3)),
        AutTag::UqEta(Scalar::q_pow(-2), Scalar::int(5), Scalar::one()),
        AutTag::CTauA(2),
        AutTag::ATauK(-1),
        AutTag::DqRho(RhoParams::unit(1, 0, 0, 1)),
    ];
    for _ in 0..6 {
        tags.push(AutTag::DqRho(autgrp::random_rho(&mut rng, 3)));
    }
    for t in &tags {
        let f = autgrp::make(t).unwrap();
        let inv = autgrp::invert(t).unwrap();
        let g = autgrp::make(&inv).unwrap();
        assert!(autgrp::compose(&f, &g).unwrap().same_images(&identity(t.home())), "{}", t.to_json());
        assert!(autgrp::compose(&g, &f).unwrap().same_images(&identity(t.home())), "{}", t.to_json());
        if let (AutTag::DqRho(p), AutTag::DqRho(q)) = (t, &inv) {
            let [[i, j], [m, n]] = p.matrix();
            assert_eq!(q.matrix(), [[n, -j], [-m, i]]);
        }
    }
    assert_eq!(autgrp::invert(&AutTag::UqSigma).unwrap(), AutTag::UqSigma);
    assert_eq!(autgrp::invert(&AutTag::AToCPhi).unwrap(), AutTag::CToAPhiInv);
}

#[test]
fn identity_is_neutral() {
    for t in [AutTag::OqXi(2), AutTag::UqSigma, AutTag::DqRho(RhoParams::unit(2, 1, 1, 1))] {
        let f = autgrp::make(&t).unwrap();
        let id = identity(t.home());
        assert!(autgrp::compose(&f, &id).unwrap().same_images(&f));
        assert!(autgrp::compose(&id, &f).unwrap().same_images(&f));
        assert_eq!(autgrp::classify(&f).unwrap(), t);
    }
}

#[test]
fn xi_is_additive() {
    for (i, j) in [(1, 2), (-3, 1), (0, 4)] {
        for (a, b, c) in [(AutTag::OqXi(i), AutTag::OqXi(j), AutTag::OqXi(i + j)), (AutTag::UqXi(i), AutTag::UqXi(j), AutTag::UqXi(i + j))] {
            let h = autgrp::compose(&autgrp::make(&a).unwrap(), &autgrp::make(&b).unwrap()).unwrap();
            assert_eq!(autgrp::classify(&h).unwrap(), c);
        }
    }
}

#[test]
fn families_are_automorphisms() {
    for t in [AutTag::OqTau, AutTag::UqSigma, AutTag::CTauA(1), AutTag::ATauK(1), AutTag::AToCPhi, AutTag::CToAPhiInv] {
        let (_, r) = autgrp::make_checked(&t).unwrap();
        assert!(r.passed(), "{}", t.to_json());
    }
    assert!(autgrp::make(&AutTag::DqRho(RhoParams::unit(1, 1, 1, 1))).is_err());
    let zero = AutTag::OqEta(Scalar::zero(), Scalar::one(), Scalar::one());
    assert!(autgrp::make(&zero).is_err());
}

#[test]
fn normal_elements_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let p = autgrp::random_rho(&mut rng, 4);
        let r = autgrp::action_on_normals(&p).unwrap();
        assert!(r.law_holds(), "{r:?}");
    }
}

#[test]
fn conjugation_twists() {
    for (g, r) in autgrp::phi_transport().unwrap() {
        assert!(r.is_none(), "{g}: {r:?}");
    }
    for t in [AutTag::CTauA(1), AutTag::ATauK(1)] {
        for (g, r) in autgrp::twist_by_conjugation(&t).unwrap() {
            assert!(r.is_none(), "{g}: {r:?}");
        }
    }
}
