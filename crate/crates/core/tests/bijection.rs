use std::collections::BTreeSet;

use dyckflip::bijection::{
    apply_area_ops, apply_bounce_ops, classify, enumerate_fn, enumerate_gamma, gamma,
    gamma_inverse, phi, phi_inverse, Classification,
};
use dyckflip::path::enumerate_paths;
use dyckflip::DyckPath;

#[test]
fn phi_round_trips_and_classifies() {
    for n in 1..=9 {
        let entries = enumerate_fn(n);
        let mut af = BTreeSet::new();
        let mut bf = BTreeSet::new();
        for c in &entries {
            let a = c.area_path().unwrap();
            let b = c.bounce_path().unwrap();
            assert_eq!((a.area(), a.bounce()), (b.bounce(), b.area()), "{c:?}");
            assert_eq!(phi(&a).unwrap(), b);
            assert_eq!(phi_inverse(&b).unwrap(), a);
            assert_eq!(classify(&a), Classification::InAf(c.clone()));
            if !b.bounce_path().alpha.is_partition() {
                assert_eq!(classify(&b), Classification::InBf(c.clone()));
            }
            af.insert(a);
            bf.insert(b);
        }
        assert_eq!(af.len(), entries.len());
        assert_eq!(bf.len(), entries.len());
        for p in enumerate_paths(n) {
            let member = af.contains(&p) || bf.contains(&p);
            assert_eq!(classify(&p) != Classification::Neither, member, "{p}");
        }
    }
}

#[test]
fn gamma_round_trips() {
    for n in 1..=9 {
        let mut seen = BTreeSet::new();
        for e in enumerate_gamma(n) {
            let s = e.sigma().unwrap();
            let t = e.tau().unwrap();
            assert_eq!((s.area(), s.bounce()), (t.bounce(), t.area()), "{e:?}");
            assert_eq!(gamma(&s).unwrap(), t, "{e:?}");
            assert_eq!(gamma_inverse(&t).unwrap(), s, "{e:?}");
            assert!(seen.insert(s.clone()));

            let mu = e.lambda.conjugate();
            let p = DyckPath::minimal(e.lambda.parts());
            let q = DyckPath::minimal(mu.parts());
            let bg = apply_bounce_ops(&p, &e.lambda, &e.g).unwrap().into_path().unwrap();
            let ag = apply_area_ops(&q, &mu, &e.g).unwrap().into_path().unwrap();
            assert_eq!(apply_area_ops(&bg, &e.lambda, &e.f).unwrap().into_path(), Some(s));
            assert_eq!(apply_bounce_ops(&ag, &mu, &e.f).unwrap().into_path(), Some(t));
            if e.g.is_zero() {
                assert_eq!(phi(&e.sigma().unwrap()).unwrap(), e.tau().unwrap());
            }
        }
    }
}
