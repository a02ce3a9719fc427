use std::collections::BTreeSet;

use dyckflip::extremal::{
    ab_ladder, bounce_interval_gaps, construct_path, is_area_minimal, is_bounce_minimal,
    level_counts, level_sets, nonemptiness_symmetry, phi_on_minimal, top_levels, MinimalSets,
};
use dyckflip::partition::binomial;
use dyckflip::path::enumerate_paths;
use dyckflip::qbell::{g_argmax, g_value};
use dyckflip::DyckPath;

#[test]
fn characterizations_match_brute_force() {
    for n in 0..=9 {
        assert_eq!(MinimalSets::new(n), MinimalSets::brute_force(n), "n = {n}");
    }
}

#[test]
fn membership_predicates_agree_with_sets() {
    for n in 1..=7 {
        let sets = MinimalSets::brute_force(n);
        let bm: BTreeSet<_> = sets.bounce.iter().collect();
        let am: BTreeSet<_> = sets.area.iter().collect();
        for p in enumerate_paths(n) {
            assert_eq!(is_bounce_minimal(&p), bm.contains(&p), "{p}");
            assert_eq!(is_area_minimal(&p), am.contains(&p), "{p}");
        }
    }
}

#[test]
fn bounce_minimal_members_have_strict_compositions() {
    for p in MinimalSets::new(8).bounce {
        assert!(p.bounce_path().alpha.is_strict_partition(), "{p}");
    }
    for p in MinimalSets::new(8).area {
        assert!(p.is_minimal(), "{p}");
    }
}

#[test]
fn phi_pairs_minimal_sets() {
    for n in 1..=9 {
        let pairs = phi_on_minimal(n).unwrap();
        let mut image: Vec<DyckPath> = pairs.iter().map(|(_, q)| q.clone()).collect();
        for (p, q) in &pairs {
            assert_eq!((p.area(), p.bounce()), (q.bounce(), q.area()));
        }
        image.sort();
        assert_eq!(image, MinimalSets::brute_force(n).area, "n = {n}");
    }
    let seven = phi_on_minimal(7).unwrap();
    assert_eq!(seven.len(), 12);
    let abs: BTreeSet<usize> = seven.iter().map(|(p, _)| p.ab()).collect();
    assert_eq!(abs.len(), 11);
}

#[test]
fn minimal_staircase_levels_swap_conjugates() {
    for n in 1..=8 {
        for (p, q) in phi_on_minimal(n).unwrap() {
            if p.is_minimal() {
                let lambda = dyckflip::Partition::new(p.bounce_path().alpha.parts().to_vec()).unwrap();
                assert_eq!(q, DyckPath::minimal(lambda.conjugate().parts()));
            }
        }
    }
}

#[test]
fn construction_hits_every_nonempty_level() {
    for n in 0..=8 {
        let realized: BTreeSet<(usize, usize)> = level_sets(n).into_keys().collect();
        let s = binomial(n, 2) as usize;
        for a in 0..=s {
            for b in 0..=s - a {
                let got = construct_path(n, a, b);
                assert_eq!(got.is_some(), realized.contains(&(a, b)), "n={n} a={a} b={b}");
                if let Some(p) = got {
                    assert_eq!((p.area(), p.bounce()), (a, b));
                }
            }
        }
    }
    let p = construct_path(6, 5, 5).unwrap();
    assert_eq!((p.area(), p.bounce()), (5, 5));
    for n in 1..=8 {
        let s = binomial(n, 2) as usize;
        assert_eq!(construct_path(n, s, 0), Some(DyckPath::full(n)));
    }
}

#[test]
fn symmetry_and_interpolation() {
    for n in 0..=10 {
        let r = nonemptiness_symmetry(n);
        assert!(r.holds(), "{r:?}");
    }
    for n in 0..=9 {
        assert!(bounce_interval_gaps(n).is_empty(), "n = {n}");
    }
}

#[test]
fn level_counts_cover_all_paths() {
    for n in 0..=8 {
        let total: usize = level_counts(n).iter().map(|l| l.count).sum();
        assert_eq!(total, enumerate_paths(n).count());
        for (&(a, b), level) in &level_sets(n) {
            assert!(level.paths.iter().all(|p| (p.area(), p.bounce()) == (a, b)));
        }
    }
}

#[test]
fn top_two_levels() {
    for n in 3..=9 {
        let t = top_levels(n);
        assert!(t.holds(), "{t:?}");
        let s = binomial(n, 2) as usize;
        assert_eq!(t.top_count(), s + 1);
        assert_eq!(t.second_count(), s - 2);
    }
    let four = top_levels(4);
    assert_eq!((four.top_count(), four.second_count()), (7, 4));
}

#[test]
fn ladder_starts_at_argmax_path() {
    for n in 3..=10 {
        let s = binomial(n, 2) as usize;
        let lo = s - g_value(n);
        let start = ab_ladder(n, lo).unwrap();
        assert_eq!(start, DyckPath::minimal(g_argmax(n).parts()), "n = {n}");
        assert_eq!(ab_ladder(n, s).unwrap(), DyckPath::full(n));
        for x in lo..=s {
            assert_eq!(ab_ladder(n, x).unwrap().ab(), x);
        }
    }
}
