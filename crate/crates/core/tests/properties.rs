use proptest::prelude::*;

use dyckflip::bijection::{classify, phi, phi_inverse, Classification};
use dyckflip::extremal::{is_area_minimal_shape, MinimalSets};
use dyckflip::ops::{down, shift, unshift, up, PathContext};
use dyckflip::render::{render, RenderSpec};
use dyckflip::DyckPath;

fn any_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    proptest::collection::vec(any::<u16>(), 1..=max_n).prop_map(|draws| {
        let mut offsets = Vec::with_capacity(draws.len());
        let mut prev = 0usize;
        for (r, d) in draws.into_iter().enumerate() {
            let x = prev + d as usize % (r + 1 - prev);
            offsets.push(x);
            prev = x;
        }
        DyckPath::from_row_offsets(offsets).expect("offsets stay below the diagonal")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn shift_round_trips(p in any_path(16)) {
        let m = PathContext::new(&p).segments();
        for i in 1..=m {
            if let Some(q) = shift(&p, i).unwrap().into_path() {
                prop_assert_eq!((q.area(), q.bounce()), (p.area(), p.bounce() + 1));
                prop_assert_eq!(unshift(&q, i).unwrap().into_path(), Some(p.clone()));
            }
        }
    }

    #[test]
    fn up_down_round_trips(p in any_path(16)) {
        let m = PathContext::new(&p).segments();
        for i in 1..=m {
            if let Some(q) = up(&p, i).unwrap().into_path() {
                prop_assert_eq!((q.area() + 1, q.bounce()), (p.area(), p.bounce() + 1));
                prop_assert_eq!(down(&q, i).unwrap().into_path(), Some(p.clone()));
            }
            if let Some(q) = down(&p, i).unwrap().into_path() {
                prop_assert_eq!((q.area(), q.bounce() + 1), (p.area() + 1, p.bounce()));
                prop_assert_eq!(up(&q, i).unwrap().into_path(), Some(p.clone()));
            }
        }
    }

    #[test]
    fn phi_swaps_statistics(p in any_path(14)) {
        match classify(&p) {
            Classification::InAf(c) => {
                let q = phi(&p).unwrap();
                prop_assert_eq!((q.area(), q.bounce()), (p.bounce(), p.area()));
                prop_assert_eq!(Some(q), c.bounce_path());
                prop_assert_eq!(phi_inverse(&phi(&p).unwrap()).unwrap(), p);
            }
            Classification::InBf(_) => {
                let q = phi_inverse(&p).unwrap();
                prop_assert_eq!((q.area(), q.bounce()), (p.bounce(), p.area()));
                prop_assert_eq!(phi(&q).unwrap(), p);
            }
            Classification::Neither => {
                prop_assert!(phi(&p).is_err());
                prop_assert!(phi_inverse(&p).is_err());
            }
        }
    }

    #[test]
    fn render_grid_shape(p in any_path(16), bounce: bool, floating: bool) {
        let spec = RenderSpec { show_bounce: bounce, show_floating: floating, footer: false, ..RenderSpec::default() };
        let text = render(&p, &spec);
        let lines: Vec<&str> = text.lines().collect();
        prop_assert_eq!(lines.len(), p.n());
        prop_assert!(lines.iter().all(|l| l.chars().count() == p.n()));
        if !bounce {
            let marked = text.matches(['#', 'o']).count();
            prop_assert_eq!(marked, p.area());
            if floating {
                prop_assert_eq!(text.matches('o').count(), p.floating_count());
            }
        }
    }
}

#[test]
fn minimal_sets_have_their_shapes_beyond_brute_force_range() {
    for n in 10..=13 {
        let sets = MinimalSets::new(n);
        for p in &sets.area {
            assert!(p.is_minimal() && is_area_minimal_shape(&p.bounce_path().alpha));
        }
        for p in &sets.bounce {
            assert!(p.bounce_path().alpha.is_strict_partition());
        }
        let abs = sets.ab_values();
        assert_eq!(abs.len(), dyckflip::qbell::distinct_ab_count(n));
        let mut image: Vec<DyckPath> = sets.bounce.iter().map(|p| phi(p).unwrap()).collect();
        image.sort();
        assert_eq!(image, sets.area, "n = {n}");
    }
}
