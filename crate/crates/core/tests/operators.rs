use std::collections::BTreeMap;

use dyckflip::ops::{down, existence_scan_down, existence_scan_up, shift, unshift, up, PathContext};
use dyckflip::path::enumerate_paths;
use dyckflip::DyckPath;

fn stats(p: &DyckPath) -> (usize, usize) {
    (p.area(), p.bounce())
}

#[test]
fn shift_and_unshift_are_inverse() {
    for n in 1..=8 {
        for p in enumerate_paths(n) {
            let (a, b) = stats(&p);
            let m = p.bounce_path().len();
            for i in 1..=m {
                if let Some(q) = shift(&p, i).unwrap().into_path() {
                    assert_eq!(stats(&q), (a, b + 1), "S{i} on {p}");
                    let mut pts = p.bounce_path().points;
                    pts[i] -= 1;
                    assert_eq!(q.bounce_path().points, pts, "S{i} on {p}");
                    assert_eq!(unshift(&q, i).unwrap().into_path(), Some(p.clone()));
                }
                if let Some(q) = unshift(&p, i).unwrap().into_path() {
                    assert_eq!(stats(&q), (a, b - 1), "S{i}^-1 on {p}");
                    assert_eq!(shift(&q, i).unwrap().into_path(), Some(p.clone()));
                }
            }
        }
    }
}

#[test]
fn up_and_down_are_inverse() {
    let mut counts = (0, 0);
    for n in 1..=8 {
        for p in enumerate_paths(n) {
            let (a, b) = stats(&p);
            let m = p.bounce_path().len();
            for i in 1..=m {
                if let Some(q) = up(&p, i).unwrap().into_path() {
                    counts.0 += 1;
                    assert_eq!(stats(&q), (a - 1, b + 1), "U{i} on {p}");
                    assert_eq!(down(&q, i).unwrap().into_path(), Some(p.clone()), "U{i} on {p}");
                }
                if let Some(q) = down(&p, i).unwrap().into_path() {
                    counts.1 += 1;
                    assert_eq!(stats(&q), (a + 1, b - 1), "D{i} on {p}");
                    assert_eq!(up(&q, i).unwrap().into_path(), Some(p.clone()), "D{i} on {p}");
                }
            }
        }
    }
    assert_eq!(counts.0, counts.1);
    assert!(counts.0 > 0);
}

#[test]
fn existence_scans_find_defined_operators() {
    let mut hits = (0, 0);
    for n in 2..=8 {
        for p in enumerate_paths(n) {
            let m = p.bounce_path().len();
            for i in 1..=m {
                if let Some(j) = existence_scan_down(&p, i).unwrap() {
                    hits.0 += 1;
                    assert!((i..m).contains(&j));
                    assert!(!down(&p, j).unwrap().is_bottom(), "D{j} from {i} on {p}");
                }
                if let Some(j) = existence_scan_up(&p, i).unwrap() {
                    hits.1 += 1;
                    assert!((1..=i).contains(&j));
                    assert!(!up(&p, j).unwrap().is_bottom(), "U{j} from {i} on {p}");
                }
            }
        }
    }
    assert!(hits.0 > 0 && hits.1 > 0);
}

#[test]
fn classes_without_moves_have_restricted_shapes() {
    for n in 1..=8 {
        let mut classes: BTreeMap<(Vec<usize>, usize), Vec<DyckPath>> = BTreeMap::new();
        for p in enumerate_paths(n) {
            classes
                .entry((p.bounce_path().points, p.area()))
                .or_default()
                .push(p);
        }
        for members in classes.values() {
            let any = |f: fn(&DyckPath, usize) -> dyckflip::Result<dyckflip::PathResult>| {
                members.iter().any(|p| {
                    (1..=PathContext::new(p).segments()).any(|i| !f(p, i).unwrap().is_bottom())
                })
            };
            let p = &members[0];
            let alpha = p.bounce_path().alpha;
            let parts = alpha.parts();
            if !any(down) {
                assert!(alpha.is_strict_partition(), "no down on {p}");
                assert!(p.area() >= p.bounce(), "no down on {p}");
            }
            if !any(up) {
                assert!(members.iter().all(DyckPath::is_minimal), "no up on {p}");
                assert_eq!(parts.last(), Some(&1), "no up on {p}");
                assert!(parts.windows(2).all(|w| w[0] <= w[1] + 1), "no up on {p}");
                assert!(p.area() <= p.bounce(), "no up on {p}");
            }
        }
    }
}
