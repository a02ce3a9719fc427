//! Area- and bounce-minimal paths, the `(area, bounce)` level sets `P_n(a,b)`
//! and walks between levels.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bijection::phi;
use crate::error::{Error, Result};
use crate::ops::{add_column_cell, area_cells, down, up, PathContext};
use crate::partition::{binomial, compositions, partitions, Composition};
use crate::path::{enumerate_paths, equivalence_class, paths_with_bounce_path, DyckPath};
use crate::qbell::g_argmax;

/// The paths of `P_n(a,b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbLevel {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub paths: Vec<DyckPath>,
}

impl AbLevel {
    pub fn s(&self) -> usize {
        self.a + self.b
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// One row of the level report: `(a, b, |P_n(a,b)|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LevelCount {
    pub a: usize,
    pub b: usize,
    pub count: usize,
}

/// Partition of `𝒟(n)` by `(area, bounce)`; only nonempty levels appear.
pub fn level_sets(n: usize) -> BTreeMap<(usize, usize), AbLevel> {
    let mut out: BTreeMap<(usize, usize), AbLevel> = BTreeMap::new();
    for p in enumerate_paths(n) {
        let (a, b) = (p.area(), p.bounce());
        out.entry((a, b))
            .or_insert_with(|| AbLevel {
                n,
                a,
                b,
                paths: Vec::new(),
            })
            .paths
            .push(p);
    }
    out
}

pub fn level_counts(n: usize) -> Vec<LevelCount> {
    level_sets(n)
        .into_values()
        .map(|l| LevelCount {
            a: l.a,
            b: l.b,
            count: l.len(),
        })
        .collect()
}

/// `ℬ(n)` and `𝒜(n)`, each sorted in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalSets {
    pub n: usize,
    pub bounce: Vec<DyckPath>,
    pub area: Vec<DyckPath>,
}

impl MinimalSets {
    /// Computed from the shape characterizations.
    pub fn new(n: usize) -> Self {
        MinimalSets {
            n,
            bounce: bounce_minimal(n),
            area: area_minimal(n),
        }
    }

    /// Computed by minimizing over every path of each ab level.
    pub fn brute_force(n: usize) -> Self {
        let mut best: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let paths: Vec<DyckPath> = enumerate_paths(n).collect();
        for p in &paths {
            let (a, b) = (p.area(), p.bounce());
            let e = best.entry(a + b).or_insert((a, b));
            e.0 = e.0.min(a);
            e.1 = e.1.min(b);
        }
        let bounce = paths
            .iter()
            .filter(|p| best[&p.ab()].1 == p.bounce())
            .cloned()
            .collect();
        let area = paths
            .into_iter()
            .filter(|p| best[&p.ab()].0 == p.area())
            .collect();
        MinimalSets { n, bounce, area }
    }

    /// Distinct ab values covered by `ℬ(n)`.
    pub fn ab_values(&self) -> BTreeSet<usize> {
        self.bounce.iter().map(DyckPath::ab).collect()
    }

    fn first_at(list: &[DyckPath], s: usize) -> Option<&DyckPath> {
        list.iter().find(|p| p.ab() == s)
    }
}

fn keep_minimizers(candidates: Vec<DyckPath>, key: fn(&DyckPath) -> usize) -> Vec<DyckPath> {
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &candidates {
        let e = best.entry(p.ab()).or_insert(usize::MAX);
        *e = (*e).min(key(p));
    }
    let mut out: Vec<DyckPath> = candidates
        .into_iter()
        .filter(|p| best[&p.ab()] == key(p))
        .collect();
    out.sort();
    out
}

fn bounce_candidates(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let alpha = lambda.as_composition();
        if !alpha.is_strict_partition() {
            continue;
        }
        let parts = alpha.parts();
        let base = DyckPath::minimal(parts).area();
        let slack = parts.windows(2).map(|w| w[0] - w[1] - 1).min().unwrap_or(0);
        out.extend(
            paths_with_bounce_path(&alpha)
                .into_iter()
                .filter(|p| p.area() <= base + slack),
        );
    }
    out
}

/// Whether `α` passes the three area-minimal shape conditions on compositions.
pub fn is_area_minimal_shape(alpha: &Composition) -> bool {
    let p = alpha.parts();
    if p.last() != Some(&1) || p.windows(2).any(|w| w[0].abs_diff(w[1]) > 1) {
        return false;
    }
    // no i < j < k with α_i < α_j < α_k
    let mut low = usize::MAX;
    let mut high_after = vec![0; p.len() + 1];
    for j in (0..p.len()).rev() {
        high_after[j] = high_after[j + 1].max(p[j]);
    }
    for j in 0..p.len() {
        if low < p[j] && high_after[j + 1] > p[j] {
            return false;
        }
        low = low.min(p[j]);
    }
    true
}

fn area_candidates(n: usize) -> Vec<DyckPath> {
    if n == 0 {
        return vec![DyckPath::full(0)];
    }
    compositions(n)
        .into_iter()
        .filter(is_area_minimal_shape)
        .map(|alpha| DyckPath::minimal(alpha.parts()))
        .collect()
}

/// `ℬ(n)`: paths of least bounce within their ab level.
///
/// Candidates are restricted to strict-partition bounce paths with area at
/// most `a(p_{n,α}) + min(α_i − α_{i+1} − 1)`; every bounce-minimal path has
/// this shape, so minimizing over the candidates is exact.
pub fn bounce_minimal(n: usize) -> Vec<DyckPath> {
    keep_minimizers(bounce_candidates(n), DyckPath::bounce)
}

/// `𝒜(n)`: paths of least area within their ab level.
///
/// Candidates are the floating-free paths `p_{n,α}` whose composition ends in
/// 1, moves by at most 1 between parts, and has no increasing triple.
pub fn area_minimal(n: usize) -> Vec<DyckPath> {
    keep_minimizers(area_candidates(n), DyckPath::area)
}

pub fn is_bounce_minimal(path: &DyckPath) -> bool {
    let s = path.ab();
    bounce_candidates(path.n())
        .iter()
        .filter(|p| p.ab() == s)
        .all(|p| p.bounce() >= path.bounce())
}

pub fn is_area_minimal(path: &DyckPath) -> bool {
    let s = path.ab();
    area_candidates(path.n())
        .iter()
        .filter(|p| p.ab() == s)
        .all(|p| p.area() >= path.area())
}

/// Pairs `(π, Φ(π))` for every `π ∈ ℬ(n)`.
pub fn phi_on_minimal(n: usize) -> Result<Vec<(DyckPath, DyckPath)>> {
    bounce_minimal(n)
        .into_iter()
        .map(|p| phi(&p).map(|q| (p, q)))
        .collect()
}

/// Applies the first defined `op_j` to the first member of `[π]` that admits one.
fn class_step(path: &DyckPath, op: fn(&DyckPath, usize) -> Result<crate::PathResult>) -> Option<DyckPath> {
    equivalence_class(path).into_iter().find_map(|member| {
        let m = PathContext::new(&member).segments();
        (1..=m).find_map(|j| op(&member, j).ok()?.into_path())
    })
}

/// A member of `P_n(a,b)`, built by walking from a minimal path of the level
/// `a + b`.
///
/// For `a < b` the walk starts at the first area-minimal path and applies
/// `D` steps; otherwise it starts at the first bounce-minimal path and applies
/// `U` steps. Each step moves one unit between area and bounce.
pub fn construct_path(n: usize, a: usize, b: usize) -> Option<DyckPath> {
    construct_path_with(&MinimalSets::new(n), a, b)
}

pub fn construct_path_with(sets: &MinimalSets, a: usize, b: usize) -> Option<DyckPath> {
    let s = a + b;
    let (start, op): (_, fn(&DyckPath, usize) -> Result<crate::PathResult>) = if a < b {
        (MinimalSets::first_at(&sets.area, s)?, down)
    } else {
        (MinimalSets::first_at(&sets.bounce, s)?, up)
    };
    let mut cur = start.clone();
    loop {
        match cur.area().cmp(&a) {
            std::cmp::Ordering::Equal => return Some(cur),
            std::cmp::Ordering::Less if a >= b => return None,
            std::cmp::Ordering::Greater if a < b => return None,
            _ => cur = class_step(&cur, op)?,
        }
    }
}

/// Nonemptiness symmetry and interpolation checks for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub n: usize,
    pub levels: usize,
    /// Realized `(a, b)` whose transpose is not realized.
    pub asymmetric: Vec<(usize, usize)>,
    /// `(a, b)` of a bounce-minimal path and a step `i ≤ |a − b|` with
    /// `P_n(a−i, b+i)` empty.
    pub interpolation_gaps: Vec<(usize, usize, usize)>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.asymmetric.is_empty() && self.interpolation_gaps.is_empty()
    }
}

pub fn nonemptiness_symmetry(n: usize) -> SymmetryReport {
    let levels: BTreeSet<(usize, usize)> = level_sets(n).into_keys().collect();
    let asymmetric = levels
        .iter()
        .filter(|&&(a, b)| !levels.contains(&(b, a)))
        .copied()
        .collect();
    let mut interpolation_gaps = Vec::new();
    for p in bounce_minimal(n) {
        let (a, b) = (p.area(), p.bounce());
        for i in 0..=a.abs_diff(b) {
            let key = if a >= b { (a - i, b + i) } else { (a + i, b - i) };
            if !levels.contains(&key) {
                interpolation_gaps.push((a, b, i));
            }
        }
    }
    SymmetryReport {
        n,
        levels: levels.len(),
        asymmetric,
        interpolation_gaps,
    }
}

/// Empirical check, not a proven statement: for every ab value `s`, every bounce
/// between the least bounce `b_min(s)` and `s − b_min(s)` is realized.
/// Returns the missing `(a, b)` levels.
pub fn bounce_interval_gaps(n: usize) -> Vec<(usize, usize)> {
    let levels: BTreeSet<(usize, usize)> = level_sets(n).into_keys().collect();
    let mut bmin: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &levels {
        let e = bmin.entry(a + b).or_insert(b);
        *e = (*e).min(b);
    }
    let mut gaps = Vec::new();
    for (&s, &lo) in &bmin {
        for b in lo..=s.saturating_sub(lo) {
            if !levels.contains(&(s - b, b)) {
                gaps.push((s - b, b));
            }
        }
    }
    gaps
}

/// The two largest ab levels, `C(n,2)` and `C(n,2) − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopLevels {
    pub n: usize,
    pub top: Vec<LevelCount>,
    pub second: Vec<LevelCount>,
    pub min_ab: usize,
    pub max_ab: usize,
    /// Whether removing floating cells from the top level (or, without
    /// floating cells, `A_n^{-2} A_{b_{m-1}+1}`) yields exactly the second level.
    pub second_from_top: bool,
}

impl TopLevels {
    pub fn top_count(&self) -> usize {
        self.top.iter().map(|l| l.count).sum()
    }

    pub fn second_count(&self) -> usize {
        self.second.iter().map(|l| l.count).sum()
    }

    pub fn holds(&self) -> bool {
        let s = binomial(self.n, 2) as usize;
        let top_ok = self.top.len() == s + 1
            && self.top.iter().all(|l| l.count == 1)
            && self.top.iter().map(|l| l.b).eq(0..=s);
        let second_ok = self.second.iter().all(|l| l.count == 1);
        top_ok
            && second_ok
            && self.second_from_top
            && self.max_ab == s
            && self.min_ab == s - crate::qbell::g_value(self.n)
    }
}

fn second_from_top(n: usize, top: &[DyckPath], second: &[DyckPath]) -> bool {
    let s = binomial(n, 2) as usize;
    let mut derived = Vec::new();
    for tau in top {
        let j = tau.bounce();
        if j == 0 || j + 2 > s {
            continue;
        }
        let next = if tau.floating_count() > 0 {
            area_cells(tau, n, -1)
        } else {
            let points = tau.bounce_path().points;
            let below = points[points.len() - 2];
            area_cells(tau, n, -2).and_then(|r| r.apply(crate::Op::A { row: below + 1, power: 1 }))
        };
        match next.ok().and_then(|r| r.into_path()) {
            Some(p) if p.ab() + 1 == s => derived.push(p),
            _ => return false,
        }
    }
    derived.sort();
    derived == second
}

pub fn top_levels(n: usize) -> TopLevels {
    let s = binomial(n, 2) as usize;
    let levels = level_sets(n);
    let counts = |target: usize| -> Vec<LevelCount> {
        levels
            .values()
            .filter(|l| l.s() == target)
            .map(|l| LevelCount {
                a: l.a,
                b: l.b,
                count: l.len(),
            })
            .rev()
            .collect()
    };
    let collect = |target: usize| -> Vec<DyckPath> {
        let mut v: Vec<DyckPath> = levels
            .values()
            .filter(|l| l.s() == target)
            .flat_map(|l| l.paths.iter().cloned())
            .collect();
        v.sort();
        v
    };
    let top = counts(s);
    let second = if s > 0 { counts(s - 1) } else { Vec::new() };
    let second_ok = s < 2 || second_from_top(n, &collect(s), &collect(s - 1));
    let abs: Vec<usize> = levels.values().map(AbLevel::s).collect();
    TopLevels {
        n,
        top,
        second,
        min_ab: abs.iter().copied().min().unwrap_or(0),
        max_ab: abs.iter().copied().max().unwrap_or(0),
        second_from_top: second_ok,
    }
}

/// A path with `ab = x`, reached from the ab-minimizing path `p_{n,α}` by
/// adding one cell at a time to the rightmost column that accepts one.
///
/// Each addition raises `ab` by at most one. The first path of the walk with
/// `ab = x` is returned, except that for `x = C(n,2)` the walk runs to its
/// end `N^nE^n`.
pub fn ab_ladder(n: usize, x: usize) -> Result<DyckPath> {
    let s = binomial(n, 2) as usize;
    let lo = s - crate::qbell::g_value(n);
    if !(lo..=s).contains(&x) {
        return Err(Error::OutOfRange {
            value: x,
            min: lo,
            max: s,
        });
    }
    let mut cur = DyckPath::minimal(g_argmax(n).parts());
    while cur.ab() < x || (x == s && cur.area() < s) {
        cur = (1..=n)
            .rev()
            .find_map(|c| add_column_cell(&cur, c).ok()?.into_path())
            .expect("a path below N^nE^n accepts a column cell");
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_levels() {
        let l2 = level_sets(2);
        assert_eq!(l2.len(), 2);
        assert_eq!(l2[&(1, 0)].paths, vec![DyckPath::full(2)]);
        assert_eq!(l2[&(0, 1)].paths, vec![DyckPath::staircase(2)]);
        for n in 1..=6 {
            let s = binomial(n, 2) as usize;
            assert_eq!(level_sets(n)[&(s, 0)].paths, vec![DyckPath::full(n)]);
        }
    }

    #[test]
    fn seven_has_doubled_extreme_levels() {
        let l7 = level_sets(7);
        assert_eq!(l7[&(2, 13)].len(), 2);
        assert_eq!(l7[&(13, 2)].len(), 2);
        let sets = MinimalSets::new(7);
        assert_eq!(sets.bounce.len(), 12);
        assert_eq!(sets.ab_values().len(), 11);
    }

    #[test]
    fn area_shape_filter() {
        assert!(is_area_minimal_shape(&comp(&[1, 2, 1])));
        assert!(is_area_minimal_shape(&comp(&[1])));
        assert!(!is_area_minimal_shape(&comp(&[1, 2])));
        assert!(!is_area_minimal_shape(&comp(&[3, 1])));
        assert!(!is_area_minimal_shape(&comp(&[1, 2, 3, 2, 1])));
        assert!(is_area_minimal_shape(&comp(&[2, 3, 3, 2, 1])));
    }

    #[test]
    fn extremes_are_minimal() {
        for n in 1..=7 {
            assert!(is_bounce_minimal(&DyckPath::full(n)));
            assert!(is_area_minimal(&DyckPath::staircase(n)));
        }
    }

    #[test]
    fn construct_examples() {
        let p = construct_path(6, 5, 5).unwrap();
        assert_eq!((p.area(), p.bounce()), (5, 5));
        assert_eq!(construct_path(5, 10, 0), Some(DyckPath::full(5)));
        assert_eq!(construct_path(5, 0, 0), None);
        assert_eq!(construct_path(3, 1, 1).unwrap().word(), "NNEENE");
        assert_eq!(construct_path(3, 2, 2), None);
    }

    #[test]
    fn top_levels_of_four() {
        let t = top_levels(4);
        assert_eq!(t.top_count(), 7);
        assert_eq!(t.second_count(), 4);
        assert_eq!((t.min_ab, t.max_ab), (4, 6));
        assert!(t.holds(), "{t:?}");
    }

    #[test]
    fn ladder_hits_each_value() {
        for n in 1..=7 {
            let s = binomial(n, 2) as usize;
            let lo = s - crate::qbell::g_value(n);
            for x in lo..=s {
                assert_eq!(ab_ladder(n, x).unwrap().ab(), x);
            }
            assert!(ab_ladder(n, s + 1).is_err());
        }
    }
}
