//! Dyck paths and their statistics.
//!
//! Rows are numbered `1..=n` from bottom to top and columns `1..=n` from left
//! to right. A path is stored by its row offsets: `x_r`, the number of east
//! steps taken before the `r`-th north step. Everything else (word, area
//! sequence, column heights, bounce path) is derived from that.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{binomial, Composition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

/// A lattice path from `(0,0)` to `(n,n)` that never goes below `y = x`.
///
/// Ordering is lexicographic on the word with `N < E`, which coincides with
/// lexicographic order on the row offsets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    pub(crate) offsets: Vec<usize>,
}

impl DyckPath {
    pub fn from_word(word: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(word.len());
        for (position, ch) in word.chars().enumerate() {
            steps.push(match ch {
                'N' | 'n' => Step::North,
                'E' | 'e' => Step::East,
                found => {
                    return Err(Error::InvalidStep {
                        position: position + 1,
                        found,
                    })
                }
            });
        }
        Self::from_steps(&steps)
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        let mut offsets = Vec::with_capacity(steps.len() / 2);
        let mut east = 0usize;
        for (position, step) in steps.iter().enumerate() {
            match step {
                Step::North => offsets.push(east),
                Step::East => {
                    east += 1;
                    if east > offsets.len() {
                        return Err(Error::BelowDiagonal {
                            position: position + 1,
                        });
                    }
                }
            }
        }
        if east != offsets.len() {
            return Err(Error::Unbalanced {
                north: offsets.len(),
                east,
            });
        }
        Ok(DyckPath { offsets })
    }

    /// `p_{n,α} = N^{α_1} E^{α_1} ... N^{α_ℓ} E^{α_ℓ}`.
    pub fn from_composition(n: usize, alpha: &Composition) -> Result<Self> {
        if alpha.size() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: alpha.size(),
            });
        }
        Ok(Self::minimal(alpha.parts()))
    }

    /// `p_{n,α}` for the parts of `α`, without a size check.
    pub fn minimal(parts: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(parts.iter().sum());
        let mut start = 0;
        for &p in parts {
            offsets.extend(std::iter::repeat_n(start, p));
            start += p;
        }
        DyckPath { offsets }
    }

    /// Builds a path from row offsets, returning `None` unless they describe a
    /// Dyck path (`x_1 = 0`, weakly increasing, `x_r <= r - 1`).
    pub fn from_row_offsets(offsets: Vec<usize>) -> Option<Self> {
        let ok = offsets.iter().enumerate().all(|(r, &x)| x <= r)
            && offsets.windows(2).all(|w| w[0] <= w[1]);
        ok.then_some(DyckPath { offsets })
    }

    /// Builds a path from column heights, returning `None` unless they are
    /// weakly increasing with `i <= h_i <= n`.
    pub fn from_column_heights(heights: &[usize]) -> Option<Self> {
        let n = heights.len();
        let ok = heights.iter().enumerate().all(|(i, &h)| h > i && h <= n)
            && heights.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return None;
        }
        // x_r = number of columns whose top lies below row r
        let offsets = (1..=n).map(|r| heights.iter().take_while(|&&h| h < r).count()).collect();
        Some(DyckPath { offsets })
    }

    /// The path `N^n E^n`.
    pub fn full(n: usize) -> Self {
        DyckPath { offsets: vec![0; n] }
    }

    /// The staircase `(NE)^n`.
    pub fn staircase(n: usize) -> Self {
        DyckPath {
            offsets: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn steps(&self) -> Vec<Step> {
        let n = self.n();
        let mut steps = Vec::with_capacity(2 * n);
        let mut east = 0;
        for &x in &self.offsets {
            while east < x {
                steps.push(Step::East);
                east += 1;
            }
            steps.push(Step::North);
        }
        steps.extend(std::iter::repeat_n(Step::East, n - east));
        steps
    }

    pub fn word(&self) -> String {
        self.steps().into_iter().map(Step::as_char).collect()
    }

    /// `a_r = (r - 1) - x_r`.
    pub fn area_sequence(&self) -> Vec<usize> {
        self.offsets.iter().enumerate().map(|(r, &x)| r - x).collect()
    }

    pub fn area(&self) -> usize {
        self.area_sequence().iter().sum()
    }

    /// `h_c`: number of north steps before the `c`-th east step.
    pub fn column_heights(&self) -> Vec<usize> {
        (0..self.n())
            .map(|c| self.offsets.iter().take_while(|&&x| x <= c).count())
            .collect()
    }

    pub fn bounce_path(&self) -> BouncePath {
        let heights = self.column_heights();
        let n = self.n();
        let mut points = vec![0];
        let mut b = 0;
        while b < n {
            b = heights[b];
            points.push(b);
        }
        BouncePath::from_points(points)
    }

    pub fn bounce(&self) -> usize {
        self.bounce_path().bounce()
    }

    pub fn ab(&self) -> usize {
        self.area() + self.bounce()
    }

    /// Cells strictly between the path and its bounce path, as `(row, column)`.
    pub fn floating_cells(&self) -> Vec<(usize, usize)> {
        let bp = self.bounce_path();
        let mut cells = Vec::new();
        for (r, start) in bp.row_starts().into_iter().enumerate() {
            for col in self.offsets[r] + 1..=start {
                cells.push((r + 1, col));
            }
        }
        cells
    }

    pub fn floating_count(&self) -> usize {
        let bp = self.bounce_path();
        bp.row_starts()
            .into_iter()
            .zip(&self.offsets)
            .map(|(s, &x)| s - x)
            .sum()
    }

    /// Membership in `𝒞(n)`: the path equals its own bounce path.
    pub fn is_minimal(&self) -> bool {
        self.floating_count() == 0
    }

    pub fn record(&self) -> PathRecord {
        let bp = self.bounce_path();
        PathRecord {
            n: self.n(),
            word: self.word(),
            area: self.area(),
            bounce: bp.bounce(),
            alpha: bp.alpha.parts().to_vec(),
            bounce_points: bp.points.clone(),
            area_seq: self.area_sequence(),
            floating: self.floating_count(),
        }
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({})", self.word())
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::from_word(s)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.word())
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let word = String::deserialize(d)?;
        DyckPath::from_word(&word).map_err(serde::de::Error::custom)
    }
}

/// The bounce path `p_{n,α}` of a Dyck path together with its diagonal
/// touch points `b_0 = 0 < b_1 < ... < b_m = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BouncePath {
    pub alpha: Composition,
    pub points: Vec<usize>,
}

impl BouncePath {
    pub fn from_composition(alpha: Composition) -> Self {
        let points = alpha.partial_sums();
        BouncePath { alpha, points }
    }

    fn from_points(points: Vec<usize>) -> Self {
        let parts = points.windows(2).map(|w| w[1] - w[0]).collect();
        BouncePath {
            alpha: Composition::new(parts).expect("bounce points strictly increase"),
            points,
        }
    }

    pub fn n(&self) -> usize {
        *self.points.last().unwrap_or(&0)
    }

    /// Number of bounce segments `m = ℓ(α)`.
    pub fn len(&self) -> usize {
        self.points.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ_{i=1}^{m} (n - b_i)`.
    pub fn bounce(&self) -> usize {
        let n = self.n();
        self.points[1..].iter().map(|&b| n - b).sum()
    }

    /// For each row, the column where the bounce path's row begins
    /// (`b_{i-1}` for rows in segment `i`).
    pub fn row_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.n());
        for w in self.points.windows(2) {
            starts.extend(std::iter::repeat_n(w[0], w[1] - w[0]));
        }
        starts
    }

    pub fn to_path(&self) -> DyckPath {
        DyckPath::minimal(self.alpha.parts())
    }
}

/// The JSON record shared by the command line and the verification reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub n: usize,
    pub word: String,
    pub area: usize,
    pub bounce: usize,
    pub alpha: Vec<usize>,
    pub bounce_points: Vec<usize>,
    pub area_seq: Vec<usize>,
    pub floating: usize,
}

/// Iterator over `𝒟(n)` in lexicographic word order (`N < E`), starting at
/// `N^n E^n` and ending at `(NE)^n`.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    current: Option<Vec<usize>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.current.as_mut()?;
        let out = DyckPath {
            offsets: cur.clone(),
        };
        // odometer: bump the last offset that can still grow, then reset the
        // tail to the smallest admissible values
        match (1..cur.len()).rev().find(|&r| cur[r] < r) {
            Some(r) => {
                cur[r] += 1;
                let v = cur[r];
                for x in &mut cur[r + 1..] {
                    *x = v;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

pub fn enumerate_paths(n: usize) -> DyckPaths {
    DyckPaths {
        current: Some(vec![0; n]),
    }
}

/// Number of paths with bounce path `p_{n,α}`: `Π_{j≥2} C(α_{j-1}+α_j-1, α_j)`.
pub fn count_paths_with_bounce_path(n: usize, alpha: &Composition) -> Result<u128> {
    if alpha.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: alpha.size(),
        });
    }
    Ok(alpha
        .parts()
        .windows(2)
        .map(|w| binomial(w[0] + w[1] - 1, w[1]))
        .product())
}

/// All paths whose bounce path is `p_{n,α}`, in enumeration order.
///
/// Rows of segment `i >= 2` start somewhere in `b_{i-2}+1 ..= b_{i-1}`; rows of
/// the first segment start at column 0.
pub fn paths_with_bounce_path(alpha: &Composition) -> Vec<DyckPath> {
    let points = alpha.partial_sums();
    let n = alpha.size();
    let mut ranges = Vec::with_capacity(n);
    for i in 1..points.len() {
        let (lo, hi) = if i == 1 {
            (0, 0)
        } else {
            (points[i - 2] + 1, points[i - 1])
        };
        ranges.extend(std::iter::repeat_n((lo, hi), points[i] - points[i - 1]));
    }

    fn rec(r: usize, ranges: &[(usize, usize)], cur: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        if r == ranges.len() {
            out.push(DyckPath {
                offsets: cur.clone(),
            });
            return;
        }
        let (lo, hi) = ranges[r];
        let lo = lo.max(cur.last().copied().unwrap_or(0));
        for x in lo..=hi {
            cur.push(x);
            rec(r + 1, ranges, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, &ranges, &mut Vec::with_capacity(n), &mut out);
    out
}

/// The class `[π]`: paths with the same area and the same bounce points.
pub fn equivalence_class(path: &DyckPath) -> Vec<DyckPath> {
    let area = path.area();
    paths_with_bounce_path(&path.bounce_path().alpha)
        .into_iter()
        .filter(|p| p.area() == area)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::compositions;
    use proptest::prelude::*;

    const FIG1: &str = "NNNEENENEENNEE";

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(DyckPath::from_word(FIG1).unwrap().n(), 7);
        assert_eq!(DyckPath::from_word("NE").unwrap().n(), 1);
        assert_eq!(
            DyckPath::from_word("ENNE"),
            Err(Error::BelowDiagonal { position: 1 })
        );
        assert_eq!(
            DyckPath::from_word("NNE"),
            Err(Error::Unbalanced { north: 2, east: 1 })
        );
        assert_eq!(
            DyckPath::from_word("NXE"),
            Err(Error::InvalidStep {
                position: 2,
                found: 'X'
            })
        );
    }

    #[test]
    fn example_path_statistics() {
        let p = DyckPath::from_word(FIG1).unwrap();
        assert_eq!(p.area_sequence(), vec![0, 1, 2, 1, 1, 0, 1]);
        assert_eq!(p.area(), 6);
        let bp = p.bounce_path();
        assert_eq!(bp.alpha, comp(&[3, 2, 2]));
        assert_eq!(bp.points, vec![0, 3, 5, 7]);
        assert_eq!(p.bounce(), 6);
        assert_eq!(p.floating_count(), 1);
        assert_eq!(p.floating_cells().len(), 1);
    }

    #[test]
    fn composition_paths() {
        let w = |n, a: &[usize]| DyckPath::from_composition(n, &comp(a)).unwrap().word();
        assert_eq!(w(7, &[3, 2, 2]), "NNNEEENNEENNEE");
        assert_eq!(w(2, &[1, 1]), "NENE");
        assert_eq!(w(5, &[3, 1, 1]), "NNNEEENENE");
        assert_eq!(
            DyckPath::from_composition(4, &comp(&[3, 2])),
            Err(Error::SizeMismatch {
                expected: 4,
                actual: 5
            })
        );
    }

    #[test]
    fn area_bounce_of_minimal_paths() {
        let p = DyckPath::from_composition(7, &comp(&[3, 2, 2])).unwrap();
        assert_eq!(p.area(), 5);
        assert_eq!(p.bounce(), 6);
        let q = DyckPath::from_composition(5, &comp(&[3, 1, 1])).unwrap();
        assert_eq!(q.area_sequence(), vec![0, 1, 2, 0, 0]);
        assert_eq!(q.column_heights(), vec![3, 3, 3, 4, 5]);
        assert_eq!(DyckPath::staircase(6).area(), 0);
        assert_eq!(DyckPath::full(5).bounce(), 0);
        assert_eq!(DyckPath::full(4).column_heights(), vec![4; 4]);
        assert_eq!(DyckPath::staircase(4).column_heights(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn bounce_path_examples() {
        let p = DyckPath::from_word("NNEE").unwrap();
        assert_eq!(p.bounce_path().points, vec![0, 2]);
        for alpha in compositions(6) {
            let q = DyckPath::from_composition(6, &alpha).unwrap();
            assert_eq!(q.bounce_path().alpha, alpha);
            assert_eq!(q.floating_count(), 0);
        }
    }

    #[test]
    fn enumeration_order_and_counts() {
        let words: Vec<String> = enumerate_paths(2).map(|p| p.word()).collect();
        assert_eq!(words, vec!["NNEE", "NENE"]);
        assert_eq!(enumerate_paths(4).count(), 14);
        assert_eq!(enumerate_paths(7).count(), 429);
        assert_eq!(enumerate_paths(0).count(), 1);
        let all: Vec<String> = enumerate_paths(6).map(|p| p.word()).collect();
        let mut sorted = all.clone();
        sorted.sort_by_key(|w| w.replace('N', "0").replace('E', "1"));
        assert_eq!(all, sorted);
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(count_paths_with_bounce_path(7, &comp(&[3, 2, 2])).unwrap(), 18);
        assert_eq!(count_paths_with_bounce_path(4, &comp(&[2, 2])).unwrap(), 3);
        assert_eq!(count_paths_with_bounce_path(5, &comp(&[5])).unwrap(), 1);
        let brute = enumerate_paths(7)
            .filter(|p| p.bounce_path().alpha == comp(&[3, 2, 2]))
            .count();
        assert_eq!(brute, 18);
    }

    #[test]
    fn bounce_path_generator_matches_filter() {
        for n in 1..=7 {
            for alpha in compositions(n) {
                let generated = paths_with_bounce_path(&alpha);
                let filtered: Vec<_> = enumerate_paths(n)
                    .filter(|p| p.bounce_path().alpha == alpha)
                    .collect();
                assert_eq!(generated, filtered, "alpha = {alpha}");
            }
        }
    }

    #[test]
    fn equivalence_classes() {
        let p = DyckPath::from_word(FIG1).unwrap();
        let class = equivalence_class(&p);
        let brute: Vec<_> = enumerate_paths(7)
            .filter(|q| q.area() == 6 && q.bounce_path() == p.bounce_path())
            .collect();
        assert_eq!(class, brute);
        assert!(class.contains(&p));
        assert_eq!(equivalence_class(&DyckPath::full(5)), vec![DyckPath::full(5)]);
    }

    #[test]
    fn offsets_and_heights_agree() {
        for p in enumerate_paths(6) {
            let h = p.column_heights();
            assert_eq!(DyckPath::from_column_heights(&h).unwrap(), p);
            assert_eq!(DyckPath::from_row_offsets(p.row_offsets().to_vec()).unwrap(), p);
        }
        assert!(DyckPath::from_column_heights(&[1, 1]).is_none());
        assert!(DyckPath::from_row_offsets(vec![0, 2]).is_none());
    }

    fn any_path() -> impl Strategy<Value = DyckPath> {
        (1usize..=9).prop_flat_map(|n| {
            proptest::collection::vec(0usize..n, n).prop_map(|raw| {
                // clamp a random vector into a valid offset sequence
                let mut offsets = Vec::with_capacity(raw.len());
                let mut prev = 0;
                for (r, v) in raw.into_iter().enumerate() {
                    let x = v.clamp(prev, r);
                    offsets.push(x);
                    prev = x;
                }
                DyckPath::from_row_offsets(offsets).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn word_round_trip(p in any_path()) {
            prop_assert_eq!(DyckPath::from_word(&p.word()).unwrap(), p);
        }

        #[test]
        fn bounce_of_bounce_path(p in any_path()) {
            let bp = p.bounce_path();
            prop_assert_eq!(bp.to_path().bounce(), p.bounce());
            prop_assert_eq!(p.area(), bp.to_path().area() + p.floating_count());
        }
    }
}
