//! Count maps, the operators `A^f` and `B_f`, and the area/bounce flipping
//! bijections Φ and Γ.
//!
//! For a partition `λ` with `ℓ` distinct parts, a count map `f` on
//! `I_bnc(λ')` determines the pair
//!
//! ```text
//! p_{n,λ} · A^f   and   p_{n,λ'} · B_f
//! ```
//!
//! whose areas and bounces are exchanged. Φ sends the first to the second.
//! Membership in the domain and codomain is decided by recovering `(λ, f)`
//! from the path, and every recovered certificate is checked by rebuilding
//! the path from it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ops::{area_cells, Op, PathResult};
use crate::partition::{partitions, Partition};
use crate::path::DyckPath;

/// A finitely supported map `(i, r) -> ℕ`. Zero values are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<[usize; 3]>", into = "Vec<[usize; 3]>")]
pub struct CountMap(BTreeMap<(usize, usize), usize>);

impl CountMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, r: usize) -> usize {
        self.0.get(&(i, r)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, r: usize, v: usize) {
        if v == 0 {
            self.0.remove(&(i, r));
        } else {
            self.0.insert((i, r), v);
        }
    }

    pub fn with(mut self, i: usize, r: usize, v: usize) -> Self {
        self.set(i, r, v);
        self
    }

    /// `|f|`, the sum of all values.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in `(i, r)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.0.iter().map(|(&(i, r), &v)| (i, r, v))
    }

    fn check_support(&self, allowed: &[(usize, usize)]) -> Result<()> {
        match self.0.keys().find(|key| !allowed.contains(key)) {
            Some(&(i, r)) => Err(Error::OutsideIndexSet(i, r)),
            None => Ok(()),
        }
    }
}

impl From<Vec<[usize; 3]>> for CountMap {
    fn from(entries: Vec<[usize; 3]>) -> Self {
        let mut f = CountMap::new();
        for [i, r, v] in entries {
            f.set(i, r, v);
        }
        f
    }
}

impl From<CountMap> for Vec<[usize; 3]> {
    fn from(f: CountMap) -> Self {
        f.entries().map(|(i, r, v)| [i, r, v]).collect()
    }
}

impl FromIterator<((usize, usize), usize)> for CountMap {
    fn from_iter<T: IntoIterator<Item = ((usize, usize), usize)>>(iter: T) -> Self {
        let mut f = CountMap::new();
        for ((i, r), v) in iter {
            f.set(i, r, v);
        }
        f
    }
}

/// A partition together with a count map: `(λ, f)`.
///
/// Serialized as `{"lambda": [..], "f": [[i, r, v], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Certificate {
    pub lambda: Partition,
    pub f: CountMap,
}

/// Membership of a path in `𝒜ℱ_n ∪ ℬℱ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Classification {
    InAf(Certificate),
    InBf(Certificate),
    Neither,
}

fn multiplicities(lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    let distinct = lambda.distinct_parts();
    let mult = distinct.iter().map(|&p| lambda.multiplicity(p)).collect();
    (distinct, mult)
}

/// `I_bnc(λ) = {(i, r) | 1 <= i <= ℓ-1, 1 <= r <= m_λ(λ̄_{ℓ-i})}`.
pub fn bnc_index_set(lambda: &Partition) -> Vec<(usize, usize)> {
    let (distinct, mult) = multiplicities(lambda);
    let l = distinct.len();
    (1..l)
        .flat_map(|i| (1..=mult[l - i - 1]).map(move |r| (i, r)))
        .collect()
}

/// `I_row(λ) = {(i, r) | 1 <= i <= ℓ-1, 1 <= r <= λ̄_{i+1}}`.
pub fn row_index_set(lambda: &Partition) -> Vec<(usize, usize)> {
    let distinct = lambda.distinct_parts();
    let l = distinct.len();
    (1..l)
        .flat_map(|i| (1..=distinct[i]).map(move |r| (i, r)))
        .collect()
}

/// `bnc_λ(i, r) = 1 - r + Σ_{j=1}^{ℓ-i} m_λ(λ̄_j)`, a bounce-point index of
/// `p_{n,λ}`.
pub fn bounce_map(lambda: &Partition, i: usize, r: usize) -> Result<usize> {
    if !bnc_index_set(lambda).contains(&(i, r)) {
        return Err(Error::OutsideIndexSet(i, r));
    }
    let (distinct, mult) = multiplicities(lambda);
    let l = distinct.len();
    Ok(1 + mult[..l - i].iter().sum::<usize>() - r)
}

/// `row_λ(i, r) = r + Σ_{j=1}^{i} m_λ(λ̄_j) λ̄_j`.
pub fn row_map(lambda: &Partition, i: usize, r: usize) -> Result<usize> {
    if !row_index_set(lambda).contains(&(i, r)) {
        return Err(Error::OutsideIndexSet(i, r));
    }
    let (distinct, mult) = multiplicities(lambda);
    Ok(r + (0..i).map(|j| distinct[j] * mult[j]).sum::<usize>())
}

fn minimal_path(lambda: &Partition) -> DyckPath {
    DyckPath::minimal(lambda.parts())
}

/// Applies `A_{row_λ(i,r)}^{f(i,r)}` to an arbitrary path, in `(i, r)` order.
pub fn apply_area_ops(path: &DyckPath, lambda: &Partition, f: &CountMap) -> Result<PathResult> {
    f.check_support(&row_index_set(lambda))?;
    let mut cur = PathResult::Path(path.clone());
    for (i, r, v) in f.entries() {
        let row = row_map(lambda, i, r)?;
        cur = match cur {
            PathResult::Path(p) => area_cells(&p, row, v as i32)?,
            PathResult::Bottom => return Ok(PathResult::Bottom),
        };
    }
    Ok(cur)
}

/// Applies `B_{bnc_λ(i,r), f(i,r)}` to an arbitrary path, in `(i, r)` order.
pub fn apply_bounce_ops(path: &DyckPath, lambda: &Partition, f: &CountMap) -> Result<PathResult> {
    f.check_support(&bnc_index_set(lambda))?;
    let mut cur = PathResult::Path(path.clone());
    for (i, r, k) in f.entries() {
        let index = bounce_map(lambda, i, r)?;
        cur = cur.apply(Op::B { index, k })?;
    }
    Ok(cur)
}

/// `p_{n,λ} · A^f`.
pub fn apply_area_map(lambda: &Partition, f: &CountMap) -> Result<PathResult> {
    apply_area_ops(&minimal_path(lambda), lambda, f)
}

/// `p_{n,μ} · B_f`.
pub fn apply_bounce_map(mu: &Partition, f: &CountMap) -> Result<PathResult> {
    apply_bounce_ops(&minimal_path(mu), mu, f)
}

/// Decides `(f, λ) ∈ ℱ_n`: `f` lives on `I_bnc(λ')`, satisfies
/// `λ̄_i > f(i,1) >= f(i,2) >= …`, and `p_{n,λ'} · B_f` has no floating cells.
pub fn check_fn_entry(lambda: &Partition, f: &CountMap) -> bool {
    let mu = lambda.conjugate();
    let index = bnc_index_set(&mu);
    if f.check_support(&index).is_err() {
        return false;
    }
    let distinct = lambda.distinct_parts();
    for i in 1..distinct.len() {
        let mut bound = distinct[i - 1];
        for &(_, r) in index.iter().filter(|&&(j, _)| j == i) {
            let v = f.get(i, r);
            if (r == 1 && v >= bound) || v > bound {
                return false;
            }
            bound = v;
        }
    }
    matches!(apply_bounce_map(&mu, f), Ok(PathResult::Path(p)) if p.is_minimal())
}

/// All count maps on `I_bnc(λ')` meeting the monotonicity bounds, before the
/// `𝒞(n)` filter.
fn candidate_maps(lambda: &Partition) -> Vec<CountMap> {
    let index = bnc_index_set(&lambda.conjugate());
    let distinct = lambda.distinct_parts();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        index: &[(usize, usize)],
        distinct: &[usize],
        cur: &mut CountMap,
        out: &mut Vec<CountMap>,
    ) {
        if k == index.len() {
            out.push(cur.clone());
            return;
        }
        let (i, r) = index[k];
        let max = if r == 1 {
            distinct[i - 1] - 1
        } else {
            cur.get(i, r - 1)
        };
        for v in 0..=max {
            cur.set(i, r, v);
            rec(k + 1, index, distinct, cur, out);
        }
        cur.set(i, r, 0);
    }
    rec(0, &index, &distinct, &mut CountMap::new(), &mut out);
    out
}

/// `ℱ_n`, ordered by partition (largest first) and then by count map.
pub fn enumerate_fn(n: usize) -> Vec<Certificate> {
    partitions(n)
        .into_iter()
        .flat_map(|lambda| {
            let mu = lambda.conjugate();
            candidate_maps(&lambda)
                .into_iter()
                .filter(move |f| matches!(apply_bounce_map(&mu, f), Ok(PathResult::Path(p)) if p.is_minimal()))
                .map(move |f| Certificate {
                    lambda: lambda.clone(),
                    f,
                })
        })
        .collect()
}

impl Certificate {
    /// `p_{n,λ} · A^f`.
    pub fn area_path(&self) -> Option<DyckPath> {
        apply_area_map(&self.lambda, &self.f).ok()?.into_path()
    }

    /// `p_{n,λ'} · B_f`.
    pub fn bounce_path(&self) -> Option<DyckPath> {
        apply_bounce_map(&self.lambda.conjugate(), &self.f).ok()?.into_path()
    }
}

/// Recovers `(λ, f)` with `π = p_{n,λ} · A^f` and `(f, λ) ∈ ℱ_n`.
pub fn af_certificate(path: &DyckPath) -> Option<Certificate> {
    let bp = path.bounce_path();
    if !bp.alpha.is_partition() {
        return None;
    }
    let lambda = bp.alpha.sorted();
    let floating: Vec<usize> = bp
        .row_starts()
        .iter()
        .zip(path.row_offsets())
        .map(|(s, x)| s - x)
        .collect();
    let mut f = CountMap::new();
    let mut used = vec![false; path.n()];
    for (i, r) in bnc_index_set(&lambda.conjugate()) {
        let row = row_map(&lambda, i, r).ok()?;
        f.set(i, r, floating[row - 1]);
        used[row - 1] = true;
    }
    if floating.iter().zip(&used).any(|(&c, &u)| c > 0 && !u) {
        return None;
    }
    let cert = Certificate { lambda, f };
    (check_fn_entry(&cert.lambda, &cert.f) && cert.area_path().as_ref() == Some(path)).then_some(cert)
}

/// Recovers `(λ, f)` with `τ = p_{n,λ'} · B_f` and `(f, λ) ∈ ℱ_n`.
pub fn bf_certificate(path: &DyckPath) -> Option<Certificate> {
    if !path.is_minimal() {
        return None;
    }
    let alpha = path.bounce_path().alpha;
    let mu = alpha.sorted();
    let lambda = mu.conjugate();
    let distinct = mu.distinct_parts();
    let l = distinct.len();
    let parts = alpha.parts();
    let mut f = CountMap::new();
    for i in 1..l {
        let size = distinct[l - i - 1];
        // positions of parts of this size, right to left
        let positions: Vec<usize> = (0..parts.len()).rev().filter(|&j| parts[j] == size).collect();
        for (r, &jr) in positions.iter().enumerate() {
            let v = parts[..jr].iter().map(|&a| size.saturating_sub(a)).sum();
            f.set(i, r + 1, v);
        }
    }
    let cert = Certificate { lambda, f };
    (check_fn_entry(&cert.lambda, &cert.f) && cert.bounce_path().as_ref() == Some(path)).then_some(cert)
}

/// Decides membership in `𝒜ℱ_n ∪ ℬℱ_n`.
///
/// A path whose bounce composition is a partition is tested for `𝒜ℱ_n`
/// only, so `p_{n,λ}` (which lies in both sets) reports [`Classification::InAf`].
pub fn classify(path: &DyckPath) -> Classification {
    let bp = path.bounce_path();
    if bp.alpha.is_partition() {
        af_certificate(path).map_or(Classification::Neither, Classification::InAf)
    } else if path.is_minimal() {
        bf_certificate(path).map_or(Classification::Neither, Classification::InBf)
    } else {
        Classification::Neither
    }
}

/// Φ: `p_{n,λ} · A^f ↦ p_{n,λ'} · B_f`.
pub fn phi(path: &DyckPath) -> Result<DyckPath> {
    af_certificate(path)
        .and_then(|c| c.bounce_path())
        .ok_or_else(|| Error::NotInDomain {
            word: path.word(),
            map: "phi",
        })
}

/// Φ⁻¹: `p_{n,λ'} · B_f ↦ p_{n,λ} · A^f`.
pub fn phi_inverse(path: &DyckPath) -> Result<DyckPath> {
    bf_certificate(path)
        .and_then(|c| c.area_path())
        .ok_or_else(|| Error::NotInDomain {
            word: path.word(),
            map: "phi_inverse",
        })
}

/// A pair `((f, λ), (g, λ'))` parametrizing the extended bijection Γ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaEntry {
    pub lambda: Partition,
    pub f: CountMap,
    pub g: CountMap,
}

impl GammaEntry {
    fn first(&self) -> Certificate {
        Certificate {
            lambda: self.lambda.clone(),
            f: self.f.clone(),
        }
    }

    /// Checks both halves lie in `ℱ_n`, `|f| >= |g|`, and that on each side
    /// the rows receiving cells lie strictly below the rows moved by the
    /// bounce operators: rows of `g` below those `B_f` changes in `p_{n,λ'}`,
    /// and rows of `f` below those `B_g` changes in `p_{n,λ}`.
    pub fn is_valid(&self) -> bool {
        let mu = self.lambda.conjugate();
        check_fn_entry(&self.lambda, &self.f)
            && check_fn_entry(&mu, &self.g)
            && self.f.total() >= self.g.total()
            && rows_below_changes(&mu, &self.f, &self.g)
            && rows_below_changes(&self.lambda, &self.g, &self.f)
    }

    /// `σ = p_{n,λ} · A^f B_g`.
    pub fn sigma(&self) -> Option<DyckPath> {
        let a = self.first().area_path()?;
        apply_bounce_ops(&a, &self.lambda, &self.g).ok()?.into_path()
    }

    /// `τ = p_{n,λ'} · B_f A^g`.
    pub fn tau(&self) -> Option<DyckPath> {
        let b = self.first().bounce_path()?;
        apply_area_ops(&b, &self.lambda.conjugate(), &self.g).ok()?.into_path()
    }
}

/// Whether every row `row_λ(i, r)` with `cells(i, r) > 0` lies strictly below
/// the first row that `B_moves` changes in `p_{n,λ}`.
fn rows_below_changes(lambda: &Partition, moves: &CountMap, cells: &CountMap) -> bool {
    let base = minimal_path(lambda);
    let Ok(PathResult::Path(moved)) = apply_bounce_ops(&base, lambda, moves) else {
        return false;
    };
    let first_changed = base
        .row_offsets()
        .iter()
        .zip(moved.row_offsets())
        .position(|(a, b)| a != b)
        .map_or(usize::MAX, |r| r + 1);
    cells
        .entries()
        .all(|(i, r, _)| row_map(lambda, i, r).is_ok_and(|row| row < first_changed))
}

/// All valid Γ parameters for semilength `n`.
pub fn enumerate_gamma(n: usize) -> Vec<GammaEntry> {
    let entries = enumerate_fn(n);
    let mut by_lambda: BTreeMap<Partition, Vec<CountMap>> = BTreeMap::new();
    for c in &entries {
        by_lambda.entry(c.lambda.clone()).or_default().push(c.f.clone());
    }
    let mut out = Vec::new();
    for c in &entries {
        let mu = c.lambda.conjugate();
        for g in by_lambda.get(&mu).into_iter().flatten() {
            let e = GammaEntry {
                lambda: c.lambda.clone(),
                f: c.f.clone(),
                g: g.clone(),
            };
            if e.is_valid() {
                out.push(e);
            }
        }
    }
    out
}

/// Separates a path into the certificate of its floating cells (moved onto
/// the sorted bounce path) and the certificate of its bounce path.
fn split(path: &DyckPath) -> Option<(Certificate, Certificate)> {
    let bp = path.bounce_path();
    let bounce = bf_certificate(&bp.to_path())?;
    let sorted = bp.alpha.sorted();
    let base = minimal_path(&sorted);
    let offsets = base
        .row_offsets()
        .iter()
        .zip(bp.row_starts())
        .zip(path.row_offsets())
        .map(|((&b, s), &x)| b.checked_sub(s - x))
        .collect::<Option<Vec<_>>>()?;
    let area = af_certificate(&DyckPath::from_row_offsets(offsets)?)?;
    Some((area, bounce))
}

/// Recovers the Γ parameters of `σ = p_{n,λ} · A^f B_g`.
pub fn gamma_certificate(sigma: &DyckPath) -> Option<GammaEntry> {
    let (area, bounce) = split(sigma)?;
    if bounce.lambda != area.lambda.conjugate() {
        return None;
    }
    let e = GammaEntry {
        lambda: area.lambda,
        f: area.f,
        g: bounce.f,
    };
    (e.is_valid() && e.sigma().as_ref() == Some(sigma)).then_some(e)
}

/// Recovers the Γ parameters of `τ = p_{n,λ'} · B_f A^g`.
pub fn gamma_inverse_certificate(tau: &DyckPath) -> Option<GammaEntry> {
    let (area, bounce) = split(tau)?;
    if area.lambda != bounce.lambda.conjugate() {
        return None;
    }
    let e = GammaEntry {
        lambda: bounce.lambda,
        f: bounce.f,
        g: area.f,
    };
    (e.is_valid() && e.tau().as_ref() == Some(tau)).then_some(e)
}

/// Γ: `p_{n,λ} · A^f B_g ↦ p_{n,λ'} · B_f A^g`.
pub fn gamma(path: &DyckPath) -> Result<DyckPath> {
    gamma_certificate(path)
        .and_then(|e| e.tau())
        .ok_or_else(|| Error::NotInDomain {
            word: path.word(),
            map: "gamma",
        })
}

/// Γ⁻¹.
pub fn gamma_inverse(path: &DyckPath) -> Result<DyckPath> {
    gamma_inverse_certificate(path)
        .and_then(|e| e.sigma())
        .ok_or_else(|| Error::NotInDomain {
            word: path.word(),
            map: "gamma_inverse",
        })
}
