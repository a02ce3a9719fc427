//! Exhaustive brute-force verification.
//!
//! Statistics here are recomputed from bit-packed step words by walking the
//! lattice, without going through the library's offset representation. Set
//! comparisons use sorted word lists.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bijection::{
    apply_area_ops, apply_bounce_ops, classify, enumerate_fn, enumerate_gamma, gamma, gamma_inverse,
    phi, phi_inverse, Classification,
};
use crate::error::{Error, Result};
use crate::extremal::{
    ab_ladder, bounce_interval_gaps, construct_path_with, nonemptiness_symmetry, top_levels,
    MinimalSets,
};
use crate::ops::{apply_ops, down, shift, unshift, up, Op, PathResult};
use crate::partition::{binomial, compositions, Composition};
use crate::path::{count_paths_with_bounce_path, enumerate_paths, DyckPath};
use crate::qbell::{bell_polys, distinct_ab_count, fqt, g_value, gqt, q_binomial};

pub const SUITES: [&str; 8] = [
    "statistics",
    "operators",
    "bijection",
    "gamma",
    "minimal",
    "levels",
    "qbell",
    "all",
];

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub n_min: usize,
    pub n_max: usize,
    pub passed: bool,
    pub counterexample: Option<Value>,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub fn table_row(&self) -> String {
        format!(
            "{:<4} {:<28} n={}..={:<3} {:>10.1} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.n_min,
            self.n_max,
            self.elapsed_ms
        )
    }
}

type Outcome = std::result::Result<(), Value>;

fn check(name: &str, n_min: usize, n_max: usize, body: impl FnOnce() -> Outcome) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    CheckReport {
        name: name.to_string(),
        n_min,
        n_max,
        passed: outcome.is_ok(),
        counterexample: outcome.err(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn ensure(cond: bool, payload: impl FnOnce() -> Value) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(payload())
    }
}

fn record(p: &DyckPath) -> Value {
    serde_json::to_value(p.record()).expect("records serialize")
}

/// A Dyck word packed as bits, step `k` north iff bit `k` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    pub n: usize,
    pub bits: u64,
}

impl Word {
    pub fn is_north(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }

    pub fn text(&self) -> String {
        (0..2 * self.n)
            .map(|k| if self.is_north(k) { 'N' } else { 'E' })
            .collect()
    }

    /// Sort key matching the library's enumeration order (N before E).
    fn key(&self) -> Vec<bool> {
        (0..2 * self.n).map(|k| !self.is_north(k)).collect()
    }

    /// Area: for each north step at height `y → y+1` taken at `x`, the row
    /// holds `y - x` cells.
    pub fn area(&self) -> usize {
        let (mut x, mut y, mut area) = (0, 0, 0);
        for k in 0..2 * self.n {
            if self.is_north(k) {
                area += y - x;
                y += 1;
            } else {
                x += 1;
            }
        }
        area
    }

    /// `h[c]` = number of north steps before the `c`-th east step.
    fn heights(&self) -> Vec<usize> {
        let mut h = vec![0];
        let mut y = 0;
        for k in 0..2 * self.n {
            if self.is_north(k) {
                y += 1;
            } else {
                h.push(y);
            }
        }
        h
    }

    /// Bounce points by walking: go up column `x+1` as far as the path
    /// allows, then east to the diagonal.
    pub fn bounce_points(&self) -> Vec<usize> {
        let h = self.heights();
        let mut pts = vec![0];
        let mut y = 0;
        while y < self.n {
            y = h[y + 1];
            pts.push(y);
        }
        pts
    }

    pub fn bounce(&self) -> usize {
        self.bounce_points()[1..].iter().map(|b| self.n - b).sum()
    }

    /// Packs a word; `None` on a character other than `N` or `E`.
    pub fn from_text(text: &str) -> Option<Word> {
        let mut bits = 0u64;
        for (k, c) in text.chars().enumerate() {
            match c {
                'N' => bits |= 1 << k,
                'E' => {}
                _ => return None,
            }
        }
        Some(Word { n: text.len() / 2, bits })
    }

    pub fn path(&self) -> DyckPath {
        self.text().parse().expect("oracle words are Dyck words")
    }
}

/// Every Dyck word of semilength `n`, in library enumeration order.
pub fn words(n: usize) -> Vec<Word> {
    assert!(n <= 32, "semilength {n} does not fit the bit packing");
    fn rec(n: usize, k: usize, up: usize, bits: u64, out: &mut Vec<Word>) {
        if k == 2 * n {
            out.push(Word { n, bits });
            return;
        }
        let down = k - up;
        if up < n {
            rec(n, k + 1, up + 1, bits | 1 << k, out);
        }
        if down < up {
            rec(n, k + 1, up, bits, out);
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, 0, &mut out);
    out.sort_by_key(Word::key);
    out
}

/// `(area, bounce)` for every word, brute force.
pub fn stats(n: usize) -> Vec<(Word, usize, usize)> {
    words(n)
        .into_iter()
        .map(|w| {
            let (a, b) = (w.area(), w.bounce());
            (w, a, b)
        })
        .collect()
}

/// Brute-force `P_n(a,b)` as sorted word lists.
pub fn levels(n: usize) -> BTreeMap<(usize, usize), Vec<String>> {
    let mut out: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (w, a, b) in stats(n) {
        out.entry((a, b)).or_default().push(w.text());
    }
    out
}

fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

fn fib(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn bell_numbers(n: usize) -> Vec<u128> {
    // Bell triangle
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 1..=n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(n + 1);
    out
}

const EXAMPLE_PATH: &str = "NNNEENENEENNEE";

// ---- statistics ----------------------------------------------------------

pub fn check_example_path() -> CheckReport {
    check("example-path", 7, 7, || {
        let p: DyckPath = EXAMPLE_PATH.parse().map_err(|e: Error| json!(e.to_string()))?;
        let r = p.record();
        let w = Word::from_text(EXAMPLE_PATH).expect("N/E word");
        let ok = r.area_seq == [0, 1, 2, 1, 1, 0, 1]
            && r.area == 6
            && r.alpha == [3, 2, 2]
            && r.bounce_points == [0, 3, 5, 7]
            && r.bounce == 6
            && r.floating == 1
            && w.area() == 6
            && w.bounce_points() == [0, 3, 5, 7];
        ensure(ok, || record(&p))
    })
}

pub fn check_statistics(n_max: usize) -> CheckReport {
    let n_max = n_max.min(11);
    check("statistics-vs-brute-force", 0, n_max, || {
        for n in 0..=n_max {
            let ws = words(n);
            ensure(ws.len() as u128 == catalan(n), || json!({ "n": n, "count": ws.len() }))?;
            let lib: Vec<DyckPath> = enumerate_paths(n).collect();
            ensure(lib.len() == ws.len(), || json!({ "n": n, "library": lib.len() }))?;
            for (w, p) in ws.iter().zip(&lib) {
                let same = p.word() == w.text()
                    && p.area() == w.area()
                    && p.bounce_path().points == w.bounce_points()
                    && p.bounce() == w.bounce();
                ensure(same, || json!({ "expected": w.text(), "library": record(p) }))?;
            }
        }
        Ok(())
    })
}

pub fn check_joint_symmetry(n_max: usize) -> CheckReport {
    let n_max = n_max.min(11);
    check("joint-symmetry", 0, n_max, || {
        for n in 0..=n_max {
            let d = binomial(n, 2) as usize + 1;
            let mut m = vec![vec![0u64; d]; d];
            for (_, a, b) in stats(n) {
                m[a][b] += 1;
            }
            for (a, row) in m.iter().enumerate() {
                for (b, &c) in row.iter().enumerate() {
                    ensure(c == m[b][a], || json!({ "n": n, "a": a, "b": b, "c_ab": c, "c_ba": m[b][a] }))?;
                }
            }
            let f = fqt(n);
            let agrees = (0..d).all(|a| (0..d).all(|b| *f.coeff(a, b) == m[a][b].into()));
            ensure(agrees && f.is_symmetric(), || json!({ "n": n, "fqt": "library matrix differs" }))?;
        }
        Ok(())
    })
}

/// `Π_{j ≥ 2} C(α_{j-1} + α_j - 1, α_j)`.
pub fn product_formula(alpha: &Composition) -> u128 {
    alpha
        .parts()
        .windows(2)
        .map(|w| binomial(w[0] + w[1] - 1, w[1]))
        .product()
}

pub fn check_product_formula(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("product-formula", 1, n_max, || {
        let c = Composition::new(vec![3, 2, 2]).expect("composition");
        ensure(product_formula(&c) == 18, || json!({ "alpha": [3, 2, 2], "formula": product_formula(&c) }))?;
        for n in 1..=n_max {
            let mut counts: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
            for w in words(n) {
                let pts = w.bounce_points();
                *counts.entry(pts.windows(2).map(|p| p[1] - p[0]).collect()).or_default() += 1;
            }
            for alpha in compositions(n) {
                let brute = counts.get(alpha.parts()).copied().unwrap_or(0);
                let formula = product_formula(&alpha);
                let lib = count_paths_with_bounce_path(n, &alpha).map_err(|e| json!(e.to_string()))?;
                ensure(brute == formula && lib == formula, || {
                    json!({ "n": n, "alpha": alpha.parts(), "brute": brute, "formula": formula, "library": lib })
                })?;
            }
        }
        let brute = words(7)
            .into_iter()
            .filter(|w| w.bounce_points() == [0, 3, 5, 7])
            .count();
        ensure(brute == 18, || json!({ "alpha": [3, 2, 2], "brute": brute }))
    })
}

// ---- operators -----------------------------------------------------------

fn segments(p: &DyckPath) -> usize {
    p.bounce_path().len()
}

fn wstats(p: &DyckPath) -> (usize, usize) {
    let w = Word::from_text(&p.word()).expect("library words use N and E");
    (w.area(), w.bounce())
}

fn pair_check(
    name: &str,
    n_max: usize,
    fwd: fn(&DyckPath, usize) -> Result<PathResult>,
    back: fn(&DyckPath, usize) -> Result<PathResult>,
    delta: (isize, isize),
) -> CheckReport {
    let n_max = n_max.min(8);
    check(name, 1, n_max, || {
        for n in 1..=n_max {
            for w in words(n) {
                let p = w.path();
                let (a, b) = (w.area() as isize, w.bounce() as isize);
                for i in 1..=segments(&p) {
                    let q = fwd(&p, i).map_err(|e| json!(e.to_string()))?;
                    if let PathResult::Path(q) = q {
                        let (qa, qb) = wstats(&q);
                        let back_ok = back(&q, i).ok().and_then(PathResult::into_path).as_ref() == Some(&p);
                        ensure((qa as isize - a, qb as isize - b) == delta && back_ok, || {
                            json!({ "index": i, "input": record(&p), "output": record(&q) })
                        })?;
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn check_shift_unshift(n_max: usize) -> CheckReport {
    pair_check("shift-unshift", n_max, shift, unshift, (0, 1))
}

pub fn check_unshift_shift(n_max: usize) -> CheckReport {
    pair_check("unshift-shift", n_max, unshift, shift, (0, -1))
}

pub fn check_up_down(n_max: usize) -> CheckReport {
    pair_check("up-down", n_max, up, down, (-1, 1))
}

pub fn check_down_up(n_max: usize) -> CheckReport {
    pair_check("down-up", n_max, down, up, (1, -1))
}

pub fn check_bottom_absorption(n_max: usize) -> CheckReport {
    let n_max = n_max.min(8);
    check("bottom-absorption", 1, n_max, || {
        for n in 1..=n_max {
            for p in enumerate_paths(n) {
                let m = segments(&p);
                let mut ops = Vec::new();
                for i in 1..=m {
                    ops.extend([
                        Op::S { index: i, power: 1 },
                        Op::S { index: i, power: -1 },
                        Op::U { index: i, power: 1 },
                        Op::D { index: i, power: 1 },
                    ]);
                }
                for r in 1..=n {
                    ops.extend([Op::A { row: r, power: 1 }, Op::A { row: r, power: -1 }]);
                    ops.extend([Op::C { col: r, power: 1 }, Op::C { col: r, power: -1 }]);
                }
                for &op in &ops {
                    if !op.apply(&p).map_err(|e| json!(e.to_string()))?.is_bottom() {
                        continue;
                    }
                    for &next in &ops {
                        let r = apply_ops(&p, &[op, next]).map_err(|e| json!(e.to_string()))?;
                        let r2 = PathResult::Bottom.apply(next).map_err(|e| json!(e.to_string()))?;
                        ensure(r.is_bottom() && r2.is_bottom(), || {
                            json!({ "path": record(&p), "ops": [op.to_string(), next.to_string()] })
                        })?;
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn check_no_move_shapes(n_max: usize) -> CheckReport {
    let n_max = n_max.min(8);
    check("no-move-shapes", 1, n_max, || {
        for n in 1..=n_max {
            let mut classes: BTreeMap<(Vec<usize>, usize), Vec<DyckPath>> = BTreeMap::new();
            for w in words(n) {
                classes.entry((w.bounce_points(), w.area())).or_default().push(w.path());
            }
            for members in classes.values() {
                let any = |f: fn(&DyckPath, usize) -> Result<PathResult>| {
                    members
                        .iter()
                        .any(|p| (1..=segments(p)).any(|i| f(p, i).is_ok_and(|r| !r.is_bottom())))
                };
                let p = &members[0];
                let alpha = p.bounce_path().alpha;
                let parts = alpha.parts();
                let (a, b) = wstats(p);
                if !any(down) {
                    ensure(alpha.is_strict_partition() && a >= b, || json!({ "no_down": record(p) }))?;
                }
                if !any(up) {
                    let ok = members.iter().all(DyckPath::is_minimal)
                        && parts.last() == Some(&1)
                        && parts.windows(2).all(|w| w[0] <= w[1] + 1)
                        && a <= b;
                    ensure(ok, || json!({ "no_up": record(p) }))?;
                }
            }
        }
        Ok(())
    })
}

// ---- bijection -----------------------------------------------------------

fn cert_json<T: Serialize>(c: &T) -> Value {
    serde_json::to_value(c).unwrap_or(Value::Null)
}

pub fn check_phi_ab_pairs(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("phi-ab-pairs", 1, n_max, || {
        for n in 1..=n_max {
            for c in enumerate_fn(n) {
                let pair = c.area_path().zip(c.bounce_path());
                let Some((a, b)) = pair else {
                    return Err(json!({ "undefined": cert_json(&c) }));
                };
                let (sa, sb) = (wstats(&a), wstats(&b));
                ensure(sa == (sb.1, sb.0), || json!({ "certificate": cert_json(&c), "area_path": record(&a), "bounce_path": record(&b) }))?;
            }
        }
        Ok(())
    })
}

pub fn check_phi_round_trip(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("phi-round-trip", 1, n_max, || {
        for n in 1..=n_max {
            for c in enumerate_fn(n) {
                let (a, b) = c.area_path().zip(c.bounce_path()).ok_or_else(|| cert_json(&c))?;
                let fwd = phi(&a).ok();
                let back = phi_inverse(&b).ok();
                let again = fwd.as_ref().and_then(|q| phi_inverse(q).ok());
                ensure(fwd.as_ref() == Some(&b) && back.as_ref() == Some(&a) && again.as_ref() == Some(&a), || {
                    json!({ "certificate": cert_json(&c), "area_path": record(&a), "bounce_path": record(&b) })
                })?;
            }
        }
        Ok(())
    })
}

pub fn check_classify(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("classify-certificates", 1, n_max, || {
        for n in 1..=n_max {
            let mut members = BTreeSet::new();
            for c in enumerate_fn(n) {
                let (a, b) = c.area_path().zip(c.bounce_path()).ok_or_else(|| cert_json(&c))?;
                ensure(classify(&a) == Classification::InAf(c.clone()), || json!({ "certificate": cert_json(&c), "path": record(&a) }))?;
                // p_{n,λ'} is reported on the area side with the zero map
                let expect_b = if b.bounce_path().alpha.is_partition() {
                    matches!(classify(&b), Classification::InAf(ref d) if d.f.is_zero() && c.f.is_zero())
                } else {
                    classify(&b) == Classification::InBf(c.clone())
                };
                ensure(expect_b, || json!({ "certificate": cert_json(&c), "path": record(&b) }))?;
                members.insert(a.word());
                members.insert(b.word());
            }
            for w in words(n) {
                let p = w.path();
                let inside = members.contains(&w.text());
                ensure((classify(&p) != Classification::Neither) == inside, || json!({ "path": record(&p), "member": inside }))?;
            }
        }
        Ok(())
    })
}

/// `|𝒜ℱ_n ∪ ℬℱ_n|` for each `n` in `5..=n_max`, checked against
/// `2·Fib(n+1) <= size <= 2^n`.
pub fn check_af_bf_bounds(n_max: usize) -> CheckReport {
    let n_max = n_max.min(12);
    check("af-bf-size-bounds", 5, n_max, || {
        for n in 5..=n_max {
            let mut set = BTreeSet::new();
            for c in enumerate_fn(n) {
                set.extend(c.area_path().map(|p| p.word()));
                set.extend(c.bounce_path().map(|p| p.word()));
            }
            let size = set.len() as u128;
            ensure(2 * fib(n + 1) <= size && size <= 1 << n, || {
                json!({ "n": n, "size": size, "lower": 2 * fib(n + 1), "upper": 1u128 << n })
            })?;
        }
        Ok(())
    })
}

// ---- gamma ---------------------------------------------------------------

pub fn check_gamma(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("gamma-round-trip", 1, n_max, || {
        for n in 1..=n_max {
            let mut seen = BTreeSet::new();
            for e in enumerate_gamma(n) {
                let (s, t) = e.sigma().zip(e.tau()).ok_or_else(|| cert_json(&e))?;
                let (ss, ts) = (wstats(&s), wstats(&t));
                let ok = ss == (ts.1, ts.0)
                    && gamma(&s).ok().as_ref() == Some(&t)
                    && gamma_inverse(&t).ok().as_ref() == Some(&s)
                    && seen.insert(s.word());
                ensure(ok, || json!({ "entry": cert_json(&e), "sigma": record(&s), "tau": record(&t) }))?;
            }
        }
        Ok(())
    })
}

pub fn check_gamma_commutation(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("gamma-commutation", 1, n_max, || {
        for n in 1..=n_max {
            for e in enumerate_gamma(n) {
                let mu = e.lambda.conjugate();
                let p = DyckPath::minimal(e.lambda.parts());
                let q = DyckPath::minimal(mu.parts());
                let err = || cert_json(&e);
                let bg = apply_bounce_ops(&p, &e.lambda, &e.g).map_err(|_| err())?.into_path().ok_or_else(err)?;
                let ag = apply_area_ops(&q, &mu, &e.g).map_err(|_| err())?.into_path().ok_or_else(err)?;
                let s = apply_area_ops(&bg, &e.lambda, &e.f).map_err(|_| err())?.into_path();
                let t = apply_bounce_ops(&ag, &mu, &e.f).map_err(|_| err())?.into_path();
                ensure(s == e.sigma() && t == e.tau(), err)?;
            }
        }
        Ok(())
    })
}

pub fn check_gqt_symmetry(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("gqt-symmetry", 0, n_max, || {
        for n in 0..=n_max {
            ensure(gqt(n).is_symmetric(), || json!({ "n": n }))?;
        }
        Ok(())
    })
}

// ---- minimal -------------------------------------------------------------

/// Brute-force `ℬ(n)` and `𝒜(n)` as sorted word lists.
pub fn minimal_words(n: usize) -> (Vec<String>, Vec<String>) {
    let all = stats(n);
    let mut best: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for &(_, a, b) in &all {
        let e = best.entry(a + b).or_insert((a, b));
        *e = (e.0.min(a), e.1.min(b));
    }
    let mut bm: Vec<String> = all.iter().filter(|(_, a, b)| best[&(a + b)].1 == *b).map(|(w, ..)| w.text()).collect();
    let mut am: Vec<String> = all.iter().filter(|(_, a, b)| best[&(a + b)].0 == *a).map(|(w, ..)| w.text()).collect();
    bm.sort();
    am.sort();
    (bm, am)
}

fn sorted_words(paths: &[DyckPath]) -> Vec<String> {
    let mut v: Vec<String> = paths.iter().map(DyckPath::word).collect();
    v.sort();
    v
}

pub fn check_minimal_sets(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("minimal-sets", 1, n_max, || {
        for n in 1..=n_max {
            let (bm, am) = minimal_words(n);
            let fast = MinimalSets::new(n);
            ensure(sorted_words(&fast.bounce) == bm, || json!({ "n": n, "kind": "bounce", "brute": bm, "fast": sorted_words(&fast.bounce) }))?;
            ensure(sorted_words(&fast.area) == am, || json!({ "n": n, "kind": "area", "brute": am, "fast": sorted_words(&fast.area) }))?;
            for p in &fast.bounce {
                let alpha = p.bounce_path().alpha;
                let parts = alpha.parts();
                let slack = parts.windows(2).map(|w| w[0] - w[1] - 1).min().unwrap_or(0);
                let ok = alpha.is_strict_partition() && p.area() <= DyckPath::minimal(parts).area() + slack;
                ensure(ok, || json!({ "bounce_minimal_shape": record(p) }))?;
            }
            for p in &fast.area {
                let ok = p.is_minimal() && crate::extremal::is_area_minimal_shape(&p.bounce_path().alpha);
                ensure(ok, || json!({ "area_minimal_shape": record(p) }))?;
            }
        }
        Ok(())
    })
}

pub fn check_phi_on_minimal(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("phi-on-minimal", 1, n_max, || {
        for n in 1..=n_max {
            let (bm, am) = minimal_words(n);
            let mut image = Vec::new();
            for w in &bm {
                let p: DyckPath = w.parse().expect("oracle word");
                let q = phi(&p).map_err(|e| json!({ "path": record(&p), "error": e.to_string() }))?;
                let (pa, pb) = wstats(&p);
                ensure(wstats(&q) == (pb, pa), || json!({ "path": record(&p), "image": record(&q) }))?;
                image.push(q.word());
            }
            image.sort();
            let distinct = image.windows(2).all(|w| w[0] != w[1]);
            ensure(distinct && image == am, || json!({ "n": n, "image": image, "area_minimal": am }))?;
        }
        Ok(())
    })
}

pub fn check_minimal_seven() -> CheckReport {
    check("minimal-seven", 7, 7, || {
        let (bm, am) = minimal_words(7);
        let lv = levels(7);
        let abs: BTreeSet<usize> = bm
            .iter()
            .map(|w| {
                let p: DyckPath = w.parse().expect("oracle word");
                p.ab()
            })
            .collect();
        let counts = (lv.get(&(2, 13)).map_or(0, Vec::len), lv.get(&(13, 2)).map_or(0, Vec::len));
        ensure(abs.len() == 11 && bm.len() == 12 && am.len() == 12 && counts == (2, 2), || {
            json!({ "ab_values": abs.len(), "bounce_minimal": bm.len(), "area_minimal": am.len(), "levels": [counts.0, counts.1] })
        })
    })
}

// ---- levels --------------------------------------------------------------

pub fn check_level_symmetry(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("nonemptiness-symmetry", 0, n_max, || {
        for n in 0..=n_max {
            let lv = levels(n);
            for &(a, b) in lv.keys() {
                ensure(lv.contains_key(&(b, a)), || json!({ "n": n, "a": a, "b": b }))?;
            }
            let report = nonemptiness_symmetry(n);
            ensure(report.holds() && report.levels == lv.len(), || cert_json(&report))?;
        }
        Ok(())
    })
}

pub fn check_construct_path(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("construct-path", 0, n_max, || {
        for n in 0..=n_max {
            let lv = levels(n);
            let sets = MinimalSets::new(n);
            let s = binomial(n, 2) as usize;
            for a in 0..=s {
                for b in 0..=s - a {
                    let got = construct_path_with(&sets, a, b);
                    let ok = match (&got, lv.get(&(a, b))) {
                        (None, None) => true,
                        (Some(p), Some(members)) => members.contains(&p.word()) && wstats(p) == (a, b),
                        _ => false,
                    };
                    ensure(ok, || json!({ "n": n, "a": a, "b": b, "constructed": got.as_ref().map(record) }))?;
                }
            }
        }
        Ok(())
    })
}

/// Empirical only: every bounce between the level minimum and its mirror
/// is realized.
pub fn check_bounce_interval_conjecture(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("bounce-interval-empirical", 0, n_max, || {
        for n in 0..=n_max {
            let gaps = bounce_interval_gaps(n);
            ensure(gaps.is_empty(), || json!({ "n": n, "missing": gaps }))?;
        }
        Ok(())
    })
}

pub fn check_top_levels(n_max: usize) -> CheckReport {
    let n_max = n_max.min(9);
    check("top-levels", 3, n_max, || {
        for n in 3..=n_max {
            let s = binomial(n, 2) as usize;
            let lv = levels(n);
            let top: Vec<_> = lv.iter().filter(|(k, _)| k.0 + k.1 == s).collect();
            let second: Vec<_> = lv.iter().filter(|(k, _)| k.0 + k.1 + 1 == s).collect();
            let brute_ok = top.len() == s + 1
                && top.iter().all(|(_, v)| v.len() == 1)
                && second.iter().all(|(_, v)| v.len() == 1);
            let report = top_levels(n);
            ensure(brute_ok && report.holds(), || cert_json(&report))?;
            if n == 4 {
                let sizes = (report.top_count(), report.second_count());
                ensure(sizes == (7, 4) && top.len() == 7 && second.len() == 4, || cert_json(&report))?;
            }
        }
        Ok(())
    })
}

pub fn check_ab_interval(n_max: usize) -> CheckReport {
    let n_max = n_max.min(12);
    check("ab-interval", 0, n_max, || {
        for n in 0..=n_max {
            let s = binomial(n, 2) as usize;
            let lo = s - g_value(n);
            let abs: BTreeSet<usize> = stats(n).into_iter().map(|(_, a, b)| a + b).collect();
            ensure(abs.iter().copied().eq(lo..=s), || json!({ "n": n, "ab_values": abs, "expected": [lo, s] }))?;
        }
        Ok(())
    })
}

pub fn check_ab_ladder(n_max: usize) -> CheckReport {
    let n_max = n_max.min(10);
    check("ab-ladder", 0, n_max, || {
        for n in 0..=n_max {
            let s = binomial(n, 2) as usize;
            let lo = s - g_value(n);
            for x in lo..=s {
                let p = ab_ladder(n, x).map_err(|e| json!({ "n": n, "x": x, "error": e.to_string() }))?;
                let (a, b) = wstats(&p);
                ensure(a + b == x, || json!({ "n": n, "x": x, "path": record(&p) }))?;
            }
            ensure(ab_ladder(n, s + 1).is_err(), || json!({ "n": n, "x": s + 1 }))?;
            if lo > 0 {
                ensure(ab_ladder(n, lo - 1).is_err(), || json!({ "n": n, "x": lo - 1 }))?;
            }
        }
        Ok(())
    })
}

// ---- qbell ---------------------------------------------------------------

pub const D_SEQUENCE: [usize; 20] = [
    1, 1, 1, 2, 3, 5, 8, 11, 15, 20, 26, 32, 39, 47, 56, 66, 76, 87, 99, 112,
];

pub fn check_d_sequence(n_max: usize) -> CheckReport {
    let n_max = n_max.min(19);
    check("d-sequence", 0, n_max, || {
        for (n, &d) in D_SEQUENCE.iter().enumerate().take(n_max + 1) {
            ensure(distinct_ab_count(n) == d, || json!({ "n": n, "expected": d, "got": distinct_ab_count(n) }))?;
        }
        Ok(())
    })
}

pub fn check_bell_polynomials(n_max: usize) -> CheckReport {
    let n_max = n_max.min(20);
    check("bell-polynomials", 0, n_max, || {
        let polys = bell_polys(n_max);
        let bell = bell_numbers(n_max);
        for (n, p) in polys.iter().enumerate() {
            let at_one = p.eval(&1.into());
            ensure(at_one == bell[n].into(), || json!({ "n": n, "value": at_one.to_string(), "bell": bell[n].to_string() }))?;
            let g = g_value(n);
            let gap_free = p.degree() == Some(g) && p.coefficients().iter().all(|c| c > &0.into());
            ensure(gap_free && p.nonzero_count() == g + 1, || json!({ "n": n, "poly": p.to_string(), "g": g }))?;
        }
        Ok(())
    })
}

pub fn check_q_binomials(n_max: usize) -> CheckReport {
    let n_max = n_max.min(12);
    check("q-binomials", 0, n_max, || {
        for m in 0..=n_max {
            for k in 0..=m {
                // lattice words with k ones, graded by inversions
                let mut counts = vec![0u64; k * (m - k) + 1];
                for bits in 0u32..1 << m {
                    if bits.count_ones() as usize != k {
                        continue;
                    }
                    let mut inv = 0;
                    let mut ones = 0;
                    for j in 0..m {
                        if bits >> j & 1 == 1 {
                            ones += 1;
                        } else {
                            inv += ones;
                        }
                    }
                    counts[inv] += 1;
                }
                let q = q_binomial(m, k);
                let same = q.coefficients().len() == counts.len()
                    && q.coefficients().iter().zip(&counts).all(|(a, &b)| *a == b.into());
                ensure(same, || json!({ "m": m, "k": k, "poly": q.to_string(), "brute": counts }))?;
            }
        }
        Ok(())
    })
}

pub fn check_distinct_ab(n_max: usize) -> CheckReport {
    let n_max = n_max.min(12);
    check("distinct-ab-brute-force", 0, n_max, || {
        for n in 0..=n_max {
            let abs: BTreeSet<usize> = stats(n).into_iter().map(|(_, a, b)| a + b).collect();
            let s = binomial(n, 2) as usize;
            let ok = abs.len() == distinct_ab_count(n)
                && abs.first() == Some(&(s - g_value(n)))
                && abs.last() == Some(&s);
            ensure(ok, || json!({ "n": n, "ab_values": abs, "d": distinct_ab_count(n), "g": g_value(n) }))?;
            let degrees = fqt(n).ab_degrees();
            ensure(degrees == abs, || json!({ "n": n, "fqt_degrees": degrees }))?;
        }
        Ok(())
    })
}

/// Runs the named suite with every check capped at `n_max`.
pub fn run_suite(name: &str, n_max: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let all = name == "all";
    let want = |s: &str| all || name == s;
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if want("statistics") {
        out.push(check_example_path());
        out.push(check_statistics(n_max));
        out.push(check_joint_symmetry(n_max));
        out.push(check_product_formula(n_max));
    }
    if want("operators") {
        out.push(check_shift_unshift(n_max));
        out.push(check_unshift_shift(n_max));
        out.push(check_up_down(n_max));
        out.push(check_down_up(n_max));
        out.push(check_bottom_absorption(n_max));
        out.push(check_no_move_shapes(n_max));
    }
    if want("bijection") {
        out.push(check_phi_ab_pairs(n_max));
        out.push(check_phi_round_trip(n_max));
        out.push(check_classify(n_max));
        out.push(check_af_bf_bounds(n_max));
    }
    if want("gamma") {
        out.push(check_gamma(n_max));
        out.push(check_gamma_commutation(n_max));
        out.push(check_gqt_symmetry(n_max));
    }
    if want("minimal") {
        out.push(check_minimal_sets(n_max));
        out.push(check_phi_on_minimal(n_max));
        if n_max >= 7 {
            out.push(check_minimal_seven());
        }
    }
    if want("levels") {
        out.push(check_level_symmetry(n_max));
        out.push(check_construct_path(n_max));
        out.push(check_top_levels(n_max));
        out.push(check_ab_interval(n_max));
        out.push(check_ab_ladder(n_max));
        out.push(check_bounce_interval_conjecture(n_max));
    }
    if want("qbell") {
        out.push(check_d_sequence(n_max));
        out.push(check_bell_polynomials(n_max));
        out.push(check_q_binomials(n_max));
        out.push(check_distinct_ab(n_max));
    }
    Ok(out)
}
