//! Partial operators on Dyck paths.
//!
//! Every operator maps a path either to another path of the same semilength
//! or to ⊥. Row and column operators take indices in `1..=n`; the bounce
//! operators take bounce-point indices in `1..=m`, where `m` is the number of
//! bounce segments. An index outside those ranges is a usage error and is
//! reported as [`Error::IndexOutOfRange`], never as ⊥.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::path::DyckPath;

/// A path or ⊥.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathResult {
    Path(DyckPath),
    Bottom,
}

impl PathResult {
    pub fn is_bottom(&self) -> bool {
        matches!(self, PathResult::Bottom)
    }

    pub fn path(&self) -> Option<&DyckPath> {
        match self {
            PathResult::Path(p) => Some(p),
            PathResult::Bottom => None,
        }
    }

    pub fn into_path(self) -> Option<DyckPath> {
        match self {
            PathResult::Path(p) => Some(p),
            PathResult::Bottom => None,
        }
    }

    /// Applies an operator, with ⊥ absorbing.
    pub fn apply(&self, op: Op) -> Result<PathResult> {
        match self {
            PathResult::Path(p) => op.apply(p),
            PathResult::Bottom => Ok(PathResult::Bottom),
        }
    }
}

impl From<Option<DyckPath>> for PathResult {
    fn from(p: Option<DyckPath>) -> Self {
        p.map_or(PathResult::Bottom, PathResult::Path)
    }
}

impl fmt::Display for PathResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathResult::Path(p) => write!(f, "{p}"),
            PathResult::Bottom => f.write_str("bottom"),
        }
    }
}

impl Serialize for PathResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PathResult::Path(p) => p.serialize(s),
            PathResult::Bottom => s.serialize_none(),
        }
    }
}

/// Quantities derived from one path that the bounce operators read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathContext {
    pub n: usize,
    /// Row offsets `x_1..x_n`.
    pub offsets: Vec<usize>,
    /// Column heights `h_1..h_n`.
    pub heights: Vec<usize>,
    /// Bounce points `b_0..b_m`.
    pub points: Vec<usize>,
}

impl PathContext {
    pub fn new(path: &DyckPath) -> Self {
        let offsets = path.offsets.clone();
        let heights = path.column_heights();
        let points = path.bounce_path().points;
        PathContext {
            n: offsets.len(),
            offsets,
            heights,
            points,
        }
    }

    /// Number of bounce segments.
    pub fn segments(&self) -> usize {
        self.points.len() - 1
    }

    /// `h_c` with the convention `h_0 = 0`.
    pub fn h(&self, c: usize) -> usize {
        if c == 0 {
            0
        } else {
            self.heights[c - 1]
        }
    }

    /// Row offset `x_r`.
    pub fn x(&self, r: usize) -> usize {
        self.offsets[r - 1]
    }

    /// Area-sequence entry `a_r`.
    pub fn a(&self, r: usize) -> usize {
        r - 1 - self.x(r)
    }

    /// `h'_r = a_r + n + 1 - r`.
    pub fn h_prime(&self, r: usize) -> usize {
        self.a(r) + self.n + 1 - r
    }

    fn check_index(&self, i: usize) -> Result<()> {
        check_range("bounce", i, self.segments())
    }

    /// `s^{(i)} = b_{i+1} - h_{b_i}`, or `None` at the last bounce point.
    pub fn s(&self, i: usize) -> Option<usize> {
        (i < self.segments()).then(|| self.points[i + 1] - self.h(self.points[i]))
    }

    /// `u^{(i)}`: equal to `s^{(i)}` except that `u^{(m)} = 0`.
    pub fn u(&self, i: usize) -> usize {
        self.s(i).unwrap_or(0)
    }

    /// East steps taken from `(b_{i-1}, b_i)` before the next north step,
    /// minus one; this is the depth of the region moved by `D_i`.
    pub fn d(&self, i: usize) -> Option<usize> {
        (i < self.segments()).then(|| self.x(self.points[i] + 1) - self.points[i - 1] - 1)
    }

    /// `β^{(i)}_j = h_{b_{i-1}+u+2-j} - b_i + 1` for `j = 1..=u^{(i)}`.
    pub fn beta(&self, i: usize) -> Option<Vec<usize>> {
        let u = self.u(i);
        let (prev, b) = (self.points[i - 1], self.points[i]);
        (1..=u)
            .map(|j| {
                let col = prev + u + 2 - j;
                (col <= self.n && self.h(col) >= b).then(|| self.h(col) + 1 - b)
            })
            .collect()
    }

    /// `γ^{(i)}_k = b_i + 1 - x_{b_{i+1}-d+k}` for `k = 1..=d^{(i)}`.
    pub fn gamma(&self, i: usize) -> Option<Vec<usize>> {
        let d = self.d(i)?;
        let (b, next) = (self.points[i], self.points[i + 1]);
        (1..=d)
            .map(|k| {
                let x = self.x(next - d + k);
                (x <= b).then(|| b + 1 - x)
            })
            .collect()
    }

    /// `Δ_j = α_i - α_j` for `j = i+1..=m`, clamped at zero.
    pub fn deltas(&self, i: usize) -> Vec<usize> {
        let alpha = |j: usize| self.points[j] - self.points[j - 1];
        (i + 1..=self.segments())
            .map(|j| alpha(i).saturating_sub(alpha(j)))
            .collect()
    }
}

fn check_range(what: &'static str, index: usize, max: usize) -> Result<()> {
    if index == 0 || index > max {
        Err(Error::IndexOutOfRange { what, index, max })
    } else {
        Ok(())
    }
}

// Raw moves on row offsets (`x[r-1]` is the offset of row `r`). Each returns
// false, leaving `x` untouched, when the result would not be a Dyck path.

fn height(x: &[usize], c: usize) -> usize {
    x.partition_point(|&v| v < c)
}

fn add_area(x: &mut [usize], row: usize) -> bool {
    let r = row - 1;
    if x[r] == 0 || (r > 0 && x[r - 1] + 1 > x[r]) {
        return false;
    }
    x[r] -= 1;
    true
}

fn remove_area(x: &mut [usize], row: usize) -> bool {
    let r = row - 1;
    let v = x[r] + 1;
    if v > r || (r + 1 < x.len() && x[r + 1] < v) {
        return false;
    }
    x[r] = v;
    true
}

fn add_column(x: &mut [usize], col: usize) -> bool {
    let r = height(x, col);
    if r >= x.len() || x[r] != col {
        return false;
    }
    x[r] = col - 1;
    true
}

fn remove_column(x: &mut [usize], col: usize) -> bool {
    let h = height(x, col);
    if h == 0 {
        return false;
    }
    let r = h - 1;
    if x[r] != col - 1 || col > r {
        return false;
    }
    x[r] = col;
    true
}

fn repeat(x: &mut [usize], times: usize, mut step: impl FnMut(&mut [usize]) -> bool) -> bool {
    (0..times).all(|_| step(x))
}

fn power(x: &mut [usize], index: usize, power: i32, fwd: fn(&mut [usize], usize) -> bool, inv: fn(&mut [usize], usize) -> bool) -> bool {
    let f = if power >= 0 { fwd } else { inv };
    repeat(x, power.unsigned_abs() as usize, |x| f(x, index))
}

fn wrap(offsets: Option<Vec<usize>>) -> PathResult {
    offsets.map(|offsets| DyckPath { offsets }).into()
}

/// `A_row^power`: adds (or for negative powers removes) cells at the left end
/// of a row.
pub fn area_cells(path: &DyckPath, row: usize, pow: i32) -> Result<PathResult> {
    check_range("row", row, path.n())?;
    let mut x = path.offsets.clone();
    Ok(wrap(power(&mut x, row, pow, add_area, remove_area).then_some(x)))
}

/// `C_col^power`: adds (or for negative powers removes) cells at the top of
/// a column.
pub fn column_cells(path: &DyckPath, col: usize, pow: i32) -> Result<PathResult> {
    check_range("column", col, path.n())?;
    let mut x = path.offsets.clone();
    Ok(wrap(power(&mut x, col, pow, add_column, remove_column).then_some(x)))
}

/// `A_row`.
pub fn add_area_cell(path: &DyckPath, row: usize) -> Result<PathResult> {
    area_cells(path, row, 1)
}

/// `A_row^{-1}`.
pub fn remove_area_cell(path: &DyckPath, row: usize) -> Result<PathResult> {
    area_cells(path, row, -1)
}

/// `C_col`.
pub fn add_column_cell(path: &DyckPath, col: usize) -> Result<PathResult> {
    column_cells(path, col, 1)
}

/// `C_col^{-1}`.
pub fn remove_column_cell(path: &DyckPath, col: usize) -> Result<PathResult> {
    column_cells(path, col, -1)
}

fn shift_raw(ctx: &PathContext, i: usize) -> Option<Vec<usize>> {
    let b = &ctx.points;
    if ctx.h(b[i - 1]) == b[i] {
        return None;
    }
    let s = ctx.s(i)?;
    if s == 0 {
        return None;
    }
    let mut x = ctx.offsets.clone();
    (repeat(&mut x, s, |x| remove_area(x, b[i])) && repeat(&mut x, s, |x| add_column(x, b[i])))
        .then_some(x)
}

fn unshift_raw(ctx: &PathContext, i: usize) -> Option<Vec<usize>> {
    let c = &ctx.points;
    if i >= ctx.segments() {
        return None;
    }
    let s = ctx.x(c[i] + 1) - c[i - 1];
    let k = c[i] + 1;
    let mut x = ctx.offsets.clone();
    if !(repeat(&mut x, s, |x| remove_column(x, k)) && repeat(&mut x, s, |x| add_area(x, k))) {
        return None;
    }
    let back = PathContext::new(&DyckPath { offsets: x.clone() });
    (back.segments() > i && shift_raw(&back, i).as_deref() == Some(&ctx.offsets[..])).then_some(x)
}

/// `S_i`: trades `s^{(i)}` cells of row `b_i` for cells of column `b_i`,
/// lowering the `i`-th bounce point by one.
pub fn shift(path: &DyckPath, i: usize) -> Result<PathResult> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    Ok(wrap(shift_raw(&ctx, i)))
}

/// `S_i^{-1}`.
pub fn unshift(path: &DyckPath, i: usize) -> Result<PathResult> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    Ok(wrap(unshift_raw(&ctx, i)))
}

/// `B_{i,k}`: raises the bounce by `k` through a run of shifts starting at
/// bounce point `i`.
///
/// With `Δ_j = max(0, α_i - α_j)`, the full blocks `S_{i+j-1}^{Δ_{i+j}}`
/// are applied for as many `j` as `k` can pay for, and the remainder goes to
/// the next block.
pub fn bounce_boost(path: &DyckPath, i: usize, k: usize) -> Result<PathResult> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    Ok(wrap(boost_raw(ctx, i, k)))
}

fn boost_raw(ctx: PathContext, i: usize, k: usize) -> Option<Vec<usize>> {
    let deltas = ctx.deltas(i);
    let mut used = 0;
    let mut blocks = 0;
    while blocks < deltas.len() && used + deltas[blocks] <= k {
        used += deltas[blocks];
        blocks += 1;
    }
    let plan = deltas[..blocks]
        .iter()
        .enumerate()
        .map(|(j, &e)| (i + j, e))
        .chain(std::iter::once((i + blocks, k - used)));

    let mut cur = ctx;
    for (index, times) in plan {
        for _ in 0..times {
            if index > cur.segments() {
                return None;
            }
            let next = shift_raw(&cur, index)?;
            cur = PathContext::new(&DyckPath { offsets: next });
        }
    }
    Some(cur.offsets)
}

fn up_raw(ctx: &PathContext, i: usize) -> Option<Vec<usize>> {
    let b = &ctx.points;
    let m = ctx.segments();
    if ctx.h(b[i - 1]) == b[i] {
        return None;
    }
    let u = ctx.u(i);
    let beta = ctx.beta(i)?;
    let prev = b[i - 1];
    let mut x = ctx.offsets.clone();
    if !remove_column(&mut x, prev + 1) {
        return None;
    }
    for j in 1..=u {
        let col = prev + 1 + j;
        if col > ctx.n || !repeat(&mut x, beta[u - j], |x| remove_column(x, col)) {
            return None;
        }
    }
    for j in 1..=u {
        let row = b[i + 1] - u + j;
        if !repeat(&mut x, beta[j - 1], |x| add_area(x, row)) {
            return None;
        }
    }

    let mut expected = b.clone();
    if i < m {
        expected[i] -= 1;
    } else {
        expected.insert(m, ctx.n - 1);
    }
    let out = DyckPath { offsets: x };
    (out.bounce_path().points == expected).then_some(out.offsets)
}

fn down_raw(ctx: &PathContext, i: usize) -> Option<Vec<usize>> {
    let c = &ctx.points;
    let d = ctx.d(i)?;
    let gamma = ctx.gamma(i)?;
    let prev = c[i - 1];
    let mut x = ctx.offsets.clone();
    for k in (1..=d).rev() {
        let row = c[i + 1] - d + k;
        if !repeat(&mut x, gamma[k - 1], |x| remove_area(x, row)) {
            return None;
        }
    }
    for j in 1..=d {
        let col = prev + d + 2 - j;
        if !repeat(&mut x, gamma[j - 1], |x| add_column(x, col)) {
            return None;
        }
    }
    if !add_column(&mut x, prev + 1) {
        return None;
    }
    let back = PathContext::new(&DyckPath { offsets: x.clone() });
    (i <= back.segments() && up_raw(&back, i).as_deref() == Some(&ctx.offsets[..])).then_some(x)
}

/// `U_i`: lowers the `i`-th bounce point by one, trading one unit of area for
/// one unit of bounce.
pub fn up(path: &DyckPath, i: usize) -> Result<PathResult> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    Ok(wrap(up_raw(&ctx, i)))
}

/// `D_i`: the inverse of `U_i`, raising the `i`-th bounce point by one.
pub fn down(path: &DyckPath, i: usize) -> Result<PathResult> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    Ok(wrap(down_raw(&ctx, i)))
}

/// Starting from a bounce index `i` whose row `b_i + 1` holds exactly
/// `b_i - b_{i-1} - 1` cells, finds `j >= i` with `D_j` defined.
///
/// Returns `Ok(None)` when the hypothesis fails.
pub fn existence_scan_down(path: &DyckPath, i: usize) -> Result<Option<usize>> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    let (b, m, n) = (&ctx.points, ctx.segments(), ctx.n);
    if i >= m || ctx.x(b[i] + 1) != b[i - 1] + 1 {
        return Ok(None);
    }
    let hit = (i..m).find(|&j| b[j] + 2 > n || ctx.h(b[j] + 2) == b[j + 1]);
    Ok(Some(hit.unwrap_or(m - 1)))
}

/// Starting from a bounce index `i` whose column `b_i` reaches height
/// `b_{i+1}`, finds `j <= i` with `U_j` defined.
///
/// Returns `Ok(None)` when the hypothesis fails.
pub fn existence_scan_up(path: &DyckPath, i: usize) -> Result<Option<usize>> {
    let ctx = PathContext::new(path);
    ctx.check_index(i)?;
    let b = &ctx.points;
    if i >= ctx.segments() || ctx.h(b[i]) != b[i + 1] {
        return Ok(None);
    }
    let hit = (1..=i).rev().find(|&j| ctx.h(b[j - 1]) < b[j]);
    Ok(Some(hit.unwrap_or(1)))
}

/// One factor of an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// `A_row^power`
    A { row: usize, power: i32 },
    /// `C_col^power`
    C { col: usize, power: i32 },
    /// `S_i^power`
    S { index: usize, power: i32 },
    /// `U_i^power`; negative powers are powers of `D_i`.
    U { index: usize, power: i32 },
    /// `D_i^power`; negative powers are powers of `U_i`.
    D { index: usize, power: i32 },
    /// `B_{i,k}`
    B { index: usize, k: usize },
}

impl Op {
    pub fn apply(self, path: &DyckPath) -> Result<PathResult> {
        let iterate = |pow: i32, f: fn(&DyckPath, usize) -> Result<PathResult>, g: fn(&DyckPath, usize) -> Result<PathResult>, i: usize| {
            let step = if pow >= 0 { f } else { g };
            let mut cur = PathResult::Path(path.clone());
            for _ in 0..pow.unsigned_abs() {
                cur = match cur {
                    PathResult::Path(p) => step(&p, i)?,
                    PathResult::Bottom => break,
                };
            }
            Ok(cur)
        };
        match self {
            Op::A { row, power } => area_cells(path, row, power),
            Op::C { col, power } => column_cells(path, col, power),
            Op::S { index, power } => iterate(power, shift, unshift, index),
            Op::U { index, power } => iterate(power, up, down, index),
            Op::D { index, power } => iterate(power, down, up, index),
            Op::B { index, k } => bounce_boost(path, index, k),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, index, power) = match *self {
            Op::A { row, power } => ('A', row, power),
            Op::C { col, power } => ('C', col, power),
            Op::S { index, power } => ('S', index, power),
            Op::U { index, power } => ('U', index, power),
            Op::D { index, power } => ('D', index, power),
            Op::B { index, k } => return write!(f, "B{index}:{k}"),
        };
        write!(f, "{name}{index}")?;
        if power != 1 {
            write!(f, "^{power}")?;
        }
        Ok(())
    }
}

impl FromStr for Op {
    type Err = Error;

    /// Parses `A4`, `C3^-1`, `S2^3`, `U1`, `D2`, `B1:2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadOperator(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let name = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str();
        let (body, power) = match rest.split_once('^') {
            Some((body, p)) => (body, p.parse::<i32>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        if name == 'B' {
            let (i, k) = body.split_once(':').ok_or_else(bad)?;
            if power != 1 {
                return Err(bad());
            }
            return Ok(Op::B {
                index: i.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            });
        }
        let index: usize = body.parse().map_err(|_| bad())?;
        Ok(match name {
            'A' => Op::A { row: index, power },
            'C' => Op::C { col: index, power },
            'S' => Op::S { index, power },
            'U' => Op::U { index, power },
            'D' => Op::D { index, power },
            _ => return Err(bad()),
        })
    }
}

/// Parses a comma-separated operator word such as `"S1,U2,A4,C3^-1,B1:2"`.
pub fn parse_ops(word: &str) -> Result<Vec<Op>> {
    word.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Applies operators left to right.
pub fn apply_ops(path: &DyckPath, ops: &[Op]) -> Result<PathResult> {
    let mut cur = PathResult::Path(path.clone());
    for &op in ops {
        cur = cur.apply(op)?;
    }
    Ok(cur)
}
