//! Exact polynomials: Gaussian binomials, Johnson's q-Bell polynomials, the
//! `g(n)` recursion and the `(q,t)` area/bounce generating matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bijection::enumerate_fn;
use crate::partition::{binomial, Composition};
use crate::path::{enumerate_paths, DyckPath};

/// A polynomial in `q` with big-integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnivariatePolynomial(Vec<BigInt>);

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial(coeffs)
    }

    pub fn zero() -> Self {
        UnivariatePolynomial(Vec::new())
    }

    pub fn one() -> Self {
        UnivariatePolynomial(vec![BigInt::one()])
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        UnivariatePolynomial(c)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        UnivariatePolynomial(c)
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let len = self.0.len().max(rhs.0.len());
        UnivariatePolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        UnivariatePolynomial::new(c)
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let one = c.is_one();
            match k {
                0 => write!(f, "{c}")?,
                1 if one => write!(f, "q")?,
                1 => write!(f, "{c}q")?,
                _ if one => write!(f, "q^{k}")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Rows `0..=m` of the Gaussian binomial triangle, via
/// `[m, k] = [m-1, k-1] + q^k [m-1, k]`.
pub fn q_binomial_rows(m: usize) -> Vec<Vec<UnivariatePolynomial>> {
    let mut rows: Vec<Vec<UnivariatePolynomial>> = vec![vec![UnivariatePolynomial::one()]];
    for r in 1..=m {
        let prev = &rows[r - 1];
        let row = (0..=r)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { UnivariatePolynomial::zero() };
                let right = prev.get(k).map(|p| p.shifted(k)).unwrap_or_default();
                &left + &right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// The Gaussian binomial `[m choose k]_q`; zero when `k > m`.
pub fn q_binomial(m: usize, k: usize) -> UnivariatePolynomial {
    if k > m {
        return UnivariatePolynomial::zero();
    }
    q_binomial_rows(m).swap_remove(m).swap_remove(k)
}

/// `B_0(q), …, B_n(q)` from `B_n(q) = Σ_k [n-1 choose k]_q B_k(q)`.
pub fn bell_polys(n: usize) -> Vec<UnivariatePolynomial> {
    let binoms = q_binomial_rows(n.saturating_sub(1));
    let mut out = vec![UnivariatePolynomial::one()];
    for m in 1..=n {
        let mut acc = UnivariatePolynomial::zero();
        for (k, bk) in out.iter().enumerate() {
            acc = &acc + &(&binoms[m - 1][k] * bk);
        }
        out.push(acc);
    }
    out
}

pub fn bell_poly(n: usize) -> UnivariatePolynomial {
    bell_polys(n).swap_remove(n)
}

/// `(g(m), k_m)` for `m = 0..=n`, where `k_m` is the smallest maximizing first part.
fn g_table(n: usize) -> Vec<(usize, usize)> {
    let mut t = vec![(0, 0)];
    for m in 1..=n {
        let best = (1..=m)
            .map(|k| ((k - 1) * (m - k) + t[m - k].0, k))
            .fold((0, 0), |acc, (v, k)| if v > acc.0 || acc.1 == 0 { (v, k) } else { acc });
        t.push(best);
    }
    t
}

/// `g(n) = max_k (k-1)(n-k) + g(n-k)`, `g(0) = 0`.
pub fn g_value(n: usize) -> usize {
    g_table(n)[n].0
}

/// A composition attaining `g(n)`, taking the smallest first part at each step.
pub fn g_argmax(n: usize) -> Composition {
    let t = g_table(n);
    let mut parts = Vec::new();
    let mut m = n;
    while m > 0 {
        parts.push(t[m].1);
        m -= t[m].1;
    }
    Composition::new(parts).expect("positive parts")
}

/// `d(n) = g(n) + 1`, the number of distinct values of `a + b` on `𝒟(n)`.
pub fn distinct_ab_count(n: usize) -> usize {
    g_value(n) + 1
}

/// Coefficient matrix `c[a][b]` of a polynomial in `q` (area) and `t` (bounce).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariatePolynomial {
    /// Square zero matrix with indices `0..=max_degree`.
    pub fn zero(max_degree: usize) -> Self {
        BivariatePolynomial {
            coeffs: vec![vec![BigInt::zero(); max_degree + 1]; max_degree + 1],
        }
    }

    pub fn from_paths<'a>(max_degree: usize, paths: impl IntoIterator<Item = &'a DyckPath>) -> Self {
        let mut out = Self::zero(max_degree);
        for p in paths {
            out.coeffs[p.area()][p.bounce()] += 1;
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, a: usize, b: usize) -> &BigInt {
        &self.coeffs[a][b]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        BivariatePolynomial {
            coeffs: (0..d)
                .map(|a| (0..d).map(|b| self.coeffs[b][a].clone()).collect())
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Value at `q = t = 1`.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().flatten().sum()
    }

    /// Values of `a + b` carrying a nonzero coefficient.
    pub fn ab_degrees(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.insert(a + b);
                }
            }
        }
        out
    }

    /// The specialization `q = t`.
    pub fn diagonal(&self) -> UnivariatePolynomial {
        let d = self.dim();
        let mut c = vec![BigInt::zero(); 2 * d];
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                c[a + b] += v;
            }
        }
        UnivariatePolynomial::new(c)
    }
}

/// `F_n(q,t) = Σ_{π ∈ 𝒟(n)} q^{a(π)} t^{b(π)}`.
pub fn fqt(n: usize) -> BivariatePolynomial {
    let paths: Vec<DyckPath> = enumerate_paths(n).collect();
    BivariatePolynomial::from_paths(binomial(n, 2) as usize, &paths)
}

/// `G_n(q,t)`: the same sum restricted to `𝒜ℱ_n ∪ ℬℱ_n`.
pub fn gqt(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_paths(binomial(n, 2) as usize, &af_bf_union(n))
}

/// `𝒜ℱ_n ∪ ℬℱ_n`, sorted and deduplicated.
pub fn af_bf_union(n: usize) -> Vec<DyckPath> {
    let set: BTreeSet<DyckPath> = enumerate_fn(n)
        .into_iter()
        .flat_map(|c| [c.area_path(), c.bounce_path()])
        .flatten()
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(2, 1), poly(&[1, 1]));
        assert_eq!(q_binomial(4, 2), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0), poly(&[1]));
        assert_eq!(q_binomial(3, 4), UnivariatePolynomial::zero());
        assert_eq!(q_binomial(4, 2).to_string(), "1 + q + 2q^2 + q^3 + q^4");
    }

    #[test]
    fn bell_small() {
        assert_eq!(bell_poly(0), poly(&[1]));
        assert_eq!(bell_poly(1), poly(&[1]));
        assert_eq!(bell_poly(3), poly(&[4, 1]));
        assert_eq!(bell_poly(3).to_string(), "4 + q");
    }

    #[test]
    fn g_small() {
        assert_eq!(g_value(0), 0);
        assert_eq!(g_value(2), 0);
        assert_eq!(g_value(4), 2);
        assert_eq!(g_argmax(4).parts(), &[2, 1, 1]);
        let d: Vec<usize> = (0..20).map(distinct_ab_count).collect();
        assert_eq!(
            d,
            [1, 1, 1, 2, 3, 5, 8, 11, 15, 20, 26, 32, 39, 47, 56, 66, 76, 87, 99, 112]
        );
    }

    #[test]
    fn fqt_two() {
        let f = fqt(2);
        assert_eq!(f.dim(), 2);
        assert_eq!(*f.coeff(1, 0), BigInt::one());
        assert_eq!(*f.coeff(0, 1), BigInt::one());
        assert_eq!(*f.coeff(0, 0), BigInt::zero());
        assert_eq!(f.total(), BigInt::from(2));
    }
}
