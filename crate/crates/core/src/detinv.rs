//! Numerical invariants of the Schmidt-rank loci `R_{≤r} ⊂ ℙ(k^{d_A} ⊗ k^{d_B})`.
//!
//! Everything here is integer combinatorics: dimensions and codimensions are
//! closed forms, degrees are a product of factorial quotients, and the
//! Hilbert function is a sum of products of Schur-functor dimensions over
//! partitions with at most `r` parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::tensorstate::SubsystemType;

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }
}

/// All partitions of `t` with at most `max_parts` parts, in lexicographically
/// decreasing order.
pub fn partitions(t: u32, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(t, t, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Dimension, codimension and degree of `R_{≤r}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankLocusProfile {
    pub d_a: u32,
    pub d_b: u32,
    pub r: u32,
    pub dim: i64,
    pub codim: i64,
    pub n_r: i64,
    #[serde(serialize_with = "crate::exactmath::scalar::serialize_bigint")]
    pub degree: BigInt,
}

fn check_rank(d_a: u32, d_b: u32, r: u32) -> Result<()> {
    if d_a == 0 || d_b == 0 {
        return Err(Error::Precondition("local dimensions must be positive".into()));
    }
    if r == 0 || r > d_a.min(d_b) {
        return Err(Error::Precondition(format!(
            "rank bound must satisfy 1 <= r <= min(d_A, d_B) = {}, got {r}",
            d_a.min(d_b)
        )));
    }
    Ok(())
}

pub fn rank_locus_profile(d_a: u32, d_b: u32, r: u32) -> Result<RankLocusProfile> {
    check_rank(d_a, d_b, r)?;
    let (a, b, rr) = (d_a as i64, d_b as i64, r as i64);
    let dim = rr * (a + b - rr) - 1;
    let codim = (a - rr) * (b - rr);
    debug_assert_eq!(dim + codim, a * b - 1);
    Ok(RankLocusProfile {
        d_a,
        d_b,
        r,
        dim,
        codim,
        n_r: dim,
        degree: degree_rank_locus(d_a, d_b, r)?,
    })
}

fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `∏_{i=0}^{d_A−r−1} (d_B+i)!·i! / ((r+i)!·(d_B−r+i)!)` with `d_A ≤ d_B`.
pub fn degree_rank_locus(d_a: u32, d_b: u32, r: u32) -> Result<BigInt> {
    check_rank(d_a, d_b, r)?;
    let (a, b) = if d_a <= d_b { (d_a, d_b) } else { (d_b, d_a) };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..a - r {
        num *= factorial(b + i) * factorial(i);
        den *= factorial(r + i) * factorial(b - r + i);
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
    }
    debug_assert!(den.is_one());
    Ok(num / den)
}

/// `dim S_λ(k^d)` by the hook-content formula; zero when `ℓ(λ) > d`.
pub fn schur_dim(lambda: &Partition, d: u32) -> BigInt {
    if lambda.len() > d as usize {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = d as i64 + j as i64 - i as i64;
            let arm = row as usize - j - 1;
            let leg = conj.parts()[j] as usize - i - 1;
            num *= content;
            den *= (arm + leg + 1) as i64;
        }
    }
    num / den
}

/// Graded dimensions `dim (S/I_{r+1})_t` for `t = 0..=t_max`.
pub fn hilbert_series_coeffs(d_a: u32, d_b: u32, r: u32, t_max: u32) -> Vec<BigInt> {
    (0..=t_max)
        .map(|t| {
            partitions(t, r as usize)
                .iter()
                .map(|l| schur_dim(l, d_a) * schur_dim(l, d_b))
                .sum()
        })
        .collect()
}

/// Coefficients (ascending in `t`) of the polynomial through
/// `(t0, values[0]), (t0+1, values[1]), …`.
fn interpolate(t0: i64, values: &[BigInt]) -> Vec<Rational> {
    // forward differences at t0, then expand Σ Δ^k·binom(t − t0, k)
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut out = vec![Rational::zero(); values.len().max(1)];
    // basis polynomial binom(t − t0, k) built incrementally
    let mut basis = vec![Rational::one()];
    for (k, delta) in leading.iter().enumerate() {
        let c = Rational::from_integer(delta.clone());
        for (i, b) in basis.iter().enumerate() {
            out[i] += &c * b;
        }
        // basis *= (t − t0 − k) / (k + 1)
        let shift = Rational::from_integer(BigInt::from(-(t0 + k as i64)));
        let inv = Rational::new(BigInt::one(), BigInt::from(k as i64 + 1));
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b * &inv;
            next[i] += b * &shift * &inv;
        }
        basis = next;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn eval_poly(coeffs: &[Rational], t: i64) -> Rational {
    let x = Rational::from_integer(BigInt::from(t));
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
}

/// Start of the interpolation window.
const WINDOW_START: i64 = 0;

/// The Hilbert polynomial of `R_{≤r}`, ascending coefficients.
///
/// Interpolates on `[T₀, T₀+dim]` and re-checks on the window shifted by
/// `dim + 1`; a mismatch means the Hilbert function has not yet become
/// polynomial there.
pub fn hilbert_polynomial(d_a: u32, d_b: u32, r: u32) -> Result<Vec<Rational>> {
    let profile = rank_locus_profile(d_a, d_b, r)?;
    let dim = profile.dim;
    let span = (dim + 1) as u32;
    let t_max = (WINDOW_START as u32) + 2 * span;
    let series = hilbert_series_coeffs(d_a, d_b, r, t_max);
    let lo = WINDOW_START as usize;
    let poly = interpolate(WINDOW_START, &series[lo..lo + span as usize]);
    for t in lo + span as usize..=t_max as usize {
        if eval_poly(&poly, t as i64) != Rational::from_integer(series[t].clone()) {
            return Err(Error::HilbertNotPolynomial { start: WINDOW_START as usize });
        }
    }
    if poly.len() as i64 != dim + 1 {
        return Err(Error::HilbertNotPolynomial { start: WINDOW_START as usize });
    }
    Ok(poly)
}

/// Profile, series and polynomial together.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertData {
    pub profile: RankLocusProfile,
    #[serde(serialize_with = "crate::exactmath::scalar::serialize_bigints")]
    pub series_coeffs: Vec<BigInt>,
    #[serde(serialize_with = "crate::exactmath::scalar::serialize_rationals")]
    pub polynomial: Vec<Rational>,
}

pub fn hilbert_data(d_a: u32, d_b: u32, r: u32, t_max: u32) -> Result<HilbertData> {
    Ok(HilbertData {
        profile: rank_locus_profile(d_a, d_b, r)?,
        series_coeffs: hilbert_series_coeffs(d_a, d_b, r, t_max),
        polynomial: hilbert_polynomial(d_a, d_b, r)?,
    })
}

/// `(dim)! · leading coefficient`, which must equal the degree.
pub fn normalized_leading(poly: &[Rational]) -> Rational {
    let n = poly.len() as u32 - 1;
    poly.last().cloned().unwrap_or_else(Rational::zero) * Rational::from_integer(factorial(n))
}

/// The incidence resolution `ℙ(U_A ⊠ U_B) → Gr(r, d_A) × Gr(r, d_B)` has the
/// same dimension as `R_{≤r}`.
pub fn incidence_dimension_identity(d_a: u32, d_b: u32, r: u32) -> Result<bool> {
    let p = rank_locus_profile(d_a, d_b, r)?;
    let (a, b, r) = (d_a as i64, d_b as i64, r as i64);
    Ok(r * (a - r) + r * (b - r) + (r * r - 1) == p.dim)
}

/// `dim PGL_n / G_d = n² − Σ d_i² + (s − 1)`.
pub fn moduli_dimension(d: &SubsystemType) -> i64 {
    let n = d.total() as i64;
    let sq: i64 = d.factors().iter().map(|&x| (x * x) as i64).sum();
    n * n - sq + (d.len() as i64 - 1)
}

/// Determinant of the symmetric matrix of a quaternary quadric.
///
/// Coefficients are ordered `x0², x0x1, x0x2, x0x3, x1², x1x2, x1x3, x2², x2x3, x3²`.
pub fn quadric_discriminant(q: &[Rational; 10]) -> Rational {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut m = vec![vec![Rational::zero(); 4]; 4];
    let mut k = 0;
    for i in 0..4 {
        for j in i..4 {
            if i == j {
                m[i][i] = q[k].clone();
            } else {
                m[i][j] = &q[k] * &half;
                m[j][i] = m[i][j].clone();
            }
            k += 1;
        }
    }
    det_rational(m)
}

fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            let f = &m[r][c] / &pivot;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = &f * &m[c][j];
                m[r][j] -= v;
            }
        }
    }
    det
}
