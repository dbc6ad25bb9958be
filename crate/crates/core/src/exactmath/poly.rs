//! Dense univariate polynomials in ascending-degree order.
//!
//! Only what the cyclotomic layer needs: integer long division by monic
//! divisors, and the extended Euclidean algorithm over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub(crate) fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// Exact quotient of `num` by a monic `den`. Panics if the division leaves a
/// remainder, which for cyclotomic factors of `x^m - 1` cannot happen.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    if rem.len() <= dn {
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// The `m`-th cyclotomic polynomial Φ_m as integer coefficients, constant
/// term first. Computed as `(x^m - 1) / ∏_{d | m, d < m} Φ_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::from(-1);
    p[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d < m {
            p = div_exact_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub(crate) fn rem_rational(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dn = den.len() - 1;
    let lead = &den[dn];
    while rem.len() > dn && !rem.is_empty() {
        let k = rem.len() - 1 - dn;
        let c = rem.last().unwrap() / lead;
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        trim(&mut rem);
    }
    rem
}

fn divrem_rational(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dn = den.len() - 1;
    let lead = &den[dn];
    if rem.len() <= dn {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dn];
    while rem.len() > dn {
        let k = rem.len() - 1 - dn;
        let c = rem.last().unwrap() / lead;
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn mul_rational(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn sub_rational(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `modulus`, if `gcd(a, modulus) = 1`.
pub(crate) fn inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    // invariant: s_i * a ≡ r_i (mod modulus)
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem_rational(&r0, &r1);
        let s = sub_rational(&s0, &mul_rational(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Vec<Rational> = s0.iter().map(|x| x / &c).collect();
    inv = rem_rational(&inv, modulus);
    Some(inv)
}
