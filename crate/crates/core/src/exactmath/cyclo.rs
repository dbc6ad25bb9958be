//! Cyclotomic fields ℚ(ζ_m) in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
//!
//! A [`CycNum`] is a coefficient vector fully reduced modulo Φ_m, so equality
//! within one conductor is a vector compare. Binary operations on mismatched
//! conductors embed both operands into the field of the lcm first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{self, cyclotomic_polynomial, euler_phi};
use super::Rational;
use crate::error::{Error, Result};

/// The field ℚ(ζ_m) for a fixed conductor `m`.
#[derive(Debug)]
pub struct CycField {
    conductor: u32,
    minimal_polynomial: Vec<num_bigint::BigInt>,
    modulus: Vec<Rational>,
    // powers[k] = ζ^k reduced, for k < max(m, 2φ(m) - 1)
    powers: Vec<Vec<Rational>>,
}

impl CycField {
    /// Shared handle to ℚ(ζ_m). Fields are built once per conductor.
    pub fn get(conductor: u32) -> Arc<CycField> {
        assert!(conductor >= 1, "conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&conductor) {
            return f.clone();
        }
        let field = Arc::new(Self::build(conductor));
        cache
            .lock()
            .unwrap()
            .entry(conductor)
            .or_insert(field)
            .clone()
    }

    fn build(conductor: u32) -> Self {
        let minimal_polynomial = cyclotomic_polynomial(conductor);
        let modulus: Vec<Rational> = minimal_polynomial
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let deg = modulus.len() - 1;
        let count = (conductor as usize).max(2 * deg);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); deg];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x: shift up, then fold x^deg = -Σ modulus[j] x^j
            let top = cur[deg - 1].clone();
            for j in (1..deg).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = Rational::zero();
            if !top.is_zero() {
                for j in 0..deg {
                    cur[j] -= &top * &modulus[j];
                }
            }
        }
        CycField {
            conductor,
            minimal_polynomial,
            modulus,
            powers,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(m), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[num_bigint::BigInt] {
        &self.minimal_polynomial
    }

    fn reduce(&self, raw: &[Rational]) -> Vec<Rational> {
        let deg = self.degree();
        let mut out = vec![Rational::zero(); deg];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                    if !p.is_zero() {
                        *o += c * p;
                    }
                }
            }
        }
        out
    }
}

/// An element of a cyclotomic field.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero(conductor: u32) -> Self {
        let field = CycField::get(conductor);
        let coeffs = vec![Rational::zero(); field.degree()];
        CycNum { field, coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_rational_in(q, 1)
    }

    pub fn from_rational_in(q: Rational, conductor: u32) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// The primitive root ζ_m = e^{2πi/m}.
    pub fn zeta(m: u32) -> Self {
        Self::root_of_unity(m, 1)
    }

    /// ζ_m^k for any integer `k` (reduced mod m).
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        let field = CycField::get(m);
        let e = k.rem_euclid(m as i64) as usize;
        let coeffs = field.powers[e].clone();
        CycNum { field, coeffs }
    }

    /// Builds `Σ coeffs[j] ζ_m^j`, reducing if more than φ(m) coefficients are given.
    pub fn from_coeffs(conductor: u32, coeffs: &[Rational]) -> Self {
        let field = CycField::get(conductor);
        let coeffs = field.reduce(coeffs);
        CycNum { field, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this number lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under ζ_m ↦ ζ_M^{M/m}.
    pub fn embed(&self, target: u32) -> Result<CycNum> {
        let m = self.conductor();
        if target == m {
            return Ok(self.clone());
        }
        if target == 0 || !target.is_multiple_of(m) {
            return Err(Error::IncompatibleConductors { from: m, to: target });
        }
        let step = (target / m) as usize;
        let field = CycField::get(target);
        let mut raw = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        let coeffs = field.reduce(&raw);
        Ok(CycNum { field, coeffs })
    }

    fn unify(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        let (ma, mb) = (a.conductor(), b.conductor());
        if ma == mb {
            return (a.clone(), b.clone());
        }
        let l = ma.lcm(&mb);
        (a.embed(l).unwrap(), b.embed(l).unwrap())
    }

    /// Common conductor of a collection (lcm of all conductors).
    pub fn common_conductor<'a>(items: impl IntoIterator<Item = &'a CycNum>) -> u32 {
        items
            .into_iter()
            .fold(1u32, |acc, x| acc.lcm(&x.conductor()))
    }

    fn zip_with(&self, other: &CycNum, f: impl Fn(&Rational, &Rational) -> Rational) -> CycNum {
        if self.conductor() == other.conductor() {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| f(x, y))
                .collect();
            return CycNum {
                field: self.field.clone(),
                coeffs,
            };
        }
        let (a, b) = Self::unify(self, other);
        a.zip_with(&b, f)
    }

    fn mul_same(&self, other: &CycNum) -> CycNum {
        let deg = self.field.degree();
        let mut raw = vec![Rational::zero(); 2 * deg - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CycNum {
            field: self.field.clone(),
            coeffs: self.field.reduce(&raw),
        }
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = poly::inverse_mod(&self.coeffs, &self.field.modulus)
            .expect("Φ_m is irreducible, so nonzero elements are units");
        Ok(CycNum {
            field: self.field.clone(),
            coeffs: self.field.reduce(&inv),
        })
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::from_rational_in(Rational::one(), self.conductor());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> CycNum {
        let m = self.conductor() as usize;
        let mut raw = vec![Rational::zero(); m.max(1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(m - j) % m] += c;
        }
        CycNum {
            field: self.field.clone(),
            coeffs: self.field.reduce(&raw),
        }
    }

    /// Multiplicative order if this is a root of unity.
    ///
    /// Roots of unity in ℚ(ζ_m) have order dividing lcm(2, m).
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = self.conductor().lcm(&2);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return if bound.is_multiple_of(k) { Some(k) } else { None };
            }
            acc = &acc * self;
        }
        None
    }

    /// Lowers the representation to the smallest conductor dividing the
    /// current one that still contains this value.
    pub fn minimal_conductor(&self) -> CycNum {
        let m = self.conductor();
        for d in poly::divisors(m) {
            if d == m {
                break;
            }
            // ℚ(ζ_d) ⊂ ℚ(ζ_m); test membership by solving in the power basis
            if let Some(lowered) = self.try_lower(d) {
                return lowered;
            }
        }
        self.clone()
    }

    fn try_lower(&self, d: u32) -> Option<CycNum> {
        // Elements of ℚ(ζ_d) embed as combinations of ζ_m^{k m/d}, k < φ(d).
        // Greedy elimination against the embedded basis.
        let deg_d = euler_phi(d);
        let basis: Vec<CycNum> = (0..deg_d)
            .map(|k| CycNum::root_of_unity(d, k as i64).embed(self.conductor()).unwrap())
            .collect();
        let solution = super::matrix::solve_in_basis(&basis, self)?;
        Some(CycNum::from_coeffs(d, &solution))
    }

    fn fmt_terms(&self) -> String {
        let m = self.conductor();
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if k == 0 {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&format!("zeta({m})^{k}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_terms())
    }
}

/// Scalar string syntax: a sum of terms `q` or `q*zeta(m)^k`, e.g.
/// `1/2 - zeta(8)^3`. Parsed back by [`CycNum::from_str`](std::str::FromStr).
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_terms())
    }
}

impl From<Rational> for CycNum {
    fn from(q: Rational) -> Self {
        CycNum::from_rational(q)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_int(n)
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.conductor() == rhs.conductor() {
            return self.mul_same(rhs);
        }
        if self.conductor() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = CycNum::unify(self, rhs);
        a.mul_same(&b)
    }
}

/// Panics on division by zero; use [`CycNum::checked_div`] otherwise.
impl Div for &CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum { (&self).$m(&rhs) }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}
