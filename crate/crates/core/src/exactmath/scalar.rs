//! Text and JSON forms of exact scalars and matrices.
//!
//! - rationals: `"p/q"` (or `"p"` for integers)
//! - cyclotomic numbers: `{"conductor": m, "coeffs": ["p/q", ...]}`
//! - scalar strings: `"1/2 - 3*zeta(8)^5"`, also used on the command line
//! - matrices: a JSON grid of scalar strings

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CycNum, ExactMatrix, Rational};
use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

fn split_terms(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        let binary_sign = (ch == '+' || ch == '-')
            && !cur.is_empty()
            && !matches!(prev, Some('^') | Some('(') | Some('*') | Some('/'));
        if binary_sign {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    terms
}

/// Parses `zeta(m)` or `zeta(m)^k`.
pub fn parse_root_of_unity(s: &str) -> Result<CycNum> {
    let bad = || Error::Parse(format!("invalid root of unity {s:?}; expected zeta(m)^k"));
    let rest = s.trim().strip_prefix("zeta(").ok_or_else(bad)?;
    let (m, rest) = rest.split_once(')').ok_or_else(bad)?;
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    if m == 0 {
        return Err(bad());
    }
    let k: i64 = match rest.trim() {
        "" => 1,
        e => e.strip_prefix('^').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?,
    };
    Ok(CycNum::root_of_unity(m, k))
}

fn parse_term(term: &str) -> Result<CycNum> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(b) => (-1, b),
        None => (1, term.strip_prefix('+').unwrap_or(term)),
    };
    let value = if let Some(pos) = body.find("zeta(") {
        let coeff = body[..pos].trim_end_matches('*');
        let root = parse_root_of_unity(&body[pos..])?;
        if coeff.is_empty() {
            root
        } else {
            root.scale(&parse_rational(coeff)?)
        }
    } else {
        CycNum::from_rational(parse_rational(body)?)
    };
    Ok(if sign < 0 { -value } else { value })
}

impl FromStr for CycNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = split_terms(s);
        if terms.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut acc = CycNum::zero(1);
        for t in terms {
            acc = acc + parse_term(&t)?;
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumRepr {
            conductor: self.conductor(),
            coeffs: self.coeffs().iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycNumRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(CycNum::from_coeffs(repr.conductor, &coeffs))
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let grid: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        grid.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let grid = Vec::<Vec<String>>::deserialize(d)?;
        let rows = grid
            .iter()
            .map(|row| row.iter().map(|e| e.parse()).collect::<Result<Vec<CycNum>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        ExactMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

/// Serializes a rational as its `"p/q"` string.
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

/// Big integers go out as JSON numbers while they fit in an `i64`, and as
/// decimal strings beyond that.
pub fn serialize_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(n) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

pub fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    struct One<'a>(&'a BigInt);
    impl Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            serialize_bigint(self.0, s)
        }
    }
    s.collect_seq(v.iter().map(One))
}

/// Any displayable value as a JSON string; used for scalars in reports.
pub fn serialize_display<T: std::fmt::Display, S: Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

pub fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_string))
}
