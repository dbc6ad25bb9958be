//! Subsystem reducibility on the projective line and its arithmetic obstructions.
//!
//! A bundle `⊕ O(a_m)` on `ℙ¹` carries a `(d_A, d_B)` tensor structure exactly
//! when its splitting type is a sumset `{b_i + c_j + t}`; this module searches
//! for such decompositions and evaluates the torsion, degree and moduli
//! predicates that rule structures out.

mod brauer;
mod catalog;

pub use brauer::{
    curve_degree_obstruction, moduli_brauer_order, torsion_admissible, torsion_verdict,
    BrauerClassModel, Provenance, TorsionVerdict,
};
pub use catalog::{example_catalog, CatalogEntry};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tensorstate::SubsystemType;

/// Twist degrees `a_1 ≤ … ≤ a_n` of a bundle on `ℙ¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl SplittingType {
    /// Sorts its input.
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        SplittingType { degrees }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn shifted(&self, k: i64) -> Self {
        SplittingType {
            degrees: self.degrees.iter().map(|a| a + k).collect(),
        }
    }
}

/// `F ⊗ G ⊗ L` with `F = ⊕O(b_i)`, `G = ⊕O(c_j)`, `L = O(t)`, normalized so
/// that `b_1 = c_1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorDecomposition {
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    pub t: i64,
}

impl TensorDecomposition {
    /// The sorted multiset `{b_i + c_j + t}`.
    pub fn recompose(&self) -> SplittingType {
        SplittingType::new(
            self.b
                .iter()
                .flat_map(|bi| self.c.iter().map(move |cj| bi + cj + self.t))
                .collect(),
        )
    }
}

type Multiset = BTreeMap<i64, usize>;

fn take(r: &mut Multiset, x: i64) -> bool {
    match r.get_mut(&x) {
        Some(n) if *n > 1 => {
            *n -= 1;
            true
        }
        Some(_) => {
            r.remove(&x);
            true
        }
        None => false,
    }
}

struct Search {
    d_a: usize,
    d_b: usize,
    first_only: bool,
    found: Vec<(Vec<i64>, Vec<i64>)>,
}

impl Search {
    fn accept(&self, b: &[i64], c: &[i64]) -> bool {
        self.d_a != self.d_b || b <= c
    }

    fn run(&mut self, b: &mut Vec<i64>, c: &mut Vec<i64>, rest: &mut Multiset) -> bool {
        let Some((&x, _)) = rest.iter().next() else {
            if b.len() == self.d_a && c.len() == self.d_b && self.accept(b, c) {
                self.found.push((b.clone(), c.clone()));
                return self.first_only;
            }
            return false;
        };
        // x is the least sum not yet produced, so it pairs a new part with
        // the zero part on the other side
        if b.len() < self.d_a && self.extend(b, c, rest, x, true) {
            return true;
        }
        c.len() < self.d_b && self.extend(b, c, rest, x, false)
    }

    fn extend(&mut self, b: &mut Vec<i64>, c: &mut Vec<i64>, rest: &mut Multiset, x: i64, as_b: bool) -> bool {
        let partners: Vec<i64> = if as_b { c.clone() } else { b.clone() };
        let mut removed = Vec::with_capacity(partners.len());
        let mut ok = true;
        for p in &partners {
            if take(rest, x + p) {
                removed.push(x + p);
            } else {
                ok = false;
                break;
            }
        }
        let mut done = false;
        if ok {
            if as_b {
                b.push(x);
            } else {
                c.push(x);
            }
            done = self.run(b, c, rest);
            if as_b {
                b.pop();
            } else {
                c.pop();
            }
        }
        for v in removed {
            *rest.entry(v).or_default() += 1;
        }
        done
    }
}

type Factors = (Vec<i64>, Vec<i64>);

fn search(a: &SplittingType, d_a: usize, d_b: usize, first_only: bool) -> Result<(i64, Vec<Factors>)> {
    if d_a == 0 || d_b == 0 || a.len() != d_a * d_b {
        return Err(Error::Precondition(format!(
            "splitting type has {} entries but the type ({d_a},{d_b}) needs {}",
            a.len(),
            d_a * d_b
        )));
    }
    let t = a.degrees()[0];
    let mut rest = Multiset::new();
    for &x in a.degrees() {
        *rest.entry(x - t).or_default() += 1;
    }
    take(&mut rest, 0);
    let mut s = Search {
        d_a,
        d_b,
        first_only,
        found: Vec::new(),
    };
    s.run(&mut vec![0], &mut vec![0], &mut rest);
    Ok((t, s.found))
}

/// The first canonical decomposition, or `None` if the type is not a sumset.
pub fn split_decompose(a: &SplittingType, d_a: usize, d_b: usize) -> Result<Option<TensorDecomposition>> {
    let (t, found) = search(a, d_a, d_b, true)?;
    Ok(found.into_iter().next().map(|(b, c)| TensorDecomposition { b, c, t }))
}

/// Every canonical decomposition, in search order.
pub fn split_decompose_all(a: &SplittingType, d_a: usize, d_b: usize) -> Result<Vec<TensorDecomposition>> {
    let (t, found) = search(a, d_a, d_b, false)?;
    Ok(found.into_iter().map(|(b, c)| TensorDecomposition { b, c, t }).collect())
}

/// For four summands: `a_1 + a_4 = a_2 + a_3`.
pub fn split_decompose_2x2(a: &SplittingType) -> Result<bool> {
    let d = a.degrees();
    if d.len() != 4 {
        return Err(Error::Precondition(format!("expected 4 degrees, got {}", d.len())));
    }
    Ok(d[0] + d[3] == d[1] + d[2])
}

/// One part per tensor factor plus a common twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiDecomposition {
    pub parts: Vec<Vec<i64>>,
    pub t: i64,
}

impl MultiDecomposition {
    pub fn recompose(&self) -> SplittingType {
        let mut sums = vec![self.t];
        for part in &self.parts {
            sums = part.iter().flat_map(|p| sums.iter().map(move |s| s + p)).collect();
        }
        SplittingType::new(sums)
    }
}

/// Decomposition for a type with any number of factors: split off `d_1`
/// against the product of the rest, then recurse on the remaining part.
pub fn split_decompose_multi(a: &SplittingType, d: &SubsystemType) -> Result<Option<MultiDecomposition>> {
    if a.len() != d.total() {
        return Err(Error::Precondition(format!(
            "splitting type has {} entries but the type {d} needs {}",
            a.len(),
            d.total()
        )));
    }
    let f = d.factors();
    if f.len() == 1 {
        let t = a.degrees()[0];
        return Ok(Some(MultiDecomposition {
            parts: vec![a.degrees().iter().map(|x| x - t).collect()],
            t,
        }));
    }
    let rest_type = SubsystemType::new(f[1..].to_vec())?;
    let rest_dim = rest_type.total();
    // the d_A = d_B symmetry cut in the bipartite search would drop valid
    // splits here, because the two sides are not interchangeable
    let (t, found) = {
        let (t, mut found) = search(a, f[0], rest_dim, false)?;
        if f[0] == rest_dim {
            let swapped: Vec<_> = found.iter().filter(|(b, c)| b != c).map(|(b, c)| (c.clone(), b.clone())).collect();
            found.extend(swapped);
        }
        (t, found)
    };
    for (b, c) in found {
        if let Some(inner) = split_decompose_multi(&SplittingType::new(c), &rest_type)? {
            let mut parts = vec![b];
            parts.extend(inner.parts);
            return Ok(Some(MultiDecomposition { parts, t: t + inner.t }));
        }
    }
    Ok(None)
}
