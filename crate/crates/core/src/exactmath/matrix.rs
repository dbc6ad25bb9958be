//! Dense matrices over a single cyclotomic field.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use super::{CycNum, Rational};
use crate::error::{Error, Result};

/// A dense row-major matrix whose entries all live in ℚ(ζ_m) for one `m`.
///
/// Equality is by value: matrices stored over different conductors compare
/// equal when their entries coincide in a common field.
#[derive(Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    entries: Vec<CycNum>,
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for ExactMatrix {}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::zeros_in(rows, cols, 1)
    }

    pub fn zeros_in(rows: usize, cols: usize, conductor: u32) -> Self {
        ExactMatrix {
            rows,
            cols,
            conductor,
            entries: vec![CycNum::zero(conductor); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &CycNum::one())
    }

    /// `λ·I_n`.
    pub fn scalar(n: usize, lambda: &CycNum) -> Self {
        let mut m = Self::zeros_in(n, n, lambda.conductor());
        for i in 0..n {
            m.entries[i * n + i] = lambda.clone();
        }
        m
    }

    pub fn diag(values: &[CycNum]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                CycNum::zero(1)
            }
        })
    }

    /// Builds a matrix from a closure; conductors are unified to their lcm.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::from_entries(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self::from_entries(r, c, rows.into_iter().flatten().collect()))
    }

    /// Convenience for rational matrices.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| CycNum::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular rows")
    }

    fn from_entries(rows: usize, cols: usize, entries: Vec<CycNum>) -> Self {
        let conductor = CycNum::common_conductor(&entries);
        let entries = entries
            .into_iter()
            .map(|e| e.embed(conductor).expect("lcm conductor"))
            .collect();
        ExactMatrix {
            rows,
            cols,
            conductor,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: CycNum) {
        if value.conductor() != self.conductor && !self.conductor.is_multiple_of(value.conductor()) {
            let l = self.conductor.lcm(&value.conductor());
            *self = self.embed(l).expect("lcm conductor");
        }
        self.entries[i * self.cols + j] = value.embed(self.conductor).expect("divides");
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Re-expresses every entry in ℚ(ζ_target).
    pub fn embed(&self, target: u32) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: target,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            conductor: self.conductor,
            entries,
        }
    }

    /// Conjugate transpose, with conjugation ζ ↦ ζ^{-1}.
    pub fn adjoint(&self) -> Self {
        let t = self.transpose();
        ExactMatrix {
            entries: t.entries.iter().map(CycNum::conj).collect(),
            ..t
        }
    }

    pub fn scale(&self, lambda: &CycNum) -> Self {
        Self::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * lambda).collect(),
        )
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(Self::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(Self::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        ))
    }

    fn same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let l = self.conductor.lcm(&other.conductor);
        let a = self.embed(l)?;
        let b = other.embed(l)?;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..a.rows {
            for j in 0..b.cols {
                let mut acc = CycNum::zero(l);
                for k in 0..a.cols {
                    let x = a.get(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    let y = b.get(k, j);
                    if !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix {
            rows: a.rows,
            cols: b.cols,
            conductor: l,
            entries,
        })
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[CycNum]) -> Result<Vec<CycNum>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "apply: {} columns, vector of length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(CycNum::zero(self.conductor), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of non-square matrix".into()));
        }
        let mut acc = Self::identity(self.rows).embed(self.conductor)?;
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Row echelon form by Gaussian elimination. Pivots are the first nonzero
    /// entry found scanning columns left to right, rows top to bottom.
    /// Returns the echelon matrix and its pivot columns.
    pub fn row_echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for i in r + 1..m.rows {
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                let f = f * &inv;
                for j in c..m.cols {
                    let delta = &f * m.get(r, j);
                    if !delta.is_zero() {
                        let v = m.get(i, j) - &delta;
                        m.entries[i * m.cols + j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    pub fn determinant(&self) -> Result<CycNum> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = CycNum::from_rational_in(Rational::from_integer(1.into()), self.conductor);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(CycNum::zero(self.conductor));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                let f = f * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.entries[i * n + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n).embed(self.conductor)?;
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pinv = a.get(c, c).inv()?;
            for j in 0..n {
                a.entries[c * n + j] = a.get(c, j) * &pinv;
                inv.entries[c * n + j] = inv.get(c, j) * &pinv;
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let va = a.get(i, j) - &(&f * a.get(c, j));
                    let vi = inv.get(i, j) - &(&f * inv.get(c, j));
                    a.entries[i * n + j] = va;
                    inv.entries[i * n + j] = vi;
                }
            }
        }
        Ok(inv)
    }

    /// The scalar `λ` if this matrix equals `λ·I`.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let lambda = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                let ok = if i == j { *e == lambda } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Returns `λ` with `self = λ·other` when the two are proportional.
    pub fn projective_equal(&self, other: &Self) -> Result<Option<CycNum>> {
        self.same_shape(other, "projective_equal")?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        let k = other
            .entries
            .iter()
            .position(|e| !e.is_zero())
            .expect("nonzero");
        let lambda = self.entries[k].checked_div(&other.entries[k])?;
        if lambda.is_zero() {
            return Ok(None);
        }
        let proportional = self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| *a == b * &lambda);
        Ok(proportional.then_some(lambda))
    }

    /// Characteristic polynomial `det(tI - A)` by Faddeev–LeVerrier,
    /// coefficients in ascending order (monic, length n + 1).
    pub fn char_poly(&self) -> Result<Vec<CycNum>> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("char_poly of non-square matrix".into()));
        }
        let n = self.rows;
        let m = self.conductor;
        let mut coeffs = vec![CycNum::zero(m); n + 1];
        coeffs[n] = CycNum::from_rational_in(Rational::from_integer(1.into()), m);
        let mut mk = Self::zeros_in(n, n, m);
        let ident = Self::identity(n).embed(m)?;
        for k in 1..=n {
            mk = self
                .checked_mul(&mk)?
                .checked_add(&ident.scale(&coeffs[n + 1 - k]))?;
            let am = self.checked_mul(&mk)?;
            let trace = (0..n).fold(CycNum::zero(m), |acc, i| acc + am.get(i, i));
            let c = trace.scale(&Rational::new((-1).into(), (k as i64).into()));
            coeffs[n - k] = c;
        }
        Ok(coeffs)
    }
}

/// Kronecker product with row-major index convention `(a, b) ↦ a·rows(B) + b`.
pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let l = a.conductor.lcm(&b.conductor);
    let (a, b) = (a.embed(l).unwrap(), b.embed(l).unwrap());
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut entries = Vec::with_capacity(rows * cols);
    for ia in 0..a.rows {
        for ib in 0..b.rows {
            for ja in 0..a.cols {
                let x = a.get(ia, ja);
                for jb in 0..b.cols {
                    entries.push(if x.is_zero() {
                        CycNum::zero(l)
                    } else {
                        x * b.get(ib, jb)
                    });
                }
            }
        }
    }
    ExactMatrix {
        rows,
        cols,
        conductor: l,
        entries,
    }
}

/// Solves `Σ λ_k basis[k] = target` for rational `λ`, if a solution exists.
pub(crate) fn solve_in_basis(basis: &[CycNum], target: &CycNum) -> Option<Vec<Rational>> {
    let dim = target.coeffs().len();
    let k = basis.len();
    // augmented system: dim equations, k unknowns
    let mut sys: Vec<Vec<Rational>> = (0..dim)
        .map(|row| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b.coeffs()[row].clone()).collect();
            r.push(target.coeffs()[row].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..dim).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        sys.swap(r, p);
        let inv = sys[r][c].recip();
        for x in sys[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..dim {
            if i != r && !sys[i][c].is_zero() {
                let f = sys[i][c].clone();
                for j in 0..=k {
                    let d = &f * &sys[r][j];
                    sys[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if sys[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = sys[i][k].clone();
    }
    Some(sol)
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} (conductor {}) [", self.rows, self.cols, self.conductor)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
