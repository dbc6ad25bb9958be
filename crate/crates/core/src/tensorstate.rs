//! Mixed-radix tensor indexing, states, bipartite flattenings and Schmidt rank.
//!
//! Flat indices are least-significant-first: for digits `(a_1, …, a_s)` the
//! joint index is `a_1 + d_1·a_2 + d_1·d_2·a_3 + …`, so `r = a + p·b` for two
//! factors and `r = a + 2b + 4c` for three qubits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{CycNum, ExactMatrix};

/// Ordered factor dimensions `(d_1, …, d_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SubsystemType {
    factors: Vec<usize>,
}

impl SubsystemType {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::Precondition(format!(
                "subsystem type needs at least one factor, all >= 1 (got {factors:?})"
            )));
        }
        Ok(SubsystemType { factors })
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total dimension `n = ∏ d_i`.
    pub fn total(&self) -> usize {
        self.factors.iter().product()
    }

    /// At least two factors exceed 1, i.e. the product-state locus is proper.
    pub fn is_proper(&self) -> bool {
        self.factors.iter().filter(|&&d| d > 1).count() >= 2
    }

    /// `lcm(d_1, …, d_s)`.
    pub fn lcm(&self) -> u64 {
        use num_integer::Integer;
        self.factors.iter().fold(1u64, |acc, &d| acc.lcm(&(d as u64)))
    }

    /// Joint index of per-factor digits.
    pub fn encode(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.factors.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} digits for {} factors",
                digits.len(),
                self.factors.len()
            )));
        }
        let mut r = 0;
        let mut stride = 1;
        for (i, (&a, &d)) in digits.iter().zip(&self.factors).enumerate() {
            if a >= d {
                return Err(Error::DigitOutOfRange {
                    factor: i,
                    digit: a,
                    dim: d,
                });
            }
            r += a * stride;
            stride *= d;
        }
        Ok(r)
    }

    /// Per-factor digits of a joint index.
    pub fn decode(&self, mut r: usize) -> Result<Vec<usize>> {
        if r >= self.total() {
            return Err(Error::Precondition(format!(
                "index {r} out of range for dimension {}",
                self.total()
            )));
        }
        Ok(self
            .factors
            .iter()
            .map(|&d| {
                let a = r % d;
                r /= d;
                a
            })
            .collect())
    }

    /// Type obtained by keeping the listed factors in the given order.
    pub fn select(&self, idx: &[usize]) -> SubsystemType {
        SubsystemType {
            factors: idx.iter().map(|&i| self.factors[i]).collect(),
        }
    }

    /// All single-factor-versus-rest cuts.
    pub fn single_factor_cuts(&self) -> Vec<Bipartition> {
        let s = self.len();
        if s < 2 {
            return vec![];
        }
        (0..s)
            .map(|i| Bipartition::new(vec![i], s).expect("valid cut"))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for SubsystemType {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        SubsystemType::new(v)
    }
}

impl From<SubsystemType> for Vec<usize> {
    fn from(t: SubsystemType) -> Self {
        t.factors
    }
}

impl std::fmt::Display for SubsystemType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A split of the factor indices `0..s` into two nonempty sides.
/// Sides need not be contiguous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Bipartition {
    /// `side_a` lists zero-based factor indices; side B is the complement in `0..s`.
    pub fn new(mut side_a: Vec<usize>, s: usize) -> Result<Self> {
        side_a.sort_unstable();
        side_a.dedup();
        if side_a.iter().any(|&i| i >= s) {
            return Err(Error::InvalidBipartition(format!(
                "factor index out of range for {s} factors: {side_a:?}"
            )));
        }
        let side_b: Vec<usize> = (0..s).filter(|i| !side_a.contains(i)).collect();
        if side_a.is_empty() || side_b.is_empty() {
            return Err(Error::InvalidBipartition("both sides must be nonempty".into()));
        }
        Ok(Bipartition { side_a, side_b })
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
        }
    }

    fn check(&self, d: &SubsystemType) -> Result<()> {
        if self.side_a.len() + self.side_b.len() != d.len() {
            return Err(Error::InvalidBipartition(format!(
                "cut covers {} factors, type has {}",
                self.side_a.len() + self.side_b.len(),
                d.len()
            )));
        }
        Ok(())
    }
}

/// An unnormalized representative of a ray in `ℂ^n`.
///
/// Serializes as a JSON array of scalar strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    amplitudes: Vec<CycNum>,
}

impl Serialize for StateVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.amplitudes.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for StateVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let amplitudes = raw
            .iter()
            .map(|x| x.parse::<CycNum>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(StateVector { amplitudes })
    }
}

impl StateVector {
    pub fn new(amplitudes: Vec<CycNum>) -> Self {
        StateVector { amplitudes }
    }

    /// Basis vector `|r⟩` of dimension `n`.
    pub fn basis(n: usize, r: usize) -> Self {
        let mut amplitudes = vec![CycNum::zero(1); n];
        amplitudes[r] = CycNum::one();
        StateVector { amplitudes }
    }

    /// Sum of basis vectors with unit coefficients, e.g. `|0⟩ + |7⟩`.
    pub fn sum_of_basis(n: usize, indices: &[usize]) -> Self {
        let mut amplitudes = vec![CycNum::zero(1); n];
        for &r in indices {
            amplitudes[r] = &amplitudes[r] + &CycNum::one();
        }
        StateVector { amplitudes }
    }

    /// Tensor product of per-factor vectors, laid out by the index codec.
    pub fn product(factors: &[Vec<CycNum>]) -> Self {
        let mut amplitudes = vec![CycNum::one()];
        // the first factor is least significant, so it varies fastest
        for f in factors {
            let mut next = Vec::with_capacity(amplitudes.len() * f.len());
            for x in f {
                for a in &amplitudes {
                    next.push(a * x);
                }
            }
            amplitudes = next;
        }
        StateVector { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[CycNum] {
        &self.amplitudes
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(CycNum::is_zero)
    }

    pub fn apply(&self, g: &ExactMatrix) -> Result<StateVector> {
        Ok(StateVector::new(g.apply(&self.amplitudes)?))
    }

    /// `λ` with `self = λ·other`, if the two represent the same ray.
    pub fn proportional_to(&self, other: &StateVector) -> Option<CycNum> {
        if self.dim() != other.dim() {
            return None;
        }
        let col = |v: &StateVector| {
            ExactMatrix::from_rows(v.amplitudes.iter().map(|a| vec![a.clone()]).collect())
                .expect("column")
        };
        col(self).projective_equal(&col(other)).ok().flatten()
    }
}

fn check_dim(psi: &StateVector, d: &SubsystemType) -> Result<()> {
    if psi.dim() != d.total() {
        return Err(Error::ShapeMismatch(format!(
            "state of dimension {} for type {d} (n = {})",
            psi.dim(),
            d.total()
        )));
    }
    Ok(())
}

/// Index encoding as a free function.
pub fn index_encode(digits: &[usize], d: &SubsystemType) -> Result<usize> {
    d.encode(digits)
}

pub fn index_decode(r: usize, d: &SubsystemType) -> Result<Vec<usize>> {
    d.decode(r)
}

/// Reshapes `ψ` into a `(∏_A d_i) × (∏_B d_i)` coefficient matrix.
pub fn flatten(psi: &StateVector, d: &SubsystemType, cut: &Bipartition) -> Result<ExactMatrix> {
    check_dim(psi, d)?;
    cut.check(d)?;
    let ta = d.select(cut.side_a());
    let tb = d.select(cut.side_b());
    let mut m = ExactMatrix::zeros_in(ta.total(), tb.total(), CycNum::common_conductor(psi.amplitudes()));
    for (r, amp) in psi.amplitudes.iter().enumerate() {
        if amp.is_zero() {
            continue;
        }
        let digits = d.decode(r)?;
        let da: Vec<usize> = cut.side_a().iter().map(|&i| digits[i]).collect();
        let db: Vec<usize> = cut.side_b().iter().map(|&i| digits[i]).collect();
        m.set(ta.encode(&da)?, tb.encode(&db)?, amp.clone());
    }
    Ok(m)
}

/// Rank of the flattening across `cut`.
pub fn schmidt_rank(psi: &StateVector, d: &SubsystemType, cut: &Bipartition) -> Result<usize> {
    if psi.is_zero() {
        return Err(Error::ZeroState);
    }
    Ok(flatten(psi, d, cut)?.rank())
}

/// Whether `ψ` is a product state, i.e. has Schmidt rank 1 across every
/// single-factor-versus-rest cut.
pub fn is_product_all_cuts(psi: &StateVector, d: &SubsystemType) -> Result<bool> {
    if psi.is_zero() {
        return Err(Error::ZeroState);
    }
    check_dim(psi, d)?;
    for cut in d.single_factor_cuts() {
        if schmidt_rank(psi, d, &cut)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Operator acting as `ops[i]` on factor `i`, consistent with the index codec.
///
/// Because the first factor is least significant, this is the ordinary
/// Kronecker product taken in reverse: `ops[s-1] ⊗ … ⊗ ops[0]`.
pub fn local_operator(ops: &[ExactMatrix]) -> ExactMatrix {
    ops.iter()
        .rev()
        .fold(ExactMatrix::identity(1), |acc, op| crate::exactmath::kron(&acc, op))
}

/// Permutation operator sending `|a_1, …, a_s⟩` to the basis vector whose
/// factor `perm[i]` carries digit `a_i`. Requires `d[perm[i]] = d[i]`.
pub fn permutation_operator(d: &SubsystemType, perm: &[usize]) -> Result<ExactMatrix> {
    let s = d.len();
    let mut seen = vec![false; s];
    if perm.len() != s || perm.iter().any(|&p| p >= s || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Precondition(format!("{perm:?} is not a permutation of {s} factors")));
    }
    if (0..s).any(|i| d.factors()[perm[i]] != d.factors()[i]) {
        return Err(Error::Precondition(format!(
            "permutation {perm:?} does not preserve factor dimensions {d}"
        )));
    }
    let n = d.total();
    let mut m = ExactMatrix::zeros(n, n);
    for r in 0..n {
        let digits = d.decode(r)?;
        let mut image = vec![0; s];
        for i in 0..s {
            image[perm[i]] = digits[i];
        }
        m.set(d.encode(&image)?, r, CycNum::one());
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(v: &[usize]) -> SubsystemType {
        SubsystemType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn state_json_round_trip() {
        let psi = StateVector::new(vec![CycNum::one(), CycNum::zero(1), CycNum::zeta(8), CycNum::ratio(-1, 2)]);
        let json = serde_json::to_string(&psi).unwrap();
        assert_eq!(json, r#"["1","0","zeta(8)^1","-1/2"]"#);
        assert_eq!(serde_json::from_str::<StateVector>(&json).unwrap(), psi);
    }

    fn cut(a: &[usize], s: usize) -> Bipartition {
        Bipartition::new(a.to_vec(), s).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(ty(&[2, 2]).encode(&[1, 0]).unwrap(), 1);
        assert_eq!(ty(&[2, 2, 2]).encode(&[1, 1, 1]).unwrap(), 7);
        assert_eq!(ty(&[4, 2]).encode(&[3, 1]).unwrap(), 7);
        assert_eq!(
            ty(&[4, 2]).encode(&[4, 0]),
            Err(Error::DigitOutOfRange { factor: 0, digit: 4, dim: 4 })
        );
        assert_eq!(ty(&[4, 2]).decode(7).unwrap(), vec![3, 1]);
    }

    #[test]
    fn encode_decode_roundtrip_small_types() {
        for t in [vec![2, 2], vec![3, 5], vec![2, 3, 4], vec![4, 4, 4, 4], vec![1, 7, 2], vec![16, 16]] {
            let d = ty(&t);
            assert!(d.total() <= 256);
            for r in 0..d.total() {
                assert_eq!(d.encode(&d.decode(r).unwrap()).unwrap(), r);
            }
        }
    }

    #[test]
    fn proper_flag() {
        assert!(ty(&[2, 2]).is_proper());
        assert!(!ty(&[1, 4]).is_proper());
        assert!(ty(&[1, 2, 3]).is_proper());
        assert!(SubsystemType::new(vec![]).is_err());
        assert!(SubsystemType::new(vec![2, 0]).is_err());
    }

    #[test]
    fn flatten_examples() {
        let bell = StateVector::sum_of_basis(4, &[0, 3]);
        let f = flatten(&bell, &ty(&[2, 2]), &cut(&[0], 2)).unwrap();
        assert_eq!(f, ExactMatrix::identity(2));

        let e = StateVector::basis(6, ty(&[2, 3]).encode(&[1, 2]).unwrap());
        let f = flatten(&e, &ty(&[2, 3]), &cut(&[0], 2)).unwrap();
        let nonzero: Vec<_> = (0..2)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| !f.get(i, j).is_zero())
            .collect();
        assert_eq!(nonzero, vec![(1, 2)]);

        let ghz = StateVector::sum_of_basis(8, &[0, 7]);
        let f = flatten(&ghz, &ty(&[2, 2, 2]), &cut(&[0], 3)).unwrap();
        assert_eq!((f.rows(), f.cols()), (2, 4));
        let nonzero: Vec<_> = (0..2)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !f.get(i, j).is_zero())
            .collect();
        assert_eq!(nonzero, vec![(0, 0), (1, 3)]);
    }

    #[test]
    fn schmidt_rank_examples() {
        let d = ty(&[2, 2]);
        let c = cut(&[0], 2);
        let product = StateVector::sum_of_basis(4, &[0, 1]);
        assert_eq!(schmidt_rank(&product, &d, &c).unwrap(), 1);
        let bell = StateVector::sum_of_basis(4, &[0, 3]);
        assert_eq!(schmidt_rank(&bell, &d, &c).unwrap(), 2);
        let s = StateVector::sum_of_basis(8, &[0, 7]);
        assert_eq!(schmidt_rank(&s, &ty(&[4, 2]), &cut(&[0], 2)).unwrap(), 2);
        let zero = StateVector::new(vec![CycNum::zero(1); 4]);
        assert_eq!(schmidt_rank(&zero, &d, &c), Err(Error::ZeroState));
        assert!(Bipartition::new(vec![0, 1], 2).is_err());
        assert!(Bipartition::new(vec![], 2).is_err());
    }

    #[test]
    fn product_detection() {
        let d = ty(&[2, 2, 2]);
        assert!(is_product_all_cuts(&StateVector::basis(8, 0), &d).unwrap());
        assert!(!is_product_all_cuts(&StateVector::sum_of_basis(8, &[0, 7]), &d).unwrap());
        let z = CycNum::zeta(4);
        let psi = StateVector::product(&[
            vec![CycNum::one(), z],
            vec![CycNum::one(), CycNum::zero(1)],
        ]);
        assert_eq!(psi.amplitudes()[1], CycNum::zeta(4));
        assert!(is_product_all_cuts(&psi, &ty(&[2, 2])).unwrap());
    }

    #[test]
    fn local_operator_matches_codec() {
        let z = ExactMatrix::diag(&[CycNum::one(), CycNum::from_int(-1)]);
        let za = local_operator(&[z.clone(), ExactMatrix::identity(2)]);
        let diag: Vec<CycNum> = (0..4).map(|i| za.get(i, i).clone()).collect();
        let expect: Vec<CycNum> = [1, -1, 1, -1].iter().map(|&x| CycNum::from_int(x)).collect();
        assert_eq!(diag, expect);
    }

    #[test]
    fn swap_permutation() {
        let d = ty(&[2, 2]);
        let p = permutation_operator(&d, &[1, 0]).unwrap();
        // |1,0⟩ = |1⟩ goes to |0,1⟩ = |2⟩
        assert_eq!(*p.get(2, 1), CycNum::one());
        assert!(permutation_operator(&ty(&[2, 3]), &[1, 0]).is_err());
        assert!(permutation_operator(&d, &[0, 0]).is_err());
    }
}
