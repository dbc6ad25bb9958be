//! Exact membership in the Segre stabilizer.
//!
//! The stabilizer of the product-state locus of type `d` is generated by
//! local operators `A_1 ⊗ … ⊗ A_s` and the permutations of equal-dimension
//! factors. A gate `g` is a member iff, for some such permutation `P`, the
//! matrix `g·P⁻¹` factors as a Kronecker product. Factorization is peeled
//! one factor at a time: `g = A ⊗ B` iff the realignment of `g` has rank 1.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ProjectiveGate;
use crate::error::{Error, Result};
use crate::exactmath::ExactMatrix;
use crate::tensorstate::{permutation_operator, schmidt_rank, Bipartition, StateVector, SubsystemType};

/// The `d_A² × d_B²` rearrangement with entry `((a,a'),(b,b'))` equal to
/// `g[(a,b),(a',b')]`, joint indices taken as `a + d_A·b`.
pub fn realignment(g: &ExactMatrix, d_a: usize, d_b: usize) -> Result<ExactMatrix> {
    let n = d_a * d_b;
    if g.rows() != n || g.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "realignment of {}x{} with d_A = {d_a}, d_B = {d_b}",
            g.rows(),
            g.cols()
        )));
    }
    let mut r = ExactMatrix::zeros_in(d_a * d_a, d_b * d_b, g.conductor());
    for a in 0..d_a {
        for a2 in 0..d_a {
            for b in 0..d_b {
                for b2 in 0..d_b {
                    let e = g.get(a + d_a * b, a2 + d_a * b2);
                    if !e.is_zero() {
                        r.set(a * d_a + a2, b * d_b + b2, e.clone());
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Splits `g = A ⊗ B` (first factor least significant) when possible.
fn split_first(g: &ExactMatrix, d_a: usize, d_b: usize) -> Result<Option<(ExactMatrix, ExactMatrix)>> {
    let r = realignment(g, d_a, d_b)?;
    if r.rank() != 1 {
        return Ok(None);
    }
    let (i0, j0) = (0..r.rows())
        .flat_map(|i| (0..r.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !r.get(i, j).is_zero())
        .expect("rank 1 matrix has a nonzero entry");
    let pivot_inv = r.get(i0, j0).inv()?;
    let a = ExactMatrix::from_fn(d_a, d_a, |x, y| r.get(x * d_a + y, j0).clone());
    let b = ExactMatrix::from_fn(d_b, d_b, |x, y| r.get(i0, x * d_b + y) * &pivot_inv);
    Ok(Some((a, b)))
}

/// Per-factor matrices `A_i` with `g = A_1 ⊗ … ⊗ A_s` under the index codec,
/// or `None` if `g` is not a Kronecker product of that shape.
pub fn factor_local(g: &ExactMatrix, d: &SubsystemType) -> Result<Option<Vec<ExactMatrix>>> {
    let dims = d.factors();
    if dims.len() == 1 {
        return Ok(Some(vec![g.clone()]));
    }
    let d_a = dims[0];
    let rest = SubsystemType::new(dims[1..].to_vec())?;
    let Some((a, b)) = split_first(g, d_a, rest.total())? else {
        return Ok(None);
    };
    Ok(factor_local(&b, &rest)?.map(|mut tail| {
        tail.insert(0, a);
        tail
    }))
}

/// Decision of [`stabilizer_member`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerDecision {
    /// `g ∝ (A_1 ⊗ … ⊗ A_s) · P_π`.
    Member {
        permutation: Vec<usize>,
        factors: Vec<ExactMatrix>,
    },
    NotMember,
}

impl StabilizerDecision {
    pub fn is_member(&self) -> bool {
        matches!(self, StabilizerDecision::Member { .. })
    }
}

impl Serialize for StabilizerDecision {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StabilizerDecision", 3)?;
        match self {
            StabilizerDecision::Member { permutation, factors } => {
                st.serialize_field("member", &true)?;
                st.serialize_field("permutation", permutation)?;
                st.serialize_field("factors", factors)?;
            }
            StabilizerDecision::NotMember => {
                st.serialize_field("member", &false)?;
                st.serialize_field("permutation", &Option::<Vec<usize>>::None)?;
                st.serialize_field("factors", &Vec::<ExactMatrix>::new())?;
            }
        }
        st.end()
    }
}

/// Permutations `π` of `0..s` with `d[π(i)] = d[i]`, identity first.
fn dimension_preserving_permutations(d: &SubsystemType) -> Vec<Vec<usize>> {
    fn rec(d: &[usize], i: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if i == d.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..d.len() {
            if !used[j] && d[j] == d[i] {
                used[j] = true;
                cur.push(j);
                rec(d, i + 1, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; d.len()];
    rec(d.factors(), 0, &mut Vec::new(), &mut used, &mut out);
    out
}

/// Decides whether `g` preserves the product-state locus of type `d`.
pub fn stabilizer_member(g: &ProjectiveGate, d: &SubsystemType) -> Result<StabilizerDecision> {
    let m = g.matrix();
    if m.rows() != d.total() {
        return Err(Error::ShapeMismatch(format!(
            "gate of size {} for type {d} (n = {})",
            m.rows(),
            d.total()
        )));
    }
    for perm in dimension_preserving_permutations(d) {
        let p = permutation_operator(d, &perm)?;
        // P is a permutation matrix, so P⁻¹ = Pᵀ
        let local = m.checked_mul(&p.transpose())?;
        if let Some(factors) = factor_local(&local, d)? {
            return Ok(StabilizerDecision::Member {
                permutation: perm,
                factors,
            });
        }
    }
    Ok(StabilizerDecision::NotMember)
}

/// A product state whose image under a gate is entangled across a cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntanglingWitness {
    pub input: StateVector,
    pub image: StateVector,
    pub schmidt_rank: usize,
}

/// Candidate product states, in search order: basis products, then
/// `(e_i + e_j)` on one factor tensored with basis vectors elsewhere.
fn witness_candidates(d: &SubsystemType) -> impl Iterator<Item = StateVector> + '_ {
    let n = d.total();
    let basis = (0..n).map(move |r| StateVector::basis(n, r));
    let s = d.len();
    let supers = (0..s).flat_map(move |k| {
        let dk = d.factors()[k];
        let others: Vec<usize> = (0..s).filter(|&i| i != k).collect();
        let rest = d.select(&others);
        (0..dk).flat_map(move |i| {
            let others = others.clone();
            let rest = rest.clone();
            (i + 1..dk).flat_map(move |j| {
                let others = others.clone();
                let rest = rest.clone();
                (0..rest.total()).map(move |q| {
                    let rest_digits = rest.decode(q).unwrap();
                    let mut digits = vec![0; s];
                    for (slot, &f) in others.iter().enumerate() {
                        digits[f] = rest_digits[slot];
                    }
                    digits[k] = i;
                    let ri = d.encode(&digits).unwrap();
                    digits[k] = j;
                    let rj = d.encode(&digits).unwrap();
                    StateVector::sum_of_basis(n, &[ri, rj])
                })
            })
        })
    });
    basis.chain(supers)
}

/// Searches for a product state that `g` maps to Schmidt rank ≥ 2 across `cut`.
///
/// The candidate set is finite, so `None` is not a proof of membership; use
/// [`stabilizer_member`] for the exact decision.
pub fn entangling_witness(
    g: &ProjectiveGate,
    d: &SubsystemType,
    cut: &Bipartition,
) -> Result<Option<EntanglingWitness>> {
    if g.dim() != d.total() {
        return Err(Error::ShapeMismatch(format!(
            "gate of size {} for type {d}",
            g.dim()
        )));
    }
    for input in witness_candidates(d) {
        let image = input.apply(g.matrix())?;
        let rank = schmidt_rank(&image, d, cut)?;
        if rank >= 2 {
            return Ok(Some(EntanglingWitness {
                input,
                image,
                schmidt_rank: rank,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::CycNum;
    use crate::tensorstate::local_operator;
    use crate::weylmono::{build_weyl, cnot};

    fn ty(v: &[usize]) -> SubsystemType {
        SubsystemType::new(v.to_vec()).unwrap()
    }

    fn gate(m: ExactMatrix) -> ProjectiveGate {
        ProjectiveGate::new(m).unwrap()
    }

    fn rebuild(decision: &StabilizerDecision, d: &SubsystemType) -> ExactMatrix {
        match decision {
            StabilizerDecision::Member { permutation, factors } => local_operator(factors)
                .checked_mul(&permutation_operator(d, permutation).unwrap())
                .unwrap(),
            StabilizerDecision::NotMember => panic!("not a member"),
        }
    }

    #[test]
    fn clock_m4_is_local() {
        let w = build_weyl(4).unwrap();
        let d = ty(&[2, 2]);
        let dec = stabilizer_member(&gate(w.z().clone()), &d).unwrap();
        let StabilizerDecision::Member { permutation, factors } = &dec else {
            panic!("Z should be local");
        };
        assert_eq!(permutation, &vec![0, 1]);
        let s_a = ExactMatrix::diag(&[CycNum::one(), CycNum::zeta(4)]);
        let z_b = ExactMatrix::diag(&[CycNum::one(), CycNum::from_int(-1)]);
        assert!(factors[0].projective_equal(&s_a).unwrap().is_some());
        assert!(factors[1].projective_equal(&z_b).unwrap().is_some());
        assert!(rebuild(&dec, &d).projective_equal(w.z()).unwrap().is_some());
    }

    #[test]
    fn shift_inverse_m4_is_not_local() {
        let w = build_weyl(4).unwrap();
        let dec = stabilizer_member(&gate(w.x_inv()), &ty(&[2, 2])).unwrap();
        assert_eq!(dec, StabilizerDecision::NotMember);
    }

    #[test]
    fn local_clock_identity_permutation() {
        let w = build_weyl(2).unwrap();
        let g = local_operator(&[w.z().clone(), ExactMatrix::identity(2)]);
        let dec = stabilizer_member(&gate(g), &ty(&[2, 2])).unwrap();
        match dec {
            StabilizerDecision::Member { permutation, .. } => assert_eq!(permutation, vec![0, 1]),
            _ => panic!(),
        }
    }

    #[test]
    fn realignment_ranks() {
        assert_eq!(realignment(&cnot(), 2, 2).unwrap().rank(), 2);
        assert_eq!(realignment(&ExactMatrix::identity(4), 2, 2).unwrap().rank(), 1);
        let swap = permutation_operator(&ty(&[2, 2]), &[1, 0]).unwrap();
        assert_eq!(realignment(&swap, 2, 2).unwrap().rank(), 4);
        assert!(realignment(&ExactMatrix::identity(4), 2, 3).is_err());
    }

    #[test]
    fn swap_needs_the_permutation() {
        let d = ty(&[2, 2]);
        let swap = permutation_operator(&d, &[1, 0]).unwrap();
        let dec = stabilizer_member(&gate(swap.clone()), &d).unwrap();
        match &dec {
            StabilizerDecision::Member { permutation, .. } => assert_eq!(permutation, &vec![1, 0]),
            _ => panic!("swap is in the stabilizer"),
        }
        assert!(rebuild(&dec, &d).projective_equal(&swap).unwrap().is_some());
        // unequal factors admit no swap
        let d23 = ty(&[2, 3]);
        let g = ExactMatrix::from_fn(6, 6, |i, j| CycNum::from_int((i == (j + 1) % 6) as i64));
        assert_eq!(stabilizer_member(&gate(g), &d23).unwrap(), StabilizerDecision::NotMember);
    }

    #[test]
    fn three_factor_local() {
        let d = ty(&[2, 3, 2]);
        let a = ExactMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let b = ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 3], &[2, 0, 1]]);
        let c = ExactMatrix::diag(&[CycNum::zeta(3), CycNum::one()]);
        let g = local_operator(&[a.clone(), b.clone(), c.clone()]);
        let dec = stabilizer_member(&gate(g.clone()), &d).unwrap();
        assert!(rebuild(&dec, &d).projective_equal(&g).unwrap().is_some());
        let StabilizerDecision::Member { factors, .. } = dec else { panic!() };
        assert!(factors[0].projective_equal(&a).unwrap().is_some());
        assert!(factors[1].projective_equal(&b).unwrap().is_some());
        assert!(factors[2].projective_equal(&c).unwrap().is_some());
    }

    #[test]
    fn witness_bell() {
        let w = build_weyl(4).unwrap();
        let d = ty(&[2, 2]);
        let cut = Bipartition::new(vec![0], 2).unwrap();
        let wit = entangling_witness(&gate(w.x_inv()), &d, &cut).unwrap().unwrap();
        assert_eq!(wit.input, StateVector::sum_of_basis(4, &[0, 1]));
        assert_eq!(wit.image, StateVector::sum_of_basis(4, &[0, 3]));
        assert_eq!(wit.schmidt_rank, 2);
    }

    #[test]
    fn witness_ghz() {
        let w = build_weyl(8).unwrap();
        let d = ty(&[2, 2, 2]);
        let cut = Bipartition::new(vec![0], 3).unwrap();
        let wit = entangling_witness(&gate(w.x_inv()), &d, &cut).unwrap().unwrap();
        assert_eq!(wit.input, StateVector::sum_of_basis(8, &[0, 1]));
        assert_eq!(wit.image, StateVector::sum_of_basis(8, &[0, 7]));
    }

    #[test]
    fn no_witness_for_local_gate() {
        let w = build_weyl(2).unwrap();
        let g = local_operator(&[w.z().clone(), ExactMatrix::identity(2)]);
        let cut = Bipartition::new(vec![0], 2).unwrap();
        assert_eq!(entangling_witness(&gate(g), &ty(&[2, 2]), &cut).unwrap(), None);
    }

    #[test]
    fn size_mismatch() {
        let g = gate(ExactMatrix::identity(4));
        assert!(stabilizer_member(&g, &ty(&[2, 3])).is_err());
    }
}
