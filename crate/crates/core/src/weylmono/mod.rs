//! Clock/shift operators, projective gates and loop monodromy.
//!
//! The clock `Z = diag(ζ^r)` and shift `X|r⟩ = |r+1⟩` on `ℂ^m` satisfy
//! `ZX = ζXZ`. Symbol-algebra representations scale them by chosen roots
//! of `u` and `v`; going once around a loop multiplies one branch by ζ, and
//! that change is undone by conjugating with a fixed gate. Those gates are the
//! monodromies, and [`stabilizer_member`] decides exactly whether they keep
//! product states product.

mod stabilizer;
mod symbol;

pub use stabilizer::{
    entangling_witness, factor_local, realignment, stabilizer_member, EntanglingWitness,
    StabilizerDecision,
};
pub use symbol::{
    build_symbol_rep, build_tensor_symbol_rep, monodromy_of_loop, Loop, LoopMonodromy, SymbolRep,
    TensorBranches, TensorSymbolRep,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{CycNum, ExactMatrix, Rational};
use crate::tensorstate::{local_operator, SubsystemType};

/// Shift and clock on `ℂ^m`, over ℚ(ζ_m).
#[derive(Debug, Clone)]
pub struct WeylPair {
    m: u32,
    x: ExactMatrix,
    z: ExactMatrix,
}

impl WeylPair {
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Cyclic shift `X|r⟩ = |r+1 mod m⟩`.
    pub fn x(&self) -> &ExactMatrix {
        &self.x
    }

    /// Clock `Z|r⟩ = ζ^r|r⟩`.
    pub fn z(&self) -> &ExactMatrix {
        &self.z
    }

    pub fn x_inv(&self) -> ExactMatrix {
        self.x.transpose()
    }
}

pub fn build_weyl(m: u32) -> Result<WeylPair> {
    if m < 2 {
        return Err(Error::Precondition(format!("Weyl operators need m >= 2, got {m}")));
    }
    let n = m as usize;
    let x = ExactMatrix::from_fn(n, n, |i, j| {
        if i == (j + 1) % n {
            CycNum::from_rational_in(Rational::from_integer(1.into()), m)
        } else {
            CycNum::zero(m)
        }
    });
    let z = ExactMatrix::diag(&(0..m).map(|r| CycNum::root_of_unity(m, r as i64)).collect::<Vec<_>>());
    Ok(WeylPair { m, x, z })
}

/// An invertible matrix standing for its class in the projective linear group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ProjectiveGate {
    matrix: ExactMatrix,
}

impl ProjectiveGate {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "gate must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.rank() != matrix.rows() {
            return Err(Error::Singular);
        }
        Ok(ProjectiveGate { matrix })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inverse(&self) -> ProjectiveGate {
        ProjectiveGate {
            matrix: self.matrix.inverse().expect("gates are invertible"),
        }
    }

    pub fn then(&self, next: &ProjectiveGate) -> Result<ProjectiveGate> {
        Ok(ProjectiveGate {
            matrix: next.matrix.checked_mul(&self.matrix)?,
        })
    }

    /// Scalar `λ` with `self = λ·other` as matrices, if the classes agree.
    pub fn projectively_equals(&self, other: &ProjectiveGate) -> Result<Option<CycNum>> {
        self.matrix.projective_equal(&other.matrix)
    }
}

/// The scalar `λ` with `g h g⁻¹ h⁻¹ = λ·I`.
pub fn commutator_scalar(g: &ProjectiveGate, h: &ProjectiveGate) -> Result<CycNum> {
    let c = g
        .matrix
        .checked_mul(&h.matrix)?
        .checked_mul(&g.inverse().matrix)?
        .checked_mul(&h.inverse().matrix)?;
    c.as_scalar().ok_or(Error::NotProjectivelyCommuting)
}

/// Outcome of comparing the `m = 4` monodromies with two-qubit gates under
/// `|a, b⟩ ↔ |a + 2b⟩`.
#[derive(Debug, Clone, Serialize)]
pub struct CnotEquivalence {
    /// `λ` with `X⁻¹ = λ·CNOT·(X_A ⊗ I_B)`.
    pub shift_inverse_vs_cnot: Option<CycNum>,
    /// `λ` with `Z = λ·(S_A ⊗ Z_B)`.
    pub clock_vs_local_phase: Option<CycNum>,
    /// `X⁻¹` against the local part `X_A ⊗ I_B` alone; expected to fail.
    pub shift_inverse_vs_local_flip: Option<CycNum>,
}

impl CnotEquivalence {
    pub fn holds(&self) -> bool {
        self.shift_inverse_vs_cnot.is_some()
            && self.clock_vs_local_phase.is_some()
            && self.shift_inverse_vs_local_flip.is_none()
    }
}

/// CNOT with control on the first factor: `|a, b⟩ ↦ |a, b ⊕ a⟩`.
pub fn cnot() -> ExactMatrix {
    let d = SubsystemType::new(vec![2, 2]).unwrap();
    let mut m = ExactMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            let from = d.encode(&[a, b]).unwrap();
            let to = d.encode(&[a, b ^ a]).unwrap();
            m.set(to, from, CycNum::one());
        }
    }
    m
}

pub fn cnot_equivalence_check() -> Result<CnotEquivalence> {
    let w4 = build_weyl(4)?;
    let w2 = build_weyl(2)?;
    let id2 = ExactMatrix::identity(2);
    let flip_a = local_operator(&[w2.x().clone(), id2.clone()]);
    let cnot_flip = cnot().checked_mul(&flip_a)?;
    let s_a = ExactMatrix::diag(&[CycNum::one(), CycNum::zeta(4)]);
    let phase = local_operator(&[s_a, w2.z().clone()]);
    let x_inv = w4.x_inv();
    Ok(CnotEquivalence {
        shift_inverse_vs_cnot: x_inv.projective_equal(&cnot_flip)?,
        clock_vs_local_phase: w4.z().projective_equal(&phase)?,
        shift_inverse_vs_local_flip: x_inv.projective_equal(&flip_a)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_at_m2() {
        let w = build_weyl(2).unwrap();
        assert_eq!(*w.x(), ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(*w.z(), ExactMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]));
        assert!(build_weyl(1).is_err());
    }

    #[test]
    fn clock_at_m4() {
        let w = build_weyl(4).unwrap();
        let i = CycNum::zeta(4);
        let expect = ExactMatrix::diag(&[CycNum::one(), i.clone(), CycNum::from_int(-1), -i]);
        assert_eq!(*w.z(), expect);
    }

    #[test]
    fn conjugation_at_m8() {
        let w = build_weyl(8).unwrap();
        let lhs = w
            .z()
            .checked_mul(w.x())
            .unwrap()
            .checked_mul(&w.z().inverse().unwrap())
            .unwrap();
        assert_eq!(lhs, w.x().scale(&CycNum::zeta(8)));
    }

    #[test]
    fn weyl_relation_all_powers() {
        for m in 2..=12u32 {
            let w = build_weyl(m).unwrap();
            let zs: Vec<_> = (0..m).map(|a| w.z().pow(a).unwrap()).collect();
            let xs: Vec<_> = (0..m).map(|b| w.x().pow(b).unwrap()).collect();
            for a in 0..m {
                for b in 0..m {
                    let (za, xb) = (&zs[a as usize], &xs[b as usize]);
                    let lhs = za.checked_mul(xb).unwrap();
                    let rhs = xb
                        .checked_mul(za)
                        .unwrap()
                        .scale(&CycNum::root_of_unity(m, (a * b) as i64));
                    assert_eq!(lhs, rhs, "m={m} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let w = build_weyl(4).unwrap();
        let z = ProjectiveGate::new(w.z().clone()).unwrap();
        let xi = ProjectiveGate::new(w.x_inv()).unwrap();
        assert_eq!(commutator_scalar(&z, &xi).unwrap(), -CycNum::zeta(4));
        let id = ProjectiveGate::new(ExactMatrix::identity(4)).unwrap();
        assert!(commutator_scalar(&id, &xi).unwrap().is_one());

        let w2 = build_weyl(2).unwrap();
        let id2 = ExactMatrix::identity(2);
        let za = ProjectiveGate::new(local_operator(&[w2.z().clone(), id2.clone()])).unwrap();
        let zb = ProjectiveGate::new(local_operator(&[id2, w2.z().clone()])).unwrap();
        assert!(commutator_scalar(&za, &zb).unwrap().is_one());

        let h = ProjectiveGate::new(ExactMatrix::from_i64_rows(&[&[1, 1], &[1, -1]])).unwrap();
        let s = ProjectiveGate::new(ExactMatrix::diag(&[CycNum::one(), CycNum::zeta(4)])).unwrap();
        assert_eq!(commutator_scalar(&h, &s), Err(Error::NotProjectivelyCommuting));
    }

    #[test]
    fn commutator_order_is_m() {
        for m in 2..=12u32 {
            let w = build_weyl(m).unwrap();
            let x = ProjectiveGate::new(w.x().clone()).unwrap();
            let z = ProjectiveGate::new(w.z().clone()).unwrap();
            let c = commutator_scalar(&x, &z).unwrap();
            assert_eq!(c.root_of_unity_order(), Some(m), "m = {m}");
        }
    }

    #[test]
    fn singular_gate_rejected() {
        assert_eq!(
            ProjectiveGate::new(ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])),
            Err(Error::Singular)
        );
        assert!(ProjectiveGate::new(ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn cnot_equivalence() {
        let eq = cnot_equivalence_check().unwrap();
        assert!(eq.holds());
        // both sides agree entrywise: the basis map is identical
        assert_eq!(eq.shift_inverse_vs_cnot, Some(CycNum::one()));
        assert_eq!(eq.clock_vs_local_phase, Some(CycNum::one()));
        assert_eq!(eq.shift_inverse_vs_local_flip, None);
    }
}
