//! A four-site toy chain whose ground state is a product state on one chart
//! and a Bell state after translation gluing.
//!
//! Only the one-magnon block spanned by `|0⟩, …, |3⟩` (magnon on site `r`) is
//! modelled. States with magnons on sites 2 or 3 cost at least `Δ > J`, so the
//! ground state lives in the hopping block on sites 0 and 1. The site index is
//! read as a two-qubit label through `r = a + 2b`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{CycNum, ExactMatrix, Rational};
use crate::tensorstate::{schmidt_rank, Bipartition, StateVector, SubsystemType};
use crate::weylmono::{build_weyl, commutator_scalar, stabilizer_member, ProjectiveGate};

/// Hopping `J`, on-site cost `Δ`, and the chosen branch `w = u^{1/4}`.
#[derive(Debug, Clone)]
pub struct SpinChainParams {
    j: Rational,
    delta: Rational,
    u_branch: CycNum,
}

impl SpinChainParams {
    pub fn new(j: Rational, delta: Rational, u_branch: CycNum) -> Result<Self> {
        if j <= Rational::from_integer(0.into()) {
            return Err(Error::Precondition(format!("J must be positive, got {j}")));
        }
        if delta <= j {
            return Err(Error::Precondition(format!("need Δ > J, got Δ = {delta}, J = {j}")));
        }
        if u_branch.root_of_unity_order().is_none() {
            return Err(Error::NotRootOfUnity(format!("u branch = {u_branch}")));
        }
        Ok(SpinChainParams { j, delta, u_branch })
    }

    /// `J = 1`, `Δ = 2`, `u = 1`.
    pub fn default_params() -> Self {
        Self::new(
            Rational::from_integer(1.into()),
            Rational::from_integer(2.into()),
            CycNum::one(),
        )
        .expect("defaults are valid")
    }

    pub fn j(&self) -> &Rational {
        &self.j
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn u_branch(&self) -> &CycNum {
        &self.u_branch
    }

    pub fn u(&self) -> CycNum {
        self.u_branch.pow(4).expect("nonzero branch")
    }
}

fn two_qubits() -> (SubsystemType, Bipartition) {
    (
        SubsystemType::new(vec![2, 2]).expect("valid type"),
        Bipartition::new(vec![0], 2).expect("valid cut"),
    )
}

/// `H_U` on the one-magnon block.
pub fn hamiltonian_one_magnon(params: &SpinChainParams) -> ExactMatrix {
    let w = params.u_branch();
    let j = CycNum::from_rational(params.j.clone());
    let delta = CycNum::from_rational(params.delta.clone());
    let mut h = ExactMatrix::zeros(4, 4);
    h.set(0, 1, -(&j * w));
    h.set(1, 0, -(&j * &w.inv().expect("root of unity")));
    h.set(2, 2, delta.clone());
    h.set(3, 3, delta);
    h
}

/// Unnormalized ground state `(w, 1, 0, 0)` with energy `−J`.
pub fn ground_state_local(params: &SpinChainParams) -> Result<StateVector> {
    let v = StateVector::new(vec![
        params.u_branch.clone(),
        CycNum::one(),
        CycNum::zero(1),
        CycNum::zero(1),
    ]);
    check_eigen(&hamiltonian_one_magnon(params), &v, &-params.j.clone())?;
    Ok(v)
}

/// The translated Hamiltonian `H_{U'} = X⁻¹·H_U·X` with the `m = 4` shift.
pub fn glued_hamiltonian(params: &SpinChainParams) -> Result<ExactMatrix> {
    let w = build_weyl(4)?;
    w.x_inv().checked_mul(&hamiltonian_one_magnon(params))?.checked_mul(w.x())
}

/// `X⁻¹·(w, 1, 0, 0) = (1, 0, 0, w)`, the ground state of `H_{U'}`.
pub fn glued_ground_state(params: &SpinChainParams) -> Result<StateVector> {
    let w = build_weyl(4)?;
    let v = ground_state_local(params)?.apply(&w.x_inv())?;
    check_eigen(&glued_hamiltonian(params)?, &v, &-params.j.clone())?;
    Ok(v)
}

fn check_eigen(h: &ExactMatrix, v: &StateVector, energy: &Rational) -> Result<()> {
    let hv = v.apply(h)?;
    let e = CycNum::from_rational(energy.clone());
    let ev: Vec<CycNum> = v.amplitudes().iter().map(|a| a * &e).collect();
    if hv.amplitudes() != ev.as_slice() {
        return Err(Error::RelationFailure(format!("H·v ≠ {energy}·v")));
    }
    Ok(())
}

/// True when the characteristic polynomial of `H_U` is `(t+J)(t−J)(t−Δ)²`.
pub fn spectrum_matches(params: &SpinChainParams) -> Result<bool> {
    let cp = hamiltonian_one_magnon(params).char_poly()?;
    let roots = [
        -params.j.clone(),
        params.j.clone(),
        params.delta.clone(),
        params.delta.clone(),
    ];
    // ∏ (t − λ), ascending coefficients
    let mut expect = vec![Rational::from_integer(1.into())];
    for lambda in &roots {
        let mut next = vec![Rational::from_integer(0.into()); expect.len() + 1];
        for (i, c) in expect.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * lambda;
        }
        expect = next;
    }
    let expect: Vec<CycNum> = expect.into_iter().map(CycNum::from_rational).collect();
    Ok(cp == expect)
}

/// The whole product-to-entangled story for one parameter set.
#[derive(Debug, Clone, Serialize)]
pub struct GluingReport {
    pub local_rank: usize,
    pub glued_rank: usize,
    #[serde(serialize_with = "crate::exactmath::scalar::serialize_display")]
    pub commutator_scalar: CycNum,
    pub stabilizer_member: bool,
    pub local_ground_state: StateVector,
    pub glued_ground_state: StateVector,
    pub spectrum_ok: bool,
}

pub fn gluing_report(params: &SpinChainParams) -> Result<GluingReport> {
    let (d, cut) = two_qubits();
    let local = ground_state_local(params)?;
    let glued = glued_ground_state(params)?;
    let w = build_weyl(4)?;
    let z = ProjectiveGate::new(w.z().clone())?;
    let x_inv = ProjectiveGate::new(w.x_inv())?;
    Ok(GluingReport {
        local_rank: schmidt_rank(&local, &d, &cut)?,
        glued_rank: schmidt_rank(&glued, &d, &cut)?,
        commutator_scalar: commutator_scalar(&z, &x_inv)?,
        stabilizer_member: stabilizer_member(&x_inv, &d)?.is_member(),
        local_ground_state: local,
        glued_ground_state: glued,
        spectrum_ok: spectrum_matches(params)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn c(x: i64) -> CycNum {
        CycNum::from_int(x)
    }

    #[test]
    fn default_hamiltonian() {
        let h = hamiltonian_one_magnon(&SpinChainParams::default_params());
        let expect = ExactMatrix::from_i64_rows(&[
            &[0, -1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, 2],
        ]);
        assert_eq!(h, expect);
    }

    #[test]
    fn hermitian_for_every_branch() {
        for (m, k) in [(4, 1), (8, 3), (16, 5), (3, 1)] {
            let p = SpinChainParams::new(q(1, 2), q(3, 4), CycNum::root_of_unity(m, k)).unwrap();
            let h = hamiltonian_one_magnon(&p);
            assert_eq!(h, h.adjoint());
            // block structure (2×2) ⊕ (1) ⊕ (1)
            for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                assert!(h.get(i, j).is_zero() && h.get(j, i).is_zero());
            }
        }
    }

    #[test]
    fn invalid_params() {
        assert!(SpinChainParams::new(q(1, 1), q(1, 1), CycNum::one()).is_err());
        assert!(SpinChainParams::new(q(0, 1), q(1, 1), CycNum::one()).is_err());
        assert!(SpinChainParams::new(q(1, 1), q(2, 1), c(2)).is_err());
    }

    #[test]
    fn ground_states_at_u_one() {
        let p = SpinChainParams::default_params();
        assert_eq!(ground_state_local(&p).unwrap().amplitudes(), &[c(1), c(1), c(0), c(0)]);
        assert_eq!(glued_ground_state(&p).unwrap().amplitudes(), &[c(1), c(0), c(0), c(1)]);
    }

    #[test]
    fn glued_state_eighth_root() {
        let p = SpinChainParams::new(q(1, 1), q(2, 1), CycNum::zeta(8)).unwrap();
        assert_eq!(
            glued_ground_state(&p).unwrap().amplitudes(),
            &[c(1), c(0), c(0), CycNum::zeta(8)]
        );
        assert_eq!(p.u(), c(-1));
    }

    #[test]
    fn spectra() {
        for (j, d) in [(q(1, 1), q(2, 1)), (q(1, 2), q(3, 4))] {
            for w in [CycNum::one(), CycNum::zeta(8)] {
                assert!(spectrum_matches(&SpinChainParams::new(j.clone(), d.clone(), w).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn default_report() {
        let r = gluing_report(&SpinChainParams::default_params()).unwrap();
        assert_eq!((r.local_rank, r.glued_rank, r.stabilizer_member), (1, 2, false));
        assert_eq!(r.commutator_scalar, -CycNum::zeta(4));
        assert!(r.spectrum_ok);
    }

    #[test]
    fn transition_for_all_branches() {
        for m in [4u32, 8, 16] {
            for k in 0..m as i64 {
                let p = SpinChainParams::new(q(1, 1), q(2, 1), CycNum::root_of_unity(m, k)).unwrap();
                let r = gluing_report(&p).unwrap();
                assert_eq!((r.local_rank, r.glued_rank), (1, 2));
            }
        }
    }
}
