//! Operator realizations of cyclic symbol algebras and their loop monodromy.
//!
//! Branches of `u^{1/m}`, `v^{1/m}` are roots of unity, so every operator
//! lives over a cyclotomic field. Monodromy is read off algebraically: after
//! one turn of a loop the relevant branch is multiplied by ζ, and the gate
//! returned is the one whose conjugation reproduces exactly that change.

use serde::Serialize;

use super::{build_weyl, ProjectiveGate};
use crate::error::{Error, Result};
use crate::exactmath::{CycNum, ExactMatrix};
use crate::tensorstate::local_operator;

/// Which generator of the fundamental group of the punctured plane pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Loop {
    U,
    V,
}

impl std::str::FromStr for Loop {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" | "U" => Ok(Loop::U),
            "v" | "V" => Ok(Loop::V),
            _ => Err(Error::Parse(format!("unknown loop {s:?}; expected u or v"))),
        }
    }
}

fn require_root_of_unity(x: &CycNum, what: &str) -> Result<()> {
    if x.root_of_unity_order().is_none() {
        return Err(Error::NotRootOfUnity(format!("{what} = {x}")));
    }
    Ok(())
}

fn relation(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::RelationFailure(what.to_string()))
    }
}

fn conj(g: &ExactMatrix, a: &ExactMatrix) -> Result<ExactMatrix> {
    g.checked_mul(a)?.checked_mul(&g.inverse()?)
}

/// `x = u^{1/m}·X`, `y = v^{1/m}·Z` with `x^m = u`, `y^m = v`, `yx = ζ_m xy`.
#[derive(Debug, Clone)]
pub struct SymbolRep {
    m: u32,
    u_branch: CycNum,
    v_branch: CycNum,
    x_op: ExactMatrix,
    y_op: ExactMatrix,
}

impl SymbolRep {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn u_branch(&self) -> &CycNum {
        &self.u_branch
    }

    pub fn v_branch(&self) -> &CycNum {
        &self.v_branch
    }

    pub fn u(&self) -> CycNum {
        self.u_branch.pow(self.m as i64).unwrap()
    }

    pub fn v(&self) -> CycNum {
        self.v_branch.pow(self.m as i64).unwrap()
    }

    pub fn x_op(&self) -> &ExactMatrix {
        &self.x_op
    }

    pub fn y_op(&self) -> &ExactMatrix {
        &self.y_op
    }
}

pub fn build_symbol_rep(m: u32, u_branch: CycNum, v_branch: CycNum) -> Result<SymbolRep> {
    require_root_of_unity(&u_branch, "u branch")?;
    require_root_of_unity(&v_branch, "v branch")?;
    let w = build_weyl(m)?;
    let x_op = w.x().scale(&u_branch);
    let y_op = w.z().scale(&v_branch);
    let rep = SymbolRep {
        m,
        u_branch,
        v_branch,
        x_op,
        y_op,
    };
    let n = m as usize;
    let zeta = CycNum::zeta(m);
    relation(rep.x_op.pow(m)? == ExactMatrix::scalar(n, &rep.u()), "x^m = u")?;
    relation(rep.y_op.pow(m)? == ExactMatrix::scalar(n, &rep.v()), "y^m = v")?;
    relation(
        rep.y_op.checked_mul(&rep.x_op)? == rep.x_op.checked_mul(&rep.y_op)?.scale(&zeta),
        "yx = ζ xy",
    )?;
    Ok(rep)
}

/// Branches for the tensor product of two degree-`p` symbols:
/// `u^{1/p}`, `v^{1/p}` and the constants `a^{1/p}`, `b^{1/p}`.
#[derive(Debug, Clone)]
pub struct TensorBranches {
    pub u: CycNum,
    pub v: CycNum,
    pub a: CycNum,
    pub b: CycNum,
}

impl TensorBranches {
    pub fn trivial() -> Self {
        TensorBranches {
            u: CycNum::one(),
            v: CycNum::one(),
            a: CycNum::one(),
            b: CycNum::one(),
        }
    }
}

/// Four operators on `ℂ^p ⊗ ℂ^p`: `x_u, y_u` act on the first factor,
/// `x_v, y_v` on the second.
#[derive(Debug, Clone)]
pub struct TensorSymbolRep {
    p: u32,
    branches: TensorBranches,
    x_u: ExactMatrix,
    y_u: ExactMatrix,
    x_v: ExactMatrix,
    y_v: ExactMatrix,
}

impl TensorSymbolRep {
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn branches(&self) -> &TensorBranches {
        &self.branches
    }
    pub fn x_u(&self) -> &ExactMatrix {
        &self.x_u
    }
    pub fn y_u(&self) -> &ExactMatrix {
        &self.y_u
    }
    pub fn x_v(&self) -> &ExactMatrix {
        &self.x_v
    }
    pub fn y_v(&self) -> &ExactMatrix {
        &self.y_v
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn build_tensor_symbol_rep(p: u32, branches: TensorBranches) -> Result<TensorSymbolRep> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("p must be prime, got {p}")));
    }
    for (x, name) in [
        (&branches.u, "u branch"),
        (&branches.v, "v branch"),
        (&branches.a, "a branch"),
        (&branches.b, "b branch"),
    ] {
        require_root_of_unity(x, name)?;
    }
    let w = build_weyl(p)?;
    let id = ExactMatrix::identity(p as usize);
    let x_u = local_operator(&[w.x().clone(), id.clone()]).scale(&branches.u);
    let y_u = local_operator(&[w.z().clone(), id.clone()]).scale(&branches.a);
    let x_v = local_operator(&[id.clone(), w.x().clone()]).scale(&branches.v);
    let y_v = local_operator(&[id, w.z().clone()]).scale(&branches.b);

    let n = (p * p) as usize;
    let zeta = CycNum::zeta(p);
    let power = |x: &CycNum| x.pow(p as i64).unwrap();
    let commutes = |a: &ExactMatrix, b: &ExactMatrix| -> Result<bool> {
        Ok(a.checked_mul(b)? == b.checked_mul(a)?)
    };
    relation(x_u.pow(p)? == ExactMatrix::scalar(n, &power(&branches.u)), "x_u^p = u")?;
    relation(y_u.pow(p)? == ExactMatrix::scalar(n, &power(&branches.a)), "y_u^p = a")?;
    relation(x_v.pow(p)? == ExactMatrix::scalar(n, &power(&branches.v)), "x_v^p = v")?;
    relation(y_v.pow(p)? == ExactMatrix::scalar(n, &power(&branches.b)), "y_v^p = b")?;
    relation(
        y_u.checked_mul(&x_u)? == x_u.checked_mul(&y_u)?.scale(&zeta),
        "y_u x_u = ζ x_u y_u",
    )?;
    relation(
        y_v.checked_mul(&x_v)? == x_v.checked_mul(&y_v)?.scale(&zeta),
        "y_v x_v = ζ x_v y_v",
    )?;
    for (a, b) in [(&x_u, &x_v), (&x_u, &y_v), (&y_u, &x_v), (&y_u, &y_v)] {
        relation(commutes(a, b)?, "u-generators commute with v-generators")?;
    }
    Ok(TensorSymbolRep {
        p,
        branches,
        x_u,
        y_u,
        x_v,
        y_v,
    })
}

/// Models whose loops act on the fibre by a projective gate.
pub trait LoopMonodromy {
    fn monodromy(&self, lp: Loop) -> Result<ProjectiveGate>;
}

impl LoopMonodromy for SymbolRep {
    /// `[y]` for the u-loop and `[x⁻¹]` for the v-loop.
    fn monodromy(&self, lp: Loop) -> Result<ProjectiveGate> {
        let zeta = CycNum::zeta(self.m);
        let (g, moved, fixed) = match lp {
            Loop::U => (self.y_op.clone(), &self.x_op, &self.y_op),
            Loop::V => (self.x_op.inverse()?, &self.y_op, &self.x_op),
        };
        // the branch of the moved generator picks up ζ; conjugation by g must
        // reproduce that and leave the other generator alone
        relation(conj(&g, moved)? == moved.scale(&zeta), "monodromy absorbs branch change")?;
        relation(conj(&g, fixed)? == *fixed, "monodromy fixes the other generator")?;
        ProjectiveGate::new(g)
    }
}

impl LoopMonodromy for TensorSymbolRep {
    /// `[y_u]` for the u-loop and `[y_v]` for the v-loop.
    fn monodromy(&self, lp: Loop) -> Result<ProjectiveGate> {
        let zeta = CycNum::zeta(self.p);
        let (g, moved, others) = match lp {
            Loop::U => (&self.y_u, &self.x_u, [&self.y_u, &self.x_v, &self.y_v]),
            Loop::V => (&self.y_v, &self.x_v, [&self.y_v, &self.x_u, &self.y_u]),
        };
        relation(conj(g, moved)? == moved.scale(&zeta), "monodromy absorbs branch change")?;
        for o in others {
            relation(conj(g, o)? == *o, "monodromy fixes the remaining generators")?;
        }
        ProjectiveGate::new(g.clone())
    }
}

pub fn monodromy_of_loop<R: LoopMonodromy + ?Sized>(rep: &R, lp: Loop) -> Result<ProjectiveGate> {
    rep.monodromy(lp)
}
