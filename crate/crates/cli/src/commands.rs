//! One function per subcommand; each returns the JSON report.

use num_integer::Integer;
use serde_json::{json, Value};

use segre_core::detinv::{
    hilbert_polynomial, hilbert_series_coeffs, moduli_dimension, quadric_discriminant, rank_locus_profile,
};
use segre_core::exactmath::scalar::rational_string;
use segre_core::reduce::{
    curve_degree_obstruction, example_catalog, moduli_brauer_order, split_decompose, split_decompose_2x2,
    split_decompose_multi, torsion_verdict, BrauerClassModel, SplittingType,
};
use segre_core::spinchain::{gluing_report, SpinChainParams};
use segre_core::tensorstate::schmidt_rank;
use segre_core::weylmono::{
    build_symbol_rep, build_tensor_symbol_rep, commutator_scalar, entangling_witness, monodromy_of_loop,
    stabilizer_member, EntanglingWitness, Loop, LoopMonodromy, ProjectiveGate, TensorBranches,
};
use segre_core::{Bipartition, Rational, StateVector, SubsystemType};

use crate::args::{
    Cli, Command, FiltrationArgs, LoopArg, Model, MonodromyArgs, ObstructionArgs, SpinchainArgs, SplittingArgs,
};
use crate::{Failure, Outcome};

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let Some(command) = &cli.command else {
        return Err(Failure::Usage("a subcommand or --corpus is required".into()));
    };
    log::debug!("dispatching {command:?}");
    let report = match command {
        Command::Filtration(a) => filtration(a)?,
        Command::Splitting(a) => splitting(a)?,
        Command::Monodromy(a) => monodromy(a)?,
        Command::Obstruction(a) => obstruction(a)?,
        Command::Spinchain(a) => spinchain(a)?,
        Command::Catalog => catalog(),
    };
    Ok(Outcome::ok(report))
}

fn header(command: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!("1"));
    m.insert("command".into(), json!(command));
    m
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn subsystem_type(dims: &[usize]) -> Result<SubsystemType, Failure> {
    Ok(SubsystemType::new(dims.to_vec())?)
}

fn filtration(a: &FiltrationArgs) -> Result<Value, Failure> {
    let mut out = header("filtration");
    out.insert("d_a".into(), json!(a.da));
    out.insert("d_b".into(), json!(a.db));
    let max_r = a.da.min(a.db);
    if max_r == 0 {
        return Err(segre_core::Error::Precondition("local dimensions must be positive".into()).into());
    }
    let mut rows = Vec::new();
    for r in 1..=max_r {
        let p = rank_locus_profile(a.da, a.db, r)?;
        let poly = hilbert_polynomial(a.da, a.db, r)?;
        let mut row = serde_json::Map::new();
        row.insert("r".into(), json!(r));
        row.insert("dim".into(), json!(p.dim));
        row.insert("codim".into(), json!(p.codim));
        row.insert("degree".into(), to_value(&p)["degree"].clone());
        row.insert("hilbert_poly".into(), json!(poly.iter().map(rational_string).collect::<Vec<_>>()));
        if let Some(t_max) = a.t_max {
            let series = hilbert_series_coeffs(a.da, a.db, r, t_max);
            row.insert("series".into(), json!(series.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
        }
        rows.push(Value::Object(row));
    }
    out.insert("rows".into(), Value::Array(rows));
    let d = subsystem_type(&[a.da as usize, a.db as usize])?;
    out.insert("moduli_dimension".into(), json!(moduli_dimension(&d)));
    if (a.da, a.db) == (2, 2) {
        // the Segre surface is the quadric x0·x3 − x1·x2
        let mut q: [Rational; 10] = std::array::from_fn(|_| Rational::from_integer(0.into()));
        q[3] = Rational::from_integer(1.into());
        q[5] = Rational::from_integer((-1).into());
        out.insert("segre_quadric_discriminant".into(), json!(rational_string(&quadric_discriminant(&q))));
    }
    Ok(Value::Object(out))
}

fn splitting(a: &SplittingArgs) -> Result<Value, Failure> {
    let d = subsystem_type(&a.dims)?;
    let st = SplittingType::new(a.degrees.clone());
    let mut out = header("splitting");
    out.insert("degrees".into(), json!(st.degrees()));
    out.insert("type".into(), json!(d.factors()));
    if d.len() == 2 {
        let found = split_decompose(&st, d.factors()[0], d.factors()[1])?;
        out.insert("reducible".into(), json!(found.is_some()));
        match found {
            Some(t) => {
                out.insert("b".into(), json!(t.b));
                out.insert("c".into(), json!(t.c));
                out.insert("t".into(), json!(t.t));
            }
            None => {
                for k in ["b", "c", "t"] {
                    out.insert(k.into(), Value::Null);
                }
            }
        }
        if d.factors() == [2, 2] {
            out.insert("closed_form".into(), json!(split_decompose_2x2(&st)?));
        }
    } else {
        let found = split_decompose_multi(&st, &d)?;
        out.insert("reducible".into(), json!(found.is_some()));
        out.insert("parts".into(), found.as_ref().map_or(Value::Null, |f| json!(f.parts)));
        out.insert("t".into(), found.as_ref().map_or(Value::Null, |f| json!(f.t)));
    }
    Ok(Value::Object(out))
}

/// Names the familiar entangled images: two-term superpositions of the
/// all-zeros and all-ones qubit states.
fn witness_label(image: &StateVector, d: &SubsystemType) -> &'static str {
    let support: Vec<usize> = image
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, _)| i)
        .collect();
    let qubits = d.factors().iter().all(|&x| x == 2);
    if qubits && support == [0, d.total() - 1] {
        if d.len() == 2 {
            "Bell"
        } else {
            "GHZ"
        }
    } else {
        "entangled"
    }
}

fn witness_json(w: &EntanglingWitness, d: &SubsystemType, cut: &Bipartition) -> Result<Value, Failure> {
    let input_rank = schmidt_rank(&w.input, d, cut)?;
    Ok(json!({
        "label": witness_label(&w.image, d),
        "cut": cut.side_a(),
        "input": to_value(&w.input),
        "input_schmidt_rank": input_rank,
        "image": to_value(&w.image),
        "schmidt_rank": w.schmidt_rank,
    }))
}

fn monodromy(a: &MonodromyArgs) -> Result<Value, Failure> {
    let d = subsystem_type(&a.dims)?;
    let lp = match a.lp {
        LoopArg::U => Loop::U,
        LoopArg::V => Loop::V,
    };
    let mut out = header("monodromy");
    let (rep, label): (Box<dyn LoopMonodromy>, &str) = match a.model {
        Model::Kummer => {
            out.insert("model".into(), json!("kummer"));
            out.insert("m".into(), json!(a.m));
            let rep = build_symbol_rep(a.m, a.u_branch.clone(), a.v_branch.clone())?;
            let label = if lp == Loop::U { "Z" } else { "X^-1" };
            (Box::new(rep), label)
        }
        Model::Tensor => {
            let p = a.p.ok_or_else(|| Failure::Usage("--p is required for the tensor model".into()))?;
            out.insert("model".into(), json!("tensor"));
            out.insert("p".into(), json!(p));
            let branches = TensorBranches {
                u: a.u_branch.clone(),
                v: a.v_branch.clone(),
                a: a.a_branch.clone(),
                b: a.b_branch.clone(),
            };
            let rep = build_tensor_symbol_rep(p, branches)?;
            let label = if lp == Loop::U { "Z⊗I" } else { "I⊗Z" };
            (Box::new(rep), label)
        }
    };
    let gate = monodromy_of_loop(rep.as_ref(), lp)?;
    if gate.dim() != d.total() {
        return Err(segre_core::Error::Precondition(format!(
            "type {d} has dimension {} but the gate acts on dimension {}",
            d.total(),
            gate.dim()
        ))
        .into());
    }
    let other = monodromy_of_loop(rep.as_ref(), if lp == Loop::U { Loop::V } else { Loop::U })?;
    let (gu, gv): (&ProjectiveGate, &ProjectiveGate) = if lp == Loop::U { (&gate, &other) } else { (&other, &gate) };
    let decision = stabilizer_member(&gate, &d)?;
    let cut = Bipartition::new(a.cut.clone(), d.len())?;
    let witness = match entangling_witness(&gate, &d, &cut)? {
        Some(w) => witness_json(&w, &d, &cut)?,
        None => Value::Null,
    };
    out.insert("type".into(), json!(d.factors()));
    out.insert("loop".into(), json!(if lp == Loop::U { "u" } else { "v" }));
    out.insert("gate".into(), json!(label));
    out.insert("matrix".into(), to_value(&gate));
    out.insert("stabilizer_member".into(), json!(decision.is_member()));
    out.insert("stabilizer".into(), to_value(&decision));
    out.insert("witness".into(), witness);
    out.insert("commutator_scalar".into(), json!(commutator_scalar(gu, gv)?.to_string()));
    Ok(Value::Object(out))
}

fn obstruction(a: &ObstructionArgs) -> Result<Value, Failure> {
    let d = a.dims.as_deref().map(subsystem_type).transpose()?;
    let mut out = header("obstruction");
    if let Some(d) = &d {
        out.insert("type".into(), json!(d.factors()));
    }
    let mut any = false;

    let beta = match (a.period, a.symbol, a.tensor_p) {
        (Some(n), _, _) => Some(BrauerClassModel::declared(n, "declared")?),
        (_, Some(m), _) => Some(BrauerClassModel::generic_symbol(m)?),
        (_, _, Some(p)) => Some(BrauerClassModel::tensor_of_p_symbols(p)?),
        _ => None,
    };
    if let Some(beta) = beta {
        any = true;
        let d = d.as_ref().ok_or_else(|| Failure::Usage("the torsion test needs --type".into()))?;
        let verdict = torsion_verdict(&beta, d);
        out.insert(
            "torsion".into(),
            json!({
                "class": to_value(&beta),
                "lcm": d.lcm(),
                "admissible": verdict == segre_core::reduce::TorsionVerdict::NotObstructedByTorsion,
                "verdict": verdict.as_str(),
            }),
        );
    }

    if let Some(deg) = a.curve_degree {
        any = true;
        let d = d.as_ref().ok_or_else(|| Failure::Usage("--curve-degree needs --type".into()))?;
        if d.len() != 2 {
            return Err(segre_core::Error::Precondition(format!(
                "the curve-degree test is for two-factor types, got {d}"
            ))
            .into());
        }
        let (da, db) = (d.factors()[0] as u64, d.factors()[1] as u64);
        let ok = curve_degree_obstruction(deg, da, db);
        out.insert(
            "curve".into(),
            json!({
                "degree": deg,
                "gcd": da.gcd(&db),
                "passes": ok,
                "verdict": if ok { "not obstructed by degree" } else { "obstructed" },
            }),
        );
    }

    if let (Some(r), Some(deg)) = (a.moduli_rank, a.moduli_degree) {
        any = true;
        let order = moduli_brauer_order(r, deg)?;
        let mut moduli = json!({"rank": r, "degree": deg, "brauer_order": order});
        if let Some(d) = &d {
            let alpha = BrauerClassModel::declared(order, "generator of Br(M)")?;
            moduli["generator_verdict"] = json!(torsion_verdict(&alpha, d).as_str());
        }
        out.insert("moduli".into(), moduli);
    }

    if !any {
        return Err(Failure::Usage(
            "nothing to check: give --period/--symbol/--tensor-p, --curve-degree, or --moduli-rank with --moduli-degree"
                .into(),
        ));
    }
    Ok(Value::Object(out))
}

fn spinchain(a: &SpinchainArgs) -> Result<Value, Failure> {
    let params = SpinChainParams::new(a.j.clone(), a.delta.clone(), a.branch.clone())?;
    let report = gluing_report(&params)?;
    let mut out = header("spinchain");
    out.insert("j".into(), json!(rational_string(params.j())));
    out.insert("delta".into(), json!(rational_string(params.delta())));
    out.insert("u_branch".into(), json!(params.u_branch().to_string()));
    out.insert("u".into(), json!(params.u().to_string()));
    if let Value::Object(fields) = to_value(&report) {
        out.extend(fields);
    }
    Ok(Value::Object(out))
}

fn catalog() -> Value {
    let entries = example_catalog();
    let all = entries.iter().all(|e| e.passed);
    let mut out = header("catalog");
    out.insert("entries".into(), to_value(&entries));
    out.insert("all_passed".into(), json!(all));
    Value::Object(out)
}
