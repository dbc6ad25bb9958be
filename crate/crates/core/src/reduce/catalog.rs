//! Named scenarios, each recomputed from scratch when the catalog is built.

use serde::Serialize;

use super::brauer::{curve_degree_obstruction, moduli_brauer_order, torsion_admissible, BrauerClassModel};
use super::{split_decompose, split_decompose_multi, SplittingType};
use crate::tensorstate::SubsystemType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub statement: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

fn entry(name: &str, statement: impl Into<String>, expected: impl ToString, observed: impl ToString) -> CatalogEntry {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    CatalogEntry {
        name: name.to_string(),
        statement: statement.into(),
        passed: expected == observed,
        expected,
        observed,
    }
}

fn reducibility(reducible: bool) -> &'static str {
    if reducible {
        "reducible"
    } else {
        "irreducible"
    }
}

fn ty(v: &[usize]) -> SubsystemType {
    SubsystemType::new(v.to_vec()).expect("catalog types are valid")
}

/// Ordered factorizations of `n` into at least two factors, all ≥ 2.
fn proper_types(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for f in 2..=n {
            if n.is_multiple_of(f) {
                cur.push(f);
                go(n / f, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn reducible(a: &SplittingType, d: &SubsystemType) -> bool {
    split_decompose_multi(a, d).expect("lengths match").is_some()
}

pub fn example_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();

    let e_red = SplittingType::new(vec![0, 0, 1, 1]);
    let e_irr = SplittingType::new(vec![0, 0, 0, 1]);
    let red = split_decompose(&e_red, 2, 2).expect("length 4").is_some();
    let irr = split_decompose(&e_irr, 2, 2).expect("length 4").is_some();
    out.push(entry(
        "same-class-different-reducibility",
        "O^2 ⊕ O(1)^2 and O^3 ⊕ O(1) have the same (trivial) Brauer class but only the first is (2,2)-reducible",
        "reducible/irreducible",
        format!("{}/{}", reducibility(red), reducibility(irr)),
    ));
    let trivial = BrauerClassModel::declared(1, "0").expect("period 1");
    out.push(entry(
        "torsion-blind-to-splitting",
        "the trivial class passes the torsion test at (2,2) for both bundles",
        true,
        torsion_admissible(&trivial, &ty(&[2, 2])),
    ));

    // (0, …, 0, 1): the least degree has multiplicity n − 1, which no proper
    // sumset can produce
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 4..=16 {
        let mut a = vec![0; n - 1];
        a.push(1);
        let a = SplittingType::new(a);
        for d in proper_types(n) {
            checked += 1;
            if reducible(&a, &ty(&d)) {
                failures.push(format!("{d:?}"));
            }
        }
    }
    out.push(entry(
        "minimal-degree-multiplicity",
        format!("(0,…,0,1) is irreducible at all {checked} proper types with n <= 16"),
        "none reducible",
        if failures.is_empty() {
            "none reducible".to_string()
        } else {
            format!("reducible at {}", failures.join(", "))
        },
    ));
    let mut e8 = vec![0; 7];
    e8.push(1);
    let e8 = SplittingType::new(e8);
    for d in [[2usize, 2, 2].as_slice(), &[4, 2]] {
        out.push(entry(
            &format!("minimal-degree-{}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("x")),
            format!("(0,0,0,0,0,0,0,1) at {}", ty(d)),
            "irreducible",
            reducibility(reducible(&e8, &ty(d))),
        ));
    }

    for p in [2u64, 3, 5] {
        let beta = BrauerClassModel::generic_symbol(p * p).expect("positive");
        out.push(entry(
            &format!("period-p2-at-pp-p{p}"),
            format!("a symbol of period {} is not ({p},{p})-admissible", p * p),
            false,
            torsion_admissible(&beta, &ty(&[p as usize, p as usize])),
        ));
    }
    let beta8 = BrauerClassModel::generic_symbol(8).expect("positive");
    for d in [[2usize, 2, 2].as_slice(), &[4, 2]] {
        out.push(entry(
            &format!("period-8-at-{}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("x")),
            format!("period 8 does not divide lcm{}", ty(d)),
            false,
            torsion_admissible(&beta8, &ty(d)),
        ));
    }
    for p in [2u64, 3, 5] {
        let beta = BrauerClassModel::tensor_of_p_symbols(p).expect("positive");
        out.push(entry(
            &format!("tensor-symbols-p{p}"),
            format!("a tensor of two degree-{p} symbols passes the torsion test at ({p},{p})"),
            true,
            torsion_admissible(&beta, &ty(&[p as usize, p as usize])),
        ));
    }
    for p in [2u64, 3, 5] {
        out.push(entry(
            &format!("curve-degree-one-p{p}"),
            format!("a degree-1 projective bundle on a curve is not ({p},{p})-reducible"),
            false,
            curve_degree_obstruction(1, p, p),
        ));
    }
    let order = moduli_brauer_order(4, 8).expect("rank >= 2");
    let alpha = BrauerClassModel::declared(order, "generator of Br(M)").expect("positive");
    out.push(entry(
        "moduli-generator-r4-deg8",
        "Br of rank-4 degree-8 moduli is cyclic of order 4 and its generator is not (2,2)-admissible",
        "4/false",
        format!("{order}/{}", torsion_admissible(&alpha, &ty(&[2, 2]))),
    ));
    out
}
