mod common;

use segre_core::tensorstate::{local_operator, permutation_operator, schmidt_rank};
use segre_core::weylmono::{
    build_symbol_rep, build_weyl, commutator_scalar, entangling_witness, factor_local, monodromy_of_loop,
    realignment, stabilizer_member, Loop, ProjectiveGate,
};
use segre_core::{Bipartition, CycNum, ExactMatrix, SubsystemType};

#[test]
fn realignment_rank_one_iff_kronecker() {
    let mut rng = common::rng(2024);
    for _ in 0..60 {
        let a = common::rand_nonzero_matrix(&mut rng, 2, 2, 4);
        let b = common::rand_nonzero_matrix(&mut rng, 2, 2, 4);
        let g = local_operator(&[a, b]);
        assert!(common::is_block_kronecker(&g, 2));
        assert_eq!(realignment(&g, 2, 2).unwrap().rank(), 1);
    }
    let mut seen = 0;
    while seen < 60 {
        let g = common::rand_nonzero_matrix(&mut rng, 4, 4, 4);
        let oracle = common::is_block_kronecker(&g, 2);
        assert_eq!(realignment(&g, 2, 2).unwrap().rank() == 1, oracle);
        if !oracle {
            seen += 1;
        }
    }
}

#[test]
fn random_local_gates_are_members() {
    let mut rng = common::rng(5);
    for dims in [vec![2, 2], vec![2, 3], vec![3, 2], vec![2, 2, 2]] {
        let d = SubsystemType::new(dims.clone()).unwrap();
        for _ in 0..5 {
            let ops: Vec<ExactMatrix> = dims.iter().map(|&n| common::rand_invertible(&mut rng, n, 4)).collect();
            let g = ProjectiveGate::new(local_operator(&ops)).unwrap();
            assert!(stabilizer_member(&g, &d).unwrap().is_member());
            let factors = factor_local(g.matrix(), &d).unwrap().unwrap();
            assert_eq!(local_operator(&factors), *g.matrix());
        }
    }
}

#[test]
fn permuted_local_gates_are_members() {
    let mut rng = common::rng(6);
    let d = SubsystemType::new(vec![2, 2, 2]).unwrap();
    for perm in [[1usize, 0, 2], [2, 0, 1], [1, 2, 0]] {
        let ops: Vec<ExactMatrix> = (0..3).map(|_| common::rand_invertible(&mut rng, 2, 3)).collect();
        let g = local_operator(&ops).checked_mul(&permutation_operator(&d, &perm).unwrap()).unwrap();
        let g = ProjectiveGate::new(g).unwrap();
        assert!(stabilizer_member(&g, &d).unwrap().is_member(), "{perm:?}");
    }
}

#[test]
fn membership_is_conjugation_invariant() {
    let mut rng = common::rng(8);
    let d = SubsystemType::new(vec![2, 2]).unwrap();
    let w = build_weyl(4).unwrap();
    for _ in 0..5 {
        let ops: Vec<ExactMatrix> = (0..2).map(|_| common::rand_invertible(&mut rng, 2, 4)).collect();
        let h = local_operator(&ops);
        let hinv = h.inverse().unwrap();
        for (g, member) in [(w.x_inv(), false), (w.z().clone(), true)] {
            let conj = ProjectiveGate::new(h.checked_mul(&g).unwrap().checked_mul(&hinv).unwrap()).unwrap();
            assert_eq!(stabilizer_member(&conj, &d).unwrap().is_member(), member);
        }
    }
}

#[test]
fn witnesses_are_genuine() {
    let w = build_weyl(4).unwrap();
    let d = SubsystemType::new(vec![2, 2]).unwrap();
    let cut = Bipartition::new(vec![0], 2).unwrap();
    let g = ProjectiveGate::new(w.x_inv()).unwrap();
    let wit = entangling_witness(&g, &d, &cut).unwrap().unwrap();
    assert_eq!(schmidt_rank(&wit.input, &d, &cut).unwrap(), 1);
    assert_eq!(wit.input.apply(g.matrix()).unwrap(), wit.image);
    assert_eq!(schmidt_rank(&wit.image, &d, &cut).unwrap(), wit.schmidt_rank);
    assert!(wit.schmidt_rank >= 2);
}

#[test]
fn monodromy_commutator_has_order_m() {
    for m in [2u32, 3, 4, 5, 8] {
        let rep = build_symbol_rep(m, CycNum::one(), CycNum::one()).unwrap();
        let gu = monodromy_of_loop(&rep, Loop::U).unwrap();
        let gv = monodromy_of_loop(&rep, Loop::V).unwrap();
        let c = commutator_scalar(&gu, &gv).unwrap();
        assert_eq!(c.root_of_unity_order(), Some(m));
    }
}

#[test]
fn members_have_no_witness_and_scaling_is_irrelevant() {
    let mut rng = common::rng(9);
    let d = SubsystemType::new(vec![2, 3]).unwrap();
    let cut = Bipartition::new(vec![0], 2).unwrap();
    for _ in 0..5 {
        let ops: Vec<ExactMatrix> = [2, 3].iter().map(|&n| common::rand_invertible(&mut rng, n, 4)).collect();
        let g = local_operator(&ops);
        let lambda = common::rand_nonzero_cyc(&mut rng, 8);
        for h in [g.clone(), g.scale(&lambda)] {
            let h = ProjectiveGate::new(h).unwrap();
            assert!(stabilizer_member(&h, &d).unwrap().is_member());
            assert!(entangling_witness(&h, &d, &cut).unwrap().is_none());
        }
    }
    let w = build_weyl(4).unwrap();
    let d = SubsystemType::new(vec![2, 2]).unwrap();
    let scaled = ProjectiveGate::new(w.x_inv().scale(&CycNum::root_of_unity(8, 3))).unwrap();
    assert!(!stabilizer_member(&scaled, &d).unwrap().is_member());
}
