mod common;

use proptest::prelude::*;
use segre_core::tensorstate::{index_decode, index_encode, is_product_all_cuts, local_operator, schmidt_rank};
use segre_core::{Bipartition, CycNum, StateVector, SubsystemType};

fn subsystem_type() -> impl Strategy<Value = SubsystemType> {
    prop::collection::vec(1usize..=4, 1..=4).prop_map(|v| SubsystemType::new(v).unwrap())
}

proptest! {
    #[test]
    fn codec_round_trip(d in subsystem_type(), seed in any::<u64>()) {
        let r = (seed as usize) % d.total();
        let digits = index_decode(r, &d).unwrap();
        prop_assert_eq!(index_encode(&digits, &d).unwrap(), r);
        for (x, &dim) in digits.iter().zip(d.factors()) {
            prop_assert!(*x < dim);
        }
    }

    #[test]
    fn product_states_are_product(d in subsystem_type(), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let factors: Vec<Vec<CycNum>> = d
            .factors()
            .iter()
            .map(|&n| common::rand_state(&mut rng, n, 4).amplitudes().to_vec())
            .collect();
        let psi = StateVector::product(&factors);
        prop_assert!(is_product_all_cuts(&psi, &d).unwrap());
    }
}

#[test]
fn local_operations_preserve_schmidt_rank() {
    let mut rng = common::rng(7);
    for (d, cut) in [
        (vec![2, 2], vec![0]),
        (vec![2, 3], vec![0]),
        (vec![3, 3], vec![1]),
        (vec![2, 2, 2], vec![0, 2]),
    ] {
        let d = SubsystemType::new(d).unwrap();
        let cut = Bipartition::new(cut, d.len()).unwrap();
        for _ in 0..10 {
            let psi = common::rand_state(&mut rng, d.total(), 4);
            let ops: Vec<_> = d.factors().iter().map(|&n| common::rand_invertible(&mut rng, n, 4)).collect();
            let g = local_operator(&ops);
            assert_eq!(
                schmidt_rank(&psi, &d, &cut).unwrap(),
                schmidt_rank(&psi.apply(&g).unwrap(), &d, &cut).unwrap()
            );
        }
    }
}

#[test]
fn schmidt_rank_symmetric_in_cut() {
    let mut rng = common::rng(11);
    let d = SubsystemType::new(vec![2, 3, 2]).unwrap();
    for cut in d.single_factor_cuts() {
        let psi = common::rand_state(&mut rng, d.total(), 3);
        assert_eq!(
            schmidt_rank(&psi, &d, &cut).unwrap(),
            schmidt_rank(&psi, &d, &cut.swapped()).unwrap()
        );
    }
}
