use num_bigint::BigInt;
use proptest::prelude::*;
use segre_core::{kron, CycNum, ExactMatrix, Rational};

const CONDUCTORS: [u32; 7] = [1, 2, 3, 4, 8, 9, 12];

fn cyc_in(m: u32) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-5i64..=5, 1i64..=3), m as usize).prop_map(move |v| {
        let coeffs: Vec<Rational> = v.into_iter().map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d))).collect();
        CycNum::from_coeffs(m, &coeffs)
    })
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|m| (cyc_in(m), cyc_in(m), cyc_in(m)))
}

fn mixed_pair() -> impl Strategy<Value = (CycNum, CycNum)> {
    (prop::sample::select(CONDUCTORS.to_vec()), prop::sample::select(CONDUCTORS.to_vec()))
        .prop_flat_map(|(m, n)| (cyc_in(m), cyc_in(n)))
}

fn matrix(rows: usize, cols: usize, m: u32) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(cyc_in(m), rows * cols).prop_map(move |e| {
        let rows_v: Vec<Vec<CycNum>> = e.chunks(cols).map(|c| c.to_vec()).collect();
        ExactMatrix::from_rows(rows_v).unwrap()
    })
}

fn any_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=4, 1usize..=4, prop::sample::select(vec![1u32, 3, 4]))
        .prop_flat_map(|(r, c, m)| matrix(r, c, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, CycNum::zero(a.conductor()));
        prop_assert_eq!(&a * &CycNum::one(), a.clone());
    }

    #[test]
    fn inverses((a, _, _) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn mixed_conductors((a, b) in mixed_pair()) {
        let s = &a + &b;
        prop_assert_eq!(&s - &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn display_round_trip((a, _, _) in triple()) {
        let back: CycNum = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rank_of_transpose(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn projective_scalar_recovered(m in any_matrix(), lambda in cyc_in(8)) {
        prop_assume!(!m.is_zero() && !lambda.is_zero());
        prop_assert_eq!(m.scale(&lambda).projective_equal(&m).unwrap(), Some(lambda));
    }

    #[test]
    fn kron_rank_multiplies(a in any_matrix(), b in any_matrix()) {
        prop_assert_eq!(kron(&a, &b).rank(), a.rank() * b.rank());
    }

    #[test]
    fn determinant_multiplicative(a in matrix(3, 3, 4), b in matrix(3, 3, 4)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn inverse_round_trip(a in matrix(3, 3, 3)) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(a.checked_mul(&inv).unwrap(), ExactMatrix::identity(3)),
            Err(_) => prop_assert!(a.rank() < 3),
        }
    }

    #[test]
    fn char_poly_vanishes_at_matrix(a in matrix(3, 3, 4)) {
        // Cayley–Hamilton
        let cp = a.char_poly().unwrap();
        let mut acc = ExactMatrix::zeros(3, 3);
        let mut power = ExactMatrix::identity(3);
        for c in &cp {
            acc = acc.checked_add(&power.scale(c)).unwrap();
            power = power.checked_mul(&a).unwrap();
        }
        prop_assert!(acc.is_zero());
    }
}

#[test]
fn roots_of_unity_orders() {
    for m in [1u32, 2, 3, 4, 5, 6, 8, 9, 12, 16] {
        for k in 0..m as i64 {
            let z = CycNum::root_of_unity(m, k);
            let expect = m / num_integer::gcd(m, k as u32);
            assert_eq!(z.root_of_unity_order(), Some(expect), "m={m} k={k}");
        }
    }
    assert_eq!(CycNum::from_int(2).root_of_unity_order(), None);
}
