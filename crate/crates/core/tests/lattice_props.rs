mod common;

use common::matrix;
use idempotoric::lattice::{
    hermite_normal_form, kernel_lattice, matrix_rank, saturate, smith_normal_form, IntegerMatrix,
    Sublattice,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn to_matrix(cols: usize, rows: &[Vec<BigInt>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(cols, rows).unwrap()
}

fn is_hermite(h: &IntegerMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for r in 0..h.rows() {
        let Some(p) = h.row(r).iter().position(|x| !x.is_zero()) else {
            seen_zero = true;
            continue;
        };
        if seen_zero || last_pivot.is_some_and(|q| p <= q) || !h[(r, p)].is_positive() {
            return false;
        }
        if (0..r).any(|above| h[(above, p)].is_negative() || h[(above, p)] >= h[(r, p)]) {
            return false;
        }
        last_pivot = Some(p);
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hermite_form_is_a_unimodular_transform((cols, rows) in matrix(0..=5, 1..=5, 6)) {
        let m = to_matrix(cols, &rows);
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert!(u.determinant().unwrap().abs().is_one());
        prop_assert!(is_hermite(&h));
        // The form is canonical, so reducing it again changes nothing.
        prop_assert_eq!(hermite_normal_form(&h).0, h);
    }

    #[test]
    fn smith_form_is_a_divisibility_chain((cols, rows) in matrix(1..=4, 1..=4, 6)) {
        let m = to_matrix(cols, &rows);
        let (s, u, v) = smith_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), s.clone());
        prop_assert!(u.is_unimodular() && v.is_unimodular());
        let k = s.rows().min(s.cols());
        for r in 0..s.rows() {
            for c in 0..s.cols() {
                if r != c {
                    prop_assert!(s[(r, c)].is_zero());
                }
            }
        }
        for i in 0..k {
            prop_assert!(!s[(i, i)].is_negative());
            if i + 1 < k && !s[(i, i)].is_zero() {
                prop_assert!((&s[(i + 1, i + 1)] % &s[(i, i)]).is_zero());
            }
            if s[(i, i)].is_zero() {
                prop_assert!((i..k).all(|j| s[(j, j)].is_zero()));
            }
        }
        let nonzero = (0..k).filter(|&i| !s[(i, i)].is_zero()).count();
        prop_assert_eq!(nonzero, matrix_rank(&m));
    }

    #[test]
    fn kernel_rank_identity((cols, rows) in matrix(0..=6, 1..=4, 5)) {
        let m = to_matrix(cols, &rows);
        let k = kernel_lattice(&m);
        prop_assert_eq!(k.rank() + matrix_rank(&m), m.rows());
        for z in k.basis().to_rows() {
            prop_assert!(m.left_mul_vec(&z).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert!(k.is_saturated());
    }

    #[test]
    fn saturation_laws((cols, rows) in matrix(0..=4, 1..=4, 6)) {
        let l = Sublattice::span_of(cols, &rows).unwrap();
        let sat = saturate(&l);
        prop_assert!(sat.contains_lattice(&l).unwrap());
        prop_assert_eq!(sat.rank(), l.rank());
        prop_assert!(sat.is_saturated());
        prop_assert_eq!(saturate(&sat), sat.clone());
        prop_assert_eq!(l.is_saturated(), l == sat);
    }

    #[test]
    fn combinations_are_members(
        (cols, rows) in matrix(1..=4, 1..=4, 6),
        coeffs in prop::collection::vec(-5i64..=5, 4),
    ) {
        let l = Sublattice::span_of(cols, &rows).unwrap();
        let mut v = vec![BigInt::zero(); cols];
        for (row, c) in rows.iter().zip(&coeffs) {
            for (x, r) in v.iter_mut().zip(row) {
                *x += r * c;
            }
        }
        prop_assert!(l.contains(&v).unwrap());
        let coords = l.coordinates(&v).unwrap().unwrap();
        prop_assert_eq!(l.basis().left_mul_vec(&coords).unwrap(), v);
    }
}
