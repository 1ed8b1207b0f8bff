#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `rows x cols` integer matrices with entries in `[-bound, bound]`.
pub fn matrix(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = (usize, Vec<Vec<BigInt>>)> {
    (rows, cols).prop_flat_map(move |(r, c)| {
        (
            Just(c),
            prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
                .prop_map(|m| m.iter().map(|row| ints(row)).collect()),
        )
    })
}

/// Nonzero rationals as `(numerator, denominator)`.
pub fn spectrum(max_len: usize, bound: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec(
        ((1..=bound), any::<bool>(), (1..=bound))
            .prop_map(|(p, neg, q)| (if neg { -p } else { p }, q)),
        1..=max_len,
    )
}
