//! Random instances for self-checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

/// A random generator list: ambient dimension in `1..=max_dim`, between one
/// and `max_gens` generators, entries in `[-bound, bound]`.
pub fn random_generators<R: Rng>(
    rng: &mut R,
    max_dim: usize,
    max_gens: usize,
    bound: i64,
) -> (usize, Vec<Vec<BigInt>>) {
    let dim = rng.gen_range(1..=max_dim);
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect();
    (dim, gens)
}

/// Between one and `max_len` nonzero rationals with numerator and
/// denominator bounded by `bound` in absolute value.
pub fn random_eigenvalues<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> Vec<BigRational> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let mut p = rng.gen_range(1..=bound);
            if rng.gen_bool(0.5) {
                p = -p;
            }
            let q = rng.gen_range(1..=bound);
            BigRational::new(p.into(), q.into())
        })
        .collect()
}
