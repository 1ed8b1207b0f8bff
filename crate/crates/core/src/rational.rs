//! Small exact helpers shared by the lattice and cone code: integer vector
//! arithmetic, primitive scaling, and rational Gaussian elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn to_q(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Clears denominators and divides out the content, keeping the direction.
pub fn primitive_from_rational(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    out
}

/// Rank of a list of integer vectors over the rationals.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    row_echelon(rows.iter().map(|r| to_q(r)).collect()).len()
}

/// Reduced row echelon form over the rationals; returns the nonzero rows.
pub fn row_echelon(mut m: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Orthogonal projection of `v` onto the complement of the span of `basis`.
///
/// `basis` must be linearly independent.
pub fn project_off(v: &[BigRational], basis: &[Vec<BigRational>]) -> Vec<BigRational> {
    if basis.is_empty() {
        return v.to_vec();
    }
    // Solve (B B^T) y = B v, then v - B^T y.
    let k = basis.len();
    let aug: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..k).map(|j| dot_q(&basis[i], &basis[j])).collect();
            row.push(dot_q(&basis[i], v));
            row
        })
        .collect();
    let reduced = row_echelon(aug);
    assert_eq!(reduced.len(), k, "projection basis must be independent");
    let mut out = v.to_vec();
    for (i, row) in reduced.iter().enumerate() {
        let y = &row[k];
        for (o, b) in out.iter_mut().zip(&basis[i]) {
            *o -= y * b;
        }
    }
    out
}

pub fn abs_max(v: &[BigInt]) -> BigInt {
    v.iter().map(Signed::abs).max().unwrap_or_default()
}
