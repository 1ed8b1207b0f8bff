//! Exact integer-lattice linear algebra.
//!
//! Lattices are always row spans. A [`Sublattice`] stores its basis in row
//! Hermite normal form, which is unique per lattice, so two sublattices are
//! equal exactly when their stored bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. `cols` is needed so that an empty row list
    /// still has a well-defined shape.
    pub fn from_rows(cols: usize, rows: &[Vec<BigInt>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// Panics if the rows are ragged.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, &rows).expect("ragged literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn row_mut(&mut self, r: usize) -> &mut [BigInt] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * &other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(r)) {
                *o += x * a;
            }
        }
        Ok(out)
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination. `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return Some(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_some_and(|d| d.abs().is_one())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = q * &self[(src, c)];
            self[(dst, c)] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = q * &self[(r, src)];
            self[(r, dst)] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for x in self.row_mut(r) {
            *x = -std::mem::take(x);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|r| {
                self.row(r)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// Row Hermite normal form: returns `(h, u)` with `u * m = h`, `u` unimodular.
///
/// `h` is in row echelon form with positive pivots; entries above a pivot lie
/// in `[0, pivot)`. Zero rows are kept at the bottom, so `h` has the same
/// shape as `m`.
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(m.rows);
    let mut p = 0;
    for col in 0..m.cols {
        if p == m.rows {
            break;
        }
        loop {
            let best = (p..m.rows)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(p, best);
            u.swap_rows(p, best);
            let mut clean = true;
            for r in p + 1..m.rows {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = h[(r, col)].div_floor(&h[(p, col)]);
                h.sub_row_multiple(r, p, &q);
                u.sub_row_multiple(r, p, &q);
                clean &= h[(r, col)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(p, col)].is_zero() {
            continue;
        }
        if h[(p, col)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for r in 0..p {
            let q = h[(r, col)].div_floor(&h[(p, col)]);
            h.sub_row_multiple(r, p, &q);
            u.sub_row_multiple(r, p, &q);
        }
        p += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(s, u, v)` with `u * m * v = s`.
///
/// `s` is diagonal with nonnegative entries `d1 | d2 | ...`; `u` and `v` are
/// unimodular.
pub fn smith_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if s[(r, c)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| s[(r, c)].abs() < s[(br, bc)].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, br);
            u.swap_rows(t, br);
            s.swap_cols(t, bc);
            v.swap_cols(t, bc);

            let mut clean = true;
            for r in t + 1..rows {
                let q = s[(r, t)].div_floor(&s[(t, t)]);
                s.sub_row_multiple(r, t, &q);
                u.sub_row_multiple(r, t, &q);
                clean &= s[(r, t)].is_zero();
            }
            for c in t + 1..cols {
                let q = s[(t, c)].div_floor(&s[(t, t)]);
                s.sub_col_multiple(c, t, &q);
                v.sub_col_multiple(c, t, &q);
                clean &= s[(t, c)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce d_t | every remaining entry by folding an offending row in.
            let offending = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| !s[(r, c)].is_multiple_of(&s[(t, t)])));
            match offending {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    s.sub_row_multiple(t, r, &minus_one);
                    u.sub_row_multiple(t, r, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Number of nonzero rows in the Hermite form, i.e. the rank over the rationals.
pub fn matrix_rank(m: &IntegerMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows).filter(|&r| !h.is_zero_row(r)).count()
}

/// A sublattice of `Z^ambient_rank`, stored by its canonical Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntegerMatrix,
}

impl Sublattice {
    /// The lattice spanned by the rows of `gens`.
    pub fn span(gens: &IntegerMatrix) -> Self {
        let (h, _) = hermite_normal_form(gens);
        let rows: Vec<Vec<BigInt>> = (0..h.rows)
            .filter(|&r| !h.is_zero_row(r))
            .map(|r| h.row(r).to_vec())
            .collect();
        Self {
            ambient_rank: gens.cols,
            basis: IntegerMatrix::from_rows(gens.cols, &rows).expect("rows share width"),
        }
    }

    pub fn span_of(ambient_rank: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        Ok(Self::span(&IntegerMatrix::from_rows(ambient_rank, gens)?))
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            basis: IntegerMatrix::zeros(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            basis: IntegerMatrix::identity(ambient_rank),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    /// Integer coefficients expressing `v` in the stored basis, if `v` is in
    /// the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for r in 0..self.rank() {
            let row = self.basis.row(r);
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            // Everything left of this pivot must already be cleared.
            if rest[..pivot].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, rem) = rest[pivot].div_rem(&row[pivot]);
            if !rem.is_zero() {
                return Ok(None);
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> Result<bool> {
        for r in 0..other.rank() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_saturated(&self) -> bool {
        let (s, _, _) = smith_normal_form(&self.basis);
        (0..self.rank()).all(|i| s[(i, i)].is_one())
    }
}

/// Left kernel `{ z : z * m = 0 }` as a sublattice of `Z^rows(m)`.
pub fn kernel_lattice(m: &IntegerMatrix) -> Sublattice {
    let (h, u) = hermite_normal_form(m);
    let rows: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&r| h.is_zero_row(r))
        .map(|r| u.row(r).to_vec())
        .collect();
    Sublattice::span(&IntegerMatrix::from_rows(m.rows, &rows).expect("rows share width"))
}

/// `(L ⊗ Q) ∩ Z^n`, computed as the double orthogonal of `L`.
pub fn saturate(sub: &Sublattice) -> Sublattice {
    // Rows of `perp` span { x : B x = 0 }; the saturation is everything
    // orthogonal to those.
    let perp = kernel_lattice(&sub.basis.transpose());
    kernel_lattice(&perp.basis.transpose())
}

pub fn lattice_member(sub: &Sublattice, v: &[BigInt]) -> Result<bool> {
    sub.contains(v)
}
