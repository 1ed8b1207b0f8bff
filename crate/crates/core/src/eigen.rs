//! From the nonzero rational spectrum of a diagonalizable matrix `x` to the
//! toric monoid inside the closure of its powers, and the idempotents of
//! that closure.
//!
//! Over the rationals the torsion of the multiplicative group generated by
//! the eigenvalues is `{±1}`, so squaring every eigenvalue makes that group
//! free. The weight of eigenvalue `λ` is the prime exponent vector of `|λ|`.
//! The idempotents are the diagonal projections `e_I` with `I` a face index
//! set of the weight cone.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, IntegerMatrix};
use crate::lp::{Constraint, LinearSystem, Relation};
use crate::monoid::{self, IdempotentPoset, WeightMonoid};

pub const DEFAULT_RELATION_BOUND: u32 = 3;

/// Distinct nonzero eigenvalues in first-seen order, with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenInput {
    eigenvalues: Vec<BigRational>,
    multiplicities: Vec<usize>,
}

impl EigenInput {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        let mut eigenvalues: Vec<BigRational> = Vec::new();
        let mut multiplicities: Vec<usize> = Vec::new();
        for (position, v) in values.into_iter().enumerate() {
            if v.is_zero() {
                return Err(Error::ZeroEigenvalue { position });
            }
            match eigenvalues.iter().position(|e| *e == v) {
                Some(i) => multiplicities[i] += 1,
                None => {
                    eigenvalues.push(v);
                    multiplicities.push(1);
                }
            }
        }
        Ok(Self {
            eigenvalues,
            multiplicities,
        })
    }

    pub fn from_i64(values: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
        )
    }

    pub fn eigenvalues(&self) -> &[BigRational] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// The spectrum of `x^n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut values = Vec::new();
        for (v, &m) in self.eigenvalues.iter().zip(&self.multiplicities) {
            let p = num_traits::pow(v.clone(), n as usize);
            values.extend(std::iter::repeat_n(p, m));
        }
        Self::new(values).expect("powers of nonzero rationals are nonzero")
    }
}

/// Prime exponent vectors of the eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentTable {
    pub primes: Vec<BigUint>,
    /// Row `i` holds the exponents of `|λ_i|`; denominators count negatively.
    pub exponents: IntegerMatrix,
    pub signs: Vec<i8>,
}

impl ExponentTable {
    pub fn reconstruct(&self, i: usize) -> BigRational {
        let mut value = BigRational::from_integer(self.signs[i].into());
        for (p, e) in self.primes.iter().zip(self.exponents.row(i)) {
            let base = BigRational::from_integer(BigInt::from(p.clone()));
            let k = e.magnitude().to_usize().expect("exponent fits in usize");
            let factor = num_traits::pow(base, k);
            if e.is_negative() {
                value /= factor;
            } else {
                value *= factor;
            }
        }
        value
    }

    pub fn rows(&self) -> usize {
        self.exponents.rows()
    }
}

pub fn factor(e: &EigenInput) -> ExponentTable {
    let factored: Vec<BTreeMap<BigUint, i64>> = e
        .eigenvalues
        .iter()
        .map(|v| {
            let mut exps: BTreeMap<BigUint, i64> = BTreeMap::new();
            for (p, k) in factorize(&v.numer().magnitude().clone()) {
                *exps.entry(p).or_default() += i64::from(k);
            }
            for (p, k) in factorize(&v.denom().magnitude().clone()) {
                *exps.entry(p).or_default() -= i64::from(k);
            }
            exps
        })
        .collect();
    let primes: Vec<BigUint> = factored
        .iter()
        .flat_map(|m| m.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows: Vec<Vec<BigInt>> = factored
        .iter()
        .map(|m| {
            primes
                .iter()
                .map(|p| BigInt::from(m.get(p).copied().unwrap_or(0)))
                .collect()
        })
        .collect();
    ExponentTable {
        exponents: IntegerMatrix::from_rows(primes.len(), &rows).expect("rows share width"),
        primes,
        signs: e
            .eigenvalues
            .iter()
            .map(|v| if v.is_negative() { -1 } else { 1 })
            .collect(),
    }
}

/// The weight monoid of the closure: generators are the exponent rows (signs
/// vanish after squaring), labelled `t1..tr`.
pub fn character_data(t: &ExponentTable) -> Result<WeightMonoid> {
    let rows = t.exponents.to_rows();
    monoid::monoid_from_generators(t.primes.len(), &rows)?
        .with_labels((1..=rows.len()).map(|i| format!("t{i}")).collect())
}

/// A multiplicative relation `Π_{i∈A} t_i^{a_i} = Π_{j∈B} t_j^{b_j}` with
/// disjoint supports and positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimitiveRelation {
    pub lhs: BTreeMap<usize, BigInt>,
    pub rhs: BTreeMap<usize, BigInt>,
}

impl PrimitiveRelation {
    /// Splits a nonzero kernel vector into its positive and negative parts,
    /// oriented so the first nonzero entry lands on the left.
    pub fn from_kernel_vector(z: &[BigInt]) -> Option<Self> {
        let first = z.iter().find(|x| !x.is_zero())?;
        let flip = first.is_negative();
        let mut lhs = BTreeMap::new();
        let mut rhs = BTreeMap::new();
        for (i, x) in z.iter().enumerate() {
            let x = if flip { -x } else { x.clone() };
            if x.is_positive() {
                lhs.insert(i, x);
            } else if x.is_negative() {
                rhs.insert(i, -x);
            }
        }
        Some(Self { lhs, rhs })
    }

    pub fn to_vector(&self, len: usize) -> Vec<BigInt> {
        let mut z = vec![BigInt::zero(); len];
        for (&i, a) in &self.lhs {
            z[i] = a.clone();
        }
        for (&j, b) in &self.rhs {
            z[j] = -b;
        }
        z
    }

    pub fn lhs_support(&self) -> BTreeSet<usize> {
        self.lhs.keys().copied().collect()
    }

    pub fn rhs_support(&self) -> BTreeSet<usize> {
        self.rhs.keys().copied().collect()
    }

    /// Exact check on the squared eigenvalues.
    pub fn holds_for(&self, eigenvalues: &[BigRational]) -> Result<bool> {
        let side = |m: &BTreeMap<usize, BigInt>| -> Result<BigRational> {
            let mut acc = BigRational::one();
            for (&i, k) in m {
                let k = k
                    .to_usize()
                    .ok_or_else(|| Error::InvalidInput(format!("exponent {k} too large")))?;
                acc *= num_traits::pow(eigenvalues[i].clone(), 2 * k);
            }
            Ok(acc)
        };
        Ok(side(&self.lhs)? == side(&self.rhs)?)
    }
}

impl fmt::Display for PrimitiveRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(m: &BTreeMap<usize, BigInt>) -> String {
            if m.is_empty() {
                return "1".into();
            }
            m.iter()
                .map(|(i, k)| {
                    if k.is_one() {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{k}", i + 1)
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        }
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// Every nonzero `z` with `z * m = 0` and entries in `[-bound, bound]`, with
/// `z` and `-z` both reported.
pub fn kernel_vectors_in_box(m: &IntegerMatrix, bound: u32) -> Vec<Vec<BigInt>> {
    let r = m.rows();
    let cols = m.cols();
    let b = i64::from(bound);
    // slack[i][c] bounds |Σ_{j>=i} z_j m[j][c]| over the box.
    let mut slack = vec![vec![BigInt::zero(); cols]; r + 1];
    for i in (0..r).rev() {
        for c in 0..cols {
            slack[i][c] = &slack[i + 1][c] + m[(i, c)].abs() * b;
        }
    }
    let mut out = Vec::new();
    let mut z = vec![0i64; r];
    let mut partial = vec![BigInt::zero(); cols];
    fn walk(
        i: usize,
        m: &IntegerMatrix,
        b: i64,
        slack: &[Vec<BigInt>],
        z: &mut Vec<i64>,
        partial: &mut Vec<BigInt>,
        out: &mut Vec<Vec<BigInt>>,
    ) {
        if partial.iter().zip(&slack[i]).any(|(p, s)| p.abs() > *s) {
            return;
        }
        if i == z.len() {
            if z.iter().any(|&x| x != 0) {
                out.push(z.iter().map(|&x| BigInt::from(x)).collect());
            }
            return;
        }
        for v in -b..=b {
            z[i] = v;
            for (p, a) in partial.iter_mut().zip(m.row(i)) {
                *p += a * v;
            }
            walk(i + 1, m, b, slack, z, partial, out);
            for (p, a) in partial.iter_mut().zip(m.row(i)) {
                *p -= a * v;
            }
        }
        z[i] = 0;
    }
    walk(0, m, b, &slack, &mut z, &mut partial, &mut out);
    out
}

/// Relations from a Hermite basis of the exponent kernel together with all
/// kernel vectors of sup-norm at most `coeff_bound`, deduplicated and sorted
/// by total degree.
pub fn primitive_relations(t: &ExponentTable, coeff_bound: u32) -> Result<Vec<PrimitiveRelation>> {
    if coeff_bound == 0 {
        return Err(Error::InvalidInput(
            "relation coefficient bound must be at least 1".into(),
        ));
    }
    let kernel = kernel_lattice(&t.exponents);
    let mut found: BTreeSet<PrimitiveRelation> = BTreeSet::new();
    for z in kernel
        .basis()
        .to_rows()
        .into_iter()
        .chain(kernel_vectors_in_box(&t.exponents, coeff_bound))
    {
        if let Some(rel) = PrimitiveRelation::from_kernel_vector(&z) {
            found.insert(rel);
        }
    }
    let mut rels: Vec<PrimitiveRelation> = found.into_iter().collect();
    let degree = |r: &PrimitiveRelation| -> BigInt { r.lhs.values().chain(r.rhs.values()).sum() };
    rels.sort_by(|a, b| {
        (degree(a), a.to_vector(t.rows())).cmp(&(degree(b), b.to_vector(t.rows())))
    });
    let eigenvalues: Vec<BigRational> = (0..t.rows()).map(|i| t.reconstruct(i)).collect();
    for rel in &rels {
        if !rel.holds_for(&eigenvalues)? {
            return Err(Error::Invariant(format!(
                "relation {rel} fails on the eigenvalues"
            )));
        }
    }
    Ok(rels)
}

/// Idempotents of the closure of the powers of `diag(λ_1, ..., λ_r)`.
pub fn idempotent_set(e: &EigenInput) -> Result<IdempotentPoset> {
    monoid::idempotents(&character_data(&factor(e))?)
}

/// The diagonal 0/1 matrix `e_I = Σ_{i∈I} e_i`, as its diagonal.
pub fn diagonal_idempotent(index_set: &BTreeSet<usize>, r: usize) -> Vec<u8> {
    (0..r).map(|i| u8::from(index_set.contains(&i))).collect()
}

/// `e_I` is compatible with a relation iff `A ⊆ I ⇔ B ⊆ I`; a homomorphism
/// to `{1, 0}` sends both sides to the same value.
pub fn check_relation_criterion(index_set: &BTreeSet<usize>, rels: &[PrimitiveRelation]) -> bool {
    rels.iter().all(|rel| {
        let a = rel.lhs.keys().all(|i| index_set.contains(i));
        let b = rel.rhs.keys().all(|j| index_set.contains(j));
        a == b
    })
}

/// Indices `i` whose coordinate is invertible on the closure: `-v_i` is a
/// nonnegative combination of the weights, decided by exact feasibility.
pub fn smallest_idempotent_indices(e: &EigenInput) -> Result<BTreeSet<usize>> {
    let t = factor(e);
    let rows = t.exponents.to_rows();
    let mut out = BTreeSet::new();
    for (i, target) in rows.iter().enumerate() {
        let mut system = LinearSystem::new(rows.len());
        for c in 0..t.primes.len() {
            let coeffs: Vec<BigInt> = rows.iter().map(|r| r[c].clone()).collect();
            let mut row = Constraint::from_ints(&coeffs, Relation::Eq, 0);
            row.rhs = BigRational::from_integer(-&target[c]);
            system.push(row);
        }
        for j in 0..rows.len() {
            let mut unit = vec![BigInt::zero(); rows.len()];
            unit[j] = BigInt::one();
            system.push(Constraint::from_ints(&unit, Relation::Ge, 0));
        }
        if system.is_feasible() {
            out.insert(i);
        }
    }
    Ok(out)
}

/// Whether the weight monoids of `x` and `x^n` have the same canonical form.
pub fn power_invariance(e: &EigenInput, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidInput("power must be positive".into()));
    }
    let base = character_data(&factor(e))?.canonical_form();
    let powered = character_data(&factor(&e.pow(n)))?.canonical_form();
    Ok(base == powered)
}

/// Prime factorization with multiplicities.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return out;
    }
    let mut m = n.clone();
    for p in [2u32, 3, 5] {
        let p = BigUint::from(p);
        while (&m % &p).is_zero() {
            m /= &p;
            *out.entry(p.clone()).or_default() += 1;
        }
    }
    // Wheel over 6k ± 1 up to a small cutoff, then Pollard rho.
    let mut d = BigUint::from(7u32);
    let cutoff = BigUint::from(10_000u32);
    let mut step = [4u32, 2].into_iter().cycle();
    while d <= cutoff && &d * &d <= m {
        while (&m % &d).is_zero() {
            m /= &d;
            *out.entry(d.clone()).or_default() += 1;
        }
        d += step.next().expect("cycle");
    }
    let mut stack = vec![m];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_default() += 1;
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

/// Miller–Rabin with the first twelve prime bases; deterministic below
/// 3.3 * 10^24.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    'bases: for a in BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n` (Brent's variant).
fn pollard_rho(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}
