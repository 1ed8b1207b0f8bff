//! Finite semigroups given by multiplication tables.
//!
//! Everything here is brute force over the table: idempotents, the
//! idempotent inside each cyclic subsemigroup, Green's relations through the
//! monoid `S¹` with an identity adjoined, and the Peirce-style subsets
//! attached to an idempotent.

pub mod catalogue;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSemigroup {
    table: Vec<Vec<usize>>,
    commutative: bool,
}

impl FiniteSemigroup {
    /// Checks shape, range, and associativity over all `n³` triples.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!(
                    "row {x} contains {bad}, outside 0..{n}"
                )));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x][y];
                for z in 0..n {
                    let left = table[xy][z];
                    let right = table[x][table[y][z]];
                    if left != right {
                        return Err(Error::NotAssociative {
                            x,
                            y,
                            z,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        let commutative = (0..n).all(|x| (0..x).all(|y| table[x][y] == table[y][x]));
        Ok(Self { table, commutative })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// `e <= f` iff `ef = fe = e`.
    pub fn idempotent_leq(&self, e: usize, f: usize) -> bool {
        self.mul(e, f) == e && self.mul(f, e) == e
    }

    pub fn is_central(&self, e: usize) -> bool {
        (0..self.size()).all(|x| self.mul(e, x) == self.mul(x, e))
    }
}

pub fn idempotent_elements(s: &FiniteSemigroup) -> Vec<usize> {
    let out: Vec<usize> = (0..s.size()).filter(|&x| s.is_idempotent(x)).collect();
    assert!(!out.is_empty(), "every finite semigroup has an idempotent");
    out
}

/// Product of all idempotents of a commutative semigroup, checked to lie
/// below each of them.
pub fn smallest_idempotent_commutative(s: &FiniteSemigroup) -> Result<usize> {
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let idems = idempotent_elements(s);
    let e0 = idems[1..].iter().fold(idems[0], |acc, &e| s.mul(acc, e));
    if !s.is_idempotent(e0) || !idems.iter().all(|&e| s.idempotent_leq(e0, e)) {
        return Err(Error::Invariant(format!(
            "product {e0} of all idempotents is not the minimum"
        )));
    }
    Ok(e0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexPeriod {
    pub element: usize,
    /// Smallest `i >= 1` with `x^i = x^(i+p)` for some `p >= 1`.
    pub index: usize,
    /// Smallest such `p`.
    pub period: usize,
}

pub fn index_period(s: &FiniteSemigroup, x: usize) -> IndexPeriod {
    // first_seen[y] = k such that x^k = y.
    let mut first_seen = vec![0usize; s.size()];
    let mut power = x;
    let mut k = 1;
    loop {
        if first_seen[power] != 0 {
            let index = first_seen[power];
            return IndexPeriod {
                element: x,
                index,
                period: k - index,
            };
        }
        first_seen[power] = k;
        power = s.mul(power, x);
        k += 1;
    }
}

pub fn power(s: &FiniteSemigroup, x: usize, k: usize) -> usize {
    assert!(k >= 1, "semigroup powers start at 1");
    (1..k).fold(x, |acc, _| s.mul(acc, x))
}

/// The unique idempotent among the powers of `x`: `x^k` with `k` the
/// multiple of the period in `[index, index + period)`.
pub fn idempotent_power(s: &FiniteSemigroup, x: usize) -> usize {
    let ip = index_period(s, x);
    let k = ip.index.div_ceil(ip.period) * ip.period;
    let e = power(s, x, k);
    debug_assert!(s.is_idempotent(e));
    e
}

/// Partitions for Green's relations, each class sorted, classes sorted by
/// their first element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreensClasses {
    pub l: Vec<Vec<usize>>,
    pub r: Vec<Vec<usize>>,
    pub j: Vec<Vec<usize>>,
    pub h: Vec<Vec<usize>>,
}

fn left_ideal(s: &FiniteSemigroup, x: usize) -> BTreeSet<usize> {
    std::iter::once(x)
        .chain((0..s.size()).map(|y| s.mul(y, x)))
        .collect()
}

fn right_ideal(s: &FiniteSemigroup, x: usize) -> BTreeSet<usize> {
    std::iter::once(x)
        .chain((0..s.size()).map(|y| s.mul(x, y)))
        .collect()
}

fn two_sided_ideal(s: &FiniteSemigroup, x: usize) -> BTreeSet<usize> {
    let left = left_ideal(s, x);
    left.iter()
        .flat_map(|&a| std::iter::once(a).chain((0..s.size()).map(move |y| s.mul(a, y))))
        .collect()
}

fn partition_by<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let keys: Vec<K> = (0..n).map(&key).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        match classes.iter_mut().find(|c| keys[c[0]] == keys[x]) {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    classes
}

pub fn greens_classes(s: &FiniteSemigroup) -> GreensClasses {
    let n = s.size();
    let left: Vec<_> = (0..n).map(|x| left_ideal(s, x)).collect();
    let right: Vec<_> = (0..n).map(|x| right_ideal(s, x)).collect();
    let both: Vec<_> = (0..n).map(|x| two_sided_ideal(s, x)).collect();
    GreensClasses {
        l: partition_by(n, |x| left[x].clone()),
        r: partition_by(n, |x| right[x].clone()),
        j: partition_by(n, |x| both[x].clone()),
        h: partition_by(n, |x| (left[x].clone(), right[x].clone())),
    }
}

/// The four subsets of `S` cut out by how `e` acts on each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeirceSets {
    /// `eSe`: `ex = xe = x`
    #[serde(rename = "eSe")]
    pub corner: Vec<usize>,
    /// `eS_e`: `ex = x`, `xe = e`; the product there is the second projection.
    #[serde(rename = "eS_e")]
    pub second_projection: Vec<usize>,
    /// `_eSe`: `ex = e`, `xe = x`; the product there is the first projection.
    #[serde(rename = "_eSe")]
    pub first_projection: Vec<usize>,
    /// `_eS_e`: `ex = xe = e`, the elements having `e` as a zero.
    #[serde(rename = "_eS_e")]
    pub absorbed: Vec<usize>,
}

pub fn peirce_sets(s: &FiniteSemigroup, e: usize) -> Result<PeirceSets> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    // pick(p) = { x : p(x, ex, xe) }
    let pick = |p: &dyn Fn(usize, usize, usize) -> bool| -> Vec<usize> {
        (0..s.size())
            .filter(|&x| p(x, s.mul(e, x), s.mul(x, e)))
            .collect()
    };
    let sets = PeirceSets {
        corner: pick(&|x, ex, xe| ex == x && xe == x),
        second_projection: pick(&|x, ex, xe| ex == x && xe == e),
        first_projection: pick(&|x, ex, xe| ex == e && xe == x),
        absorbed: pick(&|_, ex, xe| ex == e && xe == e),
    };
    let closed = |set: &[usize]| {
        set.iter()
            .all(|&a| set.iter().all(|&b| set.binary_search(&s.mul(a, b)).is_ok()))
    };
    for (name, set) in [
        ("eSe", &sets.corner),
        ("eS_e", &sets.second_projection),
        ("_eSe", &sets.first_projection),
        ("_eS_e", &sets.absorbed),
    ] {
        if !closed(set) || !set.contains(&e) {
            return Err(Error::Invariant(format!(
                "{name} is not a subsemigroup containing e"
            )));
        }
    }
    // On eS_e the product is the second projection; on _eSe the first.
    let second = sets
        .second_projection
        .iter()
        .all(|&a| sets.second_projection.iter().all(|&b| s.mul(a, b) == b));
    let first = sets
        .first_projection
        .iter()
        .all(|&a| sets.first_projection.iter().all(|&b| s.mul(a, b) == a));
    if !second || !first {
        return Err(Error::Invariant(
            "projection law fails on eS_e or _eSe".into(),
        ));
    }
    Ok(sets)
}

/// Whether `subset` is a group under the product of `s`.
fn is_group(s: &FiniteSemigroup, subset: &[usize]) -> bool {
    let inside = |x: usize| subset.binary_search(&x).is_ok();
    if !subset
        .iter()
        .all(|&a| subset.iter().all(|&b| inside(s.mul(a, b))))
    {
        return false;
    }
    let Some(&id) = subset
        .iter()
        .find(|&&u| subset.iter().all(|&a| s.mul(u, a) == a && s.mul(a, u) == a))
    else {
        return false;
    };
    subset.iter().all(|&a| {
        subset
            .iter()
            .any(|&b| s.mul(a, b) == id && s.mul(b, a) == id)
    })
}

/// `e` is central and `eS` is a group.
pub fn check_smallest_criterion(s: &FiniteSemigroup, e: usize) -> Result<bool> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    if !s.is_central(e) {
        return Ok(false);
    }
    let e_s: Vec<usize> = (0..s.size())
        .map(|x| s.mul(e, x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(is_group(s, &e_s))
}

/// `e` lies below every idempotent.
pub fn is_minimum_idempotent(s: &FiniteSemigroup, e: usize) -> bool {
    s.is_idempotent(e)
        && idempotent_elements(s)
            .iter()
            .all(|&f| s.idempotent_leq(e, f))
}
