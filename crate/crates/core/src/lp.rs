//! Exact feasibility of small linear systems by Fourier–Motzkin elimination.
//!
//! Equalities are eliminated first by substitution; the remaining
//! inequalities are projected one variable at a time. A feasible point is
//! recovered by back-substitution through the recorded stages.
//!
//! Each derived inequality remembers which original inequalities it was
//! combined from. After `k` eliminations any inequality built from more than
//! `k + 1` originals is implied by the others (Chernikov's rule) and is
//! dropped, which keeps the projection from growing doubly exponentially.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `a·x = b`
    Eq,
    /// `a·x >= b`
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn from_ints(coeffs: &[BigInt], relation: Relation, rhs: i64) -> Self {
        Self::new(
            coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
            relation,
            BigRational::from_integer(rhs.into()),
        )
    }
}

/// A conjunction of linear constraints over `num_vars` rational unknowns.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

/// `x_var = constant + Σ coeffs[k] x_k` over the variables still free at the
/// time of substitution.
struct Substitution {
    var: usize,
    constant: BigRational,
    coeffs: Vec<BigRational>,
}

/// Bounds on one eliminated variable, in terms of variables eliminated later.
struct Stage {
    var: usize,
    lower: Vec<Ineq>,
    upper: Vec<Ineq>,
}

/// `a·x >= b` with all coefficients over the full variable range.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Ineq {
    a: Vec<BigRational>,
    b: BigRational,
    /// Original inequalities this one is a positive combination of.
    origin: BTreeSet<usize>,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.a.iter().find(|x| !x.is_zero()).map(Signed::abs) {
            for x in self.a.iter_mut() {
                *x /= &lead;
            }
            self.b /= &lead;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn push(&mut self, c: Constraint) {
        assert_eq!(c.coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(c);
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }

    /// Some point satisfying every constraint, or `None` if there is none.
    pub fn feasible_point(&self) -> Option<Vec<BigRational>> {
        let n = self.num_vars;
        let mut subs: Vec<Substitution> = Vec::new();
        let mut eqs: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
        let mut ineqs: Vec<Ineq> = Vec::new();
        for c in &self.constraints {
            match c.relation {
                Relation::Eq => eqs.push((c.coeffs.clone(), c.rhs.clone())),
                Relation::Ge => ineqs.push(Ineq {
                    a: c.coeffs.clone(),
                    b: c.rhs.clone(),
                    origin: BTreeSet::from([ineqs.len()]),
                }),
            }
        }

        // Gaussian elimination of equalities.
        while let Some((a, b)) = eqs.pop() {
            let Some(var) = a.iter().position(|x| !x.is_zero()) else {
                if b.is_zero() {
                    continue;
                }
                return None;
            };
            let pivot = a[var].clone();
            let constant = &b / &pivot;
            let coeffs: Vec<BigRational> = a
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    if k == var {
                        BigRational::zero()
                    } else {
                        -(x / &pivot)
                    }
                })
                .collect();
            let substitute = |row: &mut Vec<BigRational>, rhs: &mut BigRational| {
                let f = std::mem::take(&mut row[var]);
                if f.is_zero() {
                    return;
                }
                *rhs -= &f * &constant;
                for (x, c) in row.iter_mut().zip(&coeffs) {
                    *x += &f * c;
                }
            };
            for (row, rhs) in eqs.iter_mut() {
                substitute(row, rhs);
            }
            for ineq in ineqs.iter_mut() {
                substitute(&mut ineq.a, &mut ineq.b);
            }
            subs.push(Substitution {
                var,
                constant,
                coeffs,
            });
        }

        let eliminated: BTreeSet<usize> = subs.iter().map(|s| s.var).collect();
        let mut free: Vec<usize> = (0..n).filter(|v| !eliminated.contains(v)).collect();
        let mut current = prune(ineqs, usize::MAX)?;
        let mut stages: Vec<Stage> = Vec::new();

        while !free.is_empty() {
            // Pick the variable with the smallest pos*neg product to limit growth.
            let (pick, _) = free
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let pos = current.iter().filter(|c| c.a[v].is_positive()).count();
                    let neg = current.iter().filter(|c| c.a[v].is_negative()).count();
                    (i, pos * neg)
                })
                .min_by_key(|&(_, cost)| cost)
                .expect("free is nonempty");
            let var = free.remove(pick);

            let mut lower = Vec::new();
            let mut upper = Vec::new();
            let mut next = Vec::new();
            for c in current {
                if c.a[var].is_positive() {
                    lower.push(c);
                } else if c.a[var].is_negative() {
                    upper.push(c);
                } else {
                    next.push(c);
                }
            }
            for p in &lower {
                for q in &upper {
                    let wp = -&q.a[var];
                    let wq = p.a[var].clone();
                    let a: Vec<BigRational> =
                        p.a.iter()
                            .zip(&q.a)
                            .map(|(x, y)| x * &wp + y * &wq)
                            .collect();
                    let b = &p.b * &wp + &q.b * &wq;
                    let origin = p.origin.union(&q.origin).copied().collect();
                    next.push(Ineq { a, b, origin });
                }
            }
            current = prune(next, stages.len() + 2)?;
            stages.push(Stage { var, lower, upper });
        }

        // Back-substitution.
        let mut x = vec![BigRational::zero(); n];
        for stage in stages.iter().rev() {
            let v = stage.var;
            let bound = |c: &Ineq| {
                let rest: BigRational =
                    c.a.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != v)
                        .fold(BigRational::zero(), |acc, (k, a)| acc + a * &x[k]);
                (&c.b - rest) / &c.a[v]
            };
            let lo = stage.lower.iter().map(bound).max();
            let hi = stage.upper.iter().map(bound).min();
            x[v] = match (lo, hi) {
                (Some(lo), _) => lo,
                (None, Some(hi)) => hi,
                (None, None) => BigRational::zero(),
            };
        }
        for s in subs.iter().rev() {
            let val = s
                .coeffs
                .iter()
                .zip(&x)
                .fold(s.constant.clone(), |acc, (c, xv)| acc + c * xv);
            x[s.var] = val;
        }
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }

    pub fn satisfied_by(&self, x: &[BigRational]) -> bool {
        self.constraints.iter().all(|c| {
            let lhs = c
                .coeffs
                .iter()
                .zip(x)
                .fold(BigRational::zero(), |acc, (a, v)| acc + a * v);
            match c.relation {
                Relation::Eq => lhs == c.rhs,
                Relation::Ge => lhs >= c.rhs,
            }
        })
    }
}

/// Drops constant constraints (failing on a violated one), duplicates, and
/// combinations of more than `max_origin` original inequalities.
fn prune(ineqs: Vec<Ineq>, max_origin: usize) -> Option<Vec<Ineq>> {
    let mut seen: BTreeMap<(Vec<BigRational>, BigRational), BTreeSet<usize>> = BTreeMap::new();
    for c in ineqs {
        if c.is_trivial() {
            if c.b.is_positive() {
                return None;
            }
            continue;
        }
        if c.origin.len() > max_origin {
            continue;
        }
        let c = c.normalized();
        match seen.entry((c.a, c.b)) {
            Entry::Vacant(v) => {
                v.insert(c.origin);
            }
            Entry::Occupied(mut o) => {
                if c.origin.len() < o.get().len() {
                    o.insert(c.origin);
                }
            }
        }
    }
    Some(
        seen.into_iter()
            .map(|((a, b), origin)| Ineq { a, b, origin })
            .collect(),
    )
}
