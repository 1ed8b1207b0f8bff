//! Small semigroups for testing: exhaustive enumeration of tiny orders and a
//! handful of named families.

use std::collections::BTreeSet;

use super::FiniteSemigroup;

/// `(ℤ/n, ×)`.
pub fn zmod_mul(n: usize) -> FiniteSemigroup {
    build(n, |x, y| (x * y) % n)
}

/// `(ℤ/n, +)`, with identity 0.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    build(n, |x, y| (x + y) % n)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    build(n, |x, _| x)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    build(n, |_, y| y)
}

/// The cyclic semigroup `⟨x | x^(index+period) = x^index⟩`. Element `k`
/// stores `x^(k+1)`.
pub fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
    assert!(index >= 1 && period >= 1);
    let top = index + period - 1;
    build(top, |a, b| {
        let mut s = a + b + 2;
        while s > top {
            s -= period;
        }
        s - 1
    })
}

/// Pairs `(i, j)` stored as `i * |b| + j`.
pub fn direct_product(a: &FiniteSemigroup, b: &FiniteSemigroup) -> FiniteSemigroup {
    let nb = b.size();
    build(a.size() * nb, |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}

fn build(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let table = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
    FiniteSemigroup::new(table).expect("catalogue construction is associative")
}

/// Every associative table on `{0, .., n-1}`, in lexicographic order.
pub fn enumerate_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut t: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    fill(&mut t, 0, &mut out);
    out
}

fn fill(t: &mut [Vec<Option<usize>>], cell: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    let n = t.len();
    if cell == n * n {
        out.push(
            t.iter()
                .map(|r| r.iter().map(|v| v.unwrap()).collect())
                .collect(),
        );
        return;
    }
    let (x, y) = (cell / n, cell % n);
    for v in 0..n {
        t[x][y] = Some(v);
        if consistent(t) {
            fill(t, cell + 1, out);
        }
    }
    t[x][y] = None;
}

/// No fully determined triple violates associativity.
fn consistent(t: &[Vec<Option<usize>>]) -> bool {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = t[a][b] else { continue };
            for c in 0..n {
                let (Some(l), Some(bc)) = (t[ab][c], t[b][c]) else {
                    continue;
                };
                if let Some(r) = t[a][bc] {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographically least relabelling of `table` over all permutations.
pub fn canonical_table(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = relabel(table, &perm);
    while next_permutation(&mut perm) {
        let cand = relabel(table, &perm);
        if cand < best {
            best = cand;
        }
    }
    best
}

/// The table of the semigroup transported along `x ↦ perm[x]`.
fn relabel(table: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x]][perm[y]] = perm[table[x][y]];
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative per isomorphism class of semigroups of order `n`.
pub fn semigroups_up_to_isomorphism(n: usize) -> Vec<FiniteSemigroup> {
    enumerate_tables(n)
        .iter()
        .map(|t| canonical_table(t))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|t| FiniteSemigroup::new(t).expect("enumerated tables are associative"))
        .collect()
}

/// The fixed test catalogue: every semigroup of order at most 4 up to
/// isomorphism, `(ℤ/n, ×)` for `n <= 30`, and a few larger products and
/// zero semigroups.
pub fn standard_catalogue() -> Vec<(String, FiniteSemigroup)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (k, s) in semigroups_up_to_isomorphism(n).into_iter().enumerate() {
            out.push((format!("order{n}#{k}"), s));
        }
    }
    for n in 1..=30 {
        out.push((format!("Z/{n} mul"), zmod_mul(n)));
    }
    for n in [5, 6] {
        out.push((format!("left_zero({n})"), left_zero(n)));
        out.push((format!("right_zero({n})"), right_zero(n)));
    }
    out.push(("monogenic(3,4)".into(), monogenic(3, 4)));
    out.push((
        "Z/4 mul x Z/3 add".into(),
        direct_product(&zmod_mul(4), &cyclic_group(3)),
    ));
    out.push((
        "Z/6 mul x Z/5 mul".into(),
        direct_product(&zmod_mul(6), &zmod_mul(5)),
    ));
    out.push((
        "left_zero(2) x Z/3 mul".into(),
        direct_product(&left_zero(2), &zmod_mul(3)),
    ));
    out.push((
        "monogenic(2,2) x Z/2 add".into(),
        direct_product(&monogenic(2, 2), &cyclic_group(2)),
    ));
    out
}

/// The commutative part of [`standard_catalogue`].
pub fn commutative_catalogue() -> Vec<(String, FiniteSemigroup)> {
    standard_catalogue()
        .into_iter()
        .filter(|(_, s)| s.is_commutative())
        .collect()
}
