use std::collections::BTreeSet;

use idempotoric::finite::catalogue::{self, direct_product, semigroups_up_to_isomorphism};
use idempotoric::finite::{self, FiniteSemigroup};
use idempotoric::io::selftest::check_finite;
use proptest::prelude::*;
use proptest::sample::select;

fn small() -> Vec<FiniteSemigroup> {
    (1..=3).flat_map(semigroups_up_to_isomorphism).collect()
}

/// Every class of `fine` lies inside one class of `coarse`.
fn refines(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> bool {
    fine.iter()
        .all(|f| coarse.iter().any(|c| f.iter().all(|x| c.contains(x))))
}

fn partition_ok(classes: &[Vec<usize>], n: usize) -> bool {
    let all: Vec<usize> = classes.iter().flatten().copied().collect();
    all.len() == n && all.iter().collect::<BTreeSet<_>>().len() == n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn products_of_small_semigroups(a in select(small()), b in select(small())) {
        let s = direct_product(&a, &b);
        prop_assert_eq!(check_finite(&s), Ok(()));
        // Idempotents of a product are pairs of idempotents.
        prop_assert_eq!(
            finite::idempotent_elements(&s).len(),
            finite::idempotent_elements(&a).len() * finite::idempotent_elements(&b).len()
        );
    }

    #[test]
    fn greens_relations_nest(a in select(small()), b in select(small())) {
        let s = direct_product(&a, &b);
        let g = finite::greens_classes(&s);
        for p in [&g.l, &g.r, &g.j, &g.h] {
            prop_assert!(partition_ok(p, s.size()));
        }
        prop_assert!(refines(&g.h, &g.l) && refines(&g.h, &g.r));
        prop_assert!(refines(&g.l, &g.j) && refines(&g.r, &g.j));
        // Each H-class contains at most one idempotent.
        for class in &g.h {
            prop_assert!(class.iter().filter(|&&x| s.is_idempotent(x)).count() <= 1);
        }
    }

    #[test]
    fn commutative_idempotents_form_a_semilattice(a in select(small()), b in select(small())) {
        let s = direct_product(&a, &b);
        prop_assume!(s.is_commutative());
        let idems = finite::idempotent_elements(&s);
        for &e in &idems {
            for &f in &idems {
                prop_assert!(s.is_idempotent(s.mul(e, f)));
            }
        }
        let e0 = finite::smallest_idempotent_commutative(&s).unwrap();
        prop_assert!(idems.iter().all(|&e| s.idempotent_leq(e0, e)));
    }

    #[test]
    fn peirce_pieces_of_projections(a in select(small()), b in select(small())) {
        let s = direct_product(&a, &b);
        for e in finite::idempotent_elements(&s) {
            let p = finite::peirce_sets(&s, e).unwrap();
            for &x in p.second_projection.iter().chain(&p.first_projection) {
                prop_assert!(s.is_idempotent(x));
            }
            prop_assert!(p.corner.contains(&e) && p.absorbed.contains(&e));
        }
    }
}

#[test]
fn zmod_tables_pass_every_check() {
    for n in 1..=30 {
        check_finite(&catalogue::zmod_mul(n)).unwrap();
    }
}

#[test]
fn order_four_counts() {
    assert_eq!(catalogue::enumerate_tables(4).len(), 3492);
    let iso = semigroups_up_to_isomorphism(4);
    assert_eq!(iso.len(), 188);
    assert_eq!(iso.iter().filter(|s| s.is_commutative()).count(), 58);
}
