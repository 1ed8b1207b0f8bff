//! Toric monoids as (character lattice, weight monoid) pairs.
//!
//! An idempotent of the toric monoid is a monoid homomorphism from the
//! weight monoid to `{1, 0}`; the preimage of `1` is the set of weights on a
//! face of the weight cone. Idempotents are therefore keyed by the index set
//! of the generators they send to `1`, and their product is the
//! intersection of those sets.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cone::{self, covering_pairs, Cone, FacePoset};
use crate::error::{Error, Result};
use crate::lattice::{kernel_lattice, saturate, IntegerMatrix, Sublattice};

/// Weight monoid generators expressed in a basis of the lattice they
/// generate, so `ambient_rank` is the rank of the character lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMonoid {
    pub ambient_rank: usize,
    pub generators: Vec<Vec<BigInt>>,
    pub labels: Vec<String>,
    /// Hermite basis of the generated lattice in the original coordinates.
    pub lattice_basis: IntegerMatrix,
}

/// Generators sorted and deduplicated in canonical lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalMonoid {
    pub rank: usize,
    pub generators: Vec<Vec<BigInt>>,
}

impl WeightMonoid {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn cone(&self) -> Result<Cone> {
        cone::cone_from_generators(self.ambient_rank, &self.generators)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.generators.len() {
            return Err(Error::DimensionMismatch {
                expected: self.generators.len(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn canonical_form(&self) -> CanonicalMonoid {
        let gens: BTreeSet<Vec<BigInt>> = self.generators.iter().cloned().collect();
        CanonicalMonoid {
            rank: self.ambient_rank,
            generators: gens.into_iter().collect(),
        }
    }
}

/// Builds the weight monoid generated by `raw` inside `Z^raw_dim`, rewriting
/// every generator in the Hermite basis of the lattice the generators span.
pub fn monoid_from_generators(raw_dim: usize, raw: &[Vec<BigInt>]) -> Result<WeightMonoid> {
    let lattice = Sublattice::span_of(raw_dim, raw)?;
    let generators = raw
        .iter()
        .map(|g| {
            lattice
                .coordinates(g)?
                .ok_or_else(|| Error::Invariant("generator outside its own span".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightMonoid {
        ambient_rank: lattice.rank(),
        labels: (1..=raw.len()).map(|i| format!("g{i}")).collect(),
        generators,
        lattice_basis: lattice.basis().clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Idempotent {
    pub index_set: BTreeSet<usize>,
    pub face_dim: usize,
}

/// Idempotents ordered by inclusion of their index sets.
///
/// Elements are sorted by `(face_dim, index_set)`, so the smallest
/// idempotent comes first and the largest last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentPoset {
    pub generator_count: usize,
    pub elements: Vec<Idempotent>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub smallest: usize,
    pub largest: usize,
}

impl IdempotentPoset {
    pub fn from_faces(generator_count: usize, faces: &FacePoset) -> Self {
        let elements: Vec<Idempotent> = faces
            .faces
            .iter()
            .map(|f| Idempotent {
                index_set: f.generator_indices.clone(),
                face_dim: f.dim,
            })
            .collect();
        let hasse_edges = covering_pairs(elements.iter().map(|e| &e.index_set));
        Self {
            generator_count,
            elements,
            hasse_edges,
            smallest: faces.bottom,
            largest: faces.top,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, index_set: &BTreeSet<usize>) -> Option<usize> {
        self.elements.iter().position(|e| &e.index_set == index_set)
    }

    pub fn index_sets(&self) -> BTreeSet<BTreeSet<usize>> {
        self.elements.iter().map(|e| e.index_set.clone()).collect()
    }

    /// `e <= f` iff `ef = fe = e`, i.e. inclusion of index sets.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a]
            .index_set
            .is_subset(&self.elements[b].index_set)
    }
}

pub fn idempotents(w: &WeightMonoid) -> Result<IdempotentPoset> {
    let c = w.cone()?;
    let faces = cone::enumerate_faces(&c);
    Ok(IdempotentPoset::from_faces(w.generator_count(), &faces))
}

/// Product of two idempotents: the intersection of their index sets.
pub fn idempotent_product(p: &IdempotentPoset, e: usize, f: usize) -> Result<usize> {
    let key: BTreeSet<usize> = p.elements[e]
        .index_set
        .intersection(&p.elements[f].index_set)
        .copied()
        .collect();
    p.position(&key)
        .ok_or_else(|| Error::Invariant(format!("idempotents not closed under product: {key:?}")))
}

/// The product of all idempotents, checked against the stored minimum.
pub fn smallest_idempotent(p: &IdempotentPoset) -> Result<&Idempotent> {
    let mut acc = p.largest;
    for i in 0..p.len() {
        acc = idempotent_product(p, acc, i)?;
    }
    if acc != p.smallest {
        return Err(Error::Invariant(format!(
            "product of all idempotents is {:?}, expected the lineality face {:?}",
            p.elements[acc].index_set, p.elements[p.smallest].index_set
        )));
    }
    Ok(&p.elements[acc])
}

pub fn largest_idempotent(p: &IdempotentPoset) -> Result<&Idempotent> {
    let e = &p.elements[p.largest];
    if e.index_set.len() != p.generator_count {
        return Err(Error::Invariant(
            "largest idempotent must contain every generator".into(),
        ));
    }
    Ok(e)
}

/// Common length of all maximal chains from the smallest to the largest
/// idempotent. Fails if two maximal chains disagree.
pub fn maximal_chain_length(p: &IdempotentPoset) -> Result<usize> {
    let mut up: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in &p.hasse_edges {
        up.entry(a).or_default().push(b);
    }
    // Distances to the top along Hasse edges, processed from the top down.
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(p.elements[i].index_set.len()));
    let mut lengths: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); p.len()];
    for &i in &order {
        if i == p.largest {
            lengths[i].insert(0);
            continue;
        }
        let above: BTreeSet<usize> = up
            .get(&i)
            .into_iter()
            .flatten()
            .flat_map(|&j| lengths[j].iter().map(|l| l + 1))
            .collect();
        lengths[i] = above;
    }
    let from_bottom = &lengths[p.smallest];
    match from_bottom.len() {
        1 => Ok(*from_bottom.first().expect("one element")),
        _ => Err(Error::Invariant(format!(
            "idempotent poset is not graded: maximal chains of lengths {from_bottom:?}"
        ))),
    }
}

/// Order isomorphism between posets over the same generators.
///
/// The identity on index sets is tried first; otherwise a backtracking
/// search over bijections preserving comparability is run.
pub fn order_isomorphic(a: &IdempotentPoset, b: &IdempotentPoset) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.index_sets() == b.index_sets() {
        return true;
    }
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: &IdempotentPoset,
        b: &IdempotentPoset,
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] {
                continue;
            }
            let consistent =
                (0..i).all(|k| a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k]));
            if consistent {
                map[i] = j;
                used[j] = true;
                if extend(a, b, i + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    extend(a, b, 0, &mut map, &mut used)
}

/// The toric envelope: the weight monoid obtained by dividing out the unit
/// lattice, with its idempotent poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricEnvelopeReport {
    pub envelope_dim: usize,
    /// Saturation of the lattice spanned by generators in the lineality space.
    pub unit_lattice: Sublattice,
    pub quotient_rank: usize,
    pub projected_generators: Vec<Vec<BigInt>>,
    pub envelope_idempotent_poset: IdempotentPoset,
}

pub fn toric_envelope(w: &WeightMonoid) -> Result<ToricEnvelopeReport> {
    let original = idempotents(w)?;
    let units: Vec<Vec<BigInt>> = original.elements[original.smallest]
        .index_set
        .iter()
        .map(|&i| w.generators[i].clone())
        .collect();
    let unit_lattice = saturate(&Sublattice::span_of(w.ambient_rank, &units)?);

    // Rows of `quotient` span the annihilator of the unit lattice; since that
    // lattice is saturated, x -> quotient * x maps Z^n onto Z^q with kernel
    // exactly the unit lattice.
    let quotient = kernel_lattice(&unit_lattice.basis().transpose());
    let quotient_rank = quotient.rank();
    let projection = quotient.basis().transpose();
    let projected_generators = w
        .generators
        .iter()
        .map(|g| projection.left_mul_vec(g))
        .collect::<Result<Vec<_>>>()?;

    let projected_cone = cone::cone_from_generators(quotient_rank, &projected_generators)?;
    if !projected_cone.is_pointed() {
        return Err(Error::Invariant(
            "projected weight cone is not pointed".into(),
        ));
    }
    let envelope_idempotent_poset =
        IdempotentPoset::from_faces(w.generator_count(), &cone::enumerate_faces(&projected_cone));
    if !order_isomorphic(&original, &envelope_idempotent_poset) {
        return Err(Error::Invariant(
            "envelope idempotents are not order-isomorphic to the original".into(),
        ));
    }
    let chain = maximal_chain_length(&original)?;
    if chain != quotient_rank {
        return Err(Error::Invariant(format!(
            "maximal chain length {chain} differs from envelope dimension {quotient_rank}"
        )));
    }
    Ok(ToricEnvelopeReport {
        envelope_dim: quotient_rank,
        unit_lattice,
        quotient_rank,
        projected_generators,
        envelope_idempotent_poset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn gens(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| ints(r)).collect()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn quadrant() -> WeightMonoid {
        monoid_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap()
    }

    #[test]
    fn recoordinatizes_into_generated_lattice() {
        let w = monoid_from_generators(2, &gens(&[&[2, 0], &[0, 2], &[2, 2]])).unwrap();
        assert_eq!(
            w.lattice_basis,
            IntegerMatrix::from_i64(2, &[&[2, 0], &[0, 2]])
        );
        assert_eq!(w.generators, gens(&[&[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(w.ambient_rank, 2);

        let w = monoid_from_generators(2, &gens(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(w.generators, gens(&[&[1, 0], &[0, 1]]));

        let w = monoid_from_generators(1, &gens(&[&[0]])).unwrap();
        assert_eq!(w.ambient_rank, 0);
        assert_eq!(w.generators, vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn recoordinatizes_a_sheared_lattice() {
        // Lattice spanned by (1,1) and (0,2) in Z^2, index 2.
        let w = monoid_from_generators(2, &gens(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(w.ambient_rank, 2);
        for (g, raw) in w.generators.iter().zip(gens(&[&[1, 1], &[1, -1]])) {
            assert_eq!(w.lattice_basis.left_mul_vec(g).unwrap(), raw);
        }
    }

    #[test]
    fn quadrant_idempotents() {
        let p = idempotents(&quadrant()).unwrap();
        let sets: Vec<_> = p.elements.iter().map(|e| e.index_set.clone()).collect();
        assert_eq!(sets, vec![set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]);
        assert_eq!(maximal_chain_length(&p).unwrap(), 2);
        assert_eq!(idempotent_product(&p, 1, 2).unwrap(), 0);
        for e in 0..p.len() {
            assert_eq!(idempotent_product(&p, e, p.largest).unwrap(), e);
            assert_eq!(idempotent_product(&p, e, e).unwrap(), e);
        }
        assert_eq!(smallest_idempotent(&p).unwrap().index_set, set(&[]));
        assert_eq!(largest_idempotent(&p).unwrap().index_set, set(&[0, 1, 2]));
        assert_eq!(p.hasse_edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn group_case() {
        let w = monoid_from_generators(1, &gens(&[&[1], &[-1]])).unwrap();
        let p = idempotents(&w).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.elements[0].index_set, set(&[0, 1]));
        assert_eq!(p.smallest, p.largest);
        assert_eq!(maximal_chain_length(&p).unwrap(), 0);

        let env = toric_envelope(&w).unwrap();
        assert_eq!(env.unit_lattice, Sublattice::full(1));
        assert_eq!(env.quotient_rank, 0);
        assert_eq!(env.envelope_idempotent_poset.len(), 1);
    }

    #[test]
    fn trivial_monoid() {
        let w = monoid_from_generators(0, &[]).unwrap();
        let p = idempotents(&w).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(
            smallest_idempotent(&p).unwrap(),
            largest_idempotent(&p).unwrap()
        );
        assert_eq!(toric_envelope(&w).unwrap().envelope_dim, 0);
    }

    #[test]
    fn quadrant_envelope_is_itself() {
        let env = toric_envelope(&quadrant()).unwrap();
        assert_eq!(env.unit_lattice.rank(), 0);
        assert_eq!(env.envelope_dim, 2);
        assert_eq!(
            env.envelope_idempotent_poset.index_sets(),
            idempotents(&quadrant()).unwrap().index_sets()
        );
    }

    #[test]
    fn envelope_projects_out_the_lineality_line() {
        let w = monoid_from_generators(2, &gens(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap();
        let env = toric_envelope(&w).unwrap();
        assert_eq!(
            env.unit_lattice,
            Sublattice::span_of(2, &gens(&[&[1, 0]])).unwrap()
        );
        assert_eq!(env.quotient_rank, 1);
        assert_eq!(env.projected_generators, gens(&[&[0], &[0], &[1]]));
        assert_eq!(env.envelope_idempotent_poset.len(), 2);
    }

    #[test]
    fn hypersurface_chain_length() {
        let w = monoid_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[2, -2]])).unwrap();
        let p = idempotents(&w).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(maximal_chain_length(&p).unwrap(), 2);
    }

    #[test]
    fn non_graded_poset_is_reported() {
        let p = IdempotentPoset {
            generator_count: 3,
            elements: vec![
                Idempotent {
                    index_set: set(&[]),
                    face_dim: 0,
                },
                Idempotent {
                    index_set: set(&[0]),
                    face_dim: 1,
                },
                Idempotent {
                    index_set: set(&[0, 1]),
                    face_dim: 2,
                },
                Idempotent {
                    index_set: set(&[0, 1, 2]),
                    face_dim: 3,
                },
                Idempotent {
                    index_set: set(&[2]),
                    face_dim: 1,
                },
            ],
            hasse_edges: vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)],
            smallest: 0,
            largest: 3,
        };
        assert!(matches!(maximal_chain_length(&p), Err(Error::Invariant(_))));
    }

    #[test]
    fn isomorphism_search_handles_relabelling() {
        let a = idempotents(&quadrant()).unwrap();
        let mut b = a.clone();
        for e in b.elements.iter_mut() {
            e.index_set = e.index_set.iter().map(|i| i + 10).collect();
        }
        assert!(order_isomorphic(&a, &b));
        let chain = IdempotentPoset {
            generator_count: 2,
            elements: vec![
                Idempotent {
                    index_set: set(&[]),
                    face_dim: 0,
                },
                Idempotent {
                    index_set: set(&[0]),
                    face_dim: 1,
                },
                Idempotent {
                    index_set: set(&[0, 1]),
                    face_dim: 2,
                },
                Idempotent {
                    index_set: set(&[0, 1, 2]),
                    face_dim: 3,
                },
            ],
            hasse_edges: vec![],
            smallest: 0,
            largest: 3,
        };
        assert!(!order_isomorphic(&a, &chain));
    }

    #[test]
    fn canonical_form_ignores_order_and_duplicates() {
        let a = monoid_from_generators(1, &gens(&[&[2], &[4], &[2]])).unwrap();
        let b = monoid_from_generators(1, &gens(&[&[6], &[3]])).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
    }
}
