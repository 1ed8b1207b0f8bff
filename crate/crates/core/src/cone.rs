//! Rational polyhedral cones given by integer generators.
//!
//! Facets come from the double description method applied to the dual cone
//! `{ w : w·g >= 0 for every generator g }`. Faces are enumerated as
//! intersections of facets and are keyed by the set of generator indices
//! lying on them. [`is_face`] decides the same question independently for a
//! single index set by exact linear feasibility.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{saturate, IntegerMatrix, Sublattice};
use crate::lp::{Constraint, LinearSystem, Relation};
use crate::rational::{self, dot, is_zero_vec, make_primitive, primitive_from_rational, to_q};

/// A cone in `Q^ambient_dim` together with its derived descriptions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<Vec<BigInt>>,
    /// One primitive representative per extreme ray, orthogonal to the
    /// lineality space.
    extreme_rays: Vec<Vec<BigInt>>,
    /// Primitive functionals `w` with `w·x >= 0` on the cone, one per facet,
    /// each lying in the linear span of the cone.
    facets: Vec<Vec<BigInt>>,
    /// Hermite basis of the saturated lattice of the lineality space.
    lineality_basis: IntegerMatrix,
    /// Hermite basis of the saturated lattice orthogonal to the span.
    equations: IntegerMatrix,
    dim: usize,
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn extreme_rays(&self) -> &[Vec<BigInt>] {
        &self.extreme_rays
    }

    pub fn facets(&self) -> &[Vec<BigInt>] {
        &self.facets
    }

    pub fn lineality_basis(&self) -> &IntegerMatrix {
        &self.lineality_basis
    }

    pub fn equations(&self) -> &IntegerMatrix {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality_basis.rows()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality_dim() == 0
    }

    /// Indices of generators on which facet `k` vanishes.
    pub fn facet_incidence(&self, k: usize) -> BTreeSet<usize> {
        let f = &self.facets[k];
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| dot(f, g).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of generators lying in the lineality space.
    pub fn lineality_indices(&self) -> BTreeSet<usize> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| self.facets.iter().all(|f| dot(f, g).is_zero()))
            .map(|(i, _)| i)
            .collect()
    }

    /// Exact membership: `x` lies in the cone iff every facet and equation
    /// holds.
    pub fn contains(&self, x: &[BigInt]) -> Result<bool> {
        check_len(self.ambient_dim, x)?;
        Ok(self.facets.iter().all(|f| !dot(f, x).is_negative())
            && (0..self.equations.rows()).all(|r| dot(self.equations.row(r), x).is_zero()))
    }
}

fn check_len(expected: usize, v: &[BigInt]) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

/// Double description: generators of `{ x in Q^n : a·x >= 0 for all a }`.
///
/// Returns `(lineality, rays)`; `lineality` is a basis of the largest linear
/// subspace, `rays` one primitive vector per extreme ray of the cone modulo
/// that subspace.
pub fn double_description(
    n: usize,
    constraints: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut lineality: Vec<Vec<BigInt>> = IntegerMatrix::identity(n).to_rows();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut processed: Vec<&Vec<BigInt>> = Vec::new();

    for a in constraints {
        if is_zero_vec(a) {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            if dot(a, &l0).is_negative() {
                for x in l0.iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let al0 = dot(a, &l0);
            // Push everything else onto the hyperplane a·x = 0 along l0.
            for v in lineality.iter_mut().chain(rays.iter_mut()) {
                let av = dot(a, v);
                if av.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&l0) {
                    *x = &al0 * &*x - &av * y;
                }
                make_primitive(v);
            }
            make_primitive(&mut l0);
            rays.push(l0);
        } else {
            let values: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            if values.iter().all(|v| !v.is_negative()) {
                processed.push(a);
                continue;
            }
            let zero_sets: Vec<BTreeSet<usize>> = rays
                .iter()
                .map(|r| {
                    processed
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| dot(c, r).is_zero())
                        .map(|(k, _)| k)
                        .collect()
                })
                .collect();
            let mut next: Vec<Vec<BigInt>> = rays
                .iter()
                .zip(&values)
                .filter(|(_, v)| !v.is_negative())
                .map(|(r, _)| r.clone())
                .collect();
            for p in (0..rays.len()).filter(|&i| values[i].is_positive()) {
                for q in (0..rays.len()).filter(|&i| values[i].is_negative()) {
                    let common: BTreeSet<usize> =
                        zero_sets[p].intersection(&zero_sets[q]).copied().collect();
                    let adjacent = (0..rays.len())
                        .filter(|&t| t != p && t != q)
                        .all(|t| !common.is_subset(&zero_sets[t]));
                    if !adjacent {
                        continue;
                    }
                    let wp = -&values[q];
                    let wq = values[p].clone();
                    let mut r: Vec<BigInt> = rays[p]
                        .iter()
                        .zip(&rays[q])
                        .map(|(x, y)| x * &wp + y * &wq)
                        .collect();
                    make_primitive(&mut r);
                    next.push(r);
                }
            }
            rays = next;
        }
        processed.push(a);
    }
    rays.sort();
    rays.dedup();
    (lineality, rays)
}

/// Builds the cone generated by `gens` in `Q^ambient_dim`.
pub fn cone_from_generators(ambient_dim: usize, gens: &[Vec<BigInt>]) -> Result<Cone> {
    for g in gens {
        check_len(ambient_dim, g)?;
    }
    let (perp, raw_facets) = double_description(ambient_dim, gens);
    let perp_q: Vec<_> = rational::row_echelon(perp.iter().map(|v| to_q(v)).collect());
    let mut facets: Vec<Vec<BigInt>> = raw_facets
        .iter()
        .map(|w| primitive_from_rational(&rational::project_off(&to_q(w), &perp_q)))
        .collect();
    facets.sort();
    facets.dedup();
    if facets.iter().any(|f| is_zero_vec(f)) {
        return Err(Error::Invariant(
            "dual ray lies in the orthogonal complement".into(),
        ));
    }

    let dim = rational::rank(gens);
    let tight: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            (0..facets.len())
                .filter(|&k| dot(&facets[k], g).is_zero())
                .collect()
        })
        .collect();
    let lineality_gens: Vec<Vec<BigInt>> = gens
        .iter()
        .zip(&tight)
        .filter(|(_, t)| t.len() == facets.len())
        .map(|(g, _)| g.clone())
        .collect();
    let lineality = saturate(&Sublattice::span_of(ambient_dim, &lineality_gens)?);
    let lin_q: Vec<_> = rational::row_echelon(
        lineality
            .basis()
            .to_rows()
            .iter()
            .map(|v| to_q(v))
            .collect(),
    );

    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for (g, t) in gens.iter().zip(&tight) {
        if t.len() == facets.len() {
            continue;
        }
        let normals: Vec<Vec<BigInt>> = t.iter().map(|&k| facets[k].clone()).collect();
        if dim - rational::rank(&normals) == lineality.rank() + 1 {
            rays.insert(primitive_from_rational(&rational::project_off(
                &to_q(g),
                &lin_q,
            )));
        }
    }

    let equations = saturate(&Sublattice::span_of(ambient_dim, &perp)?);
    Ok(Cone {
        ambient_dim,
        generators: gens.to_vec(),
        extreme_rays: rays.into_iter().collect(),
        facets,
        lineality_basis: lineality.basis().clone(),
        equations: equations.basis().clone(),
        dim,
    })
}

/// A face of a cone, identified by the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub generator_indices: BTreeSet<usize>,
    pub dim: usize,
    /// Vanishes on the face's generators and is positive on all others.
    pub witness: Vec<BigInt>,
}

/// All faces of a cone, ordered by `(dim, generator_indices)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    pub faces: Vec<Face>,
    pub bottom: usize,
    pub top: usize,
    index: BTreeMap<BTreeSet<usize>, usize>,
}

impl FacePoset {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn position(&self, indices: &BTreeSet<usize>) -> Option<usize> {
        self.index.get(indices).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.faces[a]
            .generator_indices
            .is_subset(&self.faces[b].generator_indices)
    }

    /// Index of the intersection of faces `a` and `b`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let key: BTreeSet<usize> = self.faces[a]
            .generator_indices
            .intersection(&self.faces[b].generator_indices)
            .copied()
            .collect();
        self.position(&key)
            .expect("face poset is closed under intersection")
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        covering_pairs(self.faces.iter().map(|f| &f.generator_indices))
    }
}

/// Covering relation of a family of sets under inclusion.
pub(crate) fn covering_pairs<'a>(
    sets: impl Iterator<Item = &'a BTreeSet<usize>>,
) -> Vec<(usize, usize)> {
    let sets: Vec<&BTreeSet<usize>> = sets.collect();
    let lt = |a: usize, b: usize| sets[a].len() < sets[b].len() && sets[a].is_subset(sets[b]);
    let mut out = Vec::new();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if lt(a, b) && !(0..sets.len()).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn face_meet<'a>(p: &'a FacePoset, f: &Face, g: &Face) -> &'a Face {
    let a = p
        .position(&f.generator_indices)
        .expect("face belongs to poset");
    let b = p
        .position(&g.generator_indices)
        .expect("face belongs to poset");
    &p.faces[p.meet(a, b)]
}

/// Enumerates every face as an intersection of facets.
pub fn enumerate_faces(c: &Cone) -> FacePoset {
    let all: BTreeSet<usize> = (0..c.generators.len()).collect();
    let incidences: Vec<BTreeSet<usize>> =
        (0..c.facets.len()).map(|k| c.facet_incidence(k)).collect();

    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue = vec![all];
    while let Some(face) = queue.pop() {
        if !seen.insert(face.clone()) {
            continue;
        }
        for inc in &incidences {
            let next: BTreeSet<usize> = face.intersection(inc).copied().collect();
            if !seen.contains(&next) {
                queue.push(next);
            }
        }
    }

    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|indices| {
            let mut witness = vec![BigInt::zero(); c.ambient_dim];
            for (f, inc) in c.facets.iter().zip(&incidences) {
                if indices.is_subset(inc) {
                    for (w, x) in witness.iter_mut().zip(f) {
                        *w += x;
                    }
                }
            }
            make_primitive(&mut witness);
            let gens: Vec<Vec<BigInt>> = indices.iter().map(|&i| c.generators[i].clone()).collect();
            Face {
                dim: rational::rank(&gens),
                generator_indices: indices,
                witness,
            }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.generator_indices).cmp(&(b.dim, &b.generator_indices)));
    let index: BTreeMap<BTreeSet<usize>, usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.generator_indices.clone(), i))
        .collect();
    let bottom = index[&c.lineality_indices()];
    let top = faces.len() - 1;
    FacePoset {
        faces,
        bottom,
        top,
        index,
    }
}

/// Decides whether `indices` is the generator set of a face, by asking for a
/// rational `w` with `w·g_i = 0` on the set and `w·g_j >= 1` off it.
///
/// Returns an integer witness on success.
pub fn is_face(c: &Cone, indices: &BTreeSet<usize>) -> Result<Option<Vec<BigInt>>> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= c.generators.len()) {
        return Err(Error::InvalidInput(format!(
            "generator index {bad} out of range (cone has {} generators)",
            c.generators.len()
        )));
    }
    let mut system = LinearSystem::new(c.ambient_dim);
    for (i, g) in c.generators.iter().enumerate() {
        let rel = if indices.contains(&i) {
            Relation::Eq
        } else {
            Relation::Ge
        };
        let rhs = if rel == Relation::Eq { 0 } else { 1 };
        system.push(Constraint::from_ints(g, rel, rhs));
    }
    Ok(system.feasible_point().map(|w| primitive_from_rational(&w)))
}

/// Checks `w·g_i = 0` for `i` in the set and `w·g_j > 0` otherwise.
pub fn witness_validates(c: &Cone, indices: &BTreeSet<usize>, w: &[BigInt]) -> bool {
    w.len() == c.ambient_dim
        && c.generators.iter().enumerate().all(|(i, g)| {
            let v = dot(w, g);
            if indices.contains(&i) {
                v.is_zero()
            } else {
                v.is_positive()
            }
        })
}

/// Whether `x` is a nonnegative combination of the extreme rays plus a
/// lineality element, decided by exact feasibility.
pub fn reproduces_from_rays(c: &Cone, x: &[BigInt]) -> Result<bool> {
    check_len(c.ambient_dim, x)?;
    let rays = &c.extreme_rays;
    let lin = c.lineality_basis.to_rows();
    let nvars = rays.len() + lin.len();
    let mut system = LinearSystem::new(nvars);
    for coord in 0..c.ambient_dim {
        let coeffs: Vec<BigInt> = rays.iter().chain(&lin).map(|v| v[coord].clone()).collect();
        let mut row = Constraint::from_ints(&coeffs, Relation::Eq, 0);
        row.rhs = num_rational::BigRational::from_integer(x[coord].clone());
        system.push(row);
    }
    for k in 0..rays.len() {
        let mut unit = vec![BigInt::zero(); nvars];
        unit[k] = 1.into();
        system.push(Constraint::from_ints(&unit, Relation::Ge, 0));
    }
    Ok(system.is_feasible())
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

    fn subset_oracle(c: &Cone) -> BTreeSet<BTreeSet<usize>> {
        let r = c.generators().len();
        (0u32..1 << r)
            .map(|mask| {
                (0..r)
                    .filter(|i| mask >> i & 1 == 1)
                    .collect::<BTreeSet<_>>()
            })
            .filter(|s| is_face(c, s).unwrap().is_some())
            .collect()
    }

    #[test]
    fn quadrant() {
        let c = cone_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(c.extreme_rays(), &gens(&[&[0, 1], &[1, 0]])[..]);
        assert_eq!(c.facets(), &gens(&[&[0, 1], &[1, 0]])[..]);
        assert_eq!(c.lineality_dim(), 0);
        assert_eq!(c.dim(), 2);
        for g in c.generators() {
            assert!(c.facets().iter().all(|f| !dot(f, g).is_negative()));
        }

        let p = enumerate_faces(&c);
        let sets: Vec<_> = p
            .faces
            .iter()
            .map(|f| f.generator_indices.clone())
            .collect();
        assert_eq!(sets, vec![set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]);
        assert_eq!(p.bottom, 0);
        assert_eq!(p.top, 3);
        assert_eq!(
            sets.iter().cloned().collect::<BTreeSet<_>>(),
            subset_oracle(&c)
        );
        for f in &p.faces {
            assert!(witness_validates(&c, &f.generator_indices, &f.witness));
        }
    }

    #[test]
    fn whole_line() {
        let c = cone_from_generators(1, &gens(&[&[1], &[-1]])).unwrap();
        assert_eq!(c.lineality_dim(), 1);
        assert!(c.facets().is_empty());
        assert!(c.extreme_rays().is_empty());
        assert_eq!(enumerate_faces(&c).len(), 1);
    }

    #[test]
    fn zero_cone() {
        let c = cone_from_generators(2, &[]).unwrap();
        assert_eq!(c.dim(), 0);
        assert!(c.facets().is_empty());
        let p = enumerate_faces(&c);
        assert_eq!(p.len(), 1);
        assert_eq!(p.bottom, p.top);
        assert_eq!(c.equations().rows(), 2);
    }

    #[test]
    fn hypersurface_cone_has_the_x_face() {
        // Generators v_z, v_y, v_x for z^2 = x y^2.
        let c = cone_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[2, -2]])).unwrap();
        let p = enumerate_faces(&c);
        assert_eq!(p.len(), 4);
        assert!(p.position(&set(&[2])).is_some());
        assert_eq!(
            p.faces
                .iter()
                .map(|f| f.generator_indices.clone())
                .collect::<BTreeSet<_>>(),
            subset_oracle(&c)
        );
    }

    #[test]
    fn is_face_examples() {
        let c = cone_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(is_face(&c, &set(&[0, 1])).unwrap(), None);
        assert_eq!(is_face(&c, &set(&[0, 1, 2])).unwrap(), Some(ints(&[0, 0])));
        let w = is_face(&c, &set(&[])).unwrap().unwrap();
        assert!(witness_validates(&c, &set(&[]), &w));
        assert!(is_face(&c, &set(&[7])).is_err());
    }

    #[test]
    fn meets() {
        let c = cone_from_generators(2, &gens(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let p = enumerate_faces(&c);
        let (e0, e1) = (&p.faces[1], &p.faces[2]);
        assert_eq!(face_meet(&p, e0, e1).generator_indices, set(&[]));
        assert_eq!(face_meet(&p, e0, &p.faces[p.top]), e0);
        assert_eq!(face_meet(&p, e1, e1), e1);
    }

    #[test]
    fn zero_generator_lies_on_every_face() {
        let c = cone_from_generators(2, &gens(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let p = enumerate_faces(&c);
        assert_eq!(p.len(), 4);
        assert!(p.faces.iter().all(|f| f.generator_indices.contains(&0)));
    }

    #[test]
    fn half_plane_with_lineality() {
        let c = cone_from_generators(2, &gens(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap();
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(c.facets(), &gens(&[&[0, 1]])[..]);
        assert_eq!(c.extreme_rays(), &gens(&[&[0, 1]])[..]);
        let p = enumerate_faces(&c);
        assert_eq!(p.len(), 2);
        assert_eq!(p.faces[p.bottom].generator_indices, set(&[0, 1]));
        for g in c.generators() {
            assert!(reproduces_from_rays(&c, g).unwrap());
        }
    }

    #[test]
    fn lower_dimensional_cone_in_space() {
        // A 2-dim cone sitting inside the plane z = x + y.
        let c = cone_from_generators(3, &gens(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.equations().rows(), 1);
        assert_eq!(c.facets().len(), 2);
        let p = enumerate_faces(&c);
        assert_eq!(p.len(), 4);
        assert_eq!(
            p.faces
                .iter()
                .map(|f| f.generator_indices.clone())
                .collect::<BTreeSet<_>>(),
            subset_oracle(&c)
        );
        assert!(c.contains(&ints(&[2, 1, 3])).unwrap());
        assert!(!c.contains(&ints(&[2, 1, 4])).unwrap());
        assert!(!c.contains(&ints(&[-1, 1, 0])).unwrap());
    }

    #[test]
    fn square_pyramid() {
        // Four rays over a square: non-simplicial apex.
        let c = cone_from_generators(
            3,
            &gens(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]),
        )
        .unwrap();
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.extreme_rays().len(), 4);
        let p = enumerate_faces(&c);
        // apex, 4 rays, 4 two-faces, the cone
        assert_eq!(p.len(), 10);
        assert_eq!(
            p.faces
                .iter()
                .map(|f| f.generator_indices.clone())
                .collect::<BTreeSet<_>>(),
            subset_oracle(&c)
        );
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            cone_from_generators(2, &gens(&[&[1]])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
