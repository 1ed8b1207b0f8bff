//! Randomized and exhaustive consistency suites, runnable from the CLI.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Mode, SelftestPayload, SCHEMA};
use crate::cone;
use crate::eigen::{self, EigenInput, DEFAULT_RELATION_BOUND};
use crate::finite::{self, catalogue, FiniteSemigroup};
use crate::monoid;
use crate::sample;

/// Failures kept per suite in the report.
const FAILURE_SAMPLE: usize = 10;

pub fn default_seed() -> u64 {
    0x5eed_2718
}

pub fn default_cases() -> usize {
    40
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestReport {
    pub schema: String,
    pub mode: Mode,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub total_passed: usize,
    pub total_failed: usize,
}

fn suite<T>(name: &str, cases: &[T], check: impl Fn(&T) -> Result<(), String>) -> SuiteResult {
    let mut r = SuiteResult {
        name: name.into(),
        cases: cases.len(),
        passed: 0,
        failed: 0,
        failures: Vec::new(),
    };
    for (i, case) in cases.iter().enumerate() {
        match check(case) {
            Ok(()) => r.passed += 1,
            Err(msg) => {
                r.failed += 1;
                if r.failures.len() < FAILURE_SAMPLE {
                    r.failures.push(format!("case {i}: {msg}"));
                }
            }
        }
    }
    r
}

/// `enumerate_faces` and the per-subset `is_face` oracle agree, and every
/// reported witness cuts out its face.
pub fn check_face_oracles(dim: usize, gens: &[Vec<BigInt>]) -> Result<(), String> {
    let c = cone::cone_from_generators(dim, gens).map_err(|e| e.to_string())?;
    let faces = cone::enumerate_faces(&c);
    let listed: BTreeSet<BTreeSet<usize>> = faces
        .faces
        .iter()
        .map(|f| f.generator_indices.clone())
        .collect();
    let n = gens.len();
    for mask in 0u32..(1 << n) {
        let subset: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let oracle = cone::is_face(&c, &subset).map_err(|e| e.to_string())?;
        if oracle.is_some() != listed.contains(&subset) {
            return Err(format!("oracles disagree on {subset:?} for {gens:?}"));
        }
        if let Some(w) = oracle {
            if !cone::witness_validates(&c, &subset, &w) {
                return Err(format!("is_face witness for {subset:?} is invalid"));
            }
        }
    }
    for f in &faces.faces {
        if !cone::witness_validates(&c, &f.generator_indices, &f.witness) {
            return Err(format!(
                "enumerated witness for {:?} is invalid",
                f.generator_indices
            ));
        }
    }
    Ok(())
}

/// Every maximal chain has length `rank - lineality`, which is also the
/// envelope dimension, and the envelope has an isomorphic idempotent poset.
pub fn check_graded(dim: usize, gens: &[Vec<BigInt>]) -> Result<(), String> {
    let w = monoid::monoid_from_generators(dim, gens).map_err(|e| e.to_string())?;
    let c = w.cone().map_err(|e| e.to_string())?;
    let poset = monoid::idempotents(&w).map_err(|e| e.to_string())?;
    let chain = monoid::maximal_chain_length(&poset).map_err(|e| e.to_string())?;
    let env = monoid::toric_envelope(&w).map_err(|e| e.to_string())?;
    let expected = w.ambient_rank - c.lineality_dim();
    if chain != expected || env.envelope_dim != expected {
        return Err(format!(
            "chain {chain}, rank - lineality {expected}, envelope dim {} for {gens:?}",
            env.envelope_dim
        ));
    }
    if !monoid::order_isomorphic(&poset, &env.envelope_idempotent_poset) {
        return Err(format!("envelope poset not isomorphic for {gens:?}"));
    }
    Ok(())
}

/// The eigenvalue pipeline agrees with its independent checks: the
/// smallest idempotent by feasibility, the relation criterion on every face,
/// and invariance of the weight monoid under `x -> x^n`.
pub fn check_eigen(input: &EigenInput, powers: &[u32]) -> Result<(), String> {
    let err = |e: crate::Error| e.to_string();
    let table = eigen::factor(input);
    let w = eigen::character_data(&table).map_err(err)?;
    let poset = monoid::idempotents(&w).map_err(err)?;
    let rels = eigen::primitive_relations(&table, DEFAULT_RELATION_BOUND).map_err(err)?;
    let smallest = &poset.elements[poset.smallest].index_set;
    let by_lp = eigen::smallest_idempotent_indices(input).map_err(err)?;
    if &by_lp != smallest {
        return Err(format!("smallest {smallest:?} vs feasibility {by_lp:?}"));
    }
    if let Some(e) = poset
        .elements
        .iter()
        .find(|e| !eigen::check_relation_criterion(&e.index_set, &rels))
    {
        return Err(format!("face {:?} violates a relation", e.index_set));
    }
    for &n in powers {
        if !eigen::power_invariance(input, n).map_err(err)? {
            return Err(format!("power invariance fails for n = {n}"));
        }
    }
    Ok(())
}

/// Idempotent powers, the smallest-idempotent criterion, the commutative
/// product formula and the Peirce postconditions on one table.
pub fn check_finite(s: &FiniteSemigroup) -> Result<(), String> {
    for x in 0..s.size() {
        let e = finite::idempotent_power(s, x);
        let ip = finite::index_period(s, x);
        let powers: Vec<usize> = (1..ip.index + ip.period)
            .map(|k| finite::power(s, x, k))
            .collect();
        if !s.is_idempotent(e) || !powers.contains(&e) {
            return Err(format!(
                "idempotent_power({x}) = {e} is not an idempotent power"
            ));
        }
        if powers
            .iter()
            .filter(|&&p| s.is_idempotent(p))
            .collect::<BTreeSet<_>>()
            .len()
            != 1
        {
            return Err(format!("powers of {x} contain more than one idempotent"));
        }
    }
    let idems = finite::idempotent_elements(s);
    for &e in &idems {
        let criterion = finite::check_smallest_criterion(s, e).map_err(|e| e.to_string())?;
        if criterion != finite::is_minimum_idempotent(s, e) {
            return Err(format!("criterion and minimality disagree at {e}"));
        }
        finite::peirce_sets(s, e).map_err(|e| e.to_string())?;
    }
    if s.is_commutative() {
        let e0 = finite::smallest_idempotent_commutative(s).map_err(|e| e.to_string())?;
        if !finite::is_minimum_idempotent(s, e0) {
            return Err(format!("product of idempotents {e0} is not the minimum"));
        }
    }
    Ok(())
}

pub fn run(p: &SelftestPayload) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let cones: Vec<(usize, Vec<Vec<BigInt>>)> = (0..p.cones)
        .map(|_| sample::random_generators(&mut rng, 5, 8, 4))
        .collect();
    let spectra: Vec<EigenInput> = (0..p.eigen_lists)
        .map(|_| {
            EigenInput::new(sample::random_eigenvalues(&mut rng, 6, 50))
                .expect("samples are nonzero")
        })
        .collect();
    let tables: Vec<FiniteSemigroup> = catalogue::standard_catalogue()
        .into_iter()
        .map(|(_, s)| s)
        .collect();

    let suites = vec![
        suite("face_oracles", &cones, |(d, g)| check_face_oracles(*d, g)),
        suite("graded_chains", &cones, |(d, g)| check_graded(*d, g)),
        suite("eigen_pipeline", &spectra, |e| check_eigen(e, &[2, 3, 5])),
        suite("finite_catalogue", &tables, check_finite),
    ];
    SelftestReport {
        schema: SCHEMA.into(),
        mode: Mode::Selftest,
        seed: p.seed,
        total_passed: suites.iter().map(|s| s.passed).sum(),
        total_failed: suites.iter().map(|s| s.failed).sum(),
        suites,
    }
}

pub fn write_text(out: &mut String, r: &SelftestReport) {
    let _ = writeln!(out, "selftest (seed {})", r.seed);
    for s in &r.suites {
        let _ = writeln!(
            out,
            "  {:<18} {:>4} passed {:>4} failed",
            s.name, s.passed, s.failed
        );
        for f in &s.failures {
            let _ = writeln!(out, "    {f}");
        }
    }
    let _ = writeln!(
        out,
        "total: {} passed, {} failed",
        r.total_passed, r.total_failed
    );
}
