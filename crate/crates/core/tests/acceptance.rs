//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use idempotoric::cone::{cone_from_generators, enumerate_faces, is_face};
use idempotoric::eigen::{
    self, character_data, check_relation_criterion, factor, kernel_vectors_in_box,
    primitive_relations, EigenInput, PrimitiveRelation,
};
use idempotoric::finite::{self, catalogue, FiniteSemigroup};
use idempotoric::io::report::{run, Report};
use idempotoric::io::JobSpec;
use idempotoric::monoid::{self, monoid_from_generators, IdempotentPoset, WeightMonoid};
use idempotoric::sample::{random_eigenvalues, random_generators};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Check {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Random cones shared by criteria 3, 5, 6 and 7.
fn random_cones() -> Vec<(usize, Vec<Vec<BigInt>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0e5);
    (0..200)
        .map(|_| random_generators(&mut rng, 5, 8, 4))
        .collect()
}

/// Random spectra shared by criteria 4, 6 and 10.
fn random_spectra(seed: u64) -> Vec<EigenInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..100)
        .map(|_| EigenInput::new(random_eigenvalues(&mut rng, 6, 50)).unwrap())
        .collect()
}

fn hypersurface_cone(n: i64) -> Vec<Vec<BigInt>> {
    vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[n, -n])]
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let job = JobSpec::from_json(r#"{"mode":"eigen","payload":{"eigenvalues":["2","3","6"]}}"#)
        .map_err(|e| e.to_string())?;
    let Report::Eigen(r) = run(&job).map_err(|e| e.to_string())? else {
        return Err("eigen job produced another report".into());
    };
    let sets: Vec<Vec<usize>> = r
        .idempotents
        .elements
        .iter()
        .map(|e| e.index_set.clone())
        .collect();
    // Index sets in the report count from zero: {1}, {2}, {1,2,3} below.
    ensure(
        sets == vec![vec![], vec![0], vec![1], vec![0, 1, 2]],
        || format!("I-sets {sets:?}"),
    )?;
    ensure(r.lattice_rank == 2, || {
        format!("lattice rank {}", r.lattice_rank)
    })?;
    ensure(
        r.relations.iter().any(|rel| rel.text == "t1*t2 = t3"),
        || "t1*t2 = t3 missing".into(),
    )?;
    ensure(r.idempotents.chain_length == 2, || {
        format!("chain length {}", r.idempotents.chain_length)
    })?;
    ensure(r.envelope.envelope_dim == 2, || {
        format!("envelope dim {}", r.envelope.envelope_dim)
    })?;
    within(Duration::from_secs(1), start)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for n in 2..=4 {
        let w = monoid_from_generators(2, &hypersurface_cone(n)).map_err(|e| e.to_string())?;
        let p = monoid::idempotents(&w).map_err(|e| e.to_string())?;
        ensure(p.position(&set(&[2])).is_some(), || {
            format!("n = {n}: face {{x}} missing")
        })?;
        ensure(p.len() == 4, || format!("n = {n}: {} idempotents", p.len()))?;
        let chain = monoid::maximal_chain_length(&p).map_err(|e| e.to_string())?;
        ensure(chain == 2, || format!("n = {n}: chain length {chain}"))?;
    }
    within(Duration::from_secs(1), start)
}

fn criterion_3(cones: &[(usize, Vec<Vec<BigInt>>)]) -> Check {
    let start = Instant::now();
    for (k, (dim, gens)) in cones.iter().enumerate() {
        let c = cone_from_generators(*dim, gens).map_err(|e| e.to_string())?;
        let listed: BTreeSet<BTreeSet<usize>> = enumerate_faces(&c)
            .faces
            .into_iter()
            .map(|f| f.generator_indices)
            .collect();
        let n = gens.len();
        let mut by_oracle = BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let s: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if is_face(&c, &s).map_err(|e| e.to_string())?.is_some() {
                by_oracle.insert(s);
            }
        }
        ensure(listed == by_oracle, || {
            format!("cone {k} {gens:?}: {listed:?} vs {by_oracle:?}")
        })?;
    }
    within(Duration::from_secs(60), start)
}

fn criterion_4(spectra: &[EigenInput]) -> Check {
    let start = Instant::now();
    for (k, e) in spectra.iter().enumerate() {
        for n in [2, 3, 5] {
            let holds = eigen::power_invariance(e, n).map_err(|e| e.to_string())?;
            ensure(holds, || {
                format!("spectrum {k} {:?}, n = {n}", e.eigenvalues())
            })?;
        }
    }
    within(Duration::from_secs(30), start)
}

fn criterion_5(cones: &[(usize, Vec<Vec<BigInt>>)]) -> Check {
    for (k, (dim, gens)) in cones.iter().enumerate() {
        let w = monoid_from_generators(*dim, gens).map_err(|e| e.to_string())?;
        let lineality = w.cone().map_err(|e| e.to_string())?.lineality_dim();
        let p = monoid::idempotents(&w).map_err(|e| e.to_string())?;
        // An error here means two maximal chains have different lengths.
        let chain = monoid::maximal_chain_length(&p).map_err(|e| format!("cone {k}: {e}"))?;
        let env = monoid::toric_envelope(&w).map_err(|e| e.to_string())?;
        let expected = w.ambient_rank - lineality;
        ensure(chain == expected && env.envelope_dim == expected, || {
            format!(
                "cone {k}: chain {chain}, rank - lineality {expected}, envelope {}",
                env.envelope_dim
            )
        })?;
    }
    Ok(())
}

fn envelope_isomorphic(w: &WeightMonoid) -> Result<bool, String> {
    let p: IdempotentPoset = monoid::idempotents(w).map_err(|e| e.to_string())?;
    let env = monoid::toric_envelope(w).map_err(|e| e.to_string())?;
    Ok(monoid::order_isomorphic(&p, &env.envelope_idempotent_poset))
}

fn criterion_6(cones: &[(usize, Vec<Vec<BigInt>>)], spectra: &[EigenInput]) -> Check {
    let mut instances: Vec<(String, WeightMonoid)> = Vec::new();
    let worked = EigenInput::from_i64(&[(2, 1), (3, 1), (6, 1)]).unwrap();
    for (k, e) in std::iter::once(&worked).chain(spectra).enumerate() {
        instances.push((
            format!("spectrum {k}"),
            character_data(&factor(e)).map_err(|e| e.to_string())?,
        ));
    }
    for n in 2..=4 {
        instances.push((
            format!("hypersurface n = {n}"),
            monoid_from_generators(2, &hypersurface_cone(n)).unwrap(),
        ));
    }
    for (k, (dim, gens)) in cones.iter().enumerate() {
        instances.push((
            format!("cone {k}"),
            monoid_from_generators(*dim, gens).map_err(|e| e.to_string())?,
        ));
    }
    for (name, w) in &instances {
        ensure(envelope_isomorphic(w)?, || {
            format!("{name}: envelope poset not isomorphic")
        })?;
    }
    Ok(())
}

fn criterion_7(
    cones: &[(usize, Vec<Vec<BigInt>>)],
    commutative: &[(String, FiniteSemigroup)],
) -> Check {
    let start = Instant::now();
    for (k, (dim, gens)) in cones.iter().enumerate() {
        let w = monoid_from_generators(*dim, gens).map_err(|e| e.to_string())?;
        let c = w.cone().map_err(|e| e.to_string())?;
        let p = monoid::idempotents(&w).map_err(|e| e.to_string())?;
        let meet_of_all = p
            .elements
            .iter()
            .map(|e| e.index_set.clone())
            .reduce(|a, b| a.intersection(&b).copied().collect())
            .unwrap();
        let product = monoid::smallest_idempotent(&p).map_err(|e| e.to_string())?;
        ensure(
            meet_of_all == c.lineality_indices() && product.index_set == meet_of_all,
            || {
                format!(
                    "cone {k}: meet {meet_of_all:?}, lineality {:?}",
                    c.lineality_indices()
                )
            },
        )?;
    }
    for (name, s) in commutative {
        let e0 = finite::smallest_idempotent_commutative(s).map_err(|e| format!("{name}: {e}"))?;
        ensure(finite::is_minimum_idempotent(s, e0), || {
            format!("{name}: product {e0} is not minimum")
        })?;
    }
    within(Duration::from_secs(120), start)
}

fn criterion_8(tables: &[(String, FiniteSemigroup)]) -> Check {
    for (name, s) in tables {
        for x in 0..s.size() {
            let e = finite::idempotent_power(s, x);
            let ip = finite::index_period(s, x);
            let among_powers = (1..ip.index + ip.period).any(|k| finite::power(s, x, k) == e);
            ensure(s.is_idempotent(e) && among_powers, || {
                format!("{name}: element {x} gives {e}")
            })?;
        }
    }
    Ok(())
}

fn criterion_9(tables: &[(String, FiniteSemigroup)]) -> Check {
    for (name, s) in tables {
        for e in finite::idempotent_elements(s) {
            let criterion = finite::check_smallest_criterion(s, e).map_err(|e| e.to_string())?;
            let minimum = finite::is_minimum_idempotent(s, e);
            ensure(criterion == minimum, || {
                format!("{name}: e = {e}, criterion {criterion}, minimum {minimum}")
            })?;
        }
    }
    Ok(())
}

fn criterion_10(spectra: &[EigenInput]) -> Check {
    let start = Instant::now();
    for (k, e) in spectra.iter().enumerate() {
        let t = factor(e);
        let rels: Vec<PrimitiveRelation> = kernel_vectors_in_box(&t.exponents, 3)
            .iter()
            .filter_map(|z| PrimitiveRelation::from_kernel_vector(z))
            .collect();
        let p = eigen::idempotent_set(e).map_err(|e| e.to_string())?;
        for s in p.index_sets() {
            ensure(check_relation_criterion(&s, &rels), || {
                format!("spectrum {k}: face {s:?} rejected")
            })?;
        }
    }
    let worked = EigenInput::from_i64(&[(2, 1), (3, 1), (6, 1)]).unwrap();
    let rels = primitive_relations(&factor(&worked), 3).map_err(|e| e.to_string())?;
    ensure(!check_relation_criterion(&set(&[0, 1]), &rels), || {
        "I = {1,2} accepted for (2,3,6)".into()
    })?;
    within(Duration::from_secs(30), start)
}

fn main() -> ExitCode {
    let cones = random_cones();
    let spectra = random_spectra(0xe16e);
    let tables = catalogue::standard_catalogue();
    let commutative: Vec<(String, FiniteSemigroup)> = tables
        .iter()
        .filter(|(_, s)| s.is_commutative())
        .cloned()
        .collect();

    let criteria: Vec<Criterion> = vec![
        ("1 worked instance (2,3,6)", Box::new(criterion_1)),
        ("2 hypersurface cones n = 2,3,4", Box::new(criterion_2)),
        (
            "3 dual-oracle face equivalence",
            Box::new(|| criterion_3(&cones)),
        ),
        (
            "4 power invariance n = 2,3,5",
            Box::new(|| criterion_4(&spectra)),
        ),
        ("5 graded maximal chains", Box::new(|| criterion_5(&cones))),
        (
            "6 envelope isomorphism",
            Box::new(|| criterion_6(&cones, &spectra)),
        ),
        (
            "7 smallest idempotent as product",
            Box::new(|| criterion_7(&cones, &commutative)),
        ),
        ("8 idempotent powers", Box::new(|| criterion_8(&tables))),
        (
            "9 smallest-idempotent criterion",
            Box::new(|| criterion_9(&tables)),
        ),
        (
            "10 relation-criterion consistency",
            Box::new(|| criterion_10(&spectra)),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(()) => println!("PASS  criterion {name} ({t:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name} ({t:.2?}): {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
