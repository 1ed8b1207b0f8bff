//! Report documents for each mode, and their JSON, DOT and text renderings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::dot::{export_dot, index_set_label, HasseDiagram};
use super::exact::{int_rows, ints, to_bigints, ExactInt, ExactRational};
use super::selftest::{self, SelftestReport};
use super::{
    pretty, EigenPayload, FinitePayload, Format, GeneratorPayload, JobError, JobSpec, Mode,
    Options, Payload, SCHEMA,
};
use crate::cone::{self, Cone};
use crate::eigen::{self, EigenInput, PrimitiveRelation};
use crate::error::{Error, Result};
use crate::finite::{self, FiniteSemigroup, GreensClasses, PeirceSets};
use crate::monoid::{self, IdempotentPoset, WeightMonoid};

/// Cones with more generators than this skip the all-subsets cross-check.
pub const SUBSET_CROSSCHECK_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentEntry {
    /// Generator indices, counted from zero.
    pub index_set: Vec<usize>,
    pub labels: Vec<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passes_relation_criterion: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetReport {
    pub elements: Vec<IdempotentEntry>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub smallest: usize,
    pub largest: usize,
    pub chain_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeSummary {
    pub envelope_dim: usize,
    pub unit_lattice_rank: usize,
    pub unit_lattice_basis: Vec<Vec<ExactInt>>,
    pub quotient_rank: usize,
    pub projected_generators: Vec<Vec<ExactInt>>,
    pub idempotent_count: usize,
    pub order_isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationEntry {
    pub lhs: BTreeMap<String, ExactInt>,
    pub rhs: BTreeMap<String, ExactInt>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerCheck {
    pub n: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenCrosscheck {
    /// Smallest idempotent recomputed by exact feasibility, per index.
    pub smallest_by_feasibility: Vec<usize>,
    pub smallest_agrees: bool,
    pub relation_criterion_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenReport {
    pub schema: String,
    pub mode: Mode,
    pub eigenvalues: Vec<ExactRational>,
    pub multiplicities: Vec<usize>,
    pub primes: Vec<ExactInt>,
    pub exponents: Vec<Vec<ExactInt>>,
    pub lattice_rank: usize,
    pub labels: Vec<String>,
    pub generators: Vec<Vec<ExactInt>>,
    pub relation_bound: u32,
    pub relations: Vec<RelationEntry>,
    pub idempotents: PosetReport,
    pub smallest_idempotent: IdempotentEntry,
    pub largest_idempotent: IdempotentEntry,
    pub envelope: EnvelopeSummary,
    pub power_invariance: PowerCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<EigenCrosscheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidReport {
    pub schema: String,
    pub mode: Mode,
    pub ambient_dim: usize,
    pub lattice_rank: usize,
    pub lattice_basis: Vec<Vec<ExactInt>>,
    pub labels: Vec<String>,
    pub generators: Vec<Vec<ExactInt>>,
    pub idempotents: PosetReport,
    pub smallest_idempotent: IdempotentEntry,
    pub largest_idempotent: IdempotentEntry,
    pub envelope: EnvelopeSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub index_set: Vec<usize>,
    pub dim: usize,
    pub witness: Vec<ExactInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeCrosscheck {
    pub subsets_checked: usize,
    pub witnesses_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeReport {
    pub schema: String,
    pub mode: Mode,
    pub ambient_dim: usize,
    pub dim: usize,
    pub lineality_dim: usize,
    pub pointed: bool,
    pub extreme_rays: Vec<Vec<ExactInt>>,
    pub facets: Vec<Vec<ExactInt>>,
    pub faces: Vec<FaceEntry>,
    pub hasse_edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<ConeCrosscheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerEntry {
    pub element: usize,
    pub index: usize,
    pub period: usize,
    pub idempotent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentDetail {
    pub element: usize,
    pub central: bool,
    /// Central with `eS` a group.
    pub criterion: bool,
    /// Below every idempotent.
    pub minimum: bool,
    pub peirce: PeirceSets,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteReport {
    pub schema: String,
    pub mode: Mode,
    pub size: usize,
    pub commutative: bool,
    pub idempotents: Vec<usize>,
    pub smallest_idempotent: Option<usize>,
    pub powers: Vec<PowerEntry>,
    pub greens: GreensClasses,
    pub idempotent_details: Vec<IdempotentDetail>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Eigen(EigenReport),
    Monoid(MonoidReport),
    Cone(ConeReport),
    Finite(FiniteReport),
    Selftest(SelftestReport),
}

pub fn run(job: &JobSpec) -> Result<Report, JobError> {
    Ok(match &job.payload {
        Payload::Eigen(p) => Report::Eigen(eigen_report(p, &job.options)?),
        Payload::Monoid(p) => Report::Monoid(monoid_report(p)?),
        Payload::Cone(p) => Report::Cone(cone_report(p, &job.options)?),
        Payload::Finite(p) => Report::Finite(finite_report(p, &job.options)?),
        Payload::Selftest(p) => Report::Selftest(selftest::run(p)),
    })
}

fn poset_report(
    p: &IdempotentPoset,
    labels: &[String],
    decorate: impl Fn(&BTreeSet<usize>, &mut IdempotentEntry),
) -> Result<PosetReport> {
    let elements = p
        .elements
        .iter()
        .map(|e| {
            let mut entry = IdempotentEntry {
                index_set: e.index_set.iter().copied().collect(),
                labels: e.index_set.iter().map(|&i| labels[i].clone()).collect(),
                dim: e.face_dim,
                diagonal: None,
                passes_relation_criterion: None,
            };
            decorate(&e.index_set, &mut entry);
            entry
        })
        .collect();
    Ok(PosetReport {
        elements,
        hasse_edges: p.hasse_edges.clone(),
        smallest: p.smallest,
        largest: p.largest,
        chain_length: monoid::maximal_chain_length(p)?,
    })
}

fn envelope_summary(w: &WeightMonoid, poset: &IdempotentPoset) -> Result<EnvelopeSummary> {
    let env = monoid::toric_envelope(w)?;
    Ok(EnvelopeSummary {
        envelope_dim: env.envelope_dim,
        unit_lattice_rank: env.unit_lattice.rank(),
        unit_lattice_basis: int_rows(&env.unit_lattice.basis().to_rows()),
        quotient_rank: env.quotient_rank,
        projected_generators: int_rows(&env.projected_generators),
        idempotent_count: env.envelope_idempotent_poset.len(),
        order_isomorphic: monoid::order_isomorphic(poset, &env.envelope_idempotent_poset),
    })
}

fn extremes(p: &PosetReport) -> (IdempotentEntry, IdempotentEntry) {
    (
        p.elements[p.smallest].clone(),
        p.elements[p.largest].clone(),
    )
}

fn relation_entry(rel: &PrimitiveRelation, labels: &[String]) -> RelationEntry {
    let side = |m: &BTreeMap<usize, BigInt>| {
        m.iter()
            .map(|(&i, k)| (labels[i].clone(), ExactInt(k.clone())))
            .collect()
    };
    RelationEntry {
        lhs: side(&rel.lhs),
        rhs: side(&rel.rhs),
        text: rel.to_string(),
    }
}

fn eigen_report(p: &EigenPayload, opts: &Options) -> Result<EigenReport> {
    let input = EigenInput::new(p.eigenvalues.iter().map(|r| r.0.clone()).collect())?;
    if input.is_empty() {
        return Err(Error::InvalidInput(
            "at least one eigenvalue is required".into(),
        ));
    }
    let table = eigen::factor(&input);
    let w = eigen::character_data(&table)?;
    let rels = eigen::primitive_relations(&table, opts.relation_bound)?;
    let poset = monoid::idempotents(&w)?;
    let r = input.len();
    let idempotents = poset_report(&poset, &w.labels, |set, entry| {
        entry.diagonal = Some(eigen::diagonal_idempotent(set, r));
        entry.passes_relation_criterion = Some(eigen::check_relation_criterion(set, &rels));
    })?;
    let (smallest_idempotent, largest_idempotent) = extremes(&idempotents);

    let crosscheck = if opts.crosscheck {
        let by_lp = eigen::smallest_idempotent_indices(&input)?;
        let smallest_agrees = by_lp == poset.elements[poset.smallest].index_set;
        let relation_criterion_holds = idempotents
            .elements
            .iter()
            .all(|e| e.passes_relation_criterion == Some(true));
        if !smallest_agrees {
            return Err(Error::Invariant(format!(
                "smallest idempotent {} disagrees with feasibility answer {}",
                index_set_label(&poset.elements[poset.smallest].index_set),
                index_set_label(&by_lp)
            )));
        }
        if !relation_criterion_holds {
            return Err(Error::Invariant(
                "a face index set violates a primitive relation".into(),
            ));
        }
        Some(EigenCrosscheck {
            smallest_by_feasibility: by_lp.into_iter().collect(),
            smallest_agrees,
            relation_criterion_holds,
        })
    } else {
        None
    };

    Ok(EigenReport {
        schema: SCHEMA.into(),
        mode: Mode::Eigen,
        eigenvalues: input
            .eigenvalues()
            .iter()
            .cloned()
            .map(ExactRational)
            .collect(),
        multiplicities: input.multiplicities().to_vec(),
        primes: table
            .primes
            .iter()
            .map(|p| ExactInt(p.clone().into()))
            .collect(),
        exponents: int_rows(&table.exponents.to_rows()),
        lattice_rank: w.ambient_rank,
        labels: w.labels.clone(),
        generators: int_rows(&w.generators),
        relation_bound: opts.relation_bound,
        relations: rels
            .iter()
            .map(|rel| relation_entry(rel, &w.labels))
            .collect(),
        envelope: envelope_summary(&w, &poset)?,
        idempotents,
        smallest_idempotent,
        largest_idempotent,
        power_invariance: PowerCheck {
            n: 2,
            holds: eigen::power_invariance(&input, 2)?,
        },
        crosscheck,
    })
}

fn raw_generators(p: &GeneratorPayload) -> Vec<Vec<BigInt>> {
    p.generators.iter().map(|g| to_bigints(g)).collect()
}

fn monoid_report(p: &GeneratorPayload) -> Result<MonoidReport> {
    let w = monoid::monoid_from_generators(p.ambient_dim, &raw_generators(p))?;
    let poset = monoid::idempotents(&w)?;
    let idempotents = poset_report(&poset, &w.labels, |_, _| {})?;
    let (smallest_idempotent, largest_idempotent) = extremes(&idempotents);
    Ok(MonoidReport {
        schema: SCHEMA.into(),
        mode: Mode::Monoid,
        ambient_dim: p.ambient_dim,
        lattice_rank: w.ambient_rank,
        lattice_basis: int_rows(&w.lattice_basis.to_rows()),
        labels: w.labels.clone(),
        generators: int_rows(&w.generators),
        envelope: envelope_summary(&w, &poset)?,
        idempotents,
        smallest_idempotent,
        largest_idempotent,
    })
}

/// Every subset of generators is a face index set exactly when
/// `enumerate_faces` lists it, and every listed witness is valid.
fn crosscheck_cone(c: &Cone, faces: &cone::FacePoset) -> Result<ConeCrosscheck> {
    let n = c.generators().len();
    let listed: BTreeSet<&BTreeSet<usize>> =
        faces.faces.iter().map(|f| &f.generator_indices).collect();
    for mask in 0u32..(1 << n) {
        let subset: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let oracle = cone::is_face(c, &subset)?;
        if oracle.is_some() != listed.contains(&subset) {
            return Err(Error::Invariant(format!(
                "face oracles disagree on {}",
                index_set_label(&subset)
            )));
        }
    }
    for f in &faces.faces {
        if !cone::witness_validates(c, &f.generator_indices, &f.witness) {
            return Err(Error::Invariant(format!(
                "witness for face {} does not cut it out",
                index_set_label(&f.generator_indices)
            )));
        }
    }
    Ok(ConeCrosscheck {
        subsets_checked: 1 << n,
        witnesses_checked: faces.len(),
    })
}

fn cone_report(p: &GeneratorPayload, opts: &Options) -> Result<ConeReport> {
    let c = cone::cone_from_generators(p.ambient_dim, &raw_generators(p))?;
    let faces = cone::enumerate_faces(&c);
    let crosscheck = if opts.crosscheck && c.generators().len() <= SUBSET_CROSSCHECK_LIMIT {
        Some(crosscheck_cone(&c, &faces)?)
    } else {
        None
    };
    Ok(ConeReport {
        schema: SCHEMA.into(),
        mode: Mode::Cone,
        ambient_dim: c.ambient_dim(),
        dim: c.dim(),
        lineality_dim: c.lineality_dim(),
        pointed: c.is_pointed(),
        extreme_rays: int_rows(c.extreme_rays()),
        facets: int_rows(c.facets()),
        faces: faces
            .faces
            .iter()
            .map(|f| FaceEntry {
                index_set: f.generator_indices.iter().copied().collect(),
                dim: f.dim,
                witness: ints(&f.witness),
            })
            .collect(),
        hasse_edges: faces.covers(),
        crosscheck,
    })
}

fn finite_report(p: &FinitePayload, opts: &Options) -> Result<FiniteReport> {
    let s = FiniteSemigroup::new(p.table.clone())?;
    let idempotents = finite::idempotent_elements(&s);
    let smallest_idempotent = if s.is_commutative() {
        Some(finite::smallest_idempotent_commutative(&s)?)
    } else {
        idempotents
            .iter()
            .copied()
            .find(|&e| finite::is_minimum_idempotent(&s, e))
    };
    let powers = (0..s.size())
        .map(|x| {
            let ip = finite::index_period(&s, x);
            PowerEntry {
                element: x,
                index: ip.index,
                period: ip.period,
                idempotent: finite::idempotent_power(&s, x),
            }
        })
        .collect();
    let idempotent_details = idempotents
        .iter()
        .map(|&e| {
            let criterion = finite::check_smallest_criterion(&s, e)?;
            let minimum = finite::is_minimum_idempotent(&s, e);
            if opts.crosscheck && criterion != minimum {
                return Err(Error::Invariant(format!(
                    "criterion says {criterion} but minimality says {minimum} for idempotent {e}"
                )));
            }
            Ok(IdempotentDetail {
                element: e,
                central: s.is_central(e),
                criterion,
                minimum,
                peirce: finite::peirce_sets(&s, e)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteReport {
        schema: SCHEMA.into(),
        mode: Mode::Finite,
        size: s.size(),
        commutative: s.is_commutative(),
        idempotents,
        smallest_idempotent,
        powers,
        greens: finite::greens_classes(&s),
        idempotent_details,
    })
}

impl HasseDiagram for PosetReport {
    fn nodes(&self) -> Vec<(BTreeSet<usize>, usize)> {
        self.elements
            .iter()
            .map(|e| (e.index_set.iter().copied().collect(), e.dim))
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.hasse_edges.clone()
    }
}

impl HasseDiagram for ConeReport {
    fn nodes(&self) -> Vec<(BTreeSet<usize>, usize)> {
        self.faces
            .iter()
            .map(|f| (f.index_set.iter().copied().collect(), f.dim))
            .collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.hasse_edges.clone()
    }
}

impl Report {
    pub fn mode(&self) -> Mode {
        match self {
            Report::Eigen(_) => Mode::Eigen,
            Report::Monoid(_) => Mode::Monoid,
            Report::Cone(_) => Mode::Cone,
            Report::Finite(_) => Mode::Finite,
            Report::Selftest(_) => Mode::Selftest,
        }
    }

    /// Selftests with failures exit as internal errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Report::Selftest(r) if r.total_failed > 0 => 2,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Report::Eigen(r) => pretty(r),
            Report::Monoid(r) => pretty(r),
            Report::Cone(r) => pretty(r),
            Report::Finite(r) => pretty(r),
            Report::Selftest(r) => pretty(r),
        }
    }

    /// Reads back a JSON report of any mode.
    pub fn parse(text: &str) -> Result<Self, JobError> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| JobError::MalformedJson(e.to_string()))?;
        let mode: Mode = serde_json::from_value(v.get("mode").cloned().unwrap_or_default())
            .map_err(|e| JobError::Schema(e.to_string()))?;
        let schema = |e: serde_json::Error| JobError::Schema(e.to_string());
        Ok(match mode {
            Mode::Eigen => Report::Eigen(serde_json::from_value(v).map_err(schema)?),
            Mode::Monoid => Report::Monoid(serde_json::from_value(v).map_err(schema)?),
            Mode::Cone => Report::Cone(serde_json::from_value(v).map_err(schema)?),
            Mode::Finite => Report::Finite(serde_json::from_value(v).map_err(schema)?),
            Mode::Selftest => Report::Selftest(serde_json::from_value(v).map_err(schema)?),
        })
    }

    pub fn render(&self, format: Format) -> Result<String, JobError> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Text => Ok(self.to_text()),
            Format::Dot => match self {
                Report::Eigen(r) => Ok(export_dot(&r.idempotents)),
                Report::Monoid(r) => Ok(export_dot(&r.idempotents)),
                Report::Cone(r) => Ok(export_dot(r)),
                Report::Finite(_) | Report::Selftest(_) => Err(JobError::Schema(format!(
                    "dot output is not available for {} jobs",
                    self.mode()
                ))),
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Eigen(r) => eigen_text(&mut out, r),
            Report::Monoid(r) => monoid_text(&mut out, r),
            Report::Cone(r) => cone_text(&mut out, r),
            Report::Finite(r) => finite_text(&mut out, r),
            Report::Selftest(r) => selftest::write_text(&mut out, r),
        }
        out
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn vector(v: &[ExactInt]) -> String {
    format!("({})", join(v.iter().map(|x| &x.0)))
}

fn set_text(set: &[usize]) -> String {
    index_set_label(&set.iter().copied().collect())
}

fn poset_text(out: &mut String, p: &PosetReport) {
    let _ = writeln!(
        out,
        "idempotents: {} (maximal chain length {})",
        p.elements.len(),
        p.chain_length
    );
    for e in &p.elements {
        let _ = write!(out, "  {:<12} dim {}", set_text(&e.index_set), e.dim);
        if let Some(d) = &e.diagonal {
            let _ = write!(out, "  diag({})", join(d));
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "smallest: {}  largest: {}",
        set_text(&p.elements[p.smallest].index_set),
        set_text(&p.elements[p.largest].index_set)
    );
}

fn envelope_text(out: &mut String, e: &EnvelopeSummary) {
    let _ = writeln!(
        out,
        "toric envelope: dim {}, unit lattice rank {}, {} idempotents, {}",
        e.envelope_dim,
        e.unit_lattice_rank,
        e.idempotent_count,
        if e.order_isomorphic {
            "order-isomorphic"
        } else {
            "NOT order-isomorphic"
        }
    );
}

fn eigen_text(out: &mut String, r: &EigenReport) {
    let _ = writeln!(
        out,
        "eigenvalues: {}",
        join(r.eigenvalues.iter().map(|v| &v.0))
    );
    let _ = writeln!(out, "primes: {}", join(r.primes.iter().map(|p| &p.0)));
    let _ = writeln!(out, "character lattice rank: {}", r.lattice_rank);
    for (label, g) in r.labels.iter().zip(&r.generators) {
        let _ = writeln!(out, "  {label} = {}", vector(g));
    }
    let _ = writeln!(
        out,
        "primitive relations (coefficients up to {}):",
        r.relation_bound
    );
    for rel in &r.relations {
        let _ = writeln!(out, "  {}", rel.text);
    }
    poset_text(out, &r.idempotents);
    envelope_text(out, &r.envelope);
    let _ = writeln!(
        out,
        "power invariance (n = {}): {}",
        r.power_invariance.n,
        if r.power_invariance.holds {
            "holds"
        } else {
            "FAILS"
        }
    );
}

fn monoid_text(out: &mut String, r: &MonoidReport) {
    let _ = writeln!(
        out,
        "ambient dimension {}, lattice rank {}",
        r.ambient_dim, r.lattice_rank
    );
    for (label, g) in r.labels.iter().zip(&r.generators) {
        let _ = writeln!(out, "  {label} = {}", vector(g));
    }
    poset_text(out, &r.idempotents);
    envelope_text(out, &r.envelope);
}

fn cone_text(out: &mut String, r: &ConeReport) {
    let _ = writeln!(
        out,
        "cone in dimension {}: dim {}, lineality {}{}",
        r.ambient_dim,
        r.dim,
        r.lineality_dim,
        if r.pointed { ", pointed" } else { "" }
    );
    let _ = writeln!(
        out,
        "extreme rays: {}",
        join(r.extreme_rays.iter().map(|v| vector(v)))
    );
    let _ = writeln!(out, "facets: {}", join(r.facets.iter().map(|v| vector(v))));
    let _ = writeln!(out, "faces: {}", r.faces.len());
    for f in &r.faces {
        let _ = writeln!(
            out,
            "  {:<12} dim {}  witness {}",
            set_text(&f.index_set),
            f.dim,
            vector(&f.witness)
        );
    }
    if let Some(c) = &r.crosscheck {
        let _ = writeln!(
            out,
            "cross-check: {} subsets, {} witnesses",
            c.subsets_checked, c.witnesses_checked
        );
    }
}

fn finite_text(out: &mut String, r: &FiniteReport) {
    let _ = writeln!(
        out,
        "semigroup of order {}{}",
        r.size,
        if r.commutative { ", commutative" } else { "" }
    );
    let _ = writeln!(out, "idempotents: {}", join(&r.idempotents));
    match r.smallest_idempotent {
        Some(e) => {
            let _ = writeln!(out, "smallest idempotent: {e}");
        }
        None => out.push_str("no smallest idempotent\n"),
    }
    let classes = |c: &[Vec<usize>]| join(c.iter().map(|k| format!("{{{}}}", join(k))));
    let _ = writeln!(out, "L-classes: {}", classes(&r.greens.l));
    let _ = writeln!(out, "R-classes: {}", classes(&r.greens.r));
    let _ = writeln!(out, "J-classes: {}", classes(&r.greens.j));
    let _ = writeln!(out, "H-classes: {}", classes(&r.greens.h));
    for d in &r.idempotent_details {
        let _ = writeln!(
            out,
            "e = {}: central {}, eS a group {}, minimum {}",
            d.element, d.central, d.criterion, d.minimum
        );
    }
}
