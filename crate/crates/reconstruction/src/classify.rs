use std::collections::BTreeSet;

use quiver_core::{canonical_up_to_opposite, io, Quiver};
use rayon::prelude::*;
use shadow_engine::{canonical_shadow, enumerate, is_essential, reference_shadows, Shadow};
use surface_algebra::recognize_gwsa_gabriel;

use crate::candidate::CandidateQuiver;
use crate::dimension::dimension_obstruction;
use crate::error::ReconstructionError;
use crate::filters::{structural_filters, ExclusionReport, Rule, Witness};
use crate::golden::golden_quivers;
use crate::placement::{
    loop_placements, loop_placements_within, two_cycle_placements, zero_shadow_quivers,
};
use crate::table::table_match;
use crate::wild::wild_unfolding_filter;

/// Which algebras the classification is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Algebras of generalized quaternion type.
    Gqt,
    /// Tame symmetric algebras of period 4; admits the extra case table.
    Tsp4,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Gqt => "gqt",
            Mode::Tsp4 => "tsp4",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gqt" => Ok(Mode::Gqt),
            "tsp4" => Ok(Mode::Tsp4),
            other => Err(format!("unknown mode {other:?}; expected gqt or tsp4")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CandidateOutcome {
    pub candidate: CandidateQuiver,
    pub report: ExclusionReport,
}

/// Runs every filter on an assembled candidate, stopping at the first hit.
pub fn evaluate(q: &Quiver, mode: Mode) -> ExclusionReport {
    if !q.is_connected() {
        return ExclusionReport::excluded(Rule::Disconnected, Witness::None);
    }
    let structural = structural_filters(q);
    if structural.is_excluded() {
        return structural;
    }
    if let Some(ob) = dimension_obstruction(q) {
        return ExclusionReport::excluded(Rule::Dimension, Witness::Dimension(ob));
    }
    if let Some(tree) = wild_unfolding_filter(q) {
        return ExclusionReport::excluded(Rule::WildCovering, Witness::Tree(tree));
    }
    if let Some(entry) = table_match(q, mode) {
        return ExclusionReport::excluded(
            Rule::CaseTable,
            Witness::TableEntry {
                id: entry.id.to_string(),
            },
        );
    }
    ExclusionReport::survives()
}

/// Every candidate built on the reduced quiver of `a`.
pub fn candidates(a: &Shadow) -> Result<Vec<CandidateQuiver>, ReconstructionError> {
    let qx = a.to_quiver();
    if a.is_zero() && a.n() == 3 {
        // Zero shadow: the loop-free part is one of two fixed quivers, and
        // loops may sit only at the ends of the chain.
        let [k3, chain]: [Quiver; 2] = zero_shadow_quivers().try_into().expect("two quivers");
        let full = |q: &Quiver| -> Vec<(usize, usize)> {
            (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| q.mult(i, j) > 0)
                .collect()
        };
        let mut out = vec![CandidateQuiver::new(qx.clone(), full(&k3), vec![])];
        for loops in loop_placements_within(&chain, &[0, 2]) {
            out.push(CandidateQuiver::new(qx.clone(), full(&chain), loops));
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for e in two_cycle_placements(&qx)? {
        let qo = CandidateQuiver::new(qx.clone(), e.clone(), vec![]).assembled;
        for loops in loop_placements(&qo) {
            out.push(CandidateQuiver::new(qx.clone(), e.clone(), loops));
        }
    }
    Ok(out)
}

/// Candidates for an essential shadow with their filter outcomes.
pub fn reconstruct(a: &Shadow, mode: Mode) -> Result<Vec<CandidateOutcome>, ReconstructionError> {
    if a.n() > crate::placement::MAX_PLACEMENT_VERTICES {
        return Err(ReconstructionError::UnsupportedSize(a.n()));
    }
    if !is_essential(a).is_essential() {
        return Err(ReconstructionError::NotEssential);
    }
    let mut out: Vec<CandidateOutcome> = candidates(a)?
        .into_par_iter()
        .map(|candidate| {
            let report = evaluate(&candidate.assembled, mode);
            CandidateOutcome { candidate, report }
        })
        .collect();
    out.sort_by(|x, y| x.candidate.assembled.cmp(&y.candidate.assembled));
    Ok(out)
}

/// Survivors of [`reconstruct`].
pub fn survivors(outcomes: &[CandidateOutcome]) -> Vec<Quiver> {
    outcomes
        .iter()
        .filter(|o| !o.report.is_excluded())
        .map(|o| o.candidate.assembled.clone())
        .collect()
}

#[derive(Clone, Debug)]
pub struct ShadowOutcome {
    /// Catalog name, if the shadow is in the bundled reference list.
    pub name: Option<String>,
    pub shadow: Shadow,
    pub outcomes: Vec<CandidateOutcome>,
}

impl ShadowOutcome {
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("{:?}", self.shadow.code()))
    }

    pub fn has_survivor(&self) -> bool {
        self.outcomes.iter().any(|o| !o.report.is_excluded())
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    pub mode: Mode,
    pub shadows: Vec<ShadowOutcome>,
    /// Distinct survivors, each canonical up to opposite, sorted.
    pub survivors: Vec<Quiver>,
}

impl Classification {
    /// Names (or codes) of shadows with at least one survivor.
    pub fn surviving_shadows(&self) -> Vec<String> {
        self.shadows
            .iter()
            .filter(|s| s.has_survivor())
            .map(ShadowOutcome::label)
            .collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let exclusions: Vec<serde_json::Value> = self
            .shadows
            .iter()
            .flat_map(|s| {
                s.outcomes
                    .iter()
                    .filter(|o| o.report.is_excluded())
                    .map(move |o| {
                        let r = o.report.to_json_value();
                        serde_json::json!({
                            "shadow": s.label(),
                            "candidate": io::to_json_value(&o.candidate.assembled),
                            "rule": r["rule"],
                            "citation": r["citation"],
                            "witness": r["witness"],
                        })
                    })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "mode": self.mode.name(),
            "shadow_count": self.shadows.len(),
            "survivor_quivers": self.survivors.iter().map(io::to_json_value).collect::<Vec<_>>(),
            "exclusions": exclusions,
        })
    }
}

fn catalog_name(n: usize, s: &Shadow) -> Option<String> {
    let canon = canonical_shadow(s).ok()?;
    reference_shadows(n)?
        .iter()
        .find(|e| canonical_shadow(&e.shadow).ok().as_ref() == Some(&canon))
        .map(|e| e.name.clone())
}

/// Classification of Gabriel quivers on `n` vertices, up to isomorphism and
/// opposite.
pub fn classify(n: usize, mode: Mode) -> Result<Classification, ReconstructionError> {
    if !(3..=5).contains(&n) {
        return Err(ReconstructionError::UnsupportedSize(n));
    }
    let shadows = enumerate(n, shadow_engine::Mode::Essential)?;
    let per_shadow: Vec<ShadowOutcome> = shadows
        .into_par_iter()
        .map(|shadow| {
            let outcomes = reconstruct(&shadow, mode)?;
            Ok(ShadowOutcome {
                name: catalog_name(n, &shadow),
                shadow,
                outcomes,
            })
        })
        .collect::<Result<_, ReconstructionError>>()?;
    let mut set = BTreeSet::new();
    for s in &per_shadow {
        for o in s.outcomes.iter().filter(|o| !o.report.is_excluded()) {
            set.insert(canonical_up_to_opposite(&o.candidate.assembled)?);
        }
    }
    Ok(Classification {
        n,
        mode,
        shadows: per_shadow,
        survivors: set.into_iter().collect(),
    })
}

/// [`classify`] on a dedicated pool of `threads` workers.
pub fn classify_with_threads(
    n: usize,
    mode: Mode,
    threads: usize,
) -> Result<Classification, ReconstructionError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| ReconstructionError::ThreadPool(e.to_string()))?;
    pool.install(|| classify(n, mode))
}

/// Differences between a classification and the reference lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    /// Reference quivers found among the survivors.
    pub matched: Vec<String>,
    /// Reference quivers that did not survive.
    pub missing: Vec<String>,
    /// Survivors with no reference counterpart.
    pub unexpected: Vec<Quiver>,
    /// Survivors only a periodicity argument removes, by table id.
    pub undecided: Vec<String>,
    /// Loop-free shapes, compared at three vertices only.
    pub missing_families: Vec<String>,
    pub unexpected_families: Vec<Quiver>,
    /// Table entries that removed a candidate.
    pub table_exclusions: Vec<String>,
    /// Number of candidates removed by a generic rule.
    pub generic_exclusions: usize,
}

impl VerificationReport {
    /// At three vertices the comparison is by loop-free family; otherwise
    /// by exact quiver.
    pub fn passed(&self) -> bool {
        if self.n == 3 {
            self.missing_families.is_empty() && self.unexpected_families.is_empty()
        } else {
            self.missing.is_empty() && self.unexpected.is_empty()
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "passed": self.passed(),
            "matched": self.matched,
            "missing": self.missing,
            "unexpected": self.unexpected.iter().map(io::to_json_value).collect::<Vec<_>>(),
            "undecided": self.undecided,
            "missing_families": self.missing_families,
            "unexpected_families": self.unexpected_families.iter().map(io::to_json_value).collect::<Vec<_>>(),
            "table_exclusions": self.table_exclusions,
            "generic_exclusions": self.generic_exclusions,
        })
    }
}

fn canon(q: &Quiver) -> Quiver {
    canonical_up_to_opposite(q).expect("at most eight vertices")
}

/// Compares `c` with the bundled reference list for `c.n` vertices.
pub fn verify_against_reference(c: &Classification) -> VerificationReport {
    let golden = golden_quivers(c.n);
    let found: BTreeSet<Quiver> = c.survivors.iter().cloned().collect();
    let mut report = VerificationReport {
        n: c.n,
        ..Default::default()
    };
    let mut golden_set = BTreeSet::new();
    for g in golden {
        let k = canon(&g.quiver);
        if found.contains(&k) {
            report.matched.push(g.name.clone());
        } else {
            report.missing.push(g.name.clone());
        }
        golden_set.insert(k);
    }
    for q in found.iter().filter(|q| !golden_set.contains(*q)) {
        match table_match(q, Mode::Tsp4).filter(|e| e.tsp4_only) {
            Some(e) => report.undecided.push(e.id.to_string()),
            None => report.unexpected.push(q.clone()),
        }
    }

    if c.n == 3 {
        let fam = |q: &Quiver| canon(&q.loop_free());
        let found_fam: BTreeSet<Quiver> = found.iter().map(fam).collect();
        let mut golden_fam = BTreeSet::new();
        for g in golden {
            let f = fam(&g.quiver);
            let name = g.family.clone().unwrap_or_else(|| g.name.clone());
            if !found_fam.contains(&f) && !report.missing_families.contains(&name) {
                report.missing_families.push(name);
            }
            golden_fam.insert(f);
        }
        report.unexpected_families = found_fam
            .into_iter()
            .filter(|f| !golden_fam.contains(f))
            .collect();
    }

    for s in &c.shadows {
        for o in &s.outcomes {
            match (&o.report.rule, &o.report.witness) {
                (Some(Rule::CaseTable), Witness::TableEntry { id }) => {
                    if !report.table_exclusions.contains(id) {
                        report.table_exclusions.push(id.clone());
                    }
                }
                (Some(_), _) => report.generic_exclusions += 1,
                (None, _) => {}
            }
        }
    }
    report
}

/// Block decompositions of every survivor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub n: usize,
    pub passed: Vec<Quiver>,
    pub failed: Vec<Quiver>,
}

impl MainTheoremReport {
    pub fn all_pass(&self) -> bool {
        self.failed.is_empty() && !self.passed.is_empty()
    }
}

/// Checks that every survivor of `c` is glued from the generalized blocks.
pub fn check_main_theorem(c: &Classification) -> MainTheoremReport {
    let (passed, failed) = c
        .survivors
        .iter()
        .cloned()
        .partition(|q| recognize_gwsa_gabriel(q).is_some());
    MainTheoremReport {
        n: c.n,
        passed,
        failed,
    }
}

pub fn verify_main_theorem(n: usize, mode: Mode) -> Result<MainTheoremReport, ReconstructionError> {
    Ok(check_main_theorem(&classify(n, mode)?))
}
