//! End-to-end analysis of a group acting on a design, and the corpus census.
//!
//! The type classification and the lemma checks are computed independently;
//! the allowed `(point type, block type)` pairs are only consulted at the end.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coset::{lemma_2_2_crosscheck, CosetError, CrosscheckMode};
use crate::incidence::{
    parse_design_file, t_design_strength, verify_design, DesignAction, DesignError, DesignParameters,
    IncidenceStructure, LocalPrimitivityReport, TDesignStrength,
};
use crate::limits::Limits;
use crate::perm::{parse_group_file, GroupFileError, GroupWithChain, PermError};
use crate::structure::{
    classify_point_action, elementary_abelian_prime, intransitive_normal_subgroup, is_quasiprimitive,
    minimal_block_system, primitivity, Primitivity, StructureError, TypeReport, TypeSummary, TypeTag,
};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("group file: {0}")]
    GroupFile(#[from] GroupFileError),
    #[error("design file: {0}")]
    DesignFile(DesignError),
    #[error("group does not act on the design: {0}")]
    Action(DesignError),
    #[error("trivial design (every block is the whole point set); excluded from verification")]
    TrivialDesign,
    #[error("not a 2-design: {0}")]
    NotADesign(DesignError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl AnalysisError {
    /// 1 for a structure that fails to be a design, 2 for unusable input.
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalysisError::NotADesign(_) | AnalysisError::Internal(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn new(status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckResult {
            status,
            detail: detail.into(),
        }
    }

    fn verdict(ok: bool, detail: impl Into<String>) -> Self {
        Self::new(if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
    }

    fn not_applicable(detail: impl Into<String>) -> Self {
        Self::new(CheckStatus::NotApplicable, detail)
    }

    fn unknown(detail: impl Into<String>) -> Self {
        Self::new(CheckStatus::Unknown, detail)
    }
}

/// Comparison of the computed type pair with the pairs allowed for locally
/// primitive 2-designs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub status: CheckStatus,
    /// `AS/quasiprimitive`, `HA/HA` or `HA/non-quasiprimitive` when allowed.
    pub row: Option<String>,
    pub violation: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub instance_id: String,
    pub group_order: String,
    pub parameters: DesignParameters,
    pub t_design: TDesignStrength,
    pub local_primitivity: LocalPrimitivityReport,
    /// `None` when the point action is intransitive or beyond the limits.
    pub point_type: Option<TypeSummary>,
    /// A type tag, `non-quasiprimitive`, `intransitive` or `unknown`.
    pub block_type: String,
    pub lemma_checks: BTreeMap<String, CheckResult>,
    pub corollary_checks: BTreeMap<String, CheckResult>,
    pub theorem: TheoremVerdict,
    /// Milliseconds per stage; only filled on request since it breaks byte-stability.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl AnalysisReport {
    /// 0 all pass, 1 a failed check or theorem violation, 3 something unknown.
    pub fn exit_code(&self) -> i32 {
        let statuses = self
            .lemma_checks
            .values()
            .chain(self.corollary_checks.values())
            .map(|c| c.status)
            .chain([self.theorem.status]);
        let mut unknown = false;
        for s in statuses {
            match s {
                CheckStatus::Fail => return 1,
                CheckStatus::Unknown => unknown = true,
                _ => {}
            }
        }
        if self.theorem.violation {
            1
        } else if unknown {
            3
        } else {
            0
        }
    }

    pub fn locally_primitive(&self) -> bool {
        self.local_primitivity.locally_primitive()
    }

    /// `point/block` type key for the census table.
    pub fn type_key(&self) -> String {
        let point = self.point_type.as_ref().map_or("unknown".to_string(), |t| t.tag.to_string());
        format!("{point}/{}", self.block_type)
    }
}

fn is_limit(e: &StructureError) -> bool {
    matches!(e, StructureError::Perm(PermError::EnumerationLimit { .. }))
}

struct Timer {
    start: Instant,
    laps: BTreeMap<String, f64>,
}

impl Timer {
    fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.laps
            .insert(name.to_string(), (now - self.start).as_secs_f64() * 1000.0);
        self.start = now;
    }
}

/// The affine structure read off a regular elementary abelian normal
/// subgroup `N`: points are identified with `N` via point 0.
struct AffineStructure {
    p: usize,
    d: u32,
    /// `log_p k` when `k` is a power of `p`.
    i: Option<u32>,
    blocks_through_zero_are_subspaces: bool,
    blocks_are_translates: bool,
}

impl AffineStructure {
    fn holds(&self) -> bool {
        self.i.is_some_and(|i| 0 < i && i < self.d)
            && self.blocks_through_zero_are_subspaces
            && self.blocks_are_translates
    }

    fn describe(&self) -> String {
        format!(
            "N = Z_{}^{}, block dimension {}, blocks through 0 are subspaces: {}, blocks are their translates: {}",
            self.p,
            self.d,
            self.i.map_or("not a power of p".to_string(), |i| i.to_string()),
            self.blocks_through_zero_are_subspaces,
            self.blocks_are_translates
        )
    }
}

fn affine_structure(
    design: &IncidenceStructure,
    witness: &GroupWithChain,
    limit: u64,
) -> Result<AffineStructure, PermError> {
    let p = elementary_abelian_prime(witness).unwrap_or(0);
    let v = design.v();
    let elements = witness.elements(limit)?;
    let mut translation = vec![None; v];
    for n in elements {
        let x = n.apply(0);
        translation[x] = Some(n);
    }
    let translation: Vec<_> = translation.into_iter().map(|t| t.expect("regular witness")).collect();
    let d = (1..).take_while(|&e| p > 1 && p.pow(e) <= v).last().unwrap_or(0);
    let k = design.block(0).len();
    let i = (0..=d).find(|&e| p.pow(e) == k);

    let mut closed = true;
    let mut translates = BTreeSet::new();
    for b in design.blocks_through(0) {
        let block = design.block(b);
        let members: HashSet<usize> = block.iter().copied().collect();
        // N_β is a subgroup iff 0^(n_x n_y) = x^(n_y) stays in the block.
        closed &= block
            .iter()
            .all(|&x| block.iter().all(|&y| members.contains(&translation[y].apply(x))));
        for n in &translation {
            let mut image: Vec<usize> = block.iter().map(|&x| n.apply(x)).collect();
            image.sort_unstable();
            translates.insert(image);
        }
    }
    let all: BTreeSet<Vec<usize>> = design.blocks().iter().cloned().collect();
    Ok(AffineStructure {
        p,
        d,
        i,
        blocks_through_zero_are_subspaces: closed,
        blocks_are_translates: translates == all,
    })
}

fn design_error(e: DesignError) -> AnalysisError {
    match e {
        DesignError::NotPreserved | DesignError::DegreeMismatch { .. } => AnalysisError::Action(e),
        DesignError::TrivialDesign => AnalysisError::TrivialDesign,
        other => AnalysisError::Internal(other.to_string()),
    }
}

/// Runs the full pipeline on `group` acting on `design`.
pub fn analyze(
    instance_id: &str,
    group: &GroupWithChain,
    design: &IncidenceStructure,
    limits: &Limits,
    with_timings: bool,
) -> Result<AnalysisReport, AnalysisError> {
    let mut timer = Timer {
        start: Instant::now(),
        laps: BTreeMap::new(),
    };
    let act = DesignAction::new(group, design).map_err(design_error)?;
    let parameters = verify_design(design).map_err(|e| match e {
        DesignError::TrivialDesign => AnalysisError::TrivialDesign,
        other => AnalysisError::NotADesign(other),
    })?;
    let t_design = t_design_strength(design).map_err(AnalysisError::NotADesign)?;
    timer.lap("verify");

    let lp = act.local_primitivity(limits).map_err(design_error)?;
    let locally_primitive = lp.locally_primitive();
    timer.lap("local_primitivity");

    let point_report: Result<Option<TypeReport>, String> = if group.is_transitive() {
        match classify_point_action(group, limits.element_limit) {
            Ok(r) => Ok(Some(r)),
            Err(e) if is_limit(&e) => Err(e.to_string()),
            Err(e) => return Err(AnalysisError::Internal(e.to_string())),
        }
    } else {
        Ok(None)
    };
    let point_tag = point_report.as_ref().ok().and_then(|r| r.as_ref().map(|r| r.tag));
    let ha_witness = point_report
        .as_ref()
        .ok()
        .and_then(|r| r.as_ref())
        .filter(|r| r.tag == TypeTag::HA)
        .and_then(|r| r.witness.clone());
    timer.lap("point_type");

    let block_group = act.block_group();
    let block_primitivity = primitivity(block_group);
    let block_quasiprimitive: Option<bool> = match lp.block_quasiprimitive {
        Some(q) => Some(q),
        None if !block_group.is_transitive() => Some(false),
        None => match is_quasiprimitive(block_group, limits.element_limit) {
            Ok(q) => Some(q),
            Err(e) if is_limit(&e) => None,
            Err(e) => return Err(AnalysisError::Internal(e.to_string())),
        },
    };
    let block_type = if !block_group.is_transitive() {
        "intransitive".to_string()
    } else {
        match block_quasiprimitive {
            Some(false) => "non-quasiprimitive".to_string(),
            Some(true) => match classify_point_action(block_group, limits.element_limit) {
                Ok(r) => r.tag.to_string(),
                Err(e) if is_limit(&e) => "unknown".to_string(),
                Err(e) => return Err(AnalysisError::Internal(e.to_string())),
            },
            None => "unknown".to_string(),
        }
    };
    timer.lap("block_type");

    let mut lemmas = BTreeMap::new();
    let v = parameters.v;
    let k = parameters.k;

    // Double-coset count against the coset-graph count, with L = G_0 and R = G_β.
    lemmas.insert(
        "lemma_2_2".to_string(),
        if !lp.flag_transitive {
            CheckResult::not_applicable("requires flag-transitivity")
        } else {
            let beta = design.blocks_through(0)[0];
            let l = group.point_stabilizer(0).map_err(|e| AnalysisError::Internal(e.to_string()))?;
            let r = act.block_stabilizer(beta).map_err(design_error)?;
            match lemma_2_2_crosscheck(group, &l, &r, CrosscheckMode::Exhaustive, limits) {
                Ok(rep) => CheckResult::verdict(
                    rep.passed && rep.lambda_constant == Some(parameters.lambda),
                    format!(
                        "exhaustive over {} cosets; ratios {:?}; design lambda {}",
                        rep.checked,
                        rep.ratios.keys().collect::<Vec<_>>(),
                        parameters.lambda
                    ),
                ),
                Err(CosetError::Perm(PermError::EnumerationLimit { order, limit })) => {
                    CheckResult::unknown(format!("|G| = {order} exceeds the element limit {limit}"))
                }
                Err(CosetError::IndexLimit { index, limit }) => {
                    CheckResult::unknown(format!("index {index} exceeds the index limit {limit}"))
                }
                Err(e) => return Err(AnalysisError::Internal(e.to_string())),
            }
        },
    );

    let diameter = design.incidence_graph_diameter().map_err(design_error)?;
    lemmas.insert(
        "prop_2_3".to_string(),
        if parameters.symmetric {
            CheckResult::verdict(diameter == 3, format!("symmetric, diameter {diameter}"))
        } else {
            CheckResult::verdict(diameter <= 4, format!("diameter {diameter}"))
        },
    );

    lemmas.insert(
        "lemma_3_3".to_string(),
        match lp.stabilizer_bound_ok {
            Some(ok) => {
                let beta = design.blocks_through(0)[0];
                let g = group.order();
                let ga = group.point_stabilizer(0).map_err(|e| AnalysisError::Internal(e.to_string()))?.order();
                let gab = act.flag_stabilizer(0, beta).map_err(design_error)?.order();
                CheckResult::verdict(ok, format!("|G| = {g}, |G_a| = {ga}, |G_ab| = {gab}"))
            }
            None => CheckResult::not_applicable("requires flag-transitivity"),
        },
    );

    lemmas.insert(
        "lemma_3_4".to_string(),
        CheckResult::verdict(
            act.faithful_on_blocks(),
            format!("|G| = {}, |G^B| = {}", group.order(), block_group.order()),
        ),
    );

    lemmas.insert(
        "lemma_5_1".to_string(),
        if locally_primitive {
            CheckResult::verdict(
                lp.flag_transitive && lp.point_primitive,
                format!(
                    "flag-transitive {}, point-primitive {}",
                    lp.flag_transitive, lp.point_primitive
                ),
            )
        } else {
            CheckResult::not_applicable("requires local primitivity")
        },
    );

    lemmas.insert(
        "lemma_5_2".to_string(),
        match (&block_primitivity, locally_primitive) {
            (_, false) => CheckResult::not_applicable("requires local primitivity"),
            (Primitivity::Imprimitive(_), true) => {
                let mut systems = BTreeSet::new();
                for x in 1..design.b() {
                    let sys = minimal_block_system(block_group, 0, x)
                        .map_err(|e| AnalysisError::Internal(e.to_string()))?;
                    if !sys.is_trivial() {
                        systems.insert(sys.cells);
                    }
                }
                let mut disjoint = true;
                for cells in &systems {
                    for cell in cells {
                        for (a, &b1) in cell.iter().enumerate() {
                            for &b2 in &cell[a + 1..] {
                                disjoint &= design.block(b1).iter().all(|x| design.block(b2).binary_search(x).is_err());
                            }
                        }
                    }
                }
                let sizes: BTreeSet<usize> = systems.iter().map(|c| c[0].len()).collect();
                CheckResult::verdict(
                    disjoint,
                    format!(
                        "{} minimal block systems on blocks, cell sizes {:?}; blocks within a cell disjoint: {disjoint}",
                        systems.len(),
                        sizes
                    ),
                )
            }
            _ => CheckResult::not_applicable("block action is primitive"),
        },
    );

    let affine = match &ha_witness {
        Some(n) => Some(
            affine_structure(design, n, limits.element_limit).map_err(|e| AnalysisError::Internal(e.to_string()))?,
        ),
        None => None,
    };

    let non_quasi = block_quasiprimitive == Some(false);
    lemmas.insert(
        "lemma_6_1".to_string(),
        if !locally_primitive {
            CheckResult::not_applicable("requires local primitivity")
        } else if block_quasiprimitive.is_none() {
            CheckResult::unknown("block quasiprimitivity unknown")
        } else if !non_quasi {
            CheckResult::not_applicable("block action is quasiprimitive")
        } else {
            let orbits = match (&ha_witness, point_report.is_err()) {
                (Some(n), _) => {
                    let gens = n
                        .generators()
                        .iter()
                        .map(|g| act.block_permutation(g))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(design_error)?;
                    let on_blocks = GroupWithChain::from_generators(gens)
                        .map_err(|e| AnalysisError::Internal(e.to_string()))?;
                    Some(("HA witness", on_blocks.orbits()))
                }
                (None, true) => None,
                (None, false) => match intransitive_normal_subgroup(block_group, limits.element_limit) {
                    Ok(Some(m)) => Some(("intransitive normal closure", m.orbits())),
                    Ok(None) => Some(("none found", Vec::new())),
                    Err(e) if is_limit(&e) => None,
                    Err(e) => return Err(AnalysisError::Internal(e.to_string())),
                },
            };
            match orbits {
                None => CheckResult::unknown("no normal subgroup available within the limits"),
                Some((source, orbits)) => {
                    let sizes: BTreeSet<usize> = orbits.iter().map(Vec::len).collect();
                    let expected = (v / k) as usize;
                    let ok = !orbits.is_empty()
                        && v % k == 0
                        && parameters.b * k == parameters.r * v
                        && sizes.iter().all(|&s| s == expected);
                    CheckResult::verdict(
                        ok,
                        format!("N = {source}; orbit sizes on blocks {sizes:?}; v/k = {expected}"),
                    )
                }
            }
        },
    );

    lemmas.insert(
        "lemma_7_1".to_string(),
        if !locally_primitive {
            CheckResult::not_applicable("requires local primitivity")
        } else if point_report.is_err() || block_quasiprimitive.is_none() {
            CheckResult::unknown("point type or block quasiprimitivity unknown")
        } else if point_tag != Some(TypeTag::HA) || !non_quasi {
            CheckResult::not_applicable("requires HA on points and a non-quasiprimitive block action")
        } else {
            let a = affine.as_ref().expect("HA witness");
            CheckResult::verdict(
                a.holds() && !parameters.symmetric,
                format!("{}; symmetric: {}", a.describe(), parameters.symmetric),
            )
        },
    );
    timer.lap("lemmas");

    let mut corollaries = BTreeMap::new();
    let block_primitive = block_primitivity.is_primitive();
    corollaries.insert(
        "symmetric_both_primitive".to_string(),
        if !(locally_primitive && parameters.symmetric) {
            CheckResult::not_applicable("requires a locally primitive symmetric design")
        } else if point_report.is_err() {
            CheckResult::unknown("point type unknown")
        } else {
            CheckResult::verdict(
                lp.point_primitive && block_primitive && matches!(point_tag, Some(TypeTag::AS | TypeTag::HA)),
                format!(
                    "point type {}, point-primitive {}, block-primitive {block_primitive}",
                    point_tag.map_or("none".into(), |t| t.to_string()),
                    lp.point_primitive
                ),
            )
        },
    );
    corollaries.insert(
        "higher_t_reduction".to_string(),
        if !(locally_primitive && t_design.t_max >= 3) {
            CheckResult::not_applicable("requires a locally primitive t-design with t >= 3")
        } else if point_report.is_err() {
            CheckResult::unknown("point type unknown")
        } else {
            let ok = match point_tag {
                Some(TypeTag::AS) => true,
                Some(TypeTag::HA) => {
                    t_design.t_max == 3 && affine.as_ref().is_some_and(|a| a.p == 2 && a.holds())
                }
                _ => false,
            };
            CheckResult::verdict(
                ok,
                format!(
                    "t = {}, point type {}",
                    t_design.t_max,
                    point_tag.map_or("none".into(), |t| t.to_string())
                ),
            )
        },
    );

    let theorem = if !locally_primitive {
        TheoremVerdict {
            status: CheckStatus::NotApplicable,
            row: None,
            violation: false,
            detail: "not locally primitive".into(),
        }
    } else {
        let row = match (point_tag, block_quasiprimitive, block_type.as_str()) {
            (Some(TypeTag::AS), Some(true), _) => Some("AS/quasiprimitive"),
            (Some(TypeTag::HA), Some(true), "HA") if block_primitive => Some("HA/HA"),
            (Some(TypeTag::HA), Some(false), _) => Some("HA/non-quasiprimitive"),
            _ => None,
        };
        let unknown = point_report.is_err() || block_quasiprimitive.is_none() || block_type == "unknown";
        let pair = format!(
            "({}, {})",
            point_tag.map_or("unknown".into(), |t| t.to_string()),
            block_type
        );
        match (row, unknown) {
            (Some(row), _) => TheoremVerdict {
                status: CheckStatus::Pass,
                row: Some(row.to_string()),
                violation: false,
                detail: format!("type pair {pair} is allowed"),
            },
            (None, true) => TheoremVerdict {
                status: CheckStatus::Unknown,
                row: None,
                violation: false,
                detail: format!("type pair {pair} not fully determined"),
            },
            (None, false) => TheoremVerdict {
                status: CheckStatus::Fail,
                row: None,
                violation: true,
                detail: format!("THEOREM VIOLATION: type pair {pair} is not allowed"),
            },
        }
    };
    timer.lap("verdict");

    Ok(AnalysisReport {
        instance_id: instance_id.to_string(),
        group_order: group.order().to_string(),
        parameters,
        t_design,
        local_primitivity: lp,
        point_type: point_report.ok().flatten().map(|r| r.summary()),
        block_type,
        lemma_checks: lemmas,
        corollary_checks: corollaries,
        theorem,
        timings: with_timings.then_some(timer.laps),
    })
}

fn read(path: &Path) -> Result<String, AnalysisError> {
    fs::read_to_string(path).map_err(|e| AnalysisError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Reads a group file and a design file.
pub fn load_instance(group_path: &Path, design_path: &Path) -> Result<(GroupWithChain, IncidenceStructure), AnalysisError> {
    let group = parse_group_file(&read(group_path)?)?;
    let design = parse_design_file(&read(design_path)?).map_err(AnalysisError::DesignFile)?;
    Ok((group, design))
}

pub fn analyze_files(
    group_path: &Path,
    design_path: &Path,
    limits: &Limits,
    with_timings: bool,
) -> Result<AnalysisReport, AnalysisError> {
    let (group, design) = load_instance(group_path, design_path)?;
    let id = design_path
        .file_stem()
        .map_or_else(|| design_path.display().to_string(), |s| s.to_string_lossy().into_owned());
    analyze(&id, &group, &design, limits, with_timings)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub instance_id: String,
    pub exit_code: i32,
    pub report: Option<AnalysisReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub entries: Vec<CensusEntry>,
    /// Instance count per `point/block` type pair.
    pub table: BTreeMap<String, usize>,
    /// Allowed rows realized by locally primitive instances.
    pub rows_realized: BTreeSet<String>,
    pub violations: usize,
    pub failures: usize,
    pub errors: usize,
    pub unknown: usize,
    pub exit_code: i32,
}

/// Analyzes every `<name>.design` in `dir` with its `<name>.group`.
/// A `.group` file without a design is reported as an error.
pub fn census(dir: &Path, limits: &Limits) -> Result<CensusSummary, AnalysisError> {
    let listing = fs::read_dir(dir).map_err(|e| AnalysisError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut stems = BTreeSet::new();
    for entry in listing.flatten() {
        let path = entry.path();
        if matches!(path.extension().and_then(|e| e.to_str()), Some("design" | "group")) {
            if let Some(stem) = path.file_stem() {
                stems.insert(stem.to_string_lossy().into_owned());
            }
        }
    }
    let stems: Vec<String> = stems.into_iter().collect();
    let entries: Vec<CensusEntry> = stems
        .par_iter()
        .map(|stem| {
            let group: PathBuf = dir.join(format!("{stem}.group"));
            let design: PathBuf = dir.join(format!("{stem}.design"));
            match analyze_files(&group, &design, limits, false) {
                Ok(report) => CensusEntry {
                    instance_id: stem.clone(),
                    exit_code: report.exit_code(),
                    report: Some(report),
                    error: None,
                },
                Err(e) => CensusEntry {
                    instance_id: stem.clone(),
                    exit_code: e.exit_code(),
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();

    let mut table = BTreeMap::new();
    let mut rows_realized = BTreeSet::new();
    let (mut violations, mut failures, mut errors, mut unknown) = (0, 0, 0, 0);
    for e in &entries {
        match &e.report {
            Some(r) => {
                *table.entry(r.type_key()).or_insert(0) += 1;
                if let Some(row) = &r.theorem.row {
                    rows_realized.insert(row.clone());
                }
                violations += usize::from(r.theorem.violation);
                match r.exit_code() {
                    1 => failures += 1,
                    3 => unknown += 1,
                    _ => {}
                }
            }
            None if e.exit_code == 1 => failures += 1,
            None => errors += 1,
        }
    }
    let exit_code = if violations + failures > 0 {
        1
    } else if errors > 0 {
        2
    } else if unknown > 0 {
        3
    } else {
        0
    };
    Ok(CensusSummary {
        entries,
        table,
        rows_realized,
        violations,
        failures,
        errors,
        unknown,
        exit_code,
    })
}
