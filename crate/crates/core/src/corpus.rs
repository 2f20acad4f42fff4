//! The bundled instance corpus: deterministic constructions written as
//! `<name>.design` / `<name>.group` pairs.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::coset::{a7_subgroups, coset_graph_design, CosetError};
use crate::geometry::{build_ag, build_pg, build_symplectic_subdesign, GeometryError};
use crate::incidence::{format_design_file, DesignError, IncidenceStructure};
use crate::perm::{format_group_file, GroupWithChain, PermError, Permutation};
use crate::Limits;

/// Seed for the randomized subgroup search behind the `A7` instances.
pub const A7_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub name: String,
    pub note: String,
    pub group: GroupWithChain,
    pub design: IncidenceStructure,
}

impl CorpusInstance {
    fn new(name: &str, note: &str, group: GroupWithChain, design: IncidenceStructure) -> Self {
        CorpusInstance {
            name: name.to_string(),
            note: note.to_string(),
            group,
            design,
        }
    }

    pub fn design_file(&self) -> String {
        format!("# {}\n{}", self.note, format_design_file(&self.design))
    }

    pub fn group_file(&self) -> String {
        format!("# {}\n{}", self.note, format_group_file(&self.group))
    }
}

/// Lines `{1, 2, 4} + i (mod 7)` on `1..=7`, with `7` standing for `0`.
pub fn cyclic_fano() -> IncidenceStructure {
    let lines = (0..7)
        .map(|i| [1usize, 2, 4].iter().map(|x| (x + i + 6) % 7).collect())
        .collect();
    IncidenceStructure::new(7, lines).expect("valid lines")
}

/// `x ↦ x + 1` and `x ↦ 2x` on the same labelling as [`cyclic_fano`].
pub fn frobenius21() -> GroupWithChain {
    GroupWithChain::from_generators(vec![
        Permutation::parse("(1 2 3 4 5 6 7)", 7).expect("valid"),
        Permutation::parse("(1 2 4)(3 6 5)", 7).expect("valid"),
    ])
    .expect("valid")
}

pub fn bundled_corpus(limits: &Limits) -> Result<Vec<CorpusInstance>, CorpusError> {
    let mut out = Vec::new();

    let fano = build_pg(2, 2, 1)?;
    out.push(CorpusInstance::new(
        "fano_pgl32",
        "points and lines of PG(2,2) with PGL(3,2)",
        fano.group.clone(),
        fano.design.clone(),
    ));
    out.push(CorpusInstance::new(
        "fano_complement_pgl32",
        "complements of the lines of PG(2,2) with PGL(3,2)",
        fano.group,
        fano.design.complement()?,
    ));
    out.push(CorpusInstance::new(
        "fano_frob21",
        "cyclic Fano plane with the Frobenius group of order 21",
        frobenius21(),
        cyclic_fano(),
    ));
    out.push(CorpusInstance::new(
        "fano_complement_frob21",
        "complement of the cyclic Fano plane with the Frobenius group of order 21",
        frobenius21(),
        cyclic_fano().complement()?,
    ));

    let pg = build_pg(2, 3, 1)?;
    out.push(CorpusInstance::new("pg1_2_3", "points and lines of PG(2,3) with PGL(3,3)", pg.group, pg.design));
    for i in [1, 2] {
        let pg = build_pg(3, 2, i)?;
        let what = if i == 1 { "lines" } else { "planes" };
        out.push(CorpusInstance::new(
            &format!("pg{i}_3_2"),
            &format!("points and {what} of PG(3,2) with PGL(4,2)"),
            pg.group,
            pg.design,
        ));
    }

    for (d, q, i, what) in [(3, 2, 2, "planes of AG(3,2) with AGL(3,2)"), (2, 3, 1, "lines of AG(2,3) with AGL(2,3)")] {
        let ag = build_ag(d, q, i)?.instance;
        out.push(CorpusInstance::new(&format!("ag{i}_{d}_{q}"), what, ag.group, ag.design));
    }

    let sp = build_symplectic_subdesign(2, 2)?.instance;
    out.push(CorpusInstance::new(
        "symplectic_2_2",
        "translates of non-degenerate 2-subspaces of GF(2)^4 with ASp(4,2)",
        sp.group,
        sp.design,
    ));

    let a7 = a7_subgroups(A7_SEED, limits)?;
    for (name, r, note) in [
        ("a7_lines", &a7.r, "Cos(A7, L, R) with |L| = 168, |R| = 72"),
        ("a7_symmetric", &a7.l_prime, "Cos(A7, L, L') with L, L' non-conjugate of order 168"),
    ] {
        let cos = coset_graph_design(&a7.group, &a7.l, r, limits)?;
        out.push(CorpusInstance::new(name, note, cos.point_action.image.clone(), cos.design));
    }
    Ok(out)
}

/// Group files for `A7` and the subgroups behind the coset instances, as
/// `(file name, group)`.
pub fn a7_generator_files(limits: &Limits) -> Result<Vec<(&'static str, GroupWithChain)>, CorpusError> {
    let a7 = a7_subgroups(A7_SEED, limits)?;
    Ok(vec![("a7.group", a7.group), ("a7_L.group", a7.l), ("a7_R.group", a7.r), ("a7_Lprime.group", a7.l_prime)])
}

/// Writes every bundled instance into `dir`, and the `A7` generator files
/// into `dir/cosets`. Returns the instance names.
pub fn write_corpus(dir: &Path, limits: &Limits) -> Result<Vec<String>, CorpusError> {
    let io = |path: &Path, e: std::io::Error| CorpusError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut names = Vec::new();
    for inst in bundled_corpus(limits)? {
        let design = dir.join(format!("{}.design", inst.name));
        fs::write(&design, inst.design_file()).map_err(|e| io(&design, e))?;
        let group = dir.join(format!("{}.group", inst.name));
        fs::write(&group, inst.group_file()).map_err(|e| io(&group, e))?;
        names.push(inst.name);
    }
    let cosets = dir.join("cosets");
    fs::create_dir_all(&cosets).map_err(|e| io(&cosets, e))?;
    for (file, group) in a7_generator_files(limits)? {
        let path = cosets.join(file);
        fs::write(&path, format_group_file(&group)).map_err(|e| io(&path, e))?;
    }
    Ok(names)
}
