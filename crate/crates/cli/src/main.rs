use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lpdesign::analysis::{analyze_files, census, AnalysisError, CensusSummary};
use lpdesign::corpus::write_corpus;
use lpdesign::coset::{coset_graph_design, is_trivial_factorization, lemma_2_2_crosscheck, CosetRecord, CrosscheckMode};
use lpdesign::geometry::{build_ag, build_pg, build_symplectic_subdesign, BuiltInstance};
use lpdesign::incidence::{format_design_file, parse_design_file, t_design_strength, verify_design, IncidenceStructure};
use lpdesign::perm::{format_group_file, parse_group_file, GroupWithChain};
use lpdesign::Limits;

/// Block designs from permutation groups: construction and verification.
///
/// Enumeration limits are read from LPDESIGN_ELEMENT_LIMIT and
/// LPDESIGN_INDEX_LIMIT. Exit codes: 0 pass, 1 check failure or theorem
/// violation, 2 input error, 3 undecided within the limits.
#[derive(Parser)]
#[command(name = "lpdesign", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometric design and its group.
    Build {
        #[command(subcommand)]
        family: Family,
        /// Output prefix; writes PREFIX.design and PREFIX.group.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Build Cos(G, L, R) from a group file and generator files for L and R.
    Coset {
        group: PathBuf,
        l_gens: PathBuf,
        r_gens: PathBuf,
        /// Output prefix; writes PREFIX.design and PREFIX.group (G on the points).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that a design file is a 2-design and report its parameters.
    Verify { design: PathBuf },
    /// Run the full analysis of a group acting on a design.
    Analyze {
        group: PathBuf,
        design: PathBuf,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include per-stage timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Compare the double-coset count with the coset-graph count.
    Crosscheck {
        group: PathBuf,
        l_gens: PathBuf,
        r_gens: PathBuf,
        /// One element per coset of L instead of random samples.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Analyze every NAME.design / NAME.group pair in a directory.
    Census {
        dir: PathBuf,
        /// Write the full JSON summary here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write the bundled instance corpus into a directory.
    Corpus { dir: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Points and i-flats of PG(d, q) with PGL(d+1, q).
    Pg { d: usize, q: usize, i: usize },
    /// Points and i-flats of AG(d, q) with AGL(d, q).
    Ag { d: usize, q: usize, i: usize },
    /// Translates of non-degenerate 2-subspaces of GF(q)^2m with ASp(2m, q).
    Symplectic { m: usize, q: usize },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        Failure {
            code: e.exit_code() as u8,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_group(path: &Path) -> Result<GroupWithChain, Failure> {
    parse_group_file(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_design(path: &Path) -> Result<IncidenceStructure, Failure> {
    parse_design_file(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn emit_json(target: &Path, text: &str) -> Result<(), Failure> {
    if target == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        write(target, text)
    }
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Writes the pair next to `prefix`, or prints both files to stdout.
fn emit_instance(design: &IncidenceStructure, group: &GroupWithChain, out: Option<&Path>) -> Result<(), Failure> {
    let (d, g) = (format_design_file(design), format_group_file(group));
    match out {
        Some(prefix) => {
            write(&with_ext(prefix, "design"), &d)?;
            write(&with_ext(prefix, "group"), &g)?;
            eprintln!("wrote {} and {}", with_ext(prefix, "design").display(), with_ext(prefix, "group").display());
        }
        None => print!("{d}{g}"),
    }
    Ok(())
}

fn build(family: Family, out: Option<&Path>) -> Result<u8, Failure> {
    let built: BuiltInstance = match family {
        Family::Pg { d, q, i } => build_pg(d, q, i),
        Family::Ag { d, q, i } => build_ag(d, q, i).map(|a| a.instance),
        Family::Symplectic { m, q } => build_symplectic_subdesign(m, q).map(|a| a.instance),
    }
    .map_err(Failure::input)?;
    eprintln!("{}: |G| = {}", built.name, built.group.order());
    emit_instance(&built.design, &built.group, out)?;
    Ok(0)
}

fn coset(group: &Path, l: &Path, r: &Path, out: Option<&Path>, limits: &Limits) -> Result<u8, Failure> {
    let (g, l, r) = (read_group(group)?, read_group(l)?, read_group(r)?);
    let cd = coset_graph_design(&g, &l, &r, limits).map_err(Failure::input)?;
    let lambda_constant = lemma_2_2_crosscheck(&g, &l, &r, CrosscheckMode::Exhaustive, limits)
        .map_err(Failure::input)?
        .lambda_constant;
    let record = CosetRecord {
        index_l: cd.points.index(),
        index_r: cd.blocks.index(),
        lambda_constant,
        trivial_factorization: is_trivial_factorization(&g, &l, &r, limits.element_limit).map_err(Failure::input)?,
        faithful: cd.faithful,
    };
    match out {
        Some(prefix) => {
            emit_instance(&cd.design, &cd.point_action.image, Some(prefix))?;
            print!("{}", to_json(&record));
        }
        None => {
            print!("{}", format_design_file(&cd.design));
            eprint!("{}", to_json(&record));
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyRecord {
    parameters: lpdesign::incidence::DesignParameters,
    t_design: lpdesign::incidence::TDesignStrength,
}

fn verify(path: &Path) -> Result<u8, Failure> {
    let design = read_design(path)?;
    let parameters = verify_design(&design).map_err(|e| Failure {
        code: 1,
        message: format!("not a 2-design: {e}"),
    })?;
    let t_design = t_design_strength(&design).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    print!("{}", to_json(&VerifyRecord { parameters, t_design }));
    Ok(0)
}

fn analyze(group: &Path, design: &Path, json: Option<&Path>, timings: bool, limits: &Limits) -> Result<u8, Failure> {
    let report = analyze_files(group, design, limits, timings)?;
    let p = &report.parameters;
    println!(
        "{}: 2-({}, {}, {}) b={} r={} |G|={}",
        report.instance_id, p.v, p.k, p.lambda, p.b, p.r, report.group_order
    );
    println!("type {}  locally primitive: {}", report.type_key(), report.locally_primitive());
    for (name, check) in report.lemma_checks.iter().chain(&report.corollary_checks) {
        println!("  {name:<26} {:<15} {}", format!("{:?}", check.status), check.detail);
    }
    println!("  {:<26} {:<15} {}", "theorem", format!("{:?}", report.theorem.status), report.theorem.detail);
    if report.theorem.violation {
        println!("THEOREM VIOLATION");
    }
    if let Some(target) = json {
        emit_json(target, &to_json(&report))?;
    }
    Ok(report.exit_code() as u8)
}

fn crosscheck(group: &Path, l: &Path, r: &Path, mode: CrosscheckMode, limits: &Limits) -> Result<u8, Failure> {
    let (g, l, r) = (read_group(group)?, read_group(l)?, read_group(r)?);
    let report = lemma_2_2_crosscheck(&g, &l, &r, mode, limits).map_err(Failure::input)?;
    print!("{}", to_json(&report));
    Ok(if report.passed { 0 } else { 1 })
}

fn print_census(summary: &CensusSummary) {
    for e in &summary.entries {
        match (&e.report, &e.error) {
            (Some(r), _) => println!("{:<28} exit {}  {}", e.instance_id, e.exit_code, r.type_key()),
            (None, Some(err)) => println!("{:<28} exit {}  error: {err}", e.instance_id, e.exit_code),
            (None, None) => println!("{:<28} exit {}", e.instance_id, e.exit_code),
        }
    }
    println!("type table:");
    for (key, n) in &summary.table {
        println!("  {key:<28} {n}");
    }
    let rows: Vec<&str> = summary.rows_realized.iter().map(String::as_str).collect();
    println!("rows realized: {}", if rows.is_empty() { "none".into() } else { rows.join(", ") });
    println!(
        "violations {}  failures {}  errors {}  unknown {}",
        summary.violations, summary.failures, summary.errors, summary.unknown
    );
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Build { family, out } => build(family, out.as_deref()),
        Command::Coset { group, l_gens, r_gens, out } => coset(&group, &l_gens, &r_gens, out.as_deref(), &limits),
        Command::Verify { design } => verify(&design),
        Command::Analyze { group, design, json, timings } => analyze(&group, &design, json.as_deref(), timings, &limits),
        Command::Crosscheck { group, l_gens, r_gens, exhaustive, samples, seed } => {
            let mode = if exhaustive {
                CrosscheckMode::Exhaustive
            } else {
                CrosscheckMode::Sampled { samples, seed }
            };
            crosscheck(&group, &l_gens, &r_gens, mode, &limits)
        }
        Command::Census { dir, json } => {
            let summary = census(&dir, &limits)?;
            print_census(&summary);
            if let Some(target) = json {
                emit_json(&target, &to_json(&summary))?;
            }
            Ok(summary.exit_code as u8)
        }
        Command::Corpus { dir } => {
            let names = write_corpus(&dir, &limits).map_err(Failure::input)?;
            println!("wrote {} instances to {}", names.len(), dir.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
