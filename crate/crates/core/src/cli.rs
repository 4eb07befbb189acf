//! Command-line frontend. [`run`] returns the exit code and output instead of printing, so the
//! commands can be tested in-process.
//!
//! Exit codes: 0 pass, 1 mathematical failure, 2 input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine::{aff, standard_j, standard_k, toeplitz_algebra, AssociativeAlgebra, ComplexAlgebraStructure, KConvention};
use crate::catalog::{by_id, catalog_ids};
use crate::complex::{is_abelian, is_abelian_hypercomplex, is_complex_bilinear, is_hypercomplex, is_integrable, AbelianCharacterizations, ComplexStructure};
use crate::decomposition::flag_decomposition;
use crate::error::{Error, Result};
use crate::io::{
    flag_json, obstruction_json, read_json, to_json, write_json, AlgebraFile, AssociativeFile, StructureFile,
};
use crate::lie::{LieAlgebra, SeriesKind};
use crate::obstructions::{free_two_step_obstruction, obstruct, search_abelian_j};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "abelcx", version, about = "Exact checks for abelian complex structures on real Lie algebras")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for emitted files.
    #[arg(long, global = true, value_name = "DIR", default_value = ".")]
    pub out: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum KSign {
    /// K(a, b) = (−ia, ib)
    #[default]
    Sec2,
    /// K(a, b) = (ia, −ib)
    Sec3,
}

impl From<KSign> for KConvention {
    fn from(k: KSign) -> Self {
        match k {
            KSign::Sec2 => KConvention::NegateFirst,
            KSign::Sec3 => KConvention::NegateSecond,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and, optionally, one or two complex structures on it.
    Check { algebra: PathBuf, structure: Option<PathBuf>, second: Option<PathBuf> },
    /// Build aff(A) with its standard structure(s) from an associative algebra file or builtin name.
    Aff {
        algebra: String,
        #[arg(long, value_enum, default_value_t = KSign::Sec2)]
        k_sign: KSign,
    },
    /// List or emit catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Flag of J-stable ideals with affine certificates.
    Decompose { algebra: PathBuf, structure: PathBuf },
    /// Run the non-existence tests, then the search.
    Obstruct {
        algebra: Option<PathBuf>,
        /// Analyze the free two-step nilpotent algebra of this rank instead of a file.
        #[arg(long, value_name = "N", conflicts_with = "algebra")]
        free_two_step: Option<usize>,
        /// Inner product as a structure-format matrix file.
        #[arg(long, value_name = "FILE")]
        gram: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        search_budget: usize,
    },
    /// Bounded search for an abelian complex structure.
    Search {
        algebra: PathBuf,
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        search_budget: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Emit { id: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check { algebra, structure, second } => cmd_check(algebra, structure.as_deref(), second.as_deref()),
        Command::Aff { algebra, k_sign } => cmd_aff(algebra, *k_sign, &cli.out),
        Command::Catalog { action: CatalogAction::List } => cmd_catalog_list(),
        Command::Catalog { action: CatalogAction::Emit { id } } => cmd_catalog_emit(id, &cli.out),
        Command::Decompose { algebra, structure } => cmd_decompose(algebra, structure),
        Command::Obstruct { algebra, free_two_step, gram, search_budget } => {
            cmd_obstruct(algebra.as_deref(), *free_two_step, gram.as_deref(), *search_budget)
        }
        Command::Search { algebra, search_budget } => cmd_search(algebra, *search_budget, &cli.out),
    };
    match result {
        Ok(report) => {
            let stdout = if cli.json {
                to_json(&report.json).unwrap_or_default()
            } else {
                report.text
            };
            Outcome { code: if report.pass { EXIT_PASS } else { EXIT_MATH }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_input_error() { EXIT_INPUT } else { EXIT_MATH };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

/// Output of one command: a JSON report, its text rendering, and whether it passed.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

fn load_algebra(path: &Path) -> Result<(LieAlgebra, AlgebraFile)> {
    let file: AlgebraFile = read_json(path)?;
    Ok((file.to_algebra()?, file))
}

fn load_structure(path: &Path, dim: usize) -> Result<ComplexStructure> {
    read_json::<StructureFile>(path)?.to_structure(dim)
}

fn lie_summary(g: &LieAlgebra) -> Value {
    let report = g.validate();
    json!({
        "dim": g.dim(),
        "valid": report.is_valid(),
        "solvable": g.is_solvable(),
        "nilpotent": g.is_nilpotent(),
        "nilpotency_class": g.nilpotency_class(),
        "derived_length": g.derived_length(),
        "derived_series_dims": g.series(SeriesKind::Derived).dims(),
        "lower_central_series_dims": g.series(SeriesKind::LowerCentral).dims(),
        "dim_center": g.center().dim(),
        "dim_commutator": g.commutator_subalgebra().dim(),
    })
}

fn render(value: &Value, indent: usize, out: &mut String) {
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::Object(_) => {
                    let _ = writeln!(out, "{:indent$}{k}:", "");
                    render(v, indent + 2, out);
                }
                other => {
                    let _ = writeln!(out, "{:indent$}{k}: {other}", "");
                }
            }
        }
    }
}

fn text_of(value: &Value) -> String {
    let mut s = String::new();
    render(value, 0, &mut s);
    s
}

pub fn cmd_check(algebra: &Path, structure: Option<&Path>, second: Option<&Path>) -> Result<Report> {
    let (g, _) = load_algebra(algebra)?;
    let mut out = json!({ "lie": lie_summary(&g) });
    let mut pass = true;
    if let Some(path) = structure {
        let j = load_structure(path, g.dim())?;
        let ch = AbelianCharacterizations::evaluate(&g, &j)?;
        let integrable = is_integrable(&g, &j)?;
        out["structure"] = json!({
            "integrable": integrable,
            "abelian": ch.abelian,
            "complex_bilinear": is_complex_bilinear(&g, &j)?,
            "characterizations": {
                "abelian": ch.abelian,
                "g10_and_g01_abelian": ch.g10_abelian && ch.g01_abelian,
                "adjoint_holomorphic": ch.adjoint_holomorphic,
                "coadjoint_holomorphic": ch.coadjoint_holomorphic,
                "agree": ch.agree(),
            },
        });
        pass &= integrable && ch.abelian && ch.agree();
        if let Some(path) = second {
            let k = load_structure(path, g.dim())?;
            let hyper = is_hypercomplex(&g, &j, &k)?;
            let abelian_hyper = is_abelian_hypercomplex(&g, &j, &k)?;
            out["hypercomplex"] = json!({ "hypercomplex": hyper, "abelian_hypercomplex": abelian_hyper });
            pass &= abelian_hyper;
        }
    }
    out["pass"] = json!(pass);
    Ok(Report { text: text_of(&out), json: out, pass })
}

/// Associative algebra from a file, or one of the builtin names (including `toeplitz-<k>`).
fn load_associative(name: &str) -> Result<(AssociativeAlgebra, Option<ComplexAlgebraStructure>)> {
    let path = Path::new(name);
    if path.exists() {
        let file: AssociativeFile = read_json(path)?;
        let complex = file.to_complex()?;
        return Ok((file.to_algebra()?, complex));
    }
    if let Some(k) = name.strip_prefix("toeplitz-") {
        let k = k.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        let c = toeplitz_algebra(k)?;
        return Ok((c.base().clone(), Some(c)));
    }
    if name == "complexes" {
        let c = ComplexAlgebraStructure::complexes();
        return Ok((c.base().clone(), Some(c)));
    }
    Ok((AssociativeAlgebra::by_name(name)?, None))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))
}

pub fn cmd_aff(name: &str, k_sign: KSign, out: &Path) -> Result<Report> {
    let (a, complex) = load_associative(name)?;
    let g = aff(&a)?;
    let j = standard_j(a.dim());
    ensure_dir(out)?;
    let mut files = vec![out.join("aff.algebra.json"), out.join("aff.J.json")];
    write_json(&files[0], &AlgebraFile::from_algebra(&g))?;
    write_json(&files[1], &StructureFile::from_map(j.matrix()))?;
    let mut abelian_k = None;
    if let Some(c) = &complex {
        let k = standard_k(c, k_sign.into());
        abelian_k = Some(is_abelian_hypercomplex(&g, &j, &k)?);
        files.push(out.join("aff.K.json"));
        write_json(&files[2], &StructureFile::from_map(k.matrix()))?;
    }
    let abelian = is_abelian(&g, &j)?;
    let mut report = json!({
        "dim": g.dim(),
        "commutative": a.is_commutative(),
        "j_abelian": abelian,
        "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    if let Some(h) = abelian_k {
        report["abelian_hypercomplex"] = json!(h);
    }
    let pass = g.validate().is_valid() && (abelian || !a.is_commutative()) && abelian_k.unwrap_or(true);
    Ok(Report { text: text_of(&report), json: report, pass })
}

pub fn cmd_catalog_list() -> Result<Report> {
    let mut rows = Vec::new();
    let mut text = String::new();
    for id in catalog_ids() {
        let e = by_id(&id)?;
        let _ = writeln!(text, "{id:<14} dim {:>2}  structures {}", e.algebra.dim(), e.structures.len());
        rows.push(json!({ "id": id, "dim": e.algebra.dim(), "structures": e.structures.len() }));
    }
    Ok(Report { json: Value::from(rows), text, pass: true })
}

/// Writes `<id>.algebra.json`, `<id>.J.json` (and `<id>.K.json`) and, when known, `<id>.A.json`.
pub fn cmd_catalog_emit(id: &str, out: &Path) -> Result<Report> {
    let e = by_id(id)?;
    ensure_dir(out)?;
    let mut files = vec![out.join(format!("{id}.algebra.json"))];
    write_json(&files[0], &AlgebraFile::from_algebra(&e.algebra))?;
    for (name, j) in ["J", "K"].iter().zip(&e.structures) {
        let path = out.join(format!("{id}.{name}.json"));
        write_json(&path, &StructureFile::from_map(j.matrix()))?;
        files.push(path);
    }
    if let Some(a) = &e.affine_model {
        let path = out.join(format!("{id}.A.json"));
        let file = match &e.complex_model {
            Some(c) => AssociativeFile::from_complex(c),
            None => AssociativeFile::from_algebra(a, None),
        };
        write_json(&path, &file)?;
        files.push(path);
    }
    let report = json!({ "id": id, "files": files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>() });
    Ok(Report { text: text_of(&report), json: report, pass: true })
}

pub fn cmd_decompose(algebra: &Path, structure: &Path) -> Result<Report> {
    let (g, _) = load_algebra(algebra)?;
    let j = load_structure(structure, g.dim())?;
    let flag = flag_decomposition(&g, &j, None)?;
    let mut text = String::new();
    let _ = writeln!(text, "steps: {}", flag.len());
    for (i, st) in flag.steps.iter().enumerate() {
        let c = &st.certificate;
        let _ = writeln!(
            text,
            "step {}: ideal dim {}, quotient dim {}, A dim {} ({:?}), kernel dim {}, verified",
            i + 1,
            st.ideal.dim(),
            st.quotient_dim,
            c.dim_a(),
            c.identification.class,
            c.kernel.dim()
        );
    }
    match flag.derived_length {
        Some(l) => {
            let _ = writeln!(text, "derived length: {l}");
        }
        None => text.push_str("derived length: not solvable\n"),
    }
    Ok(Report { json: flag_json(&flag), text, pass: true })
}

pub fn cmd_obstruct(algebra: Option<&Path>, free_two_step: Option<usize>, gram: Option<&Path>, budget: usize) -> Result<Report> {
    let report = match (algebra, free_two_step) {
        (_, Some(rank)) => free_two_step_obstruction(rank)?,
        (Some(path), None) => {
            let (g, file) = load_algebra(path)?;
            let gram = match gram {
                Some(p) => Some(read_json::<StructureFile>(p)?.to_map()?),
                None => file.gram_matrix()?,
            };
            let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            obstruct(&id, &g, gram.as_ref(), budget)?
        }
        (None, None) => return Err(Error::Parse("obstruct needs an algebra file or --free-two-step".into())),
    };
    let json = obstruction_json(&report);
    let text = format!("{}: {} ({})\n", report.algebra_id, report.verdict_str(), report.reason.as_str());
    Ok(Report { json, text, pass: true })
}

pub fn cmd_search(algebra: &Path, budget: usize, out: &Path) -> Result<Report> {
    let (g, _) = load_algebra(algebra)?;
    let id = algebra.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let report = search_abelian_j(&id, &g, budget)?;
    let mut json = obstruction_json(&report);
    let mut text = format!("{id}: {} ({})\n", report.verdict_str(), report.reason.as_str());
    if let Some(j) = report.witness() {
        ensure_dir(out)?;
        let path = out.join(format!("{id}.witness.J.json"));
        write_json(&path, &StructureFile::from_map(j.matrix()))?;
        json["witness_file"] = json!(path.display().to_string());
        let _ = writeln!(text, "witness: {}", path.display());
    }
    Ok(Report { json, text, pass: report.witness().is_some() })
}
