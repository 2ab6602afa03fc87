//! Datum files (TOML), report files (JSON), quivers (DOT) and the three
//! commands behind the `qplane` binary.

mod dot;

pub use dot::{block_dot, class_dots};

use crate::abelian::AbelianGroup;
use crate::lifting::{DatumError, ExactScalar, LiftingAlgebra, LiftingDatum, ScalarTerm};
use crate::pipeline::{self, Level, PipelineError, Verification};
use crate::report::Report;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// `gamma` as one table or an array of tables (a sum).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaSpec {
    Sum(Vec<ScalarTerm>),
    Term(ScalarTerm),
}

impl Default for GammaSpec {
    fn default() -> Self {
        GammaSpec::Sum(vec![])
    }
}

/// On-disk datum. Exponents must already be reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub group: Vec<u32>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub chi1: Vec<i64>,
    pub chi2: Vec<i64>,
    pub eps1: u8,
    pub eps2: u8,
    #[serde(default)]
    pub gamma: GammaSpec,
}

fn shape(msg: impl Into<String>) -> DatumError {
    DatumError::Shape(msg.into())
}

impl DatumFile {
    pub fn parse(text: &str) -> Result<Self, DatumError> {
        toml::from_str(text).map_err(|e| shape(e.message().to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("datum files serialize")
    }

    /// Checks shapes and ranges; the algebraic conditions are left to
    /// [`LiftingDatum::validate`].
    pub fn to_datum(&self) -> Result<LiftingDatum, DatumError> {
        let group = AbelianGroup::new(self.group.clone()).map_err(|e| shape(e.to_string()))?;
        let reduced = |name: &str, v: &[i64]| -> Result<Vec<u32>, DatumError> {
            if v.len() != group.rank() {
                return Err(shape(format!("{name} has {} entries, the group has rank {}", v.len(), group.rank())));
            }
            v.iter()
                .zip(group.factors())
                .map(|(&e, &m)| {
                    if e < 0 || e >= m as i64 {
                        Err(shape(format!("{name}: exponent {e} is outside 0..{m}")))
                    } else {
                        Ok(e as u32)
                    }
                })
                .collect()
        };
        let flag = |name: &str, v: u8| match v {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(shape(format!("{name} must be 0 or 1"))),
        };
        let gamma = match &self.gamma {
            GammaSpec::Sum(t) => t.clone(),
            GammaSpec::Term(t) => vec![t.clone()],
        };
        Ok(LiftingDatum {
            a: crate::abelian::GroupElement(reduced("a", &self.a)?),
            b: crate::abelian::GroupElement(reduced("b", &self.b)?),
            chi1: crate::abelian::Character(reduced("chi1", &self.chi1)?),
            chi2: crate::abelian::Character(reduced("chi2", &self.chi2)?),
            eps1: flag("eps1", self.eps1)?,
            eps2: flag("eps2", self.eps2)?,
            gamma: ExactScalar(gamma),
            group,
        })
    }

    pub fn from_datum(d: &LiftingDatum) -> Self {
        let wide = |v: &[u32]| v.iter().map(|&e| e as i64).collect();
        DatumFile {
            group: d.group.factors().to_vec(),
            a: wide(&d.a.0),
            b: wide(&d.b.0),
            chi1: wide(&d.chi1.0),
            chi2: wide(&d.chi2.0),
            eps1: d.eps1 as u8,
            eps2: d.eps2 as u8,
            gamma: GammaSpec::Sum(d.gamma.0.clone()),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("invalid datum: {0}")]
    Invalid(DatumError),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Failed(_) => 3,
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Datum(d) => CliError::Invalid(d),
            other => CliError::Failed(other.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

/// Reads, parses and validates a datum file.
pub fn load_datum(path: &Path) -> Result<LiftingDatum, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let d = DatumFile::parse(&text)
        .and_then(|f| f.to_datum())
        .map_err(CliError::Invalid)?;
    d.validate().map_err(CliError::Invalid)?;
    Ok(d)
}

pub fn write_report(report: &Report, path: &Path) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(report).expect("reports serialize");
    fs::write(path, json + "\n").map_err(|e| io_err(path, e))
}

pub fn read_report(path: &Path) -> Result<Report, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes one DOT file per block (only nonsemisimple ones when
/// `nonsemisimple_only`); returns the paths written.
pub fn write_quivers(report: &Report, dir: &Path, nonsemisimple_only: bool) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let mut out = Vec::new();
    for (k, class) in report.classes.iter().enumerate() {
        for (name, text) in class_dots(k, class, nonsemisimple_only) {
            let path = dir.join(format!("{name}.dot"));
            fs::write(&path, text).map_err(|e| io_err(&path, e))?;
            out.push(path);
        }
    }
    Ok(out)
}

pub fn cmd_classify(datum: &Path, out: &Path, quiver_dir: Option<&Path>) -> Result<Report, CliError> {
    let d = load_datum(datum)?;
    let report = pipeline::classify(&d)?;
    write_report(&report, out)?;
    if let Some(dir) = quiver_dir {
        write_quivers(&report, dir, true)?;
    }
    Ok(report)
}

/// `corrupt = Some((i, j))` alters `b_i b_j` in the first class subalgebra.
pub fn cmd_verify(datum: &Path, level: Level, corrupt: Option<(usize, usize)>) -> Result<Verification, CliError> {
    let d = load_datum(datum)?;
    let h = LiftingAlgebra::build(&d).map_err(CliError::Invalid)?;
    let mut classes = h.class_decomposition();
    if let Some((i, j)) = corrupt {
        let first = &mut classes[0];
        let dim = first.dim();
        if i >= dim || j >= dim {
            return Err(CliError::Failed(format!("corrupt index out of range for dimension {dim}")));
        }
        pipeline::corrupt_class(first, i, j);
    }
    Ok(pipeline::verify_built(&h, &classes, level)?)
}

pub fn cmd_quiver(datum: &Path, out_dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let d = load_datum(datum)?;
    let report = pipeline::classify(&d)?;
    write_quivers(&report, out_dir, false)
}

#[derive(Debug, Parser)]
#[command(name = "qplane", version, about = "Representations of liftings of quantum planes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every class subalgebra and write a JSON report.
    Classify {
        datum: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write a DOT quiver for each nonsemisimple block.
        #[arg(long)]
        quiver_dir: Option<PathBuf>,
    },
    /// Check identities and compare the theory with the brute-force oracle.
    Verify {
        datum: PathBuf,
        #[arg(long, default_value_t = Level::Regular)]
        level: Level,
        /// Negative control: perturb the product of basis elements I,J in
        /// the first class subalgebra.
        #[arg(long, value_name = "I,J", value_parser = parse_pair, hide = true)]
        corrupt: Option<(usize, usize)>,
    },
    /// Write one DOT quiver per block.
    Quiver {
        datum: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected I,J")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(i)?, p(j)?))
}

/// Runs one command, printing to stdout/stderr; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let res = match cli.command {
        Command::Classify { datum, out, quiver_dir } => cmd_classify(&datum, &out, quiver_dir.as_deref()).map(|r| {
            let dims: Vec<usize> = r.classes.iter().map(|c| c.dim).collect();
            println!("{} class subalgebras of dims {dims:?}; report written to {}", r.classes.len(), out.display());
        }),
        Command::Verify { datum, level, corrupt } => cmd_verify(&datum, level, corrupt).and_then(|v| {
            for c in &v.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() || c.passed {
                    println!("{mark} {}", c.name);
                } else {
                    println!("{mark} {}\n     {}", c.name, c.detail.replace('\n', "\n     "));
                }
            }
            match v.first_failure() {
                None => {
                    println!("verify ({level}): {} checks passed", v.checks.len());
                    Ok(())
                }
                Some(c) => Err(CliError::Failed(format!("first failure: {}: {}", c.name, c.detail))),
            }
        }),
        Command::Quiver { datum, out_dir } => cmd_quiver(&datum, &out_dir).map(|paths| {
            println!("{} quivers written to {}", paths.len(), out_dir.display());
        }),
    };
    match res {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
