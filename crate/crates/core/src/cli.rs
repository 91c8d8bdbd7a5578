//! The `adesign` command line. [`run`] does all the work and returns a
//! [`CommandResult`]; the binary only prints it.
//!
//! Exit status 0 means success, 1 means a verification came out negative
//! (a claim failed, or the input is not the object asked about), and 2 means
//! bad usage or bad input.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::FiniteField;
use crate::bounds;
use crate::builders::{self, ConstructionReport};
use crate::error::{Error, Result};
use crate::formats;
use crate::graphs::{self, ConferenceKind};
use crate::matrix::Matrix;
use crate::setdiff::{self, GroupSubset};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: i32,
    pub text: String,
    pub json: Option<Value>,
}

impl CommandResult {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        CommandResult {
            status: EXIT_OK,
            text: text.into(),
            json: Some(json),
        }
    }

    fn negative(text: impl Into<String>, json: Value) -> Self {
        CommandResult {
            status: EXIT_MISMATCH,
            text: text.into(),
            json: Some(json),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CommandResult {
            status: EXIT_USAGE,
            text: format!("error: {}", msg.into()),
            json: None,
        }
    }

    /// What the binary prints: the JSON payload when asked for and present.
    pub fn render(&self, json: bool) -> String {
        match (&self.json, json && self.status != EXIT_USAGE) {
            (Some(j), true) => serde_json::to_string_pretty(j).expect("JSON values serialize"),
            _ => self.text.clone(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "adesign",
    version,
    about = "Designs and adesigns from graphs, tournaments and difference sets"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Print the JSON payload instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write an adjacency matrix.
    Gen {
        #[command(subcommand)]
        what: GenWhat,
    },
    /// Build a named construction and verify its claimed parameters.
    Construct(ConstructArgs),
    /// Classify a block file at level t.
    Classify {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
    /// Check a matrix file.
    Check { kind: CheckKind, file: PathBuf },
    /// Difference multiplicities of a group subset.
    Spectrum { file: PathBuf },
    #[command(name = "is-ds")]
    IsDs { file: PathBuf },
    #[command(name = "is-ads")]
    IsAds { file: PathBuf },
    #[command(name = "is-pds")]
    IsPds { file: PathBuf },
    /// Development of a group subset as a block file.
    Dev {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Block-count window of a 2-(v,k,λ) adesign; with --t, also the
    /// feasibility report of a (t+1)-(v,k,λ) adesign.
    Bounds {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        lambda: u64,
        #[arg(long)]
        t: Option<u64>,
    },
    /// What a (t+1)-(v,k,λ) adesign looks like at level t.
    Feasibility {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        lambda: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GenWhat {
    #[command(name = "paley-graph")]
    PaleyGraph {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(name = "paley-tournament")]
    PaleyTournament {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(name = "latin-square")]
    LatinSquare {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Srg,
    Drt,
    Conference,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    PaleyUnion,
    PaleyUnionComp,
    DrtUnion,
    DrtUnionComp,
    SrgPlusI,
    SrgPairUnion,
    DerivedInf,
    ResidualInf,
    BoseMod,
    PairUnionExample,
    ContractionCover,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    name: Construction,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    /// Use the Latin square graph L_d(q) instead of the Paley graph.
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    row: Option<usize>,
    /// Take the complement of the input graph.
    #[arg(long)]
    complement: bool,
    /// srg-pair-union: use the A + I blocks of the complement graphs.
    #[arg(long)]
    complementary: bool,
    /// Write the blocks to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{
                DisplayHelp, DisplayHelpOnMissingArgumentOrSubcommand, DisplayVersion,
            };
            return match e.kind() {
                DisplayHelp | DisplayVersion => CommandResult {
                    status: EXIT_OK,
                    text: e.to_string(),
                    json: None,
                },
                DisplayHelpOnMissingArgumentOrSubcommand => {
                    CommandResult::usage("missing subcommand; see --help")
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("bad usage");
                    CommandResult::usage(first.trim_start_matches("error: "))
                }
            };
        }
    };
    dispatch(cli.cmd).unwrap_or_else(CommandResult::usage)
}

/// Failures that exit 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<Usage> for String {
    fn from(u: Usage) -> Self {
        u.0
    }
}

type CliResult = std::result::Result<CommandResult, Usage>;

fn read(path: &Path) -> std::result::Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: Result<T>) -> std::result::Result<T, Usage> {
    r.map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Usage> {
    fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Gen { what } => gen(what),
        Cmd::Construct(args) => construct(args),
        Cmd::Classify { t, file } => {
            let s = in_file(&file, formats::parse_blocks(&read(&file)?))?;
            let c = s.classify(t)?;
            Ok(CommandResult::ok(c.summary(), json!(c)))
        }
        Cmd::Check { kind, file } => {
            let m = in_file(&file, formats::parse_matrix(&read(&file)?))?;
            check(kind, &m)
        }
        Cmd::Spectrum { file } => {
            let d = group_subset(&file)?;
            let s = setdiff::difference_spectrum(&d)?;
            let h = s.histogram();
            let mut text: Vec<String> = h
                .iter()
                .map(|(m, c)| format!("multiplicity {m}: {c} elements"))
                .collect();
            text.push(format!("mass {}", s.mass()));
            Ok(CommandResult::ok(
                text.join("\n"),
                json!({ "histogram": h, "mass": s.mass() }),
            ))
        }
        Cmd::IsDs { file } => {
            let d = group_subset(&file)?;
            let (v, k) = (d.group().order(), d.len());
            Ok(match setdiff::is_difference_set(&d) {
                Some(l) => CommandResult::ok(
                    format!("({v},{k},{l}) difference set"),
                    json!({ "v": v, "k": k, "lambda": l }),
                ),
                None => CommandResult::negative("not a difference set", Value::Null),
            })
        }
        Cmd::IsAds { file } => {
            let d = group_subset(&file)?;
            Ok(match setdiff::is_almost_difference_set(&d) {
                Some(p) => {
                    let mut text = format!(
                        "({},{},{},{}) almost difference set",
                        p.v, p.k, p.lambda, p.s
                    );
                    let alt = p.alternate();
                    if let Some(a) = alt {
                        text.push_str(&format!(
                            "\nalso ({},{},{},{}) with s=0",
                            a.v, a.k, a.lambda, a.s
                        ));
                    }
                    CommandResult::ok(text, json!({ "params": p, "alternate": alt }))
                }
                None => CommandResult::negative("not an almost difference set", Value::Null),
            })
        }
        Cmd::IsPds { file } => {
            let d = group_subset(&file)?;
            Ok(match setdiff::is_partial_difference_set(&d) {
                Some(p) => CommandResult::ok(
                    format!(
                        "({},{},{},{}) partial difference set",
                        p.v, p.k, p.lambda, p.mu
                    ),
                    json!(p),
                ),
                None => CommandResult::negative("not a partial difference set", Value::Null),
            })
        }
        Cmd::Dev { file, out } => {
            let d = group_subset(&file)?;
            let dev = setdiff::development(&d)?;
            let text = formats::write_blocks(&dev.structure);
            let j = json!({ "v": dev.structure.v(), "b": dev.structure.b(), "repeated_blocks": dev.repeated_blocks });
            Ok(match out {
                Some(p) => {
                    write(&p, &text)?;
                    let note = if dev.repeated_blocks {
                        ", some translates coincide"
                    } else {
                        ""
                    };
                    CommandResult::ok(
                        format!(
                            "wrote {} blocks to {}{note}",
                            dev.structure.b(),
                            p.display()
                        ),
                        j,
                    )
                }
                None => CommandResult::ok(text.trim_end(), j),
            })
        }
        Cmd::Bounds { v, k, lambda, t } => {
            let w = bounds::adesign_block_window(v, k, lambda)?;
            let mut text = w.to_string();
            let mut j = json!({ "window": w });
            if let Some(t) = t {
                let f = bounds::feasibility(v, k, t, lambda)?;
                text.push_str(&format!("\n\n{f}"));
                j["feasibility"] = json!(f);
            }
            Ok(CommandResult::ok(text, j))
        }
        Cmd::Feasibility { v, k, t, lambda } => {
            let f = bounds::feasibility(v, k, t, lambda)?;
            Ok(CommandResult::ok(f.to_string(), json!(f)))
        }
    }
}

fn group_subset(path: &Path) -> std::result::Result<GroupSubset, Usage> {
    in_file(path, formats::parse_group_subset(&read(path)?))
}

fn gen(what: GenWhat) -> CliResult {
    let (m, out) = match what {
        GenWhat::PaleyGraph { q, out } => (graphs::paley_graph(&FiniteField::with_order(q)?)?, out),
        GenWhat::PaleyTournament { q, out } => {
            (graphs::paley_tournament(&FiniteField::with_order(q)?)?, out)
        }
        GenWhat::LatinSquare { q, d, out } => (
            graphs::latin_square_graph(&FiniteField::with_order(q)?, d)?,
            out,
        ),
    };
    let text = formats::write_matrix(&m);
    let j = json!({ "n": m.rows(), "rows": (0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>() });
    Ok(match out {
        Some(p) => {
            write(&p, &text)?;
            CommandResult::ok(
                format!(
                    "wrote a {}x{} matrix to {}",
                    m.rows(),
                    m.cols(),
                    p.display()
                ),
                j,
            )
        }
        None => CommandResult::ok(text.trim_end(), j),
    })
}

fn check(kind: CheckKind, m: &Matrix<i64>) -> CliResult {
    Ok(match kind {
        CheckKind::Srg => match graphs::is_srg(m)? {
            Some(p) => CommandResult::ok(
                format!("SRG({},{},{},{})", p.n, p.k, p.lambda, p.mu),
                json!(p),
            ),
            None => CommandResult::negative("not strongly regular", Value::Null),
        },
        CheckKind::Drt => match graphs::is_doubly_regular_tournament(m)? {
            Some(p) => CommandResult::ok(
                format!(
                    "doubly regular tournament, n={}, common out-neighbours {}",
                    p.n, p.common
                ),
                json!(p),
            ),
            None => CommandResult::negative("not a doubly regular tournament", Value::Null),
        },
        CheckKind::Conference => match graphs::is_conference_matrix(m)? {
            ConferenceKind::NotConference => {
                CommandResult::negative("not a conference matrix", json!("NotConference"))
            }
            k => CommandResult::ok(
                format!("{k:?} conference matrix of order {}", m.rows()),
                json!(k),
            ),
        },
    })
}

fn need<T>(v: Option<T>, flag: &str, name: Construction) -> std::result::Result<T, Usage> {
    v.ok_or_else(|| {
        let n = name
            .to_possible_value()
            .map(|p| p.get_name().to_string())
            .unwrap_or_default();
        Usage(format!("{n} needs --{flag}"))
    })
}

fn construct(a: ConstructArgs) -> CliResult {
    use Construction::*;
    let name = a.name;
    let field = |q: Option<u64>| -> std::result::Result<FiniteField, Usage> {
        Ok(FiniteField::with_order(need(q, "q", name)?)?)
    };
    let graph = |a: &ConstructArgs| -> std::result::Result<(Matrix<i64>, FiniteField), Usage> {
        let f = field(a.q)?;
        let g = match a.d {
            Some(d) => graphs::latin_square_graph(&f, d)?,
            None => graphs::paley_graph(&f)?,
        };
        let g = if a.complement {
            graphs::complement_graph(&g)?
        } else {
            g
        };
        Ok((g, f))
    };
    let tournament = |q: Option<u64>| -> std::result::Result<(Matrix<i64>, FiniteField), Usage> {
        let f = field(q)?;
        Ok((graphs::paley_tournament(&f)?, f))
    };
    let with_field = |r: Result<ConstructionReport>,
                      f: &FiniteField|
     -> std::result::Result<ConstructionReport, Usage> {
        let mut r = r?;
        r.field.get_or_insert_with(|| f.describe());
        Ok(r)
    };
    let report = match name {
        PaleyUnion | PaleyUnionComp | SrgPlusI | DerivedInf | ResidualInf => {
            let (g, f) = graph(&a)?;
            let row = a.row.unwrap_or(0);
            let r = match name {
                PaleyUnion => builders::paley_union(&g),
                PaleyUnionComp => builders::paley_union_complementary(&g),
                SrgPlusI => builders::srg_plus_identity(&g),
                DerivedInf => builders::derived_at_infinity(&g, row),
                _ => builders::residual_at_infinity(&g, row),
            };
            with_field(r, &f)?
        }
        DrtUnion | DrtUnionComp => {
            let (g, f) = tournament(a.q)?;
            let r = if name == DrtUnion {
                builders::tournament_union(&g)
            } else {
                builders::tournament_union_complementary(&g)
            };
            with_field(r, &f)?
        }
        SrgPairUnion => builders::class_pair_union(need(a.q, "q", name)?, a.complementary)?,
        BoseMod => builders::bose_modified(need(a.n, "n", name)?)?,
        PairUnionExample => builders::pair_union_counterexample(need(a.n, "n", name)?)?,
        ContractionCover => builders::contraction_minimal_covering(need(a.q, "q", name)?)?,
    };
    let mut text = report.summary();
    if let Some(p) = &a.out {
        write(p, &formats::write_blocks(&report.structure))?;
        text.push_str(&format!(
            "\nwrote {} blocks to {}",
            report.structure.b(),
            p.display()
        ));
    }
    let j = report.to_json();
    Ok(if report.verified_ok() {
        CommandResult::ok(text, j)
    } else {
        let m = report.mismatches().join("\n");
        CommandResult::negative(format!("{text}\n{m}"), j)
    })
}
