//! The `qrot` command line. [`run`] takes the argument list and two sinks so
//! tests can drive it without spawning a process.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::annulus::{AnnulusKind, AnnulusTriangulation, LoopStatistic};
use crate::error::{Error, Result};
use crate::farey::{negative_expansion, q_rational_farey, regular_expansion, NegativeCF, Rational, RegularCF};
use crate::laurent::LaurentPoly;
use crate::pfaffian::{check_identities, write_report, IdentityRecord, Status};
use crate::polygon::{FanTriangulation, Statistic};
use crate::qcore::{continuant_e, continuant_k, qcf_regular, rotundus_minus, rotundus_plus};
use crate::svg::{render_annulus, render_fan};
use crate::verify::{run_all, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qrot", version, about = "q-rationals, quantum continuants and q-rotundi")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ContinuantKind {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "E", alias = "e")]
    E,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Plus,
    Minus,
}

impl From<KindArg> for AnnulusKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Plus => AnnulusKind::Plus,
            KindArg::Minus => AnnulusKind::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Surface {
    Fan,
    Annulus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StructureKind {
    Fan,
    Plus,
    Minus,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Numerator and denominator of the q-deformation of r/s.
    Qrat { rational: String },
    /// Regular and negative continued fractions of r/s.
    Cf { rational: String },
    /// Quantum continuant K(a) or E(c).
    Continuant {
        kind: ContinuantKind,
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// q-rotundus R+(a) or R(c).
    Rotundus { kind: KindArg, seq: String },
    /// Oriented paths in the fan of `a` between two vertices.
    Paths {
        seq: String,
        from: usize,
        to: usize,
        /// coarea, area or weight.
        #[arg(long, default_value = "coarea")]
        statistic: String,
        #[arg(long)]
        list: bool,
    },
    /// Oriented loops in T+(a) or T-(c).
    Loops {
        kind: KindArg,
        seq: String,
        /// area or coarea.
        #[arg(long, default_value = "coarea")]
        statistic: String,
        #[arg(long)]
        list: bool,
    },
    /// Corner matchings of T-(c).
    Matchings {
        seq: String,
        #[arg(long)]
        list: bool,
    },
    /// Closures of the cyclic dual graph of T+(a).
    Closures {
        seq: String,
        #[arg(long)]
        list: bool,
    },
    /// Determinant identities for c; with --sweep, a JSON-lines report.
    Pfaffian {
        #[arg(required_unless_present = "sweep")]
        seq: Option<String>,
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long, default_value_t = 5)]
        max_c: i64,
        /// Report file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every invariant sweep.
    Verify {
        #[arg(long)]
        max_num: Option<u64>,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_c: Option<i64>,
        #[arg(long)]
        max_a_sum: Option<i64>,
        #[arg(long)]
        max_em_k: Option<usize>,
    },
    /// Draw a fan (from `a`) or an annulus as SVG.
    Render {
        surface: Surface,
        seq: String,
        #[arg(long)]
        out: PathBuf,
        /// Annulus type.
        #[arg(long, value_enum, default_value = "plus")]
        kind: KindArg,
        /// Index of the path (k+1 to 1) or loop to shade.
        #[arg(long)]
        highlight: Option<usize>,
    },
    /// Dump a triangulation as JSON.
    Structure { kind: StructureKind, seq: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QratOutput {
    pub rational: String,
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfOutput {
    pub rational: String,
    pub regular: Vec<i64>,
    pub negative: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOutput {
    pub seq: Vec<i64>,
    pub poly: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRow {
    pub vertices: Vec<usize>,
    pub coarea: u32,
    pub area: u32,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsOutput {
    pub seq: Vec<i64>,
    pub from: usize,
    pub to: usize,
    pub statistic: String,
    pub count: usize,
    pub poly: LaurentPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<PathRow>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopRow {
    pub vertices: Vec<usize>,
    pub area: u32,
    pub coarea: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopsOutput {
    pub kind: String,
    pub seq: Vec<i64>,
    pub statistic: String,
    pub count: usize,
    pub poly: LaurentPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<Vec<LoopRow>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingsOutput {
    pub seq: Vec<i64>,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matchings: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosuresOutput {
    pub seq: Vec<i64>,
    pub count: u64,
    pub poly: LaurentPoly,
    /// Triangle indices of each closure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closures: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianOutput {
    pub records: Vec<IdentityRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub config: VerifyConfig,
    pub checks: Vec<CheckRow>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderOutput {
    pub out: PathBuf,
    pub bytes: usize,
}

/// Comma-separated integers, e.g. `2,2,3`.
pub fn parse_seq(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad sequence entry {t:?} in {s:?}")))
        })
        .collect()
}

fn fmt_seq(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_vertices(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    parts.join(" -> ")
}

/// What a subcommand hands back: JSON payload, text rendering, exit code.
struct Reply {
    json: serde_json::Value,
    text: String,
    code: i32,
}

impl Reply {
    fn new<T: Serialize>(value: &T, text: impl fmt::Display) -> Self {
        Self {
            json: serde_json::to_value(value).expect("output serializes"),
            text: text.to_string(),
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first) and executes. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let msg = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{msg}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{msg}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(reply) => {
            let written = if cli.json {
                if reply.json.is_null() {
                    Ok(())
                } else {
                    writeln!(out, "{}", reply.json)
                }
            } else {
                write!(out, "{}", reply.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            reply.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Reply> {
    match cmd {
        Command::Qrat { rational } => {
            let x: Rational = rational.parse()?;
            // Continued fractions need x > 1; the Farey descent covers the rest.
            let (num, den) = if x.is_greater_than_one() && !x.is_infinity() {
                qcf_regular(regular_expansion(x)?.as_slice())?
            } else {
                q_rational_farey(x)
            };
            let text = format!("num = {num}\nden = {den}\n");
            Ok(Reply::new(&QratOutput { rational: x.to_string(), num, den }, text))
        }
        Command::Cf { rational } => {
            let x: Rational = rational.parse()?;
            let regular = regular_expansion(x)?.as_slice().to_vec();
            let negative = negative_expansion(x)?.as_slice().to_vec();
            let text = format!("regular = {}\nnegative = {}\n", fmt_seq(&regular), fmt_seq(&negative));
            Ok(Reply::new(&CfOutput { rational: x.to_string(), regular, negative }, text))
        }
        Command::Continuant { kind, seq } => {
            let seq = parse_seq(seq)?;
            let poly = match kind {
                ContinuantKind::K => continuant_k(&seq)?,
                ContinuantKind::E => continuant_e(&seq),
            };
            let text = format!("{poly}\n");
            Ok(Reply::new(&PolyOutput { seq, poly }, text))
        }
        Command::Rotundus { kind, seq } => {
            let seq = parse_seq(seq)?;
            let poly = match kind {
                KindArg::Plus => rotundus_plus(&seq)?,
                KindArg::Minus => rotundus_minus(&seq)?,
            };
            let text = format!("{poly}\n");
            Ok(Reply::new(&PolyOutput { seq, poly }, text))
        }
        Command::Paths { seq, from, to, statistic, list } => {
            let seq = parse_seq(seq)?;
            let stat: Statistic = statistic.parse()?;
            let fan = FanTriangulation::from_regular(&RegularCF::new(seq.clone())?);
            let paths = fan.enumerate_paths(*from, *to)?;
            let poly = fan.path_generating_poly(*from, *to, stat)?;
            let rows: Vec<PathRow> = paths
                .iter()
                .map(|p| PathRow {
                    vertices: p.vertices.clone(),
                    coarea: p.coarea,
                    area: p.area,
                    weight: p.weight,
                })
                .collect();
            let mut text = format!("count = {}\npoly = {poly}\n", rows.len());
            if *list {
                for r in &rows {
                    text += &format!(
                        "{}  coarea={} area={} weight={}\n",
                        fmt_vertices(&r.vertices),
                        r.coarea,
                        r.area,
                        r.weight
                    );
                }
            }
            let value = PathsOutput {
                seq,
                from: *from,
                to: *to,
                statistic: statistic.clone(),
                count: rows.len(),
                poly,
                paths: list.then_some(rows),
            };
            Ok(Reply::new(&value, text))
        }
        Command::Loops { kind, seq, statistic, list } => {
            let seq = parse_seq(seq)?;
            let stat: LoopStatistic = statistic.parse()?;
            let kind: AnnulusKind = (*kind).into();
            let t = AnnulusTriangulation::build(kind, &seq)?;
            let loops = t.enumerate_loops()?;
            let poly = t.loop_generating_poly(stat)?;
            let rows: Vec<LoopRow> = loops
                .iter()
                .map(|l| LoopRow {
                    vertices: l.vertices.clone(),
                    area: l.area,
                    coarea: l.coarea,
                })
                .collect();
            let mut text = format!("count = {}\npoly = {poly}\n", rows.len());
            if *list {
                for r in &rows {
                    text += &format!("{}  area={} coarea={}\n", fmt_vertices(&r.vertices), r.area, r.coarea);
                }
            }
            let value = LoopsOutput {
                kind: kind.to_string(),
                seq,
                statistic: statistic.clone(),
                count: rows.len(),
                poly,
                loops: list.then_some(rows),
            };
            Ok(Reply::new(&value, text))
        }
        Command::Matchings { seq, list } => {
            let seq = parse_seq(seq)?;
            let t = AnnulusTriangulation::minus(&NegativeCF::new(seq.clone())?)?;
            let labels: Vec<String> = t.matchings()?.iter().map(|m| t.matching_label(m)).collect();
            let mut text = format!("count = {}\n", labels.len());
            if *list {
                for l in &labels {
                    text += &format!("{l}\n");
                }
            }
            let value = MatchingsOutput {
                seq,
                count: labels.len(),
                matchings: list.then_some(labels),
            };
            Ok(Reply::new(&value, text))
        }
        Command::Closures { seq, list } => {
            let seq = parse_seq(seq)?;
            let t = AnnulusTriangulation::plus(&RegularCF::new(seq.clone())?)?;
            let poly = t.closure_generating_poly()?;
            let count = poly.eval_at_one().to_u64().expect("closure count fits in u64");
            let listing = if *list {
                let nt = t.triangles.len();
                Some(
                    t.closures()?
                        .into_iter()
                        .map(|mask| (0..nt).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            let mut text = format!("count = {count}\npoly = {poly}\n");
            for c in listing.iter().flatten() {
                let parts: Vec<String> = c.iter().map(usize::to_string).collect();
                text += &format!("{{{}}}\n", parts.join(","));
            }
            Ok(Reply::new(&ClosuresOutput { seq, count, poly, closures: listing }, text))
        }
        Command::Pfaffian { seq, sweep, max_k, max_c, out: file } => {
            if *sweep {
                let (ok, bad) = match file {
                    Some(path) => {
                        let f = std::fs::File::create(path).map_err(|e| Error::Parse(e.to_string()))?;
                        let mut w = std::io::BufWriter::new(f);
                        let counts = write_report(*max_k, *max_c, &mut w)?;
                        w.flush().map_err(|e| Error::Parse(e.to_string()))?;
                        counts
                    }
                    None => write_report(*max_k, *max_c, out)?,
                };
                let _ = writeln!(err, "confirmed {ok}, refuted {bad}");
                // Without --out the report already went to `out`.
                let (json, text) = match file {
                    Some(path) => (
                        serde_json::json!({ "out": path, "confirmed": ok, "refuted": bad }),
                        format!("wrote {}\n", path.display()),
                    ),
                    None => (serde_json::Value::Null, String::new()),
                };
                let code = if bad == 0 { EXIT_OK } else { EXIT_VERIFY };
                return Ok(Reply { json, text, code });
            }
            let c = parse_seq(seq.as_deref().unwrap_or_default())?;
            let records = check_identities(&c)?.to_vec();
            let mut text = String::new();
            for r in &records {
                let name = serde_json::to_value(r.identity).expect("serializes");
                let status = serde_json::to_value(r.status).expect("serializes");
                text += &format!(
                    "{}: lhs = {}, rhs = {}, {}\n",
                    name.as_str().unwrap_or_default(),
                    r.lhs,
                    r.rhs,
                    status.as_str().unwrap_or_default()
                );
            }
            let refuted = records.iter().any(|r| r.status == Status::Refuted);
            let mut reply = Reply::new(&PfaffianOutput { records }, text);
            if refuted {
                reply.code = EXIT_VERIFY;
            }
            Ok(reply)
        }
        Command::Verify { max_num, max_k, max_c, max_a_sum, max_em_k } => {
            let d = VerifyConfig::default();
            let cfg = VerifyConfig {
                max_num: max_num.unwrap_or(d.max_num),
                max_k: max_k.unwrap_or(d.max_k),
                max_c: max_c.unwrap_or(d.max_c),
                max_a_sum: max_a_sum.unwrap_or(d.max_a_sum),
                max_em_k: max_em_k.unwrap_or(d.max_em_k),
            };
            let checks: Vec<CheckRow> = run_all(&cfg)
                .into_iter()
                .map(|c| CheckRow {
                    name: c.name.to_string(),
                    cases: c.cases,
                    failed: c.failed,
                    failures: c.failures,
                })
                .collect();
            let passed = checks.iter().all(|c| c.failed == 0);
            let mut text = String::new();
            for c in &checks {
                let tag = if c.failed == 0 { "PASS" } else { "FAIL" };
                text += &format!("{tag}  {}  ({} cases, {} failed)\n", c.name, c.cases, c.failed);
                for f in &c.failures {
                    text += &format!("      {f}\n");
                }
            }
            let total: usize = checks.iter().map(|c| c.cases).sum();
            let failed: usize = checks.iter().map(|c| c.failed).sum();
            text += &format!("summary: {total} cases, {failed} failures\n");
            let mut reply = Reply::new(&VerifyOutput { config: cfg, checks, passed }, text);
            if !passed {
                reply.code = EXIT_VERIFY;
            }
            Ok(reply)
        }
        Command::Render { surface, seq, out: path, kind, highlight } => {
            let seq = parse_seq(seq)?;
            let svg = match surface {
                Surface::Fan => render_fan(&FanTriangulation::from_regular(&RegularCF::new(seq)?), *highlight)?,
                Surface::Annulus => render_annulus(&AnnulusTriangulation::build((*kind).into(), &seq)?, *highlight)?,
            };
            std::fs::write(path, &svg).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let value = RenderOutput { out: path.clone(), bytes: svg.len() };
            let text = format!("wrote {} ({} bytes)\n", path.display(), svg.len());
            Ok(Reply::new(&value, text))
        }
        Command::Structure { kind, seq } => {
            let seq = parse_seq(seq)?;
            let json = match kind {
                StructureKind::Fan => serde_json::to_value(FanTriangulation::from_regular(&RegularCF::new(seq)?)),
                StructureKind::Plus => serde_json::to_value(AnnulusTriangulation::build(AnnulusKind::Plus, &seq)?),
                StructureKind::Minus => serde_json::to_value(AnnulusTriangulation::build(AnnulusKind::Minus, &seq)?),
            }
            .expect("structure serializes");
            let text = format!("{}\n", serde_json::to_string_pretty(&json).expect("serializes"));
            Ok(Reply { json, text, code: EXIT_OK })
        }
    }
}
