//! The `gtm` command line.
//!
//! Exit codes: 0 success, 1 bad `--w`/`--x` or other domain error, 2 parse
//! or usage error, 3 enumeration limit exceeded, 4 verification failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{self, format_vector, ClassMethod};
use crate::error::Error;
use crate::graph::{Multigraph, DEFAULT_ENUMERATION_LIMIT};
use crate::labeling::Label;
use crate::matroid::{parse_subset, perfect_subset, self_dual_report, GroundElement, MatroidHandle, Presentation, SelfDualMode, SELF_DUAL_EXHAUSTIVE_LIMIT};
use crate::oracle::{self, Verdict};

pub const LIMIT_ENV: &str = "GTM_LIMIT";

/// Largest basis family handed to the pairwise exchange check by `verify`.
const EXCHANGE_BASIS_LIMIT: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "gtm", version, about = "Graphical transversal matroids of multigraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graph, ground set and rank summary
    Info(Common),
    /// Rank of --x (default: the whole ground set)
    Rank {
        #[command(flatten)]
        common: Common,
        /// Include a labeling of maximum height
        #[arg(long)]
        witness: bool,
    },
    /// Whether --x is independent
    Independent(Common),
    /// Whether --x is a basis
    Basis(Common),
    /// Exact number of bases
    CountBases {
        #[command(flatten)]
        common: Common,
        /// Find out-degree classes by the subset condition instead of walking orientations
        #[arg(long)]
        feasibility: bool,
    },
    /// Out-degree classes of the orientations of G[V \ W]
    Classes(Common),
    /// Class table with weights under G (and optionally --alt)
    Table(Common),
    /// Run the brute-force consistency checks
    Verify(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Edge-list file
    pub graph: PathBuf,
    /// Deleted vertices, comma separated
    #[arg(long)]
    pub w: Option<String>,
    /// Ground subset as comma-separated v:i tokens
    #[arg(long)]
    pub x: Option<String>,
    /// Second graph whose degrees give an extra weight column
    #[arg(long)]
    pub alt: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumeration cap on edges (overrides GTM_LIMIT)
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    Verification(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(Error::Parse { .. }) | Failure::Io(..) => 2,
            Failure::Domain(Error::LimitExceeded { .. }) => 3,
            Failure::Domain(_) | Failure::Usage(_) => 1,
            Failure::Verification(..) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Usage(m) => m.clone(),
            Failure::Verification(check, _) => format!("verification failed: {check}"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(f) => {
            let stdout = match &f {
                Failure::Verification(_, out) => out.clone(),
                _ => String::new(),
            };
            Outcome { code: f.code(), stdout, stderr: format!("gtm: {}\n", f.message()) }
        }
    }
}

fn load_graph(path: &Path) -> Result<Multigraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(Multigraph::parse(&text)?)
}

pub fn parse_vertex_list(text: &str) -> Result<BTreeSet<usize>, Error> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::BadVertexList(text.to_string())))
        .collect()
}

struct Context {
    graph: Multigraph,
    w: BTreeSet<usize>,
    limit: usize,
    format: Format,
}

impl Context {
    fn new(c: &Common) -> Result<Self, Failure> {
        let graph = load_graph(&c.graph)?;
        let w = match &c.w {
            Some(s) => parse_vertex_list(s)?,
            None => BTreeSet::new(),
        };
        graph.check_vertices(&w)?;
        let limit = match c.limit {
            Some(l) => l,
            None => match std::env::var(LIMIT_ENV) {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{LIMIT_ENV}={s:?} is not a nonnegative integer")))?,
                Err(_) => DEFAULT_ENUMERATION_LIMIT,
            },
        };
        Ok(Context { graph, w, limit, format: c.format })
    }

    fn handle(&self) -> Result<MatroidHandle, Failure> {
        Ok(MatroidHandle::with_deleted(self.graph.clone(), &self.w)?)
    }

    fn emit<S: Serialize>(&self, json: &S, text: impl FnOnce() -> String) -> String {
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string(json).expect("serializable output");
                s.push('\n');
                s
            }
            Format::Text => text(),
        }
    }
}

fn subset_arg(c: &Common, required: bool) -> Result<Option<Vec<GroundElement>>, Failure> {
    match &c.x {
        Some(s) => Ok(Some(parse_subset(s)?)),
        None if required => Err(Failure::Usage("--x is required for this command".to_string())),
        None => Ok(None),
    }
}

#[derive(Serialize)]
struct Info<'a> {
    vertices: usize,
    edges: usize,
    loops: usize,
    degrees: &'a [usize],
    deleted: &'a BTreeSet<usize>,
    ground_size: usize,
    rank: usize,
    dual_rank: usize,
    primal_presentation: Presentation,
    dual_presentation: Presentation,
}

#[derive(Serialize)]
struct RankOut {
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeling: Option<crate::labeling::Labeling>,
}

#[derive(Serialize)]
struct ClassesOut {
    classes: Vec<census::OutDegreeClass>,
    totals: ClassTotals,
}

#[derive(Serialize)]
struct ClassTotals {
    orientations: u64,
    classes: usize,
}

#[derive(Serialize)]
struct VerifyOut {
    pass: bool,
    verdicts: Vec<Verdict>,
    skipped: Vec<String>,
}

fn execute(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Info(c) => {
            let ctx = Context::new(c)?;
            let m = ctx.handle()?;
            let info = Info {
                vertices: ctx.graph.vertex_count(),
                edges: ctx.graph.edge_count(),
                loops: ctx.graph.loop_count(),
                degrees: ctx.graph.degrees(),
                deleted: &ctx.w,
                ground_size: m.ground().len(),
                rank: m.rank_of_ground(),
                dual_rank: m.kept_edges().len(),
                primal_presentation: m.primal_presentation(),
                dual_presentation: m.dual_presentation(),
            };
            Ok(ctx.emit(&info, || {
                let degrees: Vec<String> = info.degrees.iter().map(|d| d.to_string()).collect();
                let deleted: Vec<String> = info.deleted.iter().map(|d| d.to_string()).collect();
                format!(
                    "vertices: {}\nedges: {}\nloops: {}\ndegrees: {}\ndeleted: {{{}}}\nground: {}\nrank: {}\ndual rank: {}\n",
                    info.vertices,
                    info.edges,
                    info.loops,
                    degrees.join(" "),
                    deleted.join(","),
                    info.ground_size,
                    info.rank,
                    info.dual_rank
                )
            }))
        }
        Command::Rank { common, witness } => {
            let ctx = Context::new(common)?;
            let m = ctx.handle()?;
            let x = subset_arg(common, false)?.unwrap_or_else(|| m.ground().to_vec());
            let (rank, labeling) = m.rank_with_witness(&x)?;
            let out = RankOut { rank, labeling: witness.then_some(labeling) };
            Ok(ctx.emit(&out, || {
                let mut s = format!("{rank}\n");
                if let Some(phi) = &out.labeling {
                    for (i, (e, l)) in ctx.graph.edges().iter().zip(phi.labels()).enumerate() {
                        let target = match l {
                            Label::Vertex(v) => v.to_string(),
                            Label::Infinity => "inf".to_string(),
                        };
                        let _ = writeln!(s, "edge {i} ({},{}) -> {target}", e.u, e.w);
                    }
                }
                s
            }))
        }
        Command::Independent(c) => {
            let ctx = Context::new(c)?;
            let x = subset_arg(c, true)?.unwrap_or_default();
            let ok = ctx.handle()?.is_independent(&x)?;
            Ok(ctx.emit(&serde_json::json!({ "independent": ok }), || format!("{ok}\n")))
        }
        Command::Basis(c) => {
            let ctx = Context::new(c)?;
            let x = subset_arg(c, true)?.unwrap_or_default();
            let ok = ctx.handle()?.is_basis(&x)?;
            Ok(ctx.emit(&serde_json::json!({ "basis": ok }), || format!("{ok}\n")))
        }
        Command::CountBases { common, feasibility } => {
            let ctx = Context::new(common)?;
            let method = if *feasibility { ClassMethod::Feasibility } else { ClassMethod::Orientations };
            let n = census::count_bases_with(&ctx.graph, &ctx.w, ctx.limit, method)?;
            Ok(ctx.emit(&serde_json::json!({ "bases": n.to_string() }), || format!("{n}\n")))
        }
        Command::Classes(c) => {
            let ctx = Context::new(c)?;
            let sub = ctx.graph.induced_subgraph(&ctx.graph.complement(&ctx.w));
            let classes = census::enumerate_classes(&sub, ctx.limit)?;
            let out = ClassesOut {
                totals: ClassTotals {
                    orientations: classes.iter().map(|c| c.multiplicity).sum(),
                    classes: classes.len(),
                },
                classes,
            };
            Ok(ctx.emit(&out, || {
                let width = out.classes.iter().map(|c| format_vector(&c.vector).len()).max().unwrap_or(0);
                let mut s = String::new();
                for c in &out.classes {
                    let _ = writeln!(s, "{:<width$}  {}", format_vector(&c.vector), c.multiplicity);
                }
                let _ = writeln!(s, "orientations: {}\nclasses: {}", out.totals.orientations, out.totals.classes);
                s
            }))
        }
        Command::Table(c) => {
            let ctx = Context::new(c)?;
            let alt = c.alt.as_deref().map(load_graph).transpose()?;
            let report = census::table_report(&ctx.graph, &ctx.w, alt.as_ref(), ctx.limit)?;
            Ok(ctx.emit(&report, || report.to_text()))
        }
        Command::Verify(c) => {
            let ctx = Context::new(c)?;
            let (verdicts, skipped) = verify_battery(&ctx.graph, &ctx.w, ctx.limit)?;
            let pass = verdicts.iter().all(|v| v.pass);
            let out = VerifyOut { pass, verdicts, skipped };
            let rendered = ctx.emit(&out, || {
                let mut s = String::new();
                for v in &out.verdicts {
                    let _ = writeln!(s, "{v}");
                }
                for k in &out.skipped {
                    let _ = writeln!(s, "SKIP {k}");
                }
                let _ = writeln!(s, "{}", if pass { "PASS" } else { "FAIL" });
                s
            });
            match out.verdicts.iter().find(|v| !v.pass) {
                Some(v) => Err(Failure::Verification(v.check.clone(), rendered)),
                None => Ok(rendered),
            }
        }
    }
}

/// The consistency checks `verify` runs on `TM(g, w)`. Checks whose sweep
/// would exceed its size bound are listed as skipped rather than run.
pub fn verify_battery(
    g: &Multigraph,
    w: &BTreeSet<usize>,
    limit: usize,
) -> Result<(Vec<Verdict>, Vec<String>), Error> {
    let instance = oracle::instance_name(g, w);
    let m = MatroidHandle::with_deleted(g.clone(), w)?;
    let mut verdicts = vec![oracle::cross_validate(g, w, limit)?];
    let mut skipped = Vec::new();

    // rank of the full ground set is |E|; rank of S(W) is the number of edges meeting W
    let started = std::time::Instant::now();
    let full = MatroidHandle::new(g.clone());
    let r_all = full.rank(full.ground())?;
    let r_sw = full.rank(&perfect_subset(g, w))?;
    let meeting = g.edges_meeting(w).len();
    let ok = r_all == g.edge_count() && r_sw == meeting;
    verdicts.push(Verdict {
        check: "rank-identities".to_string(),
        instance: instance.clone(),
        pass: ok,
        witness: (!ok).then(|| format!("r(S)={r_all} |E|={} r(S(W))={r_sw} |E2|={meeting}", g.edge_count())),
        detail: Some(format!("r(S)={r_all} r(S(W))={r_sw}")),
        elapsed_ms: started.elapsed().as_millis() as u64,
    });

    if m.ground().len() <= oracle::AXIOM_GROUND_LIMIT {
        verdicts.push(oracle::check_rank_axioms(
            |x| m.rank(x).expect("subset of ground"),
            m.ground(),
            &instance,
        )?);
    } else {
        skipped.push(format!(
            "rank-axioms (ground {} > {})",
            m.ground().len(),
            oracle::AXIOM_GROUND_LIMIT
        ));
    }

    if w.is_empty() {
        if m.ground().len() <= SELF_DUAL_EXHAUSTIVE_LIMIT {
            let started = std::time::Instant::now();
            let report = self_dual_report(&m, SelfDualMode::default())?;
            verdicts.push(Verdict {
                check: "self-dual".to_string(),
                instance: instance.clone(),
                pass: report.is_self_dual(),
                witness: report.counterexample.as_ref().map(|b| {
                    let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                    format!("basis {{{}}} has a dependent complement", parts.join(","))
                }),
                detail: Some(format!("{} bases, {} complements are bases", report.bases, report.complements_are_bases)),
                elapsed_ms: started.elapsed().as_millis() as u64,
            });
        } else {
            skipped.push(format!(
                "self-dual (ground {} > {})",
                m.ground().len(),
                SELF_DUAL_EXHAUSTIVE_LIMIT
            ));
        }
    }

    let masks = oracle::tm_bases_by_rank(&m)?;
    if masks.len() <= EXCHANGE_BASIS_LIMIT {
        let bases: Vec<Vec<GroundElement>> = masks
            .iter()
            .map(|&mask| {
                m.ground()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, x)| *x)
                    .collect()
            })
            .collect();
        verdicts.push(oracle::check_basis_exchange(&bases, &instance)?);
    } else {
        skipped.push(format!("basis-exchange ({} bases > {})", masks.len(), EXCHANGE_BASIS_LIMIT));
    }
    Ok((verdicts, skipped))
}
