use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use homrec::coloring::{hom_sets, hom_signature, Coloring, EdgeSet, HomSet};
use homrec::critical::{find_critical_cycles, find_critical_pairs, CriticalCycleWitness};
use homrec::dot::to_dot;
use homrec::fixtures::{Fixture, FixtureId};
use homrec::reconstruct::{
    in_r, r_value_with_budget, RMembership, RValueReport, SearchBudget, SearchMode,
};
use homrec::verify::{self, Suite, VerifyConfig, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "homrec",
    version,
    about = "Reconstruct 2-colorings of complete graphs from their homogeneous sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named fixture as JSON.
    Generate {
        /// e.g. partition(6), fig-two-cycles, alpha(12), random(6,0.5,42)
        fixture: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report homogeneous sets, critical pairs and cycles, and r.
    Analyze {
        /// Coloring JSON file, `-` for stdin, or a fixture name.
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Largest vertex count searched exhaustively (at most 8).
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Cap on examined difference sets.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an invariant suite; exits 1 on the first violation found.
    Verify {
        /// oracle, claws, parity, partition-theorem, r-sweep, connectivity, alpha or theorem63
        suite: String,
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Enumerate every coloring on n vertices instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        /// Skip difference sets with more pairs than this.
        #[arg(long)]
        max_diff: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a coloring as Graphviz DOT.
    ExportDot {
        /// Coloring JSON file, `-` for stdin, or a fixture name.
        input: String,
        /// Pairs to draw bold. `auto` uses the difference of a pair fixture.
        #[arg(long, value_enum, default_value_t = Highlight::Auto)]
        highlight: Highlight,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Structural,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Highlight {
    Auto,
    None,
    Difference,
    Critical,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn init_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("HOMREC_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("HOMREC_THREADS must be a number, got {raw:?}"))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Generate { fixture, out } => {
            let id: FixtureId = fixture.parse()?;
            let doc = fixture_document(&id, &id.build()?)?;
            emit(
                out.as_deref(),
                &(serde_json::to_string_pretty(&doc)? + "\n"),
            )?;
            Ok(true)
        }
        Command::Analyze {
            input,
            mode,
            max_n,
            budget,
            json,
            out,
        } => {
            let (phi, _) = load(&input)?;
            let budget = SearchBudget {
                max_n,
                max_steps: budget,
            };
            let mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Structural => SearchMode::StructuralOnly,
            };
            let report = analyze(&phi, mode, &budget)?;
            let text = if json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                report.table()
            };
            emit(out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            n,
            exhaustive,
            samples,
            seed,
            nmax,
            max_diff,
            json,
            out,
        } => {
            let suite: Suite = suite.parse()?;
            let config = VerifyConfig {
                n,
                exhaustive,
                samples,
                seed,
                nmax,
                max_diff,
            };
            let report = verify::run(suite, &config)?;
            let text = if json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else {
                report.summary()
            };
            emit(out.as_deref(), &text)?;
            Ok(report.passed)
        }
        Command::ExportDot {
            input,
            highlight,
            out,
        } => {
            let (phi, diff) = load(&input)?;
            let marked = match highlight {
                Highlight::None => None,
                Highlight::Auto => diff,
                Highlight::Difference => {
                    Some(diff.context("input is a single coloring; it has no difference set")?)
                }
                Highlight::Critical => Some(critical_edges(&phi)?),
            };
            emit(out.as_deref(), &to_dot(&phi, marked.as_ref()))?;
            Ok(true)
        }
    }
}

fn fixture_document(id: &FixtureId, fixture: &Fixture) -> anyhow::Result<Value> {
    Ok(match fixture {
        Fixture::Single(phi) => json!({
            "schema_version": SCHEMA_VERSION,
            "fixture": id.to_string(),
            "coloring": phi,
        }),
        Fixture::Pair(phi, psi) => json!({
            "schema_version": SCHEMA_VERSION,
            "fixture": id.to_string(),
            "phi": phi,
            "psi": psi,
            "sum": phi.boolean_sum(psi)?.ones_set(),
        }),
    })
}

/// Reads a coloring from a file, stdin or a fixture name. Pair documents
/// yield their first coloring along with the difference set.
fn load(input: &str) -> anyhow::Result<(Coloring, Option<EdgeSet>)> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(input).exists() {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        let id: FixtureId = input
            .parse()
            .with_context(|| format!("{input} is neither a file nor a fixture"))?;
        return Ok(match id.build()? {
            Fixture::Single(phi) => (phi, None),
            Fixture::Pair(phi, psi) => {
                let d = phi.boolean_sum(&psi)?.ones_set();
                (phi, Some(d))
            }
        });
    };
    parse_document(&text)
}

fn parse_document(text: &str) -> anyhow::Result<(Coloring, Option<EdgeSet>)> {
    let value: Value = serde_json::from_str(text).context("input is not JSON")?;
    if let Some(v) = value.get("schema_version") {
        if v.as_u64() != Some(SCHEMA_VERSION as u64) {
            bail!("unsupported schema_version {v}");
        }
    }
    let coloring = |v: &Value| -> anyhow::Result<Coloring> {
        Coloring::deserialize(v).context("malformed coloring")
    };
    if let Some(c) = value.get("coloring") {
        return Ok((coloring(c)?, None));
    }
    if let (Some(p), Some(q)) = (value.get("phi"), value.get("psi")) {
        let (phi, psi) = (coloring(p)?, coloring(q)?);
        let d = phi.boolean_sum(&psi)?.ones_set();
        return Ok((phi, Some(d)));
    }
    Ok((coloring(&value)?, None))
}

fn critical_edges(phi: &Coloring) -> anyhow::Result<EdgeSet> {
    let mut set = EdgeSet::empty(phi.n());
    for (x, y) in find_critical_pairs(phi)? {
        set.insert(x, y)?;
    }
    if phi.n() >= 5 {
        for w in find_critical_cycles(phi)? {
            for (x, y) in w.edges.iter() {
                set.insert(x, y)?;
            }
        }
    }
    Ok(set)
}

#[derive(Serialize)]
struct HomSummary {
    hom0_triples: usize,
    hom1_triples: usize,
    maximal_sets: Vec<HomSet>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema_version: u32,
    n: usize,
    coloring: Coloring,
    hom: HomSummary,
    critical_pairs: Vec<[usize; 2]>,
    critical_cycles: Vec<CriticalCycleWitness>,
    membership: RMembership,
    r_value: RValueReport,
}

fn analyze(
    phi: &Coloring,
    mode: SearchMode,
    budget: &SearchBudget,
) -> anyhow::Result<AnalyzeReport> {
    if phi.n() < 3 {
        bail!("analysis needs at least 3 vertices, got {}", phi.n());
    }
    let sig = hom_signature(phi)?;
    let hom = sig.homogeneous();
    let critical_cycles = if phi.n() >= 5 {
        find_critical_cycles(phi)?
    } else {
        Vec::new()
    };
    Ok(AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        n: phi.n(),
        coloring: phi.clone(),
        hom: HomSummary {
            hom0_triples: hom.iter().filter(|(_, c)| *c == 0).count(),
            hom1_triples: hom.iter().filter(|(_, c)| *c == 1).count(),
            maximal_sets: hom_sets(phi, 3)?,
        },
        critical_pairs: find_critical_pairs(phi)?
            .into_iter()
            .map(|(x, y)| [x, y])
            .collect(),
        critical_cycles,
        membership: in_r(phi, budget)?,
        r_value: r_value_with_budget(phi, mode, budget)?,
    })
}

impl AnalyzeReport {
    fn table(&self) -> String {
        let fmt_pairs = |pairs: &mut dyn Iterator<Item = (usize, usize)>| {
            pairs
                .map(|(x, y)| format!("{x}-{y}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut rows: Vec<(&str, String)> = vec![
            ("vertices", self.n.to_string()),
            ("1-pairs", self.coloring.count_ones().to_string()),
            (
                "hom triples (0/1)",
                format!("{}/{}", self.hom.hom0_triples, self.hom.hom1_triples),
            ),
            ("maximal hom sets", self.hom.maximal_sets.len().to_string()),
            ("critical pairs", self.critical_pairs.len().to_string()),
        ];
        if !self.critical_pairs.is_empty() {
            rows.push((
                "",
                fmt_pairs(&mut self.critical_pairs.iter().map(|p| (p[0], p[1]))),
            ));
        }
        rows.push(("critical cycles", self.critical_cycles.len().to_string()));
        for w in &self.critical_cycles {
            rows.push(("", format!("{:?} {:?}", w.quad, w.orientation())));
        }
        rows.push(("verdict", format!("{:?}", self.membership.verdict)));
        let r = match self.r_value.r.finite() {
            Some(r) => r.to_string(),
            None => format!("{:?}", self.r_value.r),
        };
        rows.push((
            "r",
            format!(
                "{r} ({:?}, {})",
                self.r_value.mode,
                if self.r_value.complete {
                    "complete"
                } else {
                    "incomplete"
                }
            ),
        ));
        for w in &self.r_value.witnesses {
            rows.push(("", fmt_pairs(&mut w.difference.iter())));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
