//! Front end for the `bbk` binary: load an edge list, pick the initiating
//! side and the engine, stream or count the maximal bicliques and write a
//! flat JSON stats report.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use bbk::oracle::{brute_force_maximal_bicliques, clique_extended_enumerate};
use bbk::{
    bidegeneracy_order, enumerate, load_edge_list, BicliqueSink, BidegeneracyOrder, BipartiteGraph, CapacityError,
    CountSink, EnumerateOptions, GraphStats, LoadError, LoadOptions, LoadedGraph, RunStatistics, SideTag, VertexId,
};
use clap::{ArgAction, Parser, ValueEnum};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideChoice {
    Left,
    Right,
    /// The side with fewer vertices (left on ties).
    Smaller,
    /// The side whose bidegeneracy order has the smaller mean residual.
    MeanBidegen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Bbk,
    /// Bron-Kerbosch on the clique-extended graph.
    Extended,
    /// Closed-pair subset sweep, at most 20 vertices on the initiating side.
    Brute,
}

impl EngineChoice {
    pub fn name(self) -> &'static str {
        match self {
            EngineChoice::Bbk => "bbk",
            EngineChoice::Extended => "extended",
            EngineChoice::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    List,
    Count,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "bbk", version, about = "Enumerate the maximal bicliques of a bipartite edge list")]
pub struct RunConfig {
    /// Edge list: one `left right` pair per line, `%` or `#` comments.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = SideChoice::Smaller)]
    pub side: SideChoice,
    #[arg(long, value_enum, default_value_t = EngineChoice::Bbk)]
    pub engine: EngineChoice,
    /// Leave out the one-sided bicliques.
    #[arg(long = "no-trivial", action = ArgAction::SetFalse)]
    pub include_trivial: bool,
    #[arg(long, value_enum, default_value_t = OutputMode::List)]
    pub output_mode: OutputMode,
    /// Defaults to standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Sort lines before writing. Holds the whole output in memory.
    #[arg(long)]
    pub sort_output: bool,
    /// Write a JSON stats report here.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

impl RunConfig {
    /// A config for `input` with every other option at its default.
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            side: SideChoice::Smaller,
            engine: EngineChoice::Bbk,
            include_trivial: true,
            output_mode: OutputMode::List,
            output: None,
            sort_output: false,
            stats: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.sort_output && self.output_mode == OutputMode::Count {
            return Err(CliError::Usage("--sort-output cannot be combined with --output-mode count".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Load { path: PathBuf, source: LoadError },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Capacity(#[from] CapacityError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Capacity(_) => 2,
            _ => 1,
        }
    }
}

/// What a run produced, oriented so that the initiating side is `U`.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub engine: EngineChoice,
    pub side_used: SideTag,
    pub include_trivial: bool,
    /// Every biclique written or counted.
    pub biclique_count: u64,
    /// Call-tree counters; `None` for the brute-force engine.
    pub tree: Option<RunStatistics>,
    pub q_observed: usize,
    pub order: BidegeneracyOrder,
    pub degrees: GraphStats,
    pub u_count: usize,
    pub v_count: usize,
    pub edge_count: usize,
    pub duplicate_edges: usize,
    pub elapsed_ms: f64,
}

pub fn resolve_side(g: &BipartiteGraph, choice: SideChoice) -> SideTag {
    let smaller = if g.u_count() <= g.v_count() { SideTag::Left } else { SideTag::Right };
    match choice {
        SideChoice::Left => SideTag::Left,
        SideChoice::Right => SideTag::Right,
        SideChoice::Smaller => smaller,
        SideChoice::MeanBidegen => {
            let left = bidegeneracy_order(g, SideTag::Left).b_mean();
            let right = bidegeneracy_order(g, SideTag::Right).b_mean();
            match (left, right) {
                (Some(l), Some(r)) if l < r => SideTag::Left,
                (Some(l), Some(r)) if r < l => SideTag::Right,
                _ => smaller,
            }
        }
    }
}

/// `left labels<TAB>right labels`, each part space-separated in id order.
pub fn format_biclique(left: &[VertexId], right: &[VertexId], g: &BipartiteGraph) -> String {
    let mut line = String::new();
    push_labels(&mut line, left, g.u().labels());
    line.push('\t');
    push_labels(&mut line, right, g.v().labels());
    line
}

fn push_labels(line: &mut String, ids: &[VertexId], labels: &[String]) {
    for (i, &id) in ids.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        line.push_str(&labels[id as usize]);
    }
}

struct LineSink<'a, W: Write> {
    g: &'a BipartiteGraph,
    out: W,
    line: String,
    count: u64,
}

impl<W: Write> BicliqueSink for LineSink<'_, W> {
    type Error = io::Error;

    fn accept(&mut self, left: &[VertexId], right: &[VertexId]) -> io::Result<()> {
        self.line.clear();
        push_labels(&mut self.line, left, self.g.u().labels());
        self.line.push('\t');
        push_labels(&mut self.line, right, self.g.v().labels());
        self.line.push('\n');
        self.count += 1;
        self.out.write_all(self.line.as_bytes())
    }
}

struct CollectSink<'a> {
    g: &'a BipartiteGraph,
    lines: Vec<String>,
}

impl BicliqueSink for CollectSink<'_> {
    type Error = io::Error;

    fn accept(&mut self, left: &[VertexId], right: &[VertexId]) -> io::Result<()> {
        self.lines.push(format_biclique(left, right, self.g));
        Ok(())
    }
}

/// Loads `config.input` and runs on it, writing to `config.output` or
/// standard output.
pub fn run(config: &RunConfig) -> Result<RunReport, CliError> {
    config.validate()?;
    let file = File::open(&config.input).map_err(|source| CliError::File { path: config.input.clone(), source })?;
    let loaded = load_edge_list(BufReader::new(file), &LoadOptions::default())
        .map_err(|source| CliError::Load { path: config.input.clone(), source })?;

    let report = match &config.output {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::File { path: path.clone(), source })?;
            let mut out = BufWriter::new(file);
            let report = run_on_graph(&loaded, config, &mut out)?;
            out.flush()?;
            report
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let report = run_on_graph(&loaded, config, &mut out)?;
            out.flush()?;
            report
        }
    };

    if let Some(path) = &config.stats {
        std::fs::write(path, stats_json(&report)).map_err(|source| CliError::File { path: path.clone(), source })?;
    }
    Ok(report)
}

/// Runs the configured engine on an already loaded graph. Ignores
/// `config.input`, `config.output` and `config.stats`.
pub fn run_on_graph(loaded: &LoadedGraph, config: &RunConfig, out: &mut dyn Write) -> Result<RunReport, CliError> {
    config.validate()?;
    let g = &loaded.graph;
    let start = Instant::now();
    let side = resolve_side(g, config.side);
    let order = bidegeneracy_order(g, side);

    let (biclique_count, tree, q_observed) = match config.engine {
        EngineChoice::Bbk => run_bbk(g, &order, config, out)?,
        EngineChoice::Extended | EngineChoice::Brute => run_oracle(g, side, config, out)?,
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;

    let mut degrees = g.stats();
    if !g.is_u(side) {
        std::mem::swap(&mut degrees.d_u, &mut degrees.d_v);
        std::mem::swap(&mut degrees.d2_u, &mut degrees.d2_v);
    }
    let (u_count, v_count) = if g.is_u(side) { (g.u_count(), g.v_count()) } else { (g.v_count(), g.u_count()) };
    Ok(RunReport {
        engine: config.engine,
        side_used: side,
        include_trivial: config.include_trivial,
        biclique_count,
        tree,
        q_observed,
        order,
        degrees,
        u_count,
        v_count,
        edge_count: g.edge_count(),
        duplicate_edges: loaded.duplicate_edges,
        elapsed_ms,
    })
}

type EngineOutcome = (u64, Option<RunStatistics>, usize);

fn run_bbk(
    g: &BipartiteGraph,
    order: &BidegeneracyOrder,
    config: &RunConfig,
    out: &mut dyn Write,
) -> Result<EngineOutcome, CliError> {
    let options = EnumerateOptions { include_trivial: config.include_trivial, check_invariants: false };
    let (count, stats) = match (config.output_mode, config.sort_output) {
        (OutputMode::Count, _) => {
            let mut sink = CountSink::default();
            let Ok(stats) = enumerate(g, order, &mut sink, options);
            writeln!(out, "{}", sink.count)?;
            (sink.count, stats)
        }
        (OutputMode::List, false) => {
            let mut sink = LineSink { g, out: &mut *out, line: String::new(), count: 0 };
            let stats = enumerate(g, order, &mut sink, options)?;
            (sink.count, stats)
        }
        (OutputMode::List, true) => {
            let mut sink = CollectSink { g, lines: Vec::new() };
            let stats = enumerate(g, order, &mut sink, options)?;
            write_sorted(out, sink.lines)?;
            let count = stats.total_emitted();
            (count, stats)
        }
    };
    let q = stats.q_observed;
    Ok((count, Some(stats), q))
}

fn run_oracle(
    g: &BipartiteGraph,
    side: SideTag,
    config: &RunConfig,
    out: &mut dyn Write,
) -> Result<EngineOutcome, CliError> {
    let (set, tree) = match config.engine {
        EngineChoice::Extended => {
            let (set, stats) = clique_extended_enumerate(g)?;
            (set, Some(stats))
        }
        _ if g.is_u(side) => (brute_force_maximal_bicliques(g, true)?, None),
        _ => {
            let set = brute_force_maximal_bicliques(&g.swap_sides(), true)?;
            (set.into_iter().map(|b| b.swapped()).collect(), None)
        }
    };
    let kept: Vec<_> = set.into_iter().filter(|b| config.include_trivial || !b.is_trivial()).collect();
    let q = kept.iter().filter(|b| !b.is_trivial()).map(|b| b.len()).max().unwrap_or(0);
    match config.output_mode {
        OutputMode::Count => writeln!(out, "{}", kept.len())?,
        OutputMode::List => {
            let lines: Vec<String> = kept.iter().map(|b| format_biclique(&b.left, &b.right, g)).collect();
            if config.sort_output {
                write_sorted(out, lines)?;
            } else {
                for line in lines {
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok((kept.len() as u64, tree, q))
}

fn write_sorted(out: &mut dyn Write, mut lines: Vec<String>) -> io::Result<()> {
    lines.sort_unstable();
    for line in &lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Formats `x` with at least `digits` significant digits.
fn significant(x: f64, digits: i32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.1}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(1) as usize;
    format!("{x:.decimals$}")
}

/// One flat JSON object. `null` marks values the engine does not track.
pub fn stats_json(report: &RunReport) -> String {
    let tree = report.tree.as_ref();
    let opt = |v: Option<u64>| v.map_or_else(|| "null".to_owned(), |v| v.to_string());
    let side = match report.side_used {
        SideTag::Left => "left",
        SideTag::Right => "right",
    };
    let fields: Vec<(&str, String)> = vec![
        ("biclique_count", report.biclique_count.to_string()),
        ("leaf_count", opt(tree.map(|t| t.leaf_count))),
        ("internal_count", opt(tree.map(|t| t.internal_count))),
        ("ratio_r", tree.and_then(RunStatistics::ratio_r).map_or_else(|| "null".to_owned(), |r| significant(r, 6))),
        ("q_observed", report.q_observed.to_string()),
        ("b_max", report.order.b_max().to_string()),
        ("b_mean", report.order.b_mean().map_or_else(|| "null".to_owned(), |m| significant(m, 6))),
        ("d_U", report.degrees.d_u.to_string()),
        ("d_V", report.degrees.d_v.to_string()),
        ("d2_U", report.degrees.d2_u.to_string()),
        ("d2_V", report.degrees.d2_v.to_string()),
        ("elapsed_ms", format!("{:.3}", report.elapsed_ms)),
        ("side_used", format!("\"{side}\"")),
        ("engine", format!("\"{}\"", report.engine.name())),
        ("include_trivial", report.include_trivial.to_string()),
        ("u_count", report.u_count.to_string()),
        ("v_count", report.v_count.to_string()),
        ("edge_count", report.edge_count.to_string()),
        ("duplicate_edges", report.duplicate_edges.to_string()),
        (
            "emitted_trivial",
            opt(tree.filter(|_| report.engine == EngineChoice::Bbk).map(|t| u64::from(t.emitted_trivial))),
        ),
        (
            "max_root_candidates",
            opt(tree.filter(|_| report.engine == EngineChoice::Bbk).map(|t| t.max_root_candidates as u64)),
        ),
    ];
    let mut doc = String::from("{\n");
    for (i, (key, value)) in fields.iter().enumerate() {
        let sep = if i + 1 < fields.len() { "," } else { "" };
        let _ = writeln!(doc, "  \"{key}\": {value}{sep}");
    }
    doc.push_str("}\n");
    doc
}
