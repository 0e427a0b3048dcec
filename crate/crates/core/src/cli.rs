//! The `ocpoly` command line.
//!
//! [`run`] does all the work and returns the exit code, writing to the
//! given streams, so the binary is a thin wrapper and tests can drive every
//! subcommand in-process.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | an invariant was violated |
//! | 2 | unreadable or malformed input |
//! | 3 | the cover relation has a cycle |
//! | 4 | input exceeds a size guard |
//! | 5 | invalid configuration or arguments |

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::harness::{self, Density, Mutation, Outcome, Property, SuiteConfig, SuiteReport};
use crate::oracle::DEFAULT_VERTEX_GUARD;
use crate::par::Exec;
use crate::polytope::{
    check_equivalence, enumerate_omega, enumerate_psi, omega_to_psi, psi_to_omega, skeleton,
    EquivalenceReport, Kind,
};
use crate::poset::text::{parse_poset, PosetFile, TextError};
use crate::poset::{ElementSet, LINEAR_EXTENSION_MAX_D};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CYCLE: i32 = 3;
pub const EXIT_SIZE: i32 = 4;
pub const EXIT_CONFIG: i32 = 5;

/// Most vertices a subcommand will build a skeleton for.
pub const CLI_VERTEX_GUARD: usize = 1 << 14;

#[derive(Debug, Parser)]
#[command(
    name = "ocpoly",
    version,
    about = "Order and chain polytopes of finite posets"
)]
pub struct Cli {
    /// Output format. Defaults to text, or json for `export` and `suite`.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge and chain counts of both polytopes.
    Stats(InputArgs),
    /// The edge correspondence table, verified in both directions.
    Bijection(InputArgs),
    /// Equivalence report for the two polytopes.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Also compare against the geometric edge test and the volume identity.
        #[arg(long)]
        oracle: bool,
    },
    /// Write the 1-skeleton of one polytope.
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "order")]
        kind: KindArg,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the property suite over exhaustive and random posets.
    Suite(SuiteArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Poset file; `-` reads stdin.
    #[arg(required_unless_present = "poset", conflicts_with = "poset")]
    pub file: Option<PathBuf>,
    /// Inline poset text, with `;` standing for a line break.
    #[arg(long)]
    pub poset: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Order,
    Chain,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Order => Kind::Order,
            KindArg::Chain => Kind::Chain,
        }
    }
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// JSON config file; flags given alongside override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub exhaustive_max_d: Option<usize>,
    #[arg(long)]
    pub random_trials: Option<usize>,
    #[arg(long)]
    pub d_min: Option<usize>,
    #[arg(long)]
    pub d_max: Option<usize>,
    #[arg(long)]
    pub oracle_max_d: Option<usize>,
    /// Relation probability for random posets, e.g. `1/2`.
    #[arg(long)]
    pub density: Option<Density>,
    #[arg(long, value_enum)]
    pub mutation: Option<MutationArg>,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutationArg {
    ChainEdgeIgnoresConnectivity,
    XDetectionBlind,
}

impl From<MutationArg> for Mutation {
    fn from(m: MutationArg) -> Mutation {
        match m {
            MutationArg::ChainEdgeIgnoresConnectivity => Mutation::ChainEdgeIgnoresConnectivity,
            MutationArg::XDetectionBlind => Mutation::XDetectionBlind,
        }
    }
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Cycle(..) => EXIT_CYCLE,
            Error::Size { .. } => EXIT_SIZE,
            Error::Index { .. } | Error::SelfCover(_) => EXIT_PARSE,
            _ => EXIT_VIOLATION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TextError> for Failure {
    fn from(e: TextError) -> Failure {
        match e {
            TextError::Syntax { .. } => Failure::new(EXIT_PARSE, e.to_string()),
            TextError::Poset(inner) => inner.into(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors get the config code; --help and --version succeed
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_CONFIG;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut buf = String::new();
    let result = dispatch(&cli, &mut buf, err);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut String, err: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    let text_or_json = |default| match format.unwrap_or(default) {
        Format::Dot => Err(Failure::new(
            EXIT_CONFIG,
            "dot output is only available for export",
        )),
        f => Ok(f),
    };
    match &cli.command {
        Command::Stats(input) => cmd_stats(&load(input)?, text_or_json(Format::Text)?, out),
        Command::Bijection(input) => cmd_bijection(&load(input)?, text_or_json(Format::Text)?, out),
        Command::Check { input, oracle } => {
            cmd_check(&load(input)?, *oracle, text_or_json(Format::Text)?, out)
        }
        Command::Export {
            input,
            kind,
            output,
        } => {
            let format = match format.unwrap_or(Format::Json) {
                Format::Text => {
                    return Err(Failure::new(EXIT_CONFIG, "export writes json or dot"));
                }
                f => f,
            };
            let file = load(input)?;
            let mut doc = String::new();
            let code = cmd_export(&file, (*kind).into(), format, &mut doc)?;
            emit(output.as_deref(), doc, out)?;
            Ok(code)
        }
        Command::Suite(args) => {
            let cfg = suite_config(args)?;
            let exec = if args.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            };
            let report = harness::run_property_suite_with(&cfg, exec)
                .map_err(|m| Failure::new(EXIT_CONFIG, m))?;
            let _ = writeln!(
                err,
                "suite: {} posets in {:.2?}",
                report.stats.posets, report.elapsed
            );
            let mut doc = String::new();
            match text_or_json(Format::Json)? {
                Format::Json => {
                    doc.push_str(&report.to_json());
                    doc.push('\n');
                }
                _ => write_suite_text(&report, &mut doc),
            }
            emit(args.output.as_deref(), doc, out)?;
            Ok(if report.all_passed {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn emit(path: Option<&Path>, doc: String, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, doc).map_err(|e| {
            Failure::new(EXIT_CONFIG, format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            out.push_str(&doc);
            Ok(())
        }
    }
}

fn load(input: &InputArgs) -> Result<PosetFile, Failure> {
    let text = match (&input.poset, &input.file) {
        (Some(inline), _) => inline.replace(';', "\n"),
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read stdin: {e}")))?;
            s
        }
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| {
            Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display()))
        })?,
        (None, None) => return Err(Failure::new(EXIT_CONFIG, "no poset given")),
    };
    Ok(parse_poset(&text)?)
}

/// Refuses posets whose polytopes have too many vertices for pairwise work.
fn guard_vertices(file: &PosetFile, limit: usize) -> Result<usize, Failure> {
    file.poset.count_ideals_capped(limit).ok_or_else(|| {
        Failure::new(
            EXIT_SIZE,
            format!("the polytopes have more than {limit} vertices; use a smaller poset"),
        )
    })
}

fn set_label(file: &PosetFile, s: ElementSet) -> String {
    if s.is_empty() {
        return "∅".to_owned();
    }
    let parts: Vec<String> = s.iter().map(|i| file.label(i)).collect();
    format!("{{{}}}", parts.join(","))
}

fn json_line<T: Serialize>(value: &T, out: &mut String) {
    out.push_str(&serde_json::to_string_pretty(value).expect("output serializes"));
    out.push('\n');
}

#[derive(Serialize)]
struct Stats {
    d: usize,
    ideals: usize,
    antichains: usize,
    edges_order: usize,
    edges_chain: usize,
    linear_extensions: u64,
    maximal_chains: usize,
    x_free: bool,
}

fn cmd_stats(file: &PosetFile, format: Format, out: &mut String) -> CmdResult {
    let p = &file.poset;
    if p.len() > LINEAR_EXTENSION_MAX_D {
        return Err(Failure::new(
            EXIT_SIZE,
            format!(
                "stats counts linear extensions, which needs d <= {LINEAR_EXTENSION_MAX_D} (got {})",
                p.len()
            ),
        ));
    }
    guard_vertices(file, CLI_VERTEX_GUARD)?;
    let order = skeleton(p, Kind::Order);
    let chain = skeleton(p, Kind::Chain);
    let stats = Stats {
        d: p.len(),
        ideals: order.vertex_count(),
        antichains: chain.vertex_count(),
        edges_order: order.edge_count(),
        edges_chain: chain.edge_count(),
        linear_extensions: p.count_linear_extensions()?,
        maximal_chains: p.maximal_chains().len(),
        x_free: p.find_x_subposet().is_none(),
    };
    match format {
        Format::Json => json_line(&stats, out),
        _ => {
            let rows = [
                ("d", stats.d.to_string()),
                ("ideals", stats.ideals.to_string()),
                ("antichains", stats.antichains.to_string()),
                ("edges (order)", stats.edges_order.to_string()),
                ("edges (chain)", stats.edges_chain.to_string()),
                ("linear extensions", stats.linear_extensions.to_string()),
                ("maximal chains", stats.maximal_chains.to_string()),
                ("x_free", stats.x_free.to_string()),
            ];
            for (key, value) in rows {
                let _ = writeln!(out, "{key:<18} {value}");
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BijectionRow {
    lower: Vec<usize>,
    upper: Vec<usize>,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize)]
struct BijectionDoc {
    d: usize,
    omega: usize,
    psi: usize,
    round_trip: bool,
    rows: Vec<BijectionRow>,
    problems: Vec<String>,
}

fn cmd_bijection(file: &PosetFile, format: Format, out: &mut String) -> CmdResult {
    let p = &file.poset;
    guard_vertices(file, CLI_VERTEX_GUARD)?;
    let omega = enumerate_omega(p, Exec::default());
    let psi = enumerate_psi(p, Exec::default());
    let mut problems = Vec::new();
    let mut rows = Vec::with_capacity(omega.len());
    let mut image = Vec::with_capacity(omega.len());
    for &pair in &omega {
        let target = omega_to_psi(p, pair)?;
        match psi_to_omega(p, target) {
            Ok(back) if back == pair => {}
            Ok(back) => problems.push(format!(
                "({}, {}) maps back to ({}, {})",
                set_label(file, pair.lower),
                set_label(file, pair.upper),
                set_label(file, back.lower),
                set_label(file, back.upper)
            )),
            Err(e) => problems.push(e.to_string()),
        }
        image.push(target);
        rows.push((pair, target));
    }
    image.sort_unstable();
    if image.windows(2).any(|w| w[0] == w[1]) {
        problems.push("the forward map is not injective".to_owned());
    }
    if image != psi {
        problems.push(format!(
            "the image has {} pairs but the chain polytope has {} edges",
            image.len(),
            psi.len()
        ));
    }
    let ok = problems.is_empty();
    match format {
        Format::Json => {
            let doc = BijectionDoc {
                d: p.len(),
                omega: omega.len(),
                psi: psi.len(),
                round_trip: ok,
                rows: rows
                    .iter()
                    .map(|(w, s)| BijectionRow {
                        lower: w.lower.to_vec(),
                        upper: w.upper.to_vec(),
                        top: s.top.to_vec(),
                        bottom: s.bottom.to_vec(),
                    })
                    .collect(),
                problems,
            };
            json_line(&doc, out);
        }
        _ => {
            for (w, s) in &rows {
                let _ = writeln!(
                    out,
                    "({}, {}) ↦ ({}, {})",
                    set_label(file, w.lower),
                    set_label(file, w.upper),
                    set_label(file, s.top),
                    set_label(file, s.bottom)
                );
            }
            let _ = writeln!(
                out,
                "{} rows; order edges {}, chain edges {}; round trip {}",
                rows.len(),
                omega.len(),
                psi.len(),
                if ok { "ok" } else { "FAILED" }
            );
            for problem in &problems {
                let _ = writeln!(out, "problem: {problem}");
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

#[derive(Serialize)]
struct CheckLine {
    property: &'static str,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct CheckDoc {
    ok: bool,
    oracle: bool,
    report: EquivalenceReport,
    violations: Vec<String>,
    checks: Vec<CheckLine>,
}

fn cmd_check(file: &PosetFile, oracle: bool, format: Format, out: &mut String) -> CmdResult {
    let p = &file.poset;
    if oracle && p.len() > harness::ORACLE_MAX_D {
        return Err(Failure::new(
            EXIT_SIZE,
            format!(
                "--oracle supports d <= {} (got {}); run without --oracle for the combinatorial report",
                harness::ORACLE_MAX_D,
                p.len()
            ),
        ));
    }
    let vertices = guard_vertices(file, CLI_VERTEX_GUARD)?;
    let report = check_equivalence(p, vertices <= DEFAULT_VERTEX_GUARD)?;
    let violations = report.violations();
    let checks: Vec<CheckLine> = harness::check_poset(
        p,
        harness::CheckOptions {
            oracle,
            mutation: None,
        },
    )
    .into_iter()
    .map(|(prop, outcome)| check_line(prop, outcome))
    .collect();
    let ok = violations.is_empty() && checks.iter().all(|c| c.outcome != "fail");
    match format {
        Format::Json => json_line(
            &CheckDoc {
                ok,
                oracle,
                report,
                violations,
                checks,
            },
            out,
        ),
        _ => write_check_text(file, &report, &violations, &checks, out),
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn check_line(prop: Property, outcome: Outcome) -> CheckLine {
    let (outcome, detail) = match outcome {
        Outcome::Pass => ("pass", None),
        Outcome::Skip => ("skip", None),
        Outcome::Fail(detail) => ("fail", Some(detail)),
    };
    CheckLine {
        property: prop.name(),
        outcome,
        detail,
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_check_text(
    file: &PosetFile,
    r: &EquivalenceReport,
    violations: &[String],
    checks: &[CheckLine],
    out: &mut String,
) {
    let _ = writeln!(out, "d                  {}", r.d);
    let _ = writeln!(out, "x_free             {}", r.x_free);
    if let Some(w) = &r.witness {
        let l = |i| file.label(i);
        let _ = writeln!(
            out,
            "witness            {}, {} < {} < {}, {}",
            l(w.a),
            l(w.b),
            l(w.c),
            l(w.g),
            l(w.h)
        );
    }
    let _ = writeln!(out, "vertices           {}", r.vertex_count);
    let _ = writeln!(
        out,
        "edges              order {}, chain {}",
        r.edge_count_order, r.edge_count_chain
    );
    let _ = writeln!(out, "degrees (order)    {}", join(&r.degseq_order));
    let _ = writeln!(out, "degrees (chain)    {}", join(&r.degseq_chain));
    match (r.facet_count_order, r.facet_count_chain) {
        (Some(fo), Some(fc)) => {
            let _ = writeln!(out, "facets             order {fo}, chain {fc}");
        }
        _ => {
            let _ = writeln!(out, "facets             not computed");
        }
    }
    let _ = writeln!(
        out,
        "equivalent         {}",
        if r.unimodularly_equivalent() {
            "yes"
        } else {
            "no"
        }
    );
    let count = |o| checks.iter().filter(|c| c.outcome == o).count();
    let _ = writeln!(
        out,
        "checks             {} passed, {} failed, {} skipped",
        count("pass"),
        count("fail"),
        count("skip")
    );
    for v in violations {
        let _ = writeln!(out, "violation: {v}");
    }
    for c in checks.iter().filter(|c| c.outcome == "fail") {
        let _ = writeln!(
            out,
            "FAIL {}: {}",
            c.property,
            c.detail.as_deref().unwrap_or_default()
        );
    }
}

fn cmd_export(file: &PosetFile, kind: Kind, format: Format, out: &mut String) -> CmdResult {
    guard_vertices(file, CLI_VERTEX_GUARD)?;
    let g = skeleton(&file.poset, kind);
    match format {
        Format::Dot => out.push_str(&g.to_dot()),
        _ => {
            out.push_str(&g.to_json());
            out.push('\n');
        }
    }
    Ok(EXIT_OK)
}

fn suite_config(args: &SuiteArgs) -> Result<SuiteConfig, Failure> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_CONFIG, format!("cannot read {}: {e}", path.display()))
            })?;
            serde_json::from_str(&text).map_err(|e| {
                Failure::new(
                    EXIT_CONFIG,
                    format!("invalid config {}: {e}", path.display()),
                )
            })?
        }
        None => SuiteConfig::default(),
    };
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.exhaustive_max_d {
        cfg.exhaustive_max_d = v;
    }
    if let Some(v) = args.random_trials {
        cfg.random_trials = v;
    }
    if let Some(v) = args.d_min {
        cfg.random_d_range.0 = v;
    }
    if let Some(v) = args.d_max {
        cfg.random_d_range.1 = v;
    }
    if let Some(v) = args.oracle_max_d {
        cfg.oracle_max_d = v;
    }
    if let Some(v) = args.density {
        cfg.edge_density = v;
    }
    if let Some(m) = args.mutation {
        cfg.mutation = Some(m.into());
    }
    cfg.validate().map_err(|m| Failure::new(EXIT_CONFIG, m))?;
    Ok(cfg)
}

fn write_suite_text(report: &SuiteReport, out: &mut String) {
    for r in &report.properties {
        let _ = writeln!(
            out,
            "{:<34} {:>7} passed {:>4} failed {:>7} skipped",
            r.name, r.passed, r.failed, r.skipped
        );
        if let Some(cx) = &r.counterexample {
            let _ = writeln!(out, "  counterexample ({}):", cx.detail);
            for line in cx.poset.lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
    }
    let _ = writeln!(
        out,
        "{} posets, {}",
        report.stats.posets,
        if report.all_passed {
            "all properties hold"
        } else {
            "FAILURES"
        }
    );
}
