use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hermsym::canon::{all_graphs, enumerate_tournaments};
use hermsym::conditions::{line_graph_bounds, tournament_feasibility, DegreeMultiset};
use hermsym::error::{ArithmeticError, SearchError, WalkError};
use hermsym::format::{parse_any, to_digraph6, to_dot, to_graph6, Parsed};
use hermsym::report::{decimal_strings, json_line, ratio_string, SCHEMA_VERSION};
use hermsym::search::{
    find_ss_orientations, nonbipartite_graphs, read_graph6_catalog, survey_catalog, tournament_survey_from_catalog, SearchOptions,
    SearchStatus, SurveyReport, DEFAULT_EDGE_CAP,
};
use hermsym::spectra::{hermitian_spectrum, PiFraction};
use hermsym::walks::{closed_walk_set_value, verify_odd_walk_lemma, WalkCaps};
use hermsym::{exact_hermitian, Digraph};

#[derive(Parser, Debug)]
#[command(name = "hermsym", version, about = "Spectral symmetry of Hermitian adjacency matrices at angle pi/3")]
struct Cli {
    /// Reserved; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues of H_theta, plus the exact characteristic polynomial at pi/3.
    Spectrum {
        input: String,
        /// Angle as p/q, meaning p*pi/q.
        #[arg(long, default_value = "1/3", value_parser = parse_theta)]
        theta: PiFraction,
        /// Decide symmetry exactly instead of by eigenvalue pairing (pi/3 only).
        #[arg(long)]
        exact: bool,
        /// Pairing tolerance; defaults to 1e-9 * n * max|lambda|.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Exact symmetry verdict with the first nonzero odd trace as witness.
    CheckSym { input: String },
    /// Search all orientations of one graph or of every graph in a catalog.
    Search(SearchArgs),
    /// Build blowups, 1-sums and line graphs.
    #[command(subcommand)]
    Construct(Construct),
    /// Graphviz DOT text.
    ExportDot {
        input: String,
        #[arg(long, default_value = "D")]
        name: String,
    },
    /// Isomorphism classes of tournaments on n vertices, as digraph6.
    Tournaments {
        #[arg(long)]
        n: usize,
        /// Print one JSON summary instead of the tournaments.
        #[arg(long)]
        summary: bool,
    },
    /// Exact symmetry test over a digraph6 tournament catalog.
    TournamentSurvey {
        #[arg(long)]
        catalog: PathBuf,
        /// auto: feasible out-degree multisets; none: test everything; or a
        /// list such as "5^2,4^5,3^2;5^5,4^5".
        #[arg(long, default_value = "auto")]
        degree_filter: String,
        /// Also print one line per tournament.
        #[arg(long)]
        records: bool,
    },
    /// Out-degree arithmetic for symmetric tournaments.
    Feasibility {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Closed-walk values against traces, and walk values through one vertex.
    VerifyWalks {
        input: String,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, default_value_t = 7)]
        r_max: usize,
        #[arg(long, env = "HERMSYM_WALK_MAX_LENGTH", default_value_t = WalkCaps::default().max_length)]
        max_length: usize,
        #[arg(long, env = "HERMSYM_WALK_MAX_ORDER", default_value_t = WalkCaps::default().max_order)]
        max_order: usize,
    },
    /// Isomorphism classes of graphs on n vertices, as graph6.
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nonbipartite: bool,
        /// Drop graphs with an isolated vertex.
        #[arg(long)]
        no_isolated: bool,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// One graph: graph6, digraph6 (underlying graph), edge list, or a file holding one.
    #[arg(conflicts_with_all = ["catalog", "all_graphs"], required_unless_present_any = ["catalog", "all_graphs"])]
    input: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long, conflicts_with = "all_graphs")]
    catalog: Option<PathBuf>,
    /// Every non-bipartite graph on this many vertices without isolated vertices.
    #[arg(long)]
    all_graphs: Option<usize>,
    /// With --all-graphs, keep graphs that have isolated vertices.
    #[arg(long, requires = "all_graphs")]
    allow_isolated: bool,
    #[arg(long, env = "HERMSYM_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    filters: Switch,
    /// Report filter verdicts only.
    #[arg(long)]
    filters_only: bool,
    /// Enumerate bipartite graphs too instead of reporting them as trivially symmetric.
    #[arg(long)]
    enumerate_bipartite: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "HERMSYM_EDGE_CAP", default_value_t = DEFAULT_EDGE_CAP)]
    edge_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Replace every vertex by l copies.
    Blowup {
        input: String,
        #[arg(long)]
        l: usize,
    },
    /// Identify vertex v of the first digraph with vertex u of the second.
    OneSum {
        first: String,
        second: String,
        #[arg(long, value_parser = parse_pair)]
        at: (usize, usize),
        #[arg(long, value_enum, default_value_t = Switch::On)]
        require_odd_dominating: Switch,
    },
    /// Line graph of the underlying graph.
    Linegraph { input: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

fn parse_theta(s: &str) -> Result<PiFraction, String> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: u32 = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let q: u32 = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    PiFraction::new(p, q).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected v,u but got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad vertex {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad vertex {b:?}"))?;
    Ok((a, b))
}

/// `-` is stdin; an existing path is read; anything else is the object itself.
fn read_input(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    Ok(arg.to_string())
}

fn load(arg: &str) -> Result<Parsed> {
    let text = read_input(arg)?;
    parse_any(&text).with_context(|| format!("cannot parse input {:?}", short(arg)))
}

fn load_digraph(arg: &str) -> Result<Digraph> {
    load(arg).map(Parsed::into_digraph)
}

fn short(s: &str) -> String {
    let flat = s.replace('\n', " ");
    if flat.chars().count() > 40 {
        flat.chars().take(40).collect::<String>() + "..."
    } else {
        flat
    }
}

/// digraph6, falling back to an edge list on one line for multigraphs.
fn digraph_key(d: &Digraph) -> String {
    to_digraph6(d).unwrap_or_else(|_| {
        let arcs: Vec<String> = d.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
        format!("{}:{}", d.n(), arcs.join(","))
    })
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", json_line(value))?;
    Ok(())
}

fn cmd_spectrum(out: &mut dyn Write, input: &str, theta: PiFraction, exact: bool, tol: Option<f64>) -> Result<()> {
    if exact && !theta.is_third() {
        bail!("--exact is only available at theta = 1/3 (got {}/{})", theta.num, theta.den);
    }
    let d = load_digraph(input)?;
    let spectrum = hermitian_spectrum(&d, theta.radians())?;
    let tol = tol.unwrap_or_else(|| spectrum.default_tolerance());
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "spectrum",
        "input": digraph_key(&d),
        "theta": format!("{}/{}", theta.num, theta.den),
        "n": d.n(),
        "eigenvalues": spectrum.eigenvalues,
        "tolerance": tol,
        "symmetric_numeric": spectrum.is_symmetric(tol),
    });
    if theta.is_third() {
        let h = exact_hermitian(&d);
        let poly = h.char_poly()?;
        let traces = h.odd_power_traces()?;
        let symmetric = traces.iter().all(|&t| t == 0);
        report["char_poly"] = json!(poly);
        report["char_poly_text"] = json!(poly.to_string());
        report["odd_traces"] = json!(decimal_strings(traces));
        if exact {
            report["symmetric"] = json!(symmetric);
            report["exact"] = json!(true);
        }
    }
    if report.get("symmetric").is_none() {
        report["symmetric"] = report["symmetric_numeric"].clone();
        report["exact"] = json!(false);
    }
    emit(out, &report)
}

fn cmd_check_sym(out: &mut dyn Write, input: &str) -> Result<()> {
    let d = load_digraph(input)?;
    let witness = exact_hermitian(&d).first_nonzero_odd_trace()?;
    emit(
        out,
        &json!({
            "schema_version": SCHEMA_VERSION,
            "command": "check-sym",
            "input": digraph_key(&d),
            "n": d.n(),
            "arcs": d.arc_count(),
            "symmetric": witness.is_none(),
            "witness": witness.map(|(r, t)| json!({"r": r, "trace": t.to_string()})),
        }),
    )
}

fn cmd_search(out: &mut dyn Write, args: &SearchArgs) -> Result<()> {
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let opts = SearchOptions {
        filters: args.filters == Switch::On,
        skip_bipartite: !args.enumerate_bipartite,
        filters_only: args.filters_only,
        jobs: args.jobs,
        edge_cap: args.edge_cap,
    };
    let mut file;
    let out: &mut dyn Write = match &args.out {
        Some(p) => {
            file = BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?);
            &mut file
        }
        None => out,
    };
    let mut totals = (0usize, 0usize, 0usize);
    let mut internal = Vec::new();
    let mut write_report = |out: &mut dyn Write, r: SurveyReport| -> Result<()> {
        totals.0 += 1;
        if r.is_positive() {
            totals.1 += 1;
        }
        if r.status == SearchStatus::Error {
            totals.2 += 1;
            if r.internal_error {
                internal.push(r.graph.clone());
            }
        }
        writeln!(out, "{}", json_line(&r))?;
        Ok(())
    };
    if let Some(input) = &args.input {
        let g = load(input)?.into_graph();
        let r = find_ss_orientations(&g, &opts)?;
        write_report(out, r)?;
    } else if let Some(path) = &args.catalog {
        let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
        for r in survey_catalog(read_graph6_catalog(BufReader::new(f)), &opts) {
            write_report(out, r)?;
        }
    } else if let Some(n) = args.all_graphs {
        let graphs = nonbipartite_graphs(n, args.allow_isolated)?.into_iter().map(Ok);
        for r in survey_catalog(graphs, &opts) {
            write_report(out, r)?;
        }
    }
    out.flush()?;
    eprintln!("graphs: {}, positive: {}, errors: {}", totals.0, totals.1, totals.2);
    if !internal.is_empty() {
        return Err(ArithmeticError::Inconsistent(format!("exact arithmetic failed for {}", internal.join(" "))).into());
    }
    Ok(())
}

fn verification(d: &Digraph) -> Result<Value> {
    let witness = exact_hermitian(d).first_nonzero_odd_trace()?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "command": "construct",
        "n": d.n(),
        "arcs": d.arc_count(),
        "symmetric": witness.is_none(),
        "witness": witness.map(|(r, t)| json!({"r": r, "trace": t.to_string()})),
        "limit_density": ratio_string(d.limit_density()),
    }))
}

fn cmd_construct(out: &mut dyn Write, c: &Construct) -> Result<()> {
    match c {
        Construct::Blowup { input, l } => {
            let d = load_digraph(input)?;
            let b = d.blowup(*l)?;
            writeln!(out, "{}", digraph_key(&b))?;
            let mut v = verification(&b)?;
            v["operation"] = json!("blowup");
            v["l"] = json!(l);
            v["source_limit_density"] = json!(ratio_string(d.limit_density()));
            emit(out, &v)
        }
        Construct::OneSum { first, second, at: (v, u), require_odd_dominating } => {
            let a = load_digraph(first)?;
            let b = load_digraph(second)?;
            let mut chain = hermsym::GluedChain::new(a);
            let merged = chain.glue(*v, &b, *u, *require_odd_dominating == Switch::On)?;
            let d = chain.into_digraph();
            writeln!(out, "{}", digraph_key(&d))?;
            let mut rep = verification(&d)?;
            rep["operation"] = json!("one-sum");
            rep["glued_vertex"] = json!(merged);
            emit(out, &rep)
        }
        Construct::Linegraph { input } => {
            let g = load(input)?.into_graph();
            let l = g.line_graph();
            writeln!(out, "{}", to_graph6(&l))?;
            emit(
                out,
                &json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "construct",
                    "operation": "linegraph",
                    "n": l.n(),
                    "edges": l.edge_count(),
                    "triangles": l.triangle_count(),
                    "limit_density": ratio_string(l.limit_density()),
                    "bounds": line_graph_bounds(&g),
                }),
            )
        }
    }
}

fn degree_filter(choice: &str, text: &str) -> Result<Option<Vec<DegreeMultiset>>> {
    match choice {
        "none" => Ok(None),
        "auto" => {
            let mut orders: Vec<usize> = text
                .lines()
                .filter_map(|l| hermsym::format::parse_digraph6(l.trim()).ok())
                .map(|d| d.n())
                .filter(|&n| n >= 3)
                .collect();
            orders.sort_unstable();
            orders.dedup();
            Ok(Some(orders.into_iter().flat_map(|n| tournament_feasibility(n).multisets).collect()))
        }
        list => list
            .split(';')
            .map(|m| m.trim().parse::<DegreeMultiset>().map_err(|e| anyhow::anyhow!("bad degree multiset {m:?}: {e}")))
            .collect::<Result<Vec<_>>>()
            .map(Some),
    }
}

fn cmd_tournament_survey(out: &mut dyn Write, catalog: &Path, filter: &str, records: bool) -> Result<()> {
    let text = std::fs::read_to_string(catalog).with_context(|| format!("reading {}", catalog.display()))?;
    let filter = degree_filter(filter, &text)?;
    let survey = tournament_survey_from_catalog(text.as_bytes(), filter.as_deref())?;
    if records {
        for r in &survey.records {
            writeln!(out, "{}", json_line(r))?;
        }
    }
    for e in &survey.errors {
        eprintln!("{}: line {}: {}", catalog.display(), e.line, e.message);
    }
    let mut summary = serde_json::to_value(&survey.summary)?;
    summary["errors"] = serde_json::to_value(&survey.errors)?;
    emit(out, &summary)
}

fn cmd_verify_walks(out: &mut dyn Write, input: &str, vertex: usize, r_max: usize, caps: WalkCaps) -> Result<()> {
    let d = load_digraph(input)?;
    if vertex >= d.n() {
        bail!("vertex {vertex} out of range for n = {}", d.n());
    }
    let traces = exact_hermitian(&d).power_traces(r_max)?;
    let mut rows = Vec::new();
    for r in 1..=r_max {
        let value = closed_walk_set_value(&d, r, caps)?;
        let trace = traces[r - 1];
        if !value.is_real() || value.a != trace {
            return Err(ArithmeticError::Inconsistent(format!("closed {r}-walks sum to {value} but tr(H^{r}) = {trace}")).into());
        }
        rows.push(json!({"r": r, "walk_value": value.a.to_string(), "trace": trace.to_string()}));
    }
    let lemma = verify_odd_walk_lemma(&d, vertex, r_max, caps)?;
    if !lemma.consistent {
        return Err(ArithmeticError::Inconsistent(format!("walk values through vertex {vertex} disagree")).into());
    }
    emit(
        out,
        &json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify-walks",
            "input": digraph_key(&d),
            "closed_walks": rows,
            "vertex": vertex,
            "odd_rows": lemma.rows.iter().map(|row| json!({
                "r": row.r,
                "at_least_once": row.at_least_once.to_string(),
                "exactly_once": row.exactly_once.to_string(),
            })).collect::<Vec<_>>(),
            "consistent": lemma.consistent,
            "all_zero": lemma.all_zero,
        }),
    )
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Spectrum { input, theta, exact, tol } => cmd_spectrum(out, &input, theta, exact, tol),
        Command::CheckSym { input } => cmd_check_sym(out, &input),
        Command::Search(args) => cmd_search(out, &args),
        Command::Construct(c) => cmd_construct(out, &c),
        Command::ExportDot { input, name } => {
            let d = load_digraph(&input)?;
            write!(out, "{}", to_dot(&d, &name))?;
            Ok(())
        }
        Command::Tournaments { n, summary } => {
            let ts = enumerate_tournaments(n)?;
            if summary {
                let mut symmetric = 0u64;
                for t in &ts {
                    if exact_hermitian(t).first_nonzero_odd_trace()?.is_none() {
                        symmetric += 1;
                    }
                }
                emit(
                    out,
                    &json!({"schema_version": SCHEMA_VERSION, "command": "tournaments", "n": n,
                            "classes": ts.len(), "symmetric": symmetric}),
                )
            } else {
                for t in &ts {
                    writeln!(out, "{}", digraph_key(t))?;
                }
                Ok(())
            }
        }
        Command::TournamentSurvey { catalog, degree_filter, records } => {
            cmd_tournament_survey(out, &catalog, &degree_filter, records)
        }
        Command::Feasibility { n_min, n_max } => {
            if n_min < 3 {
                bail!("--n-min must be at least 3");
            }
            for n in n_min..=n_max {
                let f = tournament_feasibility(n);
                emit(
                    out,
                    &json!({"schema_version": SCHEMA_VERSION, "command": "feasibility", "n": n,
                            "feasible": f.verdict.passed, "verdict": f.verdict}),
                )?;
            }
            Ok(())
        }
        Command::VerifyWalks { input, vertex, r_max, max_length, max_order } => {
            cmd_verify_walks(out, &input, vertex, r_max, WalkCaps { max_length, max_order })
        }
        Command::Graphs { n, nonbipartite, no_isolated } => {
            let keep = |g: &hermsym::Graph| !(nonbipartite && g.is_bipartite()) && !(no_isolated && g.has_isolated_vertex());
            for g in all_graphs(n)?.into_iter().filter(keep) {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            Ok(())
        }
    }
}

/// 2 when exact arithmetic could not be trusted, 1 for every other failure.
fn exit_code(err: &anyhow::Error) -> u8 {
    let arithmetic = err.chain().any(|e| {
        e.is::<ArithmeticError>()
            || matches!(e.downcast_ref::<SearchError>(), Some(SearchError::Arithmetic(_)))
            || matches!(e.downcast_ref::<WalkError>(), Some(WalkError::Arithmetic(_)))
    });
    if arithmetic {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hermsym::error::SpectraError;

    #[test]
    fn exit_code_mapping() {
        let inconsistent = anyhow::Error::from(ArithmeticError::Inconsistent("x".into()));
        assert_eq!(exit_code(&inconsistent), 2);
        let nested = anyhow::Error::from(SearchError::Arithmetic(ArithmeticError::Overflow("mul")));
        assert_eq!(exit_code(&nested.context("searching")), 2);
        let walk = anyhow::Error::from(WalkError::Arithmetic(ArithmeticError::Overflow("add")));
        assert_eq!(exit_code(&walk), 2);
        assert_eq!(exit_code(&anyhow::anyhow!("bad input")), 1);
        assert_eq!(exit_code(&anyhow::Error::from(SpectraError::NoConvergence(3))), 1);
        assert_eq!(exit_code(&anyhow::Error::from(SearchError::EdgeCapExceeded { edges: 30, cap: 24 })), 1);
    }

    #[test]
    fn argument_parsers() {
        assert_eq!(parse_theta("1/2").unwrap(), PiFraction::HALF);
        assert!(parse_theta("0/3").is_err());
        assert!(parse_theta("4/3").is_err());
        assert_eq!(parse_pair("3, 4").unwrap(), (3, 4));
        assert!(parse_pair("3").is_err());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
