//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Diagram arguments are PD files, `-` for standard input, or `@name` for a
//! catalog entry.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::diagram::LinkDiagram;
use crate::map::CombinatorialMap;
use crate::parallels::{counts_csv, parallel_genus_report, parallel_tait, turaev_upper_bound, GenusReport, TaitCounts};
use crate::seifert::{
    labelings_over_orientations, labels_from_weights, matching_colouring, reconstruct_link, reconstruction_round_trips,
    verify_seifert_characterization, SeifertError, SeifertReport,
};
use crate::states::{canonical_states, seifert_data, state_dual_set, state_ribbon_graph, tait_graph, SpliceState};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INADMISSIBLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "ribbonlink", version, about = "Ribbon graphs of link diagrams")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// v, e, k, p, g of the Tait graphs and the all-A, all-B and Seifert
    /// state graphs.
    Invariants { diagram: String },
    /// Seifert graph checks for both colourings.
    SeifertCheck { diagram: String },
    /// Diagram from a plane map JSON whose weights carry cd labels.
    Reconstruct { graph_file: PathBuf },
    /// Genus of state graphs of parallels against the closed forms.
    Parallel {
        diagram: String,
        #[arg(short = 'r', default_value_t = 2)]
        r: usize,
        /// A/B string, or one of all-a, all-b, seifert.
        #[arg(long, default_value = "all-a")]
        state: String,
    },
    /// Run the acceptance suites over the catalog and random inputs.
    Selftest {
        /// Only these suites (1 to 11).
        #[arg(long)]
        suite: Vec<usize>,
    },
    /// List the catalog.
    Catalog,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, code: i32) -> Self {
        Output { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Output { code, stdout: String::new(), stderr: stderr.into() }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Output::ok(text, code) } else { Output::fail(code, text) };
        }
    };
    let f = cli.format;
    match cli.command {
        Command::Invariants { diagram } => with_diagram(&diagram, |d| {
            let (s, c) = invariants_output(d, f);
            Output::ok(s, c)
        }),
        Command::SeifertCheck { diagram } => with_diagram(&diagram, |d| {
            let (s, c) = seifert_check_output(d, f);
            Output::ok(s, c)
        }),
        Command::Reconstruct { graph_file } => match std::fs::read_to_string(&graph_file) {
            Ok(text) => reconstruct_output(&text, f),
            Err(e) => Output::fail(EXIT_USAGE, format!("{}: {e}\n", graph_file.display())),
        },
        Command::Parallel { diagram, r, state } => with_diagram(&diagram, |d| parallel_output(d, r, &state, f)),
        Command::Selftest { suite } => selftest_output(&suite, f),
        Command::Catalog => {
            let mut s = String::new();
            for (n, pd) in catalog::ENTRIES {
                let _ = writeln!(s, "{n:<14}{pd}");
            }
            Output::ok(s, EXIT_OK)
        }
    }
}

fn read_diagram(arg: &str) -> Result<LinkDiagram, String> {
    let text = if let Some(name) = arg.strip_prefix('@') {
        return catalog::get(name).ok_or_else(|| format!("no catalog entry named {name}"));
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    };
    LinkDiagram::parse_pd(&text).map_err(|e| format!("{arg}: {e}"))
}

fn with_diagram(arg: &str, f: impl FnOnce(&LinkDiagram) -> Output) -> Output {
    match read_diagram(arg) {
        Ok(d) => f(&d),
        Err(e) => Output::fail(EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialise");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantRow {
    pub graph: &'static str,
    pub v: usize,
    pub e: usize,
    pub k: usize,
    pub p: usize,
    pub g: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariants {
    pub diagram: String,
    pub crossings: usize,
    pub components: usize,
    pub rows: Vec<InvariantRow>,
    /// The state graphs agree with partial duals of the first Tait graph.
    pub consistent: bool,
}

pub fn invariants(d: &LinkDiagram) -> Invariants {
    let (c1, c2) = d.checkerboard();
    let t1 = tait_graph(d, &c1);
    let t2 = tait_graph(d, &c2);
    let st = canonical_states(d, &c1);
    let graphs = [
        ("tait-black", t1.clone()),
        ("tait-white", t2),
        ("all-A", state_ribbon_graph(d, &st.all_a)),
        ("all-B", state_ribbon_graph(d, &st.all_b)),
        ("seifert", state_ribbon_graph(d, &st.seifert)),
    ];
    let consistent = graphs[2..]
        .iter()
        .zip([&st.all_a, &st.all_b, &st.seifert])
        .all(|((_, g), s)| t1.partial_dual(&state_dual_set(d, s, &c1)).is_ok_and(|pd| pd.same_labelled(g)));
    let rows = graphs
        .iter()
        .map(|(name, m)| {
            let c = m.counts();
            InvariantRow { graph: name, v: c.v, e: c.e, k: c.k, p: c.p, g: c.g }
        })
        .collect();
    Invariants { diagram: d.to_pd(), crossings: d.crossing_count(), components: d.component_count(), rows, consistent }
}

pub fn invariants_output(d: &LinkDiagram, f: Format) -> (String, i32) {
    let inv = invariants(d);
    let code = if inv.consistent { EXIT_OK } else { EXIT_CHECK_FAILED };
    let mut s = String::new();
    match f {
        Format::Json => s = json(&inv),
        Format::Csv => {
            s.push_str("graph,v,e,k,p,g\n");
            for r in &inv.rows {
                let _ = writeln!(s, "{},{},{},{},{},{}", r.graph, r.v, r.e, r.k, r.p, r.g);
            }
        }
        Format::Dot => {
            let (c1, _) = d.checkerboard();
            s = tait_graph(d, &c1).underlying_graph().to_dot("tait");
        }
        Format::Text => {
            let _ = writeln!(s, "diagram     {}", inv.diagram);
            let _ = writeln!(s, "crossings   {}", inv.crossings);
            let _ = writeln!(s, "components  {}", inv.components);
            let _ = writeln!(s, "{:<12}{:>4}{:>4}{:>4}{:>4}{:>4}", "graph", "v", "e", "k", "p", "g");
            for r in &inv.rows {
                let _ = writeln!(s, "{:<12}{:>4}{:>4}{:>4}{:>4}{:>4}", r.graph, r.v, r.e, r.k, r.p, r.g);
            }
            if !inv.consistent {
                s.push_str("state graphs disagree with partial duals of the tait graph\n");
            }
        }
    }
    (s, code)
}

#[derive(Debug, Clone, Serialize)]
pub struct SeifertCheck {
    pub diagram: String,
    pub components: usize,
    pub seifert_circles: usize,
    pub seifert_genus: usize,
    pub labelings: usize,
    pub expected_labelings: usize,
    pub reports: Vec<SeifertReport>,
    pub pass: bool,
}

pub fn seifert_check(d: &LinkDiagram) -> SeifertCheck {
    let (c1, c2) = d.checkerboard();
    let reports = vec![verify_seifert_characterization(d, &c1), verify_seifert_characterization(d, &c2)];
    let labelings = labelings_over_orientations(d, &c1).len();
    let expected_labelings = 1 << (d.component_count() - 1);
    let sd = seifert_data(d);
    let pass = reports.iter().all(|r| r.pass) && labelings == expected_labelings;
    SeifertCheck {
        diagram: d.to_pd(),
        components: d.component_count(),
        seifert_circles: sd.circle_count,
        seifert_genus: sd.genus,
        labelings,
        expected_labelings,
        reports,
        pass,
    }
}

pub fn seifert_check_output(d: &LinkDiagram, f: Format) -> (String, i32) {
    let sc = seifert_check(d);
    let code = if sc.pass { EXIT_OK } else { EXIT_CHECK_FAILED };
    let mut s = String::new();
    match f {
        Format::Json => s = json(&sc),
        Format::Dot => s = seifert_data(d).graph.to_dot("seifert"),
        Format::Csv => {
            s.push_str("colouring,check,pass\n");
            for r in &sc.reports {
                for c in &r.checks {
                    let _ = writeln!(s, "{},{},{}", r.colouring, c.name, c.pass);
                }
            }
        }
        Format::Text => {
            let _ = writeln!(s, "diagram         {}", sc.diagram);
            let _ = writeln!(s, "seifert circles {}", sc.seifert_circles);
            let _ = writeln!(s, "labelings       {} of {}", sc.labelings, sc.expected_labelings);
            for r in &sc.reports {
                let _ = writeln!(s, "colouring {} labels {}", r.colouring, r.labels);
                for c in &r.checks {
                    let _ = writeln!(s, "  {:<30}{}", c.name, if c.pass { "pass" } else { "FAIL" });
                }
            }
            let _ = writeln!(s, "{}", if sc.pass { "pass" } else { "FAIL" });
        }
    }
    (s, code)
}

#[derive(Debug, Clone, Serialize)]
struct Reconstruction {
    pd: String,
    crossings: usize,
    components: usize,
    round_trip: bool,
}

pub fn reconstruct_output(map_json: &str, f: Format) -> Output {
    let t = match CombinatorialMap::from_json_str(map_json) {
        Ok(t) => t,
        Err(e) => return Output::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let Some(labels) = labels_from_weights(&t) else {
        return Output::fail(EXIT_USAGE, "error: every edge needs a cd label\n");
    };
    let d = match reconstruct_link(&t, &labels) {
        Ok(d) => d,
        Err(SeifertError::NotEulerian { tait_vertices, dual_vertices }) => {
            let one = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ");
            return Output::fail(
                EXIT_INADMISSIBLE,
                format!(
                    "error: odd c-degree at vertices [{}] and dual vertices [{}]\n",
                    one(&tait_vertices),
                    one(&dual_vertices)
                ),
            );
        }
        Err(e @ (SeifertError::NotPlane(_) | SeifertError::NotConnected | SeifertError::Unrealizable)) => {
            return Output::fail(EXIT_INADMISSIBLE, format!("error: {e}\n"))
        }
        Err(e) => return Output::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let rec = Reconstruction {
        pd: d.to_pd(),
        crossings: d.crossing_count(),
        components: d.component_count(),
        round_trip: reconstruction_round_trips(&t, &labels, &d),
    };
    let code = if rec.round_trip { EXIT_OK } else { EXIT_CHECK_FAILED };
    let s = match f {
        Format::Json => json(&rec),
        Format::Dot => tait_graph(&d, &matching_colouring(&d, &t)).underlying_graph().to_dot("tait"),
        Format::Csv => format!("pd,crossings,components,round_trip\n\"{}\",{},{},{}\n", rec.pd, rec.crossings, rec.components, rec.round_trip),
        Format::Text => format!("{}\n", rec.pd),
    };
    Output::ok(s, code)
}

fn parse_state(d: &LinkDiagram, s: &str) -> Result<SpliceState, String> {
    let (c1, _) = d.checkerboard();
    let st = canonical_states(d, &c1);
    match s.to_ascii_lowercase().as_str() {
        "all-a" => return Ok(st.all_a),
        "all-b" => return Ok(st.all_b),
        "seifert" => return Ok(st.seifert),
        _ => {}
    }
    let state: SpliceState = s.parse().map_err(|e| format!("state {s}: {e}"))?;
    state.check_length(d.crossing_count()).map_err(|e| format!("state {s}: {e}"))?;
    Ok(state)
}

#[derive(Debug, Clone, Serialize)]
struct ParallelOutput {
    report: GenusReport,
    counts: Vec<TaitCounts>,
    turaev_bound: usize,
}

pub fn parallel_output(d: &LinkDiagram, r: usize, state: &str, f: Format) -> Output {
    let s = match parse_state(d, state) {
        Ok(s) => s,
        Err(e) => return Output::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let (c1, _) = d.checkerboard();
    let report = match parallel_genus_report(d, &c1, &s, r) {
        Ok(x) => x,
        Err(e) => return Output::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let counts: Vec<TaitCounts> =
        (1..=r + 1).map(|k| parallel_tait(d, &c1, k).expect("r >= 1").counts).collect();
    let code = if report.pass { EXIT_OK } else { EXIT_CHECK_FAILED };
    let out = match f {
        Format::Json => json(&ParallelOutput { turaev_bound: turaev_upper_bound(d, r), report, counts }),
        Format::Csv => counts_csv(&tait_graph(d, &c1), &counts),
        Format::Dot => parallel_tait(d, &c1, r).expect("r >= 1").t_r.underlying_graph().to_dot("tait_r"),
        Format::Text => {
            let mut t = String::new();
            let _ = writeln!(t, "diagram {}  state {}  g {}  e {}", report.diagram, report.state, report.g, report.e);
            let _ = writeln!(t, "{:>3}{:>10}{:>8}{:>8}{:>10}{:>8}", "r", "crossings", "oracle", "step", "iterated", "closed");
            for x in &report.records {
                let _ = writeln!(
                    t,
                    "{:>3}{:>10}{:>8}{:>8}{:>10}{:>8}",
                    x.r, x.crossings, x.oracle_genus, x.ca4_value, x.ca4_iterated, x.ca1_value
                );
            }
            let _ = writeln!(t, "oracle matches: {}", report.closed_form);
            for c in &report.checks {
                let _ = writeln!(t, "  {:<24}{}", c.name, if c.pass { "pass" } else { "FAIL" });
            }
            let _ = writeln!(t, "turaev bound at r={r}: {}", turaev_upper_bound(d, r));
            t
        }
    };
    Output::ok(out, code)
}

pub fn selftest_output(only: &[usize], f: Format) -> Output {
    let ids: Vec<usize> = if only.is_empty() { verify::SUITES.iter().map(|s| s.0).collect() } else { only.to_vec() };
    let mut results = Vec::new();
    for id in ids {
        match verify::run(id) {
            Some(r) => results.push(r),
            None => return Output::fail(EXIT_USAGE, format!("error: no suite {id}\n")),
        }
    }
    let code = if results.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_CHECK_FAILED };
    let s = match f {
        Format::Json => json(&results),
        Format::Csv | Format::Dot | Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(
                    s,
                    "{:>2} {:<32}{} {:>7} cases {:>9.2?}{}",
                    r.id,
                    r.name,
                    if r.pass { "pass" } else { "FAIL" },
                    r.cases,
                    r.elapsed,
                    if r.detail.is_empty() { String::new() } else { format!("  {}", r.detail) }
                );
            }
            s
        }
    };
    Output::ok(s, code)
}
