//! Command-line driver: validates, analyzes, and decomposes fullerene
//! graphs, constructs Hamilton cycles, bounds perfect matchings, emits
//! generated tubes, and cross-checks structural results against exhaustive
//! searches.
//!
//! Exit codes: 0 on success, 1 when the input fails validation or any
//! oracle check disagrees, 2 on usage errors (bad arguments, unreadable or
//! unparseable input).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fullerene::{
    analyze_graph, brute_force_hamilton_all, build_hamilton, check_ring_dichotomy,
    count_perfect_matchings, count_perfect_matchings_deletion_contraction,
    cyclic_edge_connectivity, decomposition_summary, enumerate_hamilton_variants,
    find_cyclic_5_cutsets, find_cyclic_5_cutsets_exhaustive, find_face_rings, find_pentacaps,
    hamilton_lower_bound, hamilton_summary, has_nontrivial_cyclic_5_cutset, matching_lower_bound,
    matching_summary, matchings_from_hamilton, nanotube, nanotube_decomposition,
    prior_matching_bound, read_planar_code, read_text_rotation, six_pentagons_inside,
    verify_hamilton, write_planar_code, write_report, write_text_rotation, Analysis, Edge,
    EmbeddedGraph, HamiltonCycle, PLANAR_CODE_HEADER,
};

#[derive(Parser)]
#[command(
    name = "fullerene",
    version,
    about = "Structural analysis of fullerene graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the input is a fullerene and print the validation report
    Validate(InputArgs),
    /// Full structural report: cutsets, rings, decomposition, cycles, matchings
    Analyze(BudgetArgs),
    /// Construct a Hamilton cycle and materialize its whole family
    Hamilton(BudgetArgs),
    /// Perfect-matching bounds and exact counts
    Matchings(BudgetArgs),
    /// Emit a generated tube graph in a chosen file format
    Generate(GenerateArgs),
    /// Cross-check structural results against exhaustive searches
    Oracle(BudgetArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file: text rotation lists or planar code (auto-detected)
    #[arg(value_name = "FILE")]
    input: Option<PathBuf>,
    /// Use the generated tube with R hexagonal rings instead of a file
    #[arg(long, value_name = "R", conflicts_with = "input")]
    nanotube: Option<usize>,
    /// Write output here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Cap exhaustive searches at this vertex count
    /// (defaults: 40 for Hamilton cycles, 60 for matchings)
    #[arg(long, value_name = "N")]
    max_oracle_n: Option<usize>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of hexagonal rings of the generated tube
    #[arg(long, value_name = "R")]
    nanotube: usize,
    /// Output file format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Line-oriented rotation lists
    Text,
    /// Binary planar code
    PlanarCode,
}

/// A terminating condition carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn budgets(max_oracle_n: Option<usize>) -> fullerene::AnalyzeOptions {
    fullerene::AnalyzeOptions {
        hamilton_budget: max_oracle_n.unwrap_or(fullerene::HAMILTON_SEARCH_BUDGET),
        matching_budget: max_oracle_n.unwrap_or(fullerene::MATCHING_COUNT_BUDGET),
    }
}

fn load_graphs(input: &InputArgs) -> Result<Vec<EmbeddedGraph>, Failure> {
    if let Some(r) = input.nanotube {
        return Ok(vec![nanotube(r)]);
    }
    let Some(path) = &input.input else {
        return Err(Failure::usage(
            "no input: pass a graph file or --nanotube R",
        ));
    };
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let graphs = if bytes.starts_with(PLANAR_CODE_HEADER) {
        read_planar_code(&bytes)
            .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))?
    } else {
        vec![read_text_rotation(&bytes)
            .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))?]
    };
    if graphs.is_empty() {
        return Err(Failure::usage(format!(
            "{} holds no graph records",
            path.display()
        )));
    }
    Ok(graphs)
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::usage(format!("cannot write to standard output: {e}"))),
    }
}

/// Joins one report per input graph; multi-record streams get a numbered
/// comment line before each report.
fn join_reports(reports: Vec<String>) -> String {
    if reports.len() == 1 {
        return reports.into_iter().next().unwrap();
    }
    let total = reports.len();
    let mut out = String::new();
    for (i, report) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# graph {} of {total}", i + 1);
        out.push_str(report);
    }
    out
}

fn run_validate(args: &InputArgs) -> Result<ExitCode, Failure> {
    let graphs = load_graphs(args)?;
    let mut reports = Vec::new();
    let mut all_valid = true;
    for g in &graphs {
        let analysis = Analysis::validation_only(g);
        all_valid &= analysis.validation.is_fullerene;
        reports.push(write_report(&analysis));
    }
    emit(&args.out, join_reports(reports).as_bytes())?;
    Ok(if all_valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_analyze(args: &BudgetArgs) -> Result<ExitCode, Failure> {
    let graphs = load_graphs(&args.input)?;
    let opts = budgets(args.max_oracle_n);
    let mut reports = Vec::new();
    let mut all_valid = true;
    for g in &graphs {
        let analysis =
            analyze_graph(g, &opts).map_err(|e| Failure::failed(format!("analysis failed: {e}")))?;
        all_valid &= analysis.validation.is_fullerene;
        reports.push(write_report(&analysis));
    }
    emit(&args.input.out, join_reports(reports).as_bytes())?;
    Ok(if all_valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_hamilton(args: &BudgetArgs) -> Result<ExitCode, Failure> {
    let graphs = load_graphs(&args.input)?;
    let opts = budgets(args.max_oracle_n);
    let mut reports = Vec::new();
    let mut all_valid = true;
    for g in &graphs {
        let mut analysis = Analysis::validation_only(g);
        if analysis.validation.is_fullerene {
            let decomposition = nanotube_decomposition(g)
                .map_err(|e| Failure::failed(format!("decomposition failed: {e}")))?;
            analysis.decomposition = Some(decomposition.as_ref().map(decomposition_summary));
            let summary = hamilton_summary(g, decomposition.as_ref(), opts.hamilton_budget)
                .map_err(|e| Failure::failed(format!("cycle construction failed: {e}")))?;
            analysis.hamilton = Some(summary);
        } else {
            all_valid = false;
        }
        reports.push(write_report(&analysis));
    }
    emit(&args.input.out, join_reports(reports).as_bytes())?;
    Ok(if all_valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_matchings(args: &BudgetArgs) -> Result<ExitCode, Failure> {
    let graphs = load_graphs(&args.input)?;
    let opts = budgets(args.max_oracle_n);
    let mut reports = Vec::new();
    let mut all_valid = true;
    for g in &graphs {
        let mut analysis = Analysis::validation_only(g);
        if analysis.validation.is_fullerene {
            let decomposition = nanotube_decomposition(g)
                .map_err(|e| Failure::failed(format!("decomposition failed: {e}")))?;
            analysis.decomposition = Some(decomposition.as_ref().map(decomposition_summary));
            let cycle = match decomposition.as_ref() {
                Some(d) => {
                    let (_, hc) = build_hamilton(d)
                        .map_err(|e| Failure::failed(format!("cycle construction failed: {e}")))?;
                    Some(hc)
                }
                None => None,
            };
            let summary = matching_summary(
                g,
                decomposition.is_some(),
                cycle.as_ref(),
                opts.matching_budget,
            )
            .map_err(|e| Failure::failed(format!("matching analysis failed: {e}")))?;
            analysis.matchings = Some(summary);
        } else {
            all_valid = false;
        }
        reports.push(write_report(&analysis));
    }
    emit(&args.input.out, join_reports(reports).as_bytes())?;
    Ok(if all_valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_generate(args: &GenerateArgs) -> Result<ExitCode, Failure> {
    let g = nanotube(args.nanotube);
    let bytes = match args.format {
        Format::Text => write_text_rotation(&g)
            .map_err(|e| Failure::failed(format!("cannot serialize: {e}")))?
            .into_bytes(),
        Format::PlanarCode => write_planar_code(&[&g])
            .map_err(|e| Failure::failed(format!("cannot serialize: {e}")))?,
    };
    emit(&args.out, &bytes)?;
    Ok(ExitCode::SUCCESS)
}

enum Check {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn push_check(out: &mut String, failures: &mut usize, name: &str, check: Check) {
    match check {
        Check::Pass(detail) => {
            let _ = writeln!(out, "check {name}: pass ({detail})");
        }
        Check::Fail(detail) => {
            *failures += 1;
            let _ = writeln!(out, "check {name}: fail ({detail})");
        }
        Check::Skip(detail) => {
            let _ = writeln!(out, "check {name}: skipped ({detail})");
        }
    }
}

fn sorted_edge_sets(cutsets: &[fullerene::EdgeCutset]) -> BTreeSet<Vec<Edge>> {
    cutsets
        .iter()
        .map(|c| {
            let mut edges = c.edges.clone();
            edges.sort_unstable();
            edges
        })
        .collect()
}

/// Runs every structural-vs-exhaustive cross-check that fits the budgets
/// and renders one pass/fail/skipped line per check.
fn oracle_text(g: &EmbeddedGraph, hamilton_budget: usize, matching_budget: usize) -> (String, usize) {
    let n = g.n();
    let mut out = String::new();
    let mut failures = 0usize;
    let _ = writeln!(out, "[oracle]");
    let _ = writeln!(out, "vertices: {n}");

    push_check(
        &mut out,
        &mut failures,
        "structural_census_matches_exhaustive",
        if n <= hamilton_budget {
            let structural = sorted_edge_sets(&find_cyclic_5_cutsets(g));
            let exhaustive = sorted_edge_sets(&find_cyclic_5_cutsets_exhaustive(g));
            if structural == exhaustive {
                Check::Pass(format!("{} cutsets", structural.len()))
            } else {
                Check::Fail(format!(
                    "structural found {}, exhaustive found {}",
                    structural.len(),
                    exhaustive.len()
                ))
            }
        } else {
            Check::Skip(format!("n={n} above budget {hamilton_budget}"))
        },
    );

    push_check(
        &mut out,
        &mut failures,
        "cyclic_edge_connectivity_is_five",
        if n <= hamilton_budget {
            match cyclic_edge_connectivity(g) {
                Ok(5) => Check::Pass("5".to_string()),
                Ok(k) => Check::Fail(format!("found {k}")),
                Err(e) => Check::Fail(e.to_string()),
            }
        } else {
            Check::Skip(format!("n={n} above budget {hamilton_budget}"))
        },
    );

    let decomposition = match nanotube_decomposition(g) {
        Ok(d) => d,
        Err(e) => {
            push_check(
                &mut out,
                &mut failures,
                "tube_decomposition",
                Check::Fail(e.to_string()),
            );
            None
        }
    };

    push_check(
        &mut out,
        &mut failures,
        "tube_iff_nontrivial_cutset",
        {
            let nontrivial = has_nontrivial_cyclic_5_cutset(g);
            let tall_tube = decomposition.as_ref().map(|d| d.r >= 1).unwrap_or(false);
            if nontrivial == tall_tube {
                Check::Pass(format!("nontrivial={nontrivial}"))
            } else {
                Check::Fail(format!(
                    "nontrivial cutset present: {nontrivial}, rings >= 1: {tall_tube}"
                ))
            }
        },
    );

    push_check(
        &mut out,
        &mut failures,
        "cap_boundaries_enclose_six_pentagons",
        match find_pentacaps(g) {
            Ok(caps) => {
                let mut bad = Vec::new();
                for cap in &caps {
                    match six_pentagons_inside(g, &cap.boundary) {
                        Ok(6) => {}
                        Ok(k) => bad.push(format!("cap at face {} has {k}", cap.center_face)),
                        Err(e) => bad.push(e.to_string()),
                    }
                }
                if bad.is_empty() {
                    Check::Pass(format!("{} caps", caps.len()))
                } else {
                    Check::Fail(bad.join("; "))
                }
            }
            Err(e) => Check::Fail(e.to_string()),
        },
    );

    push_check(
        &mut out,
        &mut failures,
        "ring_dichotomy_holds",
        match find_face_rings(g) {
            Ok(rings) => {
                let mut bad = Vec::new();
                for ring in &rings {
                    if let Err(e) = check_ring_dichotomy(g, ring) {
                        bad.push(e.to_string());
                    }
                }
                if bad.is_empty() {
                    Check::Pass(format!("{} rings", rings.len()))
                } else {
                    Check::Fail(bad.join("; "))
                }
            }
            Err(e) => Check::Fail(e.to_string()),
        },
    );

    let mut family: Vec<HamiltonCycle> = Vec::new();
    if let Some(d) = decomposition.as_ref() {
        push_check(
            &mut out,
            &mut failures,
            "constructed_cycle_verifies",
            match build_hamilton(d) {
                Ok((path, cycle)) => {
                    let expected_pentagons = if d.r % 2 == 0 { 6 } else { 4 };
                    if !verify_hamilton(g, &cycle) {
                        Check::Fail("constructed cycle does not verify".to_string())
                    } else if path.pentagon_count != expected_pentagons {
                        Check::Fail(format!(
                            "face path has {} pentagons, expected {expected_pentagons}",
                            path.pentagon_count
                        ))
                    } else {
                        Check::Pass(format!("{} pentagons on the face path", path.pentagon_count))
                    }
                }
                Err(e) => Check::Fail(e.to_string()),
            },
        );

        push_check(
            &mut out,
            &mut failures,
            "variant_family_meets_bound",
            match enumerate_hamilton_variants(d) {
                Ok(variants) => {
                    let bound = hamilton_lower_bound(d.r);
                    let all_verify = variants.iter().all(|hc| verify_hamilton(g, hc));
                    if !all_verify {
                        Check::Fail("a variant does not verify".to_string())
                    } else if (variants.len() as u64) < bound {
                        Check::Fail(format!("{} variants < bound {bound}", variants.len()))
                    } else {
                        family = variants;
                        Check::Pass(format!("{} variants >= bound {bound}", family.len()))
                    }
                }
                Err(e) => Check::Fail(e.to_string()),
            },
        );
    }

    push_check(
        &mut out,
        &mut failures,
        "family_within_exhaustive_search",
        if decomposition.is_none() {
            Check::Skip("no tube structure".to_string())
        } else if n <= hamilton_budget {
            match brute_force_hamilton_all(g, hamilton_budget) {
                Ok(all) => {
                    let all_sets: BTreeSet<&BTreeSet<Edge>> =
                        all.iter().map(|hc| &hc.edges).collect();
                    let missing = family
                        .iter()
                        .filter(|hc| !all_sets.contains(&hc.edges))
                        .count();
                    if missing > 0 {
                        Check::Fail(format!(
                            "{missing} constructed cycles missing from the exhaustive list"
                        ))
                    } else {
                        Check::Pass(format!("{} of {} cycles", family.len(), all.len()))
                    }
                }
                Err(e) => Check::Fail(e.to_string()),
            }
        } else {
            Check::Skip(format!("n={n} above budget {hamilton_budget}"))
        },
    );

    // The deletion-contraction counter is the slower route; cap its size so
    // the cross-check stays interactive.
    let dual_route_cap = matching_budget.min(40);
    push_check(
        &mut out,
        &mut failures,
        "matching_counters_agree",
        if n <= dual_route_cap {
            match (
                count_perfect_matchings(g, dual_route_cap),
                count_perfect_matchings_deletion_contraction(g, dual_route_cap),
            ) {
                (Ok(a), Ok(b)) if a == b => Check::Pass(a.to_string()),
                (Ok(a), Ok(b)) => Check::Fail(format!("{a} != {b}")),
                (Err(e), _) | (_, Err(e)) => Check::Fail(e.to_string()),
            }
        } else {
            Check::Skip(format!("n={n} above budget {dual_route_cap}"))
        },
    );

    push_check(
        &mut out,
        &mut failures,
        "matching_count_meets_bounds",
        if n <= matching_budget {
            match count_perfect_matchings(g, matching_budget) {
                Ok(count) => {
                    let prior = prior_matching_bound(n);
                    let tube_bound = decomposition
                        .as_ref()
                        .map(|_| matching_lower_bound(n))
                        .unwrap_or(0);
                    let floor = prior.max(tube_bound);
                    if count >= floor.into() {
                        Check::Pass(format!("{count} >= {floor}"))
                    } else {
                        Check::Fail(format!("{count} < {floor}"))
                    }
                }
                Err(e) => Check::Fail(e.to_string()),
            }
        } else {
            Check::Skip(format!("n={n} above budget {matching_budget}"))
        },
    );

    push_check(
        &mut out,
        &mut failures,
        "cycle_matchings_partition_edges",
        match decomposition.as_ref() {
            None => Check::Skip("no tube structure".to_string()),
            Some(d) => match build_hamilton(d) {
                Ok((_, cycle)) => match matchings_from_hamilton(g, &cycle) {
                    Ok(three) => {
                        let distinct: BTreeSet<_> = three.iter().collect();
                        let mut union: BTreeSet<Edge> = BTreeSet::new();
                        let mut total = 0;
                        for m in &three {
                            total += m.edges.len();
                            union.extend(m.edges.iter().copied());
                        }
                        let all_edges: BTreeSet<Edge> = g.edges().into_iter().collect();
                        if distinct.len() != 3 {
                            Check::Fail("the three matchings are not distinct".to_string())
                        } else if union != all_edges || total != all_edges.len() {
                            Check::Fail("matchings do not partition the edge set".to_string())
                        } else {
                            Check::Pass("3 disjoint matchings cover all edges".to_string())
                        }
                    }
                    Err(e) => Check::Fail(e.to_string()),
                },
                Err(e) => Check::Fail(e.to_string()),
            },
        },
    );

    let _ = writeln!(out, "checks_failed: {failures}");
    (out, failures)
}

fn run_oracle(args: &BudgetArgs) -> Result<ExitCode, Failure> {
    let graphs = load_graphs(&args.input)?;
    let opts = budgets(args.max_oracle_n);
    let mut reports = Vec::new();
    let mut all_ok = true;
    for g in &graphs {
        let analysis = Analysis::validation_only(g);
        if !analysis.validation.is_fullerene {
            all_ok = false;
            reports.push(write_report(&analysis));
            continue;
        }
        let (text, failures) = oracle_text(g, opts.hamilton_budget, opts.matching_budget);
        all_ok &= failures == 0;
        reports.push(text);
    }
    emit(&args.input.out, join_reports(reports).as_bytes())?;
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(args) => run_validate(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Hamilton(args) => run_hamilton(args),
        Command::Matchings(args) => run_matchings(args),
        Command::Generate(args) => run_generate(args),
        Command::Oracle(args) => run_oracle(args),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
