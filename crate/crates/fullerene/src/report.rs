//! Assembles analysis results for one graph into a single summary value and
//! renders it as deterministic, line-oriented text.
//!
//! The renderer has a fixed section order and fixed key order inside each
//! section, so two runs over the same input produce byte-identical output.
//! Sections that were not computed (or do not apply) are omitted as a whole;
//! keys inside a computed section are always printed, including zero counts.

use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

use crate::connectivity::{find_cyclic_5_cutsets, Classification};
use crate::graph::{EmbeddedGraph, FullereneReport};
use crate::hamilton::{
    brute_force_hamilton, build_hamilton, enumerate_hamilton_variants, HamiltonCycle,
    HamiltonError,
};
use crate::matchings::{
    count_perfect_matchings, hamilton_lower_bound, matching_lower_bound, matchings_from_hamilton,
    prior_matching_bound, MatchingError,
};
use crate::rings::{
    check_ring_dichotomy, find_face_rings, nanotube_decomposition, DichotomyArm,
    NanotubeDecomposition, RingError, RingType,
};

/// Error raised while assembling an [`Analysis`]; rendering itself never
/// fails.
#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("ring analysis failed: {0}")]
    Ring(#[from] RingError),
    #[error("cycle construction failed: {0}")]
    Hamilton(#[from] HamiltonError),
    #[error("matching analysis failed: {0}")]
    Matching(#[from] MatchingError),
}

/// Budgets controlling which exhaustive counts [`analyze_graph`] attempts.
#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    /// Exhaustive Hamilton-cycle counting runs only when `n` is at most
    /// this.
    pub hamilton_budget: usize,
    /// Exhaustive perfect-matching counting runs only when `n` is at most
    /// this.
    pub matching_budget: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            hamilton_budget: crate::hamilton::HAMILTON_SEARCH_BUDGET,
            matching_budget: crate::matchings::MATCHING_COUNT_BUDGET,
        }
    }
}

/// Result of a potentially expensive exhaustive count: either the value, or
/// a record of why it was not attempted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome<T> {
    Computed(T),
    Skipped { n: usize, budget: usize },
}

impl<T: std::fmt::Display> OracleOutcome<T> {
    fn render(&self) -> String {
        match self {
            OracleOutcome::Computed(v) => v.to_string(),
            OracleOutcome::Skipped { n, budget } => {
                format!("skipped (n={n} above budget {budget})")
            }
        }
    }
}

/// Census of the cyclic 5-edge cutsets found by the structural search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutsetCensus {
    /// Size of the smallest cutset found, when any exist.
    pub smallest: Option<usize>,
    pub five_edge_cutsets: usize,
    pub trivial: usize,
    pub nontrivial: usize,
}

/// Histogram of ring shapes over all rings of five faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingSummary {
    pub rings: usize,
    /// Rings whose inner boundary cycle bounds a face.
    pub inner_face: usize,
    /// Rings whose outer boundary cycle bounds a face.
    pub outer_face: usize,
    /// All-hexagon rings with two length-10 boundaries (tube walls).
    pub tube_wall: usize,
}

/// Shape of a cap–rings–cap decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionSummary {
    /// Number of hexagonal rings between the two caps.
    pub hexagon_rings: usize,
    /// Boundary 10-cycle of the cap containing vertex 0, as a closed walk.
    pub cap_a_boundary: Vec<usize>,
    /// Boundary 10-cycle of the opposite cap.
    pub cap_b_boundary: Vec<usize>,
    /// Attachment profile of each ring, seen from inner and outer boundary.
    pub ring_profiles: Vec<(RingType, RingType)>,
}

/// Hamilton-cycle results: the guaranteed floor, the constructed cycle, the
/// materialized family, and (within budget) the exhaustive count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonSummary {
    /// Guaranteed minimum family size; present only for tube inputs.
    pub lower_bound: Option<u64>,
    /// The constructed cycle, in traversal order; present for tube inputs.
    pub cycle: Option<Vec<usize>>,
    /// Pentagons on the face path behind the constructed cycle.
    pub face_path_pentagons: Option<usize>,
    /// Distinct cycles produced by sweeping all construction choices.
    pub distinct_variants: Option<usize>,
    pub exhaustive_count: OracleOutcome<u64>,
}

/// Perfect-matching results: bounds, the matchings split off one Hamilton
/// cycle, and (within budget) the exhaustive count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingSummary {
    /// Exponential floor `15·2^(n/20)`; present only for tube inputs.
    pub lower_bound: Option<u64>,
    /// General floor `⌈3(n+2)/4⌉`, for reference.
    pub prior_bound: u64,
    /// Distinct perfect matchings obtained from one Hamilton cycle.
    pub from_cycle_distinct: Option<usize>,
    pub exhaustive_count: OracleOutcome<BigUint>,
}

/// Everything known about one input graph, ready for rendering. Sections
/// are optional so callers can assemble exactly what a use case needs; the
/// renderer prints whatever is present in a fixed order.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub vertices: usize,
    pub edges: usize,
    pub validation: FullereneReport,
    pub cutsets: Option<CutsetCensus>,
    pub rings: Option<RingSummary>,
    /// `Some(None)` records that decomposition was attempted and found no
    /// tube structure; `None` means it was not attempted.
    pub decomposition: Option<Option<DecompositionSummary>>,
    pub hamilton: Option<HamiltonSummary>,
    pub matchings: Option<MatchingSummary>,
}

impl Analysis {
    /// An analysis holding only the validation section.
    pub fn validation_only(g: &EmbeddedGraph) -> Analysis {
        Analysis {
            vertices: g.n(),
            edges: g.edge_count(),
            validation: g.validate_fullerene(),
            cutsets: None,
            rings: None,
            decomposition: None,
            hamilton: None,
            matchings: None,
        }
    }
}

/// Counts the structurally found cyclic 5-edge cutsets by classification.
pub fn cutset_census(g: &EmbeddedGraph) -> CutsetCensus {
    let cutsets = find_cyclic_5_cutsets(g);
    let trivial = cutsets
        .iter()
        .filter(|c| c.classification == Classification::Trivial)
        .count();
    CutsetCensus {
        smallest: cutsets.iter().map(|c| c.k()).min(),
        five_edge_cutsets: cutsets.len(),
        trivial,
        nontrivial: cutsets.len() - trivial,
    }
}

/// Classifies every ring of five faces by which dichotomy arm it realizes.
pub fn ring_summary(g: &EmbeddedGraph) -> Result<RingSummary, RingError> {
    let rings = find_face_rings(g)?;
    let mut summary = RingSummary {
        rings: rings.len(),
        inner_face: 0,
        outer_face: 0,
        tube_wall: 0,
    };
    for ring in &rings {
        match check_ring_dichotomy(g, ring)? {
            DichotomyArm::InnerIsFace => summary.inner_face += 1,
            DichotomyArm::OuterIsFace => summary.outer_face += 1,
            DichotomyArm::AllHexTenTen => summary.tube_wall += 1,
        }
    }
    Ok(summary)
}

/// Extracts the printable shape of a decomposition.
pub fn decomposition_summary(d: &NanotubeDecomposition) -> DecompositionSummary {
    DecompositionSummary {
        hexagon_rings: d.r,
        cap_a_boundary: d.cap_a.boundary.clone(),
        cap_b_boundary: d.cap_b.boundary.clone(),
        ring_profiles: d.ring_types.clone(),
    }
}

/// Runs the Hamilton pipeline: constructive results for tubes, plus the
/// exhaustive count when `n` fits the budget.
pub fn hamilton_summary(
    g: &EmbeddedGraph,
    decomposition: Option<&NanotubeDecomposition>,
    budget: usize,
) -> Result<HamiltonSummary, HamiltonError> {
    let mut summary = HamiltonSummary {
        lower_bound: None,
        cycle: None,
        face_path_pentagons: None,
        distinct_variants: None,
        exhaustive_count: if g.n() <= budget {
            OracleOutcome::Computed(brute_force_hamilton(g, budget)?.count)
        } else {
            OracleOutcome::Skipped { n: g.n(), budget }
        },
    };
    if let Some(d) = decomposition {
        let (path, cycle) = build_hamilton(d)?;
        summary.lower_bound = Some(hamilton_lower_bound(d.r));
        summary.cycle = Some(cycle.vertices.clone());
        summary.face_path_pentagons = Some(path.pentagon_count);
        summary.distinct_variants = Some(enumerate_hamilton_variants(d)?.len());
    }
    Ok(summary)
}

/// Runs the matching pipeline: bounds, the three matchings split off
/// `cycle` when one is available, and the exhaustive count within budget.
pub fn matching_summary(
    g: &EmbeddedGraph,
    is_tube: bool,
    cycle: Option<&HamiltonCycle>,
    budget: usize,
) -> Result<MatchingSummary, MatchingError> {
    let n = g.n();
    let from_cycle_distinct = match cycle {
        Some(hc) => {
            let three = matchings_from_hamilton(g, hc)?;
            let distinct: std::collections::BTreeSet<_> = three.iter().collect();
            Some(distinct.len())
        }
        None => None,
    };
    Ok(MatchingSummary {
        lower_bound: is_tube.then(|| matching_lower_bound(n)),
        prior_bound: prior_matching_bound(n),
        from_cycle_distinct,
        exhaustive_count: if n <= budget {
            OracleOutcome::Computed(count_perfect_matchings(g, budget)?)
        } else {
            OracleOutcome::Skipped { n, budget }
        },
    })
}

/// Runs the full pipeline on one graph. Validation always runs; the
/// remaining sections are assembled only when the graph is a fullerene.
pub fn analyze_graph(g: &EmbeddedGraph, opts: &AnalyzeOptions) -> Result<Analysis, AnalysisError> {
    let mut analysis = Analysis::validation_only(g);
    if !analysis.validation.is_fullerene {
        return Ok(analysis);
    }
    analysis.cutsets = Some(cutset_census(g));
    analysis.rings = Some(ring_summary(g)?);
    let decomposition = nanotube_decomposition(g)?;
    analysis.decomposition = Some(decomposition.as_ref().map(decomposition_summary));
    let hamilton = hamilton_summary(g, decomposition.as_ref(), opts.hamilton_budget)?;
    let cycle_for_matchings = match &hamilton.cycle {
        Some(vertices) => Some(HamiltonCycle::from_vertex_cycle(vertices.clone())),
        None => None,
    };
    analysis.matchings = Some(matching_summary(
        g,
        decomposition.is_some(),
        cycle_for_matchings.as_ref(),
        opts.matching_budget,
    )?);
    analysis.hamilton = Some(hamilton);
    Ok(analysis)
}

fn write_usize_list(out: &mut String, key: &str, values: &[usize]) {
    let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "{key}: {}", rendered.join(" "));
}

/// Renders an analysis as deterministic text: fixed section order, fixed
/// key order, one `key: value` pair per line, sections separated by one
/// blank line.
pub fn write_report(analysis: &Analysis) -> String {
    let mut out = String::new();
    let v = &analysis.validation;
    let _ = writeln!(out, "[graph]");
    let _ = writeln!(out, "vertices: {}", analysis.vertices);
    let _ = writeln!(out, "edges: {}", analysis.edges);
    let _ = writeln!(out, "faces: {}", v.face_count);
    out.push('\n');
    let _ = writeln!(out, "[validation]");
    let _ = writeln!(out, "cubic: {}", v.is_cubic);
    let _ = writeln!(out, "connected: {}", v.is_connected);
    let _ = writeln!(out, "planar_embedding: {}", v.is_planar_embedding);
    let _ = writeln!(out, "three_connected: {}", v.is_3_connected);
    let _ = writeln!(
        out,
        "faces_pentagonal_or_hexagonal: {}",
        v.faces_pentagonal_or_hexagonal
    );
    let _ = writeln!(out, "pentagons: {}", v.pentagon_count);
    let _ = writeln!(out, "hexagons: {}", v.hexagon_count);
    match v.girth {
        Some(girth) => {
            let _ = writeln!(out, "girth: {girth}");
        }
        None => {
            let _ = writeln!(out, "girth: none");
        }
    }
    let _ = writeln!(out, "fullerene: {}", v.is_fullerene);
    if let Some(c) = &analysis.cutsets {
        out.push('\n');
        let _ = writeln!(out, "[cyclic cutsets]");
        match c.smallest {
            Some(k) => {
                let _ = writeln!(out, "smallest_cutset: {k}");
            }
            None => {
                let _ = writeln!(out, "smallest_cutset: none");
            }
        }
        let _ = writeln!(out, "five_edge_cutsets: {}", c.five_edge_cutsets);
        let _ = writeln!(out, "trivial: {}", c.trivial);
        let _ = writeln!(out, "nontrivial: {}", c.nontrivial);
    }
    if let Some(r) = &analysis.rings {
        out.push('\n');
        let _ = writeln!(out, "[face rings]");
        let _ = writeln!(out, "rings: {}", r.rings);
        let _ = writeln!(out, "inner_boundary_is_face: {}", r.inner_face);
        let _ = writeln!(out, "outer_boundary_is_face: {}", r.outer_face);
        let _ = writeln!(out, "tube_wall: {}", r.tube_wall);
    }
    if let Some(tube) = &analysis.decomposition {
        out.push('\n');
        let _ = writeln!(out, "[decomposition]");
        match tube {
            None => {
                let _ = writeln!(out, "nanotube: false");
            }
            Some(d) => {
                let _ = writeln!(out, "nanotube: true");
                let _ = writeln!(out, "hexagon_rings: {}", d.hexagon_rings);
                write_usize_list(&mut out, "cap_a_boundary", &d.cap_a_boundary);
                write_usize_list(&mut out, "cap_b_boundary", &d.cap_b_boundary);
                for (i, (inner, outer)) in d.ring_profiles.iter().enumerate() {
                    let _ = writeln!(out, "ring_profile[{i}]: {inner}/{outer}");
                }
            }
        }
    }
    if let Some(h) = &analysis.hamilton {
        out.push('\n');
        let _ = writeln!(out, "[hamilton]");
        if let Some(bound) = h.lower_bound {
            let _ = writeln!(out, "lower_bound: {bound}");
        }
        if let Some(cycle) = &h.cycle {
            let _ = writeln!(out, "constructed_length: {}", cycle.len());
            write_usize_list(&mut out, "constructed_cycle", cycle);
        }
        if let Some(p) = h.face_path_pentagons {
            let _ = writeln!(out, "face_path_pentagons: {p}");
        }
        if let Some(k) = h.distinct_variants {
            let _ = writeln!(out, "distinct_variants: {k}");
        }
        let _ = writeln!(out, "exhaustive_count: {}", h.exhaustive_count.render());
    }
    if let Some(m) = &analysis.matchings {
        out.push('\n');
        let _ = writeln!(out, "[matchings]");
        if let Some(bound) = m.lower_bound {
            let _ = writeln!(out, "lower_bound: {bound}");
        }
        let _ = writeln!(out, "prior_bound: {}", m.prior_bound);
        if let Some(k) = m.from_cycle_distinct {
            let _ = writeln!(out, "from_constructed_cycle: {k}");
        }
        let _ = writeln!(out, "exhaustive_count: {}", m.exhaustive_count.render());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::nanotube;

    #[test]
    fn validation_only_report_has_two_sections() {
        let g = nanotube(0);
        let text = write_report(&Analysis::validation_only(&g));
        assert!(text.starts_with("[graph]\nvertices: 20\nedges: 30\nfaces: 12\n"));
        assert!(text.contains("[validation]\ncubic: true\n"));
        assert!(!text.contains("[cyclic cutsets]"));
        assert!(!text.contains("[hamilton]"));
    }

    #[test]
    fn full_analysis_of_the_smallest_tube() {
        let g = nanotube(0);
        let analysis = analyze_graph(&g, &AnalyzeOptions::default()).unwrap();
        let cutsets = analysis.cutsets.as_ref().unwrap();
        assert_eq!(cutsets.smallest, Some(5));
        assert_eq!(cutsets.five_edge_cutsets, 12);
        assert_eq!(cutsets.trivial, 12);
        assert_eq!(cutsets.nontrivial, 0);
        let rings = analysis.rings.as_ref().unwrap();
        assert_eq!(rings.rings, 12);
        assert_eq!(rings.inner_face + rings.outer_face, 12);
        assert_eq!(rings.tube_wall, 0);
        let d = analysis.decomposition.as_ref().unwrap().as_ref().unwrap();
        assert_eq!(d.hexagon_rings, 0);
        assert_eq!(d.ring_profiles.len(), 0);
        let h = analysis.hamilton.as_ref().unwrap();
        assert_eq!(h.lower_bound, Some(10));
        assert_eq!(h.cycle.as_ref().unwrap().len(), 20);
        assert_eq!(h.face_path_pentagons, Some(6));
        assert_eq!(h.distinct_variants, Some(10));
        assert_eq!(h.exhaustive_count, OracleOutcome::Computed(30));
        let m = analysis.matchings.as_ref().unwrap();
        assert_eq!(m.lower_bound, Some(30));
        assert_eq!(m.prior_bound, 17);
        assert_eq!(m.from_cycle_distinct, Some(3));
        assert_eq!(
            m.exhaustive_count,
            OracleOutcome::Computed(BigUint::from(36u32))
        );
    }

    #[test]
    fn rendering_is_deterministic() {
        let g = nanotube(1);
        let opts = AnalyzeOptions::default();
        let a = write_report(&analyze_graph(&g, &opts).unwrap());
        let b = write_report(&analyze_graph(&g, &opts).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("nanotube: true\nhexagon_rings: 1\n"));
        assert!(a.contains("ring_profile[0]: (11111)/(11111)\n"));
    }

    #[test]
    fn budgets_skip_exhaustive_counts() {
        let g = nanotube(1);
        let opts = AnalyzeOptions {
            hamilton_budget: 20,
            matching_budget: 20,
        };
        let analysis = analyze_graph(&g, &opts).unwrap();
        let h = analysis.hamilton.as_ref().unwrap();
        assert_eq!(
            h.exhaustive_count,
            OracleOutcome::Skipped { n: 30, budget: 20 }
        );
        let text = write_report(&analysis);
        assert!(text.contains("exhaustive_count: skipped (n=30 above budget 20)"));
        assert!(text.contains("distinct_variants: 10"));
    }

    #[test]
    fn non_fullerene_input_stops_after_validation() {
        // A cube: cubic and planar, but with square faces.
        let rot = vec![
            vec![1, 3, 4],
            vec![2, 0, 5],
            vec![3, 1, 6],
            vec![0, 2, 7],
            vec![7, 5, 0],
            vec![4, 6, 1],
            vec![5, 7, 2],
            vec![6, 4, 3],
        ];
        let g = EmbeddedGraph::from_rotation(rot).unwrap();
        let analysis = analyze_graph(&g, &AnalyzeOptions::default()).unwrap();
        assert!(!analysis.validation.is_fullerene);
        assert!(analysis.cutsets.is_none());
        assert!(analysis.hamilton.is_none());
        let text = write_report(&analysis);
        assert!(text.contains("fullerene: false"));
    }
}
