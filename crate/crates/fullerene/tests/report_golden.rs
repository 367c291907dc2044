//! Byte-exact comparisons of rendered reports against frozen fixture files,
//! pinning both the numbers and the output format.

use fullerene::{analyze_graph, nanotube, write_report, AnalyzeOptions};

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

#[test]
fn reports_for_the_three_smallest_tubes_match_the_frozen_fixtures() {
    for r in 0..=2 {
        let g = nanotube(r);
        let text = write_report(&analyze_graph(&g, &AnalyzeOptions::default()).unwrap());
        assert_eq!(
            text,
            fixture(&format!("report_r{r}.txt")),
            "report for the {r}-ring tube drifted from its frozen fixture"
        );
    }
}

#[test]
fn repeated_runs_render_byte_identically() {
    let g = nanotube(2);
    let opts = AnalyzeOptions::default();
    let first = write_report(&analyze_graph(&g, &opts).unwrap());
    for _ in 0..3 {
        let again = write_report(&analyze_graph(&g, &opts).unwrap());
        assert_eq!(first, again);
    }
}
