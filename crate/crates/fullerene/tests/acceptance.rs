//! Acceptance battery: nine end-to-end criteria covering validation, cyclic
//! connectivity, the tube-structure equivalence, the ring dichotomy, the
//! Hamilton construction and its family bound, matching counts and bounds,
//! cap pentagon counts, and round trips. Each test prints exactly one
//! `criterion N: PASS/FAIL` line (visible with `--nocapture`) and fails the
//! build on any violation.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fullerene::{
    brute_force_hamilton, brute_force_hamilton_all, brute_force_hamilton_edges, build_hamilton,
    check_ring_dichotomy, contract_ring, count_perfect_matchings,
    count_perfect_matchings_deletion_contraction, cyclic_edge_connectivity,
    enumerate_hamilton_variants, find_face_rings, find_pentacaps, has_nontrivial_cyclic_5_cutset,
    nanotube, nanotube_decomposition, prior_matching_bound, read_planar_code, read_text_rotation,
    ring_type, six_pentagons_inside, verify_hamilton, write_planar_code, write_text_rotation,
    DichotomyArm, Edge, EmbeddedGraph, RingSide,
};

fn verdict(criterion: usize, failures: Vec<String>, summary: String) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS — {summary}");
    } else {
        println!("criterion {criterion}: FAIL — {}", failures.join("; "));
        panic!("criterion {criterion} failed: {}", failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, message: impl FnOnce() -> String) {
    if !ok {
        failures.push(message());
    }
}

fn c60() -> EmbeddedGraph {
    let path = format!(
        "{}/tests/fixtures/c60.planar_code",
        env!("CARGO_MANIFEST_DIR")
    );
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"));
    read_planar_code(&bytes).expect("fixture parses").remove(0)
}

#[test]
fn criterion_1_girth_and_validation() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for r in 0..=8 {
        let report = nanotube(r).validate_fullerene();
        check(&mut failures, report.is_fullerene, || {
            format!("r={r} does not validate: {report:?}")
        });
        check(&mut failures, report.pentagon_count == 12, || {
            format!("r={r} has {} pentagons", report.pentagon_count)
        });
        check(&mut failures, report.hexagon_count == 5 * r, || {
            format!("r={r} has {} hexagons", report.hexagon_count)
        });
        check(&mut failures, report.girth == Some(5), || {
            format!("r={r} has girth {:?}", report.girth)
        });
    }
    let elapsed = start.elapsed();
    check(&mut failures, elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}, budget 1 s")
    });
    verdict(
        1,
        failures,
        format!("9 tubes validated with correct face vectors and girth 5 in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_cyclic_edge_connectivity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for r in 0..=2 {
        match cyclic_edge_connectivity(&nanotube(r)) {
            Ok(5) => {}
            Ok(k) => failures.push(format!("r={r}: cyclic edge connectivity {k}")),
            Err(e) => failures.push(format!("r={r}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    check(&mut failures, elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}, budget 2 min")
    });
    verdict(
        2,
        failures,
        format!("exhaustive search confirms connectivity exactly 5 for r = 0..2 in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_tube_equivalence() {
    let mut failures = Vec::new();
    for r in 0..=5 {
        let g = nanotube(r);
        let nontrivial = has_nontrivial_cyclic_5_cutset(&g);
        match nanotube_decomposition(&g) {
            Ok(Some(d)) => {
                check(&mut failures, d.r == r, || {
                    format!("r={r}: decomposition reports {} rings", d.r)
                });
                check(&mut failures, nontrivial == (r >= 1), || {
                    format!("r={r}: nontrivial cutset present = {nontrivial}")
                });
            }
            Ok(None) => failures.push(format!("r={r}: no decomposition found")),
            Err(e) => failures.push(format!("r={r}: {e}")),
        }
    }
    let import = c60();
    let caps = find_pentacaps(&import).map(|c| c.len()).unwrap_or(usize::MAX);
    check(&mut failures, caps == 0, || {
        format!("imported 60-vertex graph has {caps} caps")
    });
    check(&mut failures, !has_nontrivial_cyclic_5_cutset(&import), || {
        "imported 60-vertex graph reports a nontrivial cutset".to_string()
    });
    match nanotube_decomposition(&import) {
        Ok(None) => {}
        Ok(Some(_)) => failures.push("imported 60-vertex graph decomposed as a tube".to_string()),
        Err(e) => failures.push(format!("imported 60-vertex graph: {e}")),
    }
    verdict(
        3,
        failures,
        "nontrivial cutsets and tube structure agree on 6 tubes and the imported negative case"
            .to_string(),
    );
}

#[test]
fn criterion_4_ring_dichotomy() {
    let mut failures = Vec::new();
    let mut corpus: Vec<(String, EmbeddedGraph)> = (0..=5)
        .map(|r| (format!("tube r={r}"), nanotube(r)))
        .collect();
    corpus.push(("imported n=60".to_string(), c60()));
    let mut rings_seen = 0usize;
    let mut walls_seen = 0usize;
    for (name, g) in &corpus {
        let rings = match find_face_rings(g) {
            Ok(rings) => rings,
            Err(e) => {
                failures.push(format!("{name}: ring search failed: {e}"));
                continue;
            }
        };
        rings_seen += rings.len();
        for ring in &rings {
            match check_ring_dichotomy(g, ring) {
                Ok(DichotomyArm::AllHexTenTen) => {
                    walls_seen += 1;
                    check(&mut failures, ring.inner_cycle.len() == 10, || {
                        format!("{name}: wall ring inner cycle length {}", ring.inner_cycle.len())
                    });
                    check(&mut failures, ring.outer_cycle.len() == 10, || {
                        format!("{name}: wall ring outer cycle length {}", ring.outer_cycle.len())
                    });
                    for side in [RingSide::Inner, RingSide::Outer] {
                        match ring_type(g, ring, side) {
                            Ok(t) => check(&mut failures, t.matches(&[1, 1, 1, 1, 1]), || {
                                format!("{name}: wall ring has type {t} from {side:?}")
                            }),
                            Err(e) => failures.push(format!("{name}: {e}")),
                        }
                    }
                }
                Ok(_) => {}
                Err(e) => failures.push(format!("{name}: dichotomy violated: {e}")),
            }
        }
    }
    verdict(
        4,
        failures,
        format!(
            "{rings_seen} rings across 7 graphs all classify; {walls_seen} tube walls are (11111) with 10-cycle boundaries"
        ),
    );
}

#[test]
fn criterion_5_hamilton_construction() {
    let mut failures = Vec::new();
    for r in 0..=5 {
        let g = nanotube(r);
        let d = nanotube_decomposition(&g).unwrap().unwrap();
        match build_hamilton(&d) {
            Ok((path, cycle)) => {
                check(&mut failures, verify_hamilton(&g, &cycle), || {
                    format!("r={r}: constructed cycle does not verify")
                });
                let expected = if r % 2 == 0 { 6 } else { 4 };
                check(&mut failures, path.pentagon_count == expected, || {
                    format!(
                        "r={r}: face path has {} pentagons, expected {expected}",
                        path.pentagon_count
                    )
                });
            }
            Err(e) => failures.push(format!("r={r}: {e}")),
        }
    }
    verdict(
        5,
        failures,
        "verified Hamilton cycles for r = 0..5 with face-path pentagon counts 6/4 by parity"
            .to_string(),
    );
}

#[test]
fn criterion_6_variant_family_bound() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let expected_minimum = [10, 10, 20, 20, 40, 40];
    let mut sizes = Vec::new();
    for r in 0..=5 {
        let g = nanotube(r);
        let d = nanotube_decomposition(&g).unwrap().unwrap();
        match enumerate_hamilton_variants(&d) {
            Ok(variants) => {
                sizes.push(variants.len());
                check(
                    &mut failures,
                    variants.len() >= expected_minimum[r],
                    || {
                        format!(
                            "r={r}: {} variants, need at least {}",
                            variants.len(),
                            expected_minimum[r]
                        )
                    },
                );
                if r <= 2 {
                    match brute_force_hamilton_all(&g, 40) {
                        Ok(all) => {
                            let all_sets: BTreeSet<&BTreeSet<Edge>> =
                                all.iter().map(|hc| &hc.edges).collect();
                            let missing = variants
                                .iter()
                                .filter(|hc| !all_sets.contains(&hc.edges))
                                .count();
                            check(&mut failures, missing == 0, || {
                                format!("r={r}: {missing} variants outside the exhaustive set")
                            });
                        }
                        Err(e) => failures.push(format!("r={r}: exhaustive search: {e}")),
                    }
                }
            }
            Err(e) => failures.push(format!("r={r}: {e}")),
        }
    }
    let dodecahedron = nanotube(0);
    let by_vertices = brute_force_hamilton(&dodecahedron, 40).map(|s| s.count);
    let by_edges = brute_force_hamilton_edges(&dodecahedron, 40).map(|s| s.count);
    match (by_vertices, by_edges) {
        (Ok(a), Ok(b)) => {
            check(&mut failures, a == b, || {
                format!("independent searches disagree: {a} vs {b}")
            });
            check(&mut failures, a == 30, || {
                format!("dodecahedron total {a}, expected 30")
            });
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("search failed: {e}")),
    }
    let elapsed = start.elapsed();
    check(&mut failures, elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}, budget 5 min")
    });
    verdict(
        6,
        failures,
        format!(
            "family sizes {sizes:?} meet the bound, r <= 2 families sit inside the exhaustive sets, dodecahedron total 30 confirmed twice in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_7_matching_counts() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let floors = [(0usize, 30u64), (1, 30), (2, 60)];
    let mut counts = Vec::new();
    for (r, floor) in floors {
        let g = nanotube(r);
        let n = g.n();
        match count_perfect_matchings(&g, 60) {
            Ok(count) => {
                check(&mut failures, count >= floor.into(), || {
                    format!("n={n}: {count} matchings below floor {floor}")
                });
                check(
                    &mut failures,
                    count >= prior_matching_bound(n).into(),
                    || {
                        format!(
                            "n={n}: {count} matchings below prior bound {}",
                            prior_matching_bound(n)
                        )
                    },
                );
                counts.push(count);
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    let dodecahedron = nanotube(0);
    match (
        count_perfect_matchings(&dodecahedron, 60),
        count_perfect_matchings_deletion_contraction(&dodecahedron, 60),
    ) {
        (Ok(a), Ok(b)) => {
            check(&mut failures, a == b, || {
                format!("independent counters disagree: {a} vs {b}")
            });
            check(&mut failures, a == 36u32.into(), || {
                format!("dodecahedron count {a}, expected 36")
            });
        }
        (Err(e), _) | (_, Err(e)) => failures.push(format!("counter failed: {e}")),
    }
    let elapsed = start.elapsed();
    check(&mut failures, elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}, budget 2 min")
    });
    verdict(
        7,
        failures,
        format!(
            "counts {counts:?} for n = 20, 30, 40 meet both bounds; dodecahedron 36 confirmed twice in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_8_cap_pentagon_counts() {
    let mut failures = Vec::new();
    let mut caps_checked = 0usize;
    for r in 0..=5 {
        let g = nanotube(r);
        match find_pentacaps(&g) {
            Ok(caps) => {
                for cap in &caps {
                    caps_checked += 1;
                    match six_pentagons_inside(&g, &cap.boundary) {
                        Ok(6) => {}
                        Ok(k) => failures.push(format!(
                            "r={r}: cap at face {} encloses {k} pentagons",
                            cap.center_face
                        )),
                        Err(e) => failures.push(format!("r={r}: {e}")),
                    }
                }
            }
            Err(e) => failures.push(format!("r={r}: {e}")),
        }
    }
    verdict(
        8,
        failures,
        format!("{caps_checked} cap boundaries each enclose exactly 6 pentagons"),
    );
}

#[test]
fn criterion_9_round_trips() {
    let mut failures = Vec::new();
    for r in 1..=5 {
        let d = nanotube_decomposition(&nanotube(r)).unwrap().unwrap();
        match contract_ring(&d) {
            Ok(contracted) => {
                let reference = nanotube(r - 1);
                check(&mut failures, contracted.graph.n() == reference.n(), || {
                    format!(
                        "r={r}: contracted to {} vertices, expected {}",
                        contracted.graph.n(),
                        reference.n()
                    )
                });
                let got = contracted.graph.validate_fullerene();
                let want = reference.validate_fullerene();
                check(
                    &mut failures,
                    (got.pentagon_count, got.hexagon_count)
                        == (want.pentagon_count, want.hexagon_count),
                    || {
                        format!(
                            "r={r}: contracted face vector ({}, {}), expected ({}, {})",
                            got.pentagon_count,
                            got.hexagon_count,
                            want.pentagon_count,
                            want.hexagon_count
                        )
                    },
                );
                match nanotube_decomposition(&contracted.graph) {
                    Ok(Some(rd)) => check(&mut failures, rd.r == r - 1, || {
                        format!("r={r}: contracted tube reports {} rings", rd.r)
                    }),
                    Ok(None) => {
                        failures.push(format!("r={r}: contracted graph lost tube structure"))
                    }
                    Err(e) => failures.push(format!("r={r}: {e}")),
                }
            }
            Err(e) => failures.push(format!("r={r}: contraction failed: {e}")),
        }
    }
    for r in 0..=3 {
        let g = nanotube(r);
        let text = write_text_rotation(&g).unwrap();
        match read_text_rotation(text.as_bytes()) {
            Ok(back) => check(
                &mut failures,
                write_text_rotation(&back).unwrap() == text,
                || format!("r={r}: text round trip not byte-identical"),
            ),
            Err(e) => failures.push(format!("r={r}: text parse: {e}")),
        }
        let code = write_planar_code(&[&g]).unwrap();
        match read_planar_code(&code) {
            Ok(graphs) => check(
                &mut failures,
                graphs.len() == 1 && write_planar_code(&[&graphs[0]]).unwrap() == code,
                || format!("r={r}: planar code round trip not byte-identical"),
            ),
            Err(e) => failures.push(format!("r={r}: planar code parse: {e}")),
        }
    }
    verdict(
        9,
        failures,
        "ring contraction reproduces the next smaller tube for r = 1..5; both formats round-trip byte-identically".to_string(),
    );
}
