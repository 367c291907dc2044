//! Constructive Hamilton cycles in tubular fullerenes.
//!
//! The construction works with *face paths*: paths in the dual graph whose
//! boundary — the set of edges lying on exactly one face of the path — forms a
//! single closed curve. When that curve visits every vertex it is a Hamilton
//! cycle, and [`face_path_boundary`] extracts it.
//!
//! For a tube decomposition (two pentagonal caps joined by `r` hexagonal
//! rings, see [`NanotubeDecomposition`]) the module builds such face paths
//! recursively: [`contract_ring`] removes the ring next to cap `a`, producing
//! a decomposition with `r − 1` rings; a face path built there is lifted back
//! by [`expand_face_path`], which rewrites only the far-cap tail of the path.
//! Explicit templates cover `r ≤ 2`. Every produced cycle is re-verified
//! against the host graph, so a construction bug surfaces as an error rather
//! than a wrong answer.
//!
//! The choice of starting petal (5 ways) and of a sweep direction at each
//! even-ring level doubles the number of distinct cycles with every second
//! ring; [`enumerate_hamilton_variants`] materializes the whole family.
//! Independent exhaustive searches ([`brute_force_hamilton`] by vertex
//! extension, [`brute_force_hamilton_edges`] by edge selection) serve as
//! oracles on small instances.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Edge, EmbeddedGraph, Face, GraphError};
use crate::rings::{
    find_face_rings, find_pentacaps, ring_type, NanotubeDecomposition, Pentacap, RingError,
    RingSide,
};

/// Default size cap for the exhaustive Hamilton-cycle searches.
pub const HAMILTON_SEARCH_BUDGET: usize = 40;

/// Errors from face-path manipulation and Hamilton-cycle construction.
#[derive(Debug, Error)]
pub enum HamiltonError {
    /// A face sequence is not a valid path in the dual graph.
    #[error("invalid face path: {0}")]
    BadPath(String),
    /// The boundary of the face path is not one single closed curve.
    #[error("face-path boundary is not a single cycle: {0}")]
    NotSingleCycle(String),
    /// The boundary is a single cycle but misses some vertices.
    #[error("face-path boundary covers {covered} of {n} vertices")]
    NotSpanning { covered: usize, n: usize },
    /// A face path does not have the shape an expansion step expects.
    #[error("face path does not match the expected pattern: {0}")]
    PatternMismatch(String),
    /// An exhaustive search was asked to run beyond its size budget.
    #[error("graph has {n} vertices, above the search budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    /// Ring contraction needs at least one hexagonal ring.
    #[error("the decomposition has no hexagonal rings to contract")]
    NoRings,
    /// A ring/decomposition-level inconsistency.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// A graph-level inconsistency.
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn inconsistent(msg: impl Into<String>) -> HamiltonError {
    HamiltonError::Ring(RingError::InconsistentStructure(msg.into()))
}

/// A path in the dual graph: a sequence of distinct faces in which
/// consecutive faces share exactly one edge.
///
/// Face indices refer to positions in `g.trace_faces()` for the graph the
/// path was built against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePath {
    /// Face indices in path order.
    pub faces: Vec<usize>,
    /// Number of pentagonal faces on the path.
    pub pentagon_count: usize,
    /// `shared_edges[i]` is the edge shared by `faces[i]` and `faces[i + 1]`.
    pub shared_edges: Vec<Edge>,
}

impl FacePath {
    /// Validates a face sequence against `g` and builds the path.
    pub fn new(g: &EmbeddedGraph, faces: Vec<usize>) -> Result<Self, HamiltonError> {
        let all = g.trace_faces()?;
        Self::from_traced(&all, faces)
    }

    /// Same as [`FacePath::new`] but reuses already-traced faces.
    pub fn from_traced(all: &[Face], faces: Vec<usize>) -> Result<Self, HamiltonError> {
        if faces.is_empty() {
            return Err(HamiltonError::BadPath("empty face sequence".into()));
        }
        for &f in &faces {
            if f >= all.len() {
                return Err(HamiltonError::BadPath(format!(
                    "face index {f} out of range ({} faces)",
                    all.len()
                )));
            }
        }
        let distinct: BTreeSet<usize> = faces.iter().copied().collect();
        if distinct.len() != faces.len() {
            return Err(HamiltonError::BadPath("repeated face in sequence".into()));
        }
        let mut shared_edges = Vec::with_capacity(faces.len().saturating_sub(1));
        for w in faces.windows(2) {
            let a = all[w[0]].edge_set();
            let b = all[w[1]].edge_set();
            let mut common = a.intersection(&b);
            match (common.next(), common.next()) {
                (Some(&e), None) => shared_edges.push(e),
                (None, _) => {
                    return Err(HamiltonError::BadPath(format!(
                        "faces {} and {} are consecutive but share no edge",
                        w[0], w[1]
                    )))
                }
                _ => {
                    return Err(HamiltonError::BadPath(format!(
                        "faces {} and {} share more than one edge",
                        w[0], w[1]
                    )))
                }
            }
        }
        let pentagon_count = faces.iter().filter(|&&f| all[f].len() == 5).count();
        Ok(FacePath {
            faces,
            pentagon_count,
            shared_edges,
        })
    }

    /// Number of faces on the path.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// True when the path has no faces (never produced by the constructor).
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// A spanning cycle: every vertex exactly once, consecutive vertices
/// adjacent, wrapping around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    /// Vertices in cyclic order.
    pub vertices: Vec<usize>,
    /// The cycle's edge set (`vertices.len()` edges).
    pub edges: BTreeSet<Edge>,
}

impl HamiltonCycle {
    /// Builds the cycle from a vertex sequence, deriving the edge set.
    /// No adjacency validation happens here; see [`verify_hamilton`].
    pub fn from_vertex_cycle(vertices: Vec<usize>) -> Self {
        let edges = vertices
            .iter()
            .zip(vertices.iter().cycle().skip(1))
            .map(|(&u, &v)| Edge::new(u, v))
            .collect();
        HamiltonCycle { vertices, edges }
    }

    /// Cycle length (= number of vertices = number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True when the cycle is empty.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Extracts the boundary of a face path: the edges lying on exactly one face
/// of the path. Succeeds only when that edge set is a single closed curve
/// visiting every vertex of `g`, i.e. a Hamilton cycle.
pub fn face_path_boundary(
    g: &EmbeddedGraph,
    path: &FacePath,
) -> Result<HamiltonCycle, HamiltonError> {
    let all = g.trace_faces()?;
    let mut cover: BTreeMap<Edge, usize> = BTreeMap::new();
    for &f in &path.faces {
        if f >= all.len() {
            return Err(HamiltonError::BadPath(format!(
                "face index {f} out of range ({} faces)",
                all.len()
            )));
        }
        for e in all[f].edges() {
            *cover.entry(e).or_insert(0) += 1;
        }
    }
    let boundary: BTreeSet<Edge> = cover
        .iter()
        .filter(|&(_, &c)| c == 1)
        .map(|(&e, _)| e)
        .collect();
    if boundary.is_empty() {
        return Err(HamiltonError::NotSingleCycle(
            "boundary is empty".into(),
        ));
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in &boundary {
        let (u, v) = e.endpoints();
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for (&v, nbrs) in &adj {
        if nbrs.len() != 2 {
            return Err(HamiltonError::NotSingleCycle(format!(
                "vertex {v} meets {} boundary edges",
                nbrs.len()
            )));
        }
    }
    // Walk the curve from its smallest vertex, starting toward the smaller
    // neighbor so the output is deterministic.
    let start = *adj.keys().next().expect("nonempty boundary");
    let mut vertices = vec![start];
    let first = &adj[&start];
    let mut prev = start;
    let mut cur = first[0].min(first[1]);
    while cur != start {
        vertices.push(cur);
        let nbrs = &adj[&cur];
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        prev = cur;
        cur = next;
    }
    if vertices.len() != adj.len() {
        return Err(HamiltonError::NotSingleCycle(format!(
            "boundary splits into several closed curves ({} of {} vertices on one)",
            vertices.len(),
            adj.len()
        )));
    }
    if vertices.len() != g.n() {
        return Err(HamiltonError::NotSpanning {
            covered: vertices.len(),
            n: g.n(),
        });
    }
    Ok(HamiltonCycle {
        vertices,
        edges: boundary,
    })
}

/// Checks that `hc` really is a Hamilton cycle of `g`: every vertex exactly
/// once, consecutive vertices adjacent (cyclically), edge set consistent.
pub fn verify_hamilton(g: &EmbeddedGraph, hc: &HamiltonCycle) -> bool {
    let n = g.n();
    if hc.vertices.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &hc.vertices {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for i in 0..n {
        let u = hc.vertices[i];
        let v = hc.vertices[(i + 1) % n];
        if !g.has_edge(u, v) {
            return false;
        }
    }
    let derived: BTreeSet<Edge> = hc
        .vertices
        .iter()
        .zip(hc.vertices.iter().cycle().skip(1))
        .map(|(&u, &v)| Edge::new(u, v))
        .collect();
    derived == hc.edges
}

// ---------------------------------------------------------------------------
// Ring contraction
// ---------------------------------------------------------------------------

/// Contracts the hexagonal ring adjacent to cap `a`: deletes the boundary
/// cycle `C_1`, reconnecting `C_0` directly to what used to lie below `C_1`.
/// The result is a tube decomposition with one ring fewer, on `n − 10`
/// vertices, anchored compatibly with the input (cap `a` and the positions
/// along `C_0` are preserved; deeper cycles shift by one position so the
/// spoke-parity rule keeps holding).
pub fn contract_ring(
    d: &NanotubeDecomposition,
) -> Result<NanotubeDecomposition, HamiltonError> {
    if d.r == 0 {
        return Err(HamiltonError::NoRings);
    }
    let g = &d.graph;
    let n = g.n();
    let c1 = d.cycles[1].clone();
    let c1_set: BTreeSet<usize> = c1.iter().copied().collect();

    // Third neighbor of the cycle vertex at position `j`, i.e. the one not on
    // the cycle itself.
    let third = |j: usize| -> Result<usize, HamiltonError> {
        let v = c1[j];
        let prev = c1[(j + 9) % 10];
        let next = c1[(j + 1) % 10];
        g.neighbors(v)
            .iter()
            .copied()
            .find(|&x| x != prev && x != next)
            .ok_or_else(|| inconsistent(format!("cycle vertex {v} has no neighbor off the cycle")))
    };

    let mut rotation: Vec<Vec<usize>> = g.rotation().to_vec();
    for j in 0..5 {
        let up_pos = 2 * j; // attaches toward cap a
        let down_pos = (2 * j + 9) % 10; // attaches away from cap a
        let a = third(up_pos)?;
        let b = third(down_pos)?;
        let slot_a = rotation[a]
            .iter()
            .position(|&x| x == c1[up_pos])
            .ok_or_else(|| inconsistent("spoke endpoint not in rotation"))?;
        rotation[a][slot_a] = b;
        let slot_b = rotation[b]
            .iter()
            .position(|&x| x == c1[down_pos])
            .ok_or_else(|| inconsistent("spoke endpoint not in rotation"))?;
        rotation[b][slot_b] = a;
    }

    // Dense renumbering that skips the deleted cycle.
    let mut map = vec![usize::MAX; n];
    let mut next_id = 0;
    for v in 0..n {
        if !c1_set.contains(&v) {
            map[v] = next_id;
            next_id += 1;
        }
    }
    let mut new_rot: Vec<Vec<usize>> = Vec::with_capacity(n - 10);
    for v in 0..n {
        if c1_set.contains(&v) {
            continue;
        }
        let row: Vec<usize> = rotation[v].iter().map(|&x| map[x]).collect();
        if row.iter().any(|&x| x == usize::MAX) {
            return Err(inconsistent(format!(
                "vertex {v} still references the deleted cycle"
            )));
        }
        new_rot.push(row);
    }
    let gbar = EmbeddedGraph::from_rotation(new_rot)?;
    let report = gbar.validate_fullerene();
    if !report.is_fullerene {
        return Err(inconsistent(
            "contraction did not produce a valid fullerene",
        ));
    }
    let rbar = d.r - 1;
    if report.hexagon_count != 5 * rbar {
        return Err(inconsistent(format!(
            "contraction left {} hexagons, expected {}",
            report.hexagon_count,
            5 * rbar
        )));
    }

    // Boundary cycles in the new labeling. Positions on C_0 are preserved;
    // every deeper cycle shifts forward by one position, which keeps the
    // spoke-parity rule intact across the new joint.
    let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(rbar + 1);
    cycles.push(d.cycles[0].iter().map(|&v| map[v]).collect());
    for i in 1..=rbar {
        let src = &d.cycles[i + 1];
        cycles.push((0..10).map(|q| map[src[(q + 9) % 10]]).collect());
    }

    // Re-identify the caps by their center faces' vertex sets.
    let center_set = |cap: &Pentacap| -> BTreeSet<usize> {
        let b: BTreeSet<usize> = cap.boundary.iter().copied().collect();
        cap.vertices
            .iter()
            .copied()
            .filter(|v| !b.contains(v))
            .collect()
    };
    let remap_set = |s: &BTreeSet<usize>| -> BTreeSet<usize> {
        s.iter().map(|&v| map[v]).collect()
    };
    let want_a = remap_set(&center_set(&d.cap_a));
    let want_b = remap_set(&center_set(&d.cap_b));
    let caps = find_pentacaps(&gbar)?;
    let pick = |want: &BTreeSet<usize>| -> Result<Pentacap, HamiltonError> {
        let mut hits = caps.iter().filter(|c| center_set(c) == *want);
        match (hits.next(), hits.next()) {
            (Some(c), None) => Ok(c.clone()),
            _ => Err(inconsistent(
                "cap center does not survive contraction uniquely",
            )),
        }
    };
    let cap_a = pick(&want_a)?;
    let cap_b = pick(&want_b)?;

    // Consistency: cap boundaries coincide with the terminal cycles, and the
    // spoke-parity rule holds between consecutive cycles.
    let as_set = |vs: &[usize]| -> BTreeSet<usize> { vs.iter().copied().collect() };
    if as_set(&cap_a.boundary) != as_set(&cycles[0]) {
        return Err(inconsistent("cap a boundary does not match C_0"));
    }
    if as_set(&cap_b.boundary) != as_set(&cycles[rbar]) {
        return Err(inconsistent("cap b boundary does not match the last cycle"));
    }
    for i in 0..rbar {
        for q in 0..10 {
            let expect = q % 2 == i % 2;
            if gbar.has_edge(cycles[i][q], cycles[i + 1][q]) != expect {
                return Err(inconsistent(format!(
                    "spoke parity broken between cycles {i} and {} at position {q}",
                    i + 1
                )));
            }
        }
    }

    // Ring profiles for the surviving rings.
    let mut ring_types = Vec::with_capacity(rbar);
    if rbar > 0 {
        let rings = find_face_rings(&gbar)?;
        for i in 0..rbar {
            let a_set = as_set(&cycles[i]);
            let b_set = as_set(&cycles[i + 1]);
            let ring = rings
                .iter()
                .find(|rg| {
                    let ri: BTreeSet<usize> = rg.inner_cycle.iter().copied().collect();
                    let ro: BTreeSet<usize> = rg.outer_cycle.iter().copied().collect();
                    (ri == a_set && ro == b_set) || (ri == b_set && ro == a_set)
                })
                .ok_or_else(|| {
                    inconsistent(format!("no face ring between cycles {i} and {}", i + 1))
                })?;
            let t_in = ring_type(&gbar, ring, RingSide::Inner)?;
            let t_out = ring_type(&gbar, ring, RingSide::Outer)?;
            if !t_in.matches(&[1, 1, 1, 1, 1]) || !t_out.matches(&[1, 1, 1, 1, 1]) {
                return Err(inconsistent(format!(
                    "ring between cycles {i} and {} has profile {t_in}/{t_out}",
                    i + 1
                )));
            }
            ring_types.push((t_in, t_out));
        }
    }

    Ok(NanotubeDecomposition {
        graph: gbar,
        r: rbar,
        cap_a,
        cap_b,
        cycles,
        ring_types,
    })
}

// ---------------------------------------------------------------------------
// Face roles: naming the faces of a tube decomposition
// ---------------------------------------------------------------------------

/// Coordinate-level name for a face of a tube decomposition. Recursion and
/// expansion manipulate these names and materialize them per decomposition,
/// so the same abstract path template works on any isomorphic copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum FaceRole {
    /// Center pentagon of cap `a`.
    TopCenter,
    /// `k`-th petal pentagon of cap `a` (petal `k` touches positions
    /// `2k+1 .. 2k+3` of `C_0`).
    TopPetal(usize),
    /// Hexagon `k` of ring `i` (touches positions `2k + (i mod 2) ..` of `C_i`).
    RingHex(usize, usize),
    /// `k`-th petal pentagon of cap `b` (touches positions
    /// `2k + (r mod 2) ..` of `C_r`).
    BottomPetal(usize),
    /// Center pentagon of cap `b`.
    BottomCenter,
}

impl std::fmt::Display for FaceRole {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FaceRole::TopCenter => write!(f, "T"),
            FaceRole::TopPetal(k) => write!(f, "P{k}"),
            FaceRole::RingHex(i, k) => write!(f, "H{i}.{k}"),
            FaceRole::BottomPetal(k) => write!(f, "Q{k}"),
            FaceRole::BottomCenter => write!(f, "B"),
        }
    }
}

/// Bijection between the faces of `d.graph` and their roles.
struct RoleTable {
    by_role: BTreeMap<FaceRole, usize>,
    by_face: Vec<FaceRole>,
}

impl RoleTable {
    fn face(&self, role: FaceRole) -> Result<usize, HamiltonError> {
        self.by_role
            .get(&role)
            .copied()
            .ok_or_else(|| inconsistent(format!("no face plays role {role}")))
    }
}

/// Builds the role table for a decomposition by locating each face through
/// the boundary-cycle vertices it must contain.
fn role_table(d: &NanotubeDecomposition) -> Result<RoleTable, HamiltonError> {
    let faces = d.graph.trace_faces()?;
    let sets: Vec<BTreeSet<usize>> = faces.iter().map(|f| f.vertex_set()).collect();
    let mut by_role = BTreeMap::new();
    let mut by_face: Vec<Option<FaceRole>> = vec![None; faces.len()];
    let put = |role: FaceRole, idx: usize, by_role: &mut BTreeMap<FaceRole, usize>, by_face: &mut Vec<Option<FaceRole>>| -> Result<(), HamiltonError> {
        if by_face[idx].is_some() {
            return Err(inconsistent(format!(
                "face {idx} would play two roles ({} and {role})",
                by_face[idx].unwrap()
            )));
        }
        by_face[idx] = Some(role);
        by_role.insert(role, idx);
        Ok(())
    };
    let find3 = |a: usize, b: usize, c: usize| -> Result<usize, HamiltonError> {
        let mut hit = None;
        for (idx, s) in sets.iter().enumerate() {
            if s.contains(&a) && s.contains(&b) && s.contains(&c) {
                if hit.is_some() {
                    return Err(inconsistent(format!(
                        "vertices {a},{b},{c} lie on more than one common face"
                    )));
                }
                hit = Some(idx);
            }
        }
        hit.ok_or_else(|| inconsistent(format!("no face contains vertices {a},{b},{c}")))
    };

    put(FaceRole::TopCenter, d.cap_a.center_face, &mut by_role, &mut by_face)?;
    put(FaceRole::BottomCenter, d.cap_b.center_face, &mut by_role, &mut by_face)?;
    for k in 0..5 {
        let p = find3(
            d.vertex(0, 2 * k + 1),
            d.vertex(0, 2 * k + 2),
            d.vertex(0, 2 * k + 3),
        )?;
        put(FaceRole::TopPetal(k), p, &mut by_role, &mut by_face)?;
        let t = 2 * k + d.r % 2;
        let q = find3(
            d.vertex(d.r, t),
            d.vertex(d.r, t + 1),
            d.vertex(d.r, t + 2),
        )?;
        if q == d.cap_b.center_face {
            return Err(inconsistent("cap b center face doubles as a petal"));
        }
        put(FaceRole::BottomPetal(k), q, &mut by_role, &mut by_face)?;
    }
    for i in 0..d.r {
        for k in 0..5 {
            let s = 2 * k + i % 2;
            let h = find3(
                d.vertex(i, s),
                d.vertex(i, s + 1),
                d.vertex(i, s + 2),
            )?;
            put(FaceRole::RingHex(i, k), h, &mut by_role, &mut by_face)?;
        }
    }
    if by_role.len() != faces.len() {
        return Err(inconsistent(format!(
            "role table covers {} of {} faces",
            by_role.len(),
            faces.len()
        )));
    }
    let by_face: Vec<FaceRole> = by_face.into_iter().map(|r| r.unwrap()).collect();
    Ok(RoleTable { by_role, by_face })
}

// ---------------------------------------------------------------------------
// Path templates and expansion in role space
// ---------------------------------------------------------------------------

/// Petal index arithmetic modulo 5.
fn pm(x: i64) -> usize {
    x.rem_euclid(5) as usize
}

/// The four slots swept by a run entered from spine slot `s`: ascending runs
/// cover `s+1 .. s+4`, descending runs cover `s .. s−3` (all mod 5).
fn run_slots(s: usize, dir: i8) -> [usize; 4] {
    let s = s as i64;
    if dir > 0 {
        [pm(s + 1), pm(s + 2), pm(s + 3), pm(s + 4)]
    } else {
        [pm(s), pm(s - 1), pm(s - 2), pm(s - 3)]
    }
}

/// The spine slot for the next level after a run from spine `s` in direction
/// `dir`.
fn spine_after(s: usize, dir: i8) -> usize {
    pm(s as i64 - dir as i64)
}

/// Number of independent direction choices for a tube with `r` rings.
fn direction_count(r: usize) -> usize {
    r / 2 + 1
}

/// Explicit role templates for small tubes. `petal` selects the cap-`a`
/// petal the path leaves through; `dirs` supplies the sweep directions.
fn base_roles(r: usize, petal: usize, dirs: &[i8]) -> Vec<FaceRole> {
    let a = petal % 5;
    let mut roles = vec![FaceRole::TopCenter, FaceRole::TopPetal(a)];
    match r {
        0 => {
            for s in run_slots(a, dirs[0]) {
                roles.push(FaceRole::BottomPetal(s));
            }
        }
        1 => {
            for s in run_slots(a, dirs[0]) {
                roles.push(FaceRole::RingHex(0, s));
            }
            roles.push(FaceRole::BottomPetal(spine_after(a, dirs[0])));
            roles.push(FaceRole::BottomCenter);
        }
        2 => {
            for s in run_slots(a, dirs[0]) {
                roles.push(FaceRole::RingHex(0, s));
            }
            let s1 = spine_after(a, dirs[0]);
            roles.push(FaceRole::RingHex(1, s1));
            for s in run_slots(s1, dirs[1]) {
                roles.push(FaceRole::BottomPetal(s));
            }
        }
        _ => unreachable!("templates only cover r <= 2"),
    }
    roles
}

/// Rewrites a role path built for `target_r − 1` rings into one for
/// `target_r` rings. Only the cap-`b` tail changes; the head lifts verbatim.
///
/// * odd → even target: tail `[Q_b, B]` becomes `[H(r−1).b, run from spine b]`
///   (two possible directions — `branch` picks one);
/// * even → odd target: tail `[4-petal run]` becomes
///   `[same run on ring r−1, Q_e, B]` where `e` continues the spine rule.
fn expand_roles(
    roles: &[FaceRole],
    target_r: usize,
    branch: i8,
) -> Result<Vec<FaceRole>, HamiltonError> {
    let len = roles.len();
    let head_ok = |head: &[FaceRole]| -> Result<(), HamiltonError> {
        for role in head {
            if matches!(role, FaceRole::BottomPetal(_) | FaceRole::BottomCenter) {
                return Err(HamiltonError::PatternMismatch(format!(
                    "cap-b face {role} appears outside the path tail"
                )));
            }
        }
        Ok(())
    };
    if target_r % 2 == 0 {
        if len < 2 {
            return Err(HamiltonError::PatternMismatch(
                "path too short for the cap-b tail".into(),
            ));
        }
        let b = match (roles[len - 2], roles[len - 1]) {
            (FaceRole::BottomPetal(b), FaceRole::BottomCenter) => b,
            (x, y) => {
                return Err(HamiltonError::PatternMismatch(format!(
                    "expected the path to end with a cap-b petal then its center, found {x}, {y}"
                )))
            }
        };
        head_ok(&roles[..len - 2])?;
        let mut out = roles[..len - 2].to_vec();
        out.push(FaceRole::RingHex(target_r - 1, b));
        for s in run_slots(b, branch) {
            out.push(FaceRole::BottomPetal(s));
        }
        Ok(out)
    } else {
        if len < 4 {
            return Err(HamiltonError::PatternMismatch(
                "path too short for the cap-b tail".into(),
            ));
        }
        let mut tail = [0usize; 4];
        for (t, role) in roles[len - 4..].iter().enumerate() {
            match role {
                FaceRole::BottomPetal(k) => tail[t] = *k,
                other => {
                    return Err(HamiltonError::PatternMismatch(format!(
                        "expected four cap-b petals at the path tail, found {other}"
                    )))
                }
            }
        }
        head_ok(&roles[..len - 4])?;
        let step = pm(tail[1] as i64 - tail[0] as i64);
        let dir: i8 = match step {
            1 => 1,
            4 => -1,
            _ => {
                return Err(HamiltonError::PatternMismatch(format!(
                    "cap-b petals {} and {} are not consecutive slots",
                    tail[0], tail[1]
                )))
            }
        };
        for t in 1..3 {
            if pm(tail[t + 1] as i64 - tail[t] as i64) != step {
                return Err(HamiltonError::PatternMismatch(
                    "cap-b petal run changes direction".into(),
                ));
            }
        }
        let c = tail[0];
        // The run was entered from spine c−1 (ascending) or c (descending);
        // the reinstated petal continues the spine rule one level further.
        let s_prev = if dir > 0 { pm(c as i64 - 1) } else { c };
        let e = spine_after(s_prev, dir);
        let mut out = roles[..len - 4].to_vec();
        for t in 0..4 {
            out.push(FaceRole::RingHex(
                target_r - 1,
                pm(c as i64 + i64::from(dir) * t as i64),
            ));
        }
        out.push(FaceRole::BottomPetal(e));
        out.push(FaceRole::BottomCenter);
        Ok(out)
    }
}

/// Parity of the ring count of the *expanded* (target) tube, selecting which
/// tail rewrite [`expand_face_path`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TubeParity {
    /// The expanded tube has an even number of rings.
    Even,
    /// The expanded tube has an odd number of rings.
    Odd,
}

impl TubeParity {
    /// The parity of a ring count.
    pub fn of(r: usize) -> Self {
        if r % 2 == 0 {
            TubeParity::Even
        } else {
            TubeParity::Odd
        }
    }
}

fn materialize(table: &RoleTable, roles: &[FaceRole]) -> Result<Vec<usize>, HamiltonError> {
    roles.iter().map(|&role| table.face(role)).collect()
}

fn decode(table: &RoleTable, path: &FacePath) -> Result<Vec<FaceRole>, HamiltonError> {
    path.faces
        .iter()
        .map(|&f| {
            table
                .by_face
                .get(f)
                .copied()
                .ok_or_else(|| HamiltonError::BadPath(format!("face {f} out of range")))
        })
        .collect()
}

fn expand_with_branch(
    path: &FacePath,
    contracted: &NanotubeDecomposition,
    d: &NanotubeDecomposition,
    branch: i8,
) -> Result<FacePath, HamiltonError> {
    let small_table = role_table(contracted)?;
    let roles = decode(&small_table, path)?;
    let expanded = expand_roles(&roles, d.r, branch)?;
    let big_table = role_table(d)?;
    FacePath::new(&d.graph, materialize(&big_table, &expanded)?)
}

/// Lifts a face path built on `contract_ring(d)` to one on `d` by rewriting
/// its cap-`b` tail. `path`'s face indices must refer to
/// `contract_ring(d).graph.trace_faces()`.
///
/// `parity` must match the parity of `d.r`. When the expanded tube has an
/// even ring count both sweep directions fit the pattern; the
/// lexicographically smaller face sequence is returned.
pub fn expand_face_path(
    path: &FacePath,
    d: &NanotubeDecomposition,
    parity: TubeParity,
) -> Result<FacePath, HamiltonError> {
    if parity != TubeParity::of(d.r) {
        return Err(HamiltonError::PatternMismatch(format!(
            "decomposition has {} rings, which does not have the requested parity",
            d.r
        )));
    }
    let contracted = contract_ring(d)?;
    match parity {
        TubeParity::Odd => expand_with_branch(path, &contracted, d, 1),
        TubeParity::Even => {
            let up = expand_with_branch(path, &contracted, d, 1)?;
            let down = expand_with_branch(path, &contracted, d, -1)?;
            Ok(if up.faces <= down.faces { up } else { down })
        }
    }
}

fn hamilton_with_choices(
    d: &NanotubeDecomposition,
    petal: usize,
    dirs: &[i8],
) -> Result<(FacePath, HamiltonCycle), HamiltonError> {
    let m = direction_count(d.r);
    if dirs.len() != m {
        return Err(HamiltonError::PatternMismatch(format!(
            "expected {m} direction choices for {} rings, got {}",
            d.r,
            dirs.len()
        )));
    }
    let path = if d.r <= 2 {
        let table = role_table(d)?;
        let roles = base_roles(d.r, petal, dirs);
        FacePath::new(&d.graph, materialize(&table, &roles)?)?
    } else {
        let contracted = contract_ring(d)?;
        let (inner, branch) = if d.r % 2 == 0 {
            (&dirs[..m - 1], dirs[m - 1])
        } else {
            (dirs, 1)
        };
        let (small_path, _) = hamilton_with_choices(&contracted, petal, inner)?;
        expand_with_branch(&small_path, &contracted, d, branch)?
    };
    let hc = face_path_boundary(&d.graph, &path)?;
    Ok((path, hc))
}

/// Builds one Hamilton cycle of `d.graph` as the boundary of a face path:
/// templates for up to two rings, otherwise contract → recurse → expand.
/// The result is re-verified; the face path uses 6 pentagons when `r` is
/// even and 4 when `r` is odd.
pub fn build_hamilton(
    d: &NanotubeDecomposition,
) -> Result<(FacePath, HamiltonCycle), HamiltonError> {
    hamilton_with_choices(d, 0, &vec![1; direction_count(d.r)])
}

/// Materializes the whole family of face-path Hamilton cycles reachable by
/// the construction: 5 petal choices × one sweep direction per even-ring
/// level, deduplicated by edge set. The family size is
/// `5 · 2^(r/2 + 1)` for even `r` and `5 · 2^((r+1)/2)` for odd `r`.
pub fn enumerate_hamilton_variants(
    d: &NanotubeDecomposition,
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    let m = direction_count(d.r);
    let mut seen: BTreeSet<Vec<Edge>> = BTreeSet::new();
    let mut out = Vec::new();
    for petal in 0..5 {
        for mask in 0u32..(1 << m) {
            let dirs: Vec<i8> = (0..m)
                .map(|i| if mask & (1 << i) != 0 { 1 } else { -1 })
                .collect();
            let (_, hc) = hamilton_with_choices(d, petal, &dirs)?;
            if !verify_hamilton(&d.graph, &hc) {
                return Err(inconsistent("constructed cycle failed verification"));
            }
            let key: Vec<Edge> = hc.edges.iter().copied().collect();
            if seen.insert(key) {
                out.push(hc);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exhaustive searches (oracles)
// ---------------------------------------------------------------------------

/// Result of an exhaustive Hamilton-cycle search.
#[derive(Debug, Clone)]
pub struct HamiltonSearch {
    /// Number of distinct Hamilton cycles (as undirected edge sets).
    pub count: u64,
    /// The first cycle found, when any exists.
    pub witness: Option<HamiltonCycle>,
}

/// Runs the vertex-extension backtracking search, invoking `visit` once per
/// undirected Hamilton cycle (vertex sequence anchored at vertex 0, oriented
/// toward its smaller second vertex).
fn for_each_hamilton(
    g: &EmbeddedGraph,
    max_n: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), HamiltonError> {
    let n = g.n();
    if n > max_n {
        return Err(HamiltonError::BudgetExceeded { n, budget: max_n });
    }
    if n < 3 {
        return Ok(());
    }
    struct S<'a, F: FnMut(&[usize])> {
        g: &'a EmbeddedGraph,
        visited: Vec<bool>,
        path: Vec<usize>,
        visit: F,
    }
    fn dfs<F: FnMut(&[usize])>(s: &mut S<'_, F>) {
        let last = *s.path.last().expect("path nonempty");
        if s.path.len() == s.g.n() {
            // Close the cycle; report each undirected cycle exactly once by
            // orienting it toward the smaller second vertex.
            if s.g.has_edge(last, 0) && s.path[1] < last {
                (s.visit)(&s.path);
            }
            return;
        }
        for i in 0..s.g.degree(last) {
            let w = s.g.neighbors(last)[i];
            if !s.visited[w] {
                s.visited[w] = true;
                s.path.push(w);
                dfs(s);
                s.path.pop();
                s.visited[w] = false;
            }
        }
    }
    let mut s = S {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        visit: &mut visit,
    };
    s.visited[0] = true;
    s.path.push(0);
    dfs(&mut s);
    Ok(())
}

/// Counts all Hamilton cycles by backtracking over vertex sequences anchored
/// at vertex 0 (each undirected cycle is counted once). Refuses graphs with
/// more than `max_n` vertices.
pub fn brute_force_hamilton(
    g: &EmbeddedGraph,
    max_n: usize,
) -> Result<HamiltonSearch, HamiltonError> {
    let mut count = 0u64;
    let mut witness = None;
    for_each_hamilton(g, max_n, |path| {
        count += 1;
        if witness.is_none() {
            witness = Some(HamiltonCycle::from_vertex_cycle(path.to_vec()));
        }
    })?;
    Ok(HamiltonSearch { count, witness })
}

/// Collects every Hamilton cycle of `g` (same search as
/// [`brute_force_hamilton`]), for containment checks against constructed
/// cycles. Refuses graphs with more than `max_n` vertices.
pub fn brute_force_hamilton_all(
    g: &EmbeddedGraph,
    max_n: usize,
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    let mut out = Vec::new();
    for_each_hamilton(g, max_n, |path| {
        out.push(HamiltonCycle::from_vertex_cycle(path.to_vec()));
    })?;
    Ok(out)
}

/// Counts all Hamilton cycles by selecting edge subsets: every vertex must
/// end with exactly two chosen edges and the chosen edges must form one
/// cycle. Independent of [`brute_force_hamilton`] (different search space
/// and different deduplication), so agreement between the two is a strong
/// cross-check.
pub fn brute_force_hamilton_edges(
    g: &EmbeddedGraph,
    max_n: usize,
) -> Result<HamiltonSearch, HamiltonError> {
    let n = g.n();
    if n > max_n {
        return Err(HamiltonError::BudgetExceeded { n, budget: max_n });
    }
    if n < 3 {
        return Ok(HamiltonSearch {
            count: 0,
            witness: None,
        });
    }
    let edges = g.edges();
    let m = edges.len();

    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }

    struct S<'a> {
        g: &'a EmbeddedGraph,
        edges: &'a [Edge],
        deg: Vec<u8>,
        avail: Vec<usize>,
        chosen: Vec<Edge>,
        count: u64,
        witness: Option<HamiltonCycle>,
    }

    fn cycle_from_edges(n: usize, chosen: &[Edge]) -> HamiltonCycle {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in chosen {
            let (u, v) = e.endpoints();
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut vertices = vec![0usize];
        let mut prev = 0;
        let mut cur = adj[0][0].min(adj[0][1]);
        while cur != 0 {
            vertices.push(cur);
            let next = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        HamiltonCycle::from_vertex_cycle(vertices)
    }

    fn dfs(s: &mut S<'_>, i: usize, taken: usize, parent: &mut Vec<usize>) {
        let n = s.g.n();
        if taken == n {
            // All degrees are 2 (n edges, sum of degrees 2n, none above 2)
            // and acyclicity was enforced until the final closing edge, so
            // the chosen set is a single spanning cycle.
            s.count += 1;
            if s.witness.is_none() {
                s.witness = Some(cycle_from_edges(n, &s.chosen));
            }
            return;
        }
        if i == s.edges.len() || taken + (s.edges.len() - i) < n {
            return;
        }
        let e = s.edges[i];
        let (u, v) = e.endpoints();
        // Branch 1: take the edge, unless a vertex would exceed degree 2 or a
        // short cycle would close (only the n-th edge may close one).
        if s.deg[u] < 2 && s.deg[v] < 2 {
            let ru = find(parent, u);
            let rv = find(parent, v);
            if ru != rv || taken == n - 1 {
                let mut parent2 = parent.clone();
                if ru != rv {
                    parent2[ru] = rv;
                }
                s.deg[u] += 1;
                s.deg[v] += 1;
                s.chosen.push(e);
                dfs(s, i + 1, taken + 1, &mut parent2);
                s.chosen.pop();
                s.deg[u] -= 1;
                s.deg[v] -= 1;
            }
        }
        // Branch 2: skip the edge, unless that starves an endpoint.
        s.avail[u] -= 1;
        s.avail[v] -= 1;
        if s.deg[u] as usize + s.avail[u] >= 2 && s.deg[v] as usize + s.avail[v] >= 2 {
            dfs(s, i + 1, taken, parent);
        }
        s.avail[u] += 1;
        s.avail[v] += 1;
    }

    let mut avail = vec![0usize; n];
    for e in &edges {
        let (u, v) = e.endpoints();
        avail[u] += 1;
        avail[v] += 1;
    }
    let mut s = S {
        g,
        edges: &edges,
        deg: vec![0; n],
        avail,
        chosen: Vec::with_capacity(n),
        count: 0,
        witness: None,
    };
    let mut parent: Vec<usize> = (0..n).collect();
    dfs(&mut s, 0, 0, &mut parent);
    let _ = m;
    Ok(HamiltonSearch {
        count: s.count,
        witness: s.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::nanotube;
    use crate::rings::nanotube_decomposition;

    fn decomposition(r: usize) -> NanotubeDecomposition {
        nanotube_decomposition(&nanotube(r))
            .expect("analysis succeeds")
            .expect("tube structure found")
    }

    #[test]
    fn single_face_boundary_is_not_spanning() {
        let g = nanotube(0);
        let path = FacePath::new(&g, vec![0]).expect("one face is a path");
        match face_path_boundary(&g, &path) {
            Err(HamiltonError::NotSpanning { covered: 5, n: 20 }) => {}
            other => panic!("expected NotSpanning, got {other:?}"),
        }
    }

    #[test]
    fn annular_face_path_boundary_splits() {
        // The five petals around a cap center enclose it: the boundary is
        // two closed curves, not one.
        let g = nanotube(0);
        let d = decomposition(0);
        let table = role_table(&d).expect("role table");
        let petals: Vec<usize> = (0..5)
            .map(|k| table.face(FaceRole::TopPetal(k)).expect("petal"))
            .collect();
        let path = FacePath::new(&g, petals).expect("petal fan is a path");
        match face_path_boundary(&g, &path) {
            Err(HamiltonError::NotSingleCycle(_)) => {}
            other => panic!("expected NotSingleCycle, got {other:?}"),
        }
    }

    #[test]
    fn templates_build_verified_cycles() {
        for r in 0..=2 {
            let d = decomposition(r);
            let (path, hc) = build_hamilton(&d).expect("construction succeeds");
            assert!(verify_hamilton(&d.graph, &hc), "r={r}");
            let expected_pentagons = if r % 2 == 0 { 6 } else { 4 };
            assert_eq!(path.pentagon_count, expected_pentagons, "r={r}");
            assert_eq!(hc.len(), 10 * r + 20, "r={r}");
        }
    }

    #[test]
    fn recursion_builds_verified_cycles() {
        for r in 3..=4 {
            let d = decomposition(r);
            let (path, hc) = build_hamilton(&d).expect("construction succeeds");
            assert!(verify_hamilton(&d.graph, &hc), "r={r}");
            let expected_pentagons = if r % 2 == 0 { 6 } else { 4 };
            assert_eq!(path.pentagon_count, expected_pentagons, "r={r}");
        }
    }

    #[test]
    fn contraction_removes_one_ring() {
        let d = decomposition(2);
        let c = contract_ring(&d).expect("contraction succeeds");
        assert_eq!(c.r, 1);
        assert_eq!(c.graph.n(), 30);
        assert!(c.graph.validate_fullerene().is_fullerene);
        let again = contract_ring(&c).expect("contraction succeeds");
        assert_eq!(again.r, 0);
        assert_eq!(again.graph.n(), 20);
        assert!(matches!(
            contract_ring(&again),
            Err(HamiltonError::NoRings)
        ));
    }

    #[test]
    fn expansion_rejects_wrong_parity() {
        let d = decomposition(1);
        let contracted = contract_ring(&d).expect("contraction succeeds");
        let (path, _) = build_hamilton(&contracted).expect("base path");
        match expand_face_path(&path, &d, TubeParity::Even) {
            Err(HamiltonError::PatternMismatch(_)) => {}
            other => panic!("expected PatternMismatch, got {other:?}"),
        }
        let lifted = expand_face_path(&path, &d, TubeParity::Odd).expect("lift succeeds");
        let hc = face_path_boundary(&d.graph, &lifted).expect("boundary is a Hamilton cycle");
        assert!(verify_hamilton(&d.graph, &hc));
    }

    #[test]
    fn dodecahedron_has_thirty_hamilton_cycles() {
        let g = nanotube(0);
        let a = brute_force_hamilton(&g, HAMILTON_SEARCH_BUDGET).expect("within budget");
        let b = brute_force_hamilton_edges(&g, HAMILTON_SEARCH_BUDGET).expect("within budget");
        assert_eq!(a.count, 30);
        assert_eq!(b.count, 30);
        let w = a.witness.expect("witness exists");
        assert!(verify_hamilton(&g, &w));
        let w = b.witness.expect("witness exists");
        assert!(verify_hamilton(&g, &w));
    }

    #[test]
    fn search_budget_is_enforced() {
        let g = nanotube(3);
        assert!(matches!(
            brute_force_hamilton(&g, HAMILTON_SEARCH_BUDGET),
            Err(HamiltonError::BudgetExceeded { n: 50, budget: 40 })
        ));
        assert!(matches!(
            brute_force_hamilton_edges(&g, HAMILTON_SEARCH_BUDGET),
            Err(HamiltonError::BudgetExceeded { n: 50, budget: 40 })
        ));
    }

    #[test]
    fn enumerated_family_for_the_dodecahedron() {
        let d = decomposition(0);
        let family = enumerate_hamilton_variants(&d).expect("enumeration succeeds");
        assert_eq!(family.len(), 10);
        let oracle = brute_force_hamilton(&d.graph, HAMILTON_SEARCH_BUDGET)
            .expect("within budget");
        assert_eq!(oracle.count, 30);
    }
}
