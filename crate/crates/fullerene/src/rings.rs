//! Rings of faces, pentagon caps, and the tube decomposition.
//!
//! A *ring* is a cyclic sequence of distinct faces in which consecutive
//! faces share exactly one edge and non-consecutive faces share nothing.
//! The union of a ring's faces is an annulus: its boundary edges form
//! exactly two vertex-disjoint cycles, here called the *inner* and *outer*
//! cycle (the outer one is the cycle facing the deterministically designated
//! outer side, see [`find_face_rings`]).
//!
//! Rings of five faces are in bijection with the induced 5-cycles of the
//! dual graph, and their five stitching edges (the edges shared by
//! consecutive ring faces) are precisely the cyclic 5-edge cutsets of a
//! fullerene. Structure theory for these rings comes in three shapes
//! ([`DichotomyArm`]): one of the two boundary cycles bounds a face, or all
//! five faces are hexagons and both boundary cycles have length 10. The
//! hexagonal rings stack into a tube capped by two *pentacaps* (a pentagon
//! surrounded by five pentagons); [`nanotube_decomposition`] recovers that
//! whole structure — cap, cycles `C_0 … C_r`, cap — and assigns every tube
//! vertex a coordinate `v_i^j` (cycle index `i`, position `j` on the
//! cycle).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{
    face_priority_order, split_at_cycle, CycleSide, CycleSplit, Edge, EmbeddedGraph, Face,
    GraphError,
};

/// Errors from ring materialization and the tube decomposition.
#[derive(Debug, Error)]
pub enum RingError {
    /// A ring of five faces violated the structural trichotomy: neither
    /// boundary cycle bounds a face, yet the ring is not five hexagons with
    /// two 10-cycle boundaries.
    #[error("ring dichotomy violated: {0}")]
    DichotomyViolated(String),
    /// The graph's face structure contradicts what the requested operation
    /// is entitled to assume; the message says where.
    #[error("inconsistent structure: {0}")]
    InconsistentStructure(String),
    /// A decomposition with no hexagonal rings was asked for an operation
    /// that consumes one.
    #[error("the decomposition has no hexagonal rings")]
    NoRings,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A ring of faces materialized as an annulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRing {
    /// Face indices in cyclic order; consecutive entries share one edge.
    pub faces: Vec<usize>,
    /// `stitching_edges[i]` is the edge shared by `faces[i]` and
    /// `faces[i + 1]` (cyclically). For a ring of five faces these five
    /// edges are a cyclic 5-edge cutset.
    pub stitching_edges: Vec<Edge>,
    /// Boundary cycle on the inner side, as a closed vertex walk.
    pub inner_cycle: Vec<usize>,
    /// Boundary cycle on the outer side, as a closed vertex walk.
    pub outer_cycle: Vec<usize>,
}

impl FaceRing {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn inner_len(&self) -> usize {
        self.inner_cycle.len()
    }

    pub fn outer_len(&self) -> usize {
        self.outer_cycle.len()
    }

    /// All vertices lying on the ring's faces (equivalently, on its two
    /// boundary cycles).
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.inner_cycle
            .iter()
            .chain(self.outer_cycle.iter())
            .copied()
            .collect()
    }
}

/// Which boundary cycle of a ring an operation should work from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingSide {
    Inner,
    Outer,
}

/// The attachment profile of a ring seen from one of its boundary cycles
/// `C`: entry `i` counts the vertices of ring face `i` that lie on `C` and
/// whose third edge (the one leaving the cycle) points into the region
/// enclosed by `C` or along `C` itself. Profiles are compared up to
/// rotation and reflection, matching the symmetry of the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingType {
    pub counts: Vec<u8>,
}

impl RingType {
    /// Lexicographically least tuple over all rotations and reflections.
    pub fn canonical(&self) -> Vec<u8> {
        let k = self.counts.len();
        if k == 0 {
            return Vec::new();
        }
        let reversed: Vec<u8> = self.counts.iter().rev().copied().collect();
        let mut best = self.counts.clone();
        for seq in [&self.counts, &reversed] {
            for rot in 0..k {
                let cand: Vec<u8> = (0..k).map(|i| seq[(rot + i) % k]).collect();
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }

    /// Equality up to rotation and reflection.
    pub fn matches(&self, pattern: &[u8]) -> bool {
        self.counts.len() == pattern.len()
            && self.canonical()
                == RingType {
                    counts: pattern.to_vec(),
                }
                .canonical()
    }
}

impl fmt::Display for RingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.counts {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The three admissible shapes of a ring of five faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DichotomyArm {
    /// The inner boundary cycle bounds a face of the graph.
    InnerIsFace,
    /// The outer boundary cycle bounds a face of the graph. With the side
    /// convention used here the enclosed face is always labeled inner, so
    /// this arm is not expected on consistent input; it is kept so the
    /// trichotomy is stated in full.
    OuterIsFace,
    /// All five ring faces are hexagons and both boundary cycles have
    /// length 10 — the tube wall case.
    AllHexTenTen,
}

/// Walks the cycles of a graph in which every vertex has exactly 2
/// neighbors. Deterministic: each cycle starts at its smallest vertex and
/// moves first to the smaller of the two neighbors.
fn walk_cycles(adj: &BTreeMap<usize, Vec<usize>>) -> Vec<Vec<usize>> {
    let mut visited: BTreeSet<usize> = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in adj.keys() {
        if visited.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        visited.insert(start);
        let mut prev = start;
        let mut cur = *adj[&start].iter().min().expect("vertex with no neighbors");
        while cur != start {
            visited.insert(cur);
            cycle.push(cur);
            let next = adj[&cur]
                .iter()
                .copied()
                .find(|&x| x != prev)
                .expect("vertex with a single neighbor");
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

/// The side of `split`'s cycle holding every vertex of `vs`; an error if
/// they straddle the cycle or lie on it.
fn side_holding_all(split: &CycleSplit, vs: &[usize]) -> Result<CycleSide, RingError> {
    let mut found: Option<CycleSide> = None;
    for &v in vs {
        match split.side[v] {
            None => {
                return Err(RingError::InconsistentStructure(format!(
                    "vertex {v} lies on both boundary cycles of a ring"
                )))
            }
            Some(s) => match found {
                None => found = Some(s),
                Some(t) if t != s => {
                    return Err(RingError::InconsistentStructure(
                        "a ring boundary cycle straddles the other one".to_string(),
                    ))
                }
                _ => {}
            },
        }
    }
    found.ok_or_else(|| RingError::InconsistentStructure("empty boundary cycle".to_string()))
}

/// Builds a [`FaceRing`] from face indices in cyclic order, verifying the
/// ring property (consecutive faces share exactly one edge, non-consecutive
/// faces share nothing) and splitting the boundary into its two cycles.
fn materialize_ring(
    g: &EmbeddedGraph,
    faces: &[Face],
    ring: &[usize],
) -> Result<FaceRing, RingError> {
    let k = ring.len();
    if k < 3 {
        return Err(RingError::InconsistentStructure(format!(
            "a ring needs at least 3 faces, got {k}"
        )));
    }
    let distinct: BTreeSet<usize> = ring.iter().copied().collect();
    if distinct.len() != k {
        return Err(RingError::InconsistentStructure(
            "ring lists a face twice".to_string(),
        ));
    }
    if let Some(&bad) = ring.iter().find(|&&f| f >= faces.len()) {
        return Err(RingError::InconsistentStructure(format!(
            "no face indexed {bad}"
        )));
    }
    let edge_sets: Vec<BTreeSet<Edge>> = ring.iter().map(|&f| faces[f].edge_set()).collect();
    let mut stitching = Vec::with_capacity(k);
    for i in 0..k {
        let shared: Vec<Edge> = edge_sets[i]
            .intersection(&edge_sets[(i + 1) % k])
            .copied()
            .collect();
        if shared.len() != 1 {
            return Err(RingError::InconsistentStructure(format!(
                "ring faces {} and {} share {} edges, expected exactly 1",
                ring[i],
                ring[(i + 1) % k],
                shared.len()
            )));
        }
        stitching.push(shared[0]);
    }
    // Every edge of the ring's faces lies on one face (boundary) or two
    // (stitching); anything shared by non-consecutive faces is a defect.
    let mut occurrences: BTreeMap<Edge, usize> = BTreeMap::new();
    for es in &edge_sets {
        for &e in es {
            *occurrences.entry(e).or_insert(0) += 1;
        }
    }
    let doubled: BTreeSet<Edge> = occurrences
        .iter()
        .filter(|&(_, &c)| c >= 2)
        .map(|(&e, _)| e)
        .collect();
    let stitch_set: BTreeSet<Edge> = stitching.iter().copied().collect();
    if doubled != stitch_set {
        return Err(RingError::InconsistentStructure(
            "non-consecutive ring faces share an edge".to_string(),
        ));
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&e, _) in occurrences.iter().filter(|&(_, &c)| c == 1) {
        let (u, v) = e.endpoints();
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if let Some((&v, ns)) = adj.iter().find(|(_, ns)| ns.len() != 2) {
        return Err(RingError::InconsistentStructure(format!(
            "vertex {v} lies on {} ring-boundary edges, expected 2",
            ns.len()
        )));
    }
    let cycles = walk_cycles(&adj);
    if cycles.len() != 2 {
        return Err(RingError::InconsistentStructure(format!(
            "ring boundary splits into {} cycles, expected 2",
            cycles.len()
        )));
    }
    let ring_vertices: BTreeSet<usize> = ring
        .iter()
        .flat_map(|&f| faces[f].boundary.iter().copied())
        .collect();
    let covered: BTreeSet<usize> = cycles.iter().flatten().copied().collect();
    if covered != ring_vertices {
        return Err(RingError::InconsistentStructure(
            "ring faces have vertices off the two boundary cycles".to_string(),
        ));
    }
    // Label the two cycles. Each cycle has a "far" side — the side away
    // from the ring. The highest-priority face with a vertex on a far side
    // designates that side as outer.
    let split0 = split_at_cycle(g, &cycles[0])?;
    let far0: BTreeSet<usize> = split0
        .vertices_on(side_holding_all(&split0, &cycles[1])?.flipped())
        .iter()
        .copied()
        .collect();
    let split1 = split_at_cycle(g, &cycles[1])?;
    let far1: BTreeSet<usize> = split1
        .vertices_on(side_holding_all(&split1, &cycles[0])?.flipped())
        .iter()
        .copied()
        .collect();
    let mut outer_index: Option<usize> = None;
    'designate: for fi in face_priority_order(faces) {
        for &v in &faces[fi].boundary {
            if far0.contains(&v) {
                outer_index = Some(0);
                break 'designate;
            }
            if far1.contains(&v) {
                outer_index = Some(1);
                break 'designate;
            }
        }
    }
    let Some(oi) = outer_index else {
        return Err(RingError::InconsistentStructure(
            "every vertex lies on the ring; no side can be designated outer".to_string(),
        ));
    };
    let mut it = cycles.into_iter();
    let (c0, c1) = (it.next().unwrap(), it.next().unwrap());
    let (outer_cycle, inner_cycle) = if oi == 0 { (c0, c1) } else { (c1, c0) };
    Ok(FaceRing {
        faces: ring.to_vec(),
        stitching_edges: stitching,
        inner_cycle,
        outer_cycle,
    })
}

/// All rings of five faces of the graph, one per induced 5-cycle of the
/// dual graph, sorted by their face index lists. Every cyclic 5-edge cutset
/// of a fullerene arises as the stitching edges of exactly one of these.
pub fn find_face_rings(g: &EmbeddedGraph) -> Result<Vec<FaceRing>, RingError> {
    let faces = g.trace_faces()?;
    let dual = crate::graph::dual_graph(&faces);
    let mut rings = Vec::new();
    for cyc in dual.induced_five_cycles() {
        rings.push(materialize_ring(g, &faces, &cyc)?);
    }
    rings.sort_by(|a, b| a.faces.cmp(&b.faces));
    Ok(rings)
}

/// The ring formed by the faces surrounding `face`, in rotation order
/// around it. Its inner cycle is the boundary of `face` itself. Works for
/// any face size whose surrounding faces are distinct — for a pentagon the
/// result is a 5-ring, for a hexagon a 6-ring.
pub fn face_neighbor_ring(g: &EmbeddedGraph, face: usize) -> Result<FaceRing, RingError> {
    let faces = g.trace_faces()?;
    if face >= faces.len() {
        return Err(RingError::InconsistentStructure(format!(
            "no face indexed {face}"
        )));
    }
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut link = Vec::with_capacity(faces[face].len());
    for e in faces[face].edges() {
        let owners = &by_edge[&e];
        if owners.len() != 2 {
            return Err(RingError::InconsistentStructure(format!(
                "edge {e} lies on {} faces, expected 2",
                owners.len()
            )));
        }
        link.push(if owners[0] == face {
            owners[1]
        } else {
            owners[0]
        });
    }
    let ring = materialize_ring(g, &faces, &link)?;
    if cycle_edge_set(&ring.inner_cycle) != faces[face].edge_set() {
        return Err(RingError::InconsistentStructure(format!(
            "the ring around face {face} does not have that face as its inner cycle"
        )));
    }
    Ok(ring)
}

fn cycle_edge_set(cycle: &[usize]) -> BTreeSet<Edge> {
    (0..cycle.len())
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect()
}

/// The third neighbor of the vertex at position `j` of `cycle`: the one
/// that is not its predecessor or successor on the cycle.
fn third_neighbor_on_cycle(
    g: &EmbeddedGraph,
    cycle: &[usize],
    j: usize,
) -> Result<usize, RingError> {
    let l = cycle.len();
    let v = cycle[j];
    let prev = cycle[(j + l - 1) % l];
    let next = cycle[(j + 1) % l];
    g.neighbors(v)
        .iter()
        .copied()
        .find(|&x| x != prev && x != next)
        .ok_or_else(|| {
            RingError::InconsistentStructure(format!("vertex {v} has no neighbor off the cycle"))
        })
}

/// The attachment profile of `ring` seen from the chosen boundary cycle.
/// For each ring face, counts its vertices on that cycle whose third edge
/// points away from the ring (or runs along the cycle as a chord).
pub fn ring_type(g: &EmbeddedGraph, ring: &FaceRing, side: RingSide) -> Result<RingType, RingError> {
    let faces = g.trace_faces()?;
    let (cycle, other) = match side {
        RingSide::Inner => (&ring.inner_cycle, &ring.outer_cycle),
        RingSide::Outer => (&ring.outer_cycle, &ring.inner_cycle),
    };
    let split = split_at_cycle(g, cycle)?;
    let ring_side = side_holding_all(&split, other)?;
    let far: BTreeSet<usize> = split
        .vertices_on(ring_side.flipped())
        .iter()
        .copied()
        .collect();
    let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut counts = Vec::with_capacity(ring.faces.len());
    for &f in &ring.faces {
        let mut c = 0u8;
        for (j, &v) in cycle.iter().enumerate() {
            if !faces[f].contains_vertex(v) {
                continue;
            }
            let third = third_neighbor_on_cycle(g, cycle, j)?;
            if far.contains(&third) || on_cycle.contains(&third) {
                c += 1;
            }
        }
        counts.push(c);
    }
    Ok(RingType { counts })
}

/// Decides which arm of the structural trichotomy a ring of five faces
/// falls into, or reports the violation.
pub fn check_ring_dichotomy(
    g: &EmbeddedGraph,
    ring: &FaceRing,
) -> Result<DichotomyArm, RingError> {
    let faces = g.trace_faces()?;
    let inner_edges = cycle_edge_set(&ring.inner_cycle);
    if faces.iter().any(|f| f.edge_set() == inner_edges) {
        return Ok(DichotomyArm::InnerIsFace);
    }
    let outer_edges = cycle_edge_set(&ring.outer_cycle);
    if faces.iter().any(|f| f.edge_set() == outer_edges) {
        return Ok(DichotomyArm::OuterIsFace);
    }
    let all_hex = ring.faces.iter().all(|&f| faces[f].len() == 6);
    if all_hex && ring.inner_len() == 10 && ring.outer_len() == 10 {
        return Ok(DichotomyArm::AllHexTenTen);
    }
    let sizes: Vec<usize> = ring.faces.iter().map(|&f| faces[f].len()).collect();
    Err(RingError::DichotomyViolated(format!(
        "neither boundary cycle bounds a face, and the ring is not five hexagons \
         with 10-cycle boundaries (face sizes {:?}, boundary lengths {} and {})",
        sizes,
        ring.inner_len(),
        ring.outer_len()
    )))
}

/// A pentagon surrounded by five pentagons: 15 vertices, bounded by a
/// 10-cycle. Two of these cap the ends of every tubular fullerene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pentacap {
    /// Index of the central pentagonal face.
    pub center_face: usize,
    /// The five surrounding pentagonal faces, in rotation order.
    pub petal_faces: Vec<usize>,
    /// The 15 cap vertices, sorted.
    pub vertices: Vec<usize>,
    /// The boundary 10-cycle, as a closed walk.
    pub boundary: Vec<usize>,
}

impl Pentacap {
    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// All pentacaps of the graph: every pentagonal face whose five neighbors
/// are pentagons too, materialized with its boundary cycle. Sorted by
/// center face index.
pub fn find_pentacaps(g: &EmbeddedGraph) -> Result<Vec<Pentacap>, RingError> {
    let faces = g.trace_faces()?;
    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut caps = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if f.len() != 5 {
            continue;
        }
        let mut neighbors = BTreeSet::new();
        for e in f.edges() {
            for &o in &by_edge[&e] {
                if o != i {
                    neighbors.insert(o);
                }
            }
        }
        if neighbors.len() != 5 || !neighbors.iter().all(|&o| faces[o].len() == 5) {
            continue;
        }
        let ring = face_neighbor_ring(g, i)?;
        if ring.outer_len() != 10 {
            return Err(RingError::InconsistentStructure(format!(
                "cap around face {i} has boundary length {}, expected 10",
                ring.outer_len()
            )));
        }
        let mut vertices: Vec<usize> = ring.vertex_set().into_iter().collect();
        vertices.extend(faces[i].boundary.iter().copied());
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != 15 {
            return Err(RingError::InconsistentStructure(format!(
                "cap around face {i} covers {} vertices, expected 15",
                vertices.len()
            )));
        }
        caps.push(Pentacap {
            center_face: i,
            petal_faces: ring.faces.clone(),
            vertices,
            boundary: ring.outer_cycle.clone(),
        });
    }
    Ok(caps)
}

/// The tube structure of a fullerene: two pentacaps joined by `r`
/// hexagonal rings, every vertex addressed as `v_i^j` — position `j` on
/// cycle `C_i`, where `C_0` bounds `cap_a` and `C_r` bounds `cap_b`.
///
/// Coordinates satisfy: `v_i^j` is adjacent to `v_{i+1}^j` exactly when
/// `j ≡ i (mod 2)`; the odd positions of `C_0` attach into `cap_a`. For
/// `r = 0` the two caps share the single boundary cycle; for `r ≥ 1` they
/// are vertex-disjoint.
#[derive(Debug, Clone)]
pub struct NanotubeDecomposition {
    pub graph: EmbeddedGraph,
    /// Number of hexagonal rings between the caps.
    pub r: usize,
    pub cap_a: Pentacap,
    pub cap_b: Pentacap,
    /// `cycles[i][j]` is the vertex `v_i^j`; `r + 1` cycles of length 10.
    pub cycles: Vec<Vec<usize>>,
    /// Attachment profile of each hexagonal ring, seen from its inner and
    /// outer boundary; always `(11111)` on both sides.
    pub ring_types: Vec<(RingType, RingType)>,
}

impl NanotubeDecomposition {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The vertex `v_i^j`; `j` wraps modulo 10.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        self.cycles[i][j % 10]
    }
}

/// Orients a cap's boundary into decomposition coordinates: position 0 is
/// the smallest boundary vertex whose third edge leaves the cap, the
/// direction is the one with the smaller vertex at position 1, and
/// cap-attached vertices land on odd positions.
fn orient_cap_boundary(g: &EmbeddedGraph, cap: &Pentacap) -> Result<Vec<usize>, RingError> {
    let b = &cap.boundary;
    if b.len() != 10 {
        return Err(RingError::InconsistentStructure(format!(
            "cap boundary has length {}, expected 10",
            b.len()
        )));
    }
    let mut outward = [false; 10];
    for (j, flag) in outward.iter_mut().enumerate() {
        let third = third_neighbor_on_cycle(g, b, j)?;
        *flag = !cap.contains_vertex(third);
    }
    for j in 0..10 {
        if outward[j] == outward[(j + 1) % 10] {
            return Err(RingError::InconsistentStructure(
                "cap boundary attachments do not alternate between the cap and its far side"
                    .to_string(),
            ));
        }
    }
    let start = (0..10)
        .filter(|&j| outward[j])
        .min_by_key(|&j| b[j])
        .expect("alternation guarantees outward positions");
    let forward: Vec<usize> = (0..10).map(|t| b[(start + t) % 10]).collect();
    let backward: Vec<usize> = (0..10).map(|t| b[(start + 10 - t) % 10]).collect();
    Ok(if forward[1] <= backward[1] {
        forward
    } else {
        backward
    })
}

/// Recovers the tube structure of a fullerene. Returns `Ok(None)` when the
/// graph has no hexagonal ring and is not the 20-vertex fullerene — i.e.
/// when it is not tubular. Structural contradictions (a tube that fails to
/// close, rings off the tube axis, missing caps) are reported as
/// [`RingError::InconsistentStructure`]; they cannot arise from a valid
/// fullerene.
pub fn nanotube_decomposition(
    g: &EmbeddedGraph,
) -> Result<Option<NanotubeDecomposition>, RingError> {
    let report = g.validate_fullerene();
    if !report.is_fullerene {
        return Err(RingError::InconsistentStructure(
            "input graph is not a valid fullerene".to_string(),
        ));
    }
    let mut hex_rings = Vec::new();
    for ring in find_face_rings(g)? {
        if matches!(check_ring_dichotomy(g, &ring)?, DichotomyArm::AllHexTenTen) {
            hex_rings.push(ring);
        }
    }
    let caps = find_pentacaps(g)?;
    if hex_rings.is_empty() {
        if g.n() != 20 {
            return Ok(None);
        }
        return degenerate_decomposition(g, &caps).map(Some);
    }
    if caps.len() != 2 {
        return Err(RingError::InconsistentStructure(format!(
            "a tubular fullerene has exactly two pentagon caps, found {}",
            caps.len()
        )));
    }
    let (cap_a, cap_b) = if caps[0].vertices <= caps[1].vertices {
        (caps[0].clone(), caps[1].clone())
    } else {
        (caps[1].clone(), caps[0].clone())
    };
    if cap_a.vertices.iter().any(|v| cap_b.contains_vertex(*v)) {
        return Err(RingError::InconsistentStructure(
            "the two pentagon caps overlap".to_string(),
        ));
    }

    let c0 = orient_cap_boundary(g, &cap_a)?;
    let mut cycles = vec![c0];
    let ring_sets: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = hex_rings
        .iter()
        .map(|r| {
            (
                r.inner_cycle.iter().copied().collect(),
                r.outer_cycle.iter().copied().collect(),
            )
        })
        .collect();
    let mut used = vec![false; hex_rings.len()];
    let mut ring_order = Vec::new();
    loop {
        let cur = cycles.last().unwrap().clone();
        let cur_set: BTreeSet<usize> = cur.iter().copied().collect();
        let mut found: Option<(usize, BTreeSet<usize>)> = None;
        for (ri, (inner, outer)) in ring_sets.iter().enumerate() {
            if used[ri] {
                continue;
            }
            let next = if *inner == cur_set {
                outer.clone()
            } else if *outer == cur_set {
                inner.clone()
            } else {
                continue;
            };
            if found.is_some() {
                return Err(RingError::InconsistentStructure(
                    "two unconsumed hexagonal rings share a boundary cycle".to_string(),
                ));
            }
            found = Some((ri, next));
        }
        let Some((ri, next_set)) = found else { break };
        used[ri] = true;
        ring_order.push(ri);
        let i = cycles.len() - 1;
        // Spoke ends first: positions of parity i attach downward.
        let mut next = [usize::MAX; 10];
        for j in 0..10 {
            if j % 2 != i % 2 {
                continue;
            }
            let third = third_neighbor_on_cycle(g, &cur, j)?;
            if !next_set.contains(&third) {
                return Err(RingError::InconsistentStructure(format!(
                    "vertex {} does not attach to the next cycle of the tube",
                    cur[j]
                )));
            }
            next[j] = third;
        }
        // Between consecutive spoke ends sits exactly one cycle vertex.
        for j in 0..10 {
            if j % 2 == i % 2 {
                continue;
            }
            let a = next[(j + 9) % 10];
            let b = next[(j + 1) % 10];
            let mut between = g
                .neighbors(a)
                .iter()
                .copied()
                .filter(|x| next_set.contains(x) && g.has_edge(*x, b));
            let (first, second) = (between.next(), between.next());
            match (first, second) {
                (Some(x), None) => next[j] = x,
                _ => {
                    return Err(RingError::InconsistentStructure(format!(
                        "vertices {a} and {b} do not have a unique common neighbor \
                         on the next cycle"
                    )))
                }
            }
        }
        let derived: BTreeSet<usize> = next.iter().copied().collect();
        if derived != next_set {
            return Err(RingError::InconsistentStructure(
                "derived cycle positions do not cover the next boundary cycle".to_string(),
            ));
        }
        cycles.push(next.to_vec());
    }
    let r = cycles.len() - 1;
    if used.iter().any(|&u| !u) {
        return Err(RingError::InconsistentStructure(
            "hexagonal rings remain outside the tube walk".to_string(),
        ));
    }
    let last_set: BTreeSet<usize> = cycles[r].iter().copied().collect();
    let capb_set: BTreeSet<usize> = cap_b.boundary.iter().copied().collect();
    if last_set != capb_set {
        return Err(RingError::InconsistentStructure(
            "the tube walk did not terminate at the second cap's boundary".to_string(),
        ));
    }
    if g.n() != 10 * r + 20 {
        return Err(RingError::InconsistentStructure(format!(
            "vertex count {} does not match a tube with {r} rings",
            g.n()
        )));
    }
    for i in 0..r {
        for j in 0..10 {
            let should = j % 2 == i % 2;
            let is = g.has_edge(cycles[i][j], cycles[i + 1][j]);
            if is != should {
                return Err(RingError::InconsistentStructure(format!(
                    "spoke parity violated between cycles {i} and {} at position {j}",
                    i + 1
                )));
            }
        }
    }
    let mut ring_types = Vec::with_capacity(r);
    for &ri in &ring_order {
        let inner = ring_type(g, &hex_rings[ri], RingSide::Inner)?;
        let outer = ring_type(g, &hex_rings[ri], RingSide::Outer)?;
        if !inner.matches(&[1, 1, 1, 1, 1]) || !outer.matches(&[1, 1, 1, 1, 1]) {
            return Err(RingError::InconsistentStructure(format!(
                "tube ring has attachment profile {inner} / {outer}, expected (11111)"
            )));
        }
        ring_types.push((inner, outer));
    }
    Ok(Some(NanotubeDecomposition {
        graph: g.clone(),
        r,
        cap_a,
        cap_b,
        cycles,
        ring_types,
    }))
}

/// The 20-vertex fullerene is the degenerate tube: two caps sharing their
/// boundary cycle and no hexagonal ring between them.
fn degenerate_decomposition(
    g: &EmbeddedGraph,
    caps: &[Pentacap],
) -> Result<NanotubeDecomposition, RingError> {
    let cap_a = caps
        .iter()
        .min_by(|a, b| a.vertices.cmp(&b.vertices))
        .ok_or_else(|| {
            RingError::InconsistentStructure(
                "20-vertex fullerene without a pentagon cap".to_string(),
            )
        })?
        .clone();
    let c0 = orient_cap_boundary(g, &cap_a)?;
    let c0_set: BTreeSet<usize> = c0.iter().copied().collect();
    let mut antipodal = caps.iter().filter(|c| {
        c.center_face != cap_a.center_face
            && c.vertices
                .iter()
                .filter(|v| cap_a.contains_vertex(**v))
                .copied()
                .collect::<BTreeSet<usize>>()
                == c0_set
    });
    let (first, second) = (antipodal.next(), antipodal.next());
    let cap_b = match (first, second) {
        (Some(c), None) => c.clone(),
        _ => {
            return Err(RingError::InconsistentStructure(
                "expected exactly one cap meeting the first cap in its boundary".to_string(),
            ))
        }
    };
    Ok(NanotubeDecomposition {
        graph: g.clone(),
        r: 0,
        cap_a,
        cap_b,
        cycles: vec![c0],
        ring_types: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle_vertex, nanotube};

    #[test]
    fn dodecahedron_rings_are_the_twelve_face_links() {
        let g = nanotube(0);
        let rings = find_face_rings(&g).unwrap();
        assert_eq!(rings.len(), 12);
        for ring in &rings {
            assert_eq!(check_ring_dichotomy(&g, ring).unwrap(), DichotomyArm::InnerIsFace);
            assert_eq!(ring.inner_len(), 5);
            assert_eq!(ring.outer_len(), 10);
            let t = ring_type(&g, ring, RingSide::Inner).unwrap();
            assert!(t.matches(&[0, 0, 0, 0, 0]), "unexpected profile {t}");
        }
    }

    #[test]
    fn tube_wall_rings_are_hexagonal_with_profile_11111() {
        let g = nanotube(2);
        let rings = find_face_rings(&g).unwrap();
        assert_eq!(rings.len(), 14);
        let walls: Vec<&FaceRing> = rings
            .iter()
            .filter(|r| {
                matches!(
                    check_ring_dichotomy(&g, r).unwrap(),
                    DichotomyArm::AllHexTenTen
                )
            })
            .collect();
        assert_eq!(walls.len(), 2);
        for ring in walls {
            assert_eq!(ring.inner_len(), 10);
            assert_eq!(ring.outer_len(), 10);
            for side in [RingSide::Inner, RingSide::Outer] {
                let t = ring_type(&g, ring, side).unwrap();
                assert!(t.matches(&[1, 1, 1, 1, 1]), "unexpected profile {t}");
            }
        }
    }

    #[test]
    fn hexagon_neighbor_ring_has_profile_000000() {
        let g = nanotube(1);
        let faces = g.trace_faces().unwrap();
        let hex = (0..faces.len()).find(|&i| faces[i].len() == 6).unwrap();
        let ring = face_neighbor_ring(&g, hex).unwrap();
        assert_eq!(ring.len(), 6);
        let t = ring_type(&g, &ring, RingSide::Inner).unwrap();
        assert!(t.matches(&[0, 0, 0, 0, 0, 0]), "unexpected profile {t}");
    }

    #[test]
    fn decomposition_recovers_generator_coordinates() {
        for r in 0..=3 {
            let g = nanotube(r);
            let d = nanotube_decomposition(&g).unwrap().unwrap();
            assert_eq!(d.r, r);
            assert_eq!(d.cycles.len(), r + 1);
            for (i, cycle) in d.cycles.iter().enumerate() {
                for (j, &v) in cycle.iter().enumerate() {
                    assert_eq!(v, cycle_vertex(i, j), "v_{i}^{j} mismatch at r = {r}");
                }
            }
            assert_eq!(d.ring_types.len(), r);
        }
    }

    #[test]
    fn caps_are_disjoint_for_positive_tube_length() {
        let d = nanotube_decomposition(&nanotube(2)).unwrap().unwrap();
        assert!(d
            .cap_a
            .vertices
            .iter()
            .all(|v| !d.cap_b.contains_vertex(*v)));
        let d0 = nanotube_decomposition(&nanotube(0)).unwrap().unwrap();
        let shared: Vec<usize> = d0
            .cap_a
            .vertices
            .iter()
            .copied()
            .filter(|&v| d0.cap_b.contains_vertex(v))
            .collect();
        let boundary: BTreeSet<usize> = d0.cycles[0].iter().copied().collect();
        assert_eq!(shared.into_iter().collect::<BTreeSet<usize>>(), boundary);
    }

    #[test]
    fn ring_profile_canonicalization_handles_rotation_and_reflection() {
        let t = RingType {
            counts: vec![0, 1, 1, 2, 1],
        };
        assert_eq!(t.canonical(), vec![0, 1, 1, 2, 1]);
        assert!(t.matches(&[1, 2, 1, 0, 1]));
        assert!(t.matches(&[1, 0, 1, 1, 2]));
        assert!(!t.matches(&[0, 0, 2, 1, 2]));
    }
}
