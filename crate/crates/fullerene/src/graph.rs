//! Embedded cubic planar graphs represented as rotation systems.
//!
//! A rotation system stores, for every vertex, the cyclic counterclockwise
//! order of its neighbors. That is enough to recover the faces of the
//! embedding purely combinatorially: starting from a directed edge (a dart)
//! `u -> v`, the next dart along the same face is `v -> w` where `w`
//! immediately precedes `u` in the rotation at `v`. Walking darts until the
//! start dart reappears traces one face; doing this for every dart partitions
//! the darts into faces. The embedding is planar (spherical) exactly when
//! Euler's formula `|V| - |E| + |F| = 2` holds for the traced faces.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// An undirected edge; endpoints are stored sorted so `Edge` values compare
/// and hash independently of orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} lists neighbor {neighbor}, outside 0..{n}")]
    NeighborOutOfRange {
        vertex: usize,
        neighbor: usize,
        n: usize,
    },
    #[error("vertex {0} lists itself as a neighbor")]
    LoopEdge(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {0} lists neighbor {1}, but not vice versa")]
    AsymmetricAdjacency(usize, usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NonCubic { vertex: usize, degree: usize },
    #[error("dart {0} -> {1} was consumed twice during face tracing")]
    TraversalDiverged(usize, usize),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("face list does not describe a spherical embedding: {0}")]
    BadFaceList(String),
    #[error("not a valid cycle: {0}")]
    BadCycle(String),
    #[error("embedding inconsistency: {0}")]
    InconsistentEmbedding(String),
}

/// A face of the embedding, stored as the cyclic sequence of vertices along
/// its boundary in tracing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Undirected boundary edges, one per consecutive vertex pair.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.boundary.len();
        (0..k)
            .map(|i| Edge::new(self.boundary[i], self.boundary[(i + 1) % k]))
            .collect()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().into_iter().collect()
    }

    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let k = self.boundary.len();
        (0..k)
            .map(|i| (self.boundary[i], self.boundary[(i + 1) % k]))
            .collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.boundary.iter().copied().collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// The boundary rotated so it starts at its smallest vertex; direction is
    /// preserved. Two traces of the same face always agree on this form.
    pub fn canonical_boundary(&self) -> Vec<usize> {
        let k = self.boundary.len();
        if k == 0 {
            return Vec::new();
        }
        let start = (0..k)
            .min_by_key(|&i| &self.boundary[i..])
            .expect("nonempty boundary");
        (0..k).map(|i| self.boundary[(start + i) % k]).collect()
    }
}

/// A cubic (or, before validation, near-cubic) planar graph given by its
/// rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<usize>>,
}

impl EmbeddedGraph {
    /// Builds a graph from neighbor lists in rotation order, checking that
    /// the lists describe a simple undirected graph (no loops, no duplicate
    /// neighbors, symmetric adjacency, indices in range). Degrees other than
    /// 3 are allowed here so that a broken input can still be diagnosed by
    /// [`EmbeddedGraph::validate_fullerene`].
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, neighbors) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in neighbors {
                if u >= n {
                    return Err(GraphError::NeighborOutOfRange {
                        vertex: v,
                        neighbor: u,
                        n,
                    });
                }
                if u == v {
                    return Err(GraphError::LoopEdge(v));
                }
                if !seen.insert(u) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: u,
                    });
                }
            }
        }
        for (v, neighbors) in rotation.iter().enumerate() {
            for &u in neighbors {
                if !rotation[u].contains(&v) {
                    return Err(GraphError::AsymmetricAdjacency(v, u));
                }
            }
        }
        Ok(EmbeddedGraph { rotation })
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    /// All undirected edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = Vec::with_capacity(self.edge_count());
        for (v, neighbors) in self.rotation.iter().enumerate() {
            for &u in neighbors {
                if v < u {
                    out.push(Edge::new(v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn is_cubic(&self) -> bool {
        self.rotation.iter().all(|r| r.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// The mirror image of the embedding: every rotation reversed. The
    /// abstract graph is unchanged; faces trace in the opposite direction.
    pub fn reversed(&self) -> Self {
        EmbeddedGraph {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Faces of the embedding via the next-dart rule. Requires a cubic graph;
    /// use [`EmbeddedGraph::validate_fullerene`] to diagnose degree problems.
    pub fn trace_faces(&self) -> Result<Vec<Face>, GraphError> {
        for v in 0..self.n() {
            if self.degree(v) != 3 {
                return Err(GraphError::NonCubic {
                    vertex: v,
                    degree: self.degree(v),
                });
            }
        }
        Ok(self.trace_faces_any_degree())
    }

    /// Face tracing without the cubic requirement; used internally so that
    /// validation can still measure faces of malformed inputs.
    pub(crate) fn trace_faces_any_degree(&self) -> Vec<Face> {
        let n = self.n();
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for v0 in 0..n {
            for s0 in 0..self.rotation[v0].len() {
                if used[v0][s0] {
                    continue;
                }
                let mut boundary = Vec::new();
                let (mut v, mut s) = (v0, s0);
                loop {
                    used[v][s] = true;
                    boundary.push(v);
                    let u = self.rotation[v][s];
                    // Next dart: u -> w where w immediately precedes v in the
                    // rotation at u.
                    let i = self.rotation[u]
                        .iter()
                        .position(|&x| x == v)
                        .expect("adjacency is symmetric");
                    let len = self.rotation[u].len();
                    v = u;
                    s = (i + len - 1) % len;
                    if (v, s) == (v0, s0) {
                        break;
                    }
                }
                faces.push(Face { boundary });
            }
        }
        faces
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Result<usize, GraphError> {
        let n = self.n();
        let mut best = usize::MAX;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.rotation[v] {
                    if u == parent[v] {
                        continue;
                    }
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(GraphError::Acyclic)
        } else {
            Ok(best)
        }
    }

    fn connected_avoiding(&self, banned: &[usize]) -> bool {
        let n = self.n();
        let mut blocked = vec![false; n];
        for &b in banned {
            blocked[b] = true;
        }
        let Some(start) = (0..n).find(|&v| !blocked[v]) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotation[v] {
                if !blocked[u] && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n - banned.len()
    }

    /// 3-connectivity by exhaustive deletion of every vertex pair followed by
    /// a connectivity check. Quadratic in n, which is fine at the scale this
    /// crate works at, and trivially trustworthy.
    pub fn is_3_connected(&self) -> bool {
        let n = self.n();
        if n < 4 || !self.is_connected() {
            return false;
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if !self.connected_avoiding(&[x, y]) {
                    return false;
                }
            }
        }
        true
    }

    /// Full diagnostic report. Never fails: every check is reported as a
    /// flag, so the caller can see exactly which fullerene axiom broke.
    pub fn validate_fullerene(&self) -> FullereneReport {
        let n = self.n();
        let is_cubic = self.is_cubic();
        let is_connected = self.is_connected();
        let faces = self.trace_faces_any_degree();
        let face_count = faces.len();
        let edge_count = self.edge_count();
        let is_planar_embedding =
            n > 0 && (n + face_count) as i64 - edge_count as i64 == 2;
        let pentagon_count = faces.iter().filter(|f| f.len() == 5).count();
        let hexagon_count = faces.iter().filter(|f| f.len() == 6).count();
        let faces_pentagonal_or_hexagonal =
            faces.iter().all(|f| f.len() == 5 || f.len() == 6);
        let girth = self.girth().ok();
        let is_3_connected = self.is_3_connected();
        let is_fullerene = is_cubic
            && is_connected
            && is_planar_embedding
            && is_3_connected
            && faces_pentagonal_or_hexagonal
            && pentagon_count == 12
            && girth == Some(5);
        FullereneReport {
            n,
            is_cubic,
            is_connected,
            is_planar_embedding,
            is_3_connected,
            faces_pentagonal_or_hexagonal,
            pentagon_count,
            hexagon_count,
            face_count,
            girth,
            is_fullerene,
        }
    }
}

/// Outcome of validating a candidate fullerene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullereneReport {
    pub n: usize,
    pub is_cubic: bool,
    pub is_connected: bool,
    pub is_planar_embedding: bool,
    pub is_3_connected: bool,
    pub faces_pentagonal_or_hexagonal: bool,
    pub pentagon_count: usize,
    pub hexagon_count: usize,
    pub face_count: usize,
    pub girth: Option<usize>,
    pub is_fullerene: bool,
}

/// Adjacency between two faces in the dual, with the number of shared edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualNeighbor {
    pub face: usize,
    pub shared_edges: usize,
}

/// The dual graph over face indices: two faces are adjacent iff they share at
/// least one edge.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub adj: Vec<Vec<DualNeighbor>>,
}

impl DualGraph {
    pub fn face_count(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, face: usize) -> usize {
        self.adj[face].len()
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].iter().any(|d| d.face == b)
    }

    pub fn shared_edge_count(&self, a: usize, b: usize) -> usize {
        self.adj[a]
            .iter()
            .find(|d| d.face == b)
            .map_or(0, |d| d.shared_edges)
    }

    /// All induced 5-cycles of the dual: cyclic sequences of five distinct
    /// faces in which consecutive faces are adjacent and non-consecutive
    /// faces are not. Each cycle is reported once, starting at its smallest
    /// face index with the smaller of its two directions.
    pub fn induced_five_cycles(&self) -> Vec<[usize; 5]> {
        let mut out = Vec::new();
        let nf = self.face_count();
        for f0 in 0..nf {
            for d1 in &self.adj[f0] {
                let f1 = d1.face;
                if f1 <= f0 {
                    continue;
                }
                for d2 in &self.adj[f1] {
                    let f2 = d2.face;
                    if f2 <= f0 || f2 == f1 || self.are_adjacent(f0, f2) {
                        continue;
                    }
                    for d3 in &self.adj[f2] {
                        let f3 = d3.face;
                        if f3 <= f0
                            || f3 == f1
                            || f3 == f2
                            || self.are_adjacent(f1, f3)
                            || self.are_adjacent(f0, f3)
                        {
                            continue;
                        }
                        for d4 in &self.adj[f3] {
                            let f4 = d4.face;
                            // Direction canonicalization: f1 < f4.
                            if f4 <= f1
                                || f4 == f2
                                || f4 == f3
                                || !self.are_adjacent(f4, f0)
                                || self.are_adjacent(f2, f4)
                                || self.are_adjacent(f1, f4)
                            {
                                continue;
                            }
                            out.push([f0, f1, f2, f3, f4]);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Deterministic ranking of faces used wherever one face must be singled
/// out: longest first, ties broken by lexicographically smallest sorted
/// boundary. Returns face indices in rank order.
pub(crate) fn face_priority_order(faces: &[Face]) -> Vec<usize> {
    let keys: Vec<(usize, Vec<usize>)> = faces
        .iter()
        .map(|f| {
            let mut b = f.boundary.clone();
            b.sort_unstable();
            (f.len(), b)
        })
        .collect();
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by(|&a, &b| {
        keys[b]
            .0
            .cmp(&keys[a].0)
            .then_with(|| keys[a].1.cmp(&keys[b].1))
    });
    order
}

pub fn dual_graph(faces: &[Face]) -> DualGraph {
    let mut on_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (idx, face) in faces.iter().enumerate() {
        for e in face.edges() {
            on_edge.entry(e).or_default().push(idx);
        }
    }
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for owners in on_edge.values() {
        if owners.len() == 2 && owners[0] != owners[1] {
            let (a, b) = (owners[0].min(owners[1]), owners[0].max(owners[1]));
            *counts.entry((a, b)).or_insert(0) += 1;
        }
    }
    let mut adj: Vec<Vec<DualNeighbor>> = vec![Vec::new(); faces.len()];
    for (&(a, b), &shared_edges) in &counts {
        adj[a].push(DualNeighbor {
            face: b,
            shared_edges,
        });
        adj[b].push(DualNeighbor {
            face: a,
            shared_edges,
        });
    }
    for row in &mut adj {
        row.sort_by_key(|d| d.face);
    }
    DualGraph { adj }
}

/// Reconstructs a rotation system from a full list of directed face
/// boundaries. Each face must be given with its boundary oriented so that
/// every directed edge is used by exactly one face; the traced faces of the
/// result reproduce the input. This is how the generator and the test
/// fixtures build graphs without hand-writing rotations.
pub fn embedding_from_faces(
    n: usize,
    faces: &[Vec<usize>],
) -> Result<EmbeddedGraph, GraphError> {
    // succ[v][w] = u records the corner u -> v -> w of some face: in the
    // rotation at v, u must immediately follow w.
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for (idx, boundary) in faces.iter().enumerate() {
        let k = boundary.len();
        if k < 3 {
            return Err(GraphError::BadFaceList(format!(
                "face {idx} has fewer than 3 vertices"
            )));
        }
        for i in 0..k {
            let u = boundary[i];
            let v = boundary[(i + 1) % k];
            let w = boundary[(i + 2) % k];
            if u >= n || v >= n {
                return Err(GraphError::BadFaceList(format!(
                    "face {idx} mentions a vertex outside 0..{n}"
                )));
            }
            if succ[v].insert(w, u).is_some() {
                return Err(GraphError::BadFaceList(format!(
                    "directed edge {v} -> {w} appears on two faces"
                )));
            }
        }
    }
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (v, succs) in succ.iter().enumerate() {
        let Some((&first, _)) = succs.iter().next() else {
            return Err(GraphError::BadFaceList(format!(
                "vertex {v} appears on no face"
            )));
        };
        let mut order = vec![first];
        let mut cur = first;
        loop {
            let Some(&next) = succs.get(&cur) else {
                return Err(GraphError::BadFaceList(format!(
                    "rotation at vertex {v} does not close into a cycle"
                )));
            };
            if next == first {
                break;
            }
            if order.len() > succs.len() {
                return Err(GraphError::BadFaceList(format!(
                    "rotation at vertex {v} does not close into a cycle"
                )));
            }
            order.push(next);
            cur = next;
        }
        if order.len() != succs.len() {
            return Err(GraphError::BadFaceList(format!(
                "rotation at vertex {v} splits into more than one cycle"
            )));
        }
        rotation.push(order);
    }
    let g = EmbeddedGraph::from_rotation(rotation)?;
    // The input must be the complete face list of the embedding it induces.
    let traced = g.trace_faces_any_degree();
    if traced.len() != faces.len() {
        return Err(GraphError::BadFaceList(format!(
            "face list has {} faces but the induced embedding traces {}",
            faces.len(),
            traced.len()
        )));
    }
    let mut expect: Vec<Vec<usize>> = faces
        .iter()
        .map(|b| Face { boundary: b.clone() }.canonical_boundary())
        .collect();
    let mut got: Vec<Vec<usize>> = traced
        .iter()
        .map(|f| f.canonical_boundary())
        .collect();
    expect.sort();
    got.sort();
    if expect != got {
        return Err(GraphError::BadFaceList(
            "traced faces differ from the provided face list".to_string(),
        ));
    }
    Ok(g)
}

/// Which side of an oriented cycle a vertex hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleSide {
    Left,
    Right,
}

impl CycleSide {
    pub fn flipped(self) -> Self {
        match self {
            CycleSide::Left => CycleSide::Right,
            CycleSide::Right => CycleSide::Left,
        }
    }
}

/// Partition of the rest of a cubic graph by a chordless-or-not cycle:
/// every vertex off the cycle is assigned the side of the cycle it lies on.
#[derive(Debug, Clone)]
pub struct CycleSplit {
    pub cycle: Vec<usize>,
    /// For every graph vertex: `None` on the cycle, otherwise its side.
    pub side: Vec<Option<CycleSide>>,
    /// For every cycle position: the side the third edge leaves toward, or
    /// `None` if the third edge is a chord of the cycle.
    pub third_edge_side: Vec<Option<CycleSide>>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl CycleSplit {
    pub fn vertices_on(&self, side: CycleSide) -> &[usize] {
        match side {
            CycleSide::Left => &self.left,
            CycleSide::Right => &self.right,
        }
    }
}

/// Splits a cubic embedded graph along a cycle. Every vertex of the cycle has
/// one "third" edge not on the cycle; the rotation at the vertex tells which
/// side of the cycle that edge leaves toward, and each connected component of
/// the remainder inherits the side of the third edges that reach it. In a
/// consistent planar embedding the sides of all attachments of one component
/// agree; if they do not, the rotation system was not planar and an error is
/// returned.
pub fn split_at_cycle(g: &EmbeddedGraph, cycle: &[usize]) -> Result<CycleSplit, GraphError> {
    let n = g.n();
    let k = cycle.len();
    if k < 3 {
        return Err(GraphError::BadCycle("cycle shorter than 3".to_string()));
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        if v >= n {
            return Err(GraphError::BadCycle(format!("vertex {v} out of range")));
        }
        if position[v] != usize::MAX {
            return Err(GraphError::BadCycle(format!("vertex {v} repeats")));
        }
        position[v] = i;
    }
    for i in 0..k {
        let (v, u) = (cycle[i], cycle[(i + 1) % k]);
        if !g.has_edge(v, u) {
            return Err(GraphError::BadCycle(format!(
                "consecutive vertices {v} and {u} are not adjacent"
            )));
        }
    }
    let mut third_edge_side: Vec<Option<CycleSide>> = vec![None; k];
    let mut attach: BTreeMap<usize, CycleSide> = BTreeMap::new();
    for i in 0..k {
        let v = cycle[i];
        if g.degree(v) != 3 {
            return Err(GraphError::BadCycle(format!(
                "cycle vertex {v} is not cubic"
            )));
        }
        let prev = cycle[(i + k - 1) % k];
        let next = cycle[(i + 1) % k];
        let third = *g
            .neighbors(v)
            .iter()
            .find(|&&x| x != prev && x != next)
            .expect("cubic vertex has a third neighbor");
        let rot = g.neighbors(v);
        let ip = rot.iter().position(|&x| x == prev).unwrap();
        let inx = rot.iter().position(|&x| x == next).unwrap();
        // Cyclic order (prev, next, third) means the third edge leaves to the
        // left of the traversal prev -> v -> next; (prev, third, next) means
        // to the right.
        let side = if (ip + 1) % 3 == inx {
            CycleSide::Left
        } else {
            CycleSide::Right
        };
        if position[third] == usize::MAX {
            third_edge_side[i] = Some(side);
            attach.insert(third, side);
        } else {
            third_edge_side[i] = None; // chord
        }
    }
    // Spread side labels over the components of the graph minus the cycle.
    let mut side: Vec<Option<CycleSide>> = vec![None; n];
    let mut seen = vec![false; n];
    for v in 0..n {
        if position[v] != usize::MAX || seen[v] {
            continue;
        }
        let mut component = vec![v];
        seen[v] = true;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if position[y] == usize::MAX && !seen[y] {
                    seen[y] = true;
                    component.push(y);
                    stack.push(y);
                }
            }
        }
        let mut label: Option<CycleSide> = None;
        for &x in &component {
            if let Some(&s) = attach.get(&x) {
                match label {
                    None => label = Some(s),
                    Some(l) if l != s => {
                        return Err(GraphError::InconsistentEmbedding(format!(
                            "component through vertex {v} attaches to both sides of the cycle"
                        )));
                    }
                    _ => {}
                }
            }
        }
        let Some(label) = label else {
            return Err(GraphError::InconsistentEmbedding(format!(
                "component through vertex {v} never touches the cycle"
            )));
        };
        for &x in &component {
            side[x] = Some(label);
        }
    }
    let left: Vec<usize> = (0..n).filter(|&v| side[v] == Some(CycleSide::Left)).collect();
    let right: Vec<usize> = (0..n)
        .filter(|&v| side[v] == Some(CycleSide::Right))
        .collect();
    Ok(CycleSplit {
        cycle: cycle.to_vec(),
        side,
        third_edge_side,
        left,
        right,
    })
}
