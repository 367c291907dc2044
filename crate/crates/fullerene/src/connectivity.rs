//! Cyclic edge-connectivity: discovery and classification of edge cutsets
//! whose removal leaves two components that each still contain a cycle.
//!
//! Two discovery strategies are implemented and cross-checked in tests:
//! a structural one that reads cutsets off the embedding (the out-edges of
//! a pentagonal face, and the five edges stitching a ring of five faces
//! together), and a brute-force one that tries every 5-subset of edges.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{
    dual_graph, split_at_cycle, CycleSide, Edge, EmbeddedGraph, Face, GraphError,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutsetError {
    #[error("edge {0} is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("no cyclic cutset of size at most 5 exists")]
    SearchExhausted,
    #[error("bad cycle: {0}")]
    BadCycle(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Whether one side of a cutset is nothing more than a bare cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Trivial,
    Nontrivial,
}

/// A verified cyclic edge cutset: removing `edges` splits the graph into
/// exactly the two components `side_a` (the one containing vertex 0) and
/// `side_b`, and both components contain a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCutset {
    pub edges: Vec<Edge>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub classification: Classification,
}

impl EdgeCutset {
    pub fn k(&self) -> usize {
        self.edges.len()
    }
}

/// Classifies a cutset of `k` edges from the two components it leaves:
/// trivial iff at least one component induces a single `k`-cycle (exactly
/// `k` vertices, each with exactly two neighbors inside the component, all
/// connected).
pub fn classify_cutset(
    g: &EmbeddedGraph,
    side_a: &[usize],
    side_b: &[usize],
    k: usize,
) -> Classification {
    if induces_single_cycle(g, side_a, k) || induces_single_cycle(g, side_b, k) {
        Classification::Trivial
    } else {
        Classification::Nontrivial
    }
}

fn induces_single_cycle(g: &EmbeddedGraph, side: &[usize], k: usize) -> bool {
    if side.len() != k {
        return false;
    }
    let members: BTreeSet<usize> = side.iter().copied().collect();
    for &v in side {
        let inside = g.neighbors(v).iter().filter(|u| members.contains(u)).count();
        if inside != 2 {
            return false;
        }
    }
    // k vertices, all of degree 2 inside the set: a disjoint union of
    // cycles; it is a single cycle iff it is connected.
    let mut seen = BTreeSet::new();
    let start = side[0];
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if members.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == k
}

/// Checks a candidate edge set: returns a populated [`EdgeCutset`] iff
/// removing the edges leaves exactly two components and each contains a
/// cycle (nonempty 2-core). Returns `Ok(None)` when the set is not a cyclic
/// cutset.
pub fn is_cyclic_cutset(
    g: &EmbeddedGraph,
    edges: &[Edge],
) -> Result<Option<EdgeCutset>, CutsetError> {
    for &e in edges {
        let (u, v) = e.endpoints();
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(CutsetError::UnknownEdge(e));
        }
    }
    Ok(cutset_from_edges(g, edges))
}

/// The workhorse shared by the public check and the exhaustive scan; assumes
/// the edges exist in the graph.
fn cutset_from_edges(g: &EmbeddedGraph, cut: &[Edge]) -> Option<EdgeCutset> {
    let n = g.n();
    let cut_set: BTreeSet<Edge> = cut.iter().copied().collect();
    // Components of the graph minus the cut edges.
    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if component[v] != usize::MAX {
            continue;
        }
        component[v] = count;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if component[y] == usize::MAX && !cut_set.contains(&Edge::new(x, y)) {
                    component[y] = count;
                    stack.push(y);
                }
            }
        }
        count += 1;
    }
    if count != 2 {
        return None;
    }
    let side_a: Vec<usize> = (0..n).filter(|&v| component[v] == component[0]).collect();
    let side_b: Vec<usize> = (0..n).filter(|&v| component[v] != component[0]).collect();
    if !has_cycle_within(g, &side_a, &cut_set) || !has_cycle_within(g, &side_b, &cut_set) {
        return None;
    }
    let mut edges: Vec<Edge> = cut.to_vec();
    edges.sort_unstable();
    edges.dedup();
    let classification = classify_cutset(g, &side_a, &side_b, edges.len());
    Some(EdgeCutset {
        edges,
        side_a,
        side_b,
        classification,
    })
}

/// A vertex set contains a cycle iff iteratively pruning vertices of degree
/// at most 1 (inside the set, cut edges excluded) leaves something: a
/// nonempty 2-core.
fn has_cycle_within(g: &EmbeddedGraph, side: &[usize], cut: &BTreeSet<Edge>) -> bool {
    let members: BTreeSet<usize> = side.iter().copied().collect();
    let mut degree: std::collections::BTreeMap<usize, usize> = side
        .iter()
        .map(|&v| {
            let d = g
                .neighbors(v)
                .iter()
                .filter(|&&u| members.contains(&u) && !cut.contains(&Edge::new(v, u)))
                .count();
            (v, d)
        })
        .collect();
    let mut alive: BTreeSet<usize> = members.clone();
    let mut queue: Vec<usize> = degree
        .iter()
        .filter(|&(_, &d)| d <= 1)
        .map(|(&v, _)| v)
        .collect();
    while let Some(v) = queue.pop() {
        if !alive.remove(&v) {
            continue;
        }
        for &u in g.neighbors(v) {
            if alive.contains(&u) && !cut.contains(&Edge::new(v, u)) {
                let d = degree.get_mut(&u).expect("tracked degree");
                *d -= 1;
                if *d <= 1 {
                    queue.push(u);
                }
            }
        }
    }
    !alive.is_empty()
}

struct Combinations {
    m: usize,
    k: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            k,
            idx: (0..k).collect(),
            started: false,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.k > self.m {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        // Advance the rightmost index that can still move.
        let mut i = self.k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.m - self.k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in (i + 1)..self.k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

fn uf_find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Cheap test: does removing the given edge indices disconnect the graph
/// into exactly two parts? Union-find over the remaining edges.
fn splits_in_two(n: usize, edges: &[Edge], skip: &[usize], parent: &mut Vec<usize>) -> bool {
    parent.clear();
    parent.extend(0..n);
    let mut skip_it = skip.iter().peekable();
    for (i, e) in edges.iter().enumerate() {
        if skip_it.peek() == Some(&&i) {
            skip_it.next();
            continue;
        }
        let (u, v) = e.endpoints();
        let (ru, rv) = (uf_find(parent, u), uf_find(parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut roots = 0;
    for v in 0..n {
        if parent[v] == v {
            roots += 1;
            if roots > 2 {
                return false;
            }
        }
    }
    roots == 2
}

/// The smallest `k ≤ 5` for which a cyclic-`k`-cutset exists, by exhaustive
/// search over all edge subsets of size 1..=5 with early exit.
pub fn cyclic_edge_connectivity(g: &EmbeddedGraph) -> Result<usize, CutsetError> {
    let edges = g.edges();
    let m = edges.len();
    let n = g.n();
    let mut parent: Vec<usize> = Vec::with_capacity(n);
    let mut subset: Vec<Edge> = Vec::with_capacity(5);
    for k in 1..=5 {
        let mut combos = Combinations::new(m, k);
        while let Some(idx) = combos.next() {
            if !splits_in_two(n, &edges, idx, &mut parent) {
                continue;
            }
            subset.clear();
            subset.extend(idx.iter().map(|&i| edges[i]));
            if cutset_from_edges(g, &subset).is_some() {
                return Ok(k);
            }
        }
    }
    Err(CutsetError::SearchExhausted)
}

/// Every cyclic-5-cutset found by brute force: all `C(m, 5)` edge subsets,
/// with a union-find connectivity test as the cheap filter. Intended for
/// graphs up to roughly 40 vertices.
pub fn find_cyclic_5_cutsets_exhaustive(g: &EmbeddedGraph) -> Vec<EdgeCutset> {
    let edges = g.edges();
    let m = edges.len();
    let n = g.n();
    let mut parent: Vec<usize> = Vec::with_capacity(n);
    let mut subset: Vec<Edge> = Vec::with_capacity(5);
    let mut found = Vec::new();
    let mut combos = Combinations::new(m, 5);
    while let Some(idx) = combos.next() {
        if !splits_in_two(n, &edges, idx, &mut parent) {
            continue;
        }
        subset.clear();
        subset.extend(idx.iter().map(|&i| edges[i]));
        if let Some(cutset) = cutset_from_edges(g, &subset) {
            found.push(cutset);
        }
    }
    found.sort_by(|a, b| a.edges.cmp(&b.edges));
    found
}

/// The out-edges of a face: edges with exactly one endpoint on its boundary.
fn face_out_edges(g: &EmbeddedGraph, face: &Face) -> Vec<Edge> {
    let members = face.vertex_set();
    let mut out = Vec::new();
    for &v in &face.boundary {
        for &u in g.neighbors(v) {
            if !members.contains(&u) {
                out.push(Edge::new(v, u));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Structural enumeration of cyclic-5-cutsets, read off the embedding:
/// the out-edges of every pentagonal face, plus the five stitching edges of
/// every ring of five faces (an induced 5-cycle in the dual). Each candidate
/// is verified by [`is_cyclic_cutset`] before being reported; results are
/// deduplicated by edge set and sorted.
pub fn find_cyclic_5_cutsets(g: &EmbeddedGraph) -> Vec<EdgeCutset> {
    let faces = match g.trace_faces() {
        Ok(f) => f,
        Err(_) => return Vec::new(),
    };
    let mut candidates: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for face in faces.iter().filter(|f| f.len() == 5) {
        let out = face_out_edges(g, face);
        if out.len() == 5 {
            candidates.insert(out);
        }
    }
    let dual = dual_graph(&faces);
    for ring in dual.induced_five_cycles() {
        let mut stitching = Vec::with_capacity(5);
        for i in 0..5 {
            let (fa, fb) = (ring[i], ring[(i + 1) % 5]);
            let shared: Vec<Edge> = faces[fa]
                .edge_set()
                .intersection(&faces[fb].edge_set())
                .copied()
                .collect();
            if shared.len() == 1 {
                stitching.push(shared[0]);
            }
        }
        if stitching.len() == 5 {
            stitching.sort_unstable();
            stitching.dedup();
            if stitching.len() == 5 {
                candidates.insert(stitching);
            }
        }
    }
    let mut found: Vec<EdgeCutset> = candidates
        .iter()
        .filter_map(|edges| cutset_from_edges(g, edges))
        .collect();
    found.sort_by(|a, b| a.edges.cmp(&b.edges));
    found
}

pub fn has_nontrivial_cyclic_5_cutset(g: &EmbeddedGraph) -> bool {
    find_cyclic_5_cutsets(g)
        .iter()
        .any(|c| c.classification == Classification::Nontrivial)
}

/// Deterministic choice of the "outer" side of a cycle: faces are ranked by
/// length (longest first), ties broken by lexicographically smallest
/// boundary; the first face in this order with a vertex off the cycle marks
/// its side as the outside. The other side is the inside. Any consistent
/// convention works — the structural results are side-symmetric — but tests
/// need a deterministic one.
pub(crate) fn designate_outer_side(
    faces: &[Face],
    split: &crate::graph::CycleSplit,
) -> Option<CycleSide> {
    for idx in crate::graph::face_priority_order(faces) {
        for &v in &faces[idx].boundary {
            if let Some(side) = split.side[v] {
                return Some(side);
            }
        }
    }
    None
}

/// Splits the graph along `cycle` and returns `(inside, outside)` vertex
/// lists, the outside being the side holding the designated outer face.
pub fn cycle_ins_out(
    g: &EmbeddedGraph,
    cycle: &[usize],
) -> Result<(Vec<usize>, Vec<usize>), CutsetError> {
    let faces = g.trace_faces()?;
    let split = split_at_cycle(g, cycle)?;
    let outer = designate_outer_side(&faces, &split).ok_or_else(|| {
        CutsetError::BadCycle("every face lies on the cycle; no side can be outer".to_string())
    })?;
    let ins = split.vertices_on(outer.flipped()).to_vec();
    let out = split.vertices_on(outer).to_vec();
    Ok((ins, out))
}

/// Counts pentagonal faces all of whose vertices lie on the cycle or in the
/// given side.
pub fn pentagons_within(g: &EmbeddedGraph, cycle: &[usize], side: &[usize]) -> usize {
    let mut allowed: BTreeSet<usize> = cycle.iter().copied().collect();
    allowed.extend(side.iter().copied());
    let Ok(faces) = g.trace_faces() else {
        return 0;
    };
    faces
        .iter()
        .filter(|f| f.len() == 5 && f.boundary.iter().all(|v| allowed.contains(v)))
        .count()
}

/// For a 10-cycle with exactly five vertices whose third edge points inside,
/// counts the pentagonal faces contained in the closed inside (cycle plus
/// interior). The structural theory says this is always exactly 6; the
/// function measures rather than assumes.
pub fn six_pentagons_inside(g: &EmbeddedGraph, cycle: &[usize]) -> Result<usize, CutsetError> {
    if cycle.len() != 10 {
        return Err(CutsetError::BadCycle(format!(
            "expected a 10-cycle, got length {}",
            cycle.len()
        )));
    }
    let faces = g.trace_faces()?;
    let split = split_at_cycle(g, cycle)?;
    let outer = designate_outer_side(&faces, &split).ok_or_else(|| {
        CutsetError::BadCycle("every face lies on the cycle; no side can be outer".to_string())
    })?;
    let ins_side = outer.flipped();
    let inward = split
        .third_edge_side
        .iter()
        .filter(|s| **s == Some(ins_side))
        .count();
    if inward != 5 {
        return Err(CutsetError::BadCycle(format!(
            "expected exactly 5 inward third edges, found {inward}"
        )));
    }
    let ins = split.vertices_on(ins_side);
    Ok(pentagons_within(g, cycle, ins))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::nanotube;

    #[test]
    fn dodecahedron_pentagon_out_edges_form_trivial_cutset() {
        let g = nanotube(0);
        let faces = g.trace_faces().unwrap();
        let cut = face_out_edges(&g, &faces[0]);
        assert_eq!(cut.len(), 5);
        let cutset = is_cyclic_cutset(&g, &cut)
            .unwrap()
            .expect("pentagon out-edges form a cyclic cutset");
        assert_eq!(cutset.classification, Classification::Trivial);
        assert_eq!(
            cutset.side_a.len().min(cutset.side_b.len()),
            5,
            "one side is the bare pentagon"
        );
    }

    #[test]
    fn four_arbitrary_edges_do_not_cut_the_dodecahedron() {
        let g = nanotube(0);
        let edges = g.edges();
        let sample = [edges[0], edges[7], edges[13], edges[22]];
        assert_eq!(is_cyclic_cutset(&g, &sample).unwrap(), None);
    }

    #[test]
    fn unknown_edge_is_reported() {
        let g = nanotube(0);
        let bogus = Edge::new(0, 17);
        assert_eq!(
            is_cyclic_cutset(&g, &[bogus]).unwrap_err(),
            CutsetError::UnknownEdge(bogus)
        );
    }
}
