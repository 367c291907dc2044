//! Perfect matchings derived from Hamilton cycles, exact matching counts,
//! and the exponential lower bounds that follow for tubular fullerenes.
//!
//! An even Hamilton cycle yields three perfect matchings: its two alternating
//! halves plus the chord set (all non-cycle edges) —
//! [`matchings_from_hamilton`]. Counting all perfect matchings exactly is
//! done twice, by structurally different algorithms, so the results can be
//! cross-checked: [`count_perfect_matchings`] (memoized
//! lowest-uncovered-vertex recursion) and
//! [`count_perfect_matchings_deletion_contraction`] (edge
//! inclusion/exclusion on explicit graph copies with isolated-vertex
//! pruning).
//!
//! [`hamilton_lower_bound`] and [`matching_lower_bound`] give the guaranteed
//! minimums for a tube with `r` hexagonal rings (`n = 10r + 20` vertices):
//! `5·2^(r/2+1)` (even `r`) or `5·2^((r+1)/2)` (odd `r`) Hamilton cycles, and
//! `15·2^⌊n/20⌋` perfect matchings.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Edge, EmbeddedGraph, GraphError};
use crate::hamilton::{verify_hamilton, HamiltonCycle};

/// Default size cap for exact matching counts.
pub const MATCHING_COUNT_BUDGET: usize = 60;

/// Hard ceiling of the counting implementations (vertices are tracked in a
/// 128-bit mask).
pub const MATCHING_COUNT_CEILING: usize = 128;

/// Errors from matching derivation and counting.
#[derive(Debug, Error)]
pub enum MatchingError {
    /// Alternating matchings need an even cycle.
    #[error("cycle of odd length {len} has no alternating matchings")]
    OddCycle { len: usize },
    /// The supplied cycle is not a Hamilton cycle of the graph.
    #[error("not a Hamilton cycle of this graph: {0}")]
    InvalidCycle(String),
    /// An exact count was requested beyond the size budget.
    #[error("graph has {n} vertices, above the counting budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    /// A graph-level inconsistency.
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A perfect matching: disjoint edges covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    /// The matched edges.
    pub edges: BTreeSet<Edge>,
}

impl Matching {
    /// Number of matched edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// True when the matching has no edges.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that the edges exist in `g`, are pairwise disjoint, and cover
    /// every vertex.
    pub fn is_perfect(&self, g: &EmbeddedGraph) -> bool {
        let n = g.n();
        let mut covered = vec![false; n];
        for e in &self.edges {
            let (u, v) = e.endpoints();
            if u >= n || v >= n || !g.has_edge(u, v) || covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.iter().all(|&c| c)
    }
}

/// Derives three perfect matchings from a verified Hamilton cycle: the two
/// alternating halves of the cycle and the chord set (all remaining edges).
/// The three are pairwise distinct and their union is the whole edge set.
pub fn matchings_from_hamilton(
    g: &EmbeddedGraph,
    hc: &HamiltonCycle,
) -> Result<[Matching; 3], MatchingError> {
    if !verify_hamilton(g, hc) {
        return Err(MatchingError::InvalidCycle(
            "verification failed".into(),
        ));
    }
    let n = hc.vertices.len();
    if n % 2 != 0 {
        return Err(MatchingError::OddCycle { len: n });
    }
    let edge_at = |i: usize| Edge::new(hc.vertices[i % n], hc.vertices[(i + 1) % n]);
    let even_half: BTreeSet<Edge> = (0..n).step_by(2).map(edge_at).collect();
    let odd_half: BTreeSet<Edge> = (1..n).step_by(2).map(edge_at).collect();
    let all: BTreeSet<Edge> = g.edges().into_iter().collect();
    let chords: BTreeSet<Edge> = all.difference(&hc.edges).copied().collect();
    let out = [
        Matching { edges: even_half },
        Matching { edges: odd_half },
        Matching { edges: chords },
    ];
    for (i, m) in out.iter().enumerate() {
        if !m.is_perfect(g) {
            return Err(MatchingError::InvalidCycle(format!(
                "derived matching {i} is not perfect"
            )));
        }
    }
    if out[0] == out[1] || out[0] == out[2] || out[1] == out[2] {
        return Err(MatchingError::InvalidCycle(
            "derived matchings are not distinct".into(),
        ));
    }
    Ok(out)
}

fn counting_guard(g: &EmbeddedGraph, max_n: usize) -> Result<(), MatchingError> {
    let n = g.n();
    let budget = max_n.min(MATCHING_COUNT_CEILING);
    if n > budget {
        return Err(MatchingError::BudgetExceeded { n, budget });
    }
    Ok(())
}

/// Counts all perfect matchings exactly. The recursion always matches the
/// lowest uncovered vertex with one of its uncovered neighbors and memoizes
/// on the covered-vertex set, which keeps the state space small on
/// tube-shaped graphs. Refuses graphs with more than `max_n` vertices.
pub fn count_perfect_matchings(
    g: &EmbeddedGraph,
    max_n: usize,
) -> Result<BigUint, MatchingError> {
    counting_guard(g, max_n)?;
    let n = g.n();
    if n % 2 != 0 {
        return Ok(BigUint::from(0u32));
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    fn rec(
        g: &EmbeddedGraph,
        covered: u128,
        n: usize,
        memo: &mut HashMap<u128, BigUint>,
    ) -> BigUint {
        let mut v = 0;
        while v < n && covered & (1 << v) != 0 {
            v += 1;
        }
        if v == n {
            return BigUint::from(1u32);
        }
        if let Some(hit) = memo.get(&covered) {
            return hit.clone();
        }
        let mut total = BigUint::from(0u32);
        for &w in g.neighbors(v) {
            if covered & (1 << w) == 0 {
                total += rec(g, covered | (1 << v) | (1 << w), n, memo);
            }
        }
        memo.insert(covered, total.clone());
        total
    }
    let mut memo = HashMap::new();
    Ok(rec(g, 0, n, &mut memo))
}

/// Counts all perfect matchings by edge inclusion/exclusion: the lowest
/// uncovered vertex's smallest incident edge is either in the matching
/// (delete both endpoints) or not (delete the edge), with isolated-vertex
/// pruning. Structurally independent of [`count_perfect_matchings`], so
/// agreement between the two is a strong cross-check. Refuses graphs with
/// more than `max_n` vertices.
pub fn count_perfect_matchings_deletion_contraction(
    g: &EmbeddedGraph,
    max_n: usize,
) -> Result<BigUint, MatchingError> {
    counting_guard(g, max_n)?;
    let n = g.n();
    if n % 2 != 0 {
        return Ok(BigUint::from(0u32));
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    fn rec(adj: &mut Vec<BTreeSet<usize>>, alive: &mut Vec<bool>, remaining: usize) -> BigUint {
        if remaining == 0 {
            return BigUint::from(1u32);
        }
        let v = (0..alive.len()).find(|&v| alive[v]).expect("remaining > 0");
        let Some(&w) = adj[v].iter().next() else {
            // Isolated vertex: no perfect matching extends this state.
            return BigUint::from(0u32);
        };

        // Include (v, w): both endpoints leave the graph.
        let removed_v: Vec<usize> = adj[v].iter().copied().collect();
        let removed_w: Vec<usize> = adj[w].iter().copied().collect();
        for &x in &removed_v {
            adj[x].remove(&v);
        }
        for &x in &removed_w {
            adj[x].remove(&w);
        }
        let (sv, sw) = (std::mem::take(&mut adj[v]), std::mem::take(&mut adj[w]));
        alive[v] = false;
        alive[w] = false;
        let mut total = rec(adj, alive, remaining - 2);
        alive[v] = true;
        alive[w] = true;
        adj[v] = sv;
        adj[w] = sw;
        for &x in &removed_v {
            adj[x].insert(v);
        }
        for &x in &removed_w {
            adj[x].insert(w);
        }

        // Exclude (v, w): only the edge leaves. If that isolates v the branch
        // dies immediately inside the recursive call.
        adj[v].remove(&w);
        adj[w].remove(&v);
        total += rec(adj, alive, remaining);
        adj[v].insert(w);
        adj[w].insert(v);
        total
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    Ok(rec(&mut adj, &mut alive, n))
}

/// Guaranteed minimum number of perfect matchings for a tube on `n`
/// vertices: `15·2^⌊n/20⌋`.
///
/// # Panics
/// When `n` is not a tube order (`n ≥ 20` and `n ≡ 0 mod 10`).
pub fn matching_lower_bound(n: usize) -> u64 {
    assert!(
        n >= 20 && n % 10 == 0,
        "tube orders are n = 10r + 20; got {n}"
    );
    15 * (1u64 << (n / 20))
}

/// Guaranteed minimum number of Hamilton cycles for a tube with `r`
/// hexagonal rings: `5·2^(r/2+1)` for even `r`, `5·2^((r+1)/2)` for odd `r`.
pub fn hamilton_lower_bound(r: usize) -> u64 {
    if r % 2 == 0 {
        5 * (1u64 << (r / 2 + 1))
    } else {
        5 * (1u64 << ((r + 1) / 2))
    }
}

/// The prior general-purpose floor on perfect-matching counts,
/// `⌈3(n+2)/4⌉`, used as a sanity reference next to the exponential bound.
pub fn prior_matching_bound(n: usize) -> u64 {
    ((3 * (n as u64 + 2)) + 3) / 4
}

/// Bounds and (optionally) exact counts for one tube.
#[derive(Debug, Clone)]
pub struct BoundReport {
    /// Vertex count (`10r + 20`).
    pub n: usize,
    /// Hexagonal ring count.
    pub r: usize,
    /// Guaranteed minimum number of Hamilton cycles.
    pub hamilton_bound: u64,
    /// Guaranteed minimum number of perfect matchings.
    pub matching_bound: u64,
    /// Exact perfect-matching count, when computed.
    pub exact_matchings: Option<BigUint>,
    /// Exact Hamilton-cycle count, when computed.
    pub exact_hamilton: Option<u64>,
}

impl BoundReport {
    /// Formula-only report for a tube with `r` rings.
    pub fn for_tube(r: usize) -> Self {
        let n = 10 * r + 20;
        BoundReport {
            n,
            r,
            hamilton_bound: hamilton_lower_bound(r),
            matching_bound: matching_lower_bound(n),
            exact_matchings: None,
            exact_hamilton: None,
        }
    }

    /// True when every exact value present respects its bound.
    pub fn bounds_hold(&self) -> bool {
        let m_ok = self
            .exact_matchings
            .as_ref()
            .map_or(true, |m| *m >= BigUint::from(self.matching_bound));
        let h_ok = self
            .exact_hamilton
            .map_or(true, |h| h >= self.hamilton_bound);
        m_ok && h_ok
    }
}
