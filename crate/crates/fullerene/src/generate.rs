//! Parametric generator for tubular fullerenes: two pentagonal caps joined by
//! a stack of hexagonal rings.
//!
//! `nanotube(r)` builds the fullerene on `n = 10r + 20` vertices consisting
//! of a cap of six pentagons (a central pentagon surrounded by five petal
//! pentagons), then `r` rings of five hexagons each, then a second cap.
//! `nanotube(0)` is the dodecahedron.
//!
//! Vertex layout (all indices taken cyclically):
//! - `0..5` — the centers of the top cap, forming its central pentagon;
//! - `5 + 10i + j` for `i in 0..=r`, `j in 0..10` — vertex `j` of the
//!   boundary cycle `C_i`; `C_0` is the top cap boundary and `C_r` the
//!   bottom cap boundary;
//! - `n-5..n` — the centers of the bottom cap.
//!
//! Between consecutive cycles the spoke edges sit at positions of one
//! parity: `C_i` position `j` is joined to `C_{i+1}` position `j` exactly
//! when `j ≡ i (mod 2)`. The top-cap centers attach to the odd positions of
//! `C_0`; the bottom-cap centers attach to the positions of `C_r` with the
//! parity of `r`.

use crate::graph::{embedding_from_faces, EmbeddedGraph};

/// Vertex id of top-cap center `k` (the central pentagon of the top cap).
pub fn top_center(k: usize) -> usize {
    k % 5
}

/// Vertex id of position `j` on the boundary cycle `C_i` of a generated
/// nanotube.
pub fn cycle_vertex(i: usize, j: usize) -> usize {
    5 + 10 * i + (j % 10)
}

/// Vertex id of bottom-cap center `k` of a generated nanotube with `r`
/// hexagonal rings.
pub fn bottom_center(r: usize, k: usize) -> usize {
    10 * r + 15 + (k % 5)
}

/// The directed face list of the nanotube with `r` hexagonal rings. Faces are
/// oriented so that every directed edge is used exactly once, as
/// [`embedding_from_faces`] requires. Exposed for tests that need to know the
/// generator's face layout exactly.
pub fn nanotube_faces(r: usize) -> Vec<Vec<usize>> {
    let c = cycle_vertex;
    let q = |k: usize| bottom_center(r, k);
    let mut faces: Vec<Vec<usize>> = Vec::with_capacity(5 * r + 12);
    // Top cap: central pentagon, then the five petals. Petal k touches C_0 at
    // positions 2k+1 .. 2k+3, so the odd positions carry the inward spokes.
    faces.push(vec![0, 1, 2, 3, 4]);
    for k in 0..5 {
        faces.push(vec![
            top_center(k + 1),
            top_center(k),
            c(0, 2 * k + 1),
            c(0, 2 * k + 2),
            c(0, 2 * k + 3),
        ]);
    }
    // Hexagonal rings. Ring i sits between C_i and C_{i+1}; its hexagons
    // start at positions of parity i, which makes the spoke parities
    // alternate from ring to ring.
    for i in 0..r {
        for k in 0..5 {
            let s = 2 * k + (i % 2);
            faces.push(vec![
                c(i, s + 2),
                c(i, s + 1),
                c(i, s),
                c(i + 1, s),
                c(i + 1, s + 1),
                c(i + 1, s + 2),
            ]);
        }
    }
    // Bottom cap: five petals against C_r, then the central pentagon.
    for k in 0..5 {
        let t = 2 * k + (r % 2);
        faces.push(vec![c(r, t + 2), c(r, t + 1), c(r, t), q(k), q(k + 1)]);
    }
    faces.push(vec![q(4), q(3), q(2), q(1), q(0)]);
    faces
}

/// Builds the tubular fullerene with `r` hexagonal rings on `10r + 20`
/// vertices. `nanotube(0)` is the dodecahedron.
pub fn nanotube(r: usize) -> EmbeddedGraph {
    let n = 10 * r + 20;
    embedding_from_faces(n, &nanotube_faces(r))
        .expect("generated face list is a consistent spherical embedding")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dodecahedron_has_twelve_pentagons() {
        let g = nanotube(0);
        assert_eq!(g.n(), 20);
        let faces = g.trace_faces().expect("cubic");
        assert_eq!(faces.len(), 12);
        assert!(faces.iter().all(|f| f.len() == 5), "all faces pentagonal");
    }

    #[test]
    fn spoke_parity_alternates_between_cycles() {
        let r = 3;
        let g = nanotube(r);
        for i in 0..r {
            for j in 0..10 {
                let spoke = g.has_edge(cycle_vertex(i, j), cycle_vertex(i + 1, j));
                assert_eq!(
                    spoke,
                    j % 2 == i % 2,
                    "spoke C_{i}[{j}] -- C_{}[{j}] exists iff parity matches",
                    i + 1
                );
            }
        }
    }
}
