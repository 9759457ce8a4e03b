//! Maximal outerplanar graphs (mops) as triangulated convex polygons.
//!
//! Every mop has a unique Hamiltonian cycle: its boundary. We therefore
//! store a mop canonically as the polygon `0, 1, .., n-1, 0` plus the set
//! of its chords given as cycle-position pairs. `labels` carries the
//! original vertex ids through vertex-deletion surgery, so sets built on a
//! reduced graph lift back to the input graph without translation tables.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MopError {
    #[error("a mop needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("diagonal ({0}, {1}) is not a chord of the cycle")]
    InvalidDiagonal(usize, usize),
    #[error("duplicate diagonal ({0}, {1})")]
    DuplicateDiagonal(usize, usize),
    #[error("expected {expected} diagonals for n={n}, got {actual}")]
    WrongDiagonalCount {
        n: usize,
        expected: usize,
        actual: usize,
    },
    #[error("diagonals ({0}, {1}) and ({2}, {3}) cross")]
    CrossingDiagonals(usize, usize, usize, usize),
    #[error("deleting the given positions does not leave a mop: {0}")]
    NotAMopAfterDeletion(String),
}

/// The condition violated when a graph fails mop recognition.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MopViolation {
    #[error("too few vertices: {0} < 3")]
    TooFewVertices(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("edge count {actual} != 2n-3 = {expected}")]
    WrongEdgeCount { expected: usize, actual: usize },
    #[error("edges do not split into a Hamiltonian boundary cycle plus chords")]
    NoHamiltonianBoundary,
    #[error("chords cross when drawn on the boundary cycle")]
    CrossingChords,
}

/// Two chords of the polygon cross iff exactly one endpoint of the second
/// lies strictly between the endpoints of the first in cyclic order. With
/// both pairs normalized as `(lo, hi)` this reduces to strict interleaving.
fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (p, q) = a;
    let (r, s) = b;
    (p < r && r < q && q < s) || (r < p && p < s && s < q)
}

/// A maximal outerplanar graph on cycle positions `0..n-1`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct MopGraph {
    n: usize,
    /// Chords as `(lo, hi)` cycle-position pairs, sorted.
    diagonals: Vec<(usize, usize)>,
    /// `labels[p]` is the external id of the vertex at cycle position `p`.
    labels: Vec<usize>,
}

impl MopGraph {
    /// Builds a mop from the boundary cycle `0, 1, .., n-1, 0` plus the
    /// given diagonals, validating chord count and pairwise non-crossing.
    pub fn from_diagonals(n: usize, diagonals: &[(usize, usize)]) -> Result<Self, MopError> {
        let labels = (0..n).collect();
        Self::with_labels(n, diagonals, labels)
    }

    fn with_labels(
        n: usize,
        diagonals: &[(usize, usize)],
        labels: Vec<usize>,
    ) -> Result<Self, MopError> {
        if n < 3 {
            return Err(MopError::TooFewVertices(n));
        }
        debug_assert_eq!(labels.len(), n);
        let mut diags = Vec::with_capacity(diagonals.len());
        for &(i, j) in diagonals {
            let (lo, hi) = (i.min(j), i.max(j));
            // a chord must skip at least one vertex on both arcs
            if hi >= n || lo == hi || hi - lo == 1 || (lo == 0 && hi == n - 1) {
                return Err(MopError::InvalidDiagonal(i, j));
            }
            diags.push((lo, hi));
        }
        diags.sort_unstable();
        for pair in diags.windows(2) {
            if pair[0] == pair[1] {
                return Err(MopError::DuplicateDiagonal(pair[0].0, pair[0].1));
            }
        }
        if diags.len() != n - 3 {
            return Err(MopError::WrongDiagonalCount {
                n,
                expected: n - 3,
                actual: diags.len(),
            });
        }
        for i in 0..diags.len() {
            for j in i + 1..diags.len() {
                if chords_cross(diags[i], diags[j]) {
                    return Err(MopError::CrossingDiagonals(
                        diags[i].0, diags[i].1, diags[j].0, diags[j].1,
                    ));
                }
            }
        }
        Ok(MopGraph {
            n,
            diagonals: diags,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, position: usize) -> usize {
        self.labels[position]
    }

    /// Total edge count; always `2n - 3`.
    pub fn edge_count(&self) -> usize {
        self.n + self.diagonals.len()
    }

    /// The underlying graph on cycle positions.
    pub fn to_graph(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..self.n).map(|i| (i, (i + 1) % self.n)).collect();
        edges.extend_from_slice(&self.diagonals);
        Graph::from_edges(self.n, &edges).expect("validated mop structure")
    }

    /// Degree of every cycle position.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![2usize; self.n];
        for &(a, b) in &self.diagonals {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Cycle positions of degree 2; every mop has at least two.
    pub fn degree_two_positions(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 2)
            .map(|(p, _)| p)
            .collect()
    }

    /// Deletes the given cycle positions. The remaining vertices keep their
    /// cyclic order and labels; each gap left by a deleted run must be
    /// bridged by an existing edge, and the result must again be a mop.
    pub fn remove_consecutive(&self, positions: &[usize]) -> Result<MopGraph, MopError> {
        let mut delete = vec![false; self.n];
        for &p in positions {
            assert!(p < self.n, "position {p} out of range");
            delete[p] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&p| !delete[p]).collect();
        let n2 = keep.len();
        if n2 < 3 {
            return Err(MopError::NotAMopAfterDeletion(format!(
                "only {n2} vertices remain"
            )));
        }
        if n2 == self.n {
            return Ok(self.clone());
        }
        let g = self.to_graph();
        let mut new_pos = vec![usize::MAX; self.n];
        for (i, &p) in keep.iter().enumerate() {
            new_pos[p] = i;
        }
        // inherited boundary: consecutive survivors must already be adjacent
        for i in 0..n2 {
            let (a, b) = (keep[i], keep[(i + 1) % n2]);
            if !g.has_edge(a, b) {
                return Err(MopError::NotAMopAfterDeletion(format!(
                    "gap between surviving vertices {a} and {b} is not bridged by an edge"
                )));
            }
        }
        // every other surviving edge becomes a chord of the new boundary
        let mut diagonals = Vec::new();
        for i in 0..n2 {
            for j in i + 1..n2 {
                let boundary = j == i + 1 || (i == 0 && j == n2 - 1);
                if !boundary && g.has_edge(keep[i], keep[j]) {
                    diagonals.push((i, j));
                }
            }
        }
        let labels = keep.iter().map(|&p| self.labels[p]).collect();
        MopGraph::with_labels(n2, &diagonals, labels)
            .map_err(|e| MopError::NotAMopAfterDeletion(e.to_string()))
    }
}

impl std::fmt::Debug for MopGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MopGraph(n={}, diagonals={:?}, labels={:?})",
            self.n, self.diagonals, self.labels
        )
    }
}

/// Checks whether `g` is maximal outerplanar: connected, `2n - 3` edges,
/// and a Hamiltonian cycle whose remaining edges are pairwise non-crossing
/// chords. On success returns the recovered [`MopGraph`] (labels are the
/// original vertex ids in cycle order, starting at the smallest id and
/// walking toward its smaller boundary neighbor).
///
/// In a mop every 3-clique bounds a face, so an edge lies in exactly one
/// triangle iff it is on the boundary and exactly two iff it is a chord.
/// The edge classification below therefore recovers the unique Hamiltonian
/// cycle whenever one exists.
pub fn is_maximal_outerplanar(g: &Graph) -> Result<MopGraph, MopViolation> {
    let n = g.n();
    if n < 3 {
        return Err(MopViolation::TooFewVertices(n));
    }
    let expected = 2 * n - 3;
    let actual = g.edge_count();
    if actual != expected {
        return Err(MopViolation::WrongEdgeCount { expected, actual });
    }
    if !g.is_connected() {
        return Err(MopViolation::NotConnected);
    }

    let mut boundary_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut chords = Vec::new();
    for (u, v) in g.edges() {
        match g.neighbors(u).intersection_len(g.neighbors(v)) {
            1 => {
                boundary_adj[u].push(v);
                boundary_adj[v].push(u);
            }
            2 => chords.push((u, v)),
            _ => return Err(MopViolation::NoHamiltonianBoundary),
        }
    }
    if boundary_adj.iter().any(|nb| nb.len() != 2) {
        return Err(MopViolation::NoHamiltonianBoundary);
    }

    // walk the boundary from the smallest id toward its smaller neighbor
    let start = 0;
    let mut cycle = Vec::with_capacity(n);
    cycle.push(start);
    let mut prev = start;
    let mut cur = *boundary_adj[start].iter().min().expect("two neighbors");
    while cur != start {
        cycle.push(cur);
        let next = if boundary_adj[cur][0] == prev {
            boundary_adj[cur][1]
        } else {
            boundary_adj[cur][0]
        };
        prev = cur;
        cur = next;
    }
    if cycle.len() != n {
        return Err(MopViolation::NoHamiltonianBoundary);
    }

    let mut position = vec![usize::MAX; n];
    for (p, &v) in cycle.iter().enumerate() {
        position[v] = p;
    }
    let diagonals: Vec<(usize, usize)> = chords
        .iter()
        .map(|&(u, v)| (position[u], position[v]))
        .collect();
    MopGraph::with_labels(n, &diagonals, cycle).map_err(|e| match e {
        MopError::CrossingDiagonals(..) => MopViolation::CrossingChords,
        _ => MopViolation::NoHamiltonianBoundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn fan(n: usize) -> MopGraph {
        let diags: Vec<(usize, usize)> = (2..n - 1).map(|i| (0, i)).collect();
        MopGraph::from_diagonals(n, &diags).unwrap()
    }

    #[test]
    fn triangle_is_smallest_mop() {
        let m = MopGraph::from_diagonals(3, &[]).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert_eq!(m.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn valid_hexagon() {
        let m = MopGraph::from_diagonals(6, &[(0, 2), (0, 3), (3, 5)]).unwrap();
        assert_eq!(m.edge_count(), 9);
        // independent interleaving check over all pairs
        let d = m.diagonals();
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                let ((p, q), (r, s)) = (d[i], d[j]);
                let between = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
                let crossings = (between(r, p, q) as u8 + between(s, p, q) as u8) % 2;
                assert_eq!(crossings, 0, "chords {:?} and {:?} interleave", d[i], d[j]);
            }
        }
    }

    #[test]
    fn crossing_diagonals_rejected() {
        let err = MopGraph::from_diagonals(6, &[(0, 2), (1, 3), (0, 3)]).unwrap_err();
        assert_eq!(err, MopError::CrossingDiagonals(0, 2, 1, 3));
    }

    #[test]
    fn wrong_count_and_duplicates_rejected() {
        assert!(matches!(
            MopGraph::from_diagonals(6, &[(0, 2)]),
            Err(MopError::WrongDiagonalCount {
                expected: 3,
                actual: 1,
                ..
            })
        ));
        assert!(matches!(
            MopGraph::from_diagonals(6, &[(0, 2), (2, 0), (0, 3)]),
            Err(MopError::DuplicateDiagonal(0, 2))
        ));
        assert!(matches!(
            MopGraph::from_diagonals(6, &[(0, 1), (0, 2), (0, 3)]),
            Err(MopError::InvalidDiagonal(0, 1))
        ));
        assert!(matches!(
            MopGraph::from_diagonals(6, &[(0, 5), (0, 2), (0, 3)]),
            Err(MopError::InvalidDiagonal(0, 5))
        ));
    }

    #[test]
    fn recognize_triangle_and_reject_k4() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_maximal_outerplanar(&k3).is_ok());

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            is_maximal_outerplanar(&k4).unwrap_err(),
            MopViolation::WrongEdgeCount {
                expected: 5,
                actual: 6
            }
        );
    }

    #[test]
    fn reject_k23_plus_edge() {
        // 7 = 2n-3 edges and connected, but contains K2,3: not outerplanar
        let g = Graph::from_edges(5, &[(0, 1), (0, 3), (0, 4), (2, 1), (2, 3), (2, 4), (0, 2)])
            .unwrap();
        assert!(is_maximal_outerplanar(&g).is_err());
    }

    #[test]
    fn recognition_recovers_rotated_labels() {
        // pentagon fan written with scrambled ids
        let g = Graph::from_edges(5, &[(3, 1), (1, 4), (4, 0), (0, 2), (2, 3), (3, 4), (3, 0)])
            .unwrap();
        let m = is_maximal_outerplanar(&g).unwrap();
        assert_eq!(m.n(), 5);
        assert_eq!(m.edge_count(), 7);
        // boundary walk starts at vertex 0 toward its smaller neighbor
        assert_eq!(m.label(0), 0);
        // the recovered structure must rebuild exactly the input graph
        let back = m.to_graph();
        let relabel: Vec<(usize, usize)> = back
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (m.label(a), m.label(b));
                (x.min(y), x.max(y))
            })
            .collect();
        let mut expected = g.edges();
        expected.sort_unstable();
        let mut got = relabel;
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn remove_nothing_is_identity() {
        let m = MopGraph::from_diagonals(3, &[]).unwrap();
        assert_eq!(m.remove_consecutive(&[]).unwrap(), m);
    }

    #[test]
    fn remove_unbridged_gap_fails() {
        // hexagon fan from vertex 0; deleting {2,3,4} would need edge (1,5)
        let m = fan(6);
        let err = m.remove_consecutive(&[2, 3, 4]).unwrap_err();
        assert!(matches!(err, MopError::NotAMopAfterDeletion(_)));
    }

    #[test]
    fn remove_bridged_run_yields_triangle() {
        // hexagon fan: {1,2,3} is bridged by chord (0,4)
        let m = fan(6);
        let m2 = m.remove_consecutive(&[1, 2, 3]).unwrap();
        assert_eq!(m2.n(), 3);
        assert_eq!(m2.edge_count(), 3);
        assert_eq!(m2.labels(), &[0, 4, 5]);
    }

    #[test]
    fn fan_degrees() {
        let m = fan(13);
        let deg = m.degrees();
        assert_eq!(deg[0], 12);
        assert_eq!(deg.iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 10);
        assert_eq!(m.degree_two_positions(), vec![1, 12]);
    }
}
