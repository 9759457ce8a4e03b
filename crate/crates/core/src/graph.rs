//! Plain undirected graphs and vertex subsets.
//!
//! Vertices are ids `0..n-1`. [`VertexSet`] is a fixed-universe bitset; it
//! is the currency of every domination predicate and solver witness.

use std::fmt;

use thiserror::Error;

/// A subset of `{0, .., n-1}` backed by a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            universe: n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not of the subset.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        VertexSet {
            universe: self.universe,
            words,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        VertexSet {
            universe: self.universe,
            words,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.universe, other.universe);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet {
            universe: self.universe,
            words,
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for n={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
}

/// A finite undirected graph without self-loops, as adjacency bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn set_basic_ops() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.len(), 3);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert_eq!(s.to_sorted_vec(), vec![0, 3, 65]);
        s.remove(3);
        assert_eq!(s.to_sorted_vec(), vec![0, 65]);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter(10, [1, 2, 3]);
        let b = VertexSet::from_iter(10, [3, 4]);
        assert_eq!(a.union(&b).to_sorted_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_sorted_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_sorted_vec(), vec![1, 2]);
        assert!(VertexSet::from_iter(10, [2, 3]).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(VertexSet::full(5).len(), 5);
    }

    #[test]
    fn graph_construction_errors() {
        assert_eq!(Graph::new(0).unwrap_err(), GraphError::Empty);
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange(5, 3)
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn graph_basics() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let h = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!h.is_connected());
    }

    #[test]
    fn degree_and_max_degree() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)]).unwrap();
        assert_eq!(g.degree(4), 3);
        assert_eq!(g.max_degree(), 3);
    }

    proptest::proptest! {
        #[test]
        fn set_matches_btreeset_model(ops in proptest::collection::vec((0usize..40, proptest::bool::ANY), 0..60)) {
            let mut set = VertexSet::empty(40);
            let mut model = BTreeSet::new();
            for (v, ins) in ops {
                if ins {
                    set.insert(v);
                    model.insert(v);
                } else {
                    set.remove(v);
                    model.remove(&v);
                }
                proptest::prop_assert_eq!(set.len(), model.len());
            }
            proptest::prop_assert_eq!(set.to_sorted_vec(), model.into_iter().collect::<Vec<_>>());
        }
    }
}
