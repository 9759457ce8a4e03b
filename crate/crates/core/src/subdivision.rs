//! Outerplanarity via forbidden subdivisions.
//!
//! A graph is outerplanar iff it contains no subgraph that is a subdivision
//! of `K4` or `K2,3`. This module searches for such a subdivision directly:
//! pick the branch vertices, then try to route the required internally
//! disjoint paths by backtracking. The search is exponential and is capped
//! at [`SUBDIVISION_VERTEX_CAP`] vertices; above the cap it refuses rather
//! than approximate.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest admissible vertex count for the subdivision search.
pub const SUBDIVISION_VERTEX_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("subdivision search supports n <= {cap}, got n = {n}")]
    SizeLimitExceeded { n: usize, cap: usize },
}

/// `true` iff `g` contains no subdivision of `K4` or `K2,3`, i.e. iff `g`
/// is outerplanar. Intended for small graphs only.
pub fn is_outerplanar_by_subdivision(g: &Graph) -> Result<bool, SubdivisionError> {
    let n = g.n();
    if n > SUBDIVISION_VERTEX_CAP {
        return Err(SubdivisionError::SizeLimitExceeded {
            n,
            cap: SUBDIVISION_VERTEX_CAP,
        });
    }
    Ok(!has_k4_subdivision(g) && !has_k23_subdivision(g))
}

/// A demand is a pair of branch vertices to join by a path. `min_len` is
/// the least number of edges the path may have (2 forbids using a direct
/// edge, as required for the subdivided degree-2 vertices of `K2,3`).
struct Demand {
    from: usize,
    to: usize,
    min_len: usize,
}

/// Tries to satisfy all demands with paths whose internal vertices are
/// pairwise disjoint and avoid `blocked` (the branch vertices).
fn route(g: &Graph, demands: &[Demand], blocked: &VertexSet, used: &mut VertexSet) -> bool {
    let Some(demand) = demands.first() else {
        return true;
    };
    let rest = &demands[1..];
    extend_path(
        g,
        demand.from,
        demand.to,
        demand.min_len,
        1,
        rest,
        blocked,
        used,
    )
}

/// Grows a path from `cur` toward `goal`, then recurses into the remaining
/// demands. `len` counts edges used so far on this path.
#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    cur: usize,
    goal: usize,
    min_len: usize,
    len: usize,
    rest: &[Demand],
    blocked: &VertexSet,
    used: &mut VertexSet,
) -> bool {
    if g.has_edge(cur, goal) && len >= min_len && route(g, rest, blocked, used) {
        return true;
    }
    for next in g.neighbors(cur).iter() {
        if next == goal || blocked.contains(next) || used.contains(next) {
            continue;
        }
        used.insert(next);
        if extend_path(g, next, goal, min_len, len + 1, rest, blocked, used) {
            return true;
        }
        used.remove(next);
    }
    false
}

fn has_k4_subdivision(g: &Graph) -> bool {
    let n = g.n();
    let mut branch = [0usize; 4];
    for a in 0..n {
        branch[0] = a;
        for b in a + 1..n {
            branch[1] = b;
            for c in b + 1..n {
                branch[2] = c;
                for d in c + 1..n {
                    branch[3] = d;
                    if branch.iter().any(|&v| g.degree(v) < 3) {
                        continue;
                    }
                    let blocked = VertexSet::from_iter(n, branch);
                    let demands: Vec<Demand> = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
                        .into_iter()
                        .map(|(from, to)| Demand {
                            from,
                            to,
                            min_len: 1,
                        })
                        .collect();
                    let mut used = VertexSet::empty(n);
                    if route(g, &demands, &blocked, &mut used) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn has_k23_subdivision(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.degree(a) < 3 || g.degree(b) < 3 {
                continue;
            }
            // three internally disjoint a-b paths, each with at least one
            // internal vertex (the subdivided side of K2,3)
            let blocked = VertexSet::from_iter(n, [a, b]);
            let demands: Vec<Demand> = (0..3)
                .map(|_| Demand {
                    from: a,
                    to: b,
                    min_len: 2,
                })
                .collect();
            let mut used = VertexSet::empty(n);
            if route(g, &demands, &blocked, &mut used) {
                return true;
            }
        }
    }
    false
}
