//! The constructive upper bound for secure total domination on mops.
//!
//! Every mop with at least 5 vertices contains one of eight induced
//! patterns on 5–7 consecutive boundary vertices ([`ConfigKind`]). The
//! construction finds a pattern, deletes the pattern's designated
//! vertices (the gaps are bridged by the pattern's chords, so the result
//! is again a mop), recurses, and extends the recursive set by a fixed
//! per-case rule. The result is a secure total dominating set of size at
//! most `floor(2n/3)` that avoids all degree-2 vertices (for `n >= 4`).
//!
//! Each reduction is recorded in a [`ConstructionTrace`] that can be
//! replayed and audited step by step.

use std::collections::HashMap;
use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{mop_upper_bound, solve, Kind, SolveOptions};
use crate::graph::{Graph, VertexSet};
use crate::mop::MopGraph;

/// The eight induced patterns on consecutive boundary vertices. Role
/// names follow a fixed order along the span: `u,v,w,x,y` for spans of
/// five and `t,u,v,w,x,y(,z)` for spans of six and seven.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 8] = [
        ConfigKind::A,
        ConfigKind::B,
        ConfigKind::C,
        ConfigKind::D,
        ConfigKind::E,
        ConfigKind::F,
        ConfigKind::G,
        ConfigKind::H,
    ];

    /// Number of consecutive boundary vertices the pattern occupies.
    pub fn span(self) -> usize {
        match self {
            ConfigKind::A | ConfigKind::B | ConfigKind::C => 5,
            ConfigKind::D | ConfigKind::E => 6,
            ConfigKind::F | ConfigKind::G | ConfigKind::H => 7,
        }
    }

    /// Patterns c, f, h are their own mirror images; the others must also
    /// be scanned in reversed orientation.
    pub fn has_mirror(self) -> bool {
        matches!(
            self,
            ConfigKind::A | ConfigKind::B | ConfigKind::D | ConfigKind::E | ConfigKind::G
        )
    }

    /// Required chords as pairs of role offsets within the span.
    fn chord_offsets(self) -> &'static [(usize, usize)] {
        match self {
            ConfigKind::A => &[(1, 3), (0, 3), (0, 4)],
            ConfigKind::B => &[(0, 2), (0, 3), (0, 4)],
            ConfigKind::C => &[(0, 2), (2, 4), (0, 4)],
            ConfigKind::D => &[(0, 3), (1, 3), (3, 5), (0, 5)],
            ConfigKind::E => &[(0, 2), (0, 3), (3, 5), (0, 5)],
            ConfigKind::F => &[(0, 3), (1, 3), (3, 5), (3, 6), (0, 6)],
            ConfigKind::G => &[(0, 3), (1, 3), (3, 6), (4, 6), (0, 6)],
            ConfigKind::H => &[(0, 2), (0, 3), (3, 6), (4, 6), (0, 6)],
        }
    }

    /// Role offsets of the vertices the reduction deletes.
    fn deletion_offsets(self) -> &'static [usize] {
        match self {
            ConfigKind::A | ConfigKind::B => &[1, 2, 3],
            ConfigKind::C => &[1, 3],
            ConfigKind::D | ConfigKind::E | ConfigKind::F => &[1, 2, 4],
            ConfigKind::G | ConfigKind::H => &[1, 2, 5],
        }
    }
}

/// A located pattern instance: the induced subgraph on `span` consecutive
/// boundary positions starting at `start` (walking backward when
/// `mirrored`) is exactly the boundary path plus `witness_chords`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub kind: ConfigKind,
    /// Cycle position of the pattern's first role vertex.
    pub start: usize,
    pub mirrored: bool,
    pub span: usize,
    /// The pattern's required chords as cycle-position pairs.
    pub witness_chords: Vec<(usize, usize)>,
}

impl Configuration {
    /// Cycle position of role offset `i`.
    pub fn role_position(&self, offset: usize, n: usize) -> usize {
        debug_assert!(offset < self.span);
        if self.mirrored {
            (self.start + n - offset) % n
        } else {
            (self.start + offset) % n
        }
    }

    /// The span's cycle positions in role order.
    pub fn span_positions(&self, n: usize) -> Vec<usize> {
        (0..self.span).map(|i| self.role_position(i, n)).collect()
    }
}

/// Which extension rule a reduction step applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseBranch {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b-1")]
    B1,
    #[serde(rename = "b-2")]
    B2,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d")]
    D,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "h-1")]
    H1,
    #[serde(rename = "h-2")]
    H2,
}

/// One reduction of the construction. Vertex lists hold labels of the
/// original input graph, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub configuration: Configuration,
    pub deleted: Vec<usize>,
    pub branch: CaseBranch,
    pub added: Vec<usize>,
    pub removed: Vec<usize>,
}

/// The full audit log of [`build_stds`]: reductions from the input graph
/// down to the base case, plus the base graph and its base set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    /// Steps ordered outermost first (the first step applies to the input).
    pub steps: Vec<TraceStep>,
    pub base_graph: MopGraph,
    /// The base-case set, as labels.
    pub base_set: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("configuration search requires n >= 5, got n = {0}")]
    GraphTooSmall(usize),
    #[error("no configuration found on a validated mop of {0} vertices")]
    NoConfigurationFound(usize),
    #[error("invariant violation at reduction depth {depth}: {detail}")]
    InternalInvariantViolation {
        depth: usize,
        detail: String,
        /// Steps completed before the violation, innermost first.
        steps: Vec<TraceStep>,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error("trace mismatch at step {step}: {detail}")]
    Mismatch { step: usize, detail: String },
}

/// Tests whether the pattern `(kind, start, mirrored)` matches `graph`
/// exactly: the induced edges on the span equal the boundary path plus the
/// pattern chords. Returns the chords as cycle-position pairs on success.
fn match_at(
    graph: &Graph,
    n: usize,
    kind: ConfigKind,
    start: usize,
    mirrored: bool,
) -> Option<Vec<(usize, usize)>> {
    let span = kind.span();
    if span > n {
        return None;
    }
    let probe = Configuration {
        kind,
        start,
        mirrored,
        span,
        witness_chords: Vec::new(),
    };
    let pos = probe.span_positions(n);
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));

    let mut expected: Vec<(usize, usize)> = Vec::with_capacity(span + 5);
    for i in 0..span - 1 {
        expected.push(norm(pos[i], pos[i + 1]));
    }
    if span == n {
        expected.push(norm(pos[span - 1], pos[0]));
    }
    let chords: Vec<(usize, usize)> = kind
        .chord_offsets()
        .iter()
        .map(|&(a, b)| norm(pos[a], pos[b]))
        .collect();
    expected.extend_from_slice(&chords);
    expected.sort_unstable();
    expected.dedup();

    let mut actual: Vec<(usize, usize)> = Vec::with_capacity(expected.len());
    for i in 0..span {
        for j in i + 1..span {
            if graph.has_edge(pos[i], pos[j]) {
                actual.push(norm(pos[i], pos[j]));
            }
        }
    }
    actual.sort_unstable();

    if actual == expected {
        let mut sorted = chords;
        sorted.sort_unstable();
        sorted.dedup();
        Some(sorted)
    } else {
        None
    }
}

/// Finds the first pattern instance in scan order: start positions
/// `0..n-1`, kinds `a..h`, forward orientation before mirrored. Existence
/// is guaranteed for every mop with `n >= 5`, so failure indicates a bug.
pub fn find_configuration(mop: &MopGraph) -> Result<Configuration, ConstructError> {
    let n = mop.n();
    if n < 5 {
        return Err(ConstructError::GraphTooSmall(n));
    }
    let graph = mop.to_graph();
    find_configuration_in(&graph, n).ok_or(ConstructError::NoConfigurationFound(n))
}

fn find_configuration_in(graph: &Graph, n: usize) -> Option<Configuration> {
    for start in 0..n {
        for kind in ConfigKind::ALL {
            for mirrored in [false, true] {
                if mirrored && !kind.has_mirror() {
                    continue;
                }
                if let Some(witness_chords) = match_at(graph, n, kind, start, mirrored) {
                    return Some(Configuration {
                        kind,
                        start,
                        mirrored,
                        span: kind.span(),
                        witness_chords,
                    });
                }
            }
        }
    }
    None
}

/// Universe size for label sets of `mop` (labels are ids of the original
/// input graph).
fn label_universe(mop: &MopGraph) -> usize {
    mop.labels().iter().copied().max().unwrap_or(0) + 1
}

/// Builds a secure total dominating set of `g` with at most
/// `floor(2n/3)` vertices and, for `n >= 4`, no vertex of degree 2. The
/// returned set lives in `g`'s label space; the trace records every
/// reduction for replay.
pub fn build_stds(g: &MopGraph) -> Result<(VertexSet, ConstructionTrace), ConstructError> {
    let mut steps = Vec::new();
    let mut base = None;
    match build_rec(g.clone(), 0, &mut steps, &mut base) {
        Ok(set) => {
            steps.reverse();
            let (base_graph, base_set) = base.expect("recursion reached a base case");
            let universe = label_universe(g);
            Ok((
                VertexSet::from_iter(universe, set),
                ConstructionTrace {
                    steps,
                    base_graph,
                    base_set,
                },
            ))
        }
        Err(RecError { depth, detail }) => Err(ConstructError::InternalInvariantViolation {
            depth,
            detail,
            steps,
        }),
    }
}

struct RecError {
    depth: usize,
    detail: String,
}

fn build_rec(
    mop: MopGraph,
    depth: usize,
    steps: &mut Vec<TraceStep>,
    base: &mut Option<(MopGraph, Vec<usize>)>,
) -> Result<HashSet<usize>, RecError> {
    let n = mop.n();
    if n <= 6 {
        let labels = base_case_set(&mop).map_err(|detail| RecError { depth, detail })?;
        let set: HashSet<usize> = labels.iter().copied().collect();
        *base = Some((mop, labels));
        return Ok(set);
    }

    let config = match find_configuration(&mop) {
        Ok(c) => c,
        Err(e) => {
            return Err(RecError {
                depth,
                detail: e.to_string(),
            })
        }
    };
    let role = |i: usize| config.role_position(i, n);
    let lab = |i: usize| mop.label(role(i));

    let deletion_positions: Vec<usize> = config
        .kind
        .deletion_offsets()
        .iter()
        .map(|&i| role(i))
        .collect();
    let mut deleted: Vec<usize> = deletion_positions.iter().map(|&p| mop.label(p)).collect();
    deleted.sort_unstable();

    let reduced = mop
        .remove_consecutive(&deletion_positions)
        .map_err(|e| RecError {
            depth,
            detail: format!("deleting {:?} for case {:?}: {e}", deleted, config.kind),
        })?;
    let mut set = build_rec(reduced, depth + 1, steps, base)?;

    // what the induction guarantees about the recursive set, checked not assumed
    let require = |cond: bool, what: &str| -> Result<(), RecError> {
        if cond {
            Ok(())
        } else {
            Err(RecError {
                depth,
                detail: format!("case {:?} at start {}: {what}", config.kind, config.start),
            })
        }
    };
    let (branch, added, removed): (CaseBranch, Vec<usize>, Vec<usize>) = match config.kind {
        ConfigKind::A => (CaseBranch::A, vec![lab(1), lab(3)], vec![]),
        ConfigKind::B => {
            if set.contains(&lab(0)) {
                (CaseBranch::B1, vec![lab(2), lab(3)], vec![])
            } else {
                (CaseBranch::B2, vec![lab(0), lab(2)], vec![])
            }
        }
        ConfigKind::C => {
            require(set.contains(&lab(0)), "u must be in the recursive set")?;
            require(set.contains(&lab(4)), "y must be in the recursive set")?;
            require(
                !set.contains(&lab(2)),
                "w must be outside the recursive set",
            )?;
            (CaseBranch::C, vec![lab(2)], vec![])
        }
        ConfigKind::D | ConfigKind::E => {
            require(set.contains(&lab(0)), "t must be in the recursive set")?;
            require(set.contains(&lab(5)), "y must be in the recursive set")?;
            require(
                !set.contains(&lab(3)),
                "w must be outside the recursive set",
            )?;
            if config.kind == ConfigKind::D {
                (CaseBranch::D, vec![lab(1), lab(3)], vec![])
            } else {
                (CaseBranch::E, vec![lab(2), lab(3)], vec![])
            }
        }
        ConfigKind::F => {
            require(set.contains(&lab(3)), "w must be in the recursive set")?;
            require(set.contains(&lab(6)), "z must be in the recursive set")?;
            require(
                !set.contains(&lab(5)),
                "y must be outside the recursive set",
            )?;
            (CaseBranch::F, vec![lab(1), lab(5)], vec![])
        }
        ConfigKind::G | ConfigKind::H => {
            require(set.contains(&lab(3)), "w must be in the recursive set")?;
            require(set.contains(&lab(6)), "z must be in the recursive set")?;
            require(
                !set.contains(&lab(4)),
                "x must be outside the recursive set",
            )?;
            match config.kind {
                ConfigKind::G => (CaseBranch::G, vec![lab(1), lab(4)], vec![]),
                _ if set.contains(&lab(0)) => (CaseBranch::H1, vec![lab(2), lab(4)], vec![]),
                _ => (CaseBranch::H2, vec![lab(0), lab(2), lab(4)], vec![lab(3)]),
            }
        }
    };

    let before = set.len();
    for &r in &removed {
        require(
            set.remove(&r),
            "removed vertex was not in the recursive set",
        )?;
    }
    for &a in &added {
        require(
            set.insert(a),
            "added vertex was already in the recursive set",
        )?;
    }
    require(
        set.len() == before + added.len() - removed.len(),
        "size accounting after extension",
    )?;
    require(
        set.len() <= mop_upper_bound(n),
        "size bound exceeded after extension",
    )?;

    let mut added = added;
    added.sort_unstable();
    let mut removed = removed;
    removed.sort_unstable();
    steps.push(TraceStep {
        configuration: config,
        deleted,
        branch,
        added,
        removed,
    });
    Ok(set)
}

/// Base-case sets for `n <= 6`, as labels. For `n = 3` any edge works; for
/// `4 <= n <= 6` a minimum secure total dominating set avoiding degree-2
/// vertices is computed once per polygon shape and cached.
fn base_case_set(mop: &MopGraph) -> Result<Vec<usize>, String> {
    let n = mop.n();
    if n == 3 {
        return Ok(vec![mop.label(0), mop.label(1)]);
    }
    type ShapeKey = (usize, Vec<(usize, usize)>);
    static CACHE: OnceLock<Mutex<HashMap<ShapeKey, Vec<usize>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, mop.diagonals().to_vec());
    if let Some(positions) = cache.lock().unwrap().get(&key) {
        return Ok(positions.iter().map(|&p| mop.label(p)).collect());
    }
    let opts = SolveOptions {
        exclude_degree_two: true,
        ..Default::default()
    };
    let result = solve(&mop.to_graph(), Kind::SecureTotal, &opts)
        .map_err(|e| format!("base case n={n} has no degree-2-free set: {e}"))?;
    if result.value > mop_upper_bound(n) {
        return Err(format!(
            "base case n={n} needs {} vertices, above floor(2n/3) = {}",
            result.value,
            mop_upper_bound(n)
        ));
    }
    let positions = result.witness.to_sorted_vec();
    let labels = positions.iter().map(|&p| mop.label(p)).collect();
    cache.lock().unwrap().insert(key, positions);
    Ok(labels)
}

/// Re-applies a trace to `g`: verifies each recorded configuration and
/// deletion against the graph, checks the terminal graph equals the
/// recorded base, and reconstructs the final set by replaying the
/// extensions from the base set upward.
pub fn replay_trace(trace: &ConstructionTrace, g: &MopGraph) -> Result<VertexSet, TraceError> {
    let mismatch = |step: usize, detail: String| TraceError::Mismatch { step, detail };
    let mut current = g.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let n = current.n();
        let c = &step.configuration;
        if c.start >= n || c.span != c.kind.span() || c.span > n {
            return Err(mismatch(
                i,
                format!("configuration {:?} out of range for n={n}", c),
            ));
        }
        let graph = current.to_graph();
        match match_at(&graph, n, c.kind, c.start, c.mirrored) {
            Some(chords) if chords == c.witness_chords => {}
            Some(_) => return Err(mismatch(i, "recorded chords do not match".into())),
            None => {
                return Err(mismatch(
                    i,
                    format!("pattern {:?} does not hold at start {}", c.kind, c.start),
                ))
            }
        }
        let positions: Vec<usize> = c
            .kind
            .deletion_offsets()
            .iter()
            .map(|&o| c.role_position(o, n))
            .collect();
        let mut labels: Vec<usize> = positions.iter().map(|&p| current.label(p)).collect();
        labels.sort_unstable();
        if labels != step.deleted {
            return Err(mismatch(
                i,
                format!(
                    "deletion labels {:?} differ from recorded {:?}",
                    labels, step.deleted
                ),
            ));
        }
        current = current
            .remove_consecutive(&positions)
            .map_err(|e| mismatch(i, e.to_string()))?;
    }
    if current != trace.base_graph {
        return Err(mismatch(
            trace.steps.len(),
            "terminal graph does not equal the recorded base graph".into(),
        ));
    }

    let mut set: HashSet<usize> = HashSet::new();
    for &v in &trace.base_set {
        if !trace.base_graph.labels().contains(&v) || !set.insert(v) {
            return Err(mismatch(
                trace.steps.len(),
                format!("invalid base set member {v}"),
            ));
        }
    }
    for (i, step) in trace.steps.iter().enumerate().rev() {
        for &r in &step.removed {
            if !set.remove(&r) {
                return Err(mismatch(
                    i,
                    format!("removed vertex {r} was not in the set"),
                ));
            }
        }
        for &a in &step.added {
            if !set.insert(a) {
                return Err(mismatch(
                    i,
                    format!("added vertex {a} was already in the set"),
                ));
            }
        }
    }
    Ok(VertexSet::from_iter(label_universe(g), set))
}
