//! Wire formats shared by the library and the command-line tool.
//!
//! Graphs travel as JSON objects: `{"n": .., "diagonals": [[i,j], ..]}`
//! for mops (positions on the boundary cycle `0,1,..,n-1,0`) and
//! `{"n": .., "edges": [[u,v], ..]}` for general graphs. Vertex sets are
//! sorted integer arrays. All ids are 0-based.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::{ConstructionTrace, TraceStep};
use crate::exact::{Kind, SolveResult};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::mop::{is_maximal_outerplanar, MopError, MopGraph, MopViolation};

#[derive(Debug, Error)]
pub enum WireError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Mop(#[from] MopError),
    #[error("not a maximal outerplanar graph: {0}")]
    NotAMop(#[from] MopViolation),
    #[error("vertex {0} out of range for n={1}")]
    SetMemberOutOfRange(usize, usize),
    #[error("duplicate vertex {0} in set")]
    DuplicateSetMember(usize),
}

/// A graph in either wire form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphJson {
    Mop {
        n: usize,
        diagonals: Vec<(usize, usize)>,
    },
    General {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphJson {
    pub fn from_mop(m: &MopGraph) -> Self {
        GraphJson::Mop {
            n: m.n(),
            diagonals: m.diagonals().to_vec(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson::General {
            n: g.n(),
            edges: g.edges(),
        }
    }

    /// The graph described, validated. Mop inputs are validated as mops
    /// and expanded to their underlying graph on cycle positions.
    pub fn to_graph(&self) -> Result<Graph, WireError> {
        match self {
            GraphJson::Mop { n, diagonals } => {
                Ok(MopGraph::from_diagonals(*n, diagonals)?.to_graph())
            }
            GraphJson::General { n, edges } => Ok(Graph::from_edges(*n, edges)?),
        }
    }

    /// The graph as a validated mop; general inputs go through recognition.
    pub fn to_mop(&self) -> Result<MopGraph, WireError> {
        match self {
            GraphJson::Mop { n, diagonals } => Ok(MopGraph::from_diagonals(*n, diagonals)?),
            GraphJson::General { n, edges } => {
                let g = Graph::from_edges(*n, edges)?;
                Ok(is_maximal_outerplanar(&g)?)
            }
        }
    }
}

/// Builds a vertex set from a wire id list, rejecting out-of-range ids and
/// duplicates.
pub fn set_from_ids(ids: &[usize], n: usize) -> Result<VertexSet, WireError> {
    let mut s = VertexSet::empty(n);
    for &v in ids {
        if v >= n {
            return Err(WireError::SetMemberOutOfRange(v, n));
        }
        if s.contains(v) {
            return Err(WireError::DuplicateSetMember(v));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Output of the `solve` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveJson {
    pub kind: String,
    pub value: usize,
    pub witness: Vec<usize>,
    pub explored: u64,
}

impl SolveJson {
    pub fn new(kind: Kind, result: &SolveResult) -> Self {
        SolveJson {
            kind: kind.as_str().to_string(),
            value: result.value,
            witness: result.witness.to_sorted_vec(),
            explored: result.explored,
        }
    }
}

/// Output of the `construct` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructJson {
    pub n: usize,
    pub stds: Vec<usize>,
    pub size: usize,
    pub bound: usize,
    pub trace: Vec<TraceStep>,
}

impl ConstructJson {
    pub fn new(n: usize, stds: &VertexSet, trace: &ConstructionTrace) -> Self {
        ConstructJson {
            n,
            stds: stds.to_sorted_vec(),
            size: stds.len(),
            bound: crate::exact::mop_upper_bound(n),
            trace: trace.steps.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_graph_forms() {
        let mop: GraphJson =
            serde_json::from_str(r#"{"n": 6, "diagonals": [[0,2],[0,3],[3,5]]}"#).unwrap();
        assert!(matches!(mop, GraphJson::Mop { n: 6, .. }));
        assert_eq!(mop.to_graph().unwrap().edge_count(), 9);

        let gen: GraphJson =
            serde_json::from_str(r#"{"n": 3, "edges": [[0,1],[1,2],[0,2]]}"#).unwrap();
        assert!(matches!(gen, GraphJson::General { n: 3, .. }));
        assert_eq!(gen.to_mop().unwrap().n(), 3);
    }

    #[test]
    fn invalid_mop_json_is_rejected() {
        let bad: GraphJson =
            serde_json::from_str(r#"{"n": 6, "diagonals": [[0,2],[1,3],[0,3]]}"#).unwrap();
        assert!(bad.to_graph().is_err());
        let not_mop: GraphJson =
            serde_json::from_str(r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#).unwrap();
        assert!(not_mop.to_mop().is_err());
    }

    #[test]
    fn set_parsing() {
        assert_eq!(
            set_from_ids(&[2, 0], 3).unwrap().to_sorted_vec(),
            vec![0, 2]
        );
        assert!(matches!(
            set_from_ids(&[3], 3),
            Err(WireError::SetMemberOutOfRange(3, 3))
        ));
        assert!(matches!(
            set_from_ids(&[1, 1], 3),
            Err(WireError::DuplicateSetMember(1))
        ));
    }

    #[test]
    fn mop_json_round_trip() {
        let m = MopGraph::from_diagonals(7, &[(0, 2), (0, 3), (3, 5), (3, 6)]).unwrap();
        let j = serde_json::to_string(&GraphJson::from_mop(&m)).unwrap();
        let back: GraphJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_mop().unwrap(), m);
    }

    proptest::proptest! {
        /// Both wire forms of a mop describe the same graph, and the
        /// general form survives recognition back to the original.
        #[test]
        fn wire_forms_agree(n in 3usize..30, seed in proptest::num::u64::ANY) {
            let m = crate::families::random_mop(n, seed);
            let via_mop = GraphJson::from_mop(&m);
            let via_edges = GraphJson::from_graph(&m.to_graph());
            let text = serde_json::to_string(&via_edges).unwrap();
            let parsed: GraphJson = serde_json::from_str(&text).unwrap();
            proptest::prop_assert_eq!(parsed.to_mop().unwrap(), m.clone());
            proptest::prop_assert_eq!(via_mop.to_graph().unwrap().edges(), m.to_graph().edges());
        }
    }
}
