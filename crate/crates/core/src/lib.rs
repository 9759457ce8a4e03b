//! Domination algorithms for maximal outerplanar graphs (mops).
//!
//! A mop is a triangulation of a convex polygon: a Hamiltonian boundary
//! cycle plus a maximal set of pairwise non-crossing chords. For every mop
//! of order `n` the secure total domination number satisfies
//! `ceil((n+2)/3) <= gamma_st <= floor(2n/3)`, and both bounds are tight.
//! This crate provides:
//!
//! * [`mop`] — construction, validation, and vertex-deletion surgery for
//!   mops, plus an outerplanarity check by K4/K2,3-subdivision search.
//! * [`domination`] — the domination / total / 2-domination / secure total
//!   domination predicates and the private-neighborhood defense test.
//! * [`exact`] — exact minimum-set solvers for all four domination numbers
//!   on small graphs, with witness sets.
//! * [`constructive`] — the inductive construction that emits a secure
//!   total dominating set of size at most `floor(2n/3)` avoiding degree-2
//!   vertices, together with a replayable reduction trace.
//! * [`families`] — the tight families `H_k` (upper bound) and `G_k`
//!   (fans, lower bound), exhaustive triangulation enumeration, and
//!   uniform random mop sampling.
//! * [`sweep`] — the bound-checking harness driving everything above over
//!   enumerated and random instances.
//! * [`json`] — the wire formats used by the command-line tool.

#![forbid(unsafe_code)]

pub mod constructive;
pub mod domination;
pub mod exact;
pub mod families;
pub mod graph;
pub mod json;
pub mod mop;
pub mod subdivision;
pub mod sweep;

pub use constructive::{
    build_stds, find_configuration, replay_trace, CaseBranch, ConfigKind, Configuration,
    ConstructError, ConstructionTrace, TraceError, TraceStep,
};
pub use domination::{classify, epn, ipn, totally_defends, DominationClass, DominationError};
pub use exact::{all_minimum_sets, solve, Kind, SolveError, SolveOptions, SolveResult};
pub use families::{enumerate_mops, for_each_mop, make_g_k, make_h_k, random_mop, FamilyError};
pub use graph::{Graph, GraphError, VertexSet};
pub use mop::{is_maximal_outerplanar, MopError, MopGraph, MopViolation};
pub use subdivision::{is_outerplanar_by_subdivision, SubdivisionError, SUBDIVISION_VERTEX_CAP};
pub use sweep::{run_sweep, sweep_row, SweepConfig, SweepError, SweepMode, SweepRow, SweepSummary};
