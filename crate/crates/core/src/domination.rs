//! Domination predicates and the private-neighborhood defense test.
//!
//! A set `S` is dominating if every vertex outside `S` has a neighbor in
//! `S`; total dominating if *every* vertex has a neighbor in `S`;
//! 2-dominating if every vertex outside `S` has at least two neighbors in
//! `S`. `S` is secure total dominating if it is total dominating and every
//! `u` outside `S` has a neighbor `v` in `S` such that swapping `v` for `u`
//! leaves a total dominating set (`v` totally `S`-defends `u`).
//!
//! The swap condition has a local characterization in terms of private
//! neighborhoods: `v` totally `S`-defends `u` iff
//! `{v} ∪ epn(v,S) ∪ ipn(v,S) ⊆ N(u)`. Requiring `epn(v,S) ⊆ N(u)` rather
//! than `epn(v,S) = ∅` matters: with the stronger (empty) form the test is
//! sufficient but not necessary, and would disagree with the swap
//! definition on sets that are total but not secure. For a secure total
//! dominating set the two forms coincide, because a vertex with a unique
//! neighbor `v` in `S` has no possible defender other than `v` and `v`
//! cannot defend it, so every member of an STDS has an empty external
//! private neighborhood. That same fact makes every STDS 2-dominating.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("vertex {0} is not a member of the set")]
    VertexNotInSet(usize),
    #[error("vertex {0} is a member of the set")]
    VertexInSet(usize),
    #[error("the set is not total dominating")]
    NotTotalDominating,
}

/// External private neighborhood: vertices outside `s` whose only neighbor
/// in `s` is `v`.
pub fn epn(v: usize, s: &VertexSet, g: &Graph) -> Result<VertexSet, DominationError> {
    if !s.contains(v) {
        return Err(DominationError::VertexNotInSet(v));
    }
    let mut out = VertexSet::empty(g.n());
    for w in g.neighbors(v).iter() {
        if !s.contains(w) && g.neighbors(w).intersection_len(s) == 1 {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Internal private neighborhood: members of `s` whose only neighbor in
/// `s` is `v`.
pub fn ipn(v: usize, s: &VertexSet, g: &Graph) -> Result<VertexSet, DominationError> {
    if !s.contains(v) {
        return Err(DominationError::VertexNotInSet(v));
    }
    let mut out = VertexSet::empty(g.n());
    for u in g.neighbors(v).iter() {
        if s.contains(u) && g.neighbors(u).intersection_len(s) == 1 {
            out.insert(u);
        }
    }
    Ok(out)
}

pub fn is_dominating(s: &VertexSet, g: &Graph) -> bool {
    (0..g.n()).all(|u| s.contains(u) || g.neighbors(u).intersection_len(s) >= 1)
}

pub fn is_total_dominating(s: &VertexSet, g: &Graph) -> bool {
    (0..g.n()).all(|u| g.neighbors(u).intersection_len(s) >= 1)
}

pub fn is_two_dominating(s: &VertexSet, g: &Graph) -> bool {
    (0..g.n()).all(|u| s.contains(u) || g.neighbors(u).intersection_len(s) >= 2)
}

/// Whether `v ∈ s` totally `s`-defends `u ∉ s`: `uv` is an edge and
/// `(s \ {v}) ∪ {u}` is again a total dominating set. Evaluated through the
/// private-neighborhood characterization.
pub fn totally_defends(
    v: usize,
    u: usize,
    s: &VertexSet,
    g: &Graph,
) -> Result<bool, DominationError> {
    if !s.contains(v) {
        return Err(DominationError::VertexNotInSet(v));
    }
    if s.contains(u) {
        return Err(DominationError::VertexInSet(u));
    }
    if !is_total_dominating(s, g) {
        return Err(DominationError::NotTotalDominating);
    }
    Ok(defends_unchecked(v, u, s, g))
}

/// The characterization without precondition checks; `s` must be total
/// dominating, `v ∈ s`, `u ∉ s`.
pub(crate) fn defends_unchecked(v: usize, u: usize, s: &VertexSet, g: &Graph) -> bool {
    let nu = g.neighbors(u);
    if !nu.contains(v) {
        return false;
    }
    for w in g.neighbors(v).iter() {
        // private neighbors of v (in or out of s) must all see u
        if !nu.contains(w) && w != u && g.neighbors(w).intersection_len(s) == 1 {
            return false;
        }
    }
    // u itself must not privately depend on v
    g.neighbors(u).intersection_len(s) >= 2
}

/// Why a set failed the secure-total check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// The vertex has no neighbor in the set.
    NotTotallyDominated,
    /// The vertex is outside the set and no member defends it.
    NoDefender,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub vertex: usize,
    pub reason: FailureReason,
}

/// The verdict of [`classify`]: which domination predicates hold, plus a
/// defender map when the set is secure total dominating and a witness of
/// the first failure otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationClass {
    pub dominating: bool,
    pub total_dominating: bool,
    pub two_dominating: bool,
    pub secure_total: bool,
    /// For each vertex outside the set, its least-id defender.
    pub defender_map: BTreeMap<usize, usize>,
    pub failure_witness: Option<FailureWitness>,
}

/// Evaluates all four domination predicates for `s` in `g`. The defender
/// map picks the lowest-id defender for each outside vertex, so the output
/// is deterministic.
pub fn classify(s: &VertexSet, g: &Graph) -> DominationClass {
    let dominating = is_dominating(s, g);
    let total_dominating = is_total_dominating(s, g);
    let two_dominating = is_two_dominating(s, g);

    let mut defender_map = BTreeMap::new();
    let mut failure_witness = None;
    let mut secure_total = total_dominating;

    if !total_dominating {
        let vertex = (0..g.n())
            .find(|&u| g.neighbors(u).intersection_len(s) == 0)
            .expect("some vertex is undominated");
        failure_witness = Some(FailureWitness {
            vertex,
            reason: FailureReason::NotTotallyDominated,
        });
    } else {
        for u in 0..g.n() {
            if s.contains(u) {
                continue;
            }
            let defender = g
                .neighbors(u)
                .intersection(s)
                .iter()
                .find(|&v| defends_unchecked(v, u, s, g));
            match defender {
                Some(v) => {
                    defender_map.insert(u, v);
                }
                None => {
                    secure_total = false;
                    failure_witness = Some(FailureWitness {
                        vertex: u,
                        reason: FailureReason::NoDefender,
                    });
                    defender_map.clear();
                    break;
                }
            }
        }
    }

    DominationClass {
        dominating,
        total_dominating,
        two_dominating,
        secure_total,
        defender_map,
        failure_witness,
    }
}
