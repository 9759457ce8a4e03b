//! Bound-checking harness over enumerated and random mops.
//!
//! For each instance the harness runs the constructive algorithm, checks
//! the result with the classifier, optionally computes the exact secure
//! total domination number, and records the sandwich
//! `ceil((n+2)/3) <= gamma_st <= floor(2n/3)` as one [`SweepRow`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::build_stds;
use crate::domination::classify;
use crate::exact::{mop_upper_bound, outerplanar_lower_bound, solve, Kind, SolveOptions};
use crate::families::{for_each_mop, random_mop_with_rng, FamilyError, MOP_ENUMERATION_CAP};
use crate::graph::VertexSet;
use crate::mop::MopGraph;

/// Exact values are only computed for graphs up to this order.
pub const SWEEP_EXACT_CAP: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SweepError {
    #[error("sweep range must satisfy 3 <= n_min <= n_max, got {n_min}..{n_max}")]
    InvalidRange { n_min: usize, n_max: usize },
    #[error(transparent)]
    Enumeration(#[from] FamilyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: SweepMode,
    /// Number of samples in random mode.
    pub samples: usize,
    pub seed: u64,
    /// Solve for exact values on graphs with `n` up to this (clamped to
    /// [`SWEEP_EXACT_CAP`]).
    pub exact_cap: usize,
}

impl SweepConfig {
    pub fn exhaustive(n_min: usize, n_max: usize) -> Self {
        SweepConfig {
            n_min,
            n_max,
            mode: SweepMode::Exhaustive,
            samples: 0,
            seed: 0,
            exact_cap: SWEEP_EXACT_CAP,
        }
    }

    pub fn random(n_min: usize, n_max: usize, samples: usize, seed: u64) -> Self {
        SweepConfig {
            n_min,
            n_max,
            mode: SweepMode::Random,
            samples,
            seed,
            exact_cap: SWEEP_EXACT_CAP,
        }
    }
}

/// One graph's verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    /// Enumeration index (exhaustive) or sample index (random).
    pub graph_id: u64,
    pub gamma_st_exact: Option<usize>,
    pub constructed_size: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub mode: SweepMode,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs: u64,
    pub violations: u64,
    /// Slack of `(gamma_st or constructed) - lower_bound` across rows.
    pub lower_slack_min: Option<i64>,
    pub lower_slack_max: Option<i64>,
    /// Slack of `upper_bound - constructed` across rows.
    pub upper_slack_min: Option<i64>,
    pub upper_slack_max: Option<i64>,
    /// Rows with an exact value.
    pub exact_rows: u64,
    /// Sharpness census: exact rows where `gamma_st` meets each bound.
    pub sharp_at_lower: u64,
    pub sharp_at_upper: u64,
    pub seed: Option<u64>,
    pub exact_cap: usize,
}

/// Runs the constructive algorithm and (for `n <= exact_cap`) the exact
/// solver on one mop, verifying every produced set with the classifier.
pub fn sweep_row(n: usize, graph_id: u64, mop: &MopGraph, exact_cap: usize) -> SweepRow {
    let lower_bound = outerplanar_lower_bound(n);
    let upper_bound = mop_upper_bound(n);
    let graph = mop.to_graph();

    let mut checks_ok = true;
    let constructed_size = match build_stds(mop) {
        Ok((set, _)) => {
            let mut positions = VertexSet::empty(n);
            for (p, &l) in mop.labels().iter().enumerate() {
                if set.contains(l) {
                    positions.insert(p);
                }
            }
            if !classify(&positions, &graph).secure_total {
                checks_ok = false;
            }
            positions.len()
        }
        Err(_) => {
            checks_ok = false;
            0
        }
    };

    let gamma_st_exact = if n <= exact_cap.min(SWEEP_EXACT_CAP) {
        match solve(
            &graph,
            Kind::SecureTotal,
            &SolveOptions {
                cap: SWEEP_EXACT_CAP,
                ..Default::default()
            },
        ) {
            Ok(result) => {
                if !classify(&result.witness, &graph).secure_total {
                    checks_ok = false;
                }
                if checks_ok && result.value > constructed_size {
                    checks_ok = false;
                }
                Some(result.value)
            }
            Err(_) => {
                checks_ok = false;
                None
            }
        }
    } else {
        None
    };

    let lb_value = gamma_st_exact.unwrap_or(constructed_size);
    let ok = checks_ok && lower_bound <= lb_value && constructed_size <= upper_bound;
    SweepRow {
        n,
        graph_id,
        gamma_st_exact,
        constructed_size,
        lower_bound,
        upper_bound,
        ok,
    }
}

/// Runs a sweep and summarizes it. Rows come back sorted by
/// `(n, graph_id)` regardless of generation order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<(Vec<SweepRow>, SweepSummary), SweepError> {
    if cfg.n_min < 3 || cfg.n_min > cfg.n_max {
        return Err(SweepError::InvalidRange {
            n_min: cfg.n_min,
            n_max: cfg.n_max,
        });
    }
    let mut rows = Vec::new();
    match cfg.mode {
        SweepMode::Exhaustive => {
            if cfg.n_max > MOP_ENUMERATION_CAP {
                return Err(SweepError::Enumeration(FamilyError::SizeCapExceeded {
                    n: cfg.n_max,
                    cap: MOP_ENUMERATION_CAP,
                }));
            }
            for n in cfg.n_min..=cfg.n_max {
                let mut id = 0u64;
                for_each_mop(n, |m| {
                    rows.push(sweep_row(n, id, &m, cfg.exact_cap));
                    id += 1;
                })?;
            }
        }
        SweepMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for i in 0..cfg.samples {
                let n = rng.random_range(cfg.n_min..=cfg.n_max);
                let m = random_mop_with_rng(n, &mut rng);
                rows.push(sweep_row(n, i as u64, &m, cfg.exact_cap));
            }
        }
    }
    rows.sort_by_key(|r| (r.n, r.graph_id));
    let summary = summarize(cfg, &rows);
    Ok((rows, summary))
}

fn summarize(cfg: &SweepConfig, rows: &[SweepRow]) -> SweepSummary {
    let mut summary = SweepSummary {
        mode: cfg.mode,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        graphs: rows.len() as u64,
        violations: 0,
        lower_slack_min: None,
        lower_slack_max: None,
        upper_slack_min: None,
        upper_slack_max: None,
        exact_rows: 0,
        sharp_at_lower: 0,
        sharp_at_upper: 0,
        seed: match cfg.mode {
            SweepMode::Random => Some(cfg.seed),
            SweepMode::Exhaustive => None,
        },
        exact_cap: cfg.exact_cap.min(SWEEP_EXACT_CAP),
    };
    let fold = |slot_min: &mut Option<i64>, slot_max: &mut Option<i64>, v: i64| {
        *slot_min = Some(slot_min.map_or(v, |m| m.min(v)));
        *slot_max = Some(slot_max.map_or(v, |m| m.max(v)));
    };
    for row in rows {
        if !row.ok {
            summary.violations += 1;
        }
        let lb_value = row.gamma_st_exact.unwrap_or(row.constructed_size) as i64;
        let lower_slack = lb_value - row.lower_bound as i64;
        let upper_slack = row.upper_bound as i64 - row.constructed_size as i64;
        fold(
            &mut summary.lower_slack_min,
            &mut summary.lower_slack_max,
            lower_slack,
        );
        fold(
            &mut summary.upper_slack_min,
            &mut summary.upper_slack_max,
            upper_slack,
        );
        if let Some(exact) = row.gamma_st_exact {
            summary.exact_rows += 1;
            if exact == row.lower_bound {
                summary.sharp_at_lower += 1;
            }
            if exact == row.upper_bound {
                summary.sharp_at_upper += 1;
            }
        }
    }
    summary
}
