//! The per-field sieve: does every tested element of 2*O_K^+ remain a sum
//! of squares?
//!
//! Stage 1 tests twice each shifted integral basis element (the cheapest
//! elements likely to fail); stage 2 exhaustively scans all totally positive
//! integers up to a trace budget. A returned counterexample `gamma` means
//! `decide_sos(2 * gamma)` proved NotRepresentable — a definitive exclusion
//! of the field. Surviving the bounded scan proves nothing beyond the bound,
//! and the outcome name says so.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::numfield::{totally_positive_with_trace_at_most, Element, NumberField};

use super::decide::{CandidatePool, Engine};
use super::{Decision, SosCertificate, SosError};

/// Which stage of [`sieve_field`] found a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SieveStage {
    /// Twice a shifted integral basis element failed.
    ShiftedBasis,
    /// The exhaustive scan of totally positive integers up to the trace
    /// budget found a failure.
    TraceScan,
}

/// Outcome of [`sieve_field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SieveOutcome {
    /// `gamma` with `2 * gamma` provably not a sum of squares.
    Counterexample { gamma: Element, stage: SieveStage },
    /// Every tested element passed; explicitly NOT a proof for all of
    /// 2*O_K^+.
    SurvivedBounded,
}

/// Runs both sieve stages on a field built with its maximal order.
pub fn sieve_field(
    field: &Arc<NumberField>,
    trace_budget: u32,
    node_budget: u64,
) -> Result<SieveOutcome, SosError> {
    // Candidate parts are shared across every decision in this field: any
    // target tested here has trace at most 2 * max(trace_budget, stage-1
    // traces), and a pool built for that bound serves all of them.
    let stage1 = stage1_targets(field);
    let mut tmax = BigInt::from(2 * trace_budget as i64);
    for gamma in &stage1 {
        let t = BigInt::from(2) * gamma.trace().to_integer();
        if t > tmax {
            tmax = t;
        }
    }
    let pool = CandidatePool::new(field, &tmax);

    for gamma in stage1 {
        if let Some(gamma) = fails(&pool, &gamma, node_budget)? {
            return Ok(SieveOutcome::Counterexample { gamma, stage: SieveStage::ShiftedBasis });
        }
    }
    for gamma in totally_positive_with_trace_at_most(field, trace_budget) {
        if let Some(gamma) = fails(&pool, &gamma, node_budget)? {
            return Ok(SieveOutcome::Counterexample { gamma, stage: SieveStage::TraceScan });
        }
    }
    Ok(SieveOutcome::SurvivedBounded)
}

/// Stage-1 elements: each integral basis vector shifted by the least
/// rational integer making it totally positive.
fn stage1_targets(field: &Arc<NumberField>) -> Vec<Element> {
    let d = field.degree();
    (0..d)
        .map(|i| {
            let mut coords = vec![BigInt::from(0); d];
            coords[i] = BigInt::from(1);
            let b = Element::from_integral_coords(field, &coords);
            let k = least_totally_positive_shift(&b);
            b.add(&Element::from_integer(field, k))
        })
        .collect()
}

/// The least k in Z with b + k totally positive. Monotone in k (adding 1
/// preserves total positivity), so an upward scan from a certified lower
/// start finds the least exactly.
fn least_totally_positive_shift(b: &Element) -> i64 {
    let field = b.field();
    let coords = b.integral_coords().expect("basis elements are integral");
    // The least feasible k satisfies k > -min_sigma sigma(b). With H any
    // certified upper bound on the smallest embedding, min_sigma <= H gives
    // least k >= floor(-H) + 1: a safe start for the exact upward scan.
    let embs = field.embed_integral_coords(&coords, 64);
    let h = embs
        .iter()
        .map(|e| e.hi.to_rational())
        .min()
        .expect("fields have at least one embedding");
    let start = (-h).floor().to_integer();
    let start = i64::try_from(&start).expect("basis embeddings fit in i64") + 1;
    let mut k = start;
    loop {
        let shifted = b.add(&Element::from_integer(field, k));
        if shifted.is_totally_positive() {
            return k;
        }
        k += 1;
        assert!(k - start < 1_000_000, "runaway shift scan");
    }
}

/// Tests one target 2*gamma against the shared pool; `Some(gamma)` when the
/// search proves it not representable.
fn fails(
    pool: &CandidatePool,
    gamma: &Element,
    node_budget: u64,
) -> Result<Option<Element>, SosError> {
    let target = gamma.add(gamma);
    Ok(match decide_with_pool(pool, &target, node_budget)? {
        Decision::Representable(_) => None,
        Decision::NotRepresentable => Some(gamma.clone()),
    })
}

/// Decision helper reusing a pool (exposed to the classification driver).
pub(super) fn decide_with_pool(
    pool: &CandidatePool,
    mu: &Element,
    node_budget: u64,
) -> Result<Decision, SosError> {
    let mut engine = Engine::with_pool(mu, pool, node_budget)?;
    let mut found: Option<SosCertificate> = None;
    engine.search(&mut |cert| {
        found = Some(cert);
        true
    })?;
    Ok(match found {
        Some(cert) => Decision::Representable(cert),
        None => Decision::NotRepresentable,
    })
}
