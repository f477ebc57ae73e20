//! The complete sum-of-squares decision procedure and the exhaustive
//! decomposition enumeration.
//!
//! Shape of the search: a target `mu` of trace `T` can only use parts `x`
//! with `Tr(x^2) <= T`, a finite set enumerated completely up to sign by
//! [`sign_classes_with_square_trace_at_most`]. The depth-first search picks
//! parts in non-increasing canonical order (so each multiset of parts is
//! visited exactly once), subtracts the square, requires the remainder to be
//! totally positive or zero, and recurses. Solution-free remainders are
//! memoized together with the candidate index from which they were proven
//! barren, which is sound because a larger start index searches a subset of
//! the multisets.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numfield::{sign_classes_with_square_trace_at_most, Element, NumberField};

use super::{part_key, Decision, PartKey, SosCertificate, SosError};

/// Default depth-first-search node budget; one node is one candidate
/// extension attempt.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Complete decision: a verified certificate, or a proof by exhaustion that
/// none exists. `Err(Indeterminate)` reports a budget abort, never a verdict.
pub fn decide_sos(mu: &Element) -> Result<Decision, SosError> {
    decide_sos_with_budget(mu, DEFAULT_NODE_BUDGET)
}

/// [`decide_sos`] with an explicit node budget.
pub fn decide_sos_with_budget(mu: &Element, budget: u64) -> Result<Decision, SosError> {
    let mut engine = Engine::for_target(mu, budget)?;
    let mut first = None;
    engine.search(&mut |cert| {
        first = Some(cert);
        true
    })?;
    Ok(match first {
        Some(cert) => Decision::Representable(cert),
        None => Decision::NotRepresentable,
    })
}

/// Every decomposition of `mu` into nonzero squares, each exactly once as a
/// multiset, in the deterministic order the search discovers them.
pub fn all_sos_decompositions(mu: &Element) -> Result<Vec<SosCertificate>, SosError> {
    all_sos_decompositions_with_budget(mu, DEFAULT_NODE_BUDGET)
}

/// [`all_sos_decompositions`] with an explicit node budget.
pub fn all_sos_decompositions_with_budget(
    mu: &Element,
    budget: u64,
) -> Result<Vec<SosCertificate>, SosError> {
    let mut engine = Engine::for_target(mu, budget)?;
    let mut found = Vec::new();
    engine.search(&mut |cert| {
        found.push(cert);
        false
    })?;
    Ok(found)
}

/// A candidate part with its square's data precomputed.
struct Cand {
    x: Element,
    sq: Vec<BigInt>,
    key: PartKey,
}

/// Candidate parts for targets of trace at most `tmax` in `field`, in
/// non-increasing canonical order. Shareable across many targets (the sieve
/// builds this once per field).
pub(super) struct CandidatePool {
    field: Arc<NumberField>,
    cands: Vec<Cand>,
}

impl CandidatePool {
    pub(super) fn new(field: &Arc<NumberField>, tmax: &BigInt) -> Self {
        let mut cands: Vec<Cand> = sign_classes_with_square_trace_at_most(field, tmax)
            .into_iter()
            .map(|x| {
                let key = part_key(&x);
                let c = x.integral_coords().expect("enumerated parts are integral");
                let sq = field.mul_integral_coords(&c, &c);
                Cand { x, sq, key }
            })
            .collect();
        cands.sort_by(|a, b| b.key.cmp(&a.key));
        CandidatePool { field: field.clone(), cands }
    }
}

pub(super) struct Engine<'p> {
    pool: PoolRef<'p>,
    target: Element,
    coords: Vec<BigInt>,
    budget: u64,
    nodes: u64,
    /// Remainder coordinates -> smallest start index proven to admit no
    /// completion. A later visit with an equal or larger start index is
    /// barren without searching.
    dead: HashMap<Vec<BigInt>, usize>,
}

enum PoolRef<'p> {
    Owned(CandidatePool),
    Shared(&'p CandidatePool),
}

impl PoolRef<'_> {
    fn get(&self) -> &CandidatePool {
        match self {
            PoolRef::Owned(p) => p,
            PoolRef::Shared(p) => p,
        }
    }
}

/// What a fully explored subtree reported.
struct Explored {
    any_found: bool,
    stop: bool,
}

impl<'p> Engine<'p> {
    fn for_target(mu: &Element, budget: u64) -> Result<Engine<'static>, SosError> {
        let coords = mu.integral_coords().ok_or(SosError::NotIntegral)?;
        if !mu.is_zero() && !mu.is_totally_positive() {
            return Err(SosError::NotTotallyPositive);
        }
        let field = mu.field();
        let trace = field.trace_integral_coords(&coords);
        Ok(Engine {
            pool: PoolRef::Owned(CandidatePool::new(field, &trace)),
            target: mu.clone(),
            coords,
            budget,
            nodes: 0,
            dead: HashMap::new(),
        })
    }

    pub(super) fn with_pool(
        mu: &Element,
        pool: &'p CandidatePool,
        budget: u64,
    ) -> Result<Engine<'p>, SosError> {
        let coords = mu.integral_coords().ok_or(SosError::NotIntegral)?;
        if !mu.is_zero() && !mu.is_totally_positive() {
            return Err(SosError::NotTotallyPositive);
        }
        debug_assert!(
            crate::numfield::same_field(mu.field(), &pool.field),
            "candidate pool belongs to a different field"
        );
        Ok(Engine {
            pool: PoolRef::Shared(pool),
            target: mu.clone(),
            coords,
            budget,
            nodes: 0,
            dead: HashMap::new(),
        })
    }

    /// Runs the search; `emit` receives each certificate and returns `true`
    /// to stop early.
    pub(super) fn search(
        &mut self,
        emit: &mut impl FnMut(SosCertificate) -> bool,
    ) -> Result<(), SosError> {
        if self.coords.iter().all(|c| c.is_zero()) {
            let cert = SosCertificate::new(self.target.clone(), Vec::new())
                .expect("empty certificate for zero target");
            emit(cert);
            return Ok(());
        }
        let coords = self.coords.clone();
        let mut stack = Vec::new();
        self.dfs(coords, 0, &mut stack, emit)?;
        Ok(())
    }

    /// Explores remainders reachable from `rem` (totally positive, nonzero)
    /// using candidates with index at least `start`.
    fn dfs(
        &mut self,
        rem: Vec<BigInt>,
        start: usize,
        stack: &mut Vec<usize>,
        emit: &mut impl FnMut(SosCertificate) -> bool,
    ) -> Result<Explored, SosError> {
        if let Some(&known) = self.dead.get(&rem) {
            if known <= start {
                return Ok(Explored { any_found: false, stop: false });
            }
        }
        let field = self.pool.get().field.clone();
        let rem_trace = field.trace_integral_coords(&rem);
        // Candidates are sorted by square trace descending; skip all whose
        // square exceeds the remaining trace. The predicate is monotone, so
        // partition_point finds the first usable index.
        let (from, n) = {
            let cands = &self.pool.get().cands;
            (cands.partition_point(|c| c.key.0 > rem_trace).max(start), cands.len())
        };
        let mut any_found = false;
        for j in from..n {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(SosError::Indeterminate { nodes: self.budget });
            }
            let diff: Vec<BigInt> = {
                let sq = &self.pool.get().cands[j].sq;
                rem.iter().zip(sq).map(|(a, b)| a - b).collect()
            };
            if diff.iter().all(|c| c.is_zero()) {
                stack.push(j);
                let cert = self.certificate(stack);
                stack.pop();
                any_found = true;
                if emit(cert) {
                    return Ok(Explored { any_found, stop: true });
                }
                continue;
            }
            if !field.is_totally_positive_integral(&diff) {
                continue;
            }
            stack.push(j);
            let sub = self.dfs(diff, j, stack, emit)?;
            stack.pop();
            any_found |= sub.any_found;
            if sub.stop {
                return Ok(Explored { any_found, stop: true });
            }
        }
        if !any_found {
            // The subtree was fully explored and holds no solution from this
            // start index; remember the smallest such index.
            let entry = self.dead.entry(rem).or_insert(start);
            if start < *entry {
                *entry = start;
            }
        }
        Ok(Explored { any_found, stop: false })
    }

    fn certificate(&self, stack: &[usize]) -> SosCertificate {
        let pool = self.pool.get();
        let parts: Vec<Element> = stack.iter().map(|&j| pool.cands[j].x.clone()).collect();
        SosCertificate::new(self.target.clone(), parts)
            .expect("search-produced certificates verify")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::exact::IntPolynomial;
    use crate::numfield::NumberField;

    fn rational_field() -> Arc<NumberField> {
        NumberField::new_maximal(IntPolynomial::from_i64(&[0, 1])).unwrap()
    }

    fn quad(d: i64) -> Arc<NumberField> {
        NumberField::new_maximal(IntPolynomial::from_i64(&[-d, 0, 1])).unwrap()
    }

    fn elem(field: &Arc<NumberField>, coords: &[i64]) -> Element {
        let d = field.degree();
        let mut full: Vec<BigRational> =
            coords.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        full.resize(d, BigRational::zero());
        Element::from_power_coords(field, full)
    }

    #[test]
    fn two_in_the_rationals_is_one_plus_one() {
        let q = rational_field();
        let two = elem(&q, &[2]);
        match decide_sos(&two).unwrap() {
            Decision::Representable(cert) => {
                assert_eq!(cert.num_parts(), 2);
                assert!(cert.parts().iter().all(|p| *p == elem(&q, &[1])));
            }
            Decision::NotRepresentable => panic!("2 = 1 + 1"),
        }
    }

    #[test]
    fn golden_ratio_square_representation() {
        // 3 + sqrt(5) = phi^2 + phi^2 with phi = (1 + sqrt(5)) / 2.
        let k = quad(5);
        let mu = elem(&k, &[3, 1]);
        let phi = Element::from_power_coords(
            &k,
            vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into())],
        );
        match decide_sos(&mu).unwrap() {
            Decision::Representable(cert) => {
                assert_eq!(cert.parts(), &[phi.clone(), phi]);
            }
            Decision::NotRepresentable => panic!("3 + sqrt(5) = 2 phi^2"),
        }
    }

    #[test]
    fn zero_is_the_empty_sum() {
        let q = rational_field();
        match decide_sos(&Element::zero(&q)).unwrap() {
            Decision::Representable(cert) => assert_eq!(cert.num_parts(), 0),
            Decision::NotRepresentable => panic!("0 is the empty sum of squares"),
        }
    }

    #[test]
    fn rejects_non_integral_and_negative_targets() {
        let q = rational_field();
        let half = Element::from_power_coords(&q, vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(decide_sos(&half), Err(SosError::NotIntegral));
        let neg = elem(&q, &[-3]);
        assert_eq!(decide_sos(&neg), Err(SosError::NotTotallyPositive));
        let k = quad(2);
        // sqrt(2) is integral but not totally positive (one embedding < 0).
        let root = elem(&k, &[0, 1]);
        assert_eq!(decide_sos(&root), Err(SosError::NotTotallyPositive));
    }

    #[test]
    fn all_decompositions_of_one_and_of_four_minus_two_root_two() {
        let q = rational_field();
        let all_one = all_sos_decompositions(&elem(&q, &[1])).unwrap();
        assert_eq!(all_one.len(), 1);
        assert_eq!(all_one[0].parts(), &[elem(&q, &[1])]);

        // 4 - 2 sqrt(2) decomposes exactly as 1^2 + (sqrt(2) - 1)^2.
        let k = quad(2);
        let mu = elem(&k, &[4, -2]);
        let all = all_sos_decompositions(&mu).unwrap();
        assert_eq!(all.len(), 1);
        let parts = all[0].parts();
        assert_eq!(parts.len(), 2);
        // Sign-normalized representative of +-(sqrt(2) - 1) is 1 - sqrt(2).
        assert_eq!(parts[0], elem(&k, &[1, -1]));
        assert_eq!(parts[1], elem(&k, &[1]));
    }

    #[test]
    fn all_decompositions_of_two_in_root_five() {
        let k = quad(5);
        let all = all_sos_decompositions(&elem(&k, &[2])).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].parts(), &[elem(&k, &[1]), elem(&k, &[1])]);
    }

    #[test]
    fn no_duplicate_multisets_and_expected_count_for_ten() {
        let q = rational_field();
        let all = all_sos_decompositions(&elem(&q, &[10])).unwrap();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert_ne!(all[i], all[j], "duplicate multiset emitted");
            }
        }
        // Partitions of 10 into parts from {1, 4, 9}:
        // 9+1, 4+4+1+1, 4+6*1, 10*1.
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn budget_abort_is_indeterminate() {
        let q = rational_field();
        let big = elem(&q, &[120]);
        match decide_sos_with_budget(&big, 1) {
            Err(SosError::Indeterminate { nodes }) => assert_eq!(nodes, 1),
            other => panic!("expected budget abort, got {other:?}"),
        }
        // The same target decides fine with room to work.
        assert!(matches!(decide_sos(&big), Ok(Decision::Representable(_))));
    }

    #[test]
    fn certificate_rejects_wrong_sums() {
        let q = rational_field();
        let bad = SosCertificate::new(elem(&q, &[5]), vec![elem(&q, &[1]), elem(&q, &[1])]);
        assert!(matches!(bad, Err(SosError::BadCertificate(_))));
        let zero_part = SosCertificate::new(elem(&q, &[1]), vec![elem(&q, &[1]), elem(&q, &[0])]);
        assert!(matches!(zero_part, Err(SosError::BadCertificate(_))));
        let empty_nonzero = SosCertificate::new(elem(&q, &[1]), vec![]);
        assert!(matches!(empty_nonzero, Err(SosError::BadCertificate(_))));
    }
}
