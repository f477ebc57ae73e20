//! End-to-end field classification: enumerate all totally real fields of a
//! given degree generated by an algebraic integer of house below `2+sqrt(6)`,
//! reduce to one representative per isomorphism class, and run the
//! sums-of-squares sieve on each. For degree 4 the pipeline additionally
//! covers fields that need *two* small generators: the composites of pairs
//! of candidate real quadratic fields (a proper subfield is impossible in
//! degrees 1, 2, 3, 5, and in degree 4 it must be real quadratic, so the
//! composite stage closes the only gap).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::exact::{IntPolynomial, QuadIrrBound};
use crate::hunt::{enumerate_totally_real, HuntJob};
use crate::numfield::{compositum_quadratic, is_isomorphic, NumberField};

use super::sieve::{sieve_field, SieveOutcome, SieveStage};
use super::{SosError, DEFAULT_NODE_BUDGET};

/// Result of [`classify`]: stage-by-stage counts and the surviving fields.
#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub degree: u32,
    /// Irreducible polynomials produced by the bounded-roots enumeration.
    pub enumerated: u64,
    /// Distinct fields up to isomorphism entering the sieve.
    pub fields: usize,
    /// Fields excluded because twice a shifted integral basis element is
    /// provably not a sum of squares.
    pub excluded_shifted_basis: usize,
    /// Fields excluded by the exhaustive totally-positive trace scan.
    pub excluded_trace_scan: usize,
    /// Fields whose sieve run exhausted its node budget without a verdict
    /// on some element; neither excluded nor survivors.
    pub indeterminate: Vec<Arc<NumberField>>,
    /// Fields for which no tested element failed, ordered by |discriminant|.
    pub survivors: Vec<Arc<NumberField>>,
    /// Present for degree 4 only: the composite-of-two-quadratics stage.
    pub biquadratic: Option<BiquadraticStage>,
}

/// The degree-4 composite stage over pairs of candidate quadratic fields.
#[derive(Clone, Debug)]
pub struct BiquadraticStage {
    /// Squarefree radicands of the candidate real quadratic fields (fields
    /// generated by a quadratic irrational of house below the bound).
    pub radicands: Vec<i64>,
    /// Distinct biquadratic composites of pairs of candidate fields.
    pub composites: usize,
    /// Composites passing the shifted-basis stage.
    pub retained: usize,
    /// Composites also passing the trace scan, ordered by |discriminant|.
    pub survivors: Vec<Arc<NumberField>>,
    /// Composites with a budget-exhausted sieve run.
    pub indeterminate: Vec<Arc<NumberField>>,
}

/// Classifies the totally real fields of the given degree (2..=5) whose even
/// totally positive integers could all be sums of squares, by excluding
/// every candidate field in which some tested element fails. Survivors are
/// exactly the fields the bounded sieve could not exclude; the trace budget
/// bounds the stage-2 scan (a larger budget can only shrink the survivor
/// set). Degree 5 is supported but long-running.
pub fn classify(degree: u32, trace_budget: u32) -> Result<ClassifyReport, SosError> {
    assert!(
        (2..=5).contains(&degree),
        "classification covers degrees 2..=5, got {degree}"
    );
    let job = HuntJob::new(degree, QuadIrrBound::two_plus_sqrt6(), true)
        .expect("degree validated above");

    // Reduce each minimal polynomial to a canonical translate/mirror first:
    // x -> x + t and x -> -x preserve the generated field, and the stream
    // contains every small-house translate and the mirror of each generator.
    let mut keys: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut enumerated = 0u64;
    for f in enumerate_totally_real(&job) {
        enumerated += 1;
        keys.insert(canonical_generator_key(&f));
    }

    // One representative per isomorphism class: fields with different
    // discriminants are never isomorphic, so bucket by discriminant and
    // compare root-exchange only within a bucket.
    let mut buckets: BTreeMap<BigInt, Vec<Arc<NumberField>>> = BTreeMap::new();
    for key in &keys {
        let f = IntPolynomial::new(key.clone());
        let field = NumberField::new_maximal(f)
            .expect("canonical keys are irreducible of supported degree");
        let bucket = buckets.entry(field.discriminant().clone()).or_default();
        if !bucket.iter().any(|k| is_isomorphic(k, &field)) {
            bucket.push(field);
        }
    }
    let representatives: Vec<Arc<NumberField>> =
        buckets.into_values().flatten().collect();

    let mut report = ClassifyReport {
        degree,
        enumerated,
        fields: representatives.len(),
        excluded_shifted_basis: 0,
        excluded_trace_scan: 0,
        indeterminate: Vec::new(),
        survivors: Vec::new(),
        biquadratic: None,
    };

    for field in representatives {
        match sieve_field(&field, trace_budget, DEFAULT_NODE_BUDGET) {
            Ok(SieveOutcome::Counterexample { stage: SieveStage::ShiftedBasis, .. }) => {
                report.excluded_shifted_basis += 1;
            }
            Ok(SieveOutcome::Counterexample { stage: SieveStage::TraceScan, .. }) => {
                report.excluded_trace_scan += 1;
            }
            Ok(SieveOutcome::SurvivedBounded) => report.survivors.push(field),
            Err(SosError::Indeterminate { .. }) => report.indeterminate.push(field),
            Err(e) => return Err(e),
        }
    }
    sort_by_discriminant(&mut report.survivors);

    if degree == 4 {
        report.biquadratic = Some(biquadratic_stage(trace_budget)?);
    }
    Ok(report)
}

/// Canonical coefficient vector for the field generated by a root of `f`:
/// translate so the subleading coefficient lands in `(-d/2, d/2]` (the mean
/// of the roots in `[-1/2, 1/2)`; `x -> x + t` raises `a_{d-1}` by `d*t`),
/// then take the lexicographically smaller of the result and its mirror
/// image `(-1)^d f(-x)` normalized the same way.
fn canonical_generator_key(f: &IntPolynomial) -> Vec<BigInt> {
    let normalize = |g: &IntPolynomial| -> Vec<BigInt> {
        let d = BigInt::from(g.degree() as i64);
        let a = g.coeff(g.degree() - 1);
        // t is the unique integer with a + d*t in (-d/2, d/2], i.e. the
        // unique integer in ((-d - 2a)/(2d), (-d - 2a)/(2d) + 1], which is
        // floor((-d - 2a)/(2d)) + 1 whether or not the endpoint is integral.
        let num = -&d - BigInt::from(2) * &a;
        let den = BigInt::from(2) * &d;
        let t = num.div_floor(&den) + 1;
        g.shift_variable(&t).coeffs().to_vec()
    };
    let mirror = {
        let mut c = f.coeffs().to_vec();
        let d = f.degree();
        for (i, ci) in c.iter_mut().enumerate() {
            if (d - i) % 2 == 1 {
                *ci = -&*ci;
            }
        }
        IntPolynomial::new(c)
    };
    normalize(f).min(normalize(&mirror))
}

fn sort_by_discriminant(fields: &mut [Arc<NumberField>]) {
    fields.sort_by(|a, b| {
        (a.discriminant().abs(), a.defining_poly().coeffs().to_vec())
            .cmp(&(b.discriminant().abs(), b.defining_poly().coeffs().to_vec()))
    });
}

/// Candidate real quadratic fields: squarefree radicands of the fields
/// generated by quadratic irrationals of house below `2+sqrt(6)`.
pub(crate) fn candidate_quadratic_radicands() -> Vec<i64> {
    let job = HuntJob::new(2, QuadIrrBound::two_plus_sqrt6(), true).expect("degree 2 is valid");
    let mut rad: BTreeSet<i64> = BTreeSet::new();
    for f in enumerate_totally_real(&job) {
        let a1 = i64::try_from(f.coeff(1)).expect("bounded coefficients");
        let a0 = i64::try_from(f.coeff(0)).expect("bounded coefficients");
        rad.insert(squarefree_core(a1 * a1 - 4 * a0));
    }
    rad.into_iter().collect()
}

fn squarefree_core(mut n: i64) -> i64 {
    assert!(n > 0, "real quadratic discriminants are positive");
    let mut core = 1i64;
    let mut p = 2i64;
    while p * p <= n {
        let mut e = 0u32;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e % 2 == 1 {
            core *= p;
        }
        p += 1;
    }
    core * n
}

fn biquadratic_stage(trace_budget: u32) -> Result<BiquadraticStage, SosError> {
    let radicands = candidate_quadratic_radicands();

    // Q(sqrt(d1), sqrt(d2)) contains sqrt(d3) for d3 = core(d1*d2); the
    // unordered triple {d1, d2, d3} identifies the composite, deduplicating
    // the pairs that generate the same field.
    let mut triples: BTreeSet<[i64; 3]> = BTreeSet::new();
    let mut pairs: BTreeMap<[i64; 3], (i64, i64)> = BTreeMap::new();
    for (i, &d1) in radicands.iter().enumerate() {
        for &d2 in &radicands[i + 1..] {
            let g = d1.gcd(&d2);
            let d3 = (d1 / g) * (d2 / g);
            let mut t = [d1, d2, d3];
            t.sort_unstable();
            if triples.insert(t) {
                pairs.insert(t, (d1, d2));
            }
        }
    }

    let mut stage = BiquadraticStage {
        radicands,
        composites: triples.len(),
        retained: 0,
        survivors: Vec::new(),
        indeterminate: Vec::new(),
    };
    for (d1, d2) in pairs.values() {
        let field = compositum_quadratic(*d1, *d2)
            .expect("distinct squarefree radicands form a valid composite");
        match sieve_field(&field, trace_budget, DEFAULT_NODE_BUDGET) {
            Ok(SieveOutcome::Counterexample { stage: SieveStage::ShiftedBasis, .. }) => {}
            Ok(SieveOutcome::Counterexample { stage: SieveStage::TraceScan, .. }) => {
                stage.retained += 1;
            }
            Ok(SieveOutcome::SurvivedBounded) => {
                stage.retained += 1;
                stage.survivors.push(field);
            }
            Err(SosError::Indeterminate { .. }) => {
                stage.retained += 1;
                stage.indeterminate.push(field);
            }
            Err(e) => return Err(e),
        }
    }
    sort_by_discriminant(&mut stage.survivors);
    Ok(stage)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::IntPolynomial;

    #[test]
    fn canonical_key_identifies_translates_and_mirrors() {
        // x^2 - 3 and its translates/mirrors all reduce to the same key.
        let base = IntPolynomial::from_i64(&[-3, 0, 1]);
        let key = canonical_generator_key(&base);
        for t in [-2i64, -1, 1, 2] {
            let shifted = base.shift_variable(&BigInt::from(t));
            assert_eq!(canonical_generator_key(&shifted), key, "translate by {t}");
        }
        // Mirror of a non-symmetric cubic.
        let f = IntPolynomial::from_i64(&[-2, -4, 0, 1]); // x^3 - 4x - 2
        let m = IntPolynomial::from_i64(&[2, -4, 0, 1]); // roots negated
        assert_eq!(canonical_generator_key(&f), canonical_generator_key(&m));
        // Distinct fields keep distinct keys.
        let g = IntPolynomial::from_i64(&[-1, -2, 1, 1]);
        assert_ne!(canonical_generator_key(&f), canonical_generator_key(&g));
    }

    #[test]
    fn quadratic_radicands_are_the_twenty_known_ones() {
        assert_eq!(
            candidate_quadratic_radicands(),
            vec![2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 29, 33, 37, 41, 53, 57, 61]
        );
    }

    #[test]
    fn squarefree_core_examples() {
        assert_eq!(squarefree_core(12), 3);
        assert_eq!(squarefree_core(8), 2);
        assert_eq!(squarefree_core(30), 30);
        assert_eq!(squarefree_core(49), 1);
    }
}
