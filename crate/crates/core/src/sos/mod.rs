//! Sums of squares in rings of integers of totally real fields: a complete
//! decision procedure for representability, exhaustive decomposition listing,
//! the diagonal-parity obstruction to universal Z-forms, the exceptional
//! element test, and the field-classification sieve built on all of these.
//!
//! Everything here is exact. The decision procedure is complete because each
//! nonzero square is totally positive with positive integer trace, so a
//! target of trace `T` is a sum of at most `T` nonzero squares, each drawn
//! from the finite set `{x : Tr(x^2) <= T}` produced by a complete lattice
//! enumeration. `NotRepresentable` is returned only when that finite search
//! space is exhausted; running out of the configurable node budget is a
//! distinct `Indeterminate` outcome, never silently conflated with a proof.

mod classify;
mod decide;
mod sieve;
mod zform;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numfield::Element;

pub use decide::{
    all_sos_decompositions, all_sos_decompositions_with_budget, decide_sos,
    decide_sos_with_budget, DEFAULT_NODE_BUDGET,
};
pub use classify::{classify, BiquadraticStage, ClassifyReport};
pub use sieve::{sieve_field, SieveOutcome, SieveStage};
pub use zform::{is_exceptional, is_square_mod_2, zform_obstruction, ObstructionReport};

/// Failure modes shared by the operations in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SosError {
    /// The input element is not an algebraic integer.
    NotIntegral,
    /// The input element is neither totally positive nor zero.
    NotTotallyPositive,
    /// The search exceeded its node budget before reaching a conclusion.
    /// Explicitly distinct from `NotRepresentable`: a budget abort proves
    /// nothing either way.
    Indeterminate { nodes: u64 },
    /// A certificate failed verification on construction.
    BadCertificate(String),
}

impl fmt::Display for SosError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SosError::NotIntegral => write!(f, "element is not integral"),
            SosError::NotTotallyPositive => {
                write!(f, "element is neither totally positive nor zero")
            }
            SosError::Indeterminate { nodes } => {
                write!(f, "search budget of {nodes} nodes exhausted (indeterminate)")
            }
            SosError::BadCertificate(msg) => write!(f, "invalid certificate: {msg}"),
        }
    }
}

impl std::error::Error for SosError {}

/// Outcome of the complete representability decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Representable(SosCertificate),
    /// Proof by exhaustion that no multiset of nonzero squares sums to the
    /// target.
    NotRepresentable,
}

/// A verified decomposition `target = sum of parts[i]^2`.
///
/// Parts are canonically ordered: each part is sign-normalized so that its
/// first nonzero integral-basis coordinate is positive (squares do not see
/// the sign), and the list is sorted in non-increasing canonical order,
/// where the canonical order compares `(Tr(part^2), integral coordinates
/// lexicographically)`. Two certificates are equal exactly when they agree
/// as multisets of parts over the same target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosCertificate {
    target: Element,
    parts: Vec<Element>,
}

impl SosCertificate {
    /// Builds and verifies a certificate. The identity
    /// `sum parts[i]^2 = target` is checked exactly; parts must be nonzero
    /// integral elements of the target's field. An empty part list is valid
    /// only for the zero target (the empty sum).
    pub fn new(target: Element, parts: Vec<Element>) -> Result<Self, SosError> {
        if target.integral_coords().is_none() {
            return Err(SosError::BadCertificate("target is not integral".into()));
        }
        let mut sum = Element::zero(target.field());
        for p in &parts {
            if p.is_zero() {
                return Err(SosError::BadCertificate("parts must be nonzero".into()));
            }
            if p.integral_coords().is_none() {
                return Err(SosError::BadCertificate("parts must be integral".into()));
            }
            sum = sum.add(&p.mul(p));
        }
        if sum != target {
            return Err(SosError::BadCertificate(format!(
                "parts square-sum to {sum}, not to the target {target}"
            )));
        }
        if parts.is_empty() && !target.is_zero() {
            return Err(SosError::BadCertificate(
                "a nonzero target needs at least one part".into(),
            ));
        }
        let mut parts: Vec<Element> = parts.iter().map(sign_normalize).collect();
        let mut keyed: Vec<(PartKey, Element)> =
            parts.drain(..).map(|p| (part_key(&p), p)).collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(SosCertificate { target, parts: keyed.into_iter().map(|(_, p)| p).collect() })
    }

    pub fn target(&self) -> &Element {
        &self.target
    }

    /// The parts, in non-increasing canonical order.
    pub fn parts(&self) -> &[Element] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for SosCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.target)?;
        if self.parts.is_empty() {
            return write!(f, "(empty sum)");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})^2")?;
        }
        Ok(())
    }
}

/// Sort key realizing the documented canonical order on parts.
type PartKey = (BigInt, Vec<BigInt>);

fn part_key(p: &Element) -> PartKey {
    let c = p.integral_coords().expect("parts are integral");
    let sq = p.field().mul_integral_coords(&c, &c);
    (p.field().trace_integral_coords(&sq), c)
}

/// The representative of `{x, -x}` whose first nonzero integral coordinate
/// is positive.
fn sign_normalize(p: &Element) -> Element {
    let c = p.integral_coords().expect("parts are integral");
    match c.iter().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => p.neg(),
        _ => p.clone(),
    }
}
