//! The diagonal-parity obstruction to universal quadratic forms with
//! rational integer coefficients, and the exceptional-element test.
//!
//! If a form with coefficients in Z (a Z-form) is universal over the ring of
//! integers, then for a totally positive alpha each representation forces
//! 2*alpha to be a sum of squares whose coordinate matrix U satisfies
//! "every diagonal entry of U^T U is even". So: enumerate ALL decompositions
//! of 2*alpha into nonzero squares (a finite set, since each part's square
//! has trace at most Tr(2*alpha)); if every one of them violates the parity
//! condition — or none exists at all — alpha witnesses that no universal
//! Z-form exists over the field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::numfield::Element;

use super::{all_sos_decompositions, decide_sos, Decision, SosCertificate, SosError};

/// Outcome of [`zform_obstruction`] for one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    alpha: Element,
    decompositions: Vec<SosCertificate>,
    /// For each decomposition, whether every diagonal entry of U^T U is even
    /// (U = rows of part coordinates).
    parity_passes: Vec<bool>,
    witness: bool,
}

impl ObstructionReport {
    pub fn alpha(&self) -> &Element {
        &self.alpha
    }

    /// All decompositions of `2 * alpha` into nonzero squares.
    pub fn decompositions(&self) -> &[SosCertificate] {
        &self.decompositions
    }

    /// Parity verdict per decomposition, aligned with `decompositions()`.
    pub fn parity_passes(&self) -> &[bool] {
        &self.parity_passes
    }

    /// True when no decomposition passes the parity test (including the case
    /// of no decompositions at all): `alpha` then proves that no universal
    /// Z-form exists over the field.
    pub fn is_witness(&self) -> bool {
        self.witness
    }
}

/// Evaluates the obstruction at a totally positive integral `alpha`.
pub fn zform_obstruction(alpha: &Element) -> Result<ObstructionReport, SosError> {
    if alpha.integral_coords().is_none() {
        return Err(SosError::NotIntegral);
    }
    if !alpha.is_totally_positive() {
        return Err(SosError::NotTotallyPositive);
    }
    let double = alpha.add(alpha);
    let decompositions = all_sos_decompositions(&double)?;
    let parity_passes: Vec<bool> = decompositions.iter().map(diagonal_all_even).collect();
    let witness = !parity_passes.iter().any(|&p| p);
    Ok(ObstructionReport { alpha: alpha.clone(), decompositions, parity_passes, witness })
}

/// Whether every diagonal entry of U^T U is even, where the rows of U are
/// the integral coordinates of the parts: (U^T U)_{ii} = sum_r U[r][i]^2.
fn diagonal_all_even(cert: &SosCertificate) -> bool {
    let d = cert.target().field().degree();
    let two = BigInt::from(2);
    for i in 0..d {
        let mut diag = BigInt::zero();
        for p in cert.parts() {
            let c = p.integral_coords().expect("certificate parts are integral");
            diag += &c[i] * &c[i];
        }
        if !diag.mod_floor(&two).is_zero() {
            return false;
        }
    }
    true
}

/// Whether the element is a square in O/2O: the necessary mod-2 condition
/// for being a sum of squares (squaring is a ring homomorphism mod 2, so a
/// sum of squares is itself a square there).
pub fn is_square_mod_2(e: &Element) -> Result<bool, SosError> {
    let c = e.integral_coords().ok_or(SosError::NotIntegral)?;
    let two = BigInt::from(2);
    let pattern: Vec<u8> = c
        .iter()
        .map(|v| v.mod_floor(&two).to_u8().expect("residue is 0 or 1"))
        .collect();
    Ok(e.field().squares_mod_2().contains(&pattern))
}

/// A totally positive integer is exceptional when it is congruent to a
/// square mod 2 yet provably not a sum of squares: a failure of the mod-2
/// local condition to be sufficient.
pub fn is_exceptional(alpha: &Element) -> Result<bool, SosError> {
    if alpha.integral_coords().is_none() {
        return Err(SosError::NotIntegral);
    }
    if !alpha.is_totally_positive() {
        return Err(SosError::NotTotallyPositive);
    }
    if !is_square_mod_2(alpha)? {
        return Ok(false);
    }
    Ok(matches!(decide_sos(alpha)?, Decision::NotRepresentable))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_rational::BigRational;
    use num_traits::Zero;

    use super::*;
    use crate::exact::IntPolynomial;
    use crate::numfield::{totally_positive_with_trace_at_most, NumberField};

    fn field(coeffs: &[i64]) -> Arc<NumberField> {
        NumberField::new_maximal(IntPolynomial::from_i64(coeffs)).unwrap()
    }

    fn elem(k: &Arc<NumberField>, coords: &[i64]) -> Element {
        let mut full: Vec<BigRational> =
            coords.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        full.resize(k.degree(), BigRational::zero());
        Element::from_power_coords(k, full)
    }

    #[test]
    fn rationals_are_inconclusive_at_one() {
        let q = field(&[0, 1]);
        let report = zform_obstruction(&elem(&q, &[1])).unwrap();
        assert_eq!(report.decompositions().len(), 1);
        assert_eq!(report.parity_passes(), &[true]);
        assert!(!report.is_witness());
    }

    #[test]
    fn two_minus_root_two_is_a_witness() {
        let k = field(&[-2, 0, 1]);
        let alpha = elem(&k, &[2, -1]);
        let report = zform_obstruction(&alpha).unwrap();
        // The unique decomposition of 4 - 2 sqrt(2) is 1^2 + (sqrt(2)-1)^2,
        // whose U^T U diagonal is (2, 1): odd entry, parity fails.
        assert_eq!(report.decompositions().len(), 1);
        assert_eq!(report.parity_passes(), &[false]);
        assert!(report.is_witness());
    }

    #[test]
    fn two_plus_root_three_is_a_witness() {
        let k = field(&[-3, 0, 1]);
        let report = zform_obstruction(&elem(&k, &[2, 1])).unwrap();
        assert!(report.is_witness());
    }

    #[test]
    fn squares_mod_two_in_the_rationals() {
        let q = field(&[0, 1]);
        // In Z/2 both residues are squares (0 = 0^2, 1 = 1^2).
        assert!(is_square_mod_2(&elem(&q, &[6])).unwrap());
        assert!(is_square_mod_2(&elem(&q, &[7])).unwrap());
    }

    #[test]
    fn perfect_squares_are_never_exceptional() {
        let k = field(&[-2, 0, 1]);
        let beta = elem(&k, &[1, 1]); // 1 + sqrt(2)
        let alpha = beta.mul(&beta); // 3 + 2 sqrt(2), totally positive
        assert!(alpha.is_totally_positive());
        assert!(!is_exceptional(&alpha).unwrap());
    }

    #[test]
    fn first_exceptional_element_in_root_six() {
        // Q(sqrt(6)) admits exceptional elements; find the first by trace.
        let k = field(&[-6, 0, 1]);
        let mut found = None;
        for gamma in totally_positive_with_trace_at_most(&k, 20) {
            if is_exceptional(&gamma).unwrap() {
                found = Some(gamma);
                break;
            }
        }
        let witness = found.expect("an exceptional element of trace <= 20 exists");
        assert!(is_square_mod_2(&witness).unwrap());
        assert!(matches!(decide_sos(&witness).unwrap(), Decision::NotRepresentable));
    }
}
