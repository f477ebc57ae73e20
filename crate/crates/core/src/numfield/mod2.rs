//! The residue ring O/2O and its square classes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{Element, NumberField};

/// Residue of integral-basis coordinates modulo 2, as a 0/1 vector.
pub(crate) fn residue_mod_2(coords: &[BigInt]) -> Vec<u8> {
    let two = BigInt::from(2);
    coords.iter().map(|c| if c.mod_floor(&two).is_zero() { 0u8 } else { 1u8 }).collect()
}

/// The set {x^2 + 2O : x in O/2O}, each residue over the integral basis.
pub(crate) fn compute_squares_mod_2(field: &NumberField) -> BTreeSet<Vec<u8>> {
    let d = field.degree();
    assert!(d <= 16, "residue ring enumeration supports degree up to 16");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << d) {
        let y: Vec<BigInt> = (0..d).map(|i| BigInt::from((mask >> i) & 1)).collect();
        let sq = field.mul_integral_coords(&y, &y);
        out.insert(residue_mod_2(&sq));
    }
    out
}

impl Element {
    /// Whether the element is congruent to a square modulo 2O.
    ///
    /// # Panics
    /// Panics if the element is not integral.
    pub fn is_square_mod_2(&self) -> bool {
        let y = self.integral_coords().expect("element must be integral");
        self.field().squares_mod_2().contains(&residue_mod_2(&y))
    }
}
