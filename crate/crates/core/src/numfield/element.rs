//! Elements of a number field in exact power-basis coordinates.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{same_field, NumberField};
use crate::exact::{IntPolynomial, QuadIrrBound, RatPolynomial};

/// An element of a [`NumberField`], stored as exact rational coordinates over
/// the power basis 1, alpha, ..., alpha^{d-1}.
#[derive(Clone)]
pub struct Element {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl Element {
    /// Builds an element from power-basis coordinates (padded or truncated
    /// against trailing zeros to the field degree).
    ///
    /// # Panics
    /// Panics if more than `degree` coordinates are given and the excess ones
    /// are nonzero.
    pub fn from_power_coords(field: &Arc<NumberField>, mut coords: Vec<BigRational>) -> Self {
        let d = field.degree();
        if coords.len() > d {
            assert!(
                coords[d..].iter().all(|c| c.is_zero()),
                "coordinates beyond the field degree must be zero"
            );
            coords.truncate(d);
        }
        coords.resize(d, BigRational::zero());
        Element { field: field.clone(), coords }
    }

    /// Builds an integral element from integral-basis coordinates.
    pub fn from_integral_coords(field: &Arc<NumberField>, coords: &[BigInt]) -> Self {
        assert_eq!(coords.len(), field.degree(), "coordinate count matches degree");
        Element { field: field.clone(), coords: field.power_coords_of_integral(coords) }
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Element { field: field.clone(), coords: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<NumberField>, c: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = c;
        Element { field: field.clone(), coords }
    }

    pub fn from_integer(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// The distinguished root alpha of the defining polynomial.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        let d = field.degree();
        let mut coords = vec![BigRational::zero(); d];
        if d == 1 {
            // alpha is the rational root of the linear defining polynomial.
            coords[0] = -BigRational::from_integer(field.defining_poly().coeff(0));
        } else {
            coords[1] = BigRational::one();
        }
        Element { field: field.clone(), coords }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(same_field(&self.field, &other.field), "elements of the same field");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Element { field: self.field.clone(), coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(same_field(&self.field, &other.field), "elements of the same field");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Element { field: self.field.clone(), coords }
    }

    pub fn neg(&self) -> Self {
        Element { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_field(&self.field, &other.field), "elements of the same field");
        Element {
            field: self.field.clone(),
            coords: self.field.mul_power_coords(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Element { field: self.field.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Element::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> BigRational {
        self.field.trace_power_coords(&self.coords)
    }

    pub fn norm(&self) -> BigRational {
        self.field.norm_power_coords(&self.coords)
    }

    /// Monic characteristic polynomial of multiplication by this element.
    pub fn char_poly(&self) -> RatPolynomial {
        self.field.char_poly_power_coords(&self.coords)
    }

    /// Primitive integer polynomial vanishing exactly on the embedding values.
    pub fn min_poly_primitive(&self) -> IntPolynomial {
        self.field.min_poly_primitive(&self.coords)
    }

    pub fn is_integral(&self) -> bool {
        self.field.integral_coords(&self.coords).is_some()
    }

    /// Coordinates in the integral basis, when the element is integral.
    pub fn integral_coords(&self) -> Option<Vec<BigInt>> {
        self.field.integral_coords(&self.coords)
    }

    /// Whether every real embedding of the element is strictly positive;
    /// zero is not totally positive.
    pub fn is_totally_positive(&self) -> bool {
        self.field.is_totally_positive_power(&self.coords)
    }

    /// Whether house(e) = max |embedding| is strictly below the bound.
    pub fn house_less_than(&self, bound: &QuadIrrBound) -> bool {
        if bound.sign() <= 0 {
            return false;
        }
        self.house_less_than_bound(&crate::exact::Bound::Quad(bound.clone()))
    }

    /// Like [`Element::house_less_than`], with a general finite positive
    /// endpoint (rational or quadratic irrational).
    pub fn house_less_than_bound(&self, bound: &crate::exact::Bound) -> bool {
        use crate::exact::Bound;
        let positive = match bound {
            Bound::Rational(r) => r.is_positive(),
            Bound::Quad(q) => q.sign() > 0,
            Bound::PosInf => return true,
            Bound::NegInf => false,
        };
        if !positive {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let g = self.min_poly_primitive();
        crate::exact::all_roots_in_open_interval(&g, bound)
    }

    /// Deterministic ordering key: by trace, then lexicographic coordinates.
    pub fn sort_key(&self) -> (BigRational, Vec<BigRational>) {
        (self.trace(), self.coords.clone())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coords == other.coords
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt2_field() -> Arc<NumberField> {
        NumberField::new_maximal(IntPolynomial::from_i64(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn arithmetic_in_sqrt2() {
        let k = sqrt2_field();
        let a = Element::generator(&k);
        let two = Element::from_integer(&k, 2);
        // alpha^2 = 2.
        assert_eq!(a.mul(&a), two);
        // (1 + alpha)(1 - alpha) = -1.
        let u = Element::one(&k).add(&a);
        let v = Element::one(&k).sub(&a);
        assert_eq!(u.mul(&v), Element::from_integer(&k, -1));
        assert_eq!(u.norm(), rat(-1, 1));
        assert_eq!(u.pow(2), u.mul(&u));
        assert_eq!(u.pow(0), Element::one(&k));
    }

    #[test]
    fn house_bound_checks() {
        let k = sqrt2_field();
        let a = Element::generator(&k);
        // sqrt(2) has house < 2 + sqrt(6).
        assert!(a.house_less_than(&QuadIrrBound::two_plus_sqrt6()));
        // 5 does not.
        assert!(!Element::from_integer(&k, 5).house_less_than(&QuadIrrBound::two_plus_sqrt6()));
        // 2 has house exactly 2: strict comparison fails at the boundary.
        assert!(!Element::from_integer(&k, 2).house_less_than(&QuadIrrBound::new(2, 0)));
        assert!(Element::from_integer(&k, 2).house_less_than(&QuadIrrBound::new(3, 0)));
        // Zero has house 0.
        assert!(Element::zero(&k).house_less_than(&QuadIrrBound::new(1, 0)));
        assert!(!Element::zero(&k).house_less_than(&QuadIrrBound::new(0, 0)));
    }

    #[test]
    fn integrality_and_char_poly() {
        let k5 = NumberField::new_maximal(IntPolynomial::from_i64(&[-5, 0, 1])).unwrap();
        let phi = Element::from_power_coords(&k5, vec![rat(1, 2), rat(1, 2)]);
        assert!(phi.is_integral());
        // phi satisfies x^2 - x - 1.
        assert_eq!(phi.min_poly_primitive(), IntPolynomial::from_i64(&[-1, -1, 1]));
        assert!(!phi.scale(&rat(1, 2)).is_integral());
        // char poly of a rational in a quadratic field is (x - c)^2.
        let c = Element::from_integer(&k5, 3);
        let chi = c.char_poly();
        assert_eq!(chi.coeffs(), RatPolynomial::from_i64(&[9, -6, 1]).coeffs());
    }

    #[test]
    fn display_forms() {
        let k = sqrt2_field();
        let e = Element::from_power_coords(&k, vec![rat(-1, 2), rat(3, 1)]);
        assert_eq!(format!("{}", e), "-1/2 + 3*a");
        assert_eq!(format!("{}", Element::zero(&k)), "0");
        let g = Element::generator(&k).neg();
        assert_eq!(format!("{}", g), "-a");
    }
}
