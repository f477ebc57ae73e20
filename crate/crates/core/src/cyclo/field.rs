//! Bridge between cosine-ring elements and the general number-field layer.
//!
//! The generator `omega = omega_1` satisfies `omega_j = D_j(omega)` for the
//! Dickson-style recursion `D_0 = 2`, `D_1 = x`, `D_{j+1} = x D_j - D_{j-1}`
//! (so `D_j(z + 1/z) = z^j + z^{-j}`).  The ring relations single out a monic
//! integer minimal polynomial of degree `d`:
//!
//! * `q = 2^n`: `omega_d = 0`, so the minimal polynomial is `D_d`;
//! * `q = p`:   `1 + omega_1 + ... + omega_d = 0`, so it is `1 + sum D_j`.
//!
//! The power basis `1, omega, ..., omega^{d-1}` generates the full ring of
//! integers; the number-field constructor re-verifies that claim instead of
//! trusting it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BasisTerm, Conductor, CycloElement, CycloError, basis_term};
use crate::exact::{IntPolynomial, RatPolynomial, mat_inverse};
use crate::numfield::{Element, NumberField};

/// `D_0, ..., D_m` for the recursion `D_{j+1} = x D_j - D_{j-1}`.
fn dickson_polynomials(m: usize) -> Vec<IntPolynomial> {
    let mut d = Vec::with_capacity(m + 1);
    d.push(IntPolynomial::from_i64(&[2]));
    if m >= 1 {
        d.push(IntPolynomial::from_i64(&[0, 1]));
    }
    let x = IntPolynomial::x();
    for j in 2..=m {
        d.push(x.mul(&d[j - 1]).sub(&d[j - 2]));
    }
    d
}

/// Monic integer minimal polynomial of the cosine generator `omega_1`.
pub fn cosine_minimal_polynomial(c: Conductor) -> IntPolynomial {
    let d = c.degree();
    let dick = dickson_polynomials(d);
    match c {
        Conductor::PowerOfTwo(_) => dick[d].clone(),
        Conductor::Prime(_) => {
            let mut acc = IntPolynomial::from_i64(&[1]);
            for dj in dick.iter().skip(1) {
                acc = acc.add(dj);
            }
            acc
        }
    }
}

static FIELD_REGISTRY: OnceLock<Mutex<HashMap<u64, Arc<NumberField>>>> = OnceLock::new();

/// The cosine field as a general number field, built on the power basis of
/// `omega_1` (verified maximal, not assumed) and cached per conductor.
///
/// Fails with [`CycloError::DegreeTooLarge`] when the degree exceeds the
/// number-field layer's cap.
pub fn cosine_field(c: Conductor) -> Result<Arc<NumberField>, CycloError> {
    let registry = FIELD_REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = registry.lock().expect("cosine field registry poisoned");
    if let Some(f) = map.get(&c.q()) {
        return Ok(f.clone());
    }
    let f = NumberField::with_maximal_power_basis(cosine_minimal_polynomial(c))
        .map_err(|e| CycloError::DegreeTooLarge(format!("conductor {}: {}", c.q(), e)))?;
    map.insert(c.q(), f.clone());
    Ok(f)
}

/// Power-basis coordinates (in `omega`) of each canonical cosine basis
/// vector, as the columns of a `d x d` rational matrix.
fn basis_in_powers(c: Conductor) -> Vec<Vec<BigRational>> {
    let d = c.degree();
    let minpoly = RatPolynomial::from_int(&cosine_minimal_polynomial(c));
    let dick = dickson_polynomials(d);
    let mut cols = Vec::with_capacity(d);
    for i in 0..d {
        let poly = match basis_term(c, i) {
            BasisTerm::One => IntPolynomial::from_i64(&[1]),
            BasisTerm::Cosine(j) => dick[j as usize].clone(),
        };
        let reduced = RatPolynomial::from_int(&poly).rem_monic(&minpoly);
        let mut col = vec![BigRational::zero(); d];
        for (k, v) in reduced.coeffs().iter().enumerate() {
            col[k] = v.clone();
        }
        cols.push(col);
    }
    cols
}

/// The element as a general number-field element over the cosine field.
pub fn to_field_element(e: &CycloElement) -> Result<Element, CycloError> {
    let c = e.conductor();
    let field = cosine_field(c)?;
    let cols = basis_in_powers(c);
    let d = c.degree();
    let mut coords = vec![BigRational::zero(); d];
    for (i, a) in e.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigRational::from_integer(a.clone());
        for k in 0..d {
            if !cols[i][k].is_zero() {
                coords[k] += &a * &cols[i][k];
            }
        }
    }
    Ok(Element::from_power_coords(&field, coords))
}

/// Reads a number-field element of the cosine field back into canonical
/// cosine coordinates.  Fails when the element does not lie in the ring of
/// integers or belongs to a different field.
pub fn from_field_element(c: Conductor, e: &Element) -> Result<CycloElement, CycloError> {
    let field = cosine_field(c)?;
    if e.field().defining_poly() != field.defining_poly() {
        return Err(CycloError::InvalidElement(
            "element does not belong to the cosine field of this conductor".into(),
        ));
    }
    let d = c.degree();
    let cols = basis_in_powers(c);
    // Rows of the change-of-basis matrix: row k holds the omega^k coefficient
    // of each cosine basis vector.
    let mut m = vec![vec![BigRational::zero(); d]; d];
    for (i, col) in cols.iter().enumerate() {
        for k in 0..d {
            m[k][i] = col[k].clone();
        }
    }
    let inv = mat_inverse(&m).expect("cosine basis vectors are linearly independent");
    let mut coords = e.coords().to_vec();
    coords.resize(d, BigRational::zero());
    let mut out = Vec::with_capacity(d);
    for row in &inv {
        let mut acc = BigRational::zero();
        for (v, x) in row.iter().zip(&coords) {
            if !v.is_zero() && !x.is_zero() {
                acc += v * x;
            }
        }
        if !acc.is_integer() {
            return Err(CycloError::InvalidElement(
                "element is not an integer of the cosine ring".into(),
            ));
        }
        out.push(acc.to_integer());
    }
    Ok(CycloElement::from_coeffs(c, out))
}

/// Field norm over the rationals, computed through the number-field layer.
pub fn norm(e: &CycloElement) -> Result<BigInt, CycloError> {
    let n = to_field_element(e)?.norm();
    assert!(n.is_integer(), "norm of a ring integer must be a rational integer");
    Ok(n.to_integer())
}
