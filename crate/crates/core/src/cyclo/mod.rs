//! Exact arithmetic in real cyclotomic (cosine) rings.
//!
//! For a conductor `q` that is either a power of two `2^n` with `n >= 3` or an
//! odd prime `p >= 5`, the maximal totally real subfield of the `q`-th
//! cyclotomic field has degree `d = phi(q)/2` and ring of integers
//! `Z[omega_1]`, where `omega_j` denotes the cosine pair `zeta^j + zeta^{-j}`
//! of a primitive `q`-th root of unity `zeta`.  Elements are stored as integer
//! coordinate vectors over a conductor-specific canonical basis:
//!
//! * `q = 2^n`: the basis `(1, omega_1, ..., omega_{d-1})`;
//! * `q = p`:   the basis `(omega_1, ..., omega_d)`.
//!
//! The two presentations are deliberately kept distinct: statements about each
//! family quote coefficients over its own natural basis, and a shared indexing
//! would force constant translation.  All index folding (`omega_{-j} =
//! omega_j`, period `q`, `omega_{q-j} = omega_j`, and for `q = 2^n` the sign
//! rule `omega_{2^{n-1}+k} = -omega_k`, hence `omega_d = 0`; for `q = p` the
//! relation `1 = -(omega_1 + ... + omega_d)`) happens in one place, so every
//! stored coefficient vector is canonical and equality is plain vector
//! equality.

mod analysis;
mod field;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use analysis::{
    doubled_alpha_excludes_small_squares, gamma_norm_tower, inertia_degree_of_three,
    is_indecomposable_cosine, parity_obstruction, small_trace_squares, special_elements,
    trace_of_square,
};
pub use field::{cosine_field, cosine_minimal_polynomial, from_field_element, norm, to_field_element};

/// Errors raised by cosine-ring constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// The conductor is neither `2^n` with `n >= 3` nor an odd prime `>= 5`.
    InvalidConductor(String),
    /// The requested operation is not defined for this conductor family.
    Unsupported(String),
    /// The cosine field degree exceeds what the number-field layer accepts.
    DegreeTooLarge(String),
    /// An element failed a structural requirement (integrality, membership).
    InvalidElement(String),
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::InvalidConductor(s) => write!(f, "invalid conductor: {}", s),
            CycloError::Unsupported(s) => write!(f, "unsupported operation: {}", s),
            CycloError::DegreeTooLarge(s) => write!(f, "degree too large: {}", s),
            CycloError::InvalidElement(s) => write!(f, "invalid element: {}", s),
        }
    }
}

impl std::error::Error for CycloError {}

/// A validated conductor: either a power of two `2^n` (`n >= 3`) or an odd
/// prime `p >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conductor {
    /// Conductor `2^n`, storing the exponent `n >= 3`.
    PowerOfTwo(u32),
    /// An odd prime conductor `p >= 5`.
    Prime(u64),
}

impl Conductor {
    /// Classifies a conductor value.
    pub fn new(q: u64) -> Result<Conductor, CycloError> {
        if q >= 8 && q.is_power_of_two() {
            return Ok(Conductor::PowerOfTwo(q.trailing_zeros()));
        }
        if q >= 5 && q % 2 == 1 && is_prime_u64(q) {
            return Ok(Conductor::Prime(q));
        }
        Err(CycloError::InvalidConductor(format!(
            "{} is neither 2^n with n >= 3 nor an odd prime >= 5",
            q
        )))
    }

    /// The conductor value `q`.
    pub fn q(self) -> u64 {
        match self {
            Conductor::PowerOfTwo(n) => 1u64 << n,
            Conductor::Prime(p) => p,
        }
    }

    /// Degree of the cosine field, `phi(q)/2`.
    pub fn degree(self) -> usize {
        match self {
            Conductor::PowerOfTwo(n) => 1usize << (n - 2),
            Conductor::Prime(p) => ((p - 1) / 2) as usize,
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f.checked_mul(f).map_or(false, |ff| ff <= n) {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// An integer of the cosine ring, stored over the canonical basis of its
/// conductor (see the module docs).  Coefficient vectors are always fully
/// reduced, so `PartialEq` is structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElement {
    conductor: Conductor,
    coeffs: Vec<BigInt>,
}

/// How a basis position multiplies: as the rational one or as a cosine pair.
enum BasisTerm {
    One,
    Cosine(i64),
}

impl CycloElement {
    /// The zero element.
    pub fn zero(c: Conductor) -> Self {
        CycloElement { conductor: c, coeffs: vec![BigInt::zero(); c.degree()] }
    }

    /// The rational integer `v` as a ring element.
    pub fn from_integer(c: Conductor, v: i64) -> Self {
        let mut e = Self::zero(c);
        add_rational_integer(c, &mut e.coeffs, &BigInt::from(v));
        e
    }

    /// The multiplicative unit.
    pub fn one(c: Conductor) -> Self {
        Self::from_integer(c, 1)
    }

    /// The cosine pair `zeta^j + zeta^{-j}`, for any integer index `j`
    /// (negative, zero, or beyond the period);  the index is folded into
    /// canonical coordinates.  Note `omega_0 = 2`.
    pub fn omega(c: Conductor, j: i64) -> Self {
        let mut e = Self::zero(c);
        add_cosine(c, &mut e.coeffs, j, &BigInt::from(1));
        e
    }

    /// Element with the given canonical-basis coefficients.
    ///
    /// # Panics
    /// Panics when the length differs from the field degree.
    pub fn from_coeffs(c: Conductor, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), c.degree(), "coefficient vector must match the degree");
        CycloElement { conductor: c, coeffs }
    }

    /// The conductor of the ring this element lives in.
    pub fn conductor(&self) -> Conductor {
        self.conductor
    }

    /// Canonical-basis coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CycloElement { conductor: self.conductor, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CycloElement { conductor: self.conductor, coeffs }
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Ring product, expanding cosine pairs by
    /// `omega_j * omega_l = omega_{j+l} + omega_{j-l}` and folding the
    /// resulting indices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        let c = self.conductor;
        let mut out = vec![BigInt::zero(); c.degree()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let m = a * b;
                match (basis_term(c, i), basis_term(c, l)) {
                    (BasisTerm::One, BasisTerm::One) => add_rational_integer(c, &mut out, &m),
                    (BasisTerm::One, BasisTerm::Cosine(j))
                    | (BasisTerm::Cosine(j), BasisTerm::One) => add_cosine(c, &mut out, j, &m),
                    (BasisTerm::Cosine(j), BasisTerm::Cosine(k)) => {
                        add_cosine(c, &mut out, j + k, &m);
                        add_cosine(c, &mut out, j - k, &m);
                    }
                }
            }
        }
        CycloElement { conductor: c, coeffs: out }
    }

    /// Field trace over the rationals.  Every cosine basis vector of a prime
    /// conductor has trace `-1`; for `2^n` the basis vector `1` has trace `d`
    /// and every `omega_j` has trace `0`.
    pub fn trace(&self) -> BigInt {
        match self.conductor {
            Conductor::PowerOfTwo(_) => {
                BigInt::from(self.conductor.degree() as u64) * &self.coeffs[0]
            }
            Conductor::Prime(_) => -self.coeffs.iter().sum::<BigInt>(),
        }
    }
}

/// Basis position `i` as a multiplication term.
fn basis_term(c: Conductor, i: usize) -> BasisTerm {
    match c {
        Conductor::PowerOfTwo(_) => {
            if i == 0 {
                BasisTerm::One
            } else {
                BasisTerm::Cosine(i as i64)
            }
        }
        Conductor::Prime(_) => BasisTerm::Cosine(i as i64 + 1),
    }
}

/// Adds `mult` times the rational integer one to canonical coordinates.
fn add_rational_integer(c: Conductor, coeffs: &mut [BigInt], mult: &BigInt) {
    match c {
        Conductor::PowerOfTwo(_) => coeffs[0] += mult,
        // 1 = -(omega_1 + ... + omega_d) for a prime conductor.
        Conductor::Prime(_) => {
            for a in coeffs.iter_mut() {
                *a -= mult;
            }
        }
    }
}

/// Adds `mult` times the cosine pair `zeta^j + zeta^{-j}` to canonical
/// coordinates, folding the index through every identity of the ring.
fn add_cosine(c: Conductor, coeffs: &mut [BigInt], j: i64, mult: &BigInt) {
    let q = c.q() as i64;
    // omega_{-j} = omega_j and omega_{j+q} = omega_j fold into [0, q/2].
    let mut j = j.rem_euclid(q);
    if j > q / 2 {
        j = q - j;
    }
    match c {
        Conductor::PowerOfTwo(_) => {
            let d = (q / 4) as usize;
            let j = j as usize;
            if j == 0 {
                // omega_0 = 2.
                coeffs[0] += mult * 2;
            } else if j == d {
                // zeta^{q/4} is a primitive fourth root: the pair cancels.
            } else if j < d {
                coeffs[j] += mult;
            } else {
                // omega_{q/2 - k} = -omega_k.
                let k = (q / 2) as usize - j;
                if k == 0 {
                    coeffs[0] -= mult * 2;
                } else {
                    coeffs[k] -= mult;
                }
            }
        }
        Conductor::Prime(_) => {
            if j == 0 {
                // omega_0 = 2 = -2 (omega_1 + ... + omega_d).
                for a in coeffs.iter_mut() {
                    *a -= mult * 2;
                }
            } else {
                coeffs[j as usize - 1] += mult;
            }
        }
    }
}

impl fmt::Display for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (label, is_const) = match basis_term(self.conductor, i) {
                BasisTerm::One => (String::new(), true),
                BasisTerm::Cosine(j) => (format!("w_{}", j), false),
            };
            let mag = a.abs();
            if !wrote {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if is_const {
                write!(f, "{}", mag)?;
            } else if mag == BigInt::from(1) {
                write!(f, "{}", label)?;
            } else {
                write!(f, "{}*{}", mag, label)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
