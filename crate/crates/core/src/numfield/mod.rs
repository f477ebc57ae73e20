//! Totally real number fields as concrete objects: integral bases, real
//! embeddings, exact element arithmetic, trace/norm/house, total positivity,
//! indecomposability, the residue ring modulo 2, and bounded enumeration of
//! totally positive integers.

mod element;
mod enumerate;
mod linalg;
mod mod2;
mod order;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use element::Element;
pub use enumerate::{
    find_root_in_field, indecomposability_by_norm, integral_elements_with_house_below,
    is_indecomposable, sign_classes_with_square_trace_at_most, totally_positive_below,
    totally_positive_with_trace_at_most, units_heuristic,
};

use crate::exact::{
    bareiss_determinant, discriminant, eval_interval, is_irreducible, isolate_real_roots,
    mat_inverse, matrix_char_poly, multiplication_matrix, pow2_inv, refine_root, sturm_count,
    Bound, DyInterval, IntPolynomial, RatPolynomial, RootInterval,
};

/// Extra interval precision carried through evaluations to absorb rounding.
const GUARD_BITS: u64 = 16;
/// Starting precision (fractional bits) for cached embedding intervals.
const BASE_PREC: u64 = 48;
/// Interval positivity checks fall back to exact Sturm counting beyond this.
const MAX_PREC: u64 = 768;

/// Failures when building a field or enumerating inside one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotMonic,
    NotIrreducible,
    NotTotallyReal,
    DegreeTooLarge { degree: usize, max: usize },
    DiscFactoring(String),
    PowerBasisNotMaximal,
    InvalidInput(String),
    InvalidElement(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotMonic => write!(f, "defining polynomial must be monic"),
            FieldError::NotIrreducible => write!(f, "defining polynomial must be irreducible"),
            FieldError::NotTotallyReal => write!(f, "defining polynomial must be totally real"),
            FieldError::DegreeTooLarge { degree, max } => {
                write!(f, "degree {} exceeds the supported maximum {}", degree, max)
            }
            FieldError::DiscFactoring(msg) => {
                write!(f, "cannot certify the square part of the discriminant: {}", msg)
            }
            FieldError::PowerBasisNotMaximal => {
                write!(f, "power basis is not maximal for this polynomial")
            }
            FieldError::InvalidInput(msg) => write!(f, "invalid input: {}", msg),
            FieldError::InvalidElement(msg) => write!(f, "invalid element: {}", msg),
        }
    }
}

impl std::error::Error for FieldError {}

struct EmbCache {
    prec: u64,
    roots: Vec<RootInterval>,
    /// `basis_emb[k][i]` encloses the k-th real embedding of basis element i.
    basis_emb: Vec<Vec<DyInterval>>,
}

/// A totally real number field Q[x]/(f) together with its maximal order.
pub struct NumberField {
    f: IntPolynomial,
    f_rat: RatPolynomial,
    degree: usize,
    /// Rows express the integral basis over the power basis; row 0 is 1.
    basis: Vec<Vec<BigRational>>,
    /// Inverse transpose of `basis`: maps power coordinates to basis coordinates.
    pw_to_int: Vec<Vec<BigRational>>,
    /// Index of the equation order Z[alpha] in the maximal order.
    index: BigInt,
    /// Field discriminant.
    disc: BigInt,
    /// Traces of the powers 1, alpha, ..., alpha^{d-1}.
    tr_pow: Vec<BigInt>,
    /// Traces of the integral basis elements.
    tr_basis: Vec<BigInt>,
    /// Gram matrix Tr(b_i b_j) of the trace form on the integral basis.
    gram: Vec<Vec<BigInt>>,
    /// Coordinates of b_i * b_j in the integral basis.
    mult_table: Vec<Vec<Vec<BigInt>>>,
    emb: RwLock<EmbCache>,
    squares2: OnceLock<BTreeSet<Vec<u8>>>,
    ldlt_gram: OnceLock<(Vec<Vec<BigRational>>, Vec<BigRational>, Vec<usize>)>,
    /// Certified enclosure of the inverse embedding matrix: entry (i, k) is a
    /// rational interval containing the (i, k) entry of M^-1 where
    /// M[k][i] = sigma_k(b_i). Depends only on the field, so it is computed
    /// once and reused by every box enumeration.
    inv_embedding: OnceLock<Vec<Vec<(BigRational, BigRational)>>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(f = {}, disc = {})", self.f, self.disc)
    }
}

impl NumberField {
    /// Builds the field with its maximal order computed from scratch.
    /// Supports degrees up to 6.
    pub fn new_maximal(f: IntPolynomial) -> Result<Arc<Self>, FieldError> {
        Self::validate(&f, 6)?;
        let ord = order::maximal_order_basis(&f)?;
        Self::build(f, ord.basis, ord.index)
    }

    /// Builds a field whose power basis is already an integral basis, such as
    /// the cosine rings of cyclotomic fields. The claim is verified: the
    /// construction fails if the equation order turns out to be non-maximal.
    /// Supports degrees up to 8.
    pub fn with_maximal_power_basis(f: IntPolynomial) -> Result<Arc<Self>, FieldError> {
        Self::validate(&f, 8)?;
        let ord = order::maximal_order_basis(&f)?;
        if !ord.index.is_one() {
            return Err(FieldError::PowerBasisNotMaximal);
        }
        Self::build(f, ord.basis, ord.index)
    }

    fn validate(f: &IntPolynomial, max_degree: usize) -> Result<(), FieldError> {
        if f.is_zero() || !f.is_monic() {
            return Err(FieldError::NotMonic);
        }
        let d = f.degree();
        if d == 0 || d > max_degree {
            return Err(FieldError::DegreeTooLarge { degree: d, max: max_degree });
        }
        if !is_irreducible(f) {
            return Err(FieldError::NotIrreducible);
        }
        Ok(())
    }

    fn build(f: IntPolynomial, basis: Vec<Vec<BigRational>>, index: BigInt) -> Result<Arc<Self>, FieldError> {
        let d = f.degree();
        let roots = isolate_real_roots(&f);
        if roots.len() != d {
            return Err(FieldError::NotTotallyReal);
        }

        let bt: Vec<Vec<BigRational>> =
            (0..d).map(|i| (0..d).map(|j| basis[j][i].clone()).collect()).collect();
        let pw_to_int = mat_inverse(&bt).expect("integral basis matrix is invertible");
        let mult_table = order::integral_mult_table(&f, &basis);

        let tr_basis: Vec<BigInt> = (0..d)
            .map(|i| (0..d).map(|j| mult_table[i][j][j].clone()).sum())
            .collect();
        let mut gram = vec![vec![BigInt::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                gram[i][j] = (0..d).map(|k| &mult_table[i][j][k] * &tr_basis[k]).sum();
            }
        }
        let disc = bareiss_determinant(gram.clone());
        let disc_f = discriminant(&f);
        assert_eq!(
            &disc * &index * &index,
            disc_f,
            "field discriminant, index, and polynomial discriminant are consistent"
        );
        assert!(disc.is_positive(), "totally real fields have positive discriminant");
        let rem4 = disc.mod_floor(&BigInt::from(4));
        assert!(rem4.is_zero() || rem4.is_one(), "discriminant is 0 or 1 modulo 4");

        // Newton's identities give the traces of the powers of alpha.
        let a = |j: usize| f.coeff(j);
        let mut tr_pow = vec![BigInt::zero(); d];
        tr_pow[0] = BigInt::from(d as u64);
        for k in 1..d {
            let mut acc = -(BigInt::from(k as u64) * a(d - k));
            for i in 1..k {
                acc -= a(d - i) * &tr_pow[k - i];
            }
            tr_pow[k] = acc;
        }

        let roots: Vec<RootInterval> = roots
            .iter()
            .map(|iv| refine_root(&f, iv, &pow2_inv(BASE_PREC as u32)))
            .collect();
        let basis_emb = Self::compute_basis_emb(&basis, &roots, BASE_PREC);
        let f_rat = RatPolynomial::from_int(&f);

        Ok(Arc::new(NumberField {
            f,
            f_rat,
            degree: d,
            basis,
            pw_to_int,
            index,
            disc,
            tr_pow,
            tr_basis,
            gram,
            mult_table,
            emb: RwLock::new(EmbCache { prec: BASE_PREC, roots, basis_emb }),
            squares2: OnceLock::new(),
            ldlt_gram: OnceLock::new(),
            inv_embedding: OnceLock::new(),
        }))
    }

    fn compute_basis_emb(
        basis: &[Vec<BigRational>],
        roots: &[RootInterval],
        prec: u64,
    ) -> Vec<Vec<DyInterval>> {
        roots
            .iter()
            .map(|iv| {
                let x = DyInterval::from_rational_pair(&iv.lo, &iv.hi, prec + GUARD_BITS);
                basis.iter().map(|b| eval_interval(b, &x, prec + GUARD_BITS)).collect()
            })
            .collect()
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    /// Index of the equation order in the maximal order.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// Integral basis rows over the power basis, first row 1.
    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    /// Gram matrix of the trace form on the integral basis.
    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    /// Pivoted LDL^T factorization of the trace Gram matrix (see
    /// [`linalg::ldlt_pivoted`]), computed once and cached.  The trace form
    /// is positive definite on a totally real field, so every diagonal entry
    /// of `D` is positive.
    pub(crate) fn gram_ldlt(&self) -> &(Vec<Vec<BigRational>>, Vec<BigRational>, Vec<usize>) {
        self.ldlt_gram.get_or_init(|| {
            let g: Vec<Vec<BigRational>> = self
                .gram
                .iter()
                .map(|row| row.iter().map(|v| BigRational::from(v.clone())).collect())
                .collect();
            crate::numfield::linalg::ldlt_pivoted(&g)
        })
    }

    /// Traces of the integral basis elements.
    pub fn basis_traces(&self) -> &[BigInt] {
        &self.tr_basis
    }

    /// Current isolating intervals of the real embeddings, ascending.
    pub fn embeddings(&self) -> Vec<RootInterval> {
        self.emb.read().unwrap().roots.clone()
    }

    /// Refines the cached embedding data to at least `prec` fractional bits.
    pub fn ensure_prec(&self, prec: u64) {
        {
            let r = self.emb.read().unwrap();
            if r.prec >= prec {
                return;
            }
        }
        let mut w = self.emb.write().unwrap();
        if w.prec >= prec {
            return;
        }
        let target = pow2_inv(prec as u32);
        let roots: Vec<RootInterval> =
            w.roots.iter().map(|iv| refine_root(&self.f, iv, &target)).collect();
        let basis_emb = Self::compute_basis_emb(&self.basis, &roots, prec);
        *w = EmbCache { prec, roots, basis_emb };
    }

    /// Certified enclosures of all embeddings of an element given by power
    /// coordinates, ascending by embedding.
    pub fn embed_power_coords(&self, coords: &[BigRational], prec: u64) -> Vec<DyInterval> {
        self.ensure_prec(prec);
        let cache = self.emb.read().unwrap();
        cache
            .roots
            .iter()
            .map(|iv| {
                let x = DyInterval::from_rational_pair(&iv.lo, &iv.hi, prec + GUARD_BITS);
                eval_interval(coords, &x, prec + GUARD_BITS)
            })
            .collect()
    }

    /// Certified enclosures of all embeddings of an element given by integral
    /// basis coordinates.
    pub fn embed_integral_coords(&self, coords: &[BigInt], prec: u64) -> Vec<DyInterval> {
        self.ensure_prec(prec);
        let cache = self.emb.read().unwrap();
        cache
            .basis_emb
            .iter()
            .map(|row| {
                let mut acc = DyInterval::zero();
                for (y, e) in coords.iter().zip(row) {
                    if !y.is_zero() {
                        let term = e.mul(&DyInterval::point_bigint(y), prec + GUARD_BITS);
                        acc = acc.add(&term, prec + GUARD_BITS);
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact trace of an element in power coordinates.
    pub fn trace_power_coords(&self, coords: &[BigRational]) -> BigRational {
        coords
            .iter()
            .zip(&self.tr_pow)
            .map(|(c, p)| c * BigRational::from_integer(p.clone()))
            .sum()
    }

    /// Exact trace of an element in integral basis coordinates.
    pub fn trace_integral_coords(&self, coords: &[BigInt]) -> BigInt {
        coords.iter().zip(&self.tr_basis).map(|(y, t)| y * t).sum()
    }

    /// Exact norm of an element in power coordinates, via the resultant of
    /// the defining polynomial with the numerator polynomial.
    pub fn norm_power_coords(&self, coords: &[BigRational]) -> BigRational {
        let g = RatPolynomial::new(coords.to_vec());
        if g.is_zero() {
            return BigRational::zero();
        }
        let (num, den) = g.clear_denominators();
        let r = crate::exact::resultant(&self.f, &num);
        BigRational::new(r, den.pow(self.degree as u32))
    }

    /// Product of two elements in power coordinates, reduced mod f and padded
    /// to degree length.
    pub fn mul_power_coords(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let p = RatPolynomial::new(a.to_vec()).mul(&RatPolynomial::new(b.to_vec()));
        let mut c = p.rem_monic(&self.f_rat).coeffs().to_vec();
        c.resize(self.degree, BigRational::zero());
        c
    }

    /// Product of two integral elements in integral basis coordinates.
    pub fn mul_integral_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree;
        let mut out = vec![BigInt::zero(); d];
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..d {
                    if !self.mult_table[i][j][k].is_zero() {
                        out[k] += &ab * &self.mult_table[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Integral basis coordinates of power coordinates, if integral.
    pub fn integral_coords(&self, coords: &[BigRational]) -> Option<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.degree);
        for row in &self.pw_to_int {
            let v: BigRational = row.iter().zip(coords).map(|(a, c)| a * c).sum();
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(out)
    }

    /// Power coordinates of an element given in the integral basis.
    pub fn power_coords_of_integral(&self, coords: &[BigInt]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (y, row) in coords.iter().zip(&self.basis) {
            if !y.is_zero() {
                let yr = BigRational::from_integer(y.clone());
                for (o, b) in out.iter_mut().zip(row) {
                    *o += &yr * b;
                }
            }
        }
        out
    }

    /// Characteristic polynomial of the element with the given power
    /// coordinates (monic, degree d, rational coefficients).
    pub fn char_poly_power_coords(&self, coords: &[BigRational]) -> RatPolynomial {
        let g = RatPolynomial::new(coords.to_vec());
        let m = multiplication_matrix(&self.f, &g);
        matrix_char_poly(&m)
    }

    /// Primitive integer polynomial with positive leading coefficient whose
    /// roots are exactly the distinct embedding values of the element.
    pub fn min_poly_primitive(&self, coords: &[BigRational]) -> IntPolynomial {
        let chi = self.char_poly_power_coords(coords);
        let (int, _) = chi.clear_denominators();
        int.squarefree_part()
    }

    /// Total positivity for power coordinates: certified intervals with an
    /// exact Sturm-count fallback on the characteristic polynomial.
    pub fn is_totally_positive_power(&self, coords: &[BigRational]) -> bool {
        if coords.iter().all(|c| c.is_zero()) {
            return false;
        }
        if coords.iter().skip(1).all(|c| c.is_zero()) {
            return coords[0].is_positive();
        }
        let mut prec = BASE_PREC;
        while prec <= MAX_PREC {
            match self.interval_positivity(&self.embed_power_coords(coords, prec)) {
                Some(v) => return v,
                None => prec *= 2,
            }
        }
        self.sturm_totally_positive(coords)
    }

    /// Total positivity for integral basis coordinates.
    pub fn is_totally_positive_integral(&self, coords: &[BigInt]) -> bool {
        if coords.iter().all(|c| c.is_zero()) {
            return false;
        }
        let mut prec = BASE_PREC;
        while prec <= MAX_PREC {
            match self.interval_positivity(&self.embed_integral_coords(coords, prec)) {
                Some(v) => return v,
                None => prec *= 2,
            }
        }
        self.sturm_totally_positive(&self.power_coords_of_integral(coords))
    }

    fn interval_positivity(&self, embs: &[DyInterval]) -> Option<bool> {
        let mut all_positive = true;
        for e in embs {
            match e.determined_sign() {
                Some(1) => {}
                Some(_) => return Some(false),
                None => all_positive = false,
            }
        }
        if all_positive {
            Some(true)
        } else {
            None
        }
    }

    /// Exact reference decision: all roots of the characteristic polynomial
    /// lie in (0, infinity), counted by Sturm chains.
    pub fn sturm_totally_positive(&self, coords: &[BigRational]) -> bool {
        let g = self.min_poly_primitive(coords);
        sturm_count(&g, &Bound::rational_i64(0), &Bound::PosInf) == g.degree()
    }

    /// Squares in the residue ring O/2O, each residue a 0/1 vector over the
    /// integral basis.
    pub fn squares_mod_2(&self) -> &BTreeSet<Vec<u8>> {
        self.squares2.get_or_init(|| mod2::compute_squares_mod_2(self))
    }
}

/// Integral basis of the maximal order of Q[x]/(f) over the power basis,
/// together with the field discriminant.
pub fn maximal_order(f: &IntPolynomial) -> Result<(Vec<Vec<BigRational>>, BigInt), FieldError> {
    let k = NumberField::new_maximal(f.clone())?;
    Ok((k.basis().to_vec(), k.discriminant().clone()))
}

/// Whether two fields are isomorphic: equal degree and discriminant, and each
/// defining polynomial has a root in the other field (bounded coordinate
/// search).
pub fn is_isomorphic(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    if a.degree() != b.degree() || a.discriminant() != b.discriminant() {
        return false;
    }
    if a.defining_poly() == b.defining_poly() {
        return true;
    }
    find_root_in_field(a.defining_poly(), b).is_some()
        && find_root_in_field(b.defining_poly(), a).is_some()
}

/// The real biquadratic field Q(sqrt(d1), sqrt(d2)) presented by the minimal
/// polynomial of sqrt(d1) + sqrt(d2), with its maximal order.
pub fn compositum_quadratic(d1: i64, d2: i64) -> Result<Arc<NumberField>, FieldError> {
    for d in [d1, d2] {
        if d <= 1 {
            return Err(FieldError::InvalidInput(format!("{} is not squarefree > 1", d)));
        }
        let mut m = d;
        let mut q = 2i64;
        while q * q <= m {
            if m % (q * q) == 0 {
                return Err(FieldError::InvalidInput(format!("{} is not squarefree", d)));
            }
            while m % q == 0 {
                m /= q;
            }
            q += 1;
        }
    }
    if d1 == d2 {
        return Err(FieldError::InvalidInput("the two radicands must be distinct".into()));
    }
    let s = BigInt::from(d1 + d2);
    let diff = BigInt::from(d1 - d2);
    let f = IntPolynomial::new(vec![
        &diff * &diff,
        BigInt::zero(),
        BigInt::from(-2) * s,
        BigInt::zero(),
        BigInt::one(),
    ]);
    NumberField::new_maximal(f)
}

/// Structural compatibility of two field handles: same object or equal
/// presentation.
pub(crate) fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || (a.f == b.f && a.basis == b.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn maximal_order_examples() {
        // x^2 - 5: basis {1, (1+a)/2}, disc 5.
        let (basis, disc) = maximal_order(&IntPolynomial::from_i64(&[-5, 0, 1])).unwrap();
        assert_eq!(disc, BigInt::from(5));
        assert_eq!(basis[0], vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(basis[1], vec![rat(1, 2), rat(1, 2)]);
        // x^2 - 2: power basis, disc 8.
        let (basis, disc) = maximal_order(&IntPolynomial::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(disc, BigInt::from(8));
        assert_eq!(basis[1], vec![rat(0, 1), rat(1, 1)]);
        // x^3 - 4x - 2: squarefree disc 148, power basis maximal.
        let (basis, disc) = maximal_order(&IntPolynomial::from_i64(&[-2, -4, 0, 1])).unwrap();
        assert_eq!(disc, BigInt::from(148));
        assert_eq!(basis[2], vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn rejects_bad_defining_polynomials() {
        // Reducible.
        assert!(matches!(
            NumberField::new_maximal(IntPolynomial::from_i64(&[-1, 0, 1])),
            Err(FieldError::NotIrreducible)
        ));
        // Not totally real.
        assert!(matches!(
            NumberField::new_maximal(IntPolynomial::from_i64(&[1, 0, 1])),
            Err(FieldError::NotTotallyReal)
        ));
        // Not monic.
        assert!(matches!(
            NumberField::new_maximal(IntPolynomial::from_i64(&[-1, 0, 2])),
            Err(FieldError::NotMonic)
        ));
        // Degree cap.
        assert!(matches!(
            NumberField::new_maximal(IntPolynomial::from_i64(&[2, 0, -16, 0, 20, 0, -8, 0, 1])),
            Err(FieldError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn cosine_ring_power_bases_are_verified_maximal() {
        // Conductor 16: x^4 - 4x^2 + 2, disc 2048 = 2^11.
        let k16 = NumberField::with_maximal_power_basis(IntPolynomial::from_i64(&[2, 0, -4, 0, 1]))
            .unwrap();
        assert_eq!(*k16.discriminant(), BigInt::from(2048));
        // Conductor 32: degree 8, disc 2^31.
        let k32 = NumberField::with_maximal_power_basis(IntPolynomial::from_i64(&[
            2, 0, -16, 0, 20, 0, -8, 0, 1,
        ]))
        .unwrap();
        assert_eq!(*k32.discriminant(), BigInt::from(1i64 << 31));
        // x^2 - 5 power basis is not maximal: rejected.
        assert!(matches!(
            NumberField::with_maximal_power_basis(IntPolynomial::from_i64(&[-5, 0, 1])),
            Err(FieldError::PowerBasisNotMaximal)
        ));
    }

    #[test]
    fn trace_and_norm_examples() {
        let k = NumberField::new_maximal(IntPolynomial::from_i64(&[-2, 0, 1])).unwrap();
        // 2 - sqrt(2): trace 4, norm 2.
        let coords = vec![rat(2, 1), rat(-1, 1)];
        assert_eq!(k.trace_power_coords(&coords), rat(4, 1));
        assert_eq!(k.norm_power_coords(&coords), rat(2, 1));
        // Rational n: trace dn, norm n^d.
        let coords = vec![rat(7, 1), rat(0, 1)];
        assert_eq!(k.trace_power_coords(&coords), rat(14, 1));
        assert_eq!(k.norm_power_coords(&coords), rat(49, 1));
    }

    #[test]
    fn trace_norm_in_prime_cosine_ring() {
        // K for p = 5: x^2 + x - 1; 2 - omega has trace 5 and norm 5.
        let k = NumberField::new_maximal(IntPolynomial::from_i64(&[-1, 1, 1])).unwrap();
        let coords = vec![rat(2, 1), rat(-1, 1)];
        assert_eq!(k.trace_power_coords(&coords), rat(5, 1));
        assert_eq!(k.norm_power_coords(&coords), rat(5, 1));
        assert!(k.is_totally_positive_power(&coords));
    }

    #[test]
    fn total_positivity_checks() {
        let k3 = NumberField::new_maximal(IntPolynomial::from_i64(&[-3, 0, 1])).unwrap();
        assert!(k3.is_totally_positive_power(&[rat(2, 1), rat(1, 1)]));
        let k2 = NumberField::new_maximal(IntPolynomial::from_i64(&[-2, 0, 1])).unwrap();
        assert!(!k2.is_totally_positive_power(&[rat(0, 1), rat(1, 1)]));
        // Zero is not totally positive.
        assert!(!k2.is_totally_positive_power(&[rat(0, 1), rat(0, 1)]));
        // An element with an exactly-zero embedding: (1 + sqrt(2))(1 - sqrt(2)) style
        // products stay nonzero, but 0 coordinates short-circuit; test a
        // negative rational too.
        assert!(!k2.is_totally_positive_power(&[rat(-1, 1), rat(0, 1)]));
        // Agreement between the interval path and the exact path.
        for (a, b) in [(3i64, 1i64), (3, -1), (1, 1), (-1, 1), (17, 12), (-17, 12)] {
            let coords = vec![rat(a, 1), rat(b, 1)];
            assert_eq!(
                k2.is_totally_positive_power(&coords),
                k2.sturm_totally_positive(&coords),
                "a = {}, b = {}",
                a,
                b
            );
        }
    }

    #[test]
    fn integral_coordinate_conversion() {
        let k5 = NumberField::new_maximal(IntPolynomial::from_i64(&[-5, 0, 1])).unwrap();
        // (1 + sqrt(5))/2 is integral.
        let phi = vec![rat(1, 2), rat(1, 2)];
        let y = k5.integral_coords(&phi).unwrap();
        assert_eq!(y, vec![BigInt::zero(), BigInt::one()]);
        assert_eq!(k5.power_coords_of_integral(&y), phi);
        // (1 + sqrt(5))/3 is not.
        assert!(k5.integral_coords(&[rat(1, 3), rat(1, 3)]).is_none());
        // Trace via both coordinate systems agrees.
        assert_eq!(k5.trace_power_coords(&phi), BigRational::from_i64(1).unwrap());
        assert_eq!(k5.trace_integral_coords(&y), BigInt::one());
    }

    #[test]
    fn compositum_examples() {
        let k = compositum_quadratic(2, 5).unwrap();
        assert_eq!(k.defining_poly(), &IntPolynomial::from_i64(&[9, 0, -14, 0, 1]));
        assert_eq!(*k.discriminant(), BigInt::from(1600));
        let k = compositum_quadratic(2, 3).unwrap();
        assert_eq!(k.defining_poly(), &IntPolynomial::from_i64(&[1, 0, -10, 0, 1]));
        assert!(compositum_quadratic(5, 5).is_err());
        assert!(compositum_quadratic(2, 8).is_err());
        assert!(compositum_quadratic(2, 1).is_err());
    }

    #[test]
    fn embeddings_are_ascending_and_refinable() {
        let k = NumberField::new_maximal(IntPolynomial::from_i64(&[-1, 1, 1])).unwrap();
        let embs = k.embeddings();
        assert_eq!(embs.len(), 2);
        assert!(embs[0].hi <= embs[1].lo || embs[0].hi <= embs[1].hi);
        k.ensure_prec(200);
        let fine = k.embeddings();
        assert!(fine[0].width() < pow2_inv(199));
    }
}
