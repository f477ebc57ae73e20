//! Maximal order computation: discriminant factoring and p-maximalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::{hnf_row_basis, kernel_mod_p};
use super::FieldError;
use crate::exact::{discriminant, mat_inverse, IntPolynomial, RatPolynomial};

pub(crate) struct OrderResult {
    /// Rows express the integral basis over the power basis, in canonical
    /// lower-triangular form (first row is 1).
    pub basis: Vec<Vec<BigRational>>,
    /// Index of the equation order Z[alpha] inside the maximal order.
    pub index: BigInt,
}

/// Computes a basis of the maximal order of Q[x]/(f) over the power basis.
///
/// `f` must be monic, irreducible, and totally real; the caller has already
/// validated this. Fails only when the square part of disc(f) cannot be
/// certified by trial division up to 10^7 plus primality analysis of the
/// cofactor.
pub(crate) fn maximal_order_basis(f: &IntPolynomial) -> Result<OrderResult, FieldError> {
    let d = f.degree();
    let disc_f = discriminant(f);
    assert!(!disc_f.is_zero(), "irreducible polynomial has nonzero discriminant");
    let primes = square_prime_divisors(&disc_f)?;
    let mut basis = identity_rational(d);
    let mut index = BigInt::one();
    for p in primes {
        let mut guard = 0usize;
        while let Some((nb, gain)) = p_maximalize(f, &basis, p) {
            basis = nb;
            index *= gain;
            guard += 1;
            assert!(guard < 200, "p-maximalization failed to terminate");
        }
    }
    let basis = canonical_basis_form(&basis);
    Ok(OrderResult { basis, index })
}

pub(crate) fn identity_rational(d: usize) -> Vec<Vec<BigRational>> {
    let mut m = vec![vec![BigRational::zero(); d]; d];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

/// Rewrites a full-rank rational lattice basis into a canonical form: rows
/// sorted by leading power of alpha, lower triangular with positive diagonal
/// and reduced off-diagonal entries. For an order this makes the first row 1.
pub(crate) fn canonical_basis_form(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let d = rows.len();
    let mut den = BigInt::one();
    for row in rows {
        for x in row {
            den = den.lcm(x.denom());
        }
    }
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut r: Vec<BigInt> = row.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
            r.reverse();
            r
        })
        .collect();
    let h = hnf_row_basis(int_rows, d);
    // Row i of h has its pivot in column i of the reversed coordinates, i.e.
    // leading power alpha^{d-1-i}; un-reverse and re-order ascending.
    let mut out = vec![Vec::new(); d];
    for (i, row) in h.into_iter().enumerate() {
        let mut r: Vec<BigInt> = row;
        r.reverse();
        out[d - 1 - i] = r
            .into_iter()
            .map(|x| BigRational::new(x, den.clone()))
            .collect();
    }
    out
}

/// One Round-2 enlargement step at the prime `p`: returns the enlarged basis
/// and the index gain, or `None` when the order is already p-maximal.
fn p_maximalize(f: &IntPolynomial, basis: &[Vec<BigRational>], p: u64) -> Option<(Vec<Vec<BigRational>>, BigInt)> {
    let d = f.degree();
    let table = integral_mult_table(f, basis);
    let pb = BigInt::from(p);
    // Structure constants of O/pO as u64 entries.
    let tp: Vec<Vec<Vec<u64>>> = table
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(|x| bigint_mod_u64(x, p)).collect()).collect())
        .collect();

    // Matrix of the p-power map on O/pO (columns are images of basis vectors).
    let mut frob = vec![vec![0u64; d]; d];
    for i in 0..d {
        let mut e = vec![0u64; d];
        e[i] = 1;
        let img = pow_mod_p(&e, p, &tp, p);
        for r in 0..d {
            frob[r][i] = img[r];
        }
    }
    // Iterate until p^e >= d so the kernel is the full nilradical.
    let mut m = frob.clone();
    let mut pe = p as u128;
    while pe < d as u128 {
        m = mat_mul_mod_p(&m, &frob, p);
        pe *= p as u128;
    }
    let rad = kernel_mod_p(&m, d, p);
    if rad.is_empty() {
        return None;
    }

    // Radical ideal I_p as a sublattice of O (coordinates in the given basis).
    let mut rad_rows: Vec<Vec<BigInt>> = rad
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for i in 0..d {
        let mut row = vec![BigInt::zero(); d];
        row[i] = pb.clone();
        rad_rows.push(row);
    }
    let h = hnf_row_basis(rad_rows, d);

    // Multiplier-ring conditions: y in O/pO belongs to the enlargement iff
    // y * m_r lies in p * I_p for every radical basis row m_r.
    let mut cond: Vec<Vec<u64>> = Vec::with_capacity(d * d);
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(d);
    for i in 0..d {
        let mut col = Vec::with_capacity(d * d);
        for m_r in &h {
            // z = w_i * m_r in O-coordinates.
            let mut z = vec![BigInt::zero(); d];
            for (j, mj) in m_r.iter().enumerate() {
                if mj.is_zero() {
                    continue;
                }
                for k in 0..d {
                    z[k] += mj * &table[i][j][k];
                }
            }
            let s = solve_upper_triangular(&h, &z);
            for x in &s {
                col.push(bigint_mod_u64(x, p));
            }
        }
        cols.push(col);
    }
    for r in 0..d * d {
        cond.push((0..d).map(|i| cols[i][r]).collect());
    }
    let enlargement = kernel_mod_p(&cond, d, p);
    if enlargement.is_empty() {
        return None;
    }
    let dim = enlargement.len();

    // New order: (lifted kernel vectors + p*O) / p, expressed over the power basis.
    let mut rows: Vec<Vec<BigInt>> = enlargement
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    for i in 0..d {
        let mut row = vec![BigInt::zero(); d];
        row[i] = pb.clone();
        rows.push(row);
    }
    let l = hnf_row_basis(rows, d);
    let mut det = BigInt::one();
    for (i, row) in l.iter().enumerate() {
        det *= &row[i];
    }
    let gain = pb.pow(dim as u32);
    assert_eq!(&det * &gain, pb.pow(d as u32), "enlargement index mismatch");

    let prat = BigRational::from_integer(pb);
    let mut nb = vec![vec![BigRational::zero(); d]; d];
    for (r, lrow) in l.iter().enumerate() {
        for j in 0..d {
            let mut acc = BigRational::zero();
            for (k, brow) in basis.iter().enumerate() {
                if !lrow[k].is_zero() {
                    acc += BigRational::from_integer(lrow[k].clone()) * &brow[j];
                }
            }
            nb[r][j] = acc / &prat;
        }
    }
    Some((nb, gain))
}

/// Multiplication table of an order: entry `[i][j]` holds the coordinates of
/// `b_i * b_j` in the basis itself; integrality is exactly the closure of the
/// order under multiplication.
///
/// # Panics
/// Panics if the rows do not span a multiplicatively closed lattice.
pub(crate) fn integral_mult_table(f: &IntPolynomial, basis: &[Vec<BigRational>]) -> Vec<Vec<Vec<BigInt>>> {
    let d = f.degree();
    let fr = RatPolynomial::from_int(f);
    let bt: Vec<Vec<BigRational>> = (0..d).map(|i| (0..d).map(|j| basis[j][i].clone()).collect()).collect();
    let pw_to_int = mat_inverse(&bt).expect("basis matrix is invertible");
    let polys: Vec<RatPolynomial> = basis.iter().map(|r| RatPolynomial::new(r.clone())).collect();
    let mut table = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..=i {
            let prod = polys[i].mul(&polys[j]).rem_monic(&fr);
            let mut c = prod.coeffs().to_vec();
            c.resize(d, BigRational::zero());
            let y: Vec<BigInt> = pw_to_int
                .iter()
                .map(|row| {
                    let v: BigRational = row.iter().zip(&c).map(|(a, b)| a * b).sum();
                    assert!(v.is_integer(), "order is not closed under multiplication");
                    v.to_integer()
                })
                .collect();
            table[i][j] = y.clone();
            table[j][i] = y;
        }
    }
    table
}

fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn mat_mul_mod_p(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            let aik = a[i][k] as u128;
            for j in 0..n {
                c[i][j] = ((c[i][j] as u128 + aik * b[k][j] as u128) % p as u128) as u64;
            }
        }
    }
    c
}

fn mul_vec_mod_p(u: &[u64], v: &[u64], tp: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    let d = u.len();
    let mut out = vec![0u128; d];
    for i in 0..d {
        if u[i] == 0 {
            continue;
        }
        for j in 0..d {
            if v[j] == 0 {
                continue;
            }
            let uv = (u[i] as u128 * v[j] as u128) % p as u128;
            for k in 0..d {
                out[k] = (out[k] + uv * tp[i][j][k] as u128) % p as u128;
            }
        }
    }
    out.into_iter().map(|x| x as u64).collect()
}

fn pow_mod_p(u: &[u64], exp: u64, tp: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    // One in O/pO is the first canonical basis vector only for the power
    // basis; exponentiate by repeated squaring starting from the base itself.
    let mut result: Option<Vec<u64>> = None;
    let mut base = u.to_vec();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => mul_vec_mod_p(&r, &base, tp, p),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mul_vec_mod_p(&base, &base, tp, p);
        }
    }
    result.expect("exponent is positive")
}

/// Solves s * H = z for an upper-triangular row basis H by forward
/// substitution; all divisions are exact because z lies in the row lattice.
fn solve_upper_triangular(h: &[Vec<BigInt>], z: &[BigInt]) -> Vec<BigInt> {
    let d = z.len();
    let mut s = vec![BigInt::zero(); d];
    for k in 0..d {
        let mut acc = z[k].clone();
        for l in 0..k {
            acc -= &s[l] * &h[l][k];
        }
        let (q, r) = acc.div_rem(&h[k][k]);
        assert!(r.is_zero(), "vector lies outside the lattice");
        s[k] = q;
    }
    s
}

/// All primes whose square divides `n`, certified. Trial division runs over
/// ascending candidates until the cube of the candidate exceeds the remaining
/// cofactor (so the cofactor has at most two prime factors), capped at 10^7.
/// The cofactor is then settled by a perfect-square test and a Miller-Rabin
/// primality certificate.
pub(crate) fn square_prime_divisors(n: &BigInt) -> Result<Vec<u64>, FieldError> {
    let mut m = n.abs();
    if m.is_zero() {
        return Err(FieldError::DiscFactoring("zero discriminant".into()));
    }
    let mut out = Vec::new();
    // Fast path in u128 when the value fits.
    if let Some(mut v) = m.to_u128() {
        let mut d: u128 = 2;
        while d * d * d <= v {
            if d > 10_000_000 {
                return Err(FieldError::DiscFactoring(format!(
                    "trial division exhausted at 10^7 with cofactor {}",
                    v
                )));
            }
            if v % d == 0 {
                let mut e = 0u32;
                while v % d == 0 {
                    v /= d;
                    e += 1;
                }
                if e >= 2 {
                    out.push(d as u64);
                }
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if v > 1 {
            let r = v.isqrt();
            if r * r == v {
                let p = u64::try_from(r).map_err(|_| FieldError::DiscFactoring("square cofactor root exceeds u64".into()))?;
                out.push(p);
            } else if !is_probable_prime_u128(v) {
                // Two distinct primes, each to the first power: no square divisor.
            }
        }
        return Ok(out);
    }
    // General path in BigInt.
    let mut d = BigInt::from(2);
    let cap = BigInt::from(10_000_000u64);
    loop {
        if (&d * &d * &d) > m {
            break;
        }
        if d > cap {
            return Err(FieldError::DiscFactoring(format!(
                "trial division exhausted at 10^7 with cofactor {}",
                m
            )));
        }
        if m.is_multiple_of(&d) {
            let mut e = 0u32;
            while m.is_multiple_of(&d) {
                m /= &d;
                e += 1;
            }
            if e >= 2 {
                out.push(d.to_u64().expect("divisor below 10^7"));
            }
        }
        d += if d == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    if m > BigInt::one() {
        let r = m.sqrt();
        if &r * &r == m {
            let p = r.to_u64().ok_or_else(|| FieldError::DiscFactoring("square cofactor root exceeds u64".into()))?;
            out.push(p);
        } else if m >= BigInt::parse_bytes(b"3317044064679887385961981", 10).unwrap() {
            return Err(FieldError::DiscFactoring(
                "cofactor too large for deterministic primality analysis".into(),
            ));
        }
        // Prime, or a product of two distinct primes: either way no square divisor.
    }
    Ok(out)
}

/// Deterministic Miller-Rabin for values below 3.3 * 10^24 using the first
/// thirteen prime bases.
pub(crate) fn is_probable_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let nb = BigInt::from(n);
    let one = BigInt::one();
    let nm1 = &nb - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let q = &nm1 >> s;
    'bases: for &a in &[2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&q, &nb);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), &nb);
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_divisors_of_small_numbers() {
        assert_eq!(square_prime_divisors(&BigInt::from(20)).unwrap(), vec![2]);
        assert_eq!(square_prime_divisors(&BigInt::from(148)).unwrap(), vec![2]);
        assert_eq!(square_prime_divisors(&BigInt::from(37)).unwrap(), Vec::<u64>::new());
        assert_eq!(square_prime_divisors(&BigInt::from(-2000)).unwrap(), vec![2, 5]);
        assert_eq!(square_prime_divisors(&BigInt::from(1usize << 31)).unwrap(), vec![2]);
        // Product of two large distinct primes: certified square-free.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert_eq!(square_prime_divisors(&n).unwrap(), Vec::<u64>::new());
        // Square of a large prime.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64);
        assert_eq!(square_prime_divisors(&n).unwrap(), vec![1_000_003]);
    }

    #[test]
    fn primality_certificate() {
        assert!(is_probable_prime_u128(2));
        assert!(is_probable_prime_u128(1_000_003));
        assert!(!is_probable_prime_u128(1_000_001)); // 101 * 9901
        assert!(is_probable_prime_u128(2_147_483_647));
    }

    #[test]
    fn golden_ratio_order_is_enlarged() {
        let f = IntPolynomial::from_i64(&[-5, 0, 1]);
        let r = maximal_order_basis(&f).unwrap();
        assert_eq!(r.index, BigInt::from(2));
        // Canonical basis: {1, (1+alpha)/2}.
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(r.basis[0], vec![BigRational::one(), BigRational::zero()]);
        assert_eq!(r.basis[1], vec![half.clone(), half]);
    }

    #[test]
    fn already_maximal_orders_are_kept() {
        for coeffs in [vec![-2i64, 0, 1], vec![-2, -4, 0, 1], vec![2, 0, -4, 0, 1]] {
            let f = IntPolynomial::from_i64(&coeffs);
            let r = maximal_order_basis(&f).unwrap();
            assert_eq!(r.index, BigInt::one(), "f = {:?}", coeffs);
            assert_eq!(r.basis, identity_rational(f.degree()));
        }
    }

    #[test]
    fn index_two_cubic() {
        // x^3 - x^2 - 2x - 8 has index 2 (the classical Dedekind example).
        let f = IntPolynomial::from_i64(&[-8, -2, -1, 1]);
        let r = maximal_order_basis(&f).unwrap();
        assert_eq!(r.index, BigInt::from(2));
    }
}
