//! Integer and modular linear algebra for order computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of an integer matrix with `cols` columns and
/// full column rank: returns a `cols x cols` upper-triangular basis of the row
/// lattice with positive diagonal entries and reduced off-diagonal entries.
///
/// # Panics
/// Panics if the rows do not span a full-rank lattice.
pub fn hnf_row_basis(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut rows = rows;
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(cols);
    for col in 0..cols {
        // Reduce all remaining rows against each other in this column by
        // Euclidean steps until one nonzero entry remains.
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
            if nz.is_empty() {
                panic!("rows do not have full column rank at column {}", col);
            }
            if nz.len() == 1 {
                break;
            }
            // Pick the row with the smallest nonzero |entry| as pivot.
            nz.sort_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let p = nz[0];
            for &r in &nz[1..] {
                let q = rational_round(&rows[r][col], &rows[p][col]);
                if !q.is_zero() {
                    for c in col..cols {
                        let t = &q * &rows[p][c];
                        rows[r][c] -= t;
                    }
                }
            }
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        }
        let pivot_idx = (0..rows.len()).find(|&r| !rows[r][col].is_zero()).unwrap();
        let mut pivot = rows.swap_remove(pivot_idx);
        if pivot[col].is_negative() {
            for x in pivot.iter_mut() {
                *x = -x.clone();
            }
        }
        basis.push(pivot);
    }
    // Off-diagonal reduction: entries above each pivot into [0, pivot).
    for i in (0..cols).rev() {
        for j in 0..i {
            let q = basis[j][i].div_floor(&basis[i][i]);
            if !q.is_zero() {
                let pivot_row = basis[i].clone();
                for c in 0..cols {
                    let t = &q * &pivot_row[c];
                    basis[j][c] -= t;
                }
            }
        }
    }
    basis
}

/// Quotient rounded to nearest (ties toward floor), used to shrink entries.
fn rational_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // r in [0, |b|): round up when 2r >= |b|.
    if BigInt::from(2) * &r >= b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Kernel basis of a matrix over `F_p` (row count x col count), vectors of
/// length `cols`, entries in `[0, p)`.
pub fn kernel_mod_p(mat: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let mut m: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let mut pr = None;
        for r in rank..rows {
            if m[r][col] != 0 {
                pr = Some(r);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..cols {
            m[rank][c] = mulmod(m[rank][c], inv, p);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..cols {
                    let t = mulmod(f, m[rank][c], p);
                    m[r][c] = (m[r][c] + p - t) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_cols.push(col);
        rank += 1;
    }
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            // pivot row r: x_pc + sum over later cols = 0
            let coeff = m[r][free];
            if coeff != 0 {
                v[pc] = (p - coeff) % p;
            }
        }
        kernel.push(v);
    }
    kernel
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime, a nonzero mod p.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        let t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

/// Exact LDL^T decomposition of a symmetric positive-definite rational
/// matrix: returns `(l, d)` with unit-lower-triangular `l` and positive
/// diagonal `d` such that `G = L D L^T`.
///
/// # Panics
/// Panics if the matrix is not positive definite.
/// Symmetrically pivoted LDL^T factorization of a positive definite rational
/// matrix: returns `(L, D, perm)` with `L` unit lower triangular, `D`
/// positive, and `G[perm[a]][perm[b]] = (L diag(D) L^T)[a][b]`.
///
/// Pivots are chosen greedily as the smallest remaining Schur-complement
/// diagonal, which pushes the large weights toward the high indices.  Lattice
/// enumeration assigns high indices first, so those levels see the most
/// constraining weights and the search tree stays thin.
///
/// # Panics
/// Panics if the matrix is not positive definite.
pub fn ldlt_pivoted(
    g: &[Vec<BigRational>],
) -> (Vec<Vec<BigRational>>, Vec<BigRational>, Vec<usize>) {
    let n = g.len();
    // Schur complement over original indices, shrinking by one pivot a step.
    let mut s: Vec<Vec<BigRational>> = g.to_vec();
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    // Multiplier of elimination step k against original row i.
    let mut mult = vec![vec![BigRational::zero(); n]; n];
    for k in 0..n {
        let p = (0..n)
            .filter(|&i| !used[i])
            .min_by(|&a, &b| s[a][a].cmp(&s[b][b]))
            .expect("pivot exists");
        assert!(s[p][p].is_positive(), "matrix is not positive definite");
        used[p] = true;
        perm.push(p);
        let dk = s[p][p].clone();
        for i in 0..n {
            if !used[i] {
                mult[i][k] = &s[i][p] / &dk;
            }
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            for j in 0..n {
                if !used[j] {
                    let t = &mult[i][k] * &s[j][p];
                    s[i][j] -= t;
                }
            }
        }
        d.push(dk);
    }
    let mut l = vec![vec![BigRational::zero(); n]; n];
    for a in 0..n {
        l[a][a] = BigRational::one();
        for b in 0..a {
            l[a][b] = mult[perm[a]][b].clone();
        }
    }
    (l, d, perm)
}
