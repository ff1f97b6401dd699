#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pentaparity::{Gf2Poly, IntPoly};
use rand::Rng;

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n), size m + n.
pub fn sylvester(a: &IntPoly, b: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=m {
            row[i + k] = a.coeff(m - k);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for k in 0..=n {
            row[i + k] = b.coeff(n - k);
        }
        rows.push(row);
    }
    rows
}

pub fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    bareiss_det(sylvester(a, b))
}

/// Companion matrix of a monic polynomial; its eigenvalues are the roots.
pub fn companion(f: &IntPoly) -> Vec<Vec<BigInt>> {
    let d = f.degree().unwrap();
    let mut c = vec![vec![BigInt::zero(); d]; d];
    for i in 1..d {
        c[i][i - 1] = BigInt::one();
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[d - 1] = -f.coeff(i);
    }
    c
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// `g(C)` for a square matrix `C`, by Horner's rule.
pub fn eval_at_matrix(g: &IntPoly, c: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = c.len();
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for coeff in g.coeffs().iter().rev() {
        acc = mat_mul(&acc, c);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += coeff;
        }
    }
    acc
}

/// Uniform binary polynomial of exact degree `d`.
pub fn random_poly<R: Rng>(rng: &mut R, d: usize) -> Gf2Poly {
    let words = d / 64 + 1;
    let mut w: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
    let top = d % 64;
    let last = w.last_mut().unwrap();
    *last &= if top == 63 {
        u64::MAX
    } else {
        (1u64 << (top + 1)) - 1
    };
    *last |= 1 << top;
    Gf2Poly::from_words(w)
}

/// Random squarefree polynomial of exact degree `d`.
pub fn random_squarefree<R: Rng>(rng: &mut R, d: usize) -> Gf2Poly {
    loop {
        let f = random_poly(rng, d);
        if f.is_squarefree().unwrap() {
            return f;
        }
    }
}

pub fn random_int_poly<R: Rng>(rng: &mut R, d: usize, bound: i64) -> IntPoly {
    loop {
        let coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
        let p = IntPoly::from_i64(&coeffs);
        if p.degree() == Some(d) {
            return p;
        }
    }
}

/// Random polynomial with degree drawn uniformly from `lo..=hi`.
pub fn random_poly_between<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Gf2Poly {
    let d = rng.gen_range(lo..=hi);
    random_poly(rng, d)
}
