//! Ground-truth factor counting over GF(2).
//!
//! The primary counter never produces factors. For squarefree `f` of degree
//! `d`, the number of distinct irreducible factors is the dimension of the
//! fixed space of the Frobenius map `c -> c^2` on `GF(2)[x]/(f)`, i.e.
//! `d - rank(Q - I)`. General inputs are first split by squarefree
//! decomposition.

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::zlift::{Method, Parity, ParityVerdict};

/// Irreducible factor counts of a binary polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorCount {
    /// Number of pairwise distinct irreducible factors.
    pub distinct: usize,
    /// Number of irreducible factors counted with multiplicity.
    pub total: usize,
}

impl FactorCount {
    pub fn parity(&self) -> Parity {
        Parity::of(self.total)
    }
}

fn require_nonconstant(f: &Gf2Poly) -> Result<usize> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(d) => Ok(d),
    }
}

/// Rank over GF(2) of a set of bit rows, each `width` bits wide.
fn rank(mut rows: Vec<Vec<u64>>, width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut().filter(|row| row[w] & bit != 0) {
            // columns before `col` are already clear in both rows
            for (a, b) in row[w..].iter_mut().zip(&pivot_row[w..]) {
                *a ^= b;
            }
        }
        rank += 1;
    }
    rank
}

/// Number of distinct irreducible factors of a squarefree `f`, from the
/// nullity of `Q - I`.
pub fn berlekamp_nullity(f: &Gf2Poly) -> Result<usize> {
    let d = require_nonconstant(f)?;
    let width = d.div_ceil(64);
    let x2 = Gf2Poly::monomial(2);
    let mut power = Gf2Poly::one();
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        // row i: x^(2i) mod f, minus the identity
        let mut row = power.words().to_vec();
        row.resize(width, 0);
        row[i / 64] ^= 1 << (i % 64);
        rows.push(row);
        power = power.mul_mod(&x2, f)?;
    }
    Ok(d - rank(rows, d))
}

/// Squarefree decomposition: pairwise coprime squarefree `g_i` with
/// multiplicities `e_i` such that `f = prod g_i^e_i`.
pub fn squarefree_decomposition(f: &Gf2Poly) -> Result<Vec<(Gf2Poly, usize)>> {
    require_nonconstant(f)?;
    let mut out = Vec::new();
    decompose(f, 1, &mut out)?;
    Ok(out)
}

fn exact_div(a: &Gf2Poly, b: &Gf2Poly) -> Result<Gf2Poly> {
    let (q, r) = a.div_rem(b)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

fn decompose(f: &Gf2Poly, scale: usize, out: &mut Vec<(Gf2Poly, usize)>) -> Result<()> {
    // gcd(f, f') drops every multiplicity by one, except those divisible by 2
    let mut repeated = f.gcd(&f.derivative())?;
    let mut run = exact_div(f, &repeated)?;
    let mut multiplicity = 0;
    while run.degree().is_some_and(|d| d > 0) {
        let next = repeated.gcd(&run)?;
        let factor = exact_div(&run, &next)?;
        repeated = exact_div(&repeated, &next)?;
        run = next;
        multiplicity += 1;
        if factor.degree().is_some_and(|d| d > 0) {
            out.push((factor, multiplicity * scale));
        }
    }
    // what remains is a perfect square in characteristic 2
    if repeated.degree().is_some_and(|d| d > 0) {
        let root = repeated
            .sqrt()
            .expect("residual of squarefree decomposition is a square");
        decompose(&root, scale * 2, out)?;
    }
    Ok(())
}

pub fn count_irreducible_factors(f: &Gf2Poly) -> Result<FactorCount> {
    require_nonconstant(f)?;
    let mut count = FactorCount {
        distinct: 0,
        total: 0,
    };
    for (g, e) in squarefree_decomposition(f)? {
        let k = berlekamp_nullity(&g)?;
        count.distinct += k;
        count.total += k * e;
    }
    Ok(count)
}

fn prime_divisors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Rabin's test: `x^(2^d) = x mod f`, and `gcd(x^(2^(d/q)) - x, f) = 1` for
/// every prime `q | d`.
pub fn is_irreducible(f: &Gf2Poly) -> Result<bool> {
    let d = require_nonconstant(f)?;
    let x = Gf2Poly::x().rem(f)?;
    let checkpoints: Vec<usize> = prime_divisors(d).into_iter().map(|q| d / q).collect();
    let mut power = x.clone();
    for k in 1..=d {
        power = power.square_mod(f)?;
        if checkpoints.contains(&k) && !(&power + &x).gcd(f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(power == x)
}

pub fn parity_of_factor_count(f: &Gf2Poly) -> Result<ParityVerdict> {
    let count = count_irreducible_factors(f)?;
    Ok(ParityVerdict {
        parity: count.parity(),
        method: Method::Oracle,
        discriminant_mod8: None,
    })
}

/// Independent counting routes used to validate the Berlekamp counter.
pub mod cross_check {
    use super::*;

    /// Distinct-degree factorization of a squarefree `f`: for each `i`,
    /// `gcd(x^(2^i) - x, f)` collects the product of the degree-`i` factors.
    pub fn distinct_degree_count(f: &Gf2Poly) -> Result<usize> {
        require_nonconstant(f)?;
        let mut rest = f.clone();
        let mut power = Gf2Poly::x();
        let mut count = 0;
        let mut i = 1;
        while rest.degree().unwrap() >= 2 * i {
            power = power.square_mod(&rest)?;
            let g = (&power + &Gf2Poly::x()).gcd(&rest)?;
            let dg = g.degree().unwrap();
            if dg > 0 {
                count += dg / i;
                rest = exact_div(&rest, &g)?;
                power = power.rem(&rest)?;
            }
            i += 1;
        }
        if rest.degree().unwrap() > 0 {
            count += 1;
        }
        Ok(count)
    }
}
