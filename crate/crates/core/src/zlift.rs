//! Integer lifts of binary polynomials and the Stickelberger-Swan parity law.
//!
//! For a squarefree binary `f` of degree `m` with monic integer lift `F`,
//! `D(F) = 1 or 5 (mod 8)`, and the number of irreducible factors `r` of `f`
//! satisfies `r = m (mod 2)` exactly when `D(F) = 1 (mod 8)`.
//!
//! Discriminants are computed exactly with big integers and only reduced at
//! the end; elimination directly mod 8 would run into zero divisors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

/// Parity of a factor count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The engine that produced a [`ParityVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Berlekamp factor counting over GF(2).
    Oracle,
    /// Exact subresultant discriminant of the monic lift.
    DiscriminantResultant,
    /// Power-sum evaluation of the discriminant of an auxiliary lift.
    NewtonSums,
    /// Closed-form congruence conditions on `(m, n)`.
    Theorem,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::DiscriminantResultant => "discriminant-resultant",
            Method::NewtonSums => "newton-sums",
            Method::Theorem => "theorem",
        }
    }

    pub fn is_discriminant_path(self) -> bool {
        matches!(self, Method::DiscriminantResultant | Method::NewtonSums)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Even/odd verdict on the number of irreducible factors. Discriminant paths
/// also record the residue `D mod 8`, always 1 or 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityVerdict {
    pub parity: Parity,
    pub method: Method,
    pub discriminant_mod8: Option<u8>,
}

impl ParityVerdict {
    /// Applies the Stickelberger-Swan law to a residue for a polynomial of
    /// the given degree.
    pub fn from_discriminant(degree: usize, residue: u8, method: Method) -> Self {
        debug_assert!(residue == 1 || residue == 5, "residue {residue}");
        let same = Parity::of(degree);
        Self {
            parity: if residue == 1 { same } else { same.flip() },
            method,
            discriminant_mod8: Some(residue),
        }
    }
}

/// Dense integer polynomial; index `i` holds the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sum of `c * x^e` over the given terms; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Exponents and values of the nonzero coefficients, lowest first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// Coefficient reversal `x^deg F * F(1/x)`.
    pub fn reciprocal(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Reduction of every coefficient mod 2.
    pub fn reduce_mod2(&self) -> Gf2Poly {
        Gf2Poly::from_exponents(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_odd())
                .map(|(i, _)| i),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn div_exact_scalar(&self, d: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q * b + r`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lc = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut steps_left = (da - db + 1) as u32;
        while r.len() > db {
            let d = r.len() - 1;
            let lr = r[d].clone();
            for c in r.iter_mut() {
                *c *= lc;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[j + d - db] -= &lr * bj;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps_left -= 1;
        }
        if steps_left > 0 {
            let scale = num_traits::pow(lc.clone(), steps_left as usize);
            for c in r.iter_mut() {
                *c *= &scale;
            }
        }
        Self::new(r)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if !first || c.is_negative() {
                f.write_str(sign)?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// The integer polynomial with 0/1 coefficients reducing to `f`.
pub fn monic_lift(f: &Gf2Poly) -> Result<IntPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(IntPoly::from_terms(
        f.exponents().into_iter().map(|e| (e, 1)),
    ))
}

fn pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

/// Exact resultant over the integers by the subresultant remainder sequence.
/// Agrees with the Sylvester determinant, so
/// `resultant(a, b) = (-1)^(deg a * deg b) * resultant(b, a)`.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if db == 0 {
        return Ok(pow(b.leading().unwrap(), da));
    }
    if da == 0 {
        return Ok(pow(a.leading().unwrap(), db));
    }

    let mut negate = false;
    let (mut a, mut b) = if da >= db {
        (a.clone(), b.clone())
    } else {
        negate = da % 2 == 1 && db % 2 == 1;
        (b.clone(), a.clone())
    };
    let (ca, cb) = (a.content(), b.content());
    let scale = pow(&ca, b.degree().unwrap()) * pow(&cb, a.degree().unwrap());
    a = a.div_exact_scalar(&ca);
    b = b.div_exact_scalar(&cb);

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        b = r.div_exact_scalar(&(&g * pow(&h, delta)));
        g = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let (q, rem) = pow(&g, delta).div_rem(&pow(&h, delta - 1));
            debug_assert!(rem.is_zero());
            q
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let (q, rem) = pow(b.leading().unwrap(), da).div_rem(&pow(&h, da - 1));
            debug_assert!(rem.is_zero());
            let res = scale * q;
            return Ok(if negate { -res } else { res });
        }
    }
}

/// Exact discriminant `(-1)^(m(m-1)/2) * R(F, F')` of a monic `F` of degree `m`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let m = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(m) => m,
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    // the derivative keeps degree m - 1: its leading coefficient is m
    let r = resultant(f, &f.derivative())?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -r } else { r })
}

/// `D(F) mod 8`, in `0..8`.
pub fn discriminant_mod8(f: &IntPoly) -> Result<u8> {
    let d = discriminant(f)?;
    Ok(d.mod_floor(&BigInt::from(8)).try_into().unwrap())
}

/// Parity of the factor count of `f` via the exact discriminant of its lift.
pub fn swan_parity(f: &Gf2Poly) -> Result<ParityVerdict> {
    if !f.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    let lift = monic_lift(f)?;
    let residue = discriminant_mod8(&lift)?;
    Ok(ParityVerdict::from_discriminant(
        f.degree().unwrap(),
        residue,
        Method::DiscriminantResultant,
    ))
}
