//! Polynomials over the two-element field, packed 64 coefficients per word.
//!
//! Bit `i` of the packed representation is the coefficient of `x^i`. The word
//! vector never carries trailing zero words, so structural equality is
//! polynomial equality and the degree is read off the last word.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A polynomial over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

fn degree_of(words: &[u64]) -> Option<usize> {
    let top = *words.last()?;
    debug_assert_ne!(top, 0);
    Some((words.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize))
}

/// `dst ^= src << shift`, growing `dst` as needed.
fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / WORD;
    let bs = shift % WORD;
    let needed = src.len() + ws + usize::from(bs != 0);
    if dst.len() < needed {
        dst.resize(needed, 0);
    }
    if bs == 0 {
        for (d, &s) in dst[ws..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= s << bs;
            dst[ws + i + 1] ^= s >> (WORD - bs);
        }
    }
}

/// Interleaves the bits of `x` with zeros: bit `i` moves to bit `2i`.
fn spread(x: u32) -> u64 {
    let mut x = u64::from(x);
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// Inverse of [`spread`] on words with every odd bit clear.
fn compact(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x >> 16)) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Self { words }
    }

    /// Builds a polynomial from little-endian coefficient words.
    pub fn from_words(mut words: Vec<u64>) -> Self {
        trim(&mut words);
        Self { words }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Sums the monomials `x^e`; repeated exponents cancel in pairs.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut words = Vec::new();
        for e in exponents {
            if words.len() <= e / WORD {
                words.resize(e / WORD + 1, 0);
            }
            words[e / WORD] ^= 1 << (e % WORD);
        }
        Self::from_words(words)
    }

    /// Exponents of the nonzero terms, highest first.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &w) in self.words.iter().enumerate().rev() {
            let mut w = w;
            while w != 0 {
                let b = WORD - 1 - w.leading_zeros() as usize;
                out.push(i * WORD + b);
                w ^= 1 << b;
            }
        }
        out
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        degree_of(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// `self * x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = Vec::with_capacity(self.words.len() + k / WORD + 1);
        xor_shifted(&mut words, &self.words, k);
        Self::from_words(words)
    }

    /// Squaring is linear in characteristic 2: bit `i` moves to bit `2i`.
    pub fn square(&self) -> Self {
        let mut words = Vec::with_capacity(2 * self.words.len());
        for &w in &self.words {
            words.push(spread(w as u32));
            words.push(spread((w >> 32) as u32));
        }
        Self::from_words(words)
    }

    /// Square root, defined exactly when every odd-indexed coefficient is zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.words.iter().any(|w| w & !EVEN_BITS != 0) {
            return None;
        }
        let words = self
            .words
            .chunks(2)
            .map(|pair| {
                let lo = u64::from(compact(pair[0]));
                let hi = pair.get(1).map_or(0, |&w| u64::from(compact(w)));
                lo | (hi << 32)
            })
            .collect();
        Some(Self::from_words(words))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        let mut q = Vec::new();
        while let Some(dr) = degree_of(&r) {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            xor_shifted(&mut r, &divisor.words, shift);
            if q.len() <= shift / WORD {
                q.resize(shift / WORD + 1, 0);
            }
            q[shift / WORD] |= 1 << (shift % WORD);
            trim(&mut r);
        }
        Ok((Self::from_words(q), Self::from_words(r)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.words.clone();
        while let Some(dr) = degree_of(&r) {
            if dr < dd {
                break;
            }
            xor_shifted(&mut r, &divisor.words, dr - dd);
            trim(&mut r);
        }
        Ok(Self::from_words(r))
    }

    /// Greatest common divisor. Every nonzero binary polynomial is monic, so
    /// the result is canonical.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Formal derivative: only odd exponents survive, each dropping by one.
    pub fn derivative(&self) -> Self {
        Self::from_words(self.words.iter().map(|w| (w >> 1) & EVEN_BITS).collect())
    }

    /// True iff `gcd(f, f') = 1`, i.e. no repeated roots.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative())?.is_one())
    }

    /// `x^deg f * f(1/x)`: the coefficient vector reversed.
    pub fn reciprocal(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if !self.coeff(0) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self::from_exponents(
            self.exponents().into_iter().map(|e| d - e),
        ))
    }

    /// `self * other mod modulus`.
    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self * other).rem(modulus)
    }

    /// `self^2 mod modulus`.
    pub fn square_mod(&self, modulus: &Self) -> Result<Self> {
        self.square().rem(modulus)
    }

    /// Exponent-list form, e.g. `11,5,4,1,0`. The zero polynomial prints as
    /// the empty string.
    pub fn to_exponent_list(&self) -> String {
        self.exponents()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_exponent_list(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let exps = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad exponent {:?}: {e}", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_exponents(exps))
    }

    /// Hex form of the coefficient bitset with the lowest nibble first:
    /// character `k` holds the coefficients of `x^(4k) .. x^(4k+3)`, bit `j`
    /// of the nibble being the coefficient of `x^(4k+j)`.
    pub fn to_hex(&self) -> String {
        let Some(d) = self.degree() else {
            return "0".to_string();
        };
        (0..=d / 4)
            .map(|k| {
                let nib = (self.words[k / 16] >> ((k % 16) * 4)) & 0xF;
                char::from_digit(nib as u32, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty hex string".into(),
            });
        }
        let mut words = vec![0u64; s.len().div_ceil(16)];
        for (k, c) in s.chars().enumerate() {
            let nib = c.to_digit(16).ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: format!("{c:?} is not a hex digit"),
            })?;
            words[k / 16] |= u64::from(nib) << ((k % 16) * 4);
        }
        Ok(Self::from_words(words))
    }

    /// Parses human form such as `x^11+x^5+x^4+x+1`. Whitespace is ignored;
    /// repeated terms cancel.
    pub fn parse_human(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut exps = Vec::new();
        for term in compact.split('+') {
            match term {
                "0" => {}
                "1" => exps.push(0),
                "x" => exps.push(1),
                t => {
                    let e = t
                        .strip_prefix("x^")
                        .ok_or_else(|| err(format!("unrecognized term {t:?}")))?;
                    exps.push(
                        e.parse::<usize>()
                            .map_err(|e| err(format!("bad exponent in {t:?}: {e}")))?,
                    );
                }
            }
        }
        Ok(Self::from_exponents(exps))
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

/// Accepts human form, or an exponent list when the input contains a comma.
impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            Self::parse_exponent_list(s)
        } else {
            Self::parse_human(s)
        }
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Gf2Poly::from_words(words)
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

/// Schoolbook shift-and-XOR product.
impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![0u64; self.words.len() + rhs.words.len()];
        for (i, &w) in sparse.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                xor_shifted(&mut out, &dense.words, i * WORD + b);
                w &= w - 1;
            }
        }
        Gf2Poly::from_words(out)
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

/// A validated `(m, n)` pair for `x^m + x^(n+1) + x^n + x + 1`: `m >= 6`,
/// `n` even, `2 <= n <= floor(m/2) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PentanomialParams {
    m: usize,
    n: usize,
}

impl PentanomialParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let fail = |constraint| {
            Err(Error::InvalidParams {
                m: m as u64,
                n: n as u64,
                constraint,
            })
        };
        if m < 6 {
            return fail("m must be at least 6");
        }
        if !n.is_multiple_of(2) {
            return fail("n must be even");
        }
        if n < 2 {
            return fail("n must be at least 2");
        }
        if n > m / 2 - 1 {
            return fail("n must not exceed floor(m/2) - 1");
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Every valid pair with degree `m`, in increasing `n`.
    pub fn for_degree(m: usize) -> impl Iterator<Item = Self> {
        let top = if m >= 6 { m / 2 - 1 } else { 0 };
        (2..=top).step_by(2).map(move |n| Self { m, n })
    }
}

impl fmt::Display for PentanomialParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

/// `x^m + x^(n+1) + x^n + x + 1`.
pub fn type1_pentanomial(params: PentanomialParams) -> Gf2Poly {
    let (m, n) = (params.m, params.n);
    Gf2Poly::from_exponents([m, n + 1, n, 1, 0])
}
