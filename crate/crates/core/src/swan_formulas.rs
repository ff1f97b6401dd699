//! Closed-form factor-count parity for `f = x^m + x^(n+1) + x^n + x + 1`
//! with even `n`.
//!
//! `f` itself has a discriminant that is awkward to expand, so the parity is
//! read off an auxiliary lift of degree `m + 1` with the same discriminant
//! mod 8:
//!
//! * odd `m`: the lift of `(x+1) f*(x)`,
//!   `x^(m+1) + x^(m-1) + x^(m-n+1) + x^(m-n-1) + x + 1`;
//! * even `m`: the lift of `(x+1) f(x)`,
//!   `x^(m+1) + x^m + x^(n+2) + x^n + x^2 + 1`.
//!
//! Multiplying by the odd-degree irreducible `x+1`, which divides neither `f`
//! nor `f*` because `f(1) = 1`, leaves the residue unchanged. The resultant
//! `R(G, G') = prod G'(r_i)` of the lift is expanded to second order in the
//! even coefficients of `G'`; everything beyond that vanishes mod 8. The
//! remaining symmetric functions of the roots are power sums, produced by
//! Newton's recurrence without locating any root.

use crate::error::{Error, Result};
use crate::gf2poly::PentanomialParams;
use crate::zlift::{IntPoly, Method, Parity, ParityVerdict};

/// Power-sum tables for the mod-8 expansions are kept mod 16 so that halved
/// even combinations are still correct mod 8.
pub const TABLE_MODULUS: i64 = 16;

/// Power sums `S_0 ..= S_P` of the roots of a monic integer polynomial,
/// reduced into `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumTable {
    modulus: i64,
    sums: Vec<i64>,
    source: IntPoly,
}

/// `(k, a_k)` for the nonzero `a_k`, `k >= 1`, where `a_k` is the coefficient
/// of `x^(d-k)` reduced mod `modulus`.
fn newton_coefficients(f: &IntPoly, d: usize, modulus: i64) -> Vec<(usize, i128)> {
    let m = num_bigint::BigInt::from(modulus);
    f.terms()
        .filter(|&(e, _)| e < d)
        .map(|(e, c)| {
            let r: i128 = num_integer::Integer::mod_floor(c, &m).try_into().unwrap();
            (d - e, r)
        })
        .filter(|&(_, r)| r != 0)
        .collect()
}

/// Newton's identities: with `a_k` the coefficient of `x^(d-k)`,
/// `S_p = -(a_1 S_(p-1) + ... + a_(p-1) S_1 + p a_p)` for `p <= d` and
/// `S_p = -(a_1 S_(p-1) + ... + a_d S_(p-d))` beyond.
pub fn power_sums(f: &IntPoly, up_to: usize, modulus: i64) -> Result<PowerSumTable> {
    if modulus < 2 {
        return Err(Error::InvalidModulus(modulus));
    }
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let md = i128::from(modulus);
    let coeffs = newton_coefficients(f, d, modulus);
    let mut sums = Vec::with_capacity(up_to + 1);
    sums.push((d as i128 % md) as i64);
    for p in 1..=up_to {
        let mut acc: i128 = 0;
        for &(k, a) in &coeffs {
            if k < p {
                acc += a * i128::from(sums[p - k]);
            } else if k == p {
                acc += a * (p as i128 % md);
            }
        }
        sums.push((-acc).rem_euclid(md) as i64);
    }
    Ok(PowerSumTable {
        modulus,
        sums,
        source: f.clone(),
    })
}

impl PowerSumTable {
    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    pub fn source(&self) -> &IntPoly {
        &self.source
    }

    /// Largest stored index `P`.
    pub fn max_index(&self) -> usize {
        self.sums.len() - 1
    }

    /// `S_p` as a residue in `0..modulus`.
    pub fn get(&self, p: usize) -> Result<i64> {
        self.sums.get(p).copied().ok_or(Error::IndexOutOfRange {
            index: p,
            max: self.max_index(),
        })
    }

    /// `S_p` as the representative in `(-modulus/2, modulus/2]`.
    pub fn signed(&self, p: usize) -> Result<i64> {
        let s = self.get(p)?;
        Ok(if 2 * s > self.modulus {
            s - self.modulus
        } else {
            s
        })
    }

    /// `sum_(i != j) x_i^p x_j^q = S_p S_q - S_(p+q)`, mod the table modulus.
    pub fn pair_sum(&self, p: usize, q: usize) -> Result<i64> {
        let prod = self.get(p)? * self.get(q)?;
        Ok((prod - self.get(p + q)?).rem_euclid(self.modulus))
    }

    /// `sum_(i < j) x_i^p x_j^p = (S_p^2 - S_(2p)) / 2`, mod half the table
    /// modulus. The numerator is even as an integer, so halving its residue
    /// mod an even modulus is exact.
    pub fn half_pair_sum(&self, p: usize) -> Result<i64> {
        if self.modulus % 2 != 0 {
            return Err(Error::InvalidModulus(self.modulus));
        }
        let twice = self.pair_sum(p, p)?;
        debug_assert_eq!(twice % 2, 0);
        Ok(twice / 2)
    }

    /// Re-checks Newton's recurrence at every stored index.
    pub fn satisfies_newton(&self) -> bool {
        let d = self.source.degree().unwrap();
        let md = i128::from(self.modulus);
        let coeffs = newton_coefficients(&self.source, d, self.modulus);
        if i128::from(self.sums[0]) != d as i128 % md {
            return false;
        }
        (1..self.sums.len()).all(|p| {
            let mut acc = i128::from(self.sums[p]);
            for &(k, a) in &coeffs {
                if k < p {
                    acc += a * i128::from(self.sums[p - k]);
                } else if k == p {
                    acc += a * p as i128;
                }
            }
            acc.rem_euclid(md) == 0
        })
    }
}

fn require_odd(params: PentanomialParams) -> Result<()> {
    if params.m().is_multiple_of(2) {
        return Err(Error::InvalidParams {
            m: params.m() as u64,
            n: params.n() as u64,
            constraint: "m must be odd for the reciprocal-side lift",
        });
    }
    Ok(())
}

fn require_even(params: PentanomialParams) -> Result<()> {
    if params.m() % 2 == 1 {
        return Err(Error::InvalidParams {
            m: params.m() as u64,
            n: params.n() as u64,
            constraint: "m must be even for the direct-side lift",
        });
    }
    Ok(())
}

/// Monic lift of `(x+1) f*(x)` for odd `m`. When `n = 2` the terms
/// `x^(m-1)` and `x^(m-n+1)` cancel mod 2, leaving `x^(m+1) + x^(m-3) + x + 1`.
pub fn odd_auxiliary_lift(params: PentanomialParams) -> Result<IntPoly> {
    require_odd(params)?;
    let (m, n) = (params.m(), params.n());
    let exps: Vec<usize> = if n == 2 {
        vec![m + 1, m - 3, 1, 0]
    } else {
        vec![m + 1, m - 1, m - n + 1, m - n - 1, 1, 0]
    };
    Ok(IntPoly::from_terms(exps.into_iter().map(|e| (e, 1))))
}

/// Monic lift of `(x+1) f(x)` for even `m`. When `n = 2` the terms `x^n` and
/// `x^2` cancel mod 2, leaving `x^(m+1) + x^m + x^4 + 1`.
pub fn even_auxiliary_lift(params: PentanomialParams) -> Result<IntPoly> {
    require_even(params)?;
    let (m, n) = (params.m(), params.n());
    let exps: Vec<usize> = if n == 2 {
        vec![m + 1, m, 4, 0]
    } else {
        vec![m + 1, m, n + 2, n, 2, 0]
    };
    Ok(IntPoly::from_terms(exps.into_iter().map(|e| (e, 1))))
}

/// The auxiliary lift matching the parity of `m`.
pub fn auxiliary_lift(params: PentanomialParams) -> IntPoly {
    if params.m() % 2 == 1 {
        odd_auxiliary_lift(params)
    } else {
        even_auxiliary_lift(params)
    }
    .expect("parity dispatch")
}

/// `(-1)^(d(d-1)/2)`, the sign relating `D(G)` and `R(G, G')` in degree `d`.
fn discriminant_sign(d: usize) -> i128 {
    if (d * (d - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_residue(residue: i128, params: PentanomialParams) -> u8 {
    let r = residue.rem_euclid(8) as u8;
    assert!(
        r == 1 || r == 5,
        "discriminant residue {r} outside {{1, 5}} for {params}"
    );
    r
}

/// `D(K) mod 8` for the odd-`m` lift `K`, from the simplified second-order
/// expansion of `R(K, K')`. With `S_k` the power sums of the roots of `K`,
/// for `n >= 4`
///
/// ```text
/// R = 1 - m(m+1) + m^2(m+1)^2/2 - (m+1)^2/2 S_2m - (m-1)^2/2 S_(2m-4)
///       - (m-n+1)^2/2 S_(2m-2n) - (m-n-1)^2/2 S_(2m-2n-4)      (mod 8)
/// ```
///
/// and for `n = 2`
///
/// ```text
/// R = 1 - m(m+1) + m^2(m+1)^2/2 - (m+1)^2/2 S_2m - (m-3)^2/2 S_(2m-8)
///       - (m+1)(m-3) S_(2m-4)                                  (mod 8)
/// ```
///
/// Every halved coefficient is a square of an even number, so the halves are
/// integers. `D(K) = (-1)^(m(m+1)/2) R`.
pub fn disc_k_mod8(params: PentanomialParams) -> Result<u8> {
    let lift = odd_auxiliary_lift(params)?;
    let (m, n) = (params.m() as i128, params.n() as i128);
    let table = power_sums(&lift, 2 * params.m(), TABLE_MODULUS)?;
    let s = |k: i128| -> i128 { i128::from(table.get(k as usize).unwrap()) };
    let half_sq = |c: i128| c * c / 2;

    let mut r = 1 - m * (m + 1) + half_sq(m * (m + 1)) - half_sq(m + 1) * s(2 * m);
    if n == 2 {
        r -= half_sq(m - 3) * s(2 * m - 8);
        r -= (m + 1) * (m - 3) * s(2 * m - 4);
    } else {
        r -= half_sq(m - 1) * s(2 * m - 4);
        r -= half_sq(m - n + 1) * s(2 * m - 2 * n);
        r -= half_sq(m - n - 1) * s(2 * m - 2 * n - 4);
    }
    let d = discriminant_sign(params.m() + 1) * r;
    Ok(check_residue(d, params))
}

/// `D(L) mod 8` for the even-`m` lift `L`.
///
/// At a root `x_i`, `L'(x_i) = x_i^m (c_0 + sum_a c_a x_i^(-p_a))` with
/// `c_0 = m + 1` odd and every other `c_a` even; `prod x_i^m = 1` because `m`
/// is even and `L(0) = 1`. Writing `u_i = sum_a c_a x_i^(-p_a)`,
///
/// ```text
/// R(L, L') = c_0^(m+1) + c_0^m e_1(u) + c_0^(m-1) e_2(u)      (mod 8)
/// ```
///
/// where `e_1`, `e_2` are expressed through the power sums `T_k` of the roots
/// of the reciprocal `L*`, whose roots are the `x_i^(-1)`.
pub fn disc_l_mod8(params: PentanomialParams) -> Result<u8> {
    let lift = even_auxiliary_lift(params)?;
    let m = params.m();
    let derivative = lift.derivative();
    let mut base = 0i128;
    let mut terms: Vec<(i128, usize)> = Vec::new();
    for (e, c) in derivative.terms() {
        let c: i128 = c.try_into().expect("small coefficient");
        if e == m {
            base = c;
        } else {
            terms.push((c, m - e));
        }
    }
    debug_assert_eq!(base, m as i128 + 1);
    let table = power_sums(&lift.reciprocal(), 2 * m, TABLE_MODULUS)?;
    let r = second_order_product(base, m + 1, &terms, &table)?;
    let d = discriminant_sign(m + 1) * r;
    Ok(check_residue(d, params))
}

/// `prod_i (base + sum_a c_a x_i^(p_a)) mod 8` over the `roots` roots whose
/// power sums fill `table`, for even `c_a`: terms of order three and above
/// are divisible by 8.
fn second_order_product(
    base: i128,
    roots: usize,
    terms: &[(i128, usize)],
    table: &PowerSumTable,
) -> Result<i128> {
    debug_assert!(terms.iter().all(|(c, _)| c % 2 == 0));
    let s = |p: usize| table.get(p).map(i128::from);
    let mut e1 = 0;
    let mut e2 = 0;
    for (i, &(c, p)) in terms.iter().enumerate() {
        e1 += c * s(p)?;
        e2 += (c * c / 2) * i128::from(table.pair_sum(p, p)?);
        for &(c2, q) in &terms[i + 1..] {
            e2 += c * c2 * i128::from(table.pair_sum(p, q)?);
        }
    }
    let pow8 = |k: usize| (0..k).fold(1i128, |acc, _| (acc * base).rem_euclid(8));
    Ok(pow8(roots) + pow8(roots - 1) * e1 + pow8(roots.saturating_sub(2)) * e2)
}

/// Closed-form `D mod 8` of the auxiliary lift when `n = 2`: for odd `m` the
/// residue is 5 iff `m = +-3 (mod 8)`, for even `m` it is 5 iff
/// `m = 2, 4 (mod 8)`.
pub fn disc_n2_mod8(m: usize) -> Result<u8> {
    if m < 6 {
        return Err(Error::InvalidParams {
            m: m as u64,
            n: 2,
            constraint: "m must be at least 6",
        });
    }
    let five = if m % 2 == 1 {
        matches!(m % 8, 3 | 5)
    } else {
        matches!(m % 8, 2 | 4)
    };
    Ok(if five { 5 } else { 1 })
}

/// Parity of the factor count of the pentanomial, from the discriminant of
/// its auxiliary lift evaluated with power sums.
pub fn newton_parity(params: PentanomialParams) -> ParityVerdict {
    let residue = if params.m() % 2 == 1 {
        disc_k_mod8(params)
    } else {
        disc_l_mod8(params)
    }
    .expect("valid params");
    ParityVerdict::from_discriminant(params.m(), residue, Method::NewtonSums)
}

/// True iff the pentanomial has an even number of irreducible factors,
/// decided purely from congruences on `(m, n)`.
fn theorem_says_even(m: usize, n: usize) -> bool {
    if n == 2 {
        return matches!(m % 8, 0 | 3 | 5 | 6);
    }
    let n_mod4_zero = n.is_multiple_of(4);
    if m % 2 == 1 {
        let plus_minus_one = matches!(m % 8, 1 | 7);
        let plus_minus_three = matches!(m % 8, 3 | 5);
        let residue = (2 * m) % n;
        (n_mod4_zero && plus_minus_three)
            || (n != 6
                && !n_mod4_zero
                && ((residue <= 6 && plus_minus_one) || (residue > 6 && plus_minus_three)))
            || (n == 6 && ((residue == 0 && plus_minus_three) || (residue != 0 && plus_minus_one)))
    } else {
        let zero_or_two = matches!(m % 8, 0 | 2);
        let four_or_six = matches!(m % 8, 4 | 6);
        let residue = (2 * m + 4) % n;
        (n_mod4_zero && zero_or_two)
            || (n != 6
                && !n_mod4_zero
                && ((residue <= 6 && four_or_six) || (residue > 6 && zero_or_two)))
            || (n == 6 && ((residue == 0 && zero_or_two) || (residue != 0 && four_or_six)))
    }
}

pub fn theorem_parity(params: PentanomialParams) -> ParityVerdict {
    ParityVerdict {
        parity: if theorem_says_even(params.m(), params.n()) {
            Parity::Even
        } else {
            Parity::Odd
        },
        method: Method::Theorem,
        discriminant_mod8: None,
    }
}

/// The branch of the case analysis a pair `(m, n)` with `n >= 4` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// odd m, n = 0 (mod 4), m + 1 = 0 (mod 4)
    OddCase1,
    /// odd m, n = 0 (mod 4), m + 1 = 2 (mod 4)
    OddCase2,
    /// odd m, n = 2 (mod 4), m + 1 = 0 (mod 4)
    OddCase3,
    /// odd m, n = 2 (mod 4), m + 1 = 2 (mod 4)
    OddCase4,
    /// even m, n = 0 (mod 4)
    EvenCase1,
    /// even m, n = 2 (mod 4)
    EvenCase2,
}

impl CaseId {
    pub fn label(self) -> &'static str {
        match self {
            CaseId::OddCase1 => "odd-m case 1",
            CaseId::OddCase2 => "odd-m case 2",
            CaseId::OddCase3 => "odd-m case 3",
            CaseId::OddCase4 => "odd-m case 4",
            CaseId::EvenCase1 => "even-m case 1",
            CaseId::EvenCase2 => "even-m case 2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub m_residue: u8,
    pub n_residue: u8,
    pub special_n6: bool,
    /// `2m mod n` for odd `m`, `(2m + 4) mod n` for even `m`.
    pub boundary: usize,
    pub case: CaseId,
}

pub fn classify_case(params: PentanomialParams) -> Result<CaseTag> {
    let (m, n) = (params.m(), params.n());
    if n < 4 {
        return Err(Error::InvalidParams {
            m: m as u64,
            n: n as u64,
            constraint: "case analysis requires n >= 4",
        });
    }
    let (case, boundary) = if m % 2 == 1 {
        let case = match (n % 4 == 0, (m + 1) % 4 == 0) {
            (true, true) => CaseId::OddCase1,
            (true, false) => CaseId::OddCase2,
            (false, true) => CaseId::OddCase3,
            (false, false) => CaseId::OddCase4,
        };
        (case, (2 * m) % n)
    } else {
        let case = if n % 4 == 0 {
            CaseId::EvenCase1
        } else {
            CaseId::EvenCase2
        };
        (case, (2 * m + 4) % n)
    };
    Ok(CaseTag {
        m_residue: (m % 8) as u8,
        n_residue: (n % 4) as u8,
        special_n6: n == 6,
        boundary,
        case,
    })
}

/// The per-case reduced discriminant formulas, `n >= 4`:
///
/// | case | `D mod 8` |
/// |------|-----------|
/// | odd 1 | `1 - m(m+1)` |
/// | odd 2 | `1 + m(m+1) - 2m^2` |
/// | odd 3 | `1 - m(m+1) - 2(S_(2m-4) + S_(2m-2n))` |
/// | odd 4 | `-1 + m(m+1) - 2m^2 + 2(S_2m + S_(2m-2n-4))` |
/// | even 1 | `(-1)^(m(m+1)/2) (m+1)(1+m^2)` |
/// | even 2 | `(-1)^(m(m+1)/2) (m+1)(1 + m^2 - 2(T_(2m-2n+2) + T_(2m-2n-2)))` |
///
/// `S` are power sums of the odd-`m` lift, `T` those of the reciprocal of the
/// even-`m` lift.
pub fn case_discriminant_mod8(params: PentanomialParams) -> Result<u8> {
    let tag = classify_case(params)?;
    let (mu, nu) = (params.m(), params.n());
    let m = mu as i128;
    let sums = |lift: IntPoly| power_sums(&lift, 2 * mu, TABLE_MODULUS);
    let d = match tag.case {
        CaseId::OddCase1 => 1 - m * (m + 1),
        CaseId::OddCase2 => 1 + m * (m + 1) - 2 * m * m,
        CaseId::OddCase3 => {
            let s = sums(odd_auxiliary_lift(params)?)?;
            1 - m * (m + 1) - 2 * i128::from(s.get(2 * mu - 4)? + s.get(2 * mu - 2 * nu)?)
        }
        CaseId::OddCase4 => {
            let s = sums(odd_auxiliary_lift(params)?)?;
            -1 + m * (m + 1) - 2 * m * m
                + 2 * i128::from(s.get(2 * mu)? + s.get(2 * mu - 2 * nu - 4)?)
        }
        CaseId::EvenCase1 => discriminant_sign(mu + 1) * (m + 1) * (1 + m * m),
        CaseId::EvenCase2 => {
            let t = sums(even_auxiliary_lift(params)?.reciprocal())?;
            let pair = i128::from(t.get(2 * mu - 2 * nu + 2)? + t.get(2 * mu - 2 * nu - 2)?);
            discriminant_sign(mu + 1) * (m + 1) * (1 + m * m - 2 * pair)
        }
    };
    Ok(check_residue(d, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2poly::{type1_pentanomial, Gf2Poly};
    use crate::zlift::discriminant_mod8;

    fn params(m: usize, n: usize) -> PentanomialParams {
        PentanomialParams::new(m, n).unwrap()
    }

    #[test]
    fn lifts_match_formulas() {
        assert_eq!(
            odd_auxiliary_lift(params(11, 4)).unwrap(),
            IntPoly::from_terms([12, 10, 8, 6, 1, 0].map(|e| (e, 1)))
        );
        assert_eq!(
            odd_auxiliary_lift(params(7, 2)).unwrap(),
            IntPoly::from_terms([8, 4, 1, 0].map(|e| (e, 1)))
        );
        assert_eq!(
            even_auxiliary_lift(params(10, 4)).unwrap(),
            IntPoly::from_terms([11, 10, 6, 4, 2, 0].map(|e| (e, 1)))
        );
        assert_eq!(
            even_auxiliary_lift(params(8, 2)).unwrap(),
            IntPoly::from_terms([9, 8, 4, 0].map(|e| (e, 1)))
        );
        assert!(odd_auxiliary_lift(params(10, 4)).is_err());
        assert!(even_auxiliary_lift(params(11, 4)).is_err());
    }

    #[test]
    fn lifts_reduce_to_products_with_x_plus_one() {
        let x1: Gf2Poly = "x+1".parse().unwrap();
        for m in 6..60 {
            for p in PentanomialParams::for_degree(m) {
                let f = type1_pentanomial(p);
                let expected = if m % 2 == 1 {
                    &x1 * &f.reciprocal().unwrap()
                } else {
                    &x1 * &f
                };
                assert_eq!(auxiliary_lift(p).reduce_mod2(), expected, "{p}");
            }
        }
    }

    #[test]
    fn power_sums_of_known_roots() {
        // roots 1 and 2
        let f = IntPoly::from_i64(&[2, -3, 1]);
        let t = power_sums(&f, 4, 1 << 40).unwrap();
        assert_eq!(t.sums(), &[2, 3, 5, 9, 17]);
        assert_eq!(t.pair_sum(1, 1).unwrap(), 4);
        assert_eq!(t.pair_sum(1, 2).unwrap(), t.pair_sum(2, 1).unwrap());
        assert_eq!(t.half_pair_sum(1).unwrap(), 2);
        assert!(t.satisfies_newton());
        assert_eq!(t.get(5), Err(Error::IndexOutOfRange { index: 5, max: 4 }));
        assert!(t.pair_sum(3, 2).is_err());
    }

    #[test]
    fn power_sums_reject_bad_input() {
        let f = IntPoly::from_i64(&[2, -3, 1]);
        assert_eq!(power_sums(&f, 3, 1), Err(Error::InvalidModulus(1)));
        assert_eq!(
            power_sums(&IntPoly::from_i64(&[1, 2]), 3, 8),
            Err(Error::NotMonic)
        );
        assert_eq!(
            power_sums(&IntPoly::zero(), 3, 8),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn odd_lift_power_sum_facts() {
        for (m, n) in [(11, 4), (15, 6), (23, 8), (31, 10), (41, 2)] {
            let t = power_sums(&odd_auxiliary_lift(params(m, n)).unwrap(), 2 * m, 1 << 30).unwrap();
            assert_eq!(t.signed(1).unwrap(), 0);
            // the n = 2 lift has no x^(m-1) term
            assert_eq!(t.signed(2).unwrap(), if n == 2 { 0 } else { -2 });
            assert_eq!(t.signed(m).unwrap(), -(m as i64));
            for k in (1..m).step_by(2) {
                assert_eq!(t.get(k).unwrap(), 0, "S_{k} for {m},{n}");
            }
            assert_eq!(t.get(2 * m).unwrap() % 2, 1);
            for k in (2..2 * m).step_by(2) {
                assert_eq!(t.get(k).unwrap() % 2, 0);
            }
        }
    }

    #[test]
    fn even_lift_reciprocal_sums() {
        for (m, n) in [(10, 4), (20, 6), (32, 8), (40, 2)] {
            let lift = even_auxiliary_lift(params(m, n)).unwrap();
            let t = power_sums(&lift.reciprocal(), 2 * m, 1 << 30).unwrap();
            for k in (1..m + 1).step_by(2) {
                assert_eq!(t.get(k).unwrap(), 0);
            }
            assert_eq!(t.signed(m + 1).unwrap(), -(m as i64) - 1);
            for k in (2..2 * m).step_by(2) {
                assert_eq!(t.get(k).unwrap() % 2, 0);
            }
        }
    }

    #[test]
    fn spot_values_against_exact_resultant() {
        let k = disc_k_mod8(params(11, 4)).unwrap();
        assert_eq!(
            k,
            discriminant_mod8(&odd_auxiliary_lift(params(11, 4)).unwrap()).unwrap()
        );
        assert_eq!(k, (1 - 11 * 12i64).rem_euclid(8) as u8);
        let l = disc_l_mod8(params(10, 4)).unwrap();
        assert_eq!(
            l,
            discriminant_mod8(&even_auxiliary_lift(params(10, 4)).unwrap()).unwrap()
        );
    }

    #[test]
    fn n2_closed_form() {
        assert_eq!(disc_n2_mod8(7).unwrap(), 1);
        assert_eq!(disc_n2_mod8(10).unwrap(), 5);
        assert_eq!(disc_n2_mod8(8).unwrap(), 1);
        assert_eq!(disc_n2_mod8(11).unwrap(), 5);
        assert!(disc_n2_mod8(5).is_err());
    }

    #[test]
    fn theorem_spot_checks() {
        assert_eq!(theorem_parity(params(11, 4)).parity, Parity::Even);
        assert_eq!(theorem_parity(params(10, 4)).parity, Parity::Even);
        assert_eq!(theorem_parity(params(9, 2)).parity, Parity::Odd);
        assert_eq!(theorem_parity(params(8, 2)).parity, Parity::Even);
        let v = theorem_parity(params(13, 4));
        assert_eq!(v.method, Method::Theorem);
        assert_eq!(v.discriminant_mod8, None);
    }

    #[test]
    fn case_classification() {
        let tag = classify_case(params(11, 4)).unwrap();
        assert_eq!(tag.case, CaseId::OddCase1);
        assert_eq!(tag.boundary, 22 % 4);
        let tag = classify_case(params(15, 6)).unwrap();
        assert!(matches!(tag.case, CaseId::OddCase3 | CaseId::OddCase4));
        assert!(tag.special_n6);
        assert!(PentanomialParams::new(10, 6).is_err());
        let tag = classify_case(params(14, 6)).unwrap();
        assert_eq!(tag.case, CaseId::EvenCase2);
        assert_eq!(tag.boundary, (2 * 14 + 4) % 6);
        assert!(classify_case(params(11, 2)).is_err());
    }
}
