//! Exact arithmetic in cyclotomic fields Q(zeta_M).
//!
//! Every scalar in this crate is a [`CycloScalar`]: a vector of rationals in
//! the power basis 1, zeta, ..., zeta^{phi(M)-1}, kept reduced modulo the M-th
//! cyclotomic polynomial Phi_M. Reducing modulo Phi_M (rather than x^M - 1)
//! makes the representation a field, so every nonzero element is invertible.
//! Elements of different orders promote to the least common multiple on
//! demand; plain rationals live at order 1 and mix freely with roots of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Zero};
use thiserror::Error;

pub type Rational = Ratio<BigInt>;

/// Default cap on the cyclotomic order reachable by automatic lcm promotion.
pub const MAX_ORDER: u32 = 360;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclotomic order {order} exceeds the configured maximum {max}")]
    OrderLimit { order: u64, max: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

// ---------------------------------------------------------------------------
// integer polynomial helpers for Phi_M
// ---------------------------------------------------------------------------

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact division of integer polynomials, little-endian, divisor monic.
fn int_poly_exact_div(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = num[k + dd].clone();
        if !c.is_zero() {
            for (t, dc) in den.iter().enumerate() {
                num[k + t] -= &c * dc;
            }
        }
        quot[k] = c;
    }
    debug_assert!(num.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Phi_M as an integer polynomial, computed by dividing x^M - 1 by Phi_d for
/// every proper divisor d of M. Cached per order.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    assert!(m > 0, "cyclotomic order must be positive");
    let result = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        let mut quot = num;
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            quot = int_poly_exact_div(quot, &phi_d);
        }
        quot
    };
    debug_assert_eq!(result.len() as u32, euler_phi(m) + 1);
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(m, Arc::clone(&arc));
    arc
}

// ---------------------------------------------------------------------------
// rational polynomial helpers
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Remainder of `p` modulo the monic integer polynomial `modulus`, in place.
fn poly_rem_monic(p: &mut Vec<Rational>, modulus: &[BigInt]) {
    let d = modulus.len() - 1;
    for k in (d..p.len()).rev() {
        if p[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut p[k], Rational::zero());
        for (t, mc) in modulus.iter().take(d).enumerate() {
            let sub = &c * Rational::from_integer(mc.clone());
            p[k - d + t] -= sub;
        }
    }
    p.truncate(d);
}

/// Quotient and remainder for rational polynomials, divisor nonzero.
fn poly_divmod(mut num: Vec<Rational>, den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if num.len() <= dd {
        return (vec![], num);
    }
    let mut quot = vec![Rational::zero(); num.len() - dd];
    for k in (0..num.len() - dd).rev() {
        if num[k + dd].is_zero() {
            continue;
        }
        let c = &num[k + dd] / &lead;
        for (t, dc) in den.iter().enumerate() {
            let sub = &c * dc;
            num[k + t] -= sub;
        }
        quot[k] = c;
    }
    poly_trim(&mut num);
    (quot, num)
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    // a - q*b
    let mut out = a.to_vec();
    let need = q.len() + b.len();
    if out.len() < need {
        out.resize(need, Rational::zero());
    }
    for (i, qc) in q.iter().enumerate() {
        if qc.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            let sub = qc * bc;
            out[i + j] -= sub;
        }
    }
    poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo the monic polynomial `modulus` by the extended
/// Euclidean algorithm. Returns `None` when a is zero mod the modulus.
fn poly_inverse_mod(a: &[Rational], modulus: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    if poly_is_zero(&r1) {
        return None;
    }
    let mut t0: Vec<Rational> = vec![];
    let mut t1: Vec<Rational> = vec![Rational::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divmod(r0.clone(), &r1);
        let t = poly_sub_mul(&t0, &q, &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    // r0 is the gcd; Phi_M is irreducible so the gcd of a nonzero residue is a
    // nonzero constant.
    debug_assert_eq!(r0.len(), 1);
    let g = r0[0].clone();
    Some(t0.into_iter().map(|c| c / &g).collect())
}

fn lcm_u32(a: u32, b: u32) -> u64 {
    let g = gcd_u32(a, b) as u64;
    (a as u64 / g) * b as u64
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// CycloScalar
// ---------------------------------------------------------------------------

/// An exact element of Q(zeta_M) in reduced power-basis form.
#[derive(Debug, Clone)]
pub struct CycloScalar {
    order: u32,
    /// Length euler_phi(order); coefficients of 1, zeta, ..., zeta^{phi-1}.
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    fn reduced(order: u32, mut raw: Vec<Rational>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        if raw.len() >= modulus.len() {
            poly_rem_monic(&mut raw, &modulus);
        }
        raw.resize(phi, Rational::zero());
        CycloScalar { order, coeffs: raw }
    }

    pub fn zero() -> Self {
        CycloScalar { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        CycloScalar { order: 1, coeffs: vec![Rational::one()] }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloScalar { order: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// zeta_M^e, with e taken modulo M (negative exponents allowed).
    pub fn root_of_unity(order: u32, exponent: i64) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::reduced(order, raw)
    }

    /// Explicit power-basis element sum_e coeffs[e] * zeta_M^e (any length,
    /// reduced modulo Phi_M).
    pub fn from_power_basis(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        Self::reduced(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Some(r) when the value lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Exact embedding Q(zeta_M) -> Q(zeta_{M'}) for M | M', via
    /// zeta_M = zeta_{M'}^{M'/M}.
    pub fn promote(&self, order: u32) -> Result<Self, ScalarError> {
        if order == self.order {
            return Ok(self.clone());
        }
        assert!(
            order % self.order == 0,
            "promotion target {order} is not a multiple of {}",
            self.order
        );
        let step = (order / self.order) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[e * step] = c.clone();
            }
        }
        Ok(Self::reduced(order, raw))
    }

    fn common_order(&self, rhs: &Self, max_order: u32) -> Result<u32, ScalarError> {
        let l = lcm_u32(self.order, rhs.order);
        if l > max_order as u64 {
            return Err(ScalarError::OrderLimit { order: l, max: max_order });
        }
        Ok(l as u32)
    }

    fn binop<F>(&self, rhs: &Self, max_order: u32, f: F) -> Result<Self, ScalarError>
    where
        F: FnOnce(&Self, &Self) -> Self,
    {
        let m = self.common_order(rhs, max_order)?;
        let a = self.promote(m)?;
        let b = rhs.promote(m)?;
        Ok(f(&a, &b))
    }

    /// Addition with automatic promotion to the lcm order, capped at `max_order`.
    pub fn checked_add(&self, rhs: &Self, max_order: u32) -> Result<Self, ScalarError> {
        self.binop(rhs, max_order, |a, b| {
            let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
            CycloScalar { order: a.order, coeffs }
        })
    }

    pub fn checked_sub(&self, rhs: &Self, max_order: u32) -> Result<Self, ScalarError> {
        self.binop(rhs, max_order, |a, b| {
            let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
            CycloScalar { order: a.order, coeffs }
        })
    }

    pub fn checked_mul(&self, rhs: &Self, max_order: u32) -> Result<Self, ScalarError> {
        self.binop(rhs, max_order, |a, b| {
            let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
            for (i, x) in a.coeffs.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.coeffs.iter().enumerate() {
                    if !y.is_zero() {
                        raw[i + j] += x * y;
                    }
                }
            }
            Self::reduced(a.order, raw)
        })
    }

    /// Field inverse via the extended Euclidean algorithm against Phi_M.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus).ok_or(ScalarError::DivisionByZero)?;
        Ok(Self::reduced(self.order, inv))
    }

    pub fn pow(&self, exp: i64) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq, MAX_ORDER)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq, MAX_ORDER)?;
            }
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Some(e) when the value equals zeta_m^e for some 0 <= e < m.
    pub fn as_root_of_unity(&self, m: u32) -> Option<u32> {
        (0..m).find(|&e| *self == Self::root_of_unity(m, e as i64))
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        // Promotion is injective, so comparing at the lcm order is exact.
        let m = lcm_u32(self.order, other.order) as u32;
        let a = self.promote(m).expect("promotion to lcm");
        let b = other.promote(m).expect("promotion to lcm");
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloScalar {}

impl std::ops::Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.checked_add(rhs, MAX_ORDER).expect("cyclotomic order limit")
    }
}

impl std::ops::Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.checked_sub(rhs, MAX_ORDER).expect("cyclotomic order limit")
    }
}

impl std::ops::Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.checked_mul(rhs, MAX_ORDER).expect("cyclotomic order limit")
    }
}

impl std::ops::Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar::neg(self)
    }
}

/// Canonical textual form: rationals as `p/q`, pure root-of-unity values as
/// `z^e` (or `-z^e`), anything else as the power-basis vector `[c0,c1,...]`.
impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        for e in 0..self.order {
            let z = CycloScalar::root_of_unity(self.order, e as i64);
            if *self == z {
                return write!(f, "z^{e}");
            }
            if *self == z.neg() {
                return write!(f, "-z^{e}");
            }
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

fn parse_big_rational(text: &str, original: &str) -> Result<Rational, ScalarError> {
    let err = |reason: &str| ScalarError::Parse {
        text: original.to_string(),
        reason: reason.to_string(),
    };
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = text.parse().map_err(|_| err("bad integer"))?;
        Ok(Rational::from_integer(n))
    }
}

/// Parse the scalar syntax used across spec files and the CLI: `p/q`, `z^e`
/// (zeta of the ambient order), or `[c0,c1,...]`; whitespace-insensitive,
/// optional leading minus.
pub fn parse_scalar(text: &str, order: u32) -> Result<CycloScalar, ScalarError> {
    let original = text;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| ScalarError::Parse {
        text: original.to_string(),
        reason: reason.to_string(),
    };
    let (neg, body) = match compact.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, compact.as_str()),
    };
    if body.is_empty() {
        return Err(err("empty scalar"));
    }
    let value = if let Some(inner) = body.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err("missing closing `]`"))?;
        let coeffs = if inner.is_empty() {
            vec![]
        } else {
            inner
                .split(',')
                .map(|t| parse_big_rational(t, original))
                .collect::<Result<Vec<_>, _>>()?
        };
        CycloScalar::from_power_basis(order, coeffs)
    } else if let Some(rest) = body.strip_prefix("z^") {
        let e: i64 = rest.parse().map_err(|_| err("bad exponent in z^e"))?;
        CycloScalar::root_of_unity(order, e)
    } else if body == "z" {
        return Err(err("write the root of unity as z^e"));
    } else {
        CycloScalar::from_rational(parse_big_rational(body, original)?)
    };
    Ok(if neg { value.neg() } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, e: i64) -> CycloScalar {
        CycloScalar::root_of_unity(m, e)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let as_i64 = |m: u32| -> Vec<i64> {
            cyclotomic_polynomial(m)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        // First order with a coefficient outside {-1,0,1}.
        assert!(as_i64(105).iter().any(|&c| c.abs() > 1));
    }

    #[test]
    fn zeta3_plus_zeta3_squared_is_minus_one() {
        let sum = &z(3, 1) + &z(3, 2);
        assert_eq!(sum, CycloScalar::from_integer(-1));
    }

    #[test]
    fn sign_arithmetic() {
        let m1 = CycloScalar::from_integer(-1);
        assert_eq!(&m1 * &m1, CycloScalar::one());
    }

    #[test]
    fn zeta3_times_zeta3_squared_is_one() {
        assert_eq!(&z(3, 1) * &z(3, 2), CycloScalar::one());
    }

    #[test]
    fn inverse_of_root_of_unity() {
        for m in [3u32, 4, 6, 8, 12] {
            for k in 1..m {
                let inv = z(m, k as i64).inverse().unwrap();
                assert_eq!(inv, z(m, (m - k) as i64));
            }
        }
    }

    #[test]
    fn inverse_of_rational() {
        let inv = CycloScalar::from_ratio(2, 3).inverse().unwrap();
        assert_eq!(inv, CycloScalar::from_ratio(3, 2));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        // (1 + i)(1 - i) = 2, so the inverse is (1 - i)/2.
        let a = &CycloScalar::one() + &z(4, 1);
        let inv = a.inverse().unwrap();
        let expected = CycloScalar::from_power_basis(
            4,
            vec![Rational::new(BigInt::from(1), BigInt::from(2)),
                 Rational::new(BigInt::from(-1), BigInt::from(2))],
        );
        assert_eq!(inv, expected);
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycloScalar::zero().inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn promotion_round_trip_preserves_equality() {
        let a = &z(3, 1) + &CycloScalar::from_integer(2);
        let b = a.promote(12).unwrap();
        assert_eq!(a, b);
        assert_ne!(b, z(12, 4));
        // zeta_3 = zeta_12^4
        assert_eq!(z(3, 1), z(12, 4));
    }

    #[test]
    fn order_limit_is_enforced() {
        let a = z(7, 1);
        let b = z(359, 1);
        let err = a.checked_mul(&b, MAX_ORDER).unwrap_err();
        assert!(matches!(err, ScalarError::OrderLimit { .. }));
        // Within the limit the lcm promotion succeeds.
        let c = z(4, 1).checked_mul(&z(6, 1), MAX_ORDER).unwrap();
        assert_eq!(c, z(12, 5));
    }

    #[test]
    fn canonical_form_of_a_minus_a_is_all_zero() {
        let a = &z(12, 5) + &CycloScalar::from_ratio(7, 3);
        let d = &a - &a;
        assert!(d.coeffs().iter().all(Zero::is_zero));
        assert!(d.is_zero());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for (text, order) in [
            ("3/2", 3),
            ("-5", 3),
            ("z^2", 3),
            ("-z^1", 4),
            ("[1,-1]", 3),
            ("[1/2,-1/2]", 4),
        ] {
            let v = parse_scalar(text, order).unwrap();
            let printed = v.to_string();
            let reparsed = parse_scalar(&printed, order).unwrap();
            assert_eq!(v, reparsed, "round trip failed for {text}");
        }
        // z^e display wins over the vector form.
        assert_eq!(parse_scalar("z^2", 3).unwrap().to_string(), "z^2");
        assert_eq!(parse_scalar("[0,1]", 3).unwrap().to_string(), "z^1");
        assert_eq!(parse_scalar(" - 1 / 2 ", 3).unwrap().to_string(), "-1/2");
        // zeta_2 reduces to the rational -1.
        assert_eq!(parse_scalar("z^1", 2).unwrap().to_string(), "-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("", 3).is_err());
        assert!(parse_scalar("z^x", 3).is_err());
        assert!(parse_scalar("1/0", 3).is_err());
        assert!(parse_scalar("[1,", 3).is_err());
        assert!(parse_scalar("q", 3).is_err());
    }

    #[test]
    fn as_root_of_unity_detects_exponents() {
        assert_eq!(z(6, 5).as_root_of_unity(6), Some(5));
        assert_eq!(CycloScalar::from_integer(-1).as_root_of_unity(6), Some(3));
        assert_eq!(CycloScalar::from_integer(2).as_root_of_unity(6), None);
        assert_eq!(CycloScalar::from_integer(-1).as_root_of_unity(3), None);
    }
}
