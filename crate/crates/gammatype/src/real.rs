//! Exact-or-float scalar used for slopes, offsets and classifier inputs.
//!
//! Boundary cases of the classifiers (γ = 0, d = 2, c = ad, …) must not be
//! destroyed by rounding, so parameters constructed from rationals are kept
//! as exact `BigRational`s and all arithmetic stays exact as long as every
//! operand is exact. Transcendental steps (exp, ln, non-integer powers)
//! produce the float variant, after which the value is only as good as f64.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error};

/// A real number that is either an exact rational or an f64.
///
/// Every finite f64 is itself a dyadic rational, so conversions from f64
/// are exact; the `Approx` variant only appears downstream of genuinely
/// transcendental operations.
#[derive(Debug, Clone)]
pub enum Real {
    Exact(BigRational),
    Approx(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Real::Exact(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Real::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational p/q.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Real::Exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Exact conversion of a finite f64 (every finite f64 is dyadic).
    pub fn from_f64(x: f64) -> Self {
        match BigRational::from_float(x) {
            Some(r) => Real::Exact(r),
            None => Real::Approx(x),
        }
    }

    pub fn approx(x: f64) -> Self {
        Real::Approx(x)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => big_ratio_to_f64(r.numer(), r.denom()),
            Real::Approx(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_zero(),
            Real::Approx(x) => *x == 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_positive(),
            Real::Approx(x) => *x > 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_negative(),
            Real::Approx(x) => *x < 0.0,
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::Exact(r) => Real::Exact(r.abs()),
            Real::Approx(x) => Real::Approx(x.abs()),
        }
    }

    /// True when the value is an integer (exact test in rational mode).
    pub fn is_integer(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_integer(),
            Real::Approx(x) => x.fract() == 0.0 && x.is_finite(),
        }
    }

    pub fn to_integer(&self) -> Option<i64> {
        match self {
            Real::Exact(r) if r.is_integer() => r.numer().to_i64(),
            Real::Approx(x) if x.fract() == 0.0 && x.is_finite() => Some(*x as i64),
            _ => None,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Real::Exact(r) => Some(r),
            Real::Approx(_) => None,
        }
    }

    /// Exact rational view; finite floats convert exactly.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Real::Exact(r) => Some(r.clone()),
            Real::Approx(x) => BigRational::from_float(*x),
        }
    }

    /// `self^exp`. Exact when the base is exact and the exponent an integer;
    /// falls back to f64 `powf` otherwise.
    pub fn pow(&self, exp: &Real) -> Real {
        if let (Real::Exact(base), Some(k)) = (self, exp.to_integer()) {
            if k.unsigned_abs() <= 1_000_000 {
                if k >= 0 {
                    return Real::Exact(power_rational(base, k as u64));
                }
                if !base.is_zero() {
                    return Real::Exact(power_rational(base, (-k) as u64).recip());
                }
            }
        }
        Real::Approx(self.to_f64().powf(exp.to_f64()))
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }
}

fn power_rational(base: &BigRational, mut k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &sq;
        }
        k >>= 1;
        if k > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Round a big-integer ratio to the nearest f64, scaling through the full
/// exponent range (num-rational's plain `to_f64` overflows on huge parts).
pub fn big_ratio_to_f64(numer: &BigInt, denom: &BigInt) -> f64 {
    if numer.is_zero() {
        return 0.0;
    }
    debug_assert!(!denom.is_zero());
    let negative = (numer.sign() == Sign::Minus) != (denom.sign() == Sign::Minus);
    let a = numer.magnitude();
    let b = denom.magnitude();
    let la = a.bits() as i64;
    let lb = b.bits() as i64;
    // Scale so the quotient carries ~64 significant bits.
    let shift = lb - la + 64;
    let q = if shift >= 0 {
        (a << shift as u64) / b
    } else {
        a / (b << (-shift) as u64)
    };
    let qa = q.to_f64().unwrap_or(f64::INFINITY);
    let mag = mul_exp2(qa, -shift);
    if negative {
        -mag
    } else {
        mag
    }
}

/// log2 |numer/denom| and the sign of the ratio; `None` for a zero numerator.
pub(crate) fn big_ratio_log2_signed(numer: &BigInt, denom: &BigInt) -> Option<(f64, i8)> {
    if numer.is_zero() {
        return None;
    }
    let negative = (numer.sign() == Sign::Minus) != (denom.sign() == Sign::Minus);
    let a = numer.magnitude();
    let b = denom.magnitude();
    let la = a.bits() as i64;
    let lb = b.bits() as i64;
    let shift = lb - la + 64;
    let q = if shift >= 0 {
        (a << shift as u64) / b
    } else {
        a / (b << (-shift) as u64)
    };
    let log2 = q.to_f64().unwrap_or(f64::INFINITY).log2() - shift as f64;
    Some((log2, if negative { -1 } else { 1 }))
}

/// 2^x with the integer part applied through exact scaling.
pub(crate) fn exp2_accurate(x: f64) -> f64 {
    let e = x.floor();
    let frac = (x - e).exp2();
    mul_exp2(frac, e as i64)
}

/// `x * 2^e` with gradual under/overflow (std has no ldexp).
pub(crate) fn mul_exp2(x: f64, e: i64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mut e = e;
    let mut x = x;
    while e > 511 {
        x *= f64::powi(2.0, 511);
        e -= 511;
        if !x.is_finite() {
            return x;
        }
    }
    while e < -511 {
        x *= f64::powi(2.0, -511);
        e += 511;
        if x == 0.0 {
            return x;
        }
    }
    x * f64::powi(2.0, e as i32)
}

macro_rules! real_binop {
    ($trait:ident, $m:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                match (self, rhs) {
                    (Real::Exact(a), Real::Exact(b)) => Real::Exact(a $op b),
                    _ => Real::Approx(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        match (self, rhs) {
            (Real::Exact(a), Real::Exact(b)) if !b.is_zero() => Real::Exact(a / b),
            _ => Real::Approx(self.to_f64() / rhs.to_f64()),
        }
    }
}

impl Div<Real> for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self).div(&rhs)
    }
}

impl Div<&Real> for Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        (&self).div(rhs)
    }
}

impl Div<Real> for &Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        self.div(&rhs)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        match self {
            Real::Exact(r) => Real::Exact(-r),
            Real::Approx(x) => Real::Approx(-x),
        }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a.partial_cmp(b),
            _ => {
                // Mixed comparisons go through the exact dyadic view of the
                // float so ordering stays consistent with the exact side.
                match (self.to_rational(), other.to_rational()) {
                    (Some(a), Some(b)) => a.partial_cmp(&b),
                    _ => self.to_f64().partial_cmp(&other.to_f64()),
                }
            }
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Real::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Real {
    type Err = Error;

    /// Accepts `p/q`, plain integers, and decimal literals. Decimals parse
    /// exactly in base ten (`1.675` becomes 67/40), so CLI inputs sit on the
    /// clause boundary the user wrote, not the nearest dyadic.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| domain(format!("bad rational numerator in {s:?}")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| domain(format!("bad rational denominator in {s:?}")))?;
            if q.is_zero() {
                return Err(domain(format!("zero denominator in {s:?}")));
            }
            return Ok(Real::Exact(BigRational::new(p, q)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(Real::Exact(BigRational::from_integer(n)));
        }
        if let Some(r) = parse_decimal(s) {
            return Ok(Real::Exact(r));
        }
        let x: f64 = s
            .parse()
            .map_err(|_| domain(format!("cannot parse number {s:?}")))?;
        Ok(Real::from_f64(x))
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().ok()?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if frac_part.is_empty() && int_part.is_empty() {
        return None;
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let num: BigInt = digits.parse().ok()?;
    let scale = frac_part.len() as i64 - exp10;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        BigRational::new(num, ten.pow(scale as u32))
    } else {
        BigRational::from_integer(num * ten.pow((-scale) as u32))
    })
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Real::Exact(_) => ser.serialize_str(&self.to_string()),
            Real::Approx(x) => ser.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Real;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a number or a \"p/q\" string")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Real, E> {
                Ok(Real::from_f64(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Real, E> {
                Ok(Real::from_int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Real, E> {
                Ok(Real::Exact(BigRational::from_integer(BigInt::from(v))))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Real, E> {
                v.parse().map_err(|e| E::custom(format!("{e}")))
            }
        }
        de.deserialize_any(V)
    }
}
