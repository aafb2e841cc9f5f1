//! Scalar special-function kernels: log-gamma on the positive axis and in
//! the complex plane, digamma, the reflection product Γ(s)Γ(1−s), and
//! Gauss-multiplication rewriting of Γ(m·n + a) into unit-slope factors.
//!
//! Real and complex log-gamma use the Stirling series after shifting the
//! argument right of `STIRLING_CUT`; the complex version reflects first
//! when Re z < 1/2. All functions are pure.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::real::Real;

/// Arguments closer than this to a pole of Γ are rejected.
pub const POLE_GUARD: f64 = 1e-12;

const STIRLING_CUT: f64 = 12.0;

/// B_{2k} / (2k (2k−1)) for the Stirling series of ln Γ.
const STIRLING_LN: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B_{2k} / (2k) for the digamma asymptotic series.
const STIRLING_PSI: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    let mut shift = 0.0f64;
    let mut y = x;
    while y < STIRLING_CUT {
        shift += y.ln();
        y += 1.0;
    }
    let mut series = 0.0;
    let y2 = y * y;
    let mut p = 1.0 / y;
    for c in STIRLING_LN {
        series += c * p;
        p /= y2;
    }
    (y - 0.5) * y.ln() - y + LN_SQRT_2PI + series - shift
}

/// Γ(x) for x > 0 (overflows to +∞ past x ≈ 171.6).
pub fn gamma_pos(x: f64) -> Result<f64> {
    Ok(log_gamma(x)?.exp())
}

/// Principal-branch complex log-gamma; `exp` of the result reproduces Γ(z).
///
/// Arguments within `POLE_GUARD` of a pole {0, −1, −2, …} are rejected.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.5 {
        let near = (z.re - z.re.round()).abs();
        if z.re <= POLE_GUARD && near < POLE_GUARD {
            return Err(domain(format!("log_gamma_complex: {z} is within {POLE_GUARD} of a pole")));
        }
    }
    if z.re < 0.5 {
        // Reflection: ln Γ(z) = ln π − ln sin(πz) − ln Γ(1−z), mod 2πi.
        let pi = std::f64::consts::PI;
        let sin = sin_pi_complex(z);
        if sin.norm() == 0.0 {
            return Err(domain(format!("log_gamma_complex: pole at {z}")));
        }
        let rest = log_gamma_complex(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(pi.ln(), 0.0) - sin.ln() - rest);
    }
    let mut shift = Complex64::new(0.0, 0.0);
    let mut y = z;
    while y.norm() < STIRLING_CUT || y.re < STIRLING_CUT {
        shift += y.ln();
        y += 1.0;
    }
    let mut series = Complex64::new(0.0, 0.0);
    let y2 = y * y;
    let mut p = y.inv();
    for c in STIRLING_LN {
        series += p * c;
        p /= y2;
    }
    Ok((y - 0.5) * y.ln() - y + LN_SQRT_2PI + series - shift)
}

/// Digamma ψ(x) for x > 0, absolute error well under 1e−12.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut shift = 0.0f64;
    let mut y = x;
    while y < STIRLING_CUT {
        shift += 1.0 / y;
        y += 1.0;
    }
    let mut series = 0.0;
    let y2 = y * y;
    let mut p = 1.0 / y2;
    for c in STIRLING_PSI {
        series += c * p;
        p /= y2;
    }
    Ok(y.ln() - 0.5 / y - series - shift)
}

/// sin(πx) with exact reduction modulo the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let f = x - n;
    let s = (std::f64::consts::PI * f).sin();
    if (n as i64) & 1 == 0 {
        s
    } else {
        -s
    }
}

fn sin_pi_complex(z: Complex64) -> Complex64 {
    // Reduce the real part; sin(π(z−n)) = ±sin(πz) by periodicity.
    let n = z.re.round();
    let f = Complex64::new(z.re - n, z.im);
    let s = (f * std::f64::consts::PI).sin();
    if (n as i64) & 1 == 0 {
        s
    } else {
        -s
    }
}

/// Γ(s)Γ(1−s) = π / sin(πs) for non-integer s.
pub fn reflection_product(s: f64) -> Result<f64> {
    if (s - s.round()).abs() < POLE_GUARD {
        return Err(domain(format!("reflection_product undefined at integer s = {s}")));
    }
    Ok(std::f64::consts::PI / sin_pi(s))
}

/// ln |Γ(x)| and the sign of Γ(x) for any non-pole real x.
pub(crate) fn signed_log_gamma(x: f64) -> Result<(f64, i8)> {
    if x > 0.0 {
        return Ok((log_gamma_unchecked(x), 1));
    }
    let near = (x - x.round()).abs();
    if near < POLE_GUARD {
        return Err(domain(format!("Gamma pole at x = {x}")));
    }
    // Γ(x) = π / (sin(πx) Γ(1−x))
    let s = sin_pi(x);
    let lg = std::f64::consts::PI.ln() - s.abs().ln() - log_gamma_unchecked(1.0 - x);
    Ok((lg, if s > 0.0 { 1 } else { -1 }))
}

/// ln |1/Γ(x)| and sign, with `None` at poles of Γ (where 1/Γ = 0).
///
/// `drop_tol`: arguments within this distance of a nonpositive integer count
/// as poles; series code uses this to zero coefficients.
pub(crate) fn log_rgamma_signed(x: f64, drop_tol: f64) -> Option<(f64, i8)> {
    if x > 0.5 {
        return Some((-log_gamma_unchecked(x), 1));
    }
    if x - x.round() == 0.0 && x <= 0.0 {
        return None;
    }
    if (x - x.round()).abs() < drop_tol && x < 0.5 {
        return None;
    }
    // 1/Γ(x) = sin(πx) Γ(1−x) / π
    let s = sin_pi(x);
    let lg = s.abs().ln() + log_gamma_unchecked(1.0 - x) - std::f64::consts::PI.ln();
    Some((lg, if s > 0.0 { 1 } else { -1 }))
}

/// Unit-slope rewriting of Γ(m·n + a):
/// Γ(m·n + a) = exp(log_const) · per_n^n · Π_i Γ(n + offsets[i]).
#[derive(Debug, Clone)]
pub struct UnitSlopeFactorization {
    /// Per-step multiplier m^m (exact).
    pub per_n: Real,
    /// ln of the n-independent constant m^{a−1/2} (2π)^{−(m−1)/2}.
    pub log_const: f64,
    /// Offsets (a+i)/m for i = 0..m−1, exact when `a` is exact.
    pub offsets: Vec<Real>,
}

impl UnitSlopeFactorization {
    /// ln of the recombined right-hand side at real n ≥ 0.
    pub fn recombine_log(&self, n: f64) -> Result<f64> {
        let mut acc = self.log_const + n * self.per_n.to_f64().ln();
        for o in &self.offsets {
            acc += log_gamma(n + o.to_f64())?;
        }
        Ok(acc)
    }
}

/// Gauss multiplication: rewrite Γ(m·n + a) as a product of unit-slope
/// Gamma factors with a per-n geometric multiplier.
pub fn gauss_multiplication_expand(m: u32, a: &Real) -> Result<UnitSlopeFactorization> {
    if m < 1 {
        return Err(domain("gauss_multiplication_expand requires m >= 1"));
    }
    if !a.is_positive() {
        return Err(domain(format!("gauss_multiplication_expand requires a > 0, got {a}")));
    }
    let mf = m as f64;
    let m_real = Real::from_int(m as i64);
    let offsets: Vec<Real> = (0..m)
        .map(|i| (a + &Real::from_int(i as i64)) / &m_real)
        .collect();
    let log_const =
        (a.to_f64() - 0.5) * mf.ln() - (mf - 1.0) / 2.0 * (2.0 * std::f64::consts::PI).ln();
    Ok(UnitSlopeFactorization {
        per_n: m_real.pow(&Real::from_int(m as i64)),
        log_const,
        offsets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::One;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn log_gamma_classic_points() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-14);
        assert!((log_gamma(5.0).unwrap() - 24.0f64.ln()).abs() < 1e-13);
        assert!((log_gamma(0.5).unwrap() - 0.5723649429247001).abs() < 1e-14);
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn log_gamma_recurrence_grid() {
        // |ln Γ(x+1) − ln Γ(x) − ln x| ≤ 1e−12 on x ∈ {0.1, 0.2, …, 50}
        for i in 1..=500 {
            let x = i as f64 / 10.0;
            let r = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap() - x.ln();
            assert!(r.abs() <= 1e-12, "recurrence residual {r:e} at x={x}");
        }
    }

    #[test]
    fn log_gamma_reflection_grid() {
        for i in 1..100 {
            let x = i as f64 / 100.0;
            let lhs = log_gamma(x).unwrap() + log_gamma(1.0 - x).unwrap();
            let rhs = (std::f64::consts::PI / sin_pi(x)).ln();
            assert!((lhs - rhs).abs() <= 1e-11, "reflection residual at x={x}");
        }
    }

    #[test]
    fn log_gamma_duplication_grid() {
        // Γ(1/2)Γ(2x) = 2^{2x−1}Γ(x)Γ(x+1/2)
        for i in 1..=200 {
            let x = i as f64 / 10.0;
            let lhs = log_gamma(0.5).unwrap() + log_gamma(2.0 * x).unwrap();
            let rhs = (2.0 * x - 1.0) * 2.0f64.ln()
                + log_gamma(x).unwrap()
                + log_gamma(x + 0.5).unwrap();
            let scale = rhs.abs().max(1.0);
            assert!((lhs - rhs).abs() <= 1e-11 * scale, "duplication at x={x}");
        }
    }

    #[test]
    fn log_gamma_extreme_range() {
        // Stirling directly at 1e6; recurrence-consistency near 1e−6.
        let big = log_gamma(1e6).unwrap();
        // ln Γ(1e6) = (1e6 − 0.5) ln 1e6 − 1e6 + ln √(2π) + 1/(12e6) ...
        let expect = (1e6 - 0.5) * 1e6f64.ln() - 1e6 + LN_SQRT_2PI + 1.0 / 12e6;
        assert!((big - expect).abs() <= 1e-13 * expect.abs());
        let small = log_gamma(1e-6).unwrap();
        // Γ(x) ~ 1/x − γ_E as x → 0, so ln Γ(x) ≈ −ln x − γ_E x.
        let expect = -(1e-6f64).ln() - EULER_GAMMA * 1e-6;
        assert!((small - expect).abs() < 1e-11);
    }

    #[test]
    fn digamma_classic_points() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-13);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-13);
        let expect = -EULER_GAMMA - 2.0 * 2.0f64.ln();
        assert!((digamma(0.5).unwrap() - expect).abs() < 1e-13);
        assert!(digamma(0.0).is_err());
    }

    #[test]
    fn digamma_recurrence_grid() {
        for i in 1..=300 {
            let x = i as f64 / 7.0;
            let r = digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x;
            assert!(r.abs() <= 1e-12, "digamma recurrence at x={x}");
        }
    }

    #[test]
    fn complex_log_gamma_on_real_axis() {
        for i in 1..=80 {
            let x = i as f64 / 4.0;
            let c = log_gamma_complex(Complex64::new(x, 0.0)).unwrap();
            assert!((c.re - log_gamma(x).unwrap()).abs() < 1e-12);
            assert!(c.im.abs() < 1e-12);
        }
        let z1 = log_gamma_complex(Complex64::new(1.0, 0.0)).unwrap();
        assert!(z1.norm() < 1e-13);
    }

    #[test]
    fn complex_log_gamma_imaginary_modulus() {
        // |Γ(it)|² = π / (t sinh(πt)), checked at t = 1.
        let lg = log_gamma_complex(Complex64::new(0.0, 1.0)).unwrap();
        let modulus_sq = (2.0 * lg.re).exp();
        assert!((modulus_sq - 0.2720290549821331).abs() < 1e-12);
    }

    #[test]
    fn complex_log_gamma_recurrence_and_magnitude() {
        // exp(lnΓ(z+1)) = z·exp(lnΓ(z)) across the |z| ≤ 100 range.
        let pts = [
            Complex64::new(3.0, 40.0),
            Complex64::new(-8.3, 15.0),
            Complex64::new(0.2, -70.0),
            Complex64::new(60.0, 60.0),
            Complex64::new(-0.7, 0.3),
        ];
        for &z in &pts {
            let a = log_gamma_complex(z + 1.0).unwrap();
            let b = log_gamma_complex(z).unwrap();
            let resid = (a - b - z.ln()).exp();
            assert!(
                (resid - Complex64::new(1.0, 0.0)).norm() < 1e-10,
                "recurrence at {z}"
            );
        }
    }

    #[test]
    fn complex_log_gamma_pole_guard() {
        assert!(log_gamma_complex(Complex64::new(-3.0, 0.0)).is_err());
        assert!(log_gamma_complex(Complex64::new(-3.0 + 1e-13, 0.0)).is_err());
        assert!(log_gamma_complex(Complex64::new(-3.0 + 1e-6, 0.0)).is_ok());
    }

    #[test]
    fn reflection_product_points() {
        assert!((reflection_product(0.5).unwrap() - std::f64::consts::PI).abs() < 1e-14);
        assert!((reflection_product(1.0 / 3.0).unwrap() - 3.6275987284684357).abs() < 1e-13);
        // Oracle route: two log-gamma calls.
        let oracle = (log_gamma(0.25).unwrap() + log_gamma(0.75).unwrap()).exp();
        let got = reflection_product(0.25).unwrap();
        assert!((got - oracle).abs() < 1e-13 * oracle);
        assert!((got - 4.442882938158366).abs() < 1e-13);
        assert!(reflection_product(3.0).is_err());
    }

    fn rising(offset: &BigRational, k: u32) -> BigRational {
        let mut acc = BigRational::one();
        for i in 0..k {
            acc *= offset + BigRational::from_integer(BigInt::from(i));
        }
        acc
    }

    #[test]
    fn gauss_expand_exact_recombination() {
        // Γ(mn+a)/Γ(a) = per_n^n · Π (o_i)_n for n ≤ 10, in exact arithmetic.
        for (m, a) in [(1u32, 1i64), (2, 1), (3, 1), (2, 3), (4, 2), (6, 1)] {
            let fac = gauss_multiplication_expand(m, &Real::from_int(a)).unwrap();
            assert_eq!(fac.offsets.len(), m as usize);
            let a_rat = BigRational::from_integer(BigInt::from(a));
            for n in 0..=10u32 {
                let lhs = rising(&a_rat, m * n);
                let mut rhs = fac
                    .per_n
                    .as_exact()
                    .unwrap()
                    .clone()
                    .pow(n as i32);
                for o in &fac.offsets {
                    rhs *= rising(o.as_exact().unwrap(), n);
                }
                assert_eq!(lhs, rhs, "m={m} a={a} n={n}");
            }
        }
    }

    #[test]
    fn gauss_expand_float_recombination() {
        // Recombining reproduces Γ(mz+a) at 5 non-integer points to 1e−10.
        let fac = gauss_multiplication_expand(3, &Real::from_ratio(5, 4)).unwrap();
        for &n in &[0.1, 0.7, 1.3, 2.9, 7.6] {
            let direct = log_gamma(3.0 * n + 1.25).unwrap();
            let recomb = fac.recombine_log(n).unwrap();
            assert!(
                (direct - recomb).abs() <= 1e-10 * direct.abs().max(1.0),
                "n={n}: {direct} vs {recomb}"
            );
        }
    }

    #[test]
    fn gauss_expand_identity_case() {
        let fac = gauss_multiplication_expand(1, &Real::from_int(1)).unwrap();
        assert_eq!(fac.per_n, Real::from_int(1));
        assert_eq!(fac.offsets, vec![Real::from_int(1)]);
        assert!(fac.log_const.abs() < 1e-15);
    }

    #[test]
    fn signed_log_gamma_negative_axis() {
        // Γ(−1.5) = 4√π/3 > 0? Γ(−1.5) = Γ(0.5)/((−1.5)(−0.5)) = √π/0.75 > 0.
        let (lg, sign) = signed_log_gamma(-1.5).unwrap();
        let expect = (4.0 * std::f64::consts::PI.sqrt() / 3.0).ln();
        assert_eq!(sign, 1);
        assert!((lg - expect).abs() < 1e-12);
        // Γ(−0.5) = −2√π < 0.
        let (lg, sign) = signed_log_gamma(-0.5).unwrap();
        assert_eq!(sign, -1);
        assert!((lg - (2.0 * std::f64::consts::PI.sqrt()).ln()).abs() < 1e-12);
        assert!(signed_log_gamma(-2.0).is_err());
    }

    #[test]
    fn rgamma_at_poles_is_none() {
        assert!(log_rgamma_signed(0.0, 1e-9).is_none());
        assert!(log_rgamma_signed(-7.0, 1e-9).is_none());
        let (lg, s) = log_rgamma_signed(-2.5, 1e-9).unwrap();
        // 1/Γ(−2.5) = sin(−2.5π)Γ(3.5)/π = −Γ(3.5)/π
        let expect = (log_gamma(3.5).unwrap().exp() / std::f64::consts::PI).ln();
        assert_eq!(s, -1);
        assert!((lg - expect).abs() < 1e-12);
    }
}
