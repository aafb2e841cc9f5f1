//! Real-line evaluation of the one/two/three-parametric Mittag-Leffler
//! functions and the Wright function.
//!
//! Three evaluation routes share the work:
//! * a float series with sign-split compensated summation and an explicit
//!   cancellation penalty in `est_error`;
//! * an exact big-rational series for integer ρ, where the Γ-ratio between
//!   consecutive coefficients is a finite product of rationals — this kills
//!   the catastrophic cancellation of E(−t) completely and is the only
//!   route that stays accurate for ρ = 2 at large |z|;
//! * the algebraic residue expansion of the Mellin–Barnes integral for
//!   z ≤ −Z₀ and ρ < 2, truncated at its smallest term.
//!
//! For non-integer ρ the series branch hands over to the residue expansion
//! below Z₀ as soon as the cancellation-noise model of the series exceeds
//! the expansion's error estimate; `est_error` stays honest either way.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, eval, Result};
use crate::gamma_kernel::{log_gamma_unchecked, log_rgamma_signed};
use crate::kahan::SignSplitSum;
use crate::numerics::{Certification, GridSpec, ScanReport};
use crate::real::{big_ratio_log2_signed, exp2_accurate};

/// Distance within which μ−ρ(γ+n) counts as a Γ pole and the coefficient
/// is dropped (1/Γ vanishes there).
const COEFF_DROP_TOL: f64 = 1e-9;

const EPS: f64 = f64::EPSILON;

/// Parameters (ρ, μ, γ) of E^γ_{ρ,μ}; all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MLParams {
    pub rho: f64,
    pub mu: f64,
    pub gamma: f64,
}

impl MLParams {
    pub fn new(rho: f64, mu: f64, gamma: f64) -> Result<Self> {
        if !(rho > 0.0) || !(mu > 0.0) || !(gamma > 0.0) {
            return Err(domain(format!(
                "Mittag-Leffler parameters must be positive, got ({rho}, {mu}, {gamma})"
            )));
        }
        Ok(MLParams { rho, mu, gamma })
    }
}

/// Which evaluation branch produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Series,
    Asymptotic,
}

/// Value with branch tag and an error estimate; `est_error` bounds the
/// truncation error by construction and adds a cancellation penalty on the
/// float series route.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub branch: Branch,
    pub est_error: f64,
}

/// Series/asymptotic crossover Z₀ = max(10, (20 + μ + ργ)^ρ).
pub(crate) fn crossover(p: &MLParams) -> f64 {
    10f64.max((20.0 + p.mu + p.rho * p.gamma).powf(p.rho))
}

/// Absolute scale of f64 cancellation noise in the series at z = −t:
/// the gross partial sums reach ~e^{t^{1/ρ}}.
fn series_noise_model(p: &MLParams, t: f64) -> f64 {
    16.0 * EPS * t.powf(1.0 / p.rho).min(700.0).exp()
}

fn integer_rho(p: &MLParams) -> Option<u32> {
    if p.rho.fract() == 0.0 && p.rho >= 1.0 && p.rho <= 64.0 {
        Some(p.rho as u32)
    } else {
        None
    }
}

/// E^γ_{ρ,μ}(z) on the real line.
pub fn ml3_eval(p: &MLParams, z: f64) -> Result<EvalResult> {
    MLParams::new(p.rho, p.mu, p.gamma)?;
    if !z.is_finite() || z.abs() > 1e8 {
        return Err(domain(format!("|z| must be finite and <= 1e8, got {z}")));
    }
    if z == 0.0 {
        let value = (-log_gamma_unchecked(p.mu)).exp();
        return Ok(EvalResult {
            value,
            branch: Branch::Series,
            est_error: 4.0 * EPS * value.abs(),
        });
    }
    if z < 0.0 {
        let t = -z;
        let z0 = crossover(p);
        if p.rho < 2.0 && t >= z0 {
            return Ok(asymptotic_series(p, t));
        }
        if let Some(m) = integer_rho(p) {
            if t >= 2.0 {
                return exact_series(p, m, z);
            }
            return float_series(p, z);
        }
        // Non-integer ρ below Z₀: prefer the residue expansion when the
        // float series would drown in cancellation noise.
        let noise = series_noise_model(p, t);
        if p.rho < 2.0 && noise > 1e-13 {
            let asym = asymptotic_series(p, t);
            if asym.est_error < noise {
                return Ok(asym);
            }
        }
        return float_series(p, z);
    }
    float_series(p, z)
}

/// Two-parametric E_{ρ,μ}(z) = E^1_{ρ,μ}(z).
pub fn ml2_eval(rho: f64, mu: f64, z: f64) -> Result<EvalResult> {
    ml3_eval(&MLParams::new(rho, mu, 1.0)?, z)
}

/// Float series with sign-split Kahan accumulation.
pub(crate) fn float_series(p: &MLParams, z: f64) -> Result<EvalResult> {
    let ln_abs_z = z.abs().ln();
    let neg = z < 0.0;
    let mut lg_poch = 0.0f64; // ln Γ(γ+n) − ln Γ(γ)
    let mut lg_fact = 0.0f64; // ln n!
    let mut sum = SignSplitSum::new();
    // Every term is assembled from log pieces of size L, each carrying
    // ~ε·L absolute error, so the per-term relative error is ε·ΣL — the
    // penalty has to weight each |term| by its own log magnitudes.
    let mut log_noise = 0.0f64;
    let mut small_streak = 0u32;
    let mut last_mag = f64::INFINITY;
    let mut n = 0u64;
    loop {
        let lg_mu_term = log_gamma_unchecked(p.mu + p.rho * n as f64);
        let n_ln_z = n as f64 * ln_abs_z;
        let ln_term = lg_poch + n_ln_z - lg_fact - lg_mu_term;
        let mag = ln_term.exp();
        let term = if neg && n % 2 == 1 { -mag } else { mag };
        sum.add(term);
        log_noise += mag * (lg_poch.abs() + n_ln_z.abs() + lg_fact.abs() + lg_mu_term.abs() + 4.0);
        if !sum.gross().is_finite() || sum.gross() > 1e300 {
            // Partials exceed the representable range; for z > 0 the value
            // itself is at or beyond f64::MAX.
            let value = if z > 0.0 { f64::INFINITY } else { sum.value() };
            return Ok(EvalResult {
                value,
                branch: Branch::Series,
                est_error: f64::INFINITY,
            });
        }
        if mag < 1e-17 * sum.value().abs().max(1.0) && mag <= last_mag {
            small_streak += 1;
            if small_streak >= 3 && n > 4 {
                let est = 2.0 * mag + 16.0 * EPS * sum.gross() + 8.0 * EPS * log_noise;
                return Ok(EvalResult {
                    value: sum.value(),
                    branch: Branch::Series,
                    est_error: est,
                });
            }
        } else {
            small_streak = 0;
        }
        last_mag = mag;
        lg_poch += (p.gamma + n as f64).ln();
        lg_fact += (n as f64 + 1.0).ln();
        n += 1;
        if n > 200_000 {
            return Err(eval(format!(
                "Mittag-Leffler series did not converge within 200000 terms at z = {z}"
            )));
        }
    }
}

/// Exact-rational series for integer ρ = m:
/// Γ(μ)·E^γ_{m,μ}(z) = Σ T_n with T_{n+1}/T_n = z(γ+n)/((n+1)Π_i(μ+mn+i)),
/// summed over a running common denominator and rounded once at the end.
pub(crate) fn exact_series(p: &MLParams, m: u32, z: f64) -> Result<EvalResult> {
    let zr = BigRational::from_float(z).ok_or_else(|| domain("z must be finite"))?;
    let gr = BigRational::from_float(p.gamma).unwrap();
    let mr = BigRational::from_float(p.mu).unwrap();
    let (z_num, z_den) = (zr.numer().clone(), zr.denom().clone());
    let (g_num, g_den) = (gr.numer().clone(), gr.denom().clone());
    let (mu_num, mu_den) = (mr.numer().clone(), mr.denom().clone());

    let mut term_num = BigInt::one(); // A_n
    let mut common_den = BigInt::one(); // B_n > 0
    let mut sum_num = BigInt::one(); // S_n with Σ T_k = S_n / B_n

    let mut n: u64 = 0;
    loop {
        // Step factors for T_n → T_{n+1}.
        let mut step_num = &z_num * (&g_num + BigInt::from(n) * &g_den);
        for _ in 0..m {
            step_num *= &mu_den;
        }
        let mut step_den = &z_den * &g_den * BigInt::from(n + 1);
        for i in 0..m as u64 {
            step_den *= &mu_num + BigInt::from(m as u64 * n + i) * &mu_den;
        }
        term_num *= &step_num;
        common_den *= &step_den;
        sum_num = sum_num * &step_den + &term_num;
        n += 1;

        // Stop once the term ratio is below 1 and the term itself is far
        // below any representable contribution (2^−1100 absolute).
        if step_num.magnitude() < step_den.magnitude() {
            let tb = term_num.bits() as i64;
            let cb = common_den.bits() as i64;
            if tb + 1100 < cb {
                break;
            }
        }
        if n > 400_000 {
            return Err(eval(format!(
                "exact Mittag-Leffler series did not converge at z = {z}"
            )));
        }
    }

    let lg_mu = log_gamma_unchecked(p.mu);
    let value = match big_ratio_log2_signed(&sum_num, &common_den) {
        None => 0.0,
        Some((log2_ratio, sign)) => {
            let log2_value = log2_ratio - lg_mu / std::f64::consts::LN_2;
            sign as f64 * exp2_accurate(log2_value)
        }
    };
    // Final rounding plus Γ(μ) noise; truncation is below 2^{−1100}.
    let est_error = value.abs() * 1e-14 + 1e-305;
    Ok(EvalResult {
        value,
        branch: Branch::Series,
        est_error,
    })
}

/// Residue expansion over the right poles of the Mellin–Barnes integrand:
/// E ≈ Σ_n (−1)^n Γ(γ+n) t^{−γ−n} / (Γ(γ) n! Γ(μ−ρ(γ+n))), truncated at
/// the smallest term (super-asymptotic rule).
pub(crate) fn asymptotic_series(p: &MLParams, t: f64) -> EvalResult {
    let ln_t = t.ln();
    let lg_gamma0 = log_gamma_unchecked(p.gamma);
    let mut sum = SignSplitSum::new();
    let mut last_mag = f64::INFINITY;
    let mut n_added = 0u32;
    let mut trunc = 0.0f64;
    let mut grew_immediately = false;
    let mut lg_poch = 0.0f64;
    let mut lg_fact = 0.0f64;
    for n in 0..400u32 {
        let x = p.mu - p.rho * (p.gamma + n as f64);
        let contrib = log_rgamma_signed(x, COEFF_DROP_TOL).map(|(lr, sr)| {
            let ln_mag = lg_poch - lg_fact + lr - (p.gamma + n as f64) * ln_t;
            let sign = if n % 2 == 1 { -sr } else { sr };
            (ln_mag, sign)
        });
        if let Some((ln_mag, sign)) = contrib {
            if ln_mag > 700.0 {
                trunc = f64::INFINITY;
                grew_immediately = n_added == 0;
                break;
            }
            let mag = ln_mag.exp();
            if mag >= last_mag {
                trunc = mag.min(last_mag);
                grew_immediately = n_added <= 1;
                break;
            }
            sum.add(sign as f64 * mag);
            last_mag = mag;
            n_added += 1;
            if mag < 1e-30 * sum.value().abs().max(1e-280) {
                trunc = mag;
                break;
            }
        }
        lg_poch += (p.gamma + n as f64).ln();
        lg_fact += (n as f64 + 1.0).ln();
    }
    // Scale left out of the truncated expansion: the oscillatory component
    // exp(cos(π/ρ) t^{1/ρ}) present for 1 ≤ ρ < 2 (at ρ = 2 it no longer
    // decays and this term makes est_error O(1), which is honest).
    let value = sum.value();
    let est = if grew_immediately {
        f64::INFINITY
    } else {
        let osc = if p.rho >= 1.0 {
            let x = t.powf(1.0 / p.rho);
            let amp = (2.0 / p.rho)
                * (-lg_gamma0).exp()
                * t.powf((p.gamma - p.mu) / p.rho).max(t.powf((1.0 - p.mu) / p.rho))
                * (1.0 + x).powf((p.gamma - 1.0).max(0.0));
            amp * (x * (std::f64::consts::PI / p.rho).cos()).exp()
        } else {
            0.0
        };
        trunc + osc + 16.0 * EPS * sum.gross()
    };
    EvalResult {
        value,
        branch: Branch::Asymptotic,
        est_error: est,
    }
}

/// Wright function φ(α,β,z) = Σ z^n / (n! Γ(β+αn)); coefficients with
/// β+αn on a Γ pole vanish.
pub fn wright_eval(alpha: f64, beta: f64, z: f64) -> Result<EvalResult> {
    if !(alpha > -1.0) {
        return Err(domain(format!("Wright function needs alpha > -1, got {alpha}")));
    }
    if !z.is_finite() {
        return Err(domain("Wright argument must be finite"));
    }
    let ln_abs_z = if z == 0.0 { 0.0 } else { z.abs().ln() };
    let neg = z < 0.0;
    let mut sum = SignSplitSum::new();
    let mut lg_fact = 0.0f64;
    let mut log_noise = 0.0f64;
    let mut small_streak = 0u32;
    for n in 0..1_000_000u64 {
        let x = beta + alpha * n as f64;
        let mag = match log_rgamma_signed(x, COEFF_DROP_TOL) {
            None => 0.0,
            Some((lr, sr)) => {
                let n_ln_z = n as f64 * ln_abs_z;
                let ln_mag = n_ln_z - lg_fact + lr;
                let mag = ln_mag.exp();
                let sign = if neg && n % 2 == 1 { -sr } else { sr };
                sum.add(sign as f64 * mag);
                log_noise += mag * (n_ln_z.abs() + lg_fact.abs() + lr.abs() + 4.0);
                mag
            }
        };
        if !sum.gross().is_finite() || sum.gross() > 1e300 {
            return Ok(EvalResult {
                value: sum.value(),
                branch: Branch::Series,
                est_error: f64::INFINITY,
            });
        }
        if mag < 1e-17 * sum.value().abs().max(1.0) {
            small_streak += 1;
            if small_streak >= 4 && n > 4 {
                return Ok(EvalResult {
                    value: sum.value(),
                    branch: Branch::Series,
                    est_error: 2.0 * mag + 16.0 * EPS * sum.gross() + 8.0 * EPS * log_noise,
                });
            }
        } else {
            small_streak = 0;
        }
        lg_fact += (n as f64 + 1.0).ln();
        if z == 0.0 {
            // Only the n = 0 coefficient contributes.
            return Ok(EvalResult {
                value: sum.value(),
                branch: Branch::Series,
                est_error: 4.0 * EPS * sum.value().abs(),
            });
        }
    }
    Err(eval(format!(
        "Wright series did not converge at (alpha, beta, z) = ({alpha}, {beta}, {z})"
    )))
}

/// Minimum of E^γ_{ρ,μ}(−t) over a log-uniform grid t ∈ (0, t_max].
///
/// Points whose `est_error` exceeds half their magnitude are flagged and
/// excluded from the minimum (they carry no sign information); the report
/// counts them. `RigorousNegative` needs a 10× margin over `est_error`.
pub fn ml3_min_on_ray(p: &MLParams, t_max: f64, n_grid: usize) -> Result<ScanReport> {
    MLParams::new(p.rho, p.mu, p.gamma)?;
    if !(t_max > 0.0) || t_max > 1e8 {
        return Err(domain(format!("t_max must be in (0, 1e8], got {t_max}")));
    }
    if n_grid < 2 {
        return Err(domain("n_grid must be at least 2"));
    }
    let t_min = t_max * 1e-8;
    let grid = GridSpec::log(t_min, t_max, n_grid);
    let evals: Vec<(f64, EvalResult)> = {
        use rayon::prelude::*;
        grid.points()
            .into_par_iter()
            .map(|t| (t, ml3_eval(p, -t).expect("validated parameters")))
            .collect()
    };
    let mut min_value = f64::INFINITY;
    let mut argmin = f64::NAN;
    let mut est_at_min = 0.0;
    let mut n_flagged = 0usize;
    for (t, r) in &evals {
        let reliable = r.est_error.is_finite() && r.est_error <= (0.5 * r.value.abs()).max(1e-13);
        if !reliable {
            n_flagged += 1;
            continue;
        }
        if r.value < min_value {
            min_value = r.value;
            argmin = *t;
            est_at_min = r.est_error;
        }
    }
    if !argmin.is_finite() {
        return Err(eval("every grid point was flagged as unreliable"));
    }
    let certified = if min_value < 0.0 && min_value.abs() > 10.0 * est_at_min {
        Certification::RigorousNegative
    } else {
        Certification::GridWitness
    };
    // Leading-sign diagnostic for the tail beyond t_max.
    let tail_leading_sign = if p.rho < 2.0 {
        let probe = asymptotic_series(p, (t_max * 10.0).min(1e8));
        if probe.value != 0.0 && probe.est_error.is_finite() {
            Some(if probe.value > 0.0 { 1i8 } else { -1 })
        } else {
            None
        }
    } else {
        None
    };
    Ok(ScanReport {
        min_value,
        argmin,
        est_at_min,
        grid,
        certified,
        n_flagged,
        tail_leading_sign,
    })
}
