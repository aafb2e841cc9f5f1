//! Independent numerical oracles: adaptive Mellin quadrature, density
//! reconstruction for X_{a,b,c,d}^{−1}, non-negativity scans, and empirical
//! bracketing of the two-parametric boundary function.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, eval, Error, Result};
use crate::gamma_kernel::log_gamma;
use crate::mittag_leffler::{asymptotic_series, ml3_eval, ml3_min_on_ray, EvalResult, MLParams};

/// Grid metadata attached to every scan report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub n: usize,
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Spacing {
    Log,
    Linear,
}

impl GridSpec {
    pub fn log(t_min: f64, t_max: f64, n: usize) -> Self {
        GridSpec {
            t_min,
            t_max,
            n,
            spacing: Spacing::Log,
        }
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.n.max(2);
        (0..n)
            .map(|i| {
                let frac = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Log => self.t_min * (self.t_max / self.t_min).powf(frac),
                    Spacing::Linear => self.t_min + frac * (self.t_max - self.t_min),
                }
            })
            .collect()
    }
}

/// What a clean scan certifies. A grid witness is explicitly *not* a proof
/// of non-negativity; a rigorous negative is a disproof at a single point
/// with a 10× margin over the evaluation error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certification {
    GridWitness,
    RigorousNegative,
}

/// Grid-scan result.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub min_value: f64,
    pub argmin: f64,
    pub est_at_min: f64,
    pub grid: GridSpec,
    pub certified: Certification,
    /// Points excluded from the minimum because their error estimate
    /// exceeds half their magnitude (no usable sign information).
    pub n_flagged: usize,
    /// Sign of the leading residue term beyond the grid, when available.
    pub tail_leading_sign: Option<i8>,
}

/// One scan sample, exported as a CSV row (t, value, est_error).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSample {
    pub t: f64,
    pub value: f64,
    pub est_error: f64,
}

fn validate_positive(params: &[(&str, f64)]) -> Result<()> {
    for (name, v) in params {
        if !(*v > 0.0) || !v.is_finite() {
            return Err(domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    Ok(())
}

/// Density of X_{a,b,c,d}^{−1} at t:
/// g(t) = Γ(a+b)Γ(c)/(Γ(a)Γ(b)) · t^{b−1} · E^{a+b}_{d, c+bd}(−t).
/// The value may be negative — that is exactly what the scans look for.
pub fn density_x_inverse(a: f64, b: f64, c: f64, d: f64, t: f64) -> Result<EvalResult> {
    let r = density_raw(a, b, c, d, t)?;
    if !r.est_error.is_finite() {
        return Err(eval(format!(
            "Mittag-Leffler branch failed (est_error = inf) at t = {t}"
        )));
    }
    Ok(r)
}

fn density_raw(a: f64, b: f64, c: f64, d: f64, t: f64) -> Result<EvalResult> {
    validate_positive(&[("a", a), ("b", b), ("c", c), ("d", d), ("t", t)])?;
    let p = MLParams::new(d, c + b * d, a + b)?;
    let ml = ml3_eval(&p, -t)?;
    let log_pref = log_gamma(a + b)? + log_gamma(c)? - log_gamma(a)? - log_gamma(b)?;
    let weight = log_pref.exp() * t.powf(b - 1.0);
    Ok(EvalResult {
        value: weight * ml.value,
        branch: ml.branch,
        est_error: weight * ml.est_error,
    })
}

/// Scan samples of the reconstructed density on a grid (CSV export route).
pub fn density_grid(a: f64, b: f64, c: f64, d: f64, grid: &GridSpec) -> Result<Vec<GridSample>> {
    validate_positive(&[("a", a), ("b", b), ("c", c), ("d", d)])?;
    grid.points()
        .into_par_iter()
        .map(|t| {
            density_raw(a, b, c, d, t).map(|r| GridSample {
                t,
                value: r.value,
                est_error: r.est_error,
            })
        })
        .collect()
}

/// Non-negativity scan of the reconstructed density of X_{a,b,c,d}^{−1}.
///
/// The grid is log-uniform on (0, t_max]; when the minimum sits at the top
/// edge and is negative, the range is extended tenfold up to 1e7.
pub fn nonneg_scan(a: f64, b: f64, c: f64, d: f64, t_max: f64, n_grid: usize) -> Result<ScanReport> {
    validate_positive(&[("a", a), ("b", b), ("c", c), ("d", d), ("t_max", t_max)])?;
    if n_grid < 2 {
        return Err(domain("n_grid must be at least 2"));
    }
    let mut t_hi = t_max;
    loop {
        let report = nonneg_scan_once(a, b, c, d, t_hi, n_grid)?;
        let at_edge = (report.argmin - t_hi).abs() <= 1e-12 * t_hi;
        if at_edge && report.min_value < 0.0 && t_hi < 1e7 {
            t_hi = (t_hi * 10.0).min(1e7);
            continue;
        }
        return Ok(report);
    }
}

fn nonneg_scan_once(a: f64, b: f64, c: f64, d: f64, t_max: f64, n_grid: usize) -> Result<ScanReport> {
    let grid = GridSpec::log(t_max * 1e-8, t_max, n_grid);
    let samples: Vec<(f64, EvalResult)> = grid
        .points()
        .into_par_iter()
        .map(|t| density_raw(a, b, c, d, t).map(|r| (t, r)))
        .collect::<Result<_>>()?;
    let mut min_value = f64::INFINITY;
    let mut argmin = f64::NAN;
    let mut est_at_min = 0.0;
    let mut n_flagged = 0usize;
    for (t, r) in &samples {
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
        return Err(eval("every density sample was flagged as unreliable"));
    }
    let certified = if min_value < 0.0 && min_value.abs() > 10.0 * est_at_min {
        Certification::RigorousNegative
    } else {
        Certification::GridWitness
    };
    let p = MLParams::new(d, c + b * d, a + b)?;
    let tail_leading_sign = if d < 2.0 {
        let probe = asymptotic_series(&p, (t_max * 10.0).min(1e8));
        (probe.value != 0.0 && probe.est_error.is_finite())
            .then(|| if probe.value > 0.0 { 1i8 } else { -1 })
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

/// Adaptive Simpson quadrature with a 2^20-panel subdivision cap.
fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth >= 20 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
            + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    rec(f, a, b, fa, fm, fb, whole, tol, 0)
}

/// Adaptive quadrature of ∫₀^{t_cut} t^{s−1} f(t) dt plus a power-law tail
/// estimate fitted from f near t_cut; absolute error target `tol`.
///
/// The t^{s−1} endpoint singularity is removed by the substitution
/// t = u^{1/s} on (0,1), so only smooth integrands reach the Simpson core.
pub fn mellin_quadrature<F: Fn(f64) -> f64 + Sync>(
    f: &F,
    s: f64,
    t_cut: f64,
    tol: f64,
) -> Result<f64> {
    if !(s > 0.0) {
        return Err(domain(format!("Mellin exponent must satisfy s > 0, got {s}")));
    }
    if !(t_cut > 0.0) || !t_cut.is_finite() {
        return Err(domain(format!("t_cut must be positive and finite, got {t_cut}")));
    }
    if !(tol > 0.0) {
        return Err(domain("tolerance must be positive"));
    }
    let lower = if t_cut >= 1.0 {
        // ∫₀^1 t^{s−1} f(t) dt = (1/s) ∫₀^1 f(u^{1/s}) du
        let g = |u: f64| {
            if u <= 0.0 {
                f(0.0_f64.max(1e-300)) / s
            } else {
                f(u.powf(1.0 / s)) / s
            }
        };
        adaptive_simpson(&g, 0.0, 1.0, tol / 3.0)
    } else {
        let g = |u: f64| {
            if u <= 0.0 {
                f(1e-300) / s
            } else {
                f((u.powf(1.0 / s)) * t_cut) / s
            }
        };
        // ∫₀^{t_cut} t^{s−1} f(t) dt = (t_cut^s / s) ∫₀^1 f(t_cut u^{1/s}) du
        return Ok(t_cut.powf(s) * adaptive_simpson(&g, 0.0, 1.0, tol / 2.0));
    };
    let upper = {
        let g = |t: f64| t.powf(s - 1.0) * f(t);
        adaptive_simpson(&g, 1.0, t_cut, tol / 3.0)
    };
    let body = lower + upper;
    // Tail model: f ~ C t^{−p} beyond t_cut.
    let f1 = f(t_cut);
    let tail = if f1.abs() <= tol.max(1e-300) || f1.abs() <= 1e-14 * body.abs() {
        0.0
    } else {
        let r = 1.25f64;
        let f2 = f(t_cut * r);
        let f3 = f(t_cut * r * r);
        if f1.abs() > 0.0 && f2 / f1 > 0.0 && f3 / f2 > 0.0 {
            let p1 = -(f2 / f1).ln() / r.ln();
            let p2 = -(f3 / f2).ln() / r.ln();
            let p_hat = 0.5 * (p1 + p2);
            if (p1 - p2).abs() > 0.2 * p_hat.abs() + 0.1 {
                return Err(eval(format!(
                    "tail power fit did not converge at t_cut = {t_cut} (p1 = {p1}, p2 = {p2})"
                )));
            }
            if p_hat <= s + 0.05 {
                return Err(eval(format!(
                    "tail decays like t^-{p_hat:.3}, too slow for Mellin exponent s = {s}"
                )));
            }
            f1 * t_cut.powf(s) / (p_hat - s)
        } else {
            // Sign change right at the cut: the tail is oscillation-dominated
            // and already below the decayed envelope; neglect it.
            0.0
        }
    };
    Ok(body + tail)
}

/// Empirical boundary estimate f̂(ρ): bisection on μ of the predicate
/// "the ray scan of E_{ρ,μ}(−t) certifies no rigorous negative".
pub fn boundary_bracket(
    rho: f64,
    mu_lo: f64,
    mu_hi: f64,
    t_max: f64,
    tol_mu: f64,
) -> Result<f64> {
    if !(rho > 1.0 && rho < 2.0) {
        return Err(domain(format!(
            "boundary_bracket needs rho in (1, 2), got {rho} (endpoints are exact: f(1)=1, f(2)=3)"
        )));
    }
    if !(mu_lo > 0.0) || !(mu_hi > mu_lo) {
        return Err(domain(format!("need 0 < mu_lo < mu_hi, got ({mu_lo}, {mu_hi})")));
    }
    if !(tol_mu > 0.0) {
        return Err(domain("tol_mu must be positive"));
    }
    let nonneg = |mu: f64| -> Result<bool> {
        let report = ml3_min_on_ray(&MLParams::new(rho, mu, 1.0)?, t_max, 2048)?;
        Ok(report.certified != Certification::RigorousNegative)
    };
    let mut lo = mu_lo;
    let mut hi = mu_hi;
    if nonneg(lo)? {
        return Err(Error::Bracket(format!(
            "predicate already non-negative at mu_lo = {lo}; no sign change in [{mu_lo}, {mu_hi}]"
        )));
    }
    if !nonneg(hi)? {
        return Err(Error::Bracket(format!(
            "predicate still negative at mu_hi = {hi}; no sign change in [{mu_lo}, {mu_hi}]"
        )));
    }
    while hi - lo > tol_mu {
        let mid = 0.5 * (lo + hi);
        if nonneg(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
