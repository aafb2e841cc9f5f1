//! Named families of Gamma-type moment functions and the eight
//! factorial-ratio presets.

use crate::error::{domain, Result};
use crate::moment_spec::{GammaFactor, GammaTypeSpec};
use crate::real::Real;

fn fac(slope: Real, offset: Real) -> GammaFactor {
    GammaFactor::new(slope, offset)
}

/// Gamma variable Γ_c: E(X^s) = Γ(c+s)/Γ(c), s > −c.
pub fn gamma_rv(c: &Real) -> Result<GammaTypeSpec> {
    if !c.is_positive() {
        return Err(domain(format!("Gamma parameter must be positive, got {c}")));
    }
    GammaTypeSpec::new(Real::one(), vec![fac(Real::one(), c.clone())], vec![])
}

/// Beta variable B_{a,b}: E(X^s) = Γ(a+b)Γ(a+s)/(Γ(a)Γ(a+b+s)), s > −a.
pub fn beta_rv(a: &Real, b: &Real) -> Result<GammaTypeSpec> {
    if !a.is_positive() || !b.is_positive() {
        return Err(domain(format!("Beta parameters must be positive, got ({a}, {b})")));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![fac(Real::one(), a.clone())],
        vec![fac(Real::one(), a + b)],
    )
}

/// X_{a,b,c,d}: E(X^s) = Γ(c)Γ(a+s)Γ(b−s)/(Γ(a)Γ(b)Γ(c+ds)), −a < s < b.
/// Any nonzero d is accepted here; the classifier restricts to d > 0.
pub fn x_abcd(a: &Real, b: &Real, c: &Real, d: &Real) -> Result<GammaTypeSpec> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(domain(format!(
            "X_{{a,b,c,d}} needs positive a, b, c; got ({a}, {b}, {c})"
        )));
    }
    if d.is_zero() {
        return Err(domain("X_{a,b,c,d} needs nonzero d"));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![
            fac(Real::one(), a.clone()),
            fac(Real::from_int(-1), b.clone()),
        ],
        vec![fac(d.clone(), c.clone())],
    )
}

/// The two-sided Gamma-ratio family of Kadankova–Simon–Wang:
/// E(D^s) = Γ(c)Γ(d)Γ(a+s)Γ(b−s)/(Γ(a)Γ(b)Γ(c+s)Γ(d+s)).
pub fn d_ksw(a: &Real, b: &Real, c: &Real, d: &Real) -> Result<GammaTypeSpec> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        if !v.is_positive() {
            return Err(domain(format!("D-family parameter {name} must be positive, got {v}")));
        }
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![
            fac(Real::one(), a.clone()),
            fac(Real::from_int(-1), b.clone()),
        ],
        vec![
            fac(Real::one(), c.clone()),
            fac(Real::one(), d.clone()),
        ],
    )
}

/// Młotkowski–Penson Y_{α,r}:
/// E(Y^s) = Γ(r+1+s)/(Γ(1+αs)Γ(r+1+(1−α)s)).
pub fn y_mp(alpha: &Real, r: &Real) -> Result<GammaTypeSpec> {
    let one = Real::one();
    if !alpha.is_positive() || alpha >= &one {
        return Err(domain(format!("Y_MP needs alpha in (0,1), got {alpha}")));
    }
    let r1 = r + &one;
    if !r1.is_positive() {
        return Err(domain(format!("Y_MP needs r > -1 for a valid spec, got {r}")));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![fac(Real::one(), r1.clone())],
        vec![
            fac(alpha.clone(), one.clone()),
            fac(&one - alpha, r1),
        ],
    )
}

/// Ferreira–Simon M_{α,β}: E(M^s) = Γ(α+β)Γ(1+s)/Γ(α+β+αs).
pub fn m_fs(alpha: &Real, beta: &Real) -> Result<GammaTypeSpec> {
    let ab = alpha + beta;
    if !ab.is_positive() || alpha.is_zero() {
        return Err(domain(format!(
            "M_FS spec needs alpha+beta > 0 and alpha != 0, got ({alpha}, {beta})"
        )));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![fac(Real::one(), Real::one())],
        vec![fac(alpha.clone(), ab)],
    )
}

/// Tilted M_{α,β,t}: E(M^s) = Γ(α(1+t)+β)Γ(1+t+s)/(Γ(1+t)Γ(α(1+t)+β+αs)).
pub fn m_fs_t(alpha: &Real, beta: &Real, t: &Real) -> Result<GammaTypeSpec> {
    let one = Real::one();
    let t1 = t + &one;
    if !t1.is_positive() {
        return Err(domain(format!("M_{{α,β,t}} needs t > -1, got {t}")));
    }
    let mu = alpha * &t1 + beta;
    if !mu.is_positive() || alpha.is_zero() {
        return Err(domain(format!(
            "M_{{α,β,t}} needs α(1+t)+β > 0 and alpha != 0, got ({alpha}, {beta}, {t})"
        )));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![fac(Real::one(), t1)],
        vec![fac(alpha.clone(), mu)],
    )
}

/// Dufresne B^{(a,b,c,d)}:
/// E(B^s) = Γ(a+b)Γ(c+d)Γ(a+s)Γ(c+s)/(Γ(a)Γ(c)Γ(a+b+s)Γ(c+d+s)).
pub fn dufresne_b(a: &Real, b: &Real, c: &Real, d: &Real) -> Result<GammaTypeSpec> {
    if !a.is_positive() || !c.is_positive() {
        return Err(domain(format!("Dufresne B needs a, c > 0, got ({a}, {c})")));
    }
    let ab = a + b;
    let cd = c + d;
    if !ab.is_positive() || !cd.is_positive() {
        return Err(domain(format!(
            "Dufresne B spec needs a+b > 0 and c+d > 0, got ({}, {})",
            ab, cd
        )));
    }
    GammaTypeSpec::new(
        Real::one(),
        vec![fac(Real::one(), a.clone()), fac(Real::one(), c.clone())],
        vec![fac(Real::one(), ab), fac(Real::one(), cd)],
    )
}

/// Bosch F_{α,t}:
/// E(F^s) = Γ(t)Γ(1−s/t)Γ(1+s/t)/(Γ(1−αs/t)Γ(1+αs/t)Γ(t+s)).
pub fn bosch_f(alpha: &Real, t: &Real) -> Result<GammaTypeSpec> {
    let one = Real::one();
    if !alpha.is_positive() || alpha >= &one {
        return Err(domain(format!("F_{{α,t}} needs alpha in (0,1), got {alpha}")));
    }
    if !t.is_positive() {
        return Err(domain(format!("F_{{α,t}} needs t > 0, got {t}")));
    }
    let inv_t = &one / t;
    let alpha_over_t = alpha / t;
    GammaTypeSpec::new(
        Real::one(),
        vec![
            fac(-&inv_t, one.clone()),
            fac(inv_t, one.clone()),
        ],
        vec![
            fac(-&alpha_over_t, one.clone()),
            fac(alpha_over_t, one.clone()),
            fac(one.clone(), t.clone()),
        ],
    )
}

/// Half α-Cauchy |C_α|:
/// E(|C_α|^s) = sin(π/α)/π · Γ(1/α+s/α)Γ(1−1/α−s/α), −1 < s < α−1.
/// The auto-normalizer equals sin(π/α)/π by the reflection formula.
pub fn half_cauchy_abs(alpha: &Real) -> Result<GammaTypeSpec> {
    if alpha <= &Real::one() {
        return Err(domain(format!("|C_α| needs alpha > 1, got {alpha}")));
    }
    let inv = Real::one() / alpha;
    GammaTypeSpec::new(
        Real::one(),
        vec![
            fac(inv.clone(), inv.clone()),
            fac(-&inv, Real::one() - &inv),
        ],
        vec![],
    )
}

/// The eight factorial-ratio presets μ^(1)–μ^(8); all are Hausdorff moment
/// sequences after scaling by their support endpoint.
pub fn mu_preset(index: u32) -> Result<GammaTypeSpec> {
    let f = |m: i64, a: i64| fac(Real::from_int(m), Real::from_int(a));
    let (num, den) = match index {
        1 => (vec![f(2, 1)], vec![f(1, 1), f(1, 1)]),
        2 => (vec![f(6, 1), f(1, 1)], vec![f(3, 1), f(2, 1), f(2, 1)]),
        3 => (vec![f(3, 1)], vec![f(1, 1), f(2, 1)]),
        4 => (vec![f(3, 3)], vec![f(1, 1), f(2, 3)]),
        5 => (vec![f(6, 1), f(4, 1)], vec![f(2, 1), f(3, 1), f(5, 1)]),
        6 => (vec![f(5, 1)], vec![f(2, 1), f(3, 1)]),
        7 => (vec![f(4, 2)], vec![f(1, 1), f(3, 4)]),
        8 => (vec![f(4, 4)], vec![f(1, 1), f(3, 6)]),
        _ => return Err(domain(format!("preset index must be 1..=8, got {index}"))),
    };
    GammaTypeSpec::new(Real::one(), num, den)
}

/// Preset by CLI name ("mu1".."mu8").
pub fn mu_preset_by_name(name: &str) -> Result<GammaTypeSpec> {
    let idx = name
        .strip_prefix("mu")
        .and_then(|s| s.parse::<u32>().ok())
        .ok_or_else(|| domain(format!("unknown preset {name:?} (expected mu1..mu8)")))?;
    mu_preset(idx)
}
