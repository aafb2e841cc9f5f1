//! Algebraic representation of Gamma-type moment functions
//! C D^s Π Γ(A_j s + a_j) / Π Γ(B_k s + b_k), with evaluation on the real
//! line and the imaginary axis, the γ/δ decay indices, Janson's necessary
//! condition, the support endpoint, and composition (power / product /
//! inverse) mirroring identities in law.
//!
//! Slopes and offsets are [`Real`]s: exact rationals whenever constructed
//! from rationals, so index comparisons like γ = 0 are exact.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, eval, Result};
use crate::gamma_kernel::{
    gauss_multiplication_expand, log_gamma, log_gamma_complex, log_gamma_unchecked,
    signed_log_gamma, POLE_GUARD,
};
use crate::real::Real;

/// One Γ(slope·s + offset) factor.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaFactor {
    pub slope: Real,
    pub offset: Real,
}

impl GammaFactor {
    pub fn new(slope: Real, offset: Real) -> Self {
        GammaFactor { slope, offset }
    }

    fn arg(&self, s: f64) -> f64 {
        self.slope.to_f64() * s + self.offset.to_f64()
    }
}

/// Open interval on which every numerator argument is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Strip {
    pub lo: f64,
    pub hi: f64,
}

impl Strip {
    pub fn contains(&self, s: f64) -> bool {
        s > self.lo && s < self.hi
    }

    pub fn intersect(&self, other: &Strip) -> Strip {
        Strip {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.lo < self.hi)
    }
}

/// Characteristic-function decay indices of Eq.-type
/// γ = Σ|A_j| − Σ|B_k|, δ = Σa_j − Σb_k − (J−K)/2.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaDeltaIndex {
    pub gamma: Real,
    pub delta: Real,
}

/// Outcome of the necessary condition for existence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JansonCheck {
    PassNecessary,
    FailNecessary,
}

/// Diagnostic attached when a denominator Γ hits a pole inside the strip.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DenominatorPole {
    pub factor_index: usize,
    pub argument: f64,
}

/// Gamma-type moment function, normalized so the value at s = 0 is 1.
#[derive(Debug, Clone)]
pub struct GammaTypeSpec {
    log_c: f64,
    d: Real,
    num: Vec<GammaFactor>,
    den: Vec<GammaFactor>,
}

impl GammaTypeSpec {
    /// Build a spec with the normalizing constant computed from the factors.
    pub fn new(d: Real, num: Vec<GammaFactor>, den: Vec<GammaFactor>) -> Result<Self> {
        Self::build(None, d, num, den)
    }

    /// Build with an explicitly supplied constant; it must normalize the
    /// s = 0 value to 1 within 1e−9 relative.
    pub fn with_constant(
        c: f64,
        d: Real,
        num: Vec<GammaFactor>,
        den: Vec<GammaFactor>,
    ) -> Result<Self> {
        Self::build(Some(c), d, num, den)
    }

    fn build(c: Option<f64>, d: Real, num: Vec<GammaFactor>, den: Vec<GammaFactor>) -> Result<Self> {
        if !d.is_positive() {
            return Err(domain(format!("scale D must be positive, got {d}")));
        }
        for f in num.iter().chain(den.iter()) {
            if f.slope.is_zero() {
                return Err(domain("zero slope in Gamma factor"));
            }
            if !f.offset.is_positive() {
                return Err(domain(format!(
                    "Gamma argument at s=0 must be positive, got offset {}",
                    f.offset
                )));
            }
        }
        let spec = GammaTypeSpec {
            log_c: 0.0,
            d,
            num,
            den,
        };
        let strip = spec.strip();
        if strip.is_empty() || !strip.contains(0.0) {
            return Err(domain("numerator positivity strip does not contain 0"));
        }
        let mut log_bare0 = 0.0;
        for f in &spec.num {
            log_bare0 += log_gamma(f.offset.to_f64())?;
        }
        for f in &spec.den {
            log_bare0 -= log_gamma(f.offset.to_f64())?;
        }
        let log_c = -log_bare0;
        if let Some(c) = c {
            if !(c > 0.0) {
                return Err(domain(format!("normalizer C must be positive, got {c}")));
            }
            if (c.ln() - log_c).abs() > 1e-9 {
                return Err(domain(format!(
                    "supplied C = {c} does not normalize the s=0 value to 1 (expected {})",
                    log_c.exp()
                )));
            }
        }
        Ok(GammaTypeSpec { log_c, ..spec })
    }

    pub fn constant(&self) -> f64 {
        self.log_c.exp()
    }

    pub fn log_constant(&self) -> f64 {
        self.log_c
    }

    pub fn scale(&self) -> &Real {
        &self.d
    }

    pub fn numerator(&self) -> &[GammaFactor] {
        &self.num
    }

    pub fn denominator(&self) -> &[GammaFactor] {
        &self.den
    }

    /// Open interval where every numerator argument is positive.
    /// Denominator zero crossings are reported by [`Self::den_zero_crossings`].
    pub fn strip(&self) -> Strip {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for f in &self.num {
            let bound = -(&f.offset / &f.slope).to_f64();
            if f.slope.is_positive() {
                lo = lo.max(bound);
            } else {
                hi = hi.min(bound);
            }
        }
        Strip { lo, hi }
    }

    /// Points inside the strip where a denominator argument hits {0,−1,…};
    /// the moment function vanishes there.
    pub fn den_zero_crossings(&self, max_points: usize) -> Vec<f64> {
        let strip = self.strip();
        let lo = strip.lo.max(-1e6);
        let hi = strip.hi.min(1e6);
        let mut out = Vec::new();
        for f in &self.den {
            let slope = f.slope.to_f64();
            let offset = f.offset.to_f64();
            let mut k = 0u64;
            while out.len() < max_points && k < 10_000 {
                let s = (-(k as f64) - offset) / slope;
                if s > lo && s < hi {
                    out.push(s);
                } else if k > 0 {
                    break;
                }
                k += 1;
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.truncate(max_points);
        out
    }

    /// Moment function at s, in log space. Returns Ok(0.0) when a
    /// denominator argument sits on a Γ pole (the value genuinely vanishes).
    pub fn mellin_eval(&self, s: f64) -> Result<f64> {
        Ok(self.mellin_eval_checked(s)?.0)
    }

    /// As [`Self::mellin_eval`], with the denominator-pole diagnostic.
    pub fn mellin_eval_checked(&self, s: f64) -> Result<(f64, Option<DenominatorPole>)> {
        let strip = self.strip();
        if !strip.contains(s) {
            return Err(domain(format!(
                "s = {s} outside the strip ({}, {})",
                strip.lo, strip.hi
            )));
        }
        let mut log_mag = self.log_c + s * self.d.to_f64().ln();
        let mut sign = 1i8;
        for f in &self.num {
            let x = f.arg(s);
            if x <= 0.0 {
                return Err(domain(format!("numerator argument {x} not positive at s = {s}")));
            }
            log_mag += log_gamma_unchecked(x);
        }
        for (k, f) in self.den.iter().enumerate() {
            let x = f.arg(s);
            if x < 0.5 && (x - x.round()).abs() < POLE_GUARD && x.round() <= 0.0 {
                return Ok((
                    0.0,
                    Some(DenominatorPole {
                        factor_index: k,
                        argument: x,
                    }),
                ));
            }
            let (lg, sg) = signed_log_gamma(x)?;
            log_mag -= lg;
            sign *= sg;
        }
        Ok((sign as f64 * log_mag.exp(), None))
    }

    /// Characteristic function of Y = log X at real t:
    /// C e^{it ln D} Π Γ(iA_j t + a_j) / Π Γ(iB_k t + b_k).
    pub fn char_fn_eval(&self, t: f64) -> Complex64 {
        let mut log_val = Complex64::new(self.log_c, t * self.d.to_f64().ln());
        for f in &self.num {
            let z = Complex64::new(f.offset.to_f64(), f.slope.to_f64() * t);
            log_val += log_gamma_complex(z).expect("positive offset keeps Γ off its poles");
        }
        for f in &self.den {
            let z = Complex64::new(f.offset.to_f64(), f.slope.to_f64() * t);
            log_val -= log_gamma_complex(z).expect("positive offset keeps Γ off its poles");
        }
        log_val.exp()
    }

    /// Exact γ/δ indices.
    pub fn gamma_delta(&self) -> GammaDeltaIndex {
        let mut gamma = Real::zero();
        let mut delta = Real::zero();
        for f in &self.num {
            gamma = gamma + f.slope.abs();
            delta = delta + f.offset.clone();
        }
        for f in &self.den {
            gamma = gamma - f.slope.abs();
            delta = delta - f.offset.clone();
        }
        let j_minus_k = self.num.len() as i64 - self.den.len() as i64;
        delta = delta - Real::from_ratio(j_minus_k, 2);
        GammaDeltaIndex { gamma, delta }
    }

    /// Necessary condition for existence: fails iff γ < 0, or γ = 0 and δ > 0.
    pub fn janson_check(&self) -> JansonCheck {
        let idx = self.gamma_delta();
        let zero = Real::zero();
        if idx.gamma < zero || (idx.gamma == zero && idx.delta > zero) {
            JansonCheck::FailNecessary
        } else {
            JansonCheck::PassNecessary
        }
    }

    /// Support endpoint D Π A_j^{A_j} Π B_k^{−B_k} when all numerator slopes
    /// are positive and γ = 0; `None` otherwise.
    pub fn support_upper(&self) -> Option<Real> {
        if self.num.iter().any(|f| !f.slope.is_positive()) {
            return None;
        }
        if self.gamma_delta().gamma != Real::zero() {
            return None;
        }
        let mut acc = self.d.clone();
        for f in &self.num {
            acc = acc * f.slope.pow(&f.slope);
        }
        for f in &self.den {
            acc = acc * f.slope.pow(&(-&f.slope));
        }
        Some(acc)
    }

    /// Spec of X^r (Mellin transform s ↦ M(r·s)).
    pub fn power(&self, r: &Real) -> Result<GammaTypeSpec> {
        if r.is_zero() {
            return Err(domain("power exponent must be nonzero"));
        }
        let map = |fs: &[GammaFactor]| {
            fs.iter()
                .map(|f| GammaFactor::new(&f.slope * r, f.offset.clone()))
                .collect::<Vec<_>>()
        };
        Ok(GammaTypeSpec {
            log_c: self.log_c,
            d: self.d.pow(r),
            num: map(&self.num),
            den: map(&self.den),
        })
    }

    /// Spec of X^{−1}.
    pub fn invert(&self) -> GammaTypeSpec {
        self.power(&Real::from_int(-1)).expect("-1 is nonzero")
    }

    /// Spec of the independent product X·Y (Mellin transforms multiply).
    pub fn product(&self, other: &GammaTypeSpec) -> Result<GammaTypeSpec> {
        let merged = GammaTypeSpec {
            log_c: self.log_c + other.log_c,
            d: &self.d * &other.d,
            num: [self.num.clone(), other.num.clone()].concat(),
            den: [self.den.clone(), other.den.clone()].concat(),
        };
        if merged.strip().is_empty() {
            return Err(domain("product strips do not intersect"));
        }
        Ok(merged)
    }

    /// Rewrite every factor to unit slope via Gauss multiplication.
    /// Requires positive integer slopes throughout.
    pub fn expand_unit_slope(&self) -> Result<GammaTypeSpec> {
        let mut d = self.d.clone();
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (factors, out, is_num) in [
            (&self.num, &mut num, true),
            (&self.den, &mut den, false),
        ] {
            for f in factors.iter() {
                let m = f
                    .slope
                    .to_integer()
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| {
                        domain(format!("expand_unit_slope needs positive integer slopes, got {}", f.slope))
                    })? as u32;
                let fac = gauss_multiplication_expand(m, &f.offset)?;
                for o in fac.offsets {
                    out.push(GammaFactor::new(Real::one(), o));
                }
                d = if is_num {
                    d * fac.per_n
                } else {
                    d / fac.per_n
                };
            }
        }
        GammaTypeSpec::new(d, num, den)
    }
}

/// Max of |lhs/rhs − 1| over a uniform grid in the common strip, the
/// verification instrument for identities in law.
pub fn mellin_identity_check(
    lhs: &GammaTypeSpec,
    rhs: &GammaTypeSpec,
    n_points: usize,
) -> Result<f64> {
    if n_points < 1 {
        return Err(domain("mellin_identity_check needs at least one point"));
    }
    let common = lhs.strip().intersect(&rhs.strip());
    if common.is_empty() {
        return Err(domain("strips are disjoint"));
    }
    // Clamp unbounded ends to a finite sampling window around 0.
    let lo = common.lo.max(-8.0);
    let hi = common.hi.min(8.0);
    let width = hi - lo;
    let margin = 1e-3 * width;
    let mut worst = 0.0f64;
    for i in 0..n_points {
        let frac = (i as f64 + 0.5) / n_points as f64;
        let s = lo + margin + frac * (width - 2.0 * margin);
        let l = lhs.mellin_eval(s)?;
        let r = rhs.mellin_eval(s)?;
        if l == 0.0 && r == 0.0 {
            continue;
        }
        if r == 0.0 {
            return Err(eval(format!("rhs vanishes at s = {s} while lhs = {l}")));
        }
        worst = worst.max((l / r - 1.0).abs());
    }
    Ok(worst)
}

/// Wire format {C, D, num, den}; exact rationals serialize as "p/q" strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecJson {
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(rename = "D")]
    pub d: Real,
    pub num: Vec<(Real, Real)>,
    pub den: Vec<(Real, Real)>,
}

impl From<&GammaTypeSpec> for SpecJson {
    fn from(spec: &GammaTypeSpec) -> Self {
        SpecJson {
            c: Some(spec.constant()),
            d: spec.d.clone(),
            num: spec
                .num
                .iter()
                .map(|f| (f.slope.clone(), f.offset.clone()))
                .collect(),
            den: spec
                .den
                .iter()
                .map(|f| (f.slope.clone(), f.offset.clone()))
                .collect(),
        }
    }
}

impl TryFrom<SpecJson> for GammaTypeSpec {
    type Error = crate::error::Error;

    fn try_from(raw: SpecJson) -> Result<Self> {
        let num = raw
            .num
            .into_iter()
            .map(|(a, o)| GammaFactor::new(a, o))
            .collect();
        let den = raw
            .den
            .into_iter()
            .map(|(b, o)| GammaFactor::new(b, o))
            .collect();
        match raw.c {
            Some(c) => GammaTypeSpec::with_constant(c, raw.d, num, den),
            None => GammaTypeSpec::new(raw.d, num, den),
        }
    }
}

impl Serialize for GammaTypeSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SpecJson::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for GammaTypeSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SpecJson::deserialize(de)?;
        GammaTypeSpec::try_from(raw).map_err(serde::de::Error::custom)
    }
}
