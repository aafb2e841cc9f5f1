//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned in code next to the assertion it guards.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gammatype::catalog;
use gammatype::classifier::{
    classify_catalog, classify_half_cauchy_id, classify_ml2_domain, classify_ml3_nonneg,
    classify_x, l_bound, u_bound, CatalogParams, Decision, FMode, PowerSign,
};
use gammatype::divisibility::{
    factorial_ratio_sequence, hausdorff_oracle, hausdorff_sufficient, kernel_value,
    malmsten_kernel_check, HausdorffOracle, HausdorffSufficiency, KernelCheck,
};
use gammatype::gamma_kernel::{log_gamma, reflection_product, sin_pi};
use gammatype::mittag_leffler::{ml3_eval, MLParams};
use gammatype::moment_spec::{mellin_identity_check, GammaFactor, GammaTypeSpec};
use gammatype::numerics::{boundary_bracket, mellin_quadrature, nonneg_scan, Certification};
use gammatype::real::Real;

fn criterion<F: FnOnce() -> Result<(), String>>(number: u32, label: &str, body: F) {
    let start = Instant::now();
    match body() {
        Ok(()) => println!(
            "PASS criterion {number}: {label} ({:.2}s)",
            start.elapsed().as_secs_f64()
        ),
        Err(msg) => {
            println!(
                "FAIL criterion {number}: {label} ({:.2}s): {msg}",
                start.elapsed().as_secs_f64()
            );
            panic!("criterion {number} failed: {msg}");
        }
    }
}

fn rq(p: i64, q: i64) -> Real {
    Real::from_ratio(p, q)
}

/// Log-spaced grid of n points on [lo, hi].
fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

#[test]
fn c01_closed_form_ml_identities() {
    criterion(1, "closed-form Mittag-Leffler identities to 1e-9", || {
        let tol = 1e-9;
        let mut check = |p: &MLParams, z: f64, expect: f64, what: &str| -> Result<(), String> {
            let got = ml3_eval(p, z).map_err(|e| format!("{what} at z={z}: {e}"))?.value;
            let err = (got - expect).abs();
            if err > tol * expect.abs().max(1.0) {
                return Err(format!(
                    "{what} at z={z}: got {got}, expected {expect} (err {err:e})"
                ));
            }
            Ok(())
        };
        let exp_p = MLParams::new(1.0, 1.0, 1.0).unwrap();
        let exp1_p = MLParams::new(1.0, 2.0, 1.0).unwrap();
        let cos_p = MLParams::new(2.0, 1.0, 1.0).unwrap();
        let cos2_p = MLParams::new(2.0, 3.0, 1.0).unwrap();
        let exp2_p = MLParams::new(1.0, 2.0, 2.0).unwrap();
        // Negative axis, series through asymptotic: t up to 1e3.
        for &t in &log_grid(1e-3, 1e3, 100) {
            check(&exp_p, -t, (-t).exp(), "E_{1,1}(-t)=e^-t")?;
            check(&exp1_p, -t, -(-t).exp_m1() / t, "E_{1,2}(-t)=(1-e^-t)/t")?;
            let half = 0.5 * t;
            let one_minus_cos_over_t2 = 2.0 * (half.sin() / t).powi(2);
            check(&cos_p, -t * t, t.cos(), "E_{2,1}(-t^2)=cos t")?;
            check(
                &cos2_p,
                -t * t,
                one_minus_cos_over_t2,
                "E_{2,3}(-t^2)=(1-cos t)/t^2",
            )?;
            check(&exp2_p, -t, (-t).exp(), "E^2_{1,2}(-t)=e^-t")?;
        }
        // Positive axis for the exponential identities (capped by f64 range).
        for &z in &log_grid(1e-3, 700.0, 100) {
            check(&exp_p, z, z.exp(), "E_{1,1}(z)=e^z")?;
            check(&exp1_p, z, z.exp_m1() / z, "E_{1,2}(z)=(e^z-1)/z")?;
        }
        Ok(())
    });
}

#[test]
fn c02_mellin_pair_quadrature() {
    criterion(2, "Mellin pair vs quadrature to 1e-6 for 10 tuples", || {
        // (rho, mu, gamma, s) with gamma - s >= 0.8 and mu >= rho*gamma so
        // the integrand is nonnegative with an algebraic tail.
        let tuples = [
            (1.0, 2.0, 1.5, 0.3),
            (1.0, 2.0, 1.5, 0.7),
            (1.0, 2.5, 1.3, 0.5),
            (1.0, 3.0, 2.0, 1.2),
            (1.0, 1.8, 1.0, 0.2),
            (0.75, 1.5, 1.0, 0.2),
            (0.5, 1.2, 1.0, 0.2),
            (0.75, 2.0, 1.3, 0.5),
            (1.25, 2.0, 1.0, 0.2),
            (1.5, 2.4, 1.0, 0.2),
        ];
        for (rho, mu, gamma, s) in tuples {
            let p = MLParams::new(rho, mu, gamma).unwrap();
            let f = |t: f64| ml3_eval(&p, -t).unwrap().value;
            let got = mellin_quadrature(&f, s, 5000.0, 1e-8)
                .map_err(|e| format!("({rho},{mu},{gamma},{s}): {e}"))?;
            let lg = |x: f64| log_gamma(x).unwrap();
            let expect = (lg(s) + lg(gamma - s) - lg(gamma) - lg(mu - rho * s)).exp();
            let rel = (got - expect).abs() / expect.abs();
            if rel > 1e-6 {
                return Err(format!(
                    "({rho},{mu},{gamma},{s}): quadrature {got} vs Gamma-ratio {expect} (rel {rel:e})"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn c03_classifier_endpoint_exactness() {
    criterion(3, "classify_ml2_domain exact at the endpoints", || {
        let yes = |rho: Real, mu: Real| -> Result<(), String> {
            let v = classify_ml2_domain(&rho, &mu).map_err(|e| e.to_string())?;
            if v.decision != Decision::Yes {
                return Err(format!("expected Yes at ({rho}, {mu}), got {:?}", v.decision));
            }
            Ok(())
        };
        let no = |rho: Real, mu: Real| -> Result<(), String> {
            let v = classify_ml2_domain(&rho, &mu).map_err(|e| e.to_string())?;
            if v.decision != Decision::No {
                return Err(format!("expected No at ({rho}, {mu}), got {:?}", v.decision));
            }
            Ok(())
        };
        yes(Real::one(), Real::one())?;
        yes(Real::from_int(2), Real::from_int(3))?;
        no(Real::from_int(2), Real::from_f64(3.0 - 1e-9))?;
        for mu in [rq(1, 10), Real::one(), Real::from_int(10)] {
            no(rq(5, 2), mu)?;
        }
        Ok(())
    });
}

#[test]
fn c04_theorem_corollary_coherence() {
    criterion(4, "classify_x vs classify_ml3_nonneg on 10^4 random points", || {
        let mut rng = ChaCha8Rng::seed_from_u64(20240811);
        let mut decided = 0u32;
        for i in 0..10_000 {
            let a = rq(rng.gen_range(1..=40), 16);
            let b = rq(rng.gen_range(1..=40), 16);
            let c = rq(rng.gen_range(1..=80), 16);
            let d = rq(rng.gen_range(1..=40), 16);
            let vx = classify_x(&a, &b, &c, &d).map_err(|e| e.to_string())?;
            let mu = &c + &(&b * &d);
            let gamma = &a + &b;
            let vm = classify_ml3_nonneg(&d, &mu, &gamma).map_err(|e| e.to_string())?;
            if vx.decision != vm.decision {
                return Err(format!(
                    "sample {i}: ({a},{b},{c},{d}) -> X {:?} but ML {:?}",
                    vx.decision, vm.decision
                ));
            }
            if vx.decision != Decision::Unknown {
                decided += 1;
            }
        }
        if decided < 2000 {
            return Err(format!("only {decided} of 10000 samples were decided"));
        }
        Ok(())
    });
}

#[test]
fn c05_scan_classifier_cross_validation() {
    criterion(5, "nonneg_scan agrees with decided classify_x verdicts", || {
        let mut rng = ChaCha8Rng::seed_from_u64(555);
        // 100 Yes-region points: grid witness with min >= -1e-8.
        let mut yes_done = 0;
        while yes_done < 100 {
            let a = rq(rng.gen_range(1..=32), 16);
            let b = rq(rng.gen_range(1..=32), 16);
            let c = rq(rng.gen_range(1..=64), 16);
            let d = rq(rng.gen_range(1..=36), 16);
            let v = classify_x(&a, &b, &c, &d).map_err(|e| e.to_string())?;
            if v.decision != Decision::Yes {
                continue;
            }
            let rep = nonneg_scan(a.to_f64(), b.to_f64(), c.to_f64(), d.to_f64(), 1e4, 1024)
                .map_err(|e| e.to_string())?;
            if rep.certified != Certification::GridWitness {
                return Err(format!(
                    "Yes point ({a},{b},{c},{d}) [{}] produced {:?} at t={} min={}",
                    v.condition, rep.certified, rep.argmin, rep.min_value
                ));
            }
            if rep.min_value < -1e-8 {
                return Err(format!(
                    "Yes point ({a},{b},{c},{d}): min {} below -1e-8",
                    rep.min_value
                ));
            }
            yes_done += 1;
        }
        // 100 No-region points firing I(3): d = 2, c strictly inside 3a+b.
        let mut no_done = 0;
        while no_done < 100 {
            let a = rq(rng.gen_range(1..=32), 16);
            let b = rq(rng.gen_range(1..=32), 16);
            let bound = Real::from_int(3) * &a + &b;
            let frac = rq(rng.gen_range(5..=15), 16); // c in (0.3, 0.95)·(3a+b)
            let c = &bound * &frac;
            let d = Real::from_int(2);
            let v = classify_x(&a, &b, &c, &d).map_err(|e| e.to_string())?;
            if v.condition != "Thm1.2-I(3)" {
                continue; // a different No clause fired first (e.g. I(2))
            }
            let rep = nonneg_scan(a.to_f64(), b.to_f64(), c.to_f64(), 2.0, 1e4, 1024)
                .map_err(|e| e.to_string())?;
            if rep.certified != Certification::RigorousNegative {
                return Err(format!(
                    "I(3) point ({a},{b},{c},2) not refuted: min {} at t={} (est {})",
                    rep.min_value, rep.argmin, rep.est_at_min
                ));
            }
            no_done += 1;
        }
        // Invariant extension: I(2) samples with the negative tail sector
        // and I(4) samples near the boundary; the scan range extends
        // tenfold automatically before a mismatch would be declared.
        let mut i2_done = 0;
        while i2_done < 25 {
            let a = rq(rng.gen_range(8..=32), 16);
            let b = rq(rng.gen_range(1..=32), 16);
            let d = rq(rng.gen_range(8..=30), 16);
            // mu - rho*gamma = c - ad in (-1, -0.03): negative leading tail.
            let ad = &a * &d;
            let c = &ad - &rq(rng.gen_range(1..=15), 16);
            if !c.is_positive() || (&c - &ad).to_f64() < -0.97 {
                continue;
            }
            let v = classify_x(&a, &b, &c, &d).map_err(|e| e.to_string())?;
            if v.condition != "Thm1.2-I(2)" {
                continue;
            }
            let rep = nonneg_scan(a.to_f64(), b.to_f64(), c.to_f64(), d.to_f64(), 1e4, 1024)
                .map_err(|e| e.to_string())?;
            if rep.certified != Certification::RigorousNegative {
                return Err(format!(
                    "I(2) point ({a},{b},{c},{d}) not refuted: min {} at t={}",
                    rep.min_value, rep.argmin
                ));
            }
            i2_done += 1;
        }
        let mut i4_done = 0;
        while i4_done < 25 {
            let a = rq(rng.gen_range(8..=24), 16);
            let b = rq(rng.gen_range(8..=24), 16);
            if (&a + &b) < Real::one() {
                continue;
            }
            let d = rq(rng.gen_range(18..=31), 16); // 1.125 … 1.9375
            let l = l_bound(&d).map_err(|e| e.to_string())?;
            let threshold = &(&a * &d) - &d + &l;
            let c = Real::from_f64(threshold.to_f64() - 0.05 - 0.1 * rng.gen::<f64>());
            if !c.is_positive() {
                continue;
            }
            let v = classify_x(&a, &b, &c, &d).map_err(|e| e.to_string())?;
            if v.condition != "Thm1.2-I(4)" {
                continue;
            }
            let rep = nonneg_scan(a.to_f64(), b.to_f64(), c.to_f64(), d.to_f64(), 1e4, 2048)
                .map_err(|e| e.to_string())?;
            if rep.certified != Certification::RigorousNegative {
                return Err(format!(
                    "I(4) point ({a},{b},{c},{d}) not refuted: min {} at t={}",
                    rep.min_value, rep.argmin
                ));
            }
            i4_done += 1;
        }
        Ok(())
    });
}

#[test]
fn c06_empirical_f_sandwich() {
    criterion(6, "boundary bracket lies in [L-1e-3, U+1e-3], non-decreasing", || {
        // Exact bound values first.
        if l_bound(&rq(3, 2)).unwrap() != rq(67, 40) {
            return Err("L(1.5) != 1.675 exactly".into());
        }
        if u_bound(&rq(3, 2)).unwrap() != Real::from_int(2) {
            return Err("U(1.5) != 2.0 exactly".into());
        }
        let mut previous = f64::NEG_INFINITY;
        for i in 1..=9 {
            let rho = 1.0 + i as f64 / 10.0;
            let rho_r = rq(10 + i, 10);
            let l = l_bound(&rho_r).unwrap().to_f64();
            let u = u_bound(&rho_r).unwrap().to_f64();
            let f_hat = boundary_bracket(rho, (l - 0.15).max(0.05), u + 0.15, 1e4, 1e-3)
                .map_err(|e| format!("rho={rho}: {e}"))?;
            if f_hat < l - 1e-3 || f_hat > u + 1e-3 {
                return Err(format!("f̂({rho}) = {f_hat} outside [{l}, {u}]"));
            }
            if f_hat < previous - 1e-3 {
                return Err(format!(
                    "f̂ not monotone: f̂({rho}) = {f_hat} < previous {previous}"
                ));
            }
            previous = f_hat;
        }
        Ok(())
    });
}

#[test]
fn c07_hausdorff_preset_suite() {
    criterion(7, "presets mu1..mu8 pass the exact Hausdorff oracle", || {
        for i in 1..=8u32 {
            let spec = catalog::mu_preset(i).unwrap();
            let seq = factorial_ratio_sequence(&spec, 25, None)
                .map_err(|e| format!("mu{i}: {e}"))?;
            match hausdorff_oracle(&seq, 15).map_err(|e| format!("mu{i}: {e}"))? {
                HausdorffOracle::MomentSequence => {}
                HausdorffOracle::ViolationAt { k, n } => {
                    return Err(format!("mu{i}: violation at (k={k}, n={n})"));
                }
            }
        }
        // Support scales against hand values.
        let s1 = catalog::mu_preset(1).unwrap().support_upper().unwrap();
        if s1 != Real::from_int(4) {
            return Err(format!("support of mu1 is {s1}, expected 4"));
        }
        let s2 = catalog::mu_preset(2).unwrap().support_upper().unwrap();
        if s2 != Real::from_int(108) {
            return Err(format!("support of mu2 is {s2}, expected 108"));
        }
        Ok(())
    });
}

#[test]
fn c08_majorization_vs_oracle() {
    criterion(8, "prefix majorization vs the exact oracle", || {
        let mut rng = ChaCha8Rng::seed_from_u64(88);
        let unit_spec = |a: &[Real], b: &[Real]| -> GammaTypeSpec {
            GammaTypeSpec::new(
                Real::one(),
                a.iter()
                    .map(|x| GammaFactor::new(Real::one(), x.clone()))
                    .collect(),
                b.iter()
                    .map(|x| GammaFactor::new(Real::one(), x.clone()))
                    .collect(),
            )
            .unwrap()
        };
        // 100 random majorizing specs must pass the oracle.
        let mut passed = 0;
        while passed < 100 {
            let j = rng.gen_range(1..=3usize);
            let mut b: Vec<i64> = (0..j).map(|_| rng.gen_range(2..=40)).collect();
            b.sort_unstable();
            let a: Vec<i64> = b.iter().map(|&bi| rng.gen_range(1..=bi)).collect();
            let a: Vec<Real> = a.iter().map(|&x| rq(x, 8)).collect();
            let b: Vec<Real> = b.iter().map(|&x| rq(x, 8)).collect();
            let spec = unit_spec(&a, &b);
            if hausdorff_sufficient(&spec).unwrap() != HausdorffSufficiency::Sufficient {
                continue;
            }
            let seq = factorial_ratio_sequence(&spec, 25, None).map_err(|e| e.to_string())?;
            if hausdorff_oracle(&seq, 15).unwrap() != HausdorffOracle::MomentSequence {
                return Err(format!("majorizing spec failed the oracle: a={a:?} b={b:?}"));
            }
            passed += 1;
        }
        // 20 random majorization violators are NotApplicable.
        let mut violators = 0;
        while violators < 20 {
            let j = rng.gen_range(1..=3usize);
            let a: Vec<Real> = (0..j).map(|_| rq(rng.gen_range(1..=40), 8)).collect();
            let b: Vec<Real> = (0..j).map(|_| rq(rng.gen_range(1..=40), 8)).collect();
            let spec = unit_spec(&a, &b);
            if hausdorff_sufficient(&spec).unwrap() == HausdorffSufficiency::NotApplicable {
                violators += 1;
            }
        }
        // Five counter-majorization examples with unbounded mu_n/scale^n
        // must fail the oracle.
        for (an, ad, bn, bd) in [(2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 1, 2), (5, 2, 1, 1), (4, 1, 2, 1)]
        {
            let a = rq(an, ad);
            let b = rq(bn, bd);
            let spec = unit_spec(&[a.clone()], &[b.clone()]);
            if hausdorff_sufficient(&spec).unwrap() != HausdorffSufficiency::NotApplicable {
                return Err(format!("({a},{b}) unexpectedly satisfies majorization"));
            }
            let seq = factorial_ratio_sequence(&spec, 25, Some(Real::one()))
                .map_err(|e| e.to_string())?;
            match hausdorff_oracle(&seq, 15).unwrap() {
                HausdorffOracle::ViolationAt { .. } => {}
                HausdorffOracle::MomentSequence => {
                    return Err(format!("unbounded sequence ({a},{b}) passed the oracle"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn c09_id_kernel_closed_form() {
    criterion(9, "Malmsten kernel of B_{1,1} equals e^-t; reversal refuted", || {
        let spec = catalog::beta_rv(&Real::one(), &Real::one()).unwrap();
        let t_max = 50.0;
        let n = 4096;
        for i in 0..n {
            let t = (t_max * 1e-4) * 1e4f64.powf(i as f64 / (n - 1) as f64);
            let v = kernel_value(&spec, t);
            let expect = (-t).exp();
            if (v - expect).abs() > 1e-12 * expect.max(1e-300) {
                return Err(format!("kernel at t={t}: {v} vs e^-t={expect}"));
            }
        }
        if malmsten_kernel_check(&spec, t_max, n).unwrap() != KernelCheck::NonnegativeOnGrid {
            return Err("B_{1,1} kernel flagged negative".into());
        }
        let reversed = GammaTypeSpec::new(
            Real::one(),
            vec![GammaFactor::new(Real::one(), Real::from_int(2))],
            vec![GammaFactor::new(Real::one(), Real::one())],
        )
        .unwrap();
        match malmsten_kernel_check(&reversed, t_max, n).unwrap() {
            KernelCheck::NegativeAt { value, .. } if value < 0.0 => Ok(()),
            other => Err(format!("reversed spec not refuted: {other:?}")),
        }
    });
}

#[test]
fn c10_half_cauchy_suite() {
    criterion(10, "half alpha-Cauchy: rows, normalization, identities", || {
        // Four rows on boundary and interior points (exact rationals).
        let rows: [(Real, PowerSign, Real); 4] = [
            (rq(3, 2), PowerSign::Plus, rq(5, 6)),   // (α+1)/3
            (rq(3, 1), PowerSign::Plus, rq(3, 2)),   // α/2
            (rq(3, 2), PowerSign::Minus, rq(3, 4)),  // α/2
            (rq(3, 1), PowerSign::Minus, rq(5, 3)),  // (2α−1)/3
        ];
        for (alpha, eps, threshold) in rows {
            let at = classify_half_cauchy_id(&alpha, eps, &threshold).unwrap();
            if at.decision != Decision::Yes {
                return Err(format!("boundary p = {threshold} at alpha={alpha} not Yes"));
            }
            let above =
                classify_half_cauchy_id(&alpha, eps, &(&threshold + &rq(1, 10))).unwrap();
            if above.decision != Decision::Yes {
                return Err(format!("interior point above {threshold} not Yes"));
            }
            let below =
                classify_half_cauchy_id(&alpha, eps, &(&threshold - &rq(1, 1_000_000_000)))
                    .unwrap();
            if below.decision != Decision::Unknown {
                return Err(format!(
                    "point just below {threshold} at alpha={alpha} should be Unknown, got {:?}",
                    below.decision
                ));
            }
        }
        // Normalization via the reflection product, 1e-12.
        for alpha in [1.5, 2.0, 3.0, 10.0] {
            let value =
                sin_pi(1.0 / alpha) / std::f64::consts::PI * reflection_product(1.0 / alpha).unwrap();
            if (value - 1.0).abs() > 1e-12 {
                return Err(format!("E|C_a|^0 = {value} at alpha={alpha}"));
            }
        }
        // Identity in law |C_α| = Γ_{1/α}^{1/α} × Γ_{1−1/α}^{−1/α}.
        for alpha in [rq(3, 2), rq(2, 1), rq(3, 1), rq(10, 1)] {
            let lhs = catalog::half_cauchy_abs(&alpha).unwrap();
            let inv = Real::one() / &alpha;
            let rhs = catalog::gamma_rv(&inv)
                .unwrap()
                .power(&inv)
                .unwrap()
                .product(
                    &catalog::gamma_rv(&(Real::one() - &inv))
                        .unwrap()
                        .power(&(-&inv))
                        .unwrap(),
                )
                .unwrap();
            let err = mellin_identity_check(&lhs, &rhs, 33).unwrap();
            if err > 1e-10 {
                return Err(format!("product identity at alpha={alpha}: err {err:e}"));
            }
        }
        // Power decompositions |C_α|^{±qα/2} = X^{q/2} × Γ_ν with μ = U(2/q).
        let q = rq(3, 2);
        let two_over_q = rq(4, 3);
        let mu = u_bound(&two_over_q).unwrap(); // 16/9
        for (alpha, eps) in [(rq(2, 1), PowerSign::Plus), (rq(3, 1), PowerSign::Minus)] {
            let inv = Real::one() / &alpha;
            let exponent = match eps {
                PowerSign::Plus => &q * &alpha / rq(2, 1),
                PowerSign::Minus => -(&q * &alpha / rq(2, 1)),
            };
            let lhs = catalog::half_cauchy_abs(&alpha)
                .unwrap()
                .power(&exponent)
                .unwrap();
            let (x_a, x_b, nu) = match eps {
                PowerSign::Plus => {
                    let nu = &mu - &(rq(2, 1) * (&alpha - Real::one()) / (&q * &alpha));
                    (inv.clone(), Real::one() - &inv, nu)
                }
                PowerSign::Minus => {
                    let nu = &mu - &(rq(2, 1) / (&q * &alpha));
                    (Real::one() - &inv, inv.clone(), nu)
                }
            };
            let x = catalog::x_abcd(&x_a, &x_b, &nu, &two_over_q)
                .unwrap()
                .power(&(&q / rq(2, 1)))
                .unwrap();
            let rhs = x.product(&catalog::gamma_rv(&nu).unwrap()).unwrap();
            let err = mellin_identity_check(&lhs, &rhs, 33).unwrap();
            if err > 1e-10 {
                return Err(format!(
                    "power decomposition alpha={alpha} eps={eps:?}: err {err:e}"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn c11_known_family_catalog() {
    criterion(11, "catalog iff-clauses vs independent re-derivation", || {
        let mut rng = ChaCha8Rng::seed_from_u64(1111);
        // Y_MP: exists iff r in (-1, -1+1/alpha].
        for _ in 0..50 {
            let alpha_num = rng.gen_range(1..=15i64);
            let alpha = rq(alpha_num, 16);
            let r = rq(rng.gen_range(-32..=64), 16);
            let v = classify_catalog(&CatalogParams::YMp {
                alpha: alpha.clone(),
                r: r.clone(),
            })
            .unwrap();
            // Ground truth re-derived with plain rational arithmetic.
            let truth = r.to_f64() > -1.0 && r.to_f64() <= -1.0 + 16.0 / alpha_num as f64;
            let want = if truth { Decision::Yes } else { Decision::No };
            if v.decision != want {
                return Err(format!("Y_MP({alpha}, {r}): {:?} vs expected {want:?}", v.decision));
            }
        }
        // M_FS: exists iff alpha in [0,1] and beta >= 0.
        for _ in 0..50 {
            let alpha = rq(rng.gen_range(-8..=24), 16);
            let beta = rq(rng.gen_range(-8..=24), 16);
            let v = classify_catalog(&CatalogParams::MFs {
                alpha: alpha.clone(),
                beta: beta.clone(),
            })
            .unwrap();
            let af = alpha.to_f64();
            let truth = (0.0..=1.0).contains(&af) && beta.to_f64() >= 0.0;
            let want = if truth { Decision::Yes } else { Decision::No };
            if v.decision != want {
                return Err(format!("M_FS({alpha}, {beta}): {:?} vs {want:?}", v.decision));
            }
        }
        // Dufresne: exists iff b+d >= 0 and min(a,c) <= min(a+b, c+d).
        for _ in 0..50 {
            let a = rq(rng.gen_range(1..=32), 16);
            let b = rq(rng.gen_range(-16..=32), 16);
            let c = rq(rng.gen_range(1..=32), 16);
            let d = rq(rng.gen_range(-16..=32), 16);
            if !(&a + &b).is_positive() || !(&c + &d).is_positive() {
                continue;
            }
            let v = classify_catalog(&CatalogParams::BDufresne {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                d: d.clone(),
            })
            .unwrap();
            let (af, bf, cf, df) = (a.to_f64(), b.to_f64(), c.to_f64(), d.to_f64());
            let truth = bf + df >= 0.0 && af.min(cf) <= (af + bf).min(cf + df);
            let want = if truth { Decision::Yes } else { Decision::No };
            if v.decision != want {
                return Err(format!(
                    "Dufresne({a},{b},{c},{d}): {:?} vs {want:?}",
                    v.decision
                ));
            }
        }
        // Point mass Γ(1.5)²/(Γ(1)Γ(2)) = π/4 to 1e-12.
        let v = classify_catalog(&CatalogParams::BDufresne {
            a: Real::one(),
            b: rq(1, 2),
            c: Real::from_int(2),
            d: rq(-1, 2),
        })
        .unwrap();
        let pm = v.point_mass.ok_or("missing point mass")?;
        if (pm - std::f64::consts::PI / 4.0).abs() > 1e-12 {
            return Err(format!("point mass {pm} vs pi/4"));
        }
        Ok(())
    });
}

#[test]
fn c12_bosch_threshold_half() {
    criterion(12, "t_{1/2} = 1/2 with the expected firing clauses", || {
        let half = rq(1, 2);
        for (t, want) in [
            (rq(3, 10), Decision::Yes),
            (rq(1, 2), Decision::Yes),
            (rq(51, 100), Decision::No),
            (rq(3, 4), Decision::No),
            (Real::one(), Decision::No),
        ] {
            let v = classify_catalog(&CatalogParams::FBosch {
                alpha: half.clone(),
                t: t.clone(),
            })
            .unwrap();
            if v.decision != want {
                return Err(format!("F_(1/2,{t}): {:?} vs {want:?}", v.decision));
            }
        }
        // Underlying clauses on X_{1/2,1/2,t,2t}.
        for t in [rq(3, 10), rq(1, 2)] {
            let v = classify_x(&half, &half, &t, &(rq(2, 1) * &t)).unwrap();
            if v.condition != "Thm1.2-II(1)" {
                return Err(format!("t={t}: expected II(1), got {}", v.condition));
            }
        }
        let v = classify_x(&half, &half, &Real::one(), &rq(2, 1)).unwrap();
        if v.condition != "Thm1.2-I(3)" {
            return Err(format!("t=1: expected I(3), got {}", v.condition));
        }
        for t in [rq(51, 100), rq(3, 4)] {
            let v = classify_x(&half, &half, &t, &(rq(2, 1) * &t)).unwrap();
            if v.condition != "Thm1.2-I(4)" || v.f_mode != Some(FMode::LowerBoundL) {
                return Err(format!(
                    "t={t}: expected I(4) via L, got {} ({:?})",
                    v.condition, v.f_mode
                ));
            }
        }
        Ok(())
    });
}

/// Scaled sequence entries stay exact end to end (regression guard for the
/// oracle plumbing): spot-check m_2 of mu1 against 6/16.
#[test]
fn scaled_sequence_entry_is_exact() {
    let spec = catalog::mu_preset(1).unwrap();
    let seq = factorial_ratio_sequence(&spec, 4, None).unwrap();
    let m2 = &seq.terms[2] / (&seq.scale * &seq.scale);
    assert_eq!(m2, BigRational::new(BigInt::from(6), BigInt::from(16)));
}
