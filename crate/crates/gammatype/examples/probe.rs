use gammatype::mittag_leffler::*;
fn main() {
    let (a, b, c, d) = (2.0f64, 0.875, 1.3125, 0.1875);
    let p = MLParams::new(d, c + b * d, a + b).unwrap();
    for t in [0.5f64, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5] {
        let r = ml3_eval(&p, -t).unwrap();
        println!("t={t:6.3}: value={:+.6e} est={:.3e} branch={:?}", r.value, r.est_error, r.branch);
    }
}
