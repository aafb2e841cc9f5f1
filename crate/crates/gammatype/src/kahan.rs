//! Compensated summation helpers.

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.comp += (self.sum - t) + value;
        } else {
            self.comp += (value - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Splits a sign-alternating series into positive and negative partial sums
/// so the single final subtraction exposes the cancellation magnitude.
#[derive(Debug, Clone, Copy, Default)]
pub struct SignSplitSum {
    pos: KahanSum,
    neg: KahanSum,
}

impl SignSplitSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        if value >= 0.0 {
            self.pos.add(value);
        } else {
            self.neg.add(-value);
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.pos.value() - self.neg.value()
    }

    /// Total gross magnitude Σ|xᵢ|; the scale cancellation noise lives on.
    #[inline]
    pub fn gross(&self) -> f64 {
        self.pos.value() + self.neg.value()
    }
}
