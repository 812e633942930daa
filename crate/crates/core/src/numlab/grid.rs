use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactpoly::{real_root_count, RatFunc, RootInterval};

pub const DEFAULT_HALF_WIDTH: f64 = 8.0;
pub const DEFAULT_POINTS: usize = 1500;

/// Dirichlet box `[-l, l]` with `n` interior points; `count` eigenvalues requested.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    l: f64,
    n: usize,
    count: usize,
}

impl GridSpec {
    pub fn new(l: f64, n: usize, count: usize) -> Result<Self> {
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "half-width must be positive, got {l}"
            )));
        }
        if n < 16 {
            return Err(Error::InvalidGrid(format!(
                "need at least 16 points, got {n}"
            )));
        }
        if count > n {
            return Err(Error::InvalidGrid(format!(
                "{count} eigenvalues from {n} points"
            )));
        }
        Ok(GridSpec { l, n, count })
    }

    pub fn default_with(count: usize) -> Self {
        Self::new(DEFAULT_HALF_WIDTH, DEFAULT_POINTS, count).expect("valid default")
    }

    pub fn half_width(&self) -> f64 {
        self.l
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.l / (self.n as f64 + 1.0)
    }

    /// Interior abscissae `-l + h, ..., l - h`.
    pub fn abscissae(&self) -> Vec<f64> {
        let h = self.spacing();
        (1..=self.n).map(|i| -self.l + h * i as f64).collect()
    }
}

/// The denominator of `v` has no real root in `[-l, l]`, certified by a Sturm count.
pub fn check_no_poles(v: &RatFunc, l: f64) -> Result<bool> {
    if v.den().is_constant() {
        return Ok(true);
    }
    let b = BigRational::from_float(l.abs())
        .ok_or_else(|| Error::InvalidGrid(format!("half-width {l} is not finite")))?;
    let iv = RootInterval::Closed(-b.clone(), b);
    Ok(real_root_count(v.den(), &iv)? == 0)
}
