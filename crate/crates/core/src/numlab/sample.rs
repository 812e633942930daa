use std::fmt::Write;

use num_rational::BigRational;

use crate::diffop::QuasiGaussian;
use crate::error::{Error, Result};
use crate::exactpoly::{Coeff, RatFunc};

/// Something that can be evaluated at a real point.
pub trait Sampleable {
    fn value_at(&self, x: f64) -> Result<f64>;
}

fn exact_point(x: f64) -> Result<Coeff> {
    BigRational::from_float(x)
        .map(Coeff::from_rational)
        .ok_or_else(|| Error::InvalidGrid(format!("non-finite sample point {x}")))
}

impl Sampleable for RatFunc {
    /// Exact evaluation at the binary value of `x`, rounded once.
    fn value_at(&self, x: f64) -> Result<f64> {
        if self.den().is_constant() {
            return Ok(self.eval_f64(x));
        }
        Ok(self.eval(&exact_point(x)?)?.to_f64())
    }
}

impl Sampleable for QuasiGaussian {
    fn value_at(&self, x: f64) -> Result<f64> {
        let r = self.prefactor().value_at(x)?;
        let e = self.gauss().to_f64() * x * x + self.lin().to_f64() * x;
        Ok(r * e.exp())
    }
}

pub fn sample<F: Sampleable + ?Sized>(f: &F, xs: &[f64]) -> Result<Vec<(f64, f64)>> {
    xs.iter().map(|&x| Ok((x, f.value_at(x)?))).collect()
}

/// `points` equally spaced abscissae covering `[-xmax, xmax]`.
pub fn linspace(xmax: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => {
            let step = 2.0 * xmax / (points - 1) as f64;
            (0..points).map(|i| -xmax + step * i as f64).collect()
        }
    }
}

/// `x,value` rows with a header and 17 significant digits.
pub fn to_csv(rows: &[(f64, f64)]) -> String {
    let mut out = String::from("x,value\n");
    for (x, v) in rows {
        writeln!(out, "{x:.16e},{v:.16e}").expect("writing to a String");
    }
    out
}
