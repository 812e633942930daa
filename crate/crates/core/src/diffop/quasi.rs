use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactpoly::{real_root_count, Coeff, Poly, RatFunc, RootInterval};

/// `R(x) · exp(gauss · x² + lin · x)` with a rational-function prefactor.
///
/// The exponent coefficients live in the same quadratic field as the prefactor, which
/// lets a rescaled variable `z = sqrt(s) x` stay representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiGaussian {
    prefactor: RatFunc,
    gauss: Coeff,
    lin: Coeff,
}

impl QuasiGaussian {
    pub fn new(prefactor: RatFunc, gauss: Coeff, lin: Coeff) -> Self {
        QuasiGaussian {
            prefactor,
            gauss,
            lin,
        }
    }

    /// `R(x) · exp(gauss · x²)`.
    pub fn gaussian(prefactor: RatFunc, gauss: BigRational) -> Self {
        Self::new(prefactor, Coeff::from_rational(gauss), Coeff::zero())
    }

    pub fn prefactor(&self) -> &RatFunc {
        &self.prefactor
    }

    pub fn gauss(&self) -> &Coeff {
        &self.gauss
    }

    pub fn lin(&self) -> &Coeff {
        &self.lin
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    /// Derivative of the exponent, `2 gauss x + lin`.
    pub fn exponent_derivative(&self) -> RatFunc {
        RatFunc::from_poly(Poly::new(vec![
            self.lin.clone(),
            &self.gauss * &Coeff::from_int(2),
        ]))
    }

    pub fn derive(&self) -> Self {
        let r = &self.prefactor.derive() + &(&self.exponent_derivative() * &self.prefactor);
        Self::new(r, self.gauss.clone(), self.lin.clone())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::new(
            self.prefactor.scale(c),
            self.gauss.clone(),
            self.lin.clone(),
        )
    }

    pub fn multiply(&self, rhs: &QuasiGaussian) -> Self {
        Self::new(
            &self.prefactor * &rhs.prefactor,
            &self.gauss + &rhs.gauss,
            &self.lin + &rhs.lin,
        )
    }

    /// Multiplies the prefactor by a rational function.
    pub fn times(&self, f: &RatFunc) -> Self {
        Self::new(&self.prefactor * f, self.gauss.clone(), self.lin.clone())
    }

    /// `sigma` with `self = sigma · other`: identical exponents and proportional
    /// prefactors.
    pub fn proportional(&self, other: &QuasiGaussian) -> Option<Coeff> {
        if self.gauss != other.gauss || self.lin != other.lin {
            return None;
        }
        if self.is_zero() || other.is_zero() {
            return None;
        }
        self.prefactor.proportional(&other.prefactor)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let e = self.gauss.to_f64() * x * x + self.lin.to_f64() * x;
        self.prefactor.eval_f64(x) * e.exp()
    }

    /// Exact prefactor value at a point; fails at a pole.
    pub fn prefactor_at(&self, x: &Coeff) -> Result<Coeff> {
        self.prefactor.eval(x)
    }

    /// Square-integrable on the real line: decaying Gaussian and no real pole.
    pub fn is_normalizable(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        if self.gauss.signum() >= 0 {
            return Ok(false);
        }
        let den = self.prefactor.den();
        if den.is_constant() {
            return Ok(true);
        }
        if !den.is_rational() {
            return Err(Error::UnsupportedField);
        }
        Ok(real_root_count(den, &RootInterval::AllReals)? == 0)
    }
}

impl fmt::Display for QuasiGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] * exp(({})*x^2 + ({})*x)",
            self.prefactor, self.gauss, self.lin
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground() -> QuasiGaussian {
        QuasiGaussian::new(RatFunc::one(), Coeff::from_ratio(-1, 2), Coeff::zero())
    }

    #[test]
    fn derivative_of_gaussian() {
        let d = ground().derive();
        assert_eq!(
            d.prefactor(),
            &RatFunc::from_poly(Poly::from_ints(&[0, -1]))
        );
    }

    #[test]
    fn normalizability() {
        assert_eq!(ground().is_normalizable(), Ok(true));
        let h2 = Poly::from_ints(&[2, 0, 4]);
        let g = QuasiGaussian::new(
            RatFunc::new(Poly::one(), h2.clone()).unwrap(),
            Coeff::from_ratio(-1, 2),
            Coeff::zero(),
        );
        assert_eq!(g.is_normalizable(), Ok(true));
        let growing = QuasiGaussian::new(
            RatFunc::from_poly(h2),
            Coeff::from_ratio(1, 2),
            Coeff::zero(),
        );
        assert_eq!(growing.is_normalizable(), Ok(false));
        let pole = QuasiGaussian::new(
            RatFunc::new(Poly::one(), Poly::x()).unwrap(),
            Coeff::from_ratio(-1, 2),
            Coeff::zero(),
        );
        assert_eq!(pole.is_normalizable(), Ok(false));
    }

    #[test]
    fn proportionality_needs_same_exponent() {
        let a = ground();
        let b = a.scale(&Coeff::from_int(3));
        assert_eq!(b.proportional(&a), Some(Coeff::from_int(3)));
        let c = QuasiGaussian::new(RatFunc::one(), Coeff::from_ratio(-1, 3), Coeff::zero());
        assert_eq!(c.proportional(&a), None);
    }

    #[test]
    fn float_evaluation() {
        let h2 = Poly::from_ints(&[2, 0, 4]);
        let g = QuasiGaussian::new(
            RatFunc::new(Poly::one(), h2).unwrap(),
            Coeff::from_ratio(-1, 2),
            Coeff::zero(),
        );
        assert!((g.eval_f64(0.0) - 0.5).abs() < 1e-15);
    }
}
