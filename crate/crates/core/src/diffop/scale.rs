//! Change of variable `z = λ x` with `λ = sqrt(lambda_sq)`.

use num_rational::BigRational;
use num_traits::Signed;

use super::op::DiffOp;
use super::quasi::QuasiGaussian;
use crate::error::{Error, Result};
use crate::exactpoly::{Coeff, Poly, RatFunc};

/// Rewrites an object given in `z` in terms of `x`, where `z = λ x` and
/// `d/dz = (1/λ) d/dx`.
pub trait ScaleVariable: Sized {
    fn scale_variable(&self, lambda_sq: &BigRational) -> Result<Self>;
}

fn lambda(lambda_sq: &BigRational) -> Result<Coeff> {
    if !lambda_sq.is_positive() {
        return Err(Error::NonpositiveScale);
    }
    Ok(Coeff::sqrt_of(lambda_sq).expect("positive rational has a square root"))
}

impl ScaleVariable for Poly {
    fn scale_variable(&self, lambda_sq: &BigRational) -> Result<Self> {
        Ok(self.scale_argument(&lambda(lambda_sq)?))
    }
}

impl ScaleVariable for RatFunc {
    fn scale_variable(&self, lambda_sq: &BigRational) -> Result<Self> {
        let l = lambda(lambda_sq)?;
        RatFunc::new(self.num().scale_argument(&l), self.den().scale_argument(&l))
    }
}

impl ScaleVariable for DiffOp {
    fn scale_variable(&self, lambda_sq: &BigRational) -> Result<Self> {
        let l = lambda(lambda_sq)?;
        let inv = l.inv().expect("nonzero");
        let mut factor = Coeff::one();
        let mut out = Vec::with_capacity(self.coeffs().len());
        for a in self.coeffs() {
            out.push(a.scale_variable(lambda_sq)?.scale(&factor));
            factor = &factor * &inv;
        }
        Ok(DiffOp::new(out))
    }
}

impl ScaleVariable for QuasiGaussian {
    fn scale_variable(&self, lambda_sq: &BigRational) -> Result<Self> {
        let l = lambda(lambda_sq)?;
        Ok(QuasiGaussian::new(
            self.prefactor().scale_variable(lambda_sq)?,
            self.gauss() * &Coeff::from_rational(lambda_sq.clone()),
            self.lin() * &l,
        ))
    }
}
