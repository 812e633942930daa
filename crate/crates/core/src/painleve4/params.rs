use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::diffop::Sign;
use crate::error::{Error, Result};
use crate::exactpoly::Coeff;

/// Parameters of the ladder construction, with the overall scale `lambda = 1`.
///
/// `a = alpha`, `b = -2 beta`, `alpha_bar = a - 1`, `d = beta / 2` and `c` one of the
/// two square roots with `c^2 = -4 d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndrianovParams {
    pub a: BigRational,
    pub b: BigRational,
    pub alpha_bar: BigRational,
    pub d: BigRational,
    pub c: BigRational,
}

impl AndrianovParams {
    /// Back to `(alpha, beta)`.
    pub fn to_p4(&self) -> (BigRational, BigRational) {
        let two = BigRational::from_integer(2.into());
        (self.a.clone(), &self.d * &two)
    }

    /// `alpha_bar + 2 - c/2`, `alpha_bar + 2 + c/2`, `alpha_bar - c/2`,
    /// `alpha_bar + c/2`.
    pub fn half_c(&self) -> BigRational {
        &self.c / BigRational::from_integer(2.into())
    }
}

/// Converts `(alpha, beta)` for the reducible case `beta <= 0`, choosing the sign of
/// `c`.
pub fn to_andrianov(
    alpha: &BigRational,
    beta: &BigRational,
    c_sign: Sign,
) -> Result<AndrianovParams> {
    if beta.is_positive() {
        return Err(Error::IrreducibleCase);
    }
    let two = BigRational::from_integer(2.into());
    let d = beta / &two;
    let root = if d.is_zero() {
        BigRational::zero()
    } else {
        Coeff::rational_sqrt(&-d.clone())
            .ok_or_else(|| Error::IrrationalRoot((-d.clone()).to_string()))?
    };
    let c = match c_sign {
        Sign::Plus => &two * &root,
        Sign::Minus => -(&two * &root),
    };
    Ok(AndrianovParams {
        a: alpha.clone(),
        b: -(beta * &two),
        alpha_bar: alpha - BigRational::from_integer(1.into()),
        d,
        c,
    })
}
