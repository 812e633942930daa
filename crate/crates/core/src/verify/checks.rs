use num_rational::BigRational;

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exactpoly::Coeff;

/// `Ha ∘ X - X ∘ (Hb + shift) = 0` exactly.
pub fn check_intertwining(x: &DiffOp, ha: &DiffOp, hb: &DiffOp, shift: &BigRational) -> bool {
    let hb_shifted = hb.shifted(&Coeff::from_rational(shift.clone()));
    ha.compose(x) == x.compose(&hb_shifted)
}

/// `σ` with `a = σ b`, or `None` when the operators are not proportional.
pub fn proportional(a: &DiffOp, b: &DiffOp) -> Result<Option<Coeff>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperator);
    }
    Ok(a.proportional(b))
}

/// Constant `κ` with `ha = scale · (hb + κ)`, or `None` when the difference is not a
/// constant. Both operators must be second order with leading coefficients in the
/// ratio `scale`.
pub fn shift_equivalence(
    ha: &DiffOp,
    hb: &DiffOp,
    scale: &BigRational,
) -> Result<Option<BigRational>> {
    if ha.order() != 2 || hb.order() != 2 {
        return Err(Error::OrderMismatch(format!(
            "expected two second-order operators, got orders {} and {}",
            ha.order(),
            hb.order()
        )));
    }
    let s = Coeff::from_rational(scale.clone());
    if ha.coeff(2) != hb.coeff(2).scale(&s) {
        return Err(Error::OrderMismatch(format!(
            "leading coefficients are not in the ratio {scale}"
        )));
    }
    let inv = s.inv().ok_or(Error::DivisionByZero)?;
    let diff = &ha.scale(&inv) - hb;
    if diff.is_zero() {
        return Ok(Some(BigRational::from_integer(0.into())));
    }
    if diff.order() != 0 {
        return Ok(None);
    }
    Ok(diff
        .coeff(0)
        .as_constant()
        .and_then(|c| c.as_rational().cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::Sign;
    use crate::exactpoly::{Poly, RatFunc};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn oscillator() -> DiffOp {
        DiffOp::schrodinger(&RatFunc::from_poly(Poly::from_ints(&[0, 0, 1])))
    }

    #[test]
    fn creation_operator_intertwines_with_shift() {
        let ad = DiffOp::first_order(&RatFunc::x(), Sign::Minus);
        let h = oscillator();
        assert!(check_intertwining(&ad, &h, &h, &rat(2, 1)));
        assert!(!check_intertwining(&ad, &h, &h, &rat(0, 1)));
    }

    #[test]
    fn shifts() {
        let h = oscillator();
        let hs = h
            .shifted(&Coeff::from_int(5))
            .scale(&Coeff::from_ratio(1, 3));
        assert_eq!(shift_equivalence(&hs, &h, &rat(1, 3)), Ok(Some(rat(5, 1))));
        assert!(matches!(
            shift_equivalence(&hs, &h, &rat(1, 1)),
            Err(Error::OrderMismatch(_))
        ));
        let d = DiffOp::derivative();
        assert!(matches!(
            shift_equivalence(&d, &h, &rat(1, 1)),
            Err(Error::OrderMismatch(_))
        ));
        let bent = &h + &DiffOp::multiplication(RatFunc::x());
        assert_eq!(shift_equivalence(&bent, &h, &rat(1, 1)), Ok(None));
    }

    #[test]
    fn zero_operator_rejected() {
        assert_eq!(
            proportional(&DiffOp::zero(), &oscillator()),
            Err(Error::ZeroOperator)
        );
        let a = DiffOp::derivative();
        assert_eq!(proportional(&a, &a), Ok(Some(Coeff::one())));
    }
}
