use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactpoly::{Coeff, Poly, RatFunc};

/// Numerator of the fourth Painlevé residual cleared of the denominator `2 N D^3`
/// for `w = N / D`:
/// `2 N P2 - P1^2 - 3 N^4 - 8 z N^3 D - 4 (z^2 - alpha) N^2 D^2 - 2 beta D^4` with
/// `P1 = N' D - N D'` and `P2 = P1' D - 2 D' P1`.
///
/// Unlike [`p4_residual`] this is defined for `w = 0`, where it reduces to
/// `-2 beta`.
pub fn p4_cleared_residual(w: &RatFunc, alpha: &BigRational, beta: &BigRational) -> Poly {
    let n = w.num();
    let d = w.den();
    let p1 = &(&n.derive() * d) - &(n * &d.derive());
    let p2 = &(&p1.derive() * d) - &(&d.derive() * &p1).scale(&Coeff::from_int(2));
    let n2 = n * n;
    let d2 = d * d;
    let z = Poly::x();
    let z2_minus_alpha = Poly::new(vec![
        Coeff::from_rational(-alpha.clone()),
        Coeff::zero(),
        Coeff::one(),
    ]);
    let terms = [
        (n * &p2).scale(&Coeff::from_int(2)),
        -(&p1 * &p1),
        (&n2 * &n2).scale(&Coeff::from_int(-3)),
        (&(&(&z * &n2) * n) * d).scale(&Coeff::from_int(-8)),
        (&(&z2_minus_alpha * &n2) * &d2).scale(&Coeff::from_int(-4)),
        (&d2 * &d2).scale(&Coeff::from_rational(
            beta * BigRational::from_integer((-2).into()),
        )),
    ];
    terms.iter().fold(Poly::zero(), |acc, t| &acc + t)
}

/// Residual of the fourth Painlevé equation
/// `w'' - [w'^2/(2w) + (3/2) w^3 + 4 z w^2 + 2 (z^2 - alpha) w + beta / w]`,
/// reduced, so it is the zero function exactly when `w` is a solution.
pub fn p4_residual(w: &RatFunc, alpha: &BigRational, beta: &BigRational) -> Result<RatFunc> {
    if w.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let numer = p4_cleared_residual(w, alpha, beta);
    if numer.is_zero() {
        return Ok(RatFunc::zero());
    }
    let n = w.num();
    let d = w.den();
    let den = (&(&(n * d) * d) * d).scale(&Coeff::from_int(2));
    RatFunc::new(numer, den)
}
