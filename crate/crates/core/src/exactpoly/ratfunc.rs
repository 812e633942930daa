//! Reduced quotients of polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::coeff::Coeff;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`. The zero function is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = Poly::gcd(&num, &den);
        if g.is_one() {
            return Ok(Self::from_coprime(num, den));
        }
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Ok(Self::from_coprime(num, den))
    }

    /// Skips the gcd; the caller guarantees the parts share no factor.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inv().expect("nonzero");
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coeff::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(Coeff::from_rational(r))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// `f' / f`.
    pub fn log_derivative(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        RatFunc::new(f.derive(), f.clone())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn is_rational(&self) -> bool {
        self.num.is_rational() && self.den.is_rational()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = Self::from_coprime(rhs.den.clone(), rhs.num.clone());
        Ok(self * &inv)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        // powers of coprime parts stay coprime
        Self::from_coprime(self.num.pow(k), self.den.pow(k))
    }

    /// Quotient rule. With `g = gcd(d, d')` the result `(n' d/g - n d'/g) / (d * d/g)`
    /// is already reduced.
    pub fn derive(&self) -> Self {
        if self.den.is_constant() {
            return Self::from_poly(self.num.derive());
        }
        let dprime = self.den.derive();
        let g = Poly::gcd(&self.den, &dprime);
        let d_over_g = self.den.exact_div(&g).expect("gcd divides");
        let dp_over_g = dprime.exact_div(&g).expect("gcd divides");
        let num = &(&self.num.derive() * &d_over_g) - &(&self.num * &dp_over_g);
        let den = &self.den * &d_over_g;
        Self::from_coprime(num, den)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.derive())
    }

    pub fn eval(&self, x: &Coeff) -> Result<Coeff> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::EvalAtPole);
        }
        Ok(&self.num.eval(x) / &d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Returns `sigma` with `self = sigma * other`.
    pub fn proportional(&self, other: &RatFunc) -> Option<Coeff> {
        if self.den != other.den {
            return None;
        }
        self.num.proportional(&other.num)
    }

    /// Splits into polynomial part and proper remainder `r / den`.
    pub fn polynomial_part(&self) -> (Poly, Poly) {
        self.num.div_rem(&self.den).expect("nonzero denominator")
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::from_coprime(num, &self.den * &rhs.den);
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        // only factors of g can survive in common with the new denominator
        let h = Poly::gcd(&t, &g);
        let num = t.exact_div(&h).expect("gcd divides");
        let den = &b1 * &rhs.den.exact_div(&h).expect("h divides g");
        RatFunc::from_coprime(num, den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (
                self.num.exact_div(&g1).expect("gcd divides"),
                rhs.den.exact_div(&g1).expect("gcd divides"),
            )
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (
                rhs.num.exact_div(&g2).expect("gcd divides"),
                self.den.exact_div(&g2).expect("gcd divides"),
            )
        };
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
