//! Exact scalars in a real quadratic field Q(sqrt(s)).
//!
//! A [`Coeff`] is `rat + irr * sqrt(root)` with `root` squarefree. Values with
//! `irr == 0` always carry `root == 1`, so plain rationals mix freely with any
//! field. Combining two genuinely irrational values from different fields is a
//! programming error and panics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    rat: BigRational,
    irr: BigRational,
    root: u64,
}

fn join_root(a: u64, b: u64) -> u64 {
    match (a, b) {
        (1, r) | (r, 1) => r,
        (r, s) if r == s => r,
        (r, s) => panic!("cannot mix Q(sqrt({r})) with Q(sqrt({s}))"),
    }
}

/// Splits `n > 0` into `(a, t)` with `n = a^2 * t` and `t` squarefree.
fn square_split(n: &BigInt) -> (BigInt, u64) {
    let mut rest = n
        .to_u64()
        .expect("radicand too large for a quadratic field");
    let mut outer = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            outer *= p;
        }
        p += 1;
    }
    (BigInt::from(outer), rest)
}

impl Coeff {
    fn build(rat: BigRational, irr: BigRational, root: u64) -> Self {
        if irr.is_zero() || root == 1 {
            let rat = if root == 1 { rat + irr } else { rat };
            Coeff {
                rat,
                irr: BigRational::zero(),
                root: 1,
            }
        } else {
            Coeff { rat, irr, root }
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coeff {
            rat: r,
            irr: BigRational::zero(),
            root: 1,
        }
    }

    /// `rat + irr * sqrt(root)`; `root` must be a squarefree positive integer.
    pub fn quadratic(rat: BigRational, irr: BigRational, root: u64) -> Self {
        assert!(root > 0, "radicand must be positive");
        Self::build(rat, irr, root)
    }

    /// Exact positive square root of a positive rational, landing in Q or Q(sqrt(t)).
    pub fn sqrt_of(r: &BigRational) -> Option<Self> {
        if !r.is_positive() {
            return None;
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let pq = r.numer() * r.denom();
        let (outer, t) = square_split(&pq);
        let scale = BigRational::new(outer, r.denom().clone());
        if t == 1 {
            Some(Self::from_rational(scale))
        } else {
            Some(Self::build(BigRational::zero(), scale, t))
        }
    }

    /// Rational square root if one exists.
    pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
        if r.is_zero() {
            return Some(BigRational::zero());
        }
        Self::sqrt_of(r).and_then(|c| c.as_rational().cloned())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irr
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.irr.is_zero() && self.rat.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.rat.recip()));
        }
        // (p - q sqrt s) / (p^2 - s q^2); the norm is nonzero since s is not a square
        let s = BigRational::from_integer(self.root.into());
        let norm = &self.rat * &self.rat - &s * &self.irr * &self.irr;
        Some(Self::build(
            &self.rat / &norm,
            -(&self.irr / &norm),
            self.root,
        ))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Coeff::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.irr.is_zero() {
            p
        } else {
            p + self.irr.to_f64().unwrap_or(f64::NAN) * (self.root as f64).sqrt()
        }
    }

    /// Sign of the real number this coefficient denotes.
    pub fn signum(&self) -> i32 {
        let sign = |r: &BigRational| {
            if r.is_positive() {
                1
            } else if r.is_negative() {
                -1
            } else {
                0
            }
        };
        let (sp, sq) = (sign(&self.rat), sign(&self.irr));
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: compare p^2 with s q^2
        let s = BigRational::from_integer(self.root.into());
        let lhs = &self.rat * &self.rat;
        let rhs = s * &self.irr * &self.irr;
        if lhs > rhs {
            sp
        } else {
            sq
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::from_rational(r)
    }
}

impl From<&BigRational> for Coeff {
    fn from(r: &BigRational) -> Self {
        Coeff::from_rational(r.clone())
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if rhs.is_rational() && self.is_rational() {
            return Coeff::from_rational(&self.rat + &rhs.rat);
        }
        let root = join_root(self.root, rhs.root);
        Coeff::build(&self.rat + &rhs.rat, &self.irr + &rhs.irr, root)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if rhs.is_rational() && self.is_rational() {
            return Coeff::from_rational(&self.rat - &rhs.rat);
        }
        let root = join_root(self.root, rhs.root);
        Coeff::build(&self.rat - &rhs.rat, &self.irr - &rhs.irr, root)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self.is_rational(), rhs.is_rational()) {
            (true, true) => Coeff::from_rational(&self.rat * &rhs.rat),
            (true, false) => Coeff::build(&self.rat * &rhs.rat, &self.rat * &rhs.irr, rhs.root),
            (false, true) => Coeff::build(&self.rat * &rhs.rat, &self.irr * &rhs.rat, self.root),
            (false, false) => {
                let root = join_root(self.root, rhs.root);
                let s = BigRational::from_integer(root.into());
                Coeff::build(
                    &self.rat * &rhs.rat + s * &self.irr * &rhs.irr,
                    &self.rat * &rhs.irr + &self.irr * &rhs.rat,
                    root,
                )
            }
        }
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Coeff) -> Coeff {
        let inv = rhs.inv().expect("division of Coeff by zero");
        self * &inv
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            rat: -&self.rat,
            irr: -&self.irr,
            root: self.root,
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff { (&self).$m(rhs) }
        }
        impl<'a> $tr<Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", fmt_rational(&self.rat));
        }
        let irr = if self.irr.is_one() {
            format!("sqrt({})", self.root)
        } else {
            format!("{}*sqrt({})", fmt_rational(&self.irr), self.root)
        };
        if self.rat.is_zero() {
            write!(f, "{irr}")
        } else {
            write!(f, "{}+{}", fmt_rational(&self.rat), irr)
        }
    }
}
