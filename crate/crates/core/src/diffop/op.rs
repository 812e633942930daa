use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::quasi::QuasiGaussian;
use crate::exactpoly::{Coeff, RatFunc};

/// Sign in front of `d/dx` in a first-order factor `±d/dx + W`, or of the exponent in
/// `exp(±∫W)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ_k coeffs[k] · d^k/dx^k` with rational-function coefficients.
///
/// Trailing zero coefficients are trimmed, so two operators are equal exactly when
/// their reduced coefficients agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

fn binomial(n: usize, k: usize) -> Coeff {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Coeff::from_rational(BigRational::from_integer(acc))
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::multiplication(RatFunc::one())
    }

    /// `d/dx`.
    pub fn derivative() -> Self {
        Self::new(vec![RatFunc::zero(), RatFunc::one()])
    }

    pub fn multiplication(f: RatFunc) -> Self {
        Self::new(vec![f])
    }

    pub fn scalar(c: Coeff) -> Self {
        Self::multiplication(RatFunc::constant(c))
    }

    /// `±d/dx + w`.
    pub fn first_order(w: &RatFunc, sign: Sign) -> Self {
        let d = match sign {
            Sign::Plus => RatFunc::one(),
            Sign::Minus => RatFunc::from_int(-1),
        };
        Self::new(vec![w.clone(), d])
    }

    /// `-d²/dx² + v`.
    pub fn schrodinger(v: &RatFunc) -> Self {
        Self::new(vec![v.clone(), RatFunc::zero(), RatFunc::from_int(-1)])
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Order of the operator; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// `self + c` for a scalar `c`.
    pub fn shifted(&self, c: &Coeff) -> Self {
        self + &Self::scalar(c.clone())
    }

    /// Operator product `self ∘ rhs`, expanded with the Leibniz rule
    /// `D^i b = Σ_l C(i,l) b^{(l)} D^{i-l}`.
    pub fn compose(&self, rhs: &DiffOp) -> DiffOp {
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::zero();
        }
        let max_i = self.order();
        let mut out = vec![RatFunc::zero(); self.order() + rhs.order() + 1];
        for (j, b) in rhs.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let mut derivs = Vec::with_capacity(max_i + 1);
            derivs.push(b.clone());
            for l in 1..=max_i {
                let next = derivs[l - 1].derive();
                derivs.push(next);
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (l, bl) in derivs.iter().enumerate().take(i + 1) {
                    if bl.is_zero() {
                        continue;
                    }
                    let term = (a * bl).scale(&binomial(i, l));
                    let slot = i - l + j;
                    out[slot] = &out[slot] + &term;
                }
            }
        }
        DiffOp::new(out)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &DiffOp, b: &DiffOp) -> DiffOp {
        &a.compose(b) - &b.compose(a)
    }

    /// Image of a quasi-Gaussian function. With `ψ = R e^φ`, `D^k ψ = R_k e^φ` where
    /// `R_{k+1} = R_k' + φ' R_k`.
    pub fn apply(&self, psi: &QuasiGaussian) -> QuasiGaussian {
        let phi_prime = psi.exponent_derivative();
        let mut rk = psi.prefactor().clone();
        let mut acc = RatFunc::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &(a * &rk);
            }
            if k + 1 < self.coeffs.len() {
                rk = &rk.derive() + &(&phi_prime * &rk);
            }
        }
        QuasiGaussian::new(acc, psi.gauss().clone(), psi.lin().clone())
    }

    /// `sigma` with `self = sigma · other`, if it exists.
    pub fn proportional(&self, other: &DiffOp) -> Option<Coeff> {
        if self.is_zero() || other.is_zero() || self.order() != other.order() {
            return None;
        }
        let top = self.coeffs.last()?;
        let sigma = top.proportional(other.coeffs.last()?)?;
        (other.scale(&sigma) == *self).then_some(sigma)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_rational)
    }
}

impl<'a> Add<&'a DiffOp> for &'a DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a DiffOp> for &'a DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a DiffOp> for &'a DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.compose(rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}] d/dx")?,
                _ => write!(f, "[{c}] d^{k}/dx^{k}")?,
            }
        }
        Ok(())
    }
}

/// Product `ops[0] ∘ ops[1] ∘ ... `; the identity for an empty slice.
pub fn compose_all(ops: &[DiffOp]) -> DiffOp {
    ops.iter()
        .fold(DiffOp::identity(), |acc, op| acc.compose(op))
}
