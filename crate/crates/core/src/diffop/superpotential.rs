use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::op::{DiffOp, Sign};
use super::quasi::QuasiGaussian;
use crate::error::{Error, Result};
use crate::exactpoly::{Coeff, Poly, RatFunc};

/// `weight · f'/f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTerm {
    pub weight: BigRational,
    pub factor: Poly,
}

/// `slope · x + offset + Σ weight_i f_i'/f_i`.
///
/// Factors are kept monic and distinct; constant factors and zero weights are
/// dropped. Two values denote the same function iff their realizations agree.
/// Weights are rational so that halves such as `g'/(2g)` can be carried; only
/// integer weights admit a closed-form `exp(±∫W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpotential {
    slope: BigRational,
    offset: BigRational,
    terms: Vec<LogTerm>,
}

fn rational_coeff(c: &Coeff) -> Result<BigRational> {
    c.as_rational().cloned().ok_or(Error::UnsupportedField)
}

impl Superpotential {
    pub fn new(slope: BigRational, offset: BigRational, terms: Vec<LogTerm>) -> Self {
        let mut out = Superpotential {
            slope,
            offset,
            terms: Vec::new(),
        };
        for t in terms {
            out.push_term(t.weight, t.factor);
        }
        out
    }

    pub fn zero() -> Self {
        Self::linear(BigRational::zero(), BigRational::zero())
    }

    pub fn linear(slope: BigRational, offset: BigRational) -> Self {
        Superpotential {
            slope,
            offset,
            terms: Vec::new(),
        }
    }

    /// `± x`.
    pub fn x_times(k: i64) -> Self {
        Self::linear(BigRational::from_integer(k.into()), BigRational::zero())
    }

    /// `weight · f'/f`.
    pub fn log_derivative(weight: BigRational, f: &Poly) -> Self {
        Self::zero().with_term(weight, f)
    }

    pub fn with_term(mut self, weight: BigRational, f: &Poly) -> Self {
        self.push_term(weight, f.clone());
        self
    }

    /// Adds `k · f'/f` for an integer weight.
    pub fn with_log(self, k: i64, f: &Poly) -> Self {
        self.with_term(BigRational::from_integer(k.into()), f)
    }

    fn push_term(&mut self, weight: BigRational, factor: Poly) {
        if weight.is_zero() || factor.is_constant() {
            return;
        }
        let factor = factor.monic();
        if let Some(i) = self.terms.iter().position(|t| t.factor == factor) {
            self.terms[i].weight += weight;
            if self.terms[i].weight.is_zero() {
                self.terms.remove(i);
            }
        } else {
            self.terms.push(LogTerm { weight, factor });
        }
    }

    pub fn slope(&self) -> &BigRational {
        &self.slope
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn terms(&self) -> &[LogTerm] {
        &self.terms
    }

    pub fn realize(&self) -> RatFunc {
        let lin = RatFunc::from_poly(Poly::from_rationals(vec![
            self.offset.clone(),
            self.slope.clone(),
        ]));
        self.terms.iter().fold(lin, |acc, t| {
            let ld = RatFunc::log_derivative(&t.factor).expect("nonconstant factor");
            &acc + &ld.scale(&Coeff::from_rational(t.weight.clone()))
        })
    }

    /// Same function as `other`.
    pub fn same_as(&self, other: &Superpotential) -> bool {
        self.realize() == other.realize()
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(
            &self.slope * r,
            &self.offset * r,
            self.terms
                .iter()
                .map(|t| LogTerm {
                    weight: &t.weight * r,
                    factor: t.factor.clone(),
                })
                .collect(),
        )
    }

    /// `±d/dx + W`.
    pub fn first_order(&self, sign: Sign) -> DiffOp {
        DiffOp::first_order(&self.realize(), sign)
    }

    /// `exp(±∫W) = Π f^{±k} · exp(±(slope x²/2 + offset x))`.
    pub fn exp_integral(&self, sign: Sign) -> Result<QuasiGaussian> {
        let s: i64 = match sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        let mut num = Poly::one();
        let mut den = Poly::one();
        for t in &self.terms {
            if !t.weight.is_integer() {
                return Err(Error::NonIntegralWeight(t.weight.to_string()));
            }
            let k = t.weight.to_integer() * BigInt::from(s);
            let e = u32::try_from(k.magnitude()).expect("weight fits in u32");
            if k > BigInt::zero() {
                num = &num * &t.factor.pow(e);
            } else {
                den = &den * &t.factor.pow(e);
            }
        }
        let sr = BigRational::from_integer(s.into());
        let half = BigRational::new(1.into(), 2.into());
        Ok(QuasiGaussian::new(
            RatFunc::new(num, den)?,
            Coeff::from_rational(&self.slope * &half * &sr),
            Coeff::from_rational(&self.offset * &sr),
        ))
    }

    /// Recovers structured form from a rational function, using the factors of
    /// `basis` to split its denominator.
    ///
    /// The polynomial part must have degree at most one and the denominator of the
    /// proper part must be squarefree with each base factor carrying a constant
    /// residue weight. The result is checked to realize `r` exactly.
    pub fn from_ratfunc(r: &RatFunc, basis: &[Poly]) -> Result<Self> {
        if !r.is_rational() {
            return Err(Error::UnsupportedField);
        }
        let (q, rem) = r.polynomial_part();
        if q.degree().is_some_and(|d| d > 1) {
            return Err(Error::StructureError(format!(
                "polynomial part of degree {} is not linear",
                q.degree().unwrap_or(0)
            )));
        }
        let mut out = Self::linear(rational_coeff(&q.coeff(1))?, rational_coeff(&q.coeff(0))?);
        if rem.is_zero() {
            return Ok(out);
        }
        let den = r.den();
        if !den.is_squarefree() {
            return Err(Error::StructureError(
                "denominator has a repeated factor".into(),
            ));
        }
        let mut candidates: Vec<Poly> = basis
            .iter()
            .filter(|p| !p.is_zero())
            .map(Poly::squarefree_part)
            .collect();
        candidates.push(den.clone());
        for f in coprime_base(&candidates)
            .into_iter()
            .filter(|f| den.exact_div(f).is_some())
        {
            let h = den.exact_div(&f).expect("divides");
            let a = rem.rem(&f)?;
            let b = (&f.derive() * &h).rem(&f)?;
            let k = a.proportional(&b).ok_or_else(|| {
                Error::StructureError(format!("residue along {f} is not constant"))
            })?;
            out.push_term(rational_coeff(&k)?, f);
        }
        if out.realize() != *r {
            return Err(Error::StructureError(
                "basis does not split the denominator".into(),
            ));
        }
        Ok(out)
    }
}

/// Refines nonconstant squarefree polynomials into pairwise coprime monic factors such
/// that every input is a product of some of them.
fn coprime_base(polys: &[Poly]) -> Vec<Poly> {
    let mut base: Vec<Poly> = Vec::new();
    let mut pending: Vec<Poly> = polys.iter().rev().cloned().collect();
    while let Some(a) = pending.pop() {
        if a.is_zero() || a.is_constant() {
            continue;
        }
        let a = a.monic();
        let hit = base.iter().enumerate().find_map(|(i, b)| {
            let g = Poly::gcd(&a, b);
            (!g.is_one()).then_some((i, g))
        });
        match hit {
            None => base.push(a),
            Some((i, g)) => {
                let b = base.remove(i);
                pending.push(b.exact_div(&g).expect("gcd divides"));
                pending.push(a.exact_div(&g).expect("gcd divides"));
                pending.push(g);
            }
        }
    }
    base
}

impl<'a> Add<&'a Superpotential> for &'a Superpotential {
    type Output = Superpotential;
    fn add(self, rhs: &Superpotential) -> Superpotential {
        let mut out = Superpotential::linear(&self.slope + &rhs.slope, &self.offset + &rhs.offset);
        for t in self.terms.iter().chain(&rhs.terms) {
            out.push_term(t.weight.clone(), t.factor.clone());
        }
        out
    }
}

impl Neg for &Superpotential {
    type Output = Superpotential;
    fn neg(self) -> Superpotential {
        self.scale(&-BigRational::one())
    }
}

impl<'a> Sub<&'a Superpotential> for &'a Superpotential {
    type Output = Superpotential;
    fn sub(self, rhs: &Superpotential) -> Superpotential {
        self + &(-rhs)
    }
}

impl fmt::Display for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x + {}", self.slope, self.offset)?;
        for t in &self.terms {
            write!(f, " + {} * d/dx log({})", t.weight, t.factor)?;
        }
        Ok(())
    }
}
