//! Sturm sequences for exact real-root counting.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::coeff::Coeff;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootInterval {
    AllReals,
    /// Closed interval `[a, b]`.
    Closed(BigRational, BigRational),
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derive()];
    while !chain.last().unwrap().is_zero() && !chain.last().unwrap().is_constant() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
        // scaling by a positive constant keeps the signs
        let r = match r.leading() {
            Some(lc) => {
                let mag = lc.as_rational().expect("rational").abs();
                -r.scale(&Coeff::from_rational(mag.recip()))
            }
            None => r,
        };
        chain.push(r);
    }
    chain.retain(|q| !q.is_zero());
    chain
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at(chain: &[Poly], x: &BigRational) -> usize {
    variations(chain.iter().map(|q| sign_of(&q.eval_rational(x))))
}

fn sign_at_infinity(chain: &[Poly], positive: bool) -> usize {
    variations(chain.iter().map(|q| {
        let lc = q.leading().expect("nonzero").signum();
        let deg = q.degree().unwrap_or(0);
        if positive || deg % 2 == 0 {
            lc
        } else {
            -lc
        }
    }))
}

/// Removes every factor `(x - a)` from `p`, returning the stripped polynomial and whether
/// `a` was a root.
fn strip_root(p: &Poly, a: &BigRational) -> (Poly, bool) {
    let lin = Poly::from_rationals(vec![-a.clone(), BigRational::from_integer(1.into())]);
    let mut q = p.clone();
    let mut hit = false;
    while q.eval_rational(a).is_zero() && !q.is_zero() {
        q = q.exact_div(&lin).expect("a is a root");
        hit = true;
    }
    (q, hit)
}

/// Number of distinct real roots of `p` in the interval.
pub fn real_root_count(p: &Poly, interval: &RootInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_rational() {
        return Err(Error::UnsupportedField);
    }
    if p.is_constant() {
        return Ok(0);
    }
    let p = p.squarefree_part();
    match interval {
        RootInterval::AllReals => {
            let chain = sturm_chain(&p);
            Ok(sign_at_infinity(&chain, false) - sign_at_infinity(&chain, true))
        }
        RootInterval::Closed(a, b) => {
            if a > b {
                return Ok(0);
            }
            let (p, hit_a) = strip_root(&p, a);
            let (p, hit_b) = strip_root(&p, b);
            let endpoint_roots = usize::from(hit_a) + usize::from(hit_b && a != b);
            if p.is_constant() {
                return Ok(endpoint_roots);
            }
            let chain = sturm_chain(&p);
            Ok(sign_at(&chain, a) - sign_at(&chain, b) + endpoint_roots)
        }
    }
}
