//! Integer-coefficient kernels behind rational [`Poly`] multiplication and gcd.
//!
//! A rational polynomial is split into `content * primitive` where the primitive
//! part has coprime integer coefficients. Products and remainder sequences then
//! run on `BigInt` and skip the per-operation normalisation of `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::poly::Poly;

/// `p = content * prim`, `prim` primitive with positive leading coefficient.
pub(crate) fn split_content(p: &Poly) -> (BigRational, Vec<BigInt>) {
    let rats: Vec<&BigRational> = p
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients"))
        .collect();
    let mut den_lcm = BigInt::one();
    for r in &rats {
        den_lcm = den_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&den_lcm / r.denom()))
        .collect();
    let (g, prim) = primitive(ints);
    (BigRational::new(g, den_lcm), prim)
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content, fixing the sign so the leading coefficient is positive.
fn primitive(mut v: Vec<BigInt>) -> (BigInt, Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return (BigInt::zero(), v);
    }
    let mut g = content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    (g, v)
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn from_ints(scale: &BigRational, v: &[BigInt]) -> Poly {
    Poly::new(
        v.iter()
            .map(|c| Coeff::from_rational(scale * BigRational::from_integer(c.clone())))
            .collect(),
    )
}

pub(crate) fn rational_mul(a: &Poly, b: &Poly) -> Poly {
    let (ca, pa) = split_content(a);
    let (cb, pb) = split_content(b);
    from_ints(&(ca * cb), &int_mul(&pa, &pb))
}

/// Pseudo-remainder of `a` by `b` over the integers.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Monic gcd of two rational polynomials by the primitive remainder sequence.
pub(crate) fn rational_gcd(a: &Poly, b: &Poly) -> Poly {
    let (_, mut r0) = split_content(a);
    let (_, mut r1) = split_content(b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        if r1.len() == 1 {
            return Poly::one();
        }
        let r = prem(&r0, &r1);
        let (_, r) = primitive(r);
        r0 = r1;
        r1 = r;
    }
    from_ints(&BigRational::one(), &r0).monic()
}
