//! Hermite, pseudo-Hermite, generalized Hermite and tabulated Okamoto polynomials.

use super::coeff::Coeff;
use super::poly::Poly;
use super::wronskian::wronskian;
use crate::error::{Error, Result};

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeIndex(n))
}

/// Physicists' Hermite polynomials `H_0 ..= H_n` from `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite_table(n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    if n == 0 {
        return out;
    }
    out.push(Poly::from_ints(&[0, 2]));
    let two_x = Poly::from_ints(&[0, 2]);
    for k in 1..n {
        let next = &(&two_x * &out[k]) - &out[k - 1].scale(&Coeff::from_int(2 * k as i64));
        out.push(next);
    }
    out
}

pub fn hermite(n: i64) -> Result<Poly> {
    let n = check_index(n)?;
    Ok(hermite_table(n).pop().expect("nonempty"))
}

/// Pseudo-Hermite polynomials `𝓗_0 ..= 𝓗_n` generated by `𝓗_{k+1} = 𝓗_k' + 2x 𝓗_k`.
pub fn pseudo_hermite_table(n: usize) -> Vec<Poly> {
    let two_x = Poly::from_ints(&[0, 2]);
    let mut out = vec![Poly::one()];
    for k in 0..n {
        let next = &out[k].derive() + &(&two_x * &out[k]);
        out.push(next);
    }
    out
}

pub fn pseudo_hermite(n: i64) -> Result<Poly> {
    let n = check_index(n)?;
    Ok(pseudo_hermite_table(n).pop().expect("nonempty"))
}

/// Which Wronskian representation to use for `H_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteBasis {
    /// `W(H_m, ..., H_{m+n-1})`, an `n x n` determinant.
    Standard,
    /// `W(𝓗_n, ..., 𝓗_{n+m-1})`, an `m x m` determinant.
    Pseudo,
}

/// Generalized Hermite polynomial `H_{m,n}` of degree `m n`.
///
/// The two bases give the same polynomial up to a nonzero constant factor; the
/// raw Wronskian is returned without normalisation.
pub fn generalized_hermite(m: i64, n: i64, basis: HermiteBasis) -> Result<Poly> {
    let m = check_index(m)?;
    let n = check_index(n)?;
    if m == 0 || n == 0 {
        return Ok(Poly::one());
    }
    let entries = match basis {
        HermiteBasis::Standard => hermite_table(m + n - 1)[m..m + n].to_vec(),
        HermiteBasis::Pseudo => pseudo_hermite_table(n + m - 1)[n..n + m].to_vec(),
    };
    wronskian(&entries)
}

/// `H_{m,n}` up to a constant, through whichever Wronskian is smaller.
pub fn generalized_hermite_fast(m: i64, n: i64) -> Result<Poly> {
    if m <= n {
        generalized_hermite(m, n, HermiteBasis::Pseudo)
    } else {
        generalized_hermite(m, n, HermiteBasis::Standard)
    }
}

/// Index pairs of the generalized Okamoto polynomials available from the table.
pub const OKAMOTO_TABLE: [(i64, i64); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)];

/// Tabulated generalized Okamoto polynomial `Q_{m,n}`.
///
/// `Q_{1,1} = sqrt(2) z` is returned as `z`; it only enters through logarithmic
/// derivatives.
pub fn okamoto(m: i64, n: i64) -> Result<Poly> {
    match (m, n) {
        (0, 0) | (1, 0) | (0, 1) => Ok(Poly::one()),
        (1, 1) => Ok(Poly::x()),
        (2, 0) => Ok(Poly::from_ints(&[3, 0, 2])),
        (0, 2) => Ok(Poly::from_ints(&[-3, 0, 2])),
        _ => Err(Error::UnsupportedOkamotoIndex { m, n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hermite() {
        assert_eq!(hermite(0).unwrap(), Poly::one());
        assert_eq!(hermite(2).unwrap(), Poly::from_ints(&[-2, 0, 4]));
        assert_eq!(hermite(3).unwrap(), Poly::from_ints(&[0, -12, 0, 8]));
        assert_eq!(hermite(-1), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn small_pseudo_hermite() {
        assert_eq!(pseudo_hermite(0).unwrap(), Poly::one());
        assert_eq!(pseudo_hermite(1).unwrap(), Poly::from_ints(&[0, 2]));
        assert_eq!(pseudo_hermite(2).unwrap(), Poly::from_ints(&[2, 0, 4]));
        assert_eq!(pseudo_hermite(-3), Err(Error::NegativeIndex(-3)));
    }

    #[test]
    fn pseudo_hermite_is_rotated_hermite() {
        // 𝓗_n(x) = (-i)^n H_n(ix): coefficient of x^k picks up (-i)^n i^k
        for (n, h) in hermite_table(12).iter().enumerate() {
            let ph = pseudo_hermite(n as i64).unwrap();
            for k in 0..=n {
                let c = h.coeff(k);
                if c.is_zero() {
                    assert!(ph.coeff(k).is_zero());
                    continue;
                }
                // n - k is even whenever H_n has an x^k term
                let e = (k as i64 - n as i64).rem_euclid(4);
                let sign = if e == 0 { 1 } else { -1 };
                assert_eq!(ph.coeff(k), &c * &Coeff::from_int(sign), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn generalized_hermite_special_cases() {
        for basis in [HermiteBasis::Standard, HermiteBasis::Pseudo] {
            assert_eq!(generalized_hermite(3, 0, basis).unwrap(), Poly::one());
            assert_eq!(generalized_hermite(0, 4, basis).unwrap(), Poly::one());
        }
        assert_eq!(
            generalized_hermite(1, 5, HermiteBasis::Pseudo).unwrap(),
            pseudo_hermite(5).unwrap()
        );
        assert_eq!(
            generalized_hermite(2, 2, HermiteBasis::Pseudo).unwrap(),
            Poly::from_ints(&[24, 0, 0, 0, 32])
        );
        // H_{n,1} = H_n
        assert_eq!(
            generalized_hermite(4, 1, HermiteBasis::Standard).unwrap(),
            hermite(4).unwrap()
        );
    }

    #[test]
    fn okamoto_table() {
        assert_eq!(okamoto(2, 0).unwrap(), Poly::from_ints(&[3, 0, 2]));
        assert_eq!(okamoto(0, 2).unwrap(), Poly::from_ints(&[-3, 0, 2]));
        assert_eq!(okamoto(1, 0).unwrap(), Poly::one());
        assert_eq!(okamoto(1, 1).unwrap(), Poly::x());
        assert_eq!(
            okamoto(3, 3),
            Err(Error::UnsupportedOkamotoIndex { m: 3, n: 3 })
        );
    }
}
