use std::fmt;
use std::str::FromStr;

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::exactpoly::{
    pseudo_hermite_table, real_root_count, wronskian, Coeff, Poly, RatFunc, RootInterval,
};

/// Seed degrees `m_1 < m_2 < ... < m_k` of a `k`-step rational extension of the
/// oscillator. Regularity requires `m_i` even for odd `i` and odd for even `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionSpec {
    ms: Vec<i64>,
}

impl ExtensionSpec {
    pub fn new(ms: Vec<i64>) -> Result<Self> {
        for (i, &m) in ms.iter().enumerate() {
            if m < 0 {
                return Err(Error::InvalidSpec(format!("negative seed degree {m}")));
            }
            if i > 0 && m <= ms[i - 1] {
                return Err(Error::InvalidSpec(format!(
                    "seed degrees must increase strictly: {:?}",
                    ms
                )));
            }
            // position i is 0-based, so even positions carry even degrees
            if (m % 2 == 0) != (i % 2 == 0) {
                return Err(Error::InvalidSpec(format!(
                    "seed degree {m} at position {} breaks the even/odd alternation",
                    i + 1
                )));
            }
        }
        Ok(ExtensionSpec { ms })
    }

    pub fn ms(&self) -> &[i64] {
        &self.ms
    }

    pub fn k(&self) -> usize {
        self.ms.len()
    }

    /// `W(𝓗_{m_1}, ..., 𝓗_{m_k})`, or `1` for the oscillator itself.
    pub fn wronskian(&self) -> Poly {
        seed_wronskian(&self.ms)
    }

    /// Oscillator levels `nu` added below the ground state, lowest first.
    pub fn extra_levels(&self) -> Vec<i64> {
        self.ms.iter().rev().map(|m| -m - 1).collect()
    }

    pub fn is_level(&self, nu: i64) -> bool {
        nu >= 0 || self.extra_levels().contains(&nu)
    }
}

impl FromStr for ExtensionSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return ExtensionSpec::new(Vec::new());
        }
        let ms = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidSpec(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ExtensionSpec::new(ms)
    }
}

impl fmt::Display for ExtensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ms.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Wronskian of pseudo-Hermite polynomials in the given order.
pub(crate) fn seed_wronskian(ms: &[i64]) -> Poly {
    if ms.is_empty() {
        return Poly::one();
    }
    let top = *ms.iter().max().expect("nonempty") as usize;
    let table = pseudo_hermite_table(top);
    let fs: Vec<Poly> = ms.iter().map(|&m| table[m as usize].clone()).collect();
    wronskian(&fs).expect("nonempty")
}

/// `x^2 - 2k - 2 (log W)''` for the pseudo-Hermite Wronskian `W`, after certifying
/// that `W` has no real zero.
pub fn kstep_potential(spec: &ExtensionSpec) -> Result<RatFunc> {
    let w = spec.wronskian();
    if !w.is_constant() && real_root_count(&w, &RootInterval::AllReals)? > 0 {
        return Err(Error::SingularExtension(spec.ms.clone()));
    }
    let x2 = Poly::monomial(Coeff::one(), 2);
    let base = RatFunc::from_poly(&x2 - &Poly::constant(Coeff::from_int(2 * spec.k() as i64)));
    if w.is_constant() {
        return Ok(base);
    }
    let log2 = RatFunc::log_derivative(&w)?.derive();
    Ok(&base - &log2.scale(&Coeff::from_int(2)))
}

/// `-d²/dx² + V` for the k-step potential.
pub fn extension_hamiltonian(spec: &ExtensionSpec) -> Result<DiffOp> {
    Ok(DiffOp::schrodinger(&kstep_potential(spec)?))
}
