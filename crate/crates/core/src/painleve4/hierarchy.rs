use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::diffop::Superpotential;
use crate::error::{Error, Result};
use crate::exactpoly::{generalized_hermite_fast, okamoto, Poly, RatFunc};

/// Rational-solution hierarchies built from generalized Hermite (`-1/z`, `-2z`) and
/// generalized Okamoto (`-2z/3`) polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    HermiteI,
    HermiteII,
    OkamotoI,
    OkamotoII,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::HermiteI,
        Family::HermiteII,
        Family::OkamotoI,
        Family::OkamotoII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::HermiteI => "hermite-I",
            Family::HermiteII => "hermite-II",
            Family::OkamotoI => "okamoto-I",
            Family::OkamotoII => "okamoto-II",
        }
    }

    /// `(alpha, beta)` attached to the index pair.
    pub fn parameters(self, m: i64, n: i64) -> (BigRational, BigRational) {
        let int = |k: i64| BigRational::from_integer(k.into());
        let two_ninths = BigRational::new((-2).into(), 9.into());
        match self {
            Family::HermiteI => (int(-(m + 2 * n + 1)), int(-2 * m * m)),
            Family::HermiteII => (int(2 * m + n + 1), int(-2 * n * n)),
            Family::OkamotoI => (int(-2 * n - m), two_ninths * int((3 * m - 1).pow(2))),
            Family::OkamotoII => (int(2 * m + n), two_ninths * int((3 * n - 1).pow(2))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P4Params {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub family: Family,
    pub m: i64,
    pub n: i64,
}

/// A rational solution together with its logarithmic-derivative structure.
#[derive(Clone, Debug)]
pub struct HierarchySolution {
    pub w: RatFunc,
    pub structure: Superpotential,
    pub params: P4Params,
}

fn hermite_pair(m: i64, n: i64) -> Result<Poly> {
    generalized_hermite_fast(m, n)
}

/// Builds `w` from the defining logarithmic derivative and attaches the family's
/// parameters.
pub fn hierarchy_solution(family: Family, m: i64, n: i64) -> Result<HierarchySolution> {
    for k in [m, n] {
        if k < 0 {
            return Err(Error::NegativeIndex(k));
        }
    }
    let two_thirds = BigRational::new((-2).into(), 3.into());
    let zero = BigRational::from_integer(0.into());
    let structure = match family {
        Family::HermiteI => Superpotential::zero()
            .with_log(-1, &hermite_pair(m, n + 1)?)
            .with_log(1, &hermite_pair(m, n)?),
        Family::HermiteII => Superpotential::zero()
            .with_log(1, &hermite_pair(m + 1, n)?)
            .with_log(-1, &hermite_pair(m, n)?),
        Family::OkamotoI => {
            let top = okamoto(m, n + 1).map_err(|_| Error::UnsupportedOkamotoIndex { m, n })?;
            Superpotential::linear(two_thirds, zero)
                .with_log(-1, &top)
                .with_log(1, &okamoto(m, n)?)
        }
        Family::OkamotoII => {
            let top = okamoto(m + 1, n).map_err(|_| Error::UnsupportedOkamotoIndex { m, n })?;
            Superpotential::linear(two_thirds, zero)
                .with_log(1, &top)
                .with_log(-1, &okamoto(m, n)?)
        }
    };
    let (alpha, beta) = family.parameters(m, n);
    Ok(HierarchySolution {
        w: structure.realize(),
        structure,
        params: P4Params {
            alpha,
            beta,
            family,
            m,
            n,
        },
    })
}

/// Index pairs for which an Okamoto-family solution can be built from the table.
pub fn supported_okamoto_indices(family: Family) -> Vec<(i64, i64)> {
    let tab = crate::exactpoly::OKAMOTO_TABLE;
    let next = |m: i64, n: i64| match family {
        Family::OkamotoI => (m, n + 1),
        _ => (m + 1, n),
    };
    tab.iter()
        .copied()
        .filter(|&(m, n)| tab.contains(&next(m, n)))
        .collect()
}
