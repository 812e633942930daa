use std::fmt;

use num_rational::BigRational;

use crate::diffop::{DiffOp, QuasiGaussian};
use crate::error::{Error, Result};
use crate::exactpoly::{hermite_table, pseudo_hermite_table, Coeff, Poly, RatFunc};

use super::extension::ExtensionSpec;
use super::ladder::{ladder, Ladder, LadderKind};

/// Chain members listed above each chain base.
pub const DEFAULT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Singlet,
    DoubletLow,
    DoubletHigh,
    ChainBase,
    Chain,
    /// Finite chain of three or more levels; not produced by the ladders here.
    FiniteChain,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::Singlet => "singlet",
            Role::DoubletLow => "doublet-low",
            Role::DoubletHigh => "doublet-high",
            Role::ChainBase => "chain-base",
            Role::Chain => "chain",
            Role::FiniteChain => "finite-chain",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub nu: i64,
    /// `2 nu + 1`.
    pub energy: BigRational,
    pub wavefunction: QuasiGaussian,
    pub role: Role,
    pub annihilated_by_lower: bool,
    pub annihilated_by_raise: bool,
}

/// Closed-form eigenfunction `ψ_nu` of the one- or two-step extension (or of the
/// oscillator for an empty spec), up to normalisation.
pub fn wavefunction(spec: &ExtensionSpec, nu: i64) -> Result<QuasiGaussian> {
    if !spec.is_level(nu) {
        return Err(Error::InvalidIndex(format!(
            "{nu} is not a level of {spec}"
        )));
    }
    let top_ph = spec.ms().iter().copied().max().unwrap_or(0) as usize;
    let ph = pseudo_hermite_table(top_ph);
    let h = hermite_table((nu.max(0) + 1) as usize);
    let c = |k: i64| Coeff::from_int(k);
    let (y, den) = match *spec.ms() {
        [] => (h[nu as usize].clone(), Poly::one()),
        [m1] => {
            let m = m1 as usize;
            let y = if nu == -m1 - 1 {
                Poly::one()
            } else {
                let n = nu as usize;
                let mut y = -(&ph[m] * &h[n + 1]);
                if m1 > 0 {
                    y = &y - &(&ph[m - 1] * &h[n]).scale(&c(2 * m1));
                }
                y
            };
            (y, ph[m].clone())
        }
        [m1, m2] => {
            let (a, b) = (m1 as usize, m2 as usize);
            let y = if nu == -m2 - 1 {
                ph[a].clone()
            } else if nu == -m1 - 1 {
                ph[b].clone()
            } else {
                let n = nu as usize;
                let lead = (&(&ph[a] * &ph[b]) * &h[n + 1]).scale(&c(m2 - m1));
                let mut bracket = -(&(&ph[a] * &ph[b - 1]).scale(&c(m2 * (m1 + nu + 1))));
                if m1 > 0 {
                    bracket = &bracket + &(&ph[a - 1] * &ph[b]).scale(&c(m1 * (m2 + nu + 1)));
                }
                &lead + &(&bracket * &h[n]).scale(&c(2))
            };
            (y, spec.wronskian())
        }
        _ => return Err(Error::UnsupportedStepCount(spec.k())),
    };
    Ok(QuasiGaussian::gaussian(
        RatFunc::new(y, den)?,
        BigRational::new((-1).into(), 2.into()),
    ))
}

fn energy(nu: i64) -> BigRational {
    BigRational::from_integer((2 * nu + 1).into())
}

fn check_eigen(h: &DiffOp, psi: &QuasiGaussian, nu: i64) -> Result<()> {
    let e = Coeff::from_rational(energy(nu));
    if h.apply(psi) != psi.scale(&e) {
        return Err(Error::VerificationFailure(format!(
            "psi_{nu} is not an eigenfunction with energy {e}"
        )));
    }
    Ok(())
}

/// Levels organised by a ladder: every chain is followed for `depth` steps above its
/// base and every wavefunction is checked to be an exact eigenfunction.
///
/// Bases are the levels annihilated by the lowering operator; a chain stops at the
/// first level annihilated by the raising operator. Each raising step is checked to
/// land on the next level of the chain.
pub fn spectrum(
    spec: &ExtensionSpec,
    kind: LadderKind,
    depth: usize,
) -> Result<Vec<SpectrumEntry>> {
    let lad = ladder(kind, spec)?;
    spectrum_with(spec, &lad, depth)
}

pub fn spectrum_with(
    spec: &ExtensionSpec,
    lad: &Ladder,
    depth: usize,
) -> Result<Vec<SpectrumEntry>> {
    if spec.k() > 2 {
        return Err(Error::UnsupportedStepCount(spec.k()));
    }
    let step = lad.shift.to_integer();
    let step = i64::try_from(step).expect("small shift") / 2;
    let mut candidates = spec.extra_levels();
    candidates.extend(0..step);

    let mut entries: Vec<SpectrumEntry> = Vec::new();
    for &base in &candidates {
        let psi = wavefunction(spec, base)?;
        check_eigen(&lad.hamiltonian, &psi, base)?;
        if !lad.lower.apply(&psi).is_zero() {
            continue;
        }
        let mut members = vec![(base, psi)];
        let mut terminated = false;
        for _ in 0..=depth {
            let (nu, psi) = members.last().expect("nonempty");
            let up = lad.raise.apply(psi);
            if up.is_zero() {
                terminated = true;
                break;
            }
            if members.len() > depth {
                break;
            }
            let next = nu + step;
            let target = wavefunction(spec, next).map_err(|_| {
                Error::ConstructionMismatch(format!("raising psi_{nu} leaves the spectrum"))
            })?;
            if up.proportional(&target).is_none() {
                return Err(Error::ConstructionMismatch(format!(
                    "raising psi_{nu} does not give psi_{next}"
                )));
            }
            check_eigen(&lad.hamiltonian, &target, next)?;
            members.push((next, target));
        }
        let count = members.len();
        for (j, (nu, psi)) in members.into_iter().enumerate() {
            let role = match (terminated, count, j) {
                (true, 1, _) => Role::Singlet,
                (true, 2, 0) => Role::DoubletLow,
                (true, 2, _) => Role::DoubletHigh,
                (true, _, _) => Role::FiniteChain,
                (false, _, 0) => Role::ChainBase,
                (false, _, _) => Role::Chain,
            };
            entries.push(SpectrumEntry {
                nu,
                energy: energy(nu),
                annihilated_by_lower: j == 0 || lad.lower.apply(&psi).is_zero(),
                annihilated_by_raise: lad.raise.apply(&psi).is_zero(),
                wavefunction: psi,
                role,
            });
        }
    }
    entries.sort_by_key(|e| e.nu);
    Ok(entries)
}

/// Number of listed levels annihilated by the lowering and by the raising operator.
pub fn zero_mode_counts(entries: &[SpectrumEntry]) -> (usize, usize) {
    (
        entries.iter().filter(|e| e.annihilated_by_lower).count(),
        entries.iter().filter(|e| e.annihilated_by_raise).count(),
    )
}
