use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::diffop::{compose_all, DiffOp, Sign, Superpotential};
use crate::error::{Error, Result};
use crate::exactpoly::{pseudo_hermite_table, Coeff};

use super::chains::{state_adding_chain, state_adding_chain_ordered, state_deleting_chain};
use super::extension::{extension_hamiltonian, ExtensionSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderKind {
    /// `A a† A†` with oscillator ladders; one-step extensions.
    B,
    /// State-adding supercharge combined with the state-deleting chain; one-step.
    C,
    /// Both adding orders of a two-step extension joined by the `Â` chain.
    D,
}

impl LadderKind {
    pub fn letter(self) -> char {
        match self {
            LadderKind::B => 'b',
            LadderKind::C => 'c',
            LadderKind::D => 'd',
        }
    }

    pub fn steps(self) -> usize {
        match self {
            LadderKind::B | LadderKind::C => 1,
            LadderKind::D => 2,
        }
    }
}

impl fmt::Display for LadderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for LadderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(LadderKind::B),
            "c" => Ok(LadderKind::C),
            "d" => Ok(LadderKind::D),
            _ => Err(Error::InvalidSpec(format!("unknown ladder {s:?}"))),
        }
    }
}

/// Raising and lowering operators with `[H, raise] = shift · raise` and
/// `[H, lower] = -shift · lower`.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub kind: LadderKind,
    pub hamiltonian: DiffOp,
    pub raise: DiffOp,
    pub lower: DiffOp,
    pub shift: BigRational,
}

fn plus(w: &Superpotential) -> DiffOp {
    w.first_order(Sign::Plus)
}

fn minus(w: &Superpotential) -> DiffOp {
    w.first_order(Sign::Minus)
}

/// `x + 𝓗'_{m1+i-1}/𝓗_{m1+i-1} - 𝓗'_{m1+i}/𝓗_{m1+i}`.
pub fn hat_superpotential(m1: i64, i: i64) -> Superpotential {
    let table = pseudo_hermite_table((m1 + i) as usize);
    Superpotential::x_times(1)
        .with_log(1, &table[(m1 + i - 1) as usize])
        .with_log(-1, &table[(m1 + i) as usize])
}

/// Builds the ladder pair and checks both commutation relations exactly.
pub fn ladder(kind: LadderKind, spec: &ExtensionSpec) -> Result<Ladder> {
    if spec.k() != kind.steps() {
        return Err(Error::WrongStepCount {
            kind: kind.letter(),
            expected: kind.steps(),
            found: spec.k(),
        });
    }
    let h = extension_hamiltonian(spec)?;
    let ms = spec.ms();
    let (raise, lower, shift) = match kind {
        LadderKind::B => {
            let w = &state_adding_chain(spec)?.chain.superpotentials[0];
            let x = Superpotential::x_times(1);
            let raise = compose_all(&[plus(w), minus(&x), minus(w)]);
            let lower = compose_all(&[plus(w), plus(&x), minus(w)]);
            (raise, lower, 2)
        }
        LadderKind::C => {
            let m1 = ms[0];
            if m1 < 2 {
                return Err(Error::InvalidIndex(format!(
                    "ladder c needs m1 >= 2, got {m1}"
                )));
            }
            let w = &state_adding_chain(spec)?.chain.superpotentials[0];
            let bar = state_deleting_chain(m1)?;
            let mut r = vec![plus(w)];
            r.extend(bar.superpotentials.iter().map(minus));
            let mut l: Vec<DiffOp> = bar.superpotentials.iter().rev().map(plus).collect();
            l.push(minus(w));
            (compose_all(&r), compose_all(&l), 2 * m1 + 2)
        }
        LadderKind::D => {
            let (m1, m2) = (ms[0], ms[1]);
            let w2 = state_adding_chain_ordered(spec, &[m1, m2])?
                .chain
                .superpotentials[1]
                .clone();
            let wt2 = state_adding_chain_ordered(spec, &[m2, m1])?
                .chain
                .superpotentials[1]
                .clone();
            let hats: Vec<Superpotential> =
                (1..=m2 - m1).map(|i| hat_superpotential(m1, i)).collect();
            let mut r = vec![plus(&w2)];
            r.extend(hats.iter().map(minus));
            r.push(minus(&wt2));
            let mut l = vec![plus(&wt2)];
            l.extend(hats.iter().rev().map(plus));
            l.push(minus(&w2));
            (compose_all(&r), compose_all(&l), 2 * (m2 - m1))
        }
    };
    let shift_c = Coeff::from_int(shift);
    if DiffOp::commutator(&h, &raise) != raise.scale(&shift_c) {
        return Err(Error::ConstructionMismatch(format!(
            "[H, {kind}†] != {shift} {kind}† for {spec}"
        )));
    }
    if DiffOp::commutator(&h, &lower) != lower.scale(&-shift_c) {
        return Err(Error::ConstructionMismatch(format!(
            "[H, {kind}] != -{shift} {kind} for {spec}"
        )));
    }
    Ok(Ladder {
        kind,
        hamiltonian: h,
        raise,
        lower,
        shift: BigRational::from_integer(shift.into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_shifts() {
        let one = ExtensionSpec::new(vec![2]).unwrap();
        let b = ladder(LadderKind::B, &one).unwrap();
        assert_eq!((b.raise.order(), b.lower.order()), (3, 3));
        assert_eq!(b.shift, BigRational::from_integer(2.into()));
        let c = ladder(LadderKind::C, &one).unwrap();
        assert_eq!(
            (c.raise.order(), c.shift.clone()),
            (3, BigRational::from_integer(6.into()))
        );
        let two = ExtensionSpec::new(vec![2, 3]).unwrap();
        let d = ladder(LadderKind::D, &two).unwrap();
        assert_eq!(
            (d.raise.order(), d.shift.clone()),
            (3, BigRational::from_integer(2.into()))
        );
    }

    #[test]
    fn higher_order_variants() {
        let c = ladder(LadderKind::C, &ExtensionSpec::new(vec![4]).unwrap()).unwrap();
        assert_eq!(c.raise.order(), 5);
        let d = ladder(LadderKind::D, &ExtensionSpec::new(vec![2, 5]).unwrap()).unwrap();
        assert_eq!(d.raise.order(), 5);
        assert_eq!(d.shift, BigRational::from_integer(6.into()));
    }

    #[test]
    fn wrong_step_count() {
        let two = ExtensionSpec::new(vec![2, 3]).unwrap();
        assert_eq!(
            ladder(LadderKind::B, &two).unwrap_err(),
            Error::WrongStepCount {
                kind: 'b',
                expected: 1,
                found: 2
            }
        );
        let zero = ExtensionSpec::new(vec![0]).unwrap();
        assert!(matches!(
            ladder(LadderKind::C, &zero),
            Err(Error::InvalidIndex(_))
        ));
    }
}
