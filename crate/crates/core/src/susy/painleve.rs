use num_rational::BigRational;

use crate::diffop::{compose_all, DiffOp, QuasiGaussian, Sign, Superpotential};
use crate::error::{Error, Result};
use crate::exactpoly::{Coeff, Poly, RatFunc};
use crate::painleve4::AndrianovParams;

/// Hamiltonians `H_{1,2} = -d² + x² ∓ g' + g² + 2xg - 1` with their first- and
/// second-order supercharges and third-order ladders.
#[derive(Clone, Debug)]
pub struct PainleveSystem {
    pub g: RatFunc,
    pub g_structure: Superpotential,
    pub params: AndrianovParams,
    /// `-g/2 + g'/(2g) - c/(2g)`.
    pub w1: RatFunc,
    /// `-g/2 - g'/(2g) + c/(2g)`.
    pub w2: RatFunc,
    /// `-g - x`.
    pub w3: RatFunc,
    /// Structured forms; `None` when the partial-fraction split does not reduce to
    /// logarithmic derivatives.
    pub w1_structure: Option<Superpotential>,
    pub w2_structure: Option<Superpotential>,
    pub w3_structure: Superpotential,
    pub q_plus: DiffOp,
    pub q_minus: DiffOp,
    pub m_plus: DiffOp,
    pub m_minus: DiffOp,
    pub h1: DiffOp,
    pub h2: DiffOp,
    pub a_plus: DiffOp,
    pub a_minus: DiffOp,
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::VerificationFailure(what.to_string()))
    }
}

/// Splits `W1 = -g/2 + g'/(2g) - c/(2g)` into logarithmic derivatives. Zeros of `g`
/// are separated by the value of `g'` there (`±c` for a solution) and poles by the
/// factors of `g`'s own structure.
fn split_w1(g: &Superpotential, w1: &RatFunc, c: &BigRational) -> Option<Superpotential> {
    let gr = g.realize();
    let n = gr.num().clone();
    let mut basis: Vec<Poly> = g.terms().iter().map(|t| t.factor.clone()).collect();
    basis.push(gr.den().clone());
    if !n.is_constant() {
        let gp_minus_c = &gr.derive() - &RatFunc::from_rational(c.clone());
        basis.push(Poly::gcd(&n, gp_minus_c.num()));
        basis.push(n);
    }
    Superpotential::from_ratfunc(w1, &basis).ok()
}

/// Assembles the system for `g` given in structured form and checks every
/// intertwining and ladder relation exactly.
pub fn painleve_system(g: &Superpotential, params: &AndrianovParams) -> Result<PainleveSystem> {
    let gr = g.realize();
    if gr.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let half = Coeff::from_ratio(1, 2);
    let c = Coeff::from_rational(params.c.clone());
    let log_g = gr.derive().checked_div(&gr)?;
    let c_over_g = RatFunc::constant(c).checked_div(&gr)?;
    let w1 = (&(&log_g - &c_over_g) - &gr).scale(&half);
    let w2 = (&(&c_over_g - &log_g) - &gr).scale(&half);
    let w3_structure = &(-g) - &Superpotential::x_times(1);
    let w3 = w3_structure.realize();
    let w1_structure = split_w1(g, &w1, &params.c);
    let w2_structure = w1_structure.as_ref().map(|s| &(-g) - s);

    let op = |w: &RatFunc, s: Sign| DiffOp::first_order(w, s);
    let q_plus = op(&w3, Sign::Plus);
    let q_minus = op(&w3, Sign::Minus);
    let m_plus = op(&w1, Sign::Plus).compose(&op(&w2, Sign::Plus));
    let m_minus = op(&w2, Sign::Minus).compose(&op(&w1, Sign::Minus));
    let h1 = q_plus.compose(&q_minus);
    let h2 = q_minus.compose(&q_plus).shifted(&Coeff::from_int(-2));
    let a_plus = q_plus.compose(&m_minus);
    let a_minus = m_plus.compose(&q_minus);

    let h2_plus_2 = h2.shifted(&Coeff::from_int(2));
    check(
        h1.compose(&q_plus) == q_plus.compose(&h2_plus_2),
        "H1 q+ != q+ (H2 + 2)",
    )?;
    check(
        q_minus.compose(&h1) == h2_plus_2.compose(&q_minus),
        "q- H1 != (H2 + 2) q-",
    )?;
    check(h1.compose(&m_plus) == m_plus.compose(&h2), "H1 M+ != M+ H2")?;
    check(
        m_minus.compose(&h1) == h2.compose(&m_minus),
        "M- H1 != H2 M-",
    )?;
    let two = Coeff::from_int(2);
    check(
        DiffOp::commutator(&h1, &a_plus) == a_plus.scale(&two),
        "[H1, a+] != 2 a+",
    )?;
    check(
        DiffOp::commutator(&h1, &a_minus) == a_minus.scale(&-two),
        "[H1, a-] != -2 a-",
    )?;

    Ok(PainleveSystem {
        g: gr,
        g_structure: g.clone(),
        params: params.clone(),
        w1,
        w2,
        w3,
        w1_structure,
        w2_structure,
        w3_structure,
        q_plus,
        q_minus,
        m_plus,
        m_minus,
        h1,
        h2,
        a_plus,
        a_minus,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModeName {
    Psi00,
    Psi0Plus,
    Psi0Minus,
    Psi1,
    Psi2,
    Psi3,
}

impl ModeName {
    pub fn label(self) -> &'static str {
        match self {
            ModeName::Psi00 => "psi0_0",
            ModeName::Psi0Plus => "psi0_plus",
            ModeName::Psi0Minus => "psi0_minus",
            ModeName::Psi1 => "psi_1",
            ModeName::Psi2 => "psi_2",
            ModeName::Psi3 => "psi_3",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ZeroMode {
    pub name: ModeName,
    pub energy: BigRational,
    /// `None` when the exponent has no closed form (non-integer logarithmic weight).
    pub wavefunction: Option<QuasiGaussian>,
    pub normalizable: Option<bool>,
}

/// Zero modes of `a-` (`lower`) and `a+` (`upper`).
#[derive(Clone, Debug)]
pub struct ZeroModes {
    pub lower: [ZeroMode; 3],
    pub upper: [ZeroMode; 3],
}

impl ZeroModes {
    pub fn all(&self) -> impl Iterator<Item = &ZeroMode> {
        self.lower.iter().chain(self.upper.iter())
    }

    pub fn get(&self, name: ModeName) -> &ZeroMode {
        self.all()
            .find(|m| m.name == name)
            .expect("all six modes present")
    }

    pub fn normalizable_count(&self) -> usize {
        self.all().filter(|m| m.normalizable == Some(true)).count()
    }
}

fn integral(w: Option<&Superpotential>, sign: Sign) -> Option<QuasiGaussian> {
    w.and_then(|w| w.exp_integral(sign).ok())
}

/// Builds the six zero modes with their energies and checks each one exactly:
/// `a∓ ψ = 0` and `H1 ψ = E ψ`.
pub fn zero_modes(sys: &PainleveSystem) -> Result<ZeroModes> {
    let p = &sys.params;
    let hc = p.half_c();
    let two = BigRational::from_integer(2.into());
    let c = RatFunc::from_rational(p.c.clone());
    let e_plus = &p.alpha_bar + &two + &hc;
    let e_minus = &p.alpha_bar + &two - &hc;
    let w21 = &sys.w2 - &sys.w3; // W2 - W3
    let s12 = &sys.w1 + &sys.w2; // W1 + W2 = -g
    let w1s = sys.w1_structure.as_ref();
    let w2s = sys.w2_structure.as_ref();
    let w3s = Some(&sys.w3_structure);

    let mode = |name, energy: BigRational, psi: Option<QuasiGaussian>| ZeroMode {
        name,
        energy,
        wavefunction: psi,
        normalizable: None,
    };
    let lower = [
        mode(
            ModeName::Psi00,
            BigRational::from_integer(0.into()),
            integral(w3s, Sign::Plus),
        ),
        mode(
            ModeName::Psi0Plus,
            e_plus.clone(),
            integral(w2s, Sign::Minus).map(|e| e.times(&w21)),
        ),
        mode(
            ModeName::Psi0Minus,
            e_minus,
            integral(w1s, Sign::Minus).map(|e| e.times(&(&c + &(&w21 * &s12)))),
        ),
    ];
    let upper = [
        mode(
            ModeName::Psi1,
            &p.alpha_bar - &hc,
            integral(w1s, Sign::Plus),
        ),
        mode(
            ModeName::Psi2,
            &p.alpha_bar + &hc,
            integral(w2s, Sign::Plus).map(|e| e.times(&s12)),
        ),
        mode(
            ModeName::Psi3,
            -two,
            integral(w3s, Sign::Minus)
                .map(|e| e.times(&(&RatFunc::from_rational(e_plus.clone()) + &(&s12 * &w21)))),
        ),
    ];
    let mut out = ZeroModes { lower, upper };
    for (modes, ladder) in [
        (&mut out.lower, &sys.a_minus),
        (&mut out.upper, &sys.a_plus),
    ] {
        for m in modes.iter_mut() {
            let Some(psi) = &m.wavefunction else { continue };
            if !ladder.apply(psi).is_zero() {
                return Err(Error::VerificationFailure(format!(
                    "{} is not annihilated",
                    m.name.label()
                )));
            }
            let e = Coeff::from_rational(m.energy.clone());
            if sys.h1.apply(psi) != psi.scale(&e) {
                return Err(Error::VerificationFailure(format!(
                    "{} does not have energy {}",
                    m.name.label(),
                    m.energy
                )));
            }
            m.normalizable = Some(psi.is_normalizable()?);
        }
    }
    Ok(out)
}

/// `H1` written directly from `g`: `-d² + x² - g' + g² + 2xg - 1`.
pub fn h1_from_g(g: &RatFunc) -> DiffOp {
    let x = RatFunc::x();
    let v = &(&(&(&(&x * &x) - &g.derive()) + &(g * g)) + &(&x * g).scale(&Coeff::from_int(2)))
        - &RatFunc::one();
    DiffOp::schrodinger(&v)
}

/// `-d² + x² + g' + g² + 2xg - 1`.
pub fn h2_from_g(g: &RatFunc) -> DiffOp {
    let x = RatFunc::x();
    let v = &(&(&(&(&x * &x) + &g.derive()) + &(g * g)) + &(&x * g).scale(&Coeff::from_int(2)))
        - &RatFunc::one();
    DiffOp::schrodinger(&v)
}

/// Composes `±d/dx + w` factors in the written order.
pub fn factor_product(factors: &[(&RatFunc, Sign)]) -> DiffOp {
    let ops: Vec<DiffOp> = factors
        .iter()
        .map(|(w, s)| DiffOp::first_order(w, *s))
        .collect();
    compose_all(&ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::painleve4::{hierarchy_solution, to_andrianov, Family};

    fn system(family: Family, m: i64, n: i64, sign: Sign) -> PainleveSystem {
        let s = hierarchy_solution(family, m, n).unwrap();
        let p = to_andrianov(&s.params.alpha, &s.params.beta, sign).unwrap();
        painleve_system(&s.structure, &p).unwrap()
    }

    #[test]
    fn one_step_superpotentials() {
        let sys = system(Family::HermiteII, 0, 2, Sign::Plus);
        assert_eq!(sys.w1, sys.w3);
        assert_eq!(sys.w2, RatFunc::x());
        assert_eq!(sys.h1, h1_from_g(&sys.g));
        assert_eq!(sys.h2, h2_from_g(&sys.g));
    }

    #[test]
    fn one_step_energies() {
        let sys = system(Family::HermiteII, 0, 2, Sign::Plus);
        let z = zero_modes(&sys).unwrap();
        let int = |k: i64| BigRational::from_integer(k.into());
        assert_eq!(z.get(ModeName::Psi00).energy, int(0));
        assert_eq!(z.get(ModeName::Psi0Plus).energy, int(6));
        assert_eq!(z.get(ModeName::Psi1).energy, int(0));
        assert_eq!(z.get(ModeName::Psi3).energy, int(-2));
        assert!(z.all().all(|m| m.wavefunction.is_some()));
    }

    #[test]
    fn okamoto_energies() {
        let sys = system(Family::OkamotoII, 1, 0, Sign::Minus);
        let z = zero_modes(&sys).unwrap();
        assert_eq!(
            z.get(ModeName::Psi0Plus).energy,
            BigRational::new(8.into(), 3.into())
        );
        assert_eq!(
            z.get(ModeName::Psi0Minus).energy,
            BigRational::new(10.into(), 3.into())
        );
    }

    #[test]
    fn wrong_parameters_are_rejected() {
        let s = hierarchy_solution(Family::HermiteII, 0, 2).unwrap();
        let wrong = to_andrianov(
            &s.params.alpha,
            &BigRational::from_integer((-2).into()),
            Sign::Plus,
        );
        // beta = -2 gives c = 2 instead of 4
        let p = wrong.unwrap();
        assert!(matches!(
            painleve_system(&s.structure, &p),
            Err(Error::VerificationFailure(_))
        ));
    }
}
