use num_rational::BigRational;
use p4susy::diffop::Sign;
use p4susy::exactpoly::{Poly, RatFunc};
use p4susy::painleve4::{hierarchy_solution, supported_okamoto_indices, to_andrianov, Family};
use p4susy::susy::{
    extension_hamiltonian, kstep_potential, ladder, painleve_system, spectrum, zero_mode_counts,
    zero_modes, ExtensionSpec, LadderKind, Role,
};
use p4susy::Error;

fn spec(ms: &[i64]) -> ExtensionSpec {
    ExtensionSpec::new(ms.to_vec()).unwrap()
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

#[test]
fn one_step_potential_closed_form() {
    // x² + 8/(2x²+1) - 16/(2x²+1)² - 2
    let q = Poly::from_ints(&[1, 0, 2]);
    let a = RatFunc::new(Poly::from_ints(&[8]), q.clone()).unwrap();
    let b = RatFunc::new(Poly::from_ints(&[16]), &q * &q).unwrap();
    let expect = &(&(&RatFunc::from_poly(Poly::from_ints(&[-2, 0, 1])) + &a) - &b);
    assert_eq!(kstep_potential(&spec(&[2])).unwrap(), *expect);
}

#[test]
fn parity_rule() {
    assert!(matches!(
        ExtensionSpec::new(vec![2, 4]),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        ExtensionSpec::new(vec![1]),
        Err(Error::InvalidSpec(_))
    ));
    assert!(ExtensionSpec::new(vec![2, 3, 4]).is_ok());
}

#[test]
fn singlet_and_chain() {
    let e = spectrum(&spec(&[2]), LadderKind::B, 3).unwrap();
    assert_eq!(zero_mode_counts(&e), (2, 1));
    assert_eq!(e[0].nu, -3);
    assert_eq!(e[0].energy, int(-5));
    assert_eq!(e[0].role, Role::Singlet);
    assert_eq!(e[1].role, Role::ChainBase);
}

#[test]
fn three_chains() {
    let e = spectrum(&spec(&[2]), LadderKind::C, 2).unwrap();
    assert_eq!(zero_mode_counts(&e), (3, 0));
    let bases: Vec<(i64, BigRational)> = e
        .iter()
        .filter(|x| x.role == Role::ChainBase)
        .map(|x| (x.nu, x.energy.clone()))
        .collect();
    assert_eq!(bases, vec![(-3, int(-5)), (1, int(3)), (2, int(5))]);
}

#[test]
fn doublet_and_chain() {
    let e = spectrum(&spec(&[2, 3]), LadderKind::D, 3).unwrap();
    assert_eq!(zero_mode_counts(&e), (2, 1));
    let roles: Vec<(i64, Role)> = e.iter().take(3).map(|x| (x.nu, x.role)).collect();
    assert_eq!(
        roles,
        vec![
            (-4, Role::DoubletLow),
            (-3, Role::DoubletHigh),
            (0, Role::ChainBase)
        ]
    );
    assert_eq!(e[0].energy, int(-7));
    assert_eq!(e[1].energy, int(-5));
}

#[test]
fn wider_gap_gives_longer_ladders() {
    let l = ladder(LadderKind::D, &spec(&[2, 5])).unwrap();
    assert_eq!(l.shift, int(6));
    let h = extension_hamiltonian(&spec(&[2, 5])).unwrap();
    assert_eq!(l.hamiltonian, h);
}

#[test]
fn painleve_systems_for_tabulated_solutions() {
    // every rational solution with beta <= 0 and rational sqrt(-beta/2) gives an exact system
    let mut built = 0;
    for family in Family::ALL {
        let indices: Vec<(i64, i64)> = match family {
            Family::OkamotoI | Family::OkamotoII => supported_okamoto_indices(family),
            _ => (0..=2).flat_map(|m| (0..=2).map(move |n| (m, n))).collect(),
        };
        for (m, n) in indices {
            let s = hierarchy_solution(family, m, n).unwrap();
            if s.w.is_zero() {
                continue;
            }
            for sign in [Sign::Plus, Sign::Minus] {
                let Ok(p) = to_andrianov(&s.params.alpha, &s.params.beta, sign) else {
                    continue;
                };
                let sys = painleve_system(&s.structure, &p)
                    .unwrap_or_else(|e| panic!("{family} {m} {n}: {e}"));
                let z = zero_modes(&sys).unwrap();
                assert!(z.normalizable_count() <= 3, "{family} {m} {n}");
                built += 1;
            }
        }
    }
    assert!(built > 10, "{built}");
}
