//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use p4susy::diffop::{DiffOp, Sign};
use p4susy::exactpoly::{
    generalized_hermite, pseudo_hermite_table, real_root_count, wronskian, Coeff, HermiteBasis,
    Poly, RatFunc, RootInterval,
};
use p4susy::numlab::{eigen_solve, GridSpec};
use p4susy::painleve4::{
    hierarchy_solution, p4_cleared_residual, p4_residual, supported_okamoto_indices, to_andrianov,
    Family,
};
use p4susy::susy::{
    kstep_potential, painleve_system, spectrum, wavefunction, zero_mode_counts, ExtensionSpec,
    LadderKind,
};
use p4susy::verify::{
    check_intertwining, hermite_identities_on, pseudo_hermite_identities, scenario,
    shift_equivalence, two_step_relation, two_step_relation_residual, EquivalenceReport, Scenario,
};

const EIGEN_TOL: f64 = 1e-3;
const GRID_L: f64 = 8.0;
const GRID_N: usize = 1500;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report_ok(r: &EquivalenceReport) -> Result<(), String> {
    ensure(r.passed, || {
        let modes: Vec<_> = r
            .mode_matches
            .iter()
            .filter(|m| !m.held())
            .map(|m| format!("{}<->{}", m.painleve, m.extension))
            .collect();
        format!(
            "{} n={}: failed {:?} {:?}",
            r.scenario,
            r.n,
            r.failed_checks(),
            modes
        )
    })?;
    ensure(
        r.mode_matches.len() == 3 && r.mode_matches.iter().all(|m| m.held()),
        || format!("{} n={}: expected three held mode matches", r.scenario, r.n),
    )
}

fn residuals() -> Outcome {
    let mut cases = 0;
    for family in [Family::HermiteI, Family::HermiteII] {
        for m in 0..=6 {
            for n in 0..=6 {
                let s = hierarchy_solution(family, m, n).map_err(|e| e.to_string())?;
                let zero = if s.w.is_zero() {
                    p4_cleared_residual(&s.w, &s.params.alpha, &s.params.beta).is_zero()
                } else {
                    p4_residual(&s.w, &s.params.alpha, &s.params.beta)
                        .map_err(|e| e.to_string())?
                        .is_zero()
                };
                ensure(zero, || {
                    format!("{family} m={m} n={n} has a nonzero residual")
                })?;
                cases += 1;
            }
        }
    }
    for family in [Family::OkamotoI, Family::OkamotoII] {
        for (m, n) in supported_okamoto_indices(family) {
            let s = hierarchy_solution(family, m, n).map_err(|e| e.to_string())?;
            let r =
                p4_residual(&s.w, &s.params.alpha, &s.params.beta).map_err(|e| e.to_string())?;
            ensure(r.is_zero(), || {
                format!("{family} m={m} n={n} has a nonzero residual")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} residuals vanish exactly"))
}

fn one_step_singlet() -> Outcome {
    for n in [2, 4, 6] {
        let r = scenario(Scenario::OneStepSinglet, n).map_err(|e| e.to_string())?;
        report_ok(&r)?;
        ensure(r.shift == Some(int(2 * n + 1)), || {
            format!("n={n}: shift {:?}", r.shift)
        })?;
        ensure(r.scale == int(1), || format!("n={n}: scale {}", r.scale))?;
        ensure(r.ladder_scalar.as_deref() == Some("1"), || {
            format!("n={n}: a+ = {:?} b†", r.ladder_scalar)
        })?;
    }
    Ok("n=2,4,6: H1 = H(2) + 2n + 1, a± = b†/b, 3 mode matches each".into())
}

fn three_chains() -> Outcome {
    let r = scenario(Scenario::OneStepThreeChains, 2).map_err(|e| e.to_string())?;
    report_ok(&r)?;
    ensure(r.scale == rat(1, 3), || format!("scale {}", r.scale))?;
    ensure(r.shift == Some(int(5)), || format!("shift {:?}", r.shift))?;
    ensure(r.ladder_scalar_sq == Some(rat(1, 27)), || {
        format!("sigma^2 {:?}", r.ladder_scalar_sq)
    })?;
    Ok(format!(
        "scale 1/3, shift 5, sigma = {} (sigma^2 = 1/27), 3 mode matches",
        r.ladder_scalar.unwrap_or_default()
    ))
}

fn two_step_doublet() -> Outcome {
    for n in [2, 4] {
        let r = scenario(Scenario::TwoStepDoublet, n).map_err(|e| e.to_string())?;
        report_ok(&r)?;
        ensure(r.shift == Some(int(2 * n + 3)), || {
            format!("n={n}: shift {:?}", r.shift)
        })?;
        ensure(two_step_relation(n as usize), || {
            format!("n={n}: relation does not vanish")
        })?;
        for name in [
            "W2 - W3 = 2 H_n [H_{n+1}^2 - (n+1) g_2n] / (H_{n+1} g_2n)",
            "W1 = Wtilde(2)",
        ] {
            ensure(r.checks.iter().any(|c| c.name == name && c.passed), || {
                format!("n={n}: check '{name}' missing or failed")
            })?;
        }
    }
    Ok(
        "n=2,4: H1 = H(2) + 2n + 3, W1 = Wtilde(2) via the two-step relation, W2 - W3 closed form"
            .into(),
    )
}

fn identities() -> Outcome {
    pseudo_hermite_identities(20)
        .map_err(|f| format!("{} fails at n={}", f.identity.label(), f.n))?;
    Ok("five pseudo-Hermite identities hold coefficientwise for n <= 20".into())
}

fn lowest(entries: &[p4susy::susy::SpectrumEntry], k: usize) -> Vec<BigRational> {
    let mut e: Vec<BigRational> = entries.iter().map(|x| x.energy.clone()).collect();
    e.sort();
    e.truncate(k);
    e
}

fn spectra() -> Outcome {
    let grid = GridSpec::new(GRID_L, GRID_N, 5).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (ms, kind, expect) in [
        (vec![2], LadderKind::B, [-5, 1, 3, 5, 7]),
        (vec![2, 3], LadderKind::D, [-7, -5, 1, 3, 5]),
    ] {
        let spec = ExtensionSpec::new(ms.clone()).map_err(|e| e.to_string())?;
        let entries = spectrum(&spec, kind, 4).map_err(|e| e.to_string())?;
        let exact = lowest(&entries, 5);
        let want: Vec<BigRational> = expect.iter().map(|&k| int(k)).collect();
        ensure(exact == want, || format!("{ms:?}: exact levels {exact:?}"))?;
        let v = kstep_potential(&spec).map_err(|e| e.to_string())?;
        let numeric = eigen_solve(&v, &grid).map_err(|e| e.to_string())?;
        for (x, e) in numeric.iter().zip(&exact) {
            let d = (x - e.to_f64().unwrap()).abs();
            worst = worst.max(d);
            ensure(d < EIGEN_TOL, || {
                format!("{ms:?}: numeric {x} vs exact {e}")
            })?;
        }
    }
    Ok(format!(
        "[2]: -5,1,3,5,7; [2,3]: -7,-5,1,3,5; max |numeric - exact| = {worst:.2e} < {EIGEN_TOL:e} (L={GRID_L}, N={GRID_N})"
    ))
}

fn zero_mode_patterns() -> Outcome {
    let mut parts = Vec::new();
    for (ms, kind, expect) in [
        (vec![2], LadderKind::B, (2, 1)),
        (vec![2], LadderKind::C, (3, 0)),
        (vec![2, 3], LadderKind::D, (2, 1)),
    ] {
        let spec = ExtensionSpec::new(ms.clone()).map_err(|e| e.to_string())?;
        let entries = spectrum(&spec, kind, 3).map_err(|e| e.to_string())?;
        let counts = zero_mode_counts(&entries);
        ensure(counts == expect, || {
            format!("({kind},{ms:?}): counts {counts:?}")
        })?;
        parts.push(format!("({kind},{ms:?}) {}/{}", counts.0, counts.1));
    }
    Ok(parts.join(", "))
}

fn coeff_fn() -> impl Strategy<Value = RatFunc> {
    (
        prop::collection::vec(-3i64..=3, 0..3),
        prop::collection::vec(-3i64..=3, 1..3),
    )
        .prop_filter_map("nonzero denominator", |(n, d)| {
            RatFunc::new(Poly::from_ints(&n), Poly::from_ints(&d)).ok()
        })
}

fn operator() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(coeff_fn(), 1..=3).prop_map(DiffOp::new)
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| Poly::from_ints(&c))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn fault_injections() -> Result<usize, String> {
    let mut caught = 0;
    let mut expect_fail = |what: &str, failed: bool| {
        if failed {
            caught += 1;
            Ok(())
        } else {
            Err(format!("fault not detected: {what}"))
        }
    };
    // sign flip on the constant term of the two-step relation
    expect_fail(
        "two-step relation with +2n",
        !two_step_relation_residual(2, &int(4)).is_zero(),
    )?;
    // corrupted pseudo-Hermite table
    let mut t = pseudo_hermite_table(6);
    t[4] = t[4].scale(&Coeff::from_int(2));
    expect_fail("corrupted H_4", hermite_identities_on(&t, 5).is_err())?;
    // residual of a perturbed solution
    let s = hierarchy_solution(Family::HermiteII, 0, 2).map_err(|e| e.to_string())?;
    let bent = &s.w + &RatFunc::from_int(1);
    expect_fail(
        "perturbed P_IV solution",
        !p4_cleared_residual(&bent, &s.params.alpha, &s.params.beta).is_zero(),
    )?;
    // intertwining with the shift omitted
    let b = p4susy::painleve4::to_andrianov(&s.params.alpha, &s.params.beta, Sign::Plus)
        .map_err(|e| e.to_string())?;
    let sys = painleve_system(&s.structure, &b).map_err(|e| e.to_string())?;
    expect_fail(
        "q+ intertwining without shift",
        !check_intertwining(&sys.q_plus, &sys.h1, &sys.h2, &int(0)),
    )?;
    // wrong kinetic scale
    let h = p4susy::susy::extension_hamiltonian(&ExtensionSpec::new(vec![2]).unwrap())
        .map_err(|e| e.to_string())?;
    expect_fail(
        "shift with wrong scale",
        shift_equivalence(&sys.h1, &h, &rat(1, 3)).is_err(),
    )?;
    // wrong sign of c for the one-step solution
    let minus =
        to_andrianov(&s.params.alpha, &s.params.beta, Sign::Minus).map_err(|e| e.to_string())?;
    let wrong_sys = painleve_system(&s.structure, &minus);
    let mismatch = match wrong_sys {
        Err(_) => true,
        Ok(w) => w.w2 != RatFunc::x(),
    };
    expect_fail("one-step superpotentials with c = -2n", mismatch)?;
    // mismatched zero modes
    let spec = ExtensionSpec::new(vec![2]).unwrap();
    let a = wavefunction(&spec, -3).map_err(|e| e.to_string())?;
    let b = wavefunction(&spec, 0).map_err(|e| e.to_string())?;
    expect_fail("psi_-3 vs psi_0", a.proportional(&b).is_none())?;
    // parity rule and singular potentials
    expect_fail("extension [2,4]", ExtensionSpec::new(vec![2, 4]).is_err())?;
    // bases in reversed roles must not be proportional
    let g = generalized_hermite(2, 3, HermiteBasis::Standard).unwrap();
    let h = generalized_hermite(3, 3, HermiteBasis::Standard).unwrap();
    expect_fail("H_{2,3} vs H_{3,3}", g.proportional(&h).is_none())?;
    Ok(caught)
}

fn properties() -> Outcome {
    let mut r = runner(200);
    r.run(&(operator(), operator(), operator()), |(a, b, c)| {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        let j = &(&DiffOp::commutator(&a, &DiffOp::commutator(&b, &c))
            + &DiffOp::commutator(&b, &DiffOp::commutator(&c, &a)))
            + &DiffOp::commutator(&c, &DiffOp::commutator(&a, &b));
        prop_assert!(j.is_zero());
        Ok(())
    })
    .map_err(|e| format!("operator algebra: {e}"))?;
    let mut r = runner(200);
    r.run(&(small_poly(), small_poly(), small_poly()), |(f, g, h)| {
        let w = wronskian(&[f.clone(), g.clone(), h.clone()]).unwrap();
        let s = wronskian(&[g, f, h]).unwrap();
        prop_assert!((&w + &s).is_zero());
        Ok(())
    })
    .map_err(|e| format!("wronskian antisymmetry: {e}"))?;
    for m in 1..=6 {
        for n in 1..=6 {
            let a = generalized_hermite(m, n, HermiteBasis::Standard).map_err(|e| e.to_string())?;
            let b = generalized_hermite(m, n, HermiteBasis::Pseudo).map_err(|e| e.to_string())?;
            ensure(a.degree() == Some((m * n) as usize), || {
                format!("deg H_{{{m},{n}}}")
            })?;
            ensure(a.proportional(&b).is_some(), || {
                format!("bases differ at m={m} n={n}")
            })?;
        }
    }
    for n in (0..=20).step_by(2) {
        let spec = ExtensionSpec::new(vec![n]).map_err(|e| e.to_string())?;
        let roots = real_root_count(&spec.wronskian(), &RootInterval::AllReals)
            .map_err(|e| e.to_string())?;
        ensure(roots == 0, || format!("H_{n} has {roots} real roots"))?;
    }
    let caught = fault_injections()?;
    Ok(format!(
        "200 associativity/Jacobi cases, 200 Wronskian swaps, 36 basis pairs, 11 Sturm certificates, {caught} faults caught"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "P_IV residual suite", Duration::from_secs(60), residuals),
        (
            2,
            "one-step singlet equivalence",
            Duration::from_secs(10),
            one_step_singlet,
        ),
        (
            3,
            "three-chain equivalence",
            Duration::from_secs(10),
            three_chains,
        ),
        (
            4,
            "two-step doublet equivalence",
            Duration::from_secs(30),
            two_step_doublet,
        ),
        (
            5,
            "pseudo-Hermite identities",
            Duration::from_secs(10),
            identities,
        ),
        (6, "spectrum reproduction", Duration::from_secs(30), spectra),
        (
            7,
            "zero-mode patterns",
            Duration::from_secs(10),
            zero_mode_patterns,
        ),
        (8, "property suites", Duration::from_secs(120), properties),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let over = took > budget;
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over time budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} [{id}] {name}: {detail} ({:.2}s, budget {}s)",
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
