use num_rational::BigRational;
use p4susy::exactpoly::{
    generalized_hermite, generalized_hermite_fast, hermite, pseudo_hermite, pseudo_hermite_table,
    real_root_count, wronskian, Coeff, HermiteBasis, Poly, RatFunc, RootInterval,
};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wronskian_is_antisymmetric(f in small_poly(), g in small_poly(), h in small_poly()) {
        let w = wronskian(&[f.clone(), g.clone(), h.clone()]).unwrap();
        let swapped = wronskian(&[g.clone(), f.clone(), h.clone()]).unwrap();
        prop_assert_eq!(&w + &swapped, Poly::zero());
        let w2 = wronskian(&[f.clone(), g.clone()]).unwrap();
        prop_assert_eq!(&w2 + &wronskian(&[g, f]).unwrap(), Poly::zero());
    }

    #[test]
    fn wronskian_scales_with_a_common_factor(f in small_poly(), g in small_poly(), u in nonzero_poly()) {
        // W(u f, u g) = u² W(f, g)
        let lhs = wronskian(&[&u * &f, &u * &g]).unwrap();
        let rhs = &(&u * &u) * &wronskian(&[f, g]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn quotient_rule(a in ratfunc(), b in ratfunc()) {
        let lhs = (&a * &b).derive();
        let rhs = &(&a.derive() * &b) + &(&a * &b.derive());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_identity(a in small_poly(), b in nonzero_poly()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = Poly::gcd(&(&a * &c), &(&b * &c));
        prop_assert!((&a * &c).exact_div(&g).is_some());
        prop_assert!((&b * &c).exact_div(&g).is_some());
        prop_assert!(g.exact_div(&c.monic()).is_some());
    }
}

#[test]
fn small_hermite_values() {
    assert_eq!(hermite(3).unwrap(), Poly::from_ints(&[0, -12, 0, 8]));
    assert_eq!(pseudo_hermite(3).unwrap(), Poly::from_ints(&[0, 12, 0, 8]));
    assert!(hermite(-1).is_err());
}

#[test]
fn generalized_hermite_bases_agree() {
    for m in 1..=6 {
        for n in 1..=6 {
            let a = generalized_hermite(m, n, HermiteBasis::Standard).unwrap();
            let b = generalized_hermite(m, n, HermiteBasis::Pseudo).unwrap();
            assert_eq!(a.degree(), Some((m * n) as usize), "m={m} n={n}");
            let q = a.exact_div(&b).expect("divisible");
            assert!(q.is_constant() && !q.is_zero(), "m={m} n={n}");
            let fast = generalized_hermite_fast(m, n).unwrap();
            assert!(fast.proportional(&a).is_some(), "m={m} n={n}");
        }
    }
}

#[test]
fn pseudo_hermite_sturm_certificates() {
    let table = pseudo_hermite_table(21);
    for (n, p) in table.iter().enumerate() {
        let roots = real_root_count(p, &RootInterval::AllReals).unwrap();
        // even degree: nodeless; odd degree: only the root at the origin
        assert_eq!(roots, n % 2, "n={n}");
    }
}

#[test]
fn seed_wronskians_are_nodeless() {
    let t = pseudo_hermite_table(11);
    for n in (0..=10).step_by(2) {
        let g = wronskian(&[t[n].clone(), t[n + 1].clone()]).unwrap();
        assert_eq!(real_root_count(&g, &RootInterval::AllReals), Ok(0), "n={n}");
    }
}

#[test]
fn quadratic_field_arithmetic() {
    let three = BigRational::from_integer(3.into());
    let s = Coeff::sqrt_of(&three).unwrap();
    assert_eq!(s.square(), Coeff::from_int(3));
    let inv = (&s * &Coeff::from_int(3)).inv().unwrap();
    assert_eq!(
        inv.square().as_rational(),
        Some(&BigRational::new(1.into(), 27.into()))
    );
}
