use num_rational::BigRational;

use crate::exactpoly::{pseudo_hermite_table, wronskian, Coeff, Poly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteIdentity {
    /// `𝓗'_n = 2n 𝓗_{n-1}`
    Derivative,
    /// `𝓗'_n + 2x 𝓗_n = 𝓗_{n+1}`
    Recurrence,
    /// `𝓗''_n + 2x 𝓗'_n - 2n 𝓗_n = 0`
    Differential,
    /// `g'_{2n} + 2x g_{2n} = 2 𝓗_n 𝓗_{n+1}`
    WronskianFirst,
    /// `g''_{2n} + 2x g'_{2n} = 4 𝓗'_n 𝓗_{n+1}`
    WronskianSecond,
}

impl HermiteIdentity {
    pub fn label(self) -> &'static str {
        match self {
            HermiteIdentity::Derivative => "H'_n = 2n H_{n-1}",
            HermiteIdentity::Recurrence => "H'_n + 2x H_n = H_{n+1}",
            HermiteIdentity::Differential => "H''_n + 2x H'_n - 2n H_n = 0",
            HermiteIdentity::WronskianFirst => "g'_2n + 2x g_2n = 2 H_n H_{n+1}",
            HermiteIdentity::WronskianSecond => "g''_2n + 2x g'_2n = 4 H'_n H_{n+1}",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: HermiteIdentity,
    pub n: usize,
}

fn two_x() -> Poly {
    Poly::from_ints(&[0, 2])
}

fn int(k: usize) -> Coeff {
    Coeff::from_int(k as i64)
}

/// `W(𝓗_n, 𝓗_{n+1})` from a table holding at least `n + 2` entries.
pub fn g2n_from(table: &[Poly], n: usize) -> Poly {
    wronskian(&[table[n].clone(), table[n + 1].clone()]).expect("two entries")
}

/// Checks the pseudo-Hermite identities on a caller-supplied table, which must
/// contain `𝓗_0 ..= 𝓗_{n_max + 1}`. The first three are checked for every
/// `n ≤ n_max` (the first from `n = 1`), the two Wronskian ones for even `n`.
pub fn hermite_identities_on(table: &[Poly], n_max: usize) -> Result<(), IdentityFailure> {
    assert!(table.len() >= n_max + 2, "table too short");
    let fail = |identity, n| Err(IdentityFailure { identity, n });
    for n in 0..=n_max {
        let h = &table[n];
        let dh = h.derive();
        if n >= 1 && dh != table[n - 1].scale(&int(2 * n)) {
            return fail(HermiteIdentity::Derivative, n);
        }
        if &dh + &(&two_x() * h) != table[n + 1] {
            return fail(HermiteIdentity::Recurrence, n);
        }
        if !(&(&dh.derive() + &(&two_x() * &dh)) - &h.scale(&int(2 * n))).is_zero() {
            return fail(HermiteIdentity::Differential, n);
        }
        if n % 2 == 0 {
            let g = g2n_from(table, n);
            let dg = g.derive();
            if &dg + &(&two_x() * &g) != (h * &table[n + 1]).scale(&int(2)) {
                return fail(HermiteIdentity::WronskianFirst, n);
            }
            if &dg.derive() + &(&two_x() * &dg) != (&dh * &table[n + 1]).scale(&int(4)) {
                return fail(HermiteIdentity::WronskianSecond, n);
            }
        }
    }
    Ok(())
}

/// The pseudo-Hermite identities for all `n ≤ n_max`.
pub fn pseudo_hermite_identities(n_max: usize) -> Result<(), IdentityFailure> {
    hermite_identities_on(&pseudo_hermite_table(n_max + 1), n_max)
}

fn log_d(p: &Poly) -> RatFunc {
    RatFunc::log_derivative(p).expect("nonzero polynomial")
}

/// `g''/g + 2x g'/g - 𝓗''_n/𝓗_n - 2x 𝓗'_n/𝓗_n - 2 (𝓗'_{n+1}/𝓗_{n+1})(g'/g)
///  + 2 (𝓗'_n/𝓗_n)(𝓗'_{n+1}/𝓗_{n+1}) + constant` with `g = W(𝓗_n, 𝓗_{n+1})`.
/// The combination vanishes for `constant = -2n`.
pub fn two_step_relation_residual(n: usize, constant: &BigRational) -> RatFunc {
    let table = pseudo_hermite_table(n + 1);
    let (h, h1) = (&table[n], &table[n + 1]);
    let g = g2n_from(&table, n);
    let x2 = RatFunc::from_poly(two_x());
    let lg = log_d(&g);
    let lh = log_d(h);
    let lh1 = log_d(h1);
    let ddg = RatFunc::new(g.derive().derive(), g.clone()).expect("nonzero");
    let ddh = RatFunc::new(h.derive().derive(), h.clone()).expect("nonzero");
    let two = Coeff::from_int(2);
    let terms = [
        ddg,
        &x2 * &lg,
        -&ddh,
        -&(&x2 * &lh),
        -&(&lh1 * &lg).scale(&two),
        (&lh * &lh1).scale(&two),
        RatFunc::from_rational(constant.clone()),
    ];
    terms.iter().fold(RatFunc::zero(), |acc, t| &acc + t)
}

/// The two-step relation reduces to zero with exact rational-function arithmetic.
pub fn two_step_relation(n: usize) -> bool {
    let c = BigRational::from_integer((-2 * n as i64).into());
    two_step_relation_residual(n, &c).is_zero()
}

/// `(2x 𝓗_n + 2n 𝓗_{n-1}) / 𝓗_n`, for `n ≥ 1`.
pub fn one_step_w2_minus_w3(n: usize) -> RatFunc {
    let t = pseudo_hermite_table(n);
    let num = &(&two_x() * &t[n]) + &t[n - 1].scale(&int(2 * n));
    RatFunc::new(num, t[n].clone()).expect("nonzero")
}

/// `2 𝓗_n [𝓗²_{n+1} - (n+1) g_{2n}] / (𝓗_{n+1} g_{2n})`.
pub fn two_step_w2_minus_w3(n: usize) -> RatFunc {
    let t = pseudo_hermite_table(n + 1);
    let g = g2n_from(&t, n);
    let inner = &(&t[n + 1] * &t[n + 1]) - &g.scale(&int(n + 1));
    let num = (&t[n] * &inner).scale(&int(2));
    RatFunc::new(num, &t[n + 1] * &g).expect("nonzero")
}

/// `2 𝓗_n {2x 𝓗_n 𝓗_{n+1} + 2[n(n+2) 𝓗_{n-1} 𝓗_{n+1} - (n+1)² 𝓗_n²]} / (𝓗_{n+1} g_{2n})`,
/// for `n ≥ 1`.
pub fn two_step_w2_minus_w3_expanded(n: usize) -> RatFunc {
    let t = pseudo_hermite_table(n + 1);
    let g = g2n_from(&t, n);
    let bracket = &(&t[n - 1] * &t[n + 1]).scale(&int(n * (n + 2)))
        - &(&t[n] * &t[n]).scale(&int((n + 1) * (n + 1)));
    let inner = &(&(&two_x() * &t[n]) * &t[n + 1]) + &bracket.scale(&int(2));
    let num = (&t[n] * &inner).scale(&int(2));
    RatFunc::new(num, &t[n + 1] * &g).expect("nonzero")
}
