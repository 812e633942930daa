//! Lookup against the three-family table of rational-solution parameters.

use num_rational::BigRational;

/// The three hierarchies of rational solutions, named by their leading behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableFamily {
    /// `-1/z`: `alpha = ±m`, `beta = -2(1+2n+m)^2`, listed for `m >= -2n`, `n <= -1`.
    InverseZ,
    /// `-2z`: `alpha = m`, `beta = -2(1+2n+m)^2`, listed for `m >= -n`, `n >= 0`.
    MinusTwoZ,
    /// `-2z/3`: `alpha = m`, `beta = (2/9)(1+6n-3m)^2`, all integers.
    MinusTwoThirdsZ,
}

impl TableFamily {
    pub fn number(self) -> u8 {
        match self {
            TableFamily::InverseZ => 1,
            TableFamily::MinusTwoZ => 2,
            TableFamily::MinusTwoThirdsZ => 3,
        }
    }

    /// The range annotation exactly as tabulated. The first family pairs `m >= -2n`
    /// with `n <= -1`; it is kept as written.
    pub fn listed_range(self) -> &'static str {
        match self {
            TableFamily::InverseZ => "m >= -2n, n <= -1",
            TableFamily::MinusTwoZ => "m >= -n, n >= 0",
            TableFamily::MinusTwoThirdsZ => "m, n any integers",
        }
    }

    fn in_range(self, m: i64, n: i64) -> bool {
        match self {
            TableFamily::InverseZ => m >= -2 * n && n <= -1,
            TableFamily::MinusTwoZ => m >= -n && n >= 0,
            TableFamily::MinusTwoThirdsZ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatch {
    pub family: TableFamily,
    pub m: i64,
    pub n: i64,
    /// `+1` or `-1` for the `alpha = ±m` choice of the first family, `+1` otherwise.
    pub alpha_sign: i8,
    /// Whether `(m, n)` lies inside the tabulated range.
    pub in_range: bool,
}

/// Index bound of the exhaustive scan.
pub const SCAN_BOUND: i64 = 12;

/// Every `(family, m, n)` with `|m|, |n| <= SCAN_BOUND` whose table formulas reproduce
/// `(alpha, beta)`.
pub fn classify_family(alpha: &BigRational, beta: &BigRational) -> Vec<TableMatch> {
    let int = |k: i64| BigRational::from_integer(k.into());
    let mut out = Vec::new();
    for m in -SCAN_BOUND..=SCAN_BOUND {
        for n in -SCAN_BOUND..=SCAN_BOUND {
            let b12 = int(-2 * (1 + 2 * n + m).pow(2));
            let b3 = BigRational::new(2.into(), 9.into()) * int((1 + 6 * n - 3 * m).pow(2));
            let mut push = |family: TableFamily, alpha_sign: i8| {
                out.push(TableMatch {
                    family,
                    m,
                    n,
                    alpha_sign,
                    in_range: family.in_range(m, n),
                })
            };
            if *beta == b12 {
                if *alpha == int(m) {
                    push(TableFamily::InverseZ, 1);
                }
                if m != 0 && *alpha == int(-m) {
                    push(TableFamily::InverseZ, -1);
                }
                if *alpha == int(m) {
                    push(TableFamily::MinusTwoZ, 1);
                }
            }
            if *beta == b3 && *alpha == int(m) {
                push(TableFamily::MinusTwoThirdsZ, 1);
            }
        }
    }
    out.sort_by_key(|t| (t.family, t.m, t.n, t.alpha_sign));
    out
}
