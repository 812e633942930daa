use crate::error::{Error, Result};
use crate::exactpoly::RatFunc;

use super::grid::{check_no_poles, GridSpec};

const MAX_SWEEPS: usize = 60;

/// Diagonal and off-diagonal of the three-point discretisation of `-d² + V`.
fn discretize(v: &RatFunc, grid: &GridSpec) -> (Vec<f64>, f64) {
    let h = grid.spacing();
    let k = 1.0 / (h * h);
    let diag = grid
        .abscissae()
        .iter()
        .map(|&x| 2.0 * k + v.eval_f64(x))
        .collect();
    (diag, -k)
}

/// All eigenvalues of a symmetric tridiagonal matrix by implicit QL with Wilkinson
/// shifts. `e[i]` couples rows `i` and `i + 1`; the last entry is ignored.
pub fn tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<Vec<f64>> {
    let n = d.len();
    if e.len() != n {
        return Err(Error::InvalidGrid(
            "off-diagonal length must equal diagonal length".into(),
        ));
    }
    if n == 0 {
        return Ok(d);
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::ConvergenceFailure);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Lowest `grid.count()` Dirichlet eigenvalues of `-d²/dx² + V` on the grid.
pub fn eigen_solve(v: &RatFunc, grid: &GridSpec) -> Result<Vec<f64>> {
    if !check_no_poles(v, grid.half_width())? {
        return Err(Error::PoleInDomain);
    }
    let (d, off) = discretize(v, grid);
    let e = vec![off; d.len()];
    let mut all = tridiagonal_eigenvalues(d, e)?;
    all.truncate(grid.count());
    Ok(all)
}

/// Grid eigenvector for an eigenvalue estimate, by inverse iteration with the
/// tridiagonal solver; normalised to unit Euclidean length.
pub fn eigenvector(v: &RatFunc, grid: &GridSpec, energy: f64) -> Result<Vec<f64>> {
    if !check_no_poles(v, grid.half_width())? {
        return Err(Error::PoleInDomain);
    }
    let (d, off) = discretize(v, grid);
    let n = d.len();
    // tiny offset keeps the shifted matrix invertible
    let shift = energy + 1e-10 * (1.0 + energy.abs());
    let diag: Vec<f64> = d.iter().map(|x| x - shift).collect();
    let mut y = vec![1.0; n];
    for (i, yi) in y.iter_mut().enumerate() {
        // asymmetric start so both parities are represented
        *yi += 1e-3 * i as f64 / n as f64;
    }
    for _ in 0..3 {
        y = thomas(&diag, off, &y);
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ConvergenceFailure);
        }
        y.iter_mut().for_each(|a| *a /= norm);
    }
    Ok(y)
}

/// Solves a tridiagonal system with constant off-diagonal `off`.
fn thomas(diag: &[f64], off: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut beta = diag[0];
    c[0] = off / beta;
    d[0] = rhs[0] / beta;
    for i in 1..n {
        beta = diag[i] - off * c[i - 1];
        c[i] = off / beta;
        d[i] = (rhs[i] - off * d[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    d
}

/// `+1` for an even grid vector, `-1` for an odd one, `0` otherwise.
pub fn parity(v: &[f64]) -> i8 {
    let n = v.len();
    let scale = v.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let tol = 1e-6 * scale;
    if (0..n).all(|i| (v[i] - v[n - 1 - i]).abs() <= tol) {
        1
    } else if (0..n).all(|i| (v[i] + v[n - 1 - i]).abs() <= tol) {
        -1
    } else {
        0
    }
}
