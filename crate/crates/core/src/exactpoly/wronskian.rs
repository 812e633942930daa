use super::poly::Poly;
use crate::error::{Error, Result};

/// Wronskian determinant `det[f_j^{(i)}]` of a sequence of polynomials.
///
/// Up to 3x3 the determinant is expanded directly; larger matrices go through
/// fraction-free Bareiss elimination, where every division is exact.
pub fn wronskian(fs: &[Poly]) -> Result<Poly> {
    if fs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = fs.len();
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(k);
    rows.push(fs.to_vec());
    for i in 1..k {
        let next = rows[i - 1].iter().map(Poly::derive).collect();
        rows.push(next);
    }
    Ok(determinant(rows))
}

pub(crate) fn determinant(m: Vec<Vec<Poly>>) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let minor = |a: usize, b: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a]);
            let t0 = &m[0][0] * &minor(1, 2);
            let t1 = &m[0][1] * &minor(0, 2);
            let t2 = &m[0][2] * &minor(0, 1);
            &(&t0 - &t1) + &t2
        }
        _ => bareiss(m),
    }
}

fn bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
