//! Dense integer matrices and fraction-free determinants.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = if n == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); k]; n];
    for i in 0..n {
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..k {
                if bl[j].is_zero() {
                    continue;
                }
                out[i][j] += &a[i][l] * &bl[j];
            }
        }
    }
    out
}

pub fn mat_pow(a: &IntMatrix, p: usize) -> IntMatrix {
    let mut out = identity(a.len());
    for _ in 0..p {
        out = mat_mul(&out, a);
    }
    out
}

pub fn trace(a: &IntMatrix) -> BigInt {
    a.iter()
        .enumerate()
        .map(|(i, row)| row[i].clone())
        .fold(BigInt::zero(), |acc, x| acc + x)
}

/// Fraction-free (Bareiss) determinant over Z[t]. Every division performed
/// is exact in Z[t]; an inexact one means the input was corrupted and is
/// reported as an internal consistency failure.
pub fn det_bareiss(mut m: Vec<Vec<IntPolynomial>>) -> Result<IntPolynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    for row in &m {
        if row.len() != n {
            return Err(Error::Inconsistency("determinant of a non-square matrix".into()));
        }
    }
    let mut sign = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match pivot {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(IntPolynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { -&det } else { det })
}

/// det(I - tA) for an integer matrix A.
pub fn det_i_minus_ta(a: &IntMatrix) -> Result<IntPolynomial> {
    let n = a.len();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let lin = IntPolynomial::monomial(-a[i][j].clone(), 1);
                    if i == j {
                        &lin + &IntPolynomial::one()
                    } else {
                        lin
                    }
                })
                .collect()
        })
        .collect();
    det_bareiss(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn powers_and_trace() {
        let a = big(&[&[0, 1], &[1, 0]]);
        assert_eq!(trace(&mat_pow(&a, 2)), BigInt::from(2));
        assert_eq!(trace(&mat_pow(&a, 3)), BigInt::from(0));
        assert_eq!(trace(&mat_pow(&a, 0)), BigInt::from(2));
    }

    #[test]
    fn bareiss_matches_hand_determinants() {
        // det(I - tA) for the 3-cycle permutation matrix is 1 - t^3
        let a = big(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(
            det_i_minus_ta(&a).unwrap(),
            IntPolynomial::from_i64(&[1, 0, 0, -1])
        );
        // one node, two loops: 1 - 2t
        let a = big(&[&[2]]);
        assert_eq!(det_i_minus_ta(&a).unwrap(), IntPolynomial::from_i64(&[1, -2]));
        // empty matrix: det is 1
        assert_eq!(det_i_minus_ta(&Vec::new()).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // det(I - tA) where A = [[0,1],[1,0]] needs no swap, but a singular
        // constant matrix exercises the zero-column path.
        let rows = vec![
            vec![IntPolynomial::zero(), IntPolynomial::zero()],
            vec![IntPolynomial::one(), IntPolynomial::one()],
        ];
        assert_eq!(det_bareiss(rows).unwrap(), IntPolynomial::zero());
        // swap path: [[0,1],[1,0]] has det -1
        let rows = vec![
            vec![IntPolynomial::zero(), IntPolynomial::one()],
            vec![IntPolynomial::one(), IntPolynomial::zero()],
        ];
        assert_eq!(det_bareiss(rows).unwrap(), IntPolynomial::from_i64(&[-1]));
    }
}
