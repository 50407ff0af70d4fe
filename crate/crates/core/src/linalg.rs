//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators, so elimination
/// runs over the integers with exact divisions only.
pub fn det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant needs a square matrix");
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &lcm;
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();

    let mut sign_flip = false;
    let mut prev_pivot = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = value / &prev_pivot;
            }
            a[i][k] = BigInt::zero();
        }
        prev_pivot = a[k][k].clone();
    }
    let mut d = Rational::new(a[n - 1][n - 1].clone(), scale);
    if sign_flip {
        d = -d;
    }
    d
}

/// Submatrix on the given row and column index sets.
pub fn submatrix(
    rows: &[Vec<Rational>],
    row_idx: &[usize],
    col_idx: &[usize],
) -> Vec<Vec<Rational>> {
    row_idx
        .iter()
        .map(|&i| col_idx.iter().map(|&j| rows[i][j].clone()).collect())
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] != i + n - k) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// `vᵀ M v`.
pub fn quadratic_form(rows: &[Vec<Rational>], v: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (i, row) in rows.iter().enumerate() {
        if v[i].is_zero() {
            continue;
        }
        let mut dot = Rational::zero();
        for (j, entry) in row.iter().enumerate() {
            if !v[j].is_zero() {
                dot += entry * &v[j];
            }
        }
        total += &v[i] * dot;
    }
    total
}

/// First principal minor (index set, value) that is negative, if any.
pub fn first_negative_principal_minor(rows: &[Vec<Rational>]) -> Option<(Vec<usize>, Rational)> {
    let n = rows.len();
    (1..=n).find_map(|k| {
        combinations(n, k).into_iter().find_map(|idx| {
            let value = det(&submatrix(rows, &idx, &idx));
            value.is_negative().then_some((idx, value))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    // Laplace expansion along the first row; exponential, small matrices only.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return int(1);
        }
        let mut total = int(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn matches_cofactor_expansion() {
        let m = vec![
            vec![frac(1, 2), int(3), int(-1), int(0)],
            vec![int(2), frac(-5, 3), int(4), int(1)],
            vec![int(0), int(0), int(7), frac(2, 9)],
            vec![int(1), int(1), int(1), int(1)],
        ];
        assert_eq!(det(&m), cofactor_det(&m));
        // zero leading pivot forces a row swap
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(det(&swap), int(-1));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det(&singular), int(0));
        assert_eq!(det(&[]), int(1));
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn principal_minor_search() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(1)]];
        assert_eq!(
            first_negative_principal_minor(&m),
            Some((vec![0, 1], int(-3)))
        );
        let psd = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
        assert_eq!(first_negative_principal_minor(&psd), None);
        assert_eq!(quadratic_form(&m, &[int(1), int(-1)]), int(-2));
    }
}
