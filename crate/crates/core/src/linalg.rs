//! Exact rank over the integers by fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of a dense integer matrix, by Bareiss elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..width {
        if r == height {
            break;
        }
        let Some(pivot) = (r..height).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..height {
            for j in col + 1..width {
                let v = (&a[r][col] * &a[i][j] - &a[i][col] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

/// Rank of a matrix given as sparse rows `(column, value)`.
pub fn sparse_rank(rows: &[Vec<(usize, BigInt)>], width: usize) -> usize {
    let dense: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let mut d = vec![BigInt::zero(); width];
            for (j, v) in row {
                d[*j] += v;
            }
            d
        })
        .collect();
    rank(&dense)
}
