#![allow(dead_code)]

use mhproj::RingSpec;
use proptest::prelude::*;

/// Rings with `1 <= r <= max_r`, `1 <= n <= max_n`, entries in `[-e, e]`,
/// no zero columns.
pub fn rings(max_r: usize, max_n: usize, e: i64) -> impl Strategy<Value = RingSpec> {
    (1..=max_r).prop_flat_map(move |r| {
        prop::collection::vec(
            prop::collection::vec(-e..=e, r).prop_filter("zero column", |c| c.iter().any(|&x| x != 0)),
            1..=max_n,
        )
        .prop_map(move |cols| RingSpec::new(r, cols, None).unwrap())
    })
}

/// Determinant by cofactor expansion.
pub fn laplace(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return i128::from(m[0][0]);
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * i128::from(m[0][j]) * laplace(&minor)
        })
        .sum()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect()
}

pub fn rank_of(vectors: &[Vec<i64>], dim: usize) -> usize {
    (1..=dim.min(vectors.len()))
        .rev()
        .find(|&k| {
            subsets(vectors.len(), k).iter().any(|rows| {
                subsets(dim, k).iter().any(|cols| {
                    let m: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| vectors[i][j]).collect()).collect();
                    laplace(&m) != 0
                })
            })
        })
        .unwrap_or(0)
}
