//! Integer points of `{a in Z^n : sum_i a_i * columns[i] = target, lower <= a <= upper}`.
//!
//! Depth-first over coordinates with per-row interval pruning: after fixing
//! a prefix, every row of the residual must stay inside the range the
//! remaining coordinates can still reach. The first coordinate is split
//! across workers; results come back in lexicographic order.

use crate::cone::generators_of;
use crate::par::*;

/// Integer points of `{a : sum_i a_i * columns[i] = target, a_i >= 0 unless free[i]}`.
///
/// Exact bounds come from the vertices of the polyhedron, read off the rays
/// of its homogenization `{(a, t) : sum_i a_i * columns[i] = t * target, t >= 0, ...}`.
/// An unbounded polyhedron is cut to `[-b, b]` on free coordinates and `[0, b]`
/// elsewhere, and the flag comes back false.
pub(crate) fn polyhedron_points(
    columns: &[Vec<i64>],
    target: &[i64],
    free: &[bool],
    exponent_box: u32,
) -> (Vec<Vec<i64>>, bool) {
    let n = columns.len();
    let equations: Vec<Vec<i64>> = (0..target.len())
        .map(|k| {
            let mut row: Vec<i64> = columns.iter().map(|c| c[k]).collect();
            row.push(-target[k]);
            row
        })
        .collect();
    let mut inequalities: Vec<Vec<i64>> = (0..n).filter(|&i| !free[i]).map(|i| unit(n + 1, i)).collect();
    inequalities.push(unit(n + 1, n));
    let (lineality, rays) = generators_of(n + 1, &inequalities, &equations);

    let vertices: Vec<&Vec<i64>> = rays.iter().filter(|v| v[n] > 0).collect();
    if vertices.is_empty() {
        return (Vec::new(), true);
    }
    let bounded = lineality.is_empty() && rays.iter().all(|v| v[n] > 0);
    let (lower, upper) = if bounded {
        let mut lower = vec![i64::MAX; n];
        let mut upper = vec![i64::MIN; n];
        for v in vertices {
            let t = v[n];
            for i in 0..n {
                lower[i] = lower[i].min(v[i].div_euclid(t));
                upper[i] = upper[i].max(-(-v[i]).div_euclid(t));
            }
        }
        (lower, upper)
    } else {
        let b = i64::from(exponent_box);
        ((0..n).map(|i| if free[i] { -b } else { 0 }).collect(), vec![b; n])
    };
    (box_solutions(columns, target, &lower, &upper), bounded)
}

fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

pub(crate) fn box_solutions(
    columns: &[Vec<i64>],
    target: &[i64],
    lower: &[i64],
    upper: &[i64],
) -> Vec<Vec<i64>> {
    let n = columns.len();
    assert!(n > 0 && lower.len() == n && upper.len() == n);
    if (0..n).any(|i| lower[i] > upper[i]) {
        return Vec::new();
    }
    let search = Search::new(columns, lower, upper);
    let residual: Vec<i128> = target.iter().map(|&x| i128::from(x)).collect();
    if !search.reachable(0, &residual) {
        return Vec::new();
    }
    let first: Vec<i64> = (lower[0]..=upper[0]).collect();
    let slices: Vec<Vec<Vec<i64>>> = first
        .into_par_iter()
        .map(|a0| {
            let mut out = Vec::new();
            let mut prefix = Vec::with_capacity(n);
            let mut residual = residual.clone();
            search.step(&mut residual, 0, a0, 1);
            if search.reachable(1, &residual) {
                prefix.push(a0);
                search.descend(&mut prefix, &mut residual, &mut out);
            }
            out
        })
        .collect();
    slices.into_iter().flatten().collect()
}

struct Search<'a> {
    columns: &'a [Vec<i64>],
    lower: &'a [i64],
    upper: &'a [i64],
    // reach[k][j]: interval of row j reachable by coordinates k..n
    reach: Vec<Vec<(i128, i128)>>,
}

impl<'a> Search<'a> {
    fn new(columns: &'a [Vec<i64>], lower: &'a [i64], upper: &'a [i64]) -> Self {
        let n = columns.len();
        let rows = columns[0].len();
        let mut reach = vec![vec![(0i128, 0i128); rows]; n + 1];
        for k in (0..n).rev() {
            for j in 0..rows {
                let c = i128::from(columns[k][j]);
                let (x, y) = (c * i128::from(lower[k]), c * i128::from(upper[k]));
                let (lo, hi) = reach[k + 1][j];
                reach[k][j] = (lo + x.min(y), hi + x.max(y));
            }
        }
        Search {
            columns,
            lower,
            upper,
            reach,
        }
    }

    fn reachable(&self, k: usize, residual: &[i128]) -> bool {
        residual
            .iter()
            .zip(&self.reach[k])
            .all(|(&r, &(lo, hi))| lo <= r && r <= hi)
    }

    /// residual -= sign * value * column[k]
    fn step(&self, residual: &mut [i128], k: usize, value: i64, sign: i128) {
        for (r, &c) in residual.iter_mut().zip(&self.columns[k]) {
            *r -= sign * i128::from(value) * i128::from(c);
        }
    }

    fn descend(&self, prefix: &mut Vec<i64>, residual: &mut Vec<i128>, out: &mut Vec<Vec<i64>>) {
        let k = prefix.len();
        if k == self.columns.len() {
            if residual.iter().all(|&r| r == 0) {
                out.push(prefix.clone());
            }
            return;
        }
        for v in self.lower[k]..=self.upper[k] {
            self.step(residual, k, v, 1);
            if self.reachable(k + 1, residual) {
                prefix.push(v);
                self.descend(prefix, residual, out);
                prefix.pop();
            }
            self.step(residual, k, v, -1);
        }
    }
}
