//! Exact integer-lattice arithmetic.
//!
//! Matrices carry arbitrary-precision entries. A [`Sublattice`] of `Z^r` is
//! stored by its column Hermite normal form, so two lattices are equal exactly
//! when their stored bases are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries. Panics if the length is wrong.
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "IntMatrix::new: wrong entry count");
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "IntMatrix::from_rows: ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Builds an `ambient x k` matrix whose columns are the given vectors.
    pub fn from_columns<C: AsRef<[i64]>>(ambient: usize, columns: &[C]) -> Self {
        let mut m = Self::zeros(ambient, columns.len());
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            assert_eq!(c.len(), ambient, "IntMatrix::from_columns: wrong column length");
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn from_big_columns(ambient: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(ambient, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), ambient, "IntMatrix::from_big_columns: wrong column length");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "IntMatrix::mul: dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "IntMatrix::mul_vec: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U * M * V = S` with `U`, `V` unimodular and `S` diagonal with
/// `d_1 | d_2 | ... | d_k`, all `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with both transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SnfDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero magnitude in the trailing block
        let Some((pi, pj)) = smallest_entry(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder survived: move the new smallest entry of row/col t to the pivot
                let (pi, pj) = smallest_in_cross(&s, t);
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // divisibility: the pivot must divide the whole trailing block
            let offending = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[(i, j)].is_multiple_of(&s[(t, t)]));
            match offending {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfDecomposition { u, s, v }
}

fn smallest_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut consider = |i: usize, j: usize| {
        let x = &s[(i, j)];
        if x.is_zero() {
            return;
        }
        let cur = &s[best];
        if cur.is_zero() || x.abs() < cur.abs() {
            best = (i, j);
        }
    };
    for i in t..s.rows() {
        consider(i, t);
    }
    for j in t..s.cols() {
        consider(t, j);
    }
    best
}

/// Column Hermite normal form of `m`: returns the nonzero columns of `m * V`
/// for a unimodular `V`, lower triangular with strictly increasing pivot rows,
/// positive pivots, and entries left of each pivot reduced into `[0, pivot)`.
pub fn column_hermite_form(m: &IntMatrix) -> IntMatrix {
    let rows = m.rows();
    let mut h = m.clone();
    let mut next = 0usize;
    for i in 0..rows {
        if next >= h.cols() {
            break;
        }
        // Euclid across columns next.. in row i
        loop {
            let mut best: Option<usize> = None;
            for j in next..h.cols() {
                if h[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| h[(i, j)].abs() < h[(i, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(next, b);
            let mut done = true;
            for j in next + 1..h.cols() {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = -h[(i, j)].div_floor(&h[(i, next)]);
                h.add_col_multiple(j, next, &q);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, next)].is_zero() {
            continue;
        }
        if h[(i, next)].is_negative() {
            h.negate_col(next);
        }
        let pivot = h[(i, next)].clone();
        for j in 0..next {
            let q = -h[(i, j)].div_floor(&pivot);
            h.add_col_multiple(j, next, &q);
        }
        next += 1;
    }
    let mut out = IntMatrix::zeros(rows, next);
    for i in 0..rows {
        for j in 0..next {
            out[(i, j)] = h[(i, j)].clone();
        }
    }
    out
}

/// Basis of the integer kernel `{x in Z^cols : m x = 0}`, as columns.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols()).map(|j| snf.v.column(j)).collect()
}

/// Some integer solution of `m x = b`, or `None` if there is none.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "solve_integer: dimension mismatch");
    let snf = smith_normal_form(m);
    let ub = snf.u.mul_vec(b);
    let diag = snf.diagonal();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, c) in ub.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ => {
                if !c.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Index of a sublattice in its ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn is_finite(&self) -> bool {
        matches!(self, LatticeIndex::Finite(_))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, LatticeIndex::Finite(n) if n.is_one())
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// A subgroup of `Z^r`, held in canonical column Hermite form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Sublattice {
    pub fn zero(ambient_rank: usize) -> Self {
        Sublattice {
            ambient_rank,
            basis: IntMatrix::zeros(ambient_rank, 0),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Sublattice {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    /// The group generated by `vectors`, each of length `ambient_rank`.
    pub fn from_generators<V: AsRef<[i64]>>(ambient_rank: usize, vectors: &[V]) -> Result<Self> {
        for v in vectors {
            let len = v.as_ref().len();
            if len != ambient_rank {
                return Err(Error::DimensionMismatch {
                    expected: ambient_rank,
                    found: len,
                });
            }
        }
        let m = IntMatrix::from_columns(ambient_rank, vectors);
        Ok(Self::from_generator_matrix(&m))
    }

    /// The group generated by the columns of `m`.
    pub fn from_generator_matrix(m: &IntMatrix) -> Self {
        Sublattice {
            ambient_rank: m.rows(),
            basis: column_hermite_form(m),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one column per basis vector.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn index(&self) -> LatticeIndex {
        if self.rank() < self.ambient_rank {
            return LatticeIndex::Infinite;
        }
        // full rank: the Hermite basis is square lower triangular
        let det = (0..self.rank()).fold(BigInt::one(), |acc, i| acc * &self.basis[(i, i)]);
        LatticeIndex::Finite(det)
    }

    pub fn has_finite_index(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains_big(&v)
    }

    pub fn contains_big(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        let mut residual = v.to_vec();
        for j in 0..self.rank() {
            let Some(p) = (0..self.ambient_rank).find(|&i| !self.basis[(i, j)].is_zero()) else {
                continue;
            };
            let (q, r) = residual[p].div_rem(&self.basis[(p, j)]);
            if !r.is_zero() {
                return false;
            }
            for (i, slot) in residual.iter_mut().enumerate().skip(p) {
                *slot -= &q * &self.basis[(i, j)];
            }
        }
        residual.iter().all(Zero::is_zero)
    }

    pub fn intersection(&self, other: &Sublattice) -> Result<Sublattice> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let r = self.ambient_rank;
        let (k1, k2) = (self.rank(), other.rank());
        if k1 == 0 || k2 == 0 {
            return Ok(Sublattice::zero(r));
        }
        // [B1 | -B2] (x; y) = 0  <=>  B1 x = B2 y
        let mut stacked = IntMatrix::zeros(r, k1 + k2);
        for i in 0..r {
            for j in 0..k1 {
                stacked[(i, j)] = self.basis[(i, j)].clone();
            }
            for j in 0..k2 {
                stacked[(i, k1 + j)] = -&other.basis[(i, j)];
            }
        }
        let common: Vec<Vec<BigInt>> = integer_kernel(&stacked)
            .into_iter()
            .map(|z| self.basis.mul_vec(&z[..k1]))
            .collect();
        Ok(Sublattice::from_generator_matrix(&IntMatrix::from_big_columns(
            r, &common,
        )))
    }

    pub fn is_sublattice_of(&self, other: &Sublattice) -> bool {
        self.basis
            .columns()
            .iter()
            .all(|c| other.contains_big(c))
    }

    /// Integer coefficients expressing `v` in the canonical basis.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<BigInt>> {
        let b: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        solve_integer(&self.basis, &b)
    }
}

impl fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sublattice(Z^{}, basis {:?})", self.ambient_rank, self.basis.columns())
    }
}

/// Whether `vectors` (exactly `r` of them, each in `Z^r`) form a basis of `Z^r`.
pub fn is_unimodular_basis<V: AsRef<[i64]>>(ambient_rank: usize, vectors: &[V]) -> Result<bool> {
    if vectors.len() != ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: ambient_rank,
            found: vectors.len(),
        });
    }
    for v in vectors {
        if v.as_ref().len() != ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: ambient_rank,
                found: v.as_ref().len(),
            });
        }
    }
    let det = IntMatrix::from_columns(ambient_rank, vectors).determinant();
    Ok(det.abs().is_one())
}
