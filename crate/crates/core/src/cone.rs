//! Rational polyhedral cones.
//!
//! Cones are invariant under positive scaling, so every rational vector is
//! stored as its primitive integer representative. A cone `C` with lineality
//! space `L` is held in a canonical double form:
//!
//! * `rays`: primitive extreme rays of the pointed cone `C ∩ L^⊥`;
//! * `lineality`: the primitive reduced-echelon basis of `L`;
//! * `facets`: primitive extreme rays of `C^∨ ∩ span(C)`;
//! * `equations`: the primitive reduced-echelon basis of `span(C)^⊥`.
//!
//! Swapping the two halves gives the dual cone. Two cones are equal exactly
//! when their canonical forms are equal.
//!
//! Both conversions run the double description method with exact integer
//! arithmetic (`i128`, reduced to primitive vectors after every combination).
//! Overflow is checked and panics; inputs are desk-scale degree data.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};

type Vector = Vec<i128>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCone {
    ambient_dim: usize,
    rays: Vec<Vec<i64>>,
    lineality: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
}

impl RationalCone {
    /// The cone generated by `vectors` (zero vectors are ignored).
    pub fn from_generators<V: AsRef<[i64]>>(ambient_dim: usize, vectors: &[V]) -> Self {
        let gens: Vec<Vector> = vectors.iter().map(|v| widen(ambient_dim, v.as_ref())).collect();
        let (dual_lin, dual_rays) = h_to_v(ambient_dim, &gens, &[]);
        let (lin, rays) = h_to_v(ambient_dim, &dual_rays, &dual_lin);
        Self::assemble(ambient_dim, rays, lin, dual_rays, dual_lin)
    }

    /// The cone `{x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}`.
    pub fn from_inequalities<A: AsRef<[i64]>, E: AsRef<[i64]>>(
        ambient_dim: usize,
        inequalities: &[A],
        equations: &[E],
    ) -> Self {
        let ineqs: Vec<Vector> = inequalities.iter().map(|v| widen(ambient_dim, v.as_ref())).collect();
        let eqs: Vec<Vector> = equations.iter().map(|v| widen(ambient_dim, v.as_ref())).collect();
        Self::from_h(ambient_dim, &ineqs, &eqs)
    }

    fn from_h(ambient_dim: usize, ineqs: &[Vector], eqs: &[Vector]) -> Self {
        let (lin, rays) = h_to_v(ambient_dim, ineqs, eqs);
        let (dual_lin, dual_rays) = h_to_v(ambient_dim, &rays, &lin);
        Self::assemble(ambient_dim, rays, lin, dual_rays, dual_lin)
    }

    fn assemble(
        ambient_dim: usize,
        rays: Vec<Vector>,
        lineality: Vec<Vector>,
        facets: Vec<Vector>,
        equations: Vec<Vector>,
    ) -> Self {
        RationalCone {
            ambient_dim,
            rays: narrow_all(rays),
            lineality: narrow_all(lineality),
            facets: narrow_all(facets),
            equations: narrow_all(equations),
        }
    }

    /// The zero cone `{0}`.
    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_generators::<Vec<i64>>(ambient_dim, &[])
    }

    /// All of `Q^r`.
    pub fn whole_space(ambient_dim: usize) -> Self {
        Self::from_inequalities::<Vec<i64>, Vec<i64>>(ambient_dim, &[], &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Primitive extreme rays of the pointed part `C ∩ L^⊥`.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Canonical basis of the lineality space.
    pub fn lineality(&self) -> &[Vec<i64>] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Canonical inner facet normals.
    pub fn facet_normals(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// Canonical basis of the orthogonal complement of the span.
    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    /// A generating set: the rays together with `±` each lineality basis vector,
    /// sorted lexicographically.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out.sort();
        out
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// Pointed with exactly `dim` rays.
    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim()
    }

    pub fn dual(&self) -> RationalCone {
        RationalCone {
            ambient_dim: self.ambient_dim,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.ambient_dim
            && self.equations.iter().all(|e| dot64(e, v) == 0)
            && self.facets.iter().all(|f| dot64(f, v) >= 0)
    }

    pub fn relint_contains(&self, v: &[i64]) -> bool {
        v.len() == self.ambient_dim
            && self.equations.iter().all(|e| dot64(e, v) == 0)
            && self.facets.iter().all(|f| dot64(f, v) > 0)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subcone_of(&self, other: &RationalCone) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rays.iter().all(|r| other.contains(r))
            && self.lineality.iter().all(|l| {
                other.contains(l) && other.contains(&l.iter().map(|x| -x).collect::<Vec<_>>())
            })
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        assert_eq!(self.ambient_dim, other.ambient_dim, "intersect: ambient dimension mismatch");
        if self.is_subcone_of(other) {
            return self.clone();
        }
        if other.is_subcone_of(self) {
            return other.clone();
        }
        let ineqs: Vec<Vector> = self.facets.iter().chain(&other.facets).map(|v| wide(v)).collect();
        let eqs: Vec<Vector> = self.equations.iter().chain(&other.equations).map(|v| wide(v)).collect();
        Self::from_h(self.ambient_dim, &ineqs, &eqs)
    }

    /// Intersection with the hyperplane `<normal, x> = 0`.
    pub fn slice(&self, normal: &[i64]) -> RationalCone {
        let ineqs: Vec<Vector> = self.facets.iter().map(|v| wide(v)).collect();
        let mut eqs: Vec<Vector> = self.equations.iter().map(|v| wide(v)).collect();
        eqs.push(widen(self.ambient_dim, normal));
        Self::from_h(self.ambient_dim, &ineqs, &eqs)
    }

    /// Intersection with the half-space `<normal, x> >= 0`.
    pub fn halfspace(&self, normal: &[i64]) -> RationalCone {
        let mut ineqs: Vec<Vector> = self.facets.iter().map(|v| wide(v)).collect();
        ineqs.push(widen(self.ambient_dim, normal));
        let eqs: Vec<Vector> = self.equations.iter().map(|v| wide(v)).collect();
        Self::from_h(self.ambient_dim, &ineqs, &eqs)
    }

    pub fn is_face_of(&self, other: &RationalCone) -> bool {
        if !self.is_subcone_of(other) {
            return false;
        }
        // the smallest face of `other` containing `self` is spanned by the
        // lineality of `other` and its rays on every facet tight on `self`
        let gens = self.generators();
        let tight: Vec<&Vec<i64>> = other
            .facets
            .iter()
            .filter(|f| gens.iter().all(|g| dot64(f, g) == 0))
            .collect();
        let in_self = |v: &Vec<i64>| self.contains(v);
        other.lineality.iter().all(|l| in_self(l) && in_self(&l.iter().map(|x| -x).collect()))
            && other
                .rays
                .iter()
                .filter(|r| tight.iter().all(|f| dot64(f, r) == 0))
                .all(in_self)
    }

    /// The facets (faces of codimension one) of the cone.
    pub fn facets(&self) -> Vec<RationalCone> {
        self.facets.iter().map(|f| self.slice(f)).collect()
    }

    /// Sum of the rays plus the sum of the lineality basis. Lies in the
    /// relative interior of every nonzero cone.
    pub fn relative_interior_point(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::ZeroCone);
        }
        let mut p = vec![0i64; self.ambient_dim];
        for v in self.rays.iter().chain(&self.lineality) {
            for (acc, x) in p.iter_mut().zip(v) {
                *acc = acc.checked_add(*x).expect("relative interior point overflow");
            }
        }
        Ok(p)
    }

    /// Canonical order: ambient dimension, then dimension, then rays and
    /// lineality lexicographically.
    pub fn canonical_cmp(&self, other: &RationalCone) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.rays.cmp(&other.rays))
            .then_with(|| self.lineality.cmp(&other.lineality))
    }
}

impl PartialOrd for RationalCone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalCone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

/// A finite collection of cones meeting pairwise in common faces, closed under
/// taking faces, possibly with non-pointed members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiFan {
    pub cones: Vec<RationalCone>,
    pub support: RationalCone,
}

/// Which quasi-fan invariant failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiFanViolation {
    OutsideSupport(usize),
    MissingFace(usize),
    BadIntersection(usize, usize),
    SupportNotCovered,
}

impl QuasiFan {
    pub fn new(mut cones: Vec<RationalCone>, support: RationalCone) -> Self {
        cones.sort();
        cones.dedup();
        QuasiFan { cones, support }
    }

    /// Cones not properly contained in another member.
    pub fn maximal_cones(&self) -> Vec<&RationalCone> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d != *c && c.is_subcone_of(d)))
            .collect()
    }

    /// Checks closure under faces, pairwise face intersections, and that the
    /// members cover exactly the support.
    pub fn verify(&self) -> std::result::Result<(), QuasiFanViolation> {
        let members: HashSet<&RationalCone> = self.cones.iter().collect();
        for (i, c) in self.cones.iter().enumerate() {
            if !c.is_subcone_of(&self.support) {
                return Err(QuasiFanViolation::OutsideSupport(i));
            }
            if c.facets().iter().any(|f| !members.contains(f)) {
                return Err(QuasiFanViolation::MissingFace(i));
            }
        }
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                let (a, b) = (&self.cones[i], &self.cones[j]);
                let meet = a.intersect(b);
                if !meet.is_face_of(a) || !meet.is_face_of(b) {
                    return Err(QuasiFanViolation::BadIntersection(i, j));
                }
            }
        }
        if !self.covers_support() {
            return Err(QuasiFanViolation::SupportNotCovered);
        }
        Ok(())
    }

    // Members of full support dimension meet properly, so they cover the
    // support iff every facet of one of them that meets the relative interior
    // of the support is shared by exactly two of them.
    fn covers_support(&self) -> bool {
        let k = self.support.dim();
        let top: Vec<&RationalCone> = self.cones.iter().filter(|c| c.dim() == k).collect();
        if top.is_empty() {
            return false;
        }
        if k == 0 {
            return true;
        }
        let top_facets: Vec<Vec<RationalCone>> = top.iter().map(|c| c.facets()).collect();
        for facets in &top_facets {
            for facet in facets {
                let p = match facet.relative_interior_point() {
                    Ok(p) => p,
                    Err(_) => vec![0; facet.ambient_dim()],
                };
                if !self.support.relint_contains(&p) {
                    continue;
                }
                let sharing = top_facets.iter().filter(|fs| fs.contains(facet)).count();
                if sharing != 2 {
                    return false;
                }
            }
        }
        true
    }
}

fn dot64(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b)
        .fold(0i128, |acc, (&x, &y)| acc + i128::from(x) * i128::from(y))
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).fold(0i128, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .expect("cone arithmetic overflow")
    })
}

fn wide(v: &[i64]) -> Vector {
    v.iter().map(|&x| i128::from(x)).collect()
}

/// Lineality basis and rays of `{x : A x >= 0, E x = 0}` without the dual side.
pub(crate) fn generators_of<A: AsRef<[i64]>, E: AsRef<[i64]>>(
    dim: usize,
    inequalities: &[A],
    equations: &[E],
) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let ineqs: Vec<Vector> = inequalities.iter().map(|v| widen(dim, v.as_ref())).collect();
    let eqs: Vec<Vector> = equations.iter().map(|v| widen(dim, v.as_ref())).collect();
    let (lin, rays) = h_to_v(dim, &ineqs, &eqs);
    (narrow_all(lin), narrow_all(rays))
}

fn widen(dim: usize, v: &[i64]) -> Vector {
    assert_eq!(v.len(), dim, "vector of length {} in ambient dimension {dim}", v.len());
    wide(v)
}

fn narrow_all(vs: Vec<Vector>) -> Vec<Vec<i64>> {
    vs.into_iter()
        .map(|v| {
            v.into_iter()
                .map(|x| i64::try_from(x).expect("cone entry exceeds i64"))
                .collect()
        })
        .collect()
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn make_primitive(v: &mut Vector) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// `s * x - t * y`, made primitive.
fn combine(s: i128, x: &[i128], t: i128, y: &[i128]) -> Vector {
    let mut out: Vector = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| {
            s.checked_mul(a)
                .and_then(|p| t.checked_mul(b).and_then(|q| p.checked_sub(q)))
                .expect("cone arithmetic overflow")
        })
        .collect();
    make_primitive(&mut out);
    out
}

/// Reduced row echelon form with primitive rows and positive pivots; the
/// canonical basis of the row space.
fn echelon_basis(dim: usize, rows: &[Vector]) -> Vec<Vector> {
    let mut rows: Vec<Vector> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut rank = 0;
    for c in 0..dim {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        if rows[rank][c] < 0 {
            for x in rows[rank].iter_mut() {
                *x = -*x;
            }
        }
        make_primitive(&mut rows[rank]);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[c];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let t = row[c];
                *row = combine(pv, row, t, &pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    for r in rows.iter_mut() {
        make_primitive(r);
    }
    rows
}

/// Canonical basis of `{x : <row, x> = 0 for every row}`.
fn null_space(dim: usize, rows: &[Vector]) -> Vec<Vector> {
    let reduced = echelon_basis(dim, rows);
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("echelon rows are nonzero"))
        .collect();
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let scale = reduced.iter().zip(&pivots).fold(1i128, |l, (r, &p)| {
            let v = r[p];
            l / gcd(l, v) * v
        });
        let mut x = vec![0i128; dim];
        x[free] = scale;
        for (r, &p) in reduced.iter().zip(&pivots) {
            x[p] = -r[free] * (scale / r[p]);
        }
        make_primitive(&mut x);
        basis.push(x);
    }
    echelon_basis(dim, &basis)
}

/// Generators of `{x : <a, x> >= 0, <e, x> = 0}`: the canonical lineality
/// basis and the sorted primitive rays of the pointed part.
fn h_to_v(dim: usize, ineqs: &[Vector], eqs: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let mut all: Vec<Vector> = ineqs.to_vec();
    all.extend(eqs.iter().cloned());
    let lineality = null_space(dim, &all);

    let mut constraints: Vec<Vector> = Vec::with_capacity(2 * (eqs.len() + lineality.len()) + ineqs.len());
    for e in eqs.iter().chain(&lineality) {
        constraints.push(e.clone());
        constraints.push(e.iter().map(|x| -x).collect());
    }
    constraints.extend(ineqs.iter().cloned());

    let (residual_lineality, mut rays) = double_description(dim, &constraints);
    debug_assert!(residual_lineality.is_empty());
    rays.sort();
    rays.dedup();
    (lineality, rays)
}

#[derive(Clone)]
struct TrackedRay {
    v: Vector,
    zeros: BitSet,
}

#[derive(Clone, Default)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn full(n: usize) -> Self {
        let mut b = BitSet::default();
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        let (w, bit) = (i / 64, i % 64);
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << bit;
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.0.get(i).copied().unwrap_or(0) == 0)
    }
}

/// Incremental double description starting from the whole space. Returns the
/// remaining lineality vectors and the extreme rays (not canonicalized).
fn double_description(dim: usize, constraints: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let mut lineality: Vec<Vector> = (0..dim)
        .map(|i| {
            let mut e = vec![0i128; dim];
            e[i] = 1;
            e
        })
        .collect();
    let mut rays: Vec<TrackedRay> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        if a.iter().all(|&x| x == 0) {
            for r in rays.iter_mut() {
                r.zeros.set(k);
            }
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| dot(a, l) != 0) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s = dot(a, &l0);
            if s < 0 {
                l0.iter_mut().for_each(|x| *x = -*x);
                s = -s;
            }
            for l in lineality.iter_mut() {
                let t = dot(a, l);
                if t != 0 {
                    *l = combine(s, l, t, &l0);
                }
            }
            for r in rays.iter_mut() {
                let t = dot(a, &r.v);
                if t != 0 {
                    r.v = combine(s, &r.v, t, &l0);
                }
                r.zeros.set(k);
            }
            make_primitive(&mut l0);
            rays.push(TrackedRay {
                v: l0,
                zeros: BitSet::full(k),
            });
            continue;
        }

        let values: Vec<i128> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<TrackedRay> = Vec::with_capacity(rays.len());
        for (r, &t) in rays.iter().zip(&values) {
            if t >= 0 {
                let mut r = r.clone();
                if t == 0 {
                    r.zeros.set(k);
                }
                next.push(r);
            }
        }
        for (i, p) in rays.iter().enumerate().filter(|(i, _)| values[*i] > 0) {
            for (j, n) in rays.iter().enumerate().filter(|(j, _)| values[*j] < 0) {
                let common = p.zeros.and(&n.zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(m, r)| m == i || m == j || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let mut zeros = common;
                zeros.set(k);
                next.push(TrackedRay {
                    v: combine(values[i], &n.v, values[j], &p.v),
                    zeros,
                });
            }
        }
        rays = next;
    }
    (lineality, rays.into_iter().map(|r| r.v).collect())
}
