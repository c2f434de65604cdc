//! The torus side: orbit cones, GIT cones and the GIT quasi-fan, semistable
//! loci, and the comparison of `Proj_MH(A)` with the GIT limit `Y`.
//!
//! For a polynomial ring the orbit cone of a point is generated by the
//! degrees of the coordinates not vanishing there, so orbit cones are exactly
//! the cones `cone(deg_S)` over nonempty supports `S`, together with `{0}`
//! for the origin. The table keeps the nonempty supports; the origin only
//! enters through `lambda(0) = {0}`.
//!
//! Chambers are found by refining the weight cone along every facet
//! hyperplane of every orbit cone. On the relative interior of each face of
//! the resulting cells, membership in every orbit cone is constant, so one
//! sample point per face gives every distinct `lambda(m)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::cone::{QuasiFan, RationalCone};
use crate::enumerate::box_solutions;
use crate::error::{Error, Result};
use crate::par::*;
use crate::relevance::{is_relevant_support, SupportSet};
use crate::ring::{RingSpec, VeroneseDims};

/// Default search bound for the multiple of a ray realized by a variable.
pub const DEFAULT_RAY_MULTIPLE_BOUND: u32 = 24;

/// Orbit cone of every nonempty support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitConeTable {
    pub rank: usize,
    pub entries: BTreeMap<SupportSet, RationalCone>,
}

impl OrbitConeTable {
    pub fn get(&self, support: &SupportSet) -> Option<&RationalCone> {
        self.entries.get(support)
    }

    /// The distinct orbit cones in canonical order.
    pub fn distinct(&self) -> Vec<RationalCone> {
        let set: BTreeSet<&RationalCone> = self.entries.values().collect();
        set.into_iter().cloned().collect()
    }

    /// The inclusion-minimal supports whose orbit cone contains `m`. For
    /// `m = 0` this is the empty support alone: every point is semistable.
    pub fn semistable_supports(&self, m: &[i64]) -> Result<Vec<SupportSet>> {
        check_len(self.rank, m)?;
        if m.iter().all(|&x| x == 0) {
            return Ok(vec![SupportSet::empty()]);
        }
        let mut containing: Vec<SupportSet> = self
            .entries
            .iter()
            .filter(|(_, c)| c.contains(m))
            .map(|(s, _)| *s)
            .collect();
        containing.sort_by_key(|s| s.len());
        let mut minimal: Vec<SupportSet> = Vec::new();
        for s in containing {
            if !minimal.iter().any(|t| t.is_subset_of(&s)) {
                minimal.push(s);
            }
        }
        minimal.sort();
        Ok(minimal)
    }

    /// `lambda(m)`: the intersection of the orbit cones containing `m`. The
    /// origin of `Spec A` has orbit cone `{0}`, so `lambda(0) = {0}`.
    pub fn git_cone(&self, m: &[i64]) -> Result<RationalCone> {
        check_len(self.rank, m)?;
        if m.iter().all(|&x| x == 0) {
            return Ok(RationalCone::zero(self.rank));
        }
        let containing: BTreeSet<&RationalCone> = self.entries.values().filter(|c| c.contains(m)).collect();
        if containing.is_empty() {
            return Err(Error::OutsideWeightCone(m.to_vec()));
        }
        Ok(intersect_all(self.rank, containing.into_iter()))
    }
}

fn check_len(rank: usize, m: &[i64]) -> Result<()> {
    if m.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: m.len(),
        });
    }
    Ok(())
}

fn intersect_all<'a>(rank: usize, cones: impl Iterator<Item = &'a RationalCone>) -> RationalCone {
    let mut ineqs: Vec<Vec<i64>> = Vec::new();
    let mut eqs: Vec<Vec<i64>> = Vec::new();
    for c in cones {
        ineqs.extend(c.facet_normals().iter().cloned());
        eqs.extend(c.equations().iter().cloned());
    }
    ineqs.sort();
    ineqs.dedup();
    eqs.sort();
    eqs.dedup();
    RationalCone::from_inequalities(rank, &ineqs, &eqs)
}

pub fn orbit_cones(ring: &RingSpec) -> OrbitConeTable {
    let n = ring.n_variables();
    let masks: Vec<u32> = (1..(1u32 << n)).collect();
    let cones: Vec<RationalCone> = masks
        .par_iter()
        .map(|&m| RationalCone::from_generators(ring.rank(), &SupportSet::from_mask(m).degrees(ring)))
        .collect();
    OrbitConeTable {
        rank: ring.rank(),
        entries: masks.into_iter().map(SupportSet::from_mask).zip(cones).collect(),
    }
}

pub fn git_cone(ring: &RingSpec, m: &[i64]) -> Result<RationalCone> {
    check_len(ring.rank(), m)?;
    if !ring.weight_cone().contains(m) {
        return Err(Error::OutsideWeightCone(m.to_vec()));
    }
    orbit_cones(ring).git_cone(m)
}

pub fn semistable_supports(ring: &RingSpec, m: &[i64]) -> Result<Vec<SupportSet>> {
    orbit_cones(ring).semistable_supports(m)
}

/// The GIT quasi-fan: every distinct `lambda(m)`, supported on the weight cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GitFan {
    /// All cones of the quasi-fan, faces included, in canonical order.
    pub chambers: Vec<RationalCone>,
    pub support: RationalCone,
}

impl GitFan {
    pub fn maximal_chambers(&self) -> Vec<&RationalCone> {
        self.chambers
            .iter()
            .filter(|c| !self.chambers.iter().any(|d| d != *c && c.is_subcone_of(d)))
            .collect()
    }

    /// Chambers of the same dimension as the support.
    pub fn full_dimensional_chambers(&self) -> Vec<&RationalCone> {
        let k = self.support.dim();
        self.chambers.iter().filter(|c| c.dim() == k).collect()
    }
}

pub fn git_fan(ring: &RingSpec) -> Result<GitFan> {
    git_fan_from_table(ring, &orbit_cones(ring))
}

pub fn git_fan_from_table(ring: &RingSpec, table: &OrbitConeTable) -> Result<GitFan> {
    let support = ring.weight_cone();
    let orbit = table.distinct();

    let mut hyperplanes: BTreeSet<Vec<i64>> = BTreeSet::new();
    for c in &orbit {
        for h in c.facet_normals().iter().chain(c.equations()) {
            hyperplanes.insert(sign_normalized(h));
        }
    }

    let mut cells = vec![support.clone()];
    for h in &hyperplanes {
        let neg: Vec<i64> = h.iter().map(|x| -x).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            if cuts(&cell, h) {
                next.push(cell.halfspace(h));
                next.push(cell.halfspace(&neg));
                next.push(cell.slice(h));
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }

    let mut faces: BTreeSet<RationalCone> = BTreeSet::new();
    for cell in cells {
        collect_faces(cell, &mut faces);
    }
    let samples: Vec<Vec<i64>> = faces
        .iter()
        .map(|f| f.relative_interior_point().unwrap_or_else(|_| vec![0; ring.rank()]))
        .collect();
    let lambdas: Vec<Result<RationalCone>> = samples.par_iter().map(|m| table.git_cone(m)).collect();
    let mut chambers = lambdas.into_iter().collect::<Result<Vec<_>>>()?;
    chambers.sort();
    chambers.dedup();

    let fan = QuasiFan::new(chambers, support);
    fan.verify()
        .map_err(|v| Error::Internal(format!("GIT fan fails the quasi-fan check: {v:?}")))?;
    Ok(GitFan {
        chambers: fan.cones,
        support: fan.support,
    })
}

fn sign_normalized(h: &[i64]) -> Vec<i64> {
    match h.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => h.iter().map(|y| -y).collect(),
        _ => h.to_vec(),
    }
}

/// Whether the hyperplane `<h, x> = 0` meets the relative interior of `cell`
/// without containing it.
fn cuts(cell: &RationalCone, h: &[i64]) -> bool {
    let dots = cell
        .rays()
        .iter()
        .map(|g| dot(h, g))
        .chain(cell.lineality().iter().flat_map(|l| {
            let d = dot(h, l);
            [d, -d]
        }));
    let (mut pos, mut neg) = (false, false);
    for d in dots {
        pos |= d > 0;
        neg |= d < 0;
    }
    pos && neg
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum()
}

fn collect_faces(cone: RationalCone, out: &mut BTreeSet<RationalCone>) {
    if out.contains(&cone) {
        return;
    }
    let facets = cone.facets();
    out.insert(cone);
    for f in facets {
        collect_faces(f, out);
    }
}

/// A relevant support whose monomial degree `u` lies in the relative interior
/// of a full-dimensional chamber.
///
/// Each generating direction of the chamber is realized by the variable whose
/// degree is the smallest positive multiple of it; `u` is the sum of these
/// degrees. If some direction carries no variable degree (possible once
/// `r >= 3`), a monomial of degree `k * p` with relevant support is searched
/// for instead, `p` the chamber's relative interior point and
/// `k <= ray_multiple_bound`.
pub fn relevant_in_relint(
    ring: &RingSpec,
    chamber: &RationalCone,
    ray_multiple_bound: u32,
) -> Result<(SupportSet, Vec<i64>)> {
    if chamber.ambient_dim() != ring.rank() || !chamber.is_full_dimensional() {
        return Err(Error::ComparisonNotApplicable(
            "the chamber is not full-dimensional".into(),
        ));
    }
    let mut directions: Vec<Vec<i64>> = chamber.rays().to_vec();
    for l in chamber.lineality() {
        directions.push(l.clone());
        directions.push(l.iter().map(|x| -x).collect());
    }
    let mut support = SupportSet::empty();
    let mut u = vec![0i64; ring.rank()];
    let mut realized = true;
    for g in &directions {
        match smallest_multiple(ring, g) {
            Some((i, c)) if c <= i64::from(ray_multiple_bound) => {
                support = support.union(&SupportSet::from_indices(&[i]));
                for (acc, x) in u.iter_mut().zip(ring.degree(i)) {
                    *acc += x;
                }
            }
            Some(_) => {
                return Err(Error::RayMultipleBound {
                    ray: g.clone(),
                    bound: ray_multiple_bound,
                })
            }
            None => {
                realized = false;
                break;
            }
        }
    }
    if !realized {
        (support, u) = interior_monomial(ring, chamber, ray_multiple_bound)?;
    }
    if !chamber.relint_contains(&u) || !is_relevant_support(ring, &support)?.relevant {
        return Err(Error::Internal(format!(
            "witness {} of degree {u:?} does not certify the chamber",
            support.render(ring)
        )));
    }
    Ok((support, u))
}

/// The variable whose degree is `c * g` for the least positive integer `c`
/// (`g` primitive), ties going to the lower index.
fn smallest_multiple(ring: &RingSpec, g: &[i64]) -> Option<(usize, i64)> {
    let mut best: Option<(usize, i64)> = None;
    for (i, d) in ring.degrees().iter().enumerate() {
        let Some(k) = g.iter().position(|&x| x != 0) else {
            continue;
        };
        if d[k] % g[k] != 0 {
            continue;
        }
        let c = d[k] / g[k];
        if c > 0 && d.iter().zip(g).all(|(&a, &b)| a == c * b) && best.is_none_or(|(_, b)| c < b) {
            best = Some((i, c));
        }
    }
    best
}

fn interior_monomial(ring: &RingSpec, chamber: &RationalCone, bound: u32) -> Result<(SupportSet, Vec<i64>)> {
    let p = chamber.relative_interior_point()?;
    let n = ring.n_variables();
    for k in 1..=i64::from(bound) {
        let target: Vec<i64> = p.iter().map(|x| x * k).collect();
        let found = box_solutions(ring.degrees(), &target, &vec![0; n], &vec![i64::from(bound); n])
            .into_iter()
            .map(|a| {
                let idx: Vec<usize> = (0..n).filter(|&i| a[i] > 0).collect();
                SupportSet::from_indices(&idx)
            })
            .find(|s| !s.is_empty() && is_relevant_support(ring, s).map(|r| r.relevant).unwrap_or(false));
        if let Some(s) = found {
            return Ok((s, target));
        }
    }
    Err(Error::RayMultipleBound { ray: p, bound })
}

/// Birationality witness and the isomorphism criterion for `Y` versus
/// `Proj_MH(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub chamber: RationalCone,
    pub witness_degree: Vec<i64>,
    pub witness_support: SupportSet,
    /// The witness chart `D_+(x^S)` is a chart of both `Y_lambda` and
    /// `Proj_MH(A)`, so the two are birational.
    pub birational: bool,
    pub single_chamber: bool,
    pub simplicial: bool,
    pub ray_generated: bool,
    /// `None` when the weight cone is not pointed and Veronese pieces are
    /// infinite-dimensional.
    pub veronese_generated: Option<bool>,
    pub isomorphism_criterion: bool,
    /// The dual of the weight cone.
    pub sigma: RationalCone,
    pub veronese_dims: VeroneseDims,
}

pub fn comparison_report(
    ring: &RingSpec,
    veronese_bound: usize,
    ray_multiple_bound: u32,
    exponent_box: u32,
) -> Result<ComparisonReport> {
    let fan = git_fan(ring)?;
    let Some(chamber) = fan.full_dimensional_chambers().first().map(|c| (*c).clone()) else {
        return Err(Error::ComparisonNotApplicable(
            "no full-dimensional chamber: the degrees do not span the grading space".into(),
        ));
    };
    if !chamber.is_full_dimensional() {
        return Err(Error::ComparisonNotApplicable(
            "no full-dimensional chamber: the degrees do not span the grading space".into(),
        ));
    }
    let (witness_support, witness_degree) = relevant_in_relint(ring, &chamber, ray_multiple_bound)?;
    let omega = &fan.support;
    let single_chamber = fan.maximal_chambers().len() == 1;
    let simplicial = omega.is_simplicial();
    let ray_generated = omega.is_pointed()
        && ring
            .degrees()
            .iter()
            .all(|d| omega.rays().iter().any(|g| is_positive_multiple(d, g)));
    let veronese_generated = if omega.is_pointed() {
        Some(ring.veronese_generated_in_degree_one(&witness_degree, veronese_bound)?.generated)
    } else {
        None
    };
    let veronese_dims = ring.veronese_dims(&witness_degree, veronese_bound, exponent_box)?;
    Ok(ComparisonReport {
        isomorphism_criterion: single_chamber && simplicial && ray_generated && veronese_generated == Some(true),
        sigma: omega.dual(),
        chamber,
        witness_degree,
        witness_support,
        birational: true,
        single_chamber,
        simplicial,
        ray_generated,
        veronese_generated,
        veronese_dims,
    })
}

fn is_positive_multiple(d: &[i64], g: &[i64]) -> bool {
    let Some(k) = g.iter().position(|&x| x != 0) else {
        return false;
    };
    d[k] % g[k] == 0 && {
        let c = d[k] / g[k];
        c > 0 && d.iter().zip(g).all(|(&a, &b)| a == c * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::two_chart_ring;
    use crate::ring::DEFAULT_EXPONENT_BOX;

    fn s(idx: &[usize]) -> SupportSet {
        SupportSet::from_indices(idx)
    }

    fn cone(gens: &[&[i64]], dim: usize) -> RationalCone {
        RationalCone::from_generators(dim, gens)
    }

    fn plus_minus() -> RingSpec {
        RingSpec::new(1, vec![vec![1], vec![-1]], None).unwrap()
    }

    #[test]
    fn orbit_cone_examples() {
        let t = orbit_cones(&plus_minus());
        assert_eq!(
            t.distinct(),
            vec![RationalCone::whole_space(1), cone(&[&[-1]], 1), cone(&[&[1]], 1)]
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        let ring = two_chart_ring();
        let t = orbit_cones(&ring);
        assert_eq!(t.distinct().len(), 3);
        assert_eq!(t.get(&SupportSet::full(3)).unwrap(), &ring.weight_cone());
        assert_eq!(t.get(&s(&[1, 2])).unwrap(), &cone(&[&[1, 0]], 2));
        let single = RingSpec::new(2, vec![vec![2, 1]], None).unwrap();
        assert_eq!(orbit_cones(&single).distinct(), vec![cone(&[&[2, 1]], 2)]);
    }

    #[test]
    fn git_cone_examples() {
        let ring = plus_minus();
        assert_eq!(git_cone(&ring, &[1]).unwrap(), cone(&[&[1]], 1));
        assert_eq!(git_cone(&ring, &[0]).unwrap(), RationalCone::zero(1));
        let p2 = RingSpec::standard_projective(2).unwrap();
        assert_eq!(git_cone(&p2, &[3]).unwrap(), cone(&[&[1]], 1));
        assert_eq!(git_cone(&p2, &[-1]), Err(Error::OutsideWeightCone(vec![-1])));
    }

    #[test]
    fn fan_examples() {
        let fan = git_fan(&plus_minus()).unwrap();
        assert_eq!(
            fan.chambers,
            vec![RationalCone::zero(1), cone(&[&[-1]], 1), cone(&[&[1]], 1)]
        );
        let p2 = git_fan(&RingSpec::standard_projective(2).unwrap()).unwrap();
        assert_eq!(p2.chambers, vec![RationalCone::zero(1), cone(&[&[1]], 1)]);
        let two_chart = git_fan(&two_chart_ring()).unwrap();
        assert_eq!(two_chart.chambers.len(), 4);
        assert_eq!(two_chart.maximal_chambers(), vec![&cone(&[&[1, 0], &[0, 1]], 2)]);
    }

    #[test]
    fn fan_with_interior_degree_splits() {
        let ring = RingSpec::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap();
        let fan = git_fan(&ring).unwrap();
        let maximal: Vec<RationalCone> = fan.maximal_chambers().into_iter().cloned().collect();
        assert_eq!(
            maximal,
            vec![cone(&[&[0, 1], &[1, 1]], 2), cone(&[&[1, 0], &[1, 1]], 2)]
        );
        assert_eq!(fan.chambers.len(), 6);
    }

    #[test]
    fn fan_with_lineality() {
        let ring = RingSpec::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]], None).unwrap();
        let fan = git_fan(&ring).unwrap();
        assert_eq!(fan.support.lineality_dim(), 1);
        let maximal: Vec<RationalCone> = fan.maximal_chambers().into_iter().cloned().collect();
        assert_eq!(
            maximal,
            vec![cone(&[&[-1, 0], &[0, 1]], 2), cone(&[&[1, 0], &[0, 1]], 2)]
        );
        assert_eq!(fan.chambers.len(), 6);
    }

    #[test]
    fn semistable_examples() {
        assert_eq!(semistable_supports(&plus_minus(), &[1]).unwrap(), vec![s(&[0])]);
        assert_eq!(
            semistable_supports(&two_chart_ring(), &[1, 1]).unwrap(),
            vec![s(&[0, 1]), s(&[0, 2])]
        );
        assert_eq!(semistable_supports(&two_chart_ring(), &[0, 0]).unwrap(), vec![SupportSet::empty()]);
    }

    #[test]
    fn relevant_in_relint_examples() {
        let ring = two_chart_ring();
        let q = cone(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(relevant_in_relint(&ring, &q, 24).unwrap(), (s(&[0, 1]), vec![1, 1]));
        let p2 = RingSpec::standard_projective(2).unwrap();
        assert_eq!(relevant_in_relint(&p2, &cone(&[&[1]], 1), 24).unwrap(), (s(&[0]), vec![1]));
        let w = RingSpec::weighted_projective(&[2, 3]).unwrap();
        assert_eq!(
            relevant_in_relint(&w, &cone(&[&[1]], 1), 1),
            Err(Error::RayMultipleBound { ray: vec![1], bound: 1 })
        );
        let (sup, u) = relevant_in_relint(&w, &cone(&[&[1]], 1), 24).unwrap();
        assert_eq!((sup, u), (s(&[0]), vec![2]));
    }

    #[test]
    fn comparison_examples() {
        let b = DEFAULT_EXPONENT_BOX;
        for n in 1..=3 {
            let rep = comparison_report(&RingSpec::standard_projective(n).unwrap(), 6, 24, b).unwrap();
            assert!(rep.isomorphism_criterion);
        }
        let p1p1 = RingSpec::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![0, 1]], None).unwrap();
        let rep = comparison_report(&p1p1, 6, 24, b).unwrap();
        assert!(rep.single_chamber && rep.simplicial && rep.ray_generated && rep.isomorphism_criterion);
        assert_eq!(rep.witness_degree, vec![1, 1]);
        assert_eq!(rep.veronese_dims.dims, vec![1, 4, 9, 16, 25, 36, 49]);

        let rep = comparison_report(&two_chart_ring(), 6, 24, b).unwrap();
        assert!(rep.single_chamber && rep.simplicial && rep.ray_generated);
        assert_eq!(rep.sigma, cone(&[&[1, 0], &[0, 1]], 2));

        let flat = RingSpec::new(2, vec![vec![1, 0], vec![2, 0]], None).unwrap();
        assert!(matches!(comparison_report(&flat, 6, 24, b), Err(Error::ComparisonNotApplicable(_))));
    }
}
