//! The chart atlas of `X = Proj_MH(A)` and its scheme-level flags.
//!
//! Points are never materialized. Whether points of `X` correspond to
//! homogeneous primes of `A` is reported through two criteria: a per-chart one
//! (`D_S = Z^r`) and a global one on the degree columns.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, LatticeIndex, Sublattice};
use crate::relevance::{minimal_relevant_supports, support_degree_lattice, SupportSet};
use crate::ring::RingSpec;

/// The affine chart `D_+(x^S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub support: SupportSet,
    pub degree_lattice: Sublattice,
    pub index: LatticeIndex,
    /// `D_S = Z^r`: points of the chart are the homogeneous primes of `A`
    /// not containing `x^S`.
    pub prime_points: bool,
}

impl Chart {
    fn new(ring: &RingSpec, support: SupportSet) -> Result<Chart> {
        let degree_lattice = support_degree_lattice(ring, &support)?;
        let index = degree_lattice.index();
        Ok(Chart {
            support,
            prime_points: index.is_one(),
            index,
            degree_lattice,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjAtlas {
    pub ring: RingSpec,
    /// One chart per inclusion-minimal relevant support; these cover `X`.
    pub charts: Vec<Chart>,
    pub nonempty: bool,
    pub normal: bool,
    pub all_points_prime: bool,
}

impl ProjAtlas {
    pub fn chart(&self, support: &SupportSet) -> Option<&Chart> {
        self.charts.iter().find(|c| c.support == *support)
    }

    /// Variables belonging to every chart support; the only ones a global
    /// section may carry with a negative exponent. `None` for an empty atlas.
    pub fn core_support(&self) -> Option<SupportSet> {
        let mut it = self.charts.iter().map(|c| c.support);
        let first = it.next()?;
        Some(it.fold(first, |acc, s| acc.intersection(&s)))
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.nonempty {
            Ok(())
        } else {
            Err(Error::EmptyProj)
        }
    }
}

pub fn build_atlas(ring: &RingSpec) -> ProjAtlas {
    let charts: Vec<Chart> = minimal_relevant_supports(ring)
        .into_iter()
        .map(|s| Chart::new(ring, s).expect("minimal relevant supports are nonempty"))
        .collect();
    ProjAtlas {
        ring: ring.clone(),
        nonempty: !charts.is_empty(),
        normal: is_normal(ring),
        all_points_prime: all_points_prime(ring).holds,
        charts,
    }
}

/// `D_+(f) ∩ D_+(g) = D_+(fg)`: the chart on the union of the supports.
pub fn chart_intersection(ring: &RingSpec, a: &Chart, b: &Chart) -> Result<Chart> {
    Chart::new(ring, a.support.union(&b.support))
}

/// A polynomial ring over a field is a normal domain, and `Proj_MH` of a
/// normal graded domain is normal (its charts are rings of invariants of
/// normal domains).
pub fn is_normal(_ring: &RingSpec) -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePointWitness {
    /// Linearly independent degree columns that are not a basis of `Z^r`.
    pub columns: SupportSet,
    pub determinant: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePointReport {
    pub holds: bool,
    pub witness: Option<PrimePointWitness>,
}

/// Every linearly independent set of `r` degree columns is a basis of `Z^r`.
/// When this holds, every point of `X` is a homogeneous prime of `A`.
pub fn all_points_prime(ring: &RingSpec) -> PrimePointReport {
    let n = ring.n_variables();
    let r = ring.rank();
    let mut subsets: Vec<SupportSet> = (0..(1u32 << n))
        .filter(|m| m.count_ones() as usize == r)
        .map(SupportSet::from_mask)
        .collect();
    subsets.sort();
    for s in subsets {
        let det = IntMatrix::from_columns(r, &s.degrees(ring)).determinant();
        if !det.is_zero() && !det.abs().is_one() {
            return PrimePointReport {
                holds: false,
                witness: Some(PrimePointWitness {
                    columns: s,
                    determinant: det,
                }),
            };
        }
    }
    PrimePointReport {
        holds: true,
        witness: None,
    }
}

/// For a relevant support: whether `D_S = Z^r`.
pub fn chart_prime_property(ring: &RingSpec, support: &SupportSet) -> Result<bool> {
    let lattice = support_degree_lattice(ring, support)?;
    match lattice.index() {
        LatticeIndex::Infinite => Err(Error::NotRelevant(support.render(ring))),
        index => Ok(index.is_one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::two_chart_ring;

    fn s(idx: &[usize]) -> SupportSet {
        SupportSet::from_indices(idx)
    }

    #[test]
    fn two_chart_atlas() {
        let ring = two_chart_ring();
        let atlas = build_atlas(&ring);
        let supports: Vec<SupportSet> = atlas.charts.iter().map(|c| c.support).collect();
        assert_eq!(supports, vec![s(&[0, 1]), s(&[0, 2])]);
        assert!(atlas.nonempty && atlas.normal && atlas.all_points_prime);
        assert!(atlas.charts.iter().all(|c| c.prime_points));
        assert_eq!(atlas.core_support(), Some(s(&[0])));
    }

    #[test]
    fn empty_atlas() {
        let ring = RingSpec::new(2, vec![vec![1, 0], vec![2, 0]], None).unwrap();
        let atlas = build_atlas(&ring);
        assert!(!atlas.nonempty);
        assert!(atlas.charts.is_empty());
        assert_eq!(atlas.core_support(), None);
        assert_eq!(atlas.require_nonempty(), Err(Error::EmptyProj));
    }

    #[test]
    fn projective_plane_atlas() {
        let atlas = build_atlas(&RingSpec::standard_projective(2).unwrap());
        let supports: Vec<SupportSet> = atlas.charts.iter().map(|c| c.support).collect();
        assert_eq!(supports, vec![s(&[0]), s(&[1]), s(&[2])]);
        assert_eq!(atlas.core_support(), Some(SupportSet::empty()));
    }

    #[test]
    fn intersections() {
        let ring = two_chart_ring();
        let atlas = build_atlas(&ring);
        let (a, b) = (&atlas.charts[0], &atlas.charts[1]);
        let ab = chart_intersection(&ring, a, b).unwrap();
        assert_eq!(ab.support, SupportSet::full(3));
        assert_eq!(chart_intersection(&ring, a, a).unwrap(), *a);

        let p2 = RingSpec::standard_projective(2).unwrap();
        let atlas = build_atlas(&p2);
        let c = chart_intersection(&p2, &atlas.charts[0], &atlas.charts[1]).unwrap();
        assert_eq!(c.support, s(&[0, 1]));
        assert_eq!(c.degree_lattice, Sublattice::full(1));
    }

    #[test]
    fn prime_point_criterion() {
        assert!(all_points_prime(&two_chart_ring()).holds);
        let ring = RingSpec::new(2, vec![vec![1, 0], vec![1, 2], vec![0, 1]], None).unwrap();
        let rep = all_points_prime(&ring);
        assert!(!rep.holds);
        let w = rep.witness.unwrap();
        assert_eq!(w.columns, s(&[0, 1]));
        assert_eq!(w.determinant, BigInt::from(2));
        for n in 1..=4 {
            assert!(all_points_prime(&RingSpec::standard_projective(n).unwrap()).holds);
        }
    }

    #[test]
    fn chart_prime_examples() {
        let ring = two_chart_ring();
        assert!(chart_prime_property(&ring, &s(&[0, 1])).unwrap());
        assert!(matches!(chart_prime_property(&ring, &s(&[1, 2])), Err(Error::NotRelevant(_))));
        let w = RingSpec::weighted_projective(&[1, 2, 3]).unwrap();
        assert!(!chart_prime_property(&w, &s(&[1])).unwrap());
        let p3 = RingSpec::standard_projective(3).unwrap();
        assert!((0..4).all(|i| chart_prime_property(&p3, &s(&[i])).unwrap()));
    }
}
