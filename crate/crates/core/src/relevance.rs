//! Relevant monomial supports and their degree lattices.
//!
//! Inverting a monomial with support `S` makes exactly the Laurent monomials in
//! the variables of `S` (up to scalars) into homogeneous units; these are all
//! the homogeneous units of the localization, since a unit of a localized
//! polynomial ring over a field is a scalar times a Laurent monomial in the
//! inverted variables. Their degrees form `D_S`, the lattice generated by
//! `{deg x_i : i in S}`. The localization is periodic, and the monomial
//! relevant, iff `D_S` has finite index in `Z^r`, i.e. iff the degrees in `S`
//! span `Q^r`.
//!
//! A general homogeneous `f` has `D_+(f)` inside the union of the charts of its
//! monomials, so supports are all that is ever tracked.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{LatticeIndex, Sublattice};
use crate::par::*;
use crate::ring::RingSpec;

/// A set of variable indices, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SupportSet(u32);

impl SupportSet {
    pub fn empty() -> Self {
        SupportSet(0)
    }

    /// All variables of an `n`-variable ring.
    pub fn full(n: usize) -> Self {
        SupportSet(((1u64 << n) - 1) as u32)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SupportSet(indices.iter().fold(0u32, |m, &i| m | (1 << i)))
    }

    pub fn from_mask(mask: u32) -> Self {
        SupportSet(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    /// Sorted indices.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|&i| self.0 & (1 << i) != 0).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        SupportSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &SupportSet) -> SupportSet {
        SupportSet(self.0 & other.0)
    }

    pub fn without(&self, i: usize) -> SupportSet {
        SupportSet(self.0 & !(1 << i))
    }

    /// `{X,Y}` using the ring's variable names.
    pub fn render(&self, ring: &RingSpec) -> String {
        let names: Vec<&str> = self.indices().into_iter().map(|i| ring.name(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check(&self, ring: &RingSpec) -> Result<()> {
        if self.0 >> ring.n_variables() != 0 {
            return Err(Error::InvalidSupport(format!(
                "{self} mentions a variable beyond the {} of the ring",
                ring.n_variables()
            )));
        }
        Ok(())
    }

    /// Degrees of the member variables.
    pub fn degrees(&self, ring: &RingSpec) -> Vec<Vec<i64>> {
        self.indices().into_iter().map(|i| ring.degree(i).to_vec()).collect()
    }
}

impl Ord for SupportSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(&other.indices())
    }
}

impl PartialOrd for SupportSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceReport {
    pub support: SupportSet,
    pub degree_lattice: Sublattice,
    pub index: LatticeIndex,
    pub relevant: bool,
}

/// `D_S`: the lattice generated by the degrees of the variables in `S`.
pub fn support_degree_lattice(ring: &RingSpec, support: &SupportSet) -> Result<Sublattice> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    support.check(ring)?;
    Sublattice::from_generators(ring.rank(), &support.degrees(ring))
}

pub fn is_relevant_support(ring: &RingSpec, support: &SupportSet) -> Result<RelevanceReport> {
    let lattice = support_degree_lattice(ring, support)?;
    let index = lattice.index();
    Ok(RelevanceReport {
        support: *support,
        relevant: index.is_finite(),
        index,
        degree_lattice: lattice,
    })
}

/// Relevance of every support, indexed by mask (mask 0 is never relevant).
pub(crate) fn relevance_table(ring: &RingSpec) -> Vec<bool> {
    let n = ring.n_variables();
    let masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks
        .into_par_iter()
        .map(|m| {
            m != 0
                && Sublattice::from_generators(ring.rank(), &SupportSet(m).degrees(ring))
                    .map(|l| l.has_finite_index())
                    .unwrap_or(false)
        })
        .collect()
}

/// The inclusion-minimal relevant supports, in lexicographic order.
pub fn minimal_relevant_supports(ring: &RingSpec) -> Vec<SupportSet> {
    let table = relevance_table(ring);
    minimal_from_table(ring.n_variables(), &table)
}

pub(crate) fn minimal_from_table(n: usize, table: &[bool]) -> Vec<SupportSet> {
    // relevance is upward closed, so minimal = relevant with no relevant
    // subset of size one less
    let mut out: Vec<SupportSet> = (1..table.len() as u32)
        .filter(|&m| table[m as usize])
        .map(SupportSet)
        .filter(|s| {
            (0..n)
                .filter(|&i| s.contains(i))
                .all(|i| !table[s.without(i).0 as usize])
        })
        .collect();
    out.sort();
    out
}

/// Whether the ring has any relevant element, i.e. `Proj_MH` is nonempty.
pub fn has_relevant_element(ring: &RingSpec) -> bool {
    Sublattice::from_generators(ring.rank(), ring.degrees())
        .map(|l| l.has_finite_index())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::two_chart_ring;

    fn s(idx: &[usize]) -> SupportSet {
        SupportSet::from_indices(idx)
    }

    #[test]
    fn support_set_basics() {
        let a = s(&[0, 2]);
        assert_eq!(a.indices(), vec![0, 2]);
        assert_eq!(a.len(), 2);
        assert!(s(&[2]).is_subset_of(&a));
        assert_eq!(a.union(&s(&[1])), SupportSet::full(3));
        assert!(s(&[0, 1]) < s(&[0, 2]));
        assert!(s(&[0, 2]) < s(&[1]));
        assert_eq!(a.render(&two_chart_ring()), "{X,Z}");
        assert_eq!(a.to_string(), "{0,2}");
    }

    #[test]
    fn degree_lattices() {
        let ring = two_chart_ring();
        assert_eq!(support_degree_lattice(&ring, &s(&[0, 1])).unwrap(), Sublattice::full(2));
        let yz = support_degree_lattice(&ring, &s(&[1, 2])).unwrap();
        assert_eq!(yz.rank(), 1);
        assert_eq!(yz, Sublattice::from_generators(2, &[[1, 0]]).unwrap());
        let w = RingSpec::weighted_projective(&[1, 2, 3]).unwrap();
        assert_eq!(
            support_degree_lattice(&w, &s(&[1])).unwrap(),
            Sublattice::from_generators(1, &[[2]]).unwrap()
        );
        assert_eq!(support_degree_lattice(&ring, &s(&[])), Err(Error::EmptySupport));
        assert!(support_degree_lattice(&ring, &s(&[5])).is_err());
    }

    #[test]
    fn relevance_examples() {
        let ring = two_chart_ring();
        let xy = is_relevant_support(&ring, &s(&[0, 1])).unwrap();
        assert!(xy.relevant && xy.index.is_one());
        assert!(!is_relevant_support(&ring, &s(&[1, 2])).unwrap().relevant);
        let w = RingSpec::weighted_projective(&[1, 2, 3]).unwrap();
        for i in 0..3 {
            let rep = is_relevant_support(&w, &s(&[i])).unwrap();
            assert!(rep.relevant);
            assert_eq!(rep.index, LatticeIndex::Finite((i as i64 + 1).into()));
        }
    }

    #[test]
    fn minimal_supports() {
        assert_eq!(minimal_relevant_supports(&two_chart_ring()), vec![s(&[0, 1]), s(&[0, 2])]);
        let w = RingSpec::weighted_projective(&[1, 2, 3]).unwrap();
        assert_eq!(minimal_relevant_supports(&w), vec![s(&[0]), s(&[1]), s(&[2])]);
        let product = RingSpec::new(2, vec![vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(minimal_relevant_supports(&product), vec![s(&[0, 1])]);
    }

    #[test]
    fn relevant_elements() {
        assert!(has_relevant_element(&two_chart_ring()));
        let degenerate = RingSpec::new(2, vec![vec![1, 0], vec![2, 0]], None).unwrap();
        assert!(!has_relevant_element(&degenerate));
        assert!(minimal_relevant_supports(&degenerate).is_empty());
        assert!(has_relevant_element(&RingSpec::standard_projective(2).unwrap()));
    }
}
