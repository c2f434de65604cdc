//! Twisted sheaves `O_X(d)` as Laurent-monomial lattice points.
//!
//! On the chart `D_+(x^S)` the sections of `O_X(d)` are `(A_{x^S})_d`, spanned
//! by Laurent monomials `x^a` of degree `d` whose negative exponents sit in
//! `S`. A global section is a compatible family of chart sections; since the
//! charts of the minimal relevant supports cover `X`, and a chart on a larger
//! support is contained in one on a smaller support, it suffices to intersect
//! over those. The result: `x^a` with negative exponents only on the core,
//! the variables common to every minimal support.
//!
//! `A^x = A_0^x = k^x` holds for every polynomial ring over a field, so that
//! hypothesis of the global-section comparison is never checked.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::enumerate::polyhedron_points;
use crate::error::{Error, Result};
use crate::lattice::{solve_integer, IntMatrix, Sublattice};
use crate::proj::ProjAtlas;
use crate::relevance::SupportSet;
use crate::ring::RingSpec;

/// A degree `d`, naming the twist `O_X(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistClass(Vec<i64>);

impl TwistClass {
    pub fn new(ring: &RingSpec, d: &[i64]) -> Result<Self> {
        if d.len() != ring.rank() {
            return Err(Error::DimensionMismatch {
                expected: ring.rank(),
                found: d.len(),
            });
        }
        Ok(TwistClass(d.to_vec()))
    }

    pub fn degree(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for TwistClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exponent vectors of Laurent monomials, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentBasis {
    pub twist: TwistClass,
    pub monomials: Vec<Vec<i64>>,
    /// False when the solution set is unbounded and was cut off at the
    /// exponent box.
    pub complete: bool,
}

impl LaurentBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        self.monomials.binary_search_by(|m| m.as_slice().cmp(a)).is_ok()
    }
}

/// Lattice points of `{a : deg(a) = d, a_i >= 0 for i outside free}`.
fn laurent_points(ring: &RingSpec, free: SupportSet, d: &TwistClass, exponent_box: u32) -> LaurentBasis {
    let free: Vec<bool> = (0..ring.n_variables()).map(|i| free.contains(i)).collect();
    let (monomials, complete) = polyhedron_points(ring.degrees(), d.degree(), &free, exponent_box);
    LaurentBasis {
        twist: d.clone(),
        monomials,
        complete,
    }
}

fn require_chart(ring: &RingSpec, atlas: &ProjAtlas, support: &SupportSet) -> Result<()> {
    atlas.require_nonempty()?;
    match atlas.chart(support) {
        Some(_) => Ok(()),
        None => Err(Error::NotAChart(support.render(ring))),
    }
}

/// Sections of `O_X(d)` over the chart of `support`.
pub fn chart_sections(
    ring: &RingSpec,
    atlas: &ProjAtlas,
    support: &SupportSet,
    d: &[i64],
    exponent_box: u32,
) -> Result<LaurentBasis> {
    let twist = TwistClass::new(ring, d)?;
    require_chart(ring, atlas, support)?;
    Ok(laurent_points(ring, *support, &twist, exponent_box))
}

/// `Gamma(X, O_X(d))`.
pub fn global_sections(ring: &RingSpec, atlas: &ProjAtlas, d: &[i64], exponent_box: u32) -> Result<LaurentBasis> {
    let twist = TwistClass::new(ring, d)?;
    atlas.require_nonempty()?;
    let core = atlas.core_support().expect("nonempty atlas");
    Ok(laurent_points(ring, core, &twist, exponent_box))
}

/// Whether the degrees with any single variable left out still span a
/// finite-index sublattice. Under this hypothesis `Gamma(X, O_X(d)) = A_d`.
pub fn theorem_glsec_hypothesis(ring: &RingSpec) -> bool {
    let n = ring.n_variables();
    (0..n).all(|k| {
        let rest: Vec<&Vec<i64>> = ring.degrees().iter().enumerate().filter(|&(i, _)| i != k).map(|(_, c)| c).collect();
        Sublattice::from_generators(ring.rank(), &rest)
            .map(|l| l.has_finite_index())
            .unwrap_or(false)
    })
}

/// The intersection of `D_S` over the minimal relevant supports.
pub fn twist_degree_lattice(ring: &RingSpec, atlas: &ProjAtlas) -> Result<Sublattice> {
    atlas.require_nonempty()?;
    let mut acc = Sublattice::full(ring.rank());
    for chart in &atlas.charts {
        acc = acc.intersection(&chart.degree_lattice)?;
    }
    Ok(acc)
}

/// The sufficient criterion: `d` lies in every `D_S`.
pub fn is_line_bundle(ring: &RingSpec, atlas: &ProjAtlas, d: &[i64]) -> Result<bool> {
    TwistClass::new(ring, d)?;
    Ok(twist_degree_lattice(ring, atlas)?.contains(d))
}

/// `r = 1` with all weights of one sign, where the criterion is also necessary.
pub fn is_weighted_projective(ring: &RingSpec) -> bool {
    ring.rank() == 1 && {
        let w: Vec<i64> = ring.degrees().iter().map(|c| c[0]).collect();
        w.iter().all(|&x| x > 0) || w.iter().all(|&x| x < 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartWitness {
    pub support: SupportSet,
    pub unit: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundleReport {
    pub twist: TwistClass,
    pub twist_lattice: Sublattice,
    pub criterion_satisfied: bool,
    /// Only in the weighted projective case does failing the criterion
    /// imply that `O_X(d)` is not a line bundle.
    pub necessary_and_sufficient: bool,
    pub witnesses: Vec<ChartWitness>,
}

pub fn line_bundle_report(ring: &RingSpec, atlas: &ProjAtlas, d: &[i64]) -> Result<LineBundleReport> {
    let twist = TwistClass::new(ring, d)?;
    let twist_lattice = twist_degree_lattice(ring, atlas)?;
    let witnesses = atlas
        .charts
        .iter()
        .map(|c| {
            Ok(ChartWitness {
                support: c.support,
                unit: local_triviality_witness(ring, atlas, &c.support, d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LineBundleReport {
        criterion_satisfied: twist_lattice.contains(d),
        necessary_and_sufficient: is_weighted_projective(ring),
        twist,
        twist_lattice,
        witnesses,
    })
}

/// A Laurent monomial supported in `support` of degree `d`: a unit of the
/// localization that trivializes `O_X(d)` on the chart. `None` when
/// `d` is not in `D_S`.
pub fn local_triviality_witness(
    ring: &RingSpec,
    atlas: &ProjAtlas,
    support: &SupportSet,
    d: &[i64],
) -> Result<Option<Vec<i64>>> {
    TwistClass::new(ring, d)?;
    require_chart(ring, atlas, support)?;
    let members = support.indices();
    let m = IntMatrix::from_columns(ring.rank(), &support.degrees(ring));
    let target: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
    let Some(z) = solve_integer(&m, &target) else {
        return Ok(None);
    };
    let mut a = vec![0i64; ring.n_variables()];
    for (&i, zi) in members.iter().zip(&z) {
        a[i] = zi
            .to_i64()
            .ok_or_else(|| Error::Internal(format!("witness exponent {zi} exceeds i64")))?;
    }
    Ok(Some(a))
}

/// `Y*Z*X^-1`: positive factors first, then negative ones, each in variable
/// order. The empty monomial is `1`.
pub fn render_laurent(ring: &RingSpec, a: &[i64]) -> String {
    let factor = |i: usize, e: i64| {
        if e == 1 {
            ring.name(i).to_string()
        } else {
            format!("{}^{e}", ring.name(i))
        }
    };
    let pos = a.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, &e)| factor(i, e));
    let neg = a.iter().enumerate().filter(|&(_, &e)| e < 0).map(|(i, &e)| factor(i, e));
    let parts: Vec<String> = pos.chain(neg).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}
