//! The polynomial ring `k[x_1, ..., x_n]` graded by `Z^r`.
//!
//! Every graded piece of a multigraded polynomial ring has a basis of
//! monomials, so graded components are computed as sets of exponent
//! vectors; coefficients never appear.

use std::collections::BTreeSet;
use std::fmt;

use crate::cone::RationalCone;
use crate::enumerate::{box_solutions, polyhedron_points};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Sublattice};

/// Subset scans are exponential in the number of variables.
pub const MAX_VARIABLES: usize = 20;

/// Default exponent box for enumerations that are not provably finite.
pub const DEFAULT_EXPONENT_BOX: u32 = 12;

/// A polynomial ring with a `Z^r`-grading, given by the degrees of its variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    rank: usize,
    degrees: Vec<Vec<i64>>,
    names: Vec<String>,
}

impl RingSpec {
    /// `degrees[i]` is the degree of variable `i`, a vector of length `rank`.
    /// Names default to `x1, ..., xn`.
    pub fn new(rank: usize, degrees: Vec<Vec<i64>>, names: Option<Vec<String>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRing("grading rank must be at least 1".into()));
        }
        let n = degrees.len();
        if n == 0 {
            return Err(Error::InvalidRing("the ring needs at least one variable".into()));
        }
        if n > MAX_VARIABLES {
            return Err(Error::InvalidRing(format!(
                "{n} variables exceeds the supported maximum of {MAX_VARIABLES}"
            )));
        }
        for d in &degrees {
            if d.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: d.len(),
                });
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(Error::InvalidRing(format!(
                        "{} names given for {n} variables",
                        names.len()
                    )));
                }
                let distinct: BTreeSet<&String> = names.iter().collect();
                if distinct.len() != n || names.iter().any(|s| s.is_empty()) {
                    return Err(Error::InvalidRing("variable names must be distinct and nonempty".into()));
                }
                names
            }
            None => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        if let Some(index) = degrees.iter().position(|d| d.iter().all(|&x| x == 0)) {
            return Err(Error::ZeroDegree {
                index,
                name: names[index].clone(),
            });
        }
        Ok(RingSpec { rank, degrees, names })
    }

    /// Weighted projective grading over `Z`.
    pub fn weighted_projective(weights: &[i64]) -> Result<Self> {
        Self::new(1, weights.iter().map(|&w| vec![w]).collect(), None)
    }

    /// Standard grading on `n + 1` variables, all of degree 1.
    pub fn standard_projective(n: usize) -> Result<Self> {
        Self::weighted_projective(&vec![1; n + 1])
    }

    pub fn n_variables(&self) -> usize {
        self.degrees.len()
    }

    /// The rank `r` of the grading group `Z^r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self, i: usize) -> &[i64] {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// The `r x n` degree matrix.
    pub fn degree_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.rank, &self.degrees)
    }

    fn check_exponents(&self, a: &[i64]) -> Result<()> {
        if a.len() != self.n_variables() {
            return Err(Error::DimensionMismatch {
                expected: self.n_variables(),
                found: a.len(),
            });
        }
        Ok(())
    }

    fn check_degree(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: d.len(),
            });
        }
        Ok(())
    }

    /// Degree of the (Laurent) monomial with exponent vector `a`.
    pub fn degree_of(&self, a: &[i64]) -> Result<Vec<i64>> {
        self.check_exponents(a)?;
        Ok(self.degree_unchecked(a))
    }

    pub(crate) fn degree_unchecked(&self, a: &[i64]) -> Vec<i64> {
        let mut d = vec![0i64; self.rank];
        for (deg, &e) in self.degrees.iter().zip(a) {
            for (acc, &x) in d.iter_mut().zip(deg) {
                *acc += e * x;
            }
        }
        d
    }

    /// The cone generated by the degrees of the variables.
    pub fn weight_cone(&self) -> RationalCone {
        RationalCone::from_generators(self.rank, &self.degrees)
    }

    /// Whether the degrees generate `Z^r` as a group, i.e. the torus acts effectively.
    pub fn is_effective_grading(&self) -> bool {
        Sublattice::from_generators(self.rank, &self.degrees)
            .map(|l| l.index().is_one())
            .unwrap_or(false)
    }

    /// A functional positive on every variable degree, when the weight cone is pointed.
    pub fn positive_functional(&self) -> Option<Vec<i64>> {
        let cone = self.weight_cone();
        if !cone.is_pointed() {
            return None;
        }
        cone.dual().relative_interior_point().ok()
    }

    /// Monomial basis of `A_d`. Always complete when the weight cone is
    /// pointed; otherwise complete iff the solution polyhedron is bounded,
    /// and capped at `exponent_box` when it is not.
    pub fn graded_component(&self, d: &[i64], exponent_box: u32) -> Result<GradedComponentBasis> {
        self.check_degree(d)?;
        let bounds = ComponentBounds::new(self, exponent_box);
        Ok(bounds.component(self, d))
    }

    /// Dimensions of `A_{0u}, A_{1u}, ..., A_{Nu}`.
    pub fn veronese_dims(&self, u: &[i64], top: usize, exponent_box: u32) -> Result<VeroneseDims> {
        self.check_degree(u)?;
        let bounds = ComponentBounds::new(self, exponent_box);
        let mut dims = Vec::with_capacity(top + 1);
        let mut complete = true;
        for k in 0..=top {
            let c = bounds.component(self, &scale(u, k as i64));
            complete &= c.complete;
            dims.push(c.dim());
        }
        Ok(VeroneseDims { dims, complete })
    }

    /// Whether `A_{(n+1)u} = A_u * A_{nu}` at the monomial level for all `1 <= n < top`.
    /// Needs a pointed weight cone so that every piece is finite.
    pub fn veronese_generated_in_degree_one(&self, u: &[i64], top: usize) -> Result<VeroneseGeneration> {
        self.check_degree(u)?;
        let bounds = ComponentBounds::new(self, DEFAULT_EXPONENT_BOX);
        if matches!(bounds, ComponentBounds::Boxed(_)) {
            return Err(Error::UnboundedEnumeration);
        }
        let basis = |k: usize| -> Vec<Vec<i64>> {
            bounds
                .component(self, &scale(u, k as i64))
                .monomials
                .into_iter()
                .map(|m| m.exponents)
                .collect()
        };
        let first = basis(1);
        let mut previous = first.clone();
        for k in 1..top {
            let next: BTreeSet<Vec<i64>> = basis(k + 1).into_iter().collect();
            let products: BTreeSet<Vec<i64>> = first
                .iter()
                .flat_map(|a| previous.iter().map(move |b| add(a, b)))
                .collect();
            if products != next {
                return Ok(VeroneseGeneration {
                    generated: false,
                    first_failure: Some(k),
                });
            }
            previous = next.into_iter().collect();
        }
        Ok(VeroneseGeneration {
            generated: true,
            first_failure: None,
        })
    }
}

enum ComponentBounds {
    /// `w` is positive on every variable degree: `a_i <= <w, d> / <w, deg x_i>`.
    Pointed { w: Vec<i64>, weights: Vec<i64> },
    Boxed(u32),
}

impl ComponentBounds {
    fn new(ring: &RingSpec, exponent_box: u32) -> Self {
        match ring.positive_functional() {
            Some(w) => {
                let weights = ring.degrees.iter().map(|d| dot(&w, d)).collect();
                ComponentBounds::Pointed { w, weights }
            }
            None => ComponentBounds::Boxed(exponent_box),
        }
    }

    fn component(&self, ring: &RingSpec, d: &[i64]) -> GradedComponentBasis {
        let n = ring.n_variables();
        let (points, complete) = match self {
            ComponentBounds::Pointed { w, weights } => {
                let budget = dot(w, d);
                let points = if budget < 0 {
                    Vec::new()
                } else {
                    let upper: Vec<i64> = weights.iter().map(|&wi| budget / wi).collect();
                    box_solutions(&ring.degrees, d, &vec![0; n], &upper)
                };
                (points, true)
            }
            ComponentBounds::Boxed(b) => polyhedron_points(&ring.degrees, d, &vec![false; n], *b),
        };
        GradedComponentBasis {
            degree: d.to_vec(),
            monomials: points.into_iter().map(|exponents| Monomial { exponents }).collect(),
            complete,
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn scale(u: &[i64], k: i64) -> Vec<i64> {
    u.iter().map(|x| x * k).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A monomial `x^a` with `a >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<i64>,
}

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.iter().any(|&e| e < 0) {
            return Err(Error::InvalidRing(format!(
                "monomial exponents must be nonnegative: {exponents:?}"
            )));
        }
        Ok(Monomial { exponents })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn into_exponents(self) -> Vec<i64> {
        self.exponents
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

/// Monomial basis of one graded piece `A_d`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponentBasis {
    pub degree: Vec<i64>,
    pub monomials: Vec<Monomial>,
    /// False when the enumeration was cut off by the exponent box.
    pub complete: bool,
}

impl GradedComponentBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn exponent_vectors(&self) -> Vec<Vec<i64>> {
        self.monomials.iter().map(|m| m.exponents.clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseDims {
    pub dims: Vec<usize>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseGeneration {
    pub generated: bool,
    /// Smallest `n` with `A_u * A_{nu} != A_{(n+1)u}`.
    pub first_failure: Option<usize>,
}
