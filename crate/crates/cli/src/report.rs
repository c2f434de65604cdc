//! Serializable reports. Every boolean claim carries a citation naming the
//! criterion it rests on; every enumerated basis carries its completeness flag.

use mhproj::git::{comparison_report, git_fan_from_table, orbit_cones};
use mhproj::proj::{all_points_prime, build_atlas};
use mhproj::sheaves::{
    chart_sections, global_sections, is_weighted_projective, line_bundle_report, render_laurent,
    theorem_glsec_hypothesis, twist_degree_lattice,
};
use mhproj::{ProjAtlas, RationalCone, RingSpec, Sublattice, SupportSet};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::input::Options;

pub mod cite {
    pub const RELEVANCE: &str =
        "a monomial is relevant iff the degrees of its support generate a finite-index sublattice";
    pub const NONEMPTY: &str = "Proj_MH(A) is the union of the charts D_+(f) of relevant f";
    pub const NORMAL: &str = "Proj_MH of a normal graded domain is normal; a polynomial ring is one";
    pub const ALL_POINTS_PRIME: &str =
        "points are homogeneous primes when every independent set of r degrees is a basis of Z^r";
    pub const CHART_PRIME: &str = "points of D_+(f) are homogeneous primes when D_f = Z^r";
    pub const GLSEC: &str =
        "Gamma(X, O(d)) = A_d when the degrees with any one variable removed still generate a finite-index sublattice";
    pub const EFFECTIVE: &str = "the torus acts effectively iff the degrees generate Z^r";
    pub const LINE_BUNDLE: &str = "O_X(d) is a line bundle when d lies in D_f for every relevant f";
    pub const WEIGHTED: &str =
        "on weighted projective space O(d) is a line bundle iff d is divisible by every weight";
    pub const BIRATIONAL: &str =
        "Y and Proj_MH(A) share the chart of a relevant element whose degree is interior to a full-dimensional chamber";
    pub const SINGLE_CHAMBER: &str = "the GIT quasi-fan has exactly one maximal cone";
    pub const SIMPLICIAL: &str = "the weight cone is pointed with as many rays as its dimension";
    pub const RAY_GENERATED: &str = "A is generated in degrees on the rays of the weight cone";
    pub const VERONESE: &str = "the Veronese subalgebra of the witness degree is generated in degree one";
    pub const ISOMORPHISM: &str =
        "one simplicial maximal chamber, ray generation and a Veronese subalgebra generated in degree one make Y and Proj_MH(A) isomorphic";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub name: String,
    pub holds: bool,
    pub citation: String,
}

fn criterion(name: &str, holds: bool, citation: &str) -> Criterion {
    Criterion {
        name: name.to_string(),
        holds,
        citation: citation.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub grading_rank: usize,
    pub variables: Vec<Variable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeData {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
    pub facet_normals: Vec<Vec<i64>>,
    pub equations: Vec<Vec<i64>>,
}

impl From<&RationalCone> for ConeData {
    fn from(c: &RationalCone) -> Self {
        ConeData {
            dim: c.dim(),
            rays: c.rays().to_vec(),
            lineality: c.lineality().to_vec(),
            facet_normals: c.facet_normals().to_vec(),
            equations: c.equations().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeData {
    /// Hermite basis, one column per entry.
    pub basis: Vec<Vec<i64>>,
    pub index: String,
}

fn lattice_data(l: &Sublattice) -> Result<LatticeData, CliError> {
    let basis = l
        .basis()
        .columns()
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| mhproj::Error::Internal(format!("lattice entry {x} exceeds i64")))
                })
                .collect::<Result<Vec<i64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticeData {
        basis,
        index: l.index().to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartData {
    pub support: String,
    pub variables: Vec<usize>,
    pub degree_lattice: LatticeData,
    pub prime_points: Criterion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasData {
    pub charts: Vec<ChartData>,
    /// Variables allowed a negative exponent in a global section.
    pub core_support: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWitness {
    pub support: String,
    pub determinant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub atlas: AtlasData,
    pub criteria: Vec<Criterion>,
    pub prime_point_witness: Option<PrimeWitness>,
    pub weight_cone: ConeData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub monomials: Vec<String>,
    pub exponents: Vec<Vec<i64>>,
    pub complete: bool,
}

impl Basis {
    fn new(ring: &RingSpec, exponents: Vec<Vec<i64>>, complete: bool) -> Self {
        Basis {
            monomials: exponents.iter().map(|a| render_laurent(ring, a)).collect(),
            exponents,
            complete,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSectionCount {
    pub support: String,
    pub count: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sections {
    pub twist: Vec<i64>,
    pub exponent_box: u32,
    pub global_sections: Basis,
    pub graded_component: Basis,
    pub charts: Vec<ChartSectionCount>,
    pub hypothesis: Criterion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartUnit {
    pub support: String,
    pub unit: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundle {
    pub twist: Vec<i64>,
    pub twist_lattice: LatticeData,
    pub criterion: Criterion,
    /// Present only where the criterion is also necessary.
    pub necessity: Option<Criterion>,
    pub chart_units: Vec<ChartUnit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub twist: Vec<i64>,
    pub criterion_satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleScan {
    pub bound: u32,
    pub twist_lattice: LatticeData,
    pub citation: String,
    pub necessary_and_sufficient: bool,
    pub rows: Vec<ScanRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub cone: ConeData,
    pub maximal: bool,
    pub sample_degree: Vec<i64>,
    pub semistable_supports: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanData {
    pub support: ConeData,
    pub distinct_orbit_cones: usize,
    pub chambers: Vec<Chamber>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub chamber: ConeData,
    pub witness_support: String,
    pub witness_degree: Vec<i64>,
    pub birational: Criterion,
    pub single_chamber: Criterion,
    pub simplicial: Criterion,
    pub ray_generated: Criterion,
    /// Absent when the weight cone is not pointed.
    pub veronese_generated: Option<Criterion>,
    pub isomorphism_criterion: Criterion,
    pub sigma: ConeData,
    pub veronese_dims: Vec<usize>,
    pub veronese_dims_complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ring: RingSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<Sections>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_bundle: Option<LineBundle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_bundle_scan: Option<LineBundleScan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub git_fan: Option<FanData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
}

impl Report {
    fn new(command: &str, ring: &RingSpec) -> Self {
        Report {
            command: command.to_string(),
            ring: RingSummary {
                grading_rank: ring.rank(),
                variables: (0..ring.n_variables())
                    .map(|i| Variable {
                        name: ring.name(i).to_string(),
                        degree: ring.degree(i).to_vec(),
                    })
                    .collect(),
            },
            analysis: None,
            sections: None,
            line_bundle: None,
            line_bundle_scan: None,
            git_fan: None,
            comparison: None,
        }
    }
}

fn atlas_data(ring: &RingSpec, atlas: &ProjAtlas) -> Result<AtlasData, CliError> {
    let charts = atlas
        .charts
        .iter()
        .map(|c| {
            Ok(ChartData {
                support: c.support.render(ring),
                variables: c.support.indices(),
                degree_lattice: lattice_data(&c.degree_lattice)?,
                prime_points: criterion("prime_points", c.prime_points, cite::CHART_PRIME),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(AtlasData {
        charts,
        core_support: atlas.core_support().map(|s| s.render(ring)),
    })
}

pub fn analyze(ring: &RingSpec) -> Result<Report, CliError> {
    let atlas = build_atlas(ring);
    let prime = all_points_prime(ring);
    let criteria = vec![
        criterion("proj_nonempty", atlas.nonempty, cite::NONEMPTY),
        criterion("normal", atlas.normal, cite::NORMAL),
        criterion("all_points_prime", prime.holds, cite::ALL_POINTS_PRIME),
        criterion("global_sections_hypothesis", theorem_glsec_hypothesis(ring), cite::GLSEC),
        criterion("effective_grading", ring.is_effective_grading(), cite::EFFECTIVE),
    ];
    let mut report = Report::new("analyze", ring);
    report.analysis = Some(Analysis {
        atlas: atlas_data(ring, &atlas)?,
        criteria,
        prime_point_witness: prime.witness.map(|w| PrimeWitness {
            support: w.columns.render(ring),
            determinant: w.determinant.to_string(),
        }),
        weight_cone: ConeData::from(&ring.weight_cone()),
    });
    Ok(report)
}

pub fn sections(ring: &RingSpec, d: &[i64], exponent_box: u32) -> Result<Report, CliError> {
    let atlas = build_atlas(ring);
    let global = global_sections(ring, &atlas, d, exponent_box)?;
    let graded = ring.graded_component(d, exponent_box)?;
    let charts = atlas
        .charts
        .iter()
        .map(|c| {
            let b = chart_sections(ring, &atlas, &c.support, d, exponent_box)?;
            Ok(ChartSectionCount {
                support: c.support.render(ring),
                count: b.dim(),
                complete: b.complete,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut report = Report::new("sections", ring);
    report.sections = Some(Sections {
        twist: d.to_vec(),
        exponent_box,
        global_sections: Basis::new(ring, global.monomials, global.complete),
        graded_component: Basis::new(ring, graded.exponent_vectors(), graded.complete),
        charts,
        hypothesis: criterion("global_sections_hypothesis", theorem_glsec_hypothesis(ring), cite::GLSEC),
    });
    Ok(report)
}

pub fn line_bundle(ring: &RingSpec, d: &[i64]) -> Result<Report, CliError> {
    let atlas = build_atlas(ring);
    let rep = line_bundle_report(ring, &atlas, d)?;
    let mut report = Report::new("linebundle", ring);
    report.line_bundle = Some(LineBundle {
        twist: d.to_vec(),
        twist_lattice: lattice_data(&rep.twist_lattice)?,
        criterion: criterion("line_bundle_criterion", rep.criterion_satisfied, cite::LINE_BUNDLE),
        necessity: rep
            .necessary_and_sufficient
            .then(|| criterion("line_bundle", rep.criterion_satisfied, cite::WEIGHTED)),
        chart_units: rep
            .witnesses
            .iter()
            .map(|w| ChartUnit {
                support: w.support.render(ring),
                unit: w.unit.as_ref().map(|a| render_laurent(ring, a)),
            })
            .collect(),
    });
    Ok(report)
}

pub fn line_bundle_scan(ring: &RingSpec, bound: u32) -> Result<Report, CliError> {
    let atlas = build_atlas(ring);
    let lattice = twist_degree_lattice(ring, &atlas)?;
    let b = i64::from(bound);
    let mut twists: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..ring.rank() {
        twists = twists
            .into_iter()
            .flat_map(|t| {
                (-b..=b).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let rows = twists
        .into_iter()
        .map(|t| ScanRow {
            criterion_satisfied: lattice.contains(&t),
            twist: t,
        })
        .collect();
    let mut report = Report::new("linebundle", ring);
    report.line_bundle_scan = Some(LineBundleScan {
        bound,
        twist_lattice: lattice_data(&lattice)?,
        citation: cite::LINE_BUNDLE.to_string(),
        necessary_and_sufficient: is_weighted_projective(ring),
        rows,
    });
    Ok(report)
}

pub fn git_fan(ring: &RingSpec) -> Result<Report, CliError> {
    let table = orbit_cones(ring);
    let fan = git_fan_from_table(ring, &table)?;
    let maximal: Vec<&RationalCone> = fan.maximal_chambers();
    let chambers = fan
        .chambers
        .iter()
        .map(|c| {
            let m = c.relative_interior_point().unwrap_or_else(|_| vec![0; ring.rank()]);
            let supports = table.semistable_supports(&m)?;
            Ok(Chamber {
                cone: ConeData::from(c),
                maximal: maximal.contains(&c),
                semistable_supports: supports.iter().map(|s: &SupportSet| s.render(ring)).collect(),
                sample_degree: m,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut report = Report::new("gitfan", ring);
    report.git_fan = Some(FanData {
        support: ConeData::from(&fan.support),
        distinct_orbit_cones: table.distinct().len(),
        chambers,
    });
    Ok(report)
}

pub fn compare(ring: &RingSpec, options: &Options) -> Result<Report, CliError> {
    let rep = comparison_report(
        ring,
        options.veronese_bound,
        options.ray_multiple_bound,
        options.exponent_box,
    )?;
    let mut report = Report::new("compare", ring);
    report.comparison = Some(Comparison {
        chamber: ConeData::from(&rep.chamber),
        witness_support: rep.witness_support.render(ring),
        witness_degree: rep.witness_degree.clone(),
        birational: criterion("birational", rep.birational, cite::BIRATIONAL),
        single_chamber: criterion("single_chamber", rep.single_chamber, cite::SINGLE_CHAMBER),
        simplicial: criterion("simplicial", rep.simplicial, cite::SIMPLICIAL),
        ray_generated: criterion("ray_generated", rep.ray_generated, cite::RAY_GENERATED),
        veronese_generated: rep
            .veronese_generated
            .map(|g| criterion("veronese_generated_in_degree_one", g, cite::VERONESE)),
        isomorphism_criterion: criterion("isomorphism_criterion", rep.isomorphism_criterion, cite::ISOMORPHISM),
        sigma: ConeData::from(&rep.sigma),
        veronese_dims: rep.veronese_dims.dims.clone(),
        veronese_dims_complete: rep.veronese_dims.complete,
    });
    Ok(report)
}
