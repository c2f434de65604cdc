use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    /// A variable of degree zero makes `A_0` larger than the ground field.
    #[error("variable {name} (index {index}) has degree zero, so A_0 != k")]
    ZeroDegree { index: usize, name: String },

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("support must be nonempty")]
    EmptySupport,

    #[error("support {0} is not relevant")]
    NotRelevant(String),

    #[error("support {0} is not a chart of the atlas")]
    NotAChart(String),

    #[error("Proj is empty: the ring has no relevant element")]
    EmptyProj,

    #[error("the zero cone has no relative interior weight")]
    ZeroCone,

    #[error("degree {0:?} lies outside the weight cone")]
    OutsideWeightCone(Vec<i64>),

    #[error("enumeration needs an exponent box: the weight cone is not pointed")]
    UnboundedEnumeration,

    #[error("comparison not applicable: {0}")]
    ComparisonNotApplicable(String),

    #[error("no multiple up to {bound} of ray {ray:?} is the degree of a variable")]
    RayMultipleBound { ray: Vec<i64>, bound: u32 },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
