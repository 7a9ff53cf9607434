use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("elements belong to different algebras")]
    ParentMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("Hopf axioms fail: {0}")]
    AxiomFailure(String),

    #[error("linear system has no unique solution: {0}")]
    NotUnique(String),

    #[error("span is not a *-subalgebra (residual {residual:.3e})")]
    NotClosed { residual: f64 },

    #[error("spectral clustering is ambiguous (gap {gap:.3e})")]
    AmbiguousSpectrum { gap: f64 },

    #[error("element is not a projection (residual {residual:.3e})")]
    NotProjection { residual: f64 },

    #[error("map is not a coaction: {0}")]
    NotCoaction(String),

    #[error("image escapes the target subspace (residual {residual:.3e})")]
    ImageEscapes { residual: f64 },

    #[error("non-integer multiplicity {value}")]
    NonInteger { value: f64 },

    #[error("invalid subgroup data: {0}")]
    InvalidSubgroup(String),

    #[error("subgroup is not normal (residual {residual:.3e})")]
    NotNormal { residual: f64 },

    #[error("theorem check failed: {0}")]
    TheoremCheck(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
