//! Finite-basis graded-commutative algebra over F_2 and Z: the rings of the
//! spaces in scope, induced maps, zero-divisor kernels, cup-length
//! certificates and a brute-force oracle.
//!
//! All objects are immutable after construction and all operations pure.

pub mod certificate;
pub mod certs;
pub mod coeff;
pub mod linalg;
pub mod map;
pub mod oracle;
pub mod presets;
pub mod ring;

pub use certificate::{parse_expr, verify_certificate, CertReport, Certificate, Expected};
pub use coeff::{Coeff, F2};
pub use map::{
    action_map_f2, action_map_z, diagonal_pullback, effective_kernel, effectual_pullback,
    kernel_intersection, orbital_pullback, quotient_pullback, twisted_diagonal_pullbacks,
    AlgebraMap, KernelCoeff, QuotientPair,
};
pub use oracle::{max_cuplength_bruteforce, OracleBudget};
pub use presets::{
    build_ring_f2, build_ring_z, nonorientable_ring, rp_ring, sphere_ring, surface_ring,
    RingPreset,
};
pub use ring::{
    include_in_slot, tensor_power, tensor_product, BasisMonomial, Budget, Elem, GradedAlgebra,
};

/// Errors from ring and map constructions and certificate handling.
#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("bad parameters: {reason}")]
    BadParams { reason: String },
    #[error("ring {ring} fails a structural check: {reason}")]
    InvalidRing { ring: String, reason: String },
    #[error("basis size budget ({limit}) exceeded")]
    SizeBudgetExceeded { limit: usize },
    #[error("map {map} does not preserve the degree of {class}")]
    NotDegreePreserving { map: String, class: String },
    #[error("map {map} is not unital")]
    NotUnital { map: String },
    #[error("map {map} is not multiplicative on ({left}, {right})")]
    NotMultiplicative {
        map: String,
        left: String,
        right: String,
    },
    #[error("shape mismatch: {reason}")]
    ShapeMismatch { reason: String },
    #[error("no class named {name} in ring {ring}")]
    UnknownClass { name: String, ring: String },
    #[error("unsupported (space, action) pair: ({space}, {action})")]
    UnsupportedPair { space: String, action: String },
    #[error("cannot parse {expr:?}: {reason}")]
    ParseError { expr: String, reason: String },
    #[error("search budget exceeded: {reason}")]
    BudgetExceeded { reason: String },
}
