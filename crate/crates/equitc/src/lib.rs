//! Motion planners assisted by a Z/2 action, and the cohomological
//! certificates behind their domain-count optimality.
//!
//! The crate has five parts:
//!
//! * [`spaces`] — points, actions, closed-form paths and multipaths on the
//!   sphere, the torus and punctured euclidean space;
//! * [`planners`] — the explicit planner families (antipodal/reflection
//!   sphere, effectual torus, symmetrized euclidean) plus the classical
//!   unstable reference planner;
//! * [`cohomology`] — a finite-basis graded-commutative algebra engine over
//!   F_2 and Z that verifies zero-divisor cup-length certificates and carries
//!   a brute-force cup-length oracle;
//! * [`verifier`] — the numerical property harness (sections, partitions,
//!   continuity moduli, instability detection);
//! * [`catalog`] — the machine-readable bound table, reference values and the
//!   inequality-chain checker.
//!
//! Geometry is generic over the scalar via [`real::Real`]; the `*64` aliases
//! below fix `f64`, which is what the verifier and the CLI use.

pub mod catalog;
pub mod cohomology;
pub mod planners;
pub mod real;
pub mod spaces;
pub mod verifier;

pub use real::Real;

/// `f64` aliases for the geometric types.
pub type SpherePoint64 = spaces::SpherePoint<f64>;
pub type TorusPoint64 = spaces::TorusPoint<f64>;
pub type EuclideanPoint64 = spaces::EuclideanPoint<f64>;
pub type Point64 = spaces::Point<f64>;
pub type PathFn64 = spaces::PathFn<f64>;
pub type Multipath64 = spaces::Multipath<f64>;
pub type BrokenMultipath64 = spaces::BrokenMultipath<f64>;
pub type ObstacleSet64 = spaces::ObstacleSet<f64>;

/// Concrete coefficient aliases for the algebra engine.
pub type AlgebraF2 = cohomology::GradedAlgebra<cohomology::F2>;
pub type AlgebraZ = cohomology::GradedAlgebra<i64>;
pub type ElemF2 = cohomology::Elem<cohomology::F2>;
pub type ElemZ = cohomology::Elem<i64>;
