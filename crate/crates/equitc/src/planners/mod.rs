//! The explicit planner families and their domains of continuity.
//!
//! Every planner is a pure function from an input tuple to a multipath plus
//! the index of the partition stratum the input lies in. The partitions are
//! U_j (antipodal sphere, also reused by the classical odd-sphere planner),
//! V_j (reflection sphere), D_t (effectual torus) and F_i (euclidean).

mod euclid;
mod sphere;
mod torus;

pub use euclid::{
    farber_counterexample, farber_planner_f2, plan_euclidean_pair, plan_euclidean_symmetrized,
    radial_data, FarberScene, RadialData,
};
pub use sphere::{
    plan_sphere_antipodal_effective, plan_sphere_reflection_effective, plan_sphere_standard,
    sphere_antipodal_domain, sphere_reflection_domain, sphere_standard_domain,
};
pub use torus::{char_tuple, plan_torus_effectual, select_representative};

/// Partition family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DomainFamily {
    U,
    V,
    D,
    F,
}

impl std::fmt::Display for DomainFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainFamily::U => write!(f, "U"),
            DomainFamily::V => write!(f, "V"),
            DomainFamily::D => write!(f, "D"),
            DomainFamily::F => write!(f, "F"),
        }
    }
}

/// Index of one domain of continuity within its family's partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct DomainIndex {
    pub family: DomainFamily,
    pub index: usize,
}

impl DomainIndex {
    pub fn new(family: DomainFamily, index: usize, n: usize) -> Result<Self, PlannerError> {
        let max = match family {
            DomainFamily::U | DomainFamily::V => n - 1,
            DomainFamily::D => 2 * n - 1,
            DomainFamily::F => n,
        };
        if index > max {
            return Err(PlannerError::BadDomainIndex {
                family: family.to_string(),
                index,
                max,
            });
        }
        Ok(Self { family, index })
    }

    /// Number of domains in the family's partition for the given n.
    pub fn family_count(family: DomainFamily, n: usize) -> usize {
        match family {
            DomainFamily::U | DomainFamily::V => n,
            DomainFamily::D => 2 * n,
            DomainFamily::F => n + 1,
        }
    }
}

impl std::fmt::Display for DomainIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

/// Characteristic tuple (eps, chi_1, ..., chi_{n-1}) of an effectual torus
/// input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CharTuple {
    pub eps: u8,
    pub chi: Vec<u8>,
}

impl CharTuple {
    pub fn new(eps: u8, chi: Vec<u8>) -> Result<Self, PlannerError> {
        if eps > 1 || chi.iter().any(|&c| c > 2) {
            return Err(PlannerError::BadCharTuple { eps, chi });
        }
        Ok(Self { eps, chi })
    }

    /// Sum of the tuple; indexes the domain D_t.
    pub fn total(&self) -> usize {
        self.eps as usize + self.chi.iter().map(|&c| c as usize).sum::<usize>()
    }

    pub fn as_bytes(&self) -> Vec<u8> {
        let mut v = vec![self.eps];
        v.extend_from_slice(&self.chi);
        v
    }
}

/// Errors from planner preconditions.
#[derive(Debug, thiserror::Error)]
pub enum PlannerError {
    #[error("domain index {family}{index} out of range (max {max})")]
    BadDomainIndex {
        family: String,
        index: usize,
        max: usize,
    },
    #[error("characteristic tuple out of range: eps={eps}, chi={chi:?}")]
    BadCharTuple { eps: u8, chi: Vec<u8> },
    #[error("planner needs at least two target points")]
    TooFewPoints,
    #[error("input points have mismatched dimensions")]
    DimensionMismatch,
    #[error("the reflection planner needs even m; use the standard planner")]
    OddDimension,
    #[error("the standard planner needs odd m; use the reflection planner")]
    EvenDimension,
    #[error("the euclidean construction needs m >= 3")]
    UnsupportedDimension { m: usize },
    #[error("a preimage point sits on conflicting strata within tolerance")]
    UnclassifiablePoint,
    #[error("input component {index} coincides with an obstacle")]
    PointOnObstacle { index: usize },
    #[error("input component {index} is the origin")]
    PointAtOrigin { index: usize },
    #[error("obstacle {index} is degenerate: {reason}")]
    DegenerateObstacle { index: usize, reason: &'static str },
    #[error("the segment misses every obstacle")]
    SegmentMisses,
    #[error("the segment is parallel to the z-axis")]
    VerticalSegment,
    #[error("an endpoint lies inside an obstacle's detour tube")]
    EndpointInTube,
    #[error("eps must be positive and below the minimum obstacle distance")]
    BadEps,
    #[error(transparent)]
    Space(#[from] crate::spaces::SpaceError),
}
