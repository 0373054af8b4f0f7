//! The order-two group and the Z/2 actions used throughout.
//!
//! The multipath data model carries group elements through the [`Group`]
//! trait, so nothing downstream bakes in the order of the group even though
//! Z/2 is the only action implemented here.

use crate::real::{real, Real};

use super::point::{Point, SpaceKind, SpherePoint};
use super::SpaceError;

/// Minimal group interface for patching data.
pub trait Group: Copy + Eq + std::fmt::Debug {
    fn identity() -> Self;
    fn compose(self, other: Self) -> Self;
    fn inverse(self) -> Self;
}

/// The group of order two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Z2 {
    Id,
    Gen,
}

impl Group for Z2 {
    fn identity() -> Self {
        Z2::Id
    }

    fn compose(self, other: Self) -> Self {
        if self == other {
            Z2::Id
        } else {
            Z2::Gen
        }
    }

    fn inverse(self) -> Self {
        self
    }
}

impl Z2 {
    pub fn as_bit(self) -> u8 {
        match self {
            Z2::Id => 0,
            Z2::Gen => 1,
        }
    }
}

/// The actions considered in the calculations. The `Surface*` kinds act only
/// on cohomology (the surfaces never appear as geometric objects here).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ActionKind {
    SphereAntipodal,
    SphereReflection,
    TorusAntipodal,
    SurfaceReflection,
    SurfaceRotation,
    SurfaceAntipodal,
}

impl std::fmt::Display for ActionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ActionKind::SphereAntipodal => "sphere-antipodal",
            ActionKind::SphereReflection => "sphere-reflection",
            ActionKind::TorusAntipodal => "torus-antipodal",
            ActionKind::SurfaceReflection => "surface-reflection",
            ActionKind::SurfaceRotation => "surface-rotation",
            ActionKind::SurfaceAntipodal => "surface-antipodal",
        };
        write!(f, "{s}")
    }
}

/// A Z/2 action specification; the generator acts by a closed formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionSpec {
    pub kind: ActionKind,
}

impl ActionSpec {
    pub fn new(kind: ActionKind) -> Self {
        Self { kind }
    }

    /// Whether the action has a geometric model (acts on points).
    pub fn is_geometric(&self) -> bool {
        matches!(
            self.kind,
            ActionKind::SphereAntipodal | ActionKind::SphereReflection | ActionKind::TorusAntipodal
        )
    }

    pub fn space(&self) -> Option<SpaceKind> {
        match self.kind {
            ActionKind::SphereAntipodal | ActionKind::SphereReflection => Some(SpaceKind::Sphere),
            ActionKind::TorusAntipodal => Some(SpaceKind::Torus),
            _ => None,
        }
    }

    /// Image of `p` under the generator.
    pub fn generator<T: Real>(&self, p: &Point<T>) -> Result<Point<T>, SpaceError> {
        match (self.kind, p) {
            (ActionKind::SphereAntipodal, Point::Sphere(s)) => Ok(Point::Sphere(s.antipode())),
            (ActionKind::SphereReflection, Point::Sphere(s)) => {
                Ok(Point::Sphere(reflect_last(s)))
            }
            (ActionKind::TorusAntipodal, Point::Torus(t)) => Ok(Point::Torus(t.antipodal())),
            _ => Err(SpaceError::SpaceMismatch),
        }
    }
}

/// rho(x_1, ..., x_{m+1}) = (x_1, ..., x_m, -x_{m+1}).
pub fn reflect_last<T: Real>(p: &SpherePoint<T>) -> SpherePoint<T> {
    let mut coords = p.coords().to_vec();
    let last = coords.len() - 1;
    coords[last] = -coords[last];
    SpherePoint::new(coords).expect("reflection preserves the unit norm")
}

/// Applies a group element of the given action to a point.
pub fn apply_action<T: Real>(
    action: &ActionSpec,
    g: Z2,
    p: &Point<T>,
) -> Result<Point<T>, SpaceError> {
    match g {
        Z2::Id => {
            // Still insist the point belongs to the acted-on space.
            if action.space() != Some(p.space()) {
                return Err(SpaceError::SpaceMismatch);
            }
            Ok(p.clone())
        }
        Z2::Gen => action.generator(p),
    }
}

/// Checks the involution invariant on one sample point.
pub fn involution_holds<T: Real>(action: &ActionSpec, p: &Point<T>) -> bool {
    match action
        .generator(p)
        .and_then(|q| action.generator(&q))
    {
        Ok(back) => back.approx_eq(p, real(crate::real::STRICT_TOL)),
        Err(_) => false,
    }
}
