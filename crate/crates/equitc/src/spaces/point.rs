//! Points of the three space families and obstacle data.

use num_complex::Complex;

use crate::real::{real, Real, DEFAULT_TOL, STRICT_TOL};

use super::SpaceError;

/// Which of the three space families a point or path lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SpaceKind {
    Sphere,
    Torus,
    Euclid,
}

impl std::fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceKind::Sphere => write!(f, "sphere"),
            SpaceKind::Torus => write!(f, "torus"),
            SpaceKind::Euclid => write!(f, "euclid"),
        }
    }
}

/// Unit vector in R^{m+1}, m >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint<T: Real> {
    coords: Vec<T>,
}

impl<T: Real> SpherePoint<T> {
    pub fn new(coords: Vec<T>) -> Result<Self, SpaceError> {
        if coords.len() < 2 {
            return Err(SpaceError::BadDimension {
                what: "sphere point needs m >= 1, i.e. at least 2 coordinates",
                got: coords.len(),
            });
        }
        let norm = norm(&coords);
        if (norm - T::one()).abs() > real(STRICT_TOL) {
            return Err(SpaceError::NotUnit {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { coords })
    }

    /// Projects a nonzero vector onto the sphere.
    pub fn normalized(coords: Vec<T>) -> Result<Self, SpaceError> {
        let norm = norm(&coords);
        if norm <= real(STRICT_TOL) {
            return Err(SpaceError::ZeroVector);
        }
        Self::new(coords.into_iter().map(|c| c / norm).collect())
    }

    /// Standard basis vector e_axis on S^m (so in R^{m+1}).
    pub fn basis(m: usize, axis: usize) -> Self {
        let mut coords = vec![T::zero(); m + 1];
        coords[axis] = T::one();
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn antipode(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -*c).collect(),
        }
    }

    /// Ambient angular distance, in [0, pi].
    pub fn angle_to(&self, other: &Self) -> T {
        let dot = dot(&self.coords, &other.coords);
        dot.min(T::one()).max(-T::one()).acos()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.coords.len() == other.coords.len() && dist(&self.coords, &other.coords) <= tol
    }
}

/// Point of the torus S^1 x S^1 in C x C: horizontal factor `h`, vertical `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint<T: Real> {
    pub h: Complex<T>,
    pub v: Complex<T>,
}

impl<T: Real> TorusPoint<T> {
    pub fn new(h: Complex<T>, v: Complex<T>) -> Result<Self, SpaceError> {
        for z in [&h, &v] {
            let n = z.norm();
            if (n - T::one()).abs() > real(STRICT_TOL) {
                return Err(SpaceError::NotUnit {
                    norm: n.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { h, v })
    }

    pub fn from_angles(theta_h: T, theta_v: T) -> Self {
        Self {
            h: Complex::from_polar(T::one(), theta_h),
            v: Complex::from_polar(T::one(), theta_v),
        }
    }

    /// Ambient coordinates in R^4 = C^2.
    pub fn ambient(&self) -> [T; 4] {
        [self.h.re, self.h.im, self.v.re, self.v.im]
    }

    /// The free involution sigma(x) = (-x', conj(x'')).
    pub fn antipodal(&self) -> Self {
        Self {
            h: -self.h,
            v: self.v.conj(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.h - other.h).norm() <= tol && (self.v - other.v).norm() <= tol
    }
}

/// Point of R^m, m >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanPoint<T: Real> {
    coords: Vec<T>,
}

impl<T: Real> EuclideanPoint<T> {
    pub fn new(coords: Vec<T>) -> Result<Self, SpaceError> {
        if coords.len() < 2 {
            return Err(SpaceError::BadDimension {
                what: "euclidean point needs m >= 2",
                got: coords.len(),
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(SpaceError::NotFinite);
        }
        Ok(Self { coords })
    }

    pub fn origin(m: usize) -> Self {
        Self {
            coords: vec![T::zero(); m],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn norm(&self) -> T {
        norm(&self.coords)
    }

    pub fn dist(&self, other: &Self) -> T {
        dist(&self.coords, &other.coords)
    }

    /// Projection onto the first two coordinates.
    pub fn xy(&self) -> [T; 2] {
        [self.coords[0], self.coords[1]]
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            coords: self.coords.iter().map(|c| *c * s).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.coords.len() == other.coords.len() && self.dist(other) <= tol
    }
}

/// A point of any of the three families, as produced by path evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Point<T: Real> {
    Sphere(SpherePoint<T>),
    Torus(TorusPoint<T>),
    Euclid(EuclideanPoint<T>),
}

impl<T: Real> Point<T> {
    pub fn space(&self) -> SpaceKind {
        match self {
            Point::Sphere(_) => SpaceKind::Sphere,
            Point::Torus(_) => SpaceKind::Torus,
            Point::Euclid(_) => SpaceKind::Euclid,
        }
    }

    /// Ambient coordinates (R^{m+1}, R^4, R^m respectively).
    pub fn ambient(&self) -> Vec<T> {
        match self {
            Point::Sphere(p) => p.coords().to_vec(),
            Point::Torus(p) => p.ambient().to_vec(),
            Point::Euclid(p) => p.coords().to_vec(),
        }
    }

    /// Ambient distance; all paper claims are checked in the ambient metric.
    pub fn dist(&self, other: &Self) -> Result<T, SpaceError> {
        let a = self.ambient();
        let b = other.ambient();
        if self.space() != other.space() || a.len() != b.len() {
            return Err(SpaceError::SpaceMismatch);
        }
        Ok(dist(&a, &b))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        matches!(self.dist(other), Ok(d) if d <= tol)
    }

    pub fn as_sphere(&self) -> Option<&SpherePoint<T>> {
        match self {
            Point::Sphere(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_torus(&self) -> Option<&TorusPoint<T>> {
        match self {
            Point::Torus(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_euclid(&self) -> Option<&EuclideanPoint<T>> {
        match self {
            Point::Euclid(p) => Some(p),
            _ => None,
        }
    }
}

/// Finite set of obstacle points in R^m with the standing position assumptions:
/// nonempty, pairwise distinct, away from the origin, and each xy-projection
/// nonzero.
#[derive(Debug, Clone)]
pub struct ObstacleSet<T: Real> {
    points: Vec<EuclideanPoint<T>>,
    tolerance: T,
}

impl<T: Real> ObstacleSet<T> {
    pub fn new(points: Vec<EuclideanPoint<T>>) -> Result<Self, SpaceError> {
        Self::with_tolerance(points, real(DEFAULT_TOL))
    }

    pub fn with_tolerance(points: Vec<EuclideanPoint<T>>, tolerance: T) -> Result<Self, SpaceError> {
        if points.is_empty() {
            return Err(SpaceError::EmptyObstacleSet);
        }
        let m = points[0].dim();
        for (i, p) in points.iter().enumerate() {
            if p.dim() != m {
                return Err(SpaceError::SpaceMismatch);
            }
            if p.norm() <= tolerance {
                return Err(SpaceError::DegenerateObstacle {
                    index: i,
                    reason: "obstacle at the origin",
                });
            }
            let [x, y] = p.xy();
            if (x * x + y * y).sqrt() <= tolerance {
                return Err(SpaceError::DegenerateObstacle {
                    index: i,
                    reason: "obstacle xy-projection vanishes",
                });
            }
            for q in &points[..i] {
                if p.dist(q) <= tolerance {
                    return Err(SpaceError::DegenerateObstacle {
                        index: i,
                        reason: "duplicate obstacle point",
                    });
                }
            }
        }
        Ok(Self { points, tolerance })
    }

    pub fn points(&self) -> &[EuclideanPoint<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    /// Smallest pairwise distance; `None` for a single obstacle.
    pub fn min_pairwise_distance(&self) -> Option<T> {
        let mut best: Option<T> = None;
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[..i] {
                let d = p.dist(q);
                best = Some(match best {
                    Some(b) => b.min(d),
                    None => d,
                });
            }
        }
        best
    }
}

pub(crate) fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

pub(crate) fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

pub(crate) fn dist<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |acc, (x, y)| acc + (*x - *y) * (*x - *y))
        .sqrt()
}
