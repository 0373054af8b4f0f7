//! Closed-form piecewise paths.
//!
//! Paths are chains of motion primitives, each exactly evaluable at any
//! parameter, so the verifier never sees discretization artifacts. Segment
//! subintervals partition [0,1] and junctions must chain continuously.

use num_complex::Complex;

use crate::real::{real, Real, DEFAULT_TOL};

use super::point::{EuclideanPoint, Point, SpaceKind, SpherePoint, TorusPoint};
use super::SpaceError;

/// A closed-form motion primitive, evaluated on a local parameter s in [0,1].
#[derive(Debug, Clone)]
pub enum Primitive<T: Real> {
    /// Constant path.
    Constant(Point<T>),
    /// Constant-speed shortest arc on a sphere between non-antipodal points.
    SphereGeodesic {
        from: SpherePoint<T>,
        to: SpherePoint<T>,
    },
    /// Circle arc in ambient R^k about a fixed center: planar rotation arcs
    /// on the sphere (fields, detours) and in euclidean space (escape arcs,
    /// obstacle detours). `u`, `w` are orthonormal in-plane directions.
    PlanarArc {
        space: SpaceKind,
        center: Vec<T>,
        u: Vec<T>,
        w: Vec<T>,
        radius: T,
        angle0: T,
        sweep: T,
    },
    /// Straight segment in euclidean space.
    Straight {
        from: EuclideanPoint<T>,
        to: EuclideanPoint<T>,
    },
    /// Arc at linear angular rates on the torus factors; covers horizontal
    /// arcs at fixed height and vertical circle arcs.
    TorusArc {
        start: TorusPoint<T>,
        dh: T,
        dv: T,
    },
}

impl<T: Real> Primitive<T> {
    pub fn eval(&self, s: T) -> Point<T> {
        match self {
            Primitive::Constant(p) => p.clone(),
            Primitive::SphereGeodesic { from, to } => Point::Sphere(slerp_eval(from, to, s)),
            Primitive::PlanarArc {
                space,
                center,
                u,
                w,
                radius,
                angle0,
                sweep,
            } => {
                let phi = *angle0 + s * *sweep;
                let (sin, cos) = phi.sin_cos();
                let coords: Vec<T> = center
                    .iter()
                    .zip(u.iter().zip(w.iter()))
                    .map(|(c, (ui, wi))| *c + *radius * (cos * *ui + sin * *wi))
                    .collect();
                match space {
                    SpaceKind::Sphere => Point::Sphere(
                        SpherePoint::normalized(coords).expect("arc stays away from the origin"),
                    ),
                    _ => Point::Euclid(EuclideanPoint::new(coords).expect("finite arc point")),
                }
            }
            Primitive::Straight { from, to } => {
                let coords: Vec<T> = from
                    .coords()
                    .iter()
                    .zip(to.coords().iter())
                    .map(|(a, b)| *a + s * (*b - *a))
                    .collect();
                Point::Euclid(EuclideanPoint::new(coords).expect("finite segment point"))
            }
            Primitive::TorusArc { start, dh, dv } => {
                let h = start.h * Complex::from_polar(T::one(), *dh * s);
                let v = start.v * Complex::from_polar(T::one(), *dv * s);
                Point::Torus(TorusPoint { h, v })
            }
        }
    }

    pub fn space(&self) -> SpaceKind {
        match self {
            Primitive::Constant(p) => p.space(),
            Primitive::SphereGeodesic { .. } => SpaceKind::Sphere,
            Primitive::PlanarArc { space, .. } => *space,
            Primitive::Straight { .. } => SpaceKind::Euclid,
            Primitive::TorusArc { .. } => SpaceKind::Torus,
        }
    }

    pub fn reversed(&self) -> Self {
        match self {
            Primitive::Constant(p) => Primitive::Constant(p.clone()),
            Primitive::SphereGeodesic { from, to } => Primitive::SphereGeodesic {
                from: to.clone(),
                to: from.clone(),
            },
            Primitive::PlanarArc {
                space,
                center,
                u,
                w,
                radius,
                angle0,
                sweep,
            } => Primitive::PlanarArc {
                space: *space,
                center: center.clone(),
                u: u.clone(),
                w: w.clone(),
                radius: *radius,
                angle0: *angle0 + *sweep,
                sweep: -*sweep,
            },
            Primitive::Straight { from, to } => Primitive::Straight {
                from: to.clone(),
                to: from.clone(),
            },
            Primitive::TorusArc { start, dh, dv } => {
                let end = match (Primitive::TorusArc {
                    start: start.clone(),
                    dh: *dh,
                    dv: *dv,
                })
                .eval(T::one())
                {
                    Point::Torus(p) => p,
                    _ => unreachable!(),
                };
                Primitive::TorusArc {
                    start: end,
                    dh: -*dh,
                    dv: -*dv,
                }
            }
        }
    }
}

fn slerp_eval<T: Real>(from: &SpherePoint<T>, to: &SpherePoint<T>, s: T) -> SpherePoint<T> {
    let theta = from.angle_to(to);
    if theta < real(1e-8) {
        // Nearly coincident endpoints: normalized lerp, exact at s = 0, 1.
        let coords: Vec<T> = from
            .coords()
            .iter()
            .zip(to.coords().iter())
            .map(|(a, b)| *a + s * (*b - *a))
            .collect();
        return SpherePoint::normalized(coords).expect("nearby points never cancel");
    }
    let sin_theta = theta.sin();
    let ca = ((T::one() - s) * theta).sin() / sin_theta;
    let cb = (s * theta).sin() / sin_theta;
    let coords: Vec<T> = from
        .coords()
        .iter()
        .zip(to.coords().iter())
        .map(|(a, b)| ca * *a + cb * *b)
        .collect();
    SpherePoint::normalized(coords).expect("interior slerp points are nonzero")
}

/// A piecewise closed-form path [0,1] -> space.
#[derive(Debug, Clone)]
pub struct PathFn<T: Real> {
    space: SpaceKind,
    /// (primitive, subinterval start, subinterval end); subintervals
    /// partition [0,1] in order.
    segments: Vec<(Primitive<T>, T, T)>,
}

impl<T: Real> PathFn<T> {
    /// Builds a path from primitives with the given relative durations.
    pub fn from_weighted(
        space: SpaceKind,
        pieces: Vec<(Primitive<T>, T)>,
    ) -> Result<Self, SpaceError> {
        if pieces.is_empty() {
            return Err(SpaceError::EmptyPath);
        }
        let total = pieces
            .iter()
            .fold(T::zero(), |acc, (_, w)| acc + *w);
        if total <= T::zero() {
            return Err(SpaceError::EmptyPath);
        }
        let mut segments = Vec::with_capacity(pieces.len());
        let mut lo = T::zero();
        let n = pieces.len();
        for (i, (prim, w)) in pieces.into_iter().enumerate() {
            if prim.space() != space {
                return Err(SpaceError::SpaceMismatch);
            }
            let hi = if i + 1 == n { T::one() } else { lo + w / total };
            segments.push((prim, lo, hi));
            lo = hi;
        }
        let path = Self { space, segments };
        path.check_junctions()?;
        Ok(path)
    }

    /// Equal-duration chain of primitives.
    pub fn chain(space: SpaceKind, prims: Vec<Primitive<T>>) -> Result<Self, SpaceError> {
        let pieces = prims.into_iter().map(|p| (p, T::one())).collect();
        Self::from_weighted(space, pieces)
    }

    pub fn constant(p: Point<T>) -> Self {
        let space = p.space();
        Self {
            space,
            segments: vec![(Primitive::Constant(p), T::zero(), T::one())],
        }
    }

    fn check_junctions(&self) -> Result<(), SpaceError> {
        let tol = real(DEFAULT_TOL);
        for pair in self.segments.windows(2) {
            let end = pair[0].0.eval(T::one());
            let start = pair[1].0.eval(T::zero());
            let d = end.dist(&start)?;
            if d > tol {
                return Err(SpaceError::DiscontinuousJunction {
                    gap: d.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(())
    }

    pub fn space(&self) -> SpaceKind {
        self.space
    }

    pub fn segments(&self) -> &[(Primitive<T>, T, T)] {
        &self.segments
    }

    pub fn eval(&self, t: T) -> Point<T> {
        let t = t.max(T::zero()).min(T::one());
        for (prim, lo, hi) in &self.segments {
            if t <= *hi {
                let width = *hi - *lo;
                let s = if width > T::zero() {
                    ((t - *lo) / width).max(T::zero()).min(T::one())
                } else {
                    T::zero()
                };
                return prim.eval(s);
            }
        }
        self.segments.last().unwrap().0.eval(T::one())
    }

    pub fn start(&self) -> Point<T> {
        self.segments[0].0.eval(T::zero())
    }

    pub fn end(&self) -> Point<T> {
        self.segments.last().unwrap().0.eval(T::one())
    }

    pub fn reversed(&self) -> Self {
        let mut segments = Vec::with_capacity(self.segments.len());
        for (prim, lo, hi) in self.segments.iter().rev() {
            segments.push((prim.reversed(), T::one() - *hi, T::one() - *lo));
        }
        Self {
            space: self.space,
            segments,
        }
    }

    /// Concatenation with equal time split at 1/2.
    pub fn concat(first: &Self, second: &Self) -> Result<Self, SpaceError> {
        if first.space != second.space {
            return Err(SpaceError::SpaceMismatch);
        }
        let half = real::<T>(0.5);
        let mut segments = Vec::new();
        for (prim, lo, hi) in &first.segments {
            segments.push((prim.clone(), *lo * half, *hi * half));
        }
        for (prim, lo, hi) in &second.segments {
            segments.push((prim.clone(), half + *lo * half, half + *hi * half));
        }
        let path = Self {
            space: first.space,
            segments,
        };
        path.check_junctions()?;
        Ok(path)
    }

    /// Largest observed difference quotient over `pairs` random-ish sample
    /// pairs; a finite Lipschitz-style constant for the continuity tests.
    pub fn estimate_lipschitz(&self, pairs: usize) -> T {
        let mut best = T::zero();
        let n = pairs.max(1);
        for k in 0..n {
            let a = real::<T>((k as f64 + 0.17) / n as f64).min(T::one());
            let b = real::<T>(((k * 7919 + 131) % (n + 1)) as f64 / (n + 1) as f64);
            if (a - b).abs() <= real(1e-12) {
                continue;
            }
            let d = self
                .eval(a)
                .dist(&self.eval(b))
                .expect("same space along one path");
            best = best.max(d / (a - b).abs());
        }
        best
    }
}

/// Uniform (sup over components and samples) ambient distance between two
/// families of paths of the same shape.
pub fn sup_distance<T: Real>(
    p: &[PathFn<T>],
    q: &[PathFn<T>],
    samples: usize,
) -> Result<T, SpaceError> {
    if p.len() != q.len() || p.is_empty() {
        return Err(SpaceError::ShapeMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let samples = samples.max(2);
    let mut worst = T::zero();
    for (a, b) in p.iter().zip(q.iter()) {
        if a.space() != b.space() {
            return Err(SpaceError::SpaceMismatch);
        }
        for k in 0..samples {
            let t = real::<T>(k as f64 / (samples - 1) as f64);
            let d = a.eval(t).dist(&b.eval(t))?;
            worst = worst.max(d);
        }
    }
    Ok(worst)
}

/// Shortest geodesic [u, v] on S^m; errors on (near-)antipodal endpoints.
pub fn slerp_geodesic<T: Real>(
    u: &SpherePoint<T>,
    v: &SpherePoint<T>,
) -> Result<PathFn<T>, SpaceError> {
    if u.coords().len() != v.coords().len() {
        return Err(SpaceError::SpaceMismatch);
    }
    let theta = u.angle_to(v);
    if theta >= T::PI() - real(DEFAULT_TOL) {
        return Err(SpaceError::AntipodalPair);
    }
    if theta == T::zero() {
        return Ok(PathFn::constant(Point::Sphere(u.clone())));
    }
    PathFn::chain(
        SpaceKind::Sphere,
        vec![Primitive::SphereGeodesic {
            from: u.clone(),
            to: v.clone(),
        }],
    )
}

/// Half great circle from `p` to its antipode, leaving in the direction `dir`
/// (unit, orthogonal to `p`).
pub fn half_great_circle<T: Real>(p: &SpherePoint<T>, dir: &[T]) -> PathFn<T> {
    debug_assert!((super::point::norm(dir) - T::one()).abs() < real(1e-6));
    PathFn::chain(
        SpaceKind::Sphere,
        vec![Primitive::PlanarArc {
            space: SpaceKind::Sphere,
            center: vec![T::zero(); p.coords().len()],
            u: p.coords().to_vec(),
            w: dir.to_vec(),
            radius: T::one(),
            angle0: T::zero(),
            sweep: T::PI(),
        }],
    )
    .expect("single-segment arc")
}
