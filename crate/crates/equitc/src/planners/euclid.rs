//! Motion planning in R^m minus a finite obstacle set.
//!
//! The symmetrized planner routes every component through the origin, with a
//! rotation escape around the z-axis for components sitting on a radial
//! line. The classical two-point planner with semicircle detours is kept as
//! the documented-unstable reference, together with the witness sequence
//! exhibiting its discontinuity.

use crate::real::{real, Real, DEFAULT_TOL};
use crate::spaces::{
    dot, norm, EuclideanPoint, Multipath, ObstacleSet, PathFn, Point, Primitive, SpaceKind,
};

use super::{DomainFamily, DomainIndex, PlannerError};

/// Unit radial directions (one per obstacle) and the escape half-angle.
#[derive(Debug, Clone)]
pub struct RadialData<T: Real> {
    pub radials: Vec<Vec<T>>,
    pub theta: T,
}

/// Radial directions of the obstacles and theta = half the smallest angle
/// between distinct xy-projected radial lines (pi/4 when only one projected
/// line exists).
pub fn radial_data<T: Real>(obs: &ObstacleSet<T>, m: usize) -> Result<RadialData<T>, PlannerError> {
    if obs.dim() != m {
        return Err(PlannerError::DimensionMismatch);
    }
    let tol = obs.tolerance();
    let mut radials = Vec::with_capacity(obs.len());
    let mut projected: Vec<[T; 2]> = Vec::with_capacity(obs.len());
    for (i, p) in obs.points().iter().enumerate() {
        let n = p.norm();
        radials.push(p.coords().iter().map(|c| *c / n).collect());
        let [x, y] = p.xy();
        let pn = (x * x + y * y).sqrt();
        if pn <= tol {
            return Err(PlannerError::DegenerateObstacle {
                index: i,
                reason: "xy-projection vanishes",
            });
        }
        projected.push([x / pn, y / pn]);
    }
    let mut min_angle: Option<T> = None;
    for (i, a) in projected.iter().enumerate() {
        for b in &projected[..i] {
            let cos = (a[0] * b[0] + a[1] * b[1]).abs().min(T::one());
            let angle = cos.acos(); // line angle in [0, pi/2]
            if angle > real(1e-12) {
                min_angle = Some(match min_angle {
                    Some(m) => m.min(angle),
                    None => angle,
                });
            }
        }
    }
    let theta = match min_angle {
        Some(a) => a / real(2.0),
        None => T::FRAC_PI_4(),
    };
    Ok(RadialData { radials, theta })
}

/// Distance from `p` to the line through the origin with unit direction `d`.
fn dist_to_radial<T: Real>(p: &EuclideanPoint<T>, d: &[T]) -> T {
    let along = dot(p.coords(), d);
    let diff: Vec<T> = p
        .coords()
        .iter()
        .zip(d.iter())
        .map(|(c, dir)| *c - along * *dir)
        .collect();
    norm(&diff)
}

fn on_some_radial<T: Real>(p: &EuclideanPoint<T>, radials: &RadialData<T>, tol: T) -> bool {
    radials.radials.iter().any(|d| dist_to_radial(p, d) <= tol)
}

/// Rotation of `p` about the z-axis (the xy-plane block) by `phi`.
fn rotate_z<T: Real>(p: &EuclideanPoint<T>, phi: T) -> EuclideanPoint<T> {
    let c = p.coords();
    let (sin, cos) = phi.sin_cos();
    let mut out = c.to_vec();
    out[0] = c[0] * cos - c[1] * sin;
    out[1] = c[0] * sin + c[1] * cos;
    EuclideanPoint::new(out).expect("rotation preserves finiteness")
}

/// In-plane arc rotating `p` about the z-axis from angle `from` to `to`
/// (angles relative to p's own position).
fn z_rotation_arc<T: Real>(p: &EuclideanPoint<T>, from: T, to: T) -> Primitive<T> {
    let c = p.coords();
    let r = (c[0] * c[0] + c[1] * c[1]).sqrt();
    let mut center = c.to_vec();
    center[0] = T::zero();
    center[1] = T::zero();
    let mut u = vec![T::zero(); c.len()];
    let mut w = vec![T::zero(); c.len()];
    if r > T::zero() {
        u[0] = c[0] / r;
        u[1] = c[1] / r;
        w[0] = -c[1] / r;
        w[1] = c[0] / r;
    } else {
        u[0] = T::one();
        w[1] = T::one();
    }
    Primitive::PlanarArc {
        space: SpaceKind::Euclid,
        center,
        u,
        w,
        radius: r,
        angle0: from,
        sweep: to - from,
    }
}

/// Leg of the symmetrized planner: the path from the origin to `p`; for
/// on-radial components the straight segment runs to the rotated point
/// A_theta p and the arc rotates back onto p.
fn origin_leg<T: Real>(
    p: &EuclideanPoint<T>,
    on_radial: bool,
    theta: T,
) -> Result<PathFn<T>, PlannerError> {
    let m = p.dim();
    let origin = EuclideanPoint::origin(m);
    if !on_radial {
        return Ok(PathFn::chain(
            SpaceKind::Euclid,
            vec![Primitive::Straight {
                from: origin,
                to: p.clone(),
            }],
        )?);
    }
    let escaped = rotate_z(p, theta);
    Ok(PathFn::chain(
        SpaceKind::Euclid,
        vec![
            Primitive::Straight {
                from: origin,
                to: escaped,
            },
            z_rotation_arc(p, theta, T::zero()),
        ],
    )?)
}

/// The symmetrized planner: every component travels from the origin out to
/// its target, with the rotation escape for components on radials. The
/// domain F_i counts the on-radial components.
pub fn plan_euclidean_symmetrized<T: Real>(
    points: &[EuclideanPoint<T>],
    obs: &ObstacleSet<T>,
) -> Result<(DomainIndex, Multipath<T>), PlannerError> {
    if points.is_empty() {
        return Err(PlannerError::TooFewPoints);
    }
    let m = points[0].dim();
    if m < 3 {
        return Err(PlannerError::UnsupportedDimension { m });
    }
    if points.iter().any(|p| p.dim() != m) || obs.dim() != m {
        return Err(PlannerError::DimensionMismatch);
    }
    let tol = real(DEFAULT_TOL);
    for (i, p) in points.iter().enumerate() {
        if p.norm() <= tol {
            return Err(PlannerError::PointAtOrigin { index: i });
        }
        if obs.points().iter().any(|q| p.dist(q) <= tol) {
            return Err(PlannerError::PointOnObstacle { index: i });
        }
    }
    let radials = radial_data(obs, m)?;
    let flags: Vec<bool> = points
        .iter()
        .map(|p| on_some_radial(p, &radials, tol))
        .collect();
    let paths = points
        .iter()
        .zip(flags.iter())
        .map(|(p, &f)| origin_leg(p, f, radials.theta))
        .collect::<Result<Vec<_>, _>>()?;
    let mp = Multipath::new(paths)?;
    let i = flags.iter().filter(|&&f| f).count();
    let n = points.len();
    Ok((DomainIndex::new(DomainFamily::F, i, n)?, mp))
}

/// The two-point planner a -> 0 -> b recovered from the symmetrized legs.
pub fn plan_euclidean_pair<T: Real>(
    a: &EuclideanPoint<T>,
    b: &EuclideanPoint<T>,
    obs: &ObstacleSet<T>,
) -> Result<(DomainIndex, PathFn<T>), PlannerError> {
    let (domain, mp) = plan_euclidean_symmetrized(&[a.clone(), b.clone()], obs)?;
    let out = PathFn::concat(&mp.paths()[0].reversed(), &mp.paths()[1])?;
    Ok((domain, out))
}

/// Scene data for the instability witness: the pair sequence, its limit and
/// the obstacle set they share.
#[derive(Debug, Clone)]
pub struct FarberScene<T: Real> {
    pub sequence: Vec<(EuclideanPoint<T>, EuclideanPoint<T>)>,
    pub limit: (EuclideanPoint<T>, EuclideanPoint<T>),
    pub obstacles: ObstacleSet<T>,
    pub eps: T,
}

/// The classical planner on the stratum of segments meeting the obstacle
/// set: walk the straight segment [a, b]; around every obstacle closer than
/// eps/2 to the segment, splice in the circle arc of radius eps/2 in the
/// plane through a, b parallel to the z-axis. Obstacles hit exactly are
/// rounded by the upper semicircle; near misses take the minor arc, which is
/// what makes the planner discontinuous on the stratum.
pub fn farber_planner_f2<T: Real>(
    a: &EuclideanPoint<T>,
    b: &EuclideanPoint<T>,
    obs: &ObstacleSet<T>,
    eps: T,
) -> Result<PathFn<T>, PlannerError> {
    let m = a.dim();
    if m != 3 || b.dim() != 3 || obs.dim() != 3 {
        return Err(PlannerError::UnsupportedDimension { m });
    }
    let tol = real(DEFAULT_TOL);
    if eps <= T::zero() {
        return Err(PlannerError::BadEps);
    }
    if let Some(dmin) = obs.min_pairwise_distance() {
        if eps >= dmin {
            return Err(PlannerError::BadEps);
        }
    }
    let d: Vec<T> = b
        .coords()
        .iter()
        .zip(a.coords().iter())
        .map(|(x, y)| *x - *y)
        .collect();
    let len = norm(&d);
    if len <= tol {
        return Err(PlannerError::SegmentMisses);
    }
    let dxy = (d[0] * d[0] + d[1] * d[1]).sqrt();
    if dxy <= tol {
        return Err(PlannerError::VerticalSegment);
    }
    let dir: Vec<T> = d.iter().map(|x| *x / len).collect();

    // In-plane orthonormal frame: w1 along the segment, w2 the in-plane
    // "up" direction (Gram-Schmidt of the z-axis).
    let w1 = dir.clone();
    let zdot = w1[2];
    let mut w2 = vec![-zdot * w1[0], -zdot * w1[1], T::one() - zdot * w1[2]];
    let w2n = norm(&w2);
    for c in w2.iter_mut() {
        *c = *c / w2n;
    }

    let radius = eps / real(2.0);
    struct Detour<T> {
        t_in: T,
        t_out: T,
        center: Vec<T>,
        arc_radius: T,
        exact_hit: bool,
    }
    let mut detours: Vec<Detour<T>> = Vec::new();
    let mut hits_any = false;
    for p in obs.points() {
        let rel: Vec<T> = p
            .coords()
            .iter()
            .zip(a.coords().iter())
            .map(|(x, y)| *x - *y)
            .collect();
        let along = dot(&rel, &w1);
        let t_closest = along / len;
        // Perpendicular offset decomposed into in-plane and out-of-plane.
        let in_plane = dot(&rel, &w2);
        let perp: Vec<T> = (0..3)
            .map(|k| rel[k] - along * w1[k] - in_plane * w2[k])
            .collect();
        let off_plane = norm(&perp);
        let d_seg = (in_plane * in_plane + off_plane * off_plane).sqrt();
        if d_seg <= tol && t_closest >= -tol && t_closest <= T::one() + tol {
            hits_any = true;
        }
        if d_seg >= radius {
            continue;
        }
        if t_closest < T::zero() || t_closest > T::one() {
            continue;
        }
        // Entry/exit parameters where the segment crosses the eps/2 sphere.
        let half_chord = (radius * radius - d_seg * d_seg).sqrt();
        let t_in = t_closest - half_chord / len;
        let t_out = t_closest + half_chord / len;
        if t_in <= tol || t_out >= T::one() - tol {
            return Err(PlannerError::EndpointInTube);
        }
        // Circle center: projection of the obstacle onto the plane.
        let center: Vec<T> = (0..3)
            .map(|k| a.coords()[k] + along * w1[k] + in_plane * w2[k])
            .collect();
        let arc_radius = (radius * radius - off_plane * off_plane).sqrt();
        detours.push(Detour {
            t_in,
            t_out,
            center,
            arc_radius,
            exact_hit: d_seg <= tol,
        });
    }
    if !hits_any {
        return Err(PlannerError::SegmentMisses);
    }
    detours.sort_by(|x, y| x.t_in.partial_cmp(&y.t_in).unwrap());

    let point_at = |t: T| -> EuclideanPoint<T> {
        EuclideanPoint::new(
            a.coords()
                .iter()
                .zip(d.iter())
                .map(|(x, dd)| *x + t * *dd)
                .collect(),
        )
        .expect("finite segment point")
    };

    let mut pieces: Vec<(Primitive<T>, T)> = Vec::new();
    let mut cursor = T::zero();
    let two_pi = T::PI() + T::PI();
    for det in &detours {
        if det.t_in > cursor {
            pieces.push((
                Primitive::Straight {
                    from: point_at(cursor),
                    to: point_at(det.t_in),
                },
                det.t_in - cursor,
            ));
        }
        let q_in = point_at(det.t_in);
        let q_out = point_at(det.t_out);
        let angle_of = |q: &EuclideanPoint<T>| -> T {
            let rel: Vec<T> = (0..3).map(|k| q.coords()[k] - det.center[k]).collect();
            dot(&rel, &w2).atan2(dot(&rel, &w1))
        };
        let phi_in = angle_of(&q_in);
        let phi_out = angle_of(&q_out);
        let ccw = {
            let mut s = phi_out - phi_in;
            while s < T::zero() {
                s = s + two_pi;
            }
            while s >= two_pi {
                s = s - two_pi;
            }
            s
        };
        let cw = ccw - two_pi;
        let sweep = if det.exact_hit {
            // Upper semicircle: the arc whose midpoint has positive w2
            // component.
            let mid_up = (phi_in + ccw / real(2.0)).sin();
            if mid_up >= T::zero() {
                ccw
            } else {
                cw
            }
        } else {
            // Minor arc.
            if ccw.abs() <= cw.abs() {
                ccw
            } else {
                cw
            }
        };
        pieces.push((
            Primitive::PlanarArc {
                space: SpaceKind::Euclid,
                center: det.center.clone(),
                u: w1.clone(),
                w: w2.clone(),
                radius: det.arc_radius,
                angle0: phi_in,
                sweep,
            },
            det.t_out - det.t_in,
        ));
        cursor = det.t_out;
    }
    if cursor < T::one() {
        pieces.push((
            Primitive::Straight {
                from: point_at(cursor),
                to: b.clone(),
            },
            T::one() - cursor,
        ));
    }
    Ok(PathFn::from_weighted(SpaceKind::Euclid, pieces)?)
}

/// The witness sequence for the reference planner's discontinuity: k pairs
/// passing exactly through the far obstacle and just below the near one,
/// converging to a pair whose segment passes through both. Everything stays
/// inside the planner's stratum.
pub fn farber_counterexample<T: Real>(k: usize) -> Result<FarberScene<T>, PlannerError> {
    let k = k.max(1);
    let q1 = EuclideanPoint::new(vec![real(1.0), T::zero(), T::zero()]).unwrap();
    let q2 = EuclideanPoint::new(vec![real(3.0), T::zero(), T::zero()]).unwrap();
    let obstacles =
        ObstacleSet::new(vec![q1, q2]).map_err(PlannerError::Space)?;
    let eps = real(0.5);
    let limit = (
        EuclideanPoint::new(vec![real(-1.0), T::zero(), T::zero()]).unwrap(),
        EuclideanPoint::new(vec![real(5.0), T::zero(), T::zero()]).unwrap(),
    );
    let mut sequence = Vec::with_capacity(k);
    for j in 1..=k {
        // Line through q2 = (3,0,0) with slope delta in the xz-plane:
        // passes below q1 by 2*delta, through q2 exactly.
        let delta = real::<T>(0.05) / real(j as f64);
        let a = EuclideanPoint::new(vec![real(-1.0), T::zero(), -real::<T>(4.0) * delta]).unwrap();
        let b = EuclideanPoint::new(vec![real(5.0), T::zero(), real::<T>(2.0) * delta]).unwrap();
        sequence.push((a, b));
    }
    Ok(FarberScene {
        sequence,
        limit,
        obstacles,
        eps,
    })
}
