//! The two effective sphere planners and the classical odd-sphere planner.

use crate::real::{real, Real, DEFAULT_TOL};
use crate::spaces::{
    half_great_circle, reflect_last, slerp_geodesic, ActionKind, ActionSpec, BrokenMultipath,
    Group, Multipath, PathFn, Point, SpaceKind, SpherePoint, Z2,
};

use super::{DomainFamily, DomainIndex, PlannerError};

fn check_inputs<T: Real>(points: &[SpherePoint<T>]) -> Result<usize, PlannerError> {
    if points.len() < 2 {
        return Err(PlannerError::TooFewPoints);
    }
    let m = points[0].dim();
    if points.iter().any(|p| p.dim() != m) {
        return Err(PlannerError::DimensionMismatch);
    }
    Ok(m)
}

/// Nonvanishing-ish tangent direction: the block rotation J applied to the
/// first even-length coordinate block. For odd m the full J(x) is tangent
/// and never vanishes; for the reflection field the block is the first m
/// coordinates and vanishes exactly at the poles.
fn block_rotate<T: Real>(coords: &[T], len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); coords.len()];
    let mut k = 0;
    while k + 1 < len {
        out[k] = -coords[k + 1];
        out[k + 1] = coords[k];
        k += 2;
    }
    out
}

/// Domain index for the antipodal planner: j = #{i >= 2 : x_i != x_1}.
pub fn sphere_antipodal_domain<T: Real>(points: &[SpherePoint<T>], tol: T) -> usize {
    points[1..]
        .iter()
        .filter(|p| !p.approx_eq(&points[0], tol))
        .count()
}

/// Effective planner for the antipodal action: first path constant at x_1,
/// path i the geodesic [-x_1, x_i] when x_i differs from x_1 and the
/// constant path at x_1 otherwise. Total on (S^m)^n.
pub fn plan_sphere_antipodal_effective<T: Real>(
    points: &[SpherePoint<T>],
) -> Result<(DomainIndex, BrokenMultipath<T>), PlannerError> {
    check_inputs(points)?;
    let n = points.len();
    let tol = real(DEFAULT_TOL);
    let x1 = &points[0];
    let minus_x1 = x1.antipode();

    let mut paths: Vec<PathFn<T>> = Vec::with_capacity(n);
    let mut starts_at_orbitmate: Vec<bool> = Vec::with_capacity(n);
    paths.push(PathFn::constant(Point::Sphere(x1.clone())));
    starts_at_orbitmate.push(false);
    for xi in &points[1..] {
        if xi.approx_eq(x1, tol) {
            paths.push(PathFn::constant(Point::Sphere(x1.clone())));
            starts_at_orbitmate.push(false);
        } else {
            paths.push(slerp_geodesic(&minus_x1, xi)?);
            starts_at_orbitmate.push(true);
        }
    }
    let patch: Vec<Z2> = (0..n - 1)
        .map(|i| {
            if starts_at_orbitmate[i] == starts_at_orbitmate[i + 1] {
                Z2::Id
            } else {
                Z2::Gen
            }
        })
        .collect();
    let action = ActionSpec::new(ActionKind::SphereAntipodal);
    let mp = BrokenMultipath::with_patch(paths, patch, &action)?;
    let j = sphere_antipodal_domain(points, tol);
    Ok((DomainIndex::new(DomainFamily::U, j, n)?, mp))
}

/// Domain index for the reflection planner:
/// j = #{i >= 2 : v_i = -rho(v_1)}.
pub fn sphere_reflection_domain<T: Real>(points: &[SpherePoint<T>], tol: T) -> usize {
    let special = reflect_last(&points[0]).antipode();
    points[1..]
        .iter()
        .filter(|p| p.approx_eq(&special, tol))
        .count()
}

/// The path beta(v) from v to -rho(v), a half turn of the horizontal part
/// inside the hyperplane of constant last coordinate; constant at the poles
/// where the horizontal part vanishes.
fn beta<T: Real>(v: &SpherePoint<T>) -> PathFn<T> {
    let m = v.dim();
    let coords = v.coords();
    let h: Vec<T> = coords[..m].to_vec();
    let h_norm = crate::spaces::norm(&h);
    if h_norm <= real(DEFAULT_TOL) {
        return PathFn::constant(Point::Sphere(v.clone()));
    }
    let mut center = vec![T::zero(); m + 1];
    center[m] = coords[m];
    let mut u = vec![T::zero(); m + 1];
    let mut w_dir = block_rotate(&h, m);
    for k in 0..m {
        u[k] = h[k] / h_norm;
        w_dir[k] = w_dir[k] / h_norm;
    }
    let mut w = vec![T::zero(); m + 1];
    w[..m].copy_from_slice(&w_dir[..m]);
    PathFn::chain(
        SpaceKind::Sphere,
        vec![crate::spaces::Primitive::PlanarArc {
            space: SpaceKind::Sphere,
            center,
            u,
            w,
            radius: h_norm,
            angle0: T::zero(),
            sweep: T::PI(),
        }],
    )
    .expect("single-segment arc")
}

/// Effective planner for the reflection action on S^m with m even:
/// first path constant at v_1; path i the geodesic [rho(v_1), v_i] patched by
/// rho, except that targets equal to -rho(v_1) get the field path beta(v_1)
/// patched by the identity.
pub fn plan_sphere_reflection_effective<T: Real>(
    points: &[SpherePoint<T>],
) -> Result<(DomainIndex, BrokenMultipath<T>), PlannerError> {
    let m = check_inputs(points)?;
    if m % 2 != 0 {
        return Err(PlannerError::OddDimension);
    }
    let n = points.len();
    let tol = real(DEFAULT_TOL);
    let v1 = &points[0];
    let rho_v1 = reflect_last(v1);
    let special = rho_v1.antipode();

    let mut paths: Vec<PathFn<T>> = Vec::with_capacity(n);
    // Group element moving v_1 to the start of each path.
    let mut rel: Vec<Z2> = Vec::with_capacity(n);
    paths.push(PathFn::constant(Point::Sphere(v1.clone())));
    rel.push(Z2::Id);
    for vi in &points[1..] {
        if vi.approx_eq(&special, tol) {
            paths.push(beta(v1));
            rel.push(Z2::Id);
        } else {
            paths.push(slerp_geodesic(&rho_v1, vi)?);
            rel.push(Z2::Gen);
        }
    }
    let patch: Vec<Z2> = (0..n - 1).map(|i| rel[i].compose(rel[i + 1])).collect();
    let action = ActionSpec::new(ActionKind::SphereReflection);
    let mp = BrokenMultipath::with_patch(paths, patch, &action)?;
    let j = sphere_reflection_domain(points, tol);
    Ok((DomainIndex::new(DomainFamily::V, j, n)?, mp))
}

/// Domain index for the classical planner: j = #{i >= 2 : x_i = -x_1}.
pub fn sphere_standard_domain<T: Real>(points: &[SpherePoint<T>], tol: T) -> usize {
    let antipode = points[0].antipode();
    points[1..]
        .iter()
        .filter(|p| p.approx_eq(&antipode, tol))
        .count()
}

/// Classical planner on S^m for odd m (supplies the TC_n(S^m) = n upper
/// bound): geodesics to non-antipodal targets, and the half great circle in
/// the direction of the nonvanishing field J x_1 to antipodal ones. Returns
/// an ordinary multipath based at x_1.
pub fn plan_sphere_standard<T: Real>(
    points: &[SpherePoint<T>],
) -> Result<(DomainIndex, Multipath<T>), PlannerError> {
    let m = check_inputs(points)?;
    if m % 2 != 1 {
        return Err(PlannerError::EvenDimension);
    }
    let n = points.len();
    let tol = real(DEFAULT_TOL);
    let x1 = &points[0];
    let antipode = x1.antipode();

    let mut paths: Vec<PathFn<T>> = Vec::with_capacity(n);
    paths.push(PathFn::constant(Point::Sphere(x1.clone())));
    for xi in &points[1..] {
        if xi.approx_eq(&antipode, tol) {
            // J on all m+1 coordinates (even count) is tangent and unit.
            let dir = block_rotate(x1.coords(), m + 1);
            paths.push(half_great_circle(x1, &dir));
        } else {
            paths.push(slerp_geodesic(x1, xi)?);
        }
    }
    let mp = Multipath::new(paths)?;
    let j = sphere_standard_domain(points, tol);
    Ok((DomainIndex::new(DomainFamily::U, j, n)?, mp))
}
