//! The effectual planner on the antipodal torus.
//!
//! Inputs are a base point x and n-1 orbit classes; the planner classifies
//! the input by its characteristic tuple (eps, chi_1, ..., chi_{n-1}),
//! selects the representative y_i in M_x away from the ingoing boundary
//! circle, and follows the per-case recipes. Vertical circles carry a fixed
//! clockwise orientation, realized as the negative angular direction.

use num_complex::Complex;

use crate::real::{real, Real, DEFAULT_TOL};
use crate::spaces::{
    torus_strata_with, Multipath, PathFn, Point, Primitive, SpaceKind, TorusPoint, TorusStrata,
};

use super::{CharTuple, DomainFamily, DomainIndex, PlannerError};

/// The unique element of the orbit of `z` in M_x away from C_x^I.
pub fn select_representative<T: Real>(
    strata: &TorusStrata<T>,
    z: &TorusPoint<T>,
) -> Result<TorusPoint<T>, PlannerError> {
    let candidates = [z.clone(), z.antipodal()];
    let mut found: Option<TorusPoint<T>> = None;
    for c in candidates {
        if strata.in_m(&c) && !strata.in_ci(&c) {
            match &found {
                // Both orbit points can land here only through tolerance
                // ties; keep the first deterministically if they coincide.
                Some(prev) if !prev.approx_eq(&c, strata.tolerance()) => {
                    return Err(PlannerError::UnclassifiablePoint);
                }
                Some(_) => {}
                None => found = Some(c),
            }
        }
    }
    found.ok_or(PlannerError::UnclassifiablePoint)
}

fn chi_of<T: Real>(strata: &TorusStrata<T>, z: &TorusPoint<T>) -> Result<u8, PlannerError> {
    let orbit = [z.clone(), z.antipodal()];
    // chi = 2 exactly when the orbit is {a_x, b_x}.
    if orbit.iter().any(|p| strata.is_a_x(p) || strata.is_b_x(p)) {
        return Ok(2);
    }
    let members: Vec<&TorusPoint<T>> = orbit.iter().filter(|p| strata.in_m(p)).collect();
    if members.is_empty() {
        return Err(PlannerError::UnclassifiablePoint);
    }
    let in_a: Vec<bool> = members.iter().map(|p| strata.in_a(p)).collect();
    if in_a.iter().all(|&b| b) {
        Ok(1)
    } else if in_a.iter().all(|&b| !b) {
        Ok(0)
    } else {
        Err(PlannerError::UnclassifiablePoint)
    }
}

/// Characteristic tuple of (x, z_1, ..., z_{n-1}).
pub fn char_tuple<T: Real>(
    x: &TorusPoint<T>,
    zs: &[TorusPoint<T>],
) -> Result<CharTuple, PlannerError> {
    char_tuple_with(x, zs, real(DEFAULT_TOL))
}

pub fn char_tuple_with<T: Real>(
    x: &TorusPoint<T>,
    zs: &[TorusPoint<T>],
    tol: T,
) -> Result<CharTuple, PlannerError> {
    let strata = torus_strata_with(x, tol);
    let eps = u8::from(strata.in_e(x));
    let chi = zs
        .iter()
        .map(|z| chi_of(&strata, z))
        .collect::<Result<Vec<_>, _>>()?;
    CharTuple::new(eps, chi)
}

/// Positive angle of the clockwise rotation taking `from` to `to` on the
/// unit circle, in [0, 2pi).
fn clockwise_angle<T: Real>(from: Complex<T>, to: Complex<T>) -> T {
    let raw = (to / from).arg(); // in (-pi, pi]
    let two_pi = T::PI() + T::PI();
    let mut cw = -raw;
    if cw < T::zero() {
        cw = cw + two_pi;
    }
    cw % two_pi
}

/// Sweep (signed, for e^{i sweep}) of the vertical arc from `from` to `to`
/// avoiding the point `avoid`; all three distinct unit complex numbers.
fn sweep_avoiding<T: Real>(from: Complex<T>, to: Complex<T>, avoid: Complex<T>) -> T {
    let two_pi = T::PI() + T::PI();
    let principal = (to / from).arg();
    let complementary = if principal >= T::zero() {
        principal - two_pi
    } else {
        principal + two_pi
    };
    let avoid_angle = (avoid / from).arg();
    let contains = |sweep: T| -> bool {
        if sweep >= T::zero() {
            let mut a = avoid_angle;
            if a < T::zero() {
                a = a + two_pi;
            }
            a <= sweep
        } else {
            let mut a = avoid_angle;
            if a > T::zero() {
                a = a - two_pi;
            }
            a >= sweep
        }
    };
    if contains(principal) {
        complementary
    } else {
        principal
    }
}

struct Recipe<T: Real> {
    segments: Vec<Primitive<T>>,
}

impl<T: Real> Recipe<T> {
    fn new() -> Self {
        Self {
            segments: Vec::new(),
        }
    }

    fn push_vertical(&mut self, at: Complex<T>, from_v: Complex<T>, sweep: T) -> Complex<T> {
        let start = TorusPoint { h: at, v: from_v };
        self.segments.push(Primitive::TorusArc {
            start,
            dh: T::zero(),
            dv: sweep,
        });
        from_v * Complex::from_polar(T::one(), sweep)
    }

    fn push_horizontal(&mut self, from_h: Complex<T>, at_v: Complex<T>, sweep: T) -> Complex<T> {
        let start = TorusPoint { h: from_h, v: at_v };
        self.segments.push(Primitive::TorusArc {
            start,
            dh: sweep,
            dv: T::zero(),
        });
        from_h * Complex::from_polar(T::one(), sweep)
    }

    fn into_path(self, x: &TorusPoint<T>) -> Result<PathFn<T>, PlannerError> {
        if self.segments.is_empty() {
            return Ok(PathFn::constant(Point::Torus(x.clone())));
        }
        Ok(PathFn::chain(SpaceKind::Torus, self.segments)?)
    }
}

fn alpha_path<T: Real>(
    strata: &TorusStrata<T>,
    eps: u8,
    chi: u8,
    y: &TorusPoint<T>,
) -> Result<PathFn<T>, PlannerError> {
    let x = strata.base().clone();
    let mut recipe = Recipe::new();
    match (eps, chi) {
        (_, 0) => {
            // Canonical path: horizontal shortest arc at height x'' to y',
            // then the vertical arc to y'' that avoids -x''. chi = 0 keeps
            // y off A_x, so y' is interior to M_x and y'' != -x''.
            let h_sweep = (y.h / x.h).arg();
            let mut at_h = x.h;
            if h_sweep.abs() > T::zero() {
                at_h = recipe.push_horizontal(x.h, x.v, h_sweep);
            }
            let v_principal = (y.v / x.v).arg();
            if v_principal.abs() > T::zero() {
                recipe.push_vertical(at_h, x.v, v_principal);
            }
        }
        (_, 2) if eps == 1 => {
            // Clockwise semicircle to height -x'', then the shortest
            // horizontal geodesic to y = a_x (on the equator a_x sits at
            // height -x'').
            let down = recipe.push_vertical(x.h, x.v, -T::PI());
            let h_sweep = (y.h / x.h).arg();
            recipe.push_horizontal(x.h, down, h_sweep);
        }
        (_, 2) => {
            // Clockwise semicircle, horizontal arc to y' = x' e^{i pi/2},
            // then clockwise down C_x^D to a_x.
            let down = recipe.push_vertical(x.h, x.v, -T::PI());
            let h_sweep = (y.h / x.h).arg();
            let at_h = recipe.push_horizontal(x.h, down, h_sweep);
            let cw = clockwise_angle(down, y.v);
            if cw > T::zero() {
                recipe.push_vertical(at_h, down, -cw);
            }
        }
        (0, 1) => {
            // Clockwise semicircle, horizontal arc to y', then if y lies on
            // the outgoing boundary circle the vertical arc avoiding a_x.
            let down = recipe.push_vertical(x.h, x.v, -T::PI());
            let h_sweep = (y.h / x.h).arg();
            let at_h = recipe.push_horizontal(x.h, down, h_sweep);
            if strata.in_cd(y) && (y.v - down).norm() > strata.tolerance() {
                let sweep = sweep_avoiding(down, y.v, strata.a_x.v);
                recipe.push_vertical(at_h, down, sweep);
            }
        }
        (1, 1) => {
            // As (0, 1) but the final leg is the clockwise arc.
            let down = recipe.push_vertical(x.h, x.v, -T::PI());
            let h_sweep = (y.h / x.h).arg();
            let at_h = recipe.push_horizontal(x.h, down, h_sweep);
            if strata.in_cd(y) && (y.v - down).norm() > strata.tolerance() {
                let cw = clockwise_angle(down, y.v);
                recipe.push_vertical(at_h, down, -cw);
            }
        }
        _ => unreachable!("chi <= 2"),
    }
    recipe.into_path(&x)
}

/// The effectual planner: returns the domain D_t with t the characteristic
/// total, the characteristic tuple, and the multipath (c_x, alpha_1, ...,
/// alpha_{n-1}) based at x, with alpha_i ending inside the orbit of z_i.
pub fn plan_torus_effectual<T: Real>(
    x: &TorusPoint<T>,
    zs: &[TorusPoint<T>],
) -> Result<(DomainIndex, CharTuple, Multipath<T>), PlannerError> {
    plan_torus_effectual_with(x, zs, real(DEFAULT_TOL))
}

pub fn plan_torus_effectual_with<T: Real>(
    x: &TorusPoint<T>,
    zs: &[TorusPoint<T>],
    tol: T,
) -> Result<(DomainIndex, CharTuple, Multipath<T>), PlannerError> {
    if zs.is_empty() {
        return Err(PlannerError::TooFewPoints);
    }
    let n = zs.len() + 1;
    let strata = torus_strata_with(x, tol);
    let tuple = char_tuple_with(x, zs, tol)?;

    let mut paths = vec![PathFn::constant(Point::Torus(x.clone()))];
    for (z, &chi) in zs.iter().zip(tuple.chi.iter()) {
        let y = select_representative(&strata, z)?;
        paths.push(alpha_path(&strata, tuple.eps, chi, &y)?);
    }
    let mp = Multipath::new(paths)?;
    let domain = DomainIndex::new(DomainFamily::D, tuple.total(), n)?;
    Ok((domain, tuple, mp))
}
