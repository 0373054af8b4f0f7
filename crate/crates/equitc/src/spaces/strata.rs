//! Stratification data of the torus around a base point.
//!
//! For x = (x', x'') the half torus M_x spans horizontal angles within pi/2
//! of x', bounded by the vertical circles C_x^I (at x' e^{-i pi/2}) and C_x^D
//! (at x' e^{+i pi/2}). C_x is the horizontal half-circle at height -x''
//! inside M_x, A_x the union of the three, b_x the corner point of C_x^I and
//! C_x, and a_x = sigma(b_x).

use num_complex::Complex;

use crate::real::{real, Real, DEFAULT_TOL};

use super::point::TorusPoint;

#[derive(Debug, Clone)]
pub struct TorusStrata<T: Real> {
    base: TorusPoint<T>,
    tol: T,
    /// Horizontal anchor of C_x^I: b = x' e^{-i pi/2}.
    pub ci_anchor: Complex<T>,
    /// Horizontal anchor of C_x^D: -b.
    pub cd_anchor: Complex<T>,
    /// Height of the circle C_x: -x''.
    pub c_height: Complex<T>,
    /// b_x = (x' e^{-i pi/2}, -x'').
    pub b_x: TorusPoint<T>,
    /// a_x = sigma(b_x).
    pub a_x: TorusPoint<T>,
}

/// Computes the stratification data at `x` with the default tolerance.
pub fn torus_strata<T: Real>(x: &TorusPoint<T>) -> TorusStrata<T> {
    torus_strata_with(x, real(DEFAULT_TOL))
}

pub fn torus_strata_with<T: Real>(x: &TorusPoint<T>, tol: T) -> TorusStrata<T> {
    let minus_i = Complex::new(T::zero(), -T::one());
    let ci_anchor = x.h * minus_i;
    let cd_anchor = -ci_anchor;
    let c_height = -x.v;
    let b_x = TorusPoint {
        h: ci_anchor,
        v: c_height,
    };
    let a_x = b_x.antipodal();
    TorusStrata {
        base: x.clone(),
        tol,
        ci_anchor,
        cd_anchor,
        c_height,
        b_x,
        a_x,
    }
}

impl<T: Real> TorusStrata<T> {
    pub fn base(&self) -> &TorusPoint<T> {
        &self.base
    }

    pub fn tolerance(&self) -> T {
        self.tol
    }

    /// Signed horizontal angle of p relative to the base, in (-pi, pi].
    pub fn horizontal_angle(&self, p: &TorusPoint<T>) -> T {
        (p.h / self.base.h).arg()
    }

    /// Equator membership: x'' in {1, -1}.
    pub fn in_e(&self, p: &TorusPoint<T>) -> bool {
        p.v.im.abs() <= self.tol && (p.v.re.abs() - T::one()).abs() <= self.tol
    }

    /// Half-torus membership: |horizontal angle| <= pi/2.
    pub fn in_m(&self, p: &TorusPoint<T>) -> bool {
        self.horizontal_angle(p).abs() <= T::FRAC_PI_2() + self.tol
    }

    pub fn in_ci(&self, p: &TorusPoint<T>) -> bool {
        (p.h - self.ci_anchor).norm() <= self.tol
    }

    pub fn in_cd(&self, p: &TorusPoint<T>) -> bool {
        (p.h - self.cd_anchor).norm() <= self.tol
    }

    /// C_x membership: height -x'' and inside M_x.
    pub fn in_c(&self, p: &TorusPoint<T>) -> bool {
        (p.v - self.c_height).norm() <= self.tol && self.in_m(p)
    }

    /// A_x, the union of C_x^I, C_x and C_x^D.
    pub fn in_a(&self, p: &TorusPoint<T>) -> bool {
        self.in_ci(p) || self.in_cd(p) || self.in_c(p)
    }

    pub fn is_b_x(&self, p: &TorusPoint<T>) -> bool {
        p.approx_eq(&self.b_x, self.tol)
    }

    pub fn is_a_x(&self, p: &TorusPoint<T>) -> bool {
        p.approx_eq(&self.a_x, self.tol)
    }
}
