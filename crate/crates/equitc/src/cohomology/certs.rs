//! The stock certificates behind the bound table.
//!
//! Each constructor builds the target map(s) and the factor list for one
//! lower bound; [`super::verify_certificate`] does the actual checking.

use crate::spaces::ActionKind;

use super::certificate::{parse_expr, Certificate, Expected};
use super::coeff::{Coeff, F2};
use super::map::{
    action_map_f2, action_map_z, effectual_pullback, orbital_pullback, quotient_pullback,
    twisted_diagonal_pullbacks, QuotientPair,
};
use super::presets::{sphere_ring, surface_ring, RingPreset};
use super::ring::Budget;
use super::AlgebraError;

/// Effective antipodal sphere: the n-1 classes W_j = w[1] + w[j] (j = 2..n)
/// have nonzero product, witnessing effv >= n.
pub fn sphere_antipodal_effective(m: u32, n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let ring = sphere_ring::<F2>(m)?;
    let g_star = action_map_f2(RingPreset::Sphere(m), ActionKind::SphereAntipodal)?;
    let targets = twisted_diagonal_pullbacks(&ring, &g_star, n, Budget::default())?;
    let factors: Vec<String> = (2..=n).map(|j| format!("w[1] + w[{j}]")).collect();
    Certificate::new(
        format!("sphere-antipodal-effective[m={m},n={n}]"),
        targets,
        factors,
        Expected::Nonzero,
    )
}

/// Effective reflection surface, genus g >= 2: the 2n-1 classes
/// C = a2[1]+a2[2], A_i = a1[1]+a1[i], B_i = b1[1]+b1[i] have nonzero
/// product, witnessing effv >= 2n.
pub fn surface_reflection_effective(g: u32, n: usize) -> Result<Certificate<F2>, AlgebraError> {
    if g < 2 {
        return Err(AlgebraError::BadParams {
            reason: "the reflection certificate needs genus >= 2".into(),
        });
    }
    let ring = surface_ring::<F2>(g)?;
    let g_star = action_map_f2(RingPreset::SurfaceF2(g), ActionKind::SurfaceReflection)?;
    let targets = twisted_diagonal_pullbacks(&ring, &g_star, n, Budget::default())?;
    let mut factors = vec!["a2[1] + a2[2]".to_string()];
    for i in 2..=n {
        factors.push(format!("a1[1] + a1[{i}]"));
        factors.push(format!("b1[1] + b1[{i}]"));
    }
    Certificate::new(
        format!("surface-reflection-effective[g={g},n={n}]"),
        targets,
        factors,
        Expected::Nonzero,
    )
}

/// Effective rotation surface Sigma_{2l+1} over Z: the 2n classes
/// C_1, C_2, A_2, B_2, ..., A_n, B_n multiply to exactly 2^n c x ... x c,
/// witnessing effv >= 2n+1.
pub fn surface_rotation_effective(l: u32, n: usize) -> Result<Certificate<i64>, AlgebraError> {
    if l < 1 {
        return Err(AlgebraError::BadParams {
            reason: "the rotation certificate needs l >= 1".into(),
        });
    }
    let g = 2 * l + 1;
    let ring = surface_ring::<i64>(g)?;
    let g_star = action_map_z(RingPreset::SurfaceZ(g), ActionKind::SurfaceRotation)?;
    let targets = twisted_diagonal_pullbacks(&ring, &g_star, n, Budget::default())?;
    let mid = l + 1;
    let mut factors = vec![
        format!("a{mid}[1] - a{mid}[2]"),
        format!("b{mid}[1] - b{mid}[2]"),
    ];
    for i in 2..=n {
        factors.push(format!("(a1[1] + a{g}[1]) - (a1[{i}] + a{g}[{i}])"));
        factors.push(format!("(b1[1] + b{g}[1]) - (b1[{i}] + b{g}[{i}])"));
    }
    let domain = targets[0].domain().clone();
    let coeff = 1i64 << n;
    let expected_expr = (1..=n)
        .map(|j| format!("c[{j}]"))
        .collect::<Vec<_>>()
        .join(" * ");
    let expected = parse_expr(&domain, &format!("{coeff} * {expected_expr}"))?;
    Certificate::new(
        format!("surface-rotation-effective[l={l},n={n}]"),
        targets,
        factors,
        Expected::Equals(expected),
    )
}

/// Effectual antipodal torus: (a1[1]+b1[1]+x1[2]) three times, then the
/// telescoping pairs, with product (a1[1]+b1[1]) x1[2]^2 ... x1[n]^2;
/// 2n-1 factors witness effl >= 2n.
pub fn torus_antipodal_effectual(n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let pi_star = quotient_pullback(&QuotientPair::TorusAntipodal)?;
    let target = effectual_pullback(&pi_star, n, Budget::default())?;
    let domain = target.domain().clone();
    let mut factors = vec!["a1[1] + b1[1] + x1[2]".to_string(); 3];
    for j in 3..=n {
        factors.push(format!("x1[{j}] + x1[{}]", j - 1));
        factors.push(format!("x1[{j}] + x2[{}]", j - 1));
    }
    let mut expected_expr = "(a1[1] + b1[1])".to_string();
    for j in 2..=n {
        expected_expr.push_str(&format!(" * x1[{j}]^2"));
    }
    let expected = parse_expr(&domain, &expected_expr)?;
    Certificate::new(
        format!("torus-antipodal-effectual[n={n}]"),
        vec![target],
        factors,
        Expected::Equals(expected),
    )
}

/// Orbital antipodal sphere: the classes a[i] (m copies per slot) have
/// product a^m x ... x a^m != 0 in (RP^m)^n, witnessing orb >= nm + 1.
pub fn sphere_antipodal_orbital(m: u32, n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let pi_star = quotient_pullback(&QuotientPair::SphereAntipodal { m })?;
    let target = orbital_pullback(&pi_star, n, Budget::default())?;
    let mut factors = Vec::new();
    for slot in 1..=n {
        for _ in 0..m {
            factors.push(format!("a[{slot}]"));
        }
    }
    let domain = target.domain().clone();
    let expected_expr = (1..=n)
        .map(|slot| format!("a[{slot}]^{m}"))
        .collect::<Vec<_>>()
        .join(" * ");
    let expected = parse_expr(&domain, &expected_expr)?;
    Certificate::new(
        format!("sphere-antipodal-orbital[m={m},n={n}]"),
        vec![target],
        factors,
        Expected::Equals(expected),
    )
}

/// Effective torus (either free action on Sigma_1; the induced maps are
/// trivial, so the kernel is the classical zero-divisor ideal): the 2n-2
/// usual classes a1[1]+a1[i], b1[1]+b1[i] have nonzero product, witnessing
/// effv >= 2n-1.
pub fn torus_effective_diagonal(n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let ring = surface_ring::<F2>(1)?;
    let g_star = action_map_f2(RingPreset::SurfaceF2(1), ActionKind::SurfaceAntipodal)?;
    let targets = twisted_diagonal_pullbacks(&ring, &g_star, n, Budget::default())?;
    let mut factors = Vec::new();
    for i in 2..=n {
        factors.push(format!("a1[1] + a1[{i}]"));
        factors.push(format!("b1[1] + b1[{i}]"));
    }
    Certificate::new(
        format!("torus-effective-diagonal[n={n}]"),
        targets,
        factors,
        Expected::Nonzero,
    )
}

/// Orbital rotation torus: b1 in every slot plus the a1-differences; 2n-1
/// mod-2 orbital zero divisors with nonzero product, witnessing orb >= 2n.
pub fn torus_rotation_orbital(n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let pi_star = quotient_pullback(&QuotientPair::TorusRotation)?;
    let target = orbital_pullback(&pi_star, n, Budget::default())?;
    let mut factors: Vec<String> = (1..=n).map(|slot| format!("b1[{slot}]")).collect();
    for i in 2..=n {
        factors.push(format!("a1[1] + a1[{i}]"));
    }
    Certificate::new(
        format!("torus-rotation-orbital[n={n}]"),
        vec![target],
        factors,
        Expected::Nonzero,
    )
}

/// A deliberately wrong certificate (its factor is not a zero divisor), for
/// negative-control tests.
pub fn negative_control(n: usize) -> Result<Certificate<F2>, AlgebraError> {
    let ring = sphere_ring::<F2>(2)?;
    let g_star = action_map_f2(RingPreset::Sphere(2), ActionKind::SphereAntipodal)?;
    let targets = twisted_diagonal_pullbacks(&ring, &g_star, n, Budget::default())?;
    // w[1] alone is not a zero divisor: the diagonal sends it to w.
    Certificate::new(
        format!("negative-control[n={n}]"),
        targets,
        vec!["w[1]".to_string()],
        Expected::Nonzero,
    )
}
