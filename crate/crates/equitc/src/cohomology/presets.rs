//! The cohomology rings appearing in the calculations.
//!
//! * `sphere(m)`: H^*(S^m), one generator `w` in degree m with w^2 = 0.
//! * `surface(g)`: H^*(Sigma_g), generators a_1..a_g, b_1..b_g in degree 1
//!   and c in degree 2 with a_i b_j = delta_ij c (and b_i a_i = -c over Z).
//! * `rp(m)`: H^*(RP^m; F_2), truncated polynomial ring on `a` in degree 1.
//! * `nonorientable(h)`: H^*(N_h; F_2), generators x_1..x_h in degree 1 with
//!   x_i x_j = delta_ij y.

use std::sync::Arc;

use super::coeff::{Coeff, F2};
use super::ring::{BasisMonomial, GradedAlgebra};
use super::AlgebraError;

/// Ring preset names accepted by [`build_ring`] and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingPreset {
    Sphere(u32),
    SurfaceZ(u32),
    SurfaceF2(u32),
    RpF2(u32),
    NonorientableF2(u32),
}

impl std::fmt::Display for RingPreset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingPreset::Sphere(m) => write!(f, "sphere({m})"),
            RingPreset::SurfaceZ(g) => write!(f, "surface_z({g})"),
            RingPreset::SurfaceF2(g) => write!(f, "surface_f2({g})"),
            RingPreset::RpF2(m) => write!(f, "rp_f2({m})"),
            RingPreset::NonorientableF2(h) => write!(f, "nonorientable_f2({h})"),
        }
    }
}

impl std::str::FromStr for RingPreset {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_lowercase();
        let (name, param) = s
            .strip_suffix(')')
            .and_then(|rest| rest.split_once('('))
            .ok_or_else(|| AlgebraError::BadParams {
                reason: format!("ring preset must look like name(param), got {s:?}"),
            })?;
        let p: u32 = param.trim().parse().map_err(|_| AlgebraError::BadParams {
            reason: format!("bad ring parameter {param:?}"),
        })?;
        match name.trim() {
            "sphere" => Ok(RingPreset::Sphere(p)),
            "surface_z" => Ok(RingPreset::SurfaceZ(p)),
            "surface_f2" => Ok(RingPreset::SurfaceF2(p)),
            "rp_f2" => Ok(RingPreset::RpF2(p)),
            "nonorientable_f2" => Ok(RingPreset::NonorientableF2(p)),
            other => Err(AlgebraError::BadParams {
                reason: format!("unknown ring preset {other:?}"),
            }),
        }
    }
}

/// H^*(S^m) over any coefficient ring.
pub fn sphere_ring<C: Coeff>(m: u32) -> Result<Arc<GradedAlgebra<C>>, AlgebraError> {
    if m < 1 {
        return Err(AlgebraError::BadParams {
            reason: "sphere dimension must be >= 1".into(),
        });
    }
    let basis = vec![
        BasisMonomial {
            name: "1".into(),
            degree: 0,
        },
        BasisMonomial {
            name: "w".into(),
            degree: m,
        },
    ];
    // w^2 = 0 (degree reasons), so the table holds only the unit products.
    GradedAlgebra::from_table(format!("sphere({m})[{}]", C::NAME), basis, 0, vec![1], &[])
}

/// H^*(Sigma_g): basis 1, a_1..a_g, b_1..b_g, c.
pub fn surface_ring<C: Coeff>(g: u32) -> Result<Arc<GradedAlgebra<C>>, AlgebraError> {
    if g < 1 {
        return Err(AlgebraError::BadParams {
            reason: "surface genus must be >= 1".into(),
        });
    }
    let g = g as usize;
    let mut basis = vec![BasisMonomial {
        name: "1".into(),
        degree: 0,
    }];
    for i in 1..=g {
        basis.push(BasisMonomial {
            name: format!("a{i}"),
            degree: 1,
        });
    }
    for i in 1..=g {
        basis.push(BasisMonomial {
            name: format!("b{i}"),
            degree: 1,
        });
    }
    basis.push(BasisMonomial {
        name: "c".into(),
        degree: 2,
    });
    let a = |i: usize| i; // a_i at index i (1-based i)
    let b = |i: usize| g + i;
    let c = 2 * g + 1;
    let mut entries = Vec::new();
    for i in 1..=g {
        entries.push((a(i), b(i), c, C::one()));
        entries.push((b(i), a(i), c, C::one().neg()));
    }
    let generators = (1..=2 * g).collect();
    GradedAlgebra::from_table(
        format!("surface({g})[{}]", C::NAME),
        basis,
        0,
        generators,
        &entries,
    )
}

/// H^*(RP^m; F_2) = F_2[a]/(a^{m+1}).
pub fn rp_ring(m: u32) -> Result<Arc<GradedAlgebra<F2>>, AlgebraError> {
    if m < 1 {
        return Err(AlgebraError::BadParams {
            reason: "projective space dimension must be >= 1".into(),
        });
    }
    let mut basis = vec![BasisMonomial {
        name: "1".into(),
        degree: 0,
    }];
    for k in 1..=m {
        basis.push(BasisMonomial {
            name: if k == 1 {
                "a".into()
            } else {
                format!("a^{k}")
            },
            degree: k,
        });
    }
    let mut entries = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i + j <= m {
                entries.push((i as usize, j as usize, (i + j) as usize, F2::one()));
            }
        }
    }
    GradedAlgebra::from_table(format!("rp({m})[F2]"), basis, 0, vec![1], &entries)
}

/// H^*(N_h; F_2): x_1..x_h in degree 1, x_i x_j = delta_ij y.
pub fn nonorientable_ring(h: u32) -> Result<Arc<GradedAlgebra<F2>>, AlgebraError> {
    if h < 1 {
        return Err(AlgebraError::BadParams {
            reason: "nonorientable genus must be >= 1".into(),
        });
    }
    let h = h as usize;
    let mut basis = vec![BasisMonomial {
        name: "1".into(),
        degree: 0,
    }];
    for i in 1..=h {
        basis.push(BasisMonomial {
            name: format!("x{i}"),
            degree: 1,
        });
    }
    basis.push(BasisMonomial {
        name: "y".into(),
        degree: 2,
    });
    let y = h + 1;
    let entries: Vec<_> = (1..=h).map(|i| (i, i, y, F2::one())).collect();
    GradedAlgebra::from_table(
        format!("nonorientable({h})[F2]"),
        basis,
        0,
        (1..=h).collect(),
        &entries,
    )
}

/// F_2 presets by name.
pub fn build_ring_f2(preset: RingPreset) -> Result<Arc<GradedAlgebra<F2>>, AlgebraError> {
    match preset {
        RingPreset::Sphere(m) => sphere_ring::<F2>(m),
        RingPreset::SurfaceF2(g) => surface_ring::<F2>(g),
        RingPreset::RpF2(m) => rp_ring(m),
        RingPreset::NonorientableF2(h) => nonorientable_ring(h),
        RingPreset::SurfaceZ(_) => Err(AlgebraError::BadParams {
            reason: "surface_z is an integral preset; use build_ring_z".into(),
        }),
    }
}

/// Integral presets by name.
pub fn build_ring_z(preset: RingPreset) -> Result<Arc<GradedAlgebra<i64>>, AlgebraError> {
    match preset {
        RingPreset::Sphere(m) => sphere_ring::<i64>(m),
        RingPreset::SurfaceZ(g) => surface_ring::<i64>(g),
        _ => Err(AlgebraError::BadParams {
            reason: format!("{preset} is an F2 preset; use build_ring_f2"),
        }),
    }
}
