//! Multipaths and broken multipaths.

use crate::real::{real, Real, DEFAULT_TOL};

use super::action::{apply_action, ActionSpec, Group, Z2};
use super::path::PathFn;
use super::SpaceError;

/// n paths sharing a common start point: an element of the multipath space.
#[derive(Debug, Clone)]
pub struct Multipath<T: Real> {
    paths: Vec<PathFn<T>>,
}

impl<T: Real> Multipath<T> {
    pub fn new(paths: Vec<PathFn<T>>) -> Result<Self, SpaceError> {
        if paths.is_empty() {
            return Err(SpaceError::EmptyPath);
        }
        let tol = real(DEFAULT_TOL);
        let base = paths[0].start();
        for p in &paths[1..] {
            let d = base.dist(&p.start())?;
            if d > tol {
                return Err(SpaceError::StartMismatch {
                    gap: d.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &[PathFn<T>] {
        &self.paths
    }

    pub fn n(&self) -> usize {
        self.paths.len()
    }
}

/// n paths with start points in one G-orbit; with patching elements the
/// chain condition alpha_i(0) g_i = alpha_{i+1}(0) is enforced, without them
/// only the common-orbit condition.
#[derive(Debug, Clone)]
pub struct BrokenMultipath<T: Real, G: Group = Z2> {
    paths: Vec<PathFn<T>>,
    patch: Option<Vec<G>>,
}

impl<T: Real> BrokenMultipath<T, Z2> {
    pub fn with_patch(
        paths: Vec<PathFn<T>>,
        patch: Vec<Z2>,
        action: &ActionSpec,
    ) -> Result<Self, SpaceError> {
        if paths.is_empty() || patch.len() + 1 != paths.len() {
            return Err(SpaceError::ShapeMismatch {
                left: paths.len(),
                right: patch.len() + 1,
            });
        }
        let tol = real(DEFAULT_TOL);
        for (i, g) in patch.iter().enumerate() {
            let moved = apply_action(action, *g, &paths[i].start())?;
            let d = moved.dist(&paths[i + 1].start())?;
            if d > tol {
                return Err(SpaceError::PatchMismatch {
                    index: i,
                    gap: d.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self {
            paths,
            patch: Some(patch),
        })
    }

    /// The variant without patching data: all starts in one orbit.
    pub fn unpatched(paths: Vec<PathFn<T>>, action: &ActionSpec) -> Result<Self, SpaceError> {
        if paths.is_empty() {
            return Err(SpaceError::EmptyPath);
        }
        let tol = real(DEFAULT_TOL);
        let base = paths[0].start();
        let image = apply_action(action, Z2::Gen, &base)?;
        for p in &paths[1..] {
            let s = p.start();
            if !s.approx_eq(&base, tol) && !s.approx_eq(&image, tol) {
                return Err(SpaceError::StartMismatch {
                    gap: base
                        .dist(&s)
                        .map(|d| d.to_f64().unwrap_or(f64::NAN))
                        .unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { paths, patch: None })
    }

    pub fn paths(&self) -> &[PathFn<T>] {
        &self.paths
    }

    pub fn patch(&self) -> Option<&[Z2]> {
        self.patch.as_deref()
    }

    pub fn n(&self) -> usize {
        self.paths.len()
    }

    /// Re-checks the patching invariant; used by the planner property tests.
    pub fn patch_residual(&self, action: &ActionSpec) -> Result<T, SpaceError> {
        let mut worst = T::zero();
        if let Some(patch) = &self.patch {
            for (i, g) in patch.iter().enumerate() {
                let moved = apply_action(action, *g, &self.paths[i].start())?;
                worst = worst.max(moved.dist(&self.paths[i + 1].start())?);
            }
        }
        Ok(worst)
    }
}
