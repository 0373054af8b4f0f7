//! JSON export schema for planned multipaths.

use serde::{Deserialize, Serialize};

use crate::real::Real;

use super::path::PathFn;

/// One exported path: `samples[k] = [t, coord...]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathExport {
    pub samples: Vec<Vec<f64>>,
}

/// Wire format for planner output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultipathExport {
    pub space: String,
    pub action: String,
    pub n: usize,
    /// Input points in ambient coordinates, planner-specific order.
    pub inputs: Vec<Vec<f64>>,
    /// Domain-of-continuity label, e.g. "U1", "D3", "F0".
    pub domain: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub patch: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_tuple: Option<Vec<u8>>,
    pub paths: Vec<PathExport>,
}

/// Samples a path family at `density` parameters per path.
pub fn sample_paths<T: Real>(paths: &[PathFn<T>], density: usize) -> Vec<PathExport> {
    let density = density.max(2);
    paths
        .iter()
        .map(|p| {
            let samples = (0..density)
                .map(|k| {
                    let t = k as f64 / (density - 1) as f64;
                    let pt = p.eval(T::from_f64(t).unwrap());
                    let mut row = vec![t];
                    row.extend(pt.ambient().iter().map(|c| c.to_f64().unwrap()));
                    row
                })
                .collect();
            PathExport { samples }
        })
        .collect()
}
