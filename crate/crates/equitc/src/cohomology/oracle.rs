//! Brute-force cup-length oracle over F_2.
//!
//! Breadth-first closure of products of kernel basis elements: level k holds
//! the distinct nonzero products of k basis elements (with repetition), so
//! the largest nonempty level is the kernel cup-length. Independent of the
//! certificate path: it never looks at factor expressions, only at a kernel
//! basis (plus optional extra seed classes).

use std::collections::HashSet;
use std::sync::Arc;

use super::coeff::F2;
use super::ring::{Elem, GradedAlgebra};
use super::AlgebraError;

/// Exploration cap; every elementwise product counts against it.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_products: usize,
    pub max_kernel_dim: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_products: 5_000_000,
            max_kernel_dim: 24,
        }
    }
}

/// Largest k <= max_len such that some product of k elements drawn from
/// `kernel_basis` (and `extras`) is nonzero.
pub fn max_cuplength_bruteforce(
    ring: &Arc<GradedAlgebra<F2>>,
    kernel_basis: &[Elem<F2>],
    extras: &[Elem<F2>],
    max_len: usize,
    budget: OracleBudget,
) -> Result<usize, AlgebraError> {
    if kernel_basis.len() > budget.max_kernel_dim {
        return Err(AlgebraError::BudgetExceeded {
            reason: format!(
                "kernel dimension {} exceeds the oracle cap {}",
                kernel_basis.len(),
                budget.max_kernel_dim
            ),
        });
    }
    let mut factors: Vec<Elem<F2>> = kernel_basis.to_vec();
    factors.extend(extras.iter().cloned());
    factors.retain(|f| !f.is_zero());
    if factors.is_empty() {
        return Ok(0);
    }

    let top = ring.top_degree();
    let words = ring.dim().div_ceil(64);
    let pack = |e: &Elem<F2>| -> Vec<u64> {
        let mut v = vec![0u64; words];
        for (i, c) in e.terms() {
            if !c.is_zero() {
                v[i / 64] |= 1 << (i % 64);
            }
        }
        v
    };

    let mut level: Vec<Elem<F2>> = Vec::new();
    {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        for f in &factors {
            if seen.insert(pack(f)) {
                level.push(f.clone());
            }
        }
    }
    let mut best = 1usize;
    let mut explored = 0usize;
    let mut len = 1usize;
    while len < max_len && !level.is_empty() {
        let mut next: Vec<Elem<F2>> = Vec::new();
        let mut next_seen: HashSet<Vec<u64>> = HashSet::new();
        for u in &level {
            // Degree pruning: a product already at the top degree can only
            // survive multiplication by degree-0 classes, which the kernel
            // never contains.
            let du = ring.homogeneous_degree(u);
            for f in &factors {
                if let (Some(a), Some(b)) = (du, ring.homogeneous_degree(f)) {
                    if a + b > top {
                        continue;
                    }
                }
                explored += 1;
                if explored > budget.max_products {
                    return Err(AlgebraError::BudgetExceeded {
                        reason: format!("oracle explored more than {} products", budget.max_products),
                    });
                }
                let p = ring.mul(u, f);
                if p.is_zero() {
                    continue;
                }
                if next_seen.insert(pack(&p)) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        drop(next_seen);
        len += 1;
        best = len;
        level = next;
    }
    Ok(best)
}
