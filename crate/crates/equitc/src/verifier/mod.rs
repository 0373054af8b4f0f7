//! Numerical property harness: section correctness, partition soundness,
//! within-domain continuity moduli, and instability detection.
//!
//! Randomness is seeded everywhere and the seed travels with every report.
//! Sweeps are independent across base points and могут run on any thread.

mod harness;
mod reports;

pub use harness::{
    EuclidSymmetrizedHarness, FarberHarness, PlannerHarness, PlannerInput, SphereAntipodalHarness,
    SphereReflectionHarness, SphereStandardHarness, TorusEffectualHarness,
};
pub use reports::{
    ContinuityReport, InstabilityReport, PartitionReport, SectionReport, Verdict,
};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::planners::DomainIndex;
use crate::spaces::sup_distance;

/// Errors from verification sweeps.
#[derive(Debug, thiserror::Error)]
pub enum VerifierError {
    #[error("could not keep a perturbation inside domain {domain} after {retries} retries")]
    DomainEscape { domain: String, retries: usize },
    #[error(transparent)]
    Planner(#[from] crate::planners::PlannerError),
    #[error(transparent)]
    Space(#[from] crate::spaces::SpaceError),
}

/// Residual threshold for section checks.
pub const SECTION_TOL: f64 = 1e-9;
/// Final-modulus threshold for continuity sweeps.
pub const CONTINUITY_FINAL: f64 = 0.1;
/// Retry cap for in-domain perturbation resampling.
pub const RETRY_CAP: usize = 100;

/// Checks p `compose` s = id on the sampled inputs: endpoint residuals
/// against the requested targets and start/patching residuals.
pub fn check_section(
    harness: &dyn PlannerHarness,
    inputs: &[PlannerInput],
) -> Result<SectionReport, VerifierError> {
    let mut max_endpoint = 0.0f64;
    let mut max_start = 0.0f64;
    let mut failures = Vec::new();
    for (k, input) in inputs.iter().enumerate() {
        let out = harness.plan(input)?;
        let res = harness.section_residuals(input, &out)?;
        if res.endpoint > SECTION_TOL || res.start > SECTION_TOL {
            failures.push(k);
        }
        max_endpoint = max_endpoint.max(res.endpoint);
        max_start = max_start.max(res.start);
    }
    Ok(SectionReport {
        planner: harness.id().to_string(),
        inputs: inputs.len(),
        max_endpoint_residual: max_endpoint,
        max_start_residual: max_start,
        failures,
        pass_tol: SECTION_TOL,
    })
}

/// Samples `count` random inputs and checks that exactly one domain
/// predicate holds for each; also classifies the constructed witnesses so
/// every domain index is realized.
pub fn check_partition(
    harness: &dyn PlannerHarness,
    count: usize,
    seed: u64,
) -> Result<PartitionReport, VerifierError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let domains = harness.domains();
    let mut per_domain = vec![0usize; domains.len()];
    let mut zero_hits = 0usize;
    let mut double_hits = 0usize;
    let mut process = |input: &PlannerInput,
                       per_domain: &mut Vec<usize>| -> Result<(), VerifierError> {
        let hits: Vec<usize> = domains
            .iter()
            .enumerate()
            .filter(|(_, d)| harness.predicate(d, input))
            .map(|(i, _)| i)
            .collect();
        match hits.len() {
            0 => zero_hits += 1,
            1 => per_domain[hits[0]] += 1,
            _ => double_hits += 1,
        }
        Ok(())
    };
    for _ in 0..count {
        let input = harness.sample(&mut rng);
        process(&input, &mut per_domain)?;
    }
    for d in &domains {
        let w = harness.witness(d, &mut rng)?;
        process(&w, &mut per_domain)?;
    }
    let realized = per_domain.iter().filter(|&&c| c > 0).count();
    Ok(PartitionReport {
        planner: harness.id().to_string(),
        seed,
        samples: count,
        domains: domains.iter().map(|d| d.to_string()).collect(),
        per_domain,
        zero_hits,
        double_hits,
        realized,
        pass: zero_hits == 0 && double_hits == 0 && realized == domains.len(),
    })
}

/// Perturbation sweep inside one domain: for each base point and each delta
/// the perturbed input stays in the same domain (same characteristic data),
/// and the worst sup-distance must decrease with delta and end below
/// [`CONTINUITY_FINAL`].
pub fn continuity_sweep(
    harness: &dyn PlannerHarness,
    domain: &DomainIndex,
    bases: usize,
    deltas: &[f64],
    samples_per_path: usize,
    seed: u64,
) -> Result<ContinuityReport, VerifierError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = vec![0.0f64; deltas.len()];
    for _ in 0..bases {
        let base = harness.witness(domain, &mut rng)?;
        let base_paths = harness.plan(&base)?;
        for (di, &delta) in deltas.iter().enumerate() {
            let mut perturbed = None;
            for _ in 0..RETRY_CAP {
                let cand = harness.perturb(&base, delta, &mut rng)?;
                if harness.predicate(domain, &cand) {
                    perturbed = Some(cand);
                    break;
                }
            }
            let Some(p) = perturbed else {
                return Err(VerifierError::DomainEscape {
                    domain: domain.to_string(),
                    retries: RETRY_CAP,
                });
            };
            let ppaths = harness.plan(&p)?;
            let d = sup_distance(base_paths.paths(), ppaths.paths(), samples_per_path)?;
            worst[di] = worst[di].max(d);
        }
    }
    let monotone = worst.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let final_ok = worst.last().map_or(false, |&d| d < CONTINUITY_FINAL);
    // Lipschitz-like constant: worst modulus over the finest delta.
    let lipschitz = worst
        .last()
        .zip(deltas.last())
        .map(|(&d, &del)| if del > 0.0 { d / del } else { 0.0 })
        .unwrap_or(0.0);
    Ok(ContinuityReport {
        planner: harness.id().to_string(),
        domain: domain.to_string(),
        seed,
        bases,
        deltas: deltas.to_vec(),
        worst_sup_distance: worst,
        monotone,
        lipschitz_estimate: lipschitz,
        pass: monotone && final_ok,
        final_threshold: CONTINUITY_FINAL,
    })
}

/// Evaluates planner outputs along a convergent input sequence against the
/// output at the limit. The verdict is unstable when the tail of the trace
/// stays above max(10 * modulus_floor, 1e-3).
pub fn detect_instability(
    harness: &dyn PlannerHarness,
    sequence: &[PlannerInput],
    limit: &PlannerInput,
    modulus_floor: f64,
    samples_per_path: usize,
) -> Result<InstabilityReport, VerifierError> {
    let limit_paths = harness.plan(limit)?;
    let mut trace = Vec::with_capacity(sequence.len());
    for input in sequence {
        let paths = harness.plan(input)?;
        trace.push(sup_distance(paths.paths(), limit_paths.paths(), samples_per_path)?);
    }
    let threshold = (10.0 * modulus_floor).max(1e-3);
    let tail_len = (trace.len() / 4).max(1);
    let tail = &trace[trace.len() - tail_len..];
    let tail_min = tail.iter().copied().fold(f64::INFINITY, f64::min);
    let unstable = tail.iter().all(|&d| d > threshold);
    Ok(InstabilityReport {
        planner: harness.id().to_string(),
        sequence_len: sequence.len(),
        trace,
        threshold,
        tail_lower_bound: if tail_min.is_finite() { tail_min } else { 0.0 },
        verdict: if unstable {
            Verdict::Unstable
        } else {
            Verdict::Stable
        },
    })
}

/// Uniform random parameter in [lo, hi).
pub(crate) fn uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

/// Standard normal sample (Box-Muller).
pub(crate) fn normal(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let v: f64 = rng.gen::<f64>();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}
