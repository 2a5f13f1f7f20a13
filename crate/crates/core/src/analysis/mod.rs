//! Seeded, sampled property checks for level-set functionals.
//!
//! Every check draws its samples in fixed-size batches; batch `i` uses a
//! ChaCha8 stream seeded with `seed ^ i`, so a report depends only on
//! `(check, samples, seed)` and not on the execution mode. Batches merge by
//! maximum defect, earliest batch first on ties.

mod fault;
mod lipschitz;
mod separation;
mod suites;

pub use fault::{Fault, Faulty};
pub use lipschitz::{
    active_subgradient, check_subgradient_bound, estimate_lipschitz, LipschitzEstimate,
};
pub use separation::{separate, SeparationMode, SeparationVerdict};
pub use suites::{
    check_concave, check_dual_relation, check_monotone, check_recession_inequality,
    check_set_inclusion, check_strictly_quasiconvex, check_sublevel_identity,
    check_translation_invariance, classify_convexity, ConvexityReport, MonotoneCone,
    MonotoneReport,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::evaluator::{FunctionalHandle, Strategy};
use crate::extreal::ExtReal;
use crate::par::{self, Exec};

/// Defect reported when an inequality fails against `−∞` or a domain
/// mismatch (JSON has no infinity).
pub const INFINITE_DEFECT: f64 = f64::MAX;

const BATCH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<Vec<f64>>,
    pub values: Vec<ExtReal>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub max_defect: f64,
    pub samples: usize,
    pub seed: u64,
    /// Samples that produced a comparison (the rest were outside the domain
    /// or inside a tolerance band).
    #[serde(skip)]
    pub applicable: usize,
}

impl PropertyReport {
    pub fn inapplicable(name: &str, samples: usize, seed: u64) -> Self {
        Self {
            name: name.to_string(),
            verdict: Verdict::Inapplicable,
            witness: None,
            max_defect: 0.0,
            samples,
            seed,
            applicable: 0,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Sample count, seed, sampling box `[-half_width, half_width]ⁿ` and
/// execution mode shared by all checks.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub samples: usize,
    pub seed: u64,
    pub half_width: f64,
    pub exec: Exec,
}

impl CheckOptions {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self {
            samples,
            seed,
            half_width: 10.0,
            exec: Exec::default(),
        }
    }

    pub fn with_half_width(mut self, half_width: f64) -> Self {
        self.half_width = half_width;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

/// Outcome of one sample.
pub(crate) enum Sample {
    Skipped,
    Checked {
        defect: f64,
        violated: bool,
        witness: Witness,
    },
}

impl Sample {
    pub(crate) fn checked(
        defect: f64,
        tol: f64,
        inputs: Vec<Vec<f64>>,
        values: Vec<ExtReal>,
    ) -> Self {
        Sample::Checked {
            defect,
            violated: defect > tol,
            witness: Witness { inputs, values },
        }
    }
}

pub(crate) fn run<F>(name: &str, opts: &CheckOptions, f: F) -> PropertyReport
where
    F: Fn(&mut ChaCha8Rng) -> Sample + Sync + Send,
{
    let n_batches = opts.samples.div_ceil(BATCH);
    let batches = par::map_range(opts.exec, n_batches, |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ b as u64);
        let count = BATCH.min(opts.samples - b * BATCH);
        let mut acc = Merge::default();
        for _ in 0..count {
            acc.push(f(&mut rng));
        }
        acc
    });
    let mut total = Merge::default();
    for b in batches {
        total.absorb(b);
    }
    let verdict = if total.applicable == 0 {
        Verdict::Inapplicable
    } else if total.worst_violation.is_some() {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    PropertyReport {
        name: name.to_string(),
        verdict,
        witness: total.worst_violation.map(|(_, w)| w),
        max_defect: total.max_defect,
        samples: opts.samples,
        seed: opts.seed,
        applicable: total.applicable,
    }
}

#[derive(Default)]
struct Merge {
    applicable: usize,
    max_defect: f64,
    worst_violation: Option<(f64, Witness)>,
}

impl Merge {
    fn push(&mut self, s: Sample) {
        if let Sample::Checked {
            defect,
            violated,
            witness,
        } = s
        {
            self.applicable += 1;
            self.max_defect = self.max_defect.max(defect);
            if violated
                && self
                    .worst_violation
                    .as_ref()
                    .is_none_or(|(d, _)| defect > *d)
            {
                self.worst_violation = Some((defect, witness));
            }
        }
    }

    fn absorb(&mut self, other: Merge) {
        self.applicable += other.applicable;
        self.max_defect = self.max_defect.max(other.max_defect);
        if let Some((d, w)) = other.worst_violation {
            if self.worst_violation.as_ref().is_none_or(|(e, _)| d > *e) {
                self.worst_violation = Some((d, w));
            }
        }
    }
}

pub(crate) fn uniform_point(rng: &mut ChaCha8Rng, dim: usize, half_width: f64) -> Vec<f64> {
    (0..dim)
        .map(|_| rng.gen_range(-half_width..=half_width))
        .collect()
}

/// Draws up to ten points until `accept` holds for the value.
pub(crate) fn sample_in_domain(
    rng: &mut ChaCha8Rng,
    eval: impl Fn(&[f64]) -> ExtReal,
    dim: usize,
    half_width: f64,
    accept: impl Fn(ExtReal) -> bool,
) -> Option<(Vec<f64>, ExtReal)> {
    for _ in 0..10 {
        let y = uniform_point(rng, dim, half_width);
        let v = eval(&y);
        if accept(v) {
            return Some((y, v));
        }
    }
    None
}

/// Comparison tolerance for values from `h`: tight for the exact route, widened
/// by the bisection stopping rule and membership slack otherwise.
pub(crate) fn value_tolerance(h: &FunctionalHandle, magnitude: f64) -> f64 {
    match h.strategy() {
        Strategy::ClosedForm => 1e-7,
        Strategy::Bisection => 1e-7 + 2.0 * h.tol() * (1.0 + magnitude.abs()) + 1e-8,
    }
}

pub(crate) fn add(y: &[f64], z: &[f64], scale: f64) -> Vec<f64> {
    y.iter().zip(z).map(|(a, b)| a + scale * b).collect()
}
