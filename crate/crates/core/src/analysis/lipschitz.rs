use rand::Rng;

use super::{add, run, uniform_point, CheckOptions, PropertyReport, Sample, Verdict};
use crate::error::{check_dim, Error, Result};
use crate::evaluator::{FunctionalHandle, LevelFunctional};
use crate::extreal::ExtReal;
use crate::geometry::{dot, norm2};

#[derive(Debug, Clone, PartialEq)]
pub struct LipschitzEstimate {
    /// Largest sampled `|Δφ| / ‖Δy‖₂` over finite pairs.
    pub empirical: f64,
    /// `max ‖aᵢ‖₂ / (aᵢ·k)` over the certificate rows when `k` is interior,
    /// nu otherwise.
    pub bound: ExtReal,
    pub interior: bool,
    pub report: PropertyReport,
}

impl LipschitzEstimate {
    pub fn within_bound(&self) -> bool {
        match self.bound {
            ExtReal::Finite(b) => self.empirical <= b + 1e-6,
            _ => true,
        }
    }
}

/// Empirical Lipschitz constant against the bound carried by the recession
/// cone. Half of the pairs are global, half are local perturbations.
pub fn estimate_lipschitz(h: &FunctionalHandle, opts: &CheckOptions) -> Result<LipschitzEstimate> {
    let cone = h.direction().cone().ok_or_else(|| {
        Error::PreconditionFailed("Lipschitz bound needs a certified recession cone".into())
    })?;
    let k = h.k();
    let interior = h.direction().is_interior();
    let bound = if interior {
        ExtReal::Finite(
            cone.halfspaces()
                .iter()
                .map(|a| norm2(a.normal()) / dot(a.normal(), k))
                .fold(0.0, f64::max),
        )
    } else {
        ExtReal::Nu
    };
    let limit = bound.finite();
    let dim = h.dim();
    let mut report = run("lipschitz", opts, |rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let z = if rng.gen_bool(0.5) {
            uniform_point(rng, dim, opts.half_width)
        } else {
            let d = uniform_point(rng, dim, 1.0);
            add(&y, &d, rng.gen_range(1e-3..=1.0))
        };
        let dist = norm2(&add(&y, &z, -1.0));
        let (vy, vz) = (h.eval_unchecked(&y), h.eval_unchecked(&z));
        match (vy, vz) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) if dist > 1e-12 => {
                let ratio = (a - b).abs() / dist;
                Sample::checked(
                    ratio,
                    limit.map_or(f64::INFINITY, |l| l + 1e-6),
                    vec![y, z],
                    vec![vy, vz],
                )
            }
            _ => Sample::Skipped,
        }
    });
    let empirical = report.max_defect;
    if !interior {
        report.verdict = Verdict::Inapplicable;
    }
    Ok(LipschitzEstimate {
        empirical,
        bound,
        interior,
        report,
    })
}

/// `a_j / (a_j·k)` for the row `j` attaining the closed-form maximum at
/// `ȳ` (lowest index on ties). `None` unless the set is a single convex
/// polyhedron, `k` is interior and `φ(ȳ)` is finite.
pub fn active_subgradient(h: &FunctionalHandle, ybar: &[f64]) -> Result<Option<Vec<f64>>> {
    check_dim(h.dim(), ybar.len())?;
    let Some(rows) = h.set().flatten_polyhedron() else {
        return Ok(None);
    };
    if !h.direction().is_interior() || h.direction().cone().is_none() {
        return Ok(None);
    }
    let Some(value) = h.eval(ybar)?.finite() else {
        return Ok(None);
    };
    let k = h.k();
    let ratios: Vec<f64> = rows
        .iter()
        .map(|r| r.excess(ybar) / dot(r.normal(), k))
        .collect();
    let tie = 1e-12 * (1.0 + value.abs());
    let best = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let j = ratios
        .iter()
        .position(|&r| r >= best - tie)
        .expect("rows are nonempty");
    let aj = rows[j].normal();
    let ajk = dot(aj, k);
    Ok(Some(aj.iter().map(|x| x / ajk).collect()))
}

/// Checks `y*·(y − ȳ) ≤ φ_{0⁺A,k}(y − ȳ)` at sampled `y` for the
/// subgradient `y*` of [`active_subgradient`].
pub fn check_subgradient_bound(
    h: &FunctionalHandle,
    ybar: &[f64],
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    const NAME: &str = "subgradient_bound";
    let Some(ystar) = active_subgradient(h, ybar)? else {
        return Ok(PropertyReport::inapplicable(NAME, opts.samples, opts.seed));
    };
    let cone = h.direction().cone().expect("checked by active_subgradient");
    let rec = FunctionalHandle::with_direction(cone.to_set(), h.direction().clone())?;
    let dim = h.dim();
    Ok(run(NAME, opts, |rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let d = add(&y, ybar, -1.0);
        let lhs = dot(&ystar, &d);
        let rhs = rec.value(&d);
        let defect = match rhs {
            ExtReal::Finite(r) => (lhs - r).max(0.0),
            ExtReal::MinusInf => super::INFINITE_DEFECT,
            ExtReal::Nu => return Sample::Skipped,
        };
        Sample::checked(
            defect,
            1e-7,
            vec![y, ystar.clone()],
            vec![ExtReal::Finite(lhs), rhs],
        )
    }))
}
