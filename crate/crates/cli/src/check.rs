//! The `check` subcommand: runs property suites and reports one JSON line
//! per property.

use anyhow::{bail, Result};
use ulset::analysis::{
    check_concave, check_dual_relation, check_monotone, check_recession_inequality,
    check_strictly_quasiconvex, check_subgradient_bound, check_sublevel_identity,
    check_translation_invariance, classify_convexity, estimate_lipschitz, CheckOptions, Faulty,
    PropertyReport, Verdict,
};
use ulset::{recession_cone, FunctionalHandle, LevelFunctional};

use crate::config::Config;

pub const SUITES: [&str; 8] = [
    "sublevel_identity",
    "translation_invariance",
    "recession_inequality",
    "dual_relation",
    "convexity",
    "lipschitz",
    "monotone",
    "subgradient",
];

/// A report plus whether its verdict counts towards the exit code.
/// Convexity flags classify the functional; only a classification that
/// contradicts the structure of the set is a failure.
pub struct Line {
    pub report: PropertyReport,
    pub gating: bool,
}

fn gating(report: PropertyReport) -> Line {
    Line {
        report,
        gating: true,
    }
}

pub fn run_suites(cfg: &Config, suite: &str, opts: &CheckOptions) -> Result<Vec<Line>> {
    let names: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => bail!(
            "unknown suite {s:?}; expected one of {} or all",
            SUITES.join(", ")
        ),
    };
    let mut out = Vec::new();
    for name in names {
        match cfg.fault {
            Some(fault) => run_one(
                &Faulty::new(cfg.handle.clone(), fault),
                cfg,
                name,
                opts,
                &mut out,
            )?,
            None => run_one(&cfg.handle, cfg, name, opts, &mut out)?,
        }
    }
    Ok(out)
}

fn run_one<F: LevelFunctional>(
    f: &F,
    cfg: &Config,
    name: &str,
    opts: &CheckOptions,
    out: &mut Vec<Line>,
) -> Result<()> {
    let h = &cfg.handle;
    match name {
        "sublevel_identity" => out.push(gating(check_sublevel_identity(f, opts))),
        "translation_invariance" => out.push(gating(check_translation_invariance(f, opts))),
        "recession_inequality" => {
            let report = match recession_cone(h.set()) {
                Ok(cone) => {
                    let rec = FunctionalHandle::new(cone.to_set(), h.k())?;
                    check_recession_inequality(f, &rec, opts)?
                }
                Err(ulset::Error::Unsupported(_)) => {
                    PropertyReport::inapplicable(name, opts.samples, opts.seed)
                }
                Err(e) => return Err(e.into()),
            };
            out.push(gating(report));
        }
        "dual_relation" => out.push(gating(check_dual_relation(f, opts))),
        "convexity" => {
            let c = classify_convexity(f, opts);
            let set = h.set();
            let expectations = [
                (set.is_structurally_convex(), &c.convex),
                (set.is_structurally_cone(), &c.positively_homogeneous),
                (
                    set.is_structurally_convex() && set.is_structurally_cone(),
                    &c.sublinear,
                ),
            ];
            let mut consistency =
                PropertyReport::inapplicable("convexity_consistency", opts.samples, opts.seed);
            for (expected, report) in expectations {
                if !expected {
                    continue;
                }
                if report.violated() {
                    consistency.verdict = Verdict::Violated;
                    consistency.witness = report.witness.clone();
                    consistency.max_defect = consistency.max_defect.max(report.max_defect);
                } else if consistency.verdict == Verdict::Inapplicable {
                    consistency.verdict = Verdict::Holds;
                }
            }
            for r in c.reports() {
                out.push(Line {
                    report: r.clone(),
                    gating: false,
                });
            }
            for report in [
                check_strictly_quasiconvex(f, opts),
                check_concave(f, cfg.assume_cover, opts),
            ] {
                out.push(Line {
                    report,
                    gating: false,
                });
            }
            out.push(gating(consistency));
        }
        "lipschitz" => {
            let report = match estimate_lipschitz(h, opts) {
                Ok(est) => est.report,
                Err(ulset::Error::PreconditionFailed(_)) => {
                    PropertyReport::inapplicable(name, opts.samples, opts.seed)
                }
                Err(e) => return Err(e.into()),
            };
            out.push(gating(report));
        }
        "monotone" => match &cfg.monotone_cone {
            Some(cone) => {
                let m = check_monotone(f, cone, false, opts)?;
                out.push(gating(m.functional));
                out.push(gating(m.set_inclusion));
            }
            None => out.push(gating(PropertyReport::inapplicable(
                "monotone",
                opts.samples,
                opts.seed,
            ))),
        },
        "subgradient" => match &cfg.ybar {
            Some(ybar) => out.push(gating(check_subgradient_bound(h, ybar, opts)?)),
            None => out.push(gating(PropertyReport::inapplicable(
                "subgradient_bound",
                opts.samples,
                opts.seed,
            ))),
        },
        _ => unreachable!("suite names are validated"),
    }
    Ok(())
}
