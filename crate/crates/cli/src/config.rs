//! Input files: the functional config (set JSON plus direction and
//! evaluator settings), cone files and point CSVs.

use std::fs::File;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use ulset::analysis::{Fault, MonotoneCone};
use ulset::geometry::json::{SetDocument, SetSpec};
use ulset::scalarization::OrderCone;
use ulset::{Direction, FunctionalHandle, HalfSpace, PointCloud, Strategy};

pub const TMAX_ENV: &str = "ULSET_TMAX";

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum StrategySpec {
    ClosedForm,
    Bisection,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FaultSpec {
    Bias(f64),
    Scale(f64),
    Negate,
}

/// `{"dim", "set", "k", "waive_direction"?, "strategy"?, "t_max"?, "tol"?,
/// "fault"?, "monotone_cone"?, "ybar"?, "assume_cover"?}`. `waive_direction`
/// skips the recession-cone certificate (required for complements);
/// `assume_cover` asserts `Y = bd A + ℝk`, enabling the concavity check.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    dim: usize,
    set: SetSpec,
    k: Vec<f64>,
    #[serde(default)]
    waive_direction: bool,
    #[serde(default)]
    assume_cover: bool,
    strategy: Option<StrategySpec>,
    t_max: Option<f64>,
    tol: Option<f64>,
    fault: Option<FaultSpec>,
    monotone_cone: Option<Vec<Vec<f64>>>,
    ybar: Option<Vec<f64>>,
}

pub struct Config {
    pub handle: FunctionalHandle,
    pub fault: Option<Fault>,
    pub monotone_cone: Option<MonotoneCone>,
    pub ybar: Option<Vec<f64>>,
    pub assume_cover: bool,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_config(path: &Path) -> Result<Config> {
    let raw: ConfigFile = serde_json::from_str(&read(path)?)
        .with_context(|| format!("malformed config {}", path.display()))?;
    let set = SetDocument {
        dim: raw.dim,
        set: raw.set,
    }
    .build()?;
    let mut handle = if raw.waive_direction {
        FunctionalHandle::with_direction(set, Direction::waived(raw.k.clone())?)?
    } else {
        FunctionalHandle::new(set, &raw.k)?
    };
    if let Some(StrategySpec::Bisection) = raw.strategy {
        handle = handle.with_strategy(Strategy::Bisection);
    }
    let t_max = match std::env::var(TMAX_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<f64>()
                .with_context(|| format!("{TMAX_ENV} is not a number: {v:?}"))?,
        ),
        Err(_) => raw.t_max,
    };
    if let Some(t) = t_max {
        handle = handle.with_t_max(t)?;
    }
    if let Some(tol) = raw.tol {
        handle = handle.with_tol(tol)?;
    }
    let fault = raw.fault.map(|f| match f {
        FaultSpec::Bias(c) => Fault::Bias(c),
        FaultSpec::Scale(s) => Fault::Scale(s),
        FaultSpec::Negate => Fault::Negate,
    });
    let monotone_cone = raw
        .monotone_cone
        .map(|g| MonotoneCone::new(raw.dim, g))
        .transpose()?;
    if let Some(y) = &raw.ybar {
        if y.len() != raw.dim {
            bail!("ybar has {} coordinates, expected {}", y.len(), raw.dim);
        }
    }
    Ok(Config {
        handle,
        fault,
        monotone_cone,
        ybar: raw.ybar,
        assume_cover: raw.assume_cover,
    })
}

/// `{"rows": [[…], …], "generators"?: [[…], …]}` describing
/// `C = {x : aᵢ·x ≤ 0}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeFile {
    rows: Vec<Vec<f64>>,
    generators: Option<Vec<Vec<f64>>>,
}

pub fn load_cone(path: &Path) -> Result<OrderCone> {
    let raw: ConeFile = serde_json::from_str(&read(path)?)
        .with_context(|| format!("malformed cone file {}", path.display()))?;
    let rows = raw
        .rows
        .into_iter()
        .map(|a| HalfSpace::new(a, 0.0))
        .collect::<ulset::Result<Vec<_>>>()?;
    Ok(OrderCone::new(rows, raw.generators)?)
}

pub fn load_points(path: &Path) -> Result<PointCloud> {
    let file = File::open(path).with_context(|| format!("cannot read {}", path.display()))?;
    let cloud = PointCloud::from_csv(file)
        .with_context(|| format!("malformed point file {}", path.display()))?;
    if cloud.is_empty() {
        bail!("{} contains no points", path.display());
    }
    Ok(cloud)
}

pub fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .with_context(|| format!("not a number: {p:?}"))
        })
        .collect()
}
