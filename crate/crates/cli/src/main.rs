use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ulset::analysis::{separate, CheckOptions, SeparationMode};
use ulset::evaluator::{contour2d, write_contour_csv};
use ulset::norms::{ConeShiftGauge, OrderUnitNorm};
use ulset::scalarization::{trace_front, OrderCone};
use ulset::{Exec, PointCloud};

mod check;
mod config;

use config::{load_cone, load_config, load_points, parse_list};

/// Functionals with uniform sublevel sets: evaluation, contours, property
/// checks, separation and Pareto scalarization.
#[derive(Parser)]
#[command(name = "ulset", version)]
struct Cli {
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the functional; prints `index,value` lines.
    Eval {
        config: PathBuf,
        /// CSV of points, one per line.
        points: Option<PathBuf>,
        /// A single point, e.g. `--point 0.5,2`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "points")]
        point: Option<String>,
        /// Append `exact` or `bounded`: whether a `-inf`/`nu` value was
        /// decided exactly or only by membership at `∓t_max`.
        #[arg(long)]
        certificate: bool,
    },
    /// Trace a level line of a 2-D functional as CSV polylines.
    Contour {
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        level: f64,
        /// `x0,y0,x1,y1`
        #[arg(long, allow_hyphen_values = true)]
        bbox: String,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites; prints one JSON report per line.
    Check {
        config: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Decide whether a finite point set misses the set (or its interior).
    Separate {
        config: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
    },
    /// Minimize the scalarizing functional over a point cloud for each
    /// reference point.
    Pareto {
        #[arg(long)]
        points: PathBuf,
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Reference points (defaults to the points themselves).
        #[arg(long)]
        refs: Option<PathBuf>,
    },
    /// Order-unit norm (or, with `--gauge`, the gauge of `C + k`).
    Norm {
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "points")]
        point: Option<String>,
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        gauge: bool,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct ConeArgs {
    /// Built-in cone; only `nonneg` (the nonnegative orthant).
    #[arg(long)]
    cone: Option<String>,
    /// JSON cone file `{"rows": [...], "generators": [...]}`.
    #[arg(long)]
    cone_file: Option<PathBuf>,
}

impl ConeArgs {
    fn load(&self, dim: usize) -> Result<OrderCone> {
        match (&self.cone, &self.cone_file) {
            (Some(name), _) if name == "nonneg" => Ok(OrderCone::nonneg_orthant(dim)),
            (Some(name), _) => bail!("unknown cone {name:?}; use nonneg or --cone-file"),
            (None, Some(path)) => {
                let c = load_cone(path)?;
                if c.dim() != dim {
                    bail!("cone has dimension {}, expected {dim}", c.dim());
                }
                Ok(c)
            }
            (None, None) => unreachable!("clap requires one of the cone flags"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Closed,
    Interior,
}

enum Measure {
    Norm(OrderUnitNorm),
    Gauge(ConeShiftGauge),
}

impl Measure {
    fn eval(&self, y: &[f64]) -> ulset::Result<f64> {
        match self {
            Measure::Norm(n) => n.norm(y),
            Measure::Gauge(g) => g.eval(y),
        }
    }
}

/// Outcome of a successful run: whether every property held.
enum Status {
    Ok,
    Failed,
}

fn single_point(s: &str) -> Result<PointCloud> {
    Ok(PointCloud::new(vec![parse_list(s)?])?)
}

fn run(cli: Cli) -> Result<Status> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match cli.cmd {
        Cmd::Eval {
            config,
            points,
            point,
            certificate,
        } => {
            let cfg = load_config(&config)?;
            let cloud = match (points, point) {
                (Some(p), _) => load_points(&p)?,
                (None, Some(s)) => single_point(&s)?,
                (None, None) => bail!("give a point CSV or --point"),
            };
            if certificate {
                for (i, y) in cloud.points().iter().enumerate() {
                    let e = cfg.handle.eval_certified(y)?;
                    let flag = if e.bounded { "bounded" } else { "exact" };
                    writeln!(out, "{i},{},{flag}", e.value)?;
                }
            } else {
                let values = cfg.handle.eval_batch(cloud.points(), Exec::default())?;
                for (i, v) in values.iter().enumerate() {
                    writeln!(out, "{i},{v}")?;
                }
            }
            Status::Ok
        }
        Cmd::Contour {
            config,
            level,
            bbox,
            grid,
            out: path,
        } => {
            let cfg = load_config(&config)?;
            let b = parse_list(&bbox)?;
            let bbox: [f64; 4] = b
                .try_into()
                .map_err(|_| anyhow::anyhow!("--bbox needs x0,y0,x1,y1"))?;
            let lines = contour2d(&cfg.handle, level, bbox, grid, Exec::default())?;
            match path {
                Some(p) => {
                    let f = File::create(&p)
                        .with_context(|| format!("cannot write {}", p.display()))?;
                    write_contour_csv(&lines, BufWriter::new(f))?;
                }
                None => write_contour_csv(&lines, &mut out)?,
            }
            Status::Ok
        }
        Cmd::Check {
            config,
            suite,
            samples,
        } => {
            let cfg = load_config(&config)?;
            let opts = CheckOptions::new(samples, cli.seed);
            let lines = check::run_suites(&cfg, &suite, &opts)?;
            for l in &lines {
                writeln!(out, "{}", l.report.to_json_line())?;
            }
            if lines.iter().any(|l| l.gating && l.report.violated()) {
                Status::Failed
            } else {
                Status::Ok
            }
        }
        Cmd::Separate {
            config,
            points,
            mode,
        } => {
            let cfg = load_config(&config)?;
            let cloud = load_points(&points)?;
            let mode = match mode {
                Mode::Closed => SeparationMode::Closed,
                Mode::Interior => SeparationMode::Interior,
            };
            let verdict = match cfg.fault {
                Some(fault) => separate(
                    &ulset::analysis::Faulty::new(cfg.handle.clone(), fault),
                    &cloud,
                    mode,
                )?,
                None => separate(&cfg.handle, &cloud, mode)?,
            };
            writeln!(out, "{}", serde_json::to_string(&verdict)?)?;
            if verdict.disjoint {
                Status::Ok
            } else {
                Status::Failed
            }
        }
        Cmd::Pareto {
            points,
            cone,
            k,
            refs,
        } => {
            let cloud = load_points(&points)?;
            let cone = cone.load(cloud.dim())?;
            let k = parse_list(&k)?;
            let refs = match refs {
                Some(p) => load_points(&p)?,
                None => cloud.clone(),
            };
            let front = trace_front(&cloud, &cone, &k, refs.points(), Exec::default())?;
            writeln!(out, "ref_index,point_index,value")?;
            for (r, s) in &front.per_reference {
                for i in &s.argmin {
                    writeln!(out, "{r},{i},{}", s.value)?;
                }
            }
            Status::Ok
        }
        Cmd::Norm {
            cone,
            k,
            point,
            points,
            gauge,
        } => {
            let cloud = match (points, point) {
                (Some(p), _) => load_points(&p)?,
                (None, Some(s)) => single_point(&s)?,
                (None, None) => bail!("give --points or --point"),
            };
            let cone = cone.load(cloud.dim())?;
            let k = parse_list(&k)?;
            let measure = if gauge {
                Measure::Gauge(ConeShiftGauge::new(&cone, &k)?)
            } else {
                Measure::Norm(OrderUnitNorm::new(&cone, &k)?)
            };
            for (i, y) in cloud.points().iter().enumerate() {
                writeln!(out, "{i},{}", measure.eval(y)?)?;
            }
            Status::Ok
        }
    };
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
