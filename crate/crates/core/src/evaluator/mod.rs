//! Evaluation of `φ(y) = inf {t ∈ ℝ : y ∈ t·k + A}`.
//!
//! Two independent routes are available. [`Strategy::ClosedForm`] solves the
//! halfspace inequalities along the line `y − t·k` exactly.
//! [`Strategy::Bisection`] only queries membership and brackets the switch
//! point by doubling and halving. The value `nu` marks an empty infimum.

mod bisection;
mod closed_form;
pub mod contour;

pub use contour::{contour2d, write_contour_csv, Polyline};

use crate::error::{check_dim, Error, Result};
use crate::extreal::ExtReal;
use crate::geometry::{certify_direction, dot, Direction, SetExpr, SetKind, MEMBERSHIP_EPS};
use crate::par::{self, Exec};

pub(crate) use closed_form::PARALLEL_EPS;

pub const DEFAULT_T_MAX: f64 = 1e12;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    ClosedForm,
    Bisection,
}

/// A value together with how far its `−∞` / nu classification can be
/// trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: ExtReal,
    /// `true` when the value is `−∞` or nu only because membership held at
    /// `−t_max` (resp. failed at `+t_max`). A true `−∞` needs the whole line
    /// `y + ℝk` inside `A`, which a membership oracle cannot confirm.
    pub bounded: bool,
}

/// A set paired with a certified direction, plus evaluation settings.
#[derive(Debug, Clone)]
pub struct FunctionalHandle {
    set: SetExpr,
    dir: Direction,
    strategy: Strategy,
    t_max: f64,
    tol: f64,
    eps: f64,
}

impl FunctionalHandle {
    /// Certifies `k` against the recession cone of `set`.
    pub fn new(set: SetExpr, k: &[f64]) -> Result<Self> {
        let dir = certify_direction(&set, k)?;
        Self::with_direction(set, dir)
    }

    pub fn with_direction(set: SetExpr, dir: Direction) -> Result<Self> {
        check_dim(set.dim(), dir.dim())?;
        Ok(Self {
            set,
            dir,
            strategy: Strategy::ClosedForm,
            t_max: DEFAULT_T_MAX,
            tol: DEFAULT_TOL,
            eps: MEMBERSHIP_EPS,
        })
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_t_max(mut self, t_max: f64) -> Result<Self> {
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "t_max must be positive, got {t_max}"
            )));
        }
        self.t_max = t_max;
        Ok(self)
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "tol must be positive, got {tol}"
            )));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn set(&self) -> &SetExpr {
        &self.set
    }

    pub fn direction(&self) -> &Direction {
        &self.dir
    }

    pub fn k(&self) -> &[f64] {
        self.dir.k()
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Same set with `λk`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Ok(Self {
            dir: self.dir.scaled(lambda)?,
            ..self.clone()
        })
    }

    /// Same direction and settings on a different set (the direction is
    /// re-certified against it).
    pub fn on_set(&self, set: SetExpr) -> Result<Self> {
        let dir = certify_direction(&set, self.k())?;
        Ok(Self {
            set,
            dir,
            ..self.clone()
        })
    }

    pub fn eval(&self, y: &[f64]) -> Result<ExtReal> {
        check_dim(self.dim(), y.len())?;
        Ok(self.eval_unchecked(y))
    }

    /// [`eval`](Self::eval) with the certificate flag. The closed form
    /// decides `−∞` and nu exactly; bisection only within `|t| ≤ t_max`.
    pub fn eval_certified(&self, y: &[f64]) -> Result<Evaluation> {
        let value = self.eval(y)?;
        let bounded = self.strategy == Strategy::Bisection && !value.is_finite();
        Ok(Evaluation { value, bounded })
    }

    pub(crate) fn eval_unchecked(&self, y: &[f64]) -> ExtReal {
        match self.strategy {
            Strategy::ClosedForm => closed_form::eval(&self.set, y, self.k(), self.eps),
            Strategy::Bisection => {
                bisection::eval(&self.set, y, self.k(), self.t_max, self.tol, self.eps)
            }
        }
    }

    /// Evaluates every point; results are in input order for either mode.
    pub fn eval_batch(&self, points: &[Vec<f64>], exec: Exec) -> Result<Vec<ExtReal>> {
        for p in points {
            check_dim(self.dim(), p.len())?;
        }
        Ok(par::map_slice(exec, points, |p| self.eval_unchecked(p)))
    }

    /// `φ_{A,λk}(y) = φ_{A,k}(y) / λ`.
    pub fn eval_scaled(&self, lambda: f64, y: &[f64]) -> Result<ExtReal> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "lambda must be > 0, got {lambda}"
            )));
        }
        Ok(self.eval(y)?.map_finite(|t| t / lambda))
    }

    /// `φ_{A+ck,k}(y) = φ_{A,k}(y) − c`.
    pub fn eval_level_shifted(&self, c: f64, y: &[f64]) -> Result<ExtReal> {
        if !c.is_finite() {
            return Err(Error::InvalidInput(format!(
                "level shift must be finite, got {c}"
            )));
        }
        Ok(self.eval(y)?.map_finite(|t| t - c))
    }

    /// Checks that the set is a polyhedron or a union of polyhedra whose
    /// rows all satisfy `a·k > 1e-9`, the condition under which the
    /// complement relation is evaluated.
    pub fn check_dual_precondition(&self) -> Result<()> {
        let k = self.k();
        let rows_ok = |s: &SetExpr| match s.kind() {
            SetKind::Polyhedron(hs) => Ok(hs.iter().all(|h| dot(h.normal(), k) > PARALLEL_EPS)),
            _ => Err(Error::PreconditionFailed(
                "complement relation needs a polyhedron or a union of polyhedra".into(),
            )),
        };
        let ok = match self.set.kind() {
            SetKind::Polyhedron(_) => rows_ok(&self.set)?,
            SetKind::Union(ms) => {
                let mut all = true;
                for m in ms {
                    all &= rows_ok(m)?;
                }
                all
            }
            _ => {
                return Err(Error::PreconditionFailed(
                    "complement relation needs a polyhedron or a union of polyhedra".into(),
                ))
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::PreconditionFailed("some row has a·k <= 1e-9".into()))
        }
    }

    /// The functional of the closed complement with direction `−k`.
    pub fn complement_handle(&self) -> Result<FunctionalHandle> {
        self.check_dual_precondition()?;
        let comp = SetExpr::complement_closure(self.set.clone())?;
        let dir = Direction::waived(self.k().iter().map(|x| -x).collect())?;
        Ok(Self {
            set: comp,
            dir,
            ..self.clone()
        })
    }

    /// `−φ_{cl(ℝⁿ∖A),−k}(y)`, which agrees with `φ_{A,k}(y)` on `bd A + ℝk`.
    /// Outside that set the two functionals have different domains and the
    /// result is nu.
    pub fn eval_dual(&self, y: &[f64]) -> Result<ExtReal> {
        let comp = self.complement_handle()?;
        Ok(match comp.eval(y)? {
            ExtReal::Finite(t) => ExtReal::Finite(-t),
            ExtReal::MinusInf | ExtReal::Nu => ExtReal::Nu,
        })
    }
}

/// Anything that can stand in for a handle's evaluator in the property
/// checks. The set and direction always come from [`LevelFunctional::handle`].
pub trait LevelFunctional: Sync {
    fn handle(&self) -> &FunctionalHandle;
    fn value(&self, y: &[f64]) -> ExtReal;
}

impl LevelFunctional for FunctionalHandle {
    fn handle(&self) -> &FunctionalHandle {
        self
    }

    fn value(&self, y: &[f64]) -> ExtReal {
        self.eval_unchecked(y)
    }
}
