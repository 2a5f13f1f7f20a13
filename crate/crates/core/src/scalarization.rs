//! Scalarization of finite objective clouds with `φ_{a−C,k}`.
//!
//! Minimizing `φ_{a−C,k}` over a finite set `F` picks points that are weakly
//! efficient with respect to the order cone `C`; sweeping the reference
//! point `a` over `F` recovers every weakly efficient point.

use std::collections::{BTreeMap, BTreeSet};

use nalgebra::DMatrix;

use crate::cloud::PointCloud;
use crate::error::{check_dim, Error, Result};
use crate::evaluator::FunctionalHandle;
use crate::extreal::ExtReal;
use crate::geometry::{HalfSpace, SetExpr};
use crate::par::{self, Exec};

/// Ties within this absolute distance of the minimum are all returned.
pub const ARGMIN_TIE: f64 = 1e-9;
/// Row margin for membership in the interior of `C`.
pub const INTERIOR_MARGIN: f64 = 1e-9;

/// Closed convex cone `C = {x : aᵢ·x ≤ 0}` with optional conic generators
/// (used only for sampling `a + C`).
#[derive(Debug, Clone, PartialEq)]
pub struct OrderCone {
    rep: SetExpr,
    generators: Option<Vec<Vec<f64>>>,
}

impl OrderCone {
    pub fn new(rows: Vec<HalfSpace>, generators: Option<Vec<Vec<f64>>>) -> Result<Self> {
        if rows.iter().any(|h| h.offset() != 0.0) {
            return Err(Error::InvalidInput(
                "order cone rows must pass through the origin".into(),
            ));
        }
        let rep = SetExpr::polyhedron(rows)?;
        if let Some(gs) = &generators {
            for g in gs {
                check_dim(rep.dim(), g.len())?;
                if !rep.contains(g, 1e-9)? {
                    return Err(Error::InvalidInput(format!(
                        "generator {g:?} is not in the cone"
                    )));
                }
            }
        }
        Ok(Self { rep, generators })
    }

    /// `ℝᵐ₊` as `{−eᵢ·x ≤ 0}` with the unit vectors as generators.
    pub fn nonneg_orthant(dim: usize) -> Self {
        let unit = |i: usize, s: f64| {
            let mut e = vec![0.0; dim];
            e[i] = s;
            e
        };
        let rows = (0..dim)
            .map(|i| HalfSpace::new(unit(i, -1.0), 0.0).unwrap())
            .collect();
        let generators = (0..dim).map(|i| unit(i, 1.0)).collect();
        Self::new(rows, Some(generators)).expect("orthant is valid")
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn rows(&self) -> &[HalfSpace] {
        self.rep.halfspaces().expect("cone is a polyhedron")
    }

    pub fn as_set(&self) -> &SetExpr {
        &self.rep
    }

    pub fn generators(&self) -> Option<&[Vec<f64>]> {
        self.generators.as_deref()
    }

    /// `−C`.
    pub fn negated(&self) -> SetExpr {
        SetExpr::polyhedron(self.rows().iter().map(HalfSpace::reversed).collect())
            .expect("nonempty rows")
    }

    pub fn contains(&self, y: &[f64], eps: f64) -> Result<bool> {
        self.rep.contains(y, eps)
    }

    /// `y ∈ int C` with margin: every row `aᵢ·y < −margin`.
    pub fn interior_contains(&self, y: &[f64], margin: f64) -> bool {
        self.rows().iter().all(|h| h.excess(y) < -margin)
    }

    /// Pointed iff the rows have full rank (no nonzero `y` with `±y ∈ C`).
    pub fn is_pointed(&self) -> bool {
        let rows = self.rows();
        let m = DMatrix::from_fn(rows.len(), self.dim(), |i, j| rows[i].normal()[j]);
        m.rank(1e-10) == self.dim()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scalarization {
    /// Indices of all minimizers (ties kept).
    pub argmin: Vec<usize>,
    pub value: ExtReal,
}

fn reference_handle(cone: &OrderCone, k: &[f64], a: &[f64]) -> Result<FunctionalHandle> {
    check_dim(cone.dim(), k.len())?;
    check_dim(cone.dim(), a.len())?;
    FunctionalHandle::new(SetExpr::shift(cone.negated(), a.to_vec())?, k)
}

/// `min {φ_{a−C,k}(y) : y ∈ F ∩ dom φ}`.
pub fn scalarize(
    cloud: &PointCloud,
    cone: &OrderCone,
    k: &[f64],
    a: &[f64],
) -> Result<Scalarization> {
    check_dim(cone.dim(), cloud.dim())?;
    let h = reference_handle(cone, k, a)?;
    let values = h.eval_batch(cloud.points(), Exec::Sequential)?;
    Ok(pick_minimizers(&values))
}

fn pick_minimizers(values: &[ExtReal]) -> Scalarization {
    if values.iter().any(|v| v.is_minus_inf()) {
        let argmin = (0..values.len())
            .filter(|&i| values[i].is_minus_inf())
            .collect();
        return Scalarization {
            argmin,
            value: ExtReal::MinusInf,
        };
    }
    let best = values
        .iter()
        .filter_map(|v| v.finite())
        .fold(f64::INFINITY, f64::min);
    if best == f64::INFINITY {
        return Scalarization {
            argmin: Vec::new(),
            value: ExtReal::Nu,
        };
    }
    let argmin = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.finite().is_some_and(|t| t <= best + ARGMIN_TIE))
        .map(|(i, _)| i)
        .collect();
    Scalarization {
        argmin,
        value: ExtReal::Finite(best),
    }
}

/// Brute-force weak efficiency: `y` is kept unless some `z` has
/// `y − z ∈ int C`.
pub fn weakly_efficient(cloud: &PointCloud, cone: &OrderCone) -> Result<Vec<usize>> {
    check_dim(cone.dim(), cloud.dim())?;
    let pts = cloud.points();
    Ok((0..pts.len())
        .filter(|&i| {
            !pts.iter().any(|z| {
                let d: Vec<f64> = pts[i].iter().zip(z).map(|(a, b)| a - b).collect();
                cone.interior_contains(&d, INTERIOR_MARGIN)
            })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrontTrace {
    /// Reference index → scalarization result.
    pub per_reference: BTreeMap<usize, Scalarization>,
    /// Union of all minimizers, sorted and deduplicated.
    pub points: Vec<usize>,
}

/// Scalarizes once per reference point (in parallel under `exec`).
pub fn trace_front(
    cloud: &PointCloud,
    cone: &OrderCone,
    k: &[f64],
    refs: &[Vec<f64>],
    exec: Exec,
) -> Result<FrontTrace> {
    let results = par::map_slice(exec, refs, |a| scalarize(cloud, cone, k, a));
    let mut per_reference = BTreeMap::new();
    let mut union = BTreeSet::new();
    for (i, r) in results.into_iter().enumerate() {
        let r = r?;
        union.extend(r.argmin.iter().copied());
        per_reference.insert(i, r);
    }
    Ok(FrontTrace {
        per_reference,
        points: union.into_iter().collect(),
    })
}
