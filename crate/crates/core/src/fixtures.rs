//! Reference sets used throughout the tests, the benches and the CLI docs.

use crate::evaluator::FunctionalHandle;
use crate::geometry::SetExpr;

/// `{y₁ ≤ −1} ∪ {y₁ ≤ 0, y₂ ≤ 0} ∪ {y₂ ≤ −1}`: a closed nonconvex set whose
/// functional along `k = (1, 0)` is `−∞` for `y₂ ≤ −1`, `y₁` for
/// `−1 < y₂ ≤ 0` and `y₁ + 1` for `y₂ > 0`.
pub fn notched_union() -> SetExpr {
    SetExpr::union(vec![
        SetExpr::from_rows(&[(&[1.0, 0.0], -1.0)]).unwrap(),
        SetExpr::from_rows(&[(&[1.0, 0.0], 0.0), (&[0.0, 1.0], 0.0)]).unwrap(),
        SetExpr::from_rows(&[(&[0.0, 1.0], -1.0)]).unwrap(),
    ])
    .unwrap()
}

/// [`notched_union`] with `k = (1, 0)`.
pub fn notched_handle() -> FunctionalHandle {
    FunctionalHandle::new(notched_union(), &[1.0, 0.0]).unwrap()
}

/// Piecewise formula for [`notched_handle`]; `None` stands for `−∞`.
pub fn notched_formula(y: &[f64]) -> Option<f64> {
    if y[1] <= -1.0 {
        None
    } else if y[1] <= 0.0 {
        Some(y[0])
    } else {
        Some(y[0] + 1.0)
    }
}

/// `−ℝⁿ₊` with the given direction.
pub fn orthant_handle(k: &[f64]) -> FunctionalHandle {
    FunctionalHandle::new(SetExpr::nonpositive_orthant(k.len()).unwrap(), k).unwrap()
}
