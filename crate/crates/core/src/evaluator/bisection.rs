//! Evaluation through the membership oracle alone.
//!
//! Requires `−k` in the recession cone so that `t ↦ [y − t·k ∈ S]` is a
//! monotone step; results for uncertified directions are unspecified.

use crate::extreal::ExtReal;
use crate::geometry::SetExpr;

pub(crate) fn eval(set: &SetExpr, y: &[f64], k: &[f64], t_max: f64, tol: f64, eps: f64) -> ExtReal {
    let mut z = vec![0.0; y.len()];
    let mut member = |t: f64| {
        for ((zi, yi), ki) in z.iter_mut().zip(y).zip(k) {
            *zi = yi - t * ki;
        }
        set.contains_unchecked(&z, eps)
    };

    let (mut lo, mut hi);
    let mut step = 1.0_f64;
    if member(0.0) {
        hi = 0.0;
        loop {
            let t = (-step).max(-t_max);
            if !member(t) {
                lo = t;
                break;
            }
            hi = t;
            if t <= -t_max {
                return ExtReal::MinusInf;
            }
            step *= 2.0;
        }
    } else {
        lo = 0.0;
        loop {
            let t = step.min(t_max);
            if member(t) {
                hi = t;
                break;
            }
            lo = t;
            if t >= t_max {
                return ExtReal::Nu;
            }
            step *= 2.0;
        }
    }

    while hi - lo > tol * (1.0 + hi.abs()) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if member(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ExtReal::Finite(hi)
}
