//! Exact evaluation by interval algebra on the line `t ↦ y − t·k`.
//!
//! For every node the set `{t : y − t·k ∈ S}` is a finite union of closed
//! intervals. Polyhedra give one interval (or none), unions merge, and
//! intersections intersect. The functional value is the infimum of the
//! resulting set.

use crate::extreal::ExtReal;
use crate::geometry::{dot, SetExpr, SetKind};

/// Rows with `|a·k|` at or below this are treated as parallel to `k`.
pub(crate) const PARALLEL_EPS: f64 = 1e-9;

type Interval = (f64, f64);

pub(crate) fn eval(set: &SetExpr, y: &[f64], k: &[f64], eps: f64) -> ExtReal {
    infimum(&feasible_times(set, y, k, eps))
}

fn infimum(ts: &[Interval]) -> ExtReal {
    match ts.first() {
        None => ExtReal::Nu,
        Some(&(lo, _)) if lo == f64::NEG_INFINITY => ExtReal::MinusInf,
        Some(&(lo, _)) => ExtReal::Finite(lo),
    }
}

fn feasible_times(set: &SetExpr, y: &[f64], k: &[f64], eps: f64) -> Vec<Interval> {
    match set.kind() {
        SetKind::Polyhedron(hs) => {
            let mut lo = f64::NEG_INFINITY;
            let mut hi = f64::INFINITY;
            for h in hs {
                let c = dot(h.normal(), k);
                let r = h.excess(y);
                if c.abs() <= PARALLEL_EPS {
                    if r > eps {
                        return Vec::new();
                    }
                } else if c > 0.0 {
                    lo = lo.max(r / c);
                } else {
                    hi = hi.min(r / c);
                }
            }
            if lo > hi {
                Vec::new()
            } else {
                vec![(lo, hi)]
            }
        }
        SetKind::Union(ms) => {
            let mut all: Vec<Interval> = ms
                .iter()
                .flat_map(|m| feasible_times(m, y, k, eps))
                .collect();
            merge(&mut all);
            all
        }
        SetKind::Intersection(ms) => {
            let mut acc = vec![(f64::NEG_INFINITY, f64::INFINITY)];
            for m in ms {
                acc = intersect(&acc, &feasible_times(m, y, k, eps));
                if acc.is_empty() {
                    break;
                }
            }
            acc
        }
        SetKind::Shift { base, offset } => {
            let z: Vec<f64> = y.iter().zip(offset).map(|(a, b)| a - b).collect();
            feasible_times(base, &z, k, eps)
        }
        SetKind::ComplementClosure(_) => feasible_times(&set.expand_complement(), y, k, eps),
    }
}

fn merge(v: &mut Vec<Interval>) {
    v.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<Interval> = Vec::with_capacity(v.len());
    for &(lo, hi) in v.iter() {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    *v = out;
}

fn intersect(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    for &(alo, ahi) in a {
        for &(blo, bhi) in b {
            let lo = alo.max(blo);
            let hi = ahi.min(bhi);
            if lo <= hi {
                out.push((lo, hi));
            }
        }
    }
    merge(&mut out);
    out
}
