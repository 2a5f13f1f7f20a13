#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ulset::scalarization::OrderCone;
use ulset::{ExtReal, FunctionalHandle, HalfSpace, SetExpr};

pub fn point(rng: &mut ChaCha8Rng, n: usize, w: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-w..=w)).collect()
}

/// Random polyhedron or union of polyhedra in ℝⁿ (n = 2, 3) with at most six
/// halfspaces in total, paired with a direction it certifies.
///
/// Rows parallel to `k` are supported on the coordinates where `k` vanishes,
/// so the line `y − t·k` is exact in those coordinates and both evaluation
/// routes see the same domain even at `|t| ~ 1e12`.
pub fn random_fixture(rng: &mut ChaCha8Rng, n: usize) -> FunctionalHandle {
    let with_parallel_rows = rng.gen_bool(0.5);
    let k: Vec<f64> = if with_parallel_rows {
        let zero = rng.gen_range(0..n);
        (0..n)
            .map(|i| {
                if i == zero {
                    0.0
                } else {
                    rng.gen_range(1..=2) as f64 * if rng.gen_bool(0.3) { -1.0 } else { 1.0 }
                }
            })
            .collect()
    } else {
        (0..n).map(|_| rng.gen_range(0.3..=1.5)).collect()
    };
    let zero_coords: Vec<usize> = (0..n).filter(|&i| k[i] == 0.0).collect();
    let kk: f64 = k.iter().map(|x| x * x).sum();

    let total = rng.gen_range(1..=6);
    let mut rows = Vec::with_capacity(total);
    for _ in 0..total {
        let a: Vec<f64> = if !zero_coords.is_empty() && rng.gen_bool(0.3) {
            let mut a = vec![0.0; n];
            for &i in &zero_coords {
                a[i] = rng.gen_range(0.5..=1.5) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
            }
            a
        } else {
            let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            let target = rng.gen_range(0.2..=1.5) * kk.sqrt();
            let ak: f64 = raw.iter().zip(&k).map(|(x, y)| x * y).sum();
            raw.iter()
                .zip(&k)
                .map(|(x, ki)| x + (target - ak) / kk * ki)
                .collect()
        };
        rows.push(HalfSpace::new(a, rng.gen_range(-3.0..=3.0)).unwrap());
    }

    let set = if total >= 2 && rng.gen_bool(0.5) {
        let parts = rng.gen_range(2..=total.min(3));
        let mut members: Vec<Vec<HalfSpace>> = vec![Vec::new(); parts];
        for (i, r) in rows.into_iter().enumerate() {
            let slot = if i < parts {
                i
            } else {
                rng.gen_range(0..parts)
            };
            members[slot].push(r);
        }
        SetExpr::union(
            members
                .into_iter()
                .map(|m| SetExpr::polyhedron(m).unwrap())
                .collect(),
        )
        .unwrap()
    } else {
        SetExpr::polyhedron(rows).unwrap()
    };
    FunctionalHandle::new(set, &k).unwrap()
}

/// Membership-only reference evaluator, written independently of the
/// library's evaluators: scan a coarse grid of `t` for the first member,
/// then halve. Limited to `|t| ≤ t_max`.
pub fn oracle_phi(set: &SetExpr, y: &[f64], k: &[f64], t_max: f64) -> ExtReal {
    let member = |t: f64| {
        let z: Vec<f64> = y.iter().zip(k).map(|(a, b)| a - t * b).collect();
        set.contains(&z, 1e-12).unwrap()
    };
    if member(-t_max) {
        return ExtReal::MinusInf;
    }
    if !member(t_max) {
        return ExtReal::Nu;
    }
    let (mut lo, mut hi) = (-t_max, t_max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if member(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ExtReal::Finite(hi)
}

pub fn close(a: ExtReal, b: ExtReal, tol: f64) -> bool {
    match (a, b) {
        (ExtReal::Finite(x), ExtReal::Finite(y)) => {
            (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
        }
        _ => a == b,
    }
}

pub fn class(v: ExtReal) -> u8 {
    match v {
        ExtReal::Finite(_) => 0,
        ExtReal::MinusInf => 1,
        ExtReal::Nu => 2,
    }
}

/// Random objective cloud with `|F| ≤ 50` in ℝᵐ, occasionally with exact
/// duplicates and coordinate ties.
pub fn random_cloud(rng: &mut ChaCha8Rng, m: usize) -> Vec<Vec<f64>> {
    let size = rng.gen_range(1..=50);
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(size);
    for _ in 0..size {
        if !pts.is_empty() && rng.gen_bool(0.05) {
            let j = rng.gen_range(0..pts.len());
            pts.push(pts[j].clone());
        } else {
            pts.push((0..m).map(|_| rng.gen_range(0.0..10.0)).collect());
        }
    }
    pts
}

/// Simplicial cone `C = M·ℝᵐ₊` with `M` diagonally dominant.
/// Returns the cone and `M⁻¹` (so `x ∈ C ⟺ M⁻¹x ≥ 0`).
pub fn simplicial_cone(rng: &mut ChaCha8Rng, m: usize) -> (OrderCone, Vec<Vec<f64>>) {
    let mat = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            1.0
        } else {
            rng.gen_range(-0.3..=0.3)
        }
    });
    let inv = mat.clone().try_inverse().expect("diagonally dominant");
    let inv_rows: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| inv[(i, j)]).collect())
        .collect();
    let rows = inv_rows
        .iter()
        .map(|r| HalfSpace::new(r.iter().map(|x| -x).collect(), 0.0).unwrap())
        .collect();
    let gens = (0..m)
        .map(|j| (0..m).map(|i| mat[(i, j)]).collect())
        .collect();
    (OrderCone::new(rows, Some(gens)).unwrap(), inv_rows)
}

pub fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn gens_times(cone: &OrderCone, w: &[f64]) -> Vec<f64> {
    let gens = cone.generators().unwrap();
    let mut out = vec![0.0; cone.dim()];
    for (g, c) in gens.iter().zip(w) {
        for (o, gi) in out.iter_mut().zip(g) {
            *o += c * gi;
        }
    }
    out
}
