//! Level curves of a planar functional by marching squares.

use std::collections::HashMap;
use std::io::Write;

use super::FunctionalHandle;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Stand-in for `-inf` in the sign tests.
pub const MINUS_INF_PROXY: f64 = -1e30;

pub type Polyline = Vec<[f64; 2]>;

/// Grid edge id and the interpolated crossing on it.
type EdgePoint = (usize, [f64; 2]);

/// Extracts `{φ = level}` over `bbox = [x0, y0, x1, y1]` on a `grid_n × grid_n`
/// cell grid. Cells touching a nu vertex are skipped. Polylines are
/// emitted in the row-major order of their first cell.
pub fn contour2d(
    h: &FunctionalHandle,
    level: f64,
    bbox: [f64; 4],
    grid_n: usize,
    exec: Exec,
) -> Result<Vec<Polyline>> {
    if h.dim() != 2 {
        return Err(Error::InvalidInput(format!(
            "contour needs dim 2, got {}",
            h.dim()
        )));
    }
    if !(8..=4096).contains(&grid_n) {
        return Err(Error::InvalidInput(format!(
            "grid must be in [8, 4096], got {grid_n}"
        )));
    }
    let [x0, y0, x1, y1] = bbox;
    if !(x1 > x0 && y1 > y0) || bbox.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!("degenerate bbox {bbox:?}")));
    }
    if !level.is_finite() {
        return Err(Error::InvalidInput("level must be finite".into()));
    }

    let n = grid_n;
    let dx = (x1 - x0) / n as f64;
    let dy = (y1 - y0) / n as f64;
    let coord = |i: usize, j: usize| [x0 + i as f64 * dx, y0 + j as f64 * dy];

    // f[j][i] = φ(vertex) − level, None for nu
    let field: Vec<Vec<Option<f64>>> = par::map_range(exec, n + 1, |j| {
        (0..=n)
            .map(|i| {
                h.eval_unchecked(&coord(i, j))
                    .to_f64_clamped(MINUS_INF_PROXY)
                    .map(|v| v - level)
            })
            .collect()
    });

    let vertex_id = |i: usize, j: usize| j * (n + 1) + i;
    let h_edge = |i: usize, j: usize| 2 * vertex_id(i, j);
    let v_edge = |i: usize, j: usize| 2 * vertex_id(i, j) + 1;
    let crossing = |p: [f64; 2], q: [f64; 2], fp: f64, fq: f64| {
        let t = if fp == fq {
            0.5
        } else {
            (fp / (fp - fq)).clamp(0.0, 1.0)
        };
        [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]
    };

    let mut segments: Vec<(usize, usize)> = Vec::new();
    let mut points: HashMap<usize, [f64; 2]> = HashMap::new();
    let mut any_cell = false;

    for j in 0..n {
        for i in 0..n {
            let (Some(fbl), Some(fbr), Some(ftr), Some(ftl)) = (
                field[j][i],
                field[j][i + 1],
                field[j + 1][i + 1],
                field[j + 1][i],
            ) else {
                continue;
            };
            any_cell = true;
            let above = |f: f64| f > 0.0;
            let case = above(fbl) as u8
                | (above(fbr) as u8) << 1
                | (above(ftr) as u8) << 2
                | (above(ftl) as u8) << 3;
            if case == 0 || case == 15 {
                continue;
            }
            let (pbl, pbr, ptr, ptl) = (
                coord(i, j),
                coord(i + 1, j),
                coord(i + 1, j + 1),
                coord(i, j + 1),
            );
            let bottom = (h_edge(i, j), crossing(pbl, pbr, fbl, fbr));
            let right = (v_edge(i + 1, j), crossing(pbr, ptr, fbr, ftr));
            let top = (h_edge(i, j + 1), crossing(ptl, ptr, ftl, ftr));
            let left = (v_edge(i, j), crossing(pbl, ptl, fbl, ftl));
            let center_above = above(0.25 * (fbl + fbr + ftr + ftl));
            let pairs: &[(EdgePoint, EdgePoint)] = match case {
                1 | 14 => &[(left, bottom)],
                2 | 13 => &[(bottom, right)],
                3 | 12 => &[(left, right)],
                4 | 11 => &[(right, top)],
                6 | 9 => &[(bottom, top)],
                7 | 8 => &[(left, top)],
                5 if center_above => &[(bottom, right), (top, left)],
                5 => &[(left, bottom), (right, top)],
                10 if center_above => &[(left, bottom), (right, top)],
                10 => &[(bottom, right), (top, left)],
                _ => unreachable!(),
            };
            for &((ea, pa), (eb, pb)) in pairs {
                points.entry(ea).or_insert(pa);
                points.entry(eb).or_insert(pb);
                segments.push((ea, eb));
            }
        }
    }
    if !any_cell {
        return Err(Error::EmptyContour);
    }
    Ok(link(&segments, &points))
}

fn link(segments: &[(usize, usize)], points: &HashMap<usize, [f64; 2]>) -> Vec<Polyline> {
    let mut by_edge: HashMap<usize, Vec<usize>> = HashMap::new();
    for (s, &(a, b)) in segments.iter().enumerate() {
        by_edge.entry(a).or_default().push(s);
        by_edge.entry(b).or_default().push(s);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut chain = std::collections::VecDeque::from([a, b]);
        // walk forward from b, then backward from a
        for forward in [true, false] {
            loop {
                let end = if forward {
                    *chain.back().unwrap()
                } else {
                    *chain.front().unwrap()
                };
                let next = by_edge[&end].iter().copied().find(|&s| !used[s]);
                let Some(s) = next else { break };
                used[s] = true;
                let (p, q) = segments[s];
                let other = if p == end { q } else { p };
                if forward {
                    chain.push_back(other);
                } else {
                    chain.push_front(other);
                }
            }
        }
        out.push(chain.iter().map(|e| points[e]).collect());
    }
    out
}

/// Writes `polyline_id,x,y` rows with a header line.
pub fn write_contour_csv<W: Write>(polylines: &[Polyline], mut w: W) -> std::io::Result<()> {
    writeln!(w, "polyline_id,x,y")?;
    for (id, line) in polylines.iter().enumerate() {
        for p in line {
            writeln!(w, "{id},{},{}", p[0], p[1])?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn dist_to_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
        let (vx, vy) = (b[0] - a[0], b[1] - a[1]);
        let len2 = vx * vx + vy * vy;
        let t = if len2 == 0.0 {
            0.0
        } else {
            (((p[0] - a[0]) * vx + (p[1] - a[1]) * vy) / len2).clamp(0.0, 1.0)
        };
        let (cx, cy) = (a[0] + t * vx, a[1] + t * vy);
        ((p[0] - cx).powi(2) + (p[1] - cy).powi(2)).sqrt()
    }

    fn dist_to_lines(p: [f64; 2], lines: &[Polyline]) -> f64 {
        lines
            .iter()
            .flat_map(|l| l.windows(2).map(move |w| dist_to_segment(p, w[0], w[1])))
            .fold(f64::INFINITY, f64::min)
    }

    /// Boundary of `t·k + (−ℝ²₊)` inside `[-3,3]²`, as two segments.
    fn orthant_boundary(t: f64) -> Vec<Polyline> {
        vec![vec![[t, -3.0], [t, t]], vec![[-3.0, t], [t, t]]]
    }

    fn hausdorff(a: &[Polyline], b: &[Polyline]) -> f64 {
        let sample = |ls: &[Polyline]| -> Vec<[f64; 2]> {
            ls.iter()
                .flat_map(|l| {
                    l.windows(2).flat_map(|w| {
                        (0..=20).map(move |s| {
                            let u = s as f64 / 20.0;
                            [
                                w[0][0] + u * (w[1][0] - w[0][0]),
                                w[0][1] + u * (w[1][1] - w[0][1]),
                            ]
                        })
                    })
                })
                .collect()
        };
        let ab = sample(a)
            .into_iter()
            .map(|p| dist_to_lines(p, b))
            .fold(0.0, f64::max);
        let ba = sample(b)
            .into_iter()
            .map(|p| dist_to_lines(p, a))
            .fold(0.0, f64::max);
        ab.max(ba)
    }

    #[test]
    fn orthant_level_zero_traces_boundary() {
        let h = fixtures::orthant_handle(&[1.0, 1.0]);
        let bbox = [-3.0, -3.0, 3.0, 3.0];
        let n = 60;
        let cell = 6.0 / n as f64;
        let lines = contour2d(&h, 0.0, bbox, n, Exec::default()).unwrap();
        assert!(!lines.is_empty());
        assert!(hausdorff(&lines, &orthant_boundary(0.0)) <= 2.0 * cell);
    }

    #[test]
    fn level_shift_translates_contour() {
        let h = fixtures::orthant_handle(&[1.0, 1.0]);
        let bbox = [-3.0, -3.0, 3.0, 3.0];
        let cell = 6.0 / 64.0;
        let lines = contour2d(&h, 1.0, bbox, 64, Exec::default()).unwrap();
        assert!(hausdorff(&lines, &orthant_boundary(1.0)) <= 2.0 * cell);
    }

    #[test]
    fn notched_union_zero_set() {
        // sublevel set at 0 is A itself; its boundary inside [-3,3]² consists of
        // x = -1 (y > 0), y = 0 (-1 ≤ x ≤ 0), x = 0 (-1 ≤ y ≤ 0), y = -1 (x ≥ 0)
        let h = fixtures::notched_handle();
        let n = 120;
        let cell = 6.0 / n as f64;
        let lines = contour2d(&h, 0.0, [-3.0, -3.0, 3.0, 3.0], n, Exec::default()).unwrap();
        let truth: Vec<Polyline> = vec![
            vec![[-1.0, 3.0], [-1.0, 0.0]],
            vec![[-1.0, 0.0], [0.0, 0.0]],
            vec![[0.0, 0.0], [0.0, -1.0]],
            vec![[0.0, -1.0], [3.0, -1.0]],
        ];
        assert!(hausdorff(&lines, &truth) <= 2.0 * cell);
    }

    #[test]
    fn argument_errors() {
        let h = fixtures::orthant_handle(&[1.0, 1.0]);
        assert!(contour2d(&h, 0.0, [-1.0, -1.0, 1.0, 1.0], 7, Exec::default()).is_err());
        assert!(contour2d(&h, 0.0, [1.0, -1.0, -1.0, 1.0], 16, Exec::default()).is_err());
        // k = (1,0) on the orthant: nu for y₂ > 0, so the whole upper box is empty
        let h = fixtures::orthant_handle(&[1.0, 0.0]);
        assert_eq!(
            contour2d(&h, 0.0, [-1.0, 1.0, 1.0, 2.0], 16, Exec::default()),
            Err(Error::EmptyContour)
        );
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_contour_csv(&[vec![[0.0, 1.0], [2.0, 3.5]]], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "polyline_id,x,y\n0,0,1\n0,2,3.5\n"
        );
    }
}
