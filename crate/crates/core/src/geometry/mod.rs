//! Closed subsets of ℝⁿ built from halfspaces.
//!
//! A [`SetExpr`] is a small expression tree over polyhedra (finite
//! intersections of halfspaces `a·x ≤ b`). Every node denotes a closed set.
//! Membership is tested with an absolute slack `eps` on `a·y − b`.

mod cone;
pub mod json;

pub use cone::{certify_direction, recession_cone, Direction, RecessionCone};

use crate::error::{check_dim, Error, Result};

/// Default membership slack on `a·y − b`.
pub const MEMBERSHIP_EPS: f64 = 1e-9;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `{x : a·x ≤ b}`. The normal is kept as given, never rescaled.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    a: Vec<f64>,
    b: f64,
}

impl HalfSpace {
    pub fn new(a: Vec<f64>, b: f64) -> Result<Self> {
        if a.iter().any(|x| !x.is_finite()) || !b.is_finite() {
            return Err(Error::InvalidInput(
                "halfspace has non-finite entries".into(),
            ));
        }
        if norm2(&a) <= 1e-12 {
            return Err(Error::InvalidInput(
                "halfspace normal is (numerically) zero".into(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn normal(&self) -> &[f64] {
        &self.a
    }

    pub fn offset(&self) -> f64 {
        self.b
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    /// `a·y − b`; positive means outside.
    pub fn excess(&self, y: &[f64]) -> f64 {
        dot(&self.a, y) - self.b
    }

    /// The closure of the complement, `{x : a·x ≥ b}`, as `−a·x ≤ −b`.
    pub fn reversed(&self) -> HalfSpace {
        HalfSpace {
            a: self.a.iter().map(|x| -x).collect(),
            b: -self.b,
        }
    }

    /// Same normal through the origin.
    pub fn homogenized(&self) -> HalfSpace {
        HalfSpace {
            a: self.a.clone(),
            b: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SetKind {
    Polyhedron(Vec<HalfSpace>),
    Union(Vec<SetExpr>),
    Intersection(Vec<SetExpr>),
    Shift {
        base: Box<SetExpr>,
        offset: Vec<f64>,
    },
    /// `cl(ℝⁿ ∖ base)` for a polyhedron or a union of polyhedra.
    ComplementClosure(Box<SetExpr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetExpr {
    dim: usize,
    kind: SetKind,
}

impl SetExpr {
    pub fn polyhedron(halfspaces: Vec<HalfSpace>) -> Result<Self> {
        let dim = match halfspaces.first() {
            Some(h) => h.dim(),
            None => {
                return Err(Error::InvalidInput(
                    "polyhedron needs at least one halfspace".into(),
                ))
            }
        };
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        for h in &halfspaces {
            check_dim(dim, h.dim())?;
        }
        Ok(Self {
            dim,
            kind: SetKind::Polyhedron(halfspaces),
        })
    }

    /// Shorthand for a polyhedron given as `(normal, offset)` rows.
    pub fn from_rows(rows: &[(&[f64], f64)]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|(a, b)| HalfSpace::new(a.to_vec(), *b))
            .collect::<Result<Vec<_>>>()?;
        Self::polyhedron(hs)
    }

    /// `−ℝⁿ₊ = {x : xᵢ ≤ 0}`.
    pub fn nonpositive_orthant(dim: usize) -> Result<Self> {
        let hs = (0..dim)
            .map(|i| {
                let mut a = vec![0.0; dim];
                a[i] = 1.0;
                HalfSpace::new(a, 0.0)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::polyhedron(hs)
    }

    pub fn union(members: Vec<SetExpr>) -> Result<Self> {
        let dim = Self::common_dim(&members, "union")?;
        Ok(Self {
            dim,
            kind: SetKind::Union(members),
        })
    }

    pub fn intersection(members: Vec<SetExpr>) -> Result<Self> {
        let dim = Self::common_dim(&members, "intersection")?;
        Ok(Self {
            dim,
            kind: SetKind::Intersection(members),
        })
    }

    /// `offset + S`.
    pub fn shift(base: SetExpr, offset: Vec<f64>) -> Result<Self> {
        check_dim(base.dim, offset.len())?;
        if offset.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(
                "shift offset has non-finite entries".into(),
            ));
        }
        Ok(Self {
            dim: base.dim,
            kind: SetKind::Shift {
                base: Box::new(base),
                offset,
            },
        })
    }

    /// `cl(ℝⁿ ∖ S)` for a polyhedron or a union of polyhedra.
    ///
    /// For `P = ∩{aᵢ·x ≤ bᵢ}` this is `∪{aᵢ·x ≥ bᵢ}`, which equals `ℝⁿ ∖ int P`
    /// when `P` is full-dimensional.
    pub fn complement_closure(base: SetExpr) -> Result<Self> {
        match &base.kind {
            SetKind::Polyhedron(_) => {}
            SetKind::Union(ms) if ms.iter().all(|m| matches!(m.kind, SetKind::Polyhedron(_))) => {}
            _ => {
                return Err(Error::Unsupported(
                    "complement only of a polyhedron or a union of polyhedra".into(),
                ))
            }
        }
        Ok(Self {
            dim: base.dim,
            kind: SetKind::ComplementClosure(Box::new(base)),
        })
    }

    fn common_dim(members: &[SetExpr], what: &str) -> Result<usize> {
        let dim = match members.first() {
            Some(m) => m.dim,
            None => {
                return Err(Error::InvalidInput(format!(
                    "{what} needs at least one member"
                )))
            }
        };
        for m in members {
            check_dim(dim, m.dim)?;
        }
        Ok(dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn halfspaces(&self) -> Option<&[HalfSpace]> {
        match &self.kind {
            SetKind::Polyhedron(hs) => Some(hs),
            _ => None,
        }
    }

    /// Membership with slack `eps ≥ 0`.
    pub fn contains(&self, y: &[f64], eps: f64) -> Result<bool> {
        check_dim(self.dim, y.len())?;
        if eps.is_nan() || eps < 0.0 {
            return Err(Error::InvalidInput(format!("eps must be >= 0, got {eps}")));
        }
        Ok(self.contains_unchecked(y, eps))
    }

    pub(crate) fn contains_unchecked(&self, y: &[f64], eps: f64) -> bool {
        match &self.kind {
            SetKind::Polyhedron(hs) => hs.iter().all(|h| h.excess(y) <= eps),
            SetKind::Union(ms) => ms.iter().any(|m| m.contains_unchecked(y, eps)),
            SetKind::Intersection(ms) => ms.iter().all(|m| m.contains_unchecked(y, eps)),
            SetKind::Shift { base, offset } => {
                let z: Vec<f64> = y.iter().zip(offset).map(|(a, b)| a - b).collect();
                base.contains_unchecked(&z, eps)
            }
            SetKind::ComplementClosure(base) => match &base.kind {
                SetKind::Polyhedron(hs) => hs.iter().any(|h| h.excess(y) >= -eps),
                SetKind::Union(ms) => ms.iter().all(|m| match &m.kind {
                    SetKind::Polyhedron(hs) => hs.iter().any(|h| h.excess(y) >= -eps),
                    _ => unreachable!("validated at construction"),
                }),
                _ => unreachable!("validated at construction"),
            },
        }
    }

    /// De Morgan expansion of a complement node into unions and intersections
    /// of reversed halfspaces. Other nodes are returned unchanged.
    pub fn expand_complement(&self) -> SetExpr {
        let reversed_union = |hs: &[HalfSpace]| SetExpr {
            dim: self.dim,
            kind: SetKind::Union(
                hs.iter()
                    .map(|h| SetExpr {
                        dim: self.dim,
                        kind: SetKind::Polyhedron(vec![h.reversed()]),
                    })
                    .collect(),
            ),
        };
        match &self.kind {
            SetKind::ComplementClosure(base) => match &base.kind {
                SetKind::Polyhedron(hs) => reversed_union(hs),
                SetKind::Union(ms) => SetExpr {
                    dim: self.dim,
                    kind: SetKind::Intersection(
                        ms.iter()
                            .map(|m| {
                                reversed_union(m.halfspaces().expect("validated at construction"))
                            })
                            .collect(),
                    ),
                },
                _ => unreachable!("validated at construction"),
            },
            _ => self.clone(),
        }
    }

    /// True when the expression is built from polyhedra, intersections and
    /// shifts only, so the set is convex.
    pub fn is_structurally_convex(&self) -> bool {
        match &self.kind {
            SetKind::Polyhedron(_) => true,
            SetKind::Intersection(ms) => ms.iter().all(SetExpr::is_structurally_convex),
            SetKind::Shift { base, .. } => base.is_structurally_convex(),
            SetKind::Union(ms) => ms.len() == 1 && ms[0].is_structurally_convex(),
            SetKind::ComplementClosure(_) => false,
        }
    }

    /// True when the expression is a polyhedron with all offsets zero (a
    /// convex cone), possibly wrapped in intersections.
    pub fn is_structurally_cone(&self) -> bool {
        match &self.kind {
            SetKind::Polyhedron(hs) => hs.iter().all(|h| h.offset() == 0.0),
            SetKind::Intersection(ms) => ms.iter().all(SetExpr::is_structurally_cone),
            SetKind::Union(ms) => ms.len() == 1 && ms[0].is_structurally_cone(),
            _ => false,
        }
    }

    /// Collapses polyhedra, intersections of polyhedra and shifts of those to
    /// a single halfspace list. `None` for anything involving a union or a
    /// complement.
    pub fn flatten_polyhedron(&self) -> Option<Vec<HalfSpace>> {
        match &self.kind {
            SetKind::Polyhedron(hs) => Some(hs.clone()),
            SetKind::Intersection(ms) => {
                let mut out = Vec::new();
                for m in ms {
                    out.extend(m.flatten_polyhedron()?);
                }
                Some(out)
            }
            SetKind::Shift { base, offset } => Some(
                base.flatten_polyhedron()?
                    .into_iter()
                    .map(|h| {
                        let b = h.b + dot(&h.a, offset);
                        HalfSpace { a: h.a, b }
                    })
                    .collect(),
            ),
            SetKind::Union(ms) if ms.len() == 1 => ms[0].flatten_polyhedron(),
            _ => None,
        }
    }

    /// Advisory emptiness probe for polyhedra: reports "looks empty" only if a
    /// grid sweep of `[-r, r]ⁿ` (about 10⁴ points) finds no member and some pair
    /// of antiparallel halfspaces is infeasible on its own.
    pub fn looks_empty(&self, r: f64) -> bool {
        let Some(hs) = self.flatten_polyhedron() else {
            return false;
        };
        let per_axis = (10_000f64.powf(1.0 / self.dim as f64)).floor().max(2.0) as usize;
        let total = per_axis.pow(self.dim as u32);
        let mut y = vec![0.0; self.dim];
        for idx in 0..total {
            let mut rem = idx;
            for yi in y.iter_mut() {
                let j = rem % per_axis;
                rem /= per_axis;
                *yi = -r + 2.0 * r * j as f64 / (per_axis - 1) as f64;
            }
            if hs.iter().all(|h| h.excess(&y) <= MEMBERSHIP_EPS) {
                return false;
            }
        }
        hs.iter().enumerate().any(|(i, p)| {
            hs[i + 1..].iter().any(|q| {
                let (np, nq) = (norm2(&p.a), norm2(&q.a));
                let cos = dot(&p.a, &q.a) / (np * nq);
                // p.a = -λ q.a with λ = np/nq; infeasible iff p.b < -λ q.b
                cos < -1.0 + 1e-12 && p.b / np + q.b / nq < -MEMBERSHIP_EPS
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn orthant_membership() {
        let a = SetExpr::nonpositive_orthant(2).unwrap();
        assert!(a.contains(&[0.0, 0.0], 1e-9).unwrap());
        assert!(!a.contains(&[1e-6, 0.0], 1e-9).unwrap());
        assert!(a.contains(&[-3.0, -0.5], 0.0).unwrap());
    }

    #[test]
    fn notched_union_boundary_point() {
        let a = fixtures::notched_union();
        assert!(a.contains(&[0.0, -1.0], 1e-9).unwrap());
        assert!(a.contains(&[-1.0, 0.0], 1e-9).unwrap());
        assert!(!a.contains(&[-0.5, 0.5], 1e-9).unwrap());
    }

    #[test]
    fn dimension_and_eps_errors() {
        let a = SetExpr::nonpositive_orthant(2).unwrap();
        assert!(matches!(
            a.contains(&[0.0], 1e-9),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            a.contains(&[0.0, 0.0], -1.0),
            Err(Error::InvalidInput(_))
        ));
        let b = SetExpr::nonpositive_orthant(3).unwrap();
        assert!(SetExpr::union(vec![a.clone(), b]).is_err());
        assert!(SetExpr::shift(a, vec![1.0]).is_err());
        assert!(HalfSpace::new(vec![0.0, 1e-13], 1.0).is_err());
        assert!(SetExpr::polyhedron(vec![]).is_err());
    }

    #[test]
    fn shifted_orthant_contains_offset() {
        let s = SetExpr::shift(SetExpr::nonpositive_orthant(2).unwrap(), vec![1.0, 1.0]).unwrap();
        assert!(s.contains(&[1.0, 1.0], 1e-9).unwrap());
        assert!(!s.contains(&[1.1, 0.0], 1e-9).unwrap());
    }

    #[test]
    fn complement_of_orthant() {
        let c = SetExpr::complement_closure(SetExpr::nonpositive_orthant(2).unwrap()).unwrap();
        assert!(c.contains(&[1.0, -5.0], 1e-9).unwrap());
        assert!(!c.contains(&[-1.0, -1.0], 1e-9).unwrap());
        assert!(c.contains(&[0.0, -1.0], 1e-9).unwrap());
        let e = c.expand_complement();
        for y in [[1.0, -5.0], [-1.0, -1.0], [0.0, -1.0], [-2.0, 3.0]] {
            assert_eq!(e.contains(&y, 1e-9).unwrap(), c.contains(&y, 1e-9).unwrap());
        }
    }

    #[test]
    fn complement_rejects_nested_intersection() {
        let p = SetExpr::nonpositive_orthant(2).unwrap();
        let i = SetExpr::intersection(vec![p.clone(), p]).unwrap();
        assert!(matches!(
            SetExpr::complement_closure(i),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn flatten_shift_moves_offsets() {
        let s = SetExpr::shift(SetExpr::nonpositive_orthant(2).unwrap(), vec![2.0, -1.0]).unwrap();
        let hs = s.flatten_polyhedron().unwrap();
        assert_eq!(hs[0].offset(), 2.0);
        assert_eq!(hs[1].offset(), -1.0);
        assert!(fixtures::notched_union().flatten_polyhedron().is_none());
    }

    #[test]
    fn emptiness_probe() {
        let empty = SetExpr::from_rows(&[(&[1.0, 0.0], -1.0), (&[-1.0, 0.0], -1.0)]).unwrap();
        assert!(empty.looks_empty(10.0));
        assert!(!SetExpr::nonpositive_orthant(2).unwrap().looks_empty(10.0));
    }
}
