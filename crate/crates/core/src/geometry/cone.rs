use super::{dot, norm2, HalfSpace, SetExpr, SetKind};
use crate::error::{check_dim, Error, Result};

/// Slack for the certificate rows `a·k ≥ −CERT_EPS`.
pub const CERT_EPS: f64 = 1e-9;

/// Polyhedral cone `{u : aᵢ·u ≤ 0}`. When `exact` is false the cone is only
/// known to be contained in the true recession cone.
#[derive(Debug, Clone, PartialEq)]
pub struct RecessionCone {
    halfspaces: Vec<HalfSpace>,
    exact: bool,
}

impl RecessionCone {
    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn dim(&self) -> usize {
        self.halfspaces[0].dim()
    }

    pub fn to_set(&self) -> SetExpr {
        SetExpr::polyhedron(self.halfspaces.clone()).expect("cone rows are nonempty")
    }

    fn from_rows(rows: impl IntoIterator<Item = HalfSpace>, exact: bool) -> Self {
        let mut halfspaces: Vec<HalfSpace> = Vec::new();
        for h in rows {
            let h = h.homogenized();
            let n = norm2(h.normal());
            let dup = halfspaces.iter().any(|g| {
                let m = norm2(g.normal());
                g.normal()
                    .iter()
                    .zip(h.normal())
                    .all(|(x, y)| (x / m - y / n).abs() <= 1e-12)
            });
            if !dup {
                halfspaces.push(h);
            }
        }
        Self { halfspaces, exact }
    }
}

/// Recession cone of `set`, exact for polyhedra and intersections of
/// polyhedra, a sound under-approximation for unions.
pub fn recession_cone(set: &SetExpr) -> Result<RecessionCone> {
    match set.kind() {
        SetKind::Polyhedron(hs) => Ok(RecessionCone::from_rows(hs.iter().cloned(), true)),
        SetKind::Shift { base, .. } => recession_cone(base),
        SetKind::Union(ms) | SetKind::Intersection(ms) => {
            let mut rows = Vec::new();
            let mut exact = true;
            for m in ms {
                let c = recession_cone(m)?;
                exact &= c.exact;
                rows.extend(c.halfspaces);
            }
            let is_union = matches!(set.kind(), SetKind::Union(_));
            Ok(RecessionCone::from_rows(
                rows,
                exact && !(is_union && ms.len() > 1),
            ))
        }
        SetKind::ComplementClosure(_) => Err(Error::Unsupported(
            "no recession cone for a complement; supply the direction with a waiver".into(),
        )),
    }
}

/// A direction `k` together with evidence that `−k` lies in the recession
/// cone of the set it was certified against.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    k: Vec<f64>,
    cone: Option<RecessionCone>,
    interior: bool,
}

impl Direction {
    /// Accepts `k` without a certificate. Used for complements, whose
    /// recession cone is not computed.
    pub fn waived(k: Vec<f64>) -> Result<Self> {
        check_vector(&k)?;
        Ok(Self {
            k,
            cone: None,
            interior: false,
        })
    }

    pub fn k(&self) -> &[f64] {
        &self.k
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }

    pub fn cone(&self) -> Option<&RecessionCone> {
        self.cone.as_ref()
    }

    pub fn is_certified(&self) -> bool {
        self.cone.is_some()
    }

    /// `k ∈ −int 0⁺A` according to the certificate (all rows strictly positive).
    pub fn is_interior(&self) -> bool {
        self.interior
    }

    /// `λk` for `λ > 0`, keeping the certificate.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "scale must be > 0, got {lambda}"
            )));
        }
        Ok(Self {
            k: self.k.iter().map(|x| x * lambda).collect(),
            cone: self.cone.clone(),
            interior: self.interior,
        })
    }
}

fn check_vector(k: &[f64]) -> Result<()> {
    if k.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(
            "direction has non-finite entries".into(),
        ));
    }
    if norm2(k) <= 1e-12 {
        return Err(Error::InvalidInput("direction must be nonzero".into()));
    }
    Ok(())
}

/// Checks `aᵢ·k ≥ −1e-9` for every row of the recession cone of `set`.
pub fn certify_direction(set: &SetExpr, k: &[f64]) -> Result<Direction> {
    check_dim(set.dim(), k.len())?;
    check_vector(k)?;
    let cone = recession_cone(set)?;
    certify_against(cone, k)
}

pub(crate) fn certify_against(cone: RecessionCone, k: &[f64]) -> Result<Direction> {
    let mut interior = true;
    for (row, h) in cone.halfspaces.iter().enumerate() {
        let d = dot(h.normal(), k);
        if d < -CERT_EPS {
            return Err(Error::DirectionRejected { row, dot: d });
        }
        interior &= d > CERT_EPS;
    }
    Ok(Direction {
        k: k.to_vec(),
        cone: Some(cone),
        interior,
    })
}
