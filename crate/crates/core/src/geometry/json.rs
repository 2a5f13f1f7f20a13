//! JSON form of [`SetExpr`].
//!
//! ```json
//! {"dim": 2, "set": {"type": "union", "members": [
//!     {"type": "polyhedron", "halfspaces": [{"a": [1, 0], "b": -1}]}
//! ]}}
//! ```
//!
//! Node types: `polyhedron`, `union`, `intersection`, `shift` (fields `base`,
//! `y0`) and `complement` (field `base`).

use serde::{Deserialize, Serialize};

use super::{HalfSpace, SetExpr, SetKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HalfSpaceSpec {
    pub a: Vec<f64>,
    pub b: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SetSpec {
    Polyhedron { halfspaces: Vec<HalfSpaceSpec> },
    Union { members: Vec<SetSpec> },
    Intersection { members: Vec<SetSpec> },
    Shift { base: Box<SetSpec>, y0: Vec<f64> },
    Complement { base: Box<SetSpec> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetDocument {
    pub dim: usize,
    pub set: SetSpec,
}

impl SetSpec {
    pub fn build(&self) -> Result<SetExpr> {
        match self {
            SetSpec::Polyhedron { halfspaces } => SetExpr::polyhedron(
                halfspaces
                    .iter()
                    .map(|h| HalfSpace::new(h.a.clone(), h.b))
                    .collect::<Result<_>>()?,
            ),
            SetSpec::Union { members } => {
                SetExpr::union(members.iter().map(SetSpec::build).collect::<Result<_>>()?)
            }
            SetSpec::Intersection { members } => {
                SetExpr::intersection(members.iter().map(SetSpec::build).collect::<Result<_>>()?)
            }
            SetSpec::Shift { base, y0 } => SetExpr::shift(base.build()?, y0.clone()),
            SetSpec::Complement { base } => SetExpr::complement_closure(base.build()?),
        }
    }

    pub fn from_expr(set: &SetExpr) -> SetSpec {
        match set.kind() {
            SetKind::Polyhedron(hs) => SetSpec::Polyhedron {
                halfspaces: hs
                    .iter()
                    .map(|h| HalfSpaceSpec {
                        a: h.normal().to_vec(),
                        b: h.offset(),
                    })
                    .collect(),
            },
            SetKind::Union(ms) => SetSpec::Union {
                members: ms.iter().map(SetSpec::from_expr).collect(),
            },
            SetKind::Intersection(ms) => SetSpec::Intersection {
                members: ms.iter().map(SetSpec::from_expr).collect(),
            },
            SetKind::Shift { base, offset } => SetSpec::Shift {
                base: Box::new(SetSpec::from_expr(base)),
                y0: offset.clone(),
            },
            SetKind::ComplementClosure(base) => SetSpec::Complement {
                base: Box::new(SetSpec::from_expr(base)),
            },
        }
    }
}

impl SetDocument {
    pub fn build(&self) -> Result<SetExpr> {
        let set = self.set.build()?;
        if set.dim() != self.dim {
            return Err(Error::InvalidInput(format!(
                "declared dim {} but set has dim {}",
                self.dim,
                set.dim()
            )));
        }
        Ok(set)
    }

    pub fn from_expr(set: &SetExpr) -> Self {
        Self {
            dim: set.dim(),
            set: SetSpec::from_expr(set),
        }
    }
}

pub fn parse_set(json: &str) -> Result<SetExpr> {
    let doc: SetDocument =
        serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("set JSON: {e}")))?;
    doc.build()
}
