use serde::{Deserialize, Serialize};

use crate::cloud::PointCloud;
use crate::error::{check_dim, Result};
use crate::evaluator::LevelFunctional;
use crate::extreal::ExtReal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeparationMode {
    /// `A ∩ D = ∅ ⟺ φ(d) ≰ 0` for all `d`.
    Closed,
    /// `int A ∩ D = ∅ ⟺ φ(d) ≮ 0` for all `d`.
    Interior,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationVerdict {
    pub disjoint: bool,
    /// Indices into the cloud.
    pub offending: Vec<usize>,
}

/// Decides disjointness of `A` (or `int A`) from a finite set by the sign of
/// the functional. Nu is neither `≤ 0` nor `< 0`.
pub fn separate<F: LevelFunctional + ?Sized>(
    f: &F,
    cloud: &PointCloud,
    mode: SeparationMode,
) -> Result<SeparationVerdict> {
    check_dim(f.handle().dim(), cloud.dim())?;
    let zero = ExtReal::Finite(0.0);
    let offending: Vec<usize> = cloud
        .points()
        .iter()
        .enumerate()
        .filter(|(_, d)| {
            let v = f.value(d);
            match mode {
                SeparationMode::Closed => v.le(zero),
                SeparationMode::Interior => v.lt(zero),
            }
        })
        .map(|(i, _)| i)
        .collect();
    Ok(SeparationVerdict {
        disjoint: offending.is_empty(),
        offending,
    })
}
