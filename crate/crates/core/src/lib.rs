//! Functionals with uniform sublevel sets.
//!
//! For a closed set `A ⊂ ℝⁿ` and a direction `k` with `−k` in the recession
//! cone of `A`, the functional
//!
//! ```text
//! φ_{A,k}(y) = inf { t ∈ ℝ : y ∈ t·k + A }
//! ```
//!
//! has the translated sets `t·k + A` as sublevel sets. This crate represents
//! polyhedral `A` symbolically ([`geometry`]), evaluates `φ` exactly or by
//! bisection ([`evaluator`]), checks its structural properties by seeded
//! sampling ([`analysis`]), and applies it to finite-set scalarization
//! ([`scalarization`]) and order-unit norms ([`norms`]).
//!
//! Values live in [`ExtReal`]: finite, `-inf`, or `nu` for an empty infimum.
//!
//! ```
//! use ulset::{fixtures, ExtReal};
//!
//! let h = fixtures::notched_handle();
//! assert_eq!(h.eval(&[0.0, -1.0]).unwrap(), ExtReal::MinusInf);
//! assert_eq!(h.eval(&[0.5, 2.0]).unwrap(), ExtReal::Finite(1.5));
//! ```

pub mod analysis;
pub mod cloud;
pub mod error;
pub mod evaluator;
pub mod extreal;
pub mod fixtures;
pub mod geometry;
pub mod norms;
pub mod par;
pub mod scalarization;

pub use cloud::PointCloud;
pub use error::{Error, Result};
pub use evaluator::{Evaluation, FunctionalHandle, LevelFunctional, Strategy};
pub use extreal::ExtReal;
pub use geometry::{
    certify_direction, recession_cone, Direction, HalfSpace, RecessionCone, SetExpr, SetKind,
};
pub use par::Exec;
