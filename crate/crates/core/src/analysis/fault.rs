use crate::evaluator::{FunctionalHandle, LevelFunctional};
use crate::extreal::ExtReal;

/// Deliberate corruption of finite values, for exercising the checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Fault {
    Bias(f64),
    Scale(f64),
    Negate,
}

impl Fault {
    pub fn apply(self, v: ExtReal) -> ExtReal {
        match self {
            Fault::Bias(c) => v.map_finite(|t| t + c),
            Fault::Scale(s) => v.map_finite(|t| t * s),
            Fault::Negate => v.map_finite(|t| -t),
        }
    }
}

/// A handle whose evaluator is corrupted by a [`Fault`].
#[derive(Debug, Clone)]
pub struct Faulty {
    handle: FunctionalHandle,
    fault: Fault,
}

impl Faulty {
    pub fn new(handle: FunctionalHandle, fault: Fault) -> Self {
        Self { handle, fault }
    }
}

impl LevelFunctional for Faulty {
    fn handle(&self) -> &FunctionalHandle {
        &self.handle
    }

    fn value(&self, y: &[f64]) -> ExtReal {
        self.fault.apply(self.handle.value(y))
    }
}
