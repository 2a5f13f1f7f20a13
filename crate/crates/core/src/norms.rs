//! Minkowski gauges of shifted cones and order-unit norms.
//!
//! For a closed convex cone `C` and `k ∈ −int C`, the gauge of `C + k` is
//! `max(φ_{C,k}, 0)`. For a pointed cone and `k ∈ int C`, the gauge of the
//! order interval `[−k, k]_C` is a norm, `max(φ_{−C,k}(y), φ_{−C,k}(−y), 0)`,
//! and it coincides with `φ_{a−C,k}` on `a + C`.

use rand::Rng;

use crate::analysis::{run, CheckOptions, PropertyReport, Sample};
use crate::error::{check_dim, Error, Result};
use crate::evaluator::FunctionalHandle;
use crate::extreal::ExtReal;
use crate::geometry::{dot, SetExpr};
use crate::scalarization::OrderCone;

const CORE_EPS: f64 = 1e-9;

fn clamp_gauge(v: ExtReal) -> f64 {
    match v {
        ExtReal::Finite(t) => t.max(0.0),
        ExtReal::MinusInf => 0.0,
        ExtReal::Nu => unreachable!("interior direction gives a finite-valued functional"),
    }
}

/// Gauge of `C + k` for `k` strictly inside `−C` (every row `aᵢ·k > 1e-9`).
#[derive(Debug, Clone)]
pub struct ConeShiftGauge {
    handle: FunctionalHandle,
}

impl ConeShiftGauge {
    pub fn new(cone: &OrderCone, k: &[f64]) -> Result<Self> {
        check_dim(cone.dim(), k.len())?;
        if let Some(i) = cone
            .rows()
            .iter()
            .position(|h| dot(h.normal(), k) <= CORE_EPS)
        {
            return Err(Error::PreconditionFailed(format!(
                "k is not in −int C (row {i})"
            )));
        }
        Ok(Self {
            handle: FunctionalHandle::new(cone.as_set().clone(), k)?,
        })
    }

    pub fn eval(&self, y: &[f64]) -> Result<f64> {
        Ok(clamp_gauge(self.handle.eval(y)?))
    }
}

pub fn gauge_cone_shift(cone: &OrderCone, k: &[f64], y: &[f64]) -> Result<f64> {
    ConeShiftGauge::new(cone, k)?.eval(y)
}

/// `‖·‖_{C,k}` for a pointed cone `C` and `k ∈ int C`.
#[derive(Debug, Clone)]
pub struct OrderUnitNorm {
    cone: OrderCone,
    k: Vec<f64>,
    handle: FunctionalHandle,
}

impl OrderUnitNorm {
    pub fn new(cone: &OrderCone, k: &[f64]) -> Result<Self> {
        check_dim(cone.dim(), k.len())?;
        if !cone.is_pointed() {
            return Err(Error::PreconditionFailed(
                "cone is not pointed; the order-interval gauge is only a seminorm".into(),
            ));
        }
        if let Some(i) = cone.rows().iter().position(|h| h.excess(k) >= -CORE_EPS) {
            return Err(Error::PreconditionFailed(format!(
                "k is not in int C (row {i})"
            )));
        }
        let handle = FunctionalHandle::new(cone.negated(), k)?;
        Ok(Self {
            cone: cone.clone(),
            k: k.to_vec(),
            handle,
        })
    }

    pub fn norm(&self, y: &[f64]) -> Result<f64> {
        let neg: Vec<f64> = y.iter().map(|x| -x).collect();
        Ok(clamp_gauge(self.handle.eval(y)?).max(clamp_gauge(self.handle.eval(&neg)?)))
    }

    /// `−k ≤_C y ≤_C k`, i.e. `y + k ∈ C` and `k − y ∈ C`.
    pub fn in_unit_interval(&self, y: &[f64], eps: f64) -> Result<bool> {
        check_dim(self.k.len(), y.len())?;
        let plus: Vec<f64> = y.iter().zip(&self.k).map(|(a, b)| a + b).collect();
        let minus: Vec<f64> = y.iter().zip(&self.k).map(|(a, b)| b - a).collect();
        Ok(self.cone.contains(&plus, eps)? && self.cone.contains(&minus, eps)?)
    }

    pub fn cone(&self) -> &OrderCone {
        &self.cone
    }

    pub fn k(&self) -> &[f64] {
        &self.k
    }
}

pub fn order_unit_norm(cone: &OrderCone, k: &[f64], y: &[f64]) -> Result<f64> {
    OrderUnitNorm::new(cone, k)?.norm(y)
}

/// `‖y − a‖_{C,k} = φ_{a−C,k}(y)` for sampled `y ∈ a + C` built from the
/// cone's generators.
pub fn check_norm_varphi_identity(
    cone: &OrderCone,
    k: &[f64],
    a: &[f64],
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    check_dim(cone.dim(), a.len())?;
    let gens = cone
        .generators()
        .ok_or_else(|| Error::PreconditionFailed("sampling a + C needs cone generators".into()))?
        .to_vec();
    let norm = OrderUnitNorm::new(cone, k)?;
    let shifted = FunctionalHandle::new(SetExpr::shift(cone.negated(), a.to_vec())?, k)?;
    Ok(run("norm_varphi_identity", opts, |rng| {
        let mut y = a.to_vec();
        for g in &gens {
            let c = rng.gen_range(0.0..=opts.half_width * 0.5);
            for (yi, gi) in y.iter_mut().zip(g) {
                *yi += c * gi;
            }
        }
        let d: Vec<f64> = y.iter().zip(a).map(|(p, q)| p - q).collect();
        let lhs = norm.norm(&d).expect("dims checked");
        let rhs = shifted.eval(&y).expect("dims checked");
        let defect = match rhs {
            ExtReal::Finite(r) => (lhs - r).abs(),
            _ => crate::analysis::INFINITE_DEFECT,
        };
        Sample::checked(defect, 1e-7, vec![y], vec![ExtReal::Finite(lhs), rhs])
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HalfSpace;

    fn nonpositive_cone() -> OrderCone {
        OrderCone::new(
            vec![
                HalfSpace::new(vec![1.0, 0.0], 0.0).unwrap(),
                HalfSpace::new(vec![0.0, 1.0], 0.0).unwrap(),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn gauge_examples() {
        let c = nonpositive_cone();
        assert_eq!(gauge_cone_shift(&c, &[1.0, 1.0], &[2.0, 1.0]).unwrap(), 2.0);
        assert_eq!(
            gauge_cone_shift(&c, &[1.0, 1.0], &[-1.0, -3.0]).unwrap(),
            0.0
        );
        assert_eq!(gauge_cone_shift(&c, &[1.0, 1.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert!(gauge_cone_shift(&c, &[1.0, 0.0], &[0.0, 0.0]).is_err());
    }

    #[test]
    fn order_unit_norm_examples() {
        let c = OrderCone::nonneg_orthant(2);
        assert_eq!(order_unit_norm(&c, &[1.0, 1.0], &[-2.0, 3.0]).unwrap(), 3.0);
        assert_eq!(order_unit_norm(&c, &[1.0, 1.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(order_unit_norm(&c, &[1.0, 1.0], &[1.0, 1.0]).unwrap(), 1.0);
        assert!(order_unit_norm(&c, &[1.0, 0.0], &[0.0, 0.0]).is_err());
        let halfplane =
            OrderCone::new(vec![HalfSpace::new(vec![-1.0, 0.0], 0.0).unwrap()], None).unwrap();
        assert!(matches!(
            order_unit_norm(&halfplane, &[1.0, 0.0], &[0.0, 1.0]),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn norm_varphi_identity_on_orthant() {
        let c = OrderCone::nonneg_orthant(2);
        let r =
            check_norm_varphi_identity(&c, &[1.0, 1.0], &[0.0, 0.0], &CheckOptions::new(2000, 5))
                .unwrap();
        assert!(r.holds() && r.max_defect <= 1e-7);
        let n = OrderUnitNorm::new(&c, &[1.0, 1.0]).unwrap();
        assert_eq!(n.norm(&[2.0, 3.0]).unwrap(), 3.0);
        assert!(check_norm_varphi_identity(
            &nonpositive_cone(),
            &[-1.0, -1.0],
            &[0.0, 0.0],
            &CheckOptions::new(10, 1)
        )
        .is_err());
    }
}
