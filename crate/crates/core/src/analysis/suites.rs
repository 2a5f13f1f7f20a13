//! Sampled checks of the structural identities of the functional.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{
    add, run, sample_in_domain, uniform_point, value_tolerance, CheckOptions, PropertyReport,
    Sample, Witness, INFINITE_DEFECT,
};
use crate::error::{check_dim, Error, Result};
use crate::evaluator::LevelFunctional;
use crate::extreal::ExtReal;
use crate::geometry::norm2;

/// Half-width of the band around `t = φ(y)` excluded from the sublevel test.
const SUBLEVEL_BAND: f64 = 1e-6;
/// Membership slack in the sublevel test.
const SUBLEVEL_EPS: f64 = 1e-6;

/// `φ(y) ≤ t ⟺ y − t·k ∈ A`. Nu samples are skipped.
pub fn check_sublevel_identity<F: LevelFunctional>(f: &F, opts: &CheckOptions) -> PropertyReport {
    let h = f.handle();
    let (dim, k) = (h.dim(), h.k());
    run("sublevel_identity", opts, |rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let v = f.value(&y);
        let t = match v {
            ExtReal::Nu => return Sample::Skipped,
            ExtReal::Finite(s) => s + rng.gen_range(-1.0..=1.0),
            ExtReal::MinusInf => rng.gen_range(-opts.half_width..=opts.half_width),
        };
        if let ExtReal::Finite(s) = v {
            if (s - t).abs() <= SUBLEVEL_BAND {
                return Sample::Skipped;
            }
        }
        let below = v.le(ExtReal::Finite(t));
        let member = h.set().contains_unchecked(&add(&y, k, -t), SUBLEVEL_EPS);
        let defect = match (below == member, v) {
            (true, _) => 0.0,
            (false, ExtReal::Finite(s)) => (s - t).abs(),
            (false, _) => INFINITE_DEFECT,
        };
        Sample::checked(defect, 0.0, vec![y, vec![t]], vec![v])
    })
}

/// `φ(y + t·k) = φ(y) + t`, with `−∞` and nu preserved.
pub fn check_translation_invariance<F: LevelFunctional>(
    f: &F,
    opts: &CheckOptions,
) -> PropertyReport {
    let h = f.handle();
    let (dim, k) = (h.dim(), h.k());
    run("translation_invariance", opts, |rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let t = rng.gen_range(-opts.half_width..=opts.half_width);
        let v0 = f.value(&y);
        let v1 = f.value(&add(&y, k, t));
        let (defect, tol) = match (v0, v1) {
            (ExtReal::Nu, ExtReal::Nu) => return Sample::Skipped,
            (ExtReal::MinusInf, ExtReal::MinusInf) => (0.0, 0.0),
            (ExtReal::Finite(a), ExtReal::Finite(b)) => {
                ((b - a - t).abs(), value_tolerance(h, a.abs().max(b.abs())))
            }
            _ => (INFINITE_DEFECT, 0.0),
        };
        Sample::checked(defect, tol, vec![y, vec![t]], vec![v0, v1])
    })
}

/// `φ_A(y⁰ + y¹) ≤ φ_A(y⁰) + φ_R(y¹)` with `R` the recession cone of `A`
/// (or any closed cone inside it) and `y⁰`, `y¹` in the respective domains.
pub fn check_recession_inequality<F: LevelFunctional, G: LevelFunctional>(
    fa: &F,
    frec: &G,
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    let dim = fa.handle().dim();
    check_dim(dim, frec.handle().dim())?;
    let h = fa.handle();
    Ok(run("recession_inequality", opts, |rng| {
        let Some((y0, v0)) = sample_in_domain(
            rng,
            |y| fa.value(y),
            dim,
            opts.half_width,
            ExtReal::in_domain,
        ) else {
            return Sample::Skipped;
        };
        let Some((y1, v1)) = sample_in_domain(
            rng,
            |y| frec.value(y),
            dim,
            opts.half_width,
            ExtReal::in_domain,
        ) else {
            return Sample::Skipped;
        };
        let lhs = fa.value(&add(&y0, &y1, 1.0));
        let rhs = v0.checked_add(v1).expect("domain samples are not nu");
        let (defect, tol) = match (lhs, rhs) {
            (ExtReal::MinusInf, _) => (0.0, 0.0),
            (ExtReal::Finite(l), ExtReal::Finite(r)) => {
                ((l - r).max(0.0), value_tolerance(h, l.abs().max(r.abs())))
            }
            _ => (INFINITE_DEFECT, 0.0),
        };
        Sample::checked(defect, tol, vec![y0, y1], vec![lhs, v0, v1])
    }))
}

/// `φ_{A,k}(y) = −φ_{cl(ℝⁿ∖A),−k}(y)` wherever `φ_{A,k}(y)` is finite.
/// Inapplicable when the set fails the row condition of
/// [`FunctionalHandle::check_dual_precondition`](crate::evaluator::FunctionalHandle::check_dual_precondition).
pub fn check_dual_relation<F: LevelFunctional>(f: &F, opts: &CheckOptions) -> PropertyReport {
    let h = f.handle();
    let Ok(comp) = h.complement_handle() else {
        return PropertyReport::inapplicable("dual_relation", opts.samples, opts.seed);
    };
    let dim = h.dim();
    run("dual_relation", opts, |rng| {
        let Some((y, v)) = sample_in_domain(
            rng,
            |y| f.value(y),
            dim,
            opts.half_width,
            ExtReal::is_finite,
        ) else {
            return Sample::Skipped;
        };
        let d = comp.value(&y).map_finite(|t| -t);
        let defect = match (v, d) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => (a - b).abs(),
            _ => INFINITE_DEFECT,
        };
        Sample::checked(defect, 1e-6, vec![y], vec![v, d])
    })
}

/// Flags for convexity-type properties, each from its own sampled test.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityReport {
    pub convex: PropertyReport,
    pub positively_homogeneous: PropertyReport,
    pub subadditive: PropertyReport,
    pub sublinear: PropertyReport,
}

impl ConvexityReport {
    pub fn reports(&self) -> [&PropertyReport; 4] {
        [
            &self.convex,
            &self.positively_homogeneous,
            &self.subadditive,
            &self.sublinear,
        ]
    }
}

/// Upper-bound test `lhs ≤ rhs` in `{−∞} ∪ ℝ` where the caller has already
/// excluded nu on the right.
fn le_defect(lhs: ExtReal, rhs: ExtReal) -> f64 {
    match (lhs, rhs) {
        (ExtReal::MinusInf, _) => 0.0,
        (ExtReal::Finite(l), ExtReal::Finite(r)) => (l - r).max(0.0),
        _ => INFINITE_DEFECT,
    }
}

/// Midpoint convexity, positive homogeneity, subadditivity and their
/// conjunction (sublinearity). Pairs with a nu endpoint are skipped.
pub fn classify_convexity<F: LevelFunctional>(f: &F, opts: &CheckOptions) -> ConvexityReport {
    let h = f.handle();
    let dim = h.dim();
    let pair = |rng: &mut ChaCha8Rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let z = uniform_point(rng, dim, opts.half_width);
        let (vy, vz) = (f.value(&y), f.value(&z));
        (!vy.is_nu() && !vz.is_nu()).then_some((y, z, vy, vz))
    };

    let convex = run("convex", opts, |rng| {
        let Some((y, z, vy, vz)) = pair(rng) else {
            return Sample::Skipped;
        };
        let m: Vec<f64> = y.iter().zip(&z).map(|(a, b)| 0.5 * (a + b)).collect();
        let vm = f.value(&m);
        let rhs = match (vy, vz) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(0.5 * (a + b)),
            _ => ExtReal::MinusInf,
        };
        let defect = le_defect(vm, rhs);
        let tol = value_tolerance(h, rhs.finite().unwrap_or(0.0));
        Sample::checked(defect, tol, vec![y, z, m], vec![vy, vz, vm])
    });

    let homogeneous = run("positively_homogeneous", opts, |rng| {
        let y = uniform_point(rng, dim, opts.half_width);
        let lambda = rng.gen_range(0.1..=5.0);
        let v = f.value(&y);
        let yl: Vec<f64> = y.iter().map(|x| lambda * x).collect();
        let vl = f.value(&yl);
        let (defect, tol) = match (v, vl) {
            (ExtReal::Nu, ExtReal::Nu) => return Sample::Skipped,
            (ExtReal::MinusInf, ExtReal::MinusInf) => (0.0, 0.0),
            (ExtReal::Finite(a), ExtReal::Finite(b)) => (
                (b - lambda * a).abs(),
                value_tolerance(h, b.abs().max(lambda * a.abs())),
            ),
            _ => (INFINITE_DEFECT, 0.0),
        };
        Sample::checked(defect, tol, vec![y, vec![lambda]], vec![v, vl])
    });

    let subadditive = run("subadditive", opts, |rng| {
        let Some((y, z, vy, vz)) = pair(rng) else {
            return Sample::Skipped;
        };
        let s = add(&y, &z, 1.0);
        let vs = f.value(&s);
        let rhs = vy.checked_add(vz).expect("nu excluded");
        let defect = le_defect(vs, rhs);
        let tol = value_tolerance(h, rhs.finite().unwrap_or(0.0));
        Sample::checked(defect, tol, vec![y, z], vec![vy, vz, vs])
    });

    let sublinear = combine("sublinear", &homogeneous, &subadditive);
    ConvexityReport {
        convex,
        positively_homogeneous: homogeneous,
        subadditive,
        sublinear,
    }
}

fn combine(name: &str, a: &PropertyReport, b: &PropertyReport) -> PropertyReport {
    use super::Verdict::*;
    let verdict = match (a.verdict, b.verdict) {
        (Violated, _) | (_, Violated) => Violated,
        (Holds, Holds) => Holds,
        _ => Inapplicable,
    };
    let witness = match (a.violated(), b.violated()) {
        (true, false) => a.witness.clone(),
        (false, true) => b.witness.clone(),
        (true, true) if a.max_defect >= b.max_defect => a.witness.clone(),
        (true, true) => b.witness.clone(),
        _ => None,
    };
    PropertyReport {
        name: name.to_string(),
        verdict,
        witness,
        max_defect: a.max_defect.max(b.max_defect),
        samples: a.samples,
        seed: a.seed,
        applicable: a.applicable.min(b.applicable),
    }
}

/// Margin for strict inequalities between sampled values.
fn strict_margin(v: f64) -> f64 {
    1e-9 * (1.0 + v.abs())
}

/// Finite-valued endpoints `y ≠ z` of a segment and an interior point
/// `m = λy + (1 − λ)z`.
struct Segment {
    y: Vec<f64>,
    z: Vec<f64>,
    m: Vec<f64>,
    lambda: f64,
    vy: f64,
    vz: f64,
}

impl Segment {
    fn witness(self, vm: ExtReal) -> Witness {
        Witness {
            inputs: vec![self.y, self.z, self.m],
            values: vec![ExtReal::Finite(self.vy), ExtReal::Finite(self.vz), vm],
        }
    }
}

fn finite_segment<F: LevelFunctional>(
    f: &F,
    rng: &mut ChaCha8Rng,
    dim: usize,
    half_width: f64,
) -> Option<Segment> {
    let y = uniform_point(rng, dim, half_width);
    let z = uniform_point(rng, dim, half_width);
    let lambda = rng.gen_range(0.1..=0.9);
    let (ExtReal::Finite(vy), ExtReal::Finite(vz)) = (f.value(&y), f.value(&z)) else {
        return None;
    };
    if norm2(&add(&y, &z, -1.0)) <= 1e-6 {
        return None;
    }
    let m = y
        .iter()
        .zip(&z)
        .map(|(p, q)| lambda * p + (1.0 - lambda) * q)
        .collect();
    Some(Segment {
        y,
        z,
        m,
        lambda,
        vy,
        vz,
    })
}

/// Strict quasiconvexity, `φ(m) < max(φ(y), φ(z))` strictly between finite
/// points, which is how strict convexity of `A` shows up in the
/// functional. Both endpoints are moved onto one level line first (shifting
/// `z` along `k`), since violations live on flat pieces of a level set;
/// polyhedral sets have such pieces, so expect a witness there.
pub fn check_strictly_quasiconvex<F: LevelFunctional>(
    f: &F,
    opts: &CheckOptions,
) -> PropertyReport {
    let h = f.handle();
    let dim = h.dim();
    run("strictly_quasiconvex", opts, |rng| {
        let Some(mut seg) = finite_segment(f, rng, dim, opts.half_width) else {
            return Sample::Skipped;
        };
        seg.z = add(&seg.z, h.k(), seg.vy - seg.vz);
        let ExtReal::Finite(vz) = f.value(&seg.z) else {
            return Sample::Skipped;
        };
        if norm2(&add(&seg.y, &seg.z, -1.0)) <= 1e-6 {
            return Sample::Skipped;
        }
        seg.vz = vz;
        seg.m = seg
            .y
            .iter()
            .zip(&seg.z)
            .map(|(p, q)| seg.lambda * p + (1.0 - seg.lambda) * q)
            .collect();
        let vm = f.value(&seg.m);
        let top = seg.vy.max(seg.vz);
        let bound = top - strict_margin(top);
        // a tie with the larger endpoint already breaks strictness
        let (defect, violated) = match vm {
            ExtReal::MinusInf => (0.0, false),
            ExtReal::Finite(c) => ((c - bound).max(0.0), c >= bound),
            ExtReal::Nu => (INFINITE_DEFECT, true),
        };
        Sample::Checked {
            defect,
            violated,
            witness: seg.witness(vm),
        }
    })
}

/// Concavity of the functional. Only meaningful when every point lies on a
/// translate of the boundary (`Y = bd A + ℝk`), which sampling cannot
/// certify; `assume_cover` is the caller's assertion of it. Without it the
/// report is inapplicable.
pub fn check_concave<F: LevelFunctional>(
    f: &F,
    assume_cover: bool,
    opts: &CheckOptions,
) -> PropertyReport {
    if !assume_cover {
        return PropertyReport::inapplicable("concave", opts.samples, opts.seed);
    }
    let h = f.handle();
    let dim = h.dim();
    run("concave", opts, |rng| {
        let Some(seg) = finite_segment(f, rng, dim, opts.half_width) else {
            return Sample::Skipped;
        };
        let vm = f.value(&seg.m);
        let chord = seg.lambda * seg.vy + (1.0 - seg.lambda) * seg.vz;
        let defect = match vm {
            ExtReal::Finite(c) => (chord - c).max(0.0),
            _ => INFINITE_DEFECT,
        };
        let tol = value_tolerance(h, chord);
        let w = seg.witness(vm);
        Sample::checked(defect, tol, w.inputs, w.values)
    })
}

/// Conic hull of finitely many generators. No generators means `{0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneCone {
    generators: Vec<Vec<f64>>,
    dim: usize,
}

impl MonotoneCone {
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Result<Self> {
        for g in &generators {
            check_dim(dim, g.len())?;
            if norm2(g) <= 1e-12 {
                return Err(Error::InvalidInput(
                    "cone generators must be nonzero".into(),
                ));
            }
        }
        Ok(Self { generators, dim })
    }

    pub fn nonneg_orthant(dim: usize) -> Self {
        let generators = (0..dim)
            .map(|i| {
                let mut e = vec![0.0; dim];
                e[i] = 1.0;
                e
            })
            .collect();
        Self { generators, dim }
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Random element with coefficients in `[0, scale]`.
    fn sample(&self, rng: &mut ChaCha8Rng, scale: f64) -> Vec<f64> {
        let mut b = vec![0.0; self.dim];
        for g in &self.generators {
            let c = rng.gen_range(0.0..=scale);
            for (bi, gi) in b.iter_mut().zip(g) {
                *bi += c * gi;
            }
        }
        b
    }
}

/// Result of [`check_monotone`]: the functional test and the set-level
/// inclusion `bd A − B ⊆ A` sampled alongside it.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneReport {
    pub functional: PropertyReport,
    pub set_inclusion: PropertyReport,
}

impl MonotoneReport {
    /// A holding set inclusion must come with a holding (non-strict)
    /// functional test. The reverse direction is only sampled evidence.
    pub fn consistent(&self) -> bool {
        !(self.set_inclusion.holds()
            && self.functional.violated()
            && !self.functional.name.contains("strict"))
    }
}

/// `y² − y¹ ∈ B ⟹ φ(y¹) ≤ φ(y²)`; in strict mode additionally
/// `φ(y¹) < φ(y²) − 1e-9·(1 + |φ(y²)|)` whenever `‖y² − y¹‖ > 1e-6` and
/// both values are finite.
pub fn check_monotone<F: LevelFunctional>(
    f: &F,
    cone: &MonotoneCone,
    strict: bool,
    opts: &CheckOptions,
) -> Result<MonotoneReport> {
    let h = f.handle();
    check_dim(h.dim(), cone.dim())?;
    let dim = h.dim();
    let name = if strict {
        "monotone_strict"
    } else {
        "monotone"
    };
    let functional = run(name, opts, |rng| {
        let y2 = uniform_point(rng, dim, opts.half_width);
        let b = cone.sample(rng, 2.0);
        let y1 = add(&y2, &b, -1.0);
        let (v1, v2) = (f.value(&y1), f.value(&y2));
        if v2.is_nu() {
            return Sample::Skipped;
        }
        let defect = le_defect(v1, v2);
        let tol = value_tolerance(h, v2.finite().unwrap_or(0.0));
        if strict && defect <= tol && norm2(&b) > 1e-6 {
            if let (ExtReal::Finite(a), ExtReal::Finite(c)) = (v1, v2) {
                let margin = 1e-9 * (1.0 + c.abs());
                if a >= c - margin {
                    return Sample::Checked {
                        defect: a - (c - margin),
                        violated: true,
                        witness: Witness {
                            inputs: vec![y1, y2, b],
                            values: vec![v1, v2],
                        },
                    };
                }
            }
        }
        Sample::checked(defect, tol, vec![y1, y2, b], vec![v1, v2])
    });
    let set_inclusion = check_set_inclusion(f, cone, opts)?;
    Ok(MonotoneReport {
        functional,
        set_inclusion,
    })
}

/// `bd A − B ⊆ A`, sampled at boundary points `y − φ(y)·k` with the
/// reference evaluator of the handle.
pub fn check_set_inclusion<F: LevelFunctional>(
    f: &F,
    cone: &MonotoneCone,
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    let h = f.handle();
    check_dim(h.dim(), cone.dim())?;
    let (dim, k) = (h.dim(), h.k());
    Ok(run("boundary_minus_cone_in_set", opts, |rng| {
        let Some((y, v)) = sample_in_domain(
            rng,
            |y| h.eval_unchecked(y),
            dim,
            opts.half_width,
            ExtReal::is_finite,
        ) else {
            return Sample::Skipped;
        };
        let a = add(&y, k, -v.finite().expect("finite"));
        let b = cone.sample(rng, 2.0);
        let p = add(&a, &b, -1.0);
        let inside = h.set().contains_unchecked(&p, 1e-6);
        Sample::checked(if inside { 0.0 } else { 1.0 }, 0.5, vec![a, b], vec![v])
    }))
}

#[cfg(test)]
mod tests {
    use super::super::{Fault, Faulty, Verdict};
    use super::*;

    #[test]
    fn polyhedral_sets_are_not_strictly_quasiconvex() {
        let r = check_strictly_quasiconvex(
            &fixtures::orthant_handle(&[1.0, 1.0]),
            &CheckOptions::new(2000, 1),
        );
        assert!(r.violated() && r.witness.is_some());
    }

    #[test]
    fn concavity_needs_the_cover_assertion() {
        let h = fixtures::orthant_handle(&[1.0, 1.0]);
        assert_eq!(
            check_concave(&h, false, &CheckOptions::new(100, 1)).verdict,
            Verdict::Inapplicable
        );
        // max(y1, y2) is convex, not concave
        assert!(check_concave(&h, true, &CheckOptions::new(2000, 1)).violated());
        // a halfplane gives an affine functional: both concave and convex
        let half = FunctionalHandle::new(
            SetExpr::from_rows(&[(&[1.0, 2.0], 1.0)]).unwrap(),
            &[1.0, 1.0],
        )
        .unwrap();
        assert!(check_concave(&half, true, &CheckOptions::new(2000, 1)).holds());
    }
    use crate::evaluator::{FunctionalHandle, Strategy};
    use crate::fixtures;
    use crate::geometry::{recession_cone, SetExpr};

    fn opts() -> CheckOptions {
        CheckOptions::new(4000, 42)
    }

    #[test]
    fn sublevel_identity_fixtures() {
        assert!(check_sublevel_identity(&fixtures::notched_handle(), &opts()).holds());
        let bis = fixtures::notched_handle().with_strategy(Strategy::Bisection);
        assert!(check_sublevel_identity(&bis, &opts()).holds());
        let biased = Faulty::new(fixtures::notched_handle(), Fault::Bias(0.1));
        let r = check_sublevel_identity(&biased, &opts());
        assert_eq!(r.verdict, Verdict::Violated);
        assert!(r.witness.is_some());
        let boundary = fixtures::orthant_handle(&[1.0, 0.0]);
        let r = check_sublevel_identity(&boundary, &opts());
        assert!(r.holds());
        assert!(r.applicable < r.samples);
    }

    #[test]
    fn translation_invariance_fixtures() {
        let r = check_translation_invariance(&fixtures::notched_handle(), &opts());
        assert!(r.holds() && r.max_defect <= 1e-7);
        let h = fixtures::orthant_handle(&[1.0, 1.0]).with_strategy(Strategy::Bisection);
        let r = check_translation_invariance(&h, &opts());
        assert!(r.holds(), "{r:?}");
        let scaled = Faulty::new(fixtures::orthant_handle(&[1.0, 1.0]), Fault::Scale(1.1));
        assert!(check_translation_invariance(&scaled, &opts()).violated());
    }

    #[test]
    fn recession_inequality_fixtures() {
        let h = fixtures::notched_handle();
        let rec = FunctionalHandle::new(recession_cone(h.set()).unwrap().to_set(), h.k()).unwrap();
        assert!(check_recession_inequality(&h, &rec, &opts())
            .unwrap()
            .holds());
        let cone = fixtures::orthant_handle(&[1.0, 1.0]);
        let r = check_recession_inequality(&cone, &cone, &opts()).unwrap();
        assert!(r.holds() && r.max_defect == 0.0);
        let bad = Faulty::new(cone.clone(), Fault::Negate);
        assert!(check_recession_inequality(&bad, &cone, &opts())
            .unwrap()
            .violated());
    }

    #[test]
    fn dual_relation_fixtures() {
        assert!(check_dual_relation(&fixtures::orthant_handle(&[1.0, 1.0]), &opts()).holds());
        assert_eq!(
            check_dual_relation(&fixtures::notched_handle(), &opts()).verdict,
            Verdict::Inapplicable
        );
        let bad = Faulty::new(fixtures::orthant_handle(&[1.0, 1.0]), Fault::Negate);
        assert!(check_dual_relation(&bad, &opts()).violated());
    }

    #[test]
    fn convexity_flags() {
        let r = classify_convexity(&fixtures::orthant_handle(&[1.0, 1.0]), &opts());
        assert!(r.reports().iter().all(|x| x.holds()), "{r:?}");
        let r = classify_convexity(&fixtures::notched_handle(), &opts());
        assert!(r.convex.violated() && r.convex.witness.is_some());
        let shifted =
            SetExpr::shift(SetExpr::nonpositive_orthant(2).unwrap(), vec![1.0, 0.0]).unwrap();
        let h = FunctionalHandle::new(shifted, &[1.0, 1.0]).unwrap();
        let r = classify_convexity(&h, &opts());
        assert!(r.convex.holds());
        assert!(r.subadditive.violated() && r.sublinear.violated());
    }

    #[test]
    fn monotonicity_fixtures() {
        let h = fixtures::orthant_handle(&[1.0, 1.0]);
        let r = check_monotone(&h, &MonotoneCone::nonneg_orthant(2), true, &opts()).unwrap();
        assert!(r.functional.holds() && r.set_inclusion.holds() && r.consistent());
        let down = MonotoneCone::new(2, vec![vec![0.0, -1.0]]).unwrap();
        let r = check_monotone(&h, &down, false, &opts()).unwrap();
        assert!(r.functional.violated() && r.functional.witness.is_some());
        assert!(r.set_inclusion.violated());
        let zero = MonotoneCone::new(2, vec![]).unwrap();
        for strict in [false, true] {
            assert!(check_monotone(&h, &zero, strict, &opts())
                .unwrap()
                .functional
                .holds());
        }
        assert!(MonotoneCone::new(2, vec![vec![0.0, 0.0]]).is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let biased = Faulty::new(fixtures::notched_handle(), Fault::Bias(0.1));
        let a = check_sublevel_identity(&biased, &opts());
        let b = check_sublevel_identity(&biased, &opts());
        assert_eq!(a, b);
        let w = a.witness.unwrap();
        // re-running the witness reproduces the mismatch
        let (y, t) = (&w.inputs[0], w.inputs[1][0]);
        let h = fixtures::notched_handle();
        let member = h.set().contains(&add(y, h.k(), -t), SUBLEVEL_EPS).unwrap();
        assert_ne!(member, biased.value(y).le(ExtReal::Finite(t)));
    }
}
