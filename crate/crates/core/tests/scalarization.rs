mod common;

use common::{gens_times, random_cloud, simplicial_cone};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ulset::scalarization::{scalarize, trace_front, weakly_efficient, OrderCone};
use ulset::{Exec, PointCloud};

fn random_setup(rng: &mut ChaCha8Rng) -> (PointCloud, OrderCone, Vec<f64>) {
    let m = rng.gen_range(2..=3);
    let cloud = PointCloud::new(random_cloud(rng, m)).unwrap();
    let (cone, k) = if rng.gen_bool(0.5) {
        let k = (0..m).map(|_| rng.gen_range(0.3..=2.0)).collect();
        (OrderCone::nonneg_orthant(m), k)
    } else {
        let (cone, _) = simplicial_cone(rng, m);
        let w: Vec<f64> = (0..m).map(|_| rng.gen_range(0.3..=2.0)).collect();
        let k = gens_times(&cone, &w);
        (cone, k)
    };
    (cloud, cone, k)
}

#[test]
fn minimizers_are_weakly_efficient() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let (cloud, cone, k) = random_setup(&mut rng);
        let eff = weakly_efficient(&cloud, &cone).unwrap();
        for _ in 0..5 {
            let a: Vec<f64> = (0..cloud.dim())
                .map(|_| rng.gen_range(-2.0..12.0))
                .collect();
            let r = scalarize(&cloud, &cone, &k, &a).unwrap();
            assert!(!r.argmin.is_empty());
            for i in &r.argmin {
                assert!(eff.contains(i), "minimizer {i} is dominated");
            }
        }
    }
}

#[test]
fn sweeping_the_cloud_recovers_the_front() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let (cloud, cone, k) = random_setup(&mut rng);
        let eff = weakly_efficient(&cloud, &cone).unwrap();
        let front = trace_front(&cloud, &cone, &k, cloud.points(), Exec::default()).unwrap();
        assert_eq!(front.points, eff);
        let seq = trace_front(&cloud, &cone, &k, cloud.points(), Exec::Sequential).unwrap();
        assert_eq!(front, seq);
    }
}

#[test]
fn shifting_cloud_and_reference_together() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..50 {
        let (cloud, cone, k) = random_setup(&mut rng);
        let m = cloud.dim();
        let b: Vec<f64> = (0..m).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let a: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..10.0)).collect();
        let ab: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        let r0 = scalarize(&cloud, &cone, &k, &a).unwrap();
        let r1 = scalarize(&cloud.translated(&b).unwrap(), &cone, &k, &ab).unwrap();
        let (v0, v1) = (r0.value.finite().unwrap(), r1.value.finite().unwrap());
        assert!((v0 - v1).abs() <= 1e-9 * (1.0 + v0.abs()), "{v0} vs {v1}");
        // minimizer sets agree up to points whose values straddle the tie band
        for i in r0.argmin.iter().filter(|i| !r1.argmin.contains(i)) {
            let h = scalarize(
                &PointCloud::new(vec![cloud.points()[*i].clone()]).unwrap(),
                &cone,
                &k,
                &a,
            )
            .unwrap();
            assert!((h.value.finite().unwrap() - v0).abs() <= 2e-9 * (1.0 + v0.abs()));
        }
    }
}

#[test]
fn scaling_the_direction_keeps_minimizers() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..50 {
        let (cloud, cone, k) = random_setup(&mut rng);
        let k3: Vec<f64> = k.iter().map(|x| 3.0 * x).collect();
        let a: Vec<f64> = (0..cloud.dim()).map(|_| rng.gen_range(0.0..10.0)).collect();
        let r = scalarize(&cloud, &cone, &k, &a).unwrap();
        let r3 = scalarize(&cloud, &cone, &k3, &a).unwrap();
        let (v, v3) = (r.value.finite().unwrap(), r3.value.finite().unwrap());
        assert!((v / 3.0 - v3).abs() <= 1e-9 * (1.0 + v.abs()));
        for i in r3.argmin.iter() {
            assert!(r.argmin.contains(i));
        }
    }
}
