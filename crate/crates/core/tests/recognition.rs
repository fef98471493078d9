mod common;

use monotone_mst::geometry::{Axis, CriticalSchedule, Fold, GeometricGraph, OrthoSystem};
use monotone_mst::oracle::{brute_is_rooted_monotone, brute_uniform_axis, brute_uniform_system, Monotonicity};
use monotone_mst::recognition::*;
use monotone_mst::{ummst, ummst2d, xymmst, ymmst};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every critical direction of the graph plus a few random ones, so that
/// equal and zero projections are exercised.
fn directions(g: &GeometricGraph<'_>, rng: &mut impl Rng) -> (Vec<Axis>, Vec<OrthoSystem>) {
    let half = CriticalSchedule::for_graph(g, Fold::HalfTurn).unwrap();
    let quarter = CriticalSchedule::for_graph(g, Fold::QuarterTurn).unwrap();
    let mut axes: Vec<Axis> = (0..half.len()).map(|i| half.axis(i)).collect();
    let mut systems: Vec<OrthoSystem> = (0..quarter.len()).map(|i| quarter.system(i)).collect();
    for _ in 0..4 {
        let d = common::random_direction(rng);
        axes.push(Axis::new(d.0, d.1).unwrap());
        systems.push(OrthoSystem::new(d.0, d.1).unwrap());
    }
    (axes, systems)
}

#[test]
fn fixed_direction_recognizers_match_path_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for round in 0..150 {
        let n = rng.gen_range(2..=8);
        // Small coordinates make ties between projections common.
        let ps = if round % 2 == 0 {
            common::random_set_in(&mut rng, n, 12)
        } else {
            common::random_set(&mut rng, n)
        };
        let extra = rng.gen_range(0..=n);
        let g = common::graph(&ps, common::random_connected_edges(&mut rng, n, extra));
        let (axes, systems) = directions(&g, &mut rng);
        for a in &axes {
            let want = brute_is_rooted_monotone(&g, Monotonicity::Axis(*a)).unwrap();
            assert_eq!(is_rooted_y_monotone(&g, a).unwrap(), want, "axis {a:?}");
            assert_eq!(y_count_test(&g, a).unwrap(), want, "count, axis {a:?}");
        }
        for s in &systems {
            let want = brute_is_rooted_monotone(&g, Monotonicity::System(*s)).unwrap();
            assert_eq!(is_rooted_xy_monotone(&g, s).unwrap(), want, "system {s:?}");
            assert_eq!(xy_count_test(&g, s).unwrap(), want, "count, system {s:?}");
        }
    }
}

#[test]
fn uniform_sweeps_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let (mut found_axis, mut found_system) = (0, 0);
    for round in 0..200 {
        let n = rng.gen_range(2..=8);
        let ps = if round % 2 == 0 {
            common::random_set_in(&mut rng, n, 12)
        } else {
            common::random_set(&mut rng, n)
        };
        let extra = rng.gen_range(0..=2);
        let g = common::graph(&ps, common::random_connected_edges(&mut rng, n, extra));
        let axis = uniform_monotone_axis(&g).unwrap();
        assert_eq!(axis, brute_uniform_axis(&g).unwrap());
        if let Some(a) = axis {
            found_axis += 1;
            assert!(is_rooted_y_monotone(&g, &a).unwrap());
        }
        let sys = uniform_2d_monotone_system(&g).unwrap();
        assert_eq!(sys, brute_uniform_system(&g).unwrap());
        if let Some(s) = sys {
            found_system += 1;
            assert!(is_rooted_xy_monotone(&g, &s).unwrap());
        }
    }
    // Both outcomes must actually occur for the comparison to mean much.
    assert!(found_axis > 20 && found_axis < 200, "{found_axis}");
    assert!(found_system > 20 && found_system < 200, "{found_system}");
}

#[test]
fn five_vertex_graph_rejected_everywhere() {
    // A zigzag whose turns point in every direction.
    let ps = monotone_mst::geometry::RootedPointSet::from_integers(&[(0, 0), (10, 1), (1, 9), (-9, 2), (-1, -11)], 0).unwrap();
    let g = GeometricGraph::new(&ps, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert_eq!(brute_uniform_axis(&g).unwrap(), None);
    assert_eq!(uniform_monotone_axis(&g).unwrap(), None);
    assert_eq!(brute_uniform_system(&g).unwrap(), None);
    assert_eq!(uniform_2d_monotone_system(&g).unwrap(), None);
}

#[test]
fn construction_outputs_pass_their_recognizers() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in [2usize, 5, 17, 60, 200] {
        let ps = common::random_set(&mut rng, n);
        let d = common::random_direction(&mut rng);
        let a = Axis::new(d.0, d.1).unwrap();
        if ps.non_root().all(|p| a.key(ps.point(p)) != 0) {
            let t = ymmst(&ps, &a).unwrap();
            assert!(is_rooted_y_monotone(&t.as_graph(&ps), &a).unwrap());
            assert!(uniform_monotone_axis(&t.as_graph(&ps)).unwrap().is_some());
        }
        let s = OrthoSystem::new(d.0, d.1).unwrap();
        if ps.non_root().all(|p| {
            let (x, y) = s.coords(ps.point(p));
            x != 0 && y != 0
        }) {
            let t = xymmst(&ps, &s).unwrap();
            assert!(is_rooted_xy_monotone(&t.as_graph(&ps), &s).unwrap());
        }
        if n <= 60 {
            let (a, t) = ummst(&ps).unwrap();
            assert!(is_rooted_y_monotone(&t.as_graph(&ps), &a).unwrap());
            let (s, t) = ummst2d(&ps).unwrap();
            assert!(is_rooted_xy_monotone(&t.as_graph(&ps), &s).unwrap());
            assert!(uniform_2d_monotone_system(&t.as_graph(&ps)).unwrap().is_some());
        }
    }
}
