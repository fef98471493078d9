//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the report always prints. Set
//! `MMST_WRITE_BASELINE=1` to record the current timings as the complexity
//! baseline instead of checking against it.

mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monotone_mst::geometry::{Axis, CriticalSchedule, Fold, OrthoSystem, Point, RootedPointSet};
use monotone_mst::oracle::{
    brute_is_rooted_monotone, brute_parent_ymmst, brute_parent_ymmst_closed, brute_ummst, brute_ummst2d, brute_uniform_axis,
    brute_uniform_system, brute_xymmst, brute_xymmst_closed, Monotonicity,
};
use monotone_mst::recognition::{is_rooted_xy_monotone, is_rooted_y_monotone, uniform_2d_monotone_system, uniform_monotone_axis};
use monotone_mst::ummst::SweepState;
use monotone_mst::ummst2d::Sweep2dState;
use monotone_mst::{ummst, ummst2d, xymmst, xymmst_closed, ymmst, ymmst_closed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration, summary: String) -> Outcome {
    let took = started.elapsed();
    if took <= limit {
        Ok(format!("{summary}, {:.1} s", took.as_secs_f64()))
    } else {
        Err(format!(
            "{summary}, but took {:.1} s (limit {} s)",
            took.as_secs_f64(),
            limit.as_secs()
        ))
    }
}

fn random_axis_off(rng: &mut impl Rng, ps: &RootedPointSet) -> Axis {
    loop {
        let d = common::random_direction(rng);
        let a = Axis::new(d.0, d.1).unwrap();
        if ps.non_root().all(|p| a.key(ps.point(p)) != 0) {
            return a;
        }
    }
}

fn random_system_off(rng: &mut impl Rng, ps: &RootedPointSet) -> OrthoSystem {
    loop {
        let d = common::random_direction(rng);
        let s = OrthoSystem::new(d.0, d.1).unwrap();
        if ps.non_root().all(|p| {
            let (x, y) = s.coords(ps.point(p));
            x != 0 && y != 0
        }) {
            return s;
        }
    }
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for set in 0..1000 {
        let n = rng.gen_range(2..=64);
        let ps = common::random_set(&mut rng, n);
        for _ in 0..20 {
            let a = random_axis_off(&mut rng, &ps);
            let fast = ymmst(&ps, &a).map_err(|e| e.to_string())?;
            let slow = brute_parent_ymmst(&ps, &a).map_err(|e| e.to_string())?;
            check(fast == slow, || format!("set {set} (n = {n}) differs at axis {a:?}"))?;
        }
    }
    within(started, Duration::from_secs(60), "1000 sets x 20 axes identical".into())
}

fn criterion_2() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for set in 0..1000 {
        let n = rng.gen_range(2..=64);
        let ps = common::random_set(&mut rng, n);
        for _ in 0..20 {
            let s = random_system_off(&mut rng, &ps);
            let fast = xymmst(&ps, &s).map_err(|e| e.to_string())?;
            let slow = brute_xymmst(&ps, &s).map_err(|e| e.to_string())?;
            check(fast == slow, || format!("set {set} (n = {n}) differs at system {s:?}"))?;
        }
    }
    within(started, Duration::from_secs(60), "1000 sets x 20 systems identical".into())
}

fn criterion_3() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for set in 0..200 {
        let n = rng.gen_range(2..=40);
        let ps = common::random_set(&mut rng, n);
        let (a, t) = ummst(&ps).map_err(|e| e.to_string())?;
        let (_, bt) = brute_ummst(&ps).map_err(|e| e.to_string())?;
        check(common::rel_close(t.cost(), bt.cost(), 1e-9), || {
            format!("set {set} (n = {n}): cost {} vs oracle {}", t.cost(), bt.cost())
        })?;
        let at = brute_parent_ymmst_closed(&ps, &a).map_err(|e| e.to_string())?;
        check(t.canonical_edges() == at.canonical_edges(), || {
            format!("set {set} (n = {n}): edges differ at {a:?}")
        })?;
    }
    within(
        started,
        Duration::from_secs(300),
        "200 sets, costs within 1e-9 and edges equal at the winning axis".into(),
    )
}

fn criterion_4() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for set in 0..100 {
        let n = rng.gen_range(2..=30);
        let ps = common::random_set(&mut rng, n);
        let (s, t) = ummst2d(&ps).map_err(|e| e.to_string())?;
        let (_, bt) = brute_ummst2d(&ps).map_err(|e| e.to_string())?;
        check(common::rel_close(t.cost(), bt.cost(), 1e-9), || {
            format!("set {set} (n = {n}): cost {} vs oracle {}", t.cost(), bt.cost())
        })?;
        let at = brute_xymmst_closed(&ps, &s).map_err(|e| e.to_string())?;
        check(t.canonical_edges() == at.canonical_edges(), || {
            format!("set {set} (n = {n}): edges differ at {s:?}")
        })?;
    }
    within(
        started,
        Duration::from_secs(300),
        "100 sets, costs within 1e-9 and edges equal at the winning system".into(),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let (mut axes, mut systems) = (0, 0);
    for sweep in 0..20 {
        let n = rng.gen_range(2..=24);
        let ps = common::random_set(&mut rng, n);
        let mut st = SweepState::new(&ps).map_err(|e| e.to_string())?;
        loop {
            st.check_invariants().map_err(|e| format!("sweep {sweep}: {e}"))?;
            let fresh = ymmst_closed(&ps, &st.axis()).map_err(|e| e.to_string())?.tree;
            let tree = st.tree().map_err(|e| e.to_string())?;
            check(tree.canonical_edges() == fresh.canonical_edges(), || {
                format!("sweep {sweep}: edges differ at axis {}", st.axis_index())
            })?;
            check(common::rel_close(st.cost(), fresh.cost(), 1e-9), || {
                format!("sweep {sweep}: cost drift at axis {}", st.axis_index())
            })?;
            axes += 1;
            if !st.advance().map_err(|e| e.to_string())? {
                break;
            }
        }
        let mut st = Sweep2dState::new(&ps).map_err(|e| e.to_string())?;
        loop {
            st.check_invariants().map_err(|e| format!("2-D sweep {sweep}: {e}"))?;
            let fresh = xymmst_closed(&ps, &st.system()).map_err(|e| e.to_string())?;
            let tree = st.tree().map_err(|e| e.to_string())?;
            check(tree.canonical_edges() == fresh.canonical_edges(), || {
                format!("2-D sweep {sweep}: edges differ at system {}", st.system_index())
            })?;
            check(common::rel_close(st.cost(), fresh.cost(), 1e-9), || {
                format!("2-D sweep {sweep}: cost drift at system {}", st.system_index())
            })?;
            systems += 1;
            if !st.advance().map_err(|e| e.to_string())? {
                break;
            }
        }
    }
    Ok(format!("20 sweeps of each kind, {axes} axes and {systems} systems checked"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let (mut yes_axis, mut yes_system) = (0, 0);
    for round in 0..1000 {
        let n = rng.gen_range(2..=9);
        // Half the graphs live on a small grid, where equal projections at
        // critical slopes are frequent.
        let ps = if round % 2 == 0 {
            common::random_set_in(&mut rng, n, 12)
        } else {
            common::random_set(&mut rng, n)
        };
        let extra = rng.gen_range(0..=3);
        let g = common::graph(&ps, common::random_connected_edges(&mut rng, n, extra));
        let a = random_axis_off(&mut rng, &ps);
        let want = brute_is_rooted_monotone(&g, Monotonicity::Axis(a)).map_err(|e| e.to_string())?;
        check(is_rooted_y_monotone(&g, &a).map_err(|e| e.to_string())? == want, || {
            format!("graph {round}: y recognizer")
        })?;
        let s = random_system_off(&mut rng, &ps);
        let want = brute_is_rooted_monotone(&g, Monotonicity::System(s)).map_err(|e| e.to_string())?;
        check(is_rooted_xy_monotone(&g, &s).map_err(|e| e.to_string())? == want, || {
            format!("graph {round}: xy recognizer")
        })?;
        // The fixed-direction recognizers must also agree at every critical
        // direction, where ties occur.
        let half = CriticalSchedule::for_graph(&g, Fold::HalfTurn).map_err(|e| e.to_string())?;
        for i in 0..half.len() {
            let a = half.axis(i);
            let want = brute_is_rooted_monotone(&g, Monotonicity::Axis(a)).map_err(|e| e.to_string())?;
            check(is_rooted_y_monotone(&g, &a).map_err(|e| e.to_string())? == want, || {
                format!("graph {round}: y recognizer at {a:?}")
            })?;
        }
        let quarter = CriticalSchedule::for_graph(&g, Fold::QuarterTurn).map_err(|e| e.to_string())?;
        for i in 0..quarter.len() {
            let s = quarter.system(i);
            let want = brute_is_rooted_monotone(&g, Monotonicity::System(s)).map_err(|e| e.to_string())?;
            check(is_rooted_xy_monotone(&g, &s).map_err(|e| e.to_string())? == want, || {
                format!("graph {round}: xy recognizer at {s:?}")
            })?;
        }
        let got = uniform_monotone_axis(&g).map_err(|e| e.to_string())?;
        check(got == brute_uniform_axis(&g).map_err(|e| e.to_string())?, || {
            format!("graph {round}: uniform recognizer")
        })?;
        yes_axis += got.is_some() as usize;
        let got = uniform_2d_monotone_system(&g).map_err(|e| e.to_string())?;
        check(got == brute_uniform_system(&g).map_err(|e| e.to_string())?, || {
            format!("graph {round}: uniform 2-D recognizer")
        })?;
        yes_system += got.is_some() as usize;
    }
    let mut outputs = 0;
    for n in [2usize, 10, 50, 100, 200] {
        let ps = common::random_set(&mut rng, n);
        let a = random_axis_off(&mut rng, &ps);
        let t = ymmst(&ps, &a).map_err(|e| e.to_string())?;
        check(is_rooted_y_monotone(&t.as_graph(&ps), &a).map_err(|e| e.to_string())?, || {
            format!("ymmst output, n = {n}")
        })?;
        let s = random_system_off(&mut rng, &ps);
        let t = xymmst(&ps, &s).map_err(|e| e.to_string())?;
        check(
            is_rooted_xy_monotone(&t.as_graph(&ps), &s).map_err(|e| e.to_string())?,
            || format!("xymmst output, n = {n}"),
        )?;
        let (a, t) = ummst(&ps).map_err(|e| e.to_string())?;
        let g = t.as_graph(&ps);
        check(is_rooted_y_monotone(&g, &a).map_err(|e| e.to_string())?, || {
            format!("ummst output, n = {n}")
        })?;
        check(uniform_monotone_axis(&g).map_err(|e| e.to_string())?.is_some(), || {
            format!("ummst output (uniform), n = {n}")
        })?;
        let (s, t) = ummst2d(&ps).map_err(|e| e.to_string())?;
        let g = t.as_graph(&ps);
        check(is_rooted_xy_monotone(&g, &s).map_err(|e| e.to_string())?, || {
            format!("ummst2d output, n = {n}")
        })?;
        check(uniform_2d_monotone_system(&g).map_err(|e| e.to_string())?.is_some(), || {
            format!("ummst2d output (uniform), n = {n}")
        })?;
        outputs += 4;
    }
    Ok(format!(
        "1000 graphs agree with path search ({yes_axis} uniformly monotone, {yes_system} uniformly 2-D monotone); {outputs} construction outputs recognized"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for case in 0..100 {
        let len = rng.gen_range(1..=500);
        // Values are distinct and positive so the points are distinct from
        // each other and from the root.
        let values = rand::seq::index::sample(&mut rng, 1_000_000, len);
        let coords: Vec<(i64, i64)> = std::iter::once((0, 0))
            .chain(values.iter().map(|v| {
                let a = v as i64 + 1;
                (a, a * a)
            }))
            .collect();
        let ps = RootedPointSet::from_integers(&coords, 0).map_err(|e| e.to_string())?;
        let t = ymmst(&ps, &Axis::Y).map_err(|e| e.to_string())?;
        let mut order: Vec<usize> = (1..coords.len()).collect();
        order.sort_by_key(|&i| coords[i].0);
        let mut prev = 0;
        for &v in &order {
            check(t.parent(v) == Some(prev), || {
                format!("case {case}: point {v} is not joined to its predecessor")
            })?;
            prev = v;
        }
    }
    Ok("100 sequences, every tree is the sorted path".into())
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn perf_set(rng: &mut impl Rng, n: usize) -> RootedPointSet {
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    rng.gen_range(-common::RANGE..=common::RANGE),
                    rng.gen_range(-common::RANGE..=common::RANGE),
                )
            })
            .collect();
        if let Ok(ps) = RootedPointSet::from_lattice(pts, 0, 0) {
            return ps;
        }
    }
}

/// Median of five timed runs of `f` on fresh inputs of size `n`.
fn time_median(rng: &mut impl Rng, n: usize, f: &dyn Fn(&RootedPointSet, &mut ChaCha8Rng)) -> f64 {
    let runs = (0..5)
        .map(|_| {
            let ps = perf_set(rng, n);
            let mut local = ChaCha8Rng::seed_from_u64(n as u64);
            let started = Instant::now();
            f(&ps, &mut local);
            started.elapsed().as_secs_f64()
        })
        .collect();
    median(runs)
}

fn baseline_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/perf_baseline.json")
}

fn criterion_8() -> Outcome {
    type Runner = Box<dyn Fn(&RootedPointSet, &mut ChaCha8Rng)>;
    let cases: Vec<(&str, std::ops::RangeInclusive<u32>, f64, Runner)> = vec![
        (
            "ymmst",
            12..=17,
            2.8,
            Box::new(|ps, rng| {
                ymmst(ps, &random_axis_off(rng, ps)).unwrap();
            }),
        ),
        (
            "xymmst",
            12..=17,
            3.2,
            Box::new(|ps, rng| {
                xymmst(ps, &random_system_off(rng, ps)).unwrap();
            }),
        ),
        (
            "ummst",
            8..=11,
            4.6,
            Box::new(|ps, _| {
                ummst(ps).unwrap();
            }),
        ),
        (
            "ummst2d",
            8..=11,
            4.6,
            Box::new(|ps, _| {
                ummst2d(ps).unwrap();
            }),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut measured: BTreeMap<String, f64> = BTreeMap::new();
    let mut warnings = Vec::new();
    for (name, exps, bound, run) in &cases {
        let mut prev: Option<f64> = None;
        let mut row = format!("    {name:8}");
        for k in exps.clone() {
            let n = 1usize << k;
            let t = time_median(&mut rng, n, run.as_ref());
            measured.insert(format!("{name}/{n}"), t);
            row.push_str(&format!("  2^{k}: {:.4} s", t));
            if let Some(p) = prev {
                let ratio = t / p;
                row.push_str(&format!(" (x{ratio:.2})"));
                if ratio > *bound {
                    warnings.push(format!("{name} ratio {ratio:.2} at n = 2^{k} exceeds {bound}"));
                }
            }
            prev = Some(t);
        }
        println!("{row}");
    }
    for w in &warnings {
        println!("    warning: {w}");
    }

    let path = baseline_path();
    if std::env::var_os("MMST_WRITE_BASELINE").is_some() {
        let text = serde_json::to_string_pretty(&measured).map_err(|e| e.to_string())?;
        std::fs::write(&path, text + "\n").map_err(|e| e.to_string())?;
        return Ok(format!("baseline written to {}", path.display()));
    }
    let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let baseline: BTreeMap<String, f64> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let mut regressions = Vec::new();
    for (key, t) in &measured {
        // Timings below a millisecond are dominated by noise.
        if let Some(&b) = baseline.get(key) {
            if *t > 2.0 * b && *t > 1e-3 {
                regressions.push(format!("{key}: {t:.4} s vs baseline {b:.4} s"));
            }
        }
    }
    if regressions.is_empty() {
        Ok(format!(
            "no 2x regression against the baseline, {} ratio warnings",
            warnings.len()
        ))
    } else {
        Err(format!("regressions: {}", regressions.join("; ")))
    }
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for set in 0..100 {
        let n = rng.gen_range(2..=40);
        let ps = common::random_set(&mut rng, n);
        let best = ummst(&ps).map_err(|e| e.to_string())?.1.cost();
        let best2d = ummst2d(&ps).map_err(|e| e.to_string())?.1.cost();
        for _ in 0..100 {
            let a = random_axis_off(&mut rng, &ps);
            let c = ymmst(&ps, &a).map_err(|e| e.to_string())?.cost();
            check(best <= c + 1e-9, || {
                format!("set {set}: ummst {best} above ymmst {c} at {a:?}")
            })?;
            let s = random_system_off(&mut rng, &ps);
            let c = xymmst(&ps, &s).map_err(|e| e.to_string())?.cost();
            check(best2d <= c + 1e-9, || {
                format!("set {set}: ummst2d {best2d} above xymmst {c} at {s:?}")
            })?;
        }
    }
    Ok("100 sets x 100 axes and 100 systems".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("y-MMST matches its oracle", criterion_1),
        ("xy-MMST matches its oracle", criterion_2),
        ("UMMST sweep matches brute force", criterion_3),
        ("2-D UMMST sweep matches brute force", criterion_4),
        ("sweep state equals recomputation at every index", criterion_5),
        ("recognizers agree with exhaustive path search", criterion_6),
        ("parabola points give the sorted path", criterion_7),
        ("complexity smoke", criterion_8),
        ("sweep optimum beats every fixed direction", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
