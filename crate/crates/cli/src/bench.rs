//! Timing table over point-set sizes and variants.

use std::fmt::Write;
use std::time::Instant;

use monotone_mst::geometry::{Axis, OrthoSystem, Point, RootedPointSet};
use monotone_mst::{ummst, ummst2d, xymmst, ymmst};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Failure, Variant};

const RANGE: i64 = 1 << 30;

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> RootedPointSet {
    loop {
        let pts = (0..n)
            .map(|_| Point::new(rng.gen_range(-RANGE..=RANGE), rng.gen_range(-RANGE..=RANGE)))
            .collect();
        if let Ok(ps) = RootedPointSet::from_lattice(pts, 0, 0) {
            return ps;
        }
    }
}

fn random_direction(rng: &mut ChaCha8Rng) -> (i64, i64) {
    loop {
        let d = (rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(-1_000_000..=1_000_000));
        if d != (0, 0) {
            return d;
        }
    }
}

/// Builds one tree and returns its cost. Random directions that put a point
/// on the root line or an axis are redrawn.
fn run(variant: Variant, ps: &RootedPointSet, rng: &mut ChaCha8Rng) -> Result<f64, Failure> {
    let cost = match variant {
        Variant::Y => loop {
            let d = random_direction(rng);
            if let Ok(t) = ymmst(ps, &Axis::new(d.0, d.1).map_err(Failure::invalid)?) {
                break t.cost();
            }
        },
        Variant::Xy => loop {
            let d = random_direction(rng);
            if let Ok(t) = xymmst(ps, &OrthoSystem::new(d.0, d.1).map_err(Failure::invalid)?) {
                break t.cost();
            }
        },
        Variant::Uniform => ummst(ps).map_err(Failure::invalid)?.1.cost(),
        Variant::Uniform2d => ummst2d(ps).map_err(Failure::invalid)?.1.cost(),
    };
    Ok(cost)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// One row per `(variant, size)`: cost of the first repetition, median wall
/// time and the ratio to the previous size of the same variant. Inputs
/// depend only on the seed, so with `omit_times` the table is reproducible
/// byte for byte.
pub fn table(sizes: &[usize], variants: &[Variant], seed: u64, repeats: usize, omit_times: bool) -> Result<String, Failure> {
    let mut out = String::new();
    if omit_times {
        writeln!(out, "{:<11} {:>8} {:>20}", "variant", "n", "cost").unwrap();
    } else {
        writeln!(
            out,
            "{:<11} {:>8} {:>20} {:>12} {:>7}",
            "variant", "n", "cost", "median_s", "ratio"
        )
        .unwrap();
    }
    for &variant in variants {
        let mut prev: Option<f64> = None;
        for (k, &n) in sizes.iter().enumerate() {
            if n < 2 {
                return Err(Failure::Invalid(format!("size {n} is below 2")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32));
            let mut times = Vec::with_capacity(repeats);
            let mut cost = 0.0;
            for rep in 0..repeats.max(1) {
                let ps = random_set(&mut rng, n);
                let started = Instant::now();
                let c = run(variant, &ps, &mut rng)?;
                times.push(started.elapsed().as_secs_f64());
                if rep == 0 {
                    cost = c;
                }
            }
            if omit_times {
                writeln!(out, "{:<11} {:>8} {:>20.6}", variant.name(), n, cost).unwrap();
            } else {
                let t = median(times);
                let ratio = prev.map_or("-".to_string(), |p| format!("{:.2}", t / p));
                writeln!(out, "{:<11} {:>8} {:>20.6} {:>12.6} {:>7}", variant.name(), n, cost, t, ratio).unwrap();
                prev = Some(t);
            }
        }
    }
    Ok(out)
}
