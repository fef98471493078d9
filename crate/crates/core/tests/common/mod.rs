#![allow(dead_code)]

use monotone_mst::geometry::{validate_general_position, GeometricGraph, OrthoSystem, RootedPointSet};
use rand::Rng;

/// Coordinates are drawn from `[-RANGE, RANGE]`. The range is wide enough
/// that two candidate parents at exactly equal distance essentially never
/// occur, so edge sets can be compared exactly.
pub const RANGE: i64 = 1 << 30;

/// Random rooted set of `n` distinct points with no three collinear.
pub fn random_set(rng: &mut impl Rng, n: usize) -> RootedPointSet {
    random_set_in(rng, n, RANGE)
}

pub fn random_set_in(rng: &mut impl Rng, n: usize, range: i64) -> RootedPointSet {
    loop {
        let coords: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.gen_range(-range..=range), rng.gen_range(-range..=range)))
            .collect();
        let root = rng.gen_range(0..n);
        if let Ok(ps) = RootedPointSet::from_integers(&coords, root) {
            if validate_general_position(&ps).is_ok() {
                return ps;
            }
        }
    }
}

/// Random set with no non-root point on an axis of `sys`.
pub fn random_set_off_axes(rng: &mut impl Rng, n: usize, sys: &OrthoSystem) -> RootedPointSet {
    loop {
        let ps = random_set(rng, n);
        if ps.non_root().all(|p| {
            let (x, y) = sys.coords(ps.point(p));
            x != 0 && y != 0
        }) {
            return ps;
        }
    }
}

/// Random direction vector, not necessarily reduced.
pub fn random_direction(rng: &mut impl Rng) -> (i64, i64) {
    loop {
        let d = (rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(-1_000_000..=1_000_000));
        if d != (0, 0) {
            return d;
        }
    }
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_edges(rng: &mut impl Rng, n: usize, extra: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for i in 1..n {
        edges.push((order[rng.gen_range(0..i)], order[i]));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
            edges.push((a, b));
        }
    }
    edges
}

pub fn graph(ps: &RootedPointSet, edges: Vec<(usize, usize)>) -> GeometricGraph<'_> {
    GeometricGraph::new(ps, edges).unwrap()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
