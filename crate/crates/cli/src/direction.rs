//! Reading user-supplied angles.
//!
//! An angle in degrees is turned into an integer direction. When it names,
//! up to printing precision, a slope at which the input has a tie (a point
//! on the root line, an edge perpendicular to the axis), the exact direction
//! of that slope is used, so that angles printed by `build` read back to the
//! same axis.

use monotone_mst::geometry::{Axis, OrthoSystem, RootedPointSet};

use crate::Failure;

/// Angles closer than this (in degrees) are taken to be the same slope.
const SNAP_DEGREES: f64 = 1e-9;

fn angular_gap(a: f64, b: f64, period: f64) -> f64 {
    let d = (a - b).rem_euclid(period);
    d.min(period - d)
}

fn closest<T: Copy>(degrees: f64, period: f64, candidates: impl Iterator<Item = (T, f64)>) -> Option<T> {
    candidates
        .map(|(c, slope)| (angular_gap(degrees, slope, period), c))
        .filter(|&(gap, _)| gap < SNAP_DEGREES)
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, c)| c)
}

/// Pairs whose ties matter: lines from the root to every point plus the
/// given edges.
fn tie_pairs<'a>(ps: &'a RootedPointSet, edges: &'a [(usize, usize)]) -> impl Iterator<Item = (i64, i64)> + 'a {
    let root = ps.root();
    ps.non_root()
        .map(move |q| (root, q))
        .chain(edges.iter().copied())
        .map(move |(a, b)| {
            let v = ps.point(b) - ps.point(a);
            (v.x, v.y)
        })
}

pub fn axis(degrees: f64, ps: &RootedPointSet, edges: &[(usize, usize)]) -> Result<Axis, Failure> {
    let candidates = tie_pairs(ps, edges)
        .filter_map(|(x, y)| Axis::new(-y, x).ok())
        .map(|a| (a, a.slope_degrees()));
    match closest(degrees, 180.0, candidates) {
        Some(a) => Ok(a),
        None => Axis::from_degrees(degrees).map_err(Failure::invalid),
    }
}

pub fn system(degrees: f64, ps: &RootedPointSet, edges: &[(usize, usize)]) -> Result<OrthoSystem, Failure> {
    let candidates = tie_pairs(ps, edges)
        .filter_map(|(x, y)| OrthoSystem::new(x, y).ok())
        .map(|s| (s, s.y_slope_degrees()));
    match closest(degrees, 90.0, candidates) {
        Some(s) => Ok(s),
        None => OrthoSystem::from_degrees(degrees).map_err(Failure::invalid),
    }
}
