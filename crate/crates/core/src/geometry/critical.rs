//! Critical slopes and the event schedule of a rotational sweep.
//!
//! Rotating an axis changes the combinatorics of a point set only at slopes
//! perpendicular to a line through two of its points (or, for orthogonal
//! systems, perpendicular or parallel to such a line). Those slopes are the
//! even-indexed entries of the schedule; between two consecutive ones sits an
//! odd-indexed slope that stands for the whole open interval.
//!
//! Even slopes are exact integer directions derived from point differences.
//! Odd slopes start from the floating-point midpoint of their neighbours and
//! are then checked exactly to lie strictly between them; when rounding puts
//! one outside, the sum of the two neighbouring directions is used instead.

use super::axis::{angle, canonical_half, cross, float_direction, fold_quarter, slope_order, Axis, OrthoSystem};
use super::graph::GeometricGraph;
use super::point::RootedPointSet;
use crate::error::{Error, Result};

use std::f64::consts::{FRAC_PI_2, PI};

/// Range of slopes swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fold {
    /// Single axes, slopes in `[0, π)`; a pair is critical when the axis is
    /// perpendicular to it.
    HalfTurn,
    /// Orthogonal systems, `y` slopes in `[0, π/2)`; a pair is critical when
    /// the `y` axis is parallel or perpendicular to it.
    QuarterTurn,
}

/// How a critical pair sits relative to the `y` axis of the system at which
/// it fires.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Parallel,
    Perpendicular,
}

/// Critical pairs that fire at one even slope.
#[derive(Debug, Clone, Copy)]
pub struct SweepEvent<'s> {
    /// Position of the slope in the full (even and odd) sequence.
    pub axis_index: usize,
    /// Point pairs with equal projection on the slope (or, for systems,
    /// parallel or perpendicular to it). Includes pairs with the root.
    pub pairs: &'s [(u32, u32)],
}

impl<'s> SweepEvent<'s> {
    /// Non-root endpoints of pairs that contain the root.
    pub fn root_pairs(self, root: usize) -> impl Iterator<Item = usize> + 's {
        let root = root as u32;
        self.pairs.iter().filter_map(move |&(a, b)| {
            if a == root {
                Some(b as usize)
            } else if b == root {
                Some(a as usize)
            } else {
                None
            }
        })
    }

    /// Pairs that do not involve the root.
    pub fn other_pairs(self, root: usize) -> impl Iterator<Item = (usize, usize)> + 's {
        let root = root as u32;
        self.pairs
            .iter()
            .filter(move |&&(a, b)| a != root && b != root)
            .map(|&(a, b)| (a as usize, b as usize))
    }
}

/// The ordered critical slopes of a sweep with their event lists.
#[derive(Debug, Clone)]
pub struct CriticalSchedule {
    fold: Fold,
    /// All 2m directions, even and odd interleaved, in slope order.
    directions: Vec<(i64, i64)>,
    /// `pairs[offsets[i]..offsets[i + 1]]` fire at direction `2 i`.
    offsets: Vec<usize>,
    pairs: Vec<(u32, u32)>,
}

impl CriticalSchedule {
    /// Schedule over every pair of points.
    pub fn for_point_pairs(ps: &RootedPointSet, fold: Fold) -> Result<Self> {
        let n = ps.len();
        if n < 2 {
            return Err(Error::TooFewPoints { needed: 2, got: n });
        }
        let pairs = (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)));
        Ok(Self::build(ps, pairs, fold))
    }

    /// Schedule over the edges of `g` plus every line through the root.
    pub fn for_graph(g: &GeometricGraph<'_>, fold: Fold) -> Result<Self> {
        let ps = g.points();
        let n = ps.len();
        if n < 2 {
            return Err(Error::TooFewPoints { needed: 2, got: n });
        }
        let root = ps.root() as u32;
        let mut pairs: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (a.min(b) as u32, a.max(b) as u32))
            .chain(ps.non_root().map(|q| (root.min(q as u32), root.max(q as u32))))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::build(ps, pairs.into_iter(), fold))
    }

    fn build(ps: &RootedPointSet, pairs: impl Iterator<Item = (u32, u32)>, fold: Fold) -> Self {
        let mut keyed: Vec<Keyed> = pairs
            .map(|(i, j)| {
                let v = ps.point(j as usize) - ps.point(i as usize);
                let d = match fold {
                    Fold::HalfTurn => canonical_half((-v.y, v.x)),
                    Fold::QuarterTurn => fold_quarter((v.x, v.y)).0,
                };
                (d, (i, j))
            })
            .collect();
        let angles = sort_by_slope(&mut keyed);

        let mut even: Vec<(i64, i64)> = Vec::new();
        let mut even_angles = Vec::new();
        let mut offsets = Vec::new();
        let mut pairs = Vec::with_capacity(keyed.len());
        for ((d, pair), a) in keyed.into_iter().zip(angles) {
            if even.last().is_none_or(|&last| cross(last, d) != 0) {
                even.push(reduce_dir(d));
                even_angles.push(a);
                offsets.push(pairs.len());
            }
            pairs.push(pair);
        }
        offsets.push(pairs.len());

        let end = match fold {
            Fold::HalfTurn => ((-1, 0), PI),
            Fold::QuarterTurn => ((0, 1), FRAC_PI_2),
        };
        let mut directions = Vec::with_capacity(2 * even.len());
        for (i, &d) in even.iter().enumerate() {
            let (next, next_angle) = match even.get(i + 1) {
                Some(&n) => (n, even_angles[i + 1]),
                None => end,
            };
            directions.push(d);
            directions.push(bisector(d, even_angles[i], next, next_angle));
        }
        CriticalSchedule {
            fold,
            directions,
            offsets,
            pairs,
        }
    }

    pub fn fold(&self) -> Fold {
        self.fold
    }

    /// Number of slopes, `2 m`.
    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// Direction of slope `i` (even or odd).
    pub fn direction(&self, i: usize) -> (i64, i64) {
        self.directions[i]
    }

    pub fn axis(&self, i: usize) -> Axis {
        Axis::from_canonical(self.directions[i])
    }

    pub fn system(&self, i: usize) -> OrthoSystem {
        OrthoSystem::from_folded(self.directions[i])
    }

    /// Events firing at the even slope `2 k`, or `None` for odd indices.
    pub fn event(&self, axis_index: usize) -> Option<SweepEvent<'_>> {
        if axis_index % 2 == 1 || axis_index >= self.len() {
            return None;
        }
        let k = axis_index / 2;
        Some(SweepEvent {
            axis_index,
            pairs: &self.pairs[self.offsets[k]..self.offsets[k + 1]],
        })
    }

    pub fn events(&self) -> impl Iterator<Item = SweepEvent<'_>> {
        (0..self.len()).step_by(2).filter_map(|i| self.event(i))
    }

    /// Total number of critical pairs over all slopes.
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// A direction tagged with the point pair it came from.
type Keyed = ((i64, i64), (u32, u32));

/// Sorts by slope, then pair. A float angle does the bulk of the work and
/// an insertion pass with exact comparisons repairs the few neighbours that
/// rounding put out of order.
/// Returns the float angles, aligned with the sorted entries.
fn sort_by_slope(keyed: &mut [Keyed]) -> Vec<f64> {
    let exact = |a: &Keyed, b: &Keyed| slope_order(a.0, b.0).then(a.1.cmp(&b.1));
    let mut tagged: Vec<(f64, Keyed)> = keyed.iter().map(|&k| (angle(k.0), k)).collect();
    tagged.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1 .1.cmp(&b.1 .1)));
    let mut angles = Vec::with_capacity(tagged.len());
    for (slot, (a, k)) in keyed.iter_mut().zip(tagged) {
        *slot = k;
        angles.push(a);
    }
    for i in 1..keyed.len() {
        let mut j = i;
        while j > 0 && exact(&keyed[j - 1], &keyed[j]).is_gt() {
            keyed.swap(j - 1, j);
            angles.swap(j - 1, j);
            j -= 1;
        }
    }
    angles
}

fn reduce_dir(d: (i64, i64)) -> (i64, i64) {
    use num_integer::Integer;
    let g = d.0.gcd(&d.1);
    (d.0 / g, d.1 / g)
}

fn strictly_between(lo: (i64, i64), mid: (i64, i64), hi: (i64, i64)) -> bool {
    cross(lo, mid) > 0 && cross(mid, hi) > 0
}

fn bisector(lo: (i64, i64), lo_angle: f64, hi: (i64, i64), hi_angle: f64) -> (i64, i64) {
    let mid = float_direction((lo_angle + hi_angle) / 2.0);
    if strictly_between(lo, mid, hi) {
        return mid;
    }
    // The neighbours are closer than float resolution; any positive
    // combination of them lies strictly inside the open interval.
    let hi = if hi.0 == -1 && hi.1 == 0 {
        (-(lo.0.abs().max(lo.1.abs())), 0)
    } else if hi.0 == 0 && hi.1 == 1 {
        (0, lo.0.abs().max(lo.1.abs()))
    } else {
        hi
    };
    let sum = reduce_dir((lo.0 + hi.0, lo.1 + hi.1));
    debug_assert!(strictly_between(lo, sum, hi));
    sum
}

/// The critical axes `y_0, …, y_{2m-1}` of `ps`.
pub fn critical_axes(ps: &RootedPointSet) -> Result<Vec<Axis>> {
    let s = CriticalSchedule::for_point_pairs(ps, Fold::HalfTurn)?;
    Ok((0..s.len()).map(|i| s.axis(i)).collect())
}

/// The critical orthogonal systems `x_0 y_0, …, x_{2m-1} y_{2m-1}` of `ps`.
pub fn critical_systems(ps: &RootedPointSet) -> Result<Vec<OrthoSystem>> {
    let s = CriticalSchedule::for_point_pairs(ps, Fold::QuarterTurn)?;
    Ok((0..s.len()).map(|i| s.system(i)).collect())
}

/// Whether the critical pair `(p, q)` is parallel or perpendicular to the
/// `y` axis of `sys`.
pub fn pair_kind(ps: &RootedPointSet, p: usize, q: usize, sys: &OrthoSystem) -> PairKind {
    let v = ps.point(q) - ps.point(p);
    if cross((v.x, v.y), sys.y_direction()) == 0 {
        PairKind::Parallel
    } else {
        PairKind::Perpendicular
    }
}
