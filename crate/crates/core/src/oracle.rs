//! Brute-force reference implementations.
//!
//! Everything here is quadratic or worse and uses only the exact predicates
//! of [`crate::geometry`]. Among equidistant candidates the one appearing
//! first in the processing order wins, which is the rule the fast
//! constructions follow as well.

use crate::error::{Error, Result};
use crate::geometry::{
    critical_axes, critical_systems, Axis, CriticalSchedule, Fold, GeometricGraph, OrthoSystem, RootedPointSet, RootedTree,
};

/// Largest point set accepted by the exhaustive sweeps.
pub const SWEEP_LIMIT: usize = 64;

/// Largest graph accepted by the exhaustive path search.
pub const PATH_LIMIT: usize = 9;

/// Cost slack under which a later axis or system does not replace an
/// earlier one.
pub const COST_SLACK: f64 = 1e-12;

fn guard(limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeGuard { limit, got })
    } else {
        Ok(())
    }
}

/// Index of the nearest point of `candidates` to `p`; the earliest wins a
/// tie.
fn nearest_of(ps: &RootedPointSet, p: usize, candidates: impl Iterator<Item = usize>) -> Option<(usize, i128)> {
    let mut best: Option<(usize, i128)> = None;
    for c in candidates {
        let d = ps.squared_distance(p, c);
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((c, d));
        }
    }
    best
}

/// Orders one closed half by absolute projection, equal pairs by distance
/// to the preceding points, and links each point to its nearest
/// predecessor.
fn half_by_scan(ps: &RootedPointSet, axis: &Axis, mut members: Vec<usize>, parent: &mut [Option<usize>]) {
    let abs_key = |p: usize| axis.key(ps.point(p)).unsigned_abs();
    members.sort_by_key(|&p| (abs_key(p), p));
    let mut seq = vec![ps.root()];
    seq.extend(members);
    let mut i = 1;
    while i + 1 < seq.len() {
        if abs_key(seq[i]) == abs_key(seq[i + 1]) {
            let da = nearest_of(ps, seq[i], seq[..i].iter().copied()).unwrap().1;
            let db = nearest_of(ps, seq[i + 1], seq[..i].iter().copied()).unwrap().1;
            if da > db {
                seq.swap(i, i + 1);
            }
            i += 2;
        } else {
            i += 1;
        }
    }
    for i in 1..seq.len() {
        parent[seq[i]] = nearest_of(ps, seq[i], seq[..i].iter().copied()).map(|(c, _)| c);
    }
}

/// Reference y-MMST. Fails if a non-root point lies on the root line.
pub fn brute_parent_ymmst(ps: &RootedPointSet, axis: &Axis) -> Result<RootedTree> {
    if let Some(p) = ps.non_root().find(|&p| axis.key(ps.point(p)) == 0) {
        return Err(Error::OnRootLine { point: p });
    }
    brute_parent_ymmst_closed(ps, axis)
}

/// Reference y-MMST in which a point on the root line joins both halves.
pub fn brute_parent_ymmst_closed(ps: &RootedPointSet, axis: &Axis) -> Result<RootedTree> {
    let mut parent = vec![None; ps.len()];
    let minus = ps.non_root().filter(|&p| axis.key(ps.point(p)) <= 0).collect();
    let plus = ps.non_root().filter(|&p| axis.key(ps.point(p)) >= 0).collect();
    half_by_scan(ps, axis, minus, &mut parent);
    half_by_scan(ps, axis, plus, &mut parent);
    RootedTree::from_parents(ps, parent)
}

/// Whether `q` may precede `p` on an xy-monotone path from the root: same
/// closed quadrant and no larger in either absolute coordinate.
pub fn dominates(ps: &RootedPointSet, sys: &OrthoSystem, q: usize, p: usize) -> bool {
    let (qx, qy) = sys.coords(ps.point(q));
    let (px, py) = sys.coords(ps.point(p));
    qx.signum() * px.signum() >= 0 && qy.signum() * py.signum() >= 0 && qx.abs() <= px.abs() && qy.abs() <= py.abs()
}

fn xy_by_scan(ps: &RootedPointSet, sys: &OrthoSystem, members: &[usize]) -> Vec<Option<usize>> {
    let mut parent = vec![None; ps.len()];
    for &p in members {
        let (px, py) = sys.coords(ps.point(p));
        let before = |q: usize| {
            let (qx, qy) = sys.coords(ps.point(q));
            (qy.abs(), qx.abs()) < (py.abs(), px.abs())
        };
        let mut order: Vec<usize> = std::iter::once(ps.root())
            .chain(members.iter().copied().filter(|&q| q != p && before(q)))
            .filter(|&q| dominates(ps, sys, q, p))
            .collect();
        order.sort_by_key(|&q| {
            let (qx, qy) = sys.coords(ps.point(q));
            (qy.abs(), qx.abs())
        });
        parent[p] = nearest_of(ps, p, order.into_iter()).map(|(c, _)| c);
    }
    parent
}

/// Reference xy-MMST of a set whose non-root points all lie strictly inside
/// one quadrant.
pub fn brute_xymmst_quadrant(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    let mut quadrant = None;
    for p in ps.non_root() {
        let (x, y) = sys.coords(ps.point(p));
        if x == 0 || y == 0 {
            return Err(Error::OnSystemAxis { point: p });
        }
        if *quadrant.get_or_insert((x > 0, y > 0)) != (x > 0, y > 0) {
            return Err(Error::WrongSide { point: p });
        }
    }
    let members: Vec<usize> = ps.non_root().collect();
    RootedTree::from_parents(ps, xy_by_scan(ps, sys, &members))
}

/// Reference xy-MMST. Fails if a non-root point lies on an axis of `sys`.
pub fn brute_xymmst(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    for p in ps.non_root() {
        let (x, y) = sys.coords(ps.point(p));
        if x == 0 || y == 0 {
            return Err(Error::OnSystemAxis { point: p });
        }
    }
    brute_xymmst_closed(ps, sys)
}

/// Reference xy-MMST in which boundary points belong to both adjacent
/// quadrants.
pub fn brute_xymmst_closed(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    let members: Vec<usize> = ps.non_root().collect();
    RootedTree::from_parents(ps, xy_by_scan(ps, sys, &members))
}

/// Cheapest y-MMST over every critical axis, by direct evaluation.
pub fn brute_ummst(ps: &RootedPointSet) -> Result<(Axis, RootedTree)> {
    guard(SWEEP_LIMIT, ps.len())?;
    let mut best: Option<(Axis, RootedTree)> = None;
    for axis in critical_axes(ps)? {
        let t = brute_parent_ymmst_closed(ps, &axis)?;
        if best.as_ref().is_none_or(|(_, b)| t.cost() < b.cost() - COST_SLACK) {
            best = Some((axis, t));
        }
    }
    Ok(best.expect("at least two critical axes"))
}

/// Cheapest xy-MMST over every critical system, by direct evaluation.
pub fn brute_ummst2d(ps: &RootedPointSet) -> Result<(OrthoSystem, RootedTree)> {
    guard(SWEEP_LIMIT, ps.len())?;
    let mut best: Option<(OrthoSystem, RootedTree)> = None;
    for sys in critical_systems(ps)? {
        let t = brute_xymmst_closed(ps, &sys)?;
        if best.as_ref().is_none_or(|(_, b)| t.cost() < b.cost() - COST_SLACK) {
            best = Some((sys, t));
        }
    }
    Ok(best.expect("at least two critical systems"))
}

/// Direction(s) a path must be monotone with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Axis(Axis),
    System(OrthoSystem),
}

fn monotone(values: &[i128]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1]) || values.windows(2).all(|w| w[0] >= w[1])
}

/// Whether some simple path from the root to `target` is monotone, found by
/// enumerating every simple path.
pub fn monotone_path_exists(g: &GeometricGraph<'_>, dir: Monotonicity, target: usize) -> Result<bool> {
    let ps = g.points();
    guard(PATH_LIMIT, ps.len())?;
    if target >= ps.len() {
        return Err(Error::EdgeOutOfRange(ps.root(), target));
    }
    let keys: Vec<Vec<i128>> = match dir {
        Monotonicity::Axis(a) => vec![ps.points().iter().map(|&p| a.key(p)).collect()],
        Monotonicity::System(s) => {
            let (xs, ys) = ps.points().iter().map(|&p| s.coords(p)).unzip();
            vec![xs, ys]
        }
    };
    let ok = |path: &[usize]| {
        keys.iter().all(|k| {
            let vals: Vec<i128> = path.iter().map(|&v| k[v]).collect();
            monotone(&vals)
        })
    };
    let mut path = vec![ps.root()];
    let mut on_path = vec![false; ps.len()];
    on_path[ps.root()] = true;
    Ok(dfs(g, target, &mut path, &mut on_path, &ok))
}

fn dfs(
    g: &GeometricGraph<'_>,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    ok: &dyn Fn(&[usize]) -> bool,
) -> bool {
    if !ok(path) {
        return false;
    }
    let v = *path.last().unwrap();
    if v == target {
        return true;
    }
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        let found = dfs(g, target, path, on_path, ok);
        path.pop();
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

/// Whether every vertex has a monotone path from the root.
pub fn brute_is_rooted_monotone(g: &GeometricGraph<'_>, dir: Monotonicity) -> Result<bool> {
    for t in 0..g.points().len() {
        if !monotone_path_exists(g, dir, t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First critical axis of the graph at which it is rooted monotone.
pub fn brute_uniform_axis(g: &GeometricGraph<'_>) -> Result<Option<Axis>> {
    let s = CriticalSchedule::for_graph(g, Fold::HalfTurn)?;
    for i in 0..s.len() {
        if brute_is_rooted_monotone(g, Monotonicity::Axis(s.axis(i)))? {
            return Ok(Some(s.axis(i)));
        }
    }
    Ok(None)
}

/// First critical system of the graph at which it is rooted xy-monotone.
pub fn brute_uniform_system(g: &GeometricGraph<'_>) -> Result<Option<OrthoSystem>> {
    let s = CriticalSchedule::for_graph(g, Fold::QuarterTurn)?;
    for i in 0..s.len() {
        if brute_is_rooted_monotone(g, Monotonicity::System(s.system(i)))? {
            return Ok(Some(s.system(i)));
        }
    }
    Ok(None)
}
