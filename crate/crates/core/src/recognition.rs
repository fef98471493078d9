//! Deciding whether a given rooted graph is (uniformly) monotone.
//!
//! Two independent methods are provided for a fixed direction. The first
//! orients every usable edge away from the root and checks reachability. The
//! second counts, for every vertex, whether it has a neighbour that can
//! precede it on a monotone path; the uniform sweeps maintain these counts
//! incrementally across critical slopes.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::geometry::{Axis, CriticalSchedule, Fold, GeometricGraph, OrthoSystem};

/// Directed version of a graph in which each arc may be followed on a
/// monotone path leaving the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityDigraph {
    out: Vec<Vec<usize>>,
}

impl ReachabilityDigraph {
    /// Arcs for the single axis `a`: an edge whose endpoints lie strictly on
    /// opposite sides of the root line is dropped, an edge with equal
    /// projections gets both arcs, and otherwise the arc points from the
    /// smaller absolute projection to the larger.
    pub fn for_axis(g: &GeometricGraph<'_>, a: &Axis) -> Self {
        let ps = g.points();
        let key: Vec<i128> = ps.points().iter().map(|&p| a.key(p)).collect();
        let mut out = vec![Vec::new(); ps.len()];
        for &(p, q) in g.edges() {
            let (kp, kq) = (key[p], key[q]);
            if kp.signum() * kq.signum() < 0 {
                continue;
            }
            match kp.abs().cmp(&kq.abs()) {
                std::cmp::Ordering::Less => out[p].push(q),
                std::cmp::Ordering::Greater => out[q].push(p),
                std::cmp::Ordering::Equal => {
                    out[p].push(q);
                    out[q].push(p);
                }
            }
        }
        ReachabilityDigraph { out }
    }

    /// Arcs for the system `sys`: `p -> q` whenever `p` dominates `q`.
    pub fn for_system(g: &GeometricGraph<'_>, sys: &OrthoSystem) -> Self {
        let ps = g.points();
        let coords: Vec<(i128, i128)> = ps.points().iter().map(|&p| sys.coords(p)).collect();
        let mut out = vec![Vec::new(); ps.len()];
        for &(p, q) in g.edges() {
            if dominates(coords[p], coords[q]) {
                out[p].push(q);
            }
            if dominates(coords[q], coords[p]) {
                out[q].push(p);
            }
        }
        ReachabilityDigraph { out }
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Breadth-first search from `root`; true if every vertex is reached.
    pub fn reaches_all(&self, root: usize) -> bool {
        let mut seen = vec![false; self.out.len()];
        seen[root] = true;
        let mut left = self.out.len() - 1;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.out[v] {
                if !seen[w] {
                    seen[w] = true;
                    left -= 1;
                    queue.push_back(w);
                }
            }
        }
        left == 0
    }
}

/// `q` may precede `p`: same closed quadrant and no larger absolute
/// coordinates.
fn dominates(q: (i128, i128), p: (i128, i128)) -> bool {
    q.0.signum() * p.0.signum() >= 0
        && q.1.signum() * p.1.signum() >= 0
        && q.0.unsigned_abs() <= p.0.unsigned_abs()
        && q.1.unsigned_abs() <= p.1.unsigned_abs()
}

/// `q` lies on the closed side of `p` and strictly closer to the root line.
fn lower(kq: i128, kp: i128) -> bool {
    kq.signum() * kp.signum() >= 0 && kq.unsigned_abs() < kp.unsigned_abs()
}

/// Whether every vertex of `g` has a `y`-monotone path from the root for
/// the axis `a`. Fails on a disconnected graph.
pub fn is_rooted_y_monotone(g: &GeometricGraph<'_>, a: &Axis) -> Result<bool> {
    g.check_connected()?;
    Ok(ReachabilityDigraph::for_axis(g, a).reaches_all(g.points().root()))
}

/// Whether every vertex of `g` has an xy-monotone path from the root for
/// the system `sys`. Fails on a disconnected graph.
pub fn is_rooted_xy_monotone(g: &GeometricGraph<'_>, sys: &OrthoSystem) -> Result<bool> {
    g.check_connected()?;
    Ok(ReachabilityDigraph::for_system(g, sys).reaches_all(g.points().root()))
}

/// Edges lying on the root line of `a`, i.e. with both projections zero.
/// Such an edge is usable in both directions.
pub fn root_line_edges(g: &GeometricGraph<'_>, a: &Axis) -> Vec<(usize, usize)> {
    let ps = g.points();
    g.edges()
        .iter()
        .copied()
        .filter(|&(p, q)| a.key(ps.point(p)) == 0 && a.key(ps.point(q)) == 0)
        .collect()
}

/// Per-vertex sets of neighbours that may precede the vertex, and the flag
/// table of vertices with a nonempty set.
#[derive(Debug, Clone)]
struct MonotoneSets {
    a: Vec<BTreeSet<u32>>,
    b: Vec<bool>,
    b_count: usize,
}

impl MonotoneSets {
    fn new(n: usize) -> Self {
        MonotoneSets {
            a: vec![BTreeSet::new(); n],
            b: vec![false; n],
            b_count: 0,
        }
    }

    fn set(&mut self, p: usize, q: usize, member: bool) {
        let changed = if member {
            self.a[p].insert(q as u32)
        } else {
            self.a[p].remove(&(q as u32))
        };
        if changed {
            let now = !self.a[p].is_empty();
            if now != self.b[p] {
                self.b[p] = now;
                if now {
                    self.b_count += 1;
                } else {
                    self.b_count -= 1;
                }
            }
        }
    }
}

/// Counting test for an axis: every vertex but the root either has a lower
/// neighbour or an equal-projection neighbour that has one. A non-root
/// vertex with zero projection must instead be joined to the root directly.
/// `zero_candidates` must include every non-root point with zero projection
/// and `equal_pairs` every edge whose endpoints share a projection. Returns
/// `None` when two non-root points lie on the root line, which general
/// position rules out and the count cannot decide.
fn axis_count_passes(
    g: &GeometricGraph<'_>,
    key: impl Fn(usize) -> i128,
    sets: &MonotoneSets,
    zero_candidates: impl Iterator<Item = usize>,
    equal_pairs: impl Iterator<Item = (usize, usize)>,
) -> Option<bool> {
    let root = g.points().root();
    let n = g.points().len();
    let mut zero = None;
    for v in zero_candidates.filter(|&v| v != root && key(v) == 0) {
        if zero.replace(v).is_some_and(|z| z != v) {
            return None;
        }
    }
    let mut c: Vec<usize> = Vec::new();
    for (p, q) in equal_pairs.filter(|&(p, q)| p != root && q != root) {
        for (u, w) in [(p, q), (q, p)] {
            if !sets.b[u] && sets.b[w] {
                c.push(u);
            }
        }
    }
    c.sort_unstable();
    c.dedup();
    let counted = sets.b_count + c.len();
    Some(match zero {
        None => counted == n - 1,
        Some(z) => g.has_edge(root, z) && counted == n - 2,
    })
}

fn refresh_lower(sets: &mut MonotoneSets, root: usize, key: impl Fn(usize) -> i128, edges: impl Iterator<Item = (usize, usize)>) {
    for (p, q) in edges {
        for (u, w) in [(p, q), (q, p)] {
            if u != root {
                sets.set(u, w, lower(key(w), key(u)));
            }
        }
    }
}

fn refresh_dominance(
    sets: &mut MonotoneSets,
    root: usize,
    coords: impl Fn(usize) -> (i128, i128),
    edges: impl Iterator<Item = (usize, usize)>,
) {
    for (p, q) in edges {
        for (u, w) in [(p, q), (q, p)] {
            if u != root {
                sets.set(u, w, dominates(coords(w), coords(u)));
            }
        }
    }
}

/// The counting form of [`is_rooted_y_monotone`], computed from scratch in
/// `O(|E|)`.
pub fn y_count_test(g: &GeometricGraph<'_>, a: &Axis) -> Result<bool> {
    g.check_connected()?;
    let ps = g.points();
    let key: Vec<i128> = ps.points().iter().map(|&p| a.key(p)).collect();
    let mut sets = MonotoneSets::new(ps.len());
    refresh_lower(&mut sets, ps.root(), |v| key[v], g.edges().iter().copied());
    let equal = g.edges().iter().copied().filter(|&(p, q)| key[p] == key[q]);
    let passes = axis_count_passes(g, |v| key[v], &sets, 0..ps.len(), equal);
    Ok(passes.unwrap_or_else(|| ReachabilityDigraph::for_axis(g, a).reaches_all(ps.root())))
}

/// The counting form of [`is_rooted_xy_monotone`]: every vertex but the
/// root has a dominating neighbour.
pub fn xy_count_test(g: &GeometricGraph<'_>, sys: &OrthoSystem) -> Result<bool> {
    g.check_connected()?;
    let ps = g.points();
    let mut sets = MonotoneSets::new(ps.len());
    refresh_dominance(&mut sets, ps.root(), |v| sys.coords(ps.point(v)), g.edges().iter().copied());
    Ok(sets.b_count == ps.len() - 1)
}

/// Incidence lists used to refresh every edge at a vertex.
fn incident_edges(g: &GeometricGraph<'_>) -> Vec<Vec<(usize, usize)>> {
    let mut inc = vec![Vec::new(); g.points().len()];
    for &(p, q) in g.edges() {
        inc[p].push((p, q));
        inc[q].push((p, q));
    }
    inc
}

/// Edges whose predicate may change at the event governing index `i`: the
/// edges of the event itself and every edge at a point whose line to the
/// root fires there.
fn touched_edges<'e>(
    g: &'e GeometricGraph<'_>,
    schedule: &'e CriticalSchedule,
    inc: &'e [Vec<(usize, usize)>],
    i: usize,
) -> impl Iterator<Item = (usize, usize)> + 'e {
    let root = g.points().root();
    let event = schedule.event(i & !1).expect("even index");
    event
        .other_pairs(root)
        .chain(event.root_pairs(root).flat_map(move |q| inc[q].iter().copied()))
}

/// An axis for which `g` is rooted monotone, or `None`. Sweeps the critical
/// slopes of the edges and of the lines through the root, returning the
/// first slope that passes the counting test.
pub fn uniform_monotone_axis(g: &GeometricGraph<'_>) -> Result<Option<Axis>> {
    g.check_connected()?;
    let ps = g.points();
    let root = ps.root();
    let schedule = CriticalSchedule::for_graph(g, Fold::HalfTurn)?;
    let inc = incident_edges(g);
    let mut sets = MonotoneSets::new(ps.len());
    for i in 0..schedule.len() {
        let axis = schedule.axis(i);
        let key = |v: usize| axis.key(ps.point(v));
        if i == 0 {
            refresh_lower(&mut sets, root, key, g.edges().iter().copied());
        } else {
            refresh_lower(&mut sets, root, key, touched_edges(g, &schedule, &inc, i));
        }
        let passes = match schedule.event(i) {
            // Every edge pair of an event has equal projections; lines
            // through the root put their other point at zero.
            Some(ev) => axis_count_passes(g, key, &sets, ev.root_pairs(root), ev.other_pairs(root)),
            None => axis_count_passes(g, key, &sets, std::iter::empty(), std::iter::empty()),
        };
        if passes.unwrap_or_else(|| ReachabilityDigraph::for_axis(g, &axis).reaches_all(root)) {
            return Ok(Some(axis));
        }
    }
    Ok(None)
}

/// An orthogonal system for which `g` is rooted xy-monotone, or `None`.
/// Same sweep as [`uniform_monotone_axis`] over the critical systems.
pub fn uniform_2d_monotone_system(g: &GeometricGraph<'_>) -> Result<Option<OrthoSystem>> {
    g.check_connected()?;
    let ps = g.points();
    let root = ps.root();
    let schedule = CriticalSchedule::for_graph(g, Fold::QuarterTurn)?;
    let inc = incident_edges(g);
    let mut sets = MonotoneSets::new(ps.len());
    for i in 0..schedule.len() {
        let sys = schedule.system(i);
        let coords = |v: usize| sys.coords(ps.point(v));
        if i == 0 {
            refresh_dominance(&mut sets, root, coords, g.edges().iter().copied());
        } else {
            refresh_dominance(&mut sets, root, coords, touched_edges(g, &schedule, &inc, i));
        }
        if sets.b_count == ps.len() - 1 {
            return Ok(Some(sys));
        }
    }
    Ok(None)
}
