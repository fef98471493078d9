//! Rotational sweep for the cheapest y-MMST over all axes.
//!
//! The tree only changes at critical axes, so the sweep visits the
//! alternating sequence of critical and in-between axes and updates the two
//! half sequences, the tree and, for every point, the ordered set `PD(p)` of
//! its predecessors keyed by squared distance. The minimum of `PD(p)` is
//! always the parent of `p`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{Axis, CriticalSchedule, Fold, RootedPointSet, RootedTree};
use crate::oracle::COST_SLACK;
use crate::ymmst::{ymmst_closed, Side};

/// Which half sequences contain a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Only(Side),
    /// On the root line: first in both halves.
    Both,
}

/// Counters of the work done by a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    /// Equal-projection pairs examined at critical axes.
    pub swap_pairs: usize,
    /// Those of them whose order changed.
    pub swaps: usize,
    /// Pairs re-ordered by projection when leaving a critical axis.
    pub settled_pairs: usize,
    pub root_enters: usize,
    pub root_leaves: usize,
}

const ABSENT: usize = usize::MAX;

fn idx(side: Side) -> usize {
    match side {
        Side::Minus => 0,
        Side::Plus => 1,
    }
}

fn bookkeeping<T>(msg: String) -> Result<T> {
    Err(Error::Bookkeeping(msg))
}

/// The evolving state of the sweep at one axis of the schedule.
#[derive(Debug, Clone)]
pub struct SweepState<'a> {
    ps: &'a RootedPointSet,
    schedule: CriticalSchedule,
    index: usize,
    membership: Vec<Membership>,
    seq: [Vec<usize>; 2],
    pos: [Vec<usize>; 2],
    pd: Vec<BTreeSet<(i128, u32)>>,
    parent: Vec<Option<usize>>,
    cost: f64,
    stats: SweepStats,
}

impl<'a> SweepState<'a> {
    /// State at the first critical axis, built from scratch.
    pub fn new(ps: &'a RootedPointSet) -> Result<Self> {
        let schedule = CriticalSchedule::for_point_pairs(ps, Fold::HalfTurn)?;
        let axis = schedule.axis(0);
        let parts = ymmst_closed(ps, &axis)?;
        let n = ps.len();
        let mut state = SweepState {
            ps,
            membership: (0..n)
                .map(|p| match Side::of_key(axis.key(ps.point(p))) {
                    Some(s) if p != ps.root() => Membership::Only(s),
                    _ => Membership::Both,
                })
                .collect(),
            seq: [parts.minus, parts.plus],
            pos: [vec![ABSENT; n], vec![ABSENT; n]],
            pd: vec![BTreeSet::new(); n],
            parent: vec![None; n],
            cost: 0.0,
            stats: SweepStats::default(),
            schedule,
            index: 0,
        };
        for h in 0..2 {
            for (j, &p) in state.seq[h].iter().enumerate() {
                state.pos[h][p] = j;
                for &q in &state.seq[h][..j] {
                    state.pd[p].insert((ps.squared_distance(p, q), q as u32));
                }
            }
        }
        for p in ps.non_root() {
            let best = state.pd[p].first().expect("root precedes every point").1 as usize;
            state.parent[p] = Some(best);
            state.cost += ps.distance(p, best);
        }
        Ok(state)
    }

    pub fn schedule(&self) -> &CriticalSchedule {
        &self.schedule
    }

    pub fn axis_index(&self) -> usize {
        self.index
    }

    pub fn axis(&self) -> Axis {
        self.schedule.axis(self.index)
    }

    /// Running cost, accumulated edge by edge.
    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn stats(&self) -> SweepStats {
        self.stats
    }

    pub fn parent(&self, p: usize) -> Option<usize> {
        self.parent[p]
    }

    pub fn membership(&self, p: usize) -> Membership {
        self.membership[p]
    }

    /// Half sequence on `side`, root first.
    pub fn half(&self, side: Side) -> &[usize] {
        &self.seq[idx(side)]
    }

    /// Smallest entry of `PD(p)` as `(squared distance, point)`.
    pub fn pd_min(&self, p: usize) -> Option<(i128, usize)> {
        self.pd[p].first().map(|&(d, q)| (d, q as usize))
    }

    pub fn tree(&self) -> Result<RootedTree> {
        RootedTree::from_parents(self.ps, self.parent.clone())
    }

    fn reparent(&mut self, p: usize) {
        let best = self.pd[p].first().expect("root precedes every point").1 as usize;
        if let Some(old) = self.parent[p] {
            if old == best {
                return;
            }
            self.cost -= self.ps.distance(p, old);
        }
        self.cost += self.ps.distance(p, best);
        self.parent[p] = Some(best);
    }

    /// The single half holding both points, with the pair ordered front to
    /// back, after checking that they are adjacent.
    fn adjacent_pair(&self, a: usize, b: usize) -> Result<(usize, usize, usize)> {
        let root = self.ps.root();
        let h = match (self.membership[a], self.membership[b]) {
            (Membership::Only(s), Membership::Only(t)) if s == t && a != root && b != root => idx(s),
            _ => return bookkeeping(format!("pair ({a}, {b}) is not inside one half")),
        };
        let (front, back) = if self.pos[h][a] < self.pos[h][b] { (a, b) } else { (b, a) };
        if self.pos[h][back] != self.pos[h][front] + 1 {
            return bookkeeping(format!("pair ({a}, {b}) is not adjacent in its half"));
        }
        Ok((h, front, back))
    }

    fn swap_adjacent(&mut self, h: usize, front: usize, back: usize) {
        let (i, j) = (self.pos[h][front], self.pos[h][back]);
        self.seq[h].swap(i, j);
        self.pos[h][front] = j;
        self.pos[h][back] = i;
        let d = self.ps.squared_distance(front, back);
        self.pd[back].remove(&(d, front as u32));
        self.pd[front].insert((d, back as u32));
        self.reparent(front);
        self.reparent(back);
    }

    /// Equal-projection pair at a critical axis: the rear point moves ahead
    /// when it is strictly closer to the points before the pair than the
    /// front point is to its parent. Returns whether the order changed.
    pub fn apply_swap_event(&mut self, a: usize, b: usize) -> Result<bool> {
        let (h, front, back) = self.adjacent_pair(a, b)?;
        self.stats.swap_pairs += 1;
        let d_pair = self.ps.squared_distance(front, back);
        let back_best = self.pd[back]
            .iter()
            .find(|&&e| e != (d_pair, front as u32))
            .expect("root precedes every point")
            .0;
        let front_best = self.pd[front].first().expect("root precedes every point").0;
        if back_best < front_best {
            self.swap_adjacent(h, front, back);
            self.stats.swaps += 1;
            return Ok(true);
        }
        Ok(false)
    }

    /// Puts a pair that tied at the previous critical axis into projection
    /// order for the current axis.
    fn settle_pair(&mut self, a: usize, b: usize) -> Result<()> {
        let (h, front, back) = self.adjacent_pair(a, b)?;
        let axis = self.axis();
        let kf = axis.key(self.ps.point(front)).unsigned_abs();
        let kb = axis.key(self.ps.point(back)).unsigned_abs();
        if kf == kb {
            return bookkeeping(format!("pair ({a}, {b}) still ties away from a critical axis"));
        }
        self.stats.settled_pairs += 1;
        if kf > kb {
            self.swap_adjacent(h, front, back);
        }
        Ok(())
    }

    /// The axis has reached the line through the root and `q`: `q` joins the
    /// other half right after the root and becomes a candidate parent for
    /// every point there.
    pub fn apply_root_event(&mut self, q: usize) -> Result<()> {
        let old = match self.membership[q] {
            Membership::Only(s) if q != self.ps.root() => s,
            _ => return bookkeeping(format!("point {q} cannot enter a second half")),
        };
        if self.pos[idx(old)][q] != 1 {
            return bookkeeping(format!("point {q} is not next to the root before reaching the root line"));
        }
        let h = idx(old.opposite());
        self.seq[h].insert(1, q);
        for j in 1..self.seq[h].len() {
            let p = self.seq[h][j];
            self.pos[h][p] = j;
        }
        for j in 2..self.seq[h].len() {
            let p = self.seq[h][j];
            self.pd[p].insert((self.ps.squared_distance(p, q), q as u32));
            self.reparent(p);
        }
        self.membership[q] = Membership::Both;
        self.stats.root_enters += 1;
        Ok(())
    }

    /// The axis has moved past the line through the root and `q`: `q` leaves
    /// the half it no longer belongs to and its children there re-attach.
    pub fn leave_root_event(&mut self, q: usize) -> Result<()> {
        if self.membership[q] != Membership::Both || q == self.ps.root() {
            return bookkeeping(format!("point {q} is not on the root line"));
        }
        let stay = match Side::of_key(self.axis().key(self.ps.point(q))) {
            Some(s) => s,
            None => return bookkeeping(format!("point {q} is still on the root line")),
        };
        let h = idx(stay.opposite());
        if self.pos[h][q] != 1 {
            return bookkeeping(format!("point {q} is not next to the root on the root line"));
        }
        self.seq[h].remove(1);
        self.pos[h][q] = ABSENT;
        for j in 1..self.seq[h].len() {
            let p = self.seq[h][j];
            self.pos[h][p] = j;
            self.pd[p].remove(&(self.ps.squared_distance(p, q), q as u32));
            if self.parent[p] == Some(q) {
                self.reparent(p);
            }
        }
        self.membership[q] = Membership::Only(stay);
        self.stats.root_leaves += 1;
        Ok(())
    }

    /// Moves to the next axis of the schedule. Returns `false` at the end.
    pub fn advance(&mut self) -> Result<bool> {
        if self.index + 1 >= self.schedule.len() {
            return Ok(false);
        }
        self.index += 1;
        let root = self.ps.root();
        let event = self.schedule.event(self.index & !1).expect("even index");
        let roots: Vec<usize> = event.root_pairs(root).collect();
        let mut others: Vec<(usize, usize)> = event.other_pairs(root).collect();
        others.sort_by_key(|&(a, b)| {
            let h = match self.membership[a] {
                Membership::Only(s) => idx(s),
                Membership::Both => 0,
            };
            (h, self.pos[h][a].min(self.pos[h][b]))
        });
        if self.index.is_multiple_of(2) {
            for q in roots {
                self.apply_root_event(q)?;
            }
            for (a, b) in others {
                self.apply_swap_event(a, b)?;
            }
        } else {
            for q in roots {
                self.leave_root_event(q)?;
            }
            for (a, b) in others {
                self.settle_pair(a, b)?;
            }
        }
        Ok(true)
    }

    /// Checks every `PD(p)` against the predecessors of `p` and every parent
    /// against the `PD` minimum.
    pub fn check_invariants(&self) -> Result<()> {
        for p in self.ps.non_root() {
            let h = match self.membership[p] {
                Membership::Only(s) => idx(s),
                Membership::Both => {
                    if self.pos[0][p] != 1 || self.pos[1][p] != 1 {
                        return bookkeeping(format!("root-line point {p} is not next to the root"));
                    }
                    0
                }
            };
            let j = self.pos[h][p];
            if j == ABSENT || self.seq[h][j] != p {
                return bookkeeping(format!("position of {p} is stale"));
            }
            let expected: BTreeSet<(i128, u32)> = self.seq[h][..j]
                .iter()
                .map(|&q| (self.ps.squared_distance(p, q), q as u32))
                .collect();
            if expected != self.pd[p] {
                return bookkeeping(format!("PD({p}) differs from its predecessors"));
            }
            if self.parent[p] != self.pd_min(p).map(|(_, q)| q) {
                return bookkeeping(format!("parent of {p} is not its PD minimum"));
            }
        }
        Ok(())
    }
}

/// Result of a full sweep.
#[derive(Debug, Clone)]
pub struct UmmstSweep {
    pub axis: Axis,
    /// Position of `axis` in the schedule.
    pub axis_index: usize,
    pub tree: RootedTree,
    pub stats: SweepStats,
}

/// The cheapest rooted y-MMST over all axes and an axis achieving it.
pub fn ummst(ps: &RootedPointSet) -> Result<(Axis, RootedTree)> {
    let s = ummst_sweep(ps)?;
    Ok((s.axis, s.tree))
}

/// As [`ummst`], also reporting where the optimum was found and the sweep
/// counters. Among axes within `1e-12` of the best cost the earliest wins.
pub fn ummst_sweep(ps: &RootedPointSet) -> Result<UmmstSweep> {
    let mut state = SweepState::new(ps)?;
    let (mut best_index, mut best_cost) = (0, state.cost());
    while state.advance()? {
        if state.cost() < best_cost - COST_SLACK {
            best_index = state.axis_index();
            best_cost = state.cost();
        }
    }
    let axis = state.schedule().axis(best_index);
    let tree = ymmst_closed(ps, &axis)?.tree;
    Ok(UmmstSweep {
        axis,
        axis_index: best_index,
        tree,
        stats: state.stats(),
    })
}
