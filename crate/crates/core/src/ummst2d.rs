//! Rotational sweep for the cheapest xy-MMST over all orthogonal systems.
//!
//! For each point `p` the sweep keeps `PD(p)`, the points that may precede
//! `p` on an xy-monotone path from the root (same closed quadrant, no larger
//! absolute coordinates), keyed by squared distance. The predicate for a
//! pair only changes when the `y` axis becomes parallel or perpendicular to
//! the pair, or to the line from the root to one of its points, so events
//! re-evaluate exactly those pairs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{pair_kind, CriticalSchedule, Fold, OrthoSystem, PairKind, RootedPointSet, RootedTree};
use crate::oracle::COST_SLACK;
use crate::xymmst::xymmst_closed;

/// Whether an event is processed on reaching its critical system or on
/// moving past it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Enter,
    Leave,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Sweep2dStats {
    pub pair_events: usize,
    pub root_events: usize,
    /// Feasibility changes applied to `PD` sets.
    pub toggles: usize,
}

/// `q` may be the parent of `p` under `sys`.
fn feasible(ps: &RootedPointSet, sys: &OrthoSystem, q: usize, p: usize) -> bool {
    let (qx, qy) = sys.coords(ps.point(q));
    let (px, py) = sys.coords(ps.point(p));
    let same_quadrant = qx.signum() * px.signum() >= 0 && qy.signum() * py.signum() >= 0;
    same_quadrant && qx.unsigned_abs() <= px.unsigned_abs() && qy.unsigned_abs() <= py.unsigned_abs()
}

/// The evolving state of the sweep at one system of the schedule.
#[derive(Debug, Clone)]
pub struct Sweep2dState<'a> {
    ps: &'a RootedPointSet,
    schedule: CriticalSchedule,
    index: usize,
    pd: Vec<BTreeSet<(i128, u32)>>,
    parent: Vec<Option<usize>>,
    cost: f64,
    stats: Sweep2dStats,
}

impl<'a> Sweep2dState<'a> {
    /// State at the first critical system.
    pub fn new(ps: &'a RootedPointSet) -> Result<Self> {
        let schedule = CriticalSchedule::for_point_pairs(ps, Fold::QuarterTurn)?;
        let sys = schedule.system(0);
        let n = ps.len();
        let mut state = Sweep2dState {
            ps,
            schedule,
            index: 0,
            pd: vec![BTreeSet::new(); n],
            parent: vec![None; n],
            cost: 0.0,
            stats: Sweep2dStats::default(),
        };
        for p in ps.non_root() {
            for q in (0..n).filter(|&q| q != p && feasible(ps, &sys, q, p)) {
                state.pd[p].insert((ps.squared_distance(p, q), q as u32));
            }
            let best = state.pd[p].first().expect("root is always feasible").1 as usize;
            state.parent[p] = Some(best);
            state.cost += ps.distance(p, best);
        }
        Ok(state)
    }

    pub fn schedule(&self) -> &CriticalSchedule {
        &self.schedule
    }

    pub fn system_index(&self) -> usize {
        self.index
    }

    pub fn system(&self) -> OrthoSystem {
        self.schedule.system(self.index)
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn stats(&self) -> Sweep2dStats {
        self.stats
    }

    pub fn parent(&self, p: usize) -> Option<usize> {
        self.parent[p]
    }

    pub fn tree(&self) -> Result<RootedTree> {
        RootedTree::from_parents(self.ps, self.parent.clone())
    }

    fn reparent(&mut self, p: usize) {
        let best = self.pd[p].first().expect("root is always feasible").1 as usize;
        if let Some(old) = self.parent[p] {
            if old == best {
                return;
            }
            self.cost -= self.ps.distance(p, old);
        }
        self.cost += self.ps.distance(p, best);
        self.parent[p] = Some(best);
    }

    /// Re-evaluates both directions of parenthood between `a` and `b`.
    fn refresh_pair(&mut self, a: usize, b: usize) {
        let sys = self.system();
        for (child, par) in [(a, b), (b, a)] {
            if child == self.ps.root() {
                continue;
            }
            let entry = (self.ps.squared_distance(child, par), par as u32);
            let want = feasible(self.ps, &sys, par, child);
            let changed = if want {
                self.pd[child].insert(entry)
            } else {
                self.pd[child].remove(&entry)
            };
            if changed {
                self.stats.toggles += 1;
                self.reparent(child);
            }
        }
    }

    /// Critical system whose events are being processed in `phase`.
    fn event_system(&self, phase: Phase) -> Result<OrthoSystem> {
        match (phase, self.index % 2) {
            (Phase::Enter, 0) => Ok(self.system()),
            (Phase::Leave, 1) => Ok(self.schedule.system(self.index - 1)),
            _ => Err(Error::Bookkeeping(format!("{phase:?} event at system index {}", self.index))),
        }
    }

    /// A pair of non-root points whose line is parallel or perpendicular to
    /// the `y` axis of the critical system.
    pub fn apply_pair_event_2d(&mut self, (p, q): (usize, usize), kind: PairKind, phase: Phase) -> Result<()> {
        let sys = self.event_system(phase)?;
        if p == self.ps.root() || q == self.ps.root() || p == q {
            return Err(Error::Bookkeeping(format!("({p}, {q}) is not a pair of non-root points")));
        }
        if pair_kind(self.ps, p, q, &sys) != kind {
            return Err(Error::Bookkeeping(format!("pair ({p}, {q}) is not {kind:?} to the y axis")));
        }
        self.stats.pair_events += 1;
        self.refresh_pair(p, q);
        Ok(())
    }

    /// `q` reaches or leaves an axis of the system and so joins or leaves a
    /// second quadrant; every pair involving `q` is re-evaluated.
    pub fn apply_root_event_2d(&mut self, q: usize, phase: Phase) -> Result<()> {
        let sys = self.event_system(phase)?;
        let (x, y) = sys.coords(self.ps.point(q));
        if q == self.ps.root() || (x != 0 && y != 0) {
            return Err(Error::Bookkeeping(format!(
                "point {q} is not on an axis of the critical system"
            )));
        }
        self.stats.root_events += 1;
        for p in 0..self.ps.len() {
            if p != q {
                self.refresh_pair(q, p);
            }
        }
        Ok(())
    }

    /// Moves to the next system of the schedule. Returns `false` at the end.
    pub fn advance(&mut self) -> Result<bool> {
        if self.index + 1 >= self.schedule.len() {
            return Ok(false);
        }
        self.index += 1;
        let phase = if self.index.is_multiple_of(2) {
            Phase::Enter
        } else {
            Phase::Leave
        };
        let root = self.ps.root();
        let event = self.schedule.event(self.index & !1).expect("even index");
        let roots: Vec<usize> = event.root_pairs(root).collect();
        let others: Vec<(usize, usize)> = event.other_pairs(root).collect();
        let sys = self.schedule.system(self.index & !1);
        for q in roots {
            self.apply_root_event_2d(q, phase)?;
        }
        for (p, q) in others {
            let kind = pair_kind(self.ps, p, q, &sys);
            self.apply_pair_event_2d((p, q), kind, phase)?;
        }
        Ok(true)
    }

    /// Checks every `PD(p)` against the feasibility predicate and every
    /// parent against the `PD` minimum.
    pub fn check_invariants(&self) -> Result<()> {
        let sys = self.system();
        for p in self.ps.non_root() {
            let expected: BTreeSet<(i128, u32)> = (0..self.ps.len())
                .filter(|&q| q != p && feasible(self.ps, &sys, q, p))
                .map(|q| (self.ps.squared_distance(p, q), q as u32))
                .collect();
            if expected != self.pd[p] {
                return Err(Error::Bookkeeping(format!("PD({p}) differs from its feasible parents")));
            }
            if self.parent[p] != self.pd[p].first().map(|&(_, q)| q as usize) {
                return Err(Error::Bookkeeping(format!("parent of {p} is not its PD minimum")));
            }
        }
        Ok(())
    }
}

/// Result of a full sweep.
#[derive(Debug, Clone)]
pub struct Ummst2dSweep {
    pub system: OrthoSystem,
    pub system_index: usize,
    pub tree: RootedTree,
    pub stats: Sweep2dStats,
}

/// The cheapest rooted xy-MMST over all orthogonal systems and a system
/// achieving it.
pub fn ummst2d(ps: &RootedPointSet) -> Result<(OrthoSystem, RootedTree)> {
    let s = ummst2d_sweep(ps)?;
    Ok((s.system, s.tree))
}

/// As [`ummst2d`], also reporting the winning index and the counters.
pub fn ummst2d_sweep(ps: &RootedPointSet) -> Result<Ummst2dSweep> {
    let mut state = Sweep2dState::new(ps)?;
    let (mut best_index, mut best_cost) = (0, state.cost());
    while state.advance()? {
        if state.cost() < best_cost - COST_SLACK {
            best_index = state.system_index();
            best_cost = state.cost();
        }
    }
    let system = state.schedule().system(best_index);
    let tree = xymmst_closed(ps, &system)?;
    Ok(Ummst2dSweep {
        system,
        system_index: best_index,
        tree,
        stats: state.stats(),
    })
}
