//! Rooted y-monotone minimum spanning trees for a fixed axis.
//!
//! The root line (through the root, perpendicular to the axis) splits the
//! set into two closed halves that are solved independently. Inside a half,
//! points are taken by increasing absolute projection and each one is joined
//! to its nearest already-placed point, found with a [`SemiDynamicNN`].

use crate::error::{Error, Result};
use crate::geometry::{Axis, RootedPointSet, RootedTree};
use crate::proximity::SemiDynamicNN;

/// One of the two closed half-planes bounded by the root line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    /// Side of a non-zero projection key.
    pub fn of_key(key: i128) -> Option<Side> {
        match key.signum() {
            -1 => Some(Side::Minus),
            1 => Some(Side::Plus),
            _ => None,
        }
    }
}

/// A y-MMST together with the two half sequences it was read from. Each
/// sequence starts with the root.
#[derive(Debug, Clone)]
pub struct YmmstParts {
    pub tree: RootedTree,
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
}

impl YmmstParts {
    pub fn half(&self, side: Side) -> &[usize] {
        match side {
            Side::Minus => &self.minus,
            Side::Plus => &self.plus,
        }
    }
}

/// Runs the incremental construction on the non-root points `members` of
/// one closed half and records parents. Returns the final sequence, root
/// first.
pub(crate) fn build_half(ps: &RootedPointSet, axis: &Axis, members: &mut [usize], parent: &mut [Option<usize>]) -> Vec<usize> {
    let root = ps.root();
    members.sort_unstable_by_key(|&p| (axis.key(ps.point(p)).unsigned_abs(), p));
    let mut seq = Vec::with_capacity(members.len() + 1);
    seq.push(root);
    seq.extend_from_slice(members);

    let mut nn = SemiDynamicNN::new();
    nn.insert(ps.point(root));
    // Insertion index -> point index.
    let mut inserted = vec![root];
    let nearest = |nn: &SemiDynamicNN, inserted: &[usize], p: usize| {
        let hit = nn.nearest(ps.point(p)).expect("root is always present");
        (inserted[hit.index], hit.squared_distance)
    };

    let n = seq.len();
    let mut i = 1;
    while i < n {
        let (par_i, d_i) = nearest(&nn, &inserted, seq[i]);
        let tie = i + 1 < n && axis.key(ps.point(seq[i])).unsigned_abs() == axis.key(ps.point(seq[i + 1])).unsigned_abs();
        if !tie {
            parent[seq[i]] = Some(par_i);
            nn.insert(ps.point(seq[i]));
            inserted.push(seq[i]);
            i += 1;
            continue;
        }
        let first = (par_i, d_i);
        let second = nearest(&nn, &inserted, seq[i + 1]);
        let ((par_a, _), (mut par_b, d_b)) = if first.1 > second.1 {
            seq.swap(i, i + 1);
            (second, first)
        } else {
            (first, second)
        };
        if ps.squared_distance(seq[i], seq[i + 1]) < d_b {
            par_b = seq[i];
        }
        parent[seq[i]] = Some(par_a);
        parent[seq[i + 1]] = Some(par_b);
        for k in [i, i + 1] {
            nn.insert(ps.point(seq[k]));
            inserted.push(seq[k]);
        }
        i += 2;
    }
    seq
}

/// The rooted y-MMST of a point set whose non-root points all lie strictly
/// on one side of the root line.
pub fn ymmst_one_side(ps: &RootedPointSet, axis: &Axis) -> Result<RootedTree> {
    let mut side = None;
    for p in ps.non_root() {
        let s = Side::of_key(axis.key(ps.point(p))).ok_or(Error::OnRootLine { point: p })?;
        if *side.get_or_insert(s) != s {
            return Err(Error::WrongSide { point: p });
        }
    }
    let mut parent = vec![None; ps.len()];
    let mut members: Vec<usize> = ps.non_root().collect();
    build_half(ps, axis, &mut members, &mut parent);
    RootedTree::from_parents(ps, parent)
}

/// The rooted y-MMST of `ps` for `axis`. Fails if a non-root point lies on
/// the root line.
pub fn ymmst(ps: &RootedPointSet, axis: &Axis) -> Result<RootedTree> {
    if let Some(p) = ps.non_root().find(|&p| axis.key(ps.point(p)) == 0) {
        return Err(Error::OnRootLine { point: p });
    }
    Ok(ymmst_closed(ps, axis)?.tree)
}

/// As [`ymmst`], but a point on the root line is accepted: it belongs to
/// both halves and hangs from the root.
pub fn ymmst_closed(ps: &RootedPointSet, axis: &Axis) -> Result<YmmstParts> {
    if ps.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    for p in ps.non_root() {
        let k = axis.key(ps.point(p));
        if k <= 0 {
            minus.push(p);
        }
        if k >= 0 {
            plus.push(p);
        }
    }
    let mut parent = vec![None; ps.len()];
    let minus = build_half(ps, axis, &mut minus, &mut parent);
    let plus = build_half(ps, axis, &mut plus, &mut parent);
    let tree = RootedTree::from_parents(ps, parent)?;
    Ok(YmmstParts { tree, minus, plus })
}
