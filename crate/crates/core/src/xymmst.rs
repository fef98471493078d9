//! Rooted xy-monotone minimum spanning trees for a fixed orthogonal system.
//!
//! Only edges inside a quadrant can lie on an xy-monotone path from the
//! root, so each quadrant is solved on its own. Points are taken by
//! increasing `|y'|` (then `|x'|`) and joined to the nearest earlier point
//! whose `|x'|` is not larger, found with a [`SemiDynamicRangeNN`].

use crate::error::{Error, Result};
use crate::geometry::{OrthoSystem, RootedPointSet, RootedTree};
use crate::proximity::SemiDynamicRangeNN;

/// Quadrant of a system, by the signs of `(x', y')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quadrant {
    pub x_positive: bool,
    pub y_positive: bool,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant {
            x_positive: true,
            y_positive: true,
        },
        Quadrant {
            x_positive: false,
            y_positive: true,
        },
        Quadrant {
            x_positive: false,
            y_positive: false,
        },
        Quadrant {
            x_positive: true,
            y_positive: false,
        },
    ];

    /// Whether `(x, y)` lies in the closed quadrant.
    pub fn contains(&self, (x, y): (i128, i128)) -> bool {
        (if self.x_positive { x >= 0 } else { x <= 0 }) && (if self.y_positive { y >= 0 } else { y <= 0 })
    }
}

/// Links the non-root `members` of one closed quadrant and returns their
/// order, root first.
pub(crate) fn build_quadrant(
    ps: &RootedPointSet,
    sys: &OrthoSystem,
    members: &mut [usize],
    parent: &mut [Option<usize>],
) -> Vec<usize> {
    let abs = |p: usize| {
        let (x, y) = sys.coords(ps.point(p));
        (y.unsigned_abs(), x.unsigned_abs())
    };
    members.sort_unstable_by_key(|&p| (abs(p), p));
    let mut nn = SemiDynamicRangeNN::new();
    nn.insert(ps.point(ps.root()), 0u128);
    let mut order = vec![ps.root()];
    for &p in members.iter() {
        let (_, ax) = abs(p);
        let hit = nn
            .nearest_in_range(ps.point(p), 0, ax)
            .expect("closed range is non-empty")
            .expect("root is always in range");
        parent[p] = Some(order[hit.index]);
        nn.insert(ps.point(p), ax);
        order.push(p);
    }
    order
}

fn check_off_axes(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<()> {
    for p in ps.non_root() {
        let (x, y) = sys.coords(ps.point(p));
        if x == 0 || y == 0 {
            return Err(Error::OnSystemAxis { point: p });
        }
    }
    Ok(())
}

/// The rooted xy-MMST of a set whose non-root points all lie strictly
/// inside one quadrant of `sys`.
pub fn xymmst_quadrant(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    check_off_axes(ps, sys)?;
    let mut quadrant = None;
    for p in ps.non_root() {
        let (x, y) = sys.coords(ps.point(p));
        let q = Quadrant {
            x_positive: x > 0,
            y_positive: y > 0,
        };
        if *quadrant.get_or_insert(q) != q {
            return Err(Error::WrongSide { point: p });
        }
    }
    let mut parent = vec![None; ps.len()];
    let mut members: Vec<usize> = ps.non_root().collect();
    build_quadrant(ps, sys, &mut members, &mut parent);
    RootedTree::from_parents(ps, parent)
}

/// The rooted xy-MMST of `ps` for `sys`. Fails if a non-root point lies on
/// either axis of the system.
pub fn xymmst(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    check_off_axes(ps, sys)?;
    xymmst_closed(ps, sys)
}

/// As [`xymmst`], but a point on an axis belongs to both adjacent closed
/// quadrants (and is joined to the root).
pub fn xymmst_closed(ps: &RootedPointSet, sys: &OrthoSystem) -> Result<RootedTree> {
    if ps.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let mut parent = vec![None; ps.len()];
    for q in Quadrant::ALL {
        let mut members: Vec<usize> = ps.non_root().filter(|&p| q.contains(sys.coords(ps.point(p)))).collect();
        build_quadrant(ps, sys, &mut members, &mut parent);
    }
    RootedTree::from_parents(ps, parent)
}
