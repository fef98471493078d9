//! Static implicit kd-tree over a slice, searched with exact arithmetic.
//!
//! The slice is arranged in place: the median of a range (on x at even
//! depth, y at odd depth) sits at its midpoint, smaller coordinates to the
//! left. Short ranges are left unarranged and scanned.

use crate::geometry::{squared_distance, Point};

pub(crate) const LEAF: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Item {
    pub p: Point,
    pub id: u32,
}

/// Best candidate so far: `(squared distance, id, point)`, compared on the
/// first two fields.
pub(crate) type Best = Option<(i128, u32, Point)>;

#[inline]
fn coord(p: Point, depth: usize) -> i64 {
    if depth.is_multiple_of(2) {
        p.x
    } else {
        p.y
    }
}

pub(crate) fn arrange(items: &mut [Item]) {
    arrange_at(items, 0);
}

fn arrange_at(items: &mut [Item], depth: usize) {
    if items.len() <= LEAF {
        return;
    }
    let mid = items.len() / 2;
    items.select_nth_unstable_by_key(mid, |it| (coord(it.p, depth), it.id));
    let (left, right) = items.split_at_mut(mid);
    arrange_at(left, depth + 1);
    arrange_at(&mut right[1..], depth + 1);
}

#[inline]
pub(crate) fn offer(best: &mut Best, d: i128, it: &Item) {
    match best {
        Some((bd, bid, _)) if (*bd, *bid) <= (d, it.id) => {}
        _ => *best = Some((d, it.id, it.p)),
    }
}

pub(crate) fn scan(items: &[Item], q: Point, best: &mut Best) {
    for it in items {
        offer(best, squared_distance(it.p, q), it);
    }
}

/// Updates `best` with the nearest item of an arranged slice. A subtree is
/// skipped only when its splitting line is strictly farther than `best`,
/// so equidistant items with smaller ids are still found.
pub(crate) fn nearest(items: &[Item], q: Point, best: &mut Best) {
    nearest_at(items, q, 0, best);
}

fn nearest_at(items: &[Item], q: Point, depth: usize, best: &mut Best) {
    if items.len() <= LEAF {
        scan(items, q, best);
        return;
    }
    let mid = items.len() / 2;
    let m = &items[mid];
    offer(best, squared_distance(m.p, q), m);
    let diff = (coord(q, depth) - coord(m.p, depth)) as i128;
    let (near, far) = if diff < 0 {
        (&items[..mid], &items[mid + 1..])
    } else {
        (&items[mid + 1..], &items[..mid])
    };
    nearest_at(near, q, depth + 1, best);
    if best.is_none_or(|(bd, _, _)| diff * diff <= bd) {
        nearest_at(far, q, depth + 1, best);
    }
}
