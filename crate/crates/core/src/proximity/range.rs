use super::kdtree::{self, Item};
use super::Neighbor;
use crate::error::{Error, Result};
use crate::geometry::Point;

/// One power-of-two group of the logarithmic method. `sorted` holds the
/// group in attribute order; `blocks[k]` is a copy of it in which each
/// aligned run of `2^k` entries is arranged as its own kd-tree.
#[derive(Debug, Clone)]
struct Group<A> {
    sorted: Vec<(A, Item)>,
    blocks: Vec<Vec<Item>>,
}

/// Smallest block size given its own kd-tree; shorter runs are scanned.
const MIN_BLOCK_LOG: usize = 3;

impl<A: Ord + Copy> Group<A> {
    fn build(mut sorted: Vec<(A, Item)>) -> Self {
        sorted.sort_unstable_by_key(|&(a, it)| (a, it.id));
        let n = sorted.len();
        let mut blocks = Vec::new();
        let mut k = 0;
        while (1usize << k) <= n {
            if k < MIN_BLOCK_LOG {
                blocks.push(Vec::new());
            } else {
                let mut items: Vec<Item> = sorted.iter().map(|&(_, it)| it).collect();
                for chunk in items.chunks_mut(1 << k) {
                    kdtree::arrange(chunk);
                }
                blocks.push(items);
            }
            k += 1;
        }
        Group { sorted, blocks }
    }

    fn query(&self, q: Point, lo: A, hi: A, best: &mut kdtree::Best) {
        let mut a = self.sorted.partition_point(|&(x, _)| x < lo);
        let b = self.sorted.partition_point(|&(x, _)| x <= hi);
        while a < b {
            // Largest aligned block starting at `a` that fits in `[a, b)`.
            let fit = (usize::BITS - 1 - (b - a).leading_zeros()) as usize;
            let k = if a == 0 { fit } else { fit.min(a.trailing_zeros() as usize) };
            let end = a + (1 << k);
            if k < MIN_BLOCK_LOG {
                for (_, it) in &self.sorted[a..end] {
                    kdtree::offer(best, crate::geometry::squared_distance(it.p, q), it);
                }
            } else {
                kdtree::nearest(&self.blocks[k][a..end], q, best);
            }
            a = end;
        }
    }
}

/// Insert-only nearest-neighbour index whose queries are restricted to
/// points with attribute in a closed range.
#[derive(Debug, Clone)]
pub struct SemiDynamicRangeNN<A> {
    levels: Vec<Option<Group<A>>>,
    len: usize,
}

impl<A> Default for SemiDynamicRangeNN<A> {
    fn default() -> Self {
        SemiDynamicRangeNN {
            levels: Vec::new(),
            len: 0,
        }
    }
}

impl<A: Ord + Copy> SemiDynamicRangeNN<A> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn substructure_count(&self) -> usize {
        self.levels.iter().filter(|l| l.is_some()).count()
    }

    /// Inserts `p` with attribute `attr` and returns its insertion index.
    pub fn insert(&mut self, p: Point, attr: A) -> usize {
        let id = self.len;
        let mut merged = vec![(attr, Item { p, id: id as u32 })];
        let mut level = 0;
        while level < self.levels.len() {
            match self.levels[level].take() {
                Some(g) => merged.extend(g.sorted),
                None => break,
            }
            level += 1;
        }
        if level == self.levels.len() {
            self.levels.push(None);
        }
        self.levels[level] = Some(Group::build(merged));
        self.len += 1;
        id
    }

    /// Nearest stored point to `q` among those with attribute in
    /// `[lo, hi]`; ties resolve to the smallest insertion index.
    pub fn nearest_in_range(&self, q: Point, lo: A, hi: A) -> Result<Option<Neighbor>> {
        if lo > hi {
            return Err(Error::InvalidRange);
        }
        let mut best = None;
        for g in self.levels.iter().flatten() {
            g.query(q, lo, hi, &mut best);
        }
        Ok(best.map(Neighbor::from_best))
    }
}
