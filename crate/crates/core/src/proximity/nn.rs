use super::kdtree::{self, Item};
use super::Neighbor;
use crate::geometry::Point;

/// Insert-only nearest-neighbour index.
///
/// Points live in static kd-trees whose sizes are distinct powers of two,
/// one per set bit of the point count. An insertion merges the trees of the
/// trailing set bits with the new point into one tree; a query searches
/// every tree.
#[derive(Debug, Clone, Default)]
pub struct SemiDynamicNN {
    levels: Vec<Vec<Item>>,
    len: usize,
}

impl SemiDynamicNN {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of non-empty static substructures.
    pub fn substructure_count(&self) -> usize {
        self.levels.iter().filter(|l| !l.is_empty()).count()
    }

    /// Inserts `p` and returns its insertion index.
    pub fn insert(&mut self, p: Point) -> usize {
        let id = self.len;
        let mut merged = vec![Item { p, id: id as u32 }];
        let mut level = 0;
        while level < self.levels.len() && !self.levels[level].is_empty() {
            merged.append(&mut self.levels[level]);
            level += 1;
        }
        if level == self.levels.len() {
            self.levels.push(Vec::new());
        }
        kdtree::arrange(&mut merged);
        self.levels[level] = merged;
        self.len += 1;
        id
    }

    /// Nearest stored point to `q`; equidistant points resolve to the
    /// smallest insertion index.
    pub fn nearest(&self, q: Point) -> Option<Neighbor> {
        let mut best = None;
        for level in &self.levels {
            kdtree::nearest(level, q, &mut best);
        }
        best.map(Neighbor::from_best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let mut s = SemiDynamicNN::new();
        assert!(s.nearest(Point::new(1, 0)).is_none());
        assert_eq!(s.insert(Point::new(0, 0)), 0);
        assert_eq!(s.len(), 1);
        s.insert(Point::new(3, 4));
        let hit = s.nearest(Point::new(1, 0)).unwrap();
        assert_eq!(hit.point, Point::new(0, 0));
        assert_eq!(hit.index, 0);
        assert_eq!(hit.squared_distance, 1);
    }

    #[test]
    fn substructures_follow_binary_counter() {
        let mut s = SemiDynamicNN::new();
        for i in 0..1024 {
            s.insert(Point::new(i * 7 % 1031, i * 13 % 1033));
            assert_eq!(s.substructure_count(), (s.len() as u32).count_ones() as usize);
        }
        assert!(s.substructure_count() <= 11);
    }

    #[test]
    fn ties_go_to_earliest_insertion() {
        let mut s = SemiDynamicNN::new();
        for p in [(2, 0), (0, 2), (-2, 0), (0, -2)] {
            s.insert(Point::new(p.0, p.1));
        }
        assert_eq!(s.nearest(Point::ORIGIN).unwrap().index, 0);
    }
}
