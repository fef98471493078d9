//! Insert-only nearest-neighbour structures.
//!
//! Both structures use the logarithmic method over static kd-trees and
//! compare exact squared distances. Among equidistant points the one
//! inserted first is returned.

mod kdtree;
mod nn;
mod range;

pub use nn::SemiDynamicNN;
pub use range::SemiDynamicRangeNN;

use crate::geometry::Point;

/// Answer of a nearest-neighbour query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighbor {
    /// Insertion index of the stored point.
    pub index: usize,
    pub point: Point,
    pub squared_distance: i128,
}

impl Neighbor {
    fn from_best((d, id, p): (i128, u32, Point)) -> Self {
        Neighbor {
            index: id as usize,
            point: p,
            squared_distance: d,
        }
    }
}
