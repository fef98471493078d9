//! General-position check: no three input points on a line.

use super::axis::Axis;
use super::point::{orientation, RootedPointSet};
use crate::error::{Error, Result};

/// Largest set checked with the triple scan by [`validate_general_position`].
pub const EXHAUSTIVE_LIMIT: usize = 400;

/// Reports the lexicographically first collinear triple, if any. Sets of at
/// most [`EXHAUSTIVE_LIMIT`] points are checked by the orientation test on
/// every triple; larger ones by sorting, for each point, the reduced
/// directions to all later points, in `O(n² log n)` time.
pub fn validate_general_position(ps: &RootedPointSet) -> Result<()> {
    validate_general_position_with(ps, EXHAUSTIVE_LIMIT)
}

/// As [`validate_general_position`] with a custom triple-scan bound.
pub fn validate_general_position_with(ps: &RootedPointSet, exhaustive_limit: usize) -> Result<()> {
    let p = ps.points();
    let n = p.len();
    if n <= exhaustive_limit {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if orientation(p[i], p[j], p[k]) == 0 {
                        return Err(Error::Collinear(i, j, k));
                    }
                }
            }
        }
        return Ok(());
    }
    let mut dirs: Vec<((i64, i64), usize)> = Vec::with_capacity(n);
    for i in 0..n {
        dirs.clear();
        for (j, &q) in p.iter().enumerate().skip(i + 1) {
            let v = q - p[i];
            // Points are distinct, so the direction is non-zero.
            dirs.push((Axis::new(v.x, v.y)?.direction(), j));
        }
        dirs.sort_unstable();
        // Within a run of equal directions the first two indices are the
        // smallest pair on that line.
        let first = dirs
            .windows(2)
            .enumerate()
            .filter(|&(w, pair)| pair[0].0 == pair[1].0 && (w == 0 || dirs[w - 1].0 != pair[0].0))
            .map(|(_, pair)| (pair[0].1, pair[1].1))
            .min();
        if let Some((j, k)) = first {
            return Err(Error::Collinear(i, j, k));
        }
    }
    Ok(())
}
