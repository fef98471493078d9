//! Monotonicity directions.
//!
//! An [`Axis`] is stored as an integer direction vector, so projections and
//! projection comparisons are exact polynomials in the lattice coordinates.
//! Slopes are compared with cross products, never with arctangents.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_integer::Integer;

use super::point::Point;
use crate::error::{Error, Result};

/// Scale used when turning a floating-point angle into an integer direction.
pub(crate) const FLOAT_DIRECTION_SCALE: f64 = (1u64 << 40) as f64;

#[inline]
pub(crate) fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn reduce(d: (i64, i64)) -> (i64, i64) {
    let g = d.0.gcd(&d.1);
    if g <= 1 {
        d
    } else {
        (d.0 / g, d.1 / g)
    }
}

/// Maps `d` or `-d` to the representative whose angle lies in `[0, π)`.
pub(crate) fn canonical_half(d: (i64, i64)) -> (i64, i64) {
    if d.1 > 0 || (d.1 == 0 && d.0 > 0) {
        d
    } else {
        (-d.0, -d.1)
    }
}

/// Rotates `d` by quarter turns until its angle lies in `[0, π/2)`.
/// Returns the folded vector and the number of counterclockwise quarter
/// turns applied.
pub(crate) fn fold_quarter(mut d: (i64, i64)) -> ((i64, i64), u8) {
    let mut turns = 0;
    while !(d.0 > 0 && d.1 >= 0) {
        d = (-d.1, d.0);
        turns += 1;
    }
    (d, turns % 4)
}

/// Orders directions with angles in a common half-open half turn.
#[inline]
pub(crate) fn slope_order(a: (i64, i64), b: (i64, i64)) -> Ordering {
    0.cmp(&cross(a, b))
}

/// Integer direction approximating the angle `theta` (radians).
pub(crate) fn float_direction(theta: f64) -> (i64, i64) {
    let (s, c) = theta.sin_cos();
    let d = (
        (c * FLOAT_DIRECTION_SCALE).round() as i64,
        (s * FLOAT_DIRECTION_SCALE).round() as i64,
    );
    reduce(d)
}

fn exact_quarter_direction(degrees: f64) -> Option<(i64, i64)> {
    let turns = degrees / 90.0;
    if turns.fract() != 0.0 {
        return None;
    }
    Some(match (turns as i64).rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    })
}

/// A direction of monotonicity, identified with the line through the origin
/// it spans. `d` and `-d` describe the same axis; the canonical direction
/// has slope angle in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Axis {
    d: (i64, i64),
}

impl Axis {
    /// The standard `y` axis, slope π/2.
    pub const Y: Axis = Axis { d: (0, 1) };
    /// The standard `x` axis, slope 0.
    pub const X: Axis = Axis { d: (1, 0) };

    pub fn new(dx: i64, dy: i64) -> Result<Axis> {
        if dx == 0 && dy == 0 {
            return Err(Error::ZeroDirection);
        }
        Ok(Axis {
            d: canonical_half(reduce((dx, dy))),
        })
    }

    /// Wraps a direction that is already reduced and canonical.
    pub(crate) fn from_canonical(d: (i64, i64)) -> Axis {
        debug_assert!(d == canonical_half(reduce(d)));
        Axis { d }
    }

    /// Axis with the given slope in degrees. Multiples of 90° are exact;
    /// other angles are rounded to an integer direction of magnitude 2^40.
    pub fn from_degrees(degrees: f64) -> Result<Axis> {
        if !degrees.is_finite() {
            return Err(Error::ZeroDirection);
        }
        let d = exact_quarter_direction(degrees).unwrap_or_else(|| float_direction(degrees.to_radians()));
        Axis::new(d.0, d.1)
    }

    /// The canonical direction vector.
    #[inline]
    pub fn direction(&self) -> (i64, i64) {
        self.d
    }

    /// Exact projection key: `p · d`. Order preserving along this axis.
    #[inline]
    pub fn key(&self, p: Point) -> i128 {
        p.dot(self.d)
    }

    /// Signed coordinate of `p` along the unit direction of this axis.
    pub fn project(&self, p: Point) -> f64 {
        self.key(p) as f64 / (self.d.0 as f64).hypot(self.d.1 as f64)
    }

    /// Slope angle in radians, in `[0, π)`.
    pub fn slope(&self) -> f64 {
        (self.d.1 as f64).atan2(self.d.0 as f64)
    }

    pub fn slope_degrees(&self) -> f64 {
        self.slope().to_degrees()
    }

    /// Orders two canonical axes by slope.
    pub fn cmp_slope(&self, other: &Axis) -> Ordering {
        slope_order(self.d, other.d)
    }
}

/// Signed coordinate of `p` along `a`.
pub fn project(p: Point, a: &Axis) -> f64 {
    a.project(p)
}

/// Exact comparison of the projections of `p` and `q` on `a`. Equality
/// holds exactly when `pq` is perpendicular to `a`.
pub fn compare_projections(p: Point, q: Point, a: &Axis) -> Ordering {
    (p - q).dot(a.d).cmp(&0)
}

/// An ordered pair of perpendicular axes. The `y` axis has slope in
/// `[0, π/2)`; the `x` axis is its clockwise perpendicular. The standard
/// Cartesian system folds to `y = (1, 0)`, `x = (0, -1)`: a quarter turn of
/// the usual axes, which has the same quadrants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrthoSystem {
    y: (i64, i64),
}

impl OrthoSystem {
    pub const STANDARD: OrthoSystem = OrthoSystem { y: (1, 0) };

    /// System whose `y` axis points along `(dx, dy)`, folded by quarter turns
    /// into `[0, π/2)`. Rotating a system by a quarter turn permutes its
    /// quadrants and leaves the monotone trees unchanged.
    pub fn new(dx: i64, dy: i64) -> Result<OrthoSystem> {
        if dx == 0 && dy == 0 {
            return Err(Error::ZeroDirection);
        }
        Ok(OrthoSystem {
            y: fold_quarter(reduce((dx, dy))).0,
        })
    }

    /// Wraps a `y` direction that is already reduced and folded.
    pub(crate) fn from_folded(y: (i64, i64)) -> OrthoSystem {
        debug_assert!(y == fold_quarter(reduce(y)).0);
        OrthoSystem { y }
    }

    /// System whose `y` axis has the given slope in degrees.
    pub fn from_degrees(degrees: f64) -> Result<OrthoSystem> {
        let a = Axis::from_degrees(degrees)?;
        OrthoSystem::new(a.d.0, a.d.1)
    }

    pub fn y_direction(&self) -> (i64, i64) {
        self.y
    }

    pub fn x_direction(&self) -> (i64, i64) {
        (self.y.1, -self.y.0)
    }

    pub fn y_axis(&self) -> Axis {
        Axis { d: self.y }
    }

    pub fn x_axis(&self) -> Axis {
        Axis {
            d: canonical_half(self.x_direction()),
        }
    }

    /// Exact `(x', y')` keys of `p`, each scaled by the same positive factor.
    #[inline]
    pub fn coords(&self, p: Point) -> (i128, i128) {
        (p.dot(self.x_direction()), p.dot(self.y))
    }

    /// Slope of the `y` axis in radians, in `[0, π/2)`.
    pub fn y_slope(&self) -> f64 {
        (self.y.1 as f64).atan2(self.y.0 as f64)
    }

    pub fn y_slope_degrees(&self) -> f64 {
        self.y_slope().to_degrees()
    }
}

/// Angle (radians) of a canonical direction, used only to place bisectors.
pub(crate) fn angle(d: (i64, i64)) -> f64 {
    let a = (d.1 as f64).atan2(d.0 as f64);
    if a < 0.0 {
        a + PI
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    #[test]
    fn projection_examples() {
        let p = Point::new(3, 4);
        assert_eq!(project(p, &Axis::Y), 4.0);
        assert_eq!(project(p, &Axis::X), 3.0);
        let diag = Axis::new(1, 1).unwrap();
        assert!((project(Point::new(1, 1), &diag) - SQRT_2).abs() < 1e-15);
        assert!((diag.slope() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn projection_comparisons() {
        let p = Point::new(0, 2);
        let q = Point::new(2, 0);
        let diag = Axis::new(1, 1).unwrap();
        assert_eq!(compare_projections(p, q, &diag), Ordering::Equal);
        assert_eq!(compare_projections(p, q, &Axis::Y), Ordering::Greater);
        assert_eq!(compare_projections(q, p, &Axis::Y), Ordering::Less);
        assert_eq!(compare_projections(p, p, &Axis::X), Ordering::Equal);
    }

    #[test]
    fn canonicalization_identifies_opposite_directions() {
        assert_eq!(Axis::new(-3, -6).unwrap(), Axis::new(1, 2).unwrap());
        assert_eq!(Axis::new(-5, 0).unwrap(), Axis::X);
        assert_eq!(Axis::new(0, -7).unwrap(), Axis::Y);
        assert_eq!(Axis::new(0, 0), Err(Error::ZeroDirection));
    }

    #[test]
    fn degrees_round_trip() {
        assert_eq!(Axis::from_degrees(90.0).unwrap(), Axis::Y);
        assert_eq!(Axis::from_degrees(-180.0).unwrap(), Axis::X);
        assert_eq!(Axis::from_degrees(45.0).unwrap(), Axis::new(1, 1).unwrap());
        let a = Axis::from_degrees(30.0).unwrap();
        assert!((a.slope_degrees() - 30.0).abs() < 1e-9);
        assert_eq!(Axis::Y.slope(), FRAC_PI_2);
    }

    #[test]
    fn systems_fold_into_quarter_turn() {
        let s = OrthoSystem::new(-1, 0).unwrap();
        assert_eq!(s, OrthoSystem::STANDARD);
        let s = OrthoSystem::new(-2, 5).unwrap();
        assert_eq!(s.y_direction(), (5, 2));
        assert_eq!(cross(s.x_direction(), s.y_direction()), 29);
        let (x, y) = s.x_direction();
        assert_eq!(x * s.y.0 + y * s.y.1, 0);
        assert_eq!(OrthoSystem::from_degrees(90.0).unwrap(), OrthoSystem::STANDARD);
    }
}
