//! Exact lattice points and rooted point sets.
//!
//! Input coordinates are decimal numbers. A point set is brought onto a
//! common integer lattice by multiplying every coordinate with `10^scale`,
//! where `scale` is the largest number of fractional digits found in the
//! input. Every comparison the algorithms make (projections, squared
//! distances, slopes) is scale invariant, so it can be evaluated exactly on
//! the lattice with `i128` arithmetic. Only Euclidean lengths are reported
//! in floating point, converted back to input units.

use std::collections::HashMap;
use std::fmt;
use std::ops::Sub;

use crate::error::{Error, Result};

/// Largest admissible lattice coordinate magnitude before translation.
///
/// With this bound every predicate in the crate fits in `i128`:
/// translated coordinates stay below 2^53, direction vectors below 2^55
/// and dot or cross products below 2^112.
pub const MAX_LATTICE_COORD: i64 = 1 << 52;

/// A point on the integer lattice of a [`RootedPointSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Dot product with a direction vector, exact.
    #[inline]
    pub fn dot(self, d: (i64, i64)) -> i128 {
        self.x as i128 * d.0 as i128 + self.y as i128 * d.1 as i128
    }

    /// Rotation by a quarter turn counterclockwise.
    pub fn rotate_quarter(self) -> Point {
        Point::new(-self.y, self.x)
    }
}

impl Sub for Point {
    type Output = Point;

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Squared Euclidean distance, exact. Used as the comparison key wherever
/// two distances are compared.
#[inline]
pub fn squared_distance(p: Point, q: Point) -> i128 {
    let dx = p.x as i128 - q.x as i128;
    let dy = p.y as i128 - q.y as i128;
    dx * dx + dy * dy
}

/// Sign of the orientation of the triple `(a, b, c)`: positive for a left
/// turn, zero when collinear.
#[inline]
pub fn orientation(a: Point, b: Point, c: Point) -> i128 {
    let u = b - a;
    let v = c - a;
    u.x as i128 * v.y as i128 - u.y as i128 * v.x as i128
}

/// A decimal number `mantissa * 10^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Decimal {
    mantissa: i128,
    exponent: i32,
}

fn parse_decimal(text: &str) -> Result<Decimal> {
    let err = |reason| Error::Decimal {
        text: text.to_string(),
        reason,
    };
    let s = text.trim();
    let (negative, s) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (body, exp) = match s.find(['e', 'E']) {
        Some(at) => {
            let exp: i32 = s[at + 1..].parse().map_err(|_| err("bad exponent"))?;
            (&s[..at], exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(at) => (&body[..at], &body[at + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    let mut mantissa: i128 = 0;
    for c in int_part.bytes().chain(frac_part.bytes()) {
        if !c.is_ascii_digit() {
            return Err(err("unexpected character"));
        }
        mantissa = mantissa
            .checked_mul(10)
            .and_then(|m| m.checked_add((c - b'0') as i128))
            .ok_or_else(|| err("too many significant digits"))?;
    }
    let frac_len = i32::try_from(frac_part.len()).map_err(|_| err("too many digits"))?;
    let mut exponent = exp.checked_sub(frac_len).ok_or_else(|| err("exponent overflow"))?;
    if mantissa == 0 {
        exponent = 0;
    }
    while mantissa != 0 && mantissa % 10 == 0 {
        mantissa /= 10;
        exponent += 1;
    }
    Ok(Decimal {
        mantissa: if negative { -mantissa } else { mantissa },
        exponent,
    })
}

fn lattice_value(d: Decimal, scale: u32, index: usize) -> Result<i64> {
    let shift = d.exponent + scale as i32;
    debug_assert!(shift >= 0);
    let mut v = d.mantissa;
    for _ in 0..shift {
        v = v
            .checked_mul(10)
            .filter(|v| v.abs() <= MAX_LATTICE_COORD as i128)
            .ok_or(Error::CoordinateRange { index })?;
    }
    if v.abs() > MAX_LATTICE_COORD as i128 {
        return Err(Error::CoordinateRange { index });
    }
    Ok(v as i64)
}

/// A planar point set with a designated root, stored exactly on an integer
/// lattice and translated so that the root sits at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedPointSet {
    points: Vec<Point>,
    root: usize,
    scale: u32,
    offset: Point,
}

impl RootedPointSet {
    /// Builds a point set from decimal coordinate strings such as `"-1.25"`
    /// or `"3e-2"`.
    pub fn from_decimal_strs<S: AsRef<str>>(coords: &[(S, S)], root: usize) -> Result<Self> {
        let parsed = coords
            .iter()
            .map(|(x, y)| Ok((parse_decimal(x.as_ref())?, parse_decimal(y.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        let scale = parsed
            .iter()
            .flat_map(|(x, y)| [x.exponent, y.exponent])
            .map(|e| (-e).max(0) as u32)
            .max()
            .unwrap_or(0);
        let lattice = parsed
            .iter()
            .enumerate()
            .map(|(i, (x, y))| Ok(Point::new(lattice_value(*x, scale, i)?, lattice_value(*y, scale, i)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_lattice(lattice, root, scale)
    }

    /// Builds a point set from floating-point coordinates. Each value is
    /// taken as the shortest decimal that round-trips to it.
    pub fn from_f64(coords: &[(f64, f64)], root: usize) -> Result<Self> {
        let mut text = Vec::with_capacity(coords.len());
        for (i, &(x, y)) in coords.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
            text.push((x.to_string(), y.to_string()));
        }
        Self::from_decimal_strs(&text, root)
    }

    /// Builds a point set from integer coordinates (scale zero).
    pub fn from_integers(coords: &[(i64, i64)], root: usize) -> Result<Self> {
        let pts = coords.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Self::from_lattice(pts, root, 0)
    }

    /// Builds a point set from lattice points with coordinates
    /// `point / 10^scale`.
    pub fn from_lattice(points: Vec<Point>, root: usize, scale: u32) -> Result<Self> {
        if root >= points.len() {
            return Err(Error::RootOutOfRange { root, len: points.len() });
        }
        for (i, p) in points.iter().enumerate() {
            if p.x.abs() > MAX_LATTICE_COORD || p.y.abs() > MAX_LATTICE_COORD {
                return Err(Error::CoordinateRange { index: i });
            }
        }
        let mut seen = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(first) = seen.insert(*p, i) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
        }
        let offset = points[root];
        let points = points.into_iter().map(|p| p - offset).collect();
        Ok(RootedPointSet {
            points,
            root,
            scale,
            offset,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Lattice point `i`, translated so that the root is the origin.
    #[inline]
    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of decimal digits folded into the lattice.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Converts a lattice length into input units.
    pub fn unscale(&self, v: f64) -> f64 {
        v / 10f64.powi(self.scale as i32)
    }

    #[inline]
    pub fn squared_distance(&self, i: usize, j: usize) -> i128 {
        squared_distance(self.points[i], self.points[j])
    }

    /// Euclidean distance between points `i` and `j` in input units.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.unscale((self.squared_distance(i, j) as f64).sqrt())
    }

    /// Original (untranslated) coordinates of point `i` as floats.
    pub fn original(&self, i: usize) -> (f64, f64) {
        let p = self.points[i];
        (
            self.unscale((p.x + self.offset.x) as f64),
            self.unscale((p.y + self.offset.y) as f64),
        )
    }

    /// Original coordinates of point `i` as exact decimal strings.
    pub fn original_decimal(&self, i: usize) -> (String, String) {
        let p = self.points[i];
        (
            format_lattice(p.x + self.offset.x, self.scale),
            format_lattice(p.y + self.offset.y, self.scale),
        )
    }

    /// The same point set with every point rotated a quarter turn about the
    /// root. Exact.
    pub fn rotated_quarter(&self) -> RootedPointSet {
        RootedPointSet {
            points: self.points.iter().map(|p| p.rotate_quarter()).collect(),
            root: self.root,
            scale: self.scale,
            offset: self.offset.rotate_quarter(),
        }
    }

    /// Indices of every point except the root.
    pub fn non_root(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.root)
    }
}

fn format_lattice(v: i64, scale: u32) -> String {
    if scale == 0 {
        return v.to_string();
    }
    let digits = v.unsigned_abs().to_string();
    let scale = scale as usize;
    let padded = if digits.len() <= scale {
        format!("{}{}", "0".repeat(scale - digits.len() + 1), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - scale);
    let frac_part = frac_part.trim_end_matches('0');
    let sign = if v < 0 { "-" } else { "" };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
