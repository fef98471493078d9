//! Monotone minimum spanning trees of rooted planar point sets.
//!
//! Given points `P` with a root `r`, a spanning tree is rooted `y`-monotone
//! when the path from `r` to every point is monotone along the axis `y`, and
//! rooted xy-monotone when each path is monotone along both axes of an
//! orthogonal system. This crate builds the cheapest such trees for a fixed
//! direction ([`ymmst`], [`xymmst`]), over all directions ([`ummst`],
//! [`ummst2d`]), and recognizes the corresponding properties of arbitrary
//! graphs ([`recognition`]).
//!
//! Coordinates are decimals scaled onto an integer lattice, so every
//! orientation and projection comparison is exact.
//!
//! ```
//! use monotone_mst::{geometry::{Axis, RootedPointSet}, ymmst};
//!
//! let ps = RootedPointSet::from_integers(&[(0, 0), (1, 1), (2, 4), (3, 9)], 0)?;
//! let tree = ymmst(&ps, &Axis::Y)?;
//! assert_eq!(tree.edges(), vec![(0, 1), (1, 2), (2, 3)]);
//! # Ok::<(), monotone_mst::Error>(())
//! ```

pub mod error;
pub mod geometry;
pub mod oracle;
pub mod proximity;
pub mod recognition;
pub mod ummst;
pub mod ummst2d;
pub mod xymmst;
pub mod ymmst;

pub use error::{Error, Result};
pub use recognition::{is_rooted_xy_monotone, is_rooted_y_monotone, uniform_2d_monotone_system, uniform_monotone_axis};
pub use ummst::{ummst, ummst_sweep};
pub use ummst2d::{ummst2d, ummst2d_sweep};
pub use xymmst::{xymmst, xymmst_closed};
pub use ymmst::{ymmst, ymmst_closed};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-geometry.md")]
    mod exact_geometry {}
    #[doc = include_str!("../../../book/src/proximity.md")]
    mod proximity {}
    #[doc = include_str!("../../../book/src/y-mmst.md")]
    mod y_mmst {}
    #[doc = include_str!("../../../book/src/uniform-sweep.md")]
    mod uniform_sweep {}
    #[doc = include_str!("../../../book/src/xy-mmst.md")]
    mod xy_mmst {}
    #[doc = include_str!("../../../book/src/uniform-2d.md")]
    mod uniform_2d {}
    #[doc = include_str!("../../../book/src/recognition.md")]
    mod recognition {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
