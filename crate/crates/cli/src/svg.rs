//! SVG drawing of a tree: one circle per point, one line per edge and an
//! arrow along the axis (the `y` axis for systems).

use std::fmt::Write;

use monotone_mst::geometry::{RootedPointSet, RootedTree};

const SIZE: f64 = 512.0;
const MARGIN: f64 = 24.0;

pub fn render(ps: &RootedPointSet, tree: &RootedTree, direction: (i64, i64)) -> String {
    let coords: Vec<(f64, f64)> = (0..ps.len()).map(|i| ps.original(i)).collect();
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y);
    let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
    // Screen y grows downwards.
    let at = |(x, y): (f64, f64)| (MARGIN + (x - lo_x) * scale, SIZE - MARGIN - (y - lo_y) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    writeln!(out, r##"<g stroke="#335577" stroke-width="1.5">"##).unwrap();
    for (a, b) in tree.edges() {
        let (x1, y1) = at(coords[a]);
        let (x2, y2) = at(coords[b]);
        writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r##"<g fill="#222222">"##).unwrap();
    for (i, &c) in coords.iter().enumerate() {
        let (x, y) = at(c);
        if i == ps.root() {
            writeln!(out, r##"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="#cc3311"/>"##).unwrap();
        } else {
            writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#).unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();

    let len = (direction.0 as f64).hypot(direction.1 as f64);
    let (ux, uy) = (direction.0 as f64 / len, -(direction.1 as f64) / len);
    let (rx, ry) = at(coords[ps.root()]);
    let arm = SIZE / 5.0;
    let (tx, ty) = (rx + ux * arm, ry + uy * arm);
    let head = 8.0;
    let (h1x, h1y) = (tx - head * (ux - 0.5 * uy), ty - head * (uy + 0.5 * ux));
    let (h2x, h2y) = (tx - head * (ux + 0.5 * uy), ty - head * (uy - 0.5 * ux));
    writeln!(
        out,
        r##"<path d="M {rx:.3} {ry:.3} L {tx:.3} {ty:.3} M {h1x:.3} {h1y:.3} L {tx:.3} {ty:.3} L {h2x:.3} {h2y:.3}" stroke="#cc3311" stroke-width="2" fill="none"/>"##
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_counts() {
        let ps = RootedPointSet::from_integers(&[(0, 0), (1, 1), (2, 4), (3, 9)], 0).unwrap();
        let tree = RootedTree::from_parents(&ps, vec![None, Some(0), Some(1), Some(2)]).unwrap();
        let svg = render(&ps, &tree, (0, 1));
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg, render(&ps, &tree, (0, 1)));
    }
}
