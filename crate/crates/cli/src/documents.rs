//! JSON and CSV documents exchanged by the command-line tool.

use std::path::Path;
use std::str::FromStr;

use monotone_mst::geometry::{Axis, OrthoSystem, RootedPointSet, RootedTree};
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::Failure;

/// A point set, optionally with edges. Covers both the point-set and the
/// graph document, and accepts a tree document too.
#[derive(Debug, Deserialize)]
struct InputDocument {
    root: usize,
    points: Vec<[Value; 2]>,
    #[serde(default)]
    edges: Option<Vec<[usize; 2]>>,
}

#[derive(Debug)]
pub struct Input {
    pub points: RootedPointSet,
    pub edges: Option<Vec<(usize, usize)>>,
}

fn decimal(v: &Value, index: usize) -> Result<String, Failure> {
    match v {
        Value::Number(n) => Ok(n.to_string()),
        Value::String(s) => Ok(s.trim().to_string()),
        _ => Err(Failure::Invalid(format!(
            "coordinate of point {index} must be a number or a decimal string"
        ))),
    }
}

fn parse_json(text: &str) -> Result<Input, Failure> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| Failure::Invalid(format!("malformed document: {e}")))?;
    let coords = doc
        .points
        .iter()
        .enumerate()
        .map(|(i, [x, y])| Ok((decimal(x, i)?, decimal(y, i)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    let points = RootedPointSet::from_decimal_strs(&coords, doc.root).map_err(Failure::invalid)?;
    let edges = doc.edges.map(|es| es.into_iter().map(|[a, b]| (a, b)).collect());
    Ok(Input { points, edges })
}

/// One `x,y` pair per line; the first line is the root. Blank lines and
/// lines starting with `#` are skipped.
fn parse_csv(text: &str) -> Result<Input, Failure> {
    let mut coords = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (x, y) = line
            .split_once(',')
            .ok_or_else(|| Failure::Invalid(format!("line {}: expected `x,y`", line_no + 1)))?;
        coords.push((x.trim().to_string(), y.trim().to_string()));
    }
    let points = RootedPointSet::from_decimal_strs(&coords, 0).map_err(Failure::invalid)?;
    Ok(Input { points, edges: None })
}

pub fn load(path: &Path) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv || !text.trim_start().starts_with('{') {
        parse_csv(&text)
    } else {
        parse_json(&text)
    }
}

#[derive(Debug, Serialize)]
pub struct AxisField {
    pub slope_degrees: f64,
}

#[derive(Debug, Serialize)]
pub struct SystemField {
    pub y_slope_degrees: f64,
}

/// Output of `build` and `oracle`.
#[derive(Debug, Serialize)]
pub struct TreeDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axis: Option<AxisField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemField>,
    pub root: usize,
    pub points: Vec<[Number; 2]>,
    pub edges: Vec<[usize; 2]>,
    pub cost: f64,
}

/// Direction attached to a tree.
#[derive(Debug, Clone, Copy)]
pub enum Orientation {
    Axis(Axis),
    System(OrthoSystem),
}

impl TreeDocument {
    pub fn new(ps: &RootedPointSet, tree: &RootedTree, orientation: Orientation) -> Self {
        let (axis, system) = match orientation {
            Orientation::Axis(a) => (
                Some(AxisField {
                    slope_degrees: a.slope_degrees(),
                }),
                None,
            ),
            Orientation::System(s) => (
                None,
                Some(SystemField {
                    y_slope_degrees: s.y_slope_degrees(),
                }),
            ),
        };
        let number = |s: String| Number::from_str(&s).expect("lattice values print as JSON numbers");
        TreeDocument {
            axis,
            system,
            root: ps.root(),
            points: (0..ps.len())
                .map(|i| {
                    let (x, y) = ps.original_decimal(i);
                    [number(x), number(y)]
                })
                .collect(),
            edges: tree.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            cost: tree.cost(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree documents always serialize") + "\n"
    }
}
