//! Geometric graphs and rooted trees over a [`RootedPointSet`].

use std::collections::{HashSet, VecDeque};

use super::point::RootedPointSet;
use crate::error::{Error, Result};

/// An undirected straight-line graph on the points of a rooted point set.
#[derive(Debug, Clone)]
pub struct GeometricGraph<'a> {
    points: &'a RootedPointSet,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl<'a> GeometricGraph<'a> {
    /// Validates indices, self-loops and duplicates. Edges are kept in input
    /// order.
    pub fn new(points: &'a RootedPointSet, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = points.len();
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::EdgeOutOfRange(a, b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(a, b));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        Ok(GeometricGraph {
            points,
            edges,
            adjacency,
        })
    }

    pub fn points(&self) -> &'a RootedPointSet {
        self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    /// Fails with the smallest vertex not reachable from the root.
    pub fn check_connected(&self) -> Result<()> {
        let n = self.points.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.points.root()]);
        seen[self.points.root()] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(unreachable) => Err(Error::Disconnected { unreachable }),
            None => Ok(()),
        }
    }

    /// Sum of the Euclidean edge lengths, in input units.
    pub fn cost(&self) -> f64 {
        graph_cost(self)
    }
}

/// Sum of the Euclidean lengths of the edges of `g`.
pub fn graph_cost(g: &GeometricGraph<'_>) -> f64 {
    g.edges.iter().map(|&(a, b)| g.points.distance(a, b)).sum()
}

/// A spanning tree given by parent links toward the root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    cost: f64,
}

impl RootedTree {
    /// Builds a tree from parent links, checking that every non-root vertex
    /// has a parent and that following parents always reaches the root.
    pub fn from_parents(ps: &RootedPointSet, parent: Vec<Option<usize>>) -> Result<Self> {
        let n = ps.len();
        let root = ps.root();
        if parent.len() != n || parent[root].is_some() {
            return Err(Error::NotATree { root });
        }
        // 0 unvisited, 1 on the current walk, 2 known to reach the root.
        let mut state = vec![0u8; n];
        state[root] = 2;
        let mut walk = Vec::new();
        for start in 0..n {
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = match parent[v] {
                    Some(p) if p < n => p,
                    _ => return Err(Error::NotATree { root }),
                };
            }
            if state[v] == 1 {
                return Err(Error::NotATree { root });
            }
            for w in walk.drain(..) {
                state[w] = 2;
            }
        }
        let cost = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| ps.distance(v, p)))
            .sum();
        Ok(RootedTree { root, parent, cost })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Sum of Euclidean edge lengths, in input units.
    pub fn cost(&self) -> f64 {
        self.cost
    }

    /// `(parent, child)` pairs ordered by child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect()
    }

    /// Edges as sorted `(min, max)` pairs, for comparing trees.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        e.sort_unstable();
        e
    }

    pub fn as_graph<'a>(&self, ps: &'a RootedPointSet) -> GeometricGraph<'a> {
        GeometricGraph::new(ps, self.edges()).expect("tree edges are simple")
    }
}
