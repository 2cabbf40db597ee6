//! Finite simple undirected graphs.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..vertex_count()` and
//! edges are kept as a sorted list of pairs `(u, v)` with `u < v`, so two
//! graphs with the same edge set compare equal regardless of how they were
//! assembled.
//!
//! Joins and cones use a fixed labelling: the left operand keeps its
//! indices and the right operand is shifted past it. For `cone(g, n)` the
//! apex vertices are therefore `k..k + n` where `k = g.vertex_count()`.

mod edgelist;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<bool>,
}

impl Graph {
    /// Builds a graph from arbitrary vertex pairs.
    ///
    /// Pairs may appear in either orientation and more than once; the edge
    /// set is normalized and deduplicated. Self-loops and out-of-range
    /// endpoints are rejected.
    pub fn from_edge_list(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(vertex_count, edges))
    }

    fn from_canonical(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![false; vertex_count * vertex_count];
        for &(u, v) in &edges {
            adjacency[u * vertex_count + v] = true;
            adjacency[v * vertex_count + u] = true;
        }
        Graph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    /// `m` isolated vertices.
    pub fn edgeless(m: usize) -> Result<Self> {
        Self::from_edge_list(m, &[])
    }

    /// The complete graph `K_m`.
    pub fn complete(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("complete graph needs at least one vertex"));
        }
        let edges = (0..m)
            .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
            .collect();
        Ok(Self::from_canonical(m, edges))
    }

    /// The path `0 - 1 - … - (m-1)`.
    pub fn path(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::input("path needs at least one vertex"));
        }
        let edges = (1..m).map(|v| (v - 1, v)).collect();
        Ok(Self::from_canonical(m, edges))
    }

    /// The cycle `0 - 1 - … - (m-1) - 0`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::input(format!(
                "a simple cycle needs at least 3 vertices, got {m}"
            )));
        }
        let mut edges: Vec<_> = (1..m).map(|v| (v - 1, v)).collect();
        edges.push((0, m - 1));
        Ok(Self::from_canonical(m, edges))
    }

    /// Disjoint union of `self` and `other` plus every edge between them.
    ///
    /// Vertices of `self` keep their indices, vertices of `other` are shifted
    /// by `self.vertex_count()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let k1 = self.vertex_count;
        let k2 = other.vertex_count;
        let mut edges = Vec::with_capacity(self.edges.len() + other.edges.len() + k1 * k2);
        edges.extend_from_slice(&self.edges);
        edges.extend(other.edges.iter().map(|&(u, v)| (u + k1, v + k1)));
        for u in 0..k1 {
            edges.extend((0..k2).map(|v| (u, v + k1)));
        }
        Self::from_canonical(k1 + k2, edges)
    }

    /// The `n`th cone: the join of `self` with `K_n`.
    pub fn cone(&self, n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::input("cone size must be at least 1"));
        }
        Ok(self.join(&Graph::complete(n)?))
    }

    /// Iterated join of two or more graphs, left to right.
    pub fn join_all(graphs: &[Graph]) -> Result<Graph> {
        match graphs {
            [] => Err(Error::input("join of an empty list")),
            [first, rest @ ..] => Ok(rest.iter().fold(first.clone(), |acc, g| acc.join(g))),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.adjacency[u * self.vertex_count + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adjacency[v * self.vertex_count..(v + 1) * self.vertex_count];
        row.iter()
            .enumerate()
            .filter_map(|(w, &adjacent)| adjacent.then_some(w))
    }

    /// Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.vertex_count, "vertex {v} out of range");
        self.neighbors(v).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        VertexSet {
            members: (0..self.vertex_count)
                .filter(|&v| self.degree(v) == 1)
                .collect(),
        }
    }

    /// Whether `s` induces a complete or an edgeless subgraph and all of its
    /// members have the same neighbours outside `s`.
    pub fn has_conformity_property(&self, s: &VertexSet) -> Result<bool> {
        let members = s.members();
        let Some(&first) = members.first() else {
            return Err(Error::input("conformity check needs a nonempty vertex set"));
        };
        if let Some(&bad) = members.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::input(format!("vertex {bad} is not in the graph")));
        }

        let inside_edges = members
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .count();
        let pairs = members.len() * (members.len() - 1) / 2;
        if inside_edges != 0 && inside_edges != pairs {
            return Ok(false);
        }

        let outside = (0..self.vertex_count).filter(|x| !s.contains(*x));
        for x in outside {
            let reference = self.has_edge(first, x);
            if members.iter().any(|&w| self.has_edge(w, x) != reference) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub(crate) fn require_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {v} is not in a graph on {} vertices",
                self.vertex_count
            )))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A sorted set of distinct vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// The six-vertex graph whose third cone has a non-split cone sequence.
pub fn goel_graph() -> Graph {
    Graph::from_edge_list(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
    .expect("fixed edge list is valid")
}

/// A five-vertex tree with three leaves: a path `0-1-2` with two leaves
/// hanging off vertex 2.
pub fn three_leaf_tree() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).expect("fixed edge list is valid")
}
