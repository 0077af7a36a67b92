//! Small simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one `u32` bitmask per vertex, so every set
//! operation the solvers need (neighbourhoods, independence tests, induced
//! subgraphs) is a handful of word operations.

mod graph6;
mod iso;
mod named;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use graph6::{parse_graph6, to_graph6};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm, CANONICAL_FORM_CAP};
pub use named::Named;

pub const MAX_VERTICES: usize = 32;

/// A set of vertices of some host graph, stored as a bitmask.
///
/// Iteration is always in ascending vertex order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// The `k`-subsets of `{0, .., n-1}` in lexicographic order of their sorted
/// member lists.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().copied().collect();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Nonempty subsets of `{0, .., n-1}` by increasing size, then
/// lexicographically.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = VertexSet> {
    (1..=n).flat_map(move |k| Combinations::new(n, k))
}

/// Shortest-path diameter; `Infinite` for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// Immutable simple graph on vertices `0..n`, `1 <= n <= 32`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    fn check_order(n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        crate::error::check_capacity("graph", n, MAX_VERTICES)
    }

    /// Builds a graph from an edge list. Duplicates and reversed pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::check_order(n)?;
        let mut g = Graph {
            n,
            adj: [0; MAX_VERTICES],
        };
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Edgeless graph `nK1`.
    pub fn empty(n: usize) -> Result<Graph> {
        Self::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Self::check_order(n)?;
        let full = VertexSet::full(n).bits();
        let mut adj = [0; MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = full & !(1 << v);
        }
        Ok(Graph { n, adj })
    }

    /// Builds from raw adjacency rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Graph {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        let g = Graph { n, adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let full = VertexSet::full(self.n).bits();
        (0..MAX_VERTICES).all(|v| {
            if v >= self.n {
                return self.adj[v] == 0;
            }
            let row = self.adj[v];
            row & !full == 0
                && row >> v & 1 == 0
                && VertexSet(row).iter().all(|u| self.adj[u] >> v & 1 == 1)
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1) as u32)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj[..self.n].iter().all(|&r| r == 0)
    }

    /// Disjoint copies of `self` and `other` (other's vertices shifted by
    /// `self.order()`) plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        crate::error::check_capacity("graph", n, MAX_VERTICES)?;
        let mut adj = self.adj;
        for v in 0..other.n {
            adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut adj = [0; MAX_VERTICES];
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending member order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::Precondition(
                "induced subgraph on the empty set".into(),
            ));
        }
        if !s.is_subset(self.vertices()) {
            let v = s.difference(self.vertices()).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let members: Vec<usize> = s.iter().collect();
        let mut adj = [0; MAX_VERTICES];
        for (i, &u) in members.iter().enumerate() {
            let row = self.adj[u] & s.bits();
            adj[i] = compress(row, s.bits());
        }
        Graph {
            n: members.len(),
            adj,
        }
    }

    /// Vertices reachable from `start` within `within`.
    pub(crate) fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.bits() & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Components of the subgraph induced by `within`, ordered by smallest member.
    pub(crate) fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Maximal connected pieces, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()).len() == self.n
    }

    /// Vertices of degree `n - 1`.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) == self.n - 1)
            .collect()
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    /// New graph with an extra vertex `n` adjacent to `neighbors`.
    pub(crate) fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        crate::error::check_capacity("graph", self.n + 1, MAX_VERTICES)?;
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.adj[v] = neighbors.bits() & VertexSet::full(self.n).bits();
        for u in VertexSet(g.adj[v]) {
            g.adj[u] |= 1 << v;
        }
        Ok(g)
    }
}

/// Packs the bits of `row` selected by `mask` into the low bits.
fn compress(row: u32, mask: u32) -> u32 {
    VertexSet(mask)
        .iter()
        .enumerate()
        .filter(|&(_, v)| row >> v & 1 == 1)
        .fold(0, |out, (i, _)| out | 1 << i)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
