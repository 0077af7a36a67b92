use std::collections::HashSet;
use std::str::FromStr;

use crate::error::{check_capacity, Error, Result};
use crate::graph::{canonical_form, Graph, VertexSet};

pub const LABELED_CAP: usize = 7;
pub const CANONICAL_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every graph on vertex set `0..n`.
    Labeled,
    /// One representative per isomorphism class.
    Canonical,
}

impl FromStr for EnumerationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labeled" => Ok(EnumerationMode::Labeled),
            "canonical" => Ok(EnumerationMode::Canonical),
            other => Err(Error::Unknown {
                kind: "enumeration mode",
                name: other.into(),
            }),
        }
    }
}

/// The `index`-th labeled graph on `n` vertices: bit `i` of `index` is the
/// `i`-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn labeled_graph(n: usize, index: u64) -> Graph {
    let mut rows = [0u32; crate::graph::MAX_VERTICES];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if index >> bit & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    Graph::from_rows(n, &rows)
}

pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

pub fn enumerate_graphs(
    n: usize,
    mode: EnumerationMode,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    match mode {
        EnumerationMode::Labeled => {
            check_capacity("labeled enumeration", n, LABELED_CAP)?;
            Ok(Box::new(
                (0..labeled_count(n)).map(move |i| labeled_graph(n, i)),
            ))
        }
        EnumerationMode::Canonical => {
            check_capacity("canonical enumeration", n, CANONICAL_CAP)?;
            Ok(Box::new(CanonicalStream::new(n)))
        }
    }
}

/// Representatives of the isomorphism classes on `n` vertices, in stream order.
pub fn canonical_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n, EnumerationMode::Canonical)?.collect())
}

/// Every graph on `n` vertices arises from one on `n - 1` vertices by adding
/// a vertex with some neighbourhood, so extending the `n - 1` classes and
/// deduplicating by canonical form yields every class on `n` exactly once.
struct CanonicalStream {
    parents: Vec<Graph>,
    parent: usize,
    neighbourhood: u32,
    seen: HashSet<Vec<u8>>,
}

impl CanonicalStream {
    fn new(n: usize) -> Self {
        let parents = if n == 1 {
            Vec::new()
        } else {
            CanonicalStream::new(n - 1).collect()
        };
        CanonicalStream {
            parents,
            parent: 0,
            neighbourhood: 0,
            seen: HashSet::new(),
        }
    }
}

impl Iterator for CanonicalStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.parents.is_empty() {
            // n = 1
            if self.seen.is_empty() {
                self.seen.insert(Vec::new());
                return Some(Graph::empty(1).expect("K1"));
            }
            return None;
        }
        while self.parent < self.parents.len() {
            let h = &self.parents[self.parent];
            let limit = 1u32 << h.order();
            while self.neighbourhood < limit {
                let nb = VertexSet::from_bits(self.neighbourhood);
                self.neighbourhood += 1;
                let g = h.with_vertex(nb).expect("below capacity");
                let form = canonical_form(&g).expect("below capacity");
                if self.seen.insert(form.as_bytes().to_vec()) {
                    return Some(g);
                }
            }
            self.parent += 1;
            self.neighbourhood = 0;
        }
        None
    }
}
