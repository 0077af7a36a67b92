//! Grundy colorings as repeated removal of maximal independent sets.
//!
//! A sequence of classes `V1, .., Vk` is a Grundy coloring exactly when each
//! `Vi` is a maximal independent set of the graph left after removing
//! `V1, .., V(i-1)`. So the set of achievable class counts for a vertex
//! subset `S` is the union, over maximal independent sets `I` of `G[S]`, of
//! the counts for `S \ I` shifted by one. Memoised over subsets.

use crate::coloring::Coloring;
use crate::error::{check_capacity, Result};
use crate::graph::{Graph, VertexSet};

pub const GRUNDY_CAP: usize = 16;

struct GrundyTable<'g> {
    g: &'g Graph,
    /// bit `k` set iff a Grundy coloring of `G[S]` with `k` colors exists;
    /// 0 marks "not yet computed" (every nonempty S has some count).
    lengths: Vec<u32>,
}

impl<'g> GrundyTable<'g> {
    fn new(g: &'g Graph) -> Result<Self> {
        check_capacity("Grundy number", g.order(), GRUNDY_CAP)?;
        let mut lengths = vec![0u32; 1 << g.order()];
        lengths[0] = 1;
        Ok(GrundyTable { g, lengths })
    }

    fn lengths(&mut self, s: u32) -> u32 {
        let cached = self.lengths[s as usize];
        if cached != 0 {
            return cached;
        }
        let mut acc = 0;
        for mis in maximal_independent_sets(self.g, VertexSet::from_bits(s)) {
            acc |= self.lengths(s & !mis.bits()) << 1;
        }
        self.lengths[s as usize] = acc;
        acc
    }

    /// Classes of a Grundy coloring of `G[s]` with exactly `k` colors.
    fn witness(&mut self, s: u32, k: usize, out: &mut Vec<VertexSet>) -> bool {
        if s == 0 {
            return k == 0;
        }
        if k == 0 || self.lengths(s) >> k & 1 == 0 {
            return false;
        }
        for mis in maximal_independent_sets(self.g, VertexSet::from_bits(s)) {
            let rest = s & !mis.bits();
            if self.lengths(rest) >> (k - 1) & 1 == 1 {
                out.push(mis);
                return self.witness(rest, k - 1, out);
            }
        }
        unreachable!("length table promised a witness")
    }
}

/// Maximal independent sets of `G[within]`, by Bron–Kerbosch with pivoting on
/// the complement. Order is deterministic.
pub(crate) fn maximal_independent_sets(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    // non-neighbours inside `within`, excluding the vertex itself
    let mut non_adj = [0u32; crate::graph::MAX_VERTICES];
    for v in within {
        non_adj[v] = within.bits() & !g.row(v) & !(1 << v);
    }
    bron_kerbosch(&non_adj, 0, within.bits(), 0, &mut out);
    out
}

fn bron_kerbosch(non_adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_bits(r));
        }
        return;
    }
    let pivot = VertexSet::from_bits(p | x)
        .iter()
        .max_by_key(|&u| (non_adj[u] & p).count_ones())
        .unwrap();
    for v in VertexSet::from_bits(p & !non_adj[pivot]) {
        bron_kerbosch(non_adj, r | 1 << v, p & non_adj[v], x & non_adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Bitmask of achievable Grundy class counts: bit `k` set iff a Grundy
/// coloring with exactly `k` colors exists.
pub fn grundy_lengths(g: &Graph) -> Result<u32> {
    let mut table = GrundyTable::new(g)?;
    Ok(table.lengths(g.vertices().bits()))
}

pub fn grundy_number(g: &Graph) -> Result<usize> {
    Ok(31 - grundy_lengths(g)?.leading_zeros() as usize)
}

/// A Grundy coloring with `Γ(g)` colors.
pub fn grundy_witness(g: &Graph) -> Result<Coloring> {
    let k = grundy_number(g)?;
    Ok(grundy_coloring_with(g, k)?.expect("Γ colors are achievable"))
}

pub(crate) fn grundy_coloring_with(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    let mut table = GrundyTable::new(g)?;
    let mut classes = Vec::with_capacity(k);
    if table.witness(g.vertices().bits(), k, &mut classes) {
        Ok(Some(Coloring::from_classes(g.order(), &classes)))
    } else {
        Ok(None)
    }
}
