//! Complete colorings by backtracking over set partitions.
//!
//! Vertices are placed in ascending order into classes numbered in order of
//! first use (restricted growth), so each partition is visited once. Two
//! prunes keep the search small:
//!
//! * enough unplaced vertices must remain to open every class still empty;
//! * each edge realises at most one color pair, so the pairs still missing
//!   can't exceed the edges that still have an unplaced endpoint.

use crate::coloring::Coloring;
use crate::error::{check_capacity, Result};
use crate::graph::{Graph, VertexSet};

pub const ACHROMATIC_CAP: usize = 13;
pub const PSEUDOACHROMATIC_CAP: usize = 13;

/// Largest `k` with `k (k - 1) / 2 <= m`, capped at `n`.
fn pair_bound(n: usize, m: usize) -> usize {
    let mut k = 1;
    while (k + 1) * k / 2 <= m && k < n {
        k += 1;
    }
    k
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    proper: bool,
    classes: Vec<VertexSet>,
    /// `touching[c]`: bitmask of classes joined to class `c` by some edge
    touching: Vec<u32>,
    covered: usize,
    /// edges whose larger endpoint is `>= v`, indexed by `v`
    open_edges: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, proper: bool) -> Self {
        let n = g.order();
        let mut open_edges = vec![0; n + 1];
        for (_, w) in g.edges() {
            open_edges[w] += 1;
        }
        for v in (0..n).rev() {
            open_edges[v] += open_edges[v + 1];
        }
        Search {
            g,
            k,
            proper,
            classes: vec![VertexSet::EMPTY; k],
            touching: vec![0; k],
            covered: 0,
            open_edges,
        }
    }

    fn run(&mut self, v: usize, used: usize) -> bool {
        let n = self.g.order();
        if v == n {
            return used == self.k && self.covered == self.k * (self.k - 1) / 2;
        }
        if used + (n - v) < self.k {
            return false;
        }
        if self.k * (self.k - 1) / 2 - self.covered > self.open_edges[v] {
            return false;
        }
        let nb = self.g.neighbors(v);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.proper && !self.classes[c].intersection(nb).is_empty() {
                continue;
            }
            let mut fresh = 0u32;
            for d in 0..used {
                if d != c
                    && self.touching[c] >> d & 1 == 0
                    && !self.classes[d].intersection(nb).is_empty()
                {
                    fresh |= 1 << d;
                }
            }
            self.classes[c].insert(v);
            self.touching[c] |= fresh;
            for d in VertexSet::from_bits(fresh) {
                self.touching[d] |= 1 << c;
            }
            self.covered += fresh.count_ones() as usize;

            if self.run(v + 1, used.max(c + 1)) {
                return true;
            }

            self.covered -= fresh.count_ones() as usize;
            for d in VertexSet::from_bits(fresh) {
                self.touching[d] &= !(1 << c);
            }
            self.touching[c] &= !fresh;
            self.classes[c].remove(v);
        }
        false
    }
}

/// A complete (and, if `proper`, proper) coloring with exactly `k` colors.
/// Callers enforce the size caps.
pub(crate) fn complete_partition(g: &Graph, k: usize, proper: bool) -> Option<Coloring> {
    if k == 0 || k > g.order() || k * (k - 1) / 2 > g.edge_count() {
        return None;
    }
    let mut search = Search::new(g, k, proper);
    if search.run(0, 0) {
        Some(Coloring::from_classes(g.order(), &search.classes))
    } else {
        None
    }
}

/// Largest complete coloring, scanning `k` downward from the pair bound.
fn largest(g: &Graph, proper: bool) -> Coloring {
    let top = pair_bound(g.order(), g.edge_count());
    (1..=top)
        .rev()
        .find_map(|k| complete_partition(g, k, proper))
        .expect("a complete coloring always exists at k = χ")
}

pub fn achromatic_witness(g: &Graph) -> Result<Coloring> {
    check_capacity("achromatic number", g.order(), ACHROMATIC_CAP)?;
    Ok(largest(g, true))
}

pub fn achromatic_number(g: &Graph) -> Result<usize> {
    Ok(achromatic_witness(g)?.num_colors())
}

pub fn pseudoachromatic_witness(g: &Graph) -> Result<Coloring> {
    check_capacity("pseudoachromatic number", g.order(), PSEUDOACHROMATIC_CAP)?;
    Ok(largest(g, false))
}

pub fn pseudoachromatic_number(g: &Graph) -> Result<usize> {
    Ok(pseudoachromatic_witness(g)?.num_colors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_complete_coloring, is_proper};
    use crate::graph::Named;

    #[test]
    fn pair_bound_values() {
        assert_eq!(pair_bound(5, 0), 1);
        assert_eq!(pair_bound(5, 1), 2);
        assert_eq!(pair_bound(5, 3), 3);
        assert_eq!(pair_bound(13, 22), 7);
        assert_eq!(pair_bound(3, 100), 3);
    }

    #[test]
    fn examples() {
        let c4 = Named::Cycle(4).build().unwrap();
        assert_eq!(achromatic_number(&c4).unwrap(), 2);
        assert_eq!(pseudoachromatic_number(&c4).unwrap(), 3);
        let p4 = Named::Path(4).build().unwrap();
        assert_eq!(pseudoachromatic_number(&p4).unwrap(), 3);
        for n in 1..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(achromatic_number(&k).unwrap(), n);
            assert_eq!(pseudoachromatic_number(&k).unwrap(), n);
        }
    }

    #[test]
    fn fig2_alpha_and_psi() {
        let g = Named::Fig2.build().unwrap();
        let a = achromatic_witness(&g).unwrap();
        assert_eq!(a.num_colors(), 5);
        assert!(is_proper(&g, &a).unwrap() && is_complete_coloring(&g, &a).unwrap());
        let p = pseudoachromatic_witness(&g).unwrap();
        assert_eq!(p.num_colors(), 6);
        assert!(is_complete_coloring(&g, &p).unwrap());
    }

    #[test]
    fn two_cliques_with_isolated_vertices() {
        for (m1, m2, t) in [(2, 2, 0), (3, 2, 1), (4, 3, 2), (5, 5, 3)] {
            let mut g = Graph::complete(m1)
                .unwrap()
                .disjoint_union(&Graph::complete(m2).unwrap())
                .unwrap();
            if t > 0 {
                g = g.disjoint_union(&Graph::empty(t).unwrap()).unwrap();
            }
            assert_eq!(pseudoachromatic_number(&g).unwrap(), m1.max(m2));
        }
    }
}
