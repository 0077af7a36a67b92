use super::{Graph, VertexSet};
use crate::error::{check_capacity, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_FORM_CAP: usize = 10;

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Stable colour classes from iterated degree refinement, listed in an
/// isomorphism-invariant order.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

/// Upper triangle of the relabelled adjacency matrix, row-major, first pair
/// in the most significant bit.
fn matrix_code(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Minimum adjacency-matrix code over every vertex ordering that lists the
/// refinement cells in order. The cells are an isomorphism invariant, so the
/// minimum is too; within each cell all permutations are tried.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_capacity("canonical form", g.order(), CANONICAL_FORM_CAP)?;
    let cells = refined_cells(g);
    let mut order = Vec::with_capacity(g.order());
    let mut best = u64::MAX;
    let mut used = VertexSet::EMPTY;
    extend_order(g, &cells, 0, &mut used, &mut order, &mut best);
    let mut bytes = vec![g.order() as u8];
    bytes.extend_from_slice(&best.to_be_bytes());
    Ok(CanonicalForm(bytes))
}

fn extend_order(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut VertexSet,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(matrix_code(g, order));
        return;
    }
    let members = &cells[cell];
    let placed_here = members.iter().filter(|&&v| used.contains(v)).count();
    if placed_here == members.len() {
        return extend_order(g, cells, cell + 1, used, order, best);
    }
    for &v in members {
        if used.contains(v) {
            continue;
        }
        used.insert(v);
        order.push(v);
        extend_order(g, cells, cell, used, order, best);
        order.pop();
        used.remove(v);
    }
}

/// Backtracking isomorphism test; works at any supported order.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    map_vertex(a, b, 0, &mut map, VertexSet::EMPTY)
}

fn map_vertex(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: VertexSet) -> bool {
    if v == a.order() {
        return true;
    }
    let candidates = b.vertices().difference(used);
    for w in candidates {
        if a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        if map_vertex(a, b, v + 1, map, used.union(VertexSet::singleton(w))) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Named;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
    }

    #[test]
    fn examples() {
        let p4 = Named::Path(4).build().unwrap();
        let c4 = Named::Cycle(4).build().unwrap();
        assert!(is_isomorphic(&p4, &p4.complement()));
        let k4_minus_matching = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(is_isomorphic(&c4, &k4_minus_matching));
        assert!(!is_isomorphic(&p4, &c4));
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&p4.complement()).unwrap()
        );
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&c4).unwrap());
    }

    #[test]
    fn same_degree_sequence_not_isomorphic() {
        // C6 vs 2C3
        let c6 = Named::Cycle(6).build().unwrap();
        let k3 = Graph::complete(3).unwrap();
        let two_k3 = k3.disjoint_union(&k3).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3));
        assert_ne!(
            canonical_form(&c6).unwrap(),
            canonical_form(&two_k3).unwrap()
        );
    }

    #[test]
    fn relabelling_keeps_form() {
        let fig = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (2, 6),
            ],
        )
        .unwrap();
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let moved = relabel(&fig, &perm);
        assert!(is_isomorphic(&fig, &moved));
        assert_eq!(
            canonical_form(&fig).unwrap(),
            canonical_form(&moved).unwrap()
        );
    }

    #[test]
    fn capacity() {
        let g = Graph::empty(11).unwrap();
        assert!(canonical_form(&g).is_err());
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
