use crate::graph::{Graph, VertexSet};

/// Maximum clique by branch and bound. Among maxima, the first found when
/// branching on ascending vertices is returned.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

fn expand(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    while let Some(v) = candidates.min() {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        let mut next = current;
        next.insert(v);
        expand(g, next, candidates.intersection(g.neighbors(v)), best);
        candidates.remove(v);
    }
}
