use super::clique::clique_number;
use crate::coloring::Coloring;
use crate::error::{check_capacity, Result};
use crate::graph::{Graph, VertexSet};

pub const CHROMATIC_CAP: usize = 16;

/// Least-k proper coloring, found by testing k = ω, ω+1, … in turn.
pub fn chromatic_witness(g: &Graph) -> Result<Coloring> {
    check_capacity("chromatic number", g.order(), CHROMATIC_CAP)?;
    let mut k = clique_number(g).max(1);
    loop {
        if let Some(c) = k_coloring(g, k) {
            return Ok(c);
        }
        k += 1;
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(chromatic_witness(g)?.num_colors())
}

/// A proper coloring using exactly `k` colors (or fewer if the graph is
/// smaller), vertices and colors tried in ascending order.
fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let mut classes = vec![VertexSet::EMPTY; k];
    if assign(g, 0, 0, &mut classes) {
        let used = classes.iter().take_while(|c| !c.is_empty()).count();
        Some(Coloring::from_classes(g.order(), &classes[..used]))
    } else {
        None
    }
}

fn assign(g: &Graph, v: usize, used: usize, classes: &mut [VertexSet]) -> bool {
    if v == g.order() {
        return true;
    }
    let nb = g.neighbors(v);
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if !classes[c].intersection(nb).is_empty() {
            continue;
        }
        classes[c].insert(v);
        if assign(g, v + 1, used.max(c + 1), classes) {
            return true;
        }
        classes[c].remove(v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Named;

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&Named::Fig2.build().unwrap()).unwrap(), 3);
        assert_eq!(
            chromatic_number(&Named::Cycle(5).build().unwrap()).unwrap(),
            3
        );
        assert_eq!(
            chromatic_number(&Named::Path(4).build().unwrap()).unwrap(),
            2
        );
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap(), 1);
        // wheel: K1 joined to C5
        let w5 = Graph::complete(1)
            .unwrap()
            .join(&Named::Cycle(5).build().unwrap())
            .unwrap();
        assert_eq!(chromatic_number(&w5).unwrap(), 4);
    }

    #[test]
    fn witness_is_normalized() {
        let c = chromatic_witness(&Named::Cycle(5).build().unwrap()).unwrap();
        assert_eq!(c.to_string(), "1 2 1 2 3");
    }
}
