use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Recursive decomposition into complete graphs, joins and disjoint unions.
///
/// A `Join` node is `K_m` joined to the disjoint union of its children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureTree {
    Complete {
        m: usize,
    },
    Join {
        m: usize,
        children: Vec<StructureTree>,
    },
    Union {
        children: Vec<StructureTree>,
    },
    /// `m` isolated vertices.
    EmptyPart {
        m: usize,
    },
    Rejected {
        reason: String,
    },
}

impl StructureTree {
    pub fn is_accepted(&self) -> bool {
        !matches!(self, StructureTree::Rejected { .. })
    }

    /// Builds a graph with this structure; isomorphic to the decomposed input.
    pub fn rebuild(&self) -> Result<Graph> {
        match self {
            StructureTree::Complete { m } => Graph::complete(*m),
            StructureTree::EmptyPart { m } => Graph::empty(*m),
            StructureTree::Union { children } => union_of(children),
            StructureTree::Join { m, children } => Graph::complete(*m)?.join(&union_of(children)?),
            StructureTree::Rejected { reason } => Err(Error::Precondition(format!(
                "cannot rebuild a rejected structure: {reason}"
            ))),
        }
    }
}

fn union_of(children: &[StructureTree]) -> Result<Graph> {
    let (first, rest) = children
        .split_first()
        .ok_or_else(|| Error::Precondition("union without children".into()))?;
    rest.iter()
        .try_fold(first.rebuild()?, |acc, c| acc.disjoint_union(&c.rebuild()?))
}

fn reject<T>(reason: impl Into<String>) -> std::result::Result<T, String> {
    Err(reason.into())
}

/// Splits off the universal vertices of a connected, non-complete graph.
fn peel_apex(g: &Graph) -> std::result::Result<(usize, Graph), String> {
    let apex = g.universal_vertices();
    if apex.is_empty() {
        return reject(format!(
            "connected, not complete, and no universal vertex (max degree {} < {})",
            g.max_degree(),
            g.order() - 1
        ));
    }
    let rest = g.vertices().difference(apex);
    Ok((apex.len(), g.induced_unchecked(rest)))
}

/// Recognizes graphs that are complete, a complete graph joined to a
/// disconnected graph of the special shape, or disconnected of that shape.
///
/// The special shape: edgeless; exactly two non-trivial components, both
/// complete; or exactly one non-trivial component (itself recognized) plus
/// isolated vertices.
pub fn recognize_structure(g: &Graph) -> StructureTree {
    recognize(g).unwrap_or_else(|reason| StructureTree::Rejected { reason })
}

fn recognize(g: &Graph) -> std::result::Result<StructureTree, String> {
    if !g.is_connected() {
        return special(g);
    }
    if g.is_complete() {
        return Ok(StructureTree::Complete { m: g.order() });
    }
    let (m, rest) = peel_apex(g)?;
    if rest.is_connected() {
        return reject(format!(
            "removing the {m} universal vertices leaves a connected graph"
        ));
    }
    Ok(StructureTree::Join {
        m,
        children: vec![special(&rest)?],
    })
}

fn special(g: &Graph) -> std::result::Result<StructureTree, String> {
    if g.is_edgeless() {
        return Ok(StructureTree::EmptyPart { m: g.order() });
    }
    let (nontrivial, isolated): (Vec<VertexSet>, Vec<VertexSet>) = g
        .connected_components()
        .into_iter()
        .partition(|c| c.len() >= 2);
    let mut children = match nontrivial.as_slice() {
        [only] => vec![recognize(&g.induced_unchecked(*only))?],
        [a, b] => {
            let mut out = Vec::with_capacity(2);
            for c in [a, b] {
                let h = g.induced_unchecked(*c);
                if !h.is_complete() {
                    return reject(format!(
                        "two non-trivial components but the one at {:?} is not complete",
                        c.to_vec()
                    ));
                }
                out.push(StructureTree::Complete { m: h.order() });
            }
            out
        }
        many => {
            return reject(format!("{} non-trivial components", many.len()));
        }
    };
    if !isolated.is_empty() {
        children.push(StructureTree::EmptyPart { m: isolated.len() });
    }
    Ok(StructureTree::Union { children })
}

/// Full decomposition of a connected (C4, P4)-free graph as `K_m` joined to
/// a union of smaller connected pieces, applied recursively.
pub fn decompose_trivially_perfect(g: &Graph) -> Result<StructureTree> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "trivially perfect decomposition needs a connected graph".into(),
        ));
    }
    Ok(decompose(g).unwrap_or_else(|reason| StructureTree::Rejected { reason }))
}

fn decompose(g: &Graph) -> std::result::Result<StructureTree, String> {
    if g.is_complete() {
        return Ok(StructureTree::Complete { m: g.order() });
    }
    let (m, rest) = peel_apex(g)?;
    let children = rest
        .connected_components()
        .into_iter()
        .map(|c| decompose(&rest.induced_unchecked(c)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(StructureTree::Join {
        m,
        children: vec![StructureTree::Union { children }],
    })
}
