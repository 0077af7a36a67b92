//! Forbidden induced subgraphs: the fixed pattern library and detection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Combinations, Graph, Named, VertexSet};

/// A named pattern graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Pattern {
        Pattern {
            name: name.into(),
            graph,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn named(name: &str, kind: Named) -> Pattern {
        Pattern::new(name, kind.build().expect("library patterns are valid"))
    }

    pub fn c4() -> Pattern {
        Self::named("C4", Named::Cycle(4))
    }

    pub fn p4() -> Pattern {
        Self::named("P4", Named::Path(4))
    }

    pub fn p3_plus_k2() -> Pattern {
        Self::named("P3+K2", Named::P3PlusK2)
    }

    pub fn three_k2() -> Pattern {
        Self::named("3K2", Named::ThreeK2)
    }

    /// `C_len` for odd `len >= 5`.
    pub fn odd_hole(len: usize) -> Pattern {
        debug_assert!(len >= 5 && len % 2 == 1);
        Self::named(&format!("C{len}"), Named::Cycle(len))
    }

    /// Complement of `C_len`.
    pub fn odd_antihole(len: usize) -> Pattern {
        let hole = Named::Cycle(len).build().expect("valid cycle");
        Pattern::new(format!("co-C{len}"), hole.complement())
    }
}

/// The pattern families used by the characterizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `C4, P4, P3 ∪ K2, 3K2`: forbidden for ωψ-perfect graphs.
    OmegaPsiQuartet,
    /// `P4` alone: forbidden for ωΓ-perfect graphs.
    P4Only,
    /// `P4, P3 ∪ K2, 3K2`: forbidden for ωα-perfect graphs.
    AchroTriple,
    /// Odd holes and odd antiholes of every length up to the host order.
    OddHolesAndAntiholes,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::OmegaPsiQuartet,
        Family::P4Only,
        Family::AchroTriple,
        Family::OddHolesAndAntiholes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::OmegaPsiQuartet => "omega_psi_quartet",
            Family::P4Only => "p4_only",
            Family::AchroTriple => "achro_triple",
            Family::OddHolesAndAntiholes => "odd_holes_and_antiholes",
        }
    }

    /// Members in scan order. Hole lengths run over odd `5..=host_order`.
    pub fn patterns(self, host_order: usize) -> Vec<Pattern> {
        match self {
            Family::OmegaPsiQuartet => vec![
                Pattern::c4(),
                Pattern::p4(),
                Pattern::p3_plus_k2(),
                Pattern::three_k2(),
            ],
            Family::P4Only => vec![Pattern::p4()],
            Family::AchroTriple => {
                vec![Pattern::p4(), Pattern::p3_plus_k2(), Pattern::three_k2()]
            }
            Family::OddHolesAndAntiholes => (5..=host_order)
                .step_by(2)
                .flat_map(|len| [Pattern::odd_hole(len), Pattern::odd_antihole(len)])
                .collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::Unknown {
                kind: "pattern family",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub pattern: String,
    pub vertices: VertexSet,
}

/// Outcome of scanning a graph for a pattern family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeReport {
    pub family: Vec<String>,
    pub witness: Option<Occurrence>,
}

impl FreeReport {
    pub fn is_free(&self) -> bool {
        self.witness.is_none()
    }
}

/// Lexicographically smallest vertex subset inducing a copy of `p`.
pub fn contains_induced(g: &Graph, p: &Pattern) -> Option<VertexSet> {
    let k = p.graph.order();
    let n = g.order();
    if k > n {
        return None;
    }
    let target_edges = p.graph.edge_count();
    Combinations::new(n, k).find(|&s| {
        let edges: usize = s
            .iter()
            .map(|v| g.neighbors(v).intersection(s).len())
            .sum::<usize>()
            / 2;
        edges == target_edges && is_isomorphic(&g.induced_unchecked(s), &p.graph)
    })
}

/// Scans the family members in order and reports the first occurrence.
pub fn family_check(g: &Graph, family: Family) -> FreeReport {
    let patterns = family.patterns(g.order());
    let witness = patterns.iter().find_map(|p| {
        contains_induced(g, p).map(|vertices| Occurrence {
            pattern: p.name.clone(),
            vertices,
        })
    });
    FreeReport {
        family: patterns.into_iter().map(|p| p.name).collect(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> Graph {
        s.parse::<Named>().unwrap().build().unwrap()
    }

    #[test]
    fn contains_examples() {
        let c5 = named("c5");
        let hit = contains_induced(&c5, &Pattern::p4()).unwrap();
        assert_eq!(hit.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(contains_induced(&named("k5"), &Pattern::c4()), None);
        let fig = named("fig2");
        let hit = contains_induced(&fig, &Pattern::c4()).unwrap();
        // smallest: u0, u1 on one side and u4, u5 on the other
        assert_eq!(hit.to_vec(), vec![0, 1, 4, 5]);
        assert_eq!(contains_induced(&named("k2"), &Pattern::p4()), None);
    }

    #[test]
    fn family_examples() {
        let r = family_check(&named("p4"), Family::OmegaPsiQuartet);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.pattern, "P4");
        assert_eq!(w.vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(r.family, vec!["C4", "P4", "P3+K2", "3K2"]);

        let k3 = named("k3");
        let two_k3 = k3.disjoint_union(&k3).unwrap();
        assert!(family_check(&two_k3, Family::OmegaPsiQuartet).is_free());

        let r = family_check(&named("c5"), Family::OddHolesAndAntiholes);
        assert_eq!(r.witness.unwrap().pattern, "C5");

        let r = family_check(&named("c7").complement(), Family::OddHolesAndAntiholes);
        assert_eq!(r.witness.unwrap().pattern, "co-C7");
        assert!(family_check(&named("c6"), Family::OddHolesAndAntiholes).is_free());
        assert_eq!(
            family_check(&named("p3+k2"), Family::AchroTriple)
                .witness
                .unwrap()
                .pattern,
            "P3+K2"
        );
    }

    #[test]
    fn long_odd_holes_are_found() {
        let c11 = named("c11");
        let r = family_check(&c11, Family::OddHolesAndAntiholes);
        assert_eq!(r.witness.unwrap().pattern, "C11");
        assert_eq!(r.family.len(), 8);
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("quartet".parse::<Family>().is_err());
    }
}
