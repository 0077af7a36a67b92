//! ab-perfectness by definition, the structural recognizer for ωψ-perfect
//! graphs, and the four-way equivalence record that ties them together.

mod structure;

use serde::Serialize;

use crate::error::{check_capacity, Error, Result};
use crate::forbidden::{family_check, Family};
use crate::graph::{subsets_by_size, Graph, VertexSet};
use crate::solvers::Invariant;

pub use structure::{decompose_trivially_perfect, recognize_structure, StructureTree};

/// Largest graph [`is_ab_perfect`] will scan (every induced subgraph is solved).
pub const PERFECTNESS_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub vertices: VertexSet,
    pub a_value: usize,
    pub b_value: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectnessVerdict {
    pub pair: (Invariant, Invariant),
    pub perfect: bool,
    pub counterexample: Option<Counterexample>,
}

/// Invariant values of induced subgraphs, keyed by vertex subset.
struct SubsetValues<'g> {
    g: &'g Graph,
    values: Vec<[Option<usize>; 5]>,
}

impl<'g> SubsetValues<'g> {
    fn new(g: &'g Graph) -> Result<Self> {
        check_capacity("ab-perfectness check", g.order(), PERFECTNESS_CAP)?;
        Ok(SubsetValues {
            g,
            values: vec![[None; 5]; 1 << g.order()],
        })
    }

    fn get(&mut self, s: VertexSet, which: Invariant) -> Result<usize> {
        let slot = &mut self.values[s.bits() as usize][which as usize];
        if let Some(v) = *slot {
            return Ok(v);
        }
        let v = which.compute(&self.g.induced_unchecked(s))?;
        *slot = Some(v);
        Ok(v)
    }

    fn verdict(&mut self, a: Invariant, b: Invariant) -> Result<PerfectnessVerdict> {
        if a > b {
            return Err(Error::Precondition(format!(
                "{a} comes after {b} in the chain omega <= chi <= gamma <= alpha <= psi"
            )));
        }
        for s in subsets_by_size(self.g.order()) {
            let a_value = self.get(s, a)?;
            let b_value = self.get(s, b)?;
            if a_value != b_value {
                return Ok(PerfectnessVerdict {
                    pair: (a, b),
                    perfect: false,
                    counterexample: Some(Counterexample {
                        vertices: s,
                        a_value,
                        b_value,
                    }),
                });
            }
        }
        Ok(PerfectnessVerdict {
            pair: (a, b),
            perfect: true,
            counterexample: None,
        })
    }
}

/// Checks `a(H) = b(H)` on every induced subgraph `H`, smallest subsets
/// first. The first failing subset is reported; by heredity it is minimal.
pub fn is_ab_perfect(g: &Graph, a: Invariant, b: Invariant) -> Result<PerfectnessVerdict> {
    SubsetValues::new(g)?.verdict(a, b)
}

/// Verdicts for several pairs, sharing invariant values across the scans.
pub fn ab_perfect_verdicts(
    g: &Graph,
    pairs: &[(Invariant, Invariant)],
) -> Result<Vec<PerfectnessVerdict>> {
    let mut values = SubsetValues::new(g)?;
    pairs.iter().map(|&(a, b)| values.verdict(a, b)).collect()
}

/// The four characterizations of ωψ-perfect graphs, each computed on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceRecord {
    pub omega_psi_perfect: bool,
    pub chi_psi_perfect: bool,
    pub quartet_free: bool,
    pub structure_accepted: bool,
    pub all_equal: bool,
}

pub fn verify_equivalence(g: &Graph) -> Result<EquivalenceRecord> {
    let verdicts = ab_perfect_verdicts(
        g,
        &[
            (Invariant::Omega, Invariant::Psi),
            (Invariant::Chi, Invariant::Psi),
        ],
    )?;
    let flags = [
        verdicts[0].perfect,
        verdicts[1].perfect,
        family_check(g, Family::OmegaPsiQuartet).is_free(),
        recognize_structure(g).is_accepted(),
    ];
    Ok(EquivalenceRecord {
        omega_psi_perfect: flags[0],
        chi_psi_perfect: flags[1],
        quartet_free: flags[2],
        structure_accepted: flags[3],
        all_equal: flags.iter().all(|&f| f == flags[0]),
    })
}
