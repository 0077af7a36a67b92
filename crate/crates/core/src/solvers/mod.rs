//! Exact solvers for the five coloring invariants
//! `ω ≤ χ ≤ Γ ≤ α ≤ ψ`.
//!
//! Every solver enforces a vertex cap and reports [`Error::Capacity`] above
//! it rather than falling back to an approximation.

mod chromatic;
mod clique;
mod grundy;
mod partition;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{check_capacity, Error, Result};
use crate::graph::Graph;

pub use chromatic::{chromatic_number, chromatic_witness, CHROMATIC_CAP};
pub use clique::{clique_number, maximum_clique};
pub use grundy::{grundy_lengths, grundy_number, grundy_witness, GRUNDY_CAP};
pub use partition::{
    achromatic_number, achromatic_witness, pseudoachromatic_number, pseudoachromatic_witness,
    ACHROMATIC_CAP, PSEUDOACHROMATIC_CAP,
};

/// Largest graph [`profile`] accepts; bounded by the partition solvers.
pub const PROFILE_CAP: usize = PSEUDOACHROMATIC_CAP;

/// One of the five invariants, ordered as in the chain `ω ≤ χ ≤ Γ ≤ α ≤ ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Omega,
    Chi,
    Gamma,
    Alpha,
    Psi,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::Omega,
        Invariant::Chi,
        Invariant::Gamma,
        Invariant::Alpha,
        Invariant::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Omega => "omega",
            Invariant::Chi => "chi",
            Invariant::Gamma => "gamma",
            Invariant::Alpha => "alpha",
            Invariant::Psi => "psi",
        }
    }

    pub fn cap(self) -> usize {
        match self {
            Invariant::Omega => crate::graph::MAX_VERTICES,
            Invariant::Chi => CHROMATIC_CAP,
            Invariant::Gamma => GRUNDY_CAP,
            Invariant::Alpha => ACHROMATIC_CAP,
            Invariant::Psi => PSEUDOACHROMATIC_CAP,
        }
    }

    pub fn compute(self, g: &Graph) -> Result<usize> {
        match self {
            Invariant::Omega => Ok(clique_number(g)),
            Invariant::Chi => chromatic_number(g),
            Invariant::Gamma => grundy_number(g),
            Invariant::Alpha => achromatic_number(g),
            Invariant::Psi => pseudoachromatic_number(g),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Invariant> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Unknown {
                kind: "invariant",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParameterProfile {
    pub omega: usize,
    pub chi: usize,
    pub gamma: usize,
    pub alpha: usize,
    pub psi: usize,
}

impl ParameterProfile {
    pub fn get(&self, which: Invariant) -> usize {
        match which {
            Invariant::Omega => self.omega,
            Invariant::Chi => self.chi,
            Invariant::Gamma => self.gamma,
            Invariant::Alpha => self.alpha,
            Invariant::Psi => self.psi,
        }
    }

    pub fn as_array(&self) -> [usize; 5] {
        [self.omega, self.chi, self.gamma, self.alpha, self.psi]
    }

    pub fn chain_holds(&self) -> bool {
        self.as_array().windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for ParameterProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "omega={} chi={} gamma={} alpha={} psi={}",
            self.omega, self.chi, self.gamma, self.alpha, self.psi
        )
    }
}

/// All five invariants. Fails if the computed values break the chain.
pub fn profile(g: &Graph) -> Result<ParameterProfile> {
    check_capacity("profile", g.order(), PROFILE_CAP)?;
    let p = ParameterProfile {
        omega: clique_number(g),
        chi: chromatic_number(g)?,
        gamma: grundy_number(g)?,
        alpha: achromatic_number(g)?,
        psi: pseudoachromatic_number(g)?,
    };
    if !p.chain_holds() {
        return Err(Error::ChainViolation(p.to_string()));
    }
    Ok(p)
}

/// Which kind of coloring [`has_coloring`] looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringMode {
    Complete,
    ProperComplete,
    Grundy,
}

impl FromStr for ColoringMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<ColoringMode> {
        match s.trim() {
            "complete" => Ok(ColoringMode::Complete),
            "proper_complete" => Ok(ColoringMode::ProperComplete),
            "grundy" => Ok(ColoringMode::Grundy),
            other => Err(Error::Unknown {
                kind: "coloring mode",
                name: other.to_string(),
            }),
        }
    }
}

/// A coloring of the given mode with exactly `k` colors, if one exists.
///
/// Complete and proper-complete witnesses are normalized (classes ordered by
/// smallest vertex); Grundy witnesses keep their Grundy color order.
pub fn find_coloring(g: &Graph, k: usize, mode: ColoringMode) -> Result<Option<Coloring>> {
    if k == 0 || k > g.order() {
        return Err(Error::Precondition(format!(
            "color count {k} outside 1..={}",
            g.order()
        )));
    }
    match mode {
        ColoringMode::Complete => {
            check_capacity("pseudoachromatic search", g.order(), PSEUDOACHROMATIC_CAP)?;
            Ok(partition::complete_partition(g, k, false))
        }
        ColoringMode::ProperComplete => {
            check_capacity("achromatic search", g.order(), ACHROMATIC_CAP)?;
            Ok(partition::complete_partition(g, k, true))
        }
        ColoringMode::Grundy => grundy::grundy_coloring_with(g, k),
    }
}

/// Does a coloring of the given mode with exactly `k` colors exist?
pub fn has_coloring(g: &Graph, k: usize, mode: ColoringMode) -> Result<bool> {
    Ok(find_coloring(g, k, mode)?.is_some())
}
