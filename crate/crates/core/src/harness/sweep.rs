//! Exhaustive property sweeps over all small graphs.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_graphs, EnumerationMode, CANONICAL_CAP};
use crate::error::{check_capacity, Error, Result};
use crate::forbidden::{contains_induced, family_check, Family, Pattern};
use crate::graph::{to_graph6, Graph, Named};
use crate::perfectness::{ab_perfect_verdicts, verify_equivalence};
use crate::solvers::{
    clique_number, has_coloring, profile, pseudoachromatic_number, ColoringMode, Invariant,
};

/// Violations kept per report.
pub const MAX_VIOLATIONS: usize = 100;

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `ω ≤ χ ≤ Γ ≤ α ≤ ψ`.
    InvariantChain,
    /// ωψ-perfect ⟺ χψ-perfect ⟺ quartet-free ⟺ recognizer accepts.
    OmegaPsiEquivalence,
    /// ωΓ-perfect ⟺ χΓ-perfect ⟺ P4-free.
    OmegaGammaCharacterization,
    /// ωα-perfect ⟺ χα-perfect ⟺ (P4, P3 ∪ K2, 3K2)-free.
    OmegaAlphaCharacterization,
    /// Connected (C4, P4)-free graphs have a universal vertex.
    UniversalVertex,
    /// ω = ψ for graphs with at most two non-trivial components, all complete.
    TwoCliques,
    /// Proper complete colorings exist for every k in `χ..=α`.
    ProperCompleteInterpolation,
    /// Grundy colorings exist for every k in `χ..=Γ`.
    GrundyInterpolation,
    /// ωψ ⟹ ωα ⟹ ωΓ ⟹ ωχ perfectness, plus the separating examples.
    PerfectnessInclusions,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::InvariantChain,
        Theorem::OmegaPsiEquivalence,
        Theorem::OmegaGammaCharacterization,
        Theorem::OmegaAlphaCharacterization,
        Theorem::UniversalVertex,
        Theorem::TwoCliques,
        Theorem::ProperCompleteInterpolation,
        Theorem::GrundyInterpolation,
        Theorem::PerfectnessInclusions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::InvariantChain => "eq1_chain",
            Theorem::OmegaPsiEquivalence => "theorem4",
            Theorem::OmegaGammaCharacterization => "theorem1_cs",
            Theorem::OmegaAlphaCharacterization => "theorem2_cs",
            Theorem::UniversalVertex => "lemma1",
            Theorem::TwoCliques => "lemma2",
            Theorem::ProperCompleteInterpolation => "interpolation_hhp",
            Theorem::GrundyInterpolation => "interpolation_grundy",
            Theorem::PerfectnessInclusions => "figure3_inclusions",
        }
    }

    /// Which graphs the property applies to.
    fn applies_to(self, g: &Graph) -> bool {
        match self {
            Theorem::UniversalVertex => {
                g.is_connected()
                    && contains_induced(g, &Pattern::c4()).is_none()
                    && contains_induced(g, &Pattern::p4()).is_none()
            }
            Theorem::TwoCliques => {
                let nontrivial: Vec<_> = g
                    .connected_components()
                    .into_iter()
                    .filter(|c| c.len() >= 2)
                    .collect();
                nontrivial.len() <= 2
                    && nontrivial
                        .iter()
                        .all(|&c| g.induced_unchecked(c).is_complete())
            }
            _ => true,
        }
    }

    /// `Some(detail)` when the property fails on `g`.
    fn check(self, g: &Graph) -> Result<Option<String>> {
        use Invariant::*;
        let fail = |cond: bool, detail: String| if cond { None } else { Some(detail) };
        Ok(match self {
            Theorem::InvariantChain => match profile(g) {
                Ok(_) => None,
                Err(Error::ChainViolation(p)) => Some(p),
                Err(e) => return Err(e),
            },
            Theorem::OmegaPsiEquivalence => {
                let r = verify_equivalence(g)?;
                fail(
                    r.all_equal,
                    format!(
                        "omega_psi={} chi_psi={} quartet_free={} structure={}",
                        r.omega_psi_perfect,
                        r.chi_psi_perfect,
                        r.quartet_free,
                        r.structure_accepted
                    ),
                )
            }
            Theorem::OmegaGammaCharacterization => {
                let v = ab_perfect_verdicts(g, &[(Omega, Gamma), (Chi, Gamma)])?;
                let free = family_check(g, Family::P4Only).is_free();
                fail(
                    v[0].perfect == v[1].perfect && v[1].perfect == free,
                    format!(
                        "omega_gamma={} chi_gamma={} p4_free={free}",
                        v[0].perfect, v[1].perfect
                    ),
                )
            }
            Theorem::OmegaAlphaCharacterization => {
                let v = ab_perfect_verdicts(g, &[(Omega, Alpha), (Chi, Alpha)])?;
                let free = family_check(g, Family::AchroTriple).is_free();
                fail(
                    v[0].perfect == v[1].perfect && v[1].perfect == free,
                    format!(
                        "omega_alpha={} chi_alpha={} triple_free={free}",
                        v[0].perfect, v[1].perfect
                    ),
                )
            }
            Theorem::UniversalVertex => fail(
                g.max_degree() == g.order() - 1,
                format!("max degree {} < {}", g.max_degree(), g.order() - 1),
            ),
            Theorem::TwoCliques => {
                let (omega, psi) = (clique_number(g), pseudoachromatic_number(g)?);
                fail(omega == psi, format!("omega={omega} psi={psi}"))
            }
            Theorem::ProperCompleteInterpolation => {
                let p = profile(g)?;
                let missing: Vec<usize> = (p.chi..=p.alpha)
                    .filter_map(|k| match has_coloring(g, k, ColoringMode::ProperComplete) {
                        Ok(true) => None,
                        Ok(false) => Some(Ok(k)),
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<_>>()?;
                fail(
                    missing.is_empty(),
                    format!(
                        "chi={} alpha={} no proper complete coloring with {missing:?}",
                        p.chi, p.alpha
                    ),
                )
            }
            Theorem::GrundyInterpolation => {
                let p = profile(g)?;
                let missing: Vec<usize> = (p.chi..=p.gamma)
                    .filter_map(|k| match has_coloring(g, k, ColoringMode::Grundy) {
                        Ok(true) => None,
                        Ok(false) => Some(Ok(k)),
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<_>>()?;
                fail(
                    missing.is_empty(),
                    format!(
                        "chi={} gamma={} no Grundy coloring with {missing:?}",
                        p.chi, p.gamma
                    ),
                )
            }
            Theorem::PerfectnessInclusions => {
                let chain = [(Omega, Psi), (Omega, Alpha), (Omega, Gamma), (Omega, Chi)];
                let v = ab_perfect_verdicts(g, &chain)?;
                let broken: Vec<String> = v
                    .windows(2)
                    .filter(|w| w[0].perfect && !w[1].perfect)
                    .map(|w| {
                        format!(
                            "{}{}-perfect but not {}{}-perfect",
                            w[0].pair.0, w[0].pair.1, w[1].pair.0, w[1].pair.1
                        )
                    })
                    .collect();
                fail(broken.is_empty(), broken.join("; "))
            }
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| Error::Unknown {
                kind: "theorem",
                name: s.to_string(),
            })
    }
}

/// A graph that separates two perfectness classes: perfect for `perfect`,
/// not perfect for `imperfect`.
pub struct Separation {
    pub graph: Named,
    pub perfect: (Invariant, Invariant),
    pub imperfect: (Invariant, Invariant),
}

/// The four separating examples P4, C4, C5, P3 ∪ K2.
pub fn separations() -> [Separation; 4] {
    use Invariant::*;
    [
        Separation {
            graph: Named::Path(4),
            perfect: (Omega, Chi),
            imperfect: (Omega, Gamma),
        },
        Separation {
            graph: Named::P3PlusK2,
            perfect: (Omega, Gamma),
            imperfect: (Omega, Alpha),
        },
        Separation {
            graph: Named::Cycle(4),
            perfect: (Omega, Alpha),
            imperfect: (Omega, Psi),
        },
        Separation {
            graph: Named::Cycle(5),
            perfect: (Gamma, Psi),
            imperfect: (Omega, Chi),
        },
    ]
}

fn check_separation(s: &Separation) -> Result<Option<String>> {
    let g = s.graph.build()?;
    let v = ab_perfect_verdicts(&g, &[s.perfect, s.imperfect])?;
    Ok(if v[0].perfect && !v[1].perfect {
        None
    } else {
        Some(format!(
            "{}: {}{}-perfect={} {}{}-perfect={}",
            s.graph,
            s.perfect.0,
            s.perfect.1,
            v[0].perfect,
            s.imperfect.0,
            s.imperfect.1,
            v[1].perfect
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: String,
    pub n_max: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `theorem` over every canonical graph on `1..=n_max` vertices.
pub fn sweep(theorem: Theorem, n_max: usize) -> Result<SweepReport> {
    sweep_with_jobs(theorem, n_max, 1)
}

/// As [`sweep`], evaluating graphs on `jobs` worker threads. Results are
/// reduced in enumeration order, so the report does not depend on `jobs`.
pub fn sweep_with_jobs(theorem: Theorem, n_max: usize, jobs: usize) -> Result<SweepReport> {
    check_capacity(theorem.name(), n_max, CANONICAL_CAP)?;
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut record = |g: &Graph, outcome: Option<String>| {
        checked += 1;
        if let Some(detail) = outcome {
            if violations.len() < MAX_VIOLATIONS {
                violations.push(Violation {
                    graph6: to_graph6(g),
                    detail,
                });
            }
        }
    };

    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Precondition(format!("worker pool: {e}")))?,
        )
    } else {
        None
    };

    for n in 1..=n_max {
        let mut graphs = enumerate_graphs(n, EnumerationMode::Canonical)?
            .filter(|g| theorem.applies_to(g))
            .peekable();
        match &pool {
            None => {
                for g in graphs {
                    let outcome = theorem.check(&g)?;
                    record(&g, outcome);
                }
            }
            Some(pool) => {
                while graphs.peek().is_some() {
                    let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
                    let outcomes: Vec<Result<Option<String>>> =
                        pool.install(|| chunk.par_iter().map(|g| theorem.check(g)).collect());
                    for (g, outcome) in chunk.iter().zip(outcomes) {
                        record(g, outcome?);
                    }
                }
            }
        }
    }

    if theorem == Theorem::PerfectnessInclusions {
        for s in separations() {
            let g = s.graph.build()?;
            let outcome = check_separation(&s)?;
            record(&g, outcome);
        }
    }

    Ok(SweepReport {
        theorem: theorem.name().to_string(),
        n_max,
        checked,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRow {
    pub n: usize,
    pub alpha: usize,
    pub psi: usize,
    /// `n` is not of the form `2x² + x + 1` for an integer `x >= 1`.
    pub predicted_equal: bool,
    pub matches: bool,
}

pub const CYCLE_CAP: usize = 12;

/// `n = 2x² + x + 1` for some integer `x >= 1`.
pub fn is_exceptional_cycle_length(n: usize) -> bool {
    (1..)
        .map(|x| 2 * x * x + x + 1)
        .take_while(|&v| v <= n)
        .any(|v| v == n)
}

/// α and ψ of `C_n` for `n = 3..=n_max`, against the predicted equality pattern.
pub fn cycle_alpha_psi(n_max: usize) -> Result<Vec<CycleRow>> {
    if !(3..=CYCLE_CAP).contains(&n_max) {
        return Err(Error::Precondition(format!(
            "cycle table needs 3 <= n_max <= {CYCLE_CAP}, got {n_max}"
        )));
    }
    (3..=n_max)
        .map(|n| {
            let c = Named::Cycle(n).build()?;
            let alpha = Invariant::Alpha.compute(&c)?;
            let psi = Invariant::Psi.compute(&c)?;
            let predicted_equal = !is_exceptional_cycle_length(n);
            Ok(CycleRow {
                n,
                alpha,
                psi,
                predicted_equal,
                matches: (alpha == psi) == predicted_equal,
            })
        })
        .collect()
}
