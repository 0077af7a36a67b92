use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Graph families that can be built by name.
///
/// Text forms (case-insensitive): `kN`, `pN`, `cN`, `eN` (edgeless),
/// `kA,B` (complete bipartite), `p3+k2`, `3k2`, `fig2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    /// `P3 ∪ K2`.
    P3PlusK2,
    /// Three disjoint edges.
    ThreeK2,
    /// `K4,4` and `C7` sharing one edge: 13 vertices with
    /// ω, χ, Γ, α, ψ = 2, 3, 4, 5, 6.
    Fig2,
}

fn out_of_range(what: &str, detail: String) -> Error {
    Error::Precondition(format!("{what}: {detail}"))
}

impl Named {
    pub fn build(self) -> Result<Graph> {
        match self {
            Named::Path(n) => {
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(n, &edges)
            }
            Named::Cycle(n) => {
                if n < 3 {
                    return Err(out_of_range("cycle", format!("needs n >= 3, got {n}")));
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Named::Complete(n) => Graph::complete(n),
            Named::Empty(n) => Graph::empty(n),
            Named::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(out_of_range(
                        "complete bipartite",
                        format!("both parts must be nonempty, got {a},{b}"),
                    ));
                }
                Graph::empty(a)?.join(&Graph::empty(b)?)
            }
            Named::P3PlusK2 => Named::Path(3).build()?.disjoint_union(&Graph::complete(2)?),
            Named::ThreeK2 => {
                let k2 = Graph::complete(2)?;
                k2.disjoint_union(&k2)?.disjoint_union(&k2)
            }
            Named::Fig2 => {
                // u0..u3 = 0..3 and u4..u7 = 4..7 form the K4,4; the C7 runs
                // c0 = u0, c1 = u4, c2..c6 = 8..12.
                let mut edges = Vec::with_capacity(22);
                for u in 0..4 {
                    for w in 4..8 {
                        edges.push((u, w));
                    }
                }
                let cycle = [0, 4, 8, 9, 10, 11, 12];
                for i in 1..cycle.len() {
                    edges.push((cycle[i], (cycle[(i + 1) % cycle.len()])));
                }
                Graph::from_edges(13, &edges)
            }
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Named> {
        let lower = s.trim().to_ascii_lowercase();
        let unknown = || Error::Unknown {
            kind: "named graph",
            name: s.to_string(),
        };
        let number = |t: &str| -> Result<usize> {
            let n: usize = t.parse().map_err(|_| unknown())?;
            if n > MAX_VERTICES {
                return Err(Error::Capacity {
                    what: "graph",
                    n,
                    cap: MAX_VERTICES,
                });
            }
            Ok(n)
        };
        match lower.as_str() {
            "fig2" => return Ok(Named::Fig2),
            "p3+k2" => return Ok(Named::P3PlusK2),
            "3k2" => return Ok(Named::ThreeK2),
            _ => {}
        }
        let (head, tail) = lower.split_at(lower.chars().next().map_or(0, char::len_utf8));
        match head {
            "k" => match tail.split_once(',') {
                Some((a, b)) => Ok(Named::CompleteBipartite(number(a)?, number(b)?)),
                None => Ok(Named::Complete(number(tail)?)),
            },
            "p" => Ok(Named::Path(number(tail)?)),
            "c" => Ok(Named::Cycle(number(tail)?)),
            "e" => Ok(Named::Empty(number(tail)?)),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Path(n) => write!(f, "p{n}"),
            Named::Cycle(n) => write!(f, "c{n}"),
            Named::Complete(n) => write!(f, "k{n}"),
            Named::Empty(n) => write!(f, "e{n}"),
            Named::CompleteBipartite(a, b) => write!(f, "k{a},{b}"),
            Named::P3PlusK2 => f.write_str("p3+k2"),
            Named::ThreeK2 => f.write_str("3k2"),
            Named::Fig2 => f.write_str("fig2"),
        }
    }
}
