//! Vertex colorings and the proper / complete / Grundy validators.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A surjective assignment of colors `1..=k` to vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Rejects color 0 and any assignment that skips a color in `1..=max`.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        if colors.is_empty() {
            return Err(Error::InvalidColoring("no vertices".into()));
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        let k = *colors.iter().max().unwrap();
        let mut used = vec![false; k + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!(
                "color {missing} of 1..={k} is unused"
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Builds from an ordered list of color classes: class `i` gets color `i + 1`.
    pub(crate) fn from_classes(n: usize, classes: &[VertexSet]) -> Coloring {
        let mut colors = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                colors[v] = i + 1;
            }
        }
        debug_assert!(colors.iter().all(|&c| c > 0));
        Coloring {
            colors,
            k: classes.len(),
        }
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertex set of each color, index `c - 1` for color `c`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }

    /// Renumbers colors so classes appear in order of their smallest vertex.
    pub fn normalized(&self) -> Coloring {
        let mut relabel = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if relabel[c] == 0 {
                    next += 1;
                    relabel[c] = next;
                }
                relabel[c]
            })
            .collect();
        Coloring { colors, k: self.k }
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coloring> {
        let colors = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidColoring(format!("`{t}` is not a color")))
            })
            .collect::<Result<Vec<_>>>()?;
        Coloring::new(colors)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_size(g: &Graph, c: &Coloring) -> Result<()> {
    if g.order() != c.len() {
        return Err(Error::SizeMismatch {
            coloring: c.len(),
            graph: g.order(),
        });
    }
    Ok(())
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_size(g, c)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Every pair of distinct colors appears on the ends of some edge.
pub fn is_complete_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    check_size(g, c)?;
    let k = c.num_colors();
    let mut seen = vec![vec![false; k + 1]; k + 1];
    for (u, v) in g.edges() {
        let (a, b) = (c.color(u), c.color(v));
        seen[a][b] = true;
        seen[b][a] = true;
    }
    Ok((1..=k).all(|i| (i + 1..=k).all(|j| seen[i][j])))
}

/// Proper, and every vertex colored `j` has a neighbor of each color `i < j`.
pub fn is_grundy(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    Ok((0..g.order()).all(|v| {
        let mut below = vec![false; c.color(v)];
        for u in g.neighbors(v) {
            if c.color(u) < c.color(v) {
                below[c.color(u)] = true;
            }
        }
        (1..c.color(v)).all(|i| below[i])
    }))
}
