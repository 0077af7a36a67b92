use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// One parsed input line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ingested {
    /// 1-based line number in the source.
    pub line: usize,
    pub graph: Graph,
}

/// Parses graph6 lines lazily, in input order. Blank lines and bare
/// `>>graph6<<` header lines are skipped; parse failures carry the line number.
pub fn ingest<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Ingested>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        let wrap = |e: Error| Error::Line {
            line: line_no,
            source: Box::new(e),
        };
        let text = match line {
            Ok(text) => text,
            Err(e) => return Some(Err(wrap(e.into()))),
        };
        let body = text.trim();
        if body.is_empty() || body == ">>graph6<<" {
            return None;
        }
        Some(
            parse_graph6(body)
                .map(|graph| Ingested {
                    line: line_no,
                    graph,
                })
                .map_err(wrap),
        )
    })
}

/// Eager form of [`ingest`]; stops at the first bad line.
pub fn ingest_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    ingest(reader).map(|r| r.map(|i| i.graph)).collect()
}
