//! graph6 text encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte
//! offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let data: Vec<u32> = bytes.iter().map(|&b| (b - 63) as u32).collect();

    let (n, header_len) = match data.as_slice() {
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated 8-byte size header"));
            }
            (
                rest[..6]
                    .iter()
                    .fold(0usize, |acc, &d| acc << 6 | d as usize),
                8,
            )
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated 4-byte size header"));
            }
            (
                rest[..3]
                    .iter()
                    .fold(0usize, |acc, &d| acc << 6 | d as usize),
                4,
            )
        }
        [n, ..] => (*n as usize, 1),
        [] => unreachable!(),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph",
            n,
            cap: MAX_VERTICES,
        });
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() < expected {
        return Err(err(format!(
            "truncated bit field: {} data bytes for {n} vertices, expected {expected}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(err(format!(
            "{} trailing bytes after the bit field",
            body.len() - expected
        )));
    }

    let mut rows = [0u32; MAX_VERTICES];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err("nonzero padding bits"));
    }
    Ok(Graph::from_rows(n, &rows))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    // n <= 32 always fits the single-byte header
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push((acc + 63) as char);
    }
    out
}
