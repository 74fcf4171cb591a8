//! graph6 reading and writing (short form only, `n <= 62`).

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_ORDER: usize = 62;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Parses one graph6 record. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(line: &str) -> Result<SimpleGraph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty record"));
    };
    if !(63..=126).contains(&header) {
        return Err(err(0, format!("header byte {header} out of range")));
    }
    if header == 126 {
        return Err(err(0, "long-form graph6 (n > 62) is not supported"));
    }
    let n = (header - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() < need {
        return Err(err(bytes.len(), format!("expected {need} payload bytes, found {}", payload.len())));
    }
    if payload.len() > need {
        return Err(err(1 + need, "trailing bytes after payload"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(1 + k / 6, format!("payload byte {byte} out of range")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for (idx, &byte) in payload.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(1 + idx, format!("payload byte {byte} out of range")));
        }
    }
    if !bits.is_multiple_of(6) {
        let last = payload[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(need, "non-zero padding bits"));
        }
    }
    SimpleGraph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 record without a trailing newline.
///
/// Panics if `g` has more than [`MAX_ORDER`] vertices.
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 long form is not supported (n = {n})");
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}
