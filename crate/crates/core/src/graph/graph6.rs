//! graph6 encoding for graphs on at most 62 vertices.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! column by column (`x(1,2), x(1,3), x(2,3), x(1,4), ...`), packed big-endian
//! into 6-bit groups, each group offset by 63. The `>>graph6<<` header is
//! accepted on decode and never written.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_N: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph6 short form covers n <= 62");
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.adj0(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first}")));
    }
    if first == 126 {
        return Err(Error::Graph6("only n <= 62 is supported".into()));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("invalid data byte {b}")));
    }
    let mut g = Graph::empty(n).map_err(|_| Error::Graph6("n = 0 is not a graph".into()))?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set0(u, v, true);
            }
            k += 1;
        }
    }
    Ok(g)
}
