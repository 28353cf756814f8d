//! Plain-text edge lists: a first line `n <n>`, then one `u v` pair per line,
//! 1-based. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line, reason: &str| Error::EdgeList { line, reason: reason.to_string() };

    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing `n <n>` header"))?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| bad(line, "vertex count is not an integer"))?,
        _ => return Err(bad(line, "expected `n <n>`")),
    };
    let mut g = Graph::empty(n).map_err(|e| bad(line, &e.to_string()))?;
    for (line, text) in lines {
        let nums: Vec<_> = text.split_whitespace().map(str::parse::<usize>).collect();
        match nums.as_slice() {
            [Ok(u), Ok(v)] => g.add_edge(*u, *v).map_err(|e| bad(line, &e.to_string()))?,
            _ => return Err(bad(line, "expected two vertex labels")),
        }
    }
    Ok(g)
}

pub fn format(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
