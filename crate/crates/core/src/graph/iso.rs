//! Brute-force isomorphism for tiny graphs.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_N: usize = 8;

/// Whether `a` and `b` are isomorphic, by backtracking over vertex maps with
/// adjacency pruning. Limited to `n <= 8`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let n = a.n();
    if n > MAX_N {
        return Err(Error::IsomorphismTooLarge { n, limit: MAX_N });
    }
    if b.n() != n || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (da, db) = (a.degrees(), b.degrees());
    let (mut sa, mut sb) = (da.clone(), db.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &da, &db, 0, &mut map, &mut used))
}

fn extend(a: &Graph, b: &Graph, da: &[usize], db: &[usize], u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if u == a.n() {
        return true;
    }
    for t in 0..b.n() {
        if used[t] || da[u] != db[t] {
            continue;
        }
        if (0..u).any(|w| a.adj0(u, w) != b.adj0(t, map[w])) {
            continue;
        }
        map[u] = t;
        used[t] = true;
        if extend(a, b, da, db, u + 1, map, used) {
            return true;
        }
        used[t] = false;
    }
    false
}
