use super::{GraphFamily, Pick, RainbowMatching};

/// Exact rainbow-matching search.
///
/// Members are tried in ascending edge-count order (ties by index) and each
/// member's edges lexicographically. A branch is cut as soon as some member
/// still waiting has no edge avoiding the vertices already used.
pub fn find_rainbow(f: &GraphFamily) -> Option<RainbowMatching> {
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by_key(|&i| (f.members()[i].edge_count(), i));
    let edges: Vec<Vec<(usize, usize)>> =
        order.iter().map(|&i| f.members()[i].edges().map(|(u, v)| (u - 1, v - 1)).collect()).collect();
    if edges.iter().any(Vec::is_empty) {
        return None;
    }
    let mut used = vec![false; f.n()];
    let mut chosen = Vec::with_capacity(f.len());
    if extend(&edges, 0, &mut used, &mut chosen) {
        let picks = chosen.iter().enumerate().map(|(slot, &(u, v))| Pick { index: order[slot] + 1, edge: (u + 1, v + 1) }).collect();
        Some(RainbowMatching::new(picks))
    } else {
        None
    }
}

fn extend(edges: &[Vec<(usize, usize)>], depth: usize, used: &mut [bool], chosen: &mut Vec<(usize, usize)>) -> bool {
    if depth == edges.len() {
        return true;
    }
    if edges[depth..].iter().any(|list| !list.iter().any(|&(u, v)| !used[u] && !used[v])) {
        return false;
    }
    for &(u, v) in &edges[depth] {
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        if extend(edges, depth + 1, used, chosen) {
            return true;
        }
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    false
}
