use serde::Serialize;

/// Result of looking for a system of distinct representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HallOutcome {
    /// `representatives[i]` belongs to set `i` and all are distinct.
    Transversal(Vec<usize>),
    /// 0-based set indices whose union is smaller than their count.
    Deficiency(Vec<usize>),
}

/// Kuhn's augmenting-path matching between sets and vertices.
///
/// Sets are processed in order and candidate vertices in ascending order, so
/// the transversal is deterministic. When set `i` cannot be matched, the sets
/// reached by the failed alternating search (`i` plus the owners of every
/// visited vertex) are returned; their neighbourhood is exactly the visited
/// vertices, one fewer than the sets.
pub fn hall_bipartite_matching(sets: &[Vec<usize>]) -> HallOutcome {
    let mut sorted: Vec<Vec<usize>> = sets.to_vec();
    for s in &mut sorted {
        s.sort_unstable();
        s.dedup();
    }
    let top = sorted.iter().flatten().copied().max().unwrap_or(0);
    let mut owner: Vec<Option<usize>> = vec![None; top + 1];
    for i in 0..sorted.len() {
        let mut visited = vec![false; top + 1];
        if !augment(&sorted, i, &mut owner, &mut visited) {
            let mut witness: Vec<usize> = std::iter::once(i)
                .chain((0..=top).filter(|&v| visited[v]).filter_map(|v| owner[v]))
                .collect();
            witness.sort_unstable();
            witness.dedup();
            return HallOutcome::Deficiency(witness);
        }
    }
    let mut reps = vec![0; sorted.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            reps[i] = v;
        }
    }
    HallOutcome::Transversal(reps)
}

fn augment(sets: &[Vec<usize>], i: usize, owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &v in &sets[i] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if owner[v].is_none_or(|j| augment(sets, j, owner, visited)) {
            owner[v] = Some(i);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_transversal(sets: &[Vec<usize>], reps: &[usize]) {
        assert_eq!(sets.len(), reps.len());
        for (s, r) in sets.iter().zip(reps) {
            assert!(s.contains(r));
        }
        let mut d = reps.to_vec();
        d.sort_unstable();
        d.dedup();
        assert_eq!(d.len(), reps.len());
    }

    fn check_deficiency(sets: &[Vec<usize>], witness: &[usize]) {
        let mut union: Vec<usize> = witness.iter().flat_map(|&i| sets[i].iter().copied()).collect();
        union.sort_unstable();
        union.dedup();
        assert!(union.len() < witness.len());
    }

    #[test]
    fn examples() {
        let sets = vec![vec![1, 2], vec![1, 2], vec![1, 3]];
        match hall_bipartite_matching(&sets) {
            HallOutcome::Transversal(r) => {
                check_transversal(&sets, &r);
                assert_eq!(r, vec![2, 1, 3]);
            }
            other => panic!("{other:?}"),
        }
        let sets = vec![vec![1], vec![1]];
        assert_eq!(hall_bipartite_matching(&sets), HallOutcome::Deficiency(vec![0, 1]));
        assert_eq!(hall_bipartite_matching(&[vec![5]]), HallOutcome::Transversal(vec![5]));
        assert_eq!(hall_bipartite_matching(&[]), HallOutcome::Transversal(vec![]));
    }

    #[test]
    fn deficiency_witness_is_hall_violation() {
        let sets = vec![vec![1, 2], vec![3], vec![1, 2], vec![2, 1], vec![4, 5]];
        match hall_bipartite_matching(&sets) {
            HallOutcome::Deficiency(w) => {
                check_deficiency(&sets, &w);
                assert_eq!(w, vec![0, 2, 3]);
            }
            other => panic!("{other:?}"),
        }
        let sets = vec![vec![], vec![1]];
        assert_eq!(hall_bipartite_matching(&sets), HallOutcome::Deficiency(vec![0]));
    }

    #[test]
    fn exhaustive_small_systems() {
        // All systems of three subsets of {1,2,3}.
        for code in 0..512u32 {
            let sets: Vec<Vec<usize>> =
                (0..3).map(|k| (1..=3).filter(|v| code >> (3 * k + v - 1) & 1 == 1).collect()).collect();
            let hall_ok = (1..8u32).all(|s| {
                let chosen: Vec<usize> = (0..3).filter(|k| s >> k & 1 == 1).collect();
                let mut u: Vec<usize> = chosen.iter().flat_map(|&k| sets[k].clone()).collect();
                u.sort_unstable();
                u.dedup();
                u.len() >= chosen.len()
            });
            match hall_bipartite_matching(&sets) {
                HallOutcome::Transversal(r) => {
                    assert!(hall_ok);
                    check_transversal(&sets, &r);
                }
                HallOutcome::Deficiency(w) => {
                    assert!(!hall_ok);
                    check_deficiency(&sets, &w);
                }
            }
        }
    }
}
