//! Exact minimum dominating sets for small graphs.

use crate::graph::Graph;

/// Closed-neighbourhood bitmasks; requires `n <= 64`.
fn closed_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "exact domination supports at most 64 vertices");
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect()
}

pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    first_undominated(g, set).is_none()
}

/// Smallest vertex neither in `set` nor adjacent to it.
pub fn first_undominated(g: &Graph, set: &[usize]) -> Option<usize> {
    (0..g.n()).find(|&v| !set.contains(&v) && !g.neighbors(v).iter().any(|w| set.contains(w)))
}

/// Lexicographically smallest minimum dominating set.
///
/// Candidate sets are enumerated by size, and within one size in
/// lexicographic order, so the first hit is the canonical answer.
pub fn min_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let masks = closed_masks(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // suffix unions bound what the remaining choices can still cover
    let mut suffix = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] | masks[v];
    }
    for k in 1..=n {
        let mut chosen = Vec::with_capacity(k);
        if search(&masks, &suffix, full, 0, 0, k, &mut chosen) {
            return chosen;
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn search(
    masks: &[u64],
    suffix: &[u64],
    full: u64,
    start: usize,
    covered: u64,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return true;
    }
    if chosen.len() == k || covered | suffix[start] != full {
        return false;
    }
    let n = masks.len();
    for v in start..=n - (k - chosen.len()) {
        chosen.push(v);
        if search(masks, suffix, full, v + 1, covered | masks[v], k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
