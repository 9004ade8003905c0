//! Modular-multiplication test graphs.

use bitpath_core::Graph;

/// Vertices `0..n`; vertex `i` points to `(i + 1) mod n` and to
/// `(j * i) mod n` for `j = 2..=k`. Self-loops and repeated targets are
/// dropped.
///
/// Panics unless `n >= 2` and `k >= 1`.
pub fn generate_modmul(n: usize, k: usize) -> Graph {
    assert!(n >= 2 && k >= 1, "generate_modmul needs n >= 2 and k >= 1");
    let modulus = n as u128;
    let mut edges = Vec::with_capacity(n * k);
    let mut targets = Vec::with_capacity(k);
    for i in 0..n {
        targets.clear();
        targets.push((i + 1) % n);
        targets.extend((2..=k).map(|j| ((j as u128 * i as u128) % modulus) as usize));
        targets.sort_unstable();
        targets.dedup();
        edges.extend(targets.iter().filter(|&&t| t != i).map(|&t| (i, t)));
    }
    Graph::from_edges(n, edges).expect("targets are in range and deduplicated")
}
