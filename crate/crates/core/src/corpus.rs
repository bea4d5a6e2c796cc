//! Exhaustive corpora of pairwise non-isomorphic small graphs, produced by
//! brute-force canonicalization: a labeled graph is kept iff its edge
//! bitcode is minimal over all vertex relabelings. Practical to seven
//! vertices; the verifier sweeps these corpora.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Edge bitcode of a labeled graph: bit `t` is edge `t` in the fixed
/// enumeration of pairs `(1,2), (1,3), (2,3), (1,4), ...` (column order).
fn edge_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    let mut t = 0;
    for v in 2..=g.n() {
        for u in 1..v {
            if g.has_edge(u, v) {
                code |= 1 << t;
            }
            t += 1;
        }
    }
    code
}

fn code_to_graph(n: usize, code: u64) -> Graph {
    let mut pairs = Vec::new();
    let mut t = 0;
    for v in 2..=n {
        for u in 1..v {
            if (code >> t) & 1 == 1 {
                pairs.push((u, v));
            }
            t += 1;
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// Applies a vertex permutation to a bitcode (`perm[i-1]` = new id of `i`).
fn permute_code(n: usize, code: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut t = 0;
    for v in 2..=n {
        for u in 1..v {
            if (code >> t) & 1 == 1 {
                let (a, b) = (perm[u - 1].min(perm[v - 1]), perm[u - 1].max(perm[v - 1]));
                // position of pair (a, b) in column order
                let pos = (b - 1) * (b - 2) / 2 + (a - 1);
                out |= 1 << pos;
            }
            t += 1;
        }
    }
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, n, &mut out);
    out
}

/// Minimal bitcode over all vertex relabelings.
pub fn canonical_code(g: &Graph) -> u64 {
    let code = edge_code(g);
    let mut best = code;
    for perm in all_permutations(g.n()) {
        let c = permute_code(g.n(), code, &perm);
        if c < best {
            best = c;
        }
    }
    best
}

/// Canonically relabeled copy of the graph.
pub fn canonical_form(g: &Graph) -> Graph {
    code_to_graph(g.n(), canonical_code(g))
}

/// Isomorphism by brute-force permutation search, independent of the
/// canonical-code route; used to cross-validate it.
pub fn isomorphic_by_search(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let code_b = edge_code(b);
    all_permutations(a.n())
        .into_iter()
        .any(|perm| permute_code(a.n(), edge_code(a), &perm) == code_b)
}

/// All pairwise non-isomorphic graphs on exactly `n` vertices, optionally
/// connected only, in increasing bitcode order. A labeled graph is listed
/// iff it equals its own canonical form, so each isomorphism class appears
/// exactly once.
pub fn enumerate_corpus(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > 7 {
        return Err(Error::CorpusTooLarge(n));
    }
    let bits = n * (n - 1) / 2;
    let perms = all_permutations(n);
    // transpositions give a cheap necessary condition for minimality
    let transpositions: Vec<&Vec<usize>> = perms
        .iter()
        .filter(|p| p.iter().enumerate().filter(|(i, &v)| v != i + 1).count() == 2)
        .collect();
    let mut out = Vec::new();
    'codes: for code in 0u64..(1 << bits) {
        for perm in &transpositions {
            if permute_code(n, code, perm) < code {
                continue 'codes;
            }
        }
        for perm in &perms {
            if permute_code(n, code, perm) < code {
                continue 'codes;
            }
        }
        let g = code_to_graph(n, code);
        if connected_only && !g.is_connected() {
            continue;
        }
        out.push(g);
    }
    Ok(out)
}

/// Union of the corpora for 1..=max_n vertices.
pub fn enumerate_corpus_up_to(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_corpus(n, connected_only)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts_match_known_values() {
        // connected graphs per vertex count: 1, 1, 2, 6, 21
        let connected: Vec<usize> = (1..=5)
            .map(|n| enumerate_corpus(n, true).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
        // all graphs per vertex count: 1, 2, 4, 11, 34
        let all: Vec<usize> = (1..=5)
            .map(|n| enumerate_corpus(n, false).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn corpus_count_six_vertices() {
        assert_eq!(enumerate_corpus(6, true).unwrap().len(), 112);
    }

    #[test]
    fn three_vertex_connected_corpus_is_path_and_triangle() {
        let graphs = enumerate_corpus(3, true).unwrap();
        assert_eq!(graphs.len(), 2);
        assert!(graphs.iter().any(|g| isomorphic_by_search(g, &Graph::path(3))));
        assert!(graphs.iter().any(|g| isomorphic_by_search(g, &Graph::complete(3))));
    }

    #[test]
    fn single_vertex_corpus() {
        let graphs = enumerate_corpus(1, true).unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].n(), 1);
    }

    #[test]
    fn max_n_enforced() {
        assert!(matches!(enumerate_corpus(8, true), Err(Error::CorpusTooLarge(8))));
        assert!(matches!(enumerate_corpus(0, true), Err(Error::CorpusTooLarge(0))));
    }

    #[test]
    fn canonical_code_is_isomorphism_invariant() {
        let a = Graph::path(4);
        let b = Graph::new(4, [(2, 4), (4, 1), (1, 3)]).unwrap(); // relabeled path
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert!(isomorphic_by_search(&a, &b));

        let c = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap(); // star
        assert_ne!(canonical_code(&a), canonical_code(&c));
        assert!(!isomorphic_by_search(&a, &c));
    }

    #[test]
    fn canonical_code_agrees_with_search_on_pairs() {
        // deterministic pseudo-random pairs from the 4-vertex universe
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let a = code_to_graph(4, rnd() & 0b111111);
            let b = code_to_graph(4, rnd() & 0b111111);
            assert_eq!(
                canonical_code(&a) == canonical_code(&b),
                isomorphic_by_search(&a, &b),
                "{} vs {}",
                a.describe(),
                b.describe()
            );
        }
    }
}
