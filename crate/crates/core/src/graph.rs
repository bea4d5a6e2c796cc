//! Finite simple graphs with 1-based dense vertex ids, plus the enumeration
//! primitives the rest of the crate is built on: stable (independent) sets,
//! connectivity of induced subgraphs, and connected-support multiplicity
//! vectors.
//!
//! Input formats:
//! * edge list: UTF-8 text, `#` comment lines, an optional leading
//!   `vertices <n>` directive, then one `<u> <v>` pair per line;
//! * JSON: `{"n": 3, "edges": [[1,2],[2,3]]}`.

use std::collections::BTreeSet;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::root::{RootVector, WeightVector};

/// Set of 1-based vertex ids.
pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    /// `adj[v]` has bit `u` set iff `{u,v}` is an edge (bits are 1-based).
    adj: Vec<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl Graph {
    /// Builds a graph from a vertex count and unordered edge pairs.
    /// Rejects self-loops and out-of-range ids; duplicate pairs collapse.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Graph> {
        if n == 0 || n > 63 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex count {n} out of supported range 1..=63"),
            });
        }
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("self-loop at vertex {a}"),
                });
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![0u64; n + 1];
        for &(u, v) in &edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, []).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                pairs.push((u, v));
            }
        }
        Graph::new(n, pairs).unwrap()
    }

    /// Path 1-2-...-n.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|u| (u, u + 1))).unwrap()
    }

    /// Cycle 1-2-...-n-1.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut pairs: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        pairs.push((n, 1));
        Graph::new(n, pairs).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbor bitmask of `v` (bits are 1-based vertex ids).
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Hash of the labeled graph: vertex count plus the sorted edge list.
    /// No isomorphism canonicalization; relabeled graphs get new digests.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("n={};", self.n));
        for (u, v) in &self.edges {
            hasher.update(format!("{u}-{v},"));
        }
        let out = hasher.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Compact human-readable form used in verification reports.
    pub fn describe(&self) -> String {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n={} [{}]", self.n, edges.join(" "))
    }

    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph> {
        match format {
            GraphFormat::EdgeList => Self::parse_edge_list(text),
            GraphFormat::Json => Self::parse_json(text),
        }
    }

    fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared_n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
        let mut saw_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !saw_content && tokens.len() == 2 && tokens[0] == "vertices" {
                declared_n = Some(tokens[1].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex count {:?}", tokens[1]),
                })?);
                saw_content = true;
                continue;
            }
            saw_content = true;
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `<u> <v>`, got {line:?}"),
                });
            }
            let parse_id = |tok: &str| -> Result<usize> {
                tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad vertex id {tok:?}"),
                })
            };
            let u = parse_id(tokens[0])?;
            let v = parse_id(tokens[1])?;
            if u == v {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            if u == 0 || v == 0 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "vertex ids are 1-based".into(),
                });
            }
            pairs.push((u, v, line_no));
        }
        let max_id = pairs.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0);
        let n = match declared_n {
            Some(n) => {
                for &(u, v, line) in &pairs {
                    if u > n || v > n {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex id {} exceeds declared count {n}", u.max(v)),
                        });
                    }
                }
                n
            }
            None => max_id,
        };
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                msg: "empty graph: no vertex count and no edges".into(),
            });
        }
        Graph::new(n, pairs.into_iter().map(|(u, v, _)| (u, v)))
    }

    fn parse_json(text: &str) -> Result<Graph> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let n = value
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: "missing integer field \"n\"".into(),
            })? as usize;
        let edges = value
            .get("edges")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: "missing array field \"edges\"".into(),
            })?;
        let mut pairs = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("edge {i} is not a 2-element array"),
            })?;
            let u = pair[0].as_u64().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("edge {i}: bad endpoint"),
            })? as usize;
            let v = pair[1].as_u64().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("edge {i}: bad endpoint"),
            })? as usize;
            pairs.push((u, v));
        }
        Graph::new(n, pairs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
        })
    }

    fn full_mask(&self) -> u64 {
        ((1u64 << self.n) - 1) << 1
    }

    /// True iff the vertex-bitmask `mask` spans no edge.
    pub fn mask_is_stable(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & mask != 0 {
                return false;
            }
        }
        true
    }

    /// True iff the induced subgraph on `mask` is connected (empty mask: false).
    pub fn mask_is_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    pub fn set_to_mask(&self, s: &VertexSet) -> Result<u64> {
        let mut mask = 0u64;
        for &v in s {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            mask |= 1 << v;
        }
        Ok(mask)
    }

    pub fn mask_to_set(mask: u64) -> VertexSet {
        let mut s = VertexSet::new();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            s.insert(v);
        }
        s
    }

    /// Is the induced subgraph on a non-empty vertex set connected?
    pub fn is_connected_subset(&self, s: &VertexSet) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok(self.mask_is_connected(self.set_to_mask(s)?))
    }

    /// Is the whole graph connected? (Single vertex counts as connected.)
    pub fn is_connected(&self) -> bool {
        self.mask_is_connected(self.full_mask())
    }

    /// All stable sets of size at most `max_size`, including the empty set,
    /// ordered by size then lexicographically by sorted members.
    pub fn stable_sets(&self, max_size: usize) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new()];
        let mut previous: Vec<u64> = vec![0u64];
        for _size in 1..=max_size.min(self.n) {
            let mut level: Vec<u64> = Vec::new();
            // extend each stable set by a vertex above its maximum
            for &mask in &previous {
                let lo = if mask == 0 {
                    1
                } else {
                    64 - mask.leading_zeros() as usize // highest vertex + 1
                };
                for v in lo..=self.n {
                    if self.adj[v] & mask == 0 {
                        level.push(mask | (1 << v));
                    }
                }
            }
            if level.is_empty() {
                break;
            }
            let mut sets: Vec<VertexSet> = level.iter().map(|&m| Self::mask_to_set(m)).collect();
            sets.sort_by_key(|s| s.iter().copied().collect::<Vec<_>>());
            out.extend(sets);
            previous = level;
        }
        out
    }

    /// Stable sets of exactly the given size, as bitmasks.
    pub fn stable_masks_of_size(&self, size: usize) -> Vec<u64> {
        self.stable_sets(size)
            .into_iter()
            .filter(|s| s.len() == size)
            .map(|s| self.set_to_mask(&s).unwrap())
            .collect()
    }

    /// All non-empty stable sets as bitmasks, ascending.
    pub fn stable_masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = self
            .stable_sets(self.n)
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| self.set_to_mask(s).unwrap())
            .collect();
        masks.sort_unstable();
        masks
    }

    /// Size of a maximum stable set.
    pub fn independence_number(&self) -> usize {
        self.stable_sets(self.n).iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// All non-empty connected vertex subsets, as bitmasks ascending.
    pub fn connected_subset_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let full = self.full_mask();
        let mut mask = full;
        // enumerate all submasks of the full vertex set
        loop {
            if mask != 0 && self.mask_is_connected(mask) {
                out.push(mask);
            }
            if mask == 0 {
                break;
            }
            mask = (mask - 1) & full;
        }
        out.sort_unstable();
        out
    }

    /// Relabels vertices by a permutation (`perm[i-1]` is the new id of `i`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
        .unwrap()
    }
}

/// All non-zero vectors `m <= k` coordinatewise whose support induces a
/// connected subgraph. These are the admissible weighted-bond parts.
/// Order: supports by (size, lex), then coordinate tuples ascending.
pub fn connected_multiset_supports(g: &Graph, k: &WeightVector) -> Vec<RootVector> {
    assert_eq!(g.n(), k.len());
    let support = k.support();
    let mut supports: Vec<Vec<usize>> = Vec::new();
    // connected subsets of supp(k), ordered by size then lex on members
    let mut subsets: Vec<VertexSet> = Vec::new();
    let all = support.clone();
    collect_subsets(&all, 0, &mut VertexSet::new(), &mut subsets);
    subsets.retain(|s| !s.is_empty() && g.is_connected_subset(s).unwrap());
    subsets.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
    });
    for s in subsets {
        supports.push(s.into_iter().collect());
    }

    let mut out = Vec::new();
    for sup in supports {
        // odometer over coordinates 1..=k_i for each vertex of the support,
        // least-significant digit last, so tuples come out ascending
        let caps: Vec<u32> = sup.iter().map(|&v| k.get(v)).collect();
        let mut digits: Vec<u32> = vec![1; sup.len()];
        'emit: loop {
            let mut coords = vec![0; g.n()];
            for (j, &v) in sup.iter().enumerate() {
                coords[v - 1] = digits[j];
            }
            out.push(RootVector::new(coords));
            let mut pos = sup.len();
            while pos > 0 {
                pos -= 1;
                if digits[pos] < caps[pos] {
                    digits[pos] += 1;
                    for d in digits.iter_mut().skip(pos + 1) {
                        *d = 1;
                    }
                    continue 'emit;
                }
            }
            break;
        }
    }
    out
}

fn collect_subsets(
    items: &[usize],
    idx: usize,
    current: &mut VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if idx == items.len() {
        out.push(current.clone());
        return;
    }
    collect_subsets(items, idx + 1, current, out);
    current.insert(items[idx]);
    collect_subsets(items, idx + 1, current, out);
    current.remove(&items[idx]);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn parse_single_edge() {
        let g = Graph::parse("vertices 2\n1 2", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn parse_path_with_comments() {
        let g = Graph::parse("# a path\nvertices 3\n1 2\n\n2 3\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn parse_rejects_self_loop_with_line_number() {
        let err = Graph::parse("vertices 3\n1 1", GraphFormat::EdgeList).unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"), "{msg}");
            }
            other => panic!("wrong error: {other}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range_and_zero_ids() {
        assert!(Graph::parse("vertices 2\n1 3", GraphFormat::EdgeList).is_err());
        assert!(Graph::parse("1 0", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn parse_infers_vertex_count() {
        let g = Graph::parse("1 2\n2 5", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn parse_json_roundtrip() {
        let g = Graph::parse(r#"{"n": 3, "edges": [[1,2],[2,3]]}"#, GraphFormat::Json).unwrap();
        assert_eq!(g, Graph::path(3));
        let again = Graph::parse(&g.to_json().to_string(), GraphFormat::Json).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn connectivity_of_subsets() {
        let p3 = Graph::path(3);
        assert!(!p3.is_connected_subset(&set(&[1, 3])).unwrap());
        assert!(p3.is_connected_subset(&set(&[1, 2, 3])).unwrap());
        assert!(p3.is_connected_subset(&set(&[2])).unwrap());
        assert!(matches!(
            p3.is_connected_subset(&set(&[])),
            Err(Error::EmptyVertexSet)
        ));
    }

    // Oracle cross-check: BFS reachability vs a union-find closure.
    #[test]
    fn connectivity_matches_union_find() {
        for g in [Graph::path(5), Graph::cycle(5), Graph::complete(4), Graph::edgeless(4)] {
            for mask_bits in 1u64..(1 << g.n()) {
                let mask = mask_bits << 1;
                let s = Graph::mask_to_set(mask);
                let bfs = g.is_connected_subset(&s).unwrap();
                // union-find on the members
                let members: Vec<usize> = s.iter().copied().collect();
                let mut parent: Vec<usize> = (0..members.len()).collect();
                fn find(p: &mut Vec<usize>, i: usize) -> usize {
                    if p[i] != i {
                        let r = find(p, p[i]);
                        p[i] = r;
                    }
                    p[i]
                }
                for (i, &u) in members.iter().enumerate() {
                    for (j, &v) in members.iter().enumerate().skip(i + 1) {
                        if g.has_edge(u, v) {
                            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                            parent[ri] = rj;
                        }
                    }
                }
                let root = find(&mut parent, 0);
                let uf = (0..members.len()).all(|i| find(&mut parent, i) == root);
                assert_eq!(bfs, uf, "graph {} subset {:?}", g.describe(), s);
            }
        }
    }

    #[test]
    fn stable_sets_small_cases() {
        let k2 = Graph::complete(2);
        assert_eq!(
            k2.stable_sets(2),
            vec![set(&[]), set(&[1]), set(&[2])]
        );
        let p3 = Graph::path(3);
        assert_eq!(
            p3.stable_sets(2),
            vec![set(&[]), set(&[1]), set(&[2]), set(&[3]), set(&[1, 3])]
        );
        let e3 = Graph::edgeless(3);
        assert_eq!(e3.stable_sets(3).len(), 8);
    }

    #[test]
    fn stable_sets_downward_closed() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(3)] {
            let all = g.stable_sets(g.n());
            for s in &all {
                for &drop in s.iter() {
                    let mut smaller = s.clone();
                    smaller.remove(&drop);
                    assert!(all.contains(&smaller));
                }
            }
        }
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::complete(2).independence_number(), 1);
        assert_eq!(Graph::path(3).independence_number(), 2);
        // C5: exhaustive stable-set enumeration gives 2
        assert_eq!(Graph::cycle(5).independence_number(), 2);
        let c5 = Graph::cycle(5);
        let max_by_enum = c5.stable_sets(5).iter().map(|s| s.len()).max().unwrap();
        assert_eq!(max_by_enum, 2);
    }

    #[test]
    fn connected_supports_k2() {
        let k2 = Graph::complete(2);
        let got = connected_multiset_supports(&k2, &WeightVector::new(vec![1, 1]));
        let expect: Vec<RootVector> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|c| RootVector::new(c.to_vec()))
            .collect();
        assert_eq!(got, expect);

        let got = connected_multiset_supports(&k2, &WeightVector::new(vec![2, 1]));
        let expect: Vec<RootVector> = [[1, 0], [2, 0], [0, 1], [1, 1], [2, 1]]
            .iter()
            .map(|c| RootVector::new(c.to_vec()))
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn connected_supports_exclude_disconnected() {
        let p3 = Graph::path(3);
        let got = connected_multiset_supports(&p3, &WeightVector::ones(3));
        assert!(!got.contains(&RootVector::new(vec![1, 0, 1])));
        assert_eq!(got.len(), 6); // {1},{2},{3},{1,2},{2,3},{1,2,3}
    }

    #[test]
    fn connected_supports_monotone_in_k() {
        let g = Graph::path(3);
        let small = connected_multiset_supports(&g, &WeightVector::new(vec![1, 1, 0]));
        let large = connected_multiset_supports(&g, &WeightVector::new(vec![2, 1, 1]));
        for v in &small {
            assert!(large.contains(v));
        }
    }

    #[test]
    fn digest_is_label_sensitive() {
        let a = Graph::path(3);
        let b = Graph::new(3, [(1, 3), (2, 3)]).unwrap(); // isomorphic, different labels
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest(), Graph::path(3).digest());
    }
}
