//! Root multiplicities of the free partially commutative Lie algebra on a
//! graph: `mult(gamma)` is the dimension of the multidegree-`gamma` component
//! of the Lie algebra generated by one element per vertex in which two
//! generators commute exactly when their vertices are non-adjacent.
//!
//! The table is extracted from the product identity
//!
//! ```text
//!   prod_{gamma} (1 - v^gamma)^{mult(gamma)}  =  sum_S (-1)^{|S|} v^{chi(S)}
//! ```
//!
//! (S over stable sets) by taking `-log` of the right side and running a
//! divisor-sum Moebius inversion grade by grade. Two independent oracles
//! cross-check the table: the multigraded Witt formula (complete graphs) and
//! brute-force counting of commutation classes of words (any graph).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use num::{One, Signed, Zero};

use crate::arith::{divisors, expect_integer, factorial, moebius, Int, Rat};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::root::RootVector;
use crate::series::QSeries;

/// Signed stable-set generating polynomial: `sum_S (-1)^{|S|} v^{chi(S)}`
/// over stable sets of size at most `bound`. Exact (a polynomial) whenever
/// `bound >= independence number`.
pub fn independence_series(g: &Graph, bound: u32) -> QSeries {
    let mut s = QSeries::zero(g.n(), bound);
    for set in g.stable_sets(bound as usize) {
        let mut coords = vec![0u32; g.n()];
        for &v in &set {
            coords[v - 1] = 1;
        }
        let sign = if set.len() % 2 == 0 { Rat::one() } else { -Rat::one() };
        s.add_term(RootVector::new(coords), sign);
    }
    s
}

/// Complete multiplicity table up to a height bound, keyed by the labeled
/// graph digest so cached tables are never applied to the wrong graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultTable {
    digest: String,
    n: usize,
    bound: u32,
    mults: BTreeMap<RootVector, Int>,
}

impl MultTable {
    pub fn digest(&self) -> &str {
        &self.digest
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `mult(gamma)`; zero for anything not stored.
    pub fn get(&self, gamma: &RootVector) -> Int {
        self.mults.get(gamma).cloned().unwrap_or_else(Int::zero)
    }

    /// Non-zero entries in (height, lex) order.
    pub fn entries(&self) -> impl Iterator<Item = (&RootVector, &Int)> {
        self.mults.iter()
    }

    pub fn require_bound(&self, need: u32) -> Result<()> {
        if self.bound < need {
            Err(Error::BoundTooSmall { need, have: self.bound })
        } else {
            Ok(())
        }
    }

    /// `mult(eta)` of the all-ones vector, defined for any graph whose
    /// vertex count fits the bound.
    pub fn ones_multiplicity(&self, g: &Graph) -> Result<Int> {
        let eta = RootVector::new(vec![1; g.n()]);
        self.require_bound(eta.height())?;
        Ok(self.get(&eta))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mults: Vec<serde_json::Value> = self
            .mults
            .iter()
            .map(|(exp, m)| serde_json::json!({ "exp": exp.coords(), "m": m.to_string() }))
            .collect();
        serde_json::json!({
            "digest": self.digest,
            "n": self.n,
            "bound": self.bound,
            "mults": mults,
        })
    }
}

/// Enumerates all non-zero vectors of height `<= bound` in `n` coordinates,
/// in (height, lex) order.
pub fn vectors_up_to_height(n: usize, bound: u32) -> Vec<RootVector> {
    let mut out = Vec::new();
    let mut coords = vec![0u32; n];
    fn rec(coords: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<RootVector>) {
        if pos == coords.len() {
            out.push(RootVector::new(coords.clone()));
            return;
        }
        for c in 0..=left {
            coords[pos] = c;
            rec(coords, pos + 1, left - c, out);
            coords[pos] = 0;
        }
    }
    rec(&mut coords, 0, bound, &mut out);
    out.retain(|v| !v.is_zero());
    out.sort();
    out
}

/// Builds the multiplicity table for all heights up to `bound`.
///
/// With `c = -log(independence series)` the grade-by-grade relation is
/// `c_gamma = sum_{d | gcd(gamma)} mult(gamma/d) / d`, inverted by
/// `mult(gamma) = sum_{d | gcd(gamma)} (mu(d)/d) c_{gamma/d}`.
/// Every entry must come out a non-negative integer (it is a dimension);
/// anything else signals a bug and is surfaced, never rounded.
pub fn mult_table(g: &Graph, bound: u32) -> Result<MultTable> {
    assert!(bound >= 1);
    let indep = independence_series(g, bound);
    let c = indep.log()?.neg();
    let mut mults: BTreeMap<RootVector, Int> = BTreeMap::new();
    for gamma in vectors_up_to_height(g.n(), bound) {
        let mut acc = Rat::zero();
        for d in divisors(gamma.gcd()) {
            let mu = moebius(d as u64);
            if mu == 0 {
                continue;
            }
            let coeff = Rat::new(Int::from(mu), Int::from(d));
            acc += coeff * c.coeff(&gamma.div_exact(d));
        }
        let m = expect_integer(&acc, &format!("mult({gamma:?})"))?;
        if m.is_negative() {
            return Err(Error::IntegralityViolation {
                context: format!("mult({gamma:?}) = {m} is negative"),
            });
        }
        if m.is_zero() {
            continue;
        }
        // roots have connected support; anything else is a bug
        let support_mask = gamma
            .support()
            .iter()
            .fold(0u64, |mask, &v| mask | (1 << v));
        assert!(
            g.mask_is_connected(support_mask),
            "non-zero multiplicity on disconnected support {gamma:?}"
        );
        mults.insert(gamma, m);
    }
    // simple roots are one-dimensional
    for v in 1..=g.n() {
        let unit = RootVector::unit(g.n(), v);
        assert_eq!(mults.get(&unit), Some(&Int::one()), "mult(alpha_{v}) != 1");
    }
    Ok(MultTable { digest: g.digest(), n: g.n(), bound, mults })
}

/// Multigraded Witt formula for the free Lie algebra (the complete-graph
/// case): `mult(gamma) = (1/N) sum_{d | gcd(gamma)} mu(d) (N/d)! / prod (g_i/d)!`
/// with `N = ht(gamma)`.
pub fn witt_oracle(gamma: &RootVector) -> Int {
    assert!(!gamma.is_zero());
    let n = gamma.height();
    let mut acc = Int::zero();
    for d in divisors(gamma.gcd()) {
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let mut term = factorial((n / d) as u64);
        for &c in gamma.coords() {
            if c > 0 {
                let (q, r) = num::Integer::div_rem(&term, &factorial((c / d) as u64));
                debug_assert!(r.is_zero());
                term = q;
            }
        }
        acc += Int::from(mu) * term;
    }
    let (q, r) = num::Integer::div_rem(&acc, &Int::from(n));
    assert!(r.is_zero(), "Witt sum not divisible by the height");
    q
}

/// Number of commutation classes of words with letter content `gamma`,
/// where two letters commute iff their vertices are non-adjacent. Counted
/// by brute force: enumerate every word and keep the lexicographically
/// least representative of its class.
///
/// This equals the graded dimension of the universal enveloping algebra,
/// i.e. the `v^gamma` coefficient of the inverse independence series.
pub fn trace_monoid_dim(g: &Graph, gamma: &RootVector, budget: u64) -> Result<Int> {
    let len = gamma.height() as usize;
    // multinomial count of words, kept within the step budget
    let mut words_estimate = factorial(len as u64);
    for &c in gamma.coords() {
        if c > 1 {
            let (q, _) = num::Integer::div_rem(&words_estimate, &factorial(c as u64));
            words_estimate = q;
        }
    }
    let cost = words_estimate.clone() * Int::from(len.max(1) * len.max(1));
    if cost > Int::from(budget) {
        return Err(Error::BudgetExceeded { limit: budget });
    }

    let mut letters: Vec<usize> = Vec::with_capacity(len);
    for (i, &c) in gamma.coords().iter().enumerate() {
        for _ in 0..c {
            letters.push(i + 1);
        }
    }
    let mut normal_forms = std::collections::BTreeSet::new();
    let mut word = letters.clone(); // sorted ascending = lexicographically first
    loop {
        normal_forms.insert(lex_normal_form(g, &word));
        if !next_permutation_usize(&mut word) {
            break;
        }
    }
    Ok(Int::from(normal_forms.len() as u64))
}

/// Lexicographically least word in the commutation class of `word`.
/// Greedy: a letter can be brought to the front iff everything before its
/// first occurrence commutes with it; always pick the smallest such letter.
fn lex_normal_form(g: &Graph, word: &[usize]) -> Vec<usize> {
    let mut rest: Vec<usize> = word.to_vec();
    let mut out = Vec::with_capacity(word.len());
    while !rest.is_empty() {
        let mut best: Option<(usize, usize)> = None; // (letter, position)
        let mut seen_first: std::collections::BTreeSet<usize> = Default::default();
        'candidates: for (pos, &letter) in rest.iter().enumerate() {
            if !seen_first.insert(letter) {
                continue; // only the first occurrence of a letter can move
            }
            for &before in &rest[..pos] {
                if before == letter || g.has_edge(before, letter) {
                    continue 'candidates; // blocked by a non-commuting letter
                }
            }
            match best {
                Some((b, _)) if b <= letter => {}
                _ => best = Some((letter, pos)),
            }
        }
        let (letter, pos) = best.expect("some letter is always movable");
        out.push(letter);
        rest.remove(pos);
    }
    out
}

fn next_permutation_usize(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Why a cache lookup came back empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CacheMiss {
    NotFound,
    DigestMismatch,
    BoundTooSmall { stored: u32, requested: u32 },
    Corrupt(String),
}

/// Result of a cache probe; a miss is never an error, just a reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CacheLoad {
    Hit(MultTable),
    Miss(CacheMiss),
}

/// Writes the table as JSON via a temporary file and an atomic rename, so a
/// concurrent reader never observes a partial file.
pub fn cache_store(table: &MultTable, path: &Path) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string(&table.to_json()).unwrap().as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}

/// Loads a cached table for `g` if the file exists, matches the graph digest
/// and covers at least `min_bound`. Anything else is a miss with a reason;
/// stale or foreign data is never returned.
pub fn cache_load(g: &Graph, path: &Path, min_bound: u32) -> CacheLoad {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return CacheLoad::Miss(CacheMiss::NotFound)
        }
        Err(e) => return CacheLoad::Miss(CacheMiss::Corrupt(e.to_string())),
    };
    let value: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return CacheLoad::Miss(CacheMiss::Corrupt(e.to_string())),
    };
    let parse = || -> Option<MultTable> {
        let digest = value.get("digest")?.as_str()?.to_string();
        let n = value.get("n")?.as_u64()? as usize;
        let bound = value.get("bound")?.as_u64()? as u32;
        let mut mults = BTreeMap::new();
        for item in value.get("mults")?.as_array()? {
            let exp: Vec<u32> = item
                .get("exp")?
                .as_array()?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32))
                .collect::<Option<_>>()?;
            if exp.len() != n {
                return None;
            }
            let m: Int = item.get("m")?.as_str()?.parse().ok()?;
            mults.insert(RootVector::new(exp), m);
        }
        Some(MultTable { digest, n, bound, mults })
    };
    let table = match parse() {
        Some(t) => t,
        None => return CacheLoad::Miss(CacheMiss::Corrupt("malformed cache schema".into())),
    };
    if table.digest != g.digest() || table.n != g.n() {
        return CacheLoad::Miss(CacheMiss::DigestMismatch);
    }
    if table.bound < min_bound {
        return CacheLoad::Miss(CacheMiss::BoundTooSmall {
            stored: table.bound,
            requested: min_bound,
        });
    }
    CacheLoad::Hit(table)
}

/// Loads from the cache or computes and stores. Cache problems degrade to
/// recomputation, never to wrong answers.
pub fn mult_table_cached(g: &Graph, bound: u32, cache: Option<&Path>) -> Result<MultTable> {
    if let Some(path) = cache {
        if let CacheLoad::Hit(table) = cache_load(g, path, bound) {
            return Ok(table);
        }
    }
    let table = mult_table(g, bound)?;
    if let Some(path) = cache {
        let _ = cache_store(&table, path); // best effort; failure to cache is not fatal
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};
    use crate::series::power_with_multiplicity;

    fn rv(coords: &[u32]) -> RootVector {
        RootVector::new(coords.to_vec())
    }

    #[test]
    fn independence_series_small_graphs() {
        let k2 = independence_series(&Graph::complete(2), 4);
        assert_eq!(k2.coeff(&rv(&[0, 0])), rat_int(1));
        assert_eq!(k2.coeff(&rv(&[1, 0])), rat_int(-1));
        assert_eq!(k2.coeff(&rv(&[0, 1])), rat_int(-1));
        assert_eq!(k2.num_terms(), 3);

        let p3 = independence_series(&Graph::path(3), 3);
        assert_eq!(p3.coeff(&rv(&[1, 0, 1])), rat_int(1));
        assert_eq!(p3.num_terms(), 5);

        let e2 = independence_series(&Graph::edgeless(2), 2);
        assert_eq!(e2.coeff(&rv(&[1, 1])), rat_int(1));
        assert_eq!(e2.num_terms(), 4);
    }

    #[test]
    fn abelian_case_has_only_simple_roots() {
        let t = mult_table(&Graph::edgeless(2), 4).unwrap();
        assert_eq!(t.get(&rv(&[1, 0])), int(1));
        assert_eq!(t.get(&rv(&[0, 1])), int(1));
        assert_eq!(t.entries().count(), 2);
    }

    #[test]
    fn free_lie_algebra_on_two_generators() {
        let t = mult_table(&Graph::complete(2), 4).unwrap();
        assert_eq!(t.get(&rv(&[1, 1])), int(1));
        assert_eq!(t.get(&rv(&[2, 1])), int(1));
        assert_eq!(t.get(&rv(&[1, 2])), int(1));
        assert_eq!(t.get(&rv(&[2, 2])), int(1));
        assert_eq!(t.get(&rv(&[3, 1])), int(1));
        assert_eq!(t.get(&rv(&[1, 3])), int(1));
        // pure powers of one generator vanish: [e, e] = 0
        assert_eq!(t.get(&rv(&[2, 0])), int(0));
        assert_eq!(t.get(&rv(&[3, 0])), int(0));
    }

    #[test]
    fn path_multiplicity_equals_discriminant() {
        let t = mult_table(&Graph::path(3), 3).unwrap();
        assert_eq!(t.get(&rv(&[1, 1, 1])), int(1));
    }

    #[test]
    fn witt_oracle_values() {
        assert_eq!(witt_oracle(&rv(&[1, 1])), int(1));
        assert_eq!(witt_oracle(&rv(&[2, 2])), int(1));
        assert_eq!(witt_oracle(&rv(&[1, 0])), int(1));
        assert_eq!(witt_oracle(&rv(&[2, 0])), int(0));
        assert_eq!(witt_oracle(&rv(&[2, 1])), int(1));
        // free Lie algebra on 3 generators, multidegree (1,1,1): dim 2
        assert_eq!(witt_oracle(&rv(&[1, 1, 1])), int(2));
    }

    #[test]
    fn complete_graph_table_matches_witt() {
        for n in 2..=4usize {
            let t = mult_table(&Graph::complete(n), 6).unwrap();
            for gamma in vectors_up_to_height(n, 6) {
                assert_eq!(t.get(&gamma), witt_oracle(&gamma), "K{n} at {gamma:?}");
            }
        }
    }

    #[test]
    fn denominator_identity_reproduced_for_k2() {
        let g = Graph::complete(2);
        let t = mult_table(&g, 4).unwrap();
        let factors: BTreeMap<RootVector, Int> =
            t.entries().map(|(v, m)| (v.clone(), m.clone())).collect();
        let product = power_with_multiplicity(2, &factors, 4).unwrap();
        assert_eq!(product, independence_series(&g, 4));
    }

    #[test]
    fn trace_monoid_counts() {
        let budget = 1_000_000;
        assert_eq!(
            trace_monoid_dim(&Graph::complete(2), &rv(&[1, 1]), budget).unwrap(),
            int(2)
        );
        assert_eq!(
            trace_monoid_dim(&Graph::edgeless(2), &rv(&[1, 1]), budget).unwrap(),
            int(1)
        );
        // P3: letters 1,3 commute; classes {123},{132,312},{213,231},{321}
        assert_eq!(
            trace_monoid_dim(&Graph::path(3), &rv(&[1, 1, 1]), budget).unwrap(),
            int(4)
        );
    }

    #[test]
    fn trace_monoid_matches_inverse_series() {
        for g in [Graph::complete(3), Graph::path(3), Graph::edgeless(3), Graph::path(4)] {
            let inv = independence_series(&g, 4).inverse().unwrap();
            for gamma in vectors_up_to_height(g.n(), 4) {
                let dim = trace_monoid_dim(&g, &gamma, 10_000_000).unwrap();
                assert_eq!(
                    inv.coeff(&gamma),
                    Rat::from_integer(dim.clone()),
                    "graph {} gamma {gamma:?}",
                    g.describe()
                );
            }
        }
    }

    #[test]
    fn trace_monoid_budget_enforced() {
        let g = Graph::complete(3);
        assert!(matches!(
            trace_monoid_dim(&g, &rv(&[3, 3, 3]), 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn automorphism_permutes_table() {
        // P3 has the automorphism swapping the endpoints
        let g = Graph::path(3);
        let t = mult_table(&g, 5).unwrap();
        let perm = [3, 2, 1];
        for (gamma, m) in t.entries() {
            assert_eq!(t.get(&gamma.permute(&perm)), *m, "gamma {gamma:?}");
        }
    }

    #[test]
    fn cache_roundtrip_and_mismatches() {
        let dir = std::env::temp_dir().join(format!("chromalie-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k2.json");

        let g = Graph::complete(2);
        let t = mult_table(&g, 4).unwrap();
        cache_store(&t, &path).unwrap();

        match cache_load(&g, &path, 4) {
            CacheLoad::Hit(loaded) => assert_eq!(loaded, t),
            other => panic!("expected hit, got {other:?}"),
        }
        // different graph: digest mismatch
        let other_graph = Graph::edgeless(2);
        assert!(matches!(
            cache_load(&other_graph, &path, 4),
            CacheLoad::Miss(CacheMiss::DigestMismatch)
        ));
        // larger requested bound: recompute
        assert!(matches!(
            cache_load(&g, &path, 6),
            CacheLoad::Miss(CacheMiss::BoundTooSmall { stored: 4, requested: 6 })
        ));
        // missing file
        assert!(matches!(
            cache_load(&g, &dir.join("absent.json"), 4),
            CacheLoad::Miss(CacheMiss::NotFound)
        ));
        // corrupt file
        std::fs::write(dir.join("bad.json"), b"{ not json").unwrap();
        assert!(matches!(
            cache_load(&g, &dir.join("bad.json"), 4),
            CacheLoad::Miss(CacheMiss::Corrupt(_))
        ));
        std::fs::remove_dir_all(&dir).ok();
    }
}
