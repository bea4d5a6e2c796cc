//! The identity-verification harness: exhaustive sweeps of small-graph
//! corpora, one report per check, deterministic output. A case whose cost
//! estimate exceeds the step budget is recorded as skipped, never as passed
//! or failed.

use num::Signed;

use crate::arith::{sign_pow, Int, Rat};
use crate::chroma::{
    chromatic_discriminant, chromatic_poly_from_mults, count_colorings_brute, csf_bruteforce,
    csf_from_mults, csf_mobius, gen_chromatic_poly, join_graph,
};
use crate::corpus::{enumerate_corpus, enumerate_corpus_up_to};
use crate::error::Error;
use crate::graph::Graph;
use crate::gsym::{powersum_g_closed_form, powersum_g_via_log, t_function_coefficient};
use crate::lattice::{bond_lattice, mobius_all, psi_image, weighted_bond_lattice, PsiImage};
use crate::root::WeightVector;
use crate::root_mult::{
    independence_series, mult_table, trace_monoid_dim, vectors_up_to_height, witt_oracle,
};
use crate::series::power_with_multiplicity;
use crate::symfunc::{powersum_expand, NVarPoly, Partition, PowerSumExpr};

pub const DEFAULT_BUDGET: u64 = crate::chroma::DEFAULT_BUDGET;

/// One failed case: which graph, which colour tuple, and what went wrong.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub graph: String,
    pub weights: Option<String>,
    pub detail: String,
}

/// Outcome of one check over a corpus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub check: String,
    pub corpus: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub skipped: u64,
    pub wall_ms: u128,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Deterministic JSON; the timing field is the only run-dependent part.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.check,
            "corpus": self.corpus,
            "cases": self.cases,
            "failures": self.failures.iter().map(|f| serde_json::json!({
                "graph": f.graph,
                "weights": f.weights,
                "detail": f.detail,
            })).collect::<Vec<_>>(),
            "skipped": self.skipped,
            "pass": self.pass(),
            "wall_ms": self.wall_ms.to_string(),
        })
    }

    pub fn summary_line(&self) -> String {
        let status = if !self.pass() {
            "FAIL"
        } else if self.skipped > 0 && self.cases == 0 {
            "SKIPPED"
        } else {
            "PASS"
        };
        format!(
            "{:24} {:7} cases={} failures={} skipped={} ({} ms)",
            self.check,
            status,
            self.cases,
            self.failures.len(),
            self.skipped,
            self.wall_ms
        )
    }
}

struct CheckRun {
    check: String,
    corpus: String,
    budget: u64,
    cases: u64,
    skipped: u64,
    failures: Vec<Failure>,
    started: std::time::Instant,
}

impl CheckRun {
    fn new(check: &str, corpus: &str, budget: u64) -> CheckRun {
        CheckRun {
            check: check.into(),
            corpus: corpus.into(),
            budget,
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
            started: std::time::Instant::now(),
        }
    }

    /// Charges a case against the budget; false means "skip it".
    fn admit(&mut self, cost_estimate: u64) -> bool {
        if cost_estimate > self.budget {
            self.skipped += 1;
            false
        } else {
            true
        }
    }

    fn ok(&mut self) {
        self.cases += 1;
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn fail(&mut self, g: &Graph, weights: Option<&WeightVector>, detail: String) {
        self.cases += 1;
        self.failures.push(Failure {
            graph: g.describe(),
            weights: weights.map(|k| format!("{:?}", k.entries())),
            detail,
        });
    }

    /// Runs one fallible case: `Ok` passes, budget errors skip, everything
    /// else fails with the error text.
    fn case<T>(
        &mut self,
        g: &Graph,
        weights: Option<&WeightVector>,
        result: crate::error::Result<T>,
        verdict: impl FnOnce(T) -> Option<String>,
    ) {
        match result {
            Ok(value) => match verdict(value) {
                None => self.ok(),
                Some(detail) => self.fail(g, weights, detail),
            },
            Err(Error::BudgetExceeded { .. }) => self.skip(),
            Err(e) => self.fail(g, weights, e.to_string()),
        }
    }

    fn finish(self) -> Report {
        Report {
            check: self.check,
            corpus: self.corpus,
            cases: self.cases,
            failures: self.failures,
            skipped: self.skipped,
            wall_ms: self.started.elapsed().as_millis(),
        }
    }
}

fn first_expr_difference(a: &PowerSumExpr, b: &PowerSumExpr) -> Option<String> {
    let mut lambdas: Vec<&Partition> = a.terms().map(|(l, _)| l).collect();
    lambdas.extend(b.terms().map(|(l, _)| l));
    lambdas.sort();
    lambdas.dedup();
    for l in lambdas {
        let (ca, cb) = (a.coeff(l), b.coeff(l));
        if ca != cb {
            return Some(format!("p_({}) coefficient {ca} vs {cb}", l.to_compact_string()));
        }
    }
    None
}

fn first_poly_difference(a: &NVarPoly, b: &NVarPoly) -> Option<String> {
    let mut exps: Vec<Vec<u32>> = a.terms().map(|(e, _)| e.clone()).collect();
    exps.extend(b.terms().map(|(e, _)| e.clone()));
    exps.sort();
    exps.dedup();
    for e in exps {
        let (ca, cb) = (a.coeff(&e), b.coeff(&e));
        if ca != cb {
            return Some(format!("monomial {e:?} coefficient {ca} vs {cb}"));
        }
    }
    None
}

fn first_chrom_difference(
    a: &crate::chroma::ChromaticPolynomial,
    b: &crate::chroma::ChromaticPolynomial,
) -> Option<String> {
    let deg = a.coeffs().len().max(b.coeffs().len());
    for i in 0..deg {
        let (ca, cb) = (a.coeff(i), b.coeff(i));
        if ca != cb {
            return Some(format!("q^{i} coefficient {ca} vs {cb}"));
        }
    }
    None
}

/// Weight tuples with entries from the given choices, full support.
fn weight_tuples(n: usize, choices: &[u32]) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    'outer: loop {
        out.push(WeightVector::new(digits.iter().map(|&i| choices[i]).collect()));
        for pos in (0..n).rev() {
            digits[pos] += 1;
            if digits[pos] < choices.len() {
                continue 'outer;
            }
            digits[pos] = 0;
        }
        break;
    }
    out
}

/// Criterion: the all-ones chromatic symmetric function agrees along all
/// three routes on every connected graph with 5 and 6 vertices: the
/// multiplicity expansion matches brute force in `n` variables and matches
/// the Moebius expansion termwise.
pub fn check_three_route_csf(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "csf-three-route",
        "connected graphs on 5 and 6 vertices, all-ones weights",
        budget,
    );
    for n in [5usize, 6] {
        let corpus = match enumerate_corpus(n, true) {
            Ok(c) => c,
            Err(e) => {
                run.failures.push(Failure {
                    graph: format!("corpus n={n}"),
                    weights: None,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let ones = WeightVector::ones(n);
        for g in &corpus {
            // brute force explores at most n^n colourings
            if !run.admit((n as u64).pow(n as u32)) {
                continue;
            }
            let result = (|| {
                let t = mult_table(g, n as u32)?;
                let from_mults = csf_from_mults(g, &ones, &t)?;
                let brute = csf_bruteforce(g, &ones, n, budget)?;
                let stanley = csf_mobius(g);
                Ok((from_mults, brute, stanley))
            })();
            run.case(g, Some(&ones), result, |(from_mults, brute, stanley)| {
                if let Some(d) = first_poly_difference(&powersum_expand(&from_mults, n), &brute) {
                    return Some(format!("multiplicity route vs brute force: {d}"));
                }
                if let Some(d) = first_expr_difference(&from_mults, &stanley) {
                    return Some(format!("multiplicity route vs Moebius route: {d}"));
                }
                None
            });
        }
    }
    run.finish()
}

/// Criterion: on connected graphs with up to 4 vertices and weight entries
/// in {1,2} (height at most 6), the multiplicity expansion of the
/// chromatic symmetric function matches brute force.
pub fn check_generalized_csf(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "csf-generalized",
        "connected graphs <= 4 vertices, weight entries in {1,2}, height <= 6",
        budget,
    );
    let corpus = enumerate_corpus_up_to(4, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2]) {
            let nvars = k.height() as usize;
            if k.height() > 6 {
                continue;
            }
            if !run.admit((nvars as u64 + 1).pow(g.n() as u32 + 1)) {
                continue;
            }
            let result = (|| {
                let t = mult_table(g, k.height())?;
                let expr = csf_from_mults(g, &k, &t)?;
                let brute = csf_bruteforce(g, &k, nvars, budget)?;
                Ok((expr, brute))
            })();
            run.case(g, Some(&k), result, |(expr, brute)| {
                first_poly_difference(&powersum_expand(&expr, nvars), &brute)
            });
        }
    }
    run.finish()
}

/// Criterion: on the same corpus, the generalized chromatic polynomial from
/// stable tuples coincides coefficientwise with the expansion from root
/// multiplicities.
pub fn check_generalized_poly(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "chrompoly-generalized",
        "connected graphs <= 4 vertices, weight entries in {1,2}, height <= 6",
        budget,
    );
    let corpus = enumerate_corpus_up_to(4, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2]) {
            if k.height() > 6 {
                continue;
            }
            if !run.admit(1u64 << (g.n() as u32 + k.height())) {
                continue;
            }
            let result = (|| {
                let t = mult_table(g, k.height())?;
                let via_mults = chromatic_poly_from_mults(g, &k, &t)?;
                let via_tuples = gen_chromatic_poly(g, &k, budget)?;
                Ok((via_mults, via_tuples))
            })();
            run.case(g, Some(&k), result, |(a, b)| first_chrom_difference(&a, &b));
        }
    }
    run.finish()
}

/// Criterion: the product over roots of `(1 - v^gamma)^{mult}` truncated at
/// height 8 reproduces the independence series exactly, for every connected
/// graph with at most 5 vertices.
pub fn check_denominator(budget: u64) -> Report {
    const HEIGHT: u32 = 8;
    let mut run = CheckRun::new(
        "denominator",
        "connected graphs <= 5 vertices, truncation height 8",
        budget,
    );
    let corpus = enumerate_corpus_up_to(5, true).expect("corpus");
    for g in &corpus {
        // roughly (#vectors of height <= 8)^2 coefficient operations
        if !run.admit(2_000_000) {
            continue;
        }
        let result = (|| {
            let t = mult_table(g, HEIGHT)?;
            let factors = t.entries().map(|(v, m)| (v.clone(), m.clone())).collect();
            let product = power_with_multiplicity(g.n(), &factors, HEIGHT)?;
            Ok((product, independence_series(g, HEIGHT)))
        })();
        run.case(g, None, result, |(product, indep)| {
            if product == indep {
                None
            } else {
                Some("product over roots differs from independence series".into())
            }
        });
    }
    run.finish()
}

/// Criterion: the inverted table matches the Witt formula on complete
/// graphs (height <= 8, up to K4), and inverse-series coefficients match
/// brute-force commutation-class counts on every graph with <= 4 vertices
/// (height <= 6).
pub fn check_oracles(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "oracles",
        "complete graphs <= K4 at height 8; all graphs <= 4 vertices at height 6",
        budget,
    );
    for n in 1..=4usize {
        let g = Graph::complete(n);
        if !run.admit(500_000) {
            continue;
        }
        let result = mult_table(&g, 8);
        run.case(&g, None, result, |t| {
            for gamma in vectors_up_to_height(n, 8) {
                let expected = witt_oracle(&gamma);
                if t.get(&gamma) != expected {
                    return Some(format!(
                        "mult({gamma:?}) = {} but Witt formula gives {expected}",
                        t.get(&gamma)
                    ));
                }
            }
            None
        });
    }
    let corpus = enumerate_corpus_up_to(4, false).expect("corpus");
    for g in &corpus {
        if !run.admit(1_000_000) {
            continue;
        }
        let result = independence_series(g, 6).inverse();
        let mut skipped_any = false;
        run.case(g, None, result, |inv| {
            for gamma in vectors_up_to_height(g.n(), 6) {
                match trace_monoid_dim(g, &gamma, budget) {
                    Ok(dim) => {
                        if inv.coeff(&gamma) != Rat::from_integer(dim.clone()) {
                            return Some(format!(
                                "enveloping dimension at {gamma:?}: series {} vs word count {dim}",
                                inv.coeff(&gamma)
                            ));
                        }
                    }
                    Err(_) => {
                        skipped_any = true;
                    }
                }
            }
            None
        });
        if skipped_any {
            run.skip();
        }
    }
    run.finish()
}

/// Criterion: for every connected graph with at most 5 vertices and every
/// degree up to 6, the two routes to the graph power sum agree and all its
/// coefficients are non-negative integers.
pub fn check_gsym_dual(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "gsym-dual",
        "connected graphs <= 5 vertices, power-sum degree <= 6",
        budget,
    );
    let corpus = enumerate_corpus_up_to(5, true).expect("corpus");
    for g in &corpus {
        for degree in 1..=6u32 {
            if !run.admit(500_000) {
                continue;
            }
            let result = (|| {
                let t = mult_table(g, degree)?;
                let via_log = powersum_g_via_log(g, degree)?;
                let closed = powersum_g_closed_form(g, degree, &t)?;
                Ok((via_log, closed))
            })();
            run.case(g, None, result, |(via_log, closed)| {
                if via_log != closed {
                    return Some(format!("log route differs from closed form at degree {degree}"));
                }
                for (exp, c) in via_log.terms() {
                    if !c.is_integer() || c.is_negative() {
                        return Some(format!(
                            "coefficient {c} at {exp:?} is not a non-negative integer"
                        ));
                    }
                }
                None
            });
        }
    }
    run.finish()
}

/// Criterion: on every connected graph with at most 6 vertices the three
/// discriminant routes agree, and any two graphs with equal chromatic
/// symmetric functions have equal discriminants.
pub fn check_discriminant(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "discriminant",
        "connected graphs <= 6 vertices",
        budget,
    );
    let corpus = enumerate_corpus_up_to(6, true).expect("corpus");
    let mut by_csf: Vec<(PowerSumExpr, Int, String)> = Vec::new();
    for g in &corpus {
        if !run.admit(1u64 << (2 * g.n() as u32)) {
            continue;
        }
        let result = (|| {
            let t = mult_table(g, g.n() as u32)?;
            let d = chromatic_discriminant(g, &t)?;
            Ok((csf_mobius(g), d))
        })();
        let mut keep: Option<(PowerSumExpr, Int)> = None;
        run.case(g, None, result, |(x, d)| {
            keep = Some((x, d));
            None // chromatic_discriminant already errors on any mismatch
        });
        if let Some((x, d)) = keep {
            by_csf.push((x, d, g.describe()));
        }
    }
    // equal chromatic symmetric functions must give equal discriminants
    for i in 0..by_csf.len() {
        for j in i + 1..by_csf.len() {
            if by_csf[i].0 == by_csf[j].0 {
                run.cases += 1;
                if by_csf[i].1 != by_csf[j].1 {
                    run.failures.push(Failure {
                        graph: format!("{} vs {}", by_csf[i].2, by_csf[j].2),
                        weights: None,
                        detail: format!(
                            "equal chromatic symmetric functions, discriminants {} vs {}",
                            by_csf[i].1, by_csf[j].1
                        ),
                    });
                }
            }
        }
    }
    run.finish()
}

/// Criterion: on connected graphs with up to 4 vertices and entries in
/// {1,2}, the stable-partition generating function reproduces the
/// brute-force chromatic symmetric function at `N = ht(eta(k))`.
pub fn check_tfunction(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "t-function",
        "connected graphs <= 4 vertices, weight entries in {1,2}",
        budget,
    );
    let corpus = enumerate_corpus_up_to(4, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2]) {
            let nvars = k.height() as usize;
            if !run.admit((nvars as u64 + 1).pow(g.n() as u32 + 1)) {
                continue;
            }
            let result = (|| {
                let t = t_function_coefficient(g, &k, nvars, budget)?;
                let brute = csf_bruteforce(g, &k, nvars, budget)?;
                Ok((t, brute))
            })();
            run.case(g, Some(&k), result, |(t, brute)| first_poly_difference(&t, &brute));
        }
    }
    run.finish()
}

/// Criterion, two clauses.
///
/// Clause 1: the part-to-root map accepts every weighted bond on the
/// generalized-weights corpus, i.e. every part is a root. This clause
/// FAILS, and must fail: a weight entry of 2 admits the bond part
/// `2 alpha_i` (its support is a single vertex, which is connected), and
/// `2 alpha_i` is never a root because `[e, e] = 0` in any Lie algebra.
/// The failures listed here are exactly those bonds. The identities are
/// unaffected: such bonds carry binomial factor zero.
///
/// Clause 2: on connected graphs up to 6 vertices,
/// `mu(0, pi) = (-1)^{n - #blocks} prod mult(block)`.
pub fn check_bijection(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "root-bijection",
        "psi on connected graphs <= 4 vertices with entries in {1,2} (height <= 6); \
         Moebius bridge on connected graphs <= 6 vertices",
        budget,
    );
    // clause 1: psi acceptance
    let corpus = enumerate_corpus_up_to(4, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2]) {
            if k.height() > 6 {
                continue;
            }
            if !run.admit(1 << (g.n() as u32 + k.height())) {
                continue;
            }
            let result = (|| {
                let t = mult_table(g, k.height())?;
                let bonds = weighted_bond_lattice(g, &k)?;
                let mut rejections = Vec::new();
                for b in &bonds {
                    if let PsiImage::Rejected { part } = psi_image(b, &t)? {
                        rejections.push((b.clone(), part));
                    }
                }
                Ok(rejections)
            })();
            run.case(g, Some(&k), result, |rejections| {
                if rejections.is_empty() {
                    None
                } else {
                    let (bond, part) = &rejections[0];
                    Some(format!(
                        "{} of {} bonds rejected; e.g. bond {:?} has non-root part {part:?}",
                        rejections.len(),
                        rejections.len(),
                        bond.parts(),
                    ))
                }
            });
        }
    }
    // clause 2: Moebius bridge
    let corpus = enumerate_corpus_up_to(6, true).expect("corpus");
    for g in &corpus {
        if !run.admit(1u64 << (2 * g.n() as u32)) {
            continue;
        }
        let result = mult_table(g, g.n() as u32);
        run.case(g, None, result, |t| {
            let lattice = bond_lattice(g);
            let mob = mobius_all(&lattice);
            for (pi, mu) in lattice.iter().zip(mob) {
                let mut expected = sign_pow((g.n() - pi.num_blocks()) as u64);
                for idx in 0..pi.num_blocks() {
                    let beta = pi.block_vector(g.n(), idx);
                    expected = expected * Rat::from_integer(t.get(&beta));
                }
                if Rat::from_integer(mu.clone()) != expected {
                    return Some(format!(
                        "mu(0, {pi:?}) = {mu} but signed multiplicity product is {expected}"
                    ));
                }
            }
            None
        });
    }
    run.finish()
}

/// Criterion: the clique-join identity `k! pi^G_k = pi^{G(k)}` for all
/// connected graphs with at most 3 vertices and entries in {1,2,3}.
pub fn check_join(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "join",
        "connected graphs <= 3 vertices, weight entries in {1,2,3}",
        budget,
    );
    let corpus = enumerate_corpus_up_to(3, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2, 3]) {
            if !run.admit(1u64 << (2 * k.height())) {
                continue;
            }
            let result = (|| {
                let lhs = gen_chromatic_poly(g, &k, budget)?
                    .scalar_mul(&Rat::from_integer(k.factorial()));
                let join = join_graph(g, &k)?;
                let rhs = gen_chromatic_poly(&join, &WeightVector::ones(join.n()), budget)?;
                Ok((lhs, rhs))
            })();
            run.case(g, Some(&k), result, |(lhs, rhs)| first_chrom_difference(&lhs, &rhs));
        }
    }
    run.finish()
}

/// The Moebius-route expansion equals the multiplicity-route expansion
/// termwise for all connected graphs up to 6 vertices (all-ones weights).
pub fn check_stanley(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "stanley",
        "connected graphs <= 6 vertices, all-ones weights",
        budget,
    );
    let corpus = enumerate_corpus_up_to(6, true).expect("corpus");
    for g in &corpus {
        if !run.admit(1u64 << (2 * g.n() as u32)) {
            continue;
        }
        let ones = WeightVector::ones(g.n());
        let result = (|| {
            let t = mult_table(g, g.n() as u32)?;
            csf_from_mults(g, &ones, &t)
        })();
        run.case(g, Some(&ones), result, |from_mults| {
            first_expr_difference(&from_mults, &csf_mobius(g))
        });
    }
    run.finish()
}

/// Sanity check for the brute-force colour counter: the generalized
/// chromatic polynomial evaluates to the brute-force count at each small
/// colour count.
pub fn check_counting_consistency(budget: u64) -> Report {
    let mut run = CheckRun::new(
        "count-consistency",
        "connected graphs <= 4 vertices, weight entries in {1,2}, q <= ht + 2",
        budget,
    );
    let corpus = enumerate_corpus_up_to(4, true).expect("corpus");
    for g in &corpus {
        for k in weight_tuples(g.n(), &[1, 2]) {
            if !run.admit((k.height() as u64 + 3).pow(g.n() as u32 + 1)) {
                continue;
            }
            let result = (|| {
                let poly = gen_chromatic_poly(g, &k, budget)?;
                let mut pairs = Vec::new();
                for q in 0..=k.height() + 2 {
                    pairs.push((poly.eval_int(q as i64)?, count_colorings_brute(g, &k, q, budget)?));
                }
                Ok(pairs)
            })();
            run.case(g, Some(&k), result, |pairs| {
                for (q, (a, b)) in pairs.iter().enumerate() {
                    if a != b {
                        return Some(format!("value at q={q}: polynomial {a} vs brute count {b}"));
                    }
                }
                None
            });
        }
    }
    run.finish()
}

/// Named suites exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Mainthm,
    Stanley,
    Chmply,
    Discriminant,
    GsymDual,
    Denominator,
    Oracles,
    Tfunction,
    Bijection,
    Join,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "mainthm" => Suite::Mainthm,
            "stanley" => Suite::Stanley,
            "chmply" => Suite::Chmply,
            "discriminant" => Suite::Discriminant,
            "gsym_dual" | "gsym-dual" => Suite::GsymDual,
            "denominator" => Suite::Denominator,
            "oracles" => Suite::Oracles,
            "tfunction" => Suite::Tfunction,
            "bijection" => Suite::Bijection,
            "join" => Suite::Join,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub const NAMES: &'static [&'static str] = &[
        "mainthm",
        "stanley",
        "chmply",
        "discriminant",
        "gsym_dual",
        "denominator",
        "oracles",
        "tfunction",
        "bijection",
        "join",
        "all",
    ];
}

/// Runs the checks of a suite; `all` runs every check once.
pub fn run_verify(suite: Suite, budget: u64) -> Vec<Report> {
    match suite {
        Suite::Mainthm => vec![check_three_route_csf(budget), check_generalized_csf(budget)],
        Suite::Stanley => vec![check_stanley(budget)],
        Suite::Chmply => vec![check_generalized_poly(budget), check_counting_consistency(budget)],
        Suite::Discriminant => vec![check_discriminant(budget)],
        Suite::GsymDual => vec![check_gsym_dual(budget)],
        Suite::Denominator => vec![check_denominator(budget)],
        Suite::Oracles => vec![check_oracles(budget)],
        Suite::Tfunction => vec![check_tfunction(budget)],
        Suite::Bijection => vec![check_bijection(budget)],
        Suite::Join => vec![check_join(budget)],
        Suite::All => {
            let mut reports = Vec::new();
            reports.push(check_three_route_csf(budget));
            reports.push(check_generalized_csf(budget));
            reports.push(check_stanley(budget));
            reports.push(check_generalized_poly(budget));
            reports.push(check_counting_consistency(budget));
            reports.push(check_denominator(budget));
            reports.push(check_oracles(budget));
            reports.push(check_gsym_dual(budget));
            reports.push(check_discriminant(budget));
            reports.push(check_tfunction(budget));
            reports.push(check_bijection(budget));
            reports.push(check_join(budget));
            reports
        }
    }
}

/// Exit status for a batch of reports: 0 all pass, 2 any failure,
/// 3 skips without failures.
pub fn exit_status(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| !r.pass()) {
        2
    } else if reports.iter().any(|r| r.skipped > 0) {
        3
    } else {
        0
    }
}
