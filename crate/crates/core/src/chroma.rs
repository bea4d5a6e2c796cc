//! Generalized chromatic polynomials and chromatic symmetric functions of a
//! graph, each computed along independent routes:
//!
//! * brute-force multicoloring counts and stable-tuple counts;
//! * expansions over the weighted bond lattice weighted by root
//!   multiplicities (polynomial and symmetric-function versions);
//! * the Moebius-function expansion over the classical bond lattice;
//! * the clique-join reduction to ordinary colorings.
//!
//! A multicoloring assigns vertex `i` a set of `k_i` colours with adjacent
//! colour sets disjoint. For tuples with an entry above one the polynomial
//! `pi^G_k(q)` has fractional monomial coefficients (it is a sum of binomial
//! coefficients `C(q, k)`), and the power-sum coordinates of the chromatic
//! symmetric function are fractional too, so every coefficient here is an
//! exact rational.

use num::{One, Signed, Zero};

use crate::arith::{expect_integer, factorial, rat_to_string, sign_pow, Int, Rat};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{bond_lattice, mobius_all, weighted_bond_lattice};
use crate::root::{RootVector, WeightVector};
use crate::root_mult::MultTable;
use crate::symfunc::{partitions, NVarPoly, Partition, PowerSumExpr};

/// Default cap on elementary steps for the brute-force routes.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Polynomial in the colour count `q`, low-to-high exact rational
/// coefficients with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChromaticPolynomial {
    coeffs: Vec<Rat>,
}

impl ChromaticPolynomial {
    pub fn zero() -> Self {
        ChromaticPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        ChromaticPolynomial { coeffs }
    }

    /// The monomial `c * q^d`.
    pub fn monomial(d: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scalar_mul(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, q: i64) -> Rat {
        let qr = Rat::from_integer(Int::from(q));
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * qr.clone() + c;
        }
        acc
    }

    /// Values at integers are counts, hence integers.
    pub fn eval_int(&self, q: i64) -> Result<Int> {
        expect_integer(&self.eval(q), &format!("polynomial value at q = {q}"))
    }

    pub fn linear_coefficient(&self) -> Rat {
        self.coeff(1)
    }

    /// `{"coeffs": [strings low-to-high]}`, rationals rendered as `num/den`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => rat_to_string(c),
                1 => format!("{} q", rat_to_string(c)),
                _ => format!("{} q^{}", rat_to_string(c), i),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// `C(q, k)` as a polynomial in `q`.
pub fn binomial_poly(k: u32) -> ChromaticPolynomial {
    // q (q-1) ... (q-k+1) / k!
    let mut acc = ChromaticPolynomial::monomial(0, Rat::one());
    for t in 0..k {
        let linear = ChromaticPolynomial::from_coeffs(vec![
            -Rat::from_integer(Int::from(t)),
            Rat::one(),
        ]);
        acc = acc.mul(&linear);
    }
    acc.scalar_mul(&(Rat::one() / Rat::from_integer(factorial(k as u64))))
}

/// `C(m q, d)` as a polynomial in `q`, for a constant integer `m`.
fn binomial_poly_scaled(m: &Int, d: u32) -> ChromaticPolynomial {
    let mut acc = ChromaticPolynomial::monomial(0, Rat::one());
    for t in 0..d {
        let linear = ChromaticPolynomial::from_coeffs(vec![
            -Rat::from_integer(Int::from(t)),
            Rat::from_integer(m.clone()),
        ]);
        acc = acc.mul(&linear);
    }
    acc.scalar_mul(&(Rat::one() / Rat::from_integer(factorial(d as u64))))
}

fn check_budget(estimate: &Int, budget: u64) -> Result<()> {
    if *estimate > Int::from(budget) {
        Err(Error::BudgetExceeded { limit: budget })
    } else {
        Ok(())
    }
}

fn assignment_count_estimate(g: &Graph, k: &WeightVector, q: u32) -> Int {
    let mut est = Int::one();
    for v in 1..=g.n() {
        est *= crate::arith::binomial(&Int::from(q), k.get(v) as u64);
        if est.is_zero() {
            break;
        }
    }
    est
}

/// Number of proper multicolorings with colours drawn from `{1..q}`,
/// counted by direct enumeration with adjacency pruning.
pub fn count_colorings_brute(g: &Graph, k: &WeightVector, q: u32, budget: u64) -> Result<Int> {
    assert_eq!(g.n(), k.len());
    check_budget(&assignment_count_estimate(g, k, q), budget)?;
    let subsets = subsets_by_size(q);
    let mut assigned: Vec<u64> = vec![0; g.n() + 1];
    fn rec(
        g: &Graph,
        k: &WeightVector,
        subsets: &[Vec<u64>],
        assigned: &mut Vec<u64>,
        v: usize,
        count: &mut Int,
    ) {
        if v > g.n() {
            *count += 1;
            return;
        }
        let need = k.get(v) as usize;
        if need >= subsets.len() {
            return; // fewer colours than the vertex requires
        }
        // colours already used by assigned neighbours of v
        let mut blocked = 0u64;
        for u in 1..v {
            if g.has_edge(u, v) {
                blocked |= assigned[u];
            }
        }
        for &set in &subsets[need] {
            if set & blocked == 0 {
                assigned[v] = set;
                rec(g, k, subsets, assigned, v + 1, count);
            }
        }
        assigned[v] = 0;
    }
    let mut count = Int::zero();
    rec(g, k, &subsets, &mut assigned, 1, &mut count);
    Ok(count)
}

/// All subsets of `{0..q-1}` (as bitmasks) grouped by size.
fn subsets_by_size(q: u32) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new(); q as usize + 1];
    for mask in 0..(1u64 << q) {
        out[mask.count_ones() as usize].push(mask);
    }
    out
}

/// For each `k`, the number of ordered `k`-tuples of non-empty stable sets
/// whose multiset union realizes the colour tuple. Two equal sets in
/// different positions give one tuple, not two.
pub fn stable_tuple_counts(
    g: &Graph,
    k: &WeightVector,
    budget: u64,
) -> Result<std::collections::BTreeMap<u32, Int>> {
    assert_eq!(g.n(), k.len());
    let states: Int = k.entries().iter().map(|&c| Int::from(c + 1)).product();
    let est = states * Int::from(1u64 << g.n());
    check_budget(&est, budget)?;

    let stable = g.stable_masks();
    // counts by number of parts, memoized on the remaining vector
    let mut memo: std::collections::HashMap<RootVector, Vec<Int>> = Default::default();
    fn rec(
        g: &Graph,
        stable: &[u64],
        remaining: &RootVector,
        memo: &mut std::collections::HashMap<RootVector, Vec<Int>>,
    ) -> Vec<Int> {
        if remaining.is_zero() {
            return vec![Int::one()];
        }
        if let Some(v) = memo.get(remaining) {
            return v.clone();
        }
        let mut acc: Vec<Int> = Vec::new();
        for &mask in stable {
            let mut coords = remaining.coords().to_vec();
            let mut ok = true;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if coords[v - 1] == 0 {
                    ok = false;
                    break;
                }
                coords[v - 1] -= 1;
            }
            if !ok {
                continue;
            }
            let sub = rec(g, stable, &RootVector::new(coords), memo);
            if acc.len() < sub.len() + 1 {
                acc.resize(sub.len() + 1, Int::zero());
            }
            for (parts, c) in sub.iter().enumerate() {
                acc[parts + 1] += c;
            }
        }
        memo.insert(remaining.clone(), acc.clone());
        acc
    }
    let by_parts = rec(g, &stable, &k.eta(), &mut memo);
    let mut out = std::collections::BTreeMap::new();
    for (parts, c) in by_parts.into_iter().enumerate() {
        if !c.is_zero() {
            out.insert(parts as u32, c);
        }
    }
    Ok(out)
}

/// The generalized chromatic polynomial via stable-tuple counts:
/// `pi^G_k(q) = sum_k |P_k| C(q, k)`.
pub fn gen_chromatic_poly(g: &Graph, k: &WeightVector, budget: u64) -> Result<ChromaticPolynomial> {
    let counts = stable_tuple_counts(g, k, budget)?;
    let mut acc = ChromaticPolynomial::zero();
    for (parts, c) in &counts {
        acc = acc.add(&binomial_poly(*parts).scalar_mul(&Rat::from_integer(c.clone())));
    }
    Ok(acc)
}

/// The chromatic symmetric function restricted to colours `{1..nvars}`:
/// the sum over proper multicolorings of the product of their colour
/// variables, by direct enumeration.
pub fn csf_bruteforce(g: &Graph, k: &WeightVector, nvars: usize, budget: u64) -> Result<NVarPoly> {
    assert_eq!(g.n(), k.len());
    check_budget(&assignment_count_estimate(g, k, nvars as u32), budget)?;
    let subsets = subsets_by_size(nvars as u32);
    let mut assigned: Vec<u64> = vec![0; g.n() + 1];
    let mut out = NVarPoly::zero(nvars);
    fn rec(
        g: &Graph,
        k: &WeightVector,
        subsets: &[Vec<u64>],
        assigned: &mut Vec<u64>,
        v: usize,
        out: &mut NVarPoly,
    ) {
        if v > g.n() {
            let nvars = out.nvars();
            let mut exp = vec![0u32; nvars];
            for u in 1..=g.n() {
                let mut rest = assigned[u];
                while rest != 0 {
                    let c = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    exp[c] += 1;
                }
            }
            out.add_term(exp, Rat::one());
            return;
        }
        let need = k.get(v) as usize;
        if need >= subsets.len() {
            return;
        }
        let mut blocked = 0u64;
        for u in 1..v {
            if g.has_edge(u, v) {
                blocked |= assigned[u];
            }
        }
        for &set in &subsets[need] {
            if set & blocked == 0 {
                assigned[v] = set;
                rec(g, k, subsets, assigned, v + 1, out);
            }
        }
        assigned[v] = 0;
    }
    rec(g, k, &subsets, &mut assigned, 1, &mut out);
    Ok(out)
}

/// Coefficient of `t^d` in `prod_i (1 + t x_i^h)^m` written in the
/// power-sum basis: `sum_{mu |- d} (-1)^{d - len(mu)} m^{len(mu)} p_{h mu} / z_mu`.
///
/// This is the exact weight with which a bond part of height `h` and root
/// multiplicity `m`, repeated `d` times, enters the chromatic symmetric
/// function: the product side of the denominator identity offers `m`
/// interchangeable factors per colour variable, and the `d` repeats choose
/// distinct (variable, factor) slots. For `d = 1` it collapses to `m p_h`.
fn repeated_part_weight(m: &Int, h: u32, d: u32) -> PowerSumExpr {
    let mut out = PowerSumExpr::zero();
    for mu in partitions(d) {
        let sign = sign_pow(d as u64 + mu.num_parts() as u64);
        let m_pow = num::pow::pow(m.clone(), mu.num_parts());
        let coeff = sign * Rat::new(m_pow, mu.z());
        out.add_term(mu.scaled(h), coeff);
    }
    out
}

/// Chromatic symmetric function in the power-sum basis from root
/// multiplicities, summed over the weighted bond lattice:
///
/// ```text
///   X^G_k = sum_bonds (-1)^{ht(eta) + #parts} prod_{distinct parts} w(m, h, d)
/// ```
///
/// where `w` is the repeated-part weight above. Bonds containing a part
/// that is not a root (multiplicity zero) contribute nothing. With all
/// entries of `k` equal to one every part is distinct and the weight is
/// `mult * p_h`, giving the classical signed product formula.
pub fn csf_from_mults(g: &Graph, k: &WeightVector, mults: &MultTable) -> Result<PowerSumExpr> {
    k.require_support()?;
    let eta = k.eta();
    mults.require_bound(eta.height())?;
    let bonds = weighted_bond_lattice(g, k)?;
    let mut acc = PowerSumExpr::zero();
    for bond in &bonds {
        let sign = sign_pow(eta.height() as u64 + bond.num_parts() as u64);
        let mut factor = PowerSumExpr::one();
        for (part, d) in bond.distinct_parts() {
            let m = mults.get(part);
            if m.is_zero() {
                factor = PowerSumExpr::zero();
                break;
            }
            factor = factor.mul(&repeated_part_weight(&m, part.height(), d));
        }
        if !factor.is_zero() {
            acc = acc.add(&factor.scalar_mul(&sign));
        }
    }
    Ok(acc)
}

/// Stanley's expansion: `X_G = sum_{pi in bond lattice} mu(0, pi) p_{type(pi)}`.
pub fn csf_mobius(g: &Graph) -> PowerSumExpr {
    let lattice = bond_lattice(g);
    let mob = mobius_all(&lattice);
    let mut acc = PowerSumExpr::zero();
    for (pi, mu) in lattice.iter().zip(mob) {
        acc.add_term(pi.type_partition(), Rat::from_integer(mu));
    }
    acc
}

/// The generalized chromatic polynomial from root multiplicities:
///
/// ```text
///   pi^G_k(q) = sum_bonds (-1)^{ht(eta) + #parts} prod_{distinct} C(q mult, d)
/// ```
pub fn chromatic_poly_from_mults(
    g: &Graph,
    k: &WeightVector,
    mults: &MultTable,
) -> Result<ChromaticPolynomial> {
    k.require_support()?;
    let eta = k.eta();
    mults.require_bound(eta.height())?;
    let bonds = weighted_bond_lattice(g, k)?;
    let mut acc = ChromaticPolynomial::zero();
    for bond in &bonds {
        let sign = sign_pow(eta.height() as u64 + bond.num_parts() as u64);
        let mut factor = ChromaticPolynomial::monomial(0, Rat::one());
        for (part, d) in bond.distinct_parts() {
            let m = mults.get(part);
            if m.is_zero() {
                factor = ChromaticPolynomial::zero();
                break;
            }
            factor = factor.mul(&binomial_poly_scaled(&m, d));
        }
        if !factor.is_zero() {
            acc = acc.add(&factor.scalar_mul(&sign));
        }
    }
    Ok(acc)
}

/// The chromatic discriminant: the absolute value of the linear coefficient
/// of the ordinary chromatic polynomial. Triple-checked against the
/// `p_(n)` coefficient of the Moebius expansion and against `mult(1,...,1)`;
/// any disagreement is an error, never silently resolved.
pub fn chromatic_discriminant(g: &Graph, mults: &MultTable) -> Result<Int> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let ones = WeightVector::ones(g.n());
    let pi = gen_chromatic_poly(g, &ones, DEFAULT_BUDGET)?;
    let from_poly = expect_integer(&pi.linear_coefficient(), "linear coefficient")?.abs();

    let x = csf_mobius(g);
    let top = Partition::new(vec![g.n() as u32]);
    let from_csf = expect_integer(&x.coeff(&top), "p_(n) coefficient")?.abs();

    let from_mults = mults.ones_multiplicity(g)?;

    if from_poly != from_csf || from_csf != from_mults {
        return Err(Error::DiscriminantMismatch {
            detail: format!(
                "graph {}: |[q] pi| = {from_poly}, |[p_(n)] X| = {from_csf}, mult(1..1) = {from_mults}",
                g.describe()
            ),
        });
    }
    Ok(from_mults)
}

/// The clique join `G(k)`: a `k_j`-clique per vertex `j` in the support,
/// with complete bipartite connections between cliques of adjacent vertices.
/// Satisfies `k! pi^G_k(q) = pi^{G(k)}(q)`.
pub fn join_graph(g: &Graph, k: &WeightVector) -> Result<Graph> {
    k.require_support()?;
    let support = k.support();
    let mut id_of: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    let mut next = 1usize;
    for &j in &support {
        let ids: Vec<usize> = (0..k.get(j)).map(|t| next + t as usize).collect();
        next += k.get(j) as usize;
        id_of.insert(j, ids);
    }
    let total = next - 1;
    let mut pairs = Vec::new();
    for &j in &support {
        let ids = &id_of[&j];
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                pairs.push((ids[a], ids[b]));
            }
        }
    }
    for (i, &j1) in support.iter().enumerate() {
        for &j2 in support.iter().skip(i + 1) {
            if g.has_edge(j1, j2) {
                for &a in &id_of[&j1] {
                    for &b in &id_of[&j2] {
                        pairs.push((a, b));
                    }
                }
            }
        }
    }
    Graph::new(total, pairs)
}

/// Deletion-contraction evaluation of the ordinary chromatic polynomial,
/// with simple-graph contraction (parallel edges collapse). Exponential and
/// only used as an independent oracle to cross-check the other routes.
pub fn deletion_contraction_poly(g: &Graph) -> ChromaticPolynomial {
    match g.edges().next() {
        None => ChromaticPolynomial::monomial(g.n(), Rat::one()),
        Some((u, v)) => {
            let deleted = Graph::new(g.n(), g.edges().filter(|&e| e != (u, v))).unwrap();
            // contract v into u, relabel ids above v down by one
            let relabel = |w: usize| {
                let w = if w == v { u } else { w };
                if w > v {
                    w - 1
                } else {
                    w
                }
            };
            let contracted_edges: Vec<(usize, usize)> = g
                .edges()
                .filter(|&e| e != (u, v))
                .map(|(a, b)| (relabel(a), relabel(b)))
                .filter(|&(a, b)| a != b)
                .collect();
            let contracted = Graph::new(g.n() - 1, contracted_edges).unwrap();
            let del = deletion_contraction_poly(&deleted);
            let con = deletion_contraction_poly(&contracted);
            del.add(&con.scalar_mul(&-Rat::one()))
        }
    }
}
