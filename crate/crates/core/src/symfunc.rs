//! Integer partitions, expressions in the power-sum basis, monomial symmetric
//! polynomials and exact expansion into a finite number of variables.
//!
//! Power-sum coefficients are exact rationals. Expansions with all entries
//! equal to one carry integer coefficients, which some callers assert; for
//! general colour tuples the chromatic symmetric function genuinely has
//! fractional coordinates in the power-sum basis, so integers would be too
//! narrow a type.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::arith::{expect_integer, rat_to_string, Int, Rat};
use crate::error::Result;

/// Weakly decreasing list of positive integers; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    /// Multiplicity of each distinct part value.
    pub fn part_multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Concatenation of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Every part multiplied by a constant.
    pub fn scaled(&self, c: u32) -> Partition {
        assert!(c > 0);
        Partition::new(self.0.iter().map(|p| p * c).collect())
    }

    /// `z_lambda = prod_r r^{m_r} m_r!`, the centralizer order used in
    /// power-sum changes of basis.
    pub fn z(&self) -> Int {
        let mut acc = Int::one();
        for (part, mult) in self.part_multiplicities() {
            for _ in 0..mult {
                acc *= Int::from(part);
            }
            acc *= crate::arith::factorial(mult as u64);
        }
        acc
    }

    /// Serialization: descending comma-joined parts, e.g. `"3,1,1"`.
    pub fn to_compact_string(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Graded-lex: by weight first, then lexicographically on the part lists.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact_string())
    }
}

/// All partitions of `d` with parts bounded by `max_part`, descending-lex.
pub fn partitions_bounded(d: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let hi = remaining.min(max);
        for next in (1..=hi).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(d, max_part, &mut current, &mut out);
    out
}

pub fn partitions(d: u32) -> Vec<Partition> {
    partitions_bounded(d, d.max(1))
}

/// Linear combination of power-sum basis elements `p_lambda`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumExpr {
    terms: BTreeMap<Partition, Rat>,
}

impl PowerSumExpr {
    pub fn zero() -> PowerSumExpr {
        PowerSumExpr::default()
    }

    pub fn one() -> PowerSumExpr {
        let mut e = PowerSumExpr::zero();
        e.add_term(Partition::empty(), Rat::one());
        e
    }

    pub fn single(lambda: Partition, coeff: Rat) -> PowerSumExpr {
        let mut e = PowerSumExpr::zero();
        e.add_term(lambda, coeff);
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rat) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &PowerSumExpr) -> PowerSumExpr {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rat) -> PowerSumExpr {
        let mut out = PowerSumExpr::zero();
        for (l, coeff) in &self.terms {
            out.add_term(l.clone(), coeff * c);
        }
        out
    }

    /// `p_lambda * p_mu = p_{lambda union mu}` extended bilinearly.
    pub fn mul(&self, other: &PowerSumExpr) -> PowerSumExpr {
        let mut out = PowerSumExpr::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &other.terms {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn integer_terms(&self, context: &str) -> Result<Vec<(Partition, Int)>> {
        self.terms
            .iter()
            .map(|(l, c)| Ok((l.clone(), expect_integer(c, context)?)))
            .collect()
    }

    /// JSON in graded-lex partition order, coefficients as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                serde_json::json!({ "lambda": l.parts(), "coef": rat_to_string(c) })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(l, c)| format!("{} p_({})", rat_to_string(c), l.to_compact_string()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Polynomial in `nvars` commuting variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NVarPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl NVarPoly {
    pub fn zero(nvars: usize) -> NVarPoly {
        NVarPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> NVarPoly {
        let mut p = NVarPoly::zero(nvars);
        p.add_term(vec![0; nvars], Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coeff: Rat) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(exp.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &NVarPoly) -> NVarPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rat) -> NVarPoly {
        let mut out = NVarPoly::zero(self.nvars);
        for (e, coeff) in &self.terms {
            out.add_term(e.clone(), coeff * c);
        }
        out
    }

    pub fn mul(&self, other: &NVarPoly) -> NVarPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = NVarPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Applies a permutation of the variables (`perm[i]` = new index of `i`).
    pub fn permute_vars(&self, perm: &[usize]) -> NVarPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = NVarPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exp = vec![0; self.nvars];
            for (i, &d) in e.iter().enumerate() {
                exp[perm[i]] = d;
            }
            out.add_term(exp, c.clone());
        }
        out
    }

    /// Substitutes 1 for every variable (sums the coefficients).
    pub fn eval_all_ones(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "exp": e, "coef": rat_to_string(c) }))
            .collect();
        serde_json::json!({ "nvars": self.nvars, "terms": terms })
    }
}

/// The power sum `p_r = x_1^r + ... + x_N^r`.
pub fn power_sum_poly(r: u32, nvars: usize) -> NVarPoly {
    let mut p = NVarPoly::zero(nvars);
    for i in 0..nvars {
        let mut exp = vec![0; nvars];
        exp[i] = r;
        p.add_term(exp, Rat::one());
    }
    p
}

/// Substitutes `p_r -> x_1^r + ... + x_N^r` and multiplies out exactly.
pub fn powersum_expand(expr: &PowerSumExpr, nvars: usize) -> NVarPoly {
    assert!(nvars >= 1);
    let mut out = NVarPoly::zero(nvars);
    for (lambda, coeff) in expr.terms() {
        let mut prod = NVarPoly::one(nvars);
        for &part in lambda.parts() {
            prod = prod.mul(&power_sum_poly(part, nvars));
        }
        out = out.add(&prod.scalar_mul(coeff));
    }
    out
}

/// Monomial symmetric polynomial `m_lambda(x_1..x_N)`: the sum over distinct
/// permutations of `lambda` padded with zeros. Zero when `lambda` has more
/// parts than variables.
pub fn monomial_sym(lambda: &Partition, nvars: usize) -> NVarPoly {
    let mut out = NVarPoly::zero(nvars);
    if lambda.num_parts() > nvars {
        return out;
    }
    let mut padded: Vec<u32> = lambda.parts().to_vec();
    padded.resize(nvars, 0);
    padded.sort_unstable();
    // iterate distinct permutations in lexicographic order
    loop {
        out.add_term(padded.clone(), Rat::one());
        if !next_permutation(&mut padded) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
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

/// Multiplier relating the augmented monomial `M_lambda` to `m_lambda`:
/// the product of factorials of the part multiplicities.
pub fn augmented_monomial_count(lambda: &Partition) -> Int {
    let mut acc = Int::one();
    for (_, mult) in lambda.part_multiplicities() {
        acc *= crate::arith::factorial(mult as u64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};

    fn lam(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_order_is_graded_lex() {
        let mut v = vec![lam(&[3]), lam(&[1, 1, 1]), lam(&[2, 1]), lam(&[2]), Partition::empty()];
        v.sort();
        assert_eq!(
            v,
            vec![Partition::empty(), lam(&[2]), lam(&[1, 1, 1]), lam(&[2, 1]), lam(&[3])]
        );
    }

    #[test]
    fn z_values() {
        assert_eq!(lam(&[1, 1]).z(), int(2));
        assert_eq!(lam(&[2]).z(), int(2));
        assert_eq!(lam(&[2, 1]).z(), int(2));
        assert_eq!(lam(&[3, 1, 1]).z(), int(6)); // 3 * 1^2 * 2!
    }

    #[test]
    fn partitions_of_four() {
        let got = partitions(4);
        assert_eq!(got.len(), 5);
        assert!(got.contains(&lam(&[2, 1, 1])));
        let bounded = partitions_bounded(4, 2);
        assert_eq!(bounded.len(), 3); // (2,2), (2,1,1), (1,1,1,1)
    }

    #[test]
    fn expand_square_of_p1() {
        let e = PowerSumExpr::single(lam(&[1, 1]), rat_int(1));
        let got = powersum_expand(&e, 2);
        let mut expect = NVarPoly::zero(2);
        expect.add_term(vec![2, 0], rat_int(1));
        expect.add_term(vec![1, 1], rat_int(2));
        expect.add_term(vec![0, 2], rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn expand_p2_two_vars() {
        let e = PowerSumExpr::single(lam(&[2]), rat_int(1));
        let got = powersum_expand(&e, 2);
        let mut expect = NVarPoly::zero(2);
        expect.add_term(vec![2, 0], rat_int(1));
        expect.add_term(vec![0, 2], rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn expand_difference_matches_hand_expansion() {
        // p_(2,1) - p_(3) at N=2 equals x1^2 x2 + x1 x2^2
        let mut e = PowerSumExpr::zero();
        e.add_term(lam(&[2, 1]), rat_int(1));
        e.add_term(lam(&[3]), rat_int(-1));
        let got = powersum_expand(&e, 2);
        let mut expect = NVarPoly::zero(2);
        expect.add_term(vec![2, 1], rat_int(1));
        expect.add_term(vec![1, 2], rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn monomial_sym_cases() {
        let m21 = monomial_sym(&lam(&[2, 1]), 2);
        let mut expect = NVarPoly::zero(2);
        expect.add_term(vec![2, 1], rat_int(1));
        expect.add_term(vec![1, 2], rat_int(1));
        assert_eq!(m21, expect);

        assert!(monomial_sym(&lam(&[1, 1, 1]), 2).is_zero());

        let m2 = monomial_sym(&lam(&[2]), 3);
        let mut expect = NVarPoly::zero(3);
        expect.add_term(vec![2, 0, 0], rat_int(1));
        expect.add_term(vec![0, 2, 0], rat_int(1));
        expect.add_term(vec![0, 0, 2], rat_int(1));
        assert_eq!(m2, expect);
    }

    #[test]
    fn augmented_counts() {
        assert_eq!(augmented_monomial_count(&lam(&[1, 1])), int(2));
        assert_eq!(augmented_monomial_count(&lam(&[2, 1])), int(1));
        assert_eq!(augmented_monomial_count(&lam(&[2, 2, 1])), int(2));
    }

    #[test]
    fn augmented_equals_scaled_monomial() {
        // M_lambda = (prod r_j!) m_lambda, checked for |lambda| <= 5, N <= 4
        // via the defining sum over ordered index tuples of distinct variables.
        for d in 1..=5u32 {
            for lambda in partitions(d) {
                for nvars in 1..=4usize {
                    let lhs = augmented_sum_over_tuples(&lambda, nvars);
                    let rhs = monomial_sym(&lambda, nvars)
                        .scalar_mul(&Rat::from_integer(augmented_monomial_count(&lambda)));
                    assert_eq!(lhs, rhs, "lambda {lambda:?} N={nvars}");
                }
            }
        }
    }

    // Independent oracle: sum x_{i_1}^{l_1} ... x_{i_k}^{l_k} over ordered
    // tuples of DISTINCT indices.
    fn augmented_sum_over_tuples(lambda: &Partition, nvars: usize) -> NVarPoly {
        let k = lambda.num_parts();
        let mut out = NVarPoly::zero(nvars);
        let mut idx = vec![0usize; k];
        'outer: loop {
            let distinct = (0..k).all(|a| (0..a).all(|b| idx[a] != idx[b]));
            if distinct {
                let mut exp = vec![0u32; nvars];
                for (part, &i) in lambda.parts().iter().zip(&idx) {
                    exp[i] += part;
                }
                out.add_term(exp, rat_int(1));
            }
            for pos in (0..k).rev() {
                idx[pos] += 1;
                if idx[pos] < nvars {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        out
    }

    #[test]
    fn expand_is_ring_homomorphism_spot() {
        let a = PowerSumExpr::single(lam(&[2]), rat_int(3));
        let b = PowerSumExpr::single(lam(&[1]), rat_int(-2));
        let lhs = powersum_expand(&a.mul(&b), 3);
        let rhs = powersum_expand(&a, 3).mul(&powersum_expand(&b, 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn compact_string_format() {
        assert_eq!(lam(&[3, 1, 1]).to_compact_string(), "3,1,1");
        assert_eq!(Partition::empty().to_compact_string(), "");
    }

    #[test]
    fn expr_json_order() {
        let mut e = PowerSumExpr::zero();
        e.add_term(lam(&[3]), rat_int(1));
        e.add_term(lam(&[1, 1, 1]), rat_int(2));
        let js = e.to_json();
        assert_eq!(js["terms"][0]["lambda"], serde_json::json!([1, 1, 1]));
        assert_eq!(js["terms"][1]["lambda"], serde_json::json!([3]));
    }
}
