//! Graph analogues of the elementary and power-sum symmetric functions.
//!
//! `e^G_i` is the sum of `v^{chi(S)}` over stable sets `S` of size `i`.
//! The graph power sums are defined through the generating relation
//!
//! ```text
//!   -log(1 - e_1^G X + e_2^G X^2 - ...) = p_1^G X + p_2^G X^2/2 + ...
//! ```
//!
//! and are recomputed independently from root multiplicities in closed form:
//! the coefficient of `v^gamma` in `p_n^G` (for `ht(gamma) = n`) is
//! `sum_{d | gcd(gamma)} (n/d) mult(gamma/d)`, which also exhibits every
//! coefficient as a non-negative integer.

use num::{One, Zero};

use crate::arith::{divisors, Int, Rat};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::root::{RootVector, WeightVector};
use crate::root_mult::{vectors_up_to_height, MultTable};
use crate::series::QSeries;
use crate::symfunc::{monomial_sym, partitions_bounded, NVarPoly};

/// `e^G_i`: homogeneous of height `i`, one unit term per stable `i`-set.
/// Zero when `i` exceeds the independence number.
pub fn elementary_g(g: &Graph, i: u32) -> QSeries {
    elementary_g_bounded(g, i, i)
}

fn elementary_g_bounded(g: &Graph, i: u32, bound: u32) -> QSeries {
    let mut s = QSeries::zero(g.n(), bound);
    for mask in g.stable_masks_of_size(i as usize) {
        let set = Graph::mask_to_set(mask);
        let mut coords = vec![0u32; g.n()];
        for v in set {
            coords[v - 1] = 1;
        }
        s.add_term(RootVector::new(coords), Rat::one());
    }
    s
}

/// `e^G_lambda = prod_i e^G_{lambda_i}`, truncated at the partition weight.
pub fn elementary_g_partition(g: &Graph, lambda: &crate::symfunc::Partition) -> QSeries {
    let bound = lambda.weight();
    let mut acc = QSeries::one(g.n(), bound);
    for &part in lambda.parts() {
        acc = acc
            .mul(&elementary_g_bounded(g, part, bound))
            .expect("same ambient dimension");
    }
    acc
}

/// Builds the signed generating series `sum_i (-1)^i e_i^G X^i` as a series
/// in `n + 1` coordinates, the last one carrying the degree in `X`. Every
/// generator term has equal X-degree and v-height, so total-height
/// truncation at `2 * bound` is exact for X-degrees up to `bound`.
fn signed_elementary_series(g: &Graph, bound: u32) -> QSeries {
    let n = g.n();
    let mut s = QSeries::zero(n + 1, 2 * bound);
    for set in g.stable_sets(bound as usize) {
        let size = set.len() as u32;
        let mut coords = vec![0u32; n + 1];
        for &v in &set {
            coords[v - 1] = 1;
        }
        coords[n] = size;
        let sign = if size % 2 == 0 { Rat::one() } else { -Rat::one() };
        s.add_term(RootVector::new(coords), sign);
    }
    s
}

/// `p_n^G` from the defining log relation: `n` times the coefficient of
/// `X^n` in `-log(sum_i (-1)^i e_i^G X^i)`. Coefficients are asserted
/// integral; a fractional value would signal a bug, not be rounded.
pub fn powersum_g_via_log(g: &Graph, n: u32) -> Result<QSeries> {
    assert!(n >= 1);
    let series = signed_elementary_series(g, n);
    let neg_log = series.log()?.neg();
    // slice out the X^n layer and drop the X coordinate
    let mut out = QSeries::zero(g.n(), n);
    for (exp, c) in neg_log.terms() {
        if exp.coords()[g.n()] != n {
            continue;
        }
        let coords = exp.coords()[..g.n()].to_vec();
        out.add_term(RootVector::new(coords), c * Rat::from_integer(Int::from(n)));
    }
    out.integer_terms(&format!("p_{n}^G coefficient"))?;
    Ok(out)
}

/// `p_n^G` in closed form from the multiplicity table: the coefficient of
/// `v^gamma` (at height `n`) is `sum_{d | gcd(gamma)} (n/d) mult(gamma/d)`.
/// Theorem-level guarantee: all coefficients are non-negative integers,
/// which is asserted.
pub fn powersum_g_closed_form(g: &Graph, n: u32, mults: &MultTable) -> Result<QSeries> {
    assert!(n >= 1);
    mults.require_bound(n)?;
    let mut out = QSeries::zero(g.n(), n);
    for gamma in vectors_up_to_height(g.n(), n) {
        if gamma.height() != n {
            continue;
        }
        let mut acc = Int::zero();
        for d in divisors(gamma.gcd()) {
            acc += Int::from(n / d) * mults.get(&gamma.div_exact(d));
        }
        if acc < Int::zero() {
            return Err(Error::IntegralityViolation {
                context: format!("negative p_{n}^G coefficient at {gamma:?}"),
            });
        }
        out.add_term(gamma, Rat::from_integer(acc));
    }
    Ok(out)
}

/// Coefficient extraction from the stable-partition generating function:
/// the sum over stable number partitions `lambda` of weight `ht(eta(k))`
/// of `m_lambda(x_1..x_N)` times the `v^{eta(k)}`-coefficient of
/// `e_lambda^G`. Equals the brute-force chromatic symmetric function.
pub fn t_function_coefficient(
    g: &Graph,
    k: &WeightVector,
    nvars: usize,
    budget: u64,
) -> Result<NVarPoly> {
    k.require_support()?;
    let eta = k.eta();
    let d = eta.height();
    let alpha = g.independence_number() as u32;
    let lambdas = partitions_bounded(d, alpha.max(1));
    let cost = (lambdas.len() as u64)
        .saturating_mul(1 << g.n().min(20))
        .saturating_mul(d as u64 + 1);
    if cost > budget {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let mut out = NVarPoly::zero(nvars);
    for lambda in &lambdas {
        let coeff = elementary_g_partition(g, lambda).coeff(&eta);
        if coeff.is_zero() {
            continue;
        }
        // m_lambda with more parts than variables is the zero specialization
        out = out.add(&monomial_sym(lambda, nvars).scalar_mul(&coeff));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::chroma::{csf_bruteforce, DEFAULT_BUDGET};
    use crate::root_mult::{independence_series, mult_table};
    use crate::symfunc::Partition;

    fn rv(coords: &[u32]) -> RootVector {
        RootVector::new(coords.to_vec())
    }

    #[test]
    fn elementary_basics() {
        let k2 = Graph::complete(2);
        assert_eq!(elementary_g(&k2, 0), QSeries::one(2, 0));
        let e1 = elementary_g(&k2, 1);
        assert_eq!(e1.coeff(&rv(&[1, 0])), rat_int(1));
        assert_eq!(e1.coeff(&rv(&[0, 1])), rat_int(1));
        assert_eq!(e1.num_terms(), 2);
        assert!(elementary_g(&k2, 2).is_zero());
    }

    #[test]
    fn elementary_partition_products() {
        let k2 = Graph::complete(2);
        // (v1 + v2)^2
        let e11 = elementary_g_partition(&k2, &Partition::new(vec![1, 1]));
        assert_eq!(e11.coeff(&rv(&[2, 0])), rat_int(1));
        assert_eq!(e11.coeff(&rv(&[1, 1])), rat_int(2));
        assert_eq!(e11.coeff(&rv(&[0, 2])), rat_int(1));

        assert!(elementary_g_partition(&k2, &Partition::new(vec![2])).is_zero());

        // P3 has a single stable pair {1,3}
        let p3 = Graph::path(3);
        let e21 = elementary_g_partition(&p3, &Partition::new(vec![2, 1]));
        assert_eq!(e21.coeff(&rv(&[2, 0, 1])), rat_int(1));
        assert_eq!(e21.coeff(&rv(&[1, 1, 1])), rat_int(1));
        assert_eq!(e21.coeff(&rv(&[2, 1, 0])), rat_int(0));
        assert_eq!(e21.num_terms(), 3); // (2,0,1), (1,1,1), (1,0,2)
    }

    #[test]
    fn signed_elementary_matches_independence_series() {
        // sum_i (-1)^i e_i^G with X = 1 is the independence series
        for g in [Graph::complete(2), Graph::path(3), Graph::cycle(4), Graph::edgeless(3)] {
            let alpha = g.independence_number() as u32;
            let mut acc = QSeries::zero(g.n(), alpha);
            for i in 0..=alpha {
                let e = elementary_g_bounded(&g, i, alpha);
                let sign = if i % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                acc = acc.add(&e.scalar_mul(&sign)).unwrap();
            }
            assert_eq!(acc, independence_series(&g, alpha), "graph {}", g.describe());
        }
    }

    #[test]
    fn powersum_log_first_degree_is_e1() {
        for g in [Graph::complete(2), Graph::path(4)] {
            let p1 = powersum_g_via_log(&g, 1).unwrap();
            assert_eq!(p1, elementary_g(&g, 1), "graph {}", g.describe());
        }
    }

    #[test]
    fn powersum_log_k2_degree_two() {
        // -log(1 - (v1+v2) X): X^2 coefficient is (v1+v2)^2/2, so p_2 is
        // the full square
        let p2 = powersum_g_via_log(&Graph::complete(2), 2).unwrap();
        assert_eq!(p2.coeff(&rv(&[2, 0])), rat_int(1));
        assert_eq!(p2.coeff(&rv(&[1, 1])), rat_int(2));
        assert_eq!(p2.coeff(&rv(&[0, 2])), rat_int(1));
    }

    #[test]
    fn powersum_log_edgeless_degree_two() {
        let p2 = powersum_g_via_log(&Graph::edgeless(2), 2).unwrap();
        assert_eq!(p2.coeff(&rv(&[2, 0])), rat_int(1));
        assert_eq!(p2.coeff(&rv(&[1, 1])), rat_int(0));
        assert_eq!(p2.coeff(&rv(&[0, 2])), rat_int(1));
    }

    #[test]
    fn closed_form_matches_table_arithmetic() {
        let k2 = Graph::complete(2);
        let t = mult_table(&k2, 2).unwrap();
        let p2 = powersum_g_closed_form(&k2, 2, &t).unwrap();
        // (2/2) mult(1,0) = 1; 2 mult(1,1) = 2
        assert_eq!(p2.coeff(&rv(&[2, 0])), rat_int(1));
        assert_eq!(p2.coeff(&rv(&[1, 1])), rat_int(2));
        assert_eq!(p2.coeff(&rv(&[0, 2])), rat_int(1));
    }

    #[test]
    fn closed_form_degree_one_is_sum_of_units() {
        for g in [Graph::path(3), Graph::cycle(5)] {
            let t = mult_table(&g, 1).unwrap();
            let p1 = powersum_g_closed_form(&g, 1, &t).unwrap();
            assert_eq!(p1, elementary_g(&g, 1), "graph {}", g.describe());
        }
    }

    #[test]
    fn dual_routes_agree() {
        for g in [
            Graph::complete(2),
            Graph::edgeless(2),
            Graph::path(3),
            Graph::complete(3),
            Graph::cycle(4),
            Graph::path(5),
        ] {
            let bound = 5u32;
            let t = mult_table(&g, bound).unwrap();
            for n in 1..=bound {
                let via_log = powersum_g_via_log(&g, n).unwrap();
                let closed = powersum_g_closed_form(&g, n, &t).unwrap();
                assert_eq!(via_log, closed, "graph {} n {n}", g.describe());
            }
        }
    }

    #[test]
    fn homogeneity() {
        let g = Graph::path(4);
        for i in 0..=g.independence_number() as u32 {
            for (exp, _) in elementary_g(&g, i).terms() {
                assert_eq!(exp.height(), i);
            }
        }
        for n in 1..=4u32 {
            for (exp, _) in powersum_g_via_log(&g, n).unwrap().terms() {
                assert_eq!(exp.height(), n);
            }
        }
    }

    #[test]
    fn t_function_k2_ones() {
        let got = t_function_coefficient(&Graph::complete(2), &WeightVector::ones(2), 2, DEFAULT_BUDGET)
            .unwrap();
        let mut expect = NVarPoly::zero(2);
        expect.add_term(vec![1, 1], rat_int(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn t_function_matches_bruteforce() {
        let cases: Vec<(Graph, Vec<u32>)> = vec![
            (Graph::complete(2), vec![1, 1]),
            (Graph::complete(2), vec![2, 2]),
            (Graph::complete(2), vec![2, 1]),
            (Graph::path(3), vec![1, 1, 1]),
            (Graph::path(3), vec![2, 1, 1]),
            (Graph::cycle(4), vec![1, 1, 1, 1]),
        ];
        for (g, entries) in cases {
            let k = WeightVector::new(entries);
            let nvars = k.height() as usize;
            let t = t_function_coefficient(&g, &k, nvars, DEFAULT_BUDGET).unwrap();
            let brute = csf_bruteforce(&g, &k, nvars, DEFAULT_BUDGET).unwrap();
            assert_eq!(t, brute, "graph {} k {:?}", g.describe(), k);
        }
    }
}
