//! Truncated multivariate formal power series over exact rationals.
//!
//! A monomial `v^gamma = v_1^{g_1} ... v_n^{g_n}` stands for the formal
//! exponential `e^{-gamma}`; truncation is by total height `ht(gamma) <= H`,
//! the grading in which every identity we verify lives. Coefficients are
//! `BigRational` throughout; nothing is ever rounded.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::arith::{binomial, expect_integer, factorial, rat_to_string, Int, Rat};
use crate::error::{Error, Result};
use crate::root::RootVector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    n: usize,
    bound: u32,
    /// Non-zero coefficients only, keyed in (height, lex) order.
    terms: BTreeMap<RootVector, Rat>,
}

impl QSeries {
    pub fn zero(n: usize, bound: u32) -> QSeries {
        QSeries { n, bound, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, bound: u32) -> QSeries {
        QSeries::constant(n, bound, Rat::one())
    }

    pub fn constant(n: usize, bound: u32, c: Rat) -> QSeries {
        let mut s = QSeries::zero(n, bound);
        s.add_term(RootVector::zero(n), c);
        s
    }

    pub fn monomial(n: usize, bound: u32, exp: RootVector, c: Rat) -> QSeries {
        assert_eq!(exp.len(), n);
        let mut s = QSeries::zero(n, bound);
        s.add_term(exp, c);
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RootVector, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &RootVector) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&RootVector::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * v^exp`, dropping the term if it cancels or overflows the bound.
    pub fn add_term(&mut self, exp: RootVector, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() || exp.height() > self.bound {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    fn check_same_ambient(&self, other: &QSeries) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn truncated(&self, bound: u32) -> QSeries {
        let mut out = QSeries::zero(self.n, bound);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_same_ambient(other)?;
        let bound = self.bound.min(other.bound);
        let mut out = self.truncated(bound);
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        let mut out = QSeries::zero(self.n, self.bound);
        for (exp, c) in &self.terms {
            out.add_term(exp.clone(), -c.clone());
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rat) -> QSeries {
        let mut out = QSeries::zero(self.n, self.bound);
        for (exp, coeff) in &self.terms {
            out.add_term(exp.clone(), coeff * c);
        }
        out
    }

    /// Convolution truncated at the minimum of the operand bounds.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_same_ambient(other)?;
        let bound = self.bound.min(other.bound);
        let mut out = QSeries::zero(self.n, bound);
        for (ea, ca) in &self.terms {
            let ha = ea.height();
            if ha > bound {
                continue;
            }
            for (eb, cb) in &other.terms {
                if ha + eb.height() > bound {
                    continue;
                }
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        // a = c0 (1 - r) with val(r) >= 1, so 1/a = (1/c0) sum r^m
        let inv_c0 = Rat::one() / c0;
        let mut r = self.scalar_mul(&inv_c0).neg();
        r.add_term(RootVector::zero(self.n), Rat::one());
        let mut acc = QSeries::one(self.n, self.bound);
        let mut power = QSeries::one(self.n, self.bound);
        for _ in 1..=self.bound {
            power = power.mul(&r)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scalar_mul(&inv_c0))
    }

    /// `log(a)` via the Mercator series; requires constant term exactly 1.
    pub fn log(&self) -> Result<QSeries> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let mut u = self.clone();
        u.add_term(RootVector::zero(self.n), -Rat::one());
        let mut acc = QSeries::zero(self.n, self.bound);
        let mut power = QSeries::one(self.n, self.bound);
        for m in 1..=self.bound as i64 {
            power = power.mul(&u)?;
            if power.is_zero() {
                break;
            }
            let sign = if m % 2 == 1 { Rat::one() } else { -Rat::one() };
            acc = acc.add(&power.scalar_mul(&(sign / Rat::from_integer(Int::from(m)))))?;
        }
        Ok(acc)
    }

    /// `exp(a)`; requires constant term exactly 0.
    pub fn exp(&self) -> Result<QSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut acc = QSeries::one(self.n, self.bound);
        let mut power = QSeries::one(self.n, self.bound);
        for m in 1..=self.bound as u64 {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            let inv_fact = Rat::one() / Rat::from_integer(factorial(m));
            acc = acc.add(&power.scalar_mul(&inv_fact))?;
        }
        Ok(acc)
    }

    /// Asserts every coefficient is an integer and returns them.
    pub fn integer_terms(&self, context: &str) -> Result<Vec<(RootVector, Int)>> {
        self.terms
            .iter()
            .map(|(exp, c)| Ok((exp.clone(), expect_integer(c, context)?)))
            .collect()
    }

    /// Canonical JSON: terms in (height, lex) order, rationals as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(exp, c)| {
                serde_json::json!({
                    "exp": exp.coords(),
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "bound": self.bound, "terms": terms })
    }

    /// Human-readable rendering for CLI text output, in canonical term order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (exp, c) in &self.terms {
            let mono: Vec<String> = exp
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("v{}", i + 1)
                    } else {
                        format!("v{}^{}", i + 1, e)
                    }
                })
                .collect();
            let body = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            parts.push(format!("{} {}", rat_to_string(c), body));
        }
        parts.join(" + ")
    }
}

/// `prod_gamma (1 - v^gamma)^{m_gamma}` truncated at `bound`, expanding each
/// factor by the binomial theorem with early truncation.
pub fn power_with_multiplicity(
    n: usize,
    factors: &BTreeMap<RootVector, Int>,
    bound: u32,
) -> Result<QSeries> {
    use num::Signed;
    let mut acc = QSeries::one(n, bound);
    for (gamma, m) in factors {
        if m.is_negative() {
            return Err(Error::NegativeExponent);
        }
        assert!(!gamma.is_zero(), "factor vectors must be non-zero");
        if m.is_zero() {
            continue;
        }
        let h = gamma.height();
        if h > bound {
            continue;
        }
        let mut factor = QSeries::zero(n, bound);
        let mut j = 0u32;
        while j * h <= bound {
            let coeff = Rat::from_integer(binomial(m, j as u64));
            let signed = if j % 2 == 0 { coeff } else { -coeff };
            factor.add_term(gamma.scale(j), signed);
            j += 1;
        }
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn v(coords: &[u32]) -> RootVector {
        RootVector::new(coords.to_vec())
    }

    fn series(n: usize, bound: u32, terms: &[(&[u32], Rat)]) -> QSeries {
        let mut s = QSeries::zero(n, bound);
        for (exp, c) in terms {
            s.add_term(v(exp), c.clone());
        }
        s
    }

    #[test]
    fn telescoping_product_truncates() {
        // (1 - v1)(1 + v1 + v1^2) = 1 - v1^3, which truncates to 1 at H=2
        let a = series(1, 2, &[(&[0], rat_int(1)), (&[1], rat_int(-1))]);
        let b = series(1, 2, &[(&[0], rat_int(1)), (&[1], rat_int(1)), (&[2], rat_int(1))]);
        assert_eq!(a.mul(&b).unwrap(), QSeries::one(1, 2));
    }

    #[test]
    fn product_of_binomials() {
        let a = series(2, 2, &[(&[0, 0], rat_int(1)), (&[1, 0], rat_int(1))]);
        let b = series(2, 2, &[(&[0, 0], rat_int(1)), (&[0, 1], rat_int(1))]);
        let expect = series(
            2,
            2,
            &[
                (&[0, 0], rat_int(1)),
                (&[1, 0], rat_int(1)),
                (&[0, 1], rat_int(1)),
                (&[1, 1], rat_int(1)),
            ],
        );
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = series(2, 3, &[(&[0, 0], rat(1, 2)), (&[2, 1], rat_int(-3))]);
        assert_eq!(a.mul(&QSeries::one(2, 3)).unwrap(), a);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = QSeries::one(2, 3);
        let b = QSeries::one(3, 3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn geometric_inverse() {
        let a = series(1, 3, &[(&[0], rat_int(1)), (&[1], rat_int(-1))]);
        let expect = series(
            1,
            3,
            &[(&[0], rat_int(1)), (&[1], rat_int(1)), (&[2], rat_int(1)), (&[3], rat_int(1))],
        );
        assert_eq!(a.inverse().unwrap(), expect);
        assert_eq!(QSeries::one(1, 3).inverse().unwrap(), QSeries::one(1, 3));
    }

    #[test]
    fn k2_word_count_inverse() {
        // 1/(1 - v1 - v2) at H=2: hand convolution / trace-monoid word count
        let a = series(
            2,
            2,
            &[(&[0, 0], rat_int(1)), (&[1, 0], rat_int(-1)), (&[0, 1], rat_int(-1))],
        );
        let expect = series(
            2,
            2,
            &[
                (&[0, 0], rat_int(1)),
                (&[1, 0], rat_int(1)),
                (&[0, 1], rat_int(1)),
                (&[2, 0], rat_int(1)),
                (&[1, 1], rat_int(2)),
                (&[0, 2], rat_int(1)),
            ],
        );
        assert_eq!(a.inverse().unwrap(), expect);
    }

    #[test]
    fn inverse_requires_nonzero_constant() {
        let a = series(1, 2, &[(&[1], rat_int(1))]);
        assert!(matches!(a.inverse(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn scalar_log_matches_mercator() {
        let a = series(1, 3, &[(&[0], rat_int(1)), (&[1], rat_int(-1))]);
        let expect = series(1, 3, &[(&[1], rat_int(-1)), (&[2], rat(-1, 2)), (&[3], rat(-1, 3))]);
        assert_eq!(a.log().unwrap(), expect);
        assert_eq!(QSeries::one(1, 3).log().unwrap(), QSeries::zero(1, 3));
    }

    #[test]
    fn log_of_product_is_sum_of_logs() {
        let a = series(2, 4, &[(&[0, 0], rat_int(1)), (&[1, 0], rat_int(-1))]);
        let b = series(2, 4, &[(&[0, 0], rat_int(1)), (&[0, 1], rat_int(-1))]);
        let lhs = a.mul(&b).unwrap().log().unwrap();
        let rhs = a.log().unwrap().add(&b.log().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_basics_and_roundtrip() {
        assert_eq!(QSeries::zero(2, 3).exp().unwrap(), QSeries::one(2, 3));
        let e = series(1, 2, &[(&[1], rat_int(1))]).exp().unwrap();
        let expect = series(1, 2, &[(&[0], rat_int(1)), (&[1], rat_int(1)), (&[2], rat(1, 2))]);
        assert_eq!(e, expect);

        // exp(log(1 - v1 - v2)) = 1 - v1 - v2 at H=4
        let a = series(
            2,
            4,
            &[(&[0, 0], rat_int(1)), (&[1, 0], rat_int(-1)), (&[0, 1], rat_int(-1))],
        );
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
    }

    #[test]
    fn log_and_exp_preconditions() {
        let a = series(1, 2, &[(&[0], rat_int(2))]);
        assert!(matches!(a.log(), Err(Error::ConstantTermNotOne)));
        assert!(matches!(a.exp(), Err(Error::NonZeroConstantTerm)));
    }

    #[test]
    fn power_with_multiplicity_basics() {
        let mut factors = BTreeMap::new();
        factors.insert(v(&[1, 0]), Int::from(1));
        factors.insert(v(&[0, 1]), Int::from(1));
        let got = power_with_multiplicity(2, &factors, 2).unwrap();
        let expect = series(
            2,
            2,
            &[
                (&[0, 0], rat_int(1)),
                (&[1, 0], rat_int(-1)),
                (&[0, 1], rat_int(-1)),
                (&[1, 1], rat_int(1)),
            ],
        );
        assert_eq!(got, expect);

        let mut factors = BTreeMap::new();
        factors.insert(v(&[1, 1]), Int::from(2));
        let got = power_with_multiplicity(2, &factors, 2).unwrap();
        let expect = series(2, 2, &[(&[0, 0], rat_int(1)), (&[1, 1], rat_int(-2))]);
        assert_eq!(got, expect);
    }

    #[test]
    fn negative_multiplicity_rejected() {
        let mut factors = BTreeMap::new();
        factors.insert(v(&[1]), Int::from(-1));
        assert!(matches!(
            power_with_multiplicity(1, &factors, 2),
            Err(Error::NegativeExponent)
        ));
    }

    #[test]
    fn json_shape_is_canonical() {
        let s = series(2, 2, &[(&[1, 0], rat(1, 2)), (&[0, 1], rat_int(3))]);
        let js = s.to_json();
        assert_eq!(js["n"], 2);
        assert_eq!(js["bound"], 2);
        // (0,1) precedes (1,0) in (height, lex) order
        assert_eq!(js["terms"][0]["exp"], serde_json::json!([0, 1]));
        assert_eq!(js["terms"][0]["num"], "3");
        assert_eq!(js["terms"][1]["den"], "2");
    }
}
