//! Small exact-arithmetic helpers shared across modules.
//!
//! Everything downstream of the denominator identity must stay in exact
//! rationals; floats are never used anywhere in this crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for series and polynomial coefficients.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Converts a rational known to be integral, failing loudly otherwise.
pub fn expect_integer(r: &Rat, context: &str) -> Result<Int> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::IntegralityViolation {
            context: format!("{context}: got {r}"),
        })
    }
}

pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Binomial coefficient with an arbitrary-precision upper argument.
/// `C(m, k) = m (m-1) ... (m-k+1) / k!`; zero when `m` is a non-negative
/// integer smaller than `k`.
pub fn binomial(m: &Int, k: u64) -> Int {
    let mut num = Int::one();
    for i in 0..k {
        num *= m - Int::from(i);
    }
    let den = factorial(k);
    let (q, r) = num::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "binomial product not divisible by k!");
    q
}

/// Number-theoretic Moebius function.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0; // square factor
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Signum as a rational: `(-1)^k`.
pub fn sign_pow(k: u64) -> Rat {
    if k % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Renders a rational for JSON payloads: `"5"` or `"-3/2"`.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

pub fn int_is_nonneg(v: &Int) -> bool {
    !v.is_negative()
}
