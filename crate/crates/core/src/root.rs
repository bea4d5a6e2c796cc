//! Elements of the positive root lattice and vertex weight tuples.
//!
//! A `RootVector` is a length-`n` tuple of non-negative integers, graded by
//! its height (coordinate sum). The same data serves as the exponent of a
//! series monomial `v^gamma`, as a candidate root `alpha`, and as the weight
//! `eta(k)` attached to a multicoloring tuple `k`.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::gcd_u32;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootVector(Vec<u32>);

impl RootVector {
    pub fn new(coords: Vec<u32>) -> Self {
        RootVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// Simple root `alpha_i` for a 1-based vertex id.
    pub fn unit(n: usize, vertex: usize) -> Self {
        assert!((1..=n).contains(&vertex));
        let mut c = vec![0; n];
        c[vertex - 1] = 1;
        RootVector(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Height `ht(gamma)`: the coordinate sum.
    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based vertex ids with a non-zero coordinate.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// gcd of the non-zero coordinates. Undefined (panics) on the zero vector.
    pub fn gcd(&self) -> u32 {
        let g = self.0.iter().copied().filter(|&c| c > 0).fold(0, gcd_u32);
        assert!(g > 0, "gcd of the zero vector is undefined");
        g
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        debug_assert_eq!(self.len(), other.len());
        RootVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Coordinatewise difference; `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &RootVector) -> Option<RootVector> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(RootVector(out))
    }

    pub fn scale(&self, c: u32) -> RootVector {
        RootVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Exact coordinatewise division; caller must pass a divisor of `gcd()`.
    pub fn div_exact(&self, d: u32) -> RootVector {
        debug_assert!(self.0.iter().all(|&c| c % d == 0));
        RootVector(self.0.iter().map(|x| x / d).collect())
    }

    pub fn dominated_by(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Permutes coordinates: entry for vertex `i` moves to `perm[i-1]` (1-based).
    pub fn permute(&self, perm: &[usize]) -> RootVector {
        let mut out = vec![0; self.len()];
        for (i, &c) in self.0.iter().enumerate() {
            out[perm[i] - 1] = c;
        }
        RootVector(out)
    }
}

/// Graded order: by height first, then lexicographically on coordinates.
/// This is the canonical serialization order for all term maps.
impl Ord for RootVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Tuple `k = (k_i : i in I)` of colour counts per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(entries: Vec<u32>) -> Self {
        WeightVector(entries)
    }

    /// The all-ones tuple (ordinary colorings).
    pub fn ones(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, vertex: usize) -> u32 {
        self.0[vertex - 1]
    }

    /// 1-based vertices with `k_i > 0`; must be non-empty for most operations.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn require_support(&self) -> Result<()> {
        if self.support().is_empty() {
            Err(Error::EmptySupport)
        } else {
            Ok(())
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&k| k == 1)
    }

    /// The weight `eta(k) = sum_i k_i alpha_i` viewed as a root vector.
    pub fn eta(&self) -> RootVector {
        RootVector::new(self.0.clone())
    }

    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `k! = prod_i k_i!` as used by the clique-join identity.
    pub fn factorial(&self) -> crate::arith::Int {
        let mut acc = crate::arith::int(1);
        for &k in &self.0 {
            acc *= crate::arith::factorial(k as u64);
        }
        acc
    }
}
