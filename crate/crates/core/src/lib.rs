//! Exact combinatorics of finite simple graphs: chromatic symmetric
//! functions, generalized chromatic polynomials, bond lattices, and the root
//! multiplicities of the free partially commutative Lie algebra attached to
//! a graph, together with a verifier that machine-checks the identities
//! tying these objects together on exhaustive small-graph corpora.
//!
//! All arithmetic is exact (big rationals / big integers); truncated
//! multivariate power series are graded by total height.

pub mod arith;
pub mod chroma;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod gsym;
pub mod lattice;
pub mod root;
pub mod root_mult;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFormat, VertexSet};
pub use root::{RootVector, WeightVector};
pub use series::QSeries;
pub use symfunc::{NVarPoly, Partition, PowerSumExpr};
