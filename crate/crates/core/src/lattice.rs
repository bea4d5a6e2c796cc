//! The bond lattice of a graph (set partitions with connected blocks, with
//! its Moebius function from the bottom) and the weighted bond lattice
//! attached to a colour tuple: multisets of connected-support vectors that
//! sum to `eta(k)`.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::root::{RootVector, WeightVector};
use crate::root_mult::MultTable;
use crate::symfunc::Partition;

/// Set partition of `{1..n}` in which every block induces a connected
/// subgraph. Blocks are kept sorted by minimum element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BondPartition {
    blocks: Vec<VertexSet>,
}

impl BondPartition {
    pub fn new(mut blocks: Vec<VertexSet>) -> BondPartition {
        blocks.sort_by_key(|b| *b.iter().next().expect("empty block"));
        BondPartition { blocks }
    }

    /// The all-singletons partition (the bottom element).
    pub fn bottom(n: usize) -> BondPartition {
        BondPartition::new((1..=n).map(|v| [v].into_iter().collect()).collect())
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True iff `self` refines `other`: every block of `self` is contained in
    /// a block of `other`.
    pub fn refines(&self, other: &BondPartition) -> bool {
        self.blocks.iter().all(|b| {
            let rep = *b.iter().next().unwrap();
            other
                .blocks
                .iter()
                .find(|ob| ob.contains(&rep))
                .map(|ob| b.is_subset(ob))
                .unwrap_or(false)
        })
    }

    /// Partition of block sizes, descending.
    pub fn type_partition(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// Indicator vector of a block, as a root vector.
    pub fn block_vector(&self, n: usize, idx: usize) -> RootVector {
        let mut coords = vec![0; n];
        for &v in &self.blocks[idx] {
            coords[v - 1] = 1;
        }
        RootVector::new(coords)
    }
}

/// All partitions of the vertex set into connected blocks, ordered by
/// decreasing block count and then by block structure; the bottom element
/// comes first, and for connected graphs the one-block partition comes last.
pub fn bond_lattice(g: &Graph) -> Vec<BondPartition> {
    let n = g.n();
    let mut out = Vec::new();
    // enumerate set partitions via restricted growth strings
    let mut assign = vec![0usize; n];
    fn rec(
        g: &Graph,
        assign: &mut Vec<usize>,
        pos: usize,
        num_blocks: usize,
        out: &mut Vec<BondPartition>,
    ) {
        let n = g.n();
        if pos == n {
            let mut blocks: Vec<VertexSet> = vec![VertexSet::new(); num_blocks];
            for (i, &b) in assign.iter().enumerate() {
                blocks[b].insert(i + 1);
            }
            if blocks.iter().all(|b| g.is_connected_subset(b).unwrap()) {
                out.push(BondPartition::new(blocks));
            }
            return;
        }
        for b in 0..=num_blocks {
            assign[pos] = b;
            rec(g, assign, pos + 1, num_blocks.max(b + 1), out);
        }
    }
    rec(g, &mut assign, 0, 0, &mut out);
    out.sort_by(|a, b| {
        b.num_blocks()
            .cmp(&a.num_blocks())
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    out
}

/// `mu(bottom, pi)` by the defining recursion: `mu(0,0) = 1` and the values
/// below any element sum to zero.
pub fn mobius_from_bottom(lattice: &[BondPartition], pi: &BondPartition) -> Result<Int> {
    if !lattice.iter().any(|e| e == pi) {
        return Err(Error::NotInLattice);
    }
    let values = mobius_all(lattice);
    Ok(values
        .into_iter()
        .zip(lattice)
        .find(|(_, e)| *e == pi)
        .map(|(v, _)| v)
        .unwrap())
}

/// Moebius values from the bottom for every lattice element, positionally
/// aligned with the input slice.
pub fn mobius_all(lattice: &[BondPartition]) -> Vec<Int> {
    let max_blocks = lattice.iter().map(|e| e.num_blocks()).max().unwrap_or(0);
    let mut values: Vec<Option<Int>> = vec![None; lattice.len()];
    // process by decreasing block count: refinements have more blocks
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(lattice[i].num_blocks()));
    for &i in &order {
        let pi = &lattice[i];
        if pi.num_blocks() == max_blocks {
            // the bottom (all singletons) is the unique maximum-block element
            values[i] = Some(Int::one());
            continue;
        }
        let mut acc = Int::zero();
        for (j, sigma) in lattice.iter().enumerate() {
            if j != i && sigma.refines(pi) {
                acc += values[j].as_ref().expect("refinement processed first");
            }
        }
        values[i] = Some(-acc);
    }
    values.into_iter().map(|v| v.unwrap()).collect()
}

/// Element of the weighted bond lattice: a multiset of connected-support
/// vectors summing to `eta(k)`, stored with parts in descending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedBond {
    parts: Vec<RootVector>,
}

impl WeightedBond {
    pub fn new(mut parts: Vec<RootVector>) -> WeightedBond {
        parts.sort_by(|a, b| b.cmp(a));
        WeightedBond { parts }
    }

    /// Parts in descending canonical order, repeats included.
    pub fn parts(&self) -> &[RootVector] {
        &self.parts
    }

    /// Total number of parts, counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Distinct parts with their multiplicities `D(J, bond)`.
    pub fn distinct_parts(&self) -> Vec<(&RootVector, u32)> {
        let mut out: Vec<(&RootVector, u32)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, d)) if *q == p => *d += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Partition of part heights, counted with multiplicity.
    pub fn type_partition(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p.height()).collect())
    }

    /// Total height (equals `ht(eta(k))`).
    pub fn height(&self) -> u32 {
        self.parts.iter().map(|p| p.height()).sum()
    }

    /// For an all-ones weight tuple the parts are indicator vectors of the
    /// blocks of a bond partition.
    pub fn to_bond_partition(&self) -> Option<BondPartition> {
        let mut blocks = Vec::new();
        for p in &self.parts {
            if p.coords().iter().any(|&c| c > 1) {
                return None;
            }
            blocks.push(p.support().into_iter().collect());
        }
        Some(BondPartition::new(blocks))
    }
}

/// Every multiset of connected-support vectors summing to `eta(k)`.
/// Parts are generated in descending order, so each multiset appears exactly
/// once; the result is sorted by (number of parts, part list).
pub fn weighted_bond_lattice(g: &Graph, k: &WeightVector) -> Result<Vec<WeightedBond>> {
    k.require_support()?;
    let mut candidates = crate::graph::connected_multiset_supports(g, k);
    // descending, so recursion picks weakly decreasing part sequences
    candidates.sort_by(|a, b| b.cmp(a));
    let eta = k.eta();
    let mut out = Vec::new();
    let mut stack: Vec<RootVector> = Vec::new();
    fn rec(
        candidates: &[RootVector],
        from: usize,
        remaining: &RootVector,
        stack: &mut Vec<RootVector>,
        out: &mut Vec<WeightedBond>,
    ) {
        if remaining.is_zero() {
            out.push(WeightedBond::new(stack.clone()));
            return;
        }
        for idx in from..candidates.len() {
            if let Some(rest) = remaining.checked_sub(&candidates[idx]) {
                stack.push(candidates[idx].clone());
                rec(candidates, idx, &rest, stack, out);
                stack.pop();
            }
        }
    }
    rec(&candidates, 0, &eta, &mut stack, &mut out);
    out.sort_by(|a, b| {
        a.num_parts()
            .cmp(&b.num_parts())
            .then_with(|| a.parts.cmp(&b.parts))
    });
    Ok(out)
}

/// Partition of part heights of a weighted bond (the subscript of the
/// power-sum term it contributes).
pub fn bond_type(b: &WeightedBond) -> Partition {
    b.type_partition()
}

/// Image of a weighted bond under the part-to-root map, or the first part
/// that fails to be a root (multiplicity zero). The identities themselves
/// are insensitive to rejected bonds because their binomial factors vanish,
/// but the verifier surfaces every rejection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PsiImage {
    Accepted(Vec<RootVector>),
    Rejected { part: RootVector },
}

pub fn psi_image(b: &WeightedBond, mults: &MultTable) -> Result<PsiImage> {
    for part in b.parts() {
        if part.height() > mults.bound() {
            return Err(Error::BoundTooSmall { need: part.height(), have: mults.bound() });
        }
        if mults.get(part).is_zero() {
            return Ok(PsiImage::Rejected { part: part.clone() });
        }
    }
    Ok(PsiImage::Accepted(b.parts().to_vec()))
}

/// Stable partition: every block is a stable set. Used to realize stable
/// number partitions concretely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StablePartition {
    blocks: Vec<VertexSet>,
}

impl StablePartition {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Partition of block sizes, descending.
    pub fn type_partition(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }
}

/// All partitions of the vertex set into stable blocks.
pub fn stable_partitions(g: &Graph) -> Vec<StablePartition> {
    let n = g.n();
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(
        g: &Graph,
        assign: &mut Vec<usize>,
        pos: usize,
        num_blocks: usize,
        out: &mut Vec<StablePartition>,
    ) {
        let n = g.n();
        if pos == n {
            let mut blocks: Vec<VertexSet> = vec![VertexSet::new(); num_blocks];
            for (i, &b) in assign.iter().enumerate() {
                blocks[b].insert(i + 1);
            }
            if blocks
                .iter()
                .all(|b| g.mask_is_stable(g.set_to_mask(b).unwrap()))
            {
                let mut blocks = blocks;
                blocks.sort_by_key(|b| *b.iter().next().unwrap());
                out.push(StablePartition { blocks });
            }
            return;
        }
        for b in 0..=num_blocks {
            assign[pos] = b;
            rec(g, assign, pos + 1, num_blocks.max(b + 1), out);
        }
    }
    rec(g, &mut assign, 0, 0, &mut out);
    out
}

/// JSON for one weighted bond, with a Moebius value only in the all-ones case.
pub fn bond_to_json(b: &WeightedBond, mobius: Option<&Int>) -> serde_json::Value {
    serde_json::json!({
        "parts": b.parts().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
        "type": b.type_partition().parts(),
        "mobius": mobius.map(|m| serde_json::Value::String(m.to_string()))
            .unwrap_or(serde_json::Value::Null),
    })
}

/// Collects the weighted bond lattice as JSON; for the all-ones tuple the
/// bonds are matched with bond partitions and annotated with `mu(0, pi)`.
pub fn bond_lattice_json(g: &Graph, k: &WeightVector) -> Result<serde_json::Value> {
    let bonds = weighted_bond_lattice(g, k)?;
    let mobius: Option<BTreeMap<usize, Int>> = if k.is_all_ones() {
        let lattice = bond_lattice(g);
        let values = mobius_all(&lattice);
        let mut by_bond = BTreeMap::new();
        for (i, b) in bonds.iter().enumerate() {
            let bp = b.to_bond_partition().expect("all-ones bond");
            let pos = lattice.iter().position(|e| *e == bp).expect("bond in lattice");
            by_bond.insert(i, values[pos].clone());
        }
        Some(by_bond)
    } else {
        None
    };
    let items: Vec<serde_json::Value> = bonds
        .iter()
        .enumerate()
        .map(|(i, b)| bond_to_json(b, mobius.as_ref().and_then(|m| m.get(&i))))
        .collect();
    Ok(serde_json::Value::Array(items))
}
