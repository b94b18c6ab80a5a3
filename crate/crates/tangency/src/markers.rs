//! Markers for even-norm compositions and their transport along
//! degenerations. A marker is the minimal support position of one maximal
//! component of {℘ ≤ 0} — geometrically, the first root of one closed arc of
//! the negativity set. Elementary degenerations carry markers along; the
//! transport over a whole order relation searches every decomposition into
//! elementary operations and fails loudly when two decompositions disagree.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, ElementaryOp};
use crate::poset::geq;
use crate::{AmbiguityWitness, Error, Result};

/// A composition together with one of its markers. The invariant — the
/// marker is the minimal position of a ℘ ≤ 0 component, equivalently either
/// an even entry with positive witness sign on both flanks or an odd entry
/// with signs (+, −) — is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMarked")]
pub struct MarkedComposition {
    omega: Composition,
    /// 1-based support position.
    marker: usize,
}

#[derive(Deserialize)]
struct RawMarked {
    omega: Composition,
    marker: usize,
}

impl TryFrom<RawMarked> for MarkedComposition {
    type Error = Error;
    fn try_from(raw: RawMarked) -> Result<Self> {
        MarkedComposition::new(raw.omega, raw.marker)
    }
}

impl MarkedComposition {
    pub fn new(omega: Composition, marker: usize) -> Result<Self> {
        let markers = marker_set(&omega)?;
        if !markers.contains(&marker) {
            return Err(Error::InvalidMarker { marker });
        }
        Ok(MarkedComposition { omega, marker })
    }

    pub fn omega(&self) -> &Composition {
        &self.omega
    }

    pub fn marker(&self) -> usize {
        self.marker
    }

    /// The marked block's element: the restriction of the composition to the
    /// ℘ ≤ 0 component starting at the marker, re-indexed from 1. Always a
    /// realizable single-arc pattern.
    pub fn xi_at_marker(&self) -> Composition {
        let dec = self.omega.decompose().expect("even norm by the invariant");
        let block = dec
            .blocks
            .iter()
            .find(|b| b.start == self.marker)
            .expect("the marker starts a block by the invariant");
        block.element.clone()
    }
}

impl std::fmt::Display for MarkedComposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; k={})", self.omega, self.marker)
    }
}

/// All markers of an even-norm composition, ascending: positions k where the
/// witness polynomial is positive just left of k and the entry is even with
/// a positive right flank, or odd with a negative right flank. These are
/// exactly the block minima of the deconstruction.
pub fn marker_set(w: &Composition) -> Result<Vec<usize>> {
    let norm = w.norm();
    if !norm.is_multiple_of(2) {
        return Err(Error::Parity { norm });
    }
    let mut out = Vec::new();
    for k in 1..=w.support_size() {
        let left = w.gap_sign(k - 1).expect("gap in range");
        let right = w.gap_sign(k).expect("gap in range");
        let even = w.entry(k).is_multiple_of(2);
        if left == 1 && ((even && right == 1) || (!even && right == -1)) {
            out.push(k);
        }
    }
    debug_assert!(out.len() as u32 <= norm / 2);
    Ok(out)
}

/// One ℘ ≤ 0 component as a marked interval of support positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerBlock {
    /// The component's marker = its minimal member.
    pub marker: usize,
    /// First member (equals the marker).
    pub start: usize,
    /// Last member, inclusive.
    pub end: usize,
}

/// The ordered marked-block partition of the support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStructure {
    pub blocks: Vec<MarkerBlock>,
}

/// The block partition of an even-norm composition's support, one block per
/// ℘ ≤ 0 component; block p's marker is the p-th element of the marker set.
pub fn blocks(w: &Composition) -> Result<BlockStructure> {
    let dec = w.decompose()?;
    let blocks = dec
        .blocks
        .iter()
        .map(|b| MarkerBlock {
            marker: b.start,
            start: b.start,
            end: b.end,
        })
        .collect();
    Ok(BlockStructure { blocks })
}

/// Merge at j with marker transport. Within one block the marker only
/// shifts with the index change; when the merge fuses block p with block
/// p+1 and the marker sat in block p+1, the marker becomes the minimum of
/// the fused block — the component it marked has joined its left neighbor.
pub fn marked_merge(m: &MarkedComposition, j: usize) -> Result<MarkedComposition> {
    let w = m.omega();
    let k = m.marker();
    let merged = w.merge(j)?;
    let dec = w.decompose().expect("even norm by the invariant");
    let p_left = dec.block_index_of(j).expect("support position");
    let p_right = dec.block_index_of(j + 1).expect("support position");
    let k2 = if p_left == p_right {
        // in-block merge: the marker is a block minimum ≤ j, or in another
        // block entirely; only the index shift above j applies
        if k <= j {
            k
        } else {
            k - 1
        }
    } else {
        let p_k = dec.block_index_of(k).expect("support position");
        if p_k == p_right {
            // the marked block fuses into its left neighbor
            dec.blocks[p_left].start
        } else if k <= j {
            k
        } else {
            k - 1
        }
    };
    MarkedComposition::new(merged, k2)
}

/// Insert after j with marker transport: the marker keeps its block's
/// minimal position, so it only shifts when the insertion lands strictly
/// below it.
pub fn marked_insert(m: &MarkedComposition, j: usize) -> Result<MarkedComposition> {
    let inserted = m.omega().insert(j)?;
    let k = m.marker();
    let k2 = if j < k { k + 1 } else { k };
    MarkedComposition::new(inserted, k2)
}

/// Applies one marked elementary operation.
pub fn marked_apply(m: &MarkedComposition, op: ElementaryOp) -> Result<MarkedComposition> {
    match op {
        ElementaryOp::Merge(j) => marked_merge(m, j),
        ElementaryOp::Insert(j) => marked_insert(m, j),
    }
}

fn legal_ops(w: &Composition, norm_cap: u32) -> Vec<ElementaryOp> {
    let q = w.support_size();
    let mut ops: Vec<ElementaryOp> = (1..q).map(ElementaryOp::Merge).collect();
    if w.norm() + 2 <= norm_cap {
        ops.extend((0..=q).map(ElementaryOp::Insert));
    }
    ops
}

struct TransportSearch {
    markers: BTreeSet<usize>,
    witness_paths: BTreeMap<usize, Vec<ElementaryOp>>,
}

fn transport_search(big: &MarkedComposition, target: &Composition) -> Result<TransportSearch> {
    if !geq(big.omega(), target) {
        return Err(Error::Order {
            detail: format!("({}) does not degenerate to ({target})", big.omega()),
        });
    }
    // Every decomposition of the relation has the same length: each
    // elementary operation raises the reduced norm by exactly one. Walk the
    // levels, pruning states that can no longer reach the target.
    let mut frontier: BTreeMap<MarkedComposition, Vec<ElementaryOp>> = BTreeMap::new();
    frontier.insert(big.clone(), Vec::new());
    let steps = target.reduced_norm() - big.omega().reduced_norm();
    for _ in 0..steps {
        let mut next: BTreeMap<MarkedComposition, Vec<ElementaryOp>> = BTreeMap::new();
        for (state, path) in &frontier {
            for op in legal_ops(state.omega(), target.norm()) {
                let moved = marked_apply(state, op)
                    .expect("marked operations are total on legal indices");
                if !geq(moved.omega(), target) {
                    continue;
                }
                next.entry(moved).or_insert_with(|| {
                    let mut p = path.clone();
                    p.push(op);
                    p
                });
            }
        }
        frontier = next;
    }
    // at the target's reduced norm, only the target itself survives pruning
    let mut markers = BTreeSet::new();
    let mut witness_paths = BTreeMap::new();
    for (state, path) in frontier {
        debug_assert_eq!(state.omega(), target);
        witness_paths.entry(state.marker()).or_insert(path);
        markers.insert(state.marker());
    }
    debug_assert!(!markers.is_empty(), "a comparable pair has a decomposition");
    Ok(TransportSearch {
        markers,
        witness_paths,
    })
}

/// All markers of the target reachable from the marked source by some
/// decomposition of the order relation into elementary marked operations.
pub fn transport_set(big: &MarkedComposition, target: &Composition) -> Result<BTreeSet<usize>> {
    Ok(transport_search(big, target)?.markers)
}

/// The marker the source collapses to at the target. Searches every
/// decomposition; errors with the full witness set when two decompositions
/// disagree.
pub fn transport(big: &MarkedComposition, target: &Composition) -> Result<usize> {
    let search = transport_search(big, target)?;
    if search.markers.len() == 1 {
        return Ok(*search.markers.iter().next().expect("nonempty"));
    }
    let witnesses = search
        .witness_paths
        .iter()
        .map(|(&marker, ops)| AmbiguityWitness {
            marker,
            ops: ops.clone(),
        })
        .collect();
    Err(Error::Ambiguous {
        markers: search.markers.into_iter().collect(),
        witnesses,
    })
}

/// The collapse relation: the big marked pair degenerates onto the small one
/// with the marker carried along. False when the compositions are not
/// comparable; ambiguity propagates as an error.
pub fn leads_to(big: &MarkedComposition, small: &MarkedComposition) -> Result<bool> {
    if !geq(big.omega(), small.omega()) {
        return Ok(false);
    }
    Ok(transport(big, small.omega())? == small.marker())
}

/// The marked block element; see [`MarkedComposition::xi_at_marker`].
pub fn xi_at_marker(m: &MarkedComposition) -> Composition {
    m.xi_at_marker()
}
