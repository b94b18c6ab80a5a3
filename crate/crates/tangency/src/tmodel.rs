//! The local cell model of the space of trajectories near a trajectory whose
//! tangency pattern is a realizable composition ω. Cells carry a product
//! label — one pattern per tangency zone, drawn from the zone's own degree
//! universe — plus a marker of the concatenated pattern; incidence is one
//! elementary operation in one zone with the marker carried along.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cells::FVector;
use crate::composition::{Composition, ElementaryOp};
use crate::markers::{marked_apply, marker_set, MarkedComposition};
use crate::poset::{generate_omega, GenerationMode};
use crate::{Error, Result};

/// One pattern per tangency zone of the base type; component i lives in the
/// degree-ω(i) universe (norm ≤ ω(i), matching parity), possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProductLabel {
    pub components: Vec<Composition>,
}

impl ProductLabel {
    /// Concatenation of the nonempty components, in zone order.
    pub fn kappa(&self) -> Composition {
        Composition::concat(self.components.iter().filter(|c| !c.is_empty()))
    }

    /// Checks the per-zone capacity and parity constraints against a base.
    pub fn validate(&self, base: &Composition) -> Result<()> {
        if self.components.len() != base.support_size() {
            return Err(Error::Domain {
                detail: format!(
                    "label has {} zones, base has {}",
                    self.components.len(),
                    base.support_size()
                ),
            });
        }
        for (i, comp) in self.components.iter().enumerate() {
            let cap = base.entries()[i];
            if comp.norm() > cap || comp.norm() % 2 != cap % 2 {
                return Err(Error::Degree {
                    norm: comp.norm(),
                    degree: cap,
                });
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for ProductLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Concatenation of a label's nonempty components.
pub fn kappa(label: &ProductLabel) -> Composition {
    label.kappa()
}

/// Every product label over the base: the cartesian product of the per-zone
/// universes, rightmost zone varying fastest.
pub fn enumerate_labels(base: &Composition) -> Result<Vec<ProductLabel>> {
    if base.is_empty() {
        return Err(Error::EmptyBase);
    }
    let universes: Vec<Vec<Composition>> = base
        .entries()
        .iter()
        .map(|&cap| generate_omega(cap, GenerationMode::Upto))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; universes.len()];
    loop {
        out.push(ProductLabel {
            components: idx
                .iter()
                .zip(&universes)
                .map(|(&i, u)| u[i].clone())
                .collect(),
        });
        let mut pos = universes.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < universes[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// One cell: a product label, a marker of the concatenation, the cell
/// dimension, and the single-arc pattern of the stratum the cell's interior
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectoryCell {
    pub label: ProductLabel,
    pub marker: usize,
    pub dim: u32,
    pub stratum: Composition,
}

/// The assembled local model: marked cells graded by dimension, with cover
/// incidences (bigger index, smaller index). The unique 0-cell whose
/// concatenation is the base itself is the cone apex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectoryComplex {
    pub base: Composition,
    pub cells: Vec<TrajectoryCell>,
    pub covers: Vec<(usize, usize)>,
}

impl TrajectoryComplex {
    pub fn f_vector(&self) -> FVector {
        let top = self.base.reduced_norm() as usize;
        let mut counts = vec![0u64; top + 1];
        for cell in &self.cells {
            counts[cell.dim as usize] += 1;
        }
        FVector { counts }
    }

    /// Index of the apex: the unique cell whose concatenation equals the
    /// base (necessarily of dimension 0).
    pub fn apex(&self) -> usize {
        let mut found = self
            .cells
            .iter()
            .enumerate()
            .filter(|(_, cell)| cell.label.kappa() == self.base);
        let (idx, cell) = found.next().expect("the base labels its own apex cell");
        debug_assert_eq!(cell.dim, 0);
        debug_assert!(found.next().is_none(), "the apex label is unique");
        idx
    }

    /// Cells covered by the cell at `index`.
    pub fn covered_by(&self, index: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == index)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn find_cell(&self, label: &ProductLabel, marker: usize) -> Option<usize> {
        self.cells
            .iter()
            .position(|cell| &cell.label == label && cell.marker == marker)
    }
}

fn require_bullet_base(base: &Composition) -> Result<()> {
    if base.is_bullet() {
        Ok(())
    } else {
        Err(Error::Domain {
            detail: format!("({base}) is not a realizable single-arc pattern"),
        })
    }
}

/// Assembles the local model over a realizable base pattern: cells are all
/// (label, marker of κ(label)) pairs with nonempty concatenation, of
/// dimension reduced_norm(base) − Σ reduced_norm(componentᵢ); covers join
/// cells one grade apart that differ by one elementary operation in one
/// zone whose induced global operation carries the marker across.
pub fn build_t_model(base: &Composition) -> Result<TrajectoryComplex> {
    require_bullet_base(base)?;
    let rnorm = base.reduced_norm();
    let mut cells = Vec::new();
    for label in enumerate_labels(base)? {
        let k = label.kappa();
        if k.is_empty() {
            continue;
        }
        let label_rnorm: u32 = label.components.iter().map(|c| c.reduced_norm()).sum();
        let dim = rnorm - label_rnorm;
        for marker in marker_set(&k).expect("κ has even norm over a realizable base") {
            let stratum = MarkedComposition::new(k.clone(), marker)
                .expect("markers come from the marker set")
                .xi_at_marker();
            cells.push(TrajectoryCell {
                label: label.clone(),
                marker,
                dim,
                stratum,
            });
        }
    }
    cells.sort_by(|a, b| {
        b.dim
            .cmp(&a.dim)
            .then_with(|| a.label.cmp(&b.label))
            .then_with(|| a.marker.cmp(&b.marker))
    });

    let mut covers = Vec::new();
    for (ai, a) in cells.iter().enumerate() {
        for (bi, b) in cells.iter().enumerate() {
            if a.dim != b.dim + 1 {
                continue;
            }
            if covers_cell(a, b) {
                covers.push((ai, bi));
            }
        }
    }
    covers.sort_unstable();
    Ok(TrajectoryComplex {
        base: base.clone(),
        cells,
        covers,
    })
}

/// Whether marked cell `a` covers marked cell `b`: the labels differ in
/// exactly one zone by one elementary operation, and — applied at the
/// matching global position of the concatenation — that operation carries
/// a's marker to b's marker.
fn covers_cell(a: &TrajectoryCell, b: &TrajectoryCell) -> bool {
    let zones = a.label.components.len();
    debug_assert_eq!(zones, b.label.components.len());
    let mut differing = (0..zones)
        .filter(|&i| a.label.components[i] != b.label.components[i]);
    let zone = match (differing.next(), differing.next()) {
        (Some(zone), None) => zone,
        _ => return false,
    };
    let from = &a.label.components[zone];
    let to = &b.label.components[zone];
    // offset of this zone inside κ(a): empty zones contribute nothing
    let offset: usize = a.label.components[..zone]
        .iter()
        .map(|c| c.support_size())
        .sum();
    let marked = MarkedComposition::new(a.label.kappa(), a.marker)
        .expect("cell markers are valid by construction");
    let mut ops: Vec<ElementaryOp> = Vec::new();
    for j in 1..from.support_size() {
        if &from.merge(j).expect("legal index") == to {
            ops.push(ElementaryOp::Merge(offset + j));
        }
    }
    for j in 0..=from.support_size() {
        if &from.insert(j).expect("legal index") == to {
            ops.push(ElementaryOp::Insert(offset + j));
        }
    }
    ops.into_iter().any(|op| {
        let moved = marked_apply(&marked, op).expect("legal global index");
        debug_assert_eq!(moved.omega(), &b.label.kappa());
        moved.marker() == b.marker
    })
}

/// Dimension-bucketed cell counts of the local model.
pub fn t_f_vector(base: &Composition) -> Result<FVector> {
    Ok(build_t_model(base)?.f_vector())
}

/// The boundary subcomplex around the apex: every cell whose concatenation
/// is not the base itself, re-graded one dimension down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkComplex {
    pub base: Composition,
    pub cells: Vec<TrajectoryCell>,
    pub covers: Vec<(usize, usize)>,
}

impl LinkComplex {
    pub fn f_vector(&self) -> FVector {
        let top = self.base.reduced_norm() as i64 - 1;
        let mut counts = vec![0u64; (top.max(-1) + 1) as usize];
        for cell in &self.cells {
            counts[cell.dim as usize] += 1;
        }
        FVector { counts }
    }
}

/// Extracts the link of the apex from the local model: drop the apex cell,
/// shift every dimension down by one, keep the induced covers.
pub fn link_complex(base: &Composition) -> Result<LinkComplex> {
    let model = build_t_model(base)?;
    let apex = model.apex();
    let mut remap = BTreeMap::new();
    let mut cells = Vec::new();
    for (i, cell) in model.cells.iter().enumerate() {
        if i == apex {
            continue;
        }
        remap.insert(i, cells.len());
        let mut shifted = cell.clone();
        debug_assert!(shifted.dim >= 1, "only the apex sits at dimension 0");
        shifted.dim -= 1;
        cells.push(shifted);
    }
    let covers = model
        .covers
        .iter()
        .filter(|&&(a, b)| a != apex && b != apex)
        .map(|&(a, b)| (remap[&a], remap[&b]))
        .collect();
    Ok(LinkComplex {
        base: model.base,
        cells,
        covers,
    })
}

/// The single-arc pattern of the stratum containing the marked cell's
/// interior: the marked block of the concatenation.
pub fn stratum_label(label: &ProductLabel, marker: usize) -> Result<Composition> {
    Ok(MarkedComposition::new(label.kappa(), marker)?.xi_at_marker())
}

/// Marker counts per label: how many cells of the model the resolution map
/// stacks over each label — the number of ℘ ≤ 0 components of the
/// concatenation. Bounded by norm(base)/2.
pub fn fiber_report(base: &Composition) -> Result<BTreeMap<ProductLabel, usize>> {
    require_bullet_base(base)?;
    let mut out = BTreeMap::new();
    for label in enumerate_labels(base)? {
        let k = label.kappa();
        let fiber = if k.is_empty() {
            0
        } else {
            marker_set(&k).expect("even norm").len()
        };
        debug_assert!(fiber as u32 <= base.norm() / 2);
        out.insert(label, fiber);
    }
    Ok(out)
}
