//! Compositions (ordered positive multiplicity patterns), their norms, the
//! elementary merge/insert degenerations, and the string/atom deconstruction
//! of the negativity set of the witness polynomial ℘(u) = ∏ᵢ (u − i)^ω(i).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite ordered list of positive integer multiplicities; may be empty.
///
/// Position indices are 1-based throughout (`ω(1) … ω(q)`), matching the
/// root-order reading: entry i is the multiplicity of the i-th distinct real
/// root. Equality is entrywise; `Ord` is the enumeration order (length, then
/// entries), not the degeneration order — see [`crate::poset::geq`] for that.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Builds a composition, rejecting nonpositive entries.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        match entries.iter().find(|&&e| e == 0) {
            Some(_) => Err(Error::Reject { entry: 0 }),
            None => Ok(Composition(entries)),
        }
    }

    /// Builds from signed integers (CLI/JSON ingestion path).
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e <= 0) {
            return Err(Error::Reject { entry: bad });
        }
        Ok(Composition(entries.iter().map(|&e| e as u32).collect()))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Support size q.
    pub fn support_size(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position j.
    pub fn entry(&self, j: usize) -> u32 {
        self.0[j - 1]
    }

    /// Total multiplicity Σᵢ ω(i).
    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Codimension count Σᵢ (ω(i) − 1); 0 for the empty composition.
    pub fn reduced_norm(&self) -> u32 {
        self.norm() - self.support_size() as u32
    }

    /// Σᵢ ⌊ω(i)/2⌋ — the maximal number of tangency points a resolution of
    /// the pattern can carry.
    pub fn virtual_multiplicity(&self) -> u32 {
        self.0.iter().map(|e| e / 2).sum()
    }

    /// Mirror image (reversal of the root order).
    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Concatenation in order (used when assembling per-zone patterns).
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Composition>) -> Self {
        Composition(
            parts
                .into_iter()
                .flat_map(|p| p.0.iter().copied())
                .collect(),
        )
    }

    /// Adjacent roots j and j+1 collide: entries j, j+1 are replaced by their
    /// sum. Legal for 1 ≤ j ≤ q−1. Norm is preserved; reduced norm rises by 1.
    pub fn merge(&self, j: usize) -> Result<Self> {
        let q = self.support_size();
        if j == 0 || j + 1 > q {
            return Err(Error::Index {
                index: j,
                support: q,
            });
        }
        let mut v = self.0.clone();
        v[j - 1] += v[j];
        v.remove(j);
        Ok(Composition(v))
    }

    /// A conjugate pair lands on the real axis between roots j and j+1: a new
    /// entry of value 2 appears after position j (j = 0 prepends). Legal for
    /// 0 ≤ j ≤ q. Norm rises by 2; reduced norm rises by 1.
    pub fn insert(&self, j: usize) -> Result<Self> {
        let q = self.support_size();
        if j > q {
            return Err(Error::Index {
                index: j,
                support: q,
            });
        }
        let mut v = self.0.clone();
        v.insert(j, 2);
        Ok(Composition(v))
    }

    /// Applies one elementary operation.
    pub fn apply(&self, op: ElementaryOp) -> Result<Self> {
        match op {
            ElementaryOp::Merge(j) => self.merge(j),
            ElementaryOp::Insert(j) => self.insert(j),
        }
    }

    /// All single-operation degenerations with norm ≤ `norm_cap`,
    /// deduplicated, in enumeration order.
    pub fn successors(&self, norm_cap: u32) -> std::collections::BTreeSet<Self> {
        let mut out = std::collections::BTreeSet::new();
        for j in 1..self.support_size() {
            out.insert(self.merge(j).expect("legal merge index"));
        }
        if self.norm() + 2 <= norm_cap {
            for j in 0..=self.support_size() {
                out.insert(self.insert(j).expect("legal insert index"));
            }
        }
        out
    }

    /// All single-operation resolutions, one entry **per operation**: every
    /// ordered split of an entry into two positive parts (undoing a merge)
    /// and every deletion of an entry equal to 2 (undoing an insert). The
    /// same composition appears once per operation producing it — equal-valued
    /// 2-deletions are the only source of repeats — so the length is exactly
    /// `reduced_norm() + #{i : ω(i) = 2}`.
    pub fn predecessors_one_step(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            for a in 1..e {
                let mut v = self.0.clone();
                v[i] = a;
                v.insert(i + 1, e - a);
                out.push(Composition(v));
            }
        }
        for (i, &e) in self.0.iter().enumerate() {
            if e == 2 {
                let mut v = self.0.clone();
                v.remove(i);
                out.push(Composition(v));
            }
        }
        debug_assert_eq!(
            out.len(),
            self.reduced_norm() as usize + self.0.iter().filter(|&&e| e == 2).count()
        );
        out
    }

    /// Whether the pattern is realizable as the tangency type of a single
    /// trajectory arc: either q ≥ 2 with odd end entries and even interior
    /// entries (a *string*), or a single even entry (an *atom*). The empty
    /// composition and odd singletons are excluded.
    pub fn is_bullet(&self) -> bool {
        match self.0.as_slice() {
            [] => false,
            [single] => single % 2 == 0,
            [first, interior @ .., last] => {
                first % 2 == 1 && last % 2 == 1 && interior.iter().all(|e| e % 2 == 0)
            }
        }
    }

    /// Sign of the witness polynomial ℘(u) = ∏ᵢ (u − i)^ω(i) at u = i + ½,
    /// for gap index 0 ≤ i ≤ q: (−1) to the suffix sum Σ_{j>i} ω(j).
    pub fn gap_sign(&self, i: usize) -> Result<i8> {
        let q = self.support_size();
        if i > q {
            return Err(Error::Index {
                index: i,
                support: q,
            });
        }
        let suffix: u32 = self.0[i..].iter().sum();
        Ok(if suffix.is_multiple_of(2) { 1 } else { -1 })
    }

    /// Deconstruction of the support into the ordered maximal intervals where
    /// ℘ ≤ 0: *strings* (length ≥ 2) and *atoms* (single even entries).
    /// Requires even norm — odd-norm patterns have an unbounded negativity
    /// set and no such deconstruction.
    pub fn decompose(&self) -> Result<BlockDecomposition> {
        let norm = self.norm();
        if !norm.is_multiple_of(2) {
            return Err(Error::Parity { norm });
        }
        let q = self.support_size();
        let mut blocks = Vec::new();
        let mut start = 1usize;
        while start <= q {
            // extend while the gap after the current end is negative
            let mut end = start;
            while end < q && self.gap_sign(end).expect("gap in range") == -1 {
                end += 1;
            }
            let element = Composition(self.0[start - 1..end].to_vec());
            let kind = if start == end {
                BlockKind::Atom
            } else {
                BlockKind::String
            };
            debug_assert!(element.is_bullet(), "components of ℘ ≤ 0 are realizable");
            blocks.push(Block {
                start,
                end,
                kind,
                element,
            });
            start = end + 1;
        }
        Ok(BlockDecomposition { blocks })
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for e in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Text grammar: `\d+(,\d+)*` or the literal token `e` for empty.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Composition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse {
                detail: "empty composition text; use the token \"e\"".into(),
            });
        }
        let mut entries = Vec::new();
        for tok in s.split(',') {
            let n: i64 = tok.trim().parse().map_err(|_| Error::Parse {
                detail: format!("bad composition entry {tok:?}"),
            })?;
            entries.push(n);
        }
        Composition::from_signed(&entries)
    }
}

impl From<&[u32]> for Composition {
    /// Infallible construction from known-positive entries; panics on zeros.
    fn from(entries: &[u32]) -> Self {
        Composition::new(entries.to_vec()).expect("positive entries")
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(entries: [u32; N]) -> Self {
        Composition::new(entries.to_vec()).expect("positive entries")
    }
}

/// One elementary degeneration: adjacent-root merge at position j (1-based)
/// or the appearance of a double root after position j (0 prepends).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ElementaryOp {
    Merge(usize),
    Insert(usize),
}

impl fmt::Display for ElementaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryOp::Merge(j) => write!(f, "M{j}"),
            ElementaryOp::Insert(j) => write!(f, "I{j}"),
        }
    }
}

/// STRING: a length-≥-2 interval with odd ends and even interior.
/// ATOM: a singleton even entry with positive witness sign on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    String,
    Atom,
}

/// One maximal interval of the support on which ℘ ≤ 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// First support position of the interval (1-based, inclusive).
    pub start: usize,
    /// Last support position of the interval (1-based, inclusive).
    pub end: usize,
    pub kind: BlockKind,
    /// The interval's entries re-indexed from 1; always a realizable pattern.
    pub element: Composition,
}

/// The ordered string/atom deconstruction of an even-norm composition.
/// Blocks partition the support in position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// The block elements in order.
    pub fn elements(&self) -> Vec<Composition> {
        self.blocks.iter().map(|b| b.element.clone()).collect()
    }

    /// Index of the block containing 1-based support position `pos`.
    pub fn block_index_of(&self, pos: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.start <= pos && pos <= b.end)
    }
}
