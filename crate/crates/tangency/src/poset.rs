//! The degeneration order on compositions: morphism-existence tests (the
//! polynomial-time route), brute-force reachability oracles, finite poset
//! generation, Hasse diagrams, and distance-graded resolution queries.
//!
//! Orientation: `geq(a, b)` holds when `b` is reachable from `a` by merges
//! and inserts — the generic pattern is the *bigger* element and has the
//! *smaller* reduced norm.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::{Error, Result};

/// A monotone total map from source positions to target positions realizing
/// a degeneration: each target position receives a contiguous (possibly
/// empty) run of source positions whose entries sum to at most the target
/// entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub source: Composition,
    pub target: Composition,
    /// 1-based target position for each source position; weakly monotone.
    pub map: Vec<usize>,
    /// Per target position: whether the preimage sum matches the target
    /// entry's parity. All true for full morphisms; unconstrained (recorded
    /// but not required) for realizable-pattern morphisms.
    pub parity: Vec<bool>,
}

impl Morphism {
    /// Validates a candidate map against the morphism conditions.
    /// `require_parity` additionally demands per-target parity agreement
    /// (which forces missed targets to be even).
    pub fn validate(
        source: Composition,
        target: Composition,
        map: Vec<usize>,
        require_parity: bool,
    ) -> Result<Self> {
        let q1 = source.support_size();
        let q2 = target.support_size();
        if map.len() != q1 {
            return Err(Error::Domain {
                detail: format!("map length {} does not cover the source support {q1}", map.len()),
            });
        }
        if map.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain {
                detail: "map is not weakly monotone".into(),
            });
        }
        if map.iter().any(|&t| t == 0 || t > q2) {
            return Err(Error::Domain {
                detail: format!("map value out of target range 1..={q2}"),
            });
        }
        let mut sums = vec![0u32; q2];
        for (s, &t) in map.iter().enumerate() {
            sums[t - 1] += source.entries()[s];
        }
        let mut parity = Vec::with_capacity(q2);
        for (i, &sum) in sums.iter().enumerate() {
            let t = target.entries()[i];
            if sum > t {
                return Err(Error::Domain {
                    detail: format!("preimage sum {sum} exceeds target entry {t} at position {}", i + 1),
                });
            }
            let parity_ok = sum % 2 == t % 2;
            if require_parity && !parity_ok {
                return Err(Error::Domain {
                    detail: format!("preimage sum {sum} has wrong parity for target entry {t} at position {}", i + 1),
                });
            }
            parity.push(parity_ok);
        }
        Ok(Morphism { source, target, map, parity })
    }
}

fn prefix_sums(entries: &[u32]) -> Vec<u32> {
    let mut p = Vec::with_capacity(entries.len() + 1);
    p.push(0);
    for &e in entries {
        p.push(p.last().unwrap() + e);
    }
    p
}

/// Contiguous-run feasibility: can the source be split into q2 consecutive
/// (possibly empty) runs with run i summing to ≤ target(i), and — when
/// `parity` — with matching parity (empty runs then force even targets)?
fn runs_feasible(source: &[u32], target: &[u32], parity: bool) -> bool {
    let q1 = source.len();
    let prefix = prefix_sums(source);
    let mut reach = vec![false; q1 + 1];
    reach[0] = true;
    for &t in target {
        let mut next = vec![false; q1 + 1];
        for i in 0..=q1 {
            if !reach[i] {
                continue;
            }
            for l in 0..=(q1 - i) {
                let sum = prefix[i + l] - prefix[i];
                if sum > t {
                    break;
                }
                if !parity || sum % 2 == t % 2 {
                    next[i + l] = true;
                }
            }
        }
        reach = next;
    }
    reach[q1]
}

fn enumerate_maps(source: &[u32], target: &[u32], parity: bool) -> Vec<Vec<usize>> {
    let q1 = source.len();
    let q2 = target.len();
    let prefix = prefix_sums(source);
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(q1);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        t: usize,
        q1: usize,
        q2: usize,
        prefix: &[u32],
        target: &[u32],
        parity: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if t == q2 {
            if i == q1 {
                out.push(cur.clone());
            }
            return;
        }
        for l in 0..=(q1 - i) {
            let sum = prefix[i + l] - prefix[i];
            if sum > target[t] {
                break;
            }
            if !parity || sum % 2 == target[t] % 2 {
                cur.resize(i + l, t + 1);
                rec(i + l, t + 1, q1, q2, prefix, target, parity, cur, out);
                cur.truncate(i);
            }
        }
    }

    rec(0, 0, q1, q2, &prefix, target, parity, &mut cur, &mut out);
    out.sort();
    out
}

/// Whether a degeneration map ω1 → ω2 exists under the full conditions
/// (monotone runs, sums ≤ targets, parity per target, missed targets even).
/// Equivalent to [`reachable_bfs`] but polynomial in the support sizes.
pub fn mor_exists(w1: &Composition, w2: &Composition) -> bool {
    runs_feasible(w1.entries(), w2.entries(), true)
}

/// All degeneration maps ω1 → ω2, in lexicographic map order.
pub fn mor_enumerate(w1: &Composition, w2: &Composition) -> Vec<Morphism> {
    enumerate_maps(w1.entries(), w2.entries(), true)
        .into_iter()
        .map(|map| {
            Morphism::validate(w1.clone(), w2.clone(), map, true)
                .expect("enumerated maps satisfy the conditions")
        })
        .collect()
}

/// The degeneration order: ω1 ≽ ω2 (ω2 reachable from ω1 by merges and
/// inserts). Decided via [`mor_exists`].
pub fn geq(w1: &Composition, w2: &Composition) -> bool {
    mor_exists(w1, w2)
}

/// Brute-force breadth-first reachability from ω1 to ω2 over single
/// operations, norm-capped at |ω2|. Exponential; oracle use only.
pub fn reachable_bfs(w1: &Composition, w2: &Composition) -> bool {
    let cap = w2.norm();
    if w1.norm() > cap || !(cap - w1.norm()).is_multiple_of(2) {
        return false;
    }
    let mut seen: BTreeSet<Composition> = BTreeSet::new();
    let mut frontier: BTreeSet<Composition> = BTreeSet::new();
    frontier.insert(w1.clone());
    seen.insert(w1.clone());
    while !frontier.is_empty() {
        if frontier.contains(w2) {
            return true;
        }
        let mut next = BTreeSet::new();
        for w in &frontier {
            for s in w.successors(cap) {
                if seen.insert(s.clone()) {
                    next.insert(s);
                }
            }
        }
        frontier = next;
    }
    false
}

fn require_bullet(w: &Composition) -> Result<()> {
    if w.is_bullet() {
        Ok(())
    } else {
        Err(Error::Domain {
            detail: format!("({w}) is not a realizable single-arc pattern"),
        })
    }
}

/// Whether a monotone run map ω1 → ω2 with run sums ≤ targets exists, with
/// no parity constraints — the morphism test on realizable patterns.
pub fn bullet_mor_exists(w1: &Composition, w2: &Composition) -> Result<bool> {
    require_bullet(w1)?;
    require_bullet(w2)?;
    Ok(runs_feasible(w1.entries(), w2.entries(), false))
}

/// All run maps ω1 → ω2 without parity constraints, for realizable patterns.
pub fn bullet_mor_enumerate(w1: &Composition, w2: &Composition) -> Result<Vec<Morphism>> {
    require_bullet(w1)?;
    require_bullet(w2)?;
    Ok(enumerate_maps(w1.entries(), w2.entries(), false)
        .into_iter()
        .map(|map| {
            Morphism::validate(w1.clone(), w2.clone(), map, false)
                .expect("enumerated maps satisfy the conditions")
        })
        .collect())
}

/// The occurrence order on realizable patterns: ω1 ≽ ω2 when ω2 occurs as a
/// string or atom of the deconstruction of some resolution ω of... — more
/// precisely, when some even-norm ω with `geq(ω, ω2)` carries ω1 as one of
/// its deconstruction blocks. The generic/bigger element is the one occurring
/// as a block of a resolution. Exhaustive over norms; oracle use only.
pub fn bullet_geq_oracle(w1: &Composition, w2: &Composition) -> Result<bool> {
    require_bullet(w1)?;
    require_bullet(w2)?;
    if w1 == w2 {
        return Ok(true);
    }
    let lo = w1.norm();
    let hi = w2.norm();
    if lo > hi {
        return Ok(false);
    }
    let mut m = lo;
    while m <= hi {
        for cand in compositions_of_norm(m) {
            if !geq(&cand, w2) {
                continue;
            }
            let blocks = cand.decompose().expect("even norm by construction");
            if blocks.blocks.iter().any(|b| &b.element == w1) {
                return Ok(true);
            }
        }
        m += 2;
    }
    Ok(false)
}

/// All compositions of exact norm n, in enumeration order. 2^(n−1) of them
/// for n ≥ 1; the empty composition alone for n = 0.
pub fn compositions_of_norm(n: u32) -> Vec<Composition> {
    fn rec(rest: u32, acc: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(acc.clone()).expect("positive entries"));
            return;
        }
        for a in 1..=rest {
            acc.push(a);
            rec(rest - a, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenerationMode {
    Exact,
    Upto,
}

/// The label universe of degree d: compositions of norm exactly d, or —
/// `Upto` — of norm ≤ d with norm ≡ d (mod 2), the empty composition
/// included when d is even. Enumeration order.
pub fn generate_omega(d: u32, mode: GenerationMode) -> Vec<Composition> {
    let mut out = Vec::new();
    match mode {
        GenerationMode::Exact => out.extend(compositions_of_norm(d)),
        GenerationMode::Upto => {
            let mut m = d % 2;
            while m <= d {
                out.extend(compositions_of_norm(m));
                m += 2;
            }
        }
    }
    out.sort();
    out
}

/// All realizable single-arc patterns with reduced norm ≤ n, in enumeration
/// order. Their norms are even and bounded by 2n + 2.
pub fn generate_bullet(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut m = 2;
    while m <= 2 * n + 2 {
        for w in compositions_of_norm(m) {
            if w.is_bullet() && w.reduced_norm() <= n {
                out.push(w);
            }
        }
        m += 2;
    }
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosetKind {
    Omega,
    Bullet,
}

/// A finite graded poset of compositions with its Hasse cover relation.
/// Covers are (bigger index, smaller index) pairs; the grade is the reduced
/// norm, rising toward the degenerate elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePoset {
    pub kind: PosetKind,
    pub elements: Vec<Composition>,
    pub covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    pub fn index_of(&self, w: &Composition) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }

    /// Elements covered by `w` (one grade more degenerate, no intermediate).
    pub fn covered_by(&self, w: &Composition) -> Vec<Composition> {
        match self.index_of(w) {
            None => Vec::new(),
            Some(i) => self
                .covers
                .iter()
                .filter(|&&(a, _)| a == i)
                .map(|&(_, b)| self.elements[b].clone())
                .collect(),
        }
    }
}

/// Builds the Hasse diagram of the given elements under the chosen order
/// (`Omega`: the degeneration order; `Bullet`: the occurrence order). The
/// caller guarantees the element list is order-closed within its range, as
/// the `generate_*` outputs are.
pub fn hasse(elements: &[Composition], kind: PosetKind) -> Result<FinitePoset> {
    let n = elements.len();
    let mut strict = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let rel = match kind {
                PosetKind::Omega => geq(&elements[i], &elements[j]),
                PosetKind::Bullet => bullet_geq_oracle(&elements[i], &elements[j])?,
            };
            strict[i * n + j] = rel;
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !strict[i * n + j] {
                continue;
            }
            let has_mid = (0..n).any(|k| strict[i * n + k] && strict[k * n + j]);
            if !has_mid {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(FinitePoset {
        kind,
        elements: elements.to_vec(),
        covers,
    })
}

/// All resolutions of ω within `universe` lying exactly k operations above:
/// elements u with `geq(u, ω)` and reduced_norm(ω) − reduced_norm(u) = k.
pub fn pred_at_distance(
    w: &Composition,
    k: u32,
    universe: &[Composition],
) -> BTreeSet<Composition> {
    universe
        .iter()
        .filter(|u| {
            u.reduced_norm() + k == w.reduced_norm() && geq(u, w)
        })
        .cloned()
        .collect()
}
