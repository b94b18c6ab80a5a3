//! Cell structure of the stratified spaces of real degree-d polynomials:
//! per-label cell dimensions in four ambient variants, f-vectors and Euler
//! characteristics, merge-closure membership, ramification counts of the
//! cell-resolution maps, and normal stars of strata.

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::poset::{generate_omega, geq, GenerationMode};
use crate::{Error, Result};

/// The four ambient spaces a multiplicity stratum can live in:
/// all monic polynomials of degree d (`Full`), the root-sum-zero slice
/// (`Balanced`), and the radius spheres of either (`Sphere`,
/// `BalancedSphere`), which cut one more dimension and lose the cone apex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    Full,
    Balanced,
    Sphere,
    BalancedSphere,
}

impl Ambient {
    pub fn is_sphere(self) -> bool {
        matches!(self, Ambient::Sphere | Ambient::BalancedSphere)
    }

    /// Top cell dimension for degree d.
    pub fn top_dimension(self, d: u32) -> u32 {
        match self {
            Ambient::Full => d,
            Ambient::Balanced | Ambient::Sphere => d.saturating_sub(1),
            Ambient::BalancedSphere => d.saturating_sub(2),
        }
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Ambient::Full => "full",
            Ambient::Balanced => "balanced",
            Ambient::Sphere => "sphere",
            Ambient::BalancedSphere => "balanced_sphere",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Ambient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Ambient::Full),
            "balanced" => Ok(Ambient::Balanced),
            "sphere" => Ok(Ambient::Sphere),
            "balanced_sphere" | "balanced-sphere" => Ok(Ambient::BalancedSphere),
            other => Err(Error::Parse {
                detail: format!("unknown ambient {other:?}"),
            }),
        }
    }
}

/// Cell counts per dimension, index = dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// Alternating sum Σ (−1)^i counts[i].
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Alternating sum of an f-vector.
pub fn euler_characteristic(f: &FVector) -> i64 {
    f.euler_characteristic()
}

fn check_label(w: &Composition, d: u32) -> Result<()> {
    let norm = w.norm();
    if norm > d || norm % 2 != d % 2 {
        return Err(Error::Degree { norm, degree: d });
    }
    Ok(())
}

fn is_apex(w: &Composition, d: u32) -> bool {
    w.entries() == [d]
}

/// Dimension of the stratum labeled ω inside the chosen degree-d ambient.
/// The codimension is always the reduced norm; sphere ambients reject the
/// one-point label (d) — it is the cone apex, whose sphere trace is not a
/// single cell.
pub fn cell_dimension(w: &Composition, d: u32, ambient: Ambient) -> Result<u32> {
    check_label(w, d)?;
    if ambient.is_sphere() && is_apex(w, d) {
        return Err(Error::Apex);
    }
    let dim = ambient.top_dimension(d) as i64 - w.reduced_norm() as i64;
    if dim < 0 {
        // unreachable for well-formed labels with d ≥ 2; guards tiny degrees
        return Err(Error::Degree { norm: w.norm(), degree: d });
    }
    Ok(dim as u32)
}

/// Cell counts of the degree-d stratification by dimension. Sphere note: the
/// apex label (d) meets the sphere in the two antipodal root configurations
/// (all roots at ±radius), so in `Sphere` it contributes two 0-cells; in
/// `BalancedSphere` the apex is the excluded cone point and contributes none.
pub fn f_vector(d: u32, ambient: Ambient) -> FVector {
    let mut counts = vec![0u64; ambient.top_dimension(d) as usize + 1];
    for w in generate_omega(d, GenerationMode::Upto) {
        if ambient.is_sphere() && is_apex(&w, d) {
            if ambient == Ambient::Sphere {
                counts[0] += 2;
            }
            continue;
        }
        let dim = cell_dimension(&w, d, ambient).expect("label fits its own universe");
        counts[dim as usize] += 1;
    }
    FVector { counts }
}

/// Whether `candidate` is a contiguous-block-sum coarsening of ω — i.e.
/// reachable by merges alone. Decided by prefix-sum containment: equal
/// totals, and every prefix sum of the candidate is a prefix sum of ω.
pub fn merge_closure_contains(w: &Composition, candidate: &Composition) -> bool {
    if w.norm() != candidate.norm() {
        return false;
    }
    let sums = |c: &Composition| -> std::collections::BTreeSet<u32> {
        let mut acc = 0;
        c.entries()
            .iter()
            .map(|&e| {
                acc += e;
                acc
            })
            .collect()
    };
    let big = sums(w);
    sums(candidate).is_subset(&big)
}

/// Deletes zero values from a multiplicity vector and repackages the rest
/// as a composition.
fn repackage(values: &[u32]) -> Composition {
    Composition::new(values.iter().copied().filter(|&v| v > 0).collect())
        .expect("positive after filtering")
}

/// Ramification count o(ω, ω̃): the number of ways the boundary stratum ω̃
/// is hit by the closure of the resolution cell of ω — equivalently, the
/// number of per-position reductions ω″ with 0 ≤ 2ω″(i) ≤ ω̃(i) such that
/// deleting the zeros of ω̃ − 2ω″ lands in the merge closure of ω. Requires
/// ω ≽ ω̃; the result is ≥ 1.
pub fn ramification_o(w: &Composition, wt: &Composition) -> Result<u64> {
    if !geq(w, wt) {
        return Err(Error::Order {
            detail: format!("({w}) does not degenerate to ({wt})"),
        });
    }
    let q = wt.support_size();
    let caps: Vec<u32> = wt.entries().iter().map(|&e| e / 2).collect();
    let mut count = 0u64;
    let mut reduction = vec![0u32; q];
    loop {
        let remaining: Vec<u32> = wt
            .entries()
            .iter()
            .zip(&reduction)
            .map(|(&e, &r)| e - 2 * r)
            .collect();
        let packed = repackage(&remaining);
        if merge_closure_contains(w, &packed) {
            debug_assert_eq!(
                2 * reduction.iter().sum::<u32>(),
                wt.norm() - w.norm(),
                "reduction total is forced by the norms"
            );
            count += 1;
        }
        // odometer over ∏ [0, caps(i)]
        let mut pos = 0;
        loop {
            if pos == q {
                debug_assert!(count >= 1, "the zero reduction certifies o ≥ 1 when comparable");
                return Ok(count);
            }
            if reduction[pos] < caps[pos] {
                reduction[pos] += 1;
                break;
            }
            reduction[pos] = 0;
            pos += 1;
        }
    }
}

/// How many one-dimension-higher cells contain the stratum ω̃ in its star:
/// reduced_norm(ω̃) + #{i : ω̃(i) = 2} — one per elementary resolution.
pub fn star_multiplicity(wt: &Composition) -> u32 {
    wt.reduced_norm() + wt.entries().iter().filter(|&&e| e == 2).count() as u32
}

/// One cell of a normal star: a resolution label and its dimension within
/// the star (reduced-norm gap down to the center).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCell {
    pub label: Composition,
    pub dim: u32,
}

/// The normal star of the stratum ω inside the degree-d universe: one cell
/// per resolution ω̃ ≽ ω in the universe, graded by reduced-norm gap, with
/// its cover incidences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarComplex {
    pub center: Composition,
    pub universe_degree: u32,
    /// Top star dimension = reduced norm of the center.
    pub reduced_dimension: u32,
    pub cells: Vec<StarCell>,
    /// (bigger cell index, smaller cell index), graded by one dimension.
    pub covers: Vec<(usize, usize)>,
}

impl StarComplex {
    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.reduced_dimension as usize + 1];
        for cell in &self.cells {
            counts[cell.dim as usize] += 1;
        }
        FVector { counts }
    }
}

/// Builds the normal star of ω within the degree-d label universe: cells are
/// all resolutions ω̃ ≽ ω with norm ≤ d and matching parity, of dimension
/// reduced_norm(ω) − reduced_norm(ω̃); covers join consecutive dimensions
/// related by the degeneration order.
pub fn normal_star(w: &Composition, d: u32) -> Result<StarComplex> {
    check_label(w, d)?;
    let rdim = w.reduced_norm();
    let mut cells: Vec<StarCell> = generate_omega(d, GenerationMode::Upto)
        .into_iter()
        .filter(|cand| geq(cand, w))
        .map(|label| {
            let dim = rdim - label.reduced_norm();
            StarCell { label, dim }
        })
        .collect();
    cells.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.label.cmp(&b.label)));

    // the label set is order-closed above ω, so one-grade order pairs are
    // exactly the covers
    let mut covers = Vec::new();
    for (i, big) in cells.iter().enumerate() {
        for (j, small) in cells.iter().enumerate() {
            if big.dim == small.dim + 1 && geq(&big.label, &small.label) {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(StarComplex {
        center: w.clone(),
        universe_degree: d,
        reduced_dimension: rdim,
        cells,
        covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(entries: &[u32]) -> Composition {
        Composition::from(entries)
    }

    #[test]
    fn cell_dimensions() {
        assert_eq!(cell_dimension(&c(&[1, 1, 1, 1]), 4, Ambient::Balanced).unwrap(), 3);
        assert_eq!(cell_dimension(&c(&[4]), 4, Ambient::Balanced).unwrap(), 0);
        assert_eq!(cell_dimension(&c(&[2]), 2, Ambient::Full).unwrap(), 1);
        assert_eq!(cell_dimension(&Composition::empty(), 4, Ambient::Sphere).unwrap(), 3);

        assert!(matches!(
            cell_dimension(&c(&[4]), 4, Ambient::Sphere),
            Err(Error::Apex)
        ));
        assert!(matches!(
            cell_dimension(&c(&[4]), 4, Ambient::BalancedSphere),
            Err(Error::Apex)
        ));
        assert!(matches!(
            cell_dimension(&c(&[3]), 4, Ambient::Full),
            Err(Error::Degree { .. })
        ));
        assert!(matches!(
            cell_dimension(&c(&[1, 4, 1]), 4, Ambient::Full),
            Err(Error::Degree { .. })
        ));
    }

    #[test]
    fn f_vectors_of_small_degrees() {
        assert_eq!(f_vector(4, Ambient::Balanced).counts, vec![1, 3, 4, 3]);
        assert_eq!(f_vector(4, Ambient::BalancedSphere).counts, vec![3, 4, 3]);
        assert_eq!(f_vector(2, Ambient::Full).counts, vec![0, 1, 2]);
        // sphere: the apex label contributes its two antipodal configurations
        assert_eq!(f_vector(2, Ambient::Sphere).counts, vec![2, 2]);
        assert_eq!(f_vector(4, Ambient::Sphere).counts, vec![2, 3, 4, 3]);
    }

    #[test]
    fn euler_characteristics_of_spheres() {
        for d in 2..=8u32 {
            let chi = f_vector(d, Ambient::Sphere).euler_characteristic();
            assert_eq!(chi, 1 + if d % 2 == 0 { -1 } else { 1 }, "sphere d={d}");
            let chi = f_vector(d, Ambient::BalancedSphere).euler_characteristic();
            assert_eq!(chi, 1 + if d % 2 == 0 { 1 } else { -1 }, "balanced sphere d={d}");
        }
    }

    #[test]
    fn euler_characteristic_is_the_alternating_sum() {
        assert_eq!(FVector { counts: vec![1, 2] }.euler_characteristic(), -1);
        assert_eq!(FVector { counts: vec![3, 4, 3] }.euler_characteristic(), 2);
        assert_eq!(FVector { counts: vec![] }.euler_characteristic(), 0);
    }

    #[test]
    fn merge_closure_membership() {
        assert!(merge_closure_contains(&c(&[1, 1]), &c(&[2])));
        assert!(!merge_closure_contains(&c(&[1, 1]), &Composition::empty()));
        assert!(merge_closure_contains(&c(&[1, 2, 1]), &c(&[1, 3])));
        assert!(merge_closure_contains(&c(&[1, 2, 1]), &c(&[3, 1])));
        assert!(merge_closure_contains(&c(&[1, 2, 1]), &c(&[4])));
        assert!(!merge_closure_contains(&c(&[1, 2, 1]), &c(&[2, 2])));
        assert!(merge_closure_contains(&c(&[1, 2, 1]), &c(&[1, 2, 1])));
    }

    #[test]
    fn ramification_counts() {
        let w = c(&[1, 4, 1]);
        assert_eq!(ramification_o(&w, &w).unwrap(), 1);
        assert_eq!(ramification_o(&c(&[1, 1]), &c(&[2])).unwrap(), 1);
        assert_eq!(ramification_o(&c(&[2]), &c(&[2, 2])).unwrap(), 2);
        assert_eq!(ramification_o(&c(&[1, 1]), &c(&[2, 2])).unwrap(), 2);
        assert!(matches!(
            ramification_o(&c(&[2]), &c(&[1, 1])),
            Err(Error::Order { .. })
        ));
    }

    #[test]
    fn star_multiplicities() {
        assert_eq!(star_multiplicity(&c(&[2])), 2);
        assert_eq!(star_multiplicity(&c(&[3])), 2);
        assert_eq!(star_multiplicity(&c(&[1, 1])), 0);
        assert_eq!(star_multiplicity(&c(&[2, 2])), 4);
    }

    #[test]
    fn normal_star_of_the_top_degeneration() {
        let star = normal_star(&c(&[4]), 4).unwrap();
        assert_eq!(star.f_vector().counts, vec![1, 3, 4, 3]);
        let dim2: Vec<_> = star
            .cells
            .iter()
            .filter(|cell| cell.dim == 2)
            .map(|cell| cell.label.clone())
            .collect();
        assert_eq!(
            dim2,
            vec![c(&[2]), c(&[1, 1, 2]), c(&[1, 2, 1]), c(&[2, 1, 1])]
        );
        for &(a, b) in &star.covers {
            assert_eq!(star.cells[a].dim, star.cells[b].dim + 1);
        }
    }

    #[test]
    fn small_normal_stars() {
        // both resolutions of (2) appear: the split (1,1) and the empty type
        let star = normal_star(&c(&[2]), 2).unwrap();
        let labels: Vec<_> = star.cells.iter().map(|cl| (cl.label.clone(), cl.dim)).collect();
        assert_eq!(
            labels,
            vec![
                (c(&[2]), 0),
                (Composition::empty(), 1),
                (c(&[1, 1]), 1)
            ]
        );

        let star = normal_star(&c(&[1, 1]), 2).unwrap();
        assert_eq!(star.cells.len(), 1);
        assert_eq!(star.cells[0].dim, 0);
    }

    #[test]
    fn star_counts_match_distance_queries() {
        use crate::poset::pred_at_distance;
        let universe = generate_omega(6, GenerationMode::Upto);
        for w in &universe {
            let star = normal_star(w, 6).unwrap();
            let f = star.f_vector();
            for (k, &count) in f.counts.iter().enumerate() {
                assert_eq!(
                    count as usize,
                    pred_at_distance(w, k as u32, &universe).len(),
                    "star of ({w}) at dimension {k}"
                );
            }
        }
    }
}
