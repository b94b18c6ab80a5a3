//! A walking tour of the two degeneration orders on integer compositions:
//! the full order on arbitrary multiplicity patterns and the occurrence
//! order on realizable single-arc patterns.
//!
//!     cargo run --example poset_tour

use tangency::composition::Composition;
use tangency::poset::{
    bullet_geq_oracle, generate_bullet, generate_omega, geq, mor_enumerate, GenerationMode,
};

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn main() {
    // A composition records root multiplicities in position order. Its norm
    // is the total multiplicity; the reduced norm grades the degeneration
    // order: resolving (splitting or deleting roots) lowers it.
    let w = c(&[1, 2, 1]);
    println!("ω = {w}: |ω| = {}, |ω|' = {}, μ = {}", w.norm(), w.reduced_norm(), w.virtual_multiplicity());

    // Two elementary degenerations: merge adjacent entries, or insert a new
    // double root. Both raise the reduced norm by exactly one.
    let merged = w.merge(1).unwrap();
    let inserted = w.insert(0).unwrap();
    println!("merge at 1:  {w} ⇒ {merged}");
    println!("insert at 0: {w} ⇒ {inserted}");
    println!();

    // The degree-d universe: all patterns a degree-d polynomial can show.
    for d in [2u32, 4, 6, 8] {
        let upto = generate_omega(d, GenerationMode::Upto);
        let exact = generate_omega(d, GenerationMode::Exact);
        println!("degree {d}: {:3} patterns of norm ≤ {d} ({} of norm exactly {d})", upto.len(), exact.len());
    }
    println!();

    // Realizable single-arc patterns: odd ends with even interior, or a
    // lone even multiplicity.
    for n in 0..=5u32 {
        println!("≤ {n} tangencies: {:2} realizable patterns", generate_bullet(n).len());
    }
    println!();

    // Order queries. ω₁ ≽ ω₂ means ω₁ resolves the more degenerate ω₂ —
    // note that inserts let a *lower-norm* pattern dominate a higher-norm
    // one: (2) degenerates onto (4) through (2,2).
    for (a, b) in [
        (c(&[1, 1]), c(&[2])),
        (c(&[2]), c(&[4])),
        (c(&[4]), c(&[2])),
        (c(&[1, 1]), c(&[1, 2, 1])),
        (c(&[1, 2, 1]), c(&[1, 1])),
    ] {
        println!("{a} ≽ {b}: {}", geq(&a, &b));
    }
    println!();

    // A morphism witnesses comparability: a monotone surjection onto run
    // structure, with parity-compatible fibers and even missed targets.
    let source = c(&[1, 1]);
    let target = c(&[1, 2, 1]);
    for m in mor_enumerate(&source, &target) {
        println!("morphism {source} → {target}: sends positions to {:?}", m.map);
    }
    println!();

    // The occurrence order on realizable patterns is finer than "a parity-
    // free morphism exists": the source must also occur as a block of some
    // even-norm pattern dominating the target.
    let a = c(&[3, 1]);
    let b = c(&[1, 4, 1]);
    println!("{a} ≽• {b}: {}", bullet_geq_oracle(&a, &b).unwrap());
    let atom = c(&[2]);
    println!(
        "{atom} ≽• {b}: {} (an isolated atom cannot occur inside a dominating pattern)",
        bullet_geq_oracle(&atom, &b).unwrap()
    );
}
