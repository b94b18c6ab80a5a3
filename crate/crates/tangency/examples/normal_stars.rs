//! Normal stars: how a degenerate stratum sits inside the ways of resolving
//! it — the star's cells, its f-vector, the one-step multiplicity, and the
//! ramification count of a resolution.
//!
//!     cargo run --example normal_stars

use tangency::cells::{normal_star, ramification_o, star_multiplicity};
use tangency::composition::Composition;

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn main() {
    // The star of (4) in degree 4: every pattern that resolves a 4-fold
    // root, graded by how many elementary steps the resolution undoes.
    let center = c(&[4]);
    let star = normal_star(&center, 4).unwrap();
    println!("star of {center} in degree 4 (top dimension {}):", star.reduced_dimension);
    for cell in &star.cells {
        println!("  dim {}: {}", cell.dim, cell.label);
    }
    println!("f = {}, {} cover incidences", star.f_vector(), star.covers.len());
    println!();

    // One-step resolutions and their closed-form count |ω|' + #{entries 2}.
    for w in [c(&[4]), c(&[2, 2]), c(&[1, 2, 1])] {
        let preds = w.predecessors_one_step();
        println!("{w}: multiplicity {} — one step up: {}", star_multiplicity(&w),
            preds.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
    }
    println!();

    // Ramification counts the even-remainder splittings a resolution admits.
    for (a, b) in [
        (c(&[2]), c(&[2])),
        (c(&[1, 1]), c(&[2])),
        (c(&[2]), c(&[2, 2])),
        (c(&[1, 1]), c(&[4])),
    ] {
        println!("o({a}, {b}) = {}", ramification_o(&a, &b).unwrap());
    }
}
