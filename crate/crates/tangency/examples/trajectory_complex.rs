//! The local trajectory-space model over a realizable boundary pattern: its
//! marked cells, cover incidences, cone structure over the link, and the
//! marker fibers of the label map.
//!
//!     cargo run --example trajectory_complex

use tangency::composition::Composition;
use tangency::tmodel::{build_t_model, fiber_report, link_complex, t_f_vector};

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn main() {
    // Cells over base (4): labels assign a resolution pattern to the single
    // multiplicity-4 zone; each cell carries a marker of the concatenated
    // pattern. The base itself is the unique 0-cell — the cone apex.
    let base = c(&[4]);
    let model = build_t_model(&base).unwrap();
    println!("model over {base}: f = {}", model.f_vector());
    for cell in &model.cells {
        println!("  dim {}: label {} marker {} (stratum {})", cell.dim, cell.label, cell.marker, cell.stratum);
    }
    println!("{} cover incidences; apex = cell {}", model.covers.len(), model.apex());
    println!();

    // The link drops the apex and shifts every dimension down by one: the
    // model is exactly the cone on it.
    let link = link_complex(&base).unwrap();
    println!("link over {base}: f = {}", link.f_vector());
    assert_eq!(model.f_vector().counts[1..], link.f_vector().counts[..]);
    println!();

    // Multi-zone bases multiply: each zone resolves independently.
    let base = c(&[1, 2, 1]);
    println!("model over {base}: f = {}", t_f_vector(&base).unwrap());

    // The fiber report counts the markers over each label — the size of the
    // marker fiber never exceeds half the concatenated norm.
    for (label, count) in fiber_report(&base).unwrap() {
        println!("  label {label}: {count} marker(s)");
    }
}
