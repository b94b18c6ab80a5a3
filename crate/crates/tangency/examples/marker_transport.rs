//! The marker calculus: block structure of even-norm patterns, marked
//! elementary operations, and transport of a marker along degenerations —
//! including a genuine path-dependence.
//!
//!     cargo run --example marker_transport

use tangency::composition::Composition;
use tangency::markers::{
    blocks, marked_insert, marked_merge, marker_set, transport, transport_set, MarkedComposition,
};

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn main() {
    // An even-norm pattern splits into maximal components on which the
    // polynomial stays ≤ 0; each component is marked by its first position.
    for w in [c(&[1, 1]), c(&[2, 2]), c(&[1, 2, 1, 1, 3]), c(&[2, 1, 1, 2])] {
        let structure = blocks(&w).unwrap();
        let spans: Vec<String> = structure
            .blocks
            .iter()
            .map(|b| format!("[{}..{}]@{}", b.start, b.end, b.marker))
            .collect();
        println!("{w}: markers {:?}, components {}", marker_set(&w).unwrap(), spans.join(" "));
    }
    println!();

    // Marked operations move the marker deterministically: merges within a
    // component keep it, merges that fuse components re-mark the union, and
    // inserts shift it past the new entry.
    let m = MarkedComposition::new(c(&[1, 1, 1, 1]), 3).unwrap();
    for j in 1..=3usize {
        println!("merge {m} at {j}  ⇒ {}", marked_merge(&m, j).unwrap());
    }
    let m = MarkedComposition::new(c(&[1, 1]), 1).unwrap();
    for j in 0..=2usize {
        println!("insert {m} at {j} ⇒ {}", marked_insert(&m, j).unwrap());
    }
    println!();

    // Transport pushes a marker down an entire degeneration, following
    // every path of elementary operations.
    let m = MarkedComposition::new(c(&[1, 1, 1, 1]), 3).unwrap();
    let target = c(&[2, 2]);
    println!("transport {m} onto {target}: lands at {}", transport(&m, &target).unwrap());

    // Path-dependence is real: from ((1,1), k=1) onto (2,2) the two insert
    // positions strand the marker on either component.
    let m = MarkedComposition::new(c(&[1, 1]), 1).unwrap();
    let landed = transport_set(&m, &target).unwrap();
    println!("transport {m} onto {target}: landing set {landed:?}");
    match transport(&m, &target) {
        Ok(k) => println!("  unexpected single landing {k}"),
        Err(e) => println!("  {e}"),
    }
}
