//! Renders Hasse diagrams of the degeneration orders as Graphviz DOT, with
//! elements ranked by reduced norm.
//!
//!     cargo run --example hasse_dot | dot -Tsvg > orders.svg

use tangency::dot::poset_dot;
use tangency::poset::{generate_bullet, generate_omega, hasse, GenerationMode, PosetKind};

fn main() {
    let universe = generate_omega(4, GenerationMode::Upto);
    let full = hasse(&universe, PosetKind::Omega).unwrap();
    println!("{}", poset_dot(&full));

    let bullets = generate_bullet(3);
    let occurrence = hasse(&bullets, PosetKind::Bullet).unwrap();
    println!("{}", poset_dot(&occurrence));
}
