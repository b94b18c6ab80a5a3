//! The stratification of real degree-d polynomials by root pattern: cell
//! dimensions, f-vectors, and Euler characteristics in the four ambient
//! flavors (full coefficient space, the balanced slice, and their spheres).
//!
//!     cargo run --example polynomial_strata

use tangency::cells::{cell_dimension, f_vector, Ambient};
use tangency::composition::Composition;

fn c(entries: &[u32]) -> Composition {
    Composition::new(entries.to_vec()).unwrap()
}

fn main() {
    // Each pattern ω labels one cell of codimension |ω|' in the space of
    // degree-d polynomials; restricting to zero coefficient sum or to the
    // unit sphere drops the dimension by one each.
    let d = 6;
    for w in [c(&[]), c(&[2]), c(&[1, 1, 2]), c(&[6])] {
        print!("pattern {w}:");
        for ambient in [Ambient::Full, Ambient::Balanced, Ambient::Sphere, Ambient::BalancedSphere] {
            match cell_dimension(&w, d, ambient) {
                Ok(dim) => print!("  {ambient} {dim}"),
                Err(_) => print!("  {ambient} —"),
            }
        }
        println!();
    }
    println!();

    // The maximally degenerate pattern (d) is the cone apex; on the sphere
    // it splits into an antipodal pair, and the balanced sphere omits it.
    for ambient in [Ambient::Balanced, Ambient::Sphere, Ambient::BalancedSphere] {
        println!("d=4, {ambient}: f = {}", f_vector(4, ambient));
    }
    println!();

    // Euler characteristics certify the sphere structure degree by degree.
    println!("d   sphere χ   balanced-sphere χ");
    for d in 2..=8u32 {
        let s = f_vector(d, Ambient::Sphere).euler_characteristic();
        let b = f_vector(d, Ambient::BalancedSphere).euler_characteristic();
        println!("{d}       {s:2}                  {b:2}");
    }
}
