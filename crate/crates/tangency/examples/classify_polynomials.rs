//! Exact classification of rational polynomials: isolated real roots with
//! multiplicities, the divisor type, and the negativity components with
//! their markers — all in exact arithmetic, no floating point.
//!
//!     cargo run --example classify_polynomials

use num::BigRational;
use tangency::classify::{classify, expand_from_divisor, negativity_components};
use tangency::poly::{isolated_roots_with_multiplicity, RationalPolynomial};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    // u³ − 4u² + 5u − 2 = (u − 1)²(u − 2): a double root then a simple one.
    let f = RationalPolynomial::from_i64(&[-2, 5, -4, 1]);
    println!("f = {}", f.pretty("u"));
    for root in isolated_roots_with_multiplicity(&f).unwrap() {
        println!("  root in {} with multiplicity {}", root.enclosure, root.multiplicity);
    }
    println!("  divisor type: {}", classify(&f).unwrap());
    println!();

    // Roots that floating point would conflate stay separated:
    // 1/2 versus 1001/2000.
    let close = expand_from_divisor(&[(r(1, 2), 1), (r(1001, 2000), 1)], &[]).unwrap();
    println!("close roots: {}", close.pretty("u"));
    for root in isolated_roots_with_multiplicity(&close).unwrap() {
        println!("  root in {} with multiplicity {}", root.enclosure, root.multiplicity);
    }
    println!();

    // An even-degree example: (u−1)(u−2)(u−3)²(u−4)(u−5) dips below zero on
    // [1,2] and [4,5] and touches at 3 — three negativity components.
    let f = expand_from_divisor(
        &[(r(1, 1), 1), (r(2, 1), 1), (r(3, 1), 2), (r(4, 1), 1), (r(5, 1), 1)],
        &[],
    )
    .unwrap();
    println!("f = {}", f.pretty("u"));
    println!("  divisor type: {}", classify(&f).unwrap());
    for comp in negativity_components(&f).unwrap() {
        println!("  component {comp}");
    }
    println!();

    // Complex pairs shape the curve but not the divisor type.
    let g = expand_from_divisor(&[(r(0, 1), 2)], &[(r(1, 1), r(1, 2), 1)]).unwrap();
    println!("g = {}", g.pretty("u"));
    println!("  divisor type: {}", classify(&g).unwrap());
    for comp in negativity_components(&g).unwrap() {
        println!("  component {comp}");
    }
}
