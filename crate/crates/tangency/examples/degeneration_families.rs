//! One-parameter families of polynomials crossing a degeneration: sampling
//! the divisor type along the parameter and checking each observed
//! transition against the degeneration order.
//!
//!     cargo run --example degeneration_families

use num::BigRational;
use tangency::classify::{classify_family, parse_samples, FamilyPolynomial};

fn main() {
    // u² − t²: two simple roots ±t that merge into a double root at t = 0.
    // The text form lists u-coefficients (ascending) separated by ';', each
    // a comma list of t-coefficients: "0,0,-1;0;1" reads -t² + 0·u + u².
    let family: FamilyPolynomial = "0,0,-1;0;1".parse().unwrap();
    let samples = parse_samples("1,1/2,0").unwrap();
    let report = classify_family(&family, &samples).unwrap();
    for row in &report.rows {
        println!("t = {:>3}: type {}", row.t, row.divisor_type);
    }
    for tr in &report.transitions {
        println!(
            "transition {} ⇒ {} between t = {} and t = {}: order {}, reduced norm rises {}",
            tr.generic, tr.degenerate, tr.from_t, tr.to_t, tr.order_holds, tr.reduced_norm_rises
        );
    }
    println!("consistent: {}", report.consistent);
    println!();

    // u² + t: no real roots for t > 0, a double root exactly at t = 0 —
    // the empty pattern degenerates onto (2).
    let family: FamilyPolynomial = "0,1;0;1".parse().unwrap();
    let report = classify_family(&family, &parse_samples("1,1/4,0").unwrap()).unwrap();
    for row in &report.rows {
        println!("t = {:>3}: type {}", row.t, row.divisor_type);
    }
    println!("consistent: {}", report.consistent);
    println!();

    // (u − t)(u − 2t)(u − 3t) = u³ − 6t·u² + 11t²·u − 6t³: three simple
    // roots collapsing together at t = 0.
    let family: FamilyPolynomial = "0,0,0,-6;0,0,11;0,-6;1".parse().unwrap();
    let samples: Vec<BigRational> = parse_samples("1,1/3,0").unwrap();
    let report = classify_family(&family, &samples).unwrap();
    for row in &report.rows {
        println!("t = {:>3}: type {}", row.t, row.divisor_type);
    }
    for tr in &report.transitions {
        println!("transition {} ⇒ {}: passed {}", tr.generic, tr.degenerate, tr.passed());
    }
    println!("consistent: {}", report.consistent);
}
