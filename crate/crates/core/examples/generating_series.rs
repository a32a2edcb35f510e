//! Solves the root-decomposition recursion for the generating function and
//! checks every coefficient against enumeration.

use lukasiewicz::series::{verify_series, ProfileSeries};

fn main() {
    let series = ProfileSeries::solve(3, 2);
    for (m, poly) in series.coeffs() {
        println!("{:<12} {poly}", format!("{{{m}}}"));
    }
    let mismatches = verify_series(5, 3);
    println!("order 5, degrees <= 3: {} mismatches", mismatches.len());
}
