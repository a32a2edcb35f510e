//! Area/depth polynomials for multiset and profile families, with their
//! q,t-symmetry.
//!
//! cargo run --example qt_polynomials -- 0:1,1:2,2:1

use lukasiewicz::poly::{c_tilde, c_tilde_profile};
use lukasiewicz::{DegreeMultiset, Profile};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "0:1,1:2,2:1".to_string());
    let m: DegreeMultiset = text.parse().expect("multiset like 0:1,1:2");

    let all = c_tilde(&m, None, None);
    println!("M = {{{m}}}: {} paths", all.eval(1, 1));
    println!("  C[M]        = {all}  symmetric: {}", all.is_symmetric());

    for a in m.distinct() {
        let rest = m.without(a).unwrap();
        let p = c_tilde(&rest, Some(a), None);
        println!("  first {a}     = {p}  symmetric: {}", p.is_symmetric());
        for b in rest.distinct() {
            let inner = rest.without(b).unwrap();
            let p = c_tilde(&inner, Some(a), Some(b));
            println!("  first {a} last {b} = {p}  symmetric: {}", p.is_symmetric());
        }
    }

    // Changing the last profile entry never changes the polynomial.
    for k in [vec![1, 2, 0], vec![2, 1, 1]] {
        let profile = Profile::new(k);
        let polys: Vec<String> = (0..3).map(|a| c_tilde_profile(&profile.extended(a)).to_string()).collect();
        println!("profile ({profile}, *): {polys:?}");
    }
}
