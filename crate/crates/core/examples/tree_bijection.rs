//! The contour bijection between paths and plane trees, and the thorn
//! statistics carried by each internal node.

use lukasiewicz::{all_paths_of_len, LukasPath, PlaneTree};

fn main() {
    let path = LukasPath::parse("U1 U0 D U2 D D D").unwrap();
    let tree = PlaneTree::from_path(&path);
    println!("{path}  <->  {tree}");

    let thorns = tree.thorns();
    println!("{:<8} {:>6} {:>6} {:>6} {:>6}", "node", "lthorn", "depth", "rthorn", "area");
    let area = path.area_vector();
    let depth = path.depth_vector();
    for (i, (at, _)) in tree.internal_nodes().iter().enumerate() {
        let t = thorns.per_node[i];
        println!(
            "{:<8} {:>6} {:>6} {:>6} {:>6}",
            at.to_string(),
            t.lthorn,
            depth.entries()[i],
            t.rthorn,
            area.entries()[i]
        );
    }

    // Every 7-step path round-trips through its tree.
    let all = all_paths_of_len(7);
    assert!(all.iter().all(|p| PlaneTree::from_path(p).to_path() == *p));
    println!("{} paths with 7 steps round-trip", all.len());
}
