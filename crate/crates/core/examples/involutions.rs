//! The mirror involution and the mirror-then-lodestar-swap involution, both
//! exchanging area and depth.

use lukasiewicz::involution::{lodestar_involution, mirror_involution};
use lukasiewicz::{LukasPath, PlaneTree};

fn show(label: &str, path: &LukasPath) {
    println!(
        "  {label:<6} {path:<22} area {} depth {} first {:?} last {:?}",
        path.area(),
        path.depth(),
        path.first_up_degree(),
        path.last_up_degree()
    );
}

fn main() {
    for text in ["U1 U1 D D D", "U1 U0 D U2 D D D", "U2 U0 D U1 D D D"] {
        let path = LukasPath::parse(text).unwrap();
        let tree = PlaneTree::from_path(&path);
        println!("{tree}");
        if let Some(stars) = tree.mirror().lodestars() {
            println!("  mirrored lodestars: left {} right {}", stars.left, stars.right);
        }
        show("P", &path);
        show("psi", &mirror_involution(&path));
        show("phi", &lodestar_involution(&path));
    }
}
