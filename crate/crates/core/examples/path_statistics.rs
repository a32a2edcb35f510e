//! Area, depth and down-step matching of a path.
//!
//! cargo run --example path_statistics -- "U1 U2 D D D U0 D"

use lukasiewicz::LukasPath;

fn main() -> Result<(), lukasiewicz::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "U1 U2 D D D U0 D".to_string());
    let path = LukasPath::parse(&text)?;

    println!("path      {path}");
    println!("json      {}", path.to_json());
    println!("profile   ({})", path.profile());
    println!("multiset  {{{}}}", path.profile_multiset());
    println!("heights   {:?}", path.start_heights());
    println!("area      {:?} = {}", path.area_vector().entries(), path.area());
    println!("depth     {:?} = {}", path.depth_vector().entries(), path.depth());

    println!("matching (1-based step positions):");
    for (down, m) in &path.match_downs().pairs {
        println!("  D at {} -> U at {} (rank {})", down + 1, m.up + 1, m.rank);
    }
    assert_eq!(path.match_downs(), path.match_downs_by_ray());
    Ok(())
}
