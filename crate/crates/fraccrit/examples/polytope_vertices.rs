//! Vertex enumeration of rational polytopes by double description.
//!
//! Reproduces the eight tabulated vertex rows of the slack polytope (the
//! rows with a1 <= a3).
//!
//! Run: `cargo run --release --example polytope_vertices`

use fraccrit::linsys::LinearSystem;
use fraccrit::polytope::{enumerate_vertices, Polytope};
use fraccrit::rat::Rat;

fn main() {
    let r = Rat::int;
    let mut sys = LinearSystem::with_nonneg_vars(4);
    sys.var_names = ["a1", "a2", "a3", "a4"].map(String::from).to_vec();
    sys.push_le(vec![r(1), r(1), r(1), r(1)], r(5));
    sys.push_le(vec![r(0), r(1), r(1), r(0)], r(4));
    sys.push_le(vec![r(1), r(1), r(0), r(0)], r(4));
    println!("{}", sys);
    let vertices = enumerate_vertices(&Polytope { system: sys }).unwrap();
    println!("vertices with a1 <= a3:");
    for v in vertices.iter().filter(|v| v[0] <= v[2]) {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("  ({})", row.join(", "));
    }
}
