//! Bounded re-enumeration of valid critical e-graphs.
//!
//! Run: `cargo run --release --example enumeration`

use fraccrit::catalog::enumerate_critical;
use fraccrit::egraph::serialize_egraph;

fn main() {
    let found = enumerate_critical(8, 12).unwrap();
    println!("valid critical e-graphs with at most 8 vertices:");
    for g in &found {
        println!(
            "  n={} nails={}  {}",
            g.n(),
            g.nail_count(),
            serialize_egraph(g).unwrap()
        );
    }
}
