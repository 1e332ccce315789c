//! Decide 11/4-colorability of e-graphs and inspect witnesses and
//! certificates.
//!
//! Run: `cargo run --release --example colorability`

use fraccrit::coloring::{colorability, Colorability};
use fraccrit::egraph::parse_egraphs;

fn main() {
    // A 5-cycle with two nailed vertices: not colorable.
    let c5 = &parse_egraphs("a:be;b:c;c:d;d:e; a1c1").unwrap()[0];
    match colorability(c5) {
        Colorability::Colorable(_) => unreachable!(),
        Colorability::NotColorable(cert) => {
            println!("C5 with two nails: not 11/4-colorable");
            println!("  Farkas multipliers on the vertex equalities:");
            for (row, m) in cert.eq.iter().enumerate().skip(1) {
                println!("    vertex {}: {}", c5.name(row - 1), m);
            }
        }
    }

    // Nailing a third vertex makes it colorable.
    let c5_three = &parse_egraphs("a:be;b:c;c:d;d:e; a1b1c1").unwrap()[0];
    match colorability(c5_three) {
        Colorability::Colorable(w) => {
            println!("\nC5 with three nails: 11/4-colorable, witness:");
            print!("{}", w.dump());
        }
        Colorability::NotColorable(_) => unreachable!(),
    }
}
