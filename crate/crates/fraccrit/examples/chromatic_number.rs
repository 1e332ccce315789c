//! Exact fractional chromatic numbers of the named graphs.
//!
//! Run: `cargo run --release --example chromatic_number`

use fraccrit::coloring::fractional_chromatic;
use fraccrit::egraph::parse_egraphs;

fn main() {
    for (name, text) in [
        ("F14(1)", include_str!("../data/f14-1.eg")),
        ("F14(2)", include_str!("../data/f14-2.eg")),
        ("F11", include_str!("../data/f11.eg")),
        ("F22", include_str!("../data/f22.eg")),
        ("F19(1)", include_str!("../data/f19-1.eg")),
        ("F19(2)", include_str!("../data/f19-2.eg")),
        ("Petersen", include_str!("../data/petersen.eg")),
        ("Heawood", include_str!("../data/heawood.eg")),
    ] {
        let g = &parse_egraphs(text).unwrap()[0];
        println!("chi_f({}) = {}", name, fractional_chromatic(g));
    }
}
