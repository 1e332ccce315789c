//! Criticality: uncolorable, but colorable after deleting any one vertex.
//!
//! Run: `cargo run --release --example criticality`

use fraccrit::catalog::is_critical;
use fraccrit::coloring::is_colorable;
use fraccrit::egraph::{parse_egraphs, EGraph};

fn main() {
    let c5 = EGraph::from_edges(
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        &[],
    );
    println!("C5, no nails: critical = {}", is_critical(&c5));
    for v in 0..c5.n() {
        println!(
            "  C5 - {}: colorable = {}",
            c5.name(v),
            is_colorable(&c5.delete_vertex(v))
        );
    }

    let f14 = &parse_egraphs(include_str!("../data/f14-1.eg")).unwrap()[0];
    println!("F14(1): critical = {}", is_critical(f14));

    let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
    println!("K2: critical = {} (it is colorable)", is_critical(&k2));
}
