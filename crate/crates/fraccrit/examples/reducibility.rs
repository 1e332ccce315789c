//! Reducible configurations: every vertex of the constrained boundary
//! polytope extends to a coloring of the configuration.
//!
//! Run: `cargo run --release --example reducibility`

use fraccrit::reduce::{check_excludable, is_reducible, parse_config};

fn main() {
    let (cfg, _) = parse_config(include_str!("../data/configs/lemma-2deg2.cfg")).unwrap();
    let report = is_reducible(&cfg).unwrap();
    println!(
        "two-2-paths configuration: reducible = {} ({} polytope vertices)",
        report.reducible, report.polytope_vertices
    );

    // Exclusion argument: trivial constraints only, plus the requirement
    // that some interior vertex avoids them.
    let (cfg, _) = parse_config(include_str!("../data/configs/stex-c4only3vtxs.cfg")).unwrap();
    let report = check_excludable(&cfg.g1, &cfg.boundary).unwrap();
    println!(
        "4-cycle-with-degree-2 configuration: excludable = {} ({} polytope vertices)",
        report.reducible, report.polytope_vertices
    );
}
