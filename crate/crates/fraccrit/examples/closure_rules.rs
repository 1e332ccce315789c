//! Closure transformations: applying a rule to any catalog member yields
//! e-graphs that are non-critical or again members.
//!
//! Run: `cargo run --release --example closure_rules`

use fraccrit::catalog::{apply_closure, closure_sites, verify_closure, Catalog, ClosureRule};
use fraccrit::egraph::EGraph;

fn main() {
    // The rule mechanics on a small example: nailing a C5 vertex.
    let c5 = EGraph::from_edges(
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        &[],
    );
    let sites = closure_sites(ClosureRule::NailVertex, &c5);
    let results = apply_closure(ClosureRule::NailVertex, &c5, &sites[0]).unwrap();
    println!(
        "nail-vertex on C5 at {:?}: {} result(s), first has {} nail(s)",
        sites[0],
        results.len(),
        results[0].nail_count()
    );

    // The full suite for one rule over the catalog.
    let cat = Catalog::parse(include_str!("../data/obstructions.eg")).unwrap();
    let report = verify_closure(&cat, ClosureRule::NailVertex);
    println!(
        "nail-vertex over {} members: {} results checked, {} violations",
        report.members,
        report.results_checked,
        report.violations.len()
    );
}
