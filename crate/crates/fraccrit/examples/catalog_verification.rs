//! The catalog property suite: counts, validity, pairwise non-isomorphism,
//! criticality, the two cubic members, and the nail-structure conditions.
//!
//! Run: `cargo run --release --example catalog_verification`

use fraccrit::catalog::{verify_catalog, Catalog};

fn main() {
    let cat = Catalog::parse(include_str!("../data/obstructions.eg")).unwrap();
    let report = verify_catalog(&cat);
    for c in &report.checks {
        println!(
            "{}: {} ({})",
            c.check,
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    let mut by_order = std::collections::BTreeMap::new();
    for g in &cat.members {
        *by_order.entry(g.n()).or_insert(0usize) += 1;
    }
    println!("members by order: {:?}", by_order);
}
