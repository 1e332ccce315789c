//! The standard-argument checker: conditions (i)-(iv) for a configuration,
//! its replacement gadget, and the catalog.
//!
//! Run: `cargo run --release --example standard_argument`

use fraccrit::catalog::Catalog;
use fraccrit::reduce::{check_standard_argument, parse_config, StandardArgument};

fn main() {
    let (config, h) = parse_config(include_str!("../data/configs/lemma-2deg2.cfg")).unwrap();
    let catalog = Catalog::parse(include_str!("../data/obstructions.eg")).unwrap();
    let arg = StandardArgument {
        config,
        h: h.expect("config has an [h] section"),
    };
    let report = check_standard_argument(&arg, Some(&catalog)).unwrap();
    let show = |name: &str, c: &fraccrit::reduce::ConditionReport| {
        println!("({}) {}: {}", name, if c.passed { "pass" } else { "FAIL" }, c.detail);
    };
    show("i", &report.substitute_valid);
    show("ii", &report.reducible);
    show("iii", &report.h_satisfies);
    show("iv", report.closure.as_ref().unwrap());
}
