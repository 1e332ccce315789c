//! The reducible-configuration and exclusion-argument instances shipped in
//! `data/configs/`, exercised end to end.

use fraccrit::reduce::{check_excludable, check_standard_argument, is_reducible, parse_config, StandardArgument};

fn load(text: &str) -> (fraccrit::reduce::Configuration, Option<fraccrit::EGraph>) {
    parse_config(text).unwrap()
}

#[test]
fn lemma_2deg2_configuration_is_reducible() {
    let (cfg, h) = load(include_str!("../data/configs/lemma-2deg2.cfg"));
    let rep = is_reducible(&cfg).unwrap();
    assert!(rep.reducible, "failures: {:?}", rep.failures);

    let arg = StandardArgument { config: cfg, h: h.unwrap() };
    let report = check_standard_argument(&arg, None).unwrap();
    assert!(report.substitute_valid.passed, "{}", report.substitute_valid.detail);
    assert!(report.reducible.passed, "{}", report.reducible.detail);
    assert!(report.h_satisfies.passed, "{}", report.h_satisfies.detail);
}

#[test]
fn lemma_nok4_conditions_ii_iii() {
    let (cfg, h) = load(include_str!("../data/configs/lemma-nok4.cfg"));
    let arg = StandardArgument { config: cfg, h: h.unwrap() };
    let report = check_standard_argument(&arg, None).unwrap();
    assert!(report.reducible.passed, "{}", report.reducible.detail);
    assert!(report.h_satisfies.passed, "{}", report.h_satisfies.detail);
}

#[test]
fn weakened_constraints_fail() {
    // Dropping the cap constraint from the 2deg2 instance must break (ii)
    // or (iii)-style soundness: the polytope grows and some vertex no
    // longer extends.
    let (mut cfg, _) = load(include_str!("../data/configs/lemma-2deg2.cfg"));
    cfg.constraints.truncate(1);
    let rep = is_reducible(&cfg).unwrap();
    assert!(!rep.reducible, "weakened instance must stop being reducible");
}

#[test]
fn five_exclusion_instances() {
    for (name, text) in [
        ("c4only3vtxs", include_str!("../data/configs/stex-c4only3vtxs.cfg")),
        ("five3common", include_str!("../data/configs/stex-five3common.cfg")),
        ("k4three", include_str!("../data/configs/stex-k4three.cfg")),
        ("5c3nailsdeg2", include_str!("../data/configs/stex-5c3nailsdeg2.cfg")),
        ("five3nona", include_str!("../data/configs/stex-five3nona.cfg")),
    ] {
        let (cfg, _) = load(text);
        let rep = check_excludable(&cfg.g1, &cfg.boundary)
            .unwrap_or_else(|e| panic!("{}: {}", name, e));
        assert!(rep.reducible, "{} failures: {:?}", name, rep.failures);
    }
}

#[test]
fn c5_two_nails_everywhere_participating() {
    let c5 = fraccrit::EGraph::from_edges(
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        &["a", "c"],
    );
    assert!(check_excludable(&c5, &["a".into(), "c".into()]).is_err());
}
