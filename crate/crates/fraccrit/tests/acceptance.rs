//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured wall time. Run with `cargo test --release --test acceptance`.

use fraccrit::canon::{canonical_form, is_isomorphic};
use fraccrit::catalog::{
    enumerate_critical, is_critical, verify_catalog, verify_closure, Catalog, ClosureRule,
};
use fraccrit::coloring::{
    colorability, extends, fractional_chromatic, is_colorable, BoundaryProfile, Colorability,
    IndSetFamily, PathBound,
};
use fraccrit::combine::{combine_vertex_deleted, NailPlan};
use fraccrit::egraph::{parse_egraphs, EGraph};
use fraccrit::linsys::LinearSystem;
use fraccrit::polytope::{enumerate_vertices, Polytope};
use fraccrit::rat::Rat;
use fraccrit::reduce::{check_excludable, check_standard_argument, parse_config, StandardArgument};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn load_one(text: &str) -> EGraph {
    parse_egraphs(text).unwrap().pop().unwrap()
}

fn catalog() -> Catalog {
    Catalog::parse(include_str!("../data/obstructions.eg")).expect("catalog parses")
}

fn cycle(n: usize, nails: &[usize]) -> EGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut ext = vec![2u8; n];
    for &v in nails {
        ext[v] = 3;
    }
    EGraph::new(names, &edges, ext).unwrap()
}

#[test]
fn criterion_1_chif_regressions() {
    let cases = [
        ("f14-1", include_str!("../data/f14-1.eg"), Rat::new(14, 5)),
        ("f14-2", include_str!("../data/f14-2.eg"), Rat::new(14, 5)),
        ("f11", include_str!("../data/f11.eg"), Rat::new(11, 4)),
        ("f22", include_str!("../data/f22.eg"), Rat::new(11, 4)),
        ("f19-1", include_str!("../data/f19-1.eg"), Rat::new(19, 7)),
        ("f19-2", include_str!("../data/f19-2.eg"), Rat::new(19, 7)),
    ];
    for (name, text, expected) in cases {
        let g = load_one(text);
        let t = Instant::now();
        let value = fractional_chromatic(&g);
        let elapsed = t.elapsed();
        assert_eq!(value, expected, "chi_f({})", name);
        assert!(
            elapsed.as_secs() < 5,
            "chi_f({}) took {} ms",
            name,
            elapsed.as_millis()
        );
        println!(
            "criterion 1: PASS chi_f({}) = {} in {} ms",
            name,
            value,
            elapsed.as_millis()
        );
    }
}

#[test]
fn criterion_2_c5_k4plus_colorability() {
    let t = Instant::now();
    // C5: every pattern with 0, 1 or 2 nails is uncolorable; 3 nails works.
    assert!(!is_colorable(&cycle(5, &[])));
    for v in 0..5 {
        assert!(!is_colorable(&cycle(5, &[v])));
        for w in v + 1..5 {
            assert!(!is_colorable(&cycle(5, &[v, w])));
        }
    }
    assert!(is_colorable(&cycle(5, &[0, 1, 2])));
    assert!(is_colorable(&cycle(5, &[0, 1, 3])));

    // K4+: same for all patterns with at most two nails.
    let k4p = load_one(include_str!("../data/k4plus.eg"));
    let deg2 = k4p.degree_two_vertices();
    assert!(!is_colorable(&k4p));
    for (i, &v) in deg2.iter().enumerate() {
        assert!(!is_colorable(&k4p.with_ext(v, 3)));
        for &w in &deg2[i + 1..] {
            assert!(!is_colorable(&k4p.with_ext(v, 3).with_ext(w, 3)));
        }
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs() < 1, "took {} ms", elapsed.as_millis());
    println!(
        "criterion 2: PASS all sparse C5/K4+ nailings uncolorable, C5 with 3 nails colorable, {} ms",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_3_catalog_suite() {
    let t = Instant::now();
    let cat = catalog();
    let report = verify_catalog(&cat);
    for c in &report.checks {
        assert!(c.passed, "catalog check {} failed: {}", c.check, c.detail);
    }
    let elapsed = t.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "catalog suite took {} s",
        elapsed.as_secs()
    );
    println!(
        "criterion 3: PASS {} members, {} checks, {} ms",
        cat.len(),
        report.checks.len(),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_4_polytope_vertex_regression() {
    let t = Instant::now();
    let r = |v: i64| Rat::int(v);
    let mut sys = LinearSystem::with_nonneg_vars(4);
    sys.push_le(vec![r(1), r(1), r(1), r(1)], r(5));
    sys.push_le(vec![r(0), r(1), r(1), r(0)], r(4));
    sys.push_le(vec![r(1), r(1), r(0), r(0)], r(4));
    let all = enumerate_vertices(&Polytope { system: sys }).unwrap();
    // The half with a1 <= a3, as tabulated.
    let mut got: Vec<Vec<Rat>> = all.into_iter().filter(|v| v[0] <= v[2]).collect();
    got.sort();
    let mut expected: Vec<Vec<Rat>> = [
        [0, 0, 0, 0],
        [0, 0, 0, 5],
        [0, 0, 4, 0],
        [0, 4, 0, 0],
        [0, 0, 4, 1],
        [0, 4, 0, 1],
        [1, 0, 4, 0],
        [1, 3, 1, 0],
    ]
    .iter()
    .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
    .collect();
    expected.sort();
    assert_eq!(got, expected);
    let elapsed = t.elapsed();
    assert!(elapsed.as_millis() < 1000);
    println!(
        "criterion 4: PASS 8 tabulated vertex rows reproduced, {} ms",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_5_reducibility_regressions() {
    // lemma instance with both stated constraints, all four conditions.
    let t = Instant::now();
    let (cfg, h) = parse_config(include_str!("../data/configs/lemma-2deg2.cfg")).unwrap();
    let arg = StandardArgument {
        config: cfg,
        h: h.unwrap(),
    };
    let report = check_standard_argument(&arg, Some(&catalog())).unwrap();
    assert!(report.all_passed(), "lemma-2deg2: {:?}", report);
    let e1 = t.elapsed();
    assert!(e1.as_secs() < 60);
    println!("criterion 5: PASS two-2-paths configuration (all four conditions), {} ms", e1.as_millis());

    let t = Instant::now();
    let (cfg, h) = parse_config(include_str!("../data/configs/lemma-nok4.cfg")).unwrap();
    let arg = StandardArgument {
        config: cfg,
        h: h.unwrap(),
    };
    let report = check_standard_argument(&arg, None).unwrap();
    assert!(report.reducible.passed, "{}", report.reducible.detail);
    assert!(report.h_satisfies.passed, "{}", report.h_satisfies.detail);
    let e2 = t.elapsed();
    assert!(e2.as_secs() < 60);
    println!("criterion 5: PASS subdivided-K4 configuration (ii)+(iii), {} ms", e2.as_millis());

    for (name, text) in [
        ("c4only3vtxs", include_str!("../data/configs/stex-c4only3vtxs.cfg")),
        ("five3common", include_str!("../data/configs/stex-five3common.cfg")),
        ("k4three", include_str!("../data/configs/stex-k4three.cfg")),
        ("5c3nailsdeg2", include_str!("../data/configs/stex-5c3nailsdeg2.cfg")),
        ("five3nona", include_str!("../data/configs/stex-five3nona.cfg")),
    ] {
        let t = Instant::now();
        let (cfg, _) = parse_config(text).unwrap();
        let rep = check_excludable(&cfg.g1, &cfg.boundary).unwrap();
        assert!(rep.reducible, "{}: {:?}", name, rep.failures);
        let e = t.elapsed();
        assert!(e.as_secs() < 60, "{} took {} ms", name, e.as_millis());
        println!(
            "criterion 5: PASS exclusion instance {} ({} polytope vertices), {} ms",
            name,
            rep.polytope_vertices,
            e.as_millis()
        );
    }
}

#[test]
fn criterion_6_path_bounds_vs_lp() {
    let t = Instant::now();
    let mut cases = 0usize;
    let mut profiles = 0usize;
    for k in 1usize..=5 {
        let patterns = 1usize << (k - 1);
        for bits in 0..patterns {
            let inner: Vec<u8> = (0..k - 1)
                .map(|i| if bits >> i & 1 == 1 { 3 } else { 2 })
                .collect();
            let (kind, bound) = fraccrit::coloring::path_extension_bound(k, &inner);
            cases += 1;
            for (a, b) in [(2u8, 2u8), (2, 3), (3, 2), (3, 3)] {
                let names: Vec<String> = (0..=k).map(|i| format!("p{}", i)).collect();
                let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
                let mut ext = vec![0u8; k + 1];
                ext[0] = a;
                ext[k] = b;
                for (i, &d) in inner.iter().enumerate() {
                    ext[i + 1] = d;
                }
                let path = EGraph::new(names, &edges, ext).unwrap();
                let s = vec![0usize, k];
                let gs = path.induced(&s);
                let family = IndSetFamily::new(&gs);
                let ma = Rat::int(7 - a as i64);
                let mb = Rat::int(7 - b as i64);
                let lo = (&ma + &mb - Rat::int(11)).max(Rat::zero());
                let hi = ma.clone().min(mb.clone());
                let steps = if k == 1 { 0 } else { 20 };
                for j in 0..=steps {
                    let overlap = if k == 1 {
                        Rat::zero()
                    } else {
                        &lo + &(&(&hi - &lo) * &Rat::new(j as i64, steps as i64))
                    };
                    let mut y = vec![Rat::zero(); family.len()];
                    for (i, mask) in family.sets.iter().enumerate() {
                        y[i] = match mask {
                            0b00 => Rat::int(11) - &ma - &mb + &overlap,
                            0b01 => &ma - &overlap,
                            0b10 => &mb - &overlap,
                            0b11 => overlap.clone(),
                            _ => unreachable!(),
                        };
                    }
                    if y.iter().any(|w| w.is_negative()) {
                        continue;
                    }
                    profiles += 1;
                    let profile = BoundaryProfile {
                        family: family.clone(),
                        y,
                    };
                    let lp_says = extends(&profile, &path, &s).is_ok();
                    let formula_says = match kind {
                        PathBound::Intersection => overlap <= bound,
                        PathBound::Union => &ma + &mb - &overlap <= bound,
                    };
                    assert_eq!(
                        lp_says, formula_says,
                        "k={} inner={:?} ends=({},{}) overlap={}",
                        k, inner, a, b, overlap
                    );
                }
            }
        }
    }
    println!(
        "criterion 6: PASS {} patterns, {} profiles, zero disagreements, {} ms",
        cases,
        profiles,
        t.elapsed().as_millis()
    );
}

#[test]
fn criterion_7_closure_suites() {
    let cat = catalog();
    let t0 = Instant::now();
    for rule in [
        ClosureRule::NailVertex,
        ClosureRule::SubdivideEdgeTwice,
        ClosureRule::AddCommonNeighbor,
    ] {
        let t = Instant::now();
        let report = verify_closure(&cat, rule);
        assert!(
            report.violations.is_empty(),
            "{}: {:?}",
            rule.name(),
            report.violations
        );
        println!(
            "criterion 7: PASS {} ({} results), {} ms",
            rule.name(),
            report.results_checked,
            t.elapsed().as_millis()
        );
    }
    assert!(t0.elapsed().as_secs() < 1800, "combined closure suites too slow");
}

/// The remaining closure rules, outside the timed gate. Run with
/// `cargo test --release --test acceptance -- --ignored`.
#[test]
#[ignore = "extended profile: slower closure rules"]
fn extended_closure_rules() {
    let cat = catalog();
    for rule in [
        ClosureRule::AddPathBetweenNails,
        ClosureRule::UncontractEdgeToC4,
        ClosureRule::AddTwoJoinedApexes,
        ClosureRule::AttachC4,
        ClosureRule::AttachK13,
    ] {
        let t = Instant::now();
        let report = verify_closure(&cat, rule);
        assert!(
            report.violations.is_empty(),
            "{}: {:?}",
            rule.name(),
            report.violations
        );
        println!(
            "extended: PASS {} ({} results), {} ms",
            rule.name(),
            report.results_checked,
            t.elapsed().as_millis()
        );
    }
}

#[test]
fn criterion_8_bounded_reenumeration() {
    let t = Instant::now();
    let found = enumerate_critical(10, 12).unwrap();
    let cat = catalog();
    let catalog_small: Vec<&EGraph> = cat.members.iter().filter(|g| g.n() <= 10).collect();
    assert_eq!(found.len(), catalog_small.len());
    for g in &found {
        assert!(
            cat.contains(&canonical_form(g)),
            "enumerated member missing from catalog: {:?}",
            g
        );
    }
    println!(
        "criterion 8: PASS enumerate(10) = {} members = catalog restriction, {} ms",
        found.len(),
        t.elapsed().as_millis()
    );
}

#[test]
fn criterion_9_main_theorem_property() {
    let t = Instant::now();
    let f14_1 = load_one(include_str!("../data/f14-1.eg"));
    let f14_2 = load_one(include_str!("../data/f14-2.eg"));
    let mut rng = ChaCha8Rng::seed_from_u64(0x11047d);
    let mut checked = 0;
    while checked < 50 {
        let n = rng.gen_range(4..=16);
        let names: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
        let mut adj = vec![0u64; n];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        for i in (1..pairs.len()).rev() {
            let j = rng.gen_range(0..=i);
            pairs.swap(i, j);
        }
        for (u, v) in pairs {
            if adj[u].count_ones() >= 3 || adj[v].count_ones() >= 3 || adj[u] & adj[v] != 0 {
                continue;
            }
            if rng.gen_bool(0.85) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                edges.push((u, v));
            }
        }
        let ext: Vec<u8> = adj.iter().map(|m| m.count_ones() as u8).collect();
        let g = EGraph::new(names, &edges, ext).unwrap();
        if !g.is_connected() || !g.is_triangle_free() {
            continue;
        }
        if is_isomorphic(&g, &f14_1) || is_isomorphic(&g, &f14_2) {
            continue;
        }
        checked += 1;
        let cubic = g.with_uniform_ext(3);
        match colorability(&cubic) {
            Colorability::Colorable(w) => assert!(w.check()),
            Colorability::NotColorable(_) => {
                panic!("random graph not 11/4-colorable: {:?}", g)
            }
        }
    }
    // Averaging construction on the Petersen graph.
    let petersen = load_one(include_str!("../data/petersen.eg"));
    let witness = combine_vertex_deleted(&petersen, &NailPlan::new()).unwrap();
    assert!(witness.check());
    println!(
        "criterion 9: PASS 50 random graphs colorable, Petersen averaging valid, {} ms",
        t.elapsed().as_millis()
    );
}

#[test]
fn criterion_10_no_floats_in_numeric_core() {
    // Exactness of points and certificates is asserted inside the solver on
    // every call; this audit additionally checks no floating-point type
    // appears anywhere in the library source.
    let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    let mut files = Vec::new();
    collect_rs(&src, &mut files);
    assert!(!files.is_empty());
    for file in files {
        let text = std::fs::read_to_string(&file).unwrap();
        for (lineno, line) in text.lines().enumerate() {
            let code = line.split("//").next().unwrap_or("");
            for token in ["f32", "f64"] {
                if let Some(pos) = code.find(token) {
                    let before = code[..pos].chars().last();
                    let after = code[pos + 3..].chars().next();
                    let boundary = |c: Option<char>| {
                        c.map_or(true, |c| !c.is_alphanumeric() && c != '_')
                    };
                    assert!(
                        !(boundary(before) && boundary(after)),
                        "{}:{} uses {}",
                        file.display(),
                        lineno + 1,
                        token
                    );
                }
            }
        }
    }
    // Witness exactness spot check on a nontrivial instance.
    let f14 = load_one(include_str!("../data/f14-1.eg"));
    for v in 0..f14.n() {
        let g = f14.with_uniform_ext(3).delete_vertex(v);
        match colorability(&g) {
            Colorability::Colorable(w) => assert!(w.check()),
            _ => panic!("deletion must be colorable"),
        }
    }
    assert!(is_critical(&f14.with_uniform_ext(3)));
    println!("criterion 10: PASS no floats in src/, witnesses re-substitute exactly");
}

fn collect_rs(dir: &std::path::Path, out: &mut Vec<std::path::PathBuf>) {
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            collect_rs(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}
