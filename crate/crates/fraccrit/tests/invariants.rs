//! Cross-module property tests: restriction monotonicity, duality checks,
//! polytope extremality, constraint soundness, and the small structural
//! facts the criticality machinery relies on.

use fraccrit::canon::is_isomorphic;
use fraccrit::catalog::{enumerate_critical, is_critical};
use fraccrit::coloring::{
    build_polytope, colorability, fractional_chromatic, is_colorable, Colorability, IndSetFamily,
};
use fraccrit::egraph::EGraph;
use fraccrit::linsys::LinearSystem;
use fraccrit::polytope::{enumerate_vertices, Polytope};
use fraccrit::ratlp::{feasible, optimize, LpOutcome, Sense};
use fraccrit::reduce::{is_reducible, trivial_constraints, BoundaryConstraint, Configuration};
use fraccrit::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected triangle-free subcubic graph on `n` vertices; `None` if
/// the sample is not connected.
fn random_subcubic(rng: &mut ChaCha8Rng, n: usize) -> Option<EGraph> {
    let names: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
    let mut adj = vec![0u64; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    // Deterministic shuffle.
    for i in (1..pairs.len()).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    for (u, v) in pairs {
        let du = adj[u].count_ones();
        let dv = adj[v].count_ones();
        if du >= 3 || dv >= 3 || adj[u] & adj[v] != 0 {
            continue;
        }
        if rng.gen_bool(0.9) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
    }
    let ext: Vec<u8> = adj.iter().map(|m| m.count_ones() as u8).collect();
    let g = EGraph::new(names, &edges, ext).unwrap();
    if g.is_connected() && g.n() == n {
        Some(g)
    } else {
        None
    }
}

/// Random valid e-graph: random subcubic triangle-free underlying graph with
/// a random admissible external-degree assignment (at least 2 everywhere).
fn random_valid(rng: &mut ChaCha8Rng, n: usize) -> Option<EGraph> {
    let g = random_subcubic(rng, n)?;
    let mut out = g.clone();
    for v in 0..g.n() {
        let lo = g.deg(v).max(2) as u8;
        let ext = if lo >= 3 || rng.gen_bool(0.5) { 3 } else { lo };
        out = out.with_ext(v, ext.max(lo));
    }
    Some(out)
}

#[test]
fn induced_subgraphs_of_valid_stay_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tried = 0;
    while tried < 25 {
        let n = rng.gen_range(5..12);
        let Some(g) = random_valid(&mut rng, n) else {
            continue;
        };
        if !g.is_valid() {
            continue;
        }
        tried += 1;
        let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.7)).collect();
        assert!(g.induced(&keep).is_valid());
    }
}

#[test]
fn colorability_matches_polytope_feasibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut tried = 0;
    while tried < 20 {
        let n = rng.gen_range(4..11);
        let Some(g) = random_valid(&mut rng, n) else {
            continue;
        };
        tried += 1;
        let (sys, _) = build_polytope(&g);
        let lp_feasible = matches!(feasible(&sys), LpOutcome::Feasible(_));
        assert_eq!(is_colorable(&g), lp_feasible);
    }
}

#[test]
fn colorability_is_monotone_under_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut colorable_seen = 0;
    while colorable_seen < 15 {
        let n = rng.gen_range(5..12);
        let Some(g) = random_valid(&mut rng, n) else {
            continue;
        };
        match colorability(&g) {
            Colorability::Colorable(w) => {
                colorable_seen += 1;
                let keep: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.6)).collect();
                let sub = g.induced(&keep);
                assert!(is_colorable(&sub), "induced sub-e-graph must stay colorable");
                // The restriction of the witness is itself evidence.
                let y = fraccrit::coloring::restrict(&w, &keep);
                let total: Rat = y.y.iter().fold(Rat::zero(), |a, b| a + b);
                assert_eq!(total, Rat::int(11));
            }
            Colorability::NotColorable(_) => continue,
        }
    }
}

#[test]
fn chif_threshold_equals_cubic_colorability() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let bound = Rat::new(11, 4);
    let mut tried = 0;
    while tried < 30 {
        let n = rng.gen_range(4..=14);
        let Some(g) = random_subcubic(&mut rng, n) else {
            continue;
        };
        tried += 1;
        let cubic = g.with_uniform_ext(3);
        let chif = fractional_chromatic(&g);
        assert_eq!(
            chif <= bound,
            is_colorable(&cubic),
            "chi_f = {} but cubic colorability disagrees on {:?}",
            chif,
            g
        );
    }
}

#[test]
fn chif_duality_spot_check() {
    // Optimal fractional cover equals the optimal fractional clique packing:
    // max total vertex weight subject to weight(I) <= 1 per independent set.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tried = 0;
    while tried < 10 {
        let n = rng.gen_range(4..9);
        let Some(g) = random_subcubic(&mut rng, n) else {
            continue;
        };
        tried += 1;
        let primal = fractional_chromatic(&g);
        let family = IndSetFamily::new(&g);
        let mut sys = LinearSystem::with_nonneg_vars(g.n());
        for mask in &family.sets {
            if *mask == 0 {
                continue;
            }
            let coeffs: Vec<Rat> = (0..g.n())
                .map(|v| {
                    if mask >> v & 1 == 1 {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            sys.push_le(coeffs, Rat::one());
        }
        let dual = match optimize(&sys, &vec![Rat::one(); g.n()], Sense::Max) {
            LpOutcome::Optimal { value, point } => {
                // The maximizing weighting, evaluated by brute force: total
                // weight over the heaviest independent set.
                let mut heaviest = Rat::zero();
                for mask in &family.sets {
                    let mut s = Rat::zero();
                    for v in 0..g.n() {
                        if mask >> v & 1 == 1 {
                            s += &point[v];
                        }
                    }
                    heaviest = heaviest.max(s);
                }
                let total: Rat = point.iter().fold(Rat::zero(), |a, b| a + b);
                if !heaviest.is_zero() {
                    assert_eq!(&total / &heaviest, value);
                }
                value
            }
            other => panic!("{:?}", other),
        };
        assert_eq!(primal, dual);
    }
}

#[test]
fn polytope_vertices_are_extreme_and_support_optima() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..15 {
        let nv = rng.gen_range(2..5usize);
        let mut sys = LinearSystem::with_nonneg_vars(nv);
        for _ in 0..rng.gen_range(2..6) {
            let coeffs: Vec<Rat> = (0..nv).map(|_| Rat::int(rng.gen_range(-2..3))).collect();
            sys.push_le(coeffs, Rat::int(rng.gen_range(0..4)));
        }
        for v in 0..nv {
            let mut c = vec![Rat::zero(); nv];
            c[v] = Rat::one();
            sys.push_le(c, Rat::int(3));
        }
        let vertices = enumerate_vertices(&Polytope {
            system: sys.clone(),
        })
        .unwrap();
        // Extremality: no direction d with v +- d feasible; equivalently
        // the tight rows pin d = 0. Probed per coordinate by LP.
        for v in &vertices {
            let mut dir_sys = LinearSystem::new((0..nv).map(|i| format!("d{}", i)).collect());
            for (coeffs, rhs) in sys
                .inequalities
                .iter()
                .filter(|(c, r)| &fraccrit::linsys::dot(c, v) == r)
            {
                dir_sys.push_eq(coeffs.clone(), Rat::zero());
                let _ = rhs;
            }
            for (j, &nn) in sys.nonneg.iter().enumerate() {
                if nn && v[j].is_zero() {
                    let mut c = vec![Rat::zero(); nv];
                    c[j] = Rat::one();
                    dir_sys.push_eq(c, Rat::zero());
                }
            }
            for j in 0..nv {
                for sign in [Rat::one(), -Rat::one()] {
                    let mut probe = dir_sys.clone();
                    let mut c = vec![Rat::zero(); nv];
                    c[j] = Rat::one();
                    probe.push_eq(c, sign);
                    assert!(
                        matches!(feasible(&probe), LpOutcome::Infeasible(_)),
                        "vertex {:?} admits a feasible direction",
                        v
                    );
                }
            }
        }
        // Convex-hull closure: a random objective attains its optimum at a
        // returned vertex.
        if !vertices.is_empty() {
            let obj: Vec<Rat> = (0..nv).map(|_| Rat::int(rng.gen_range(-3..4))).collect();
            match optimize(&sys, &obj, Sense::Max) {
                LpOutcome::Optimal { value, .. } => {
                    let best = vertices
                        .iter()
                        .map(|v| fraccrit::linsys::dot(&obj, v))
                        .max()
                        .unwrap();
                    assert_eq!(best, value);
                }
                other => panic!("{:?}", other),
            }
        }
    }
}

#[test]
fn trivial_constraints_are_sound() {
    // Every point of the projection of P(H) satisfies the trivial
    // constraints: the maximum of each constraint functional over P(H)
    // stays within its bound.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tried = 0;
    while tried < 12 {
        let n = rng.gen_range(4..9);
        let Some(h) = random_valid(&mut rng, n) else {
            continue;
        };
        if !is_colorable(&h) {
            continue;
        }
        tried += 1;
        let s: Vec<usize> = (0..h.n()).filter(|_| rng.gen_bool(0.4)).collect();
        let (sys, family) = build_polytope(&h);
        for con in trivial_constraints(&h, &s) {
            let (objective, bound) = constraint_objective(&h, &family, &con);
            match optimize(&sys, &objective, Sense::Max) {
                LpOutcome::Optimal { value, .. } => {
                    assert!(value <= bound, "constraint {:?} violated: {}", con, value)
                }
                other => panic!("{:?}", other),
            }
        }
    }
}

fn constraint_objective(
    h: &EGraph,
    family: &IndSetFamily,
    con: &BoundaryConstraint,
) -> (Vec<Rat>, Rat) {
    let resolve = |names: &Vec<String>| -> u64 {
        names
            .iter()
            .fold(0u64, |m, n| m | 1 << h.index_of(n).unwrap())
    };
    match con {
        BoundaryConstraint::CupLe { a, bound } => {
            let am = resolve(a);
            (
                family
                    .sets
                    .iter()
                    .map(|&i| if i & am != 0 { Rat::one() } else { Rat::zero() })
                    .collect(),
                bound.clone(),
            )
        }
        BoundaryConstraint::CapLe { b, c, bound } => {
            let bm = resolve(b);
            let cm = resolve(c);
            (
                family
                    .sets
                    .iter()
                    .map(|&i| {
                        if i & bm != 0 && i & cm != 0 {
                            Rat::one()
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect(),
                bound.clone(),
            )
        }
    }
}

#[test]
fn reducibility_is_monotone_in_constraints() {
    // A single boundary vertex with one internal degree-2 neighbour is
    // always reducible; adding a redundant constraint never flips that.
    let g1 = {
        let names: Vec<String> = ["u", "w"].iter().map(|s| s.to_string()).collect();
        EGraph::new(names, &[(0, 1)], vec![2, 2]).unwrap()
    };
    let base = Configuration {
        g1: g1.clone(),
        boundary: vec!["u".into()],
        constraints: vec![],
    };
    let with_redundant = Configuration {
        g1,
        boundary: vec!["u".into()],
        constraints: vec![BoundaryConstraint::CupLe {
            a: vec!["u".into()],
            bound: Rat::int(11),
        }],
    };
    let r1 = is_reducible(&base).unwrap();
    let r2 = is_reducible(&with_redundant).unwrap();
    assert_eq!(r1.reducible, r2.reducible);
    assert!(r2.reducible);
}

#[test]
fn two_vertex_interval_semantics() {
    // For a boundary of two nonadjacent vertices, the compiled cap and cup
    // maxima match the interval-union extremes min(7-d_u, 7-d_v) and
    // min(11, 14 - d_u - d_v).
    for (du, dv) in [(2u8, 2u8), (2, 3), (3, 3)] {
        let names: Vec<String> = ["u", "v", "m"].iter().map(|s| s.to_string()).collect();
        let g = EGraph::new(names, &[(0, 2), (1, 2)], vec![du.max(2), dv.max(2), 2]).unwrap();
        let s = g.induced(&[0, 1]);
        let (sys, family) = build_polytope(&s);
        let both = family
            .sets
            .iter()
            .map(|&m| if m == 0b11 { Rat::one() } else { Rat::zero() })
            .collect::<Vec<_>>();
        let cap_max = match optimize(&sys, &both, Sense::Max) {
            LpOutcome::Optimal { value, .. } => value,
            other => panic!("{:?}", other),
        };
        assert_eq!(
            cap_max,
            Rat::int((7 - du as i64).min(7 - dv as i64)),
            "cap extreme for ({}, {})",
            du,
            dv
        );
        let any = family
            .sets
            .iter()
            .map(|&m| if m != 0 { Rat::one() } else { Rat::zero() })
            .collect::<Vec<_>>();
        let cup_max = match optimize(&sys, &any, Sense::Max) {
            LpOutcome::Optimal { value, .. } => value,
            other => panic!("{:?}", other),
        };
        assert_eq!(cup_max, Rat::int(11i64.min(14 - du as i64 - dv as i64)));
    }
}

#[test]
fn criticality_is_deletion_local() {
    // For critical e-graphs, deeper deletions stay colorable too.
    let five = enumerate_critical(8, 12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for g in five.iter().take(6) {
        assert!(is_critical(g));
        for _ in 0..4 {
            let a = rng.gen_range(0..g.n());
            let b = rng.gen_range(0..g.n());
            if a == b {
                continue;
            }
            let keep: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
            assert!(is_colorable(&g.induced(&keep)));
        }
    }
}

#[test]
fn colorable_graphs_have_no_sparse_c5_or_k4plus() {
    // An induced C5 or K4+ sub-e-graph with at most two nailed vertices is
    // never 11/4-colorable, so colorable e-graphs cannot contain one.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let c5 = fraccrit::catalog::cycle_graph(5);
    let k4p = fraccrit::catalog::k4_plus();
    let mut seen_c5 = 0;
    let mut tried = 0;
    while tried < 40 && seen_c5 < 3 {
        let n = rng.gen_range(6..12);
        let Some(g) = random_valid(&mut rng, n) else {
            continue;
        };
        if !is_colorable(&g) {
            continue;
        }
        tried += 1;
        for target in [&c5, &k4p] {
            if target.n() > g.n() {
                continue;
            }
            // All induced sub-e-graphs on |target| vertices isomorphic to
            // the target's underlying graph.
            let mut idx: Vec<usize> = (0..target.n()).collect();
            loop {
                let sub = g.induced(&idx);
                // Compare underlying structures by forgetting ext.
                let forget = |h: &EGraph| {
                    let mut out = h.clone();
                    for v in 0..h.n() {
                        out = out.with_ext(v, h.deg(v) as u8);
                    }
                    out
                };
                if is_isomorphic(&forget(&sub), &forget(target)) {
                    seen_c5 += 1;
                    assert!(
                        sub.nail_count() >= 3,
                        "colorable e-graph contains {:?} with {} nails",
                        target,
                        sub.nail_count()
                    );
                }
                // next combination
                let k = target.n();
                let mut i = k;
                let mut done = false;
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    if idx[i] + (k - i) < g.n() {
                        idx[i] += 1;
                        for j in i + 1..k {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
    }
}

#[test]
fn bipartite_always_colorable() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut seen = 0;
    while seen < 10 {
        let n = rng.gen_range(4..11);
        let Some(g) = random_valid(&mut rng, n) else {
            continue;
        };
        if !g.is_bipartite() {
            continue;
        }
        seen += 1;
        assert!(is_colorable(&g));
    }
}

#[test]
fn enumerate_prefix_consistency() {
    let small = enumerate_critical(7, 12).unwrap();
    let large = enumerate_critical(9, 12).unwrap();
    let small_forms: Vec<Vec<u8>> = small.iter().map(fraccrit::canon::canonical_form).collect();
    let large_forms: Vec<Vec<u8>> = large
        .iter()
        .filter(|g| g.n() <= 7)
        .map(fraccrit::canon::canonical_form)
        .collect();
    assert_eq!(small_forms, large_forms);
}
