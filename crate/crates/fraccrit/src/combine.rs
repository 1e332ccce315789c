//! The vertex-deletion averaging construction for 3-regular graphs of girth
//! at least five.
//!
//! For every vertex `v`, the closed neighbourhood is deleted and the
//! distance-2 vertices are relaxed to external degree 2 (except those a nail
//! plan keeps at 3); an 11/4-coloring of the remainder is found by LP,
//! realised as interval sets, extended back over the deleted vertices with
//! small color sets, and the `n` colorings are averaged with weight `1/n`.
//! Trimming every vertex to measure 4 then yields an 11/4-coloring of the
//! whole cubic e-graph, which is returned in LP representation.

use crate::coloring::{colorability, Colorability, ColoringWitness, IndSetFamily};
use crate::egraph::EGraph;
use crate::interval::RatSet;
use crate::rat::Rat;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CombineError {
    #[error("graph is not 3-regular")]
    NotThreeRegular,
    #[error("girth below five")]
    GirthTooSmall,
    #[error("nail plan names `{0}` outside the distance-2 set of its vertex")]
    BadNailPlan(String),
    #[error("nail plan keeps `{0}` nailed in more than one deletion")]
    NailPlanIndegree(String),
    #[error("deleted-neighbourhood graph for `{0}` is not 11/4-colorable")]
    SubgraphNotColorable(String),
    #[error("averaged color set of `{0}` has measure below 4")]
    TrimImpossible(String),
}

/// Map vertex index -> distance-2 vertices kept at external degree 3 in its
/// deletion step.
pub type NailPlan = HashMap<usize, Vec<usize>>;

pub fn combine_vertex_deleted(
    g: &EGraph,
    nail_plan: &NailPlan,
) -> Result<ColoringWitness, CombineError> {
    if !g.is_three_regular() {
        return Err(CombineError::NotThreeRegular);
    }
    match g.girth() {
        Some(girth) if girth >= 5 => {}
        _ => return Err(CombineError::GirthTooSmall),
    }
    let g = g.with_uniform_ext(3);
    let n = g.n();

    // Indegree condition: a vertex may be kept nailed at most once.
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for (&v, kept) in nail_plan {
        for &u in kept {
            let dist2: Vec<usize> = second_neighborhood(&g, v);
            if !dist2.contains(&u) {
                return Err(CombineError::BadNailPlan(g.name(u).to_string()));
            }
            if seen.insert(u, v).is_some() {
                return Err(CombineError::NailPlanIndegree(g.name(u).to_string()));
            }
        }
    }

    let scale = Rat::new(1, n as i64);
    // phi[u] accumulates the scaled union over all deletion steps.
    let mut phi: Vec<RatSet> = vec![RatSet::empty(); n];
    for v in 0..n {
        let coloring = deleted_neighborhood_coloring(&g, v, nail_plan)
            .map_err(|_| CombineError::SubgraphNotColorable(g.name(v).to_string()))?;
        let offset = Rat::new(11 * v as i64, n as i64);
        for (u, set) in coloring.into_iter().enumerate() {
            phi[u] = phi[u].union(&set.affine(&scale, &offset));
        }
    }

    // Trim to measure exactly 4, lexicographically earliest.
    let mut trimmed: Vec<RatSet> = Vec::with_capacity(n);
    for (u, set) in phi.iter().enumerate() {
        match set.take_first(&Rat::int(4)) {
            Some(t) => trimmed.push(t),
            None => return Err(CombineError::TrimImpossible(g.name(u).to_string())),
        }
    }
    for (u, w) in g.edges() {
        assert!(
            trimmed[u].is_disjoint(&trimmed[w]),
            "averaging preserves properness"
        );
    }
    Ok(witness_from_intervals(&g, &trimmed))
}

fn second_neighborhood(g: &EGraph, v: usize) -> Vec<usize> {
    let mut closed = 1u64 << v | g.adj_mask(v);
    let mut out = Vec::new();
    for u in g.neighbors(v) {
        let mut m = g.adj_mask(u) & !closed;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            out.push(w);
            closed |= 1 << w;
        }
    }
    out
}

/// The coloring `phi_v` of the whole graph built from an 11/4-coloring of
/// `G_v = G - N[v]`: the deleted neighbours get measure-1 sets avoiding
/// their remaining neighbours, `v` gets measure 8 avoiding its neighbours.
fn deleted_neighborhood_coloring(
    g: &EGraph,
    v: usize,
    nail_plan: &NailPlan,
) -> Result<Vec<RatSet>, ()> {
    let neighbors: Vec<usize> = g.neighbors(v).collect();
    let second: Vec<usize> = second_neighborhood(g, v);
    assert_eq!(second.len(), 6, "girth 5 forces six distance-2 vertices");
    let kept_nailed = nail_plan.get(&v).cloned().unwrap_or_default();

    let keep: Vec<usize> = (0..g.n())
        .filter(|&u| u != v && !neighbors.contains(&u))
        .collect();
    let mut gv = g.induced(&keep);
    for (i, &orig) in keep.iter().enumerate() {
        if second.contains(&orig) && !kept_nailed.contains(&orig) {
            gv = gv.with_ext(i, 2);
        }
    }
    let witness = match colorability(&gv) {
        Colorability::Colorable(w) => w,
        Colorability::NotColorable(_) => return Err(()),
    };
    let gv_sets = realize_intervals(&witness);

    let mut phi: Vec<RatSet> = vec![RatSet::empty(); g.n()];
    for (i, &orig) in keep.iter().enumerate() {
        phi[orig] = gv_sets[i].clone();
    }
    for &u in &neighbors {
        let mut blocked = RatSet::empty();
        for w in g.neighbors(u) {
            if w != v {
                blocked = blocked.union(&phi[w]);
            }
        }
        phi[u] = blocked
            .complement()
            .take_first(&Rat::one())
            .expect("two sets of measure at most 5 leave room");
    }
    let mut blocked = RatSet::empty();
    for &u in &neighbors {
        blocked = blocked.union(&phi[u]);
    }
    phi[v] = blocked
        .complement()
        .take_first(&Rat::int(8))
        .expect("three unit sets leave measure 8");
    Ok(phi)
}

/// Lay the independent sets of a witness consecutively over `[0, 11)`:
/// vertex `u` receives the union of the blocks of the sets containing it.
pub fn realize_intervals(w: &ColoringWitness) -> Vec<RatSet> {
    let g = &w.family.graph;
    let mut out = vec![RatSet::empty(); g.n()];
    let mut offset = Rat::zero();
    for (mask, weight) in w.family.sets.iter().zip(&w.weight) {
        if weight.is_zero() {
            continue;
        }
        let end = &offset + weight;
        let block = RatSet::interval(offset.clone(), end.clone());
        let mut m = *mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            out[u] = out[u].union(&block);
        }
        offset = end;
    }
    out
}

/// Convert explicit interval sets back to the LP representation by refining
/// `[0, 11)` at every breakpoint and attributing each atom to the set of
/// vertices whose color set covers it.
pub fn witness_from_intervals(g: &EGraph, sets: &[RatSet]) -> ColoringWitness {
    let mut cuts: Vec<Rat> = vec![Rat::zero(), Rat::int(11)];
    for s in sets {
        cuts.extend(s.breakpoints());
    }
    cuts.sort();
    cuts.dedup();
    let family = IndSetFamily::new(g);
    let mut weight = vec![Rat::zero(); family.len()];
    for pair in cuts.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a >= b {
            continue;
        }
        let mut mask = 0u64;
        for (u, s) in sets.iter().enumerate() {
            if s.contains_point(a) {
                mask |= 1 << u;
            }
        }
        let idx = family
            .index_of(mask)
            .expect("covered vertex sets are independent");
        weight[idx] += &(b - a);
    }
    let out = ColoringWitness {
        family,
        weight,
    };
    assert!(out.check(), "interval realization must satisfy invariants");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egraph::parse_egraphs;

    fn petersen() -> EGraph {
        parse_egraphs(include_str!("../data/petersen.eg"))
            .unwrap()
            .pop()
            .unwrap()
    }

    #[test]
    fn petersen_averaging_yields_witness() {
        let w = combine_vertex_deleted(&petersen(), &NailPlan::new()).unwrap();
        assert!(w.check());
    }

    #[test]
    fn realize_roundtrip() {
        let g = petersen().with_uniform_ext(3);
        let w = colorability(&g).witness().unwrap().clone();
        let sets = realize_intervals(&w);
        for (u, s) in sets.iter().enumerate() {
            assert_eq!(s.measure(), Rat::int(7 - g.ext(u) as i64));
        }
        for (u, v) in g.edges() {
            assert!(sets[u].is_disjoint(&sets[v]));
        }
        let back = witness_from_intervals(&g, &sets);
        assert!(back.check());
    }

    #[test]
    fn rejects_low_girth_and_degree() {
        let c4 = EGraph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], &[]);
        assert!(matches!(
            combine_vertex_deleted(&c4, &NailPlan::new()),
            Err(CombineError::NotThreeRegular)
        ));
        let k4 = EGraph::from_edges(
            &[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
            &[],
        );
        assert!(matches!(
            combine_vertex_deleted(&k4, &NailPlan::new()),
            Err(CombineError::GirthTooSmall)
        ));
    }

    #[test]
    fn nail_plan_validation() {
        let g = petersen();
        // v0's distance-2 set excludes its own neighbours.
        let neighbor = g.neighbors(0).next().unwrap();
        let mut bad = NailPlan::new();
        bad.insert(0, vec![neighbor]);
        assert!(matches!(
            combine_vertex_deleted(&g, &bad),
            Err(CombineError::BadNailPlan(_))
        ));

        let d2 = second_neighborhood(&g.with_uniform_ext(3), 0);
        let mut twice = NailPlan::new();
        twice.insert(0, vec![d2[0]]);
        let d2_of_other = second_neighborhood(&g.with_uniform_ext(3), d2[1]);
        if d2_of_other.contains(&d2[0]) {
            twice.insert(d2[1], vec![d2[0]]);
            assert!(matches!(
                combine_vertex_deleted(&g, &twice),
                Err(CombineError::NailPlanIndegree(_))
            ));
        }

        // A legitimate single-entry plan still yields a witness.
        let mut ok = NailPlan::new();
        ok.insert(0, vec![d2[0]]);
        let w = combine_vertex_deleted(&g, &ok).unwrap();
        assert!(w.check());
    }

    #[test]
    fn f14_reports_failure() {
        let f14 = parse_egraphs(include_str!("../data/f14-1.eg"))
            .unwrap()
            .pop()
            .unwrap();
        assert!(combine_vertex_deleted(&f14, &NailPlan::new()).is_err());
    }
}
