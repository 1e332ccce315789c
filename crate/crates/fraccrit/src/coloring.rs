//! Independent sets, 11/4-colorability, fractional chromatic number,
//! restriction and extension of colorings.
//!
//! An 11/4-coloring assigns measurable subsets of `[0,11)` with
//! `|phi(v)| = 7 - ext(v)` and disjointness across edges. Its LP
//! representation is a nonnegative weight per independent set with total
//! mass 11 and per-vertex mass `7 - ext(v)`; the feasible set of these
//! weights is the polytope `P(G)`. Everything here is exact.

use crate::egraph::EGraph;
use crate::linsys::LinearSystem;
use crate::rat::Rat;
use crate::simplex::{self, Certificate, LpOutcome, Sense};
use std::collections::HashMap;
use thiserror::Error;

/// The complete family of independent sets of an e-graph, as bit masks over
/// the dense vertex index, sorted ascending (so the empty set is first).
#[derive(Clone, Debug)]
pub struct IndSetFamily {
    pub graph: EGraph,
    pub sets: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl IndSetFamily {
    pub fn new(g: &EGraph) -> IndSetFamily {
        let mut sets = Vec::new();
        // Recursive inclusion/exclusion in vertex-index order.
        fn rec(g: &EGraph, v: usize, cur: u64, blocked: u64, out: &mut Vec<u64>) {
            if v == g.n() {
                out.push(cur);
                return;
            }
            rec(g, v + 1, cur, blocked, out);
            if blocked >> v & 1 == 0 {
                rec(g, v + 1, cur | 1 << v, blocked | g.adj_mask(v), out);
            }
        }
        rec(g, 0, 0, 0, &mut sets);
        sets.sort_unstable();
        let index = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        IndSetFamily {
            graph: g.clone(),
            sets,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn max_set_size(&self) -> usize {
        self.sets
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Render a member as a comma-joined vertex list (empty string for the
    /// empty set).
    pub fn set_name(&self, i: usize) -> String {
        let mut names = Vec::new();
        let mut m = self.sets[i];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            names.push(self.graph.name(v));
        }
        names.join(",")
    }
}

/// LP representation of an 11/4-coloring: nonnegative weight per independent
/// set, total 11, per-vertex totals `7 - ext(v)`.
#[derive(Clone, Debug)]
pub struct ColoringWitness {
    pub family: IndSetFamily,
    pub weight: Vec<Rat>,
}

impl ColoringWitness {
    /// Exact check of all witness invariants.
    pub fn check(&self) -> bool {
        let g = &self.family.graph;
        if self.weight.len() != self.family.len() {
            return false;
        }
        if self.weight.iter().any(|w| w.is_negative()) {
            return false;
        }
        let mut total = Rat::zero();
        let mut per_vertex = vec![Rat::zero(); g.n()];
        for (mask, w) in self.family.sets.iter().zip(&self.weight) {
            total += w;
            let mut m = *mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                per_vertex[v] += w;
            }
        }
        if total != Rat::int(11) {
            return false;
        }
        (0..g.n()).all(|v| per_vertex[v] == Rat::int(7 - g.ext(v) as i64))
    }

    /// Dump format consumed by `--witness`: one `I=<vertices> w=<p/q>` line
    /// per nonzero weight.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.weight.iter().enumerate() {
            if !w.is_zero() {
                out.push_str(&format!("I={} w={}\n", self.family.set_name(i), w));
            }
        }
        out
    }
}

/// Restriction of a witness to a boundary set: weight per independent set of
/// `G[S]`.
#[derive(Clone, Debug)]
pub struct BoundaryProfile {
    /// Family of `G[S]` with external degrees inherited from the host.
    pub family: IndSetFamily,
    pub y: Vec<Rat>,
}

impl BoundaryProfile {
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.y.iter().enumerate() {
            if !w.is_zero() {
                out.push_str(&format!("J={} y={}\n", self.family.set_name(i), w));
            }
        }
        out
    }
}

/// `P(G)` as a linear system over the family (one variable per independent
/// set, nonnegativity, total mass 11, one vertex equality per vertex).
pub fn build_polytope(g: &EGraph) -> (LinearSystem, IndSetFamily) {
    assert!(g.is_subcubic(), "polytope defined for subcubic e-graphs");
    let family = IndSetFamily::new(g);
    let k = family.len();
    let mut sys = LinearSystem::with_nonneg_vars(k);
    sys.var_names = (0..k)
        .map(|i| format!("x({})", family.set_name(i)))
        .collect();
    sys.push_eq(vec![Rat::one(); k], Rat::int(11));
    for v in 0..g.n() {
        let coeffs: Vec<Rat> = family
            .sets
            .iter()
            .map(|m| if m >> v & 1 == 1 { Rat::one() } else { Rat::zero() })
            .collect();
        sys.push_eq(coeffs, Rat::int(7 - g.ext(v) as i64));
    }
    (sys, family)
}

#[derive(Clone, Debug)]
pub enum Colorability {
    Colorable(ColoringWitness),
    NotColorable(Certificate),
}

impl Colorability {
    pub fn witness(&self) -> Option<&ColoringWitness> {
        match self {
            Colorability::Colorable(w) => Some(w),
            Colorability::NotColorable(_) => None,
        }
    }
}

/// Decide 11/4-colorability exactly.
///
/// Internally solves a reduced system over independent sets of size >= 2
/// (singleton and empty weights are back-substituted), which keeps the
/// simplex basis small; the infeasibility certificate is mapped back to the
/// full `P(G)` system and re-verified there.
pub fn colorability(g: &EGraph) -> Colorability {
    assert!(g.is_subcubic(), "colorability defined for subcubic e-graphs");
    let family = IndSetFamily::new(g);
    let n = g.n();
    let demand: Vec<Rat> = (0..n).map(|v| Rat::int(7 - g.ext(v) as i64)).collect();
    let total_demand = crate::rat::rat_sum(demand.iter());
    let surplus = &total_demand - &Rat::int(11);

    let big: Vec<usize> = (0..family.len())
        .filter(|&i| family.sets[i].count_ones() >= 2)
        .collect();
    let k = big.len();
    let mut sys = LinearSystem::with_nonneg_vars(k);
    for v in 0..n {
        let coeffs: Vec<Rat> = big
            .iter()
            .map(|&i| {
                if family.sets[i] >> v & 1 == 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        sys.push_le(coeffs, demand[v].clone());
    }
    // Mass balance: sum (|I|-1) x_I >= total_demand - 11 makes the
    // back-substituted empty-set weight nonnegative.
    let neg_gain: Vec<Rat> = big
        .iter()
        .map(|&i| Rat::int(1 - family.sets[i].count_ones() as i64))
        .collect();
    sys.push_le(neg_gain, -&surplus);

    match simplex::feasible(&sys) {
        LpOutcome::Feasible(x) => {
            let mut weight = vec![Rat::zero(); family.len()];
            for (j, &i) in big.iter().enumerate() {
                weight[i] = x[j].clone();
            }
            for v in 0..n {
                let mut used = Rat::zero();
                for (j, &i) in big.iter().enumerate() {
                    if family.sets[i] >> v & 1 == 1 && !x[j].is_zero() {
                        used += &x[j];
                    }
                }
                let idx = family.index_of(1 << v).expect("singletons are independent");
                weight[idx] = &demand[v] - &used;
            }
            let nonempty = crate::rat::rat_sum(weight.iter().skip(1));
            weight[0] = Rat::int(11) - nonempty;
            let witness = ColoringWitness { family, weight };
            assert!(witness.check(), "reconstructed witness failed invariants");
            Colorability::Colorable(witness)
        }
        LpOutcome::Infeasible(red_cert) => {
            // Reduced certificate: multipliers l_v >= 0 on vertex rows and
            // mu >= 0 on the mass row, with mu > 0 forced (else the
            // combination has nonnegative rhs). Scaling to y = l/mu gives
            // sum_{v in I} y_v >= |I| - 1 for every set and
            // sum y_v demand_v < total_demand - 11; the full-system
            // multipliers are then 1 on the total-mass row and y_v - 1 on
            // vertex rows.
            let mu = &red_cert.ineq[n];
            assert!(mu.is_positive(), "mass-row multiplier must be positive");
            let mut eq = Vec::with_capacity(n + 1);
            eq.push(Rat::one());
            for v in 0..n {
                eq.push(&red_cert.ineq[v] / mu - Rat::one());
            }
            let cert = Certificate {
                eq,
                ineq: Vec::new(),
            };
            let (full_sys, _) = build_polytope(g);
            assert!(
                cert.verify(&full_sys),
                "mapped certificate failed verification"
            );
            Colorability::NotColorable(cert)
        }
        other => unreachable!("feasibility returned {:?}", other),
    }
}

pub fn is_colorable(g: &EGraph) -> bool {
    matches!(colorability(g), Colorability::Colorable(_))
}

/// Exact fractional chromatic number of the underlying graph: minimize total
/// weight over independent sets covering every vertex with weight >= 1.
///
/// Only maximal independent sets enter the LP: shifting weight from a set to
/// a maximal superset preserves feasibility and the objective, so the
/// optimum is unchanged.
pub fn fractional_chromatic(g: &EGraph) -> Rat {
    if g.n() == 0 {
        return Rat::zero();
    }
    let family = IndSetFamily::new(g);
    let full = (1u64 << g.n()) - 1;
    let nonempty: Vec<usize> = (1..family.len())
        .filter(|&i| {
            let m = family.sets[i];
            let mut blocked = m;
            let mut mm = m;
            while mm != 0 {
                let v = mm.trailing_zeros() as usize;
                mm &= mm - 1;
                blocked |= g.adj_mask(v);
            }
            blocked & full == full
        })
        .collect();
    let k = nonempty.len();
    let mut sys = LinearSystem::with_nonneg_vars(k);
    for v in 0..g.n() {
        let coeffs: Vec<Rat> = nonempty
            .iter()
            .map(|&i| {
                if family.sets[i] >> v & 1 == 1 {
                    -Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        sys.push_le(coeffs, Rat::int(-1));
    }
    let obj = vec![Rat::one(); k];
    match simplex::optimize(&sys, &obj, Sense::Min) {
        LpOutcome::Optimal { value, .. } => value,
        other => unreachable!("chi_f LP returned {:?}", other),
    }
}

/// Restriction of a witness to `S` (the equation
/// `y(J) = sum over I with I /\ S = J of x(I)`).
pub fn restrict(x: &ColoringWitness, s: &[usize]) -> BoundaryProfile {
    let g = &x.family.graph;
    let gs = g.induced(s);
    let family_s = IndSetFamily::new(&gs);
    let mut y = vec![Rat::zero(); family_s.len()];
    for (mask, w) in x.family.sets.iter().zip(&x.weight) {
        if w.is_zero() {
            continue;
        }
        let mut sub = 0u64;
        for (i, &v) in s.iter().enumerate() {
            if mask >> v & 1 == 1 {
                sub |= 1 << i;
            }
        }
        let j = family_s
            .index_of(sub)
            .expect("restriction of an independent set is independent");
        y[j] += w;
    }
    BoundaryProfile {
        family: family_s,
        y,
    }
}

/// Does `y` extend to a full coloring of `g`? `s` gives the host indices of
/// the boundary in the same order as the profile's vertices.
pub fn extends(
    y: &BoundaryProfile,
    g: &EGraph,
    s: &[usize],
) -> Result<ColoringWitness, Certificate> {
    assert_eq!(y.family.graph.n(), s.len());
    let (mut sys, family) = build_polytope(g);
    for (j, jmask) in y.family.sets.iter().enumerate() {
        let coeffs: Vec<Rat> = family
            .sets
            .iter()
            .map(|mask| {
                let mut sub = 0u64;
                for (i, &v) in s.iter().enumerate() {
                    if mask >> v & 1 == 1 {
                        sub |= 1 << i;
                    }
                }
                if sub == *jmask {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        sys.push_eq(coeffs, y.y[j].clone());
    }
    match simplex::feasible(&sys) {
        LpOutcome::Feasible(weight) => {
            let w = ColoringWitness { family, weight };
            assert!(w.check());
            Ok(w)
        }
        LpOutcome::Infeasible(cert) => Err(cert),
        other => unreachable!("{:?}", other),
    }
}

#[derive(Debug, Error)]
pub enum GlueError {
    #[error("boundary restrictions disagree")]
    RestrictionMismatch,
    #[error("external degrees disagree on shared vertex `{0}`")]
    ExtMismatch(String),
}

/// Glue witnesses on `G1` and `G2` along their shared vertices into a
/// witness on the union, by the product formula
/// `x(I) = x1(I /\ V1) * x0(I /\ V2) / y(I /\ S)`.
pub fn glue(x1: &ColoringWitness, x0: &ColoringWitness) -> Result<ColoringWitness, GlueError> {
    let g1 = &x1.family.graph;
    let g2 = &x0.family.graph;
    // Union by names; shared names form S.
    let mut names: Vec<String> = g1.names().to_vec();
    let mut ext: Vec<u8> = (0..g1.n()).map(|v| g1.ext(v)).collect();
    let mut map2 = Vec::with_capacity(g2.n());
    for v in 0..g2.n() {
        match names.iter().position(|s| s == g2.name(v)) {
            Some(i) => {
                if ext[i] != g2.ext(v) {
                    return Err(GlueError::ExtMismatch(g2.name(v).to_string()));
                }
                map2.push(i);
            }
            None => {
                names.push(g2.name(v).to_string());
                ext.push(g2.ext(v));
                map2.push(names.len() - 1);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = g1.edges();
    for (u, v) in g2.edges() {
        let e = (map2[u].min(map2[v]), map2[u].max(map2[v]));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let union = EGraph::new(names, &edges, ext).expect("union of e-graphs is simple");

    let s1: Vec<usize> = (0..g1.n())
        .filter(|&v| g2.index_of(g1.name(v)).is_some())
        .collect();
    let s2: Vec<usize> = s1
        .iter()
        .map(|&v| g2.index_of(g1.name(v)).unwrap())
        .collect();
    let y1 = restrict(x1, &s1);
    let y0 = restrict(x0, &s2);
    if y1.y != y0.y {
        return Err(GlueError::RestrictionMismatch);
    }

    let fam = IndSetFamily::new(&union);
    let mut weight = Vec::with_capacity(fam.len());
    let v1_in_union: Vec<usize> = (0..g1.n())
        .map(|v| union.index_of(g1.name(v)).unwrap())
        .collect();
    let v2_in_union: Vec<usize> = (0..g2.n())
        .map(|v| union.index_of(g2.name(v)).unwrap())
        .collect();
    let s_in_union: Vec<usize> = s1.iter().map(|&v| v1_in_union[v]).collect();
    for mask in &fam.sets {
        let down = |verts: &[usize]| -> u64 {
            let mut m = 0u64;
            for (i, &u) in verts.iter().enumerate() {
                if mask >> u & 1 == 1 {
                    m |= 1 << i;
                }
            }
            m
        };
        let i1 = x1
            .family
            .index_of(down(&v1_in_union))
            .expect("independent in G1");
        let i2 = x0
            .family
            .index_of(down(&v2_in_union))
            .expect("independent in G2");
        let js = y1
            .family
            .index_of(down(&s_in_union))
            .expect("independent in G[S]");
        let denom = &y1.y[js];
        if denom.is_zero() {
            weight.push(Rat::zero());
        } else {
            weight.push(&(&x1.weight[i1] * &x0.weight[i2]) / denom);
        }
    }
    let out = ColoringWitness {
        family: fam,
        weight,
    };
    if !out.check() {
        return Err(GlueError::RestrictionMismatch);
    }
    Ok(out)
}

/// Convex combination of witnesses over the same family.
pub fn convex_combine(witnesses: &[&ColoringWitness], lambdas: &[Rat]) -> ColoringWitness {
    assert_eq!(witnesses.len(), lambdas.len());
    assert!(!witnesses.is_empty());
    assert!(lambdas.iter().all(|l| !l.is_negative()));
    assert_eq!(crate::rat::rat_sum(lambdas.iter()), Rat::one());
    let fam = &witnesses[0].family;
    for w in witnesses {
        assert_eq!(w.family.sets, fam.sets);
        assert_eq!(w.family.graph, fam.graph);
    }
    let mut weight = vec![Rat::zero(); fam.len()];
    for (w, l) in witnesses.iter().zip(lambdas) {
        if l.is_zero() {
            continue;
        }
        for (acc, wi) in weight.iter_mut().zip(&w.weight) {
            if !wi.is_zero() {
                *acc += &(l * wi);
            }
        }
    }
    let out = ColoringWitness {
        family: witnesses[0].family.clone(),
        weight,
    };
    debug_assert!(out.check());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathBound {
    /// Odd length: bound on `|phi(v0) /\ phi(vk)|`.
    Intersection,
    /// Even length: bound on `|phi(v0) \/ phi(vk)|`.
    Union,
}

/// Closed-form extension condition for a path `v0..vk`: a coloring of the
/// endpoints extends to the whole path iff the intersection (odd k) or union
/// (even k) measure respects the returned bound.
pub fn path_extension_bound(k: usize, inner_ext: &[u8]) -> (PathBound, Rat) {
    assert!(k >= 1);
    assert_eq!(inner_ext.len(), k - 1);
    assert!(inner_ext.iter().all(|&d| d == 2 || d == 3));
    let sum: i64 = inner_ext.iter().map(|&d| d as i64).sum();
    if k % 2 == 1 {
        (
            PathBound::Intersection,
            Rat::new(2 * sum - 3 * (k as i64 - 1), 2),
        )
    } else {
        (PathBound::Union, Rat::new(2 * sum - (3 * k as i64 - 14), 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, nails: &[usize]) -> EGraph {
        let names: Vec<String> = (0..n).map(|i| format!("v{}", i)).collect();
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let mut ext: Vec<u8> = vec![2; n];
        for &v in nails {
            ext[v] = 3;
        }
        EGraph::new(names, &edges, ext).unwrap()
    }

    #[test]
    fn family_counts() {
        let k2 = EGraph::from_edges(&[("u", "v")], &[]);
        assert_eq!(IndSetFamily::new(&k2).len(), 3);
        let c5 = cycle(5, &[]);
        assert_eq!(IndSetFamily::new(&c5).len(), 11);
    }

    #[test]
    fn polytope_pins_k2() {
        let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
        let (sys, fam) = build_polytope(&k2);
        assert_eq!(fam.len(), 3);
        // Equalities force (x(empty), x(u), x(v)) = (3, 4, 4).
        let point = vec![Rat::int(3), Rat::int(4), Rat::int(4)];
        assert!(sys.check_point(&point));
        match simplex::feasible(&sys) {
            LpOutcome::Feasible(x) => assert_eq!(x, point),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn single_vertex_witness() {
        let g = EGraph::new(vec!["v".into()], &[], vec![2]).unwrap();
        match colorability(&g) {
            Colorability::Colorable(w) => {
                assert_eq!(w.weight[0], Rat::int(6));
                assert_eq!(w.weight[1], Rat::int(5));
            }
            _ => panic!("single vertex must be colorable"),
        }
    }

    #[test]
    fn c5_nail_patterns() {
        // 0, 1, 2 nails: not colorable; 3 nails: colorable.
        assert!(!is_colorable(&cycle(5, &[])));
        assert!(!is_colorable(&cycle(5, &[0])));
        assert!(!is_colorable(&cycle(5, &[0, 1])));
        assert!(!is_colorable(&cycle(5, &[0, 2])));
        assert!(is_colorable(&cycle(5, &[0, 1, 2])));
        assert!(is_colorable(&cycle(5, &[0, 1, 3])));
    }

    #[test]
    fn chif_small() {
        let k2 = EGraph::from_edges(&[("u", "v")], &[]);
        assert_eq!(fractional_chromatic(&k2), Rat::int(2));
        assert_eq!(fractional_chromatic(&cycle(5, &[])), Rat::new(5, 2));
        assert_eq!(fractional_chromatic(&cycle(7, &[])), Rat::new(7, 3));
    }

    #[test]
    fn restrict_k2() {
        let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
        let w = colorability(&k2).witness().unwrap().clone();
        let y = restrict(&w, &[0]);
        // y(empty) = 7, y({u}) = 4.
        assert_eq!(y.y, vec![Rat::int(7), Rat::int(4)]);
        // S = V: y = x.
        let yy = restrict(&w, &[0, 1]);
        assert_eq!(yy.y, w.weight);
        // S = empty: y(empty) = 11.
        let ye = restrict(&w, &[]);
        assert_eq!(ye.y, vec![Rat::int(11)]);
    }

    #[test]
    fn extends_k2() {
        let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
        let su = k2.induced(&[0]);
        let fam = IndSetFamily::new(&su);
        let y = BoundaryProfile {
            family: fam,
            y: vec![Rat::int(7), Rat::int(4)],
        };
        assert!(extends(&y, &k2, &[0]).is_ok());
        let bad = BoundaryProfile {
            family: y.family.clone(),
            y: vec![Rat::int(8), Rat::int(3)],
        };
        assert!(extends(&bad, &k2, &[0]).is_err());
    }

    #[test]
    fn path_bounds_match_closed_forms() {
        assert_eq!(
            path_extension_bound(1, &[]),
            (PathBound::Intersection, Rat::zero())
        );
        assert_eq!(
            path_extension_bound(3, &[3, 3]),
            (PathBound::Intersection, Rat::int(3))
        );
        assert_eq!(
            path_extension_bound(2, &[3]),
            (PathBound::Union, Rat::int(7))
        );
    }

    #[test]
    fn convex_combination_keeps_invariants() {
        let c6 = cycle(6, &[0, 1, 2, 3, 4, 5]);
        let w1 = colorability(&c6).witness().unwrap().clone();
        let w2 = w1.clone();
        let out = convex_combine(&[&w1, &w2], &[Rat::new(1, 3), Rat::new(2, 3)]);
        assert!(out.check());
        assert_eq!(out.weight, w1.weight);
    }

    #[test]
    fn glue_disjoint_k2s() {
        let a = EGraph::from_edges(&[("a", "b")], &[]).with_uniform_ext(3);
        let b = EGraph::from_edges(&[("c", "d")], &[]).with_uniform_ext(3);
        let wa = colorability(&a).witness().unwrap().clone();
        let wb = colorability(&b).witness().unwrap().clone();
        let glued = glue(&wa, &wb).unwrap();
        assert_eq!(glued.family.graph.n(), 4);
        assert!(glued.check());
    }

    #[test]
    fn glue_along_shared_vertex() {
        // w is the shared boundary vertex: its external degree (2) counts
        // the edge it has in the other part.
        let a = EGraph::from_edges(&[("u", "v"), ("v", "w")], &["w"]);
        let b = EGraph::from_edges(&[("w", "x"), ("x", "y")], &["w"]);
        let wa = colorability(&a).witness().unwrap().clone();
        // Color b with w pinned to wa's profile so the restrictions agree.
        let s_in_a = vec![a.index_of("w").unwrap()];
        let ya = restrict(&wa, &s_in_a);
        let yb = BoundaryProfile {
            family: IndSetFamily::new(&b.induced(&[b.index_of("w").unwrap()])),
            y: ya.y.clone(),
        };
        let wb = extends(&yb, &b, &[b.index_of("w").unwrap()]).unwrap();
        let glued = glue(&wa, &wb).unwrap();
        assert!(glued.check());
        // Gluing preserves both restrictions.
        let s = vec![glued.family.graph.index_of("w").unwrap()];
        assert_eq!(restrict(&glued, &s).y, ya.y);
    }
}
