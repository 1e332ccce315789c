//! The catalog of valid critical e-graphs: loading, verification, closure
//! transformations, and bounded re-enumeration.
//!
//! An e-graph is critical when it has no 11/4-coloring but every proper
//! induced sub-e-graph does. Criticality is decided here through
//! single-vertex deletions only; the restriction-monotonicity that justifies
//! this is itself covered by tests. Enumeration searches 2-connected
//! triangle-free subcubic graphs (grown by ear additions from cycles)
//! crossed with nail patterns, pruned by the monotonicity of colorability
//! under nailing.

use crate::canon::{canonical_form, canonicalized};
use crate::coloring::is_colorable;
use crate::egraph::{parse_egraphs, EGraph, EGraphError};
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

/// True iff `g` is not 11/4-colorable but every single-vertex deletion is.
///
/// Single deletions suffice: restricting a coloring of `G - v` to any deeper
/// induced sub-e-graph stays a coloring, so colorability is monotone under
/// taking induced sub-e-graphs.
pub fn is_critical(g: &EGraph) -> bool {
    assert!(g.is_subcubic());
    if colorable_fast(g) {
        return false;
    }
    (0..g.n()).all(|v| colorable_fast(&g.delete_vertex(v)))
}

/// Colorability with a bipartite shortcut: a bipartite e-graph always has
/// the coloring `[0, 7-ext(v))` on one side and `[5, 12-ext(v))` on the
/// other, so only non-bipartite graphs need the LP.
fn colorable_fast(g: &EGraph) -> bool {
    g.is_bipartite() || is_colorable(g)
}

/// The catalog: members plus a canonical-form index.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub members: Vec<EGraph>,
    index: HashMap<Vec<u8>, usize>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Graph(#[from] EGraphError),
}

impl Catalog {
    pub fn from_members(members: Vec<EGraph>) -> Catalog {
        let index = members
            .iter()
            .enumerate()
            .map(|(i, g)| (canonical_form(g), i))
            .collect();
        Catalog { members, index }
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        Ok(Catalog::from_members(parse_egraphs(text)?))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, canonical: &[u8]) -> bool {
        self.index.contains_key(canonical)
    }

    pub fn position(&self, g: &EGraph) -> Option<usize> {
        self.index.get(&canonical_form(g)).copied()
    }
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct CatalogReport {
    pub checks: Vec<CheckResult>,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(checks: &mut Vec<CheckResult>, name: &str, passed: bool, detail: String) {
    checks.push(CheckResult {
        check: name.to_string(),
        passed,
        detail,
    });
}

/// The full property suite: 176 members, all valid, pairwise
/// non-isomorphic, all critical, exactly two cubic members (both 14-vertex
/// and 3-regular), and the nail-structure conditions (a0), (b0), (c0).
pub fn verify_catalog(cat: &Catalog) -> CatalogReport {
    verify_catalog_jobs(cat, 1)
}

/// [`verify_catalog`] with the criticality scans spread over `jobs` worker
/// threads; the report is identical for any job count.
pub fn verify_catalog_jobs(cat: &Catalog, jobs: usize) -> CatalogReport {
    let mut checks = Vec::new();
    check(
        &mut checks,
        "count",
        cat.len() == 176,
        format!("{} members (expected 176)", cat.len()),
    );

    let invalid: Vec<usize> = (0..cat.len())
        .filter(|&i| !cat.members[i].is_valid())
        .collect();
    check(
        &mut checks,
        "valid",
        invalid.is_empty(),
        format!("invalid members: {:?}", invalid),
    );

    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut duplicate = None;
    for (i, g) in cat.members.iter().enumerate() {
        if let Some(&j) = seen.get(&canonical_form(g)) {
            duplicate = Some((j, i));
            break;
        }
        seen.insert(canonical_form(g), i);
    }
    check(
        &mut checks,
        "pairwise-non-isomorphic",
        duplicate.is_none(),
        match duplicate {
            Some((j, i)) => format!("members {} and {} are isomorphic", j, i),
            None => "all distinct".to_string(),
        },
    );

    let verdicts = map_jobs(&cat.members, jobs, |g| is_critical(g));
    let non_critical: Vec<usize> = (0..cat.len()).filter(|&i| !verdicts[i]).collect();
    check(
        &mut checks,
        "critical",
        non_critical.is_empty(),
        format!("non-critical members: {:?}", non_critical),
    );

    let cubic: Vec<usize> = (0..cat.len())
        .filter(|&i| cat.members[i].is_cubic())
        .collect();
    let cubic_ok = cubic.len() == 2
        && cubic
            .iter()
            .all(|&i| cat.members[i].n() == 14 && cat.members[i].is_three_regular());
    check(
        &mut checks,
        "two-cubic-members",
        cubic_ok,
        format!("cubic members at {:?}", cubic),
    );

    let c5 = cycle_graph(5);
    let k4p = k4_plus();
    let mut a0_bad = Vec::new();
    let mut b0_bad = Vec::new();
    let mut c0_bad = Vec::new();
    for (i, g) in cat.members.iter().enumerate() {
        let nails = g.nail_count();
        if nails > 2 {
            a0_bad.push(i);
        } else if nails == 2 {
            let underlying = underlying_graph(g);
            if !crate::canon::is_isomorphic(&underlying, &c5)
                && !crate::canon::is_isomorphic(&underlying, &k4p)
            {
                a0_bad.push(i);
            }
        }
        if nails == 1 {
            let plain_deg2 = (0..g.n())
                .filter(|&v| g.deg(v) == 2 && !g.is_nailed(v))
                .count();
            if plain_deg2 < 3 {
                b0_bad.push(i);
            }
        }
        if g.degree_two_vertices().len() == 3 {
            c0_bad.push(i);
        }
    }
    check(
        &mut checks,
        "a0-nail-structure",
        a0_bad.is_empty(),
        format!("violations: {:?}", a0_bad),
    );
    check(
        &mut checks,
        "b0-one-nail-three-deg2",
        b0_bad.is_empty(),
        format!("violations: {:?}", b0_bad),
    );
    check(
        &mut checks,
        "c0-no-exactly-three-deg2",
        c0_bad.is_empty(),
        format!("violations: {:?}", c0_bad),
    );
    CatalogReport { checks }
}

fn underlying_graph(g: &EGraph) -> EGraph {
    let mut h = g.clone();
    for v in 0..g.n() {
        h = h.with_ext(v, g.deg(v) as u8);
    }
    h
}

pub fn cycle_graph(n: usize) -> EGraph {
    let names: Vec<String> = (0..n)
        .map(|i| crate::egraph::NAME_ALPHABET.chars().nth(i).unwrap().to_string())
        .collect();
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    EGraph::new(names, &edges, vec![2; n]).unwrap()
}

pub fn k4_plus() -> EGraph {
    parse_egraphs(include_str!("../data/k4plus.eg"))
        .unwrap()
        .pop()
        .unwrap()
}

/// The closure transformations verified against the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureRule {
    NailVertex,
    SubdivideEdgeTwice,
    AddPathBetweenNails,
    UncontractEdgeToC4,
    AddCommonNeighbor,
    AddTwoJoinedApexes,
    AttachC4,
    AttachK13,
}

impl ClosureRule {
    pub const ALL: [ClosureRule; 8] = [
        ClosureRule::NailVertex,
        ClosureRule::SubdivideEdgeTwice,
        ClosureRule::AddPathBetweenNails,
        ClosureRule::UncontractEdgeToC4,
        ClosureRule::AddCommonNeighbor,
        ClosureRule::AddTwoJoinedApexes,
        ClosureRule::AttachC4,
        ClosureRule::AttachK13,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClosureRule::NailVertex => "nail-vertex",
            ClosureRule::SubdivideEdgeTwice => "subdivide-edge-twice",
            ClosureRule::AddPathBetweenNails => "add-path-between-nails",
            ClosureRule::UncontractEdgeToC4 => "uncontract-edge-to-c4",
            ClosureRule::AddCommonNeighbor => "add-common-neighbor",
            ClosureRule::AddTwoJoinedApexes => "add-two-joined-apexes",
            ClosureRule::AttachC4 => "attach-c4",
            ClosureRule::AttachK13 => "attach-k13",
        }
    }

    pub fn from_name(name: &str) -> Option<ClosureRule> {
        ClosureRule::ALL.iter().copied().find(|r| r.name() == name)
    }
}

#[derive(Debug, Error)]
pub enum SiteError {
    #[error("site {site:?} is not admissible for {rule:?}")]
    Inadmissible { rule: ClosureRule, site: Vec<usize> },
}

/// All admissible sites of a rule on a member, in deterministic order.
pub fn closure_sites(rule: ClosureRule, g: &EGraph) -> Vec<Vec<usize>> {
    match rule {
        ClosureRule::NailVertex => (0..g.n())
            .filter(|&v| g.deg(v) == 2 && !g.is_nailed(v))
            .map(|v| vec![v])
            .collect(),
        ClosureRule::SubdivideEdgeTwice => {
            g.edges().into_iter().map(|(u, v)| vec![u, v]).collect()
        }
        ClosureRule::AddPathBetweenNails => {
            let nails: Vec<usize> = (0..g.n()).filter(|&v| g.is_nailed(v)).collect();
            if nails.len() == 2 {
                vec![nails]
            } else {
                Vec::new()
            }
        }
        ClosureRule::UncontractEdgeToC4 => g
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                g.deg(u) == 3 && g.deg(v) == 3 && !g.is_nailed(u) && !g.is_nailed(v)
            })
            .map(|(u, v)| vec![u, v])
            .collect(),
        ClosureRule::AddCommonNeighbor => {
            let mut sites = Vec::new();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if !g.adjacent(u, v)
                        && !g.is_nailed(u)
                        && !g.is_nailed(v)
                        && g.deg(u) <= 2
                        && g.deg(v) <= 2
                    {
                        sites.push(vec![u, v]);
                    }
                }
            }
            sites
        }
        ClosureRule::AddTwoJoinedApexes => {
            let candidates: Vec<usize> = (0..g.n())
                .filter(|&v| g.deg(v) == 2 && !g.is_nailed(v))
                .collect();
            let mut sites = Vec::new();
            // Unordered pair of disjoint unordered non-edges.
            for (i, &a1) in candidates.iter().enumerate() {
                for &a2 in &candidates[i + 1..] {
                    if g.adjacent(a1, a2) {
                        continue;
                    }
                    for (k, &a3) in candidates.iter().enumerate() {
                        for &a4 in &candidates[k + 1..] {
                            if g.adjacent(a3, a4) {
                                continue;
                            }
                            if a3 == a1 || a3 == a2 || a4 == a1 || a4 == a2 {
                                continue;
                            }
                            if (a1, a2) < (a3, a4) {
                                sites.push(vec![a1, a2, a3, a4]);
                            }
                        }
                    }
                }
            }
            sites
        }
        ClosureRule::AttachC4 => {
            let deg2 = g.degree_two_vertices();
            if g.nail_count() == 0 && deg2.len() == 4 {
                vec![deg2]
            } else {
                Vec::new()
            }
        }
        ClosureRule::AttachK13 => {
            let deg2 = g.degree_two_vertices();
            if deg2.len() == 6 {
                vec![deg2]
            } else {
                Vec::new()
            }
        }
    }
}

/// All simple triangle-free results of applying the rule at a site; external
/// degrees are adjusted as in the corresponding transformations.
pub fn apply_closure(
    rule: ClosureRule,
    g: &EGraph,
    site: &[usize],
) -> Result<Vec<EGraph>, SiteError> {
    let admissible = closure_sites(rule, g);
    if !admissible.iter().any(|s| s == site) {
        return Err(SiteError::Inadmissible {
            rule,
            site: site.to_vec(),
        });
    }
    let fresh_names = |g: &EGraph, k: usize| -> Vec<String> {
        let mut out = Vec::new();
        for c in crate::egraph::NAME_ALPHABET.chars() {
            let s = c.to_string();
            if g.index_of(&s).is_none() && !out.contains(&s) {
                out.push(s);
                if out.len() == k {
                    break;
                }
            }
        }
        assert_eq!(out.len(), k, "name space exhausted");
        out
    };
    let results: Vec<EGraph> = match rule {
        ClosureRule::NailVertex => vec![g.with_ext(site[0], 3)],
        ClosureRule::SubdivideEdgeTwice => {
            let (u, v) = (site[0], site[1]);
            let fresh = fresh_names(g, 2);
            let mut names = g.names().to_vec();
            names.extend(fresh);
            let a = g.n();
            let b = g.n() + 1;
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&e| e != (u.min(v), u.max(v)))
                .collect();
            edges.extend([(u, a), (a, b), (b, v)]);
            let mut ext: Vec<u8> = (0..g.n()).map(|w| g.ext(w)).collect();
            ext.extend([2, 2]);
            vec![EGraph::new(names, &edges, ext).unwrap()]
        }
        ClosureRule::AddPathBetweenNails => {
            let (x, y) = (site[0], site[1]);
            let mut out = Vec::new();
            for interior in [1usize, 2] {
                let fresh = fresh_names(g, interior);
                let mut names = g.names().to_vec();
                names.extend(fresh);
                let base = g.n();
                let mut edges = g.edges();
                // Path x - w1 (- w2) - y; the nails become plain degree-3.
                edges.push((x, base));
                if interior == 2 {
                    edges.push((base, base + 1));
                    edges.push((base + 1, y));
                } else {
                    edges.push((base, y));
                }
                let mut ext: Vec<u8> = (0..g.n()).map(|w| g.ext(w)).collect();
                ext.extend(vec![2; interior]);
                if let Ok(h) = EGraph::new(names, &edges, ext) {
                    out.push(h);
                }
            }
            out
        }
        ClosureRule::UncontractEdgeToC4 => {
            let (x, y) = (site[0], site[1]);
            let xn: Vec<usize> = g.neighbors(x).filter(|&w| w != y).collect();
            let yn: Vec<usize> = g.neighbors(y).filter(|&w| w != x).collect();
            assert_eq!(xn.len(), 2);
            assert_eq!(yn.len(), 2);
            let keep: Vec<usize> = (0..g.n()).filter(|&w| w != x && w != y).collect();
            let mut out = Vec::new();
            for swap in [false, true] {
                let stub = g.induced(&keep);
                let fresh = fresh_names(&stub, 4);
                let mut names = stub.names().to_vec();
                names.extend(fresh);
                let base = stub.n();
                let pos = |w: usize| keep.iter().position(|&k| k == w).unwrap();
                let mut edges = stub.edges();
                // Cycle p0 p1 p2 p3 with x's neighbours on p0, p2 and y's on
                // p1, p3.
                edges.extend([
                    (base, base + 1),
                    (base + 1, base + 2),
                    (base + 2, base + 3),
                    (base + 3, base),
                ]);
                edges.push((pos(xn[0]), base));
                edges.push((pos(xn[1]), base + 2));
                let (c, d) = if swap { (yn[1], yn[0]) } else { (yn[0], yn[1]) };
                edges.push((pos(c), base + 1));
                edges.push((pos(d), base + 3));
                let mut ext: Vec<u8> = (0..stub.n()).map(|w| stub.ext(w)).collect();
                ext.extend([3, 3, 3, 3]);
                if let Ok(h) = EGraph::new(names, &edges, ext) {
                    out.push(h);
                }
            }
            out
        }
        ClosureRule::AddCommonNeighbor => {
            let (u, v) = (site[0], site[1]);
            let fresh = fresh_names(g, 1);
            let mut names = g.names().to_vec();
            names.extend(fresh);
            let w = g.n();
            let mut edges = g.edges();
            edges.extend([(u, w), (v, w)]);
            let mut ext: Vec<u8> = (0..g.n()).map(|x| g.ext(x)).collect();
            ext[u] = g.deg(u) as u8 + 1;
            ext[v] = g.deg(v) as u8 + 1;
            ext.push(2);
            vec![EGraph::new(names, &edges, ext).unwrap()]
        }
        ClosureRule::AddTwoJoinedApexes => {
            let [a1, a2, a3, a4] = [site[0], site[1], site[2], site[3]];
            let fresh = fresh_names(g, 3);
            let mut names = g.names().to_vec();
            names.extend(fresh);
            let (b1, b2, c) = (g.n(), g.n() + 1, g.n() + 2);
            let mut edges = g.edges();
            edges.extend([(a1, b1), (a2, b1), (a3, b2), (a4, b2), (b1, c), (b2, c)]);
            let mut ext: Vec<u8> = (0..g.n()).map(|x| g.ext(x)).collect();
            for &a in site {
                ext[a] = 3;
            }
            ext.extend([3, 3, 2]);
            vec![EGraph::new(names, &edges, ext).unwrap()]
        }
        ClosureRule::AttachC4 => {
            let mut out = Vec::new();
            // All assignments of the four degree-2 vertices to cycle
            // positions; isomorphic duplicates are culled by the caller.
            let mut perm = [0usize, 1, 2, 3];
            let mut perms = Vec::new();
            permutations(&mut perm, 0, &mut perms);
            for p in perms {
                let fresh = fresh_names(g, 4);
                let mut names = g.names().to_vec();
                names.extend(fresh);
                let base = g.n();
                let mut edges = g.edges();
                edges.extend([
                    (base, base + 1),
                    (base + 1, base + 2),
                    (base + 2, base + 3),
                    (base + 3, base),
                ]);
                for (slot, &which) in p.iter().enumerate() {
                    edges.push((site[which], base + slot));
                }
                let mut ext: Vec<u8> = (0..g.n()).map(|x| g.ext(x)).collect();
                for &u in site {
                    ext[u] = 3;
                }
                ext.extend([3, 3, 3, 3]);
                if let Ok(h) = EGraph::new(names, &edges, ext) {
                    if h.is_triangle_free() {
                        out.push(h);
                    }
                }
            }
            out
        }
        ClosureRule::AttachK13 => {
            let mut out = Vec::new();
            for split in pair_partitions(site) {
                let fresh = fresh_names(g, 4);
                let mut names = g.names().to_vec();
                names.extend(fresh);
                let center = g.n();
                let mut edges = g.edges();
                for (leaf, pair) in split.iter().enumerate() {
                    let l = center + 1 + leaf;
                    edges.push((center, l));
                    edges.push((pair.0, l));
                    edges.push((pair.1, l));
                }
                let mut ext: Vec<u8> = (0..g.n()).map(|x| g.ext(x)).collect();
                for &u in site {
                    ext[u] = 3;
                }
                ext.extend([3, 3, 3, 3]);
                if let Ok(h) = EGraph::new(names, &edges, ext) {
                    if h.is_three_regular() && h.girth().map_or(false, |gi| gi >= 6) {
                        out.push(h);
                    }
                }
            }
            out
        }
    };
    Ok(results
        .into_iter()
        .filter(|h| h.is_triangle_free() && h.is_subcubic())
        .collect())
}

fn permutations(arr: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*arr);
        return;
    }
    for i in k..4 {
        arr.swap(k, i);
        permutations(arr, k + 1, out);
        arr.swap(k, i);
    }
}

/// Partitions of six vertices into three unordered pairs.
fn pair_partitions(six: &[usize]) -> Vec<[(usize, usize); 3]> {
    assert_eq!(six.len(), 6);
    let mut out = Vec::new();
    let a = six[0];
    for i in 1..6 {
        let b = six[i];
        let rest: Vec<usize> = (1..6).filter(|&j| j != i).map(|j| six[j]).collect();
        let c = rest[0];
        for j in 1..4 {
            let d = rest[j];
            let last: Vec<usize> = (1..4).filter(|&k| k != j).map(|k| rest[k]).collect();
            out.push([(a, b), (c, d), (last[0], last[1])]);
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ClosureViolation {
    pub member: usize,
    pub site: Vec<String>,
    pub result: String,
}

#[derive(Debug, Serialize)]
pub struct ClosureReport {
    pub rule: ClosureRule,
    pub members: usize,
    pub results_checked: usize,
    pub violations: Vec<ClosureViolation>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every member, every admissible site and every result: the result is
/// non-critical or isomorphic to a member. Criticality verdicts are cached
/// by canonical form; violations are reported with witnesses.
pub fn verify_closure(cat: &Catalog, rule: ClosureRule) -> ClosureReport {
    verify_closure_jobs(cat, rule, 1)
}

/// [`verify_closure`] with members spread over `jobs` worker threads; the
/// report is identical for any job count.
pub fn verify_closure_jobs(cat: &Catalog, rule: ClosureRule, jobs: usize) -> ClosureReport {
    let per_member = map_jobs(&cat.members, jobs, |member| {
        let mut cache: HashMap<Vec<u8>, bool> = HashMap::new();
        let mut violations: Vec<(Vec<String>, String)> = Vec::new();
        let mut results_checked = 0usize;
        for site in closure_sites(rule, member) {
            let results = apply_closure(rule, member, &site).expect("site is admissible");
            for r in results {
                results_checked += 1;
                let key = canonical_form(&r);
                if cat.contains(&key) {
                    continue;
                }
                let critical = *cache.entry(key).or_insert_with(|| is_critical(&r));
                if critical {
                    violations.push((
                        site.iter().map(|&v| member.name(v).to_string()).collect(),
                        crate::egraph::serialize_egraph(&canonicalized(&r))
                            .unwrap_or_else(|_| format!("{:?}", r)),
                    ));
                }
            }
        }
        (results_checked, violations)
    });
    let mut violations = Vec::new();
    let mut results_checked = 0usize;
    for (mi, (count, vs)) in per_member.into_iter().enumerate() {
        results_checked += count;
        for (site, result) in vs {
            violations.push(ClosureViolation {
                member: mi,
                site,
                result,
            });
        }
    }
    ClosureReport {
        rule,
        members: cat.len(),
        results_checked,
        violations,
    }
}

/// Apply `f` to every item, splitting the work over `jobs` threads; results
/// come back in input order.
fn map_jobs<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let mut results: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        for (slot, part) in results.chunks_mut(chunk).zip(items.chunks(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (out, item) in slot.iter_mut().zip(part) {
                    *out = Some(f(item));
                }
            });
        }
    });
    results.into_iter().map(|r| r.unwrap()).collect()
}

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("requested bound {requested} exceeds the configured limit {limit}")]
    BoundExceeded { requested: usize, limit: usize },
}

pub const DEFAULT_ENUM_BOUND: usize = 12;

/// All valid critical e-graphs with at most `max_n` vertices, up to
/// isomorphism, canonically labelled and sorted by (order, canonical form).
///
/// `limit` guards runtime (the CLI wires it to `FRACCRIT_MAX_N`); pass
/// `max_n` itself to lift it deliberately.
pub fn enumerate_critical(max_n: usize, limit: usize) -> Result<Vec<EGraph>, EnumerateError> {
    if max_n > limit {
        return Err(EnumerateError::BoundExceeded {
            requested: max_n,
            limit,
        });
    }
    let mut found: HashMap<Vec<u8>, EGraph> = HashMap::new();
    visit_class_graphs(max_n, |g| critical_nail_patterns(g, &mut found));
    let mut out: Vec<EGraph> = found.into_values().collect();
    out.sort_by_key(|g| (g.n(), canonical_form(g)));
    Ok(out)
}

/// Connected 2-connected triangle-free graphs with all degrees 2 or 3, on 4
/// to `max_n` vertices, one per isomorphism class.
///
/// A critical e-graph is connected (a non-colorable component would be a
/// proper induced sub-e-graph), has minimum degree 2 (a coloring of `G - v`
/// always extends over a vertex of degree at most one), and has no cut
/// vertex (colorings of the two sides can be aligned on the cut vertex by a
/// measure-preserving bijection). Every such graph arises from one of its
/// cycles by repeatedly attaching open ears between degree-2 vertices, and
/// every intermediate graph of the ear decomposition lies in the same
/// class, so breadth-first closure over ear additions is exhaustive.
/// Number of candidate underlying graphs per order, for diagnostics.
pub fn class_graph_counts(max_n: usize) -> Vec<(usize, usize)> {
    let mut counts: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    visit_class_graphs(max_n, |g| {
        *counts.entry(g.n()).or_insert(0) += 1;
    });
    counts.into_iter().collect()
}

/// Visit each class member exactly once. The worklist and the seen-set hold
/// canonical byte labels rather than graphs, which keeps the deep levels
/// within memory.
fn visit_class_graphs(max_n: usize, mut visit: impl FnMut(&EGraph)) {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut work: Vec<Vec<u8>> = Vec::new();
    for n in 4..=max_n.min(crate::egraph::NAME_ALPHABET.len()) {
        let c = cycle_graph(n);
        let form = canonical_form(&c);
        if seen.insert(form.clone()) {
            work.push(form);
        }
    }
    while let Some(form) = work.pop() {
        let g = crate::canon::decode_form(&form);
        visit(&g);
        let deg2 = g.degree_two_vertices();
        for (i, &u) in deg2.iter().enumerate() {
            for &v in &deg2[i + 1..] {
                for interior in 0..=(max_n - g.n()) {
                    if interior == 0 && (g.adjacent(u, v) || g.adj_mask(u) & g.adj_mask(v) != 0) {
                        continue; // parallel edge or triangle
                    }
                    let n_new = g.n() + interior;
                    if n_new > crate::egraph::NAME_ALPHABET.len() {
                        continue;
                    }
                    let names: Vec<String> = (0..n_new)
                        .map(|k| {
                            crate::egraph::NAME_ALPHABET
                                .chars()
                                .nth(k)
                                .unwrap()
                                .to_string()
                        })
                        .collect();
                    let mut edges = g.edges();
                    if interior == 0 {
                        edges.push((u, v));
                    } else {
                        edges.push((u, g.n()));
                        for t in 0..interior - 1 {
                            edges.push((g.n() + t, g.n() + t + 1));
                        }
                        edges.push((g.n() + interior - 1, v));
                    }
                    let ext = {
                        let mut adj = vec![0u64; n_new];
                        for &(a, b) in &edges {
                            adj[a] |= 1 << b;
                            adj[b] |= 1 << a;
                        }
                        adj.iter().map(|m| m.count_ones() as u8).collect::<Vec<u8>>()
                    };
                    let h = match EGraph::new(names, &edges, ext) {
                        Ok(h) => h,
                        Err(_) => continue,
                    };
                    if !h.is_triangle_free() {
                        continue;
                    }
                    let form = canonical_form(&h);
                    if seen.insert(form.clone()) {
                        work.push(form);
                    }
                }
            }
        }
    }
}

/// Walk the nail-pattern lattice of one underlying graph, recording critical
/// patterns. Nailing only ever helps colorability (a measure-5 set contains
/// a measure-4 one), so subsets of a colorable pattern are skipped wholesale.
fn critical_nail_patterns(g: &EGraph, found: &mut HashMap<Vec<u8>, EGraph>) {
    if g.is_bipartite() {
        return; // every nail pattern of a bipartite graph is colorable
    }
    let deg2 = g.degree_two_vertices();
    let mut stack: Vec<(EGraph, usize)> = Vec::new();
    if is_colorable(g) {
        return;
    }
    stack.push((g.clone(), 0));
    while let Some((current, next_idx)) = stack.pop() {
        if is_critical_given_uncolorable(&current) {
            let canon = canonicalized(&current);
            found.entry(canonical_form(&canon)).or_insert(canon);
        }
        for (i, &v) in deg2.iter().enumerate().skip(next_idx) {
            if current.is_nailed(v) {
                continue;
            }
            let nailed = current.with_ext(v, 3);
            if !is_colorable(&nailed) {
                stack.push((nailed, i + 1));
            }
        }
    }
}

fn is_critical_given_uncolorable(g: &EGraph) -> bool {
    (0..g.n()).all(|v| colorable_fast(&g.delete_vertex(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_family_is_critical() {
        assert!(is_critical(&cycle_graph(5)));
        let one_nail = cycle_graph(5).with_ext(0, 3);
        assert!(is_critical(&one_nail));
        let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
        assert!(!is_critical(&k2));
    }

    #[test]
    fn f14_is_critical() {
        let f14 = parse_egraphs(include_str!("../data/f14-1.eg"))
            .unwrap()
            .pop()
            .unwrap();
        assert!(is_critical(&f14));
    }

    #[test]
    fn enumerate_tiny() {
        // No valid critical e-graph has fewer than five vertices.
        let none = enumerate_critical(3, 12).unwrap();
        assert!(none.is_empty());
        let four = enumerate_critical(4, 12).unwrap();
        assert!(four.is_empty());
    }

    #[test]
    fn enumerate_five() {
        // Exactly the C5 nail patterns with at most two nails.
        let five = enumerate_critical(5, 12).unwrap();
        assert_eq!(five.len(), 4);
        for g in &five {
            assert_eq!(g.n(), 5);
            assert!(g.nail_count() <= 2);
            assert!(is_critical(g));
        }
    }

    #[test]
    fn bound_respected() {
        assert!(matches!(
            enumerate_critical(13, 12),
            Err(EnumerateError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn closure_sites_and_results() {
        let c5 = cycle_graph(5);
        // NailVertex on a degree-2 vertex gives C5 with one nail.
        let sites = closure_sites(ClosureRule::NailVertex, &c5);
        assert_eq!(sites.len(), 5);
        let results = apply_closure(ClosureRule::NailVertex, &c5, &sites[0]).unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].nail_count(), 1);

        // SubdivideEdgeTwice on K2 gives the 4-path with two inner
        // degree-2 vertices.
        let k2 = EGraph::from_edges(&[("u", "v")], &[]).with_uniform_ext(3);
        let results = apply_closure(ClosureRule::SubdivideEdgeTwice, &k2, &[0, 1]).unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].n(), 4);
        assert_eq!(results[0].edge_count(), 3);

        // UncontractEdgeToC4 produces the two pairings.
        let f14 = parse_egraphs(include_str!("../data/f14-1.eg"))
            .unwrap()
            .pop()
            .unwrap();
        let site = closure_sites(ClosureRule::UncontractEdgeToC4, &f14)
            .into_iter()
            .next()
            .unwrap();
        let results = apply_closure(ClosureRule::UncontractEdgeToC4, &f14, &site).unwrap();
        assert_eq!(results.len(), 2);
        for r in &results {
            assert_eq!(r.n(), 16);
            assert!(r.is_three_regular());
            assert!(r.is_triangle_free());
        }
    }

    #[test]
    fn inadmissible_site_rejected() {
        let c5 = cycle_graph(5);
        assert!(apply_closure(ClosureRule::AttachC4, &c5, &[0, 1, 2, 3]).is_err());
    }
}
