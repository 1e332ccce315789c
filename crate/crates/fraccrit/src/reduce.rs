//! Trivial constraints, reducible configurations, and the standard-argument
//! checker.
//!
//! A configuration is an e-graph `G1` with a boundary `S` and a list of
//! measure constraints cutting a subpolytope `P` of `P(G1[S])`. The
//! configuration is reducible subject to `P` when every vertex of `P`
//! extends to a full coloring of `G1`; the standard argument additionally
//! checks a replacement e-graph `H` against the constraints and the catalog.

use crate::canon::canonical_form;
use crate::coloring::{build_polytope, extends, BoundaryProfile, IndSetFamily};
use crate::egraph::{parse_egraphs, EGraph};
use crate::embed::{apply_replacement, find_boundary_embeddings, ReplacementRule};
use crate::polytope::{enumerate_vertices, Polytope};
use crate::rat::Rat;
use crate::simplex::{self, LpOutcome, Sense};
use serde::Serialize;
use thiserror::Error;

/// An upper bound on the measure of a union or of an intersection of unions
/// of boundary color sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryConstraint {
    /// `|union of phi(v) for v in a| <= bound`.
    CupLe { a: Vec<String>, bound: Rat },
    /// `|(union over b) /\ (union over c)| <= bound`.
    CapLe {
        b: Vec<String>,
        c: Vec<String>,
        bound: Rat,
    },
}

impl BoundaryConstraint {
    fn display(&self) -> String {
        match self {
            BoundaryConstraint::CupLe { a, bound } => {
                format!("cup {{{}}} <= {}", a.join(" "), bound)
            }
            BoundaryConstraint::CapLe { b, c, bound } => {
                format!("cap {{{}}} {{{}}} <= {}", b.join(" "), c.join(" "), bound)
            }
        }
    }
}

/// `G1` with boundary `S` and the constraints defining the subpolytope.
#[derive(Clone, Debug)]
pub struct Configuration {
    pub g1: EGraph,
    pub boundary: Vec<String>,
    pub constraints: Vec<BoundaryConstraint>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("boundary names unknown vertex `{0}`")]
    UnknownBoundary(String),
    #[error("constraint references vertex `{0}` off the boundary")]
    OffBoundary(String),
    #[error("no interior vertex avoids the trivial constraints")]
    EveryVertexParticipates,
    #[error("config file: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] crate::egraph::EGraphError),
}

impl Configuration {
    pub fn boundary_indices(&self) -> Result<Vec<usize>, ConfigError> {
        self.boundary
            .iter()
            .map(|name| {
                self.g1
                    .index_of(name)
                    .ok_or_else(|| ConfigError::UnknownBoundary(name.clone()))
            })
            .collect()
    }
}

/// The trivial constraints of `(h, S)`: for every interior vertex `z`, the
/// union of the color sets of its boundary neighbours has measure at most
/// `ext(z) + 4`; for every interior edge `z1 z2`, the boundary neighbours of
/// `z1` and of `z2` have color unions intersecting in measure at most
/// `ext(z1) + ext(z2) - 3`. Constraints that can never bind and dominated
/// ones are removed.
pub fn trivial_constraints(h: &EGraph, s: &[usize]) -> Vec<BoundaryConstraint> {
    let in_s = |v: usize| s.contains(&v);
    let free = |v: usize| Rat::int(7 - h.ext(v) as i64);
    let mut out: Vec<BoundaryConstraint> = Vec::new();
    let mut push = |c: BoundaryConstraint| {
        if !out.contains(&c) {
            out.push(c);
        }
    };
    for z in 0..h.n() {
        if in_s(z) {
            continue;
        }
        let a: Vec<usize> = h.neighbors(z).filter(|&v| in_s(v)).collect();
        if a.is_empty() {
            continue;
        }
        let bound = Rat::int(h.ext(z) as i64 + 4);
        let cap_total: Rat = a.iter().map(|&v| free(v)).fold(Rat::zero(), |x, y| x + y);
        if cap_total <= bound {
            continue; // can never bind
        }
        push(BoundaryConstraint::CupLe {
            a: a.iter().map(|&v| h.name(v).to_string()).collect(),
            bound,
        });
    }
    for (z1, z2) in h.edges() {
        if in_s(z1) || in_s(z2) {
            continue;
        }
        let b: Vec<usize> = h.neighbors(z1).filter(|&v| in_s(v)).collect();
        let c: Vec<usize> = h.neighbors(z2).filter(|&v| in_s(v)).collect();
        if b.is_empty() || c.is_empty() {
            continue;
        }
        let bound = Rat::int(h.ext(z1) as i64 + h.ext(z2) as i64 - 3);
        let cap_b: Rat = b.iter().map(|&v| free(v)).fold(Rat::zero(), |x, y| x + y);
        let cap_c: Rat = c.iter().map(|&v| free(v)).fold(Rat::zero(), |x, y| x + y);
        if cap_b.min(cap_c) <= bound {
            continue;
        }
        let mut bn: Vec<String> = b.iter().map(|&v| h.name(v).to_string()).collect();
        let mut cn: Vec<String> = c.iter().map(|&v| h.name(v).to_string()).collect();
        if bn > cn {
            std::mem::swap(&mut bn, &mut cn);
        }
        push(BoundaryConstraint::CapLe {
            b: bn,
            c: cn,
            bound,
        });
    }
    remove_dominated(out)
}

fn remove_dominated(constraints: Vec<BoundaryConstraint>) -> Vec<BoundaryConstraint> {
    let subset = |x: &[String], y: &[String]| x.iter().all(|v| y.contains(v));
    let dominated = |weak: &BoundaryConstraint, strong: &BoundaryConstraint| match (weak, strong) {
        (
            BoundaryConstraint::CupLe { a: wa, bound: wb },
            BoundaryConstraint::CupLe { a: sa, bound: sb },
        ) => subset(wa, sa) && sb <= wb,
        (
            BoundaryConstraint::CapLe {
                b: wb,
                c: wc,
                bound: wbd,
            },
            BoundaryConstraint::CapLe {
                b: sb,
                c: sc,
                bound: sbd,
            },
        ) => {
            sbd <= wbd
                && ((subset(wb, sb) && subset(wc, sc)) || (subset(wb, sc) && subset(wc, sb)))
        }
        _ => false,
    };
    let keep: Vec<bool> = (0..constraints.len())
        .map(|i| {
            !constraints
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && dominated(&constraints[i], other))
        })
        .collect();
    // Mutual domination (equal constraints) resolved by keeping the first.
    let mut seen: Vec<&BoundaryConstraint> = Vec::new();
    constraints
        .iter()
        .zip(keep)
        .filter_map(|(on, k)| {
            if k && !seen.contains(&on) {
                seen.push(on);
                Some(on.clone())
            } else {
                None
            }
        })
        .collect()
}

/// Is `z` on a path of length at most three (edges) with both ends in `S`?
pub fn participates_in_trivial_constraints(h: &EGraph, s: &[usize], z: usize) -> bool {
    assert!(!s.contains(&z));
    let s_neighbors: Vec<usize> = h.neighbors(z).filter(|v| s.contains(v)).collect();
    if s_neighbors.len() >= 2 {
        return true;
    }
    if s_neighbors.is_empty() {
        return false;
    }
    let s1 = s_neighbors[0];
    for w in h.neighbors(z) {
        if w == s1 {
            continue;
        }
        for s2 in h.neighbors(w) {
            if s.contains(&s2) && s2 != s1 && s2 != z && w != s2 {
                return true;
            }
        }
    }
    false
}

/// `P(G1[S])` intersected with the compiled constraint half-spaces.
pub fn compile_constraints(
    cfg: &Configuration,
) -> Result<(Polytope, IndSetFamily), ConfigError> {
    let s = cfg.boundary_indices()?;
    let gs = cfg.g1.induced(&s);
    let (mut sys, family) = build_polytope(&gs);
    for con in &cfg.constraints {
        let resolve = |names: &[String]| -> Result<u64, ConfigError> {
            let mut mask = 0u64;
            for n in names {
                let i = gs
                    .index_of(n)
                    .ok_or_else(|| ConfigError::OffBoundary(n.clone()))?;
                mask |= 1 << i;
            }
            Ok(mask)
        };
        let (coeffs, bound): (Vec<Rat>, Rat) = match con {
            BoundaryConstraint::CupLe { a, bound } => {
                let am = resolve(a)?;
                (
                    family
                        .sets
                        .iter()
                        .map(|&j| if j & am != 0 { Rat::one() } else { Rat::zero() })
                        .collect(),
                    bound.clone(),
                )
            }
            BoundaryConstraint::CapLe { b, c, bound } => {
                let bm = resolve(b)?;
                let cm = resolve(c)?;
                (
                    family
                        .sets
                        .iter()
                        .map(|&j| {
                            if j & bm != 0 && j & cm != 0 {
                                Rat::one()
                            } else {
                                Rat::zero()
                            }
                        })
                        .collect(),
                    bound.clone(),
                )
            }
        };
        sys.push_le(coeffs, bound);
    }
    Ok((Polytope { system: sys }, family))
}

/// Verdict of [`is_reducible`] with the per-vertex extension evidence.
#[derive(Debug, Serialize)]
pub struct ReducibilityReport {
    pub reducible: bool,
    pub polytope_vertices: usize,
    /// Dumps of the profile vertices that fail to extend.
    pub failures: Vec<String>,
}

/// Every vertex of the constrained profile polytope must extend to `G1`.
pub fn is_reducible(cfg: &Configuration) -> Result<ReducibilityReport, ConfigError> {
    let s = cfg.boundary_indices()?;
    let (poly, family) = compile_constraints(cfg)?;
    let vertices = enumerate_vertices(&poly).expect("profile polytope is bounded");
    let mut failures = Vec::new();
    for y in &vertices {
        let profile = BoundaryProfile {
            family: family.clone(),
            y: y.clone(),
        };
        if extends(&profile, &cfg.g1, &s).is_err() {
            failures.push(profile.dump());
        }
    }
    Ok(ReducibilityReport {
        reducible: failures.is_empty(),
        polytope_vertices: vertices.len(),
        failures,
    })
}

/// The exclusion argument: some interior vertex must avoid the trivial
/// constraints (otherwise `Err`), and `G1` must be reducible subject to
/// exactly those constraints.
pub fn check_excludable(g1: &EGraph, s_names: &[String]) -> Result<ReducibilityReport, ConfigError> {
    let s: Vec<usize> = s_names
        .iter()
        .map(|n| {
            g1.index_of(n)
                .ok_or_else(|| ConfigError::UnknownBoundary(n.clone()))
        })
        .collect::<Result<_, _>>()?;
    let witness = (0..g1.n())
        .filter(|v| !s.contains(v))
        .any(|z| !participates_in_trivial_constraints(g1, &s, z));
    if !witness {
        return Err(ConfigError::EveryVertexParticipates);
    }
    let cfg = Configuration {
        g1: g1.clone(),
        boundary: s_names.to_vec(),
        constraints: trivial_constraints(g1, &s),
    };
    is_reducible(&cfg)
}

/// The standard argument: configuration, replacement e-graph `H` sharing
/// exactly the boundary, and the catalog for condition (iv).
#[derive(Clone, Debug)]
pub struct StandardArgument {
    pub config: Configuration,
    pub h: EGraph,
}

#[derive(Debug, Serialize)]
pub struct ConditionReport {
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct ArgumentReport {
    /// (i) substitute validity: H is a valid smaller replacement agreeing on
    /// the boundary.
    pub substitute_valid: ConditionReport,
    /// (ii) reducibility of the configuration.
    pub reducible: ConditionReport,
    /// (iii) every coloring of H satisfies the constraints.
    pub h_satisfies: ConditionReport,
    /// (iv) replacements inside catalog members stay non-critical or in the
    /// catalog. `None` when no catalog was supplied.
    pub closure: Option<ConditionReport>,
}

impl ArgumentReport {
    pub fn all_passed(&self) -> bool {
        self.substitute_valid.passed
            && self.reducible.passed
            && self.h_satisfies.passed
            && self.closure.as_ref().map_or(true, |c| c.passed)
    }
}

#[derive(Debug, Error)]
pub enum ArgumentError {
    #[error("H and G1 disagree on the boundary: {0}")]
    BoundaryMismatch(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

pub fn check_standard_argument(
    arg: &StandardArgument,
    catalog: Option<&crate::catalog::Catalog>,
) -> Result<ArgumentReport, ArgumentError> {
    let cfg = &arg.config;
    let s = cfg.boundary_indices()?;
    let h = &arg.h;
    // Interface: H contains exactly the boundary among G1's vertices, the
    // external degrees agree there, and H[S] contains G1[S].
    let mut hs = Vec::with_capacity(s.len());
    for name in &cfg.boundary {
        let hv = h
            .index_of(name)
            .ok_or_else(|| ArgumentError::BoundaryMismatch(format!("missing `{}`", name)))?;
        hs.push(hv);
    }
    for name in h.names() {
        if cfg.g1.index_of(name).is_some() && !cfg.boundary.contains(name) {
            return Err(ArgumentError::BoundaryMismatch(format!(
                "H shares non-boundary vertex `{}`",
                name
            )));
        }
    }
    for (i, name) in cfg.boundary.iter().enumerate() {
        let gv = cfg.g1.index_of(name).unwrap();
        if cfg.g1.ext(gv) != h.ext(hs[i]) {
            return Err(ArgumentError::BoundaryMismatch(format!(
                "external degree of `{}` differs",
                name
            )));
        }
        for (j, other) in cfg.boundary.iter().enumerate().skip(i + 1) {
            let gw = cfg.g1.index_of(other).unwrap();
            if cfg.g1.adjacent(gv, gw) && !h.adjacent(hs[i], hs[j]) {
                return Err(ArgumentError::BoundaryMismatch(format!(
                    "H[S] misses boundary edge `{}`-`{}`",
                    name, other
                )));
            }
        }
    }

    // (i) structural substitute validity.
    let smaller = h.n() < cfg.g1.n();
    let h_valid = h.is_valid();
    let added_ss_edges: Vec<String> = {
        let mut v = Vec::new();
        for (i, a) in cfg.boundary.iter().enumerate() {
            for (j, b) in cfg.boundary.iter().enumerate().skip(i + 1) {
                let ga = cfg.g1.index_of(a).unwrap();
                let gb = cfg.g1.index_of(b).unwrap();
                if h.adjacent(hs[i], hs[j]) && !cfg.g1.adjacent(ga, gb) {
                    v.push(format!("{}-{}", a, b));
                }
            }
        }
        v
    };
    let substitute_valid = ConditionReport {
        passed: smaller && h_valid,
        detail: format!(
            "|V(H)| = {} vs |V(G1)| = {}; H valid: {}{}",
            h.n(),
            cfg.g1.n(),
            h_valid,
            if added_ss_edges.is_empty() {
                String::new()
            } else {
                format!(
                    "; H adds boundary edges {} (ambient triangle check left to the instance)",
                    added_ss_edges.join(", ")
                )
            }
        ),
    };

    // (ii).
    let red = is_reducible(cfg)?;
    let reducible = ConditionReport {
        passed: red.reducible,
        detail: format!(
            "{} polytope vertices, {} failed to extend",
            red.polytope_vertices,
            red.failures.len()
        ),
    };

    // (iii): for each constraint, maximize its value over P(H); the
    // projection to S-profiles satisfies the constraint everywhere iff the
    // maximum stays within the bound.
    let (h_sys, h_family) = build_polytope(h);
    let mut worst = Vec::new();
    for con in &cfg.constraints {
        let resolve = |names: &[String]| -> u64 {
            let mut mask = 0u64;
            for n in names {
                let i = h
                    .index_of(n)
                    .expect("constraint vertices live on the boundary");
                mask |= 1 << i;
            }
            mask
        };
        let (objective, bound): (Vec<Rat>, &Rat) = match con {
            BoundaryConstraint::CupLe { a, bound } => {
                let am = resolve(a);
                (
                    h_family
                        .sets
                        .iter()
                        .map(|&i| if i & am != 0 { Rat::one() } else { Rat::zero() })
                        .collect(),
                    bound,
                )
            }
            BoundaryConstraint::CapLe { b, c, bound } => {
                let bm = resolve(b);
                let cm = resolve(c);
                (
                    h_family
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
                    bound,
                )
            }
        };
        match simplex::optimize(&h_sys, &objective, Sense::Max) {
            LpOutcome::Optimal { value, .. } => {
                let ok = &value <= bound;
                worst.push((con.display(), value, ok));
            }
            LpOutcome::Infeasible(_) => {
                worst.push((format!("{} (H not colorable)", con.display()), Rat::zero(), false));
            }
            other => unreachable!("{:?}", other),
        }
    }
    let h_satisfies = ConditionReport {
        passed: worst.iter().all(|(_, _, ok)| *ok),
        detail: worst
            .iter()
            .map(|(c, v, ok)| format!("{}: max = {} ({})", c, v, if *ok { "ok" } else { "VIOLATED" }))
            .collect::<Vec<_>>()
            .join("; "),
    };

    // (iv): replace H-matches by G1 inside every catalog member.
    let closure = match catalog {
        None => None,
        Some(cat) => {
            let rule = ReplacementRule::new(
                h.clone(),
                cfg.g1.clone(),
                cfg.boundary.clone(),
            )
            .expect("interface checks establish the rule invariant");
            let hs_indices: Vec<usize> = cfg
                .boundary
                .iter()
                .map(|n| h.index_of(n).unwrap())
                .collect();
            let mut checked = 0usize;
            let mut violations: Vec<String> = Vec::new();
            for member in &cat.members {
                for emb in find_boundary_embeddings(member, h, &hs_indices) {
                    for result in replacement_results(member, &rule, &emb) {
                        checked += 1;
                        if !result.is_valid() {
                            continue; // cannot be a valid critical e-graph
                        }
                        if crate::catalog::is_critical(&result)
                            && !cat.contains(&canonical_form(&result))
                        {
                            violations.push(format!(
                                "member {:?} yields critical non-member {:?}",
                                member, result
                            ));
                        }
                    }
                }
            }
            Some(ConditionReport {
                passed: violations.is_empty(),
                detail: format!(
                    "{} replacement results checked, {} violations{}",
                    checked,
                    violations.len(),
                    if violations.is_empty() {
                        String::new()
                    } else {
                        format!(": {}", violations.join(" | "))
                    }
                ),
            })
        }
    };

    Ok(ArgumentReport {
        substitute_valid,
        reducible,
        h_satisfies,
        closure,
    })
}

/// Apply the rule and additionally enumerate the variants dropping each
/// subset of boundary edges that the match could attribute to H alone.
fn replacement_results(
    host: &EGraph,
    rule: &ReplacementRule,
    embedding: &[usize],
) -> Vec<EGraph> {
    let base = match apply_replacement(host, rule, embedding) {
        Ok(g) => g,
        Err(_) => return Vec::new(),
    };
    let ambiguous = rule.ambiguous_boundary_edges();
    let mut out = vec![base.clone()];
    let k = ambiguous.len();
    for subset in 1..(1u32 << k) {
        let mut edges = base.edges();
        for (bit, (a, b)) in ambiguous.iter().enumerate() {
            if subset >> bit & 1 == 1 {
                let ia = base.index_of(a).unwrap();
                let ib = base.index_of(b).unwrap();
                edges.retain(|&(u, v)| (u, v) != (ia.min(ib), ia.max(ib)));
            }
        }
        let ext: Vec<u8> = (0..base.n()).map(|v| base.ext(v)).collect();
        if let Ok(g) = EGraph::new(base.names().to_vec(), &edges, ext) {
            out.push(g);
        }
    }
    out
}

/// Parse the configuration file format: sections `[g1]`, `[boundary]`,
/// `[constraints]`, and optionally `[h]` and `[ext]`; e-graphs use the text
/// grammar, constraints are `cap {u} {v} <= p/q` or `cup {a b c} <= p/q`
/// lines. The `[ext]` section holds `vertex value` overrides for external
/// degrees the text grammar cannot express (boundary stubs of external
/// degree three), applied to both `g1` and `h`.
pub fn parse_config(text: &str) -> Result<(Configuration, Option<EGraph>), ConfigError> {
    let mut sections: Vec<(String, Vec<String>)> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if t.starts_with('#') {
            continue;
        }
        if t.starts_with('[') && t.ends_with(']') {
            sections.push((t[1..t.len() - 1].to_string(), Vec::new()));
        } else if let Some((_, body)) = sections.last_mut() {
            body.push(line.to_string());
        } else if !t.is_empty() {
            return Err(ConfigError::Parse(format!("content before a section: `{}`", t)));
        }
    }
    let get = |name: &str| -> Option<String> {
        sections
            .iter()
            .find(|(s, _)| s == name)
            .map(|(_, body)| body.join("\n"))
    };
    let mut ext_overrides: Vec<(String, u8)> = Vec::new();
    if let Some(body) = get("ext") {
        for line in body.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut it = t.split_whitespace();
            let (name, value) = (it.next(), it.next());
            match (name, value.and_then(|v| v.parse::<u8>().ok())) {
                (Some(n), Some(v)) if v <= 3 => ext_overrides.push((n.to_string(), v)),
                _ => return Err(ConfigError::Parse(format!("bad ext line `{}`", t))),
            }
        }
    }
    let apply_ext = |mut g: EGraph| -> Result<EGraph, ConfigError> {
        for (name, value) in &ext_overrides {
            if let Some(v) = g.index_of(name) {
                if (*value as usize) < g.deg(v) {
                    return Err(ConfigError::Parse(format!(
                        "ext override below degree for `{}`",
                        name
                    )));
                }
                g = g.with_ext(v, *value);
            }
        }
        Ok(g)
    };
    let g1_text = get("g1").ok_or_else(|| ConfigError::Parse("missing [g1]".into()))?;
    let g1 = apply_ext(one_graph(&g1_text)?)?;
    let boundary_text =
        get("boundary").ok_or_else(|| ConfigError::Parse("missing [boundary]".into()))?;
    let boundary: Vec<String> = boundary_text
        .split_whitespace()
        .map(|s| s.to_string())
        .collect();
    if boundary.is_empty() {
        return Err(ConfigError::Parse("empty boundary".into()));
    }
    let mut constraints = Vec::new();
    if let Some(body) = get("constraints") {
        for line in body.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            constraints.push(parse_constraint(t)?);
        }
    }
    let h = match get("h") {
        Some(body) if !body.trim().is_empty() => Some(apply_ext(one_graph(&body)?)?),
        _ => None,
    };
    Ok((
        Configuration {
            g1,
            boundary,
            constraints,
        },
        h,
    ))
}

fn one_graph(text: &str) -> Result<EGraph, ConfigError> {
    let gs = parse_egraphs(text)?;
    if gs.len() != 1 {
        return Err(ConfigError::Parse(format!(
            "expected one e-graph record, found {}",
            gs.len()
        )));
    }
    Ok(gs.into_iter().next().unwrap())
}

fn parse_constraint(line: &str) -> Result<BoundaryConstraint, ConfigError> {
    let err = |msg: &str| ConfigError::Parse(format!("constraint `{}`: {}", line, msg));
    let (head, bound_text) = line
        .split_once("<=")
        .ok_or_else(|| err("missing `<=`"))?;
    let bound: Rat = bound_text
        .trim()
        .parse()
        .map_err(|_| err("bad bound"))?;
    let head = head.trim();
    let groups: Vec<Vec<String>> = {
        let mut gs = Vec::new();
        let mut rest = head;
        while let Some(open) = rest.find('{') {
            let close = rest[open..]
                .find('}')
                .ok_or_else(|| err("unbalanced braces"))?
                + open;
            gs.push(
                rest[open + 1..close]
                    .split_whitespace()
                    .flat_map(|tok| tok.chars())
                    .map(|c| c.to_string())
                    .collect(),
            );
            rest = &rest[close + 1..];
        }
        gs
    };
    if head.starts_with("cup") {
        if groups.len() != 1 || groups[0].is_empty() {
            return Err(err("cup takes one nonempty group"));
        }
        Ok(BoundaryConstraint::CupLe {
            a: groups.into_iter().next().unwrap(),
            bound,
        })
    } else if head.starts_with("cap") {
        if groups.len() != 2 || groups.iter().any(|g| g.is_empty()) {
            return Err(err("cap takes two nonempty groups"));
        }
        let mut it = groups.into_iter();
        Ok(BoundaryConstraint::CapLe {
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            bound,
        })
    } else {
        Err(err("expected `cap` or `cup`"))
    }
}
