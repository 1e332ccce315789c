//! Boundary embeddings and sub-e-graph replacement.
//!
//! An embedding maps a pattern with a designated boundary into a host:
//! injective, edge-preserving everywhere, induced away from the boundary,
//! external degrees matched exactly, and no host edge may leave the image of
//! the pattern interior. Replacement swaps the matched interior for the
//! interior of a replacement e-graph sharing the boundary.

use crate::egraph::{EGraph, EGraphError, NAME_ALPHABET};
use thiserror::Error;

/// Replacing a sub-e-graph matching `pattern` by `replacement`; the two
/// share exactly the `boundary` vertices (by name).
#[derive(Clone, Debug)]
pub struct ReplacementRule {
    pub pattern: EGraph,
    pub replacement: EGraph,
    pub boundary: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("boundary vertex `{0}` missing from pattern or replacement")]
    MissingBoundary(String),
    #[error("replacement has boundary edge `{0}`-`{1}` not present in pattern")]
    ExtraBoundaryEdge(String, String),
    #[error("external degrees disagree on boundary vertex `{0}`")]
    ExtMismatch(String),
    #[error("shared non-boundary vertex `{0}`")]
    SharedInterior(String),
}

impl ReplacementRule {
    /// Checks `R[B]` is a sub-e-graph of `F[B]` and the boundary is exactly
    /// the shared vertex set.
    pub fn new(
        pattern: EGraph,
        replacement: EGraph,
        boundary: Vec<String>,
    ) -> Result<ReplacementRule, RuleError> {
        let rule = ReplacementRule::new_loose(pattern, replacement, boundary)?;
        for (i, a) in rule.boundary.iter().enumerate() {
            let pa = rule.pattern.index_of(a).unwrap();
            let ra = rule.replacement.index_of(a).unwrap();
            for b in &rule.boundary[i + 1..] {
                let pb = rule.pattern.index_of(b).unwrap();
                let rb = rule.replacement.index_of(b).unwrap();
                if rule.replacement.adjacent(ra, rb) && !rule.pattern.adjacent(pa, pb) {
                    return Err(RuleError::ExtraBoundaryEdge(a.clone(), b.clone()));
                }
            }
        }
        Ok(rule)
    }

    /// Like [`ReplacementRule::new`] but allows the replacement to add
    /// boundary edges (the transformation direction, where the reduced
    /// configuration gains edges between its boundary vertices).
    pub fn new_loose(
        pattern: EGraph,
        replacement: EGraph,
        boundary: Vec<String>,
    ) -> Result<ReplacementRule, RuleError> {
        for b in &boundary {
            if pattern.index_of(b).is_none() || replacement.index_of(b).is_none() {
                return Err(RuleError::MissingBoundary(b.clone()));
            }
        }
        for name in replacement.names() {
            if pattern.index_of(name).is_some() && !boundary.contains(name) {
                return Err(RuleError::SharedInterior(name.clone()));
            }
        }
        for a in &boundary {
            let pa = pattern.index_of(a).unwrap();
            let ra = replacement.index_of(a).unwrap();
            if pattern.ext(pa) != replacement.ext(ra) {
                return Err(RuleError::ExtMismatch(a.clone()));
            }
        }
        Ok(ReplacementRule {
            pattern,
            replacement,
            boundary,
        })
    }

    /// The same rule applied in the opposite direction.
    pub fn reversed(&self) -> Result<ReplacementRule, RuleError> {
        ReplacementRule::new_loose(
            self.replacement.clone(),
            self.pattern.clone(),
            self.boundary.clone(),
        )
    }

    /// Boundary edges of the pattern that the replacement lacks: when the
    /// rule is applied, the host may legitimately keep or drop each of them
    /// (both attributions are consistent with the match).
    pub fn ambiguous_boundary_edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (i, a) in self.boundary.iter().enumerate() {
            let pa = self.pattern.index_of(a).unwrap();
            let ra = self.replacement.index_of(a).unwrap();
            for b in &self.boundary[i + 1..] {
                let pb = self.pattern.index_of(b).unwrap();
                let rb = self.replacement.index_of(b).unwrap();
                if self.pattern.adjacent(pa, pb) && !self.replacement.adjacent(ra, rb) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

/// All embeddings of `(pattern, boundary)` into `host`, in lexicographic
/// order of the image tuple. `boundary` holds pattern vertex indices.
///
/// Conditions: injective; every pattern edge maps to a host edge; pairs with
/// an interior endpoint are matched induced; external degrees agree on all
/// pattern vertices; interior images have no host edges leaving the pattern
/// image (checked as a degree equation).
pub fn find_boundary_embeddings(
    host: &EGraph,
    pattern: &EGraph,
    boundary: &[usize],
) -> Vec<Vec<usize>> {
    let np = pattern.n();
    let nh = host.n();
    if np > nh {
        return Vec::new();
    }
    let is_boundary: Vec<bool> = (0..np).map(|v| boundary.contains(&v)).collect();
    let mut image = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    let mut out = Vec::new();
    fn rec(
        host: &EGraph,
        pattern: &EGraph,
        is_boundary: &[bool],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let np = pattern.n();
        if v == np {
            out.push(image.clone());
            return;
        }
        'cand: for h in 0..host.n() {
            if used[h] || host.ext(h) != pattern.ext(v) {
                continue;
            }
            // Interior vertices must match degree exactly (no host edge may
            // leave the interior image).
            if !is_boundary[v] && host.deg(h) != pattern.deg(v) {
                continue;
            }
            for u in 0..v {
                let pe = pattern.adjacent(u, v);
                let he = host.adjacent(image[u], h);
                if pe && !he {
                    continue 'cand;
                }
                if !pe && he && !(is_boundary[u] && is_boundary[v]) {
                    continue 'cand;
                }
            }
            image[v] = h;
            used[h] = true;
            rec(host, pattern, is_boundary, image, used, v + 1, out);
            used[h] = false;
            image[v] = usize::MAX;
        }
    }
    rec(host, pattern, &is_boundary, &mut image, &mut used, 0, &mut out);
    out
}

#[derive(Debug, Error)]
pub enum ReplaceError {
    #[error("boundary vertex `{0}` would exceed its external degree")]
    DegreeOverflow(String),
    #[error("no fresh vertex names available")]
    NamesExhausted,
    #[error(transparent)]
    Graph(#[from] EGraphError),
}

/// Delete the embedded pattern interior from `host` and wire in the
/// replacement interior. Boundary external degrees are untouched.
pub fn apply_replacement(
    host: &EGraph,
    rule: &ReplacementRule,
    embedding: &[usize],
) -> Result<EGraph, ReplaceError> {
    let pat = &rule.pattern;
    let rep = &rule.replacement;
    let interior: Vec<usize> = (0..pat.n())
        .filter(|v| !rule.boundary.contains(&pat.name(*v).to_string()))
        .map(|v| embedding[v])
        .collect();
    let keep: Vec<usize> = (0..host.n()).filter(|v| !interior.contains(v)).collect();

    let mut names: Vec<String> = keep.iter().map(|&v| host.name(v).to_string()).collect();
    let mut ext: Vec<u8> = keep.iter().map(|&v| host.ext(v)).collect();
    let mut pos_of_host = vec![usize::MAX; host.n()];
    for (i, &v) in keep.iter().enumerate() {
        pos_of_host[v] = i;
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in host.edges() {
        if pos_of_host[u] != usize::MAX && pos_of_host[v] != usize::MAX {
            edges.push((pos_of_host[u], pos_of_host[v]));
        }
    }

    // Fresh vertices for the replacement interior; reuse the replacement's
    // own names when free.
    let mut rep_pos = vec![usize::MAX; rep.n()];
    for v in 0..rep.n() {
        let name = rep.name(v);
        if rule.boundary.contains(&name.to_string()) {
            let p = rule.pattern.index_of(name).unwrap();
            rep_pos[v] = pos_of_host[embedding[p]];
            continue;
        }
        let fresh = if !names.contains(&name.to_string()) {
            name.to_string()
        } else {
            NAME_ALPHABET
                .chars()
                .map(|c| c.to_string())
                .find(|c| !names.contains(c))
                .ok_or(ReplaceError::NamesExhausted)?
        };
        names.push(fresh);
        ext.push(rep.ext(v));
        rep_pos[v] = names.len() - 1;
    }
    for (u, v) in rep.edges() {
        let e = (rep_pos[u].min(rep_pos[v]), rep_pos[u].max(rep_pos[v]));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    let result = EGraph::new(names, &edges, ext).map_err(|e| match e {
        EGraphError::ExtBelowDegree { vertex, .. } => ReplaceError::DegreeOverflow(vertex),
        other => ReplaceError::Graph(other),
    })?;
    Ok(result)
}
