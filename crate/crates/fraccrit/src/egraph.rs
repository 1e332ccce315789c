//! Graphs with external degrees: the central modelling object.
//!
//! An e-graph is a simple graph together with a function `ext` assigning each
//! vertex an external degree `ext(v) >= deg(v)`. A vertex with
//! `ext(v) > deg(v)` is *nailed*. Vertices are identified by opaque string
//! names; internally they get dense indices in insertion order and adjacency
//! is kept as bit masks.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

/// Characters usable as single-character vertex names in the text format.
/// `1` is excluded: it marks nailed vertices in the trailing nail clause.
pub const NAME_ALPHABET: &str =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ023456789_";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EGraphError {
    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: self-loop at vertex `{vertex}`")]
    SelfLoop { line: usize, vertex: String },
    #[error("line {line}: nail clause names unknown vertex `{vertex}`")]
    UnknownNail { line: usize, vertex: String },
    #[error("line {line}: vertex `{vertex}` nailed twice")]
    RepeatedNail { line: usize, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("ext_degree {ext} below degree {deg} at vertex `{vertex}`")]
    ExtBelowDegree { vertex: String, ext: u8, deg: u8 },
    #[error("too many vertices (max {MAX_VERTICES})")]
    TooManyVertices,
    #[error("e-graph not representable in the text format: {0}")]
    Unserializable(String),
}

/// A simple graph with external degrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EGraph {
    names: Vec<String>,
    adj: Vec<u64>,
    ext: Vec<u8>,
}

impl EGraph {
    /// Build from explicit data. `ext` entries below the resulting degree are
    /// rejected.
    pub fn new(
        names: Vec<String>,
        edges: &[(usize, usize)],
        ext: Vec<u8>,
    ) -> Result<EGraph, EGraphError> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(EGraphError::TooManyVertices);
        }
        assert_eq!(ext.len(), n);
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(EGraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            assert!(u < n && v < n);
            if u == v {
                return Err(EGraphError::SelfLoop {
                    line: 0,
                    vertex: names[u].clone(),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = EGraph { names, adj, ext };
        for v in 0..n {
            if g.ext[v] < g.deg(v) as u8 {
                return Err(EGraphError::ExtBelowDegree {
                    vertex: g.names[v].clone(),
                    ext: g.ext[v],
                    deg: g.deg(v) as u8,
                });
            }
        }
        Ok(g)
    }

    /// Convenience builder used widely in tests: vertices named by the edge
    /// list in order of first appearance, `ext = deg` except listed nails get
    /// `deg + 1`.
    pub fn from_edges(edges: &[(&str, &str)], nails: &[&str]) -> EGraph {
        let mut names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut list = Vec::new();
        for &(a, b) in edges {
            for s in [a, b] {
                if !index.contains_key(s) {
                    index.insert(s.to_string(), names.len());
                    names.push(s.to_string());
                }
            }
            list.push((index[a], index[b]));
        }
        let n = names.len();
        let mut adj = vec![0u64; n];
        for &(u, v) in &list {
            assert_ne!(u, v);
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut ext: Vec<u8> = (0..n).map(|v| adj[v].count_ones() as u8).collect();
        for s in nails {
            let v = index[&s.to_string()];
            ext[v] += 1;
        }
        EGraph { names, adj, ext }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn ext(&self, v: usize) -> u8 {
        self.ext[v]
    }

    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.adj[v];
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(u)
            }
        })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_nailed(&self, v: usize) -> bool {
        self.ext[v] as usize > self.deg(v)
    }

    pub fn nail_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.is_nailed(v)).count()
    }

    pub fn is_subcubic(&self) -> bool {
        self.ext.iter().all(|&d| d <= 3)
    }

    pub fn is_cubic(&self) -> bool {
        self.ext.iter().all(|&d| d == 3)
    }

    pub fn is_three_regular(&self) -> bool {
        (0..self.n()).all(|v| self.deg(v) == 3)
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, v) in self.edges() {
            if self.adj[u] & self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Subcubic, triangle-free, and `ext >= 2` everywhere.
    pub fn is_valid(&self) -> bool {
        self.is_subcubic() && self.is_triangle_free() && self.ext.iter().all(|&d| d >= 2)
    }

    /// Induced sub-e-graph on the given vertex set; external degrees keep
    /// their values.
    pub fn induced(&self, keep: &[usize]) -> EGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let ext = keep.iter().map(|&v| self.ext[v]).collect();
        let mut adj = vec![0u64; keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for u in self.neighbors(v) {
                if pos[u] != usize::MAX {
                    adj[i] |= 1 << pos[u];
                }
            }
        }
        EGraph { names, adj, ext }
    }

    pub fn induced_by_names(&self, keep: &[&str]) -> Result<EGraph, EGraphError> {
        let idx: Result<Vec<usize>, _> = keep
            .iter()
            .map(|s| {
                self.index_of(s)
                    .ok_or_else(|| EGraphError::UnknownVertex(s.to_string()))
            })
            .collect();
        Ok(self.induced(&idx?))
    }

    pub fn delete_vertex(&self, v: usize) -> EGraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Same underlying graph with every external degree set to `d`.
    pub fn with_uniform_ext(&self, d: u8) -> EGraph {
        let mut g = self.clone();
        for v in 0..g.n() {
            assert!(d as usize >= g.deg(v));
            g.ext[v] = d;
        }
        g
    }

    /// Copy with one external degree changed.
    pub fn with_ext(&self, v: usize, d: u8) -> EGraph {
        assert!(d as usize >= self.deg(v));
        let mut g = self.clone();
        g.ext[v] = d;
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n()
    }

    /// No cut vertex (and connected). Singletons and edges count as
    /// 2-connected here, matching the use in enumeration.
    pub fn is_two_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        if self.n() <= 2 {
            return true;
        }
        for v in 0..self.n() {
            if !self.delete_vertex(v).is_connected() {
                return false;
            }
        }
        true
    }

    /// Two-colorability of the underlying graph.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        for root in 0..n {
            // BFS from root; a non-tree edge at depths (d1, d2) closes a
            // cycle of length d1 + d2 + 1 through the root.
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            None
        } else {
            Some(best)
        }
    }

    pub fn degree_two_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.deg(v) == 2).collect()
    }

    /// Relabel vertices: position `i` of `order` becomes vertex `i`.
    pub fn reordered(&self, order: &[usize]) -> EGraph {
        self.induced(order)
    }

    /// Renamed copy using fresh single-character names in vertex order.
    pub fn with_standard_names(&self) -> EGraph {
        let mut g = self.clone();
        let alphabet: Vec<char> = NAME_ALPHABET.chars().collect();
        assert!(g.n() <= alphabet.len());
        g.names = (0..g.n()).map(|i| alphabet[i].to_string()).collect();
        g
    }

    pub fn rename(&self, names: Vec<String>) -> EGraph {
        assert_eq!(names.len(), self.n());
        let mut g = self.clone();
        g.names = names;
        g
    }
}

impl fmt::Debug for EGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EGraph(n={}; ", self.n())?;
        for (u, v) in self.edges() {
            write!(f, "{}{} ", self.names[u], self.names[v])?;
        }
        let nails: Vec<&str> = (0..self.n())
            .filter(|&v| self.is_nailed(v))
            .map(|v| self.names[v].as_str())
            .collect();
        write!(f, "nails={:?})", nails)
    }
}

/// Parse the e-graph text format.
///
/// A file is a sequence of records separated by blank lines. A record is a
/// sequence of statements `a:xyz;` (adding edges ax, ay, az) followed by an
/// optional nail clause `x1y1` raising the external degree of each listed
/// vertex one above its degree. Vertex names are single characters from
/// `[A-Za-z0-9_]` except `1`; whitespace between tokens is ignored.
pub fn parse_egraphs(text: &str) -> Result<Vec<EGraph>, EGraphError> {
    let mut records: Vec<(usize, String)> = Vec::new();
    let mut current = String::new();
    let mut current_line = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                records.push((current_line, std::mem::take(&mut current)));
            }
        } else {
            if current.is_empty() {
                current_line = lineno + 1;
            }
            current.push_str(line);
            current.push(' ');
        }
    }
    if !current.is_empty() {
        records.push((current_line, current));
    }
    records
        .into_iter()
        .map(|(line, r)| parse_record(&r, line))
        .collect()
}

fn is_ident_char(c: char) -> bool {
    (c.is_ascii_alphanumeric() || c == '_') && c != '1'
}

fn parse_record(text: &str, line: usize) -> Result<EGraph, EGraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<char, usize> = BTreeMap::new();
    let mut adj: Vec<u64> = Vec::new();
    fn intern(
        c: char,
        index: &mut BTreeMap<char, usize>,
        names: &mut Vec<String>,
        adj: &mut Vec<u64>,
    ) -> usize {
        *index.entry(c).or_insert_with(|| {
            names.push(c.to_string());
            adj.push(0);
            names.len() - 1
        })
    }

    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut nails: Vec<usize> = Vec::new();
    let mut in_nails = false;
    while pos < chars.len() {
        let c = chars[pos];
        if !is_ident_char(c) {
            return Err(EGraphError::MalformedToken {
                line,
                token: c.to_string(),
            });
        }
        let next = chars.get(pos + 1).copied();
        match next {
            Some(':') if !in_nails => {
                let head = intern(c, &mut index, &mut names, &mut adj);
                pos += 2;
                let mut any = false;
                while pos < chars.len() && chars[pos] != ';' {
                    let nc = chars[pos];
                    if !is_ident_char(nc) {
                        return Err(EGraphError::MalformedToken {
                            line,
                            token: nc.to_string(),
                        });
                    }
                    let nb = intern(nc, &mut index, &mut names, &mut adj);
                    if nb == head {
                        return Err(EGraphError::SelfLoop {
                            line,
                            vertex: names[head].clone(),
                        });
                    }
                    adj[head] |= 1 << nb;
                    adj[nb] |= 1 << head;
                    any = true;
                    pos += 1;
                }
                if pos == chars.len() || !any {
                    return Err(EGraphError::MalformedToken {
                        line,
                        token: ";".to_string(),
                    });
                }
                pos += 1; // consume ';'
            }
            Some('1') => {
                in_nails = true;
                let v = match index.get(&c) {
                    Some(&v) => v,
                    None => {
                        return Err(EGraphError::UnknownNail {
                            line,
                            vertex: c.to_string(),
                        })
                    }
                };
                if nails.contains(&v) {
                    return Err(EGraphError::RepeatedNail {
                        line,
                        vertex: c.to_string(),
                    });
                }
                nails.push(v);
                pos += 2;
            }
            _ => {
                return Err(EGraphError::MalformedToken {
                    line,
                    token: chars[pos..].iter().take(4).collect(),
                });
            }
        }
        if names.len() > MAX_VERTICES {
            return Err(EGraphError::TooManyVertices);
        }
    }

    let mut ext: Vec<u8> = adj.iter().map(|m| m.count_ones() as u8).collect();
    for &v in &nails {
        ext[v] += 1;
    }
    Ok(EGraph { names, adj, ext })
}

/// Emit the text format, one record, statements in vertex order.
///
/// Only e-graphs whose nailing is expressible (`ext <= deg + 1`, no isolated
/// vertices) and with at most 62 vertices can be written.
pub fn serialize_egraph(g: &EGraph) -> Result<String, EGraphError> {
    let alphabet: Vec<char> = NAME_ALPHABET.chars().collect();
    if g.n() > alphabet.len() {
        return Err(EGraphError::Unserializable("too many vertices".into()));
    }
    let mut out = String::new();
    for v in 0..g.n() {
        if g.deg(v) == 0 {
            return Err(EGraphError::Unserializable(format!(
                "isolated vertex `{}`",
                g.name(v)
            )));
        }
        if g.ext(v) as usize > g.deg(v) + 1 {
            return Err(EGraphError::Unserializable(format!(
                "ext_degree {} > degree + 1 at `{}`",
                g.ext(v),
                g.name(v)
            )));
        }
        let later: Vec<usize> = g.neighbors(v).filter(|&u| u > v).collect();
        if later.is_empty() {
            continue;
        }
        out.push(alphabet[v]);
        out.push(':');
        for u in later {
            out.push(alphabet[u]);
        }
        out.push(';');
    }
    let mut any_nail = false;
    for v in 0..g.n() {
        if g.is_nailed(v) {
            if !any_nail {
                out.push(' ');
                any_nail = true;
            }
            out.push(alphabet[v]);
            out.push('1');
        }
    }
    Ok(out)
}

/// Serialize a whole catalog-style file, one record per graph, blank lines
/// between records.
pub fn serialize_egraphs(gs: &[EGraph]) -> Result<String, EGraphError> {
    let mut parts = Vec::new();
    for g in gs {
        parts.push(serialize_egraph(g)?);
    }
    Ok(parts.join("\n\n") + "\n")
}
