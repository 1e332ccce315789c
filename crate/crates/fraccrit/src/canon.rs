//! Canonical labelling of e-graphs.
//!
//! Individualization-refinement: vertices are initially coloured by
//! `(deg, ext)`, the partition is refined into an equitable one, and
//! non-singleton cells are split by individualizing each of their vertices in
//! turn. Every discrete leaf yields an adjacency encoding; the canonical form
//! is the lexicographically smallest one. Equal forms exactly characterise
//! isomorphism preserving external degrees. All instances here stay below
//! ~30 vertices, so no automorphism pruning is needed.

use crate::egraph::EGraph;

/// Canonical byte label: equal iff the e-graphs are isomorphic as e-graphs.
pub fn canonical_form(g: &EGraph) -> Vec<u8> {
    canonical_order(g).1
}

/// Copy of `g` relabelled into canonical vertex order (names regenerated).
pub fn canonicalized(g: &EGraph) -> EGraph {
    let order = canonical_order(g).0;
    g.reordered(&order).with_standard_names()
}

pub fn is_isomorphic(a: &EGraph, b: &EGraph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Returns (vertex order achieving the canonical form, the form itself).
pub fn canonical_order(g: &EGraph) -> (Vec<usize>, Vec<u8>) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), vec![0]);
    }
    // Initial cells grouped by (deg, ext), ascending.
    let mut by_color: std::collections::BTreeMap<(usize, u8), Vec<usize>> =
        std::collections::BTreeMap::new();
    for v in 0..n {
        by_color.entry((g.deg(v), g.ext(v))).or_default().push(v);
    }
    let initial: Vec<Vec<usize>> = by_color.into_values().collect();

    let mut search = Search {
        g,
        best: None,
        best_order: Vec::new(),
    };
    let refined = refine(g, initial);
    search.descend(refined);
    (search.best_order, search.best.unwrap())
}

struct Search<'a> {
    g: &'a EGraph,
    best: Option<Vec<u8>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let enc = encode(self.g, &order);
                if self.best.as_ref().map_or(true, |b| enc < *b) {
                    self.best = Some(enc);
                    self.best_order = order;
                }
            }
            Some(t) => {
                let targets = cells[t].clone();
                for &v in &targets {
                    let mut next = Vec::with_capacity(cells.len() + 1);
                    for (i, c) in cells.iter().enumerate() {
                        if i == t {
                            next.push(vec![v]);
                            next.push(c.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            next.push(c.clone());
                        }
                    }
                    self.descend(refine(self.g, next));
                }
            }
        }
    }
}

/// Equitable refinement: split cells by neighbour counts into every cell,
/// iterating to a fixed point. Sub-cell order is by ascending count vector,
/// which is isomorphism-invariant.
fn refine(g: &EGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key: Vec<u32> = masks
                        .iter()
                        .map(|&m| (g.adj_mask(v) & m).count_ones())
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 == w[1].0 {
                    group.push(w[1].1);
                } else {
                    next.push(std::mem::replace(&mut group, vec![w[1].1]));
                    changed = true;
                }
            }
            next.push(group);
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Rebuild an e-graph (with standard names) from a canonical byte label.
pub fn decode_form(form: &[u8]) -> EGraph {
    let n = form[0] as usize;
    let ext: Vec<u8> = form[1..1 + n].to_vec();
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            let byte = form[1 + n + bit_index / 8];
            if byte >> (7 - bit_index % 8) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    let names: Vec<String> = (0..n)
        .map(|i| {
            crate::egraph::NAME_ALPHABET
                .chars()
                .nth(i)
                .unwrap()
                .to_string()
        })
        .collect();
    EGraph::new(names, &edges, ext).expect("canonical forms decode to e-graphs")
}

fn encode(g: &EGraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = Vec::with_capacity(1 + n + n * n / 8 + 8);
    out.push(n as u8);
    for &v in order {
        out.push(g.ext(v));
    }
    let mut bits: u8 = 0;
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            bits <<= 1;
            if g.adjacent(order[i], order[j]) {
                bits |= 1;
            }
            count += 1;
            if count == 8 {
                out.push(bits);
                bits = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        out.push(bits << (8 - count));
    }
    out
}
