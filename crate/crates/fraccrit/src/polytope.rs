//! Vertex enumeration of bounded rational polyhedra.
//!
//! Equalities are projected out onto an affine coordinate patch by Gaussian
//! elimination; the remaining inequality system is converted by the double
//! description method (incremental constraint insertion on the homogenized
//! cone) and the resulting extreme rays are mapped back. Insertion follows
//! input constraint order, vertices are deduplicated exactly and returned in
//! lexicographic order, so runs are reproducible. Unbounded inputs are
//! rejected with a witness ray.

use crate::linsys::{dot, LinearSystem};
use crate::rat::Rat;
use thiserror::Error;

#[derive(Clone, Debug)]
pub struct Polytope {
    pub system: LinearSystem,
}

#[derive(Debug, Error)]
pub enum VertexEnumError {
    #[error("polyhedron is unbounded; witness ray {0:?}")]
    Unbounded(Vec<Rat>),
    #[error("too many inequality constraints for the tight-set encoding")]
    TooManyConstraints,
}

/// All extreme points, exact and lexicographically sorted; empty iff the
/// feasible set is empty.
pub fn enumerate_vertices(p: &Polytope) -> Result<Vec<Vec<Rat>>, VertexEnumError> {
    let sys = &p.system;
    let n = sys.num_vars();

    // Affine patch x = base + null * t from the equalities.
    let patch = match solve_equalities(sys) {
        Some(patch) => patch,
        None => return Ok(Vec::new()),
    };
    let k = patch.null.len();

    // Patch-coordinate inequalities (h, c): h.t <= c, user rows first, then
    // nonnegativity rows in variable order.
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (coeffs, rhs) in &sys.inequalities {
        let h: Vec<Rat> = patch.null.iter().map(|nc| dot(coeffs, nc)).collect();
        let c = rhs - &dot(coeffs, &patch.base);
        rows.push((h, c));
    }
    for v in 0..n {
        if sys.nonneg[v] {
            let h: Vec<Rat> = patch.null.iter().map(|nc| -&nc[v]).collect();
            rows.push((h, patch.base[v].clone()));
        }
    }
    if rows.len() + 1 > 127 {
        return Err(VertexEnumError::TooManyConstraints);
    }

    // Homogenized cone over (t, s): lines e_1..e_k, one ray in s-direction;
    // constraint 0 is s >= 0, then (h, -c).(t, s) <= 0 in row order.
    let mut dd = DoubleDescription::new(k);
    let mut s_row = vec![Rat::zero(); k + 1];
    s_row[k] = -Rat::one();
    dd.insert(&s_row);
    for (h, c) in &rows {
        let mut a = h.clone();
        a.push(-c);
        dd.insert(&a);
    }

    if let Some(line) = dd.lines.first() {
        return Err(VertexEnumError::Unbounded(patch.direction(line)));
    }
    let mut vertices = Vec::new();
    for ray in &dd.rays {
        let s = &ray.gen[k];
        if s.is_zero() {
            return Err(VertexEnumError::Unbounded(patch.direction(&ray.gen)));
        }
        let t: Vec<Rat> = ray.gen[..k].iter().map(|g| g / s).collect();
        vertices.push(patch.point(&t));
    }
    for v in &vertices {
        debug_assert!(sys.check_point(v), "enumerated vertex must be feasible");
    }
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

struct Patch {
    base: Vec<Rat>,
    /// Nullspace basis vectors (one per free column).
    null: Vec<Vec<Rat>>,
}

impl Patch {
    fn point(&self, t: &[Rat]) -> Vec<Rat> {
        let mut x = self.base.clone();
        for (tc, nc) in t.iter().zip(&self.null) {
            if tc.is_zero() {
                continue;
            }
            for (xi, ni) in x.iter_mut().zip(nc) {
                if !ni.is_zero() {
                    *xi += &(tc * ni);
                }
            }
        }
        x
    }

    /// Map a homogeneous direction (t, s) with s = 0 back to x-space.
    fn direction(&self, g: &[Rat]) -> Vec<Rat> {
        let k = self.null.len();
        let mut x = vec![Rat::zero(); self.base.len()];
        for (tc, nc) in g[..k].iter().zip(&self.null) {
            if tc.is_zero() {
                continue;
            }
            for (xi, ni) in x.iter_mut().zip(nc) {
                if !ni.is_zero() {
                    *xi += &(tc * ni);
                }
            }
        }
        x
    }
}

/// Gauss-Jordan on the equalities; `None` if inconsistent.
fn solve_equalities(sys: &LinearSystem) -> Option<Patch> {
    let n = sys.num_vars();
    let mut mat: Vec<Vec<Rat>> = sys
        .equalities
        .iter()
        .map(|(c, r)| {
            let mut row = c.clone();
            row.push(r.clone());
            row
        })
        .collect();
    let m = mat.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let piv = (row..m).find(|&r| !mat[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        mat.swap(row, piv);
        let f = mat[row][col].recip();
        for j in col..=n {
            mat[row][j] *= &f;
        }
        for r in 0..m {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for j in col..=n {
                    let d = &f * &mat[row][j];
                    mat[r][j] -= &d;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    for r in row..m {
        if !mat[r][n].is_zero() {
            return None;
        }
    }
    let pivot_cols: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut base = vec![Rat::zero(); n];
    for (r, &pc) in pivot_col_of_row.iter().enumerate() {
        base[pc] = mat[r][n].clone();
    }
    let mut null = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut dir = vec![Rat::zero(); n];
        dir[free] = Rat::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            dir[pc] = -&mat[r][free];
        }
        null.push(dir);
    }
    Some(Patch { base, null })
}

struct Ray {
    gen: Vec<Rat>,
    /// Bit i set iff constraint i holds with equality.
    tight: u128,
}

struct DoubleDescription {
    dim: usize,
    lines: Vec<Vec<Rat>>,
    rays: Vec<Ray>,
    inserted: u32,
}

impl DoubleDescription {
    fn new(k: usize) -> DoubleDescription {
        let dim = k + 1;
        let mut lines = Vec::new();
        for i in 0..k {
            let mut l = vec![Rat::zero(); dim];
            l[i] = Rat::one();
            lines.push(l);
        }
        let mut s = vec![Rat::zero(); dim];
        s[k] = Rat::one();
        DoubleDescription {
            dim,
            lines,
            rays: vec![Ray { gen: s, tight: 0 }],
            inserted: 0,
        }
    }

    /// Insert the halfspace `a.g <= 0`.
    fn insert(&mut self, a: &[Rat]) {
        let bit = 1u128 << self.inserted;
        self.inserted += 1;

        // Eliminate the lineality component along `a` if present.
        if let Some(pos) = self.lines.iter().position(|l| !dot(a, l).is_zero()) {
            let l0 = self.lines.swap_remove(pos);
            let al0 = dot(a, &l0);
            for l in &mut self.lines {
                let f = &dot(a, l) / &al0;
                if !f.is_zero() {
                    for (li, l0i) in l.iter_mut().zip(&l0) {
                        *li -= &(&f * l0i);
                    }
                }
            }
            for r in &mut self.rays {
                let f = &dot(a, &r.gen) / &al0;
                if !f.is_zero() {
                    for (ri, l0i) in r.gen.iter_mut().zip(&l0) {
                        *ri -= &(&f * l0i);
                    }
                    normalize(&mut r.gen);
                }
            }
            // The eliminated line re-enters as the ray pointing into the
            // halfspace; it is tight for every earlier constraint.
            let into: Vec<Rat> = if al0.is_positive() {
                l0.iter().map(|x| -x).collect()
            } else {
                l0
            };
            let mut gen = into;
            normalize(&mut gen);
            self.rays.push(Ray {
                gen,
                tight: bit - 1,
            });
        }

        let vals: Vec<Rat> = self.rays.iter().map(|r| dot(a, &r.gen)).collect();
        let mut keep: Vec<Ray> = Vec::new();
        let mut plus: Vec<(usize, &Ray)> = Vec::new();
        let mut minus: Vec<(usize, &Ray)> = Vec::new();
        for (i, r) in self.rays.iter().enumerate() {
            if vals[i].is_zero() {
                // carried over below
            } else if vals[i].is_positive() {
                plus.push((i, r));
            } else {
                minus.push((i, r));
            }
        }
        let mut fresh: Vec<Ray> = Vec::new();
        for &(ip, rp) in &plus {
            for &(im, rm) in &minus {
                let common = rp.tight & rm.tight;
                // Combinatorial adjacency: no third ray is tight on a
                // superset of the common tight set.
                let adjacent = self
                    .rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == ip || i == im || r.tight & common != common);
                if !adjacent {
                    continue;
                }
                // Positive combination landing on the hyperplane.
                let mut gen: Vec<Rat> = (0..self.dim)
                    .map(|d| &(&vals[ip] * &rm.gen[d]) - &(&vals[im] * &rp.gen[d]))
                    .collect();
                if gen.iter().all(|x| x.is_zero()) {
                    continue;
                }
                normalize(&mut gen);
                fresh.push(Ray {
                    gen,
                    tight: common | bit,
                });
            }
        }
        for (i, r) in self.rays.drain(..).enumerate() {
            if vals[i].is_zero() {
                keep.push(Ray {
                    gen: r.gen,
                    tight: r.tight | bit,
                });
            } else if vals[i].is_negative() {
                keep.push(r);
            }
        }
        keep.extend(fresh);
        // Exact dedup on normalized generators.
        keep.sort_by(|x, y| x.gen.cmp(&y.gen));
        keep.dedup_by(|x, y| {
            if x.gen == y.gen {
                y.tight |= x.tight;
                true
            } else {
                false
            }
        });
        self.rays = keep;
    }
}

/// Scale a ray by a positive factor to its primitive form (never flips
/// sign: a ray and its negation are different directions).
fn normalize(g: &mut [Rat]) {
    let mut scale: Option<Rat> = None;
    for x in g.iter() {
        if x.is_zero() {
            continue;
        }
        let ax = x.abs();
        scale = Some(match scale {
            None => ax,
            Some(s) => rat_gcd(&s, &ax),
        });
    }
    if let Some(s) = scale {
        for x in g.iter_mut() {
            *x = &*x / &s;
        }
    }
}

/// gcd on rationals: gcd(a/b, c/d) = gcd(ad, cb) / bd.
fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    let (mut x, mut y) = (a.abs(), b.abs());
    while !y.is_zero() {
        let q = (&x / &y).floor();
        let r = &x - &(&q * &y);
        x = y;
        y = r;
    }
    x
}
