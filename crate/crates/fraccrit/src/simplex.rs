//! Exact revised simplex with Bland's anti-cycling rule.
//!
//! Feasibility runs phase 1 on a standard form with one artificial per row;
//! infeasibility yields Farkas multipliers that are re-verified against the
//! original system before being returned. Optimization runs phase 2 from the
//! phase-1 basis. Everything is exact: every returned point, certificate and
//! ray re-substitutes into the input system (asserted in the solver itself).

use crate::linsys::{dot, LinearSystem};
use crate::rat::Rat;

/// Multipliers proving `0 <= negative`: summing `eq` rows (free sign) and
/// `ineq` rows (nonnegative sign) gives a combination with nonnegative
/// coefficients on nonnegative variables, zero on free ones, and negative
/// right-hand side.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub eq: Vec<Rat>,
    pub ineq: Vec<Rat>,
}

impl Certificate {
    pub fn verify(&self, sys: &LinearSystem) -> bool {
        if self.eq.len() != sys.equalities.len() || self.ineq.len() != sys.inequalities.len() {
            return false;
        }
        if self.ineq.iter().any(|m| m.is_negative()) {
            return false;
        }
        let n = sys.num_vars();
        let mut combined = vec![Rat::zero(); n];
        let mut rhs = Rat::zero();
        let rows = self
            .eq
            .iter()
            .zip(&sys.equalities)
            .chain(self.ineq.iter().zip(&sys.inequalities));
        for (m, (coeffs, b)) in rows {
            if m.is_zero() {
                continue;
            }
            for (j, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    combined[j] += &(m * c);
                }
            }
            rhs += &(m * b);
        }
        for (j, c) in combined.iter().enumerate() {
            if sys.nonneg[j] {
                if c.is_negative() {
                    return false;
                }
            } else if !c.is_zero() {
                return false;
            }
        }
        rhs.is_negative()
    }
}

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Feasible(Vec<Rat>),
    Infeasible(Certificate),
    Optimal { point: Vec<Rat>, value: Rat },
    Unbounded { ray: Vec<Rat> },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rat]> {
        match self {
            LpOutcome::Feasible(x) | LpOutcome::Optimal { point: x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.point().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Exact feasibility test: `Feasible` with a point or `Infeasible` with a
/// verified certificate.
pub fn feasible(sys: &LinearSystem) -> LpOutcome {
    let mut t = Tableau::assemble(sys);
    match t.phase_one() {
        Err(cert) => {
            assert!(cert.verify(sys), "Farkas certificate failed verification");
            LpOutcome::Infeasible(cert)
        }
        Ok(()) => {
            let x = t.extract_point();
            assert!(sys.check_point(&x), "feasible point failed verification");
            LpOutcome::Feasible(x)
        }
    }
}

/// Exact optimization over the system's variables.
pub fn optimize(sys: &LinearSystem, objective: &[Rat], sense: Sense) -> LpOutcome {
    run_optimize(sys, objective, sense, None)
}

/// Like [`optimize`] but stops at the first basic solution whose objective
/// reaches `target` (a feasibility oracle with early exit). The returned
/// `Optimal` value may then be short of the true optimum but satisfies the
/// target bound for `Max` (resp. `Min`).
pub fn optimize_until(
    sys: &LinearSystem,
    objective: &[Rat],
    sense: Sense,
    target: &Rat,
) -> LpOutcome {
    run_optimize(sys, objective, sense, Some(target))
}

fn run_optimize(
    sys: &LinearSystem,
    objective: &[Rat],
    sense: Sense,
    target: Option<&Rat>,
) -> LpOutcome {
    assert_eq!(objective.len(), sys.num_vars());
    let mut t = Tableau::assemble(sys);
    if let Err(cert) = t.phase_one() {
        assert!(cert.verify(sys), "Farkas certificate failed verification");
        return LpOutcome::Infeasible(cert);
    }
    let std_obj = t.standard_objective(objective, sense);
    let std_target = target.map(|v| match sense {
        Sense::Min => v.clone(),
        Sense::Max => -v,
    });
    match t.iterate(&std_obj, std_target.as_ref()) {
        Step::Optimal | Step::TargetReached => {
            let point = t.extract_point();
            assert!(sys.check_point(&point), "optimal point failed verification");
            let value = dot(objective, &point);
            LpOutcome::Optimal { point, value }
        }
        Step::Unbounded(enter) => {
            let ray = t.extract_ray(enter);
            assert!(verify_ray(sys, objective, sense, &ray), "bad ray");
            LpOutcome::Unbounded { ray }
        }
    }
}

fn verify_ray(sys: &LinearSystem, objective: &[Rat], sense: Sense, ray: &[Rat]) -> bool {
    for (coeffs, _) in &sys.equalities {
        if !dot(coeffs, ray).is_zero() {
            return false;
        }
    }
    for (coeffs, _) in &sys.inequalities {
        if dot(coeffs, ray).is_positive() {
            return false;
        }
    }
    for (j, r) in ray.iter().enumerate() {
        if sys.nonneg[j] && r.is_negative() {
            return false;
        }
    }
    let d = dot(objective, ray);
    match sense {
        Sense::Min => d.is_negative(),
        Sense::Max => d.is_positive(),
    }
}

enum Step {
    Optimal,
    Unbounded(usize),
    TargetReached,
}

/// Standard form: columns for user variables (free ones split in two), then
/// slacks, then one artificial identity column per row. Rows are equalities
/// followed by inequalities, scaled so rhs >= 0.
struct Tableau {
    cols: Vec<Vec<(usize, Rat)>>,
    b: Vec<Rat>,
    /// Per user variable: (column, optional negated column).
    var_cols: Vec<(usize, Option<usize>)>,
    /// First artificial column; artificials never enter the basis.
    art_start: usize,
    /// Whether each user row (eqs then ineqs) was negated for rhs >= 0.
    row_negated: Vec<bool>,
    /// Physical row -> user row index (stable across row drops).
    row_user: Vec<usize>,
    num_user_eq: usize,
    basis: Vec<usize>,
    binv: Vec<Vec<Rat>>,
    xb: Vec<Rat>,
    in_basis: Vec<bool>,
}

impl Tableau {
    fn assemble(sys: &LinearSystem) -> Tableau {
        let m = sys.equalities.len() + sys.inequalities.len();
        let mut cols: Vec<Vec<(usize, Rat)>> = Vec::new();
        let mut var_cols = Vec::with_capacity(sys.num_vars());
        let mut b: Vec<Rat> = sys
            .equalities
            .iter()
            .map(|(_, r)| r.clone())
            .chain(sys.inequalities.iter().map(|(_, r)| r.clone()))
            .collect();
        let mut row_negated = vec![false; m];
        for (i, bi) in b.iter_mut().enumerate() {
            if bi.is_negative() {
                row_negated[i] = true;
                *bi = -&*bi;
            }
        }
        let signed = |row: usize, c: &Rat| if row_negated[row] { -c } else { c.clone() };
        for (v, &nn) in sys.nonneg.iter().enumerate() {
            let mut col = Vec::new();
            let all_rows = sys.equalities.iter().chain(sys.inequalities.iter());
            for (r, (coeffs, _)) in all_rows.enumerate() {
                if !coeffs[v].is_zero() {
                    col.push((r, signed(r, &coeffs[v])));
                }
            }
            let pos = cols.len();
            if nn {
                cols.push(col);
                var_cols.push((pos, None));
            } else {
                let neg: Vec<(usize, Rat)> = col.iter().map(|(r, c)| (*r, -c)).collect();
                cols.push(col);
                cols.push(neg);
                var_cols.push((pos, Some(pos + 1)));
            }
        }
        for k in 0..sys.inequalities.len() {
            let r = sys.equalities.len() + k;
            cols.push(vec![(r, signed(r, &Rat::one()))]);
        }
        let art_start = cols.len();
        for i in 0..m {
            cols.push(vec![(i, Rat::one())]);
        }
        let mut in_basis = vec![false; cols.len()];
        let basis: Vec<usize> = (0..m).map(|i| art_start + i).collect();
        for &j in &basis {
            in_basis[j] = true;
        }
        Tableau {
            xb: b.clone(),
            binv: identity(m),
            b,
            cols,
            var_cols,
            art_start,
            row_negated,
            row_user: (0..m).collect(),
            num_user_eq: sys.equalities.len(),
            basis,
            in_basis,
        }
    }

    fn m(&self) -> usize {
        self.basis.len()
    }

    fn phase_one(&mut self) -> Result<(), Certificate> {
        let mut c = vec![Rat::zero(); self.cols.len()];
        for j in self.art_start..self.cols.len() {
            c[j] = Rat::one();
        }
        match self.iterate(&c, Some(&Rat::zero())) {
            Step::Unbounded(_) => unreachable!("phase 1 is bounded below by 0"),
            Step::TargetReached => {
                self.purge_artificials();
                Ok(())
            }
            Step::Optimal => {
                let value = self.objective_value(&c);
                if value.is_positive() {
                    Err(self.farkas(&c))
                } else {
                    self.purge_artificials();
                    Ok(())
                }
            }
        }
    }

    fn objective_value(&self, c: &[Rat]) -> Rat {
        let mut val = Rat::zero();
        for (i, &bj) in self.basis.iter().enumerate() {
            if !c[bj].is_zero() {
                val += &(&c[bj] * &self.xb[i]);
            }
        }
        val
    }

    fn dual(&self, c: &[Rat]) -> Vec<Rat> {
        let m = self.m();
        let mut y = vec![Rat::zero(); m];
        for (i, &bj) in self.basis.iter().enumerate() {
            if c[bj].is_zero() {
                continue;
            }
            for r in 0..m {
                if !self.binv[i][r].is_zero() {
                    y[r] += &(&c[bj] * &self.binv[i][r]);
                }
            }
        }
        y
    }

    /// Simplex iterations minimizing `c`; stops early once the objective is
    /// at or below `target`.
    ///
    /// Pricing uses Dantzig's rule while pivots make progress and falls back
    /// to Bland's rule during degenerate streaks, which keeps termination
    /// guaranteed: an infinite run would eventually pivot under Bland's rule
    /// only, which cannot cycle. Both rules break ties by lowest index, so
    /// runs are deterministic.
    fn iterate(&mut self, c: &[Rat], target: Option<&Rat>) -> Step {
        const DEGENERATE_LIMIT: u32 = 16;
        let mut degenerate_streak = 0u32;
        loop {
            if let Some(t) = target {
                if &self.objective_value(c) <= t {
                    return Step::TargetReached;
                }
            }
            let y = self.dual(c);
            let bland = degenerate_streak >= DEGENERATE_LIMIT;
            let mut entering: Option<(Rat, usize)> = None;
            for j in 0..self.art_start {
                if self.in_basis[j] {
                    continue;
                }
                let mut red = c[j].clone();
                for (r, coef) in &self.cols[j] {
                    if !y[*r].is_zero() {
                        red -= &(&y[*r] * coef);
                    }
                }
                if red.is_negative() {
                    if bland {
                        entering = Some((red, j));
                        break;
                    }
                    match &entering {
                        Some((best, _)) if *best <= red => {}
                        _ => entering = Some((red, j)),
                    }
                }
            }
            let j = match entering {
                Some((_, j)) => j,
                None => return Step::Optimal,
            };
            let d = self.column_in_basis(j);
            let mut leave: Option<(Rat, usize, usize)> = None;
            for i in 0..self.m() {
                if !d[i].is_positive() {
                    continue;
                }
                let theta = &self.xb[i] / &d[i];
                match &leave {
                    Some((t, k, _)) if *t < theta || (*t == theta && *k <= self.basis[i]) => {}
                    _ => leave = Some((theta, self.basis[i], i)),
                }
            }
            match leave {
                None => return Step::Unbounded(j),
                Some((theta, _, i)) => {
                    if theta.is_zero() {
                        degenerate_streak += 1;
                    } else {
                        degenerate_streak = 0;
                    }
                    self.pivot(i, j, &d);
                }
            }
        }
    }

    fn purge_artificials(&mut self) {
        let mut i = 0;
        while i < self.m() {
            if self.basis[i] < self.art_start {
                i += 1;
                continue;
            }
            debug_assert!(self.xb[i].is_zero());
            let mut pivot_col = None;
            for j in 0..self.art_start {
                if self.in_basis[j] {
                    continue;
                }
                let mut dij = Rat::zero();
                for (r, coef) in &self.cols[j] {
                    if !self.binv[i][*r].is_zero() {
                        dij += &(&self.binv[i][*r] * coef);
                    }
                }
                if !dij.is_zero() {
                    pivot_col = Some(j);
                    break;
                }
            }
            match pivot_col {
                Some(j) => {
                    let d = self.column_in_basis(j);
                    self.pivot(i, j, &d);
                    i += 1;
                }
                None => self.drop_row(i),
            }
        }
    }

    /// Remove redundant basis slot `slot` (holding an artificial) together
    /// with a physical row keeping the basis invertible, then rebuild.
    fn drop_row(&mut self, slot: usize) {
        let m = self.m();
        let r0 = (0..m)
            .find(|&r| !self.binv[slot][r].is_zero())
            .expect("basis inverse row cannot vanish");
        self.in_basis[self.basis[slot]] = false;
        self.basis.remove(slot);
        self.xb.remove(slot);
        self.b.remove(r0);
        self.row_user.remove(r0);
        for col in self.cols.iter_mut() {
            col.retain(|(r, _)| *r != r0);
            for (r, _) in col.iter_mut() {
                if *r > r0 {
                    *r -= 1;
                }
            }
        }
        self.rebuild_binv();
    }

    fn rebuild_binv(&mut self) {
        let m = self.m();
        let mut mat = vec![vec![Rat::zero(); m]; m];
        for (i, &bj) in self.basis.iter().enumerate() {
            for (r, coef) in &self.cols[bj] {
                mat[*r][i] = coef.clone();
            }
        }
        self.binv = invert(mat).expect("basis stays invertible after row drop");
        for i in 0..m {
            self.xb[i] = dot(&self.binv[i], &self.b);
        }
    }

    fn farkas(&self, c: &[Rat]) -> Certificate {
        let y = self.dual(c);
        // y proves infeasibility of the signed standard system; map back to
        // user rows with user-facing sign convention.
        let mut eq = vec![Rat::zero(); self.num_user_eq];
        let mut ineq_map = std::collections::HashMap::new();
        for (r, yr) in y.iter().enumerate() {
            let user = self.row_user[r];
            let signed = if self.row_negated[user] {
                yr.clone()
            } else {
                -yr
            };
            if user < self.num_user_eq {
                eq[user] = signed;
            } else {
                ineq_map.insert(user - self.num_user_eq, signed);
            }
        }
        let total_ineq = self.row_negated.len() - self.num_user_eq;
        let ineq = (0..total_ineq)
            .map(|k| ineq_map.remove(&k).unwrap_or_else(Rat::zero))
            .collect();
        Certificate { eq, ineq }
    }

    fn column_in_basis(&self, j: usize) -> Vec<Rat> {
        let m = self.m();
        let mut d = vec![Rat::zero(); m];
        for i in 0..m {
            let mut acc = Rat::zero();
            for (r, coef) in &self.cols[j] {
                if !self.binv[i][*r].is_zero() {
                    acc += &(&self.binv[i][*r] * coef);
                }
            }
            d[i] = acc;
        }
        d
    }

    fn pivot(&mut self, leave_row: usize, enter_col: usize, d: &[Rat]) {
        let m = self.m();
        let inv = d[leave_row].recip();
        for r in 0..m {
            if !self.binv[leave_row][r].is_zero() {
                self.binv[leave_row][r] *= &inv;
            }
        }
        let theta = &self.xb[leave_row] * &inv;
        for i in 0..m {
            if i == leave_row || d[i].is_zero() {
                continue;
            }
            for r in 0..m {
                if !self.binv[leave_row][r].is_zero() {
                    let delta = &d[i] * &self.binv[leave_row][r];
                    self.binv[i][r] -= &delta;
                }
            }
            let dx = &d[i] * &theta;
            self.xb[i] -= &dx;
        }
        self.xb[leave_row] = theta;
        self.in_basis[self.basis[leave_row]] = false;
        self.basis[leave_row] = enter_col;
        self.in_basis[enter_col] = true;
    }

    fn standard_objective(&self, objective: &[Rat], sense: Sense) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); self.cols.len()];
        for (v, &(pos, neg)) in self.var_cols.iter().enumerate() {
            let cv = match sense {
                Sense::Min => objective[v].clone(),
                Sense::Max => -&objective[v],
            };
            if let Some(ncol) = neg {
                c[ncol] = -&cv;
            }
            c[pos] = cv;
        }
        c
    }

    fn extract_point(&self) -> Vec<Rat> {
        let mut std_x = vec![Rat::zero(); self.cols.len()];
        for (i, &bj) in self.basis.iter().enumerate() {
            std_x[bj] = self.xb[i].clone();
        }
        self.map_std_point(&std_x)
    }

    fn map_std_point(&self, std_x: &[Rat]) -> Vec<Rat> {
        let mut x = Vec::with_capacity(self.var_cols.len());
        for &(pos, neg) in &self.var_cols {
            let mut v = std_x[pos].clone();
            if let Some(ncol) = neg {
                v -= &std_x[ncol];
            }
            x.push(v);
        }
        x
    }

    fn extract_ray(&self, enter: usize) -> Vec<Rat> {
        let d = self.column_in_basis(enter);
        let mut std_r = vec![Rat::zero(); self.cols.len()];
        std_r[enter] = Rat::one();
        for (i, &bj) in self.basis.iter().enumerate() {
            std_r[bj] = -&d[i];
        }
        self.map_std_point(&std_r)
    }
}

fn identity(m: usize) -> Vec<Vec<Rat>> {
    let mut id = vec![vec![Rat::zero(); m]; m];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    id
}

fn invert(mut a: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
    let m = a.len();
    let mut inv = identity(m);
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = a[col][col].recip();
        for j in 0..m {
            a[col][j] *= &f;
            inv[col][j] *= &f;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..m {
                    let da = &f * &a[col][j];
                    a[r][j] -= &da;
                    let di = &f * &inv[col][j];
                    inv[r][j] -= &di;
                }
            }
        }
    }
    Some(inv)
}
