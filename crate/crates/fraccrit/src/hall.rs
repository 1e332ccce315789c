//! Interval constructions for 5-cycles with three nailed vertices.
//!
//! `hall_five_cycle` realises a coloring of the nailed path of a 5-cycle
//! inside prescribed sets via a measurable Hall selection;
//! `hall_five_cycle_slack` relaxes one of the three sets by measure one,
//! mixing the correction from the vertex table of the slack polytope;
//! `sset_select` picks the measure-2 enlargement set used when re-nailing
//! the neighbours of a deleted degree-2 vertex.

use crate::interval::RatSet;
use crate::linsys::LinearSystem;
use crate::rat::Rat;
use crate::simplex::{self, LpOutcome};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HallError {
    #[error("slack function must have total 1")]
    BadSlack,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Sets of measure 4 for the three nailed vertices `v1, v2, v3` of a
/// 5-cycle, with `phi(v_i)` inside `s[i]`; `None` exactly when no such
/// coloring exists, i.e. when one of `|S1 u S2| >= 8`, `|S2 u S3| >= 8`,
/// `|S1 u S2 u S3| = 11` fails.
pub fn hall_five_cycle(s: &[RatSet; 3]) -> Option<[RatSet; 3]> {
    for (i, si) in s.iter().enumerate() {
        assert!(
            si.measure() >= Rat::int(7),
            "|S{}| must be at least 7",
            i + 1
        );
    }
    let conditions = s[0].union(&s[1]).measure() >= Rat::int(8)
        && s[1].union(&s[2]).measure() >= Rat::int(8)
        && s[0].union(&s[1]).union(&s[2]).measure() == Rat::int(11);

    // Hall system: disjoint L1 in S1 (measure 3), L2 in S1 /\ S3 (1),
    // L3 in S3 (3), L4 in S2 (4); then phi = (L1 u L2, L4, L2 u L3).
    let x = [
        s[0].clone(),
        s[0].intersect(&s[2]),
        s[2].clone(),
        s[1].clone(),
    ];
    let amounts = [Rat::int(3), Rat::one(), Rat::int(3), Rat::int(4)];
    let selection = hall_selection(&x, &amounts);
    assert_eq!(
        selection.is_some(),
        conditions,
        "Hall selection must exist exactly under the union conditions"
    );
    let l = selection?;
    Some([l[0].union(&l[1]), l[3].clone(), l[1].union(&l[2])])
}

/// Disjoint `L_i` inside `x_i` with `|L_i| = amounts[i]`, or `None` when the
/// measure version of Hall's condition fails. Solved as an exact
/// transportation LP over the atoms of the boolean algebra of the `x_i`.
fn hall_selection(x: &[RatSet], amounts: &[Rat]) -> Option<Vec<RatSet>> {
    let k = x.len();
    let mut cells: Vec<(usize, RatSet)> = Vec::new();
    for mask in 1usize..1 << k {
        let mut cell: Option<RatSet> = None;
        for (i, xi) in x.iter().enumerate() {
            if mask >> i & 1 == 1 {
                cell = Some(match cell {
                    None => xi.clone(),
                    Some(c) => c.intersect(xi),
                });
            }
        }
        let mut cell = cell.unwrap();
        for (i, xi) in x.iter().enumerate() {
            if mask >> i & 1 == 0 {
                cell = cell.minus(xi);
            }
        }
        if !cell.is_empty() {
            cells.push((mask, cell));
        }
    }
    // Variables: flow from cell c to slot i when x_i covers the cell.
    let mut vars: Vec<(usize, usize)> = Vec::new();
    for (ci, (mask, _)) in cells.iter().enumerate() {
        for i in 0..k {
            if mask >> i & 1 == 1 {
                vars.push((ci, i));
            }
        }
    }
    let mut sys = LinearSystem::with_nonneg_vars(vars.len());
    for (ci, (_, cell)) in cells.iter().enumerate() {
        let coeffs: Vec<Rat> = vars
            .iter()
            .map(|&(c, _)| if c == ci { Rat::one() } else { Rat::zero() })
            .collect();
        sys.push_le(coeffs, cell.measure());
    }
    for (i, amount) in amounts.iter().enumerate() {
        let coeffs: Vec<Rat> = vars
            .iter()
            .map(|&(_, vi)| if vi == i { Rat::one() } else { Rat::zero() })
            .collect();
        sys.push_eq(coeffs, amount.clone());
    }
    let flow = match simplex::feasible(&sys) {
        LpOutcome::Feasible(f) => f,
        LpOutcome::Infeasible(_) => return None,
        other => unreachable!("{:?}", other),
    };
    // Carve consecutive chunks out of each cell in slot order.
    let mut out = vec![RatSet::empty(); k];
    for (ci, (_, cell)) in cells.iter().enumerate() {
        let mut remaining = cell.clone();
        for i in 0..k {
            if let Some(vi) = vars.iter().position(|&(c, s)| c == ci && s == i) {
                if flow[vi].is_zero() {
                    continue;
                }
                let chunk = remaining
                    .take_first(&flow[vi])
                    .expect("flow bounded by cell measure");
                remaining = remaining.minus(&chunk);
                out[i] = out[i].union(&chunk);
            }
        }
    }
    for (i, amount) in amounts.iter().enumerate() {
        debug_assert_eq!(out[i].measure(), *amount);
    }
    Some(out)
}

/// Vertex rows of the slack polytope together with the correction vector
/// `m`, as listed for the half `a1 <= a3`; the mirrored rows follow by the
/// `1 <-> 3` symmetry.
const SLACK_TABLE: [([i64; 4], [i64; 4]); 8] = [
    ([0, 0, 0, 0], [0, 0, 0, 0]),
    ([0, 0, 0, 5], [0, 0, 0, 1]),
    ([0, 0, 4, 0], [0, 0, 1, 0]),
    ([0, 4, 0, 0], [0, 1, 0, 0]),
    ([0, 0, 4, 1], [0, 0, 1, 0]),
    ([0, 4, 0, 1], [0, 1, 0, 0]),
    ([1, 0, 4, 0], [0, 0, 1, 0]),
    ([1, 3, 1, 0], [0, 1, 0, 0]),
];

fn slack_vertices() -> Vec<([Rat; 4], [Rat; 4])> {
    let mut rows: Vec<([Rat; 4], [Rat; 4])> = Vec::new();
    let mut push = |a: [Rat; 4], m: [Rat; 4]| {
        if !rows.iter().any(|(ra, _)| *ra == a) {
            rows.push((a, m));
        }
    };
    for (a, m) in SLACK_TABLE {
        let ar = a.map(Rat::int);
        let mr = m.map(Rat::int);
        let mirror_a = [ar[2].clone(), ar[1].clone(), ar[0].clone(), ar[3].clone()];
        let mirror_m = [mr[2].clone(), mr[1].clone(), mr[0].clone(), mr[3].clone()];
        push(ar, mr);
        push(mirror_a, mirror_m);
    }
    rows
}

/// Correction amounts `m` for a point `a` of the slack polytope, obtained by
/// expressing `a` as a convex combination of the table rows and mixing their
/// `m` columns; at a table row this returns exactly the listed values.
pub fn slack_mix(a: &[Rat; 4]) -> [Rat; 4] {
    let rows = slack_vertices();
    let mut sys = LinearSystem::with_nonneg_vars(rows.len());
    sys.push_eq(vec![Rat::one(); rows.len()], Rat::one());
    for coord in 0..4 {
        let coeffs: Vec<Rat> = rows.iter().map(|(v, _)| v[coord].clone()).collect();
        sys.push_eq(coeffs, a[coord].clone());
    }
    let lambda = match simplex::feasible(&sys) {
        LpOutcome::Feasible(l) => l,
        _ => panic!("point {:?} lies outside the slack polytope", a),
    };
    let mut m = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for (l, (_, mv)) in lambda.iter().zip(&rows) {
        if l.is_zero() {
            continue;
        }
        for (acc, c) in m.iter_mut().zip(mv) {
            *acc += &(l * c);
        }
    }
    m
}

/// Variant of [`hall_five_cycle`] allowing `phi(v_i)` to leave `S_i` by
/// measure at most `f(i)`, where exactly one `f(i)` is 1.
pub fn hall_five_cycle_slack(
    s: &[RatSet; 3],
    f: &[u8; 3],
) -> Result<Option<[RatSet; 3]>, HallError> {
    if f.iter().map(|&x| x as u32).sum::<u32>() != 1 || f.iter().any(|&x| x > 1) {
        return Err(HallError::BadSlack);
    }
    for i in 0..3 {
        if s[i].measure() < Rat::int(7 - f[i] as i64) {
            return Err(HallError::Precondition(format!(
                "|S{}| below {}",
                i + 1,
                7 - f[i]
            )));
        }
    }
    let m8 = |i: usize, j: usize| Rat::int(8 - f[i] as i64 - f[j] as i64);
    let conditions = s[0].union(&s[1]).measure() >= m8(0, 1)
        && s[1].union(&s[2]).measure() >= m8(1, 2)
        && s[0].union(&s[1]).union(&s[2]).measure() == Rat::int(11);
    if !conditions {
        return Ok(None);
    }

    if f[1] == 1 {
        // Partition of the complement of S2 and the table-mixed correction.
        let a_sets = [
            s[0].minus(&s[1]).minus(&s[2]),
            s[0].union(&s[1]).union(&s[2]).complement(),
            s[2].minus(&s[0]).minus(&s[1]),
            s[0].intersect(&s[2]).minus(&s[1]),
        ];
        let a = [
            a_sets[0].measure(),
            a_sets[1].measure(),
            a_sets[2].measure(),
            a_sets[3].measure(),
        ];
        let m = slack_mix(&a);
        let mut grow = RatSet::empty();
        for (set, amount) in a_sets.iter().zip(&m) {
            grow = grow.union(&set.take_first(amount).expect("m_i <= a_i"));
        }
        let enlarged = [s[0].clone(), s[1].union(&grow), s[2].clone()];
        let phi = hall_five_cycle(&enlarged).expect("slack mixing restores the conditions");
        Ok(Some(phi))
    } else {
        // Slack at an end vertex: add measure directly where the two
        // deficits demand it.
        let (i, j, k) = if f[0] == 1 { (0, 1, 2) } else { (2, 1, 0) };
        let zero = Rat::zero();
        let deficit_size = {
            let d = Rat::int(7) - s[i].measure();
            if d > zero {
                d
            } else {
                zero.clone()
            }
        };
        let deficit_pair = {
            let d = Rat::int(8) - s[i].union(&s[j]).measure();
            if d > zero {
                d
            } else {
                zero.clone()
            }
        };
        let outside_pair = s[i].union(&s[j]).complement();
        let part_a = outside_pair
            .take_first(&deficit_pair)
            .expect("room outside S_i u S_j");
        let mut grow = part_a;
        if grow.measure() < deficit_size {
            let extra = &deficit_size - &grow.measure();
            let source = s[i].complement().minus(&grow);
            grow = grow.union(&source.take_first(&extra).expect("room outside S_i"));
        }
        let mut enlarged = [s[0].clone(), s[1].clone(), s[2].clone()];
        enlarged[i] = s[i].union(&grow);
        let phi = hall_five_cycle(&enlarged).expect("enlargement restores the conditions");
        let _ = k;
        Ok(Some(phi))
    }
}

/// A set `X` of measure 2 avoiding `B u C` with `|A_i /\ X| <= 1`, given
/// `|A1| = |A2| = 4`, `|B| = 5`, `|C| = 1` and `B` disjoint from
/// `A1 u A2 u C`.
pub fn sset_select(
    a1: &RatSet,
    a2: &RatSet,
    b: &RatSet,
    c: &RatSet,
) -> Result<RatSet, HallError> {
    let pre = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(HallError::Precondition(msg.to_string()))
        }
    };
    pre(a1.measure() == Rat::int(4), "|A1| = 4")?;
    pre(a2.measure() == Rat::int(4), "|A2| = 4")?;
    pre(b.measure() == Rat::int(5), "|B| = 5")?;
    pre(c.measure() == Rat::one(), "|C| = 1")?;
    pre(
        b.is_disjoint(&a1.union(a2).union(c)),
        "B disjoint from A1 u A2 u C",
    )?;
    // Work inside U = [0,11) \ (B u C); shrinking each A_i onto U (topped up
    // to measure 4 inside U) only makes the selection harder.
    let u = b.union(c).complement();
    let shrink = |a: &RatSet| -> RatSet {
        let inside = a.intersect(&u);
        let need = Rat::int(4) - inside.measure();
        let top = u.minus(&inside).take_first(&need).expect("U has measure 5");
        inside.union(&top)
    };
    let a1p = shrink(a1);
    let a2p = shrink(a2);
    let both = a1p.intersect(&a2p);
    let t = u.minus(&a1p.union(&a2p)).measure();
    let x1 = u.minus(&both);
    let x2 = both.take_first(&t).expect("t <= |A1' /\\ A2'|");
    let x = x1.union(&x2);
    debug_assert_eq!(x.measure(), Rat::int(2));
    debug_assert!(x.intersect(a1).measure() <= Rat::one());
    debug_assert!(x.intersect(a2).measure() <= Rat::one());
    Ok(x)
}
