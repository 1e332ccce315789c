//! Measurable subsets of the color space as finite unions of half-open
//! rational intervals.
//!
//! The interval constructions in the coloring arguments (Hall selections,
//! slack sets, the vertex-deletion averaging) all stay inside this class,
//! and every operation here is exact.

use crate::rat::Rat;
use std::fmt;

/// A finite union of disjoint half-open intervals `[a, b)`, kept sorted and
/// merged.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatSet {
    runs: Vec<(Rat, Rat)>,
}

impl RatSet {
    pub fn empty() -> RatSet {
        RatSet { runs: Vec::new() }
    }

    /// The single interval `[a, b)`; empty when `a >= b`.
    pub fn interval(a: Rat, b: Rat) -> RatSet {
        if a < b {
            RatSet { runs: vec![(a, b)] }
        } else {
            RatSet::empty()
        }
    }

    pub fn interval_i64(a: i64, b: i64) -> RatSet {
        RatSet::interval(Rat::int(a), Rat::int(b))
    }

    /// The whole color space `[0, 11)`.
    pub fn color_space() -> RatSet {
        RatSet::interval_i64(0, 11)
    }

    pub fn from_runs(mut runs: Vec<(Rat, Rat)>) -> RatSet {
        runs.retain(|(a, b)| a < b);
        runs.sort();
        let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(runs.len());
        for (a, b) in runs {
            match out.last_mut() {
                Some((_, pb)) if *pb >= a => {
                    if b > *pb {
                        *pb = b;
                    }
                }
                _ => out.push((a, b)),
            }
        }
        RatSet { runs: out }
    }

    pub fn runs(&self) -> &[(Rat, Rat)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn measure(&self) -> Rat {
        let mut m = Rat::zero();
        for (a, b) in &self.runs {
            m += &(b - a);
        }
        m
    }

    pub fn union(&self, other: &RatSet) -> RatSet {
        let mut runs = self.runs.clone();
        runs.extend(other.runs.iter().cloned());
        RatSet::from_runs(runs)
    }

    pub fn intersect(&self, other: &RatSet) -> RatSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let (a1, b1) = &self.runs[i];
            let (a2, b2) = &other.runs[j];
            let lo = if a1 > a2 { a1.clone() } else { a2.clone() };
            let hi = if b1 < b2 { b1.clone() } else { b2.clone() };
            if lo < hi {
                out.push((lo, hi));
            }
            if b1 <= b2 {
                i += 1;
            } else {
                j += 1;
            }
        }
        RatSet { runs: out }
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &RatSet) -> RatSet {
        let mut out = Vec::new();
        for (a, b) in &self.runs {
            let mut lo = a.clone();
            for (c, d) in &other.runs {
                if d <= &lo {
                    continue;
                }
                if c >= b {
                    break;
                }
                if c > &lo {
                    out.push((lo.clone(), c.clone()));
                }
                if d < b {
                    lo = d.clone();
                } else {
                    lo = b.clone();
                    break;
                }
            }
            if lo < *b {
                out.push((lo, b.clone()));
            }
        }
        RatSet { runs: out }
    }

    /// Complement within `[0, 11)`.
    pub fn complement(&self) -> RatSet {
        RatSet::color_space().minus(self)
    }

    pub fn is_disjoint(&self, other: &RatSet) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn is_subset_of(&self, other: &RatSet) -> bool {
        self.minus(other).is_empty()
    }

    /// Lexicographically earliest subset of the given measure; `None` when
    /// the set is too small.
    pub fn take_first(&self, measure: &Rat) -> Option<RatSet> {
        assert!(!measure.is_negative());
        let mut need = measure.clone();
        let mut out = Vec::new();
        for (a, b) in &self.runs {
            if need.is_zero() {
                break;
            }
            let len = b - a;
            if len <= need {
                out.push((a.clone(), b.clone()));
                need -= &len;
            } else {
                out.push((a.clone(), a + &need));
                need = Rat::zero();
            }
        }
        if need.is_zero() {
            Some(RatSet { runs: out })
        } else {
            None
        }
    }

    /// Image under the affine map `t -> offset + scale * t` with positive
    /// scale.
    pub fn affine(&self, scale: &Rat, offset: &Rat) -> RatSet {
        assert!(scale.is_positive());
        RatSet {
            runs: self
                .runs
                .iter()
                .map(|(a, b)| (offset + &(scale * a), offset + &(scale * b)))
                .collect(),
        }
    }

    /// All run endpoints, used to build common refinements.
    pub fn breakpoints(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for (a, b) in &self.runs {
            out.push(a.clone());
            out.push(b.clone());
        }
        out
    }

    pub fn contains_point(&self, t: &Rat) -> bool {
        self.runs.iter().any(|(a, b)| a <= t && t < b)
    }
}

impl fmt::Debug for RatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "[{},{})", a, b)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for RatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> RatSet {
        RatSet::interval_i64(a, b)
    }

    #[test]
    fn merge_and_measure() {
        let s = iv(0, 2).union(&iv(2, 4)).union(&iv(6, 7));
        assert_eq!(s.runs().len(), 2);
        assert_eq!(s.measure(), Rat::int(5));
    }

    #[test]
    fn intersect_and_minus() {
        let a = iv(0, 5);
        let b = iv(3, 8);
        assert_eq!(a.intersect(&b), iv(3, 5));
        assert_eq!(a.minus(&b), iv(0, 3));
        assert_eq!(b.minus(&a), iv(5, 8));
        let holes = iv(0, 10).minus(&iv(2, 3).union(&iv(5, 6)));
        assert_eq!(holes.measure(), Rat::int(8));
        assert_eq!(holes.runs().len(), 3);
    }

    #[test]
    fn complement_in_color_space() {
        let s = iv(0, 4).union(&iv(7, 11));
        assert_eq!(s.complement(), iv(4, 7));
        assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn take_first_cases() {
        let s = iv(0, 1).union(&iv(5, 8));
        let t = s.take_first(&Rat::int(2)).unwrap();
        assert_eq!(t, iv(0, 1).union(&iv(5, 6)));
        assert!(s.take_first(&Rat::int(5)).is_none());
        assert_eq!(s.take_first(&Rat::zero()).unwrap(), RatSet::empty());
        let half = s.take_first(&Rat::new(1, 2)).unwrap();
        assert_eq!(half, RatSet::interval(Rat::zero(), Rat::new(1, 2)));
    }

    #[test]
    fn affine_scaling() {
        let s = iv(0, 11);
        let scaled = s.affine(&Rat::new(1, 11), &Rat::int(3));
        assert_eq!(scaled, RatSet::interval(Rat::int(3), Rat::int(4)));
    }

    #[test]
    fn fractional_endpoints() {
        let a = RatSet::interval(Rat::new(1, 3), Rat::new(2, 3));
        let b = RatSet::interval(Rat::new(1, 2), Rat::int(1));
        assert_eq!(
            a.intersect(&b),
            RatSet::interval(Rat::new(1, 2), Rat::new(2, 3))
        );
        assert_eq!(a.union(&b).measure(), Rat::new(2, 3));
    }
}
