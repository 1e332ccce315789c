//! Exact arbitrary-precision rationals.
//!
//! All arithmetic in this crate is exact: a value is a reduced fraction with
//! positive denominator. Small values (the overwhelming majority: constraint
//! coefficients, pivot intermediates on graphs this size) are kept in a pair
//! of `i128`s; anything that overflows is promoted to `BigInt` transparently.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A reduced rational with positive denominator.
///
/// Invariant: `Small` holds gcd-reduced components with `den > 0`; `Big` is
/// used only when the reduced value does not fit `Small`, so equal values
/// always have identical representations.
#[derive(Clone)]
pub enum Rat {
    Small(i128, i128),
    Big(Box<(BigInt, BigInt)>),
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

impl Rat {
    pub fn zero() -> Rat {
        Rat::Small(0, 1)
    }

    pub fn one() -> Rat {
        Rat::Small(1, 1)
    }

    pub fn int(n: i64) -> Rat {
        Rat::Small(n as i128, 1)
    }

    /// `n/d`, reduced. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::small(n as i128, d as i128)
    }

    fn small(mut n: i128, mut d: i128) -> Rat {
        debug_assert!(d != 0);
        if d < 0 {
            // i128::MIN would overflow on negation, but such values only
            // arise from raw constructor input, never from reduced parts.
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rat::Small(0, 1);
        }
        let g = gcd_i128(n, d);
        Rat::Small(n / g, d / g)
    }

    fn big(mut n: BigInt, mut d: BigInt) -> Rat {
        assert!(!d.is_zero(), "zero denominator");
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        if n.is_zero() {
            return Rat::Small(0, 1);
        }
        let g = n.gcd(&d);
        n /= &g;
        d /= &g;
        if let (Some(ns), Some(ds)) = (n.to_i128(), d.to_i128()) {
            return Rat::Small(ns, ds);
        }
        Rat::Big(Box::new((n, d)))
    }

    pub fn from_bigint(n: BigInt, d: BigInt) -> Rat {
        Rat::big(n, d)
    }

    fn to_big(&self) -> (BigInt, BigInt) {
        match self {
            Rat::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (b.0.clone(), b.1.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(b) => b.0.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n > 0,
            Rat::Big(b) => b.0.is_positive(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.1 == BigInt::from(1),
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rat::Small(n, d) => Rat::small(*d, *n),
            Rat::Big(b) => Rat::big(b.1.clone(), b.0.clone()),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::Small(n.div_euclid(*d), 1),
            Rat::Big(b) => {
                let (q, r) = b.0.div_rem(&b.1);
                let q = if r.is_negative() { q - 1 } else { q };
                Rat::big(q, BigInt::from(1))
            }
        }
    }

    fn add_impl(&self, other: &Rat, negate: bool) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            let n2 = if negate { n2.checked_neg() } else { Some(*n2) };
            if let Some(n2) = n2 {
                let attempt = (|| {
                    let g = gcd_i128(*d1, *d2);
                    let (e1, e2) = (d1 / g, d2 / g);
                    let num = n1.checked_mul(e2)?.checked_add(n2.checked_mul(e1)?)?;
                    let den = d1.checked_mul(e2)?;
                    Some(Rat::small(num, den))
                })();
                if let Some(r) = attempt {
                    return r;
                }
            }
        }
        let (n1, d1) = self.to_big();
        let (n2, d2) = other.to_big();
        let n2 = if negate { -n2 } else { n2 };
        Rat::big(n1 * &d2 + n2 * &d1, d1 * d2)
    }

    fn mul_impl(&self, other: &Rat) -> Rat {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            // Cross-reduce first so products stay small.
            let g1 = gcd_i128(*n1, *d2).max(1);
            let g2 = gcd_i128(*n2, *d1).max(1);
            let attempt = (|| {
                let num = (n1 / g1).checked_mul(n2 / g2)?;
                let den = (d1 / g2).checked_mul(d2 / g1)?;
                Some(Rat::Small(num, den))
            })();
            if let Some(r) = attempt {
                return r;
            }
        }
        let (n1, d1) = self.to_big();
        let (n2, d2) = other.to_big();
        Rat::big(n1 * n2, d1 * d2)
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small(n1, d1), Rat::Small(n2, d2)) => n1 == n2 && d1 == d2,
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(b) => {
                1u8.hash(state);
                b.0.hash(state);
                b.1.hash(state);
            }
        }
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Rat::Small(n1, d1), Rat::Small(n2, d2)) = (self, other) {
            if let (Some(a), Some(b)) = (n1.checked_mul(*d2), n2.checked_mul(*d1)) {
                return a.cmp(&b);
            }
        }
        let (n1, d1) = self.to_big();
        let (n2, d2) = other.to_big();
        (n1 * d2).cmp(&(n2 * d1))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.mul_impl(&b.recip()));

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat::Small(m, *d),
                None => {
                    let (n, d) = self.to_big();
                    Rat::big(-n, d)
                }
            },
            Rat::Big(b) => Rat::big(-b.0.clone(), b.1.clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = self.mul_impl(rhs);
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{}", n),
            Rat::Small(n, d) => write!(f, "{}/{}", n, d),
            Rat::Big(b) if b.1 == BigInt::from(1) => write!(f, "{}", b.0),
            Rat::Big(b) => write!(f, "{}/{}", b.0, b.1),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse error for [`Rat::from_str`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p` or `p/q` with optional sign, arbitrary precision.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let bad = || ParseRatError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::big(n, d))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

/// Sum of a slice without intermediate clones.
pub fn rat_sum<'a, I: IntoIterator<Item = &'a Rat>>(items: I) -> Rat {
    let mut acc = Rat::zero();
    for x in items {
        acc += x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!((-&a), Rat::new(-1, 2));
        assert!(a > b);
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rat::new(11, 4).to_string(), "11/4");
        assert_eq!(Rat::int(7).to_string(), "7");
        assert_eq!(Rat::new(-3, 6).to_string(), "-1/2");
        assert_eq!("14/5".parse::<Rat>().unwrap(), Rat::new(14, 5));
        assert_eq!("-2".parse::<Rat>().unwrap(), Rat::int(-2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn promotion_roundtrip() {
        // Force overflow of i128 through repeated squaring, then come back.
        let mut x = Rat::new(1_000_000_007, 3);
        for _ in 0..5 {
            x = &x * &x;
        }
        assert!(matches!(x, Rat::Big(_)));
        let y = &x / &x;
        assert_eq!(y, Rat::one());
        assert!(matches!(y, Rat::Small(1, 1)));
    }

    #[test]
    fn floor_works() {
        assert_eq!(Rat::new(7, 2).floor(), Rat::int(3));
        assert_eq!(Rat::new(-7, 2).floor(), Rat::int(-4));
        assert_eq!(Rat::int(5).floor(), Rat::int(5));
    }

    fn big_ref(n: i64, d: i64) -> (BigInt, BigInt) {
        let mut n = BigInt::from(n);
        let mut d = BigInt::from(d);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g.is_zero() {
            (BigInt::from(0), BigInt::from(1))
        } else {
            (n / &g, d / g)
        }
    }

    proptest! {
        #[test]
        fn matches_bigint_reference(n1 in -1000i64..1000, d1 in 1i64..100,
                                    n2 in -1000i64..1000, d2 in 1i64..100) {
            let a = Rat::new(n1, d1);
            let b = Rat::new(n2, d2);
            let sum = &a + &b;
            let (rn, rd) = big_ref(n1 * d2 + n2 * d1, d1 * d2);
            let (sn, sd) = sum.to_big();
            prop_assert_eq!((sn, sd), (rn, rd));

            let prod = &a * &b;
            let (rn, rd) = big_ref(n1 * n2, d1 * d2);
            let (pn, pd) = prod.to_big();
            prop_assert_eq!((pn, pd), (rn, rd));

            let ord = a.cmp(&b);
            prop_assert_eq!(ord, (n1 * d2).cmp(&(n2 * d1)));
        }
    }
}
