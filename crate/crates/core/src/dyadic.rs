//! Exact dyadic rationals `num / 2^exp`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::ParseError;

/// Largest exponent accepted anywhere in the engine.
pub const MAX_EXPONENT: u32 = 30;

/// An exact dyadic rational in lowest terms.
///
/// Stored as `num / 2^exp` with `num` odd whenever `exp > 0`. The sign,
/// integer part, odd numerator and exponent of the mixed form
/// `sign * (m + r / 2^n)` are available through accessors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// Builds `num / 2^exp`, reducing to lowest terms.
    pub fn new(mut num: i64, mut exp: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        while exp > 0 && num % 2 == 0 {
            num /= 2;
            exp -= 1;
        }
        Dyadic { num, exp }
    }

    pub const fn integer(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    /// Builds `sign * (m + r / 2^n)` from its mixed-fraction parts.
    pub fn from_parts(negative: bool, m: u64, r: u64, n: u32) -> Self {
        let mag = ((m as i64) << n) + r as i64;
        Self::new(if negative { -mag } else { mag }, n)
    }

    /// Numerator of the lowest-terms fraction (signed).
    pub fn num(self) -> i64 {
        self.num
    }

    /// Denominator exponent of the lowest-terms fraction.
    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn denominator(self) -> i64 {
        1i64 << self.exp
    }

    /// -1, 0 or 1.
    pub fn sign(self) -> i32 {
        self.num.signum() as i32
    }

    /// `m`, the integer part of `|x|`.
    pub fn integer_part(self) -> u64 {
        (self.num.unsigned_abs()) >> self.exp
    }

    /// `r`, the odd numerator of the fractional part of `|x|` (0 for integers).
    pub fn fraction_numerator(self) -> u64 {
        self.num.unsigned_abs() & ((1u64 << self.exp) - 1)
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    pub fn abs(self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Largest integer not above `self`.
    pub fn floor(self) -> i64 {
        self.num >> self.exp
    }

    /// Smallest integer not below `self`.
    pub fn ceil(self) -> i64 {
        -((-self.num) >> self.exp)
    }

    /// Midpoint of two dyadics.
    pub fn midpoint(self, other: Dyadic) -> Dyadic {
        let s = self + other;
        Dyadic::new(s.num, s.exp + 1)
    }

    fn aligned(self, other: Dyadic) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        let a = (self.num as i128) << (exp - self.exp);
        let b = (other.num as i128) << (exp - other.exp);
        (a, b, exp)
    }

    /// The simplest (earliest-born) dyadic strictly between `lo` and `hi`;
    /// a missing bound is unbounded on that side. Returns `None` when the
    /// interval is empty.
    pub fn simplest_between(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Option<Dyadic> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return None;
            }
        }
        let above = |x: Dyadic| lo.is_none_or(|l| x > l);
        let below = |x: Dyadic| hi.is_none_or(|h| x < h);
        let zero = Dyadic::ZERO;
        if above(zero) && below(zero) {
            return Some(zero);
        }
        // The interval lies entirely on one side of zero; try the integer
        // closest to zero first.
        let candidate = match lo {
            Some(l) if l >= zero => Dyadic::integer(l.floor() + 1),
            _ => Dyadic::integer(hi.expect("bounded above").ceil() - 1),
        };
        if above(candidate) && below(candidate) {
            return Some(candidate);
        }
        // No integer fits: both bounds lie in some [k, k+1]; bisect.
        let (mut a, mut b) = match lo {
            Some(l) if l >= zero => (Dyadic::integer(l.floor()), Dyadic::integer(l.floor() + 1)),
            _ => {
                let h = hi.expect("bounded above");
                (Dyadic::integer(h.ceil() - 1), Dyadic::integer(h.ceil()))
            }
        };
        loop {
            let mid = a.midpoint(b);
            if above(mid) && below(mid) {
                return Some(mid);
            }
            if !above(mid) {
                a = mid;
            } else {
                b = mid;
            }
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        let s = a + b;
        let s = i64::try_from(s).expect("dyadic overflow");
        Dyadic::new(s, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl FromStr for Dyadic {
    type Err = ParseError;

    /// Accepts `n`, `-n`, `p/q` and `-p/q` with `q` a power of two.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix(['-', '\u{2212}']) {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let bad = |msg: &str| ParseError::new(0, format!("{msg}: `{s}`"));
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (p, q),
            None => (body, "1"),
        };
        let p: i64 = p.trim().parse().map_err(|_| bad("invalid numerator"))?;
        let q: i64 = q.trim().parse().map_err(|_| bad("invalid denominator"))?;
        if q <= 0 || q.count_ones() != 1 {
            return Err(bad("denominator is not a power of two"));
        }
        let exp = q.trailing_zeros();
        if exp > MAX_EXPONENT {
            return Err(bad("denominator too large"));
        }
        Ok(Dyadic::new(if neg { -p } else { p }, exp))
    }
}
