//! Stops, temperature classes, remoteness and distances to a nimber.
//!
//! Everything here is computed on canonical forms and memoized on the
//! canonical handle, so value-equal inputs always get the same answer.

use std::collections::BTreeSet;

use crate::canonical::NimberSize;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::form::{slot, store, Arena, FormId, Outcome};

/// Cold, tepid or hot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemperatureClass {
    /// A number.
    Cold,
    /// Equal stops but not a number; `infinitesimal` when both stops are 0.
    Tepid { infinitesimal: bool },
    /// Left stop strictly above the Right stop.
    Hot,
}

/// `RD` / `LD`: a count of moves, or undefined when the stop precondition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Defined(u32),
    Undefined,
}

impl Distance {
    pub fn value(self) -> Option<u32> {
        match self {
            Distance::Defined(d) => Some(d),
            Distance::Undefined => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Defined(d) => write!(f, "{d}"),
            Distance::Undefined => f.write_str("undefined"),
        }
    }
}

/// How a game with `RS <= 0` sits against the nimbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarComparison {
    /// `g <= *k`, with `k` the least such size.
    LeqSome(u32),
    /// `g` is greater than or confused with every nimber, and confused with at least one.
    ConfusedOrGreaterAll,
    /// `g > *k` for every `k`.
    GreaterAll,
}

/// A sum `g + h + *k` with `RS(g) <= 0` and `LS(h) >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarSystem {
    g: FormId,
    h: FormId,
    k: NimberSize,
}

impl StarSystem {
    pub fn new(arena: &mut Arena, g: FormId, h: FormId, k: NimberSize) -> Result<Self> {
        if arena.right_stop(g) > Dyadic::ZERO {
            return Err(Error::StarSystem(
                "right stop of the first component is positive",
            ));
        }
        if arena.left_stop(h) < Dyadic::ZERO {
            return Err(Error::StarSystem(
                "left stop of the second component is negative",
            ));
        }
        Ok(StarSystem { g, h, k })
    }

    pub fn g(&self) -> FormId {
        self.g
    }

    pub fn h(&self) -> FormId {
        self.h
    }

    pub fn k(&self) -> NimberSize {
        self.k
    }
}

/// Which players are guaranteed a winning first move by the distance rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarPrediction {
    LeftHasWinningMove,
    RightHasWinningMove,
    BothHaveWinningMoves,
}

impl StarPrediction {
    /// Whether an exact outcome is consistent with the prediction.
    pub fn consistent_with(self, outcome: Outcome) -> bool {
        match self {
            StarPrediction::LeftHasWinningMove => {
                matches!(outcome, Outcome::LeftWins | Outcome::Next)
            }
            StarPrediction::RightHasWinningMove => {
                matches!(outcome, Outcome::RightWins | Outcome::Next)
            }
            StarPrediction::BothHaveWinningMoves => outcome == Outcome::Next,
        }
    }
}

impl Arena {
    /// `(LS, RS)` of a canonical form.
    fn stops_canonical(&mut self, c: FormId) -> (Dyadic, Dyadic) {
        if let Some(s) = slot(&self.memo.stops, c) {
            return s;
        }
        let s = match self.number_value(c) {
            Some(x) => (x, x),
            None => {
                // A non-number always has options on both sides.
                let mut ls: Option<Dyadic> = None;
                for i in 0..self.left(c).len() {
                    let l = self.left(c)[i];
                    let rs = self.stops_canonical(l).1;
                    ls = Some(ls.map_or(rs, |m| m.max(rs)));
                }
                let mut rs: Option<Dyadic> = None;
                for i in 0..self.right(c).len() {
                    let r = self.right(c)[i];
                    let ls = self.stops_canonical(r).0;
                    rs = Some(rs.map_or(ls, |m| m.min(ls)));
                }
                (
                    ls.expect("non-number without Left options"),
                    rs.expect("non-number without Right options"),
                )
            }
        };
        store(&mut self.memo.stops, c, s);
        s
    }

    pub fn left_stop(&mut self, g: FormId) -> Dyadic {
        let c = self.canonical(g);
        self.stops_canonical(c).0
    }

    pub fn right_stop(&mut self, g: FormId) -> Dyadic {
        let c = self.canonical(g);
        self.stops_canonical(c).1
    }

    pub fn classify(&mut self, g: FormId) -> TemperatureClass {
        if self.is_number(g).is_some() {
            return TemperatureClass::Cold;
        }
        let c = self.canonical(g);
        let (ls, rs) = self.stops_canonical(c);
        if ls == rs {
            TemperatureClass::Tepid {
                infinitesimal: ls == Dyadic::ZERO,
            }
        } else {
            TemperatureClass::Hot
        }
    }

    /// Both stops zero. Unlike the tepid flag this includes 0 itself.
    pub fn is_infinitesimal(&mut self, g: FormId) -> bool {
        let c = self.canonical(g);
        self.stops_canonical(c) == (Dyadic::ZERO, Dyadic::ZERO)
    }

    /// Splits a tepid game into `x + ε` with `x = LS(g)` and `ε` infinitesimal.
    pub fn tepid_split(&mut self, g: FormId) -> Result<(Dyadic, FormId)> {
        if !matches!(self.classify(g), TemperatureClass::Tepid { .. }) {
            return Err(Error::NotTepid);
        }
        let x = self.left_stop(g);
        let c = self.canonical(g);
        let minus_x = self.dyadic_form(-x);
        Ok((x, self.add(c, minus_x)))
    }

    /// `g` and every position reachable from it, sorted by handle.
    pub fn followers(&self, g: FormId) -> Vec<FormId> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![g];
        while let Some(f) = stack.pop() {
            if seen.insert(f) {
                stack.extend(self.left(f).iter().chain(self.right(f)).copied());
            }
        }
        seen.into_iter().collect()
    }

    /// True when no follower of `g` equals `*n`.
    pub fn is_remote(&mut self, n: NimberSize, g: FormId) -> bool {
        let star = self.nimber(n);
        let fs = self.followers(g);
        !fs.into_iter().any(|f| self.canonical(f) == star)
    }

    /// Places a game with `RS(g) <= 0` relative to all nimbers.
    ///
    /// Only sizes up to `b + 1` are tested, `b` the canonical birthday: every
    /// larger nimber is remote for `g`, and outcomes of `g + *n` no longer
    /// change once `*n` is remote.
    pub fn star_comparison(&mut self, g: FormId) -> Result<StarComparison> {
        let c = self.canonical(g);
        let rs = self.stops_canonical(c).1;
        if rs > Dyadic::ZERO {
            return Err(Error::RightStopPositive(rs));
        }
        Ok(self.star_comparison_canonical(c))
    }

    pub(crate) fn star_comparison_bound(&self, c: FormId) -> u32 {
        self.formal_birthday(c) + 1
    }

    fn star_comparison_canonical(&mut self, c: FormId) -> StarComparison {
        let bound = self.star_comparison_bound(c);
        for k in 0..=bound {
            let s = self.star(k);
            if self.leq(c, s) {
                return StarComparison::LeqSome(k);
            }
        }
        for k in 0..=bound {
            let s = self.star(k);
            if !self.leq(s, c) {
                return StarComparison::ConfusedOrGreaterAll;
            }
        }
        StarComparison::GreaterAll
    }

    /// Right distance to a nimber or better; undefined unless `RS(g) <= 0`.
    pub fn rd(&mut self, g: FormId) -> Distance {
        let c = self.canonical(g);
        if self.stops_canonical(c).1 > Dyadic::ZERO {
            return Distance::Undefined;
        }
        Distance::Defined(self.rd_canonical(c))
    }

    /// Left distance to a nimber or better; undefined unless `LS(g) >= 0`.
    pub fn ld(&mut self, g: FormId) -> Distance {
        let c = self.canonical(g);
        let n = self.negate(c);
        self.rd(n)
    }

    /// The Right option attaining the minimum in the distance recursion
    /// (lowest handle on ties), or `None` when `RD(g)` is 0 or undefined.
    pub fn rd_optimal_option(&mut self, g: FormId) -> Option<FormId> {
        let c = self.canonical(g);
        if self.stops_canonical(c).1 > Dyadic::ZERO {
            return None;
        }
        if matches!(
            self.star_comparison_canonical(c),
            StarComparison::LeqSome(_)
        ) {
            return None;
        }
        Some(self.rd_step(c).1)
    }

    fn rd_canonical(&mut self, c: FormId) -> u32 {
        if let Some(d) = slot(&self.memo.rd, c) {
            return d;
        }
        let d = if matches!(
            self.star_comparison_canonical(c),
            StarComparison::LeqSome(_)
        ) {
            0
        } else {
            self.rd_step(c).0
        };
        store(&mut self.memo.rd, c, d);
        d
    }

    /// `1 + min over G^R with LS(G^R) <= 0 of max(RD(G^R), RD(G^RL) - 1)`,
    /// together with the minimizing option.
    fn rd_step(&mut self, c: FormId) -> (u32, FormId) {
        let mut best: Option<(i64, FormId)> = None;
        for i in 0..self.right(c).len() {
            let r = self.right(c)[i];
            if self.stops_canonical(r).0 > Dyadic::ZERO {
                continue;
            }
            let mut value = self.rd_canonical(r) as i64;
            for j in 0..self.left(r).len() {
                let rl = self.left(r)[j];
                value = value.max(self.rd_canonical(rl) as i64 - 1);
            }
            if best.is_none_or(|(b, _)| value < b) {
                best = Some((value, r));
            }
        }
        let (value, r) = best.expect("RS <= 0 guarantees a Right option with LS <= 0");
        ((1 + value) as u32, r)
    }

    /// Distance-rule prediction for a star system.
    ///
    /// Right has a winning move when `LD(h) - RD(g) >= 1`; Left has one when
    /// `RD(h) - LD(g) >= 1`. When `h + g + *k` is itself a star system the
    /// rule is applied to that ordering as well.
    pub fn star_system_prediction(&mut self, s: &StarSystem) -> Option<StarPrediction> {
        let (mut left, mut right) = self.distance_rule(s.g, s.h);
        if self.right_stop(s.h) <= Dyadic::ZERO && self.left_stop(s.g) >= Dyadic::ZERO {
            let (l, r) = self.distance_rule(s.h, s.g);
            left |= l;
            right |= r;
        }
        match (left, right) {
            (true, true) => Some(StarPrediction::BothHaveWinningMoves),
            (true, false) => Some(StarPrediction::LeftHasWinningMove),
            (false, true) => Some(StarPrediction::RightHasWinningMove),
            (false, false) => None,
        }
    }

    fn distance_rule(&mut self, g: FormId, h: FormId) -> (bool, bool) {
        let gap = |a: Distance, b: Distance| match (a, b) {
            (Distance::Defined(a), Distance::Defined(b)) => a as i64 - b as i64 >= 1,
            _ => false,
        };
        let right = gap(self.ld(h), self.rd(g));
        let left = gap(self.rd(h), self.ld(g));
        (left, right)
    }
}
