//! Canonical forms, numbers and nimbers.

use std::fmt;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::form::{slot, store, Arena, FormId, MAX_BIRTHDAY};

/// Size of a nim heap, bounded by the engine guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NimberSize(u32);

impl NimberSize {
    pub fn new(k: u32) -> Result<Self> {
        if k > MAX_BIRTHDAY {
            Err(Error::NimberGuard(k))
        } else {
            Ok(NimberSize(k))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for NimberSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Carry-free binary addition.
pub fn nim_sum(a: u32, b: u32) -> u32 {
    a ^ b
}

/// Birthday of the number `x`: `|x|` for integers, `m + 1 + n` for
/// `|x| = m + r/2^n` with `r` odd.
pub fn number_birthday(x: Dyadic) -> u32 {
    let m = x.integer_part() as u32;
    if x.is_integer() {
        m
    } else {
        m + 1 + x.exponent()
    }
}

impl Arena {
    /// The canonical form of the value of `g`.
    pub fn canonical(&mut self, g: FormId) -> FormId {
        if let Some(c) = slot(&self.memo.canonical, g) {
            return c;
        }
        let left: Vec<FormId> = self.left(g).to_vec();
        let right: Vec<FormId> = self.right(g).to_vec();
        let left = left.into_iter().map(|x| self.canonical(x)).collect();
        let right = right.into_iter().map(|x| self.canonical(x)).collect();
        let c = self.reduce(left, right);
        store(&mut self.memo.canonical, g, c);
        c
    }

    pub fn is_canonical(&mut self, g: FormId) -> bool {
        self.canonical(g) == g
    }

    /// Canonical form of `{ left | right }` given canonical options:
    /// bypasses reversible options, then drops dominated ones.
    pub(crate) fn reduce(&mut self, mut left: Vec<FormId>, mut right: Vec<FormId>) -> FormId {
        // Reversibility is tested against the value of the original form,
        // which every intermediate form is equal to.
        let g = self.intern(left.clone(), right.clone());
        if let Some(c) = slot(&self.memo.canonical, g) {
            return c;
        }
        loop {
            let mut changed = false;

            let mut bypassed = Vec::with_capacity(left.len());
            let mut work = left;
            while let Some(l) = work.pop() {
                let mut reverse = None;
                for i in 0..self.right(l).len() {
                    let lr = self.right(l)[i];
                    if self.leq(lr, g) {
                        reverse = Some(lr);
                        break;
                    }
                }
                match reverse {
                    Some(lr) => {
                        work.extend(self.left(lr).iter().copied());
                        changed = true;
                    }
                    None => bypassed.push(l),
                }
            }
            let mut work = right;
            let mut bypassed_r = Vec::with_capacity(work.len());
            while let Some(r) = work.pop() {
                let mut reverse = None;
                for i in 0..self.left(r).len() {
                    let rl = self.left(r)[i];
                    if self.leq(g, rl) {
                        reverse = Some(rl);
                        break;
                    }
                }
                match reverse {
                    Some(rl) => {
                        work.extend_from_slice(self.right(rl));
                        changed = true;
                    }
                    None => bypassed_r.push(r),
                }
            }

            left = self.undominated(bypassed, true);
            right = self.undominated(bypassed_r, false);
            if !changed {
                break;
            }
        }
        let c = self.intern(left, right);
        store(&mut self.memo.canonical, g, c);
        store(&mut self.memo.canonical, c, c);
        c
    }

    /// Keeps the maximal (Left) or minimal (Right) options. Options are
    /// canonical, so equal values already share a handle.
    fn undominated(&mut self, mut options: Vec<FormId>, for_left: bool) -> Vec<FormId> {
        options.sort_unstable();
        options.dedup();
        let mut keep = Vec::with_capacity(options.len());
        for (i, &x) in options.iter().enumerate() {
            let dominated = options.iter().enumerate().any(|(j, &y)| {
                i != j
                    && if for_left {
                        self.leq(x, y)
                    } else {
                        self.leq(y, x)
                    }
            });
            if !dominated {
                keep.push(x);
            }
        }
        keep
    }

    /// Canonical form of `g + h`.
    pub fn add(&mut self, g: FormId, h: FormId) -> FormId {
        let (g, h) = (self.canonical(g), self.canonical(h));
        if g == FormId::ZERO {
            return h;
        }
        if h == FormId::ZERO {
            return g;
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.memo.add.get(&key) {
            return s;
        }
        let s = match (self.number_value(g), self.number_value(h)) {
            (Some(x), Some(y)) => self.dyadic_form(x + y),
            _ => {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for i in 0..self.left(g).len() {
                    let gl = self.left(g)[i];
                    left.push(self.add(gl, h));
                }
                for i in 0..self.left(h).len() {
                    let hl = self.left(h)[i];
                    left.push(self.add(g, hl));
                }
                for i in 0..self.right(g).len() {
                    let gr = self.right(g)[i];
                    right.push(self.add(gr, h));
                }
                for i in 0..self.right(h).len() {
                    let hr = self.right(h)[i];
                    right.push(self.add(g, hr));
                }
                self.reduce(left, right)
            }
        };
        self.memo.add.insert(key, s);
        s
    }

    /// Canonical form of `g - h`.
    pub fn subtract(&mut self, g: FormId, h: FormId) -> FormId {
        let nh = self.negate(h);
        self.add(g, nh)
    }

    /// Birthday of the value: the formal birthday of the canonical form.
    pub fn value_birthday(&mut self, g: FormId) -> u32 {
        let c = self.canonical(g);
        self.formal_birthday(c)
    }

    /// Canonical form of the number `x`.
    pub fn dyadic_form(&mut self, x: Dyadic) -> FormId {
        if x == Dyadic::ZERO {
            return FormId::ZERO;
        }
        if let Some(&g) = self.memo.dyadic.get(&x) {
            return g;
        }
        let g = if x.is_integer() {
            let n = x.num();
            if n > 0 {
                let prev = self.dyadic_form(Dyadic::integer(n - 1));
                self.intern(vec![prev], vec![])
            } else {
                let next = self.dyadic_form(Dyadic::integer(n + 1));
                self.intern(vec![], vec![next])
            }
        } else {
            let lo = self.dyadic_form(Dyadic::new(x.num() - 1, x.exponent()));
            let hi = self.dyadic_form(Dyadic::new(x.num() + 1, x.exponent()));
            self.intern(vec![lo], vec![hi])
        };
        self.memo.dyadic.insert(x, g);
        store(&mut self.memo.canonical, g, g);
        store(&mut self.memo.number, g, Some(x));
        g
    }

    /// The number `g` equals, if any.
    pub fn is_number(&mut self, g: FormId) -> Option<Dyadic> {
        let c = self.canonical(g);
        self.number_value(c)
    }

    /// Number recognition on a canonical form.
    pub(crate) fn number_value(&mut self, c: FormId) -> Option<Dyadic> {
        if let Some(v) = slot(&self.memo.number, c) {
            return v;
        }
        let v = self.recognize_number(c);
        store(&mut self.memo.number, c, v);
        v
    }

    fn recognize_number(&mut self, c: FormId) -> Option<Dyadic> {
        if self.left(c).len() > 1 || self.right(c).len() > 1 {
            return None;
        }
        let lo = match self.left(c).first().copied() {
            Some(l) => Some(self.number_value(l)?),
            None => None,
        };
        let hi = match self.right(c).first().copied() {
            Some(r) => Some(self.number_value(r)?),
            None => None,
        };
        Dyadic::simplest_between(lo, hi)
    }

    /// The canonical nimber `*k`.
    pub fn nimber(&mut self, k: NimberSize) -> FormId {
        let k = k.get() as usize;
        if self.memo.nimber.is_empty() {
            self.memo.nimber.push(FormId::ZERO);
        }
        while self.memo.nimber.len() <= k {
            let options = self.memo.nimber.clone();
            let n = self.intern(options.clone(), options);
            store(&mut self.memo.canonical, n, n);
            self.memo.nimber.push(n);
        }
        self.memo.nimber[k]
    }

    /// `*k` for a `k` known to be within the guard.
    pub fn star(&mut self, k: u32) -> FormId {
        self.nimber(NimberSize::new(k).expect("nimber size guard"))
    }

    /// The `k` with `g = *k`, if any. Decided on the canonical form: a
    /// canonical nimber has options exactly `0, *, ..., *(k-1)` on both sides.
    pub fn is_nimber(&mut self, g: FormId) -> Option<NimberSize> {
        let c = self.canonical(g);
        let k = self.left(c).len() as u32;
        if self.left(c) != self.right(c) {
            return None;
        }
        let expected = self.star(k);
        (expected == c).then_some(NimberSize(k))
    }
}
