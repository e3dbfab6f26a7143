//! Hash-consed storage for short game forms.
//!
//! Every form lives in a single append-only [`Arena`] and is addressed by a
//! [`FormId`]. Structurally identical forms are interned to the same handle,
//! so handle equality is structural equality. Every derived quantity
//! (negation, sums, outcomes, comparisons, canonical forms, stops, ...) is
//! memoized in side tables keyed on handles.
//!
//! The arena is not internally synchronized. All operations take `&mut self`
//! and one arena is confined to one thread; clone the day sets you need into
//! a fresh arena per worker if you want parallelism.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// Birthdays and nimber sizes stay below this bound.
pub const MAX_BIRTHDAY: u32 = u16::MAX as u32;

/// Opaque handle to an interned game form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormId(u32);

impl FormId {
    /// The form `{ | }`. Every arena interns it first.
    pub const ZERO: FormId = FormId(0);

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Outcome class under normal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Left wins whoever moves first.
    LeftWins,
    /// Right wins whoever moves first.
    RightWins,
    /// The second player wins.
    Previous,
    /// The first player wins.
    Next,
}

impl Outcome {
    pub fn from_first_player_wins(left_first_wins: bool, right_first_wins: bool) -> Self {
        match (left_first_wins, right_first_wins) {
            (true, true) => Outcome::Next,
            (true, false) => Outcome::LeftWins,
            (false, true) => Outcome::RightWins,
            (false, false) => Outcome::Previous,
        }
    }

    /// The outcome of the negated game.
    pub fn mirror(self) -> Self {
        match self {
            Outcome::LeftWins => Outcome::RightWins,
            Outcome::RightWins => Outcome::LeftWins,
            o => o,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::LeftWins => "L",
            Outcome::RightWins => "R",
            Outcome::Previous => "P",
            Outcome::Next => "N",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Outcome::LeftWins => "LeftWins",
            Outcome::RightWins => "RightWins",
            Outcome::Previous => "Previous",
            Outcome::Next => "Next",
        };
        f.write_str(name)
    }
}

/// A game form: two finite, sorted, duplicate-free option sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameForm {
    pub left: Box<[FormId]>,
    pub right: Box<[FormId]>,
}

#[derive(Debug)]
struct Node {
    form: GameForm,
    birthday: u32,
}

/// Memo tables. Per-form tables are dense vectors indexed by handle.
#[derive(Debug, Default)]
pub(crate) struct Memo {
    pub negate: Vec<Option<FormId>>,
    pub outcome: Vec<Option<(bool, bool)>>,
    pub canonical: Vec<Option<FormId>>,
    pub number: Vec<Option<Option<Dyadic>>>,
    pub stops: Vec<Option<(Dyadic, Dyadic)>>,
    pub rd: Vec<Option<u32>>,
    pub sum: FxHashMap<(FormId, FormId), FormId>,
    pub add: FxHashMap<(FormId, FormId), FormId>,
    pub leq: FxHashMap<(FormId, FormId), bool>,
    pub dyadic: FxHashMap<Dyadic, FormId>,
    pub nimber: Vec<FormId>,
}

pub(crate) fn slot<T: Copy>(table: &[Option<T>], g: FormId) -> Option<T> {
    table.get(g.0 as usize).copied().flatten()
}

pub(crate) fn store<T>(table: &mut Vec<Option<T>>, g: FormId, value: T) {
    let i = g.0 as usize;
    if table.len() <= i {
        table.resize_with(i + 1, || None);
    }
    table[i] = Some(value);
}

/// Append-only, interning store of game forms plus their memo tables.
#[derive(Debug)]
pub struct Arena {
    nodes: Vec<Node>,
    index: FxHashMap<GameForm, FormId>,
    pub(crate) memo: Memo,
}

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}

impl Arena {
    pub fn new() -> Self {
        let mut arena = Arena {
            nodes: Vec::new(),
            index: FxHashMap::default(),
            memo: Memo::default(),
        };
        let zero = arena.intern(Vec::new(), Vec::new());
        debug_assert_eq!(zero, FormId::ZERO);
        arena
    }

    /// Number of distinct forms interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, g: FormId) -> bool {
        (g.0 as usize) < self.nodes.len()
    }

    /// Interns `{ left | right }` after validating every handle.
    pub fn make_form(&mut self, left: &[FormId], right: &[FormId]) -> Result<FormId> {
        for &g in left.iter().chain(right) {
            if !self.contains(g) {
                return Err(Error::InvalidHandle(g.0));
            }
        }
        let birthday = left
            .iter()
            .chain(right)
            .map(|&g| self.nodes[g.0 as usize].birthday + 1)
            .max()
            .unwrap_or(0);
        if birthday > MAX_BIRTHDAY {
            return Err(Error::BirthdayGuard(birthday));
        }
        Ok(self.intern(left.to_vec(), right.to_vec()))
    }

    /// Interning without handle validation; callers pass handles from this arena.
    pub(crate) fn intern(&mut self, mut left: Vec<FormId>, mut right: Vec<FormId>) -> FormId {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let form = GameForm {
            left: left.into_boxed_slice(),
            right: right.into_boxed_slice(),
        };
        if let Some(&id) = self.index.get(&form) {
            return id;
        }
        let birthday = form
            .left
            .iter()
            .chain(form.right.iter())
            .map(|&g| self.nodes[g.0 as usize].birthday + 1)
            .max()
            .unwrap_or(0);
        assert!(birthday <= MAX_BIRTHDAY, "birthday guard exceeded");
        let id = FormId(u32::try_from(self.nodes.len()).expect("arena exhausted"));
        self.nodes.push(Node {
            form: form.clone(),
            birthday,
        });
        self.index.insert(form, id);
        id
    }

    pub fn form(&self, g: FormId) -> &GameForm {
        &self.nodes[g.0 as usize].form
    }

    pub fn left(&self, g: FormId) -> &[FormId] {
        &self.nodes[g.0 as usize].form.left
    }

    pub fn right(&self, g: FormId) -> &[FormId] {
        &self.nodes[g.0 as usize].form.right
    }

    /// Height of the game tree of this form.
    pub fn formal_birthday(&self, g: FormId) -> u32 {
        self.nodes[g.0 as usize].birthday
    }

    pub fn negate(&mut self, g: FormId) -> FormId {
        if let Some(n) = slot(&self.memo.negate, g) {
            return n;
        }
        let left: Vec<FormId> = self.right(g).to_vec();
        let right: Vec<FormId> = self.left(g).to_vec();
        let left = left.into_iter().map(|x| self.negate(x)).collect();
        let right = right.into_iter().map(|x| self.negate(x)).collect();
        let n = self.intern(left, right);
        store(&mut self.memo.negate, g, n);
        store(&mut self.memo.negate, n, g);
        n
    }

    /// Form-level disjunctive sum: every option moves in exactly one component.
    pub fn sum(&mut self, g: FormId, h: FormId) -> FormId {
        if g == FormId::ZERO {
            return h;
        }
        if h == FormId::ZERO {
            return g;
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.memo.sum.get(&key) {
            return s;
        }
        let mut left = Vec::with_capacity(self.left(g).len() + self.left(h).len());
        for i in 0..self.left(g).len() {
            let gl = self.left(g)[i];
            left.push(self.sum(gl, h));
        }
        for i in 0..self.left(h).len() {
            let hl = self.left(h)[i];
            left.push(self.sum(g, hl));
        }
        let mut right = Vec::with_capacity(self.right(g).len() + self.right(h).len());
        for i in 0..self.right(g).len() {
            let gr = self.right(g)[i];
            right.push(self.sum(gr, h));
        }
        for i in 0..self.right(h).len() {
            let hr = self.right(h)[i];
            right.push(self.sum(g, hr));
        }
        let s = self.intern(left, right);
        self.memo.sum.insert(key, s);
        s
    }

    /// Sum of a list of forms; the empty sum is 0.
    pub fn sum_all(&mut self, forms: &[FormId]) -> FormId {
        forms.iter().fold(FormId::ZERO, |acc, &g| self.sum(acc, g))
    }

    /// `k` copies of `g` (negative `k` adds copies of `-g`).
    pub fn multiple(&mut self, g: FormId, k: i64) -> FormId {
        let base = if k < 0 { self.negate(g) } else { g };
        (0..k.unsigned_abs()).fold(FormId::ZERO, |acc, _| self.sum(acc, base))
    }

    fn first_player_wins(&mut self, g: FormId) -> (bool, bool) {
        if let Some(w) = slot(&self.memo.outcome, g) {
            return w;
        }
        let mut left_wins = false;
        for i in 0..self.left(g).len() {
            let gl = self.left(g)[i];
            if !self.first_player_wins(gl).1 {
                left_wins = true;
                break;
            }
        }
        let mut right_wins = false;
        for i in 0..self.right(g).len() {
            let gr = self.right(g)[i];
            if !self.first_player_wins(gr).0 {
                right_wins = true;
                break;
            }
        }
        store(&mut self.memo.outcome, g, (left_wins, right_wins));
        (left_wins, right_wins)
    }

    /// Outcome class by direct game-tree search.
    pub fn outcome(&mut self, g: FormId) -> Outcome {
        let (l, r) = self.first_player_wins(g);
        Outcome::from_first_player_wins(l, r)
    }

    /// `g <= h` as values.
    ///
    /// Uses the recursive characterization (no `g^L >= h`, no `h^R <= g`),
    /// which agrees with testing `h - g` for a Right-first loss.
    pub fn leq(&mut self, g: FormId, h: FormId) -> bool {
        if g == h {
            return true;
        }
        if let Some(&b) = self.memo.leq.get(&(g, h)) {
            return b;
        }
        let mut result = true;
        for i in 0..self.left(g).len() {
            let gl = self.left(g)[i];
            if self.leq(h, gl) {
                result = false;
                break;
            }
        }
        if result {
            for i in 0..self.right(h).len() {
                let hr = self.right(h)[i];
                if self.leq(hr, g) {
                    result = false;
                    break;
                }
            }
        }
        self.memo.leq.insert((g, h), result);
        result
    }

    pub fn lt(&mut self, g: FormId, h: FormId) -> bool {
        self.leq(g, h) && !self.leq(h, g)
    }

    pub fn eq_value(&mut self, g: FormId, h: FormId) -> bool {
        self.leq(g, h) && self.leq(h, g)
    }

    /// Value comparison: `Some(ordering)` or `None` when confused.
    pub fn compare(&mut self, g: FormId, h: FormId) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        match (self.leq(g, h), self.leq(h, g)) {
            (true, true) => Some(Equal),
            (true, false) => Some(Less),
            (false, true) => Some(Greater),
            (false, false) => None,
        }
    }
}
