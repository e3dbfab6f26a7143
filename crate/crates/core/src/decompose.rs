//! Decomposability search: writing `G = H + J` with both summands born
//! strictly earlier than `G`.

use crate::dayset::{DayStore, MAX_DAY};
use crate::error::{Error, Result};
use crate::form::{Arena, FormId};

/// Which birthday of the target the search is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BirthdayMode {
    /// The birthday of the canonical form (the value).
    #[default]
    Value,
    /// The formal birthday of the form exactly as given.
    Form,
}

/// An unordered pair of summands, reported with `h <= j` by handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decomposition {
    pub h: FormId,
    pub j: FormId,
    /// Birthdays add up to that of the target and neither summand is 0.
    pub strong: bool,
}

impl Arena {
    /// All value-level decompositions of `g` (canonical representatives).
    pub fn decompose(&mut self, g: FormId, days: &mut DayStore) -> Result<Vec<Decomposition>> {
        self.decompose_with(g, days, BirthdayMode::Value)
    }

    pub fn decompose_with(
        &mut self,
        g: FormId,
        days: &mut DayStore,
        mode: BirthdayMode,
    ) -> Result<Vec<Decomposition>> {
        let target = self.canonical(g);
        let birthday = match mode {
            BirthdayMode::Value => self.formal_birthday(target),
            BirthdayMode::Form => self.formal_birthday(g),
        };
        if birthday > MAX_DAY + 1 {
            return Err(Error::DecomposeGuard(birthday));
        }
        if birthday == 0 {
            return Ok(Vec::new());
        }
        let earlier = days.get(self, birthday - 1)?.clone();
        let mut found = Vec::new();
        for &h in earlier.values() {
            let j = self.subtract(target, h);
            if h <= j && earlier.contains(j) {
                let strong = h != FormId::ZERO
                    && j != FormId::ZERO
                    && self.formal_birthday(h) + self.formal_birthday(j) == birthday;
                found.push(Decomposition { h, j, strong });
            }
        }
        found.sort();
        Ok(found)
    }

    pub fn strong_decompositions(
        &mut self,
        g: FormId,
        days: &mut DayStore,
    ) -> Result<Vec<Decomposition>> {
        let mut all = self.decompose(g, days)?;
        all.retain(|d| d.strong);
        Ok(all)
    }

    pub fn is_decomposable(&mut self, g: FormId, days: &mut DayStore) -> Result<bool> {
        Ok(!self.decompose(g, days)?.is_empty())
    }

    pub fn is_strongly_decomposable(&mut self, g: FormId, days: &mut DayStore) -> Result<bool> {
        Ok(!self.strong_decompositions(g, days)?.is_empty())
    }
}
