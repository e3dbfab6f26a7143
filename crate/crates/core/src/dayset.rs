//! Values born by day `d`.
//!
//! Day `d` is generated from day `d - 1`: every canonical value born by day
//! `d` is `{L | R}` for antichains `L`, `R` of day `d - 1` values (dominated
//! options never survive canonicalization), so it suffices to reduce those.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::form::{Arena, FormId};

/// Largest day the engine enumerates.
pub const MAX_DAY: u32 = 3;

/// Environment variable naming the directory for day-set cache files.
pub const CACHE_DIR_ENV: &str = "CGT_CACHE_DIR";

/// The distinct values born by a given day, as canonical forms sorted by
/// their printed notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaySet {
    day: u32,
    values: Vec<FormId>,
    members: FxHashSet<FormId>,
}

impl DaySet {
    fn from_values(arena: &Arena, day: u32, values: impl IntoIterator<Item = FormId>) -> Self {
        let mut keyed: Vec<(String, FormId)> = values
            .into_iter()
            .collect::<FxHashSet<_>>()
            .into_iter()
            .map(|g| (arena.print_canonical(g), g))
            .collect();
        keyed.sort();
        let values: Vec<FormId> = keyed.into_iter().map(|(_, g)| g).collect();
        let members = values.iter().copied().collect();
        DaySet {
            day,
            values,
            members,
        }
    }

    pub fn day(&self) -> u32 {
        self.day
    }

    pub fn values(&self) -> &[FormId] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Membership of a canonical form.
    pub fn contains(&self, canonical: FormId) -> bool {
        self.members.contains(&canonical)
    }

    /// Serializes in the cache format: a `dayset <d> <count>` header, then
    /// one printed value per line.
    pub fn to_cache_string(&self, arena: &Arena) -> String {
        let mut out = format!("dayset {} {}\n", self.day, self.values.len());
        for &g in &self.values {
            out.push_str(&arena.print_canonical(g));
            out.push('\n');
        }
        out
    }

    /// Parses the cache format, checking the header and every entry.
    pub fn from_cache_str(arena: &mut Arena, text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache("empty file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (day, count) = match fields.as_slice() {
            ["dayset", d, n] => (
                d.parse::<u32>()
                    .map_err(|_| Error::Cache(format!("bad day `{d}`")))?,
                n.parse::<usize>()
                    .map_err(|_| Error::Cache(format!("bad count `{n}`")))?,
            ),
            _ => return Err(Error::Cache(format!("bad header `{header}`"))),
        };
        let mut values = Vec::with_capacity(count);
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let g = arena.parse(line)?;
            let c = arena.canonical(g);
            if arena.formal_birthday(c) > day {
                return Err(Error::Cache(format!(
                    "line {}: `{line}` is not born by day {day}",
                    i + 2
                )));
            }
            values.push(c);
        }
        let set = DaySet::from_values(arena, day, values);
        if set.len() != count {
            return Err(Error::Cache(format!(
                "header promises {count} values, found {} distinct",
                set.len()
            )));
        }
        Ok(set)
    }
}

/// All antichains of `items` under the value order, including the empty one.
fn antichains(arena: &mut Arena, items: &[FormId]) -> Vec<Vec<FormId>> {
    let n = items.len();
    let mut comparable = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..i {
            let c = arena.leq(items[i], items[j]) || arena.leq(items[j], items[i]);
            comparable[i][j] = c;
            comparable[j][i] = c;
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        start: usize,
        items: &[FormId],
        comparable: &[Vec<bool>],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<FormId>>,
    ) {
        out.push(current.iter().map(|&i| items[i]).collect());
        for i in start..items.len() {
            if current.iter().all(|&j| !comparable[i][j]) {
                current.push(i);
                extend(i + 1, items, comparable, current, out);
                current.pop();
            }
        }
    }
    extend(0, items, &comparable, &mut current, &mut out);
    out
}

/// Every value born by `day` (at most [`MAX_DAY`]).
pub fn enumerate_values(arena: &mut Arena, day: u32) -> Result<DaySet> {
    if day > MAX_DAY {
        return Err(Error::DayGuard(day));
    }
    let mut current = DaySet::from_values(arena, 0, [FormId::ZERO]);
    for d in 1..=day {
        current = next_day(arena, &current, d);
    }
    Ok(current)
}

fn next_day(arena: &mut Arena, previous: &DaySet, day: u32) -> DaySet {
    let chains = antichains(arena, previous.values());
    let mut found = FxHashSet::default();
    for l in &chains {
        for r in &chains {
            found.insert(arena.reduce(l.clone(), r.clone()));
        }
    }
    DaySet::from_values(arena, day, found)
}

/// Lazily computed day sets, optionally persisted to a cache directory.
#[derive(Debug, Default)]
pub struct DayStore {
    sets: Vec<Option<DaySet>>,
    cache_dir: Option<PathBuf>,
}

impl DayStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cache files are read from and written to `dir`.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        DayStore {
            sets: Vec::new(),
            cache_dir: Some(dir.into()),
        }
    }

    /// Uses `$CGT_CACHE_DIR` when it is set.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_cache_dir(dir),
            _ => Self::new(),
        }
    }

    pub fn cache_path(&self, day: u32) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|dir| dir.join(format!("dayset-{day}.txt")))
    }

    /// Installs an already computed set.
    pub fn insert(&mut self, set: DaySet) {
        let d = set.day as usize;
        if self.sets.len() <= d {
            self.sets.resize_with(d + 1, || None);
        }
        self.sets[d] = Some(set);
    }

    /// Loads `path` as the set for its header day.
    pub fn load_file(&mut self, arena: &mut Arena, path: &Path) -> Result<u32> {
        let text = fs::read_to_string(path)?;
        let set = DaySet::from_cache_str(arena, &text)?;
        let day = set.day;
        self.insert(set);
        Ok(day)
    }

    /// The set for `day`: memory, then cache file, then enumeration. Day 3 is
    /// written back to the cache directory after it is first enumerated.
    pub fn get(&mut self, arena: &mut Arena, day: u32) -> Result<&DaySet> {
        if day > MAX_DAY {
            return Err(Error::DayGuard(day));
        }
        if self.sets.get(day as usize).is_some_and(Option::is_some) {
            return Ok(self.sets[day as usize].as_ref().unwrap());
        }
        if let Some(path) = self.cache_path(day).filter(|p| p.exists()) {
            let text = fs::read_to_string(&path)?;
            let set = DaySet::from_cache_str(arena, &text)?;
            if set.day != day {
                return Err(Error::Cache(format!(
                    "{} holds day {}, expected {day}",
                    path.display(),
                    set.day
                )));
            }
            self.insert(set);
        } else {
            let set = if day == 0 {
                enumerate_values(arena, 0)?
            } else {
                let previous = self.get(arena, day - 1)?.clone();
                next_day(arena, &previous, day)
            };
            if day == MAX_DAY {
                self.persist(arena, &set)?;
            }
            self.insert(set);
        }
        Ok(self.sets[day as usize].as_ref().unwrap())
    }

    fn persist(&self, arena: &Arena, set: &DaySet) -> Result<()> {
        let Some(path) = self.cache_path(set.day) else {
            return Ok(());
        };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        let mut file = fs::File::create(&tmp)?;
        file.write_all(set.to_cache_string(arena).as_bytes())?;
        file.sync_all()?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}
