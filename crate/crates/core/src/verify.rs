//! Self-check suites behind `cgt verify`.
//!
//! Each suite runs a family of exhaustive or seeded-random checks and
//! returns one [`Check`] line per property.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{Distance, StarComparison, StarSystem, TemperatureClass};
use crate::canonical::{nim_sum, number_birthday, NimberSize};
use crate::dayset::DayStore;
use crate::dyadic::Dyadic;
use crate::endgame::{best_nim_move, best_number_move, Player};
use crate::error::{Error, Result};
use crate::form::{Arena, FormId, Outcome};
use crate::hackenbush::{BrgString, Edge};

/// Seed for every sampled check.
pub const SEED: u64 = 0x05ee_dc67;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Birthdays,
    Daysets,
    Numbers,
    Nimbers,
    Distance,
    Stops,
    StarSystems,
    Hackenbush,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Birthdays,
        Suite::Daysets,
        Suite::Numbers,
        Suite::Nimbers,
        Suite::Distance,
        Suite::Stops,
        Suite::StarSystems,
        Suite::Hackenbush,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Birthdays => "birthdays",
            Suite::Daysets => "daysets",
            Suite::Numbers => "numbers",
            Suite::Nimbers => "nimbers",
            Suite::Distance => "distance",
            Suite::Stops => "stops",
            Suite::StarSystems => "starsystems",
            Suite::Hackenbush => "hackenbush",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// One verified property.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(f, "FAIL {} ({} cases)", self.name, self.cases)?;
            for d in &self.failures {
                write!(f, "\n     {d}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.suite.name())?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, arena: &mut Arena, days: &mut DayStore) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Birthdays => birthdays(arena),
        Suite::Daysets => daysets(arena, days)?,
        Suite::Numbers => numbers(arena, days)?,
        Suite::Nimbers => nimbers(arena, days)?,
        Suite::Distance => distance(arena, days)?,
        Suite::Stops => stops(arena, days)?,
        Suite::StarSystems => star_systems(arena, days)?,
        Suite::Hackenbush => hackenbush(arena),
    };
    Ok(SuiteReport { suite, checks })
}

/// Every dyadic whose birthday is at most `day`.
pub fn numbers_born_by(day: u32) -> Vec<Dyadic> {
    let mut out = Vec::new();
    for m in 0..=day as u64 {
        for n in 0..day {
            for r in (1..1u64 << n).step_by(2) {
                let x = Dyadic::from_parts(false, m, r, n);
                if number_birthday(x) <= day {
                    out.push(x);
                    out.push(-x);
                }
            }
        }
        let x = Dyadic::integer(m as i64);
        out.push(x);
        if m > 0 {
            out.push(-x);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn sample(values: &[FormId], count: usize, rng: &mut ChaCha8Rng) -> Vec<FormId> {
    (0..count)
        .map(|_| values[rng.random_range(0..values.len())])
        .collect()
}

fn birthdays(a: &mut Arena) -> Vec<Check> {
    let mut formula =
        Check::new("number birthday formula matches canonical forms (m <= 3, n <= 4)");
    for negative in [false, true] {
        for m in 0..=3u64 {
            for n in 0..=4u32 {
                let rs: Vec<u64> = if n == 0 {
                    vec![0]
                } else {
                    (1..1 << n).step_by(2).collect()
                };
                for r in rs {
                    let x = Dyadic::from_parts(negative, m, r, n);
                    let g = a.dyadic_form(x);
                    let got = a.value_birthday(g);
                    let want = number_birthday(x);
                    formula.expect(got == want, || format!("{x}: form {got}, formula {want}"));
                }
            }
        }
    }
    let mut instances = Check::new("b(7/4) = 4, b(1) = 1, b(3/4) = 3");
    for (s, b) in [("7/4", 4), ("1", 1), ("3/4", 3)] {
        let g = a.dyadic_form(s.parse().unwrap());
        let got = a.value_birthday(g);
        instances.expect(got == b, || format!("b({s}) = {got}"));
    }
    let mut translation = Check::new("b(x + *n) = b(x) + n for |x| <= 2, exponent <= 2, n <= 4");
    for x in numbers_born_by(5) {
        if x.abs() > Dyadic::integer(2) || x.exponent() > 2 {
            continue;
        }
        for n in 0..=4 {
            let xf = a.dyadic_form(x);
            let s = a.star(n);
            let sum = a.sum(xf, s);
            let got = a.value_birthday(sum);
            let want = number_birthday(x) + n;
            translation.expect(got == want, || {
                format!("b({x} + *{n}) = {got}, want {want}")
            });
        }
    }
    let mut nimbers = Check::new("b(*j) = j for j <= 16");
    for j in 0..=16 {
        let s = a.star(j);
        nimbers.expect(a.value_birthday(s) == j, || format!("b(*{j})"));
    }
    vec![formula, instances, translation, nimbers]
}

/// All forms whose options are drawn from `forms`, deduplicated by value
/// with pairwise game-tree comparisons only.
fn naive_values(a: &mut Arena, forms: &[FormId]) -> Vec<FormId> {
    let n = forms.len();
    let subsets: Vec<Vec<FormId>> = (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| forms[i])
                .collect()
        })
        .collect();
    let mut reps: Vec<FormId> = Vec::new();
    for l in &subsets {
        for r in &subsets {
            let g = a.make_form(l, r).expect("valid handles");
            let mut fresh = true;
            for &h in &reps {
                let d = a.negate(h);
                let diff = a.sum(g, d);
                if a.outcome(diff) == Outcome::Previous {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(g);
            }
        }
    }
    reps
}

fn daysets(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let mut sizes = Check::new("day-set sizes 1, 4, 22, 1474");
    let mut cross =
        Check::new("antichain generator agrees with the all-subsets generator (days <= 2)");
    let mut members = Check::new("day-set members are canonical, born in time, and nested");
    let mut reps = vec![FormId::ZERO];
    let expected = [1, 4, 22, 1474];
    let mut previous: Option<Vec<FormId>> = None;
    for day in 0..=3u32 {
        let set = days.get(a, day)?.clone();
        sizes.expect(set.len() == expected[day as usize], || {
            format!("day {day}: {} values", set.len())
        });
        for &g in set.values() {
            let ok = a.canonical(g) == g && a.formal_birthday(g) <= day;
            members.expect(ok, || format!("day {day}: {}", a.print_canonical(g)));
        }
        if let Some(prev) = &previous {
            members.expect(prev.iter().all(|&g| set.contains(g)), || {
                format!("day {} not contained in day {day}", day - 1)
            });
        }
        if (1..=2).contains(&day) {
            reps = naive_values(a, &reps);
            let mut naive: Vec<FormId> = reps.iter().map(|&g| a.canonical(g)).collect();
            naive.sort();
            let mut fast = set.values().to_vec();
            fast.sort();
            cross.expect(naive == fast, || {
                format!(
                    "day {day}: naive {} vs generator {}",
                    naive.len(),
                    fast.len()
                )
            });
        }
        previous = Some(set.values().to_vec());
    }
    let mut pairwise = Check::new("day-2 members are pairwise value-distinct");
    let d2 = days.get(a, 2)?.clone();
    for (i, &g) in d2.values().iter().enumerate() {
        for &h in &d2.values()[..i] {
            pairwise.expect(!a.eq_value(g, h), || {
                format!("{} = {}", a.print_canonical(g), a.print_canonical(h))
            });
        }
    }
    Ok(vec![sizes, cross, members, pairwise])
}

fn numbers(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let mut iff = Check::new("numbers born by day 4: decomposable iff |x| > 1");
    let mut strong =
        Check::new("strong decompositions of numbers are sums of numbers; |x| > 1 has one");
    let mut sound = Check::new("every reported decomposition re-verifies with eq_value");
    for x in numbers_born_by(4) {
        let g = a.dyadic_form(x);
        let pairs = a.decompose(g, days)?;
        let b = a.formal_birthday(g);
        let big = x.abs() > Dyadic::ONE;
        iff.expect(pairs.is_empty() != big, || {
            format!("{x}: {} decompositions", pairs.len())
        });
        let mut has_strong = false;
        for p in &pairs {
            let s = a.add(p.h, p.j);
            sound.expect(
                a.eq_value(s, g) && a.formal_birthday(p.h) < b && a.formal_birthday(p.j) < b,
                || {
                    format!(
                        "{x} = {} + {}",
                        a.print_canonical(p.h),
                        a.print_canonical(p.j)
                    )
                },
            );
            if p.strong {
                has_strong = true;
                let ok = a.is_number(p.h).is_some() && a.is_number(p.j).is_some();
                strong.expect(ok, || {
                    format!(
                        "{x} = {} + {}",
                        a.print_canonical(p.h),
                        a.print_canonical(p.j)
                    )
                });
            }
        }
        if big {
            strong.expect(has_strong, || format!("{x} has no strong decomposition"));
        }
    }
    let mut instances = Check::new("1/2, 1, -1 indecomposable; 2, 7/4, 3/2 decomposable");
    for (s, want) in [
        ("1/2", false),
        ("1", false),
        ("-1", false),
        ("2", true),
        ("7/4", true),
        ("3/2", true),
    ] {
        let g = a.dyadic_form(s.parse().unwrap());
        let got = a.is_decomposable(g, days)?;
        instances.expect(got == want, || format!("{s}: decomposable = {got}"));
    }
    let seven_quarters = a.dyadic_form("7/4".parse().unwrap());
    let one = a.dyadic_form(Dyadic::ONE);
    let three_quarters = a.dyadic_form("3/4".parse().unwrap());
    let mut split = Check::new("7/4 = 1 + 3/4 is a strong decomposition");
    let s = a.strong_decompositions(seven_quarters, days)?;
    split.expect(
        s.iter()
            .any(|p| (p.h, p.j) == (one.min(three_quarters), one.max(three_quarters))),
        || "missing".into(),
    );
    Ok(vec![
        iff,
        strong,
        sound,
        instances,
        split,
        endgame_numbers(a),
    ])
}

/// Exhaustive best value reachable in one move by `player` from the sum.
fn best_reply_value(a: &mut Arena, components: &[Dyadic], player: Player) -> Option<Dyadic> {
    let forms: Vec<FormId> = components.iter().map(|&x| a.dyadic_form(x)).collect();
    let total = a.sum_all(&forms);
    let options = match player {
        Player::Left => a.left(total).to_vec(),
        Player::Right => a.right(total).to_vec(),
    };
    let values = options
        .into_iter()
        .map(|o| a.is_number(o).expect("sum of numbers"));
    match player {
        Player::Left => values.max(),
        Player::Right => values.min(),
    }
}

fn value_after(components: &[Dyadic], index: usize, player: Player) -> Dyadic {
    let x = components[index];
    let moved = if x.is_integer() {
        match player {
            Player::Left => x - Dyadic::ONE,
            Player::Right => x + Dyadic::ONE,
        }
    } else {
        let step = Dyadic::new(1, x.exponent());
        match player {
            Player::Left => x - step,
            Player::Right => x + step,
        }
    };
    components
        .iter()
        .enumerate()
        .fold(Dyadic::ZERO, |acc, (i, &y)| {
            acc + if i == index { moved } else { y }
        })
}

fn endgame_numbers(a: &mut Arena) -> Check {
    let mut check = Check::new("greatest-denominator rule is optimal on <= 3-component sums");
    let worked: Vec<Dyadic> = ["15/8", "-3/2", "-1/4"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let i = best_number_move(&worked, Player::Left);
    check.expect(i.as_ref().is_ok_and(|&i| i == 0), || {
        format!("worked example gave {i:?}")
    });
    let winning: Vec<usize> = (0..3)
        .filter(|&i| value_after(&worked, i, Player::Left) >= Dyadic::ZERO)
        .collect();
    check.expect(winning == vec![0], || {
        format!("winning Left moves {winning:?}")
    });

    let menu: Vec<Dyadic> = ["15/8", "3/2", "3/4", "1/2", "1/4", "1", "2"]
        .iter()
        .flat_map(|s| {
            let x: Dyadic = s.parse().unwrap();
            [x, -x]
        })
        .collect();
    let mut sums: Vec<Vec<Dyadic>> = Vec::new();
    for i in 0..menu.len() {
        sums.push(vec![menu[i]]);
        for j in i..menu.len() {
            sums.push(vec![menu[i], menu[j]]);
            for k in j..menu.len() {
                sums.push(vec![menu[i], menu[j], menu[k]]);
            }
        }
    }
    for comps in &sums {
        for player in [Player::Left, Player::Right] {
            let best = best_reply_value(a, comps, player);
            match (best_number_move(comps, player), best) {
                (Ok(i), Some(best)) => {
                    let got = value_after(comps, i, player);
                    check.expect(got == best, || {
                        format!("{comps:?} {player}: {got} vs {best}")
                    });
                }
                (Err(Error::NoMove), None) => check.expect(true, String::new),
                (r, b) => check.expect(false, || format!("{comps:?} {player}: {r:?} vs {b:?}")),
            }
        }
    }
    check
}

fn nimbers(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let mut iff = Check::new("*k decomposable iff k is not a power of two (k <= 4)");
    for k in 1..=4u32 {
        let s = a.star(k);
        let got = a.is_decomposable(s, days)?;
        iff.expect(got == !k.is_power_of_two(), || format!("*{k}: {got}"));
    }
    let mut closure = Check::new("no nimber pair *j + *k = *2^n with j, k < 2^n (2^n <= 16)");
    for n in 0..=4u32 {
        let p = 1u32 << n;
        for j in 0..p {
            for k in 0..p {
                closure.expect(nim_sum(j, k) != p, || format!("*{j} + *{k} = *{p}"));
                closure.expect(nim_sum(j, k) < p, || format!("{j} ^ {k} >= {p}"));
            }
        }
    }
    let mut strong = Check::new("strong decompositions of *3 are pairs of nimbers");
    let s3 = a.star(3);
    let pairs = a.strong_decompositions(s3, days)?;
    strong.expect(!pairs.is_empty(), || "none found".into());
    for p in pairs {
        let ok = a.is_nimber(p.h).is_some() && a.is_nimber(p.j).is_some();
        strong.expect(ok, || {
            format!("{} + {}", a.print_canonical(p.h), a.print_canonical(p.j))
        });
    }

    let mut flagship = Check::new("{0|*2} = *2 + ^*, decomposable, not strongly decomposable");
    let g = a.parse("{0|*2}")?;
    let s2 = a.star(2);
    let upstar = a.parse("^*")?;
    let rhs = a.sum(s2, upstar);
    flagship.expect(a.eq_value(g, rhs), || "{0|*2} != *2 + ^*".into());
    flagship.expect(a.formal_birthday(g) == 3, || "b({0|*2}) != 3".into());
    flagship.expect(a.is_decomposable(g, days)?, || "not decomposable".into());
    let strong_g = a.strong_decompositions(g, days)?;
    flagship.expect(strong_g.is_empty(), || {
        format!("{} strong decompositions", strong_g.len())
    });

    let mut laws = Check::new("nim-sum group laws on 0..15 and *a + *b = *(a xor b) for a, b <= 8");
    for x in 0..16u32 {
        laws.expect(nim_sum(x, 0) == x && nim_sum(x, x) == 0, || format!("{x}"));
        for y in 0..16 {
            for z in 0..16 {
                laws.expect(
                    nim_sum(nim_sum(x, y), z) == nim_sum(x, nim_sum(y, z)),
                    || format!("({x},{y},{z})"),
                );
            }
        }
    }
    for x in 0..=8 {
        for y in 0..=8 {
            let (sx, sy) = (a.star(x), a.star(y));
            let s = a.sum(sx, sy);
            let want = a.star(nim_sum(x, y));
            laws.expect(a.eq_value(s, want), || format!("*{x} + *{y}"));
        }
    }

    let mut nim = Check::new("nim move on *7 + *5 + *9 reduces heap 9 to 2, leaving a P-position");
    let mv = best_nim_move(&[7, 5, 9]);
    nim.expect(mv == Some((2, 2)), || format!("{mv:?}"));
    let forms: Vec<FormId> = [7, 5, 2].iter().map(|&k| a.star(k)).collect();
    let after = a.sum_all(&forms);
    nim.expect(a.outcome(after) == Outcome::Previous, || {
        "result is not P".into()
    });
    for heaps in [[1u32, 2, 3], [3, 3, 0], [4, 1, 6], [8, 8, 1]] {
        let forms: Vec<FormId> = heaps.iter().map(|&k| a.star(k)).collect();
        let total = a.sum_all(&forms);
        let p = a.outcome(total) == Outcome::Previous;
        match best_nim_move(&heaps) {
            None => nim.expect(p, || format!("{heaps:?}: no move but not P")),
            Some((i, size)) => {
                let mut next = heaps;
                next[i] = size;
                let ok = !p && next.iter().fold(0, |acc, &h| acc ^ h) == 0;
                nim.expect(ok, || format!("{heaps:?}: move {i} -> {size}"));
            }
        }
    }
    Ok(vec![iff, closure, strong, flagship, laws, nim])
}

fn distance(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let mut examples =
        Check::new("RD on ^*, ^2, {0|{0|-1}}, {{1|^2}|0}, {^5|{^3|0}} is 1, 2, 1, 1, 3");
    for (s, want) in [
        ("^*", 1),
        ("^2", 2),
        ("{0|{0|-1}}", 1),
        ("{{1|^2}|0}", 1),
        ("{^5|{^3|0}}", 3),
    ] {
        let g = a.parse(s)?;
        let got = a.rd(g);
        examples.expect(got == Distance::Defined(want), || {
            format!("RD({s}) = {got}")
        });
    }

    let d3 = days.get(a, 3)?.clone();
    let mut defined = Check::new("RD is defined whenever RS <= 0 (day <= 3)");
    let mut observation =
        Check::new("RD >= 1 => not below any nimber; RD >= 2 => above every nimber");
    let mut steps = Check::new("distance drops along the optimal Right option");
    let mut bound = Check::new("nimber comparisons are stable past the remoteness bound");
    for &g in d3.values() {
        let rs = a.right_stop(g);
        let rd = a.rd(g);
        defined.expect((rs <= Dyadic::ZERO) == rd.value().is_some(), || {
            format!("{}: RS {rs}, RD {rd}", a.print_canonical(g))
        });
        let Some(d) = rd.value() else { continue };
        let cmp = a.star_comparison(g)?;
        if d >= 1 {
            observation.expect(!matches!(cmp, StarComparison::LeqSome(_)), || {
                format!("{}: RD {d}, {cmp:?}", a.print_canonical(g))
            });
        }
        if d >= 2 {
            observation.expect(cmp == StarComparison::GreaterAll, || {
                format!("{}: RD {d}, {cmp:?}", a.print_canonical(g))
            });
        }
        if d > 0 {
            let r = a.rd_optimal_option(g).expect("optimal option");
            let dr = a.rd(r).value().expect("defined");
            steps.expect(d > dr, || {
                format!("{}: RD {d} <= RD(G^R) {dr}", a.print_canonical(g))
            });
            if d - 1 > dr {
                let rls: Vec<u32> = a
                    .left(r)
                    .to_vec()
                    .into_iter()
                    .map(|rl| a.rd(rl).value().expect("defined"))
                    .collect();
                let ok = rls.contains(&d) && rls.iter().all(|&x| x <= d);
                steps.expect(ok, || format!("{}: RD(G^RL) {rls:?}", a.print_canonical(g)));
            }
        }
        if a.formal_birthday(g) <= 2 {
            let limit = a.formal_birthday(g) + 6;
            let mut least = None;
            let mut above_all = true;
            for k in 0..=limit {
                let s = a.star(k);
                if least.is_none() && a.leq(g, s) {
                    least = Some(k);
                }
                if !a.lt(s, g) {
                    above_all = false;
                }
            }
            let wide = match least {
                Some(k) => StarComparison::LeqSome(k),
                None if above_all => StarComparison::GreaterAll,
                None => StarComparison::ConfusedOrGreaterAll,
            };
            bound.expect(wide == cmp, || {
                format!("{}: {cmp:?} vs {wide:?}", a.print_canonical(g))
            });
        }
    }

    let mut invariance = Check::new("RD agrees on value-equal forms (day <= 2 forms)");
    let d1 = days.get(a, 1)?.clone();
    for l in 0..16u32 {
        for r in 0..16u32 {
            let pick = |mask: u32| -> Vec<FormId> {
                (0..4)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| d1.values()[i])
                    .collect()
            };
            let g = a.make_form(&pick(l), &pick(r))?;
            let c = a.canonical(g);
            // The raw-form recursion, without canonicalizing first.
            let raw = raw_rd(a, g);
            let canon = a.rd(c).value();
            invariance.expect(raw == canon, || {
                format!("{}: {raw:?} vs {canon:?}", a.print_canonical(c))
            });
        }
    }

    Ok(vec![
        examples,
        defined,
        observation,
        steps,
        bound,
        invariance,
    ])
}

/// The distance recursion applied to a form as given.
fn raw_rd(a: &mut Arena, g: FormId) -> Option<u32> {
    if a.right_stop(g) > Dyadic::ZERO {
        return None;
    }
    let bound = a.formal_birthday(g) + 1;
    for k in 0..=bound {
        let s = a.star(k);
        if a.leq(g, s) {
            return Some(0);
        }
    }
    let mut best: Option<i64> = None;
    for r in a.right(g).to_vec() {
        if a.left_stop(r) > Dyadic::ZERO {
            continue;
        }
        let mut v = raw_rd(a, r)? as i64;
        for rl in a.left(r).to_vec() {
            v = v.max(raw_rd(a, rl)? as i64 - 1);
        }
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.map(|b| (b + 1) as u32)
}

fn stops(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let d2 = days.get(a, 2)?.clone();
    let d3 = days.get(a, 3)?.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pairs: Vec<(FormId, FormId)> = Vec::new();
    for &g in d2.values() {
        for &h in d2.values() {
            pairs.push((g, h));
        }
    }
    let gs = sample(d3.values(), 500, &mut rng);
    let hs = sample(d3.values(), 500, &mut rng);
    pairs.extend(gs.iter().copied().zip(hs.iter().copied()));
    let mut singles: Vec<FormId> = d2.values().to_vec();
    singles.extend(gs.iter().copied());

    let xs: Vec<Dyadic> = ["-1", "-1/2", "0", "1/2", "1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut items = [
        Check::new("stops 1: LS(-G) = -RS(G), RS(-G) = -LS(G)"),
        Check::new("stops 2: LS(G) >= RS(G)"),
        Check::new("stops 3: LS(G) < x => G < x, RS(G) > x => G > x"),
        Check::new("stops 4: stops translate by numbers"),
        Check::new("stops 5: LS(G) + RS(H) <= LS(G+H) <= LS(G) + LS(H)"),
        Check::new("stops 6: RS(G) + RS(H) <= RS(G+H) <= LS(G) + RS(H)"),
    ];
    for &g in &singles {
        let name = a.print_canonical(g);
        let (ls, rs) = (a.left_stop(g), a.right_stop(g));
        let n = a.negate(g);
        items[0].expect(a.left_stop(n) == -rs && a.right_stop(n) == -ls, || {
            name.clone()
        });
        items[1].expect(ls >= rs, || name.clone());
        for &x in &xs {
            let xf = a.dyadic_form(x);
            if ls < x {
                items[2].expect(a.lt(g, xf), || format!("{name} vs {x}"));
            }
            if rs > x {
                items[2].expect(a.lt(xf, g), || format!("{name} vs {x}"));
            }
            let t = a.add(g, xf);
            items[3].expect(
                a.left_stop(t) == ls + x && a.right_stop(t) == rs + x,
                || format!("{name} + {x}"),
            );
        }
    }
    for &(g, h) in &pairs {
        let s = a.add(g, h);
        let (lg, rg, lh, rh) = (
            a.left_stop(g),
            a.right_stop(g),
            a.left_stop(h),
            a.right_stop(h),
        );
        let (ls, rs) = (a.left_stop(s), a.right_stop(s));
        let label = || format!("{} + {}", a.print_canonical(g), a.print_canonical(h));
        let ok5 = lg + rh <= ls && ls <= lg + lh;
        let ok6 = rg + rh <= rs && rs <= lg + rh;
        items[4].expect(ok5, label);
        items[5].expect(ok6, label);
    }

    let mut avoidance = Check::new("number avoidance: a winning move exists outside the number");
    let half: Vec<Dyadic> = ["-1", "-1/2", "1/2", "1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for &g in &singles {
        if a.is_number(g).is_some() {
            continue;
        }
        for &x in &half {
            let xf = a.dyadic_form(x);
            let total = a.sum(g, xf);
            let o = a.outcome(total);
            if matches!(o, Outcome::LeftWins | Outcome::Next) {
                let ok = a.left(g).to_vec().into_iter().any(|gl| {
                    let s = a.add(gl, xf);
                    a.leq(FormId::ZERO, s)
                });
                avoidance.expect(ok, || format!("Left in {} + {x}", a.print_canonical(g)));
            }
            if matches!(o, Outcome::RightWins | Outcome::Next) {
                let ok = a.right(g).to_vec().into_iter().any(|gr| {
                    let s = a.add(gr, xf);
                    a.leq(s, FormId::ZERO)
                });
                avoidance.expect(ok, || format!("Right in {} + {x}", a.print_canonical(g)));
            }
        }
    }

    let mut translation = Check::new("translation: canonical x + G has options x + G^L, x + G^R");
    let mut remote = Check::new("tepid x + G' born before k makes *(k-1) remote for G'");
    let mut classes = Check::new("classification matches stops");
    for &g in d3.values() {
        let class = a.classify(g);
        let (ls, rs) = (a.left_stop(g), a.right_stop(g));
        let ok = match class {
            TemperatureClass::Cold => a.is_number(g).is_some(),
            TemperatureClass::Tepid { infinitesimal } => {
                ls == rs && infinitesimal == (ls == Dyadic::ZERO)
            }
            TemperatureClass::Hot => ls > rs,
        };
        classes.expect(ok, || a.print_canonical(g));
        let TemperatureClass::Tepid { .. } = class else {
            continue;
        };
        let (x, eps) = a.tepid_split(g)?;
        let xf = a.dyadic_form(x);
        let mut lefts: Vec<FormId> = a
            .left(eps)
            .to_vec()
            .into_iter()
            .map(|e| a.add(xf, e))
            .collect();
        let mut rights: Vec<FormId> = a
            .right(eps)
            .to_vec()
            .into_iter()
            .map(|e| a.add(xf, e))
            .collect();
        lefts.sort();
        rights.sort();
        let ok = lefts == a.left(g) && rights == a.right(g);
        translation.expect(ok, || a.print_canonical(g));
        if a.is_nimber(eps).is_none() {
            let b = a.formal_birthday(g);
            for k in b + 1..=b + 3 {
                let ok = a.is_remote(NimberSize::new(k - 1)?, eps);
                remote.expect(ok, || format!("{}: *{}", a.print_canonical(g), k - 1));
            }
        }
    }

    let mut out: Vec<Check> = items.into_iter().collect();
    out.extend([avoidance, translation, remote, classes]);
    Ok(out)
}

fn star_systems(a: &mut Arena, days: &mut DayStore) -> Result<Vec<Check>> {
    let d2 = days.get(a, 2)?.clone();
    let mut sound = Check::new("distance predictions never contradict outcomes (day <= 2, k <= 3)");
    let mut zero = Check::new("G + H + *k = 0 => LD(H) = RD(G) and LD(G) = RD(H) (infinitesimals)");
    let mut infinitesimal_sound = Check::new("predictions on infinitesimal pairs are sound");
    for &g in d2.values() {
        for &h in d2.values() {
            for k in 0..=3 {
                let n = NimberSize::new(k)?;
                let Ok(system) = StarSystem::new(a, g, h, n) else {
                    continue;
                };
                let s = a.star(k);
                let gh = a.sum(g, h);
                let total = a.sum(gh, s);
                let o = a.outcome(total);
                let prediction = a.star_system_prediction(&system);
                let infinitesimal = a.is_infinitesimal(g) && a.is_infinitesimal(h);
                let label = || {
                    format!(
                        "{} + {} + *{k}: {prediction:?} vs {o}",
                        a.print_canonical(g),
                        a.print_canonical(h)
                    )
                };
                let ok = prediction.is_none_or(|p| p.consistent_with(o));
                sound.expect(ok, label);
                if infinitesimal {
                    infinitesimal_sound.expect(ok, label);
                    if o == Outcome::Previous {
                        let ok = a.ld(h) == a.rd(g) && a.ld(g) == a.rd(h);
                        zero.expect(ok, || {
                            format!("{} + {} + *{k}", a.print_canonical(g), a.print_canonical(h))
                        });
                    }
                }
            }
        }
    }
    Ok(vec![sound, infinitesimal_sound, zero])
}

/// All strings with exactly `len` edges.
pub fn all_strings(len: usize) -> Vec<BrgString> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s: Vec<Edge>| {
                Edge::ALL.into_iter().map(move |e| {
                    let mut t = s.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|e| BrgString::new(e).unwrap())
        .collect()
}

pub fn random_string(rng: &mut ChaCha8Rng, max_len: usize) -> BrgString {
    let len = rng.random_range(0..=max_len);
    let edges = (0..len)
        .map(|_| Edge::ALL[rng.random_range(0..3)])
        .collect();
    BrgString::new(edges).unwrap()
}

fn hackenbush(a: &mut Arena) -> Vec<Check> {
    let mut birthday = Check::new("string birthday equals edge count (length <= 7)");
    for len in 0..=7 {
        for s in all_strings(len) {
            let b = a.string_birthday(&s);
            birthday.expect(b as usize == len, || format!("{s}: {b}"));
        }
    }
    let mut never_p = Check::new("*8 + H + J is never a P-position (200 seeded pairs)");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let s8 = a.star(8);
    for _ in 0..200 {
        let h = random_string(&mut rng, 6);
        let j = random_string(&mut rng, 7);
        let hv = a.string_value(&h);
        let jv = a.string_value(&j);
        let hj = a.sum(hv, jv);
        let total = a.sum(s8, hj);
        never_p.expect(a.outcome(total) != Outcome::Previous, || {
            format!("H = {h}, J = {j}")
        });
    }
    let mut ordinal = Check::new("B^m G^n = m + *n with birthday m + n (m <= 3, n <= 4)");
    for m in 0..=3 {
        for n in 0..=4 {
            let mut edges = vec![Edge::Blue; m];
            edges.extend(vec![Edge::Green; n]);
            let s = BrgString::new(edges).unwrap();
            let v = a.string_value(&s);
            let x = a.dyadic_form(Dyadic::integer(m as i64));
            let st = a.star(n as u32);
            let want = a.sum(x, st);
            let ok = a.eq_value(v, want) && a.formal_birthday(v) as usize == m + n;
            ordinal.expect(ok, || s.to_string());
        }
    }
    let mut shape =
        Check::new("BR strings: |x| <= 1 iff the bottom two edges differ (length <= 5)");
    for len in 0..=5 {
        for s in all_strings(len) {
            if s.edges().contains(&Edge::Green) {
                continue;
            }
            let v = a.string_value(&s);
            let x = a.is_number(v).expect("blue-red strings are numbers");
            let differ = len <= 1 || s.edges()[0] != s.edges()[1];
            shape.expect((x.abs() <= Dyadic::ONE) == differ, || format!("{s} = {x}"));
        }
    }
    vec![birthday, never_p, ordinal, shape]
}
