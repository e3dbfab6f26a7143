//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Every criterion is checked against oracles defined in this file: value
//! equality by game-tree outcome of a difference, numbers built from their
//! simplest-number definition, day sets from all option subsets, stops by
//! direct recursion, Hackenbush positions by raw cut semantics, and
//! decompositions by brute-force pair search.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cgt_core::analysis::StarSystem;
use cgt_core::dayset::DayStore;
use cgt_core::{
    best_nim_move, best_number_move, number_birthday, Arena, Distance, Dyadic, Edge, FormId,
    NimberSize, Outcome, Player,
};

const SEED: u64 = 20_260_101;

type Verdict = Result<String, String>;

struct Ctx {
    a: Arena,
    days: DayStore,
    stops: HashMap<FormId, (Dyadic, Dyadic)>,
    naive: Vec<Vec<FormId>>,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            a: Arena::new(),
            days: DayStore::new(),
            stops: HashMap::new(),
            naive: Vec::new(),
        }
    }

    /// `g = h` by the outcome of `g - h`.
    fn same(&mut self, g: FormId, h: FormId) -> bool {
        let n = self.a.negate(h);
        let d = self.a.sum(g, n);
        self.a.outcome(d) == Outcome::Previous
    }

    /// `g < h` by the outcome of `h - g`.
    fn less(&mut self, g: FormId, h: FormId) -> bool {
        let n = self.a.negate(g);
        let d = self.a.sum(h, n);
        self.a.outcome(d) == Outcome::LeftWins
    }

    fn zero_sum(&mut self, parts: &[FormId]) -> bool {
        let s = self.a.sum_all(parts);
        self.a.outcome(s) == Outcome::Previous
    }

    /// Stops by the alternating-play recursion on canonical forms.
    fn oracle_stops(&mut self, g: FormId) -> (Dyadic, Dyadic) {
        let c = self.a.canonical(g);
        if let Some(&s) = self.stops.get(&c) {
            return s;
        }
        let s = match self.a.is_number(c) {
            Some(x) => (x, x),
            None => {
                let ls = self
                    .a
                    .left(c)
                    .to_vec()
                    .into_iter()
                    .map(|l| self.oracle_stops(l).1)
                    .max();
                let rs = self
                    .a
                    .right(c)
                    .to_vec()
                    .into_iter()
                    .map(|r| self.oracle_stops(r).0)
                    .min();
                (
                    ls.expect("non-number has Left options"),
                    rs.expect("non-number has Right options"),
                )
            }
        };
        self.stops.insert(c, s);
        s
    }

    /// Canonical representatives of every value born by `day <= 2`, from
    /// all subsets of the previous day, deduplicated by game-tree equality.
    fn naive_day(&mut self, day: usize) -> Vec<FormId> {
        if self.naive.is_empty() {
            self.naive.push(vec![FormId::ZERO]);
        }
        while self.naive.len() <= day {
            let prev = self.naive.last().unwrap().clone();
            let n = prev.len();
            let subsets: Vec<Vec<FormId>> = (0..1u32 << n)
                .map(|m| {
                    (0..n)
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| prev[i])
                        .collect()
                })
                .collect();
            let mut reps: Vec<FormId> = Vec::new();
            for l in &subsets {
                for r in &subsets {
                    let g = self.a.make_form(l, r).unwrap();
                    if !reps.clone().into_iter().any(|h| self.same(g, h)) {
                        reps.push(g);
                    }
                }
            }
            let canon: Vec<FormId> = reps.into_iter().map(|g| self.a.canonical(g)).collect();
            self.naive.push(canon);
        }
        self.naive[day].clone()
    }

    fn values_by_day(&mut self, day: u32) -> Vec<FormId> {
        if day <= 2 {
            self.naive_day(day as usize)
        } else {
            self.days.get(&mut self.a, day).unwrap().values().to_vec()
        }
    }

    /// Unordered value pairs `{H, J}` born by `b(g) - 1` with `H + J = g`,
    /// found by pair search with the stop identities as a filter.
    fn brute_decompositions(&mut self, g: FormId) -> Vec<(FormId, FormId)> {
        let b = self.a.value_birthday(g);
        if b == 0 {
            return Vec::new();
        }
        let pool = self.values_by_day(b - 1);
        let (lg, rg) = self.oracle_stops(g);
        let mut by_stops: HashMap<(Dyadic, Dyadic), Vec<FormId>> = HashMap::new();
        for &v in &pool {
            let s = self.oracle_stops(v);
            by_stops.entry(s).or_default().push(v);
        }
        let minus = self.a.negate(g);
        let mut found = Vec::new();
        for &h in &pool {
            let (lh, rh) = self.oracle_stops(h);
            // When LS(g) = RS(g) = s, the sum bounds force RS(J) = s - LS(H)
            // and LS(J) = s - RS(H).
            let candidates: Vec<FormId> = if lg == rg {
                by_stops
                    .get(&(lg - rh, rg - lh))
                    .cloned()
                    .unwrap_or_default()
            } else {
                pool.clone()
            };
            for j in candidates {
                if h <= j && self.zero_sum(&[h, j, minus]) {
                    found.push((h, j));
                }
            }
        }
        found.sort();
        found
    }
}

fn dy(s: &str) -> Dyadic {
    s.parse().unwrap()
}

/// Birthday of a dyadic from its binary expansion.
fn birthday_formula(x: Dyadic) -> u32 {
    let x = x.abs();
    let mut whole = 0u32;
    let mut y = x;
    while y >= Dyadic::ONE {
        y = y - Dyadic::ONE;
        whole += 1;
    }
    if y == Dyadic::ZERO {
        return whole;
    }
    let mut places = 0;
    while !y.is_integer() {
        y = y + y;
        places += 1;
    }
    whole + 1 + places
}

/// `x` built from the simplest-number definition, with no reduction.
fn build_number(a: &mut Arena, x: Dyadic) -> FormId {
    if x.is_integer() {
        return if x > Dyadic::ZERO {
            let p = build_number(a, x - Dyadic::ONE);
            a.make_form(&[p], &[]).unwrap()
        } else if x < Dyadic::ZERO {
            let p = build_number(a, x + Dyadic::ONE);
            a.make_form(&[], &[p]).unwrap()
        } else {
            a.make_form(&[], &[]).unwrap()
        };
    }
    let step = Dyadic::new(1, x.exponent());
    let l = build_number(a, x - step);
    let r = build_number(a, x + step);
    a.make_form(&[l], &[r]).unwrap()
}

/// Dyadics with numerator bound `|x| <= limit` and exponent `<= exp`.
fn dyadics(limit: i64, exp: u32) -> Vec<Dyadic> {
    let scale = 1i64 << exp;
    let mut xs: Vec<Dyadic> = (-limit * scale..=limit * scale)
        .map(|n| Dyadic::new(n, exp))
        .collect();
    xs.sort();
    xs.dedup();
    xs
}

/// A nim heap as a raw form: options are all smaller heaps.
fn raw_heap(a: &mut Arena, n: u32) -> FormId {
    let mut heaps = vec![a.make_form(&[], &[]).unwrap()];
    for _ in 0..n {
        let g = a.make_form(&heaps, &heaps).unwrap();
        heaps.push(g);
    }
    heaps[n as usize]
}

fn criterion_1(cx: &mut Ctx) -> Verdict {
    let mut checked = 0;
    for exp in 0..=4 {
        for x in dyadics(4, exp) {
            if x.exponent() != exp || x.abs().floor() > 3 {
                continue;
            }
            let want = birthday_formula(x);
            let built = build_number(&mut cx.a, x);
            let form = cx.a.dyadic_form(x);
            if !cx.same(built, form) {
                return Err(format!(
                    "{x}: dyadic_form differs from the simplest-number form"
                ));
            }
            let got = cx.a.value_birthday(form);
            if got != want || number_birthday(x) != want || cx.a.formal_birthday(built) != want {
                return Err(format!(
                    "b({x}): value {got}, formula {}, expected {want}",
                    number_birthday(x)
                ));
            }
            checked += 1;
        }
    }
    for (s, b) in [("7/4", 4), ("1", 1), ("3/4", 3)] {
        let g = cx.a.dyadic_form(dy(s));
        if cx.a.value_birthday(g) != b {
            return Err(format!("b({s}) != {b}"));
        }
    }
    Ok(format!("{checked} dyadics, b(7/4)=4, b(1)=1, b(3/4)=3"))
}

fn criterion_2(cx: &mut Ctx) -> Verdict {
    let mut sizes = Vec::new();
    for day in 0..=2u32 {
        let mut naive = cx.naive_day(day as usize);
        let mut fast = cx.days.get(&mut cx.a, day).unwrap().values().to_vec();
        naive.sort();
        fast.sort();
        if naive != fast {
            return Err(format!(
                "day {day}: oracle {} values, generator {}",
                naive.len(),
                fast.len()
            ));
        }
        sizes.push(fast.len());
    }
    let d3 = cx.days.get(&mut cx.a, 3).unwrap().values().to_vec();
    sizes.push(d3.len());
    if sizes != [1, 4, 22, 1474] {
        return Err(format!("sizes {sizes:?}"));
    }
    let d2 = cx.naive_day(2);
    if !d2.iter().all(|g| d3.contains(g)) {
        return Err("day 2 not contained in day 3".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..2000 {
        let g = d3[rng.random_range(0..d3.len())];
        let h = d3[rng.random_range(0..d3.len())];
        if g != h && cx.same(g, h) {
            return Err(format!("{} = {}", cx.a.print(g), cx.a.print(h)));
        }
    }
    for &g in &d3 {
        if cx.a.formal_birthday(g) > 3 {
            return Err(format!("{} born after day 3", cx.a.print(g)));
        }
    }
    Ok(format!(
        "sizes {sizes:?}; days <= 2 match the subset oracle"
    ))
}

fn numbers_born_by_four() -> Vec<Dyadic> {
    dyadics(4, 3)
        .into_iter()
        .filter(|&x| birthday_formula(x) <= 4)
        .collect()
}

fn criterion_3(cx: &mut Ctx) -> Verdict {
    let xs = numbers_born_by_four();
    for &x in &xs {
        let g = cx.a.dyadic_form(x);
        let lib: Vec<(FormId, FormId)> =
            cx.a.decompose(g, &mut cx.days)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|p| (p.h, p.j))
                .collect();
        let brute = cx.brute_decompositions(g);
        if lib != brute {
            return Err(format!(
                "{x}: engine {} pairs, search {} pairs",
                lib.len(),
                brute.len()
            ));
        }
        if brute.is_empty() == (x.abs() > Dyadic::ONE) {
            return Err(format!("{x}: decomposable = {}", !brute.is_empty()));
        }
    }
    for (s, want) in [
        ("1/2", false),
        ("1", false),
        ("-1", false),
        ("2", true),
        ("7/4", true),
        ("3/2", true),
    ] {
        let g = cx.a.dyadic_form(dy(s));
        if cx.a.is_decomposable(g, &mut cx.days).unwrap() != want {
            return Err(format!("{s}: expected decomposable = {want}"));
        }
    }
    Ok(format!("{} numbers, zero exceptions", xs.len()))
}

fn grundy(memo: &mut HashMap<(u32, u32), u32>, x: u32, y: u32) -> u32 {
    if let Some(&g) = memo.get(&(x, y)) {
        return g;
    }
    let mut seen: Vec<u32> = (0..x).map(|i| grundy(memo, i, y)).collect();
    seen.extend((0..y).map(|j| grundy(memo, x, j)));
    let mex = (0..).find(|v| !seen.contains(v)).unwrap();
    memo.insert((x, y), mex);
    mex
}

fn criterion_4(cx: &mut Ctx) -> Verdict {
    for k in 1..=4u32 {
        let s = cx.a.star(k);
        let lib = cx.a.is_decomposable(s, &mut cx.days).unwrap();
        let brute = !cx.brute_decompositions(s).is_empty();
        let want = ![1, 2, 4].contains(&k);
        if lib != want || brute != want {
            return Err(format!(
                "*{k}: engine {lib}, search {brute}, expected {want}"
            ));
        }
    }
    let mut memo = HashMap::new();
    for n in 0..=4 {
        let p = 1u32 << n;
        for j in 0..p {
            for k in 0..p {
                if grundy(&mut memo, j, k) == p {
                    return Err(format!("*{j} + *{k} = *{p}"));
                }
            }
        }
    }
    Ok("*3 decomposable, *1 *2 *4 not; no nimber pair sums to *2^n <= *16".into())
}

fn criterion_5(cx: &mut Ctx) -> Verdict {
    let g = cx.a.parse("{0|*2}").unwrap();
    let star = raw_heap(&mut cx.a, 1);
    let star2 = raw_heap(&mut cx.a, 2);
    let zero = cx.a.make_form(&[], &[]).unwrap();
    let up = cx.a.make_form(&[zero], &[star]).unwrap();
    let upstar = cx.a.sum(up, star);
    let rhs = cx.a.sum(star2, upstar);
    if !cx.same(g, rhs) {
        return Err("{0|*2} != *2 + ^*".into());
    }
    let lib = cx.a.decompose(g, &mut cx.days).unwrap();
    let brute = cx.brute_decompositions(g);
    if lib.is_empty() || brute.is_empty() {
        return Err("not decomposable".into());
    }
    let strong_brute: Vec<_> = brute
        .iter()
        .filter(|&&(h, j)| {
            h != FormId::ZERO
                && j != FormId::ZERO
                && cx.a.formal_birthday(h) + cx.a.formal_birthday(j) == 3
        })
        .collect();
    let strong = cx.a.strong_decompositions(g, &mut cx.days).unwrap();
    if !strong.is_empty() || !strong_brute.is_empty() {
        return Err(format!(
            "{} strong decompositions",
            strong.len().max(strong_brute.len())
        ));
    }
    Ok(format!(
        "{{0|*2}} = *2 + ^*, {} decompositions, none strong",
        brute.len()
    ))
}

fn criterion_6(cx: &mut Ctx) -> Verdict {
    let cases = [
        ("^*", 1),
        ("^2", 2),
        ("{0|{0|-1}}", 1),
        ("{{1|^2}|0}", 1),
        ("{^5|{^3|0}}", 3),
    ];
    let mut got = Vec::new();
    for (s, _) in cases {
        let g = cx.a.parse(s).unwrap();
        got.push(cx.a.rd(g));
    }
    let want: Vec<Distance> = cases.iter().map(|&(_, d)| Distance::Defined(d)).collect();
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok("RD = 1, 2, 1, 1, 3".into())
}

fn criterion_7(cx: &mut Ctx) -> Verdict {
    let all = cx.naive_day(2);
    let inf: Vec<FormId> = all
        .into_iter()
        .filter(|&g| cx.oracle_stops(g) == (Dyadic::ZERO, Dyadic::ZERO))
        .collect();
    let (mut predicted, mut zeros, mut systems) = (0, 0, 0);
    for &g in &inf {
        for &h in &inf {
            for k in 0..=3 {
                let system = StarSystem::new(&mut cx.a, g, h, NimberSize::new(k).unwrap())
                    .map_err(|e| e.to_string())?;
                systems += 1;
                let heap = raw_heap(&mut cx.a, k);
                let gh = cx.a.sum(g, h);
                let total = cx.a.sum(gh, heap);
                let o = cx.a.outcome(total);
                if let Some(p) = cx.a.star_system_prediction(&system) {
                    predicted += 1;
                    if !p.consistent_with(o) {
                        return Err(format!(
                            "{} + {} + *{k}: predicted {p:?}, outcome {o}",
                            cx.a.print(g),
                            cx.a.print(h)
                        ));
                    }
                }
                if o == Outcome::Previous {
                    zeros += 1;
                    if cx.a.ld(h) != cx.a.rd(g) || cx.a.ld(g) != cx.a.rd(h) {
                        return Err(format!("{} + {} + *{k} = 0", cx.a.print(g), cx.a.print(h)));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} infinitesimals, {systems} systems, {predicted} predictions, {zeros} zero sums",
        inf.len()
    ))
}

fn criterion_8(cx: &mut Ctx) -> Verdict {
    let d2 = cx.naive_day(2);
    let d3 = cx.values_by_day(3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sample: Vec<FormId> = (0..500)
        .map(|_| d3[rng.random_range(0..d3.len())])
        .collect();
    let partners: Vec<FormId> = (0..500)
        .map(|_| d3[rng.random_range(0..d3.len())])
        .collect();
    let mut singles = d2.clone();
    singles.extend(&sample);
    let mut pairs: Vec<(FormId, FormId)> = d2
        .iter()
        .flat_map(|&g| d2.iter().map(move |&h| (g, h)))
        .collect();
    pairs.extend(sample.iter().copied().zip(partners));

    let xs: Vec<Dyadic> = ["-1", "-1/2", "0", "1/2", "1"]
        .iter()
        .map(|s| dy(s))
        .collect();
    let mut cases = 0;
    for &g in &singles {
        let name = cx.a.print(g);
        let (ls, rs) = cx.oracle_stops(g);
        if (cx.a.left_stop(g), cx.a.right_stop(g)) != (ls, rs) {
            return Err(format!("{name}: engine stops disagree with recursion"));
        }
        let n = cx.a.negate(g);
        if cx.oracle_stops(n) != (-rs, -ls) {
            return Err(format!("item 1 fails at {name}"));
        }
        if ls < rs {
            return Err(format!("item 2 fails at {name}"));
        }
        for &x in &xs {
            let xf = build_number(&mut cx.a, x);
            if ls < x && !cx.less(g, xf) {
                return Err(format!("item 3 fails at {name} < {x}"));
            }
            if rs > x && !cx.less(xf, g) {
                return Err(format!("item 3 fails at {name} > {x}"));
            }
            let t = cx.a.sum(g, xf);
            if cx.oracle_stops(t) != (ls + x, rs + x) {
                return Err(format!("item 4 fails at {name} + {x}"));
            }
            cases += 1;
        }
    }
    for &(g, h) in &pairs {
        let s = cx.a.sum(g, h);
        let ((lg, rg), (lh, rh), (ls, rs)) =
            (cx.oracle_stops(g), cx.oracle_stops(h), cx.oracle_stops(s));
        if !(lg + rh <= ls && ls <= lg + lh) {
            return Err(format!(
                "item 5 fails at {} + {}",
                cx.a.print(g),
                cx.a.print(h)
            ));
        }
        if !(rg + rh <= rs && rs <= lg + rh) {
            return Err(format!(
                "item 6 fails at {} + {}",
                cx.a.print(g),
                cx.a.print(h)
            ));
        }
        cases += 1;
    }
    // Number avoidance: when a player wins moving first in G + x, with G
    // not a number, some move in G wins as well.
    for &g in &singles {
        if cx.a.is_number(g).is_some() {
            continue;
        }
        for &x in &xs {
            if x == Dyadic::ZERO {
                continue;
            }
            let xf = build_number(&mut cx.a, x);
            let total = cx.a.sum(g, xf);
            let o = cx.a.outcome(total);
            let c = cx.a.canonical(g);
            if matches!(o, Outcome::LeftWins | Outcome::Next) {
                let wins = cx.a.left(c).to_vec().into_iter().any(|gl| {
                    let s = cx.a.sum(gl, xf);
                    matches!(cx.a.outcome(s), Outcome::LeftWins | Outcome::Previous)
                });
                if !wins {
                    return Err(format!(
                        "Left has no winning move in {} + {x}",
                        cx.a.print(g)
                    ));
                }
            }
            if matches!(o, Outcome::RightWins | Outcome::Next) {
                let wins = cx.a.right(c).to_vec().into_iter().any(|gr| {
                    let s = cx.a.sum(gr, xf);
                    matches!(cx.a.outcome(s), Outcome::RightWins | Outcome::Previous)
                });
                if !wins {
                    return Err(format!(
                        "Right has no winning move in {} + {x}",
                        cx.a.print(g)
                    ));
                }
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{} games, {} pairs, {cases} checks, zero violations",
        singles.len(),
        pairs.len()
    ))
}

fn criterion_9(cx: &mut Ctx) -> Verdict {
    let mut checked = 0;
    for x in dyadics(2, 2) {
        for n in 0..=4 {
            let xf = build_number(&mut cx.a, x);
            let heap = raw_heap(&mut cx.a, n);
            let s = cx.a.sum(xf, heap);
            let got = cx.a.value_birthday(s);
            let want = birthday_formula(x) + n;
            if got != want {
                return Err(format!("b({x} + *{n}) = {got}, expected {want}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs (x, n)"))
}

/// A string position by cut semantics, without any reduction.
fn raw_string(a: &mut Arena, edges: &[Edge], memo: &mut HashMap<Vec<Edge>, FormId>) -> FormId {
    if let Some(&g) = memo.get(edges) {
        return g;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let below = raw_string(a, &edges[..i], memo);
        if *e != Edge::Red {
            left.push(below);
        }
        if *e != Edge::Blue {
            right.push(below);
        }
    }
    let g = a.make_form(&left, &right).unwrap();
    memo.insert(edges.to_vec(), g);
    g
}

fn criterion_10(cx: &mut Ctx) -> Verdict {
    let mut memo = HashMap::new();
    let mut strings: Vec<Vec<Edge>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<Edge>> = vec![Vec::new()];
    for _ in 0..7 {
        frontier = frontier
            .iter()
            .flat_map(|s| {
                Edge::ALL.into_iter().map(move |e| {
                    let mut t = s.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
        strings.extend(frontier.iter().cloned());
    }
    let exactly_seven = strings.iter().filter(|s| s.len() == 7).count();
    for edges in &strings {
        let s = cgt_core::BrgString::new(edges.clone()).unwrap();
        let raw = raw_string(&mut cx.a, edges, &mut memo);
        let v = cx.a.string_value(&s);
        if !cx.same(raw, v) {
            return Err(format!("{s}: engine value differs from the game tree"));
        }
        if cx.a.string_birthday(&s) as usize != edges.len() {
            return Err(format!("b({s}) = {}", cx.a.string_birthday(&s)));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random = |rng: &mut ChaCha8Rng, max: usize| -> Vec<Edge> {
        let len = rng.random_range(0..=max);
        (0..len)
            .map(|_| Edge::ALL[rng.random_range(0..3)])
            .collect()
    };
    let g8 = raw_heap(&mut cx.a, 8);
    for _ in 0..200 {
        let h = random(&mut rng, 6);
        let j = random(&mut rng, 7);
        let hf = raw_string(&mut cx.a, &h, &mut memo);
        let jf = raw_string(&mut cx.a, &j, &mut memo);
        let total = cx.a.sum_all(&[g8, hf, jf]);
        if cx.a.outcome(total) == Outcome::Previous {
            let show = |e: &[Edge]| cgt_core::BrgString::new(e.to_vec()).unwrap().to_string();
            return Err(format!("*8 + {} + {} is a P-position", show(&h), show(&j)));
        }
    }

    for m in 0..=3 {
        for n in 0..=4 {
            let mut edges = vec![Edge::Blue; m];
            edges.extend(vec![Edge::Green; n]);
            let s = cgt_core::BrgString::new(edges).unwrap();
            let v = cx.a.string_value(&s);
            let x = build_number(&mut cx.a, Dyadic::integer(m as i64));
            let heap = raw_heap(&mut cx.a, n as u32);
            let want = cx.a.sum(x, heap);
            if !cx.same(v, want) || cx.a.string_birthday(&s) as usize != m + n {
                return Err(format!("{s} != {m} + *{n}"));
            }
        }
    }
    Ok(format!(
        "{} strings ({exactly_seven} of length 7), 200 random pairs, 20 B^m G^n strings",
        strings.len()
    ))
}

/// The unique option of canonical `x` for `player`, if any.
fn number_option(x: Dyadic, player: Player) -> Option<Dyadic> {
    let step = if x.is_integer() {
        Dyadic::ONE
    } else {
        Dyadic::new(1, x.exponent())
    };
    match player {
        Player::Left if x.is_integer() && x <= Dyadic::ZERO => None,
        Player::Right if x.is_integer() && x >= Dyadic::ZERO => None,
        Player::Left => Some(x - step),
        Player::Right => Some(x + step),
    }
}

fn total_after(xs: &[Dyadic], i: usize, player: Player) -> Option<Dyadic> {
    let moved = number_option(xs[i], player)?;
    Some(xs.iter().enumerate().fold(Dyadic::ZERO, |s, (j, &y)| {
        s + if j == i { moved } else { y }
    }))
}

fn criterion_11(cx: &mut Ctx) -> Verdict {
    let worked: Vec<Dyadic> = ["15/8", "-3/2", "-1/4"].iter().map(|s| dy(s)).collect();
    let winning: Vec<usize> = (0..3)
        .filter(|&i| {
            let rest: Vec<FormId> = worked
                .iter()
                .enumerate()
                .map(|(j, &y)| {
                    let v = if j == i {
                        number_option(y, Player::Left).unwrap()
                    } else {
                        y
                    };
                    build_number(&mut cx.a, v)
                })
                .collect();
            let s = cx.a.sum_all(&rest);
            matches!(cx.a.outcome(s), Outcome::LeftWins | Outcome::Previous)
        })
        .collect();
    if winning != [0] || best_number_move(&worked, Player::Left).unwrap() != 0 {
        return Err(format!("worked example: winning moves {winning:?}"));
    }

    let menu: Vec<Dyadic> = ["15/8", "3/2", "3/4", "1/2", "1/4", "1", "2"]
        .iter()
        .flat_map(|s| [dy(s), -dy(s)])
        .collect();
    let mut sums = 0;
    let mut stack: Vec<Vec<Dyadic>> = menu.iter().map(|&x| vec![x]).collect();
    while let Some(xs) = stack.pop() {
        if xs.len() < 3 {
            for &y in &menu {
                let mut next = xs.clone();
                next.push(y);
                stack.push(next);
            }
        }
        for player in [Player::Left, Player::Right] {
            let options: Vec<Dyadic> = (0..xs.len())
                .filter_map(|i| total_after(&xs, i, player))
                .collect();
            let best = match player {
                Player::Left => options.iter().max(),
                Player::Right => options.iter().min(),
            };
            match (best_number_move(&xs, player), best) {
                (Ok(i), Some(&best)) if total_after(&xs, i, player) == Some(best) => {}
                (Err(cgt_core::Error::NoMove), None) => {}
                (r, b) => return Err(format!("{xs:?} {player}: rule {r:?}, search best {b:?}")),
            }
            sums += 1;
        }
    }

    if best_nim_move(&[7, 5, 9]) != Some((2, 2)) {
        return Err(format!("nim move {:?}", best_nim_move(&[7, 5, 9])));
    }
    let heaps: Vec<FormId> = [7, 5, 2].iter().map(|&k| raw_heap(&mut cx.a, k)).collect();
    let s = cx.a.sum_all(&heaps);
    if cx.a.outcome(s) != Outcome::Previous {
        return Err("*7 + *5 + *2 is not a P-position".into());
    }
    Ok(format!(
        "worked example, {sums} (sum, player) cases, nim (7,5,9) -> heap 2 to 2"
    ))
}

type Criterion = (u32, &'static str, fn(&mut Ctx) -> Verdict, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            1,
            "dyadic birthdays",
            criterion_1,
            Some(Duration::from_secs(10)),
        ),
        (
            2,
            "day-set sizes",
            criterion_2,
            Some(Duration::from_secs(300)),
        ),
        (3, "numbers decomposable iff |x| > 1", criterion_3, None),
        (
            4,
            "nimbers decomposable iff not a power of two",
            criterion_4,
            None,
        ),
        (5, "{0|*2} example", criterion_5, None),
        (6, "distance examples", criterion_6, None),
        (7, "distance predictions and zero sums", criterion_7, None),
        (8, "stops and number avoidance", criterion_8, None),
        (9, "birthday of x + *n", criterion_9, None),
        (
            10,
            "hackenbush suite",
            criterion_10,
            Some(Duration::from_secs(120)),
        ),
        (11, "endgame rules", criterion_11, None),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut cx = Ctx::new();
    let mut failed = 0;
    for (n, name, check, limit) in criteria {
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| name.contains(f.as_str()) || *f == n.to_string())
        {
            continue;
        }
        let start = Instant::now();
        let mut verdict = check(&mut cx);
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(limit)) = (&verdict, limit) {
            if elapsed > limit {
                verdict = Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        match verdict {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
