//! Text notation for games.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := '-' term | atom
//! atom  := '{' list '|' list '}' | '(' expr ')'
//!        | INT | INT '/' POW2          dyadic number
//!        | '*' INT?                    nimber, `*` alone is *1
//!        | ('^' | 'v') INT? ('*' INT?)? k-fold up / down, optional star
//! list  := (expr (',' expr)*)?
//! ```
//!
//! `↑`, `↓`, `⇑`, `⇓` and the Unicode minus are accepted on input. Output is
//! ASCII: numbers as integers or `p/q`, nimbers as `*k`, anything else as
//! braces over the printed canonical options, each side sorted.

use std::fmt;

use crate::canonical::NimberSize;
use crate::dyadic::{Dyadic, MAX_EXPONENT};
use crate::error::{ParseError, Result};
use crate::form::{Arena, FormId};

/// Parsed notation, before it is built into an arena.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameExpr {
    Braces(Vec<GameExpr>, Vec<GameExpr>),
    Number(Dyadic),
    Nimber(u32),
    /// `count` copies of up (negative for down), plus `*star`.
    Up {
        count: i64,
        star: u32,
    },
    Sum(Box<GameExpr>, Box<GameExpr>),
    Neg(Box<GameExpr>),
}

impl GameExpr {
    pub fn parse(text: &str) -> Result<GameExpr, ParseError> {
        let mut p = Parser { src: text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Builds the denoted form. Braces build the literal form, sums are
    /// form-level sums; nothing is canonicalized.
    pub fn build(&self, arena: &mut Arena) -> Result<FormId> {
        Ok(match self {
            GameExpr::Braces(l, r) => {
                let l = l
                    .iter()
                    .map(|e| e.build(arena))
                    .collect::<Result<Vec<_>>>()?;
                let r = r
                    .iter()
                    .map(|e| e.build(arena))
                    .collect::<Result<Vec<_>>>()?;
                arena.make_form(&l, &r)?
            }
            GameExpr::Number(x) => arena.dyadic_form(*x),
            GameExpr::Nimber(k) => arena.nimber(NimberSize::new(*k)?),
            GameExpr::Up { count, star } => {
                let s = arena.star(1);
                let up = arena.intern(vec![FormId::ZERO], vec![s]);
                let ups = arena.multiple(up, *count);
                let st = arena.nimber(NimberSize::new(*star)?);
                arena.sum(ups, st)
            }
            GameExpr::Sum(a, b) => {
                let a = a.build(arena)?;
                let b = b.build(arena)?;
                arena.sum(a, b)
            }
            GameExpr::Neg(a) => {
                let a = a.build(arena)?;
                arena.negate(a)
            }
        })
    }
}

impl fmt::Display for GameExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameExpr::Braces(l, r) => {
                f.write_str("{")?;
                for (i, e) in l.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("|")?;
                for (i, e) in r.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("}")
            }
            GameExpr::Number(x) => write!(f, "{x}"),
            GameExpr::Nimber(1) => f.write_str("*"),
            GameExpr::Nimber(k) => write!(f, "*{k}"),
            GameExpr::Up { count, star } => {
                f.write_str(if *count < 0 { "v" } else { "^" })?;
                if count.unsigned_abs() != 1 {
                    write!(f, "{}", count.unsigned_abs())?;
                }
                match star {
                    0 => Ok(()),
                    1 => f.write_str("*"),
                    k => write!(f, "*{k}"),
                }
            }
            GameExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            GameExpr::Neg(a) => write!(f, "-({a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GameExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = GameExpr::Sum(Box::new(acc), Box::new(rhs));
                }
                Some('-' | '\u{2212}') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = GameExpr::Sum(Box::new(acc), Box::new(GameExpr::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GameExpr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('-' | '\u{2212}') => {
                self.bump();
                let inner = self.term()?;
                Ok(match inner {
                    GameExpr::Number(x) => GameExpr::Number(-x),
                    e => GameExpr::Neg(Box::new(e)),
                })
            }
            _ => self.atom(),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn int(&mut self, what: &str) -> Result<Option<u64>, ParseError> {
        let at = self.pos;
        match self.digits() {
            None => Ok(None),
            Some(d) => d
                .parse::<u64>()
                .map(Some)
                .map_err(|_| ParseError::new(at, format!("{what} out of range"))),
        }
    }

    fn nimber_size(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let k = self.int("nimber size")?.unwrap_or(1);
        u32::try_from(k)
            .ok()
            .filter(|&k| NimberSize::new(k).is_ok())
            .ok_or_else(|| ParseError::new(at, format!("nimber size {k} exceeds the engine limit")))
    }

    fn list(&mut self, close: char) -> Result<Vec<GameExpr>, ParseError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            return Ok(items);
        }
        loop {
            items.push(self.expr()?);
            if !self.eat(',') {
                return Ok(items);
            }
        }
    }

    fn ups(&mut self, sign: i64, base: i64) -> Result<GameExpr, ParseError> {
        let at = self.pos;
        let mult = self.int("up multiple")?.unwrap_or(1);
        let count = i64::try_from(mult)
            .ok()
            .and_then(|m| m.checked_mul(base * sign))
            .filter(|m| m.unsigned_abs() <= 4096)
            .ok_or_else(|| ParseError::new(at, "up multiple too large"))?;
        let star = if self.peek() == Some('*') {
            self.bump();
            self.nimber_size()?
        } else {
            0
        };
        Ok(GameExpr::Up { count, star })
    }

    fn atom(&mut self) -> Result<GameExpr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('{') => {
                self.bump();
                let left = self.list('|')?;
                if !self.eat('|') {
                    return Err(self.error("expected `|`"));
                }
                let right = self.list('}')?;
                if !self.eat('}') {
                    return Err(self.error("expected `}`"));
                }
                Ok(GameExpr::Braces(left, right))
            }
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some('*') => {
                self.bump();
                Ok(GameExpr::Nimber(self.nimber_size()?))
            }
            Some('^' | '\u{2191}') => {
                self.bump();
                self.ups(1, 1)
            }
            Some('v' | '\u{2193}') => {
                self.bump();
                self.ups(-1, 1)
            }
            Some('\u{21d1}') => {
                self.bump();
                self.ups(1, 2)
            }
            Some('\u{21d3}') => {
                self.bump();
                self.ups(-1, 2)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.int("numerator")?.unwrap_or(0);
                let p =
                    i64::try_from(p).map_err(|_| ParseError::new(start, "number out of range"))?;
                let mut exp = 0;
                if self.peek() == Some('/') {
                    self.bump();
                    let at = self.pos;
                    let q = self
                        .int("denominator")?
                        .ok_or_else(|| self.error("expected a denominator"))?;
                    if q == 0 || !q.is_power_of_two() {
                        return Err(ParseError::new(
                            at,
                            format!("denominator {q} is not a power of two"),
                        ));
                    }
                    exp = q.trailing_zeros();
                    if exp > MAX_EXPONENT {
                        return Err(ParseError::new(at, "denominator too large"));
                    }
                }
                if p > 1 << 20 {
                    return Err(ParseError::new(start, "number out of range"));
                }
                Ok(GameExpr::Number(Dyadic::new(p, exp)))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl Arena {
    /// Parses and builds a game from notation.
    pub fn parse(&mut self, text: &str) -> Result<FormId> {
        GameExpr::parse(text)?.build(self)
    }

    /// Prints the canonical form of `g`.
    pub fn print(&mut self, g: FormId) -> String {
        let c = self.canonical(g);
        self.print_canonical(c)
    }

    /// Prints a form that is already canonical.
    pub fn print_canonical(&self, c: FormId) -> String {
        let mut out = String::new();
        self.write_canonical(c, &mut out);
        out
    }

    fn write_canonical(&self, c: FormId, out: &mut String) {
        if let Some(x) = self.structural_number(c) {
            out.push_str(&x.to_string());
            return;
        }
        if let Some(k) = self.structural_nimber(c) {
            match k {
                1 => out.push('*'),
                k => {
                    out.push('*');
                    out.push_str(&k.to_string());
                }
            }
            return;
        }
        let side = |opts: &[FormId]| {
            let mut printed: Vec<String> = opts.iter().map(|&o| self.print_canonical(o)).collect();
            printed.sort();
            printed.join(",")
        };
        out.push('{');
        out.push_str(&side(self.left(c)));
        out.push('|');
        out.push_str(&side(self.right(c)));
        out.push('}');
    }

    /// Number recognition for canonical forms without touching memo tables.
    fn structural_number(&self, c: FormId) -> Option<Dyadic> {
        let (l, r) = (self.left(c), self.right(c));
        if l.len() > 1 || r.len() > 1 {
            return None;
        }
        let lo = match l.first() {
            Some(&x) => Some(self.structural_number(x)?),
            None => None,
        };
        let hi = match r.first() {
            Some(&x) => Some(self.structural_number(x)?),
            None => None,
        };
        Dyadic::simplest_between(lo, hi)
    }

    fn structural_nimber(&self, c: FormId) -> Option<u32> {
        let (l, r) = (self.left(c), self.right(c));
        if l != r {
            return None;
        }
        let mut seen = vec![false; l.len()];
        for &o in l {
            let k = self.structural_nimber(o)? as usize;
            if k >= seen.len() || seen[k] {
                return None;
            }
            seen[k] = true;
        }
        Some(l.len() as u32)
    }
}
