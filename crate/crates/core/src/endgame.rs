//! Move selection in sums of numbers and sums of nimbers.

use std::fmt;
use std::str::FromStr;

use crate::canonical::nim_sum;
use crate::dyadic::Dyadic;
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Left => "L",
            Player::Right => "R",
        })
    }
}

impl FromStr for Player {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L" | "l" | "Left" | "left" => Ok(Player::Left),
            "R" | "r" | "Right" | "right" => Ok(Player::Right),
            _ => Err(ParseError::new(0, format!("expected L or R, got `{s}`"))),
        }
    }
}

/// Whether `player` has a move in the canonical form of `x`.
fn can_move(x: Dyadic, player: Player) -> bool {
    match player {
        Player::Left => !x.is_integer() || x > Dyadic::ZERO,
        Player::Right => !x.is_integer() || x < Dyadic::ZERO,
    }
}

/// Picks the component to play in a sum of canonical numbers.
///
/// A move in `m + r/2^n` shifts the total by `1/2^n` against the mover and a
/// move in an integer by 1, so the mover plays in the fraction with the
/// greatest denominator, or in any integer they can move in when there are
/// no fractions. Ties go to the lowest index.
pub fn best_number_move(components: &[Dyadic], player: Player) -> Result<usize> {
    if components.is_empty() {
        return Err(Error::EmptyComponents);
    }
    let fraction = components
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_integer())
        .max_by(|(i, x), (j, y)| x.exponent().cmp(&y.exponent()).then(j.cmp(i)))
        .map(|(i, _)| i);
    if let Some(i) = fraction {
        return Ok(i);
    }
    components
        .iter()
        .position(|&x| can_move(x, player))
        .ok_or(Error::NoMove)
}

/// A winning nim move `(heap index, new size)`, or `None` in a zero position.
pub fn best_nim_move(heaps: &[u32]) -> Option<(usize, u32)> {
    let total = heaps.iter().fold(0, |acc, &h| nim_sum(acc, h));
    if total == 0 {
        return None;
    }
    heaps.iter().enumerate().find_map(|(i, &h)| {
        let target = nim_sum(h, total);
        (target < h).then_some((i, target))
    })
}
