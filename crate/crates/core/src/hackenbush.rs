//! Blue-red-green Hackenbush strings.
//!
//! Cutting an edge removes it and everything above, so the options of a
//! string are its prefixes: Left may cut below any blue or green edge, Right
//! below any red or green edge.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::form::{Arena, FormId};

/// Longest string accepted.
pub const MAX_EDGES: usize = 1023;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Blue,
    Red,
    Green,
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::Blue, Edge::Red, Edge::Green];

    fn letter(self) -> char {
        match self {
            Edge::Blue => 'B',
            Edge::Red => 'R',
            Edge::Green => 'G',
        }
    }
}

/// Edges listed from the ground up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BrgString {
    edges: Vec<Edge>,
}

impl BrgString {
    pub fn new(edges: Vec<Edge>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::HackenbushGuard(edges.len()));
        }
        Ok(BrgString { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl FromStr for BrgString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let edges = s
            .char_indices()
            .map(|(i, c)| match c.to_ascii_uppercase() {
                'B' => Ok(Edge::Blue),
                'R' => Ok(Edge::Red),
                'G' => Ok(Edge::Green),
                _ => Err(ParseError::new(i, format!("expected B, R or G, got `{c}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        BrgString::new(edges)
    }
}

impl fmt::Display for BrgString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.edges
            .iter()
            .try_for_each(|e| write!(f, "{}", e.letter()))
    }
}

impl Arena {
    /// Canonical value of a string.
    pub fn string_value(&mut self, s: &BrgString) -> FormId {
        // prefix[i] is the value of the bottom i edges.
        let mut prefix = vec![FormId::ZERO];
        for top in 1..=s.len() {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, e) in s.edges()[..top].iter().enumerate() {
                if matches!(e, Edge::Blue | Edge::Green) {
                    left.push(prefix[i]);
                }
                if matches!(e, Edge::Red | Edge::Green) {
                    right.push(prefix[i]);
                }
            }
            prefix.push(self.reduce(left, right));
        }
        prefix[s.len()]
    }

    pub fn string_birthday(&mut self, s: &BrgString) -> u32 {
        let v = self.string_value(s);
        self.formal_birthday(v)
    }
}
