//! A normal-play combinatorial game engine.
//!
//! Short game forms are hash-consed in an [`Arena`]; on top of that the crate
//! computes canonical forms, birthdays, stops, distances to a nimber, and
//! runs exhaustive decomposition searches over the values born by day 3.

pub mod analysis;
pub mod canonical;
pub mod dayset;
pub mod decompose;
pub mod dyadic;
pub mod endgame;
pub mod error;
pub mod form;
pub mod hackenbush;
pub mod notation;
pub mod verify;

pub use analysis::{Distance, StarComparison, StarPrediction, StarSystem, TemperatureClass};
pub use canonical::{nim_sum, number_birthday, NimberSize};
pub use dayset::{DaySet, DayStore};
pub use decompose::{BirthdayMode, Decomposition};
pub use dyadic::Dyadic;
pub use endgame::{best_nim_move, best_number_move, Player};
pub use error::{Error, ParseError, Result};
pub use form::{Arena, FormId, GameForm, Outcome};
pub use hackenbush::{BrgString, Edge};
pub use notation::GameExpr;
