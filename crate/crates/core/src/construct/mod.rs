//! Automata from regular expressions.

mod derivatives;
mod position;
mod thompson;

use std::fmt;
use std::str::FromStr;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::regex::RegEx;

pub use derivatives::{
    construct_brzozowski, construct_brzozowski_with_cap, construct_pd, derivative,
    partial_derivatives, DEFAULT_STATE_CAP,
};
pub use position::{construct_position, position_sets, PositionSets};
pub use thompson::{construct_follow, construct_of};

/// The available constructions, named as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Of,
    Follow,
    Position,
    Pd,
    Brzozowski,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Of,
        Method::Follow,
        Method::Position,
        Method::Pd,
        Method::Brzozowski,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Of => "of",
            Method::Follow => "follow",
            Method::Position => "pos",
            Method::Pd => "pd",
            Method::Brzozowski => "bdfa",
        }
    }

    pub fn build(self, r: &RegEx) -> Result<Automaton> {
        Ok(match self {
            Method::Of => construct_of(r),
            Method::Follow => construct_follow(r),
            Method::Position => construct_position(r),
            Method::Pd => construct_pd(r),
            Method::Brzozowski => construct_brzozowski(r)?,
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction '{s}'")))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
