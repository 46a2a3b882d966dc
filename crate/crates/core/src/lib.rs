//! Conversions between regular expressions and finite automata.
//!
//! The crate is organised by direction of travel:
//!
//! - [`regex`]: expression syntax trees, parsing and rendering, size
//!   measures, marking, strong star normal form and random generation.
//! - [`automaton`]: one automaton type covering λ-NFAs, NFAs and DFAs, with
//!   acceptance, λ-removal, determinization, minimization and an
//!   equivalence oracle.
//! - [`construct`]: expression to automaton (Ott–Feinstein, follow,
//!   position, partial-derivative and derivative DFA constructions).
//! - [`convert`]: automaton to expression (state elimination with
//!   pluggable orderings, Arden's lemma, McNaughton–Yamada, simplifier).
//! - [`graph`]: digraph measures used by the above (SCCs, cycle rank,
//!   independent sets, cycle counting, star height of bideterministic
//!   languages).
//! - [`toolkit`]: witness families, random automata and benchmarks.
//! - [`cli`]: the `refa` command line front end.
//!
//! ```
//! use refa::regex::RegEx;
//! use refa::construct::construct_position;
//! use refa::convert::{state_elimination, Ordering, Strategy};
//!
//! let r: RegEx = "(a(ab)*b)*".parse().unwrap();
//! let pos = construct_position(&r);
//! assert_eq!(pos.num_states(), 5);
//! let back = state_elimination(&pos, &Ordering::new(Strategy::DelgadoMorais)).unwrap();
//! assert!(refa::automaton::equivalent(&pos, &construct_position(&back)));
//! ```

pub mod automaton;
pub mod cli;
pub mod construct;
pub mod convert;
pub mod error;
pub mod graph;
pub mod regex;
pub mod toolkit;

pub use error::{Error, Result};
