//! Regular expression syntax trees.
//!
//! Expressions are immutable trees with shared (`Arc`) children, so cloning
//! a subexpression is cheap and values can be handed across threads.

mod mark;
mod measure;
mod parse;
mod random;
mod ssnf;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use mark::{mark, unmark, Marked, MarkedRegEx};
pub use measure::{measures, MeasureReport};
pub use parse::{parse, render, render_unicode};
pub use random::{random_expr, random_expr_with, RandomExprConfig};
pub use ssnf::ssnf;

/// An alphabet letter: one ASCII letter followed by optional decimal digits
/// (`a`, `b`, `a1`, `b12`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() && chars.all(|d| d.is_ascii_digit()) => {
                Ok(Symbol(Arc::from(name)))
            }
            _ => Err(Error::InvalidSymbol(name.to_string())),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn sort_key(&self) -> (char, usize, &str, &str) {
        let s = self.as_str();
        let letter = s.chars().next().unwrap_or('\0');
        let digits = s[letter.len_utf8()..].trim_start_matches('0');
        (letter, digits.len(), digits, s)
    }
}

/// Letters order first by the leading character, then numerically by index,
/// so `a2 < a10 < b`.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Symbol::new(s)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Abstract syntax of a regular expression.
///
/// `Optional(r)` denotes `L(r) ∪ {λ}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegEx {
    Empty,
    Epsilon,
    Sym(Symbol),
    Union(Arc<RegEx>, Arc<RegEx>),
    Concat(Arc<RegEx>, Arc<RegEx>),
    Star(Arc<RegEx>),
    Optional(Arc<RegEx>),
}

impl RegEx {
    pub fn sym(name: &str) -> Result<RegEx> {
        Ok(RegEx::Sym(Symbol::new(name)?))
    }

    pub fn union(a: RegEx, b: RegEx) -> RegEx {
        RegEx::Union(Arc::new(a), Arc::new(b))
    }

    pub fn concat(a: RegEx, b: RegEx) -> RegEx {
        RegEx::Concat(Arc::new(a), Arc::new(b))
    }

    pub fn star(a: RegEx) -> RegEx {
        RegEx::Star(Arc::new(a))
    }

    pub fn optional(a: RegEx) -> RegEx {
        RegEx::Optional(Arc::new(a))
    }

    /// Left-associated union of the given expressions; `∅` when empty.
    pub fn sum<I: IntoIterator<Item = RegEx>>(items: I) -> RegEx {
        items
            .into_iter()
            .reduce(RegEx::union)
            .unwrap_or(RegEx::Empty)
    }

    /// Left-associated concatenation; `λ` when empty.
    pub fn product<I: IntoIterator<Item = RegEx>>(items: I) -> RegEx {
        items
            .into_iter()
            .reduce(RegEx::concat)
            .unwrap_or(RegEx::Epsilon)
    }

    /// True iff the empty word belongs to the language.
    pub fn nullable(&self) -> bool {
        match self {
            RegEx::Empty | RegEx::Sym(_) => false,
            RegEx::Epsilon | RegEx::Star(_) | RegEx::Optional(_) => true,
            RegEx::Union(s, t) => s.nullable() || t.nullable(),
            RegEx::Concat(s, t) => s.nullable() && t.nullable(),
        }
    }

    /// Letters occurring in the expression.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            RegEx::Empty | RegEx::Epsilon => {}
            RegEx::Sym(a) => {
                out.insert(a.clone());
            }
            RegEx::Union(s, t) | RegEx::Concat(s, t) => {
                s.collect_symbols(out);
                t.collect_symbols(out);
            }
            RegEx::Star(s) | RegEx::Optional(s) => s.collect_symbols(out),
        }
    }

    pub fn is_empty_set(&self) -> bool {
        matches!(self, RegEx::Empty)
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, RegEx::Epsilon)
    }
}

/// Free-function form of [`RegEx::nullable`].
pub fn nullable(r: &RegEx) -> bool {
    r.nullable()
}

impl FromStr for RegEx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl fmt::Display for RegEx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl fmt::Debug for RegEx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegEx({})", render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(s: &str) -> RegEx {
        s.parse().unwrap()
    }

    #[test]
    fn symbol_validation() {
        assert!(Symbol::new("a").is_ok());
        assert!(Symbol::new("b12").is_ok());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("1a").is_err());
        assert!(Symbol::new("ab").is_err());
    }

    #[test]
    fn symbol_order_is_numeric() {
        let mut v: Vec<Symbol> = ["b", "a10", "a2", "a"]
            .iter()
            .map(|s| Symbol::new(s).unwrap())
            .collect();
        v.sort();
        let names: Vec<&str> = v.iter().map(Symbol::as_str).collect();
        assert_eq!(names, ["a", "a2", "a10", "b"]);
    }

    #[test]
    fn nullable_examples() {
        assert!(re("(ab)*").nullable());
        assert!(!re("ab").nullable());
        assert!(!re("a+#").nullable());
        assert!(re("a?").nullable());
        assert!(re("&").nullable());
        assert!(!re("#").nullable());
    }
}
