//! Witness families.

use std::fmt;
use std::str::FromStr;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::regex::RegEx;

/// Largest recursion depth accepted for the first growth row, whose
/// alphabetic width doubles at every level.
pub const GROWTH_ROW1_MAX: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `r_1 = (ab)*`, `r_n = (a r_{n-1} b)*` and its chain DFA.
    Buffer(usize),
    /// `(a1+λ)(a2+λ)…(an+λ)`.
    Options(usize),
    /// Four expression families whose automata grow at different rates;
    /// `m` only matters for row 2 and defaults to `n`.
    Growth { row: u8, n: usize, m: Option<usize> },
    /// Partial DFA of the shuffle of `(a_i b_i)*`, `i = 1..d`.
    Hypercube(usize),
    /// Product of the counters `|w|_a mod m` and `|w|_b mod n`.
    Torus(usize, usize),
}

/// What a family provides.
#[derive(Clone, Debug)]
pub struct Generated {
    pub regex: Option<RegEx>,
    pub automaton: Option<Automaton>,
}

fn sym(name: String) -> RegEx {
    RegEx::sym(&name).expect("generated symbol")
}

fn letters(prefix: char, range: std::ops::RangeInclusive<usize>) -> RegEx {
    RegEx::sum(range.map(|i| sym(format!("{prefix}{i}"))))
}

pub fn buffer_regex(n: usize) -> RegEx {
    let ab = || RegEx::concat(sym("a".into()), sym("b".into()));
    let mut r = RegEx::star(ab());
    for _ in 1..n {
        r = RegEx::star(RegEx::product([sym("a".into()), r, sym("b".into())]));
    }
    r
}

/// Chain `0 … n`: `a` moves right, `b` moves left, state 0 is initial and
/// final.
pub fn buffer_dfa(n: usize) -> Automaton {
    let mut a = Automaton::new(n + 1);
    for i in 0..n {
        a.add("a", i, i + 1);
        a.add("b", i + 1, i);
    }
    a.set_final(0, true);
    a
}

pub fn options_regex(n: usize) -> RegEx {
    RegEx::product((1..=n).map(|i| RegEx::union(sym(format!("a{i}")), RegEx::Epsilon)))
}

fn shift(r: &RegEx, by: usize) -> RegEx {
    match r {
        RegEx::Sym(s) => {
            let i: usize = s.as_str()[1..].parse().expect("indexed letter");
            sym(format!("a{}", i + by))
        }
        RegEx::Union(x, y) => RegEx::union(shift(x, by), shift(y, by)),
        RegEx::Concat(x, y) => RegEx::concat(shift(x, by), shift(y, by)),
        RegEx::Star(x) => RegEx::star(shift(x, by)),
        RegEx::Optional(x) => RegEx::optional(shift(x, by)),
        RegEx::Empty | RegEx::Epsilon => r.clone(),
    }
}

pub fn growth_regex(row: u8, n: usize, m: Option<usize>) -> Result<RegEx> {
    match row {
        1 => {
            if n > GROWTH_ROW1_MAX {
                return Err(Error::InvalidFamily(format!(
                    "growth row 1 depth {n} exceeds {GROWTH_ROW1_MAX}"
                )));
            }
            let mut r = RegEx::star(RegEx::union(sym("a1".into()), RegEx::Epsilon));
            for k in 1..n {
                let s = shift(&r, 1 << (k - 1));
                r = RegEx::star(RegEx::union(r, s));
            }
            Ok(r)
        }
        2 => {
            let m = m.unwrap_or(n);
            if m == 0 {
                return Err(Error::InvalidFamily("growth row 2 needs m >= 1".into()));
            }
            let head = letters('a', 1..=n);
            let body = RegEx::union(letters('a', 1..=n), letters('b', 1..=m));
            Ok(RegEx::concat(head, RegEx::star(body)))
        }
        3 => {
            let tail = RegEx::star(letters('b', 1..=n));
            Ok(RegEx::sum((1..=n).map(|i| {
                RegEx::concat(sym(format!("a{i}")), tail.clone())
            })))
        }
        4 => Ok(options_regex(n)),
        _ => Err(Error::InvalidFamily(format!(
            "growth has rows 1 to 4, not {row}"
        ))),
    }
}

/// States are bit vectors; `a_i` sets bit `i-1` and `b_i` clears it.
pub fn hypercube_dfa(d: usize) -> Automaton {
    let n = 1usize << d;
    let mut a = Automaton::new(n);
    for v in 0..n {
        for i in 0..d {
            let bit = 1 << i;
            if v & bit == 0 {
                a.add(&format!("a{}", i + 1), v, v | bit);
            } else {
                a.add(&format!("b{}", i + 1), v, v & !bit);
            }
        }
    }
    a.set_final(0, true);
    a
}

/// State `(i, j)` is `i·n + j`; `a` advances `i` mod `m`, `b` advances `j`
/// mod `n`.
pub fn torus_dfa(m: usize, n: usize) -> Automaton {
    let id = |i: usize, j: usize| i * n + j;
    let mut a = Automaton::new(m * n);
    for i in 0..m {
        for j in 0..n {
            a.add("a", id(i, j), id((i + 1) % m, j));
            a.add("b", id(i, j), id(i, (j + 1) % n));
        }
    }
    a.set_final(0, true);
    a
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Family::Buffer(n) | Family::Options(n) | Family::Hypercube(n) => *n >= 1,
            Family::Growth { row, n, m } => {
                (1..=4).contains(row) && *n >= 1 && m.is_none_or(|m| m >= 1)
            }
            Family::Torus(m, n) => *m >= 1 && m <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!(
                "invalid parameters in {self}"
            )))
        }
    }

    pub fn generate(&self) -> Result<Generated> {
        self.validate()?;
        Ok(match *self {
            Family::Buffer(n) => Generated {
                regex: Some(buffer_regex(n)),
                automaton: Some(buffer_dfa(n)),
            },
            Family::Options(n) => Generated {
                regex: Some(options_regex(n)),
                automaton: None,
            },
            Family::Growth { row, n, m } => Generated {
                regex: Some(growth_regex(row, n, m)?),
                automaton: None,
            },
            Family::Hypercube(d) => Generated {
                regex: None,
                automaton: Some(hypercube_dfa(d)),
            },
            Family::Torus(m, n) => Generated {
                regex: None,
                automaton: Some(torus_dfa(m, n)),
            },
        })
    }

    /// Name without parameters, as used in benchmark records.
    pub fn kind(&self) -> String {
        match self {
            Family::Buffer(_) => "buffer".into(),
            Family::Options(_) => "options".into(),
            Family::Growth { row, .. } => format!("growth-row{row}"),
            Family::Hypercube(_) => "hypercube".into(),
            Family::Torus(..) => "torus".into(),
        }
    }

    /// The main size parameter.
    pub fn n(&self) -> usize {
        match *self {
            Family::Buffer(n) | Family::Options(n) | Family::Hypercube(n) => n,
            Family::Growth { n, .. } => n,
            Family::Torus(_, n) => n,
        }
    }
}

pub fn gen_family(f: &Family) -> Result<Generated> {
    f.generate()
}

/// `buffer:6`, `options:5`, `growth:3:8`, `growth:2:8:4`, `hypercube:3`,
/// `torus:2:4`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let parts: Vec<&str> = s.split([':', ',']).collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| Error::InvalidFamily(format!("missing parameter in '{s}'")))?
                .parse()
                .map_err(|_| Error::InvalidFamily(format!("bad parameter in '{s}'")))
        };
        let f = match (parts[0], parts.len()) {
            ("buffer", 2) => Family::Buffer(num(1)?),
            ("options", 2) => Family::Options(num(1)?),
            ("hypercube", 2) => Family::Hypercube(num(1)?),
            ("torus", 3) => Family::Torus(num(1)?, num(2)?),
            ("growth", 3) => Family::Growth {
                row: num(1)? as u8,
                n: num(2)?,
                m: None,
            },
            ("growth", 4) => Family::Growth {
                row: num(1)? as u8,
                n: num(2)?,
                m: Some(num(3)?),
            },
            _ => return Err(Error::InvalidFamily(format!("unknown family '{s}'"))),
        };
        f.validate()?;
        Ok(f)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Buffer(n) => write!(f, "buffer:{n}"),
            Family::Options(n) => write!(f, "options:{n}"),
            Family::Growth { row, n, m: None } => write!(f, "growth:{row}:{n}"),
            Family::Growth { row, n, m: Some(m) } => write!(f, "growth:{row}:{n}:{m}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Torus(m, n) => write!(f, "torus:{m}:{n}"),
        }
    }
}
