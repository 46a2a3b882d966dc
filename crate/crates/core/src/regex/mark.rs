use std::fmt;

use super::{RegEx, Symbol};

/// Expression tree whose letters carry their position (1-based, left to
/// right).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Marked {
    Empty,
    Epsilon,
    Pos(usize, Symbol),
    Union(Box<Marked>, Box<Marked>),
    Concat(Box<Marked>, Box<Marked>),
    Star(Box<Marked>),
    Optional(Box<Marked>),
}

/// A marked expression together with the expression it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedRegEx {
    tree: Marked,
    origin: RegEx,
    letters: Vec<Symbol>,
}

impl MarkedRegEx {
    pub fn tree(&self) -> &Marked {
        &self.tree
    }

    pub fn origin(&self) -> &RegEx {
        &self.origin
    }

    pub fn awidth(&self) -> usize {
        self.letters.len()
    }

    /// Letter at position `i` (1-based).
    pub fn letter(&self, i: usize) -> &Symbol {
        &self.letters[i - 1]
    }
}

pub fn mark(r: &RegEx) -> MarkedRegEx {
    let mut letters = Vec::new();
    let tree = mark_rec(r, &mut letters);
    MarkedRegEx {
        tree,
        origin: r.clone(),
        letters,
    }
}

fn mark_rec(r: &RegEx, letters: &mut Vec<Symbol>) -> Marked {
    match r {
        RegEx::Empty => Marked::Empty,
        RegEx::Epsilon => Marked::Epsilon,
        RegEx::Sym(a) => {
            letters.push(a.clone());
            Marked::Pos(letters.len(), a.clone())
        }
        RegEx::Union(s, t) => {
            let s = mark_rec(s, letters);
            Marked::Union(Box::new(s), Box::new(mark_rec(t, letters)))
        }
        RegEx::Concat(s, t) => {
            let s = mark_rec(s, letters);
            Marked::Concat(Box::new(s), Box::new(mark_rec(t, letters)))
        }
        RegEx::Star(s) => Marked::Star(Box::new(mark_rec(s, letters))),
        RegEx::Optional(s) => Marked::Optional(Box::new(mark_rec(s, letters))),
    }
}

/// Erases the position indices.
pub fn unmark(m: &MarkedRegEx) -> RegEx {
    m.tree.unmark()
}

impl Marked {
    pub fn unmark(&self) -> RegEx {
        match self {
            Marked::Empty => RegEx::Empty,
            Marked::Epsilon => RegEx::Epsilon,
            Marked::Pos(_, a) => RegEx::Sym(a.clone()),
            Marked::Union(s, t) => RegEx::union(s.unmark(), t.unmark()),
            Marked::Concat(s, t) => RegEx::concat(s.unmark(), t.unmark()),
            Marked::Star(s) => RegEx::star(s.unmark()),
            Marked::Optional(s) => RegEx::optional(s.unmark()),
        }
    }

    pub fn nullable(&self) -> bool {
        match self {
            Marked::Empty | Marked::Pos(..) => false,
            Marked::Epsilon | Marked::Star(_) | Marked::Optional(_) => true,
            Marked::Union(s, t) => s.nullable() || t.nullable(),
            Marked::Concat(s, t) => s.nullable() && t.nullable(),
        }
    }

    /// Position indices in left-to-right order.
    pub fn positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_positions(&mut out);
        out
    }

    fn collect_positions(&self, out: &mut Vec<usize>) {
        match self {
            Marked::Empty | Marked::Epsilon => {}
            Marked::Pos(i, _) => out.push(*i),
            Marked::Union(s, t) | Marked::Concat(s, t) => {
                s.collect_positions(out);
                t.collect_positions(out);
            }
            Marked::Star(s) | Marked::Optional(s) => s.collect_positions(out),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Marked::Union(..) => 0,
            Marked::Concat(..) => 1,
            Marked::Star(_) | Marked::Optional(_) => 2,
            _ => 3,
        }
    }

    fn write_child(&self, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// Letters are written with subscript positions, e.g. `(a₁(a₂b₃)*b₄)*`.
impl fmt::Display for Marked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marked::Empty => f.write_str("∅"),
            Marked::Epsilon => f.write_str("λ"),
            Marked::Pos(i, a) => write!(f, "{a}{}", subscript(*i)),
            Marked::Union(s, t) => {
                s.write_child(0, f)?;
                f.write_str("+")?;
                t.write_child(1, f)
            }
            Marked::Concat(s, t) => {
                s.write_child(1, f)?;
                t.write_child(2, f)
            }
            Marked::Star(s) => {
                s.write_child(2, f)?;
                f.write_str("*")
            }
            Marked::Optional(s) => {
                s.write_child(2, f)?;
                f.write_str("?")
            }
        }
    }
}

impl fmt::Display for MarkedRegEx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_buffer_two() {
        let m = mark(&"(a(ab)*b)*".parse().unwrap());
        assert_eq!(m.to_string(), "(a₁(a₂b₃)*b₄)*");
        assert_eq!(m.awidth(), 4);
        assert_eq!(m.letter(3).as_str(), "b");
    }

    #[test]
    fn single_letter_and_epsilon() {
        assert_eq!(mark(&"a".parse().unwrap()).to_string(), "a₁");
        let eps = mark(&RegEx::Epsilon);
        assert_eq!(eps.to_string(), "λ");
        assert_eq!(eps.awidth(), 0);
    }

    #[test]
    fn unmark_restores_origin() {
        let r: RegEx = "(a1+&)(b2c3)*?+#".parse().unwrap();
        let m = mark(&r);
        assert_eq!(unmark(&m), r);
        assert_eq!(m.tree().positions(), vec![1, 2, 3]);
    }
}
