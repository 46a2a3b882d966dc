//! Concrete syntax.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('·'? factor)*
//! factor := base ('*' | '?')*
//! base   := '(' expr ')' | '#' | '&' | SYMBOL
//! SYMBOL := [A-Za-z][0-9]*
//! ```
//!
//! `#` is the empty set and `&` the empty word; `∅`, `λ` and `ε` are accepted
//! as aliases on input. Binary operators group to the left. Offsets in error
//! messages count characters.

use super::{RegEx, Symbol};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<RegEx> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = Parser { chars, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let r = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(r),
        Some(')') => Err(p.error("unbalanced ')'")),
        Some(c) => Err(p.error(&format!("unexpected '{c}'"))),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn starts_base(c: char) -> bool {
        c == '('
            || c == '#'
            || c == '&'
            || c == '∅'
            || c == 'λ'
            || c == 'ε'
            || c.is_ascii_alphabetic()
    }

    fn expr(&mut self) -> Result<RegEx> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('+') {
                return Ok(acc);
            }
            self.pos += 1;
            self.skip_ws();
            match self.peek() {
                Some(c) if Self::starts_base(c) => {}
                _ => return Err(self.error("dangling '+'")),
            }
            let rhs = self.term()?;
            acc = RegEx::union(acc, rhs);
        }
    }

    fn term(&mut self) -> Result<RegEx> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('·') | Some('.') => {
                    self.pos += 1;
                    self.skip_ws();
                    match self.peek() {
                        Some(c) if Self::starts_base(c) => {}
                        _ => return Err(self.error("dangling '·'")),
                    }
                }
                Some(c) if Self::starts_base(c) => {}
                _ => return Ok(acc),
            }
            let rhs = self.factor()?;
            acc = RegEx::concat(acc, rhs);
        }
    }

    fn factor(&mut self) -> Result<RegEx> {
        let mut acc = self.base()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => acc = RegEx::star(acc),
                Some('?') => acc = RegEx::optional(acc),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn base(&mut self) -> Result<RegEx> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        match c {
            '(' => {
                self.pos += 1;
                self.skip_ws();
                if self.at_end() {
                    return Err(self.error("expected ')'"));
                }
                if self.peek() == Some(')') {
                    return Err(self.error("empty parentheses"));
                }
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            '#' | '∅' => {
                self.pos += 1;
                Ok(RegEx::Empty)
            }
            '&' | 'λ' | 'ε' => {
                self.pos += 1;
                Ok(RegEx::Epsilon)
            }
            c if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(RegEx::Sym(Symbol::new(&name)?))
            }
            c => Err(self.error(&format!("unexpected '{c}'"))),
        }
    }
}

#[derive(Clone, Copy)]
struct Lexemes {
    empty: &'static str,
    epsilon: &'static str,
}

const ASCII: Lexemes = Lexemes {
    empty: "#",
    epsilon: "&",
};

const UNICODE: Lexemes = Lexemes {
    empty: "∅",
    epsilon: "λ",
};

/// Renders with the fewest parentheses that still parse back to the same
/// tree; right-nested unions and concatenations keep their brackets.
pub fn render(r: &RegEx) -> String {
    let mut out = String::new();
    write_expr(r, ASCII, &mut out);
    out
}

/// Like [`render`] but with `∅` and `λ` for the constants.
pub fn render_unicode(r: &RegEx) -> String {
    let mut out = String::new();
    write_expr(r, UNICODE, &mut out);
    out
}

fn precedence(r: &RegEx) -> u8 {
    match r {
        RegEx::Union(..) => 0,
        RegEx::Concat(..) => 1,
        RegEx::Star(_) | RegEx::Optional(_) => 2,
        _ => 3,
    }
}

fn write_child(r: &RegEx, min: u8, lex: Lexemes, out: &mut String) {
    if precedence(r) < min {
        out.push('(');
        write_expr(r, lex, out);
        out.push(')');
    } else {
        write_expr(r, lex, out);
    }
}

fn write_expr(r: &RegEx, lex: Lexemes, out: &mut String) {
    match r {
        RegEx::Empty => out.push_str(lex.empty),
        RegEx::Epsilon => out.push_str(lex.epsilon),
        RegEx::Sym(a) => out.push_str(a.as_str()),
        RegEx::Union(s, t) => {
            write_child(s, 0, lex, out);
            out.push('+');
            write_child(t, 1, lex, out);
        }
        RegEx::Concat(s, t) => {
            write_child(s, 1, lex, out);
            write_child(t, 2, lex, out);
        }
        RegEx::Star(s) => {
            write_child(s, 2, lex, out);
            out.push('*');
        }
        RegEx::Optional(s) => {
            write_child(s, 2, lex, out);
            out.push('?');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> RegEx {
        RegEx::sym(s).unwrap()
    }

    #[test]
    fn parses_star_of_concat() {
        assert_eq!(
            parse("(ab)*").unwrap(),
            RegEx::star(RegEx::concat(sym("a"), sym("b")))
        );
    }

    #[test]
    fn star_binds_tighter_than_union() {
        assert_eq!(
            parse("a+b*").unwrap(),
            RegEx::union(sym("a"), RegEx::star(sym("b")))
        );
    }

    #[test]
    fn binary_operators_group_left() {
        assert_eq!(
            parse("abc").unwrap(),
            RegEx::concat(RegEx::concat(sym("a"), sym("b")), sym("c"))
        );
        assert_eq!(
            parse("a+b+c").unwrap(),
            RegEx::union(RegEx::union(sym("a"), sym("b")), sym("c"))
        );
    }

    #[test]
    fn indexed_symbols_and_explicit_dot() {
        assert_eq!(
            parse("a1·b12").unwrap(),
            RegEx::concat(sym("a1"), sym("b12"))
        );
        assert_eq!(parse("a1b12").unwrap(), parse("a1 . b12").unwrap());
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("λ+∅").unwrap(), parse("&+#").unwrap());
        assert_eq!(parse("ε").unwrap(), RegEx::Epsilon);
    }

    fn offset(text: &str) -> usize {
        match parse(text) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(offset("(a"), 2);
        assert_eq!(offset(""), 0);
        assert_eq!(offset("   "), 3);
        assert_eq!(offset("a+"), 2);
        assert_eq!(offset("*a"), 0);
        assert_eq!(offset("a)"), 1);
        assert_eq!(offset("()"), 1);
        assert_eq!(offset("a+*"), 2);
    }

    #[test]
    fn render_examples() {
        assert_eq!(
            render(&RegEx::star(RegEx::concat(sym("a"), sym("b")))),
            "(ab)*"
        );
        assert_eq!(render(&RegEx::union(sym("a"), sym("b"))), "a+b");
        assert_eq!(render(&RegEx::Empty), "#");
        assert_eq!(render(&RegEx::Epsilon), "&");
        assert_eq!(render_unicode(&parse("&+#a").unwrap()), "λ+∅a");
    }

    #[test]
    fn render_keeps_right_nesting() {
        let right = RegEx::concat(sym("a"), RegEx::concat(sym("b"), sym("c")));
        assert_eq!(render(&right), "a(bc)");
        assert_eq!(parse(&render(&right)).unwrap(), right);
        let u = RegEx::union(sym("a"), RegEx::union(sym("b"), sym("c")));
        assert_eq!(render(&u), "a+(b+c)");
        let c = RegEx::concat(RegEx::union(sym("a"), sym("b")), sym("c"));
        assert_eq!(render(&c), "(a+b)c");
        assert_eq!(render(&parse("a**?").unwrap()), "a**?");
    }
}
