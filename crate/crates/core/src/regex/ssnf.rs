//! Strong star normal form.
//!
//! Constants are first pushed out of compound expressions (`s+λ` becomes
//! `s?`, `∅` is absorbed, `λ` is a unit), so the result is either `∅`, `λ`
//! or an expression built from letters with `+`, `·`, `*` and `?` only.
//! Then the operators `∘` and `•` are applied:
//!
//! ```text
//! a∘ = a      (r+s)∘ = r∘+s∘   r?∘ = r∘   r*∘ = r∘
//! (rs)∘ = rs if λ ∉ L(rs), else r∘+s∘
//! a• = a      (r+s)• = r•+s•   (rs)• = r•s•   r*• = (r•∘)*
//! r?• = r• if λ ∈ L(r), else (r•)?
//! ```

use super::RegEx;

pub fn ssnf(r: &RegEx) -> RegEx {
    match strip_constants(r) {
        c @ (RegEx::Empty | RegEx::Epsilon) => c,
        e => bullet(&e),
    }
}

fn strip_constants(r: &RegEx) -> RegEx {
    match r {
        RegEx::Empty | RegEx::Epsilon | RegEx::Sym(_) => r.clone(),
        RegEx::Union(s, t) => match (strip_constants(s), strip_constants(t)) {
            (RegEx::Empty, x) | (x, RegEx::Empty) => x,
            (RegEx::Epsilon, RegEx::Epsilon) => RegEx::Epsilon,
            (RegEx::Epsilon, x) | (x, RegEx::Epsilon) => {
                if x.nullable() {
                    x
                } else {
                    RegEx::optional(x)
                }
            }
            (x, y) => RegEx::union(x, y),
        },
        RegEx::Concat(s, t) => match (strip_constants(s), strip_constants(t)) {
            (RegEx::Empty, _) | (_, RegEx::Empty) => RegEx::Empty,
            (RegEx::Epsilon, x) | (x, RegEx::Epsilon) => x,
            (x, y) => RegEx::concat(x, y),
        },
        RegEx::Star(s) => match strip_constants(s) {
            RegEx::Empty | RegEx::Epsilon => RegEx::Epsilon,
            x => RegEx::star(x),
        },
        RegEx::Optional(s) => match strip_constants(s) {
            RegEx::Empty | RegEx::Epsilon => RegEx::Epsilon,
            x => RegEx::optional(x),
        },
    }
}

fn circle(r: &RegEx) -> RegEx {
    match r {
        RegEx::Union(s, t) => RegEx::union(circle(s), circle(t)),
        RegEx::Optional(s) | RegEx::Star(s) => circle(s),
        RegEx::Concat(s, t) => {
            if r.nullable() {
                RegEx::union(circle(s), circle(t))
            } else {
                r.clone()
            }
        }
        _ => r.clone(),
    }
}

fn bullet(r: &RegEx) -> RegEx {
    match r {
        RegEx::Union(s, t) => RegEx::union(bullet(s), bullet(t)),
        RegEx::Concat(s, t) => RegEx::concat(bullet(s), bullet(t)),
        RegEx::Star(s) => RegEx::star(circle(&bullet(s))),
        RegEx::Optional(s) => {
            let b = bullet(s);
            if s.nullable() {
                b
            } else {
                RegEx::optional(b)
            }
        }
        _ => r.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> String {
        ssnf(&s.parse().unwrap()).to_string()
    }

    #[test]
    fn worked_cases() {
        assert_eq!(n("(a*)*"), "a*");
        assert_eq!(n("(a*b*)*"), "(a+b)*");
        assert_eq!(n("(a+&)*"), "a*");
    }

    #[test]
    fn constants() {
        assert_eq!(n("#"), "#");
        assert_eq!(n("&"), "&");
        assert_eq!(n("a#+&"), "&");
        assert_eq!(n("&a&"), "a");
        assert_eq!(n("a+&"), "a?");
        assert_eq!(n("a*+&"), "a*");
        assert_eq!(n("(a?)?"), "a?");
    }

    #[test]
    fn non_nullable_product_under_star_is_kept() {
        assert_eq!(n("(ab)*"), "(ab)*");
        assert_eq!(n("(a?b?)*"), "(a+b)*");
    }
}
