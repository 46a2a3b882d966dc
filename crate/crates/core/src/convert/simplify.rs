//! Rewriting with the obvious identities.
//!
//! Rules, applied bottom-up until nothing changes:
//!
//! ```text
//! ∅+r → r    r+∅ → r    ∅r → ∅    r∅ → ∅    λr → r    rλ → r
//! ∅* → λ     λ* → λ     (r*)* → r*    ∅? → λ    λ? → λ
//! λ + rr* → r*    λ + r*r → r*
//! ```
//!
//! Duplicate union branches are dropped (compared up to reordering of
//! nested unions) and sums and products are regrouped to the left. The
//! last two rules look at the regrouped binary product, so they fire only
//! when `r` is not itself a product.

use std::collections::HashSet;

use crate::regex::{render, RegEx};

pub fn simplify(r: &RegEx) -> RegEx {
    let mut cur = step(r);
    loop {
        let next = step(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn step(r: &RegEx) -> RegEx {
    match r {
        RegEx::Empty | RegEx::Epsilon | RegEx::Sym(_) => r.clone(),
        RegEx::Union(s, t) => {
            let mut members = Vec::new();
            flatten_union(&step(s), &mut members);
            flatten_union(&step(t), &mut members);
            sum_of(members)
        }
        RegEx::Concat(s, t) => {
            let mut factors = Vec::new();
            flatten_concat(&step(s), &mut factors);
            flatten_concat(&step(t), &mut factors);
            if factors.iter().any(RegEx::is_empty_set) {
                return RegEx::Empty;
            }
            RegEx::product(factors.into_iter().filter(|f| !f.is_epsilon()))
        }
        RegEx::Star(s) => match step(s) {
            RegEx::Empty | RegEx::Epsilon => RegEx::Epsilon,
            inner @ RegEx::Star(_) => inner,
            inner => RegEx::star(inner),
        },
        RegEx::Optional(s) => match step(s) {
            RegEx::Empty | RegEx::Epsilon => RegEx::Epsilon,
            inner => RegEx::optional(inner),
        },
    }
}

fn flatten_union(r: &RegEx, out: &mut Vec<RegEx>) {
    match r {
        RegEx::Union(s, t) => {
            flatten_union(s, out);
            flatten_union(t, out);
        }
        _ => out.push(r.clone()),
    }
}

fn flatten_concat(r: &RegEx, out: &mut Vec<RegEx>) {
    match r {
        RegEx::Concat(s, t) => {
            flatten_concat(s, out);
            flatten_concat(t, out);
        }
        _ => out.push(r.clone()),
    }
}

/// `r·r*` or `r*·r` as a literal binary product; returns `r*`.
fn plus_form(r: &RegEx) -> Option<RegEx> {
    let RegEx::Concat(x, y) = r else { return None };
    match (&**x, &**y) {
        (_, RegEx::Star(inner)) if **inner == **x => Some((**y).clone()),
        (RegEx::Star(inner), _) if **inner == **y => Some((**x).clone()),
        _ => None,
    }
}

fn sum_of(members: Vec<RegEx>) -> RegEx {
    let mut seen = HashSet::new();
    let mut kept: Vec<RegEx> = members
        .into_iter()
        .filter(|m| !m.is_empty_set())
        .filter(|m| seen.insert(canonical(m)))
        .collect();
    if kept.iter().any(RegEx::is_epsilon) {
        let mut absorbed = false;
        for m in kept.iter_mut() {
            if let Some(star) = plus_form(m) {
                *m = star;
                absorbed = true;
            }
        }
        if absorbed {
            kept.retain(|m| !m.is_epsilon());
            let mut seen = HashSet::new();
            kept.retain(|m| seen.insert(canonical(m)));
        }
    }
    RegEx::sum(kept)
}

/// Rendering with the branches of every union sorted.
pub(crate) fn canonical(r: &RegEx) -> String {
    match r {
        RegEx::Union(..) => {
            let mut members = Vec::new();
            flatten_union(r, &mut members);
            let mut parts: Vec<String> = members.iter().map(canonical).collect();
            parts.sort();
            parts.dedup();
            format!("({})", parts.join("+"))
        }
        RegEx::Concat(s, t) => format!("({}·{})", canonical(s), canonical(t)),
        RegEx::Star(s) => format!("({})*", canonical(s)),
        RegEx::Optional(s) => format!("({})?", canonical(s)),
        _ => render(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simp(s: &str) -> String {
        simplify(&s.parse().unwrap()).to_string()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(simp("#+##*#"), "#");
        assert_eq!(simp("&a"), "a");
        assert_eq!(simp("(a*)*"), "a*");
    }

    #[test]
    fn constants() {
        assert_eq!(simp("#*"), "&");
        assert_eq!(simp("&*"), "&");
        assert_eq!(simp("a#b+c"), "c");
        assert_eq!(simp("a&b"), "ab");
        assert_eq!(simp("#?"), "&");
        assert_eq!(simp("(&+#)?"), "&");
    }

    #[test]
    fn plus_forms() {
        assert_eq!(simp("&+aa*"), "a*");
        assert_eq!(simp("&+a*a"), "a*");
        assert_eq!(simp("aa*+&"), "a*");
        assert_eq!(simp("&+(a+b)*(a+b)"), "(a+b)*");
        // products are regrouped first, so a product body never matches
        assert_eq!(simp("&+(ab)*ab"), "&+(ab)*ab");
        assert_eq!(simp("&+(ab)*(ab)"), "&+(ab)*ab");
    }

    #[test]
    fn duplicates_and_grouping() {
        assert_eq!(simp("a+b+a"), "a+b");
        assert_eq!(simp("(a+b)c+(b+a)c"), "(a+b)c");
        assert_eq!(simp("a(bc)"), "abc");
        assert_eq!(simp("a+(b+c)"), "a+b+c");
    }
}
