use super::RegEx;

/// Size measures of a single expression.
///
/// `size` counts symbols of the completely bracketed form: atoms cost 1,
/// binary operators `size(s) + size(t) + 3` (operator and a pair of
/// parentheses, with an explicit `·` for concatenation), star and option
/// `size(s) + 3`. `rpn` is the node count, `awidth` the number of letter
/// occurrences and `height` the star height (an option does not add to it).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct MeasureReport {
    pub size: usize,
    pub rpn: usize,
    pub awidth: usize,
    pub height: usize,
}

impl MeasureReport {
    /// True when every field is at most the corresponding field of `other`.
    pub fn le_componentwise(&self, other: &MeasureReport) -> bool {
        self.size <= other.size
            && self.rpn <= other.rpn
            && self.awidth <= other.awidth
            && self.height <= other.height
    }
}

pub fn measures(r: &RegEx) -> MeasureReport {
    match r {
        RegEx::Empty | RegEx::Epsilon => MeasureReport {
            size: 1,
            rpn: 1,
            awidth: 0,
            height: 0,
        },
        RegEx::Sym(_) => MeasureReport {
            size: 1,
            rpn: 1,
            awidth: 1,
            height: 0,
        },
        RegEx::Union(s, t) | RegEx::Concat(s, t) => {
            let (a, b) = (measures(s), measures(t));
            MeasureReport {
                size: a.size + b.size + 3,
                rpn: a.rpn + b.rpn + 1,
                awidth: a.awidth + b.awidth,
                height: a.height.max(b.height),
            }
        }
        RegEx::Star(s) => {
            let a = measures(s);
            MeasureReport {
                size: a.size + 3,
                rpn: a.rpn + 1,
                awidth: a.awidth,
                height: a.height + 1,
            }
        }
        RegEx::Optional(s) => {
            let a = measures(s);
            MeasureReport {
                size: a.size + 3,
                rpn: a.rpn + 1,
                awidth: a.awidth,
                height: a.height,
            }
        }
    }
}

impl RegEx {
    pub fn measures(&self) -> MeasureReport {
        measures(self)
    }

    pub fn awidth(&self) -> usize {
        match self {
            RegEx::Empty | RegEx::Epsilon => 0,
            RegEx::Sym(_) => 1,
            RegEx::Union(s, t) | RegEx::Concat(s, t) => s.awidth() + t.awidth(),
            RegEx::Star(s) | RegEx::Optional(s) => s.awidth(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            RegEx::Empty | RegEx::Epsilon | RegEx::Sym(_) => 0,
            RegEx::Union(s, t) | RegEx::Concat(s, t) => s.height().max(t.height()),
            RegEx::Star(s) => 1 + s.height(),
            RegEx::Optional(s) => s.height(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MeasureReport {
        measures(&s.parse().unwrap())
    }

    #[test]
    fn star_of_pair() {
        // ((a·b))* has eight characters
        assert_eq!(
            m("(ab)*"),
            MeasureReport {
                size: 8,
                rpn: 4,
                awidth: 2,
                height: 1
            }
        );
    }

    #[test]
    fn single_letter() {
        assert_eq!(
            m("a"),
            MeasureReport {
                size: 1,
                rpn: 1,
                awidth: 1,
                height: 0
            }
        );
    }

    #[test]
    fn buffer_expressions_star_heights() {
        assert_eq!(m("(a(a(a(a(a(ab)*b)*b)*b)*b)*b)*").height, 6);
        assert_eq!(
            m("λ+a(ab+ba)*b+a(ab+ba)*aa(ab+ba+bb(ab+ba)*aa+aa(ab+ba)*bb)*bb(ab+ba)*b").height,
            2
        );
    }

    #[test]
    fn option_adds_no_height() {
        assert_eq!(m("(a*)?").height, 1);
        assert_eq!(m("a?").size, 4);
    }
}
