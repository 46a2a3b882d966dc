//! Regular expressions from automata.

mod arden;
mod extended;
mod mny;
mod simplify;

pub use arden::arden_solve;
pub use extended::{
    augment, eliminate_state, make_ordering, state_elimination, state_elimination_raw,
    ExtendedAutomaton, Ordering, Strategy,
};
pub use mny::{mcnaughton_yamada, mcnaughton_yamada_trace, Matrix, MnyTrace};
pub use simplify::simplify;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{equivalent, Automaton};
    use crate::construct::construct_position;
    use crate::regex::RegEx;

    fn buffer(n: usize) -> Automaton {
        let mut a = Automaton::new(n + 1);
        for i in 0..n {
            a.add("a", i, i + 1);
            a.add("b", i + 1, i);
        }
        a.set_final(0, true);
        a
    }

    const L6: &str = "(a(a(a(a(a(ab)*b)*b)*b)*b)*b)*";

    #[test]
    fn buffer_six_descending_order() {
        let r = state_elimination(&buffer(6), &Ordering::fixed((0..=6).rev())).unwrap();
        assert_eq!(r.to_string(), L6);
        assert_eq!(arden_solve(&buffer(6)).unwrap().to_string(), L6);
    }

    #[test]
    fn buffer_six_interleaved_order() {
        let a = buffer(6);
        let r = state_elimination(&a, &Ordering::fixed([0, 2, 4, 6, 1, 5, 3])).unwrap();
        assert_eq!(r.height(), 2);
        assert!(equivalent(&construct_position(&r), &a));
    }

    #[test]
    fn buffer_three_matrices() {
        let t = mcnaughton_yamada_trace(&buffer(3), &[3, 2, 1, 0]).unwrap();
        assert_eq!(t.rounds[1][2][2].to_string(), "ab");
        assert_eq!(t.rounds[2][1][1].to_string(), "a(ab)*b");
        assert_eq!(
            crate::regex::render_unicode(&t.result),
            "λ+(a(a(ab)*b)*b)*a(a(ab)*b)*b"
        );
    }

    #[test]
    fn augment_shapes() {
        let mut a = Automaton::new(1);
        a.add("a", 0, 0);
        a.set_final(0, true);
        let e = augment(&a);
        assert_eq!(e.label(1, 0), RegEx::Epsilon);
        assert_eq!(e.label(0, 0).to_string(), "a");
        assert_eq!(e.label(0, 2), RegEx::Epsilon);
        let mut par = Automaton::new(2);
        par.add("a", 0, 1);
        par.add("b", 0, 1);
        assert_eq!(augment(&par).label(0, 1).to_string(), "a+b");
    }

    #[test]
    fn single_eliminations() {
        // s -λ-> q -λ-> t with an a-loop on q
        let mut a = Automaton::new(1);
        a.add("a", 0, 0);
        a.set_final(0, true);
        let e = eliminate_state(&augment(&a), 0).unwrap();
        assert_eq!(e.label(1, 2).to_string(), "a*");
        assert!(eliminate_state(&e, 1).is_err());
        // chain a then b
        let mut c = Automaton::new(3);
        c.add("a", 0, 1);
        c.add("b", 1, 2);
        c.set_final(2, true);
        let e = eliminate_state(&augment(&c), 1).unwrap();
        assert_eq!(e.label(0, 2).to_string(), "ab");
        // buffer one, state 1 then 0
        let e = eliminate_state(&augment(&buffer(1)), 1).unwrap();
        let e = eliminate_state(&e, 0).unwrap();
        assert_eq!(e.result().to_string(), "(ab)*");
    }

    #[test]
    fn no_final_state_gives_empty_set() {
        let mut a = Automaton::new(2);
        a.add("a", 0, 1);
        assert_eq!(
            state_elimination(&a, &Ordering::default()).unwrap(),
            RegEx::Empty
        );
    }

    #[test]
    fn ordering_names() {
        for s in ["greedy", "dm", "cycles", "indep", "bridge", "fixed:2,0,1"] {
            assert_eq!(s.parse::<Ordering>().unwrap().name(), s);
        }
        assert!("fastest".parse::<Ordering>().is_err());
        assert!("fixed:1,x".parse::<Ordering>().is_err());
        let bad = Ordering::fixed([0, 0]);
        assert!(state_elimination(&buffer(1), &bad).is_err());
    }

    #[test]
    fn strategies_agree_on_language() {
        let a = buffer(4);
        for s in ["greedy", "dm", "cycles", "indep", "bridge"] {
            let o: Ordering = s.parse().unwrap();
            let r = state_elimination(&a, &o).unwrap();
            assert!(equivalent(&construct_position(&r), &a), "{s}");
            let order = make_ordering(&a, &o).unwrap();
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bridges_go_last() {
        // 0 -a-> 1 -b-> 2 with a loop on 0 and on 2; state 1 is a bridge
        let mut a = Automaton::new(3);
        a.add("a", 0, 0);
        a.add("a", 0, 1);
        a.add("b", 1, 2);
        a.add("b", 2, 2);
        a.set_final(2, true);
        let order = make_ordering(&a, &Ordering::new(Strategy::BridgeFirst)).unwrap();
        assert_eq!(*order.last().unwrap(), 1);
        let r = state_elimination(&a, &Ordering::new(Strategy::BridgeFirst)).unwrap();
        assert_eq!(r.to_string(), "a*abb*");
    }
}
