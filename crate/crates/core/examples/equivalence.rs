//! Determinization, minimization and shortest distinguishing words.

use refa::automaton::{distinguishing_word, minimize, subset_construction, MinimizeMode};
use refa::construct::construct_position;
use refa::regex::RegEx;

fn main() -> refa::Result<()> {
    let pairs = [
        ("(a+b)*", "(a*b*)*"),
        ("(ab)*a", "a(ba)*"),
        ("a*", "(aa)*"),
        ("(a+b)*abb", "(a+b)*bb"),
    ];
    for (x, y) in pairs {
        let (r, s): (RegEx, RegEx) = (x.parse()?, y.parse()?);
        let (a, b) = (construct_position(&r), construct_position(&s));
        let dfa = minimize(&subset_construction(&a), MinimizeMode::Partial)?;
        print!("{x} ({} minimal states) vs {y}: ", dfa.num_states());
        match distinguishing_word(&a, &b) {
            None => println!("equivalent"),
            Some(w) => println!("differ on {w}"),
        }
    }
    Ok(())
}
