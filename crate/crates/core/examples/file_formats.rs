//! Automaton JSON and DOT.

use refa::automaton::Automaton;
use refa::toolkit::hypercube_dfa;

fn main() -> refa::Result<()> {
    let json = r#"{
  "states": ["even", "odd"],
  "alphabet": ["a", "b"],
  "initial": "even",
  "finals": ["even"],
  "transitions": [["even", "a", "odd"], ["odd", "a", "even"], ["even", "b", "even"], ["odd", "b", "odd"]]
}"#;
    let a = Automaton::from_json(json)?;
    println!(
        "{} states, complete: {}",
        a.num_states(),
        a.is_complete_deterministic()
    );
    print!("{}", a.to_dot());
    println!("{}", hypercube_dfa(2).to_json());
    Ok(())
}
