//! JSON and DOT forms.
//!
//! ```json
//! {"states": [0, 1, 2], "alphabet": ["a", "b"], "initial": 0,
//!  "finals": [0], "transitions": [[0, "a", 1], [1, "", 2]]}
//! ```
//!
//! State identifiers may be numbers or strings; an empty label is λ.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Automaton, Label};
use crate::error::{Error, Result};
use crate::regex::Symbol;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateRef {
    Index(u64),
    Name(String),
}

impl StateRef {
    fn key(&self) -> String {
        match self {
            StateRef::Index(i) => i.to_string(),
            StateRef::Name(s) => s.clone(),
        }
    }

    fn from_name(name: &str) -> StateRef {
        match name.parse::<u64>() {
            Ok(i) if i.to_string() == name => StateRef::Index(i),
            _ => StateRef::Name(name.to_string()),
        }
    }
}

/// Serialized automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonFile {
    pub states: Vec<StateRef>,
    pub alphabet: Vec<String>,
    pub initial: StateRef,
    pub finals: Vec<StateRef>,
    pub transitions: Vec<(StateRef, String, StateRef)>,
}

impl AutomatonFile {
    pub fn from_automaton(a: &Automaton) -> AutomatonFile {
        let name = |q: usize| StateRef::from_name(&a.state_name(q));
        AutomatonFile {
            states: a.states().map(name).collect(),
            alphabet: a.alphabet().iter().map(Symbol::to_string).collect(),
            initial: name(a.initial()),
            finals: a.finals().iter().map(|&q| name(q)).collect(),
            transitions: a
                .transitions()
                .map(|(p, l, q)| {
                    let label = match l {
                        Label::Lambda => String::new(),
                        Label::Sym(s) => s.to_string(),
                    };
                    (name(p), label, name(q))
                })
                .collect(),
        }
    }

    pub fn to_automaton(&self) -> Result<Automaton> {
        if self.states.is_empty() {
            return Err(Error::Format("automaton has no states".into()));
        }
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut names = Vec::with_capacity(self.states.len());
        for s in &self.states {
            let key = s.key();
            if index.insert(key.clone(), names.len()).is_some() {
                return Err(Error::Format(format!("duplicate state {key}")));
            }
            names.push(key);
        }
        let lookup = |s: &StateRef| -> Result<usize> {
            index
                .get(&s.key())
                .copied()
                .ok_or_else(|| Error::UnknownState(s.key()))
        };
        let mut a = Automaton::new(names.len());
        for s in &self.alphabet {
            a.add_symbol(Symbol::new(s)?);
        }
        a.set_initial(lookup(&self.initial)?);
        for f in &self.finals {
            a.set_final(lookup(f)?, true);
        }
        for (p, l, q) in &self.transitions {
            let label = Label::parse(l)?;
            if let Label::Sym(s) = &label {
                if !a.alphabet().contains(s) {
                    return Err(Error::UnknownSymbol(s.to_string()));
                }
            }
            a.add_transition(lookup(p)?, label, lookup(q)?);
        }
        let plain = names.iter().enumerate().all(|(i, n)| *n == i.to_string());
        if !plain {
            a.set_names(names);
        }
        Ok(a)
    }
}

impl Automaton {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AutomatonFile::from_automaton(self))
            .expect("automaton serializes")
    }

    pub fn from_json(text: &str) -> Result<Automaton> {
        let file: AutomatonFile = serde_json::from_str(text)?;
        file.to_automaton()
    }

    pub fn to_dot(&self) -> String {
        to_dot(self)
    }
}

/// Graphviz rendering; finals are double circles, λ is drawn as `ε`.
pub fn to_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    out.push_str("  __start [shape=point];\n");
    for q in a.states() {
        let shape = if a.is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {q} [label=\"{}\", shape={shape}];", a.state_name(q));
    }
    let _ = writeln!(out, "  __start -> {};", a.initial());
    for (p, l, q) in a.transitions() {
        let label = match l {
            Label::Lambda => "ε".to_string(),
            Label::Sym(s) => s.to_string(),
        };
        let _ = writeln!(out, "  {p} -> {q} [label=\"{label}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut a = Automaton::new(3);
        a.add("a", 0, 1);
        a.add("", 1, 2);
        a.add("b", 2, 0);
        a.set_final(2, true);
        let text = a.to_json();
        assert_eq!(Automaton::from_json(&text).unwrap(), a);
    }

    #[test]
    fn named_states() {
        let text = r#"{"states": ["p", "q"], "alphabet": ["a"], "initial": "q",
                       "finals": ["p"], "transitions": [["q", "a", "p"]]}"#;
        let a = Automaton::from_json(text).unwrap();
        assert_eq!(a.initial(), 1);
        assert_eq!(a.state_name(1), "q");
        assert!(a.accepts(&"a".parse().unwrap()).unwrap());
        assert_eq!(Automaton::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn rejects_bad_input() {
        let unknown_state = r#"{"states": [0], "alphabet": ["a"], "initial": 0,
                                "finals": [], "transitions": [[0, "a", 5]]}"#;
        assert!(matches!(
            Automaton::from_json(unknown_state),
            Err(Error::UnknownState(_))
        ));
        let unknown_letter = r#"{"states": [0], "alphabet": ["a"], "initial": 0,
                                 "finals": [], "transitions": [[0, "b", 0]]}"#;
        assert!(matches!(
            Automaton::from_json(unknown_letter),
            Err(Error::UnknownSymbol(_))
        ));
        assert!(Automaton::from_json("{").is_err());
    }

    #[test]
    fn dot_output() {
        let mut a = Automaton::new(2);
        a.add("", 0, 1);
        a.set_final(1, true);
        let dot = a.to_dot();
        assert!(dot.contains("0 -> 1 [label=\"ε\"]"));
        assert!(dot.contains("shape=doublecircle"));
    }
}
