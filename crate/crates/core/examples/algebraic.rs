//! Arden's lemma and the McNaughton–Yamada matrix recurrence.

use refa::convert::{arden_solve, mcnaughton_yamada_trace};
use refa::regex::render_unicode;
use refa::toolkit::buffer_dfa;

fn main() -> refa::Result<()> {
    println!("arden on buffer(6): {}", arden_solve(&buffer_dfa(6))?);

    let trace = mcnaughton_yamada_trace(&buffer_dfa(3), &[3, 2, 1, 0])?;
    for (k, m) in trace.rounds.iter().enumerate() {
        println!("\nround {k}");
        for (i, row) in m.iter().enumerate() {
            for (j, e) in row.iter().enumerate().filter(|(_, e)| !e.is_empty_set()) {
                println!("  {i} -> {j}: {}", render_unicode(e));
            }
        }
    }
    println!("\nresult {}", render_unicode(&trace.result));
    Ok(())
}
