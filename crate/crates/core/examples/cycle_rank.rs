//! Cycle rank of digraphs and star height of bideterministic languages.

use refa::graph::{
    cycle_rank, star_height_bideterministic, underlying_digraph, Digraph, DEFAULT_BUDGET,
};
use refa::toolkit::{buffer_dfa, torus_dfa};

fn main() -> refa::Result<()> {
    for n in [2, 3, 4, 7, 8, 15] {
        let k = cycle_rank(&Digraph::bidirectional_path(n), DEFAULT_BUDGET)?;
        println!("bidirectional path on {n:>2} vertices: {k}");
    }
    for (m, n) in [(2, 2), (2, 4), (3, 3), (2, 6)] {
        let a = torus_dfa(m, n);
        let k = cycle_rank(&underlying_digraph(&a), DEFAULT_BUDGET)?;
        println!(
            "torus {m}x{n}: cycle rank {k}, star height {}",
            star_height_bideterministic(&a)?
        );
    }
    println!(
        "buffer(6): star height {}",
        star_height_bideterministic(&buffer_dfa(6))?
    );
    Ok(())
}
