//! State elimination: how much the ordering matters.

use refa::automaton::equivalent;
use refa::construct::construct_position;
use refa::convert::{state_elimination, Ordering, Strategy};
use refa::toolkit::{buffer_dfa, hypercube_dfa};

fn main() -> refa::Result<()> {
    let b6 = buffer_dfa(6);
    for order in [vec![6, 5, 4, 3, 2, 1, 0], vec![0, 2, 4, 6, 1, 5, 3]] {
        let r = state_elimination(&b6, &Ordering::fixed(order.clone()))?;
        println!(
            "order {order:?}: height {}, awidth {}",
            r.height(),
            r.awidth()
        );
        println!("  {r}");
    }

    let cube = hypercube_dfa(3);
    println!("\nhypercube(3):");
    for s in [
        Strategy::Fixed((0..8).collect()),
        Strategy::DegreeGreedy,
        Strategy::DelgadoMorais,
        Strategy::CycleCount,
        Strategy::IndependentFirst,
        Strategy::BridgeFirst,
    ] {
        let o = Ordering::new(s);
        let r = state_elimination(&cube, &o)?;
        assert!(equivalent(&construct_position(&r), &cube));
        println!(
            "  {:<18} awidth {:>4} height {}",
            o.name(),
            r.awidth(),
            r.height()
        );
    }
    Ok(())
}
