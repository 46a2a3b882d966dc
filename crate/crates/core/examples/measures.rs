//! Parsing, the four size measures, strong star normal form and position sets.

use refa::construct::position_sets;
use refa::regex::{mark, ssnf, RegEx};

fn main() -> refa::Result<()> {
    for text in ["(ab)*", "(a(ab)*b)*", "(a*+b?)*c", "(&+a)*#+b"] {
        let r: RegEx = text.parse()?;
        let m = r.measures();
        println!(
            "{text:<14} size {:>3} rpn {:>3} awidth {:>2} height {} nullable {}",
            m.size,
            m.rpn,
            m.awidth,
            m.height,
            r.nullable()
        );
        let s = ssnf(&r);
        if s != r {
            println!("  ssnf: {s}");
        }
    }

    let r: RegEx = "(a(ab)*b)*".parse()?;
    let ps = position_sets(&mark(&r));
    println!("\npositions of {r}: 1..={}", ps.positions);
    println!("first  {:?}", ps.first);
    println!("last   {:?}", ps.last);
    println!("follow {:?}", ps.follow);
    Ok(())
}
