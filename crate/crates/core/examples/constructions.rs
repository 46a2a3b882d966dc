//! The five expression-to-automaton constructions side by side.

use refa::automaton::equivalent;
use refa::construct::{construct_follow, Method};
use refa::toolkit::{buffer_regex, options_regex};

fn main() -> refa::Result<()> {
    let exprs = [
        buffer_regex(2),
        buffer_regex(4),
        options_regex(5),
        "(a+b)*abb".parse()?,
    ];
    for r in &exprs {
        println!("{r}");
        let built: Vec<_> = Method::ALL
            .iter()
            .map(|m| m.build(r))
            .collect::<Result<_, _>>()?;
        for (m, a) in Method::ALL.iter().zip(&built) {
            let fa = a.fa_measures();
            println!(
                "  {:<5} {:>3} states {:>3} transitions",
                m.name(),
                fa.states,
                fa.transitions
            );
        }
        assert!(built.windows(2).all(|w| equivalent(&w[0], &w[1])));
    }

    println!("\nfollow automaton of {}:", buffer_regex(2));
    print!("{}", construct_follow(&buffer_regex(2)).to_dot());
    Ok(())
}
