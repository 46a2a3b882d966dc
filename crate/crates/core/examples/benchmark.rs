//! Construction sizes on witness families and a ranking of elimination
//! orderings on random DFAs, as CSV.

use refa::toolkit::{
    bench_constructions, bench_orderings, summarize, write_csv, Family, OrderingBenchConfig,
};

fn main() -> refa::Result<()> {
    let families: Vec<Family> = [2, 4, 8]
        .into_iter()
        .flat_map(|n| (2..=4).map(move |row| Family::Growth { row, n, m: None }))
        .collect();
    write_csv(&bench_constructions(&families, false)?, std::io::stdout())?;

    let rows = bench_orderings(&OrderingBenchConfig {
        samples: 50,
        ..Default::default()
    })?;
    println!();
    for s in summarize(&rows) {
        println!(
            "{:<9} median awidth {:>6.1} mean {:>7.2}",
            s.method, s.median_awidth, s.mean_awidth
        );
    }
    Ok(())
}
