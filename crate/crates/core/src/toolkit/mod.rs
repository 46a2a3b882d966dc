//! Families, random automata and benchmarks.

mod bench;
mod families;
mod random;

pub use bench::{
    bench_constructions, bench_orderings, bench_orderings_on, default_construction_families,
    read_csv, standard_orderings, summarize, write_csv, BenchRecord, MethodSummary,
    OrderingBenchConfig,
};
pub use families::{
    buffer_dfa, buffer_regex, gen_family, growth_regex, hypercube_dfa, options_regex, torus_dfa,
    Family, Generated, GROWTH_ROW1_MAX,
};
pub use random::{alphabet, random_dfa};
