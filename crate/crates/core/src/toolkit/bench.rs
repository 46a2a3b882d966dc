//! Benchmark records and their CSV form.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{random_dfa, Family};
use crate::automaton::{equivalent, Automaton};
use crate::construct::{construct_position, Method};
use crate::convert::{state_elimination, Ordering, Strategy};
use crate::error::{Error, Result};

/// One CSV row. For constructions, `states`/`transitions`/`size` describe
/// the automaton and `awidth`/`height` the input expression. For
/// orderings, `states`/`transitions` describe the input automaton and
/// `size`/`awidth`/`height` the resulting expression. `micros` is zero
/// unless timing was requested.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub method: String,
    pub states: usize,
    pub transitions: usize,
    pub size: usize,
    pub awidth: usize,
    pub height: usize,
    pub micros: u64,
}

fn timed<T>(timing: bool, f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    let micros = if timing {
        start.elapsed().as_micros() as u64
    } else {
        0
    };
    (out, micros)
}

/// Every construction on every family member that has an expression.
pub fn bench_constructions(families: &[Family], timing: bool) -> Result<Vec<BenchRecord>> {
    let tasks: Vec<(Family, Method)> = families
        .iter()
        .flat_map(|f| Method::ALL.into_iter().map(move |m| (f.clone(), m)))
        .collect();
    let mut rows = tasks
        .par_iter()
        .map(|(f, m)| {
            let Some(r) = f.generate()?.regex else {
                return Ok(None);
            };
            let (a, micros) = timed(timing, || m.build(&r));
            let a = a?;
            let fa = a.fa_measures();
            Ok(Some(BenchRecord {
                family: f.kind(),
                n: f.n(),
                method: m.name().to_string(),
                states: fa.states,
                transitions: fa.transitions,
                size: fa.size(),
                awidth: r.awidth(),
                height: r.height(),
                micros,
            }))
        })
        .collect::<Result<Vec<Option<BenchRecord>>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    rows.sort();
    Ok(rows)
}

/// Growth families at `n = 2, 4, …, 32` plus buffers `1..=10` and the
/// first row at depths `1..=6`.
pub fn default_construction_families() -> Vec<Family> {
    let mut out: Vec<Family> = (1..=10).map(Family::Buffer).collect();
    out.extend((1..=6).map(|n| Family::Growth { row: 1, n, m: None }));
    for row in 2..=4 {
        for n in [2, 4, 8, 16, 32] {
            out.push(Family::Growth { row, n, m: None });
        }
    }
    out
}

/// Converts `a` with every ordering, checking each result against `a`.
pub fn bench_orderings_on(
    family: &str,
    n: usize,
    a: &Automaton,
    orderings: &[Ordering],
    timing: bool,
) -> Result<Vec<BenchRecord>> {
    let fa = a.fa_measures();
    let mut rows = orderings
        .par_iter()
        .map(|o| {
            let (r, micros) = timed(timing, || state_elimination(a, o));
            let r = r?;
            if !equivalent(&construct_position(&r), a) {
                return Err(Error::InvalidArgument(format!(
                    "ordering {o} produced an inequivalent expression"
                )));
            }
            let m = r.measures();
            Ok(BenchRecord {
                family: family.to_string(),
                n,
                method: o.name(),
                states: fa.states,
                transitions: fa.transitions,
                size: m.size,
                awidth: m.awidth,
                height: m.height,
                micros,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort();
    Ok(rows)
}

/// The heuristic orderings plus the identity order.
pub fn standard_orderings(states: usize) -> Vec<Ordering> {
    vec![
        Ordering::fixed(0..states),
        Ordering::new(Strategy::DegreeGreedy),
        Ordering::new(Strategy::DelgadoMorais),
        Ordering::new(Strategy::CycleCount),
        Ordering::new(Strategy::IndependentFirst),
        Ordering::new(Strategy::BridgeFirst),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingBenchConfig {
    pub states: usize,
    pub alphabet: usize,
    pub samples: usize,
    pub seed: u64,
    pub timing: bool,
}

impl Default for OrderingBenchConfig {
    fn default() -> Self {
        OrderingBenchConfig {
            states: 8,
            alphabet: 2,
            samples: 100,
            seed: 0,
            timing: false,
        }
    }
}

/// Random DFAs `seed, seed+1, …` converted with every standard ordering.
/// The identity order is reported as `fixed:id` so samples of different
/// sizes share one name.
pub fn bench_orderings(config: &OrderingBenchConfig) -> Result<Vec<BenchRecord>> {
    let per_sample: Vec<Vec<BenchRecord>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let a = random_dfa(config.states, config.alphabet, config.seed + i as u64);
            let orderings = standard_orderings(a.num_states());
            let mut rows = bench_orderings_on("random-dfa", i, &a, &orderings, config.timing)?;
            for row in &mut rows {
                if row.method.starts_with("fixed:") {
                    row.method = "fixed:id".into();
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<BenchRecord> = per_sample.into_iter().flatten().collect();
    rows.sort();
    Ok(rows)
}

/// Per-method medians over a set of records, best first.
#[derive(Clone, Debug, PartialEq)]
pub struct MethodSummary {
    pub method: String,
    pub runs: usize,
    pub median_awidth: f64,
    pub mean_awidth: f64,
    pub median_height: f64,
}

fn median(mut v: Vec<usize>) -> f64 {
    v.sort_unstable();
    let k = v.len();
    if k == 0 {
        0.0
    } else if k % 2 == 1 {
        v[k / 2] as f64
    } else {
        (v[k / 2 - 1] + v[k / 2]) as f64 / 2.0
    }
}

pub fn summarize(records: &[BenchRecord]) -> Vec<MethodSummary> {
    let mut methods: Vec<&str> = records.iter().map(|r| r.method.as_str()).collect();
    methods.sort_unstable();
    methods.dedup();
    let mut out: Vec<MethodSummary> = methods
        .into_iter()
        .map(|m| {
            let rows: Vec<&BenchRecord> = records.iter().filter(|r| r.method == m).collect();
            let widths: Vec<usize> = rows.iter().map(|r| r.awidth).collect();
            MethodSummary {
                method: m.to_string(),
                runs: rows.len(),
                mean_awidth: widths.iter().sum::<usize>() as f64 / rows.len() as f64,
                median_awidth: median(widths),
                median_height: median(rows.iter().map(|r| r.height).collect()),
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.median_awidth
            .total_cmp(&b.median_awidth)
            .then(a.mean_awidth.total_cmp(&b.mean_awidth))
            .then(a.method.cmp(&b.method))
    });
    out
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<BenchRecord>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|x| x.map_err(Error::from)).collect()
}
