use refa::automaton::equivalent;
use refa::construct::construct_position;
use refa::convert::{state_elimination, Ordering, Strategy};
use refa::toolkit::{
    bench_constructions, bench_orderings, bench_orderings_on, buffer_dfa, hypercube_dfa, summarize,
    BenchRecord, Family, OrderingBenchConfig,
};

fn median(mut v: Vec<usize>) -> f64 {
    v.sort_unstable();
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2] as f64
    } else {
        (v[n / 2 - 1] + v[n / 2]) as f64 / 2.0
    }
}

fn awidths(rows: &[BenchRecord], method: &str) -> Vec<usize> {
    rows.iter()
        .filter(|r| r.method == method)
        .map(|r| r.awidth)
        .collect()
}

#[test]
fn delgado_morais_beats_identity_order_on_random_dfas() {
    let rows = bench_orderings(&OrderingBenchConfig {
        states: 8,
        alphabet: 2,
        samples: 100,
        seed: 0,
        timing: false,
    })
    .unwrap();
    let dm = median(awidths(&rows, "dm"));
    let id = median(awidths(&rows, "fixed:id"));
    assert!(dm <= id, "dm {dm}, identity {id}");
    let summary = summarize(&rows);
    let pos = |m: &str| summary.iter().position(|s| s.method == m).unwrap();
    assert!(pos("dm") < pos("fixed:id"));
}

#[test]
fn independent_first_on_hypercube() {
    let cube = hypercube_dfa(3);
    let rows = bench_orderings_on(
        "hypercube",
        3,
        &cube,
        &[
            Ordering::new(Strategy::IndependentFirst),
            Ordering::fixed(0..8),
        ],
        false,
    )
    .unwrap();
    assert!(awidths(&rows, "indep")[0] <= awidths(&rows, "fixed:0,1,2,3,4,5,6,7")[0]);
}

#[test]
fn buffer_six_orders() {
    let rows = bench_orderings_on(
        "buffer",
        6,
        &buffer_dfa(6),
        &[
            Ordering::fixed([6, 5, 4, 3, 2, 1, 0]),
            Ordering::fixed([0, 2, 4, 6, 1, 5, 3]),
        ],
        false,
    )
    .unwrap();
    let height = |m: &str| rows.iter().find(|r| r.method == m).unwrap().height;
    assert_eq!(height("fixed:6,5,4,3,2,1,0"), 6);
    assert_eq!(height("fixed:0,2,4,6,1,5,3"), 2);
}

#[test]
fn construction_table() {
    let families: Vec<Family> = (1..=8)
        .flat_map(|n| [Family::Buffer(n), Family::Growth { row: 3, n, m: None }])
        .collect();
    let rows = bench_constructions(&families, false).unwrap();
    for n in 2..=8 {
        let get = |fam: &str, m: &str| {
            rows.iter()
                .find(|r| r.family == fam && r.n == n && r.method == m)
                .unwrap()
                .size
        };
        assert!(get("buffer", "follow") < get("buffer", "pos"), "n = {n}");
        let pd = rows
            .iter()
            .find(|r| r.family == "growth-row3" && r.n == n && r.method == "pd")
            .unwrap();
        assert_eq!(pd.states, 2);
    }
    assert_eq!(rows, bench_constructions(&families, false).unwrap());
}

#[test]
fn families_agree_with_their_automata() {
    for n in 1..=6 {
        let g = Family::Buffer(n).generate().unwrap();
        let (r, a) = (g.regex.unwrap(), g.automaton.unwrap());
        assert!(equivalent(&construct_position(&r), &a));
        assert_eq!(a.num_states(), n + 1);
        let back = state_elimination(&a, &Ordering::default()).unwrap();
        assert!(equivalent(&construct_position(&back), &a));
    }
}
