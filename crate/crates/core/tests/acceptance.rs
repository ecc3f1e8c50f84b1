//! Acceptance suite: one PASS/FAIL line per criterion. Counts are compared
//! exactly; each criterion also has a wall-time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use tourtypes::census::{census, count_cycles, count_enumerations, count_paths};
use tourtypes::classes::{all_path_classes, expected_class_size};
use tourtypes::digraph::star_counterexample;
use tourtypes::oracle::{hamiltonian_cycles, oracle_census};
use tourtypes::tournament::{all_tournaments, sample_tournament, Tournament};
use tourtypes::types::{cycle_canonical, list_types, SignedTuple, TypeKind};
use tourtypes::verify::{
    eqsym_types, formula_rhs, formula_terms, t_one_types, verify, Property, Scope,
};

const SEED: u64 = 20_240_601;

struct Outcome {
    comparisons: u64,
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            comparisons: 0,
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.comparisons += other.comparisons;
        self.failures.extend(other.failures);
        self
    }
}

fn exhaustive(n: usize) -> Vec<Tournament> {
    all_tournaments(n, false).unwrap().collect()
}

fn random(n: usize, count: u64) -> Vec<Tournament> {
    (0..count).map(|i| sample_tournament(n, SEED, i)).collect()
}

fn per_tournament(ts: &[Tournament], f: impl Fn(&Tournament, &mut Outcome) + Sync) -> Outcome {
    ts.par_iter()
        .map(|t| {
            let mut o = Outcome::new();
            f(t, &mut o);
            o
        })
        .reduce(Outcome::new, Outcome::merge)
}

fn path_pairs(arcs: usize) -> Vec<(SignedTuple, SignedTuple)> {
    list_types(arcs, TypeKind::Path)
        .into_iter()
        .filter(|a| a.entries()[0] > 0)
        .map(|a| {
            let b = a.negated();
            (a, b)
        })
        .collect()
}

fn cycle_pairs(arcs: usize) -> Vec<(SignedTuple, SignedTuple)> {
    list_types(arcs, TypeKind::Cycle)
        .into_iter()
        .filter(|b| b.entries()[0] > 0)
        .map(|b| {
            let nb = b.negated();
            (b, nb)
        })
        .collect()
}

fn path_identity(t: &Tournament, pairs: &[(SignedTuple, SignedTuple)], o: &mut Outcome) {
    for (a, b) in pairs {
        let (fa, fb) = (count_paths(t, a).unwrap(), count_paths(t, b).unwrap());
        o.check(fa == fb, || format!("{t} f{a}={fa} f{b}={fb}"));
    }
}

fn cycle_identity(t: &Tournament, pairs: &[(SignedTuple, SignedTuple)], o: &mut Outcome) {
    for (a, b) in pairs {
        let (ga, gb) = (count_cycles(t, a).unwrap(), count_cycles(t, b).unwrap());
        o.check(ga == gb, || format!("{t} g{a}={ga} g{b}={gb}"));
    }
}

fn c1_path_identity() -> Outcome {
    let mut out = Outcome::new();
    for n in [4, 5] {
        let pairs = path_pairs(n - 1);
        out = out.merge(per_tournament(&exhaustive(n), |t, o| {
            path_identity(t, &pairs, o)
        }));
    }
    out
}

fn c2_cycle_identity() -> Outcome {
    let mut out = Outcome::new();
    for n in [4, 5] {
        let pairs = cycle_pairs(n);
        out = out.merge(per_tournament(&exhaustive(n), |t, o| {
            cycle_identity(t, &pairs, o)
        }));
    }
    out
}

fn c3_non_spanning() -> Outcome {
    let paths: Vec<_> = (1..=4).flat_map(path_pairs).collect();
    let cycles: Vec<_> = (3..=4).flat_map(cycle_pairs).collect();
    per_tournament(&random(6, 100), |t, o| {
        path_identity(t, &paths, o);
        cycle_identity(t, &cycles, o);
    })
}

fn c4_count_formula() -> Outcome {
    let cases: Vec<(u64, usize)> = (0..200).map(|i| (i, 6 + (i % 3) as usize)).collect();
    let terms: Vec<Vec<_>> = (6..=8)
        .map(|n| {
            list_types(n, TypeKind::Cycle)
                .iter()
                .map(|b| formula_terms(b).unwrap())
                .collect()
        })
        .collect();
    cases
        .par_iter()
        .map(|&(i, n)| {
            let mut o = Outcome::new();
            let t = sample_tournament(n, SEED, i);
            let mut g = std::collections::HashMap::new();
            for c in hamiltonian_cycles(&t).unwrap() {
                *g.entry(c.ty).or_insert(0u64) += 1;
            }
            for f in &terms[n - 6] {
                let own = cycle_canonical(&f.beta).unwrap();
                o.check(f.terms.contains(&own), || {
                    format!("{} not generated by {}", f.beta, f.alpha)
                });
                let lhs = count_paths(&t, &f.alpha).unwrap();
                let rhs = formula_rhs(&f.terms, |c| g.get(c).copied().unwrap_or(0));
                o.check(lhs == rhs, || {
                    format!("{t} beta={} f{}={lhs} formula={rhs}", f.beta, f.alpha)
                });
            }
            o
        })
        .reduce(Outcome::new, Outcome::merge)
}

fn c5_class_sizes() -> Outcome {
    let mut out = Outcome::new();
    for n in 3..=5 {
        out = out.merge(per_tournament(&exhaustive(n), |t, o| {
            for (ty, part) in all_path_classes(t).unwrap() {
                for class in &part.classes {
                    let want = expected_class_size(class.cycle.repr());
                    let got = class.paths.len();
                    o.check(got == want, || {
                        format!("{t} {ty} in {}: {got} != {want}", class.cycle)
                    });
                }
            }
        }));
    }
    out
}

fn c6_eqsym() -> Outcome {
    let mut out = Outcome::new();
    for s in 1..=12 {
        let r = eqsym_types(s);
        out.comparisons += r.checked;
        out.failures.extend(r.failures);
    }
    for n in 1..=5 {
        let r = verify(Property::EqSym, Scope::exhaustive(n)).unwrap();
        out.comparisons += r.comparisons;
        out.failures
            .extend(r.violations.iter().map(|v| format!("{v:?}")));
    }
    out
}

fn c7_t_one() -> Outcome {
    let mut out = Outcome::new();
    for s in 1..=14 {
        let r = t_one_types(s);
        out.comparisons += r.checked;
        out.failures.extend(r.failures);
    }
    out
}

fn c8_oracle() -> Outcome {
    let mut ts: Vec<Tournament> = (1..=5).flat_map(exhaustive).collect();
    ts.extend(random(6, 200));
    per_tournament(&ts, |t, o| {
        let (dp, brute) = (census(t).unwrap(), oracle_census(t).unwrap());
        o.check(dp == brute, || {
            format!("{t}: census differs from brute force")
        });
    })
}

fn c9_partition() -> Outcome {
    let mut ts: Vec<Tournament> = (2..=5).flat_map(exhaustive).collect();
    ts.extend(random(7, 100));
    per_tournament(&ts, |t, o| {
        let n = t.order();
        let total: u64 = list_types(n - 1, TypeKind::Path)
            .iter()
            .map(|a| count_enumerations(t, a).unwrap())
            .sum();
        let fact: u64 = (1..=n as u64).product();
        o.check(total == fact, || {
            format!("{t}: sum e = {total}, n! = {fact}")
        });
    })
}

fn c10_h_invariance() -> Outcome {
    let mut out = Outcome::new();
    let mut scopes: Vec<Scope> = (1..=5).map(Scope::exhaustive).collect();
    scopes.push(Scope::random(7, 100, SEED));
    for scope in scopes {
        let r = verify(Property::HInvariance, scope).unwrap();
        out.comparisons += r.comparisons;
        out.failures
            .extend(r.violations.iter().map(|v| format!("{v:?}")));
    }
    out
}

fn c11_counterexample() -> Outcome {
    let mut out = Outcome::new();
    for n in 3..=5 {
        let (_, r) = star_counterexample(n).unwrap();
        out.check((r.count, r.complement_count) == (1, 0), || {
            format!("n={n}: counts ({}, {})", r.count, r.complement_count)
        });
    }
    out
}

fn c12_szele() -> Outcome {
    let mut out = Outcome::new();
    let mut notes = Vec::new();
    for (n, floor) in [(4usize, 3u64), (5, 8)] {
        let alpha = SignedTuple::new(vec![n as i32 - 1]);
        let max = exhaustive(n)
            .par_iter()
            .map(|t| count_paths(t, &alpha).unwrap())
            .max()
            .unwrap();
        notes.push(format!("max f{alpha} at n={n} is {max} >= {floor}"));
        out.check(max >= floor, || format!("n={n}: max {max} < {floor}"));
    }
    out.note = notes.join("; ");
    out
}

fn c13_transitive() -> Outcome {
    let mut out = Outcome::new();
    for n in 3..=8 {
        let f = count_paths(
            &Tournament::transitive(n),
            &SignedTuple::new(vec![n as i32 - 1]),
        )
        .unwrap();
        out.check(f == 1, || format!("n={n}: {f}"));
    }
    out
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (
            1,
            "path identity f(a) = f(-a), all tournaments n = 4, 5",
            5,
            c1_path_identity,
        ),
        (
            2,
            "cycle identity g(b) = g(-b), all tournaments n = 4, 5",
            10,
            c2_cycle_identity,
        ),
        (
            3,
            "non-spanning identities, 100 random n = 6, arc sum <= 4",
            30,
            c3_non_spanning,
        ),
        (
            4,
            "count formula, 200 random n in {6,7,8}",
            120,
            c4_count_formula,
        ),
        (
            5,
            "class sizes t, 2t or n, all tournaments n <= 5",
            30,
            c5_class_sizes,
        ),
        (
            6,
            "generated cycles coincide iff symmetric, arc sum <= 12 and n <= 5",
            5,
            c6_eqsym,
        ),
        (
            7,
            "symmetric types generate t = 1, arc sum <= 14",
            1,
            c7_t_one,
        ),
        (
            8,
            "census equals brute force, n <= 5 all, 200 random n = 6",
            60,
            c8_oracle,
        ),
        (
            9,
            "sum of e(a) is n!, n <= 5 all, 100 random n = 7",
            20,
            c9_partition,
        ),
        (
            10,
            "copies of max-degree-2 digraphs equal in reversal, n <= 5 all, 100 random n = 7",
            60,
            c10_h_invariance,
        ),
        (
            11,
            "out-star counterexample counts (1, 0), n = 3, 4, 5",
            1,
            c11_counterexample,
        ),
        (12, "Szele floor, n = 4, 5", 10, c12_szele),
        (
            13,
            "transitive tournament has one directed Hamiltonian path, n = 3..8",
            1,
            c13_transitive,
        ),
    ];
    let mut all_ok = true;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took < Duration::from_secs(budget);
        let ok = out.failures.is_empty() && in_time && out.comparisons > 0;
        all_ok &= ok;
        let mut line = format!(
            "{} criterion {id:>2}: {name} [{} checks, {} mismatches, {:.2}s of {budget}s]",
            if ok { "PASS" } else { "FAIL" },
            out.comparisons,
            out.failures.len(),
            took.as_secs_f64(),
        );
        if !out.note.is_empty() {
            line.push_str(&format!(" ({})", out.note));
        }
        if !in_time {
            line.push_str(" over time budget");
        }
        println!("{line}");
        for f in out.failures.iter().take(3) {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
