//! Property sweeps over exhaustive or seeded random families of
//! tournaments.
//!
//! A sweep visits every tournament in its [`Scope`] in parallel and checks
//! one identity on each. Violations are reduced to the ten smallest by
//! tournament text, so the report does not depend on thread count.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::census::{census, count_enumerations, count_paths};
use crate::classes::{all_path_classes, expected_class_size};
use crate::digraph::{all_specs, check_complement_invariance, Digraph2Spec};
use crate::error::{Error, Result};
use crate::oracle::{
    enumeration_census, hamiltonian_cycles, hamiltonian_paths, oracle_census, MAX_ORACLE_ORDER,
};
use crate::tournament::{
    pair_count, random_tournament_from, sample_seed, SplitMix64, Tournament, MAX_EXHAUSTIVE_ORDER,
    MAX_EXHAUSTIVE_ORDER_OVERRIDE,
};
use crate::types::{
    canonical_cycle_types, canonical_path_types, cycle_canonical, delta, generated_cycle_types,
    is_symmetric, normalize_path, path_canonical, period_info, star_one, CycleType, PathType,
    SignedTuple, TypeKind,
};
use crate::words::WordTable;

pub use crate::types::list_types;

pub const MAX_RANDOM_ORDER: usize = 12;
pub const MAX_VIOLATIONS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    PathIdentity,
    CycleIdentity,
    EnumerationPartition,
    PeRatio,
    ClassSizes,
    EqSym,
    CountFormula,
    TOne,
    HInvariance,
    ComplementBridge,
    SzeleFloor,
    OracleEquivalence,
    Rosenfeld,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::PathIdentity,
        Property::CycleIdentity,
        Property::EnumerationPartition,
        Property::PeRatio,
        Property::ClassSizes,
        Property::EqSym,
        Property::CountFormula,
        Property::TOne,
        Property::HInvariance,
        Property::ComplementBridge,
        Property::SzeleFloor,
        Property::OracleEquivalence,
        Property::Rosenfeld,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::PathIdentity => "path-identity",
            Property::CycleIdentity => "cycle-identity",
            Property::EnumerationPartition => "enumeration-partition",
            Property::PeRatio => "pe-ratio",
            Property::ClassSizes => "class-sizes",
            Property::EqSym => "eqsym",
            Property::CountFormula => "count-formula",
            Property::TOne => "t-one",
            Property::HInvariance => "h-invariance",
            Property::ComplementBridge => "complement-bridge",
            Property::SzeleFloor => "szele-floor",
            Property::OracleEquivalence => "oracle-equivalence",
            Property::Rosenfeld => "rosenfeld",
        }
    }

    /// Whether the check enumerates Hamiltonian paths or cycles by brute
    /// force, which caps the order.
    pub fn needs_oracle(self) -> bool {
        matches!(
            self,
            Property::PeRatio
                | Property::ClassSizes
                | Property::EqSym
                | Property::CountFormula
                | Property::TOne
                | Property::OracleEquivalence
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Scope {
    Exhaustive {
        order: usize,
        allow_large: bool,
    },
    Random {
        order: usize,
        samples: u64,
        seed: u64,
    },
}

/// One tournament of a scope.
#[derive(Clone, Debug)]
pub struct Instance {
    /// Pattern number (exhaustive) or sample number (random).
    pub index: u64,
    pub tournament: Tournament,
    /// Next word of the sample's stream after the tournament bits; 0 in
    /// exhaustive scopes.
    pub draw: u64,
}

impl Scope {
    pub fn exhaustive(order: usize) -> Self {
        Scope::Exhaustive {
            order,
            allow_large: false,
        }
    }

    pub fn random(order: usize, samples: u64, seed: u64) -> Self {
        Scope::Random {
            order,
            samples,
            seed,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Scope::Exhaustive { order, .. } | Scope::Random { order, .. } => order,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Scope::Exhaustive { order, allow_large } => {
                let cap = if allow_large {
                    MAX_EXHAUSTIVE_ORDER_OVERRIDE
                } else {
                    MAX_EXHAUSTIVE_ORDER
                };
                if order > cap {
                    let hint = if allow_large {
                        ""
                    } else {
                        " without --allow-large"
                    };
                    return Err(Error::ScopeTooLarge(format!(
                        "exhaustive scope limited to order {cap}{hint}, got {order}"
                    )));
                }
            }
            Scope::Random { order, .. } => {
                if order > MAX_RANDOM_ORDER {
                    return Err(Error::ScopeTooLarge(format!(
                        "random scope limited to order {MAX_RANDOM_ORDER}, got {order}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> u64 {
        match *self {
            Scope::Exhaustive { order, .. } => 1u64 << pair_count(order),
            Scope::Random { samples, .. } => samples,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn instance(&self, index: u64) -> Instance {
        match *self {
            Scope::Exhaustive { order, .. } => Instance {
                index,
                tournament: Tournament::from_pair_bits(order, |p| index >> p & 1 == 1),
                draw: 0,
            },
            Scope::Random { order, seed, .. } => {
                let mut rng = SplitMix64::new(sample_seed(seed, index));
                let tournament = random_tournament_from(&mut rng, order);
                Instance {
                    index,
                    tournament,
                    draw: rng.next_u64(),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    /// `None` for type-level checks that involve no tournament.
    pub tournament: Option<String>,
    pub index: Option<u64>,
    pub types: Vec<String>,
    pub counts: Vec<u64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub property: String,
    pub scope: Scope,
    /// Tournaments visited.
    pub checked: u64,
    /// Individual comparisons made.
    pub comparisons: u64,
    pub pass: bool,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub extra: Map<String, Value>,
    /// Wall time in milliseconds; only filled in on request since it breaks
    /// byte-identical output.
    pub ms: Option<u64>,
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    checked: u64,
    comparisons: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    /// Largest value seen, with the smallest tournament text attaining it.
    best: Option<(u64, String)>,
}

impl Tally {
    fn push(&mut self, v: Violation) {
        self.violation_count += 1;
        let at = self.violations.binary_search(&v).unwrap_or_else(|e| e);
        if at < MAX_VIOLATIONS {
            self.violations.insert(at, v);
            self.violations.truncate(MAX_VIOLATIONS);
        }
    }

    fn fail(
        &mut self,
        inst: Option<&Instance>,
        types: Vec<String>,
        counts: Vec<u64>,
        detail: &str,
    ) {
        self.push(Violation {
            tournament: inst.map(|i| i.tournament.to_text()),
            index: inst.map(|i| i.index),
            types,
            counts,
            detail: detail.to_string(),
        });
    }

    fn expect_eq(&mut self, inst: &Instance, types: Vec<String>, a: u64, b: u64, detail: &str) {
        self.comparisons += 1;
        if a != b {
            self.fail(Some(inst), types, vec![a, b], detail);
        }
    }

    fn expect(&mut self, inst: Option<&Instance>, types: Vec<String>, ok: bool, detail: &str) {
        self.comparisons += 1;
        if !ok {
            self.fail(inst, types, Vec::new(), detail);
        }
    }

    fn offer(&mut self, value: u64, text: String) {
        let better = match &self.best {
            None => true,
            Some((v, s)) => value > *v || (value == *v && text < *s),
        };
        if better {
            self.best = Some((value, text));
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.comparisons += other.comparisons;
        for v in other.violations {
            self.push(v);
            self.violation_count -= 1;
        }
        self.violation_count += other.violation_count;
        if let Some((v, s)) = other.best {
            self.offer(v, s);
        }
        self
    }
}

type Check = Box<dyn Fn(&Instance, &mut Tally) -> Result<()> + Send + Sync>;

fn names<T: fmt::Display + ?Sized>(items: &[&T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The alternating tuple `(1,-1,1,...)` with `arcs` entries.
pub fn antidirected(arcs: usize) -> SignedTuple {
    SignedTuple::new((0..arcs).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())
}

/// Type-level outcome of a property with no tournament in it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeCheck {
    pub checked: u64,
    pub failures: Vec<String>,
}

/// Generated cycle types coincide iff `alpha` is symmetric (even number of
/// blocks); they never coincide for an odd number of blocks.
pub fn eqsym_types(arc_sum: usize) -> TypeCheck {
    let mut out = TypeCheck::default();
    for alpha in list_types(arc_sum, TypeKind::Path) {
        let gc = generated_cycle_types(&alpha).expect("listed tuples are standard");
        let expected = alpha.len() % 2 == 0 && is_symmetric(&alpha);
        out.checked += 1;
        if gc.coincide != expected {
            out.failures.push(format!(
                "{alpha}: generated {} and {}, coincide={}, symmetric={}",
                gc.beta,
                gc.beta_prime,
                gc.coincide,
                is_symmetric(&alpha)
            ));
        }
    }
    out
}

/// Every symmetric `alpha` generates cycle types with `t = 1`.
pub fn t_one_types(arc_sum: usize) -> TypeCheck {
    let mut out = TypeCheck::default();
    for alpha in list_types(arc_sum, TypeKind::Path) {
        if !is_symmetric(&alpha) {
            continue;
        }
        let gc = generated_cycle_types(&alpha).expect("listed tuples are standard");
        for beta in [&gc.beta, &gc.beta_prime] {
            out.checked += 1;
            let t = period_info(beta.repr()).t;
            if t != 1 {
                out.failures
                    .push(format!("{alpha} generates {beta} with t={t}"));
            }
        }
    }
    out
}

/// One instance of the count formula: the path type obtained from `beta`
/// by shortening its first block, and the distinct cycle types such paths
/// generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaTerms {
    pub beta: SignedTuple,
    pub alpha: SignedTuple,
    pub terms: Vec<CycleType>,
}

pub fn formula_terms(beta: &SignedTuple) -> Result<FormulaTerms> {
    let mut raw = beta.entries().to_vec();
    raw[0] = star_one(beta, 0);
    let alpha = normalize_path(&SignedTuple::new(raw))?;
    let gc = generated_cycle_types(&alpha)?;
    let mut terms = vec![gc.beta.clone()];
    if !gc.coincide {
        terms.push(gc.beta_prime);
    }
    Ok(FormulaTerms {
        beta: beta.clone(),
        alpha,
        terms,
    })
}

/// Right-hand side of the count formula: sum over the generated types of
/// `delta * g * t`.
pub fn formula_rhs(terms: &[CycleType], g: impl Fn(&CycleType) -> u64) -> u64 {
    terms
        .iter()
        .map(|c| delta(c.repr()) * g(c) * period_info(c.repr()).t as u64)
        .sum()
}

fn oracle_cycle_counts(t: &Tournament) -> Result<HashMap<CycleType, u64>> {
    let mut counts = HashMap::new();
    for c in hamiltonian_cycles(t)? {
        *counts.entry(c.ty).or_insert(0) += 1;
    }
    Ok(counts)
}

fn prepare(
    property: Property,
    scope: &Scope,
    pre: &mut Tally,
    extra: &mut Map<String, Value>,
) -> Result<Check> {
    let n = scope.order();
    let random = matches!(scope, Scope::Random { .. });
    let check: Check = match property {
        Property::PathIdentity => {
            let pairs: Vec<(SignedTuple, SignedTuple)> = (1..n)
                .flat_map(|l| list_types(l, TypeKind::Path))
                .filter(|a| a.entries()[0] > 0)
                .map(|a| {
                    let b = a.negated();
                    (a, b)
                })
                .collect();
            Box::new(move |inst, tally| {
                let wt = WordTable::new(&inst.tournament);
                for (a, b) in &pairs {
                    let (fa, fb) = (wt.paths(a)?, wt.paths(b)?);
                    tally.expect_eq(inst, names(&[a, b]), fa, fb, "f(a) != f(-a)");
                }
                Ok(())
            })
        }
        Property::CycleIdentity => {
            let pairs: Vec<(SignedTuple, SignedTuple)> = (3..=n)
                .flat_map(|m| list_types(m, TypeKind::Cycle))
                .filter(|b| b.entries()[0] > 0)
                .map(|b| {
                    let nb = b.negated();
                    (b, nb)
                })
                .collect();
            Box::new(move |inst, tally| {
                let wt = WordTable::new(&inst.tournament);
                for (b, nb) in &pairs {
                    let (ga, gb) = (wt.cycles(b)?, wt.cycles(nb)?);
                    tally.expect_eq(inst, names(&[b, nb]), ga, gb, "g(b) != g(-b)");
                }
                Ok(())
            })
        }
        Property::EnumerationPartition => {
            let words = if n >= 2 {
                list_types(n - 1, TypeKind::Path)
            } else {
                Vec::new()
            };
            Box::new(move |inst, tally| {
                let t = &inst.tournament;
                if n < 2 {
                    return Ok(());
                }
                let mut per_type = BTreeMap::new();
                for a in &words {
                    per_type.insert(a.clone(), count_enumerations(t, a)?);
                }
                let total: u64 = per_type.values().sum();
                tally.expect_eq(inst, Vec::new(), total, factorial(n), "sum of e(a) != n!");
                if n <= MAX_ORACLE_ORDER {
                    let brute = enumeration_census(t)?;
                    for (a, &e) in &per_type {
                        let b = brute.get(a).copied().unwrap_or(0);
                        tally.expect_eq(inst, names(&[a]), e, b, "e(a) differs from brute force");
                    }
                    for a in brute.keys() {
                        tally.expect(
                            Some(inst),
                            names(&[a]),
                            per_type.contains_key(a),
                            "enumeration of unlisted type",
                        );
                    }
                }
                Ok(())
            })
        }
        Property::PeRatio => {
            let words = if n >= 2 {
                list_types(n - 1, TypeKind::Path)
            } else {
                Vec::new()
            };
            Box::new(move |inst, tally| {
                let t = &inst.tournament;
                let mut paths: HashMap<PathType, u64> = HashMap::new();
                for p in hamiltonian_paths(t)? {
                    *paths.entry(p.ty).or_insert(0) += 1;
                }
                for a in &words {
                    let e = count_enumerations(t, a)?;
                    let p = paths.get(&path_canonical(a)?).copied().unwrap_or(0);
                    let factor = if is_symmetric(a) { 2 } else { 1 };
                    tally.expect_eq(inst, names(&[a]), e, factor * p, "e(a) != ratio * |P(a)|");
                }
                Ok(())
            })
        }
        Property::ClassSizes => Box::new(move |inst, tally| {
            for (ty, part) in all_path_classes(&inst.tournament)? {
                for class in &part.classes {
                    let want = expected_class_size(class.cycle.repr()) as u64;
                    tally.expect_eq(
                        inst,
                        names::<dyn fmt::Display>(&[&ty, &class.cycle]),
                        class.paths.len() as u64,
                        want,
                        "class size",
                    );
                }
            }
            Ok(())
        }),
        Property::EqSym => {
            if n >= 2 {
                let types = eqsym_types(n - 1);
                pre.comparisons += types.checked;
                for f in types.failures {
                    pre.fail(None, Vec::new(), Vec::new(), &f);
                }
            }
            let alphas: Vec<(PathType, CycleType, CycleType, bool)> = if n >= 3 {
                canonical_path_types(n - 1)
                    .into_iter()
                    .map(|a| {
                        let gc = generated_cycle_types(a.repr()).expect("standard");
                        (a, gc.beta, gc.beta_prime, gc.coincide)
                    })
                    .collect()
            } else {
                Vec::new()
            };
            Box::new(move |inst, tally| {
                let t = &inst.tournament;
                let mut sets: HashMap<CycleType, BTreeSet<u64>> = HashMap::new();
                for c in hamiltonian_cycles(t)? {
                    sets.entry(c.ty).or_default().insert(c.arcs);
                }
                let empty = BTreeSet::new();
                let classes = all_path_classes(t)?;
                for (a, b, bp, coincide) in &alphas {
                    let sb = sets.get(b).unwrap_or(&empty);
                    let sbp = sets.get(bp).unwrap_or(&empty);
                    let types = names::<dyn fmt::Display>(&[a, b, bp]);
                    if *coincide {
                        tally.expect(
                            Some(inst),
                            types.clone(),
                            sb == sbp,
                            "generated cycle sets differ",
                        );
                    } else {
                        tally.expect(
                            Some(inst),
                            types.clone(),
                            sb.is_disjoint(sbp),
                            "generated cycle sets meet",
                        );
                    }
                    if let Some(part) = classes.get(a) {
                        for class in &part.classes {
                            let inside =
                                sb.contains(&class.cycle_arcs) || sbp.contains(&class.cycle_arcs);
                            tally.expect(
                                Some(inst),
                                types.clone(),
                                inside,
                                "generated cycle outside both sets",
                            );
                        }
                    }
                }
                Ok(())
            })
        }
        Property::CountFormula => {
            let instances: Vec<FormulaTerms> = if n >= 3 {
                list_types(n, TypeKind::Cycle)
                    .iter()
                    .map(formula_terms)
                    .collect::<Result<_>>()?
            } else {
                Vec::new()
            };
            for f in &instances {
                let own = cycle_canonical(&f.beta)?;
                pre.expect(
                    None,
                    names(&[&f.beta, &f.alpha]),
                    f.terms.contains(&own),
                    "beta is not generated by its shortened path type",
                );
            }
            Box::new(move |inst, tally| {
                let t = &inst.tournament;
                let g = oracle_cycle_counts(t)?;
                for f in &instances {
                    let lhs = count_paths(t, &f.alpha)?;
                    let rhs = formula_rhs(&f.terms, |c| g.get(c).copied().unwrap_or(0));
                    tally.expect_eq(
                        inst,
                        names(&[&f.beta, &f.alpha]),
                        lhs,
                        rhs,
                        "f(a) != sum delta*g*t",
                    );
                }
                Ok(())
            })
        }
        Property::TOne => {
            if n >= 2 {
                let types = t_one_types(n - 1);
                pre.comparisons += types.checked;
                for f in types.failures {
                    pre.fail(None, Vec::new(), Vec::new(), &f);
                }
            }
            Box::new(move |inst, tally| {
                for (ty, part) in all_path_classes(&inst.tournament)? {
                    if !is_symmetric(ty.repr()) {
                        continue;
                    }
                    for class in &part.classes {
                        let t = period_info(class.cycle.repr()).t as u64;
                        tally.expect_eq(
                            inst,
                            names::<dyn fmt::Display>(&[&ty, &class.cycle]),
                            t,
                            1,
                            "t(beta) != 1",
                        );
                    }
                }
                Ok(())
            })
        }
        Property::HInvariance => {
            let specs = all_specs(n);
            Box::new(move |inst, tally| {
                let chosen: Vec<&Digraph2Spec> = if !random {
                    specs.iter().collect()
                } else if specs.is_empty() {
                    Vec::new()
                } else {
                    let k = ((inst.draw as u128 * specs.len() as u128) >> 64) as usize;
                    vec![&specs[k]]
                };
                for h in chosen {
                    let r = check_complement_invariance(&inst.tournament, h)?;
                    tally.expect_eq(
                        inst,
                        names(&[h]),
                        r.count,
                        r.complement_count,
                        "copies in T != copies in reversal",
                    );
                }
                Ok(())
            })
        }
        Property::ComplementBridge => {
            let paths: Vec<PathType> = (1..n).flat_map(canonical_path_types).collect();
            let cycles: Vec<CycleType> = (3..=n).flat_map(canonical_cycle_types).collect();
            Box::new(move |inst, tally| {
                let wt = WordTable::new(&inst.tournament);
                let wc = WordTable::new(&inst.tournament.complement());
                for a in &paths {
                    tally.expect_eq(
                        inst,
                        names(&[a]),
                        wt.paths(a.repr())?,
                        wc.paths(a.repr())?,
                        "f_T != f_reversal",
                    );
                }
                for b in &cycles {
                    tally.expect_eq(
                        inst,
                        names(&[b]),
                        wt.cycles(b.repr())?,
                        wc.cycles(b.repr())?,
                        "g_T != g_reversal",
                    );
                }
                Ok(())
            })
        }
        Property::SzeleFloor => {
            if n >= 2 {
                let floor = factorial(n).div_ceil(1 << (n - 1));
                extra.insert("floor".into(), json!(floor));
            }
            Box::new(move |inst, tally| {
                if n < 2 {
                    return Ok(());
                }
                let f = count_paths(&inst.tournament, &SignedTuple::new(vec![n as i32 - 1]))?;
                tally.offer(f, inst.tournament.to_text());
                Ok(())
            })
        }
        Property::OracleEquivalence => Box::new(move |inst, tally| {
            let dp = census(&inst.tournament)?;
            let brute = oracle_census(&inst.tournament)?;
            for (ty, &c) in &dp.path_counts {
                tally.expect_eq(
                    inst,
                    names(&[ty]),
                    c,
                    brute.path_counts[ty],
                    "path count differs from brute force",
                );
            }
            for (ty, &c) in &dp.cycle_counts {
                tally.expect_eq(
                    inst,
                    names(&[ty]),
                    c,
                    brute.cycle_counts[ty],
                    "cycle count differs from brute force",
                );
            }
            Ok(())
        }),
        Property::Rosenfeld => {
            let alpha = antidirected(n.saturating_sub(1));
            let symmetric = n >= 2 && is_symmetric(&alpha);
            if n >= 2 {
                extra.insert("alpha".into(), json!(alpha.to_string()));
                extra.insert("trivial".into(), json!(symmetric));
            }
            Box::new(move |inst, tally| {
                if n < 2 {
                    return Ok(());
                }
                let neg = alpha.negated();
                let (fa, fb) = (
                    count_paths(&inst.tournament, &alpha)?,
                    count_paths(&inst.tournament, &neg)?,
                );
                tally.expect_eq(inst, names(&[&alpha, &neg]), fa, fb, "f(a) != f(-a)");
                Ok(())
            })
        }
    };
    Ok(check)
}

/// Checks `property` on every tournament of `scope`.
pub fn verify(property: Property, scope: Scope) -> Result<VerifyReport> {
    scope.validate()?;
    let n = scope.order();
    if property.needs_oracle() && n > MAX_ORACLE_ORDER {
        return Err(Error::ScopeTooLarge(format!(
            "{property} uses brute-force enumeration, limited to order {MAX_ORACLE_ORDER}, got {n}"
        )));
    }
    let mut pre = Tally::default();
    let mut extra = Map::new();
    let check = prepare(property, &scope, &mut pre, &mut extra)?;
    let swept = (0..scope.len())
        .into_par_iter()
        .fold(Tally::default, |mut tally, i| {
            let inst = scope.instance(i);
            tally.checked += 1;
            if let Err(e) = check(&inst, &mut tally) {
                tally.fail(Some(&inst), Vec::new(), Vec::new(), &format!("error: {e}"));
            }
            tally
        })
        .reduce(Tally::default, Tally::merge);
    let mut tally = pre.merge(swept);

    if property == Property::SzeleFloor && n >= 2 {
        let floor = extra["floor"].as_u64().expect("floor set");
        tally.comparisons += 1;
        match tally.best.clone() {
            Some((max, text)) => {
                extra.insert("max".into(), json!(max));
                extra.insert("argmax".into(), json!(text));
                if max < floor {
                    tally.push(Violation {
                        tournament: Some(text),
                        index: None,
                        types: vec![format!("({})", n - 1)],
                        counts: vec![max, floor],
                        detail: "max f below floor".into(),
                    });
                }
            }
            None => {
                extra.insert("max".into(), Value::Null);
            }
        }
    }

    Ok(VerifyReport {
        schema: 1,
        property: property.id().to_string(),
        scope,
        checked: tally.checked,
        comparisons: tally.comparisons,
        pass: tally.violation_count == 0,
        violation_count: tally.violation_count,
        violations: tally.violations,
        extra,
        ms: None,
    })
}

/// Antidirected paths starting forward versus starting backward.
pub fn rosenfeld_check(scope: Scope) -> Result<VerifyReport> {
    verify(Property::Rosenfeld, scope)
}
