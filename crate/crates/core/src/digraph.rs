//! Copies of digraphs whose underlying graph has maximum degree at most 2.
//!
//! Such a digraph is a disjoint union of oriented paths, oriented cycles and
//! isolated vertices, written as e.g. `P(2,-1);C(3);V;V`. A copy is a
//! subdigraph of the tournament (vertex set plus arc set) isomorphic to it.
//!
//! [`count_copies`] places the components one after another on disjoint
//! vertex sets, multiplying per-set counts from the census DP, and divides
//! by `r!` for every group of `r` isomorphic components.
//! [`count_copies_brute`] counts embeddings of an arbitrary small digraph
//! and divides by its automorphism count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::census::{closed_counts_by_subset, cycle_multiplicity, enumeration_counts_by_subset};
use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::types::{
    canonical_cycle_types, canonical_path_types, cycle_canonical, is_symmetric, path_canonical,
    CycleType, PathType, SignedTuple,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    Path(SignedTuple),
    Cycle(SignedTuple),
    Vertex,
}

/// Isomorphism class of a component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKey {
    Vertex,
    Path(PathType),
    Cycle(CycleType),
}

impl Component {
    pub fn order(&self) -> usize {
        match self {
            Component::Path(a) => a.arc_sum() + 1,
            Component::Cycle(b) => b.arc_sum(),
            Component::Vertex => 1,
        }
    }

    pub fn key(&self) -> ComponentKey {
        match self {
            Component::Path(a) => ComponentKey::Path(path_canonical(a).expect("validated")),
            Component::Cycle(b) => ComponentKey::Cycle(cycle_canonical(b).expect("validated")),
            Component::Vertex => ComponentKey::Vertex,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Component::Path(a) if !a.is_standard_path() => Err(Error::IllFormed(format!(
                "P{a} is not a standard path type"
            ))),
            Component::Cycle(b) if !b.is_standard_cycle() => Err(Error::IllFormed(format!(
                "C{b} is not a standard cycle type"
            ))),
            Component::Cycle(b) if b.arc_sum() < 3 => {
                Err(Error::IllFormed(format!("C{b} has fewer than 3 vertices")))
            }
            _ => Ok(()),
        }
    }
}

impl ComponentKey {
    pub fn component(&self) -> Component {
        match self {
            ComponentKey::Vertex => Component::Vertex,
            ComponentKey::Path(p) => Component::Path(p.repr().clone()),
            ComponentKey::Cycle(c) => Component::Cycle(c.repr().clone()),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Path(a) => write!(f, "P{a}"),
            Component::Cycle(b) => write!(f, "C{b}"),
            Component::Vertex => f.write_str("V"),
        }
    }
}

/// A disjoint union of path, cycle and isolated-vertex components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph2Spec {
    components: Vec<Component>,
}

impl Digraph2Spec {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        for c in &components {
            c.validate()?;
        }
        Ok(Digraph2Spec { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(Component::order).sum()
    }

    /// Components grouped by isomorphism class, with multiplicities.
    pub fn groups(&self) -> BTreeMap<ComponentKey, usize> {
        let mut g = BTreeMap::new();
        for c in &self.components {
            *g.entry(c.key()).or_insert(0) += 1;
        }
        g
    }

    /// Explicit vertex/arc description, components laid out in order.
    pub fn to_raw(&self) -> RawDigraph {
        let mut arcs = Vec::new();
        let mut base = 0;
        for c in &self.components {
            let (word, closed) = match c {
                Component::Path(a) => (a.expand(), false),
                Component::Cycle(b) => (b.expand(), true),
                Component::Vertex => (Vec::new(), false),
            };
            let m = c.order();
            for (i, &fwd) in word.iter().enumerate() {
                let (u, v) = (base + i, base + (i + 1) % m);
                debug_assert!(closed || i + 1 < m);
                arcs.push(if fwd { (u, v) } else { (v, u) });
            }
            base += m;
        }
        RawDigraph { order: base, arcs }
    }
}

impl fmt::Display for Digraph2Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Digraph2Spec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Digraph2Spec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let lead = part.len() - part.trim_start().len();
            let item = part.trim();
            let at = offset + lead;
            let component = if item == "V" {
                Component::Vertex
            } else if let Some(rest) = item.strip_prefix('P') {
                Component::Path(parse_tuple_at(rest, at + 1)?)
            } else if let Some(rest) = item.strip_prefix('C') {
                Component::Cycle(parse_tuple_at(rest, at + 1)?)
            } else {
                return Err(Error::Parse {
                    offset: at,
                    message: format!("expected `V`, `P(...)` or `C(...)`, found `{item}`"),
                });
            };
            components.push(component);
            offset += part.len() + 1;
        }
        Digraph2Spec::new(components)
    }
}

fn parse_tuple_at(text: &str, offset: usize) -> Result<SignedTuple> {
    text.parse::<SignedTuple>().map_err(|e| match e {
        Error::Parse { offset: o, message } => Error::Parse {
            offset: offset + o,
            message,
        },
        other => other,
    })
}

/// Copies of `component` on each vertex set of the right size.
fn copies_by_subset(t: &Tournament, component: &Component) -> Result<Vec<u64>> {
    match component {
        Component::Vertex => {
            let mut v = vec![0u64; 1 << t.order()];
            for u in 0..t.order() {
                v[1 << u] = 1;
            }
            Ok(v)
        }
        Component::Path(a) => {
            let mut e = enumeration_counts_by_subset(t, a)?;
            if is_symmetric(a) {
                for x in e.iter_mut() {
                    if *x % 2 != 0 {
                        return Err(Error::ParityViolation(a.to_string()));
                    }
                    *x /= 2;
                }
            }
            Ok(e)
        }
        Component::Cycle(b) => {
            let mut closed = closed_counts_by_subset(t, b)?;
            let div = cycle_multiplicity(b);
            for x in closed.iter_mut() {
                if *x % div != 0 {
                    return Err(Error::DivisibilityViolation {
                        what: format!("C{b}"),
                        count: *x,
                        divisor: div,
                    });
                }
                *x /= div;
            }
            Ok(closed)
        }
    }
}

/// Number of copies of `h` in `t`.
pub fn count_copies(t: &Tournament, h: &Digraph2Spec) -> Result<u64> {
    let n = t.order();
    if h.order() > n {
        return Err(Error::TooManyVertices {
            needed: h.order(),
            order: n,
        });
    }
    let groups = h.groups();
    let size = 1usize << n;
    let full = (size - 1) as u32;
    let mut current = vec![0u64; size];
    current[0] = 1;
    for (key, &mult) in &groups {
        let component = key.component();
        let m = component.order() as u32;
        let table = copies_by_subset(t, &component)?;
        for _ in 0..mult {
            let mut next = vec![0u64; size];
            for (used, &ways) in current.iter().enumerate() {
                if ways == 0 {
                    continue;
                }
                let free = full & !(used as u32);
                let mut sub = free;
                while sub != 0 {
                    if sub.count_ones() == m {
                        let c = table[sub as usize];
                        if c != 0 {
                            next[used | sub as usize] += ways * c;
                        }
                    }
                    sub = (sub - 1) & free;
                }
            }
            current = next;
        }
    }
    let ordered: u64 = current.iter().sum();
    let symmetry: u64 = groups
        .values()
        .map(|&r| (1..=r as u64).product::<u64>())
        .product();
    if !ordered.is_multiple_of(symmetry) {
        return Err(Error::DivisibilityViolation {
            what: format!("placements of {h}"),
            count: ordered,
            divisor: symmetry,
        });
    }
    Ok(ordered / symmetry)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementCheck {
    pub count: u64,
    pub complement_count: u64,
    pub equal: bool,
}

/// Copies of `h` in `t` and in its arc reversal.
pub fn check_complement_invariance(t: &Tournament, h: &Digraph2Spec) -> Result<ComplementCheck> {
    let count = count_copies(t, h)?;
    let complement_count = count_copies(&t.complement(), h)?;
    Ok(ComplementCheck {
        count,
        complement_count,
        equal: count == complement_count,
    })
}

/// Every nonempty digraph spec on at most `max_vertices` vertices, one per
/// isomorphism class, components listed in key order.
pub fn all_specs(max_vertices: usize) -> Vec<Digraph2Spec> {
    let mut keys: Vec<ComponentKey> = Vec::new();
    for m in 1..=max_vertices {
        if m == 1 {
            keys.push(ComponentKey::Vertex);
        } else {
            keys.extend(
                canonical_path_types(m - 1)
                    .into_iter()
                    .map(ComponentKey::Path),
            );
        }
        if m >= 3 {
            keys.extend(
                canonical_cycle_types(m)
                    .into_iter()
                    .map(ComponentKey::Cycle),
            );
        }
    }
    let orders: Vec<usize> = keys.iter().map(|k| k.component().order()).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        budget: usize,
        keys: &[ComponentKey],
        orders: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Digraph2Spec>,
    ) {
        if !chosen.is_empty() {
            out.push(Digraph2Spec {
                components: chosen.iter().map(|&i| keys[i].component()).collect(),
            });
        }
        for i in start..keys.len() {
            if orders[i] <= budget {
                chosen.push(i);
                rec(i, budget - orders[i], keys, orders, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(0, max_vertices, &keys, &orders, &mut chosen, &mut out);
    out
}

/// A small digraph given by explicit arcs on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawDigraph {
    pub order: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl RawDigraph {
    /// Vertex 0 with arcs to each of `1..=leaves`.
    pub fn out_star(leaves: usize) -> Self {
        RawDigraph {
            order: leaves + 1,
            arcs: (1..=leaves).map(|k| (0, k)).collect(),
        }
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }
}

/// Injective maps of `h` into a host on `host_order` vertices that send
/// every arc of `h` to an arc of the host.
fn count_embeddings(
    h: &RawDigraph,
    host_order: usize,
    host_arc: &dyn Fn(usize, usize) -> bool,
) -> u64 {
    fn rec(
        h: &RawDigraph,
        host_order: usize,
        host_arc: &dyn Fn(usize, usize) -> bool,
        image: &mut Vec<usize>,
        used: u32,
    ) -> u64 {
        let next = image.len();
        if next == h.order {
            return 1;
        }
        let mut total = 0;
        for cand in 0..host_order {
            if used >> cand & 1 == 1 {
                continue;
            }
            let ok = h.arcs.iter().all(|&(a, b)| {
                if a == next && b < next {
                    host_arc(cand, image[b])
                } else if b == next && a < next {
                    host_arc(image[a], cand)
                } else {
                    true
                }
            });
            if ok {
                image.push(cand);
                total += rec(h, host_order, host_arc, image, used | 1 << cand);
                image.pop();
            }
        }
        total
    }
    rec(h, host_order, host_arc, &mut Vec::with_capacity(h.order), 0)
}

/// Brute-force copy count of an arbitrary digraph on at most 10 vertices.
pub fn count_copies_brute(t: &Tournament, h: &RawDigraph) -> Result<u64> {
    if h.order > t.order() {
        return Err(Error::TooManyVertices {
            needed: h.order,
            order: t.order(),
        });
    }
    if h.order > 10 {
        return Err(Error::ScopeTooLarge(format!(
            "brute-force copy count limited to 10 pattern vertices, got {}",
            h.order
        )));
    }
    let embeddings = count_embeddings(h, t.order(), &|u, v| t.has_arc(u, v));
    let automorphisms = count_embeddings(h, h.order, &|u, v| h.has_arc(u, v));
    Ok(embeddings / automorphisms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCounterexample {
    pub tournament: String,
    pub star: RawDigraph,
    pub count: u64,
    pub complement_count: u64,
}

/// Directed `n`-cycle `0 -> 1 -> ... -> n-1 -> 0` (chords oriented from the
/// lower index to the higher) plus a source `n` dominating it, with the
/// out-star on `n + 1` vertices. The star has exactly one copy in the
/// tournament and none in its reversal.
pub fn star_counterexample(n: usize) -> Result<(Tournament, StarCounterexample)> {
    if n < 3 {
        return Err(Error::IllFormed(format!(
            "counterexample needs n >= 3, got {n}"
        )));
    }
    let mut t = Tournament::transitive(n + 1);
    t.set_arc(n - 1, 0);
    for v in 0..n {
        t.set_arc(n, v);
    }
    let star = RawDigraph::out_star(n);
    let count = count_copies_brute(&t, &star)?;
    let complement_count = count_copies_brute(&t.complement(), &star)?;
    Ok((
        t.clone(),
        StarCounterexample {
            tournament: t.to_text(),
            star,
            count,
            complement_count,
        },
    ))
}
