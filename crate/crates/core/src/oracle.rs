//! Brute-force enumeration of Hamiltonian paths and cycles.
//!
//! Nothing here uses the subset DP or the `delta * t` multiplicities:
//! every vertex order is visited, and paths and cycles are identified by
//! their arc sets. This is the reference the DP engine is checked against.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::census::{classify_enumeration, CensusReport};
use crate::error::{Error, Result};
use crate::tournament::{pair_index, Tournament};
use crate::types::{cycle_canonical, path_canonical, CycleType, PathType, SignedTuple};

pub const MAX_ORACLE_ORDER: usize = 8;

fn check_order(t: &Tournament) -> Result<()> {
    if t.order() > MAX_ORACLE_ORDER {
        return Err(Error::ScopeTooLarge(format!(
            "brute force limited to order {MAX_ORACLE_ORDER}, got {}",
            t.order()
        )));
    }
    Ok(())
}

/// Calls `visit` with every ordering of `0..n` whose first element is in
/// `firsts`.
fn for_each_order(n: usize, firsts: std::ops::Range<usize>, visit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, seq: &mut Vec<usize>, used: u32, visit: &mut dyn FnMut(&[usize])) {
        if seq.len() == n {
            visit(seq);
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 {
                seq.push(v);
                rec(n, seq, used | 1 << v, visit);
                seq.pop();
            }
        }
    }
    let mut seq = Vec::with_capacity(n);
    for first in firsts {
        seq.push(first);
        rec(n, &mut seq, 1 << first, visit);
        seq.pop();
    }
}

/// Set of unordered vertex pairs used by consecutive vertices (and the
/// closing pair when `closed`), as a bitmask over text-format pair indices.
pub fn arc_set(n: usize, seq: &[usize], closed: bool) -> u64 {
    let mut mask = 0u64;
    let mut add = |a: usize, b: usize| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        mask |= 1 << pair_index(n, i, j);
    };
    for w in seq.windows(2) {
        add(w[0], w[1]);
    }
    if closed && seq.len() > 2 {
        add(seq[seq.len() - 1], seq[0]);
    }
    mask
}

#[derive(Clone, Debug)]
pub struct FoundPath {
    pub ty: PathType,
    pub arcs: u64,
    /// One of the two vertex orders of the path.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FoundCycle {
    pub ty: CycleType,
    pub arcs: u64,
    pub vertices: Vec<usize>,
}

/// Every Hamiltonian path of `t`, once per arc set.
pub fn hamiltonian_paths(t: &Tournament) -> Result<Vec<FoundPath>> {
    check_order(t)?;
    let n = t.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    for_each_order(n, 0..n, &mut |seq| {
        let arcs = arc_set(n, seq, false);
        if seen.insert(arcs) {
            let alpha = classify_enumeration(t, seq).expect("valid order");
            out.push(FoundPath {
                ty: path_canonical(&alpha).expect("standard"),
                arcs,
                vertices: seq.to_vec(),
            });
        }
    });
    Ok(out)
}

/// Every Hamiltonian cycle of `t`, once per arc set.
pub fn hamiltonian_cycles(t: &Tournament) -> Result<Vec<FoundCycle>> {
    check_order(t)?;
    let n = t.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    // every cyclic order passes through vertex 0
    for_each_order(n, 0..1, &mut |seq| {
        let arcs = arc_set(n, seq, true);
        if seen.insert(arcs) {
            let word: Vec<bool> = (0..n)
                .map(|i| t.has_arc(seq[i], seq[(i + 1) % n]))
                .collect();
            let beta = SignedTuple::from_cyclic_word(&word);
            out.push(FoundCycle {
                ty: cycle_canonical(&beta).expect("standard"),
                arcs,
                vertices: seq.to_vec(),
            });
        }
    });
    Ok(out)
}

/// `e_T` for every Hamiltonian enumeration type, by visiting all `n!`
/// orders.
pub fn enumeration_census(t: &Tournament) -> Result<BTreeMap<SignedTuple, u64>> {
    check_order(t)?;
    let n = t.order();
    let mut counts = BTreeMap::new();
    if n < 2 {
        return Ok(counts);
    }
    for_each_order(n, 0..n, &mut |seq| {
        let alpha = classify_enumeration(t, seq).expect("valid order");
        *counts.entry(alpha).or_insert(0) += 1;
    });
    Ok(counts)
}

/// Same contract as [`crate::census::census`], by brute force.
pub fn oracle_census(t: &Tournament) -> Result<CensusReport> {
    check_order(t)?;
    let mut report = CensusReport::empty(t.order());
    let mut paths: HashMap<PathType, u64> = HashMap::new();
    for p in hamiltonian_paths(t)? {
        *paths.entry(p.ty).or_insert(0) += 1;
    }
    let mut cycles: HashMap<CycleType, u64> = HashMap::new();
    for c in hamiltonian_cycles(t)? {
        *cycles.entry(c.ty).or_insert(0) += 1;
    }
    for (ty, count) in report.path_counts.iter_mut() {
        *count = paths.get(ty).copied().unwrap_or(0);
    }
    for (ty, count) in report.cycle_counts.iter_mut() {
        *count = cycles.get(ty).copied().unwrap_or(0);
    }
    Ok(report)
}
