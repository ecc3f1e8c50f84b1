//! Exact counts of typed enumerations, paths and cycles.
//!
//! `e_T(a)` counts vertex sequences whose consecutive arcs follow the
//! direction word of `a`; it is computed by a subset DP over
//! `(visited set, last vertex)`. Paths of a symmetric type are read the same
//! way from both ends, so `f_T(a) = e_T(a) / 2` for those and `e_T(a)`
//! otherwise. Cycles are counted as closed sequences matching the word of
//! `b` from any start vertex; each cycle is seen exactly `delta(b) * t(b)`
//! times, which the DP result is divided by.
//!
//! Types shorter than the tournament are counted over all vertex subsets of
//! the right size; the per-subset tables are exposed for the digraph
//! counter.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::types::{
    canonical_cycle_types, canonical_path_types, cycle_canonical, delta, is_symmetric, period_info,
    CycleType, PathType, SignedTuple,
};

/// Largest order for which [`census`] computes the full cycle table.
pub const MAX_CENSUS_ORDER: usize = 10;

fn check_sequence(t: &Tournament, seq: &[usize], needed: usize) -> Result<()> {
    if seq.len() < needed {
        return Err(Error::TooShort {
            needed,
            got: seq.len(),
        });
    }
    let mut seen = 0u32;
    for &v in seq {
        if v >= t.order() {
            return Err(Error::BadSubset {
                vertex: v,
                order: t.order(),
            });
        }
        if seen >> v & 1 == 1 {
            return Err(Error::BadSequence(format!("vertex {v} repeated")));
        }
        seen |= 1 << v;
    }
    Ok(())
}

/// Type of the path `seq[0] seq[1] ... ` read in this order.
pub fn classify_enumeration(t: &Tournament, seq: &[usize]) -> Result<SignedTuple> {
    check_sequence(t, seq, 2)?;
    let word: Vec<bool> = seq.windows(2).map(|w| t.has_arc(w[0], w[1])).collect();
    Ok(SignedTuple::from_word(&word))
}

/// Type of the cycle through `seq` in this cyclic order, before
/// canonicalization.
pub fn cycle_tuple(t: &Tournament, seq: &[usize]) -> Result<SignedTuple> {
    check_sequence(t, seq, 3)?;
    let n = seq.len();
    let word: Vec<bool> = (0..n)
        .map(|i| t.has_arc(seq[i], seq[(i + 1) % n]))
        .collect();
    Ok(SignedTuple::from_cyclic_word(&word))
}

pub fn classify_cycle(t: &Tournament, seq: &[usize]) -> Result<CycleType> {
    cycle_canonical(&cycle_tuple(t, seq)?)
}

pub(crate) fn require_path(alpha: &SignedTuple, order: usize) -> Result<usize> {
    if !alpha.is_standard_path() {
        return Err(Error::IllFormed(format!(
            "{alpha} is not a standard path tuple"
        )));
    }
    let m = alpha.arc_sum() + 1;
    if m > order {
        return Err(Error::TypeTooLong { needed: m, order });
    }
    Ok(m)
}

pub(crate) fn require_cycle(beta: &SignedTuple, order: usize) -> Result<usize> {
    if !beta.is_standard_cycle() {
        return Err(Error::IllFormed(format!(
            "{beta} is not a standard cycle tuple"
        )));
    }
    let m = beta.arc_sum();
    if m > order {
        return Err(Error::TypeTooLong { needed: m, order });
    }
    Ok(m)
}

#[inline]
fn step_mask(t: &Tournament, v: usize, forward: bool) -> u32 {
    if forward {
        t.out_mask(v)
    } else {
        t.in_mask(v)
    }
}

/// Number of enumerations of type `alpha` on each vertex set (indexed by
/// bitmask). Only sets of size `|alpha| + 1` are nonzero.
pub fn enumeration_counts_by_subset(t: &Tournament, alpha: &SignedTuple) -> Result<Vec<u64>> {
    let m = require_path(alpha, t.order())?;
    let n = t.order();
    let word = alpha.expand();
    let size = 1usize << n;
    let mut dp = vec![0u64; size * n];
    for v in 0..n {
        dp[(1 << v) * n + v] = 1;
    }
    let mut result = vec![0u64; size];
    for mask in 1..size {
        let k = (mask as u32).count_ones() as usize;
        if k > m {
            continue;
        }
        let row = mask * n;
        if k == m {
            result[mask] = dp[row..row + n].iter().sum();
            continue;
        }
        let forward = word[k - 1];
        for v in 0..n {
            let ways = dp[row + v];
            if ways == 0 {
                continue;
            }
            let mut next = step_mask(t, v, forward) & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[(mask | 1 << w) * n + w] += ways;
            }
        }
    }
    Ok(result)
}

/// Number of closed sequences (any start vertex) on each vertex set whose
/// cyclic direction word read from the start equals the word of `beta`.
pub fn closed_counts_by_subset(t: &Tournament, beta: &SignedTuple) -> Result<Vec<u64>> {
    let m = require_cycle(beta, t.order())?;
    let n = t.order();
    let size = 1usize << n;
    let mut result = vec![0u64; size];
    if m < 3 {
        return Ok(result);
    }
    let word = beta.expand();
    let closing = word[m - 1];
    let mut dp = vec![0u64; size * n];
    for start in 0..n {
        dp.iter_mut().for_each(|x| *x = 0);
        dp[(1 << start) * n + start] = 1;
        for mask in 1..size {
            if mask >> start & 1 == 0 {
                continue;
            }
            let k = (mask as u32).count_ones() as usize;
            if k > m {
                continue;
            }
            let row = mask * n;
            if k == m {
                for v in 0..n {
                    let ways = dp[row + v];
                    if ways != 0 && t.has_arc(v, start) == closing {
                        result[mask] += ways;
                    }
                }
                continue;
            }
            let forward = word[k - 1];
            for v in 0..n {
                let ways = dp[row + v];
                if ways == 0 {
                    continue;
                }
                let mut next = step_mask(t, v, forward) & !(mask as u32);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    dp[(mask | 1 << w) * n + w] += ways;
                }
            }
        }
    }
    Ok(result)
}

/// `e_T(alpha)`.
pub fn count_enumerations(t: &Tournament, alpha: &SignedTuple) -> Result<u64> {
    Ok(enumeration_counts_by_subset(t, alpha)?.iter().sum())
}

/// Converts an enumeration count into a path count.
pub fn paths_from_enumerations(alpha: &SignedTuple, e: u64) -> Result<u64> {
    if is_symmetric(alpha) {
        if !e.is_multiple_of(2) {
            return Err(Error::ParityViolation(alpha.to_string()));
        }
        Ok(e / 2)
    } else {
        Ok(e)
    }
}

/// `f_T(alpha)`: number of paths (arc sets) of type `alpha`.
pub fn count_paths(t: &Tournament, alpha: &SignedTuple) -> Result<u64> {
    let e = count_enumerations(t, alpha)?;
    paths_from_enumerations(alpha, e)
}

/// Number of times a single cycle of type `beta` matches the word of `beta`
/// over all start vertices and both directions.
pub fn cycle_multiplicity(beta: &SignedTuple) -> u64 {
    delta(beta) * period_info(beta).t as u64
}

pub fn cycles_from_closed(beta: &SignedTuple, closed: u64) -> Result<u64> {
    let divisor = cycle_multiplicity(beta);
    if !closed.is_multiple_of(divisor) {
        return Err(Error::DivisibilityViolation {
            what: format!("cycle type {beta}"),
            count: closed,
            divisor,
        });
    }
    Ok(closed / divisor)
}

/// `g_T(beta)`: number of cycles (arc sets) of type `beta`.
pub fn count_cycles(t: &Tournament, beta: &SignedTuple) -> Result<u64> {
    let closed: u64 = closed_counts_by_subset(t, beta)?.iter().sum();
    cycles_from_closed(beta, closed)
}

/// Path and cycle counts of every canonical type for one tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub order: usize,
    /// Canonical types with arc sum `n - 1`, zero counts included.
    pub path_counts: BTreeMap<PathType, u64>,
    /// Canonical types with arc sum `n`, zero counts included.
    pub cycle_counts: BTreeMap<CycleType, u64>,
}

impl CensusReport {
    pub fn empty(order: usize) -> Self {
        let path_counts = if order >= 2 {
            canonical_path_types(order - 1)
                .into_iter()
                .map(|p| (p, 0))
                .collect()
        } else {
            BTreeMap::new()
        };
        let cycle_counts = if order >= 2 {
            canonical_cycle_types(order)
                .into_iter()
                .map(|c| (c, 0))
                .collect()
        } else {
            BTreeMap::new()
        };
        CensusReport {
            order,
            path_counts,
            cycle_counts,
        }
    }

    /// `{"schema":1,"n":..,"paths":{..},"cycles":{..}}` with keys sorted.
    pub fn to_json(&self) -> Value {
        let paths: serde_json::Map<String, Value> = self
            .path_counts
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        let cycles: serde_json::Map<String, Value> = self
            .cycle_counts
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({"schema": 1, "n": self.order, "paths": paths, "cycles": cycles})
    }

    pub fn path_count(&self, alpha: &SignedTuple) -> Option<u64> {
        let key = crate::types::path_canonical(alpha).ok()?;
        self.path_counts.get(&key).copied()
    }

    pub fn cycle_count(&self, beta: &SignedTuple) -> Option<u64> {
        let key = cycle_canonical(beta).ok()?;
        self.cycle_counts.get(&key).copied()
    }
}

/// Full census by the DP engine.
pub fn census(t: &Tournament) -> Result<CensusReport> {
    let n = t.order();
    if n > MAX_CENSUS_ORDER {
        return Err(Error::ScopeTooLarge(format!(
            "full census limited to order {MAX_CENSUS_ORDER}, got {n}"
        )));
    }
    let mut report = CensusReport::empty(n);
    for (ty, count) in report.path_counts.iter_mut() {
        *count = count_paths(t, ty.repr())?;
    }
    for (ty, count) in report.cycle_counts.iter_mut() {
        *count = count_cycles(t, ty.repr())?;
    }
    Ok(report)
}
