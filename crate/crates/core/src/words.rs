//! Counts for every direction word at once.
//!
//! One walk over the trie of direction words extends a sparse
//! `(visited set, last vertex)` layer by one letter per step, so every
//! path type of every length is counted in a single pass. Cycles are read
//! from their least vertex in both directions, which gives exactly two
//! readings per cycle.
//!
//! Word bit `i` is set when letter `i` is a forward arc.

use crate::census::{paths_from_enumerations, require_cycle, require_path};
use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::types::SignedTuple;

type State = (u32, u8, u64);

#[derive(Clone, Debug)]
pub struct WordTable {
    n: usize,
    /// `open[l][w]`: enumerations with `l` arcs and word `w`.
    open: Vec<Vec<u64>>,
    /// `closed[m][w]`: readings of `m`-vertex cycles from their least vertex
    /// with cyclic word `w`.
    closed: Vec<Vec<u64>>,
}

fn extend(t: &Tournament, states: &[State], forward: bool, above_start: bool) -> Vec<State> {
    let mut next: Vec<State> = Vec::new();
    for &(mask, last, c) in states {
        let step = if forward {
            t.out_mask(last as usize)
        } else {
            t.in_mask(last as usize)
        };
        let mut cand = step & !mask;
        if above_start {
            cand &= !((2u32 << mask.trailing_zeros()) - 1);
        }
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            next.push((mask | 1 << u, u as u8, c));
        }
    }
    next.sort_unstable_by_key(|&(m, l, _)| (m, l));
    next.dedup_by(|b, a| {
        if (a.0, a.1) == (b.0, b.1) {
            a.2 += b.2;
            true
        } else {
            false
        }
    });
    next
}

fn word_bits(word: &[bool]) -> usize {
    word.iter()
        .enumerate()
        .fold(0, |acc, (i, &f)| acc | (f as usize) << i)
}

impl WordTable {
    pub fn new(t: &Tournament) -> Self {
        let n = t.order();
        let mut table = WordTable {
            n,
            open: (0..n.max(1)).map(|l| vec![0; 1 << l]).collect(),
            closed: (0..=n)
                .map(|m| vec![0; if m >= 3 { 1 << m } else { 0 }])
                .collect(),
        };
        let singles: Vec<State> = (0..n).map(|v| (1 << v, v as u8, 1)).collect();
        table.walk_open(t, &singles, 0, 0);
        table.walk_closed(t, &singles, 0, 0);
        table
    }

    fn walk_open(&mut self, t: &Tournament, states: &[State], len: usize, bits: usize) {
        if len > 0 {
            self.open[len][bits] = states.iter().map(|s| s.2).sum();
        }
        if len + 1 >= self.n {
            return;
        }
        for forward in [false, true] {
            let next = extend(t, states, forward, false);
            if !next.is_empty() {
                self.walk_open(t, &next, len + 1, bits | (forward as usize) << len);
            }
        }
    }

    fn walk_closed(&mut self, t: &Tournament, states: &[State], len: usize, bits: usize) {
        if len >= 2 {
            let row = &mut self.closed[len + 1];
            for &(mask, last, c) in states {
                let start = mask.trailing_zeros() as usize;
                let closing = t.has_arc(last as usize, start) as usize;
                row[bits | closing << len] += c;
            }
        }
        if len + 1 >= self.n {
            return;
        }
        for forward in [false, true] {
            let next = extend(t, states, forward, true);
            if !next.is_empty() {
                self.walk_closed(t, &next, len + 1, bits | (forward as usize) << len);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `e_T(alpha)`.
    pub fn enumerations(&self, alpha: &SignedTuple) -> Result<u64> {
        let m = require_path(alpha, self.n)?;
        Ok(self.open[m - 1][word_bits(&alpha.expand())])
    }

    /// Enumerations with `arcs` arcs, summed over all words.
    pub fn total_enumerations(&self, arcs: usize) -> u64 {
        self.open.get(arcs).map_or(0, |row| row.iter().sum())
    }

    /// `f_T(alpha)`.
    pub fn paths(&self, alpha: &SignedTuple) -> Result<u64> {
        paths_from_enumerations(alpha, self.enumerations(alpha)?)
    }

    /// `g_T(beta)`: readings over every word in the rotation/reflection
    /// orbit of `beta`, halved.
    pub fn cycles(&self, beta: &SignedTuple) -> Result<u64> {
        let m = require_cycle(beta, self.n)?;
        if m < 3 {
            return Ok(0);
        }
        let word = beta.expand();
        let back: Vec<bool> = word.iter().rev().map(|&f| !f).collect();
        let mut words: Vec<usize> = (0..m)
            .flat_map(|i| {
                let rot = |w: &[bool]| word_bits(&[&w[i..], &w[..i]].concat());
                [rot(&word), rot(&back)]
            })
            .collect();
        words.sort_unstable();
        words.dedup();
        let readings: u64 = words.iter().map(|&w| self.closed[m][w]).sum();
        if !readings.is_multiple_of(2) {
            return Err(Error::DivisibilityViolation {
                what: format!("cycle readings of {beta}"),
                count: readings,
                divisor: 2,
            });
        }
        Ok(readings / 2)
    }
}
