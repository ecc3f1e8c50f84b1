//! Clone classes of a cycle and the partition of typed Hamiltonian paths by
//! the cycle they generate.

use std::collections::BTreeMap;

use crate::census::cycle_tuple;
use crate::error::{Error, Result};
use crate::oracle::{arc_set, hamiltonian_paths};
use crate::tournament::{pair_index, Tournament};
use crate::types::{
    cycle_canonical, is_cycle_symmetric, path_canonical, period_info, CycleType, PathType,
    SignedTuple,
};

/// Partition of the vertices of the cycle `seq` (taken cyclically) into
/// clone classes. Each class has `t(beta)` members, spaced `n / t(beta)`
/// positions apart.
pub fn clones(t: &Tournament, seq: &[usize]) -> Result<Vec<Vec<usize>>> {
    let beta = cycle_tuple(t, seq)?;
    let n = seq.len();
    let reps = period_info(&beta).t;
    let stride = n / reps;
    Ok((0..stride)
        .map(|c| (0..reps).map(|k| seq[c + k * stride]).collect())
        .collect())
}

/// Size of the class of a path whose generated cycle has type `beta`:
/// `n` for a circuit, `2 t(beta)` for a symmetric cycle, `t(beta)`
/// otherwise.
pub fn expected_class_size(beta: &SignedTuple) -> usize {
    if beta.len() == 1 {
        beta.arc_sum()
    } else if is_cycle_symmetric(beta) {
        2 * period_info(beta).t
    } else {
        period_info(beta).t
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClass {
    pub cycle: CycleType,
    /// Arc set of the generated cycle, as a pair bitmask.
    pub cycle_arcs: u64,
    /// Member paths as vertex orders.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub classes: Vec<PathClass>,
}

impl ClassPartition {
    pub fn path_count(&self) -> usize {
        self.classes.iter().map(|c| c.paths.len()).sum()
    }
}

/// Groups the Hamiltonian paths of type `alpha` by their generated cycle.
pub fn path_classes(t: &Tournament, alpha: &SignedTuple) -> Result<ClassPartition> {
    let n = t.order();
    let want = path_canonical(alpha)?;
    if alpha.arc_sum() + 1 != n {
        return Err(Error::IllFormed(format!(
            "{alpha} does not span a tournament of order {n}"
        )));
    }
    Ok(all_path_classes(t)?
        .remove(&want)
        .unwrap_or(ClassPartition {
            classes: Vec::new(),
        }))
}

/// Class partitions of every Hamiltonian path type present in `t`.
pub fn all_path_classes(t: &Tournament) -> Result<BTreeMap<PathType, ClassPartition>> {
    let n = t.order();
    let mut groups: BTreeMap<PathType, BTreeMap<u64, PathClass>> = BTreeMap::new();
    if n < 3 {
        return Ok(BTreeMap::new());
    }
    for p in hamiltonian_paths(t)? {
        let (first, last) = (p.vertices[0], p.vertices[n - 1]);
        let (i, j) = if first < last {
            (first, last)
        } else {
            (last, first)
        };
        let cycle_arcs = p.arcs | 1 << pair_index(n, i, j);
        debug_assert_eq!(cycle_arcs, arc_set(n, &p.vertices, true));
        let class = groups
            .entry(p.ty)
            .or_default()
            .entry(cycle_arcs)
            .or_insert_with(|| PathClass {
                cycle: cycle_canonical(&cycle_tuple(t, &p.vertices).expect("n >= 3"))
                    .expect("standard"),
                cycle_arcs,
                paths: Vec::new(),
            });
        class.paths.push(p.vertices);
    }
    Ok(groups
        .into_iter()
        .map(|(ty, g)| {
            (
                ty,
                ClassPartition {
                    classes: g.into_values().collect(),
                },
            )
        })
        .collect())
}
