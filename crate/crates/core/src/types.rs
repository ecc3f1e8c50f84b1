//! Block-type tuples for oriented paths and cycles.
//!
//! A tuple `(a_1, ..., a_s)` lists the block lengths of an oriented path or
//! cycle in traversal order; a positive entry is a block traversed along its
//! arcs, a negative entry a block traversed against them. A path of type `a`
//! read from the other end has type `-rev(a)`, and a cycle type is only
//! defined up to rotation and reflected negation, so equality of the objects
//! being typed is captured by the canonical wrappers [`PathType`] and
//! [`CycleType`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A sequence of signed block lengths.
///
/// Ordering is the canonical-representative order: shorter tuples first,
/// then entrywise with positive entries before negative ones and smaller
/// magnitudes first within a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedTuple(Vec<i32>);

fn entry_key(x: i32) -> (bool, u32) {
    (x < 0, x.unsigned_abs())
}

impl Ord for SignedTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            self.0
                .iter()
                .map(|&x| entry_key(x))
                .cmp(other.0.iter().map(|&x| entry_key(x)))
        })
    }
}

impl PartialOrd for SignedTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SignedTuple {
    pub fn new(entries: Vec<i32>) -> Self {
        SignedTuple(entries)
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of absolute entries: the number of arcs of the typed object.
    pub fn arc_sum(&self) -> usize {
        self.0.iter().map(|x| x.unsigned_abs() as usize).sum()
    }

    pub fn negated(&self) -> Self {
        SignedTuple(self.0.iter().map(|x| -x).collect())
    }

    pub fn reversed(&self) -> Self {
        SignedTuple(self.0.iter().rev().copied().collect())
    }

    /// `-rev(a)`: the type of the same path read from its other end.
    pub fn reflected_negation(&self) -> Self {
        SignedTuple(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn rotated(&self, start: usize) -> Self {
        let s = self.0.len();
        SignedTuple((0..s).map(|k| self.0[(start + k) % s]).collect())
    }

    pub fn is_standard_path(&self) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&x| x != 0)
            && self.0.windows(2).all(|w| opposite(w[0], w[1]))
    }

    pub fn is_standard_cycle(&self) -> bool {
        let s = self.0.len();
        self.is_standard_path()
            && (s == 1 || (s.is_multiple_of(2) && opposite(self.0[s - 1], self.0[0])))
    }

    /// Arc directions along the traversal: `true` for a forward arc.
    pub fn expand(&self) -> Vec<bool> {
        let mut word = Vec::with_capacity(self.arc_sum());
        for &x in &self.0 {
            word.extend(std::iter::repeat_n(x > 0, x.unsigned_abs() as usize));
        }
        word
    }

    /// Run-length compression of a linear arc-direction word.
    pub fn from_word(word: &[bool]) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for &fwd in word {
            let step = if fwd { 1 } else { -1 };
            match out.last_mut() {
                Some(last) if (*last > 0) == fwd => *last += step,
                _ => out.push(step),
            }
        }
        SignedTuple(out)
    }

    /// Run-length compression of a cyclic arc-direction word, started at the
    /// first block boundary so the result is a standard cycle tuple.
    pub fn from_cyclic_word(word: &[bool]) -> Self {
        let n = word.len();
        if n == 0 {
            return SignedTuple(Vec::new());
        }
        match (0..n).find(|&i| word[i] != word[(i + n - 1) % n]) {
            None => SignedTuple(vec![if word[0] { n as i32 } else { -(n as i32) }]),
            Some(start) => {
                let rotated: Vec<bool> = (0..n).map(|k| word[(start + k) % n]).collect();
                Self::from_word(&rotated)
            }
        }
    }
}

fn opposite(a: i32, b: i32) -> bool {
    (a > 0 && b < 0) || (a < 0 && b > 0)
}

fn compatible(a: i32, b: i32) -> bool {
    !opposite(a, b)
}

impl fmt::Display for SignedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SignedTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                offset: lead,
                message: "tuple must be enclosed in parentheses".into(),
            })?;
        if inner.trim().is_empty() {
            return Ok(SignedTuple(Vec::new()));
        }
        let mut offset = lead + 1;
        let mut entries = Vec::new();
        for part in inner.split(',') {
            let value = part.trim().parse::<i32>().map_err(|e| Error::Parse {
                offset,
                message: format!("bad tuple entry `{}`: {e}", part.trim()),
            })?;
            entries.push(value);
            offset += part.len() + 1;
        }
        Ok(SignedTuple(entries))
    }
}

impl Serialize for SignedTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn reject_adjacent_same_sign(raw: &[i32], cyclic: bool) -> Result<()> {
    let s = raw.len();
    let pairs = if cyclic && s > 1 {
        s
    } else {
        s.saturating_sub(1)
    };
    for i in 0..pairs {
        let (a, b) = (raw[i], raw[(i + 1) % s]);
        if a != 0 && b != 0 && !opposite(a, b) {
            return Err(Error::IllFormed(format!(
                "adjacent entries {a} and {b} have the same sign"
            )));
        }
    }
    Ok(())
}

fn merge_error(a: i32, b: i32) -> Error {
    Error::IllFormed(format!(
        "zero between {a} and {b} would merge blocks of opposite sign"
    ))
}

/// Removes zero entries from a path tuple by the zero-merge rules.
///
/// A leading or trailing zero is dropped; an interior zero merges its two
/// neighbours, which must not have opposite signs.
pub fn normalize_path(raw: &SignedTuple) -> Result<SignedTuple> {
    reject_adjacent_same_sign(&raw.0, false)?;
    let mut v = raw.0.clone();
    while let Some(i) = v.iter().position(|&x| x == 0) {
        if i == 0 || i == v.len() - 1 {
            v.remove(i);
            continue;
        }
        let (a, b) = (v[i - 1], v[i + 1]);
        if !compatible(a, b) {
            return Err(merge_error(a, b));
        }
        v.splice(i - 1..=i + 1, [a + b]);
    }
    if v.is_empty() {
        return Err(Error::EmptyType);
    }
    let out = SignedTuple(v);
    if !out.is_standard_path() {
        return Err(Error::IllFormed(format!("{out} is not alternating")));
    }
    Ok(out)
}

/// Removes zero entries from a cycle tuple; a zero merges its two cyclic
/// neighbours.
pub fn normalize_cycle(raw: &SignedTuple) -> Result<SignedTuple> {
    reject_adjacent_same_sign(&raw.0, true)?;
    let mut v = raw.0.clone();
    while let Some(i) = v.iter().position(|&x| x == 0) {
        let s = v.len();
        match s {
            1 => return Err(Error::EmptyType),
            2 => {
                v.remove(i);
                continue;
            }
            _ => {}
        }
        let (p, q) = ((i + s - 1) % s, (i + 1) % s);
        let (a, b) = (v[p], v[q]);
        if !compatible(a, b) {
            return Err(merge_error(a, b));
        }
        // drop the zero and both neighbours, put the merged block where the
        // earlier neighbour was
        let mut next: Vec<i32> = Vec::with_capacity(s - 2);
        if i == 0 {
            next.push(a + b);
            next.extend_from_slice(&v[2..s - 1]);
        } else if i == s - 1 {
            next.push(a + b);
            next.extend_from_slice(&v[1..s - 2]);
        } else {
            next.extend_from_slice(&v[..p]);
            next.push(a + b);
            next.extend_from_slice(&v[q + 1..]);
        }
        v = next;
    }
    if v.is_empty() {
        return Err(Error::EmptyType);
    }
    let out = SignedTuple(v);
    if !out.is_standard_cycle() {
        return Err(Error::IllFormed(format!(
            "{out} is not a valid cycle tuple"
        )));
    }
    Ok(out)
}

/// The two tuples `{a, -rev(a)}` that type the same set of paths.
pub fn path_orbit(alpha: &SignedTuple) -> [SignedTuple; 2] {
    [alpha.clone(), alpha.reflected_negation()]
}

/// All rotations and reflected negations of a cycle tuple (with repeats).
pub fn cycle_orbit(beta: &SignedTuple) -> Vec<SignedTuple> {
    let s = beta.len();
    let mirrored = beta.reflected_negation();
    let mut out = Vec::with_capacity(2 * s);
    for i in 0..s {
        out.push(beta.rotated(i));
        out.push(mirrored.rotated(i));
    }
    out
}

/// Canonical representative of a path type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PathType(SignedTuple);

impl PathType {
    pub fn repr(&self) -> &SignedTuple {
        &self.0
    }
}

impl fmt::Display for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Canonical representative of a cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleType(SignedTuple);

impl CycleType {
    pub fn repr(&self) -> &SignedTuple {
        &self.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn path_canonical(alpha: &SignedTuple) -> Result<PathType> {
    if !alpha.is_standard_path() {
        return Err(Error::IllFormed(format!(
            "{alpha} is not a standard path tuple"
        )));
    }
    let [a, b] = path_orbit(alpha);
    Ok(PathType(a.min(b)))
}

pub fn cycle_canonical(beta: &SignedTuple) -> Result<CycleType> {
    if !beta.is_standard_cycle() {
        return Err(Error::IllFormed(format!(
            "{beta} is not a standard cycle tuple"
        )));
    }
    let best = cycle_orbit(beta).into_iter().min().expect("nonempty orbit");
    Ok(CycleType(best))
}

/// `a == -rev(a)` entrywise.
pub fn is_symmetric(alpha: &SignedTuple) -> bool {
    alpha
        .0
        .iter()
        .zip(alpha.0.iter().rev())
        .all(|(x, y)| *x == -*y)
}

/// Whether a cycle of this type is symmetric, i.e. some member of its
/// rotation/reflection orbit is a symmetric tuple.
pub fn is_cycle_symmetric(beta: &SignedTuple) -> bool {
    (0..beta.len()).any(|i| is_symmetric(&beta.rotated(i)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodInfo {
    /// least period
    pub r: usize,
    /// number of repetitions, `s / r`
    pub t: usize,
}

/// Least cyclic period of a tuple and its repetition count.
pub fn period_info(alpha: &SignedTuple) -> PeriodInfo {
    let s = alpha.len();
    if s == 0 {
        return PeriodInfo { r: 0, t: 0 };
    }
    let r = (1..=s)
        .filter(|r| s.is_multiple_of(*r))
        .find(|&r| (0..s).all(|i| alpha.0[i] == alpha.0[(i + r) % s]))
        .unwrap_or(s);
    PeriodInfo { r, t: s / r }
}

/// Class-size multiplier of a cycle type: `n / t` for a circuit, 2 for a
/// symmetric cycle, 1 otherwise. Always an exact integer.
pub fn delta(gamma: &SignedTuple) -> u64 {
    if gamma.len() == 1 {
        (gamma.arc_sum() / period_info(gamma).t) as u64
    } else if is_cycle_symmetric(gamma) {
        2
    } else {
        1
    }
}

/// `beta[i] - 1` when the first entry is positive, `beta[i] + 1` otherwise.
/// `i` is zero-based.
pub fn star_one(beta: &SignedTuple, i: usize) -> i32 {
    if beta.0[0] > 0 {
        beta.0[i] - 1
    } else {
        beta.0[i] + 1
    }
}

/// The two cycle types a Hamiltonian path of type `alpha` can close into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedCycles {
    /// Type when the closing arc orientation is the first case listed for
    /// the sign/parity of `alpha` (see [`generated_cycle_types`]).
    pub beta: CycleType,
    pub beta_prime: CycleType,
    /// Uncanonicalized tuples, same order.
    pub raw: [SignedTuple; 2],
    pub coincide: bool,
}

/// Cycle types generated by adding the arc between the ends of a path of
/// type `alpha`.
///
/// For even `s` and `a_1 > 0` the two closures are `(a_1+1, a_2, ..., a_s)`
/// (closing arc from the last vertex to the first) and
/// `(a_1, ..., a_{s-1}, a_s-1)`; for `a_1 < 0` they are `(a_1-1, ...)` and
/// `(..., a_s+1)`. For odd `s` and `a_1 > 0` they are `(-1, a_1, ..., a_s)`
/// and `(a_s+1+a_1, a_2, ..., a_{s-1})`; for `a_1 < 0`, `(1, a_1, ..., a_s)`
/// and `(a_s-1+a_1, a_2, ..., a_{s-1})`. A single-block path closes to the
/// circuit `(a_1 ± 1)` in the second case.
pub fn generated_cycle_types(alpha: &SignedTuple) -> Result<GeneratedCycles> {
    if !alpha.is_standard_path() {
        return Err(Error::IllFormed(format!(
            "{alpha} is not a standard path tuple"
        )));
    }
    let a = alpha.entries();
    let s = a.len();
    let first = a[0];
    let last = a[s - 1];
    let unit = first.signum();
    let (b, b_prime) = if s.is_multiple_of(2) {
        let mut b = a.to_vec();
        b[0] += unit;
        let mut bp = a.to_vec();
        bp[s - 1] -= unit;
        (b, bp)
    } else {
        let mut b = Vec::with_capacity(s + 1);
        b.push(-unit);
        b.extend_from_slice(a);
        let bp = if s == 1 {
            vec![first + unit]
        } else {
            let mut bp = Vec::with_capacity(s - 1);
            bp.push(last + unit + first);
            bp.extend_from_slice(&a[1..s - 1]);
            bp
        };
        (b, bp)
    };
    let raw = [
        normalize_cycle(&SignedTuple(b))?,
        normalize_cycle(&SignedTuple(b_prime))?,
    ];
    let beta = cycle_canonical(&raw[0])?;
    let beta_prime = cycle_canonical(&raw[1])?;
    let coincide = beta == beta_prime;
    Ok(GeneratedCycles {
        beta,
        beta_prime,
        raw,
        coincide,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TypeKind {
    Path,
    Cycle,
}

/// Every standard tuple (both sign phases) whose absolute entries sum to
/// `arc_sum`. Cycle tuples are restricted to one block or an even number of
/// blocks. Sorted in canonical order.
pub fn list_types(arc_sum: usize, kind: TypeKind) -> Vec<SignedTuple> {
    let mut out = Vec::new();
    if arc_sum == 0 {
        return out;
    }
    let mut parts = Vec::new();
    compositions(arc_sum, &mut parts, &mut |comp| {
        let s = comp.len();
        if kind == TypeKind::Cycle && s != 1 && s % 2 == 1 {
            return;
        }
        for lead in [1i32, -1] {
            let entries = comp
                .iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { lead * x } else { -lead * x })
                .collect();
            out.push(SignedTuple(entries));
        }
    });
    out.sort();
    out
}

fn compositions(rest: usize, parts: &mut Vec<i32>, emit: &mut dyn FnMut(&[i32])) {
    if rest == 0 {
        emit(parts);
        return;
    }
    for k in 1..=rest {
        parts.push(k as i32);
        compositions(rest - k, parts, emit);
        parts.pop();
    }
}

/// Canonical path types with the given arc sum.
pub fn canonical_path_types(arc_sum: usize) -> Vec<PathType> {
    let mut v: Vec<PathType> = list_types(arc_sum, TypeKind::Path)
        .iter()
        .map(|a| path_canonical(a).expect("listed tuples are standard"))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Canonical cycle types with the given arc sum.
pub fn canonical_cycle_types(arc_sum: usize) -> Vec<CycleType> {
    let mut v: Vec<CycleType> = list_types(arc_sum, TypeKind::Cycle)
        .iter()
        .map(|b| cycle_canonical(b).expect("listed tuples are standard"))
        .collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(v: &[i32]) -> SignedTuple {
        SignedTuple::new(v.to_vec())
    }

    #[test]
    fn normalize_path_examples() {
        assert_eq!(normalize_path(&t(&[1, 0, 2, -1])).unwrap(), t(&[3, -1]));
        assert_eq!(normalize_path(&t(&[0, -2, 1])).unwrap(), t(&[-2, 1]));
        assert_eq!(normalize_path(&t(&[2, -1])).unwrap(), t(&[2, -1]));
        assert_eq!(normalize_path(&t(&[2, -1, 0])).unwrap(), t(&[2, -1]));
        assert_eq!(normalize_path(&t(&[1, 0, 0, -1])).unwrap(), t(&[1, -1]));
    }

    #[test]
    fn normalize_path_errors() {
        assert_eq!(normalize_path(&t(&[0, 0])), Err(Error::EmptyType));
        assert!(matches!(
            normalize_path(&t(&[1, 0, -1])),
            Err(Error::IllFormed(_))
        ));
        assert!(matches!(
            normalize_path(&t(&[1, 2])),
            Err(Error::IllFormed(_))
        ));
    }

    #[test]
    fn normalize_cycle_examples() {
        assert!(matches!(
            normalize_cycle(&t(&[0, 2, -3])),
            Err(Error::IllFormed(_))
        ));
        assert_eq!(normalize_cycle(&t(&[3, -1, 0, -1])).unwrap(), t(&[3, -2]));
        assert_eq!(normalize_cycle(&t(&[4])).unwrap(), t(&[4]));
        assert_eq!(normalize_cycle(&t(&[0, -4])).unwrap(), t(&[-4]));
        assert_eq!(normalize_cycle(&t(&[0, 1, -2, 1])).unwrap(), t(&[2, -2]));
        assert_eq!(normalize_cycle(&t(&[1, -2, 1, 0])).unwrap(), t(&[2, -2]));
        assert_eq!(normalize_cycle(&t(&[0])), Err(Error::EmptyType));
        // odd number of blocks after merging
        assert!(matches!(
            normalize_cycle(&t(&[2, -1, 1])),
            Err(Error::IllFormed(_))
        ));
    }

    #[test]
    fn path_canonical_examples() {
        assert_eq!(path_canonical(&t(&[1, -2])).unwrap().repr(), &t(&[1, -2]));
        assert_eq!(path_canonical(&t(&[2, -1])).unwrap().repr(), &t(&[1, -2]));
        assert_eq!(path_canonical(&t(&[1, -1])).unwrap().repr(), &t(&[1, -1]));
        assert_eq!(path_canonical(&t(&[-2])).unwrap().repr(), &t(&[2]));
    }

    #[test]
    fn cycle_canonical_examples() {
        assert_eq!(
            cycle_canonical(&t(&[-1, 1, -1, 1])).unwrap().repr(),
            &t(&[1, -1, 1, -1])
        );
        assert_eq!(cycle_canonical(&t(&[-4])).unwrap().repr(), &t(&[4]));
        assert_eq!(cycle_canonical(&t(&[2, -1])).unwrap().repr(), &t(&[1, -2]));
        // the orbit of (3,-1) is {(3,-1),(-1,3),(-3,1),(1,-3)}
        let orbit: std::collections::BTreeSet<_> = cycle_orbit(&t(&[3, -1])).into_iter().collect();
        let expected: std::collections::BTreeSet<_> =
            [t(&[3, -1]), t(&[-1, 3]), t(&[-3, 1]), t(&[1, -3])]
                .into_iter()
                .collect();
        assert_eq!(orbit, expected);
        assert_eq!(cycle_canonical(&t(&[3, -1])).unwrap().repr(), &t(&[1, -3]));
        assert_eq!(cycle_canonical(&t(&[1, -3])).unwrap().repr(), &t(&[1, -3]));
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&t(&[1, -1])));
        assert!(is_symmetric(&t(&[2, -1, 1, -2])));
        assert!(!is_symmetric(&t(&[1, -2])));
        assert!(is_cycle_symmetric(&t(&[-1, 1, -2, 2])));
        assert!(!is_symmetric(&t(&[-1, 1, -2, 2])));
    }

    #[test]
    fn period_examples() {
        assert_eq!(period_info(&t(&[1, -1, 1, -1])), PeriodInfo { r: 2, t: 2 });
        assert_eq!(
            period_info(&t(&[2, -1, 2, -1, 2, -1])),
            PeriodInfo { r: 2, t: 3 }
        );
        assert_eq!(period_info(&t(&[1, -2, 1, -1])), PeriodInfo { r: 4, t: 1 });
        assert_eq!(period_info(&t(&[5])), PeriodInfo { r: 1, t: 1 });
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&t(&[2, -2])), 2);
        assert_eq!(delta(&t(&[1, -3])), 1);
        assert_eq!(delta(&t(&[4])), 4);
    }

    #[test]
    fn star_one_examples() {
        assert_eq!(star_one(&t(&[2, -2]), 0), 1);
        assert_eq!(star_one(&t(&[2, -2]), 1), -3);
        assert_eq!(star_one(&t(&[-1, 2]), 0), 0);
    }

    #[test]
    fn generated_cycle_examples() {
        let g = generated_cycle_types(&t(&[1, -1])).unwrap();
        assert_eq!(g.beta.repr(), &t(&[1, -2]));
        assert_eq!(g.beta_prime.repr(), &t(&[1, -2]));
        assert!(g.coincide);

        let g = generated_cycle_types(&t(&[1, -1, 1])).unwrap();
        assert_eq!(g.beta.repr(), &t(&[1, -1, 1, -1]));
        assert_eq!(g.beta_prime.repr(), &t(&[1, -3]));
        assert_eq!(g.raw[1], t(&[3, -1]));
        assert!(!g.coincide);

        let g = generated_cycle_types(&t(&[3])).unwrap();
        assert_eq!(g.raw[0], t(&[-1, 3]));
        assert_eq!(g.beta_prime.repr(), &t(&[4]));
    }

    #[test]
    fn list_types_examples() {
        let set = |v: Vec<SignedTuple>| v.into_iter().collect::<std::collections::BTreeSet<_>>();
        assert_eq!(
            set(list_types(2, TypeKind::Path)),
            set(vec![t(&[2]), t(&[-2]), t(&[1, -1]), t(&[-1, 1])])
        );
        assert_eq!(
            set(list_types(3, TypeKind::Cycle)),
            set(vec![
                t(&[3]),
                t(&[-3]),
                t(&[1, -2]),
                t(&[2, -1]),
                t(&[-1, 2]),
                t(&[-2, 1])
            ])
        );
        assert_eq!(
            set(list_types(1, TypeKind::Path)),
            set(vec![t(&[1]), t(&[-1])])
        );
        for k in 1..10 {
            assert_eq!(list_types(k, TypeKind::Path).len(), 1 << k);
        }
    }

    #[test]
    fn tuple_text_round_trip() {
        let a: SignedTuple = " ( 2, -1 ,1,-2 ) ".parse().unwrap();
        assert_eq!(a, t(&[2, -1, 1, -2]));
        assert_eq!(a.to_string(), "(2,-1,1,-2)");
        assert!(matches!(
            "2,-1".parse::<SignedTuple>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "(2,x)".parse::<SignedTuple>(),
            Err(Error::Parse { offset: 3, .. })
        ));
    }

    /// Closes a path word directly: `forward` means the closing arc is
    /// traversed from the last vertex to the first along its direction.
    fn close_by_word(alpha: &SignedTuple, forward: bool) -> CycleType {
        let mut w = alpha.expand();
        w.push(forward);
        cycle_canonical(&SignedTuple::from_cyclic_word(&w)).unwrap()
    }

    fn standard_path() -> impl Strategy<Value = SignedTuple> {
        (prop::collection::vec(1i32..5, 1..7), any::<bool>()).prop_map(|(mags, lead)| {
            let sign = if lead { 1 } else { -1 };
            SignedTuple::new(
                mags.iter()
                    .enumerate()
                    .map(|(i, &m)| if i % 2 == 0 { sign * m } else { -sign * m })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn generated_types_match_word_closure(alpha in standard_path()) {
            let g = generated_cycle_types(&alpha).unwrap();
            let mut by_word = [close_by_word(&alpha, true), close_by_word(&alpha, false)];
            by_word.sort();
            let mut by_formula = [g.beta.clone(), g.beta_prime.clone()];
            by_formula.sort();
            prop_assert_eq!(by_word, by_formula);
        }

        #[test]
        fn canonical_invariant_under_reflection(alpha in standard_path()) {
            prop_assert_eq!(
                path_canonical(&alpha).unwrap(),
                path_canonical(&alpha.reflected_negation()).unwrap()
            );
        }

        #[test]
        fn period_invariant_under_orbit(alpha in standard_path()) {
            let p = period_info(&alpha);
            prop_assert_eq!(p, period_info(&alpha.reversed()));
            prop_assert_eq!(p.t, period_info(&alpha.negated()).t);
            for i in 0..alpha.len() {
                prop_assert_eq!(p.t, period_info(&alpha.rotated(i)).t);
                prop_assert_eq!(p.t, period_info(&alpha.reflected_negation().rotated(i)).t);
            }
            prop_assert_eq!(p.r * p.t, alpha.len());
        }

        #[test]
        fn normalize_preserves_arc_sum(raw in prop::collection::vec(-4i32..5, 1..8)) {
            if let Ok(p) = normalize_path(&SignedTuple::new(raw.clone())) {
                prop_assert_eq!(p.arc_sum(), SignedTuple::new(raw.clone()).arc_sum());
                prop_assert!(p.is_standard_path());
            }
            if let Ok(c) = normalize_cycle(&SignedTuple::new(raw.clone())) {
                prop_assert_eq!(c.arc_sum(), SignedTuple::new(raw).arc_sum());
                prop_assert!(c.is_standard_cycle());
            }
        }

        #[test]
        fn word_compression_round_trips(alpha in standard_path()) {
            prop_assert_eq!(SignedTuple::from_word(&alpha.expand()), alpha);
        }
    }
}
