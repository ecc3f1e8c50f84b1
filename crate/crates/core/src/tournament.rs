//! Tournaments on up to 16 vertices, stored as out-neighbour bitmasks.
//!
//! Text format, one tournament per line: `n:bits`, where `bits` has length
//! `n(n-1)/2` and the character for the pair `(i, j)`, `i < j`, sits at
//! position `i(2n-i-1)/2 + (j-i-1)`; `1` means the arc `i -> j`, `0` the arc
//! `j -> i`. In files, lines starting with `#` are comments.
//!
//! "Complement" here is full arc reversal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 16;
/// Largest order enumerated exhaustively without an explicit override.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;
/// Largest order enumerated exhaustively with the override.
pub const MAX_EXHAUSTIVE_ORDER_OVERRIDE: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u32>,
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in the text bit string.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Tournament {
    /// Builds a tournament from pair bits in text-format order.
    pub fn from_pair_bits(n: usize, bits: impl Fn(usize) -> bool) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        let mut out = vec![0u32; n];
        let mut p = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits(p) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
                p += 1;
            }
        }
        Tournament { n, out }
    }

    /// Arc `i -> j` iff `i < j`.
    pub fn transitive(n: usize) -> Self {
        Self::from_pair_bits(n, |_| true)
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0` with every chord oriented
    /// from the lower index to the higher one.
    pub fn circuit_with_forward_chords(n: usize) -> Self {
        let mut t = Self::transitive(n);
        if n >= 3 {
            t.set_arc(n - 1, 0);
        }
        t
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_mask(&self, u: usize) -> u32 {
        self.out[u]
    }

    pub fn in_mask(&self, u: usize) -> u32 {
        self.full_mask() & !self.out[u] & !(1 << u)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    pub fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Orients the pair `{u, v}` as `u -> v`.
    pub fn set_arc(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.out[u] |= 1 << v;
        self.out[v] &= !(1 << u);
    }

    /// Reverses every arc.
    pub fn complement(&self) -> Self {
        let full = self.full_mask();
        let out = (0..self.n)
            .map(|u| full & !self.out[u] & !(1 << u))
            .collect();
        Tournament { n: self.n, out }
    }

    /// Subtournament on `vertices`, relabelled in increasing vertex order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::BadSubset {
                vertex: bad,
                order: self.n,
            });
        }
        let m = keep.len();
        let mut out = vec![0u32; m];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if self.has_arc(u, v) {
                    out[a] |= 1 << b;
                }
            }
        }
        Ok(Tournament { n: m, out })
    }

    pub fn induced_mask(&self, mask: u32) -> Self {
        let vertices: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced(&vertices).expect("mask within order")
    }

    /// Pair bits in text-format order.
    pub fn pair_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(pair_count(self.n));
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits.push(self.has_arc(i, j));
            }
        }
        bits
    }

    /// Text encoding `n:bits`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for b in self.pair_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({self})")
    }
}

impl FromStr for Tournament {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |offset: usize, message: String| Error::Parse { offset, message };
        let colon = text
            .find(':')
            .ok_or_else(|| parse_err(0, "expected `n:bits`".into()))?;
        let head = &text[..colon];
        if head.is_empty() || !head.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(0, format!("bad order `{head}`")));
        }
        let n: usize = head
            .parse()
            .map_err(|_| parse_err(0, format!("bad order `{head}`")))?;
        if n > MAX_ORDER {
            return Err(parse_err(0, format!("order {n} exceeds {MAX_ORDER}")));
        }
        let body = &text[colon + 1..];
        for (k, b) in body.bytes().enumerate() {
            if b != b'0' && b != b'1' {
                return Err(parse_err(
                    colon + 1 + k,
                    format!("unexpected byte {:?}", b as char),
                ));
            }
        }
        let expected = pair_count(n);
        if body.len() != expected {
            return Err(parse_err(
                colon + 1 + body.len().min(expected),
                format!(
                    "expected {expected} bits for order {n}, found {}",
                    body.len()
                ),
            ));
        }
        let bytes = body.as_bytes();
        Ok(Tournament::from_pair_bits(n, |p| bytes[p] == b'1'))
    }
}

/// Parses a file of tournaments, skipping blank and `#` comment lines.
/// Parse offsets are relative to the start of the whole input.
pub fn parse_many(text: &str) -> Result<Vec<Tournament>> {
    let mut out = Vec::new();
    let mut line_start = 0;
    for line in text.split('\n') {
        let trimmed = line.strip_suffix('\r').unwrap_or(line);
        if !trimmed.trim().is_empty() && !trimmed.starts_with('#') {
            let t = trimmed.parse().map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset: line_start + offset,
                    message,
                },
                other => other,
            })?;
            out.push(t);
        }
        line_start += line.len() + 1;
    }
    Ok(out)
}

/// Every labelled tournament of order `n`, in increasing order of the pair
/// bit pattern read as an integer with text position 0 as the least
/// significant bit.
pub fn all_tournaments(n: usize, allow_large: bool) -> Result<impl Iterator<Item = Tournament>> {
    let cap = if allow_large {
        MAX_EXHAUSTIVE_ORDER_OVERRIDE
    } else {
        MAX_EXHAUSTIVE_ORDER
    };
    if n > cap {
        return Err(Error::ScopeTooLarge(format!(
            "exhaustive generation limited to order {cap}, asked for {n}"
        )));
    }
    let pairs = pair_count(n);
    Ok((0u64..1 << pairs)
        .map(move |pattern| Tournament::from_pair_bits(n, |p| pattern >> p & 1 == 1)))
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 generator: `state += 0x9E3779B97F4A7C15`, then the
/// standard xor-shift-multiply finaliser.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0) by multiply-shift.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// Random tournament: one splitmix64 word per pair, in text-format order;
/// the top bit of the word is the pair's bit.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    random_tournament_from(&mut SplitMix64::new(seed), n)
}

pub fn random_tournament_from(rng: &mut SplitMix64, n: usize) -> Tournament {
    let bits: Vec<bool> = (0..pair_count(n))
        .map(|_| rng.next_u64() >> 63 == 1)
        .collect();
    Tournament::from_pair_bits(n, |p| bits[p])
}

/// Seed of sample `i` in a random scope: the `i`-th output (from 0) of the
/// splitmix64 stream seeded with `seed`.
pub fn sample_seed(seed: u64, i: u64) -> u64 {
    SplitMix64::new(seed.wrapping_add(i.wrapping_mul(GOLDEN_GAMMA))).next_u64()
}

/// Tournament of sample `i` in a random scope.
pub fn sample_tournament(n: usize, seed: u64, i: u64) -> Tournament {
    random_tournament(n, sample_seed(seed, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn c3() -> Tournament {
        let mut t = Tournament::transitive(3);
        t.set_arc(2, 0);
        t
    }

    #[test]
    fn complement_examples() {
        let r = c3().complement();
        assert!(r.has_arc(0, 2) && r.has_arc(2, 1) && r.has_arc(1, 0));
        let tt = Tournament::transitive(3).complement();
        assert!(tt.has_arc(1, 0) && tt.has_arc(2, 0) && tt.has_arc(2, 1));
        let one = Tournament::transitive(1);
        assert_eq!(one.complement(), one);
    }

    #[test]
    fn induced_examples() {
        let tt = Tournament::transitive(3);
        let sub = tt.induced(&[0, 2]).unwrap();
        assert_eq!(sub.order(), 2);
        assert!(sub.has_arc(0, 1));
        assert_eq!(tt.induced(&[0, 1, 2]).unwrap(), tt);
        let single = tt.induced(&[1]).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(single.out_mask(0), 0);
        assert_eq!(
            tt.induced(&[0, 5]),
            Err(Error::BadSubset {
                vertex: 5,
                order: 3
            })
        );
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_tournaments(3, false).unwrap().count(), 8);
        assert_eq!(all_tournaments(4, false).unwrap().count(), 64);
        let all5: Vec<_> = all_tournaments(5, false).unwrap().collect();
        assert_eq!(all5.len(), 1024);
        let distinct: HashSet<_> = all5.iter().map(|t| t.to_text()).collect();
        assert_eq!(distinct.len(), 1024);
        assert!(matches!(
            all_tournaments(7, false),
            Err(Error::ScopeTooLarge(_))
        ));
        assert!(all_tournaments(7, true).is_ok());
        assert!(matches!(
            all_tournaments(8, true),
            Err(Error::ScopeTooLarge(_))
        ));
    }

    #[test]
    fn exhaustive_order_is_increasing_pattern() {
        let texts: Vec<String> = all_tournaments(3, false)
            .unwrap()
            .map(|t| t.to_text())
            .collect();
        assert_eq!(texts[0], "3:000");
        assert_eq!(texts[1], "3:100");
        assert_eq!(texts[7], "3:111");
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_tournament(5, 42), random_tournament(5, 42));
        assert_eq!(random_tournament(0, 7).order(), 0);
        // the seeds of a few neighbouring draws are not all identical
        let distinct: HashSet<_> = (0..8).map(|s| random_tournament(6, s).to_text()).collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn sample_seeds_follow_one_stream() {
        let mut rng = SplitMix64::new(99);
        for i in 0..5 {
            assert_eq!(sample_seed(99, i), rng.next_u64());
        }
        assert_eq!(
            sample_tournament(6, 99, 2),
            random_tournament(6, sample_seed(99, 2))
        );
    }

    #[test]
    fn splitmix_reference_values() {
        // reference outputs of splitmix64 seeded with 0
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn transitive_examples() {
        let t3 = Tournament::transitive(3);
        assert!(t3.has_arc(0, 1) && t3.has_arc(0, 2) && t3.has_arc(1, 2));
        assert!(Tournament::transitive(2).has_arc(0, 1));
        let t4 = Tournament::transitive(4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t4.has_arc(i, j), i < j);
            }
        }
    }

    #[test]
    fn text_format_examples() {
        let t: Tournament = "3:110".parse().unwrap();
        assert!(t.has_arc(0, 1) && t.has_arc(0, 2) && t.has_arc(2, 1));
        assert_eq!(Tournament::transitive(3).to_text(), "3:111");
        assert!(matches!(
            "3:11".parse::<Tournament>(),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            "3:1x1".parse::<Tournament>(),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            "17:".parse::<Tournament>(),
            Err(Error::Parse { .. })
        ));
        assert_eq!("0:".parse::<Tournament>().unwrap().order(), 0);
        assert_eq!(pair_index(4, 1, 3), 4);
    }

    #[test]
    fn parse_many_skips_comments() {
        let ts = parse_many("# header\n3:111\n\n4:000000\n").unwrap();
        assert_eq!(ts.len(), 2);
        let err = parse_many("3:111\n3:1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 9, .. }), "{err:?}");
    }

    proptest! {
        #[test]
        fn text_round_trip(n in 0usize..=16, seed in any::<u64>()) {
            let t = random_tournament(n, seed);
            let text = t.to_text();
            let back: Tournament = text.parse().unwrap();
            prop_assert_eq!(&back, &t);
            prop_assert_eq!(back.to_text(), text);
        }

        #[test]
        fn complement_is_fixed_point_free_involution(n in 2usize..=10, seed in any::<u64>()) {
            let t = random_tournament(n, seed);
            let c = t.complement();
            prop_assert_eq!(c.complement(), t.clone());
            for u in 0..n {
                prop_assert!(!t.has_arc(u, u));
                for v in 0..n {
                    if u != v {
                        prop_assert!(t.has_arc(u, v) ^ t.has_arc(v, u));
                        prop_assert_eq!(c.has_arc(u, v), t.has_arc(v, u));
                    }
                }
            }
        }
    }
}
