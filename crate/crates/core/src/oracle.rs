//! Exact flip distances for small stacks by breadth-first search over all
//! `2^n · n!` signed permutations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};
use crate::potential::{lower_bound, total};

pub const MAX_N: usize = 8;

const UNSEEN: u8 = u8::MAX;

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Dense rank: the sign bits (bit `i` set when position `i + 1` is negative)
/// times `n!`, plus the Lehmer rank of the magnitudes.
pub fn encode(p: &SignedPerm) -> usize {
    let s = p.as_slice();
    let n = s.len();
    let mut signs = 0usize;
    let mut lehmer = 0usize;
    for i in 0..n {
        if s[i] < 0 {
            signs |= 1 << i;
        }
        let a = s[i].unsigned_abs();
        let smaller = s[i + 1..].iter().filter(|v| v.unsigned_abs() < a).count();
        lehmer = lehmer * (n - i) + smaller;
    }
    signs * factorial(n) + lehmer
}

pub fn decode(rank: usize, n: usize) -> SignedPerm {
    let f = factorial(n);
    let (signs, mut lehmer) = (rank / f, rank % f);
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = lehmer % base;
        lehmer /= base;
    }
    let mut pool: Vec<i32> = (1..=n as i32).collect();
    let image = digits
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let v = pool.remove(d);
            if signs >> i & 1 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    SignedPerm::from_image_unchecked(image)
}

#[derive(Debug, Clone)]
pub struct GodTable {
    n: usize,
    dist: Vec<u8>,
}

impl GodTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn distance(&self, s: &SignedPerm) -> Result<u8> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: s.n(),
            });
        }
        Ok(self.dist[encode(s)])
    }

    pub fn distance_by_rank(&self, rank: usize) -> u8 {
        self.dist[rank]
    }

    /// Largest distance over all states.
    pub fn diameter(&self) -> u8 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// A shortest sequence sorting `s`; at each step the smallest flip that
    /// gets one step closer is taken.
    pub fn minimal_sequence(&self, s: &SignedPerm) -> Result<FlipSequence> {
        let mut d = self.distance(s)?;
        let mut cur = s.clone();
        let mut flips = Vec::with_capacity(d as usize);
        while d > 0 {
            let k = (1..=self.n)
                .find(|&k| self.dist[encode(&cur.flip(k).expect("k in range"))] + 1 == d)
                .expect("a BFS layer always has a predecessor");
            cur.flip_in_place(k);
            flips.push(k);
            d -= 1;
        }
        FlipSequence::new(self.n, flips)
    }
}

/// Distances from `I_n` to every state. Flips are involutions, so this is
/// also the number of flips needed to sort each state.
pub fn god_table(n: usize) -> Result<GodTable> {
    if n == 0 || n > MAX_N {
        return Err(Error::OracleRange { n, max: MAX_N });
    }
    let size = (1usize << n) * factorial(n);
    let mut dist = vec![UNSEEN; size];
    let start = encode(&SignedPerm::identity(n));
    dist[start] = 0;
    let mut frontier = vec![start];
    let mut level = 0u8;
    while !frontier.is_empty() {
        let mut next: Vec<usize> = frontier
            .par_chunks(4096)
            .flat_map_iter(|chunk| {
                let mut out = Vec::with_capacity(chunk.len() * n);
                for &r in chunk {
                    let s = decode(r, n);
                    for k in 1..=n {
                        let mut t = s.clone();
                        t.flip_in_place(k);
                        let q = encode(&t);
                        if dist[q] == UNSEEN {
                            out.push(q);
                        }
                    }
                }
                out
            })
            .collect();
        level += 1;
        next.retain(|&q| {
            if dist[q] == UNSEEN {
                dist[q] = level;
                true
            } else {
                false
            }
        });
        frontier = next;
    }
    Ok(GodTable { n, dist })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: usize,
    pub g_minus_identity: u8,
    pub g_minus_reversal: u8,
    pub lower_bound: usize,
    /// `g(-I_n) = 1 + g(-f_n)`.
    pub one_more_than_reversal: bool,
    /// `g(-I_n) >= floor((3n+3)/2)`.
    pub bound_respected: bool,
    /// A shortest sorting sequence for `-I_n`, checked to sort and to have
    /// length `g(-I_n)`.
    pub minimal_sequence: FlipSequence,
    pub minimal_sequence_ok: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.one_more_than_reversal && self.bound_respected && self.minimal_sequence_ok
    }
}

pub fn check_identities(table: &GodTable) -> Result<IdentityReport> {
    let n = table.n();
    let mid = SignedPerm::minus_identity(n);
    let mfn = SignedPerm::reversal(n, n)?.negate();
    let g = table.distance(&mid)?;
    let g_fn = table.distance(&mfn)?;
    let bound = lower_bound(n)?;
    let minimal_sequence = table.minimal_sequence(&mid)?;
    Ok(IdentityReport {
        n,
        g_minus_identity: g,
        g_minus_reversal: g_fn,
        lower_bound: bound,
        one_more_than_reversal: g == g_fn + 1,
        bound_respected: g as usize >= bound,
        minimal_sequence_ok: minimal_sequence.sorts() && minimal_sequence.len() == g as usize,
        minimal_sequence,
    })
}

/// States `S` with `4 g(S) < p(I_n) - p(S)`, which would refute the
/// potential bound. Returns the first few counterexamples found.
pub fn potential_bound_violations(table: &GodTable, with_plate: bool) -> Vec<SignedPerm> {
    let n = table.n();
    let top = total(&SignedPerm::identity(n), with_plate);
    let bad: Vec<usize> = (0..table.len())
        .into_par_iter()
        .filter(|&r| {
            let need = top - total(&decode(r, n), with_plate);
            (4 * table.distance_by_rank(r) as i32) < need
        })
        .collect();
    bad.into_iter().take(8).map(|r| decode(r, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranking_is_a_bijection() {
        for n in 1..=4 {
            let size = (1 << n) * factorial(n);
            let mut seen = vec![false; size];
            for r in 0..size {
                let p = decode(r, n);
                assert_eq!(encode(&p), r);
                assert!(!seen[r]);
                seen[r] = true;
            }
        }
        assert_eq!(encode(&SignedPerm::identity(5)), 0);
    }

    #[test]
    fn small_distances() {
        let t = god_table(2).unwrap();
        assert_eq!(t.distance(&SignedPerm::minus_identity(2)).unwrap(), 4);
        assert_eq!(t.distance(&SignedPerm::identity(2)).unwrap(), 0);
        let t = god_table(3).unwrap();
        assert_eq!(t.distance(&SignedPerm::minus_identity(3)).unwrap(), 6);
        let r = check_identities(&t).unwrap();
        assert_eq!(r.g_minus_reversal, 5);
        assert!(r.holds());
        assert!(t.dist.iter().all(|&d| d != UNSEEN));
        assert!(god_table(9).is_err());
        assert!(god_table(0).is_err());
    }

    #[test]
    fn single_pancake() {
        let t = god_table(1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.distance(&SignedPerm::minus_identity(1)).unwrap(), 1);
    }
}
