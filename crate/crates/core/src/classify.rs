//! Verification of flip sequences and membership in the fortuitous classes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canonical::{
    checkpoint_of, cross_check, phase_count, split_phases, Checkpoint, CheckpointKind,
};
use crate::error::Error;
use crate::perm::FlipSequence;
use crate::potential::lower_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Class {
    Sorting,
    OddFortuitous,
    GeneralizedOddFortuitous,
    EvenFortuitous,
    Palindromic,
    Triple,
    Double,
}

impl Class {
    pub const ALL: [Class; 7] = [
        Class::Sorting,
        Class::OddFortuitous,
        Class::GeneralizedOddFortuitous,
        Class::EvenFortuitous,
        Class::Palindromic,
        Class::Triple,
        Class::Double,
    ];

    /// Keyword used in sequence files.
    pub fn keyword(self) -> &'static str {
        match self {
            Class::Sorting => "sorting",
            Class::OddFortuitous => "odd",
            Class::GeneralizedOddFortuitous => "generalized-odd",
            Class::EvenFortuitous => "even",
            Class::Palindromic => "palindromic",
            Class::Triple => "triple",
            Class::Double => "double",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Class::ALL
            .into_iter()
            .find(|c| c.keyword() == s)
            .ok_or_else(|| Error::Parse(format!("unknown class '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub sequence: FlipSequence,
    pub sorts: bool,
    pub length: usize,
    pub bound: Option<usize>,
    pub classes: BTreeSet<Class>,
    /// Offset of the rotation read as `n s1 n s2 [n s3]`, when one exists.
    pub rotation: Option<usize>,
    /// Inner segments between the flips `n`, present when the sequence
    /// starts with flip `n`.
    pub phases: Vec<Vec<usize>>,
    pub checkpoint: Option<Checkpoint>,
    /// The flips on a reflection axis of the cyclic sequence, as
    /// `[through_n, opposite]` when some axis passes through a flip `n`.
    pub central_flips: Option<[usize; 2]>,
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn has(&self, class: Class) -> bool {
        self.classes.contains(&class)
    }

    pub fn optimal(&self) -> bool {
        self.sorts && self.bound == Some(self.length)
    }

    /// The flip opposite the reflection axis through `n`, if any.
    pub fn central_flip(&self) -> Option<usize> {
        self.central_flips.map(|c| c[1])
    }
}

pub fn verify_sorts(seq: &FlipSequence) -> bool {
    seq.sorts()
}

/// Reflection axes of the cyclic sequence that pass through flips: pairs
/// of positions `(r, r + len/2)` about which the cyclic word is symmetric.
pub fn reflection_axes(flips: &[usize]) -> Vec<(usize, usize)> {
    let len = flips.len();
    if len < 4 || len % 2 == 1 {
        return vec![];
    }
    let half = len / 2;
    (0..half)
        .filter(|&r| (1..half).all(|j| flips[(r + j) % len] == flips[(r + len - j) % len]))
        .map(|r| (r, r + half))
        .collect()
}

/// The two flips on a reflection axis, preferring an axis through a flip `n`
/// (listed first). `None` when the cyclic sequence has no such symmetry.
pub fn palindromic_centers(seq: &FlipSequence) -> Option<[usize; 2]> {
    let f = seq.flips();
    let n = seq.n();
    let axes = reflection_axes(f);
    for &(a, b) in &axes {
        if f[a] == n {
            return Some([f[a], f[b]]);
        }
        if f[b] == n {
            return Some([f[b], f[a]]);
        }
    }
    axes.first().map(|&(a, b)| [f[a], f[b]])
}

/// For a sorting palindromic sequence, the flip opposite an `n` on a
/// reflection axis; it can only be `n - 1` for odd `n` and `n` for even `n`.
pub fn central_flip_check(seq: &FlipSequence) -> Option<usize> {
    let c = palindromic_centers(seq)?;
    if c[0] != seq.n() {
        return None;
    }
    Some(c[1])
}

/// Expected flip opposite `n` on a reflection axis of a sorting sequence.
pub fn expected_central_flip(n: usize) -> usize {
    if n % 2 == 1 {
        n - 1
    } else {
        n
    }
}

fn repeats(flips: &[usize], times: usize) -> bool {
    let len = flips.len();
    if len == 0 || len % times != 0 {
        return false;
    }
    let p = len / times;
    (p..len).all(|i| flips[i] == flips[i - p])
}

/// Phases and checkpoint of `seq` read as `n s1 n s2 [n s3]`.
fn fortuitous_reading(seq: &FlipSequence) -> Result<(Vec<Vec<usize>>, Checkpoint), String> {
    let n = seq.n();
    let phases = split_phases(seq).ok_or_else(|| format!("first flip is not {n}"))?;
    if phases.len() != phase_count(n) {
        return Err(format!(
            "{} flips {n}, a fortuitous sequence has {}",
            phases.len(),
            phase_count(n)
        ));
    }
    let cp = checkpoint_of(seq).map_err(|e| e.to_string())?;
    Ok((phases, cp))
}

/// Verify `seq` and determine every class it belongs to.
///
/// The fortuitous classes are tested on the sequence as written and, if
/// that reading fails, on its rotations that start at a later flip `n`;
/// `rotation` records the offset of the reading that succeeded.
pub fn classify(seq: &FlipSequence) -> Certificate {
    let n = seq.n();
    let flips = seq.flips();
    let sorts = seq.sorts();
    let bound = lower_bound(n).ok();
    let mut failures = Vec::new();
    let mut classes = BTreeSet::new();

    if !sorts {
        failures.push(format!("does not sort -I_{n}"));
    } else {
        classes.insert(Class::Sorting);
    }

    let optimal = sorts && bound == Some(flips.len());
    if sorts && !optimal {
        failures.push(format!(
            "length {} exceeds lower bound {}",
            flips.len(),
            bound.map_or("-".into(), |b| b.to_string())
        ));
    }

    let mut phases = split_phases(seq).unwrap_or_default();
    let mut checkpoint = None;
    let mut rotation = None;
    if optimal {
        let first = fortuitous_reading(seq);
        let mut found = None;
        match first {
            Ok(r) => found = Some((0, seq.clone(), r)),
            Err(first_err) => {
                for k in (1..flips.len()).filter(|&k| flips[k] == n) {
                    let rotated = seq.rotated(k).expect("k < len");
                    if let Ok(r) = fortuitous_reading(&rotated) {
                        found = Some((k, rotated, r));
                        break;
                    }
                }
                if found.is_none() {
                    failures.push(first_err);
                }
            }
        }
        if let Some((k, reading, (ph, cp))) = found {
            rotation = Some(k);
            if n % 2 == 1 {
                classes.insert(Class::GeneralizedOddFortuitous);
                let m = (n - 1) / 2;
                let strict = ph
                    .iter()
                    .all(|s| s.len() == m && s.iter().all(|k| k % 2 == 0));
                if strict {
                    classes.insert(Class::OddFortuitous);
                    if cp.kind != CheckpointKind::TwoClanStack {
                        failures.push(format!("checkpoint {} is not a stack of 2-clans", cp.stack));
                    }
                }
                if repeats(flips, 3) {
                    classes.insert(Class::Triple);
                }
            } else {
                classes.insert(Class::EvenFortuitous);
                if repeats(flips, 2) {
                    classes.insert(Class::Double);
                }
            }
            failures.extend(cross_check(&cp, &reading));
            phases = ph;
            checkpoint = Some(cp);
        }
    }

    let central_flips = if sorts {
        palindromic_centers(seq)
    } else {
        None
    };
    if let Some(c) = central_flips {
        classes.insert(Class::Palindromic);
        if c[0] == n && c[1] != expected_central_flip(n) {
            failures.push(format!("central flip {} opposite {n}", c[1]));
        }
    }

    Certificate {
        n,
        sequence: seq.clone(),
        sorts,
        length: flips.len(),
        bound,
        classes,
        rotation,
        phases,
        checkpoint,
        central_flips,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, v: &[usize]) -> FlipSequence {
        FlipSequence::new(n, v.to_vec()).unwrap()
    }

    fn set(c: &[Class]) -> BTreeSet<Class> {
        c.iter().copied().collect()
    }

    #[test]
    fn smallest_sequences() {
        let c = classify(&seq(3, &[3, 2, 3, 2, 3, 2]));
        assert_eq!(
            c.classes,
            set(&[
                Class::Sorting,
                Class::OddFortuitous,
                Class::GeneralizedOddFortuitous,
                Class::Triple,
                Class::Palindromic
            ])
        );
        assert!(c.failures.is_empty(), "{:?}", c.failures);
        let c = classify(&seq(2, &[2, 1, 2, 1]));
        assert!(c.has(Class::EvenFortuitous) && c.has(Class::Double));
        assert_eq!(c.central_flips, Some([2, 2]));
    }

    #[test]
    fn fifteen() {
        let c = classify(&seq(15, &[15, 10, 4, 6, 14, 6, 4, 10].repeat(3)));
        assert_eq!(
            c.classes,
            set(&[
                Class::Sorting,
                Class::OddFortuitous,
                Class::GeneralizedOddFortuitous,
                Class::Triple,
                Class::Palindromic
            ])
        );
        assert_eq!(c.central_flip(), Some(14));
        assert!(c.failures.is_empty(), "{:?}", c.failures);
    }

    #[test]
    fn negatives() {
        let c = classify(&FlipSequence::empty(4));
        assert!(!c.sorts && c.classes.is_empty());
        let c = classify(&seq(3, &[2, 3, 2, 3, 2, 3]));
        assert_eq!(c.rotation, Some(1));
        assert!(c.has(Class::OddFortuitous) && c.failures.is_empty());
        let c = classify(&seq(3, &[1, 1, 3, 2, 3, 2, 3, 2]));
        assert!(c.sorts);
        assert_eq!(c.rotation, None);
        assert!(c.failures.iter().any(|f| f.contains("exceeds")));
        assert_eq!(c.classes, set(&[Class::Sorting]));
    }

    #[test]
    fn reflection_axes_small() {
        assert_eq!(
            reflection_axes(&[3, 2, 3, 2, 3, 2]),
            vec![(0, 3), (1, 4), (2, 5)]
        );
        assert_eq!(reflection_axes(&[2, 1, 2, 1]), vec![(0, 2), (1, 3)]);
        assert_eq!(reflection_axes(&[2, 1, 3, 1, 4, 5]), vec![]);
        assert_eq!(reflection_axes(&[5, 1, 4, 1]), vec![(0, 2)]);
    }

    #[test]
    fn class_keywords_round_trip() {
        for c in Class::ALL {
            assert_eq!(c.keyword().parse::<Class>().unwrap(), c);
        }
        assert!("bogus".parse::<Class>().is_err());
    }
}
