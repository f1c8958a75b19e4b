//! Closed-form checkpoints giving an optimal sequence for every
//! `n` in `{15, 19, 23}` and every `n >= 25`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{extract, Checkpoint};
use crate::classify::{classify, Certificate};
use crate::compose::{compose_even, compose_odd};
use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternFamily {
    /// `n ≡ 3 (mod 4)`, `n >= 15`.
    Odd3Mod4,
    /// `n ≡ 1 (mod 4)`, `n >= 25`.
    Odd1Mod4,
    /// `n` even, `n >= 26`.
    Even,
}

impl PatternFamily {
    pub fn for_n(n: usize) -> Result<Self> {
        match n {
            _ if n % 2 == 0 && n >= 26 => Ok(PatternFamily::Even),
            _ if n % 4 == 3 && n >= 15 => Ok(PatternFamily::Odd3Mod4),
            _ if n % 4 == 1 && n >= 25 => Ok(PatternFamily::Odd1Mod4),
            _ => Err(Error::UnsupportedN(n)),
        }
    }
}

pub fn in_domain(n: usize) -> bool {
    PatternFamily::for_n(n).is_ok()
}

/// Every size covered by a family, up to `max` inclusive.
pub fn domain_up_to(max: usize) -> Vec<usize> {
    (1..=max).filter(|&n| in_domain(n)).collect()
}

/// `[-8 -9 w -12 -13 -2 -3 1-n -n 5 4 7 6 -10 -11 1]`, where `w` is made of
/// `(n-15)/4` blocks `-(15+4m) -(14+4m) -(17+4m) -(16+4m)`, highest `m` first.
fn odd_3mod4(n: i32) -> Vec<i32> {
    let mut v = vec![-8, -9];
    for m in (0..(n - 15) / 4).rev() {
        let b = 4 * m;
        v.extend([-(15 + b), -(14 + b), -(17 + b), -(16 + b)]);
    }
    v.extend([-12, -13, -2, -3, 1 - n, -n, 5, 4, 7, 6, -10, -11, 1]);
    v
}

/// `[-8 -9 n-3 n-2 n-7 n-6 -12 -13 -2 -3 w 5 4 1-n -n w' 5-n 4-n 7 6 -10 -11 1]`
/// with `p = (n-21)/4` pairs in each of `w` (descending `17+4m 16+4m`) and
/// `w'` (ascending `15+4m 14+4m`).
fn odd_1mod4(n: i32) -> Vec<i32> {
    let p = (n - 21) / 4;
    let mut v = vec![-8, -9, n - 3, n - 2, n - 7, n - 6, -12, -13, -2, -3];
    for m in (0..p).rev() {
        v.extend([17 + 4 * m, 16 + 4 * m]);
    }
    v.extend([5, 4, 1 - n, -n]);
    for m in 0..p {
        v.extend([15 + 4 * m, 14 + 4 * m]);
    }
    v.extend([5 - n, 4 - n, 7, 6, -10, -11, 1]);
    v
}

/// `[-n 11 10 -21 -20 -23 -22 -2 -3 -18 -19 w 13 12 -15 -14 8 9 5 4 w' n-2 n-1
/// 7 6 -17 -16 1]` with `(n-26)/4` blocks `-(26+4m) -(27+4m) -(24+4m) -(25+4m)`
/// in `w`, and `w' = (3-n, 4-n)` exactly when 4 divides `n`.
fn even(n: i32) -> Vec<i32> {
    let mut v = vec![-n, 11, 10, -21, -20, -23, -22, -2, -3, -18, -19];
    for m in 0..(n - 26) / 4 {
        let b = 4 * m;
        v.extend([-(26 + b), -(27 + b), -(24 + b), -(25 + b)]);
    }
    v.extend([13, 12, -15, -14, 8, 9, 5, 4]);
    if n % 4 == 0 {
        v.extend([3 - n, 4 - n]);
    }
    v.extend([n - 2, n - 1, 7, 6, -17, -16, 1]);
    v
}

pub fn pattern_checkpoint(n: usize) -> Result<Checkpoint> {
    let family = PatternFamily::for_n(n)?;
    let m = n as i32;
    let image = match family {
        PatternFamily::Odd3Mod4 => odd_3mod4(m),
        PatternFamily::Odd1Mod4 => odd_1mod4(m),
        PatternFamily::Even => even(m),
    };
    Checkpoint::new(SignedPerm::new(image)?)
}

pub fn generate(n: usize) -> Result<FlipSequence> {
    extract(&pattern_checkpoint(n)?)
}

/// Certificates for every size in the domain up to `max`, in increasing `n`.
pub fn table(max: usize) -> Result<Vec<Certificate>> {
    domain_up_to(max)
        .into_par_iter()
        .map(|n| generate(n).map(|s| classify(&s)))
        .collect()
}

/// Strict odd fortuitous sequences used as seeds of the splice route.
const ODD_SEEDS: &[&str] = &[
    "(15 10 4 6 14 6 4 10)^3",
    "(23 14 4 6 22 10 8 12 10 14 12 18 23 10 14 18 8 10 22 10 8 18 14 10 23 18 12 14 10 12 8 10 22 6 4 14)",
    "(29 16 4 26 6 20 4 16 24 6 14 28 12 4 24)^3",
    "(31 18 8 28 6 18 4 14 8 4 22 6 24 30 4 16)^3",
    "(33 18 8 30 8 2 20 4 14 8 4 24 8 26 32 4 18)^3",
    "(37 22 12 2 34 8 20 4 16 2 10 4 26 2 8 28 36 6 20)^3",
];

/// Even fortuitous sequences used as seeds of the splice route.
const EVEN_SEEDS: &[&str] = &[
    "(26 20 14 16 11 3 24 11 16 8 19 7 13 11 25 8 21 18 3 15 26 15 3 18 5 21 8 25 13 5 19 8 16 11 24 3 11 14 10 18)",
    "(28 22 2 16 18 13 3 26 11 18 2 10 21 7 15 13 27 8 23 20 3 17 28 15 3 18 5 21 8 27 15 5 21 10 2 18 11 26 3 13 16 10 20)",
    "(30 22 14 7 3 24 7 27 13 15 10 29 15 20 18 5 23 14 20 13 28 3 19)^2",
    "(32 24 14 20 17 3 30 11 18 2 23 25 12 23 5 17 31 10 23 5 20 26 24 3 15 32 21 3 24 27 8 31 17 19 7 25 14 2 22 11 30 3 13 17 22 20 13 2 26)",
    "(34 26 16 7 3 28 9 31 13 17 2 12 33 17 24 2 22 5 27 18 2 24 15 32 3 21)^2",
    "(36 28 18 24 21 3 34 11 18 2 27 29 25 27 14 25 5 19 35 12 25 5 22 28 26 30 28 3 15 36 25 3 28 31 8 35 21 23 7 29 18 2 26 11 34 3 13 17 21 26 24 17 13 2 30)",
    "(38 30 18 7 3 32 7 35 15 17 15 19 14 37 19 26 28 26 22 9 31 18 26 28 26 17 36 3 23)^2",
    "(40 32 22 28 25 3 38 11 18 2 31 33 29 31 27 29 16 27 5 21 39 14 27 5 24 30 28 32 30 34 32 3 15 40 29 3 32 35 8 39 25 27 7 33 22 2 30 11 38 3 13 17 21 25 30 28 21 17 13 2 34)",
    "(42 34 20 7 3 36 9 39 15 17 15 21 2 16 41 21 30 32 30 2 26 9 35 22 2 30 32 30 19 40 3 25)^2",
    "(44 36 26 32 29 3 42 11 18 2 35 37 33 35 31 33 29 31 18 29 5 23 43 16 29 5 26 32 30 34 32 36 34 38 36 3 15 44 33 3 36 39 8 43 29 31 7 37 26 2 34 11 42 3 13 17 21 25 29 34 32 25 21 17 13 2 38)",
    "(46 38 22 7 3 40 14 16 12 14 11 43 14 18 21 23 14 45 27 35 31 28 26 13 39 22 32 35 33 37 35 21 44 3 27)^2",
    "(48 40 30 36 33 3 46 11 18 2 39 41 37 39 35 37 33 35 31 33 20 31 5 25 47 18 31 5 28 34 32 36 34 38 36 40 38 42 40 3 15 48 37 3 40 43 8 47 33 35 7 41 30 2 38 11 46 3 13 17 21 25 29 33 38 36 29 25 21 17 13 2 42)",
];

fn seed(n: usize) -> Option<FlipSequence> {
    let list = if n % 2 == 1 { ODD_SEEDS } else { EVEN_SEEDS };
    list.iter()
        .map(|t| crate::format::parse_sequence(t).expect("seed literals parse"))
        .find(|s| s.n() == n)
}

/// Second construction of a sequence for `n`, by splicing only: the
/// 15-sequence into the route sequence for `n - 12` (odd `n`), or the first
/// 26-sequence into the one for `n - 24` (even `n`), down to a seed.
/// `None` when no seed lies in the residue class below `n`.
pub fn compose_route(n: usize) -> Option<Result<FlipSequence>> {
    if let Some(s) = seed(n) {
        return Some(Ok(s));
    }
    let (step, inner) = if n % 2 == 1 { (12, 15) } else { (24, 26) };
    let outer = match compose_route(n.checked_sub(step)?)? {
        Ok(s) => s,
        Err(e) => return Some(Err(e)),
    };
    let inner = seed(inner).expect("base seeds exist");
    Some(if n % 2 == 1 {
        compose_odd(&inner, &outer)
    } else {
        compose_even(&inner, &outer)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::CheckpointKind;
    use crate::format::parse_stack;

    fn stack(t: &str) -> Vec<i32> {
        parse_stack(t).unwrap().into_vec()
    }

    #[test]
    fn listed_checkpoints() {
        assert_eq!(
            pattern_checkpoint(25).unwrap().stack.into_vec(),
            stack(
                "[-8 -9 22 23 18 19 -12 -13 -2 -3 17 16 5 4 -24 -25 15 14 -20 -21 7 6 -10 -11 1]"
            )
        );
        assert_eq!(
            pattern_checkpoint(29).unwrap().stack.into_vec(),
            stack("[-8 -9 26 27 22 23 -12 -13 -2 -3 21 20 17 16 5 4 -28 -29 15 14 19 18 -24 -25 7 6 -10 -11 1]")
        );
        let cp = pattern_checkpoint(15).unwrap();
        assert_eq!(cp.kind, CheckpointKind::TwoClanStack);
        assert_eq!(
            cp.stack.into_vec(),
            stack("[-8 -9 -12 -13 -2 -3 -14 -15 5 4 7 6 -10 -11 1]")
        );
        assert_eq!(
            pattern_checkpoint(27).unwrap().stack.into_vec(),
            stack("[-8 -9 -23 -22 -25 -24 -19 -18 -21 -20 -15 -14 -17 -16 -12 -13 -2 -3 -26 -27 5 4 7 6 -10 -11 1]")
        );
        assert_eq!(
            pattern_checkpoint(28).unwrap().stack.into_vec(),
            stack("[-28 11 10 -21 -20 -23 -22 -2 -3 -18 -19 13 12 -15 -14 8 9 5 4 -25 -24 26 27 7 6 -17 -16 1]")
        );
        assert_eq!(
            pattern_checkpoint(34).unwrap().stack.into_vec(),
            stack("[-34 11 10 -21 -20 -23 -22 -2 -3 -18 -19 -26 -27 -24 -25 -30 -31 -28 -29 13 12 -15 -14 8 9 5 4 32 33 7 6 -17 -16 1]")
        );
    }

    #[test]
    fn domain() {
        for n in [1, 2, 3, 13, 14, 16, 17, 21, 24] {
            assert_eq!(pattern_checkpoint(n), Err(Error::UnsupportedN(n)));
        }
        assert_eq!(domain_up_to(199).len(), 178);
        assert_eq!(&domain_up_to(26), &[15, 19, 23, 25, 26]);
    }

    #[test]
    fn small_generation() {
        assert_eq!(
            generate(15).unwrap().flips(),
            [15, 10, 4, 6, 14, 6, 4, 10].repeat(3).as_slice()
        );
        assert!(generate(21).is_err());
    }
}
