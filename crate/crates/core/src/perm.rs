//! Signed permutations and flip sequences.
//!
//! A [`SignedPerm`] on `n` pancakes is stored as its image list
//! `[S(1) ... S(n)]`, extended to negative arguments by `S(-i) = -S(i)`.
//! Read as a stack, position 1 is the top, and a negative value is a
//! pancake lying burnt side up.
//!
//! Flipping the top `k` pancakes of a stack `T` yields `T ∘ f_k`, so a
//! sequence `w = (w1 ... wm)` applied to `T` gives `T ∘ f_w1 ∘ ... ∘ f_wm`.
//! [`FlipSequence::effect`] returns that right factor. Because `-I_n` is
//! central and an involution, `w` sorts `-I_n` exactly when its effect is
//! `-I_n`, whichever nesting order one writes the effect in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPerm {
    image: Vec<i32>,
}

impl SignedPerm {
    pub fn new(image: Vec<i32>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidPerm("empty stack".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &image {
            let m = v.unsigned_abs() as usize;
            if v == 0 || m > n || seen[m] {
                return Err(Error::InvalidPerm(format!("{image:?}")));
            }
            seen[m] = true;
        }
        Ok(Self { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<i32>) -> Self {
        debug_assert!(Self::new(image.clone()).is_ok());
        Self { image }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n as i32).collect(),
        }
    }

    /// `-I_n`: every pancake in place, burnt side up.
    pub fn minus_identity(n: usize) -> Self {
        Self {
            image: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    /// The permutation `f_k` of a single flip of size `k` in an `n`-stack.
    pub fn reversal(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::FlipOutOfRange { k, n });
        }
        let mut p = Self::identity(n);
        p.flip_in_place(k);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.image
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.image
    }

    /// `S(i)` for `i` in `±1..=±n`.
    #[inline]
    pub fn at(&self, i: i32) -> i32 {
        if i > 0 {
            self.image[i as usize - 1]
        } else {
            -self.image[(-i) as usize - 1]
        }
    }

    pub fn top(&self) -> i32 {
        self.image[0]
    }

    pub fn bottom(&self) -> i32 {
        self.image[self.image.len() - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Reverse the top `k` entries and negate each. Panics if `k > n`.
    #[inline]
    pub fn flip_in_place(&mut self, k: usize) {
        flip_slice(&mut self.image[..k]);
    }

    pub fn flip(&self, k: usize) -> Result<Self> {
        check_flip(k, self.n())?;
        let mut next = self.clone();
        next.flip_in_place(k);
        Ok(next)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            image: other.image.iter().map(|&j| self.at(j)).collect(),
        })
    }

    pub fn invert(&self) -> Self {
        let mut image = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            let pos = i as i32 + 1;
            image[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        Self { image }
    }

    pub fn negate(&self) -> Self {
        Self {
            image: self.image.iter().map(|v| -v).collect(),
        }
    }

    pub fn apply(&self, seq: &FlipSequence) -> Result<Self> {
        if seq.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: seq.n(),
            });
        }
        let mut s = self.clone();
        for &k in seq.flips() {
            s.flip_in_place(k);
        }
        Ok(s)
    }
}

#[inline]
pub(crate) fn flip_slice(prefix: &mut [i32]) {
    prefix.reverse();
    for v in prefix.iter_mut() {
        *v = -*v;
    }
}

fn check_flip(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        Err(Error::FlipOutOfRange { k, n })
    } else {
        Ok(())
    }
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;

    fn try_from(image: Vec<i32>) -> Result<Self> {
        Self::new(image)
    }
}

impl From<SignedPerm> for Vec<i32> {
    fn from(p: SignedPerm) -> Self {
        p.image
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered list of flip sizes for a stack of `n` pancakes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlipSequence {
    n: usize,
    flips: Vec<usize>,
}

impl FlipSequence {
    pub fn new(n: usize, flips: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall { n, min: 1 });
        }
        for &k in &flips {
            check_flip(k, n)?;
        }
        Ok(Self { n, flips })
    }

    /// Sequence whose ambient size is its first flip.
    pub fn from_flips(flips: Vec<usize>) -> Result<Self> {
        let n = *flips
            .first()
            .ok_or_else(|| Error::Parse("empty sequence needs an explicit n".into()))?;
        Self::new(n, flips)
    }

    pub fn empty(n: usize) -> Self {
        Self { n, flips: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flips(&self) -> &[usize] {
        &self.flips
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut flips = self.flips.clone();
        flips.reverse();
        Self { n: self.n, flips }
    }

    /// Move the first `k` flips to the end.
    pub fn rotated(&self, k: usize) -> Result<Self> {
        if self.flips.is_empty() && k == 0 {
            return Ok(self.clone());
        }
        if k >= self.flips.len() {
            return Err(Error::RotationOutOfRange {
                k,
                len: self.flips.len(),
            });
        }
        let mut flips = self.flips.clone();
        flips.rotate_left(k);
        Ok(Self { n: self.n, flips })
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut flips = self.flips.clone();
        flips.extend_from_slice(&other.flips);
        Ok(Self { n: self.n, flips })
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self {
            n: self.n,
            flips: self.flips.repeat(times),
        }
    }

    /// The permutation `E` with `T.apply(w) == T ∘ E` for every stack `T`.
    pub fn effect(&self) -> SignedPerm {
        let mut s = SignedPerm::identity(self.n);
        for &k in &self.flips {
            s.flip_in_place(k);
        }
        s
    }

    /// Does this sequence take `-I_n` to `I_n`?
    pub fn sorts(&self) -> bool {
        let mut s = SignedPerm::minus_identity(self.n);
        for &k in &self.flips {
            s.flip_in_place(k);
        }
        s.is_identity()
    }

    pub(crate) fn push(&mut self, k: usize) {
        debug_assert!(k >= 1 && k <= self.n);
        self.flips.push(k);
    }
}

impl fmt::Display for FlipSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.flips.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FlipSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self)
    }
}
