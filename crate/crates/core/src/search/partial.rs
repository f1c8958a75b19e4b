//! Partially known signed permutations with an undo journal.

use crate::perm::SignedPerm;

/// A signed permutation of `±1..±n` under construction. Entries are kept in
/// flat tables over `-n..=n` (0 means unknown); `f(-i) = -f(i)` and the
/// inverse are maintained together with every assignment.
#[derive(Debug, Clone)]
pub struct PartialPerm {
    n: usize,
    f: Vec<i32>,
    h: Vec<i32>,
    journal: Vec<i32>,
}

impl PartialPerm {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            f: vec![0; 2 * n + 1],
            h: vec![0; 2 * n + 1],
            journal: Vec::with_capacity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn idx(&self, i: i32) -> Option<usize> {
        let m = i.unsigned_abs() as usize;
        (m >= 1 && m <= self.n).then(|| (i + self.n as i32) as usize)
    }

    /// `f(i)`, or `None` when unknown or `i` is outside `±1..±n`.
    pub fn get(&self, i: i32) -> Option<i32> {
        self.idx(i).map(|k| self.f[k]).filter(|&v| v != 0)
    }

    /// `f^-1(j)`, or `None` when unknown or out of range.
    pub fn preimage(&self, j: i32) -> Option<i32> {
        self.idx(j).map(|k| self.h[k]).filter(|&v| v != 0)
    }

    pub fn in_range(&self, i: i32) -> bool {
        self.idx(i).is_some()
    }

    /// Neither `f(m)` nor `f^-1(m)` is known.
    pub fn is_free(&self, m: i32) -> bool {
        self.get(m).is_none() && self.preimage(m).is_none()
    }

    /// Record `f(i) = j` (and `f(-i) = -j`). Fails without change if either
    /// side is out of range or already bound to something else; succeeds
    /// without change if the value is already there.
    pub fn set(&mut self, i: i32, j: i32) -> bool {
        let (Some(a), Some(b)) = (self.idx(i), self.idx(j)) else {
            return false;
        };
        if self.f[a] == j {
            return true;
        }
        if self.f[a] != 0 || self.h[b] != 0 {
            return false;
        }
        let (na, nb) = (self.idx(-i).unwrap(), self.idx(-j).unwrap());
        self.f[a] = j;
        self.f[na] = -j;
        self.h[b] = i;
        self.h[nb] = -i;
        self.journal.push(i);
        true
    }

    /// Journal position to roll back to with [`undo`](Self::undo).
    pub fn mark(&self) -> usize {
        self.journal.len()
    }

    pub fn undo(&mut self, mark: usize) {
        while self.journal.len() > mark {
            let i = self.journal.pop().unwrap();
            let j = self.get(i).unwrap();
            for (x, y) in [(i, j), (-i, -j)] {
                let a = self.idx(x).unwrap();
                let b = self.idx(y).unwrap();
                self.f[a] = 0;
                self.h[b] = 0;
            }
        }
    }

    /// Number of `i` in `1..=n` with `f(i)` known.
    pub fn known(&self) -> usize {
        self.journal.len()
    }

    pub fn is_complete(&self) -> bool {
        self.known() == self.n
    }

    /// The stack `[f(1) ... f(n)]` once every value is known.
    pub fn to_perm(&self) -> Option<SignedPerm> {
        if !self.is_complete() {
            return None;
        }
        let image = (1..=self.n as i32).map(|i| self.get(i).unwrap()).collect();
        Some(SignedPerm::from_image_unchecked(image))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_undo() {
        let mut p = PartialPerm::new(4);
        assert!(p.set(1, -3));
        assert_eq!(p.get(-1), Some(3));
        assert_eq!(p.preimage(-3), Some(1));
        assert_eq!(p.preimage(3), Some(-1));
        let m = p.mark();
        assert!(p.set(2, 4));
        assert!(p.set(2, 4));
        assert!(!p.set(2, 1));
        assert!(!p.set(3, 4));
        assert!(!p.set(3, 5));
        assert!(!p.set(0, 1));
        p.undo(m);
        assert_eq!(p.get(2), None);
        assert!(p.is_free(4));
        assert_eq!(p.known(), 1);
        for (i, j) in [(2, 1), (3, 2), (4, -4)] {
            assert!(p.set(i, j));
        }
        assert_eq!(p.to_perm().unwrap().as_slice(), &[-3, 1, 2, -4]);
    }
}
