//! Patchwork search: even fortuitous sequences for even `n`, generalized
//! odd fortuitous sequences for odd `n`.
//!
//! The unknown is the checkpoint `f`. Four partially known stacks are
//! followed at once, each written as a symbolic stack `σ` over positions
//! of `f` and read through `f` or `f^-1`:
//!
//! | stack | start `σ`      | read as      | flips recorded             |
//! |-------|----------------|--------------|----------------------------|
//! | A     | `f_n`          | `f ∘ σ`      | forward in the `f` reading |
//! | B     | `-I`           | `f ∘ σ`      | backward in the `f` reading |
//! | C     | `-f_n`         | `f^-1 ∘ σ`   | forward in the mirror reading |
//! | D     | `I`            | `f^-1 ∘ σ`   | backward in the mirror reading |
//!
//! Every flip must put the top pancake `x` right above `1 - x`. When that
//! pancake is known the flip is forced; otherwise a value of `f` has to be
//! chosen first. The stack needing the fewest unknown values is served
//! first. A forward stack whose top is 1 must be `I`, a backward stack
//! whose top is `-n` must be `f_n`.

use super::{
    finish, reflect, Control, Mode, PartialPerm, SearchConfig, SearchOutcome, Symmetry, Worker,
};
use crate::classify::{classify, Class};
use crate::error::{Error, Result};
use crate::perm::{flip_slice, FlipSequence};
use crate::potential::lower_bound;

struct Rules {
    n: usize,
    double: bool,
    pal_n1: bool,
    pal_n: bool,
}

impl Rules {
    /// Position paired with `i` in a 2-piece; `None` for the singletons
    /// (`n`, and `1` when `n` is even).
    fn pos_partner(&self, i: i32) -> Option<i32> {
        let m = i.abs();
        let p = if (m % 2 == 0) == (self.n % 2 == 0) {
            m + 1
        } else {
            m - 1
        };
        (p >= 1 && p <= self.n as i32 - 1 && m <= self.n as i32 - 1).then_some(p * i.signum())
    }

    /// Value paired with `j`: `{2,3}, {4,5}, ...`; `None` for 1, and for `n`
    /// when `n` is even.
    fn val_partner(&self, j: i32) -> Option<i32> {
        let m = j.abs();
        let p = if m % 2 == 0 { m + 1 } else { m - 1 };
        (p >= 2 && p <= self.n as i32).then_some(p * j.signum())
    }

    fn force(&self, pp: &mut PartialPerm, i: i32, j: i32) -> bool {
        let n = self.n;
        let mut work = vec![(i, j)];
        while let Some((i, j)) = work.pop() {
            if !pp.in_range(i) || !pp.in_range(j) {
                return false;
            }
            match pp.get(i) {
                Some(v) if v == j => continue,
                Some(_) => return false,
                None => {}
            }
            if pp.preimage(j).is_some() {
                return false;
            }
            let partner = match (self.pos_partner(i), self.val_partner(j)) {
                (Some(pi), Some(pj)) => {
                    if pp.get(2 * i - pi) == Some(2 * j - pj) {
                        return false;
                    }
                    Some((pi, pj))
                }
                (None, None) => None,
                _ => return false,
            };
            pp.set(i, j);
            if let Some(p) = partner {
                work.push(p);
            }
            if self.double {
                work.push((j, -i));
            }
            if self.pal_n1 {
                work.push((reflect(i, n), -reflect(j, n)));
            }
            if self.pal_n {
                work.push((reflect(j, n), reflect(i, n)));
            }
        }
        true
    }
}

#[derive(Clone)]
struct Stack {
    sym: Vec<i32>,
    inverse: bool,
    forward: bool,
}

impl Stack {
    fn real(&self, pp: &PartialPerm, p: usize) -> Option<i32> {
        let z = self.sym[p];
        if self.inverse {
            pp.preimage(z)
        } else {
            pp.get(z)
        }
    }

    /// Symbol that must sit below the flip point for the top `x` to land
    /// on `1 - x`.
    fn target(&self, pp: &PartialPerm, x: i32) -> Option<i32> {
        if self.inverse {
            pp.get(1 - x)
        } else {
            pp.preimage(1 - x)
        }
    }

    fn force_real(&self, rules: &Rules, pp: &mut PartialPerm, p: usize, v: i32) -> bool {
        if self.inverse {
            rules.force(pp, v, self.sym[p])
        } else {
            rules.force(pp, self.sym[p], v)
        }
    }

    /// Real value at 0-based position `p` of the stack this one must become
    /// once its top says the phase is over.
    fn end_value(&self, n: usize, p: usize) -> i32 {
        if self.forward {
            p as i32 + 1
        } else {
            p as i32 - n as i32
        }
    }

    fn at_end(&self, pp: &PartialPerm, n: usize) -> bool {
        self.real(pp, 0) == Some(self.end_value(n, 0))
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

struct Search<'r> {
    rules: &'r Rules,
    n: usize,
    len: usize,
    pp: PartialPerm,
    stacks: [Stack; 4],
    /// Flips of the `f` reading (`q`) and of the mirror reading (`r`), each
    /// with a forward cursor and a backward cursor.
    q: Vec<usize>,
    r: Vec<usize>,
    k: usize,
    kk: usize,
    l: usize,
    ll: usize,
}

enum Forced {
    Nothing,
    Changed,
    Conflict,
}

impl Search<'_> {
    fn count(&self, s: usize) -> usize {
        match s {
            A => self.k - 1,
            B => self.len - 1 - self.kk,
            C => self.l - 1,
            _ => self.len - 1 - self.ll,
        }
    }

    /// Stacks B and C both trace the phase that ends at the checkpoint, A
    /// and D the one after it (odd `n`: A the middle phase, D the last).
    fn lengths_fit(&self) -> bool {
        let first = self.count(B).max(self.count(C));
        if self.n % 2 == 0 {
            first + self.count(A).max(self.count(D)) <= self.len - 2
        } else {
            first + self.count(A) + self.count(D) <= self.len - 3
        }
    }

    fn flip(&mut self, s: usize, size: usize) {
        flip_slice(&mut self.stacks[s].sym[..size]);
        match s {
            A => {
                self.q[self.k] = size;
                self.k += 1;
            }
            B => {
                self.q[self.kk] = size;
                self.kk -= 1;
            }
            C => {
                self.r[self.l] = size;
                self.l += 1;
            }
            _ => {
                self.r[self.ll] = size;
                self.ll -= 1;
            }
        }
    }

    fn unflip(&mut self, s: usize, size: usize) {
        flip_slice(&mut self.stacks[s].sym[..size]);
        match s {
            A => self.k -= 1,
            B => self.kk += 1,
            C => self.l -= 1,
            _ => self.ll += 1,
        }
    }

    fn force_ends(&mut self) -> Forced {
        let n = self.n;
        let mut result = Forced::Nothing;
        loop {
            let mut changed = false;
            for s in [A, B, C, D] {
                if !self.stacks[s].at_end(&self.pp, n) {
                    continue;
                }
                for p in 1..n {
                    let want = self.stacks[s].end_value(n, p);
                    match self.stacks[s].real(&self.pp, p) {
                        Some(v) if v == want => {}
                        Some(_) => return Forced::Conflict,
                        None => {
                            if !self.stacks[s].force_real(self.rules, &mut self.pp, p, want) {
                                return Forced::Conflict;
                            }
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return result;
            }
            result = Forced::Changed;
        }
    }

    fn candidate(&self, w: &mut Worker<'_>, flips: Vec<usize>) {
        let Ok(seq) = FlipSequence::new(self.n, flips) else {
            return;
        };
        let cert = classify(&seq);
        let class = if self.n % 2 == 0 {
            Class::EvenFortuitous
        } else {
            Class::GeneralizedOddFortuitous
        };
        if !cert.has(class) || !cert.failures.is_empty() {
            return;
        }
        let reading = match cert.rotation {
            Some(k) if k > 0 => seq.rotated(k).expect("rotation offset is in range"),
            _ => seq,
        };
        w.emit(reading.flips().to_vec());
    }

    /// Terminal states; true when this node is finished.
    fn terminal(&mut self, w: &mut Worker<'_>) -> bool {
        let n = self.n;
        if self.k == self.kk {
            if n % 2 == 0 {
                let mut q = self.q.clone();
                q[self.k] = n;
                q.rotate_left(self.k);
                self.candidate(w, q);
            }
            return true;
        }
        if self.l == self.ll {
            if n % 2 == 0 {
                let mut r = self.r.clone();
                r[self.l] = n;
                self.candidate(w, r);
            }
            return true;
        }
        if n % 2 == 1
            && self.kk + self.l == self.len
            && self.k + self.l == self.ll
            && self.stacks[B].at_end(&self.pp, n)
            && self.stacks[C].at_end(&self.pp, n)
        {
            let mut r = self.r[..self.l].to_vec();
            r.extend_from_slice(&self.q[..self.k]);
            r.push(n);
            r.extend_from_slice(&self.r[self.ll + 1..]);
            self.candidate(w, r);
            return true;
        }
        false
    }

    fn dfs(&mut self, w: &mut Worker<'_>) {
        if w.tick() || !self.lengths_fit() || self.terminal(w) {
            return;
        }
        let mark = self.pp.mark();
        match self.force_ends() {
            Forced::Conflict => {}
            Forced::Changed => self.dfs(w),
            Forced::Nothing => self.branch(w),
        }
        self.pp.undo(mark);
    }

    fn flip_to(&mut self, w: &mut Worker<'_>, s: usize, sym: i32) {
        let n = self.n;
        if let Some(size) = (1..n).find(|&i| self.stacks[s].sym[i] == sym) {
            self.flip(s, size);
            self.dfs(w);
            self.unflip(s, size);
        }
    }

    fn try_assign(&mut self, w: &mut Worker<'_>, s: usize, p: usize, v: i32) {
        let mark = self.pp.mark();
        if self.stacks[s].force_real(self.rules, &mut self.pp, p, v) {
            self.dfs(w);
        }
        self.pp.undo(mark);
    }

    fn branch(&mut self, w: &mut Worker<'_>) {
        let n = self.n;
        let tops: Vec<Option<i32>> = (0..4).map(|s| self.stacks[s].real(&self.pp, 0)).collect();
        // a forced flip: top and its partner below are both known
        for s in [A, B, C, D] {
            if let Some(x) = tops[s] {
                if let Some(sym) = self.stacks[s].target(&self.pp, x) {
                    self.flip_to(w, s, sym);
                    return;
                }
            }
        }
        // top known, the pancake to land on is not: choose where it sits
        for s in [B, C, A, D] {
            if let Some(x) = tops[s] {
                for p in 1..n {
                    if self.stacks[s].real(&self.pp, p).is_none() {
                        self.try_assign(w, s, p, 1 - x);
                        if w.control.stopped() {
                            return;
                        }
                    }
                }
                return;
            }
        }
        // nothing known on top: choose the top of A
        for m in 1..n as i32 {
            if self.pp.preimage(m).is_none() {
                for v in [m, -m] {
                    self.try_assign(w, A, 0, v);
                    if w.control.stopped() {
                        return;
                    }
                }
            }
        }
    }
}

/// Depth-first search over patchworks. Even `n` looks for even fortuitous
/// sequences (`f(1) = -n`), odd `n` for generalized odd ones.
pub fn search_patchwork(n: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    if n < 2 {
        return Err(Error::SearchPrecondition(format!(
            "patchwork search needs n >= 2, got {n}"
        )));
    }
    let rules = Rules {
        n,
        double: config.has(Symmetry::Double),
        pal_n1: config.has(Symmetry::PalCenterNminus1),
        pal_n: config.has(Symmetry::PalCenterN),
    };
    let control = Control::new(config);
    let mut pp = PartialPerm::new(n);
    let ni = n as i32;
    let mut seeded = rules.force(&mut pp, ni, 1);
    if n % 2 == 0 {
        seeded &= rules.force(&mut pp, 1, -ni);
    }
    seeded = seeded
        && config
            .hints
            .iter()
            .all(|&(i, j)| rules.force(&mut pp, i, j));
    if !seeded {
        return Ok(finish(n, Mode::Patchwork, &control, vec![]));
    }
    let len = lower_bound(n)?;
    let stack = |sym: Vec<i32>, inverse, forward| Stack {
        sym,
        inverse,
        forward,
    };
    let mut search = Search {
        rules: &rules,
        n,
        len,
        pp,
        stacks: [
            stack((1..=ni).map(|p| p - 1 - ni).collect(), false, true),
            stack((1..=ni).map(|p| -p).collect(), false, false),
            stack((1..=ni).map(|p| ni + 1 - p).collect(), true, true),
            stack((1..=ni).collect(), true, false),
        ],
        q: vec![n; len],
        r: vec![n; len],
        k: 1,
        kk: len - 1,
        l: 1,
        ll: len - 1,
    };
    let mut worker = Worker::new(&control);
    search.dfs(&mut worker);
    Ok(finish(n, Mode::Patchwork, &control, vec![worker]))
}
