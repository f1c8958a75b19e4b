//! Stacks of 2-clans of order 3, i.e. odd fortuitous sequences `(n s)^3`.

use rayon::prelude::*;

use super::{
    d, finish, reflect, Control, Emit, Mode, PartialPerm, SearchConfig, SearchOutcome, Symmetry,
    Worker,
};
use crate::canonical::extract_stack;
use crate::classify::{classify, Class};
use crate::error::{Error, Result};

/// Conditions on `f`: a signed permutation with `f(n) = 1`, `f(1) < 0`,
/// `f∘f∘f = id`, `d(f(i)) = d(i)`, `f(i - d(i)) = f(i) + d(i)` (pairs of
/// pancakes form clans) and `f(i + d(i)) != f(i) - d(i)` (clans stay at
/// two pancakes). With `PalCenterN`, also `f = f_n ∘ f^-1 ∘ f_n`.
struct Rules {
    n: usize,
    pal_n: bool,
}

impl Rules {
    fn admissible(&self, pp: &PartialPerm, i: i32, j: i32) -> bool {
        let di = d(i);
        if d(j) != di || (i == 1 && j > 0) || (i == -1 && j < 0) {
            return false;
        }
        if pp.get(i + di) == Some(j - di) {
            return false;
        }
        pp.in_range(i - di) == pp.in_range(j + di)
    }

    /// Set `f(i) = j` and everything it forces. On failure the caller rolls
    /// the journal back.
    fn force(&self, pp: &mut PartialPerm, i: i32, j: i32) -> bool {
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
            if pp.preimage(j).is_some() || !self.admissible(pp, i, j) {
                return false;
            }
            pp.set(i, j);
            let di = d(i);
            if pp.in_range(i - di) {
                work.push((i - di, j + di));
            }
            if let Some(w) = pp.preimage(i) {
                work.push((j, w));
            }
            if let Some(v) = pp.get(j) {
                work.push((v, i));
            }
            if self.pal_n {
                work.push((reflect(j, self.n), reflect(i, self.n)));
            }
        }
        true
    }

    /// Smallest `i > 0` with `f(i)` unknown but `f^-1(i)` known, and the
    /// candidate values for `f(i)`: free magnitudes with the sign `d` asks for.
    fn branches(&self, pp: &PartialPerm) -> Option<(i32, Vec<i32>)> {
        let n = self.n as i32;
        let i = (1..=n).find(|&i| pp.get(i).is_none() && pp.preimage(i).is_some())?;
        let values = (1..=n)
            .filter(|&m| pp.is_free(m))
            .map(|m| m * d(m) * d(i))
            .collect();
        Some((i, values))
    }
}

/// All triple fortuitous sequences `(n s)^3` for odd `n`.
pub fn search_triple(n: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::SearchPrecondition(format!(
            "triple search needs odd n >= 3, got {n}"
        )));
    }
    if config.has(Symmetry::Double) || config.has(Symmetry::PalCenterNminus1) {
        return Err(Error::SearchPrecondition(
            "triple search supports only the pal-n symmetry".into(),
        ));
    }
    let rules = Rules {
        n,
        pal_n: config.has(Symmetry::PalCenterN),
    };
    let control = Control::new(config);
    let mut root = PartialPerm::new(n);
    let seeded = rules.force(&mut root, n as i32, 1)
        && config
            .hints
            .iter()
            .all(|&(i, j)| rules.force(&mut root, i, j));
    if !seeded {
        return Ok(finish(n, Mode::Triple, &control, vec![]));
    }
    let workers = match rules.branches(&root) {
        None => {
            let mut w = Worker::new(&control);
            dfs(&rules, &mut root, &mut w);
            vec![w]
        }
        // A first-result search stays on one thread so the answer does not
        // depend on which branch finishes first.
        Some(_) if config.emit == Emit::First => {
            let mut w = Worker::new(&control);
            dfs(&rules, &mut root, &mut w);
            vec![w]
        }
        Some((i, values)) => values
            .into_par_iter()
            .map(|j| {
                let mut w = Worker::new(&control);
                let mut pp = root.clone();
                if !w.tick() && rules.force(&mut pp, i, j) {
                    dfs(&rules, &mut pp, &mut w);
                }
                w
            })
            .collect(),
    };
    Ok(finish(n, Mode::Triple, &control, workers))
}

fn dfs(rules: &Rules, pp: &mut PartialPerm, w: &mut Worker<'_>) {
    if w.tick() {
        return;
    }
    if pp.is_complete() {
        let stack = pp.to_perm().expect("complete");
        if let Ok(seq) = extract_stack(&stack) {
            let cert = classify(&seq);
            if cert.has(Class::Triple) && cert.failures.is_empty() {
                w.emit(seq.flips().to_vec());
            }
        }
        return;
    }
    let Some((i, values)) = rules.branches(pp) else {
        return;
    };
    for j in values {
        let mark = pp.mark();
        if rules.force(pp, i, j) {
            dfs(rules, pp, w);
        }
        pp.undo(mark);
        if w.control.stopped() {
            return;
        }
    }
}
