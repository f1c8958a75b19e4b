//! Odd fortuitous sequences whose first phase is a palindrome
//! `s1 = w (n-1) w̃`.

use super::{finish, Control, Mode, SearchConfig, SearchOutcome, Worker};
use crate::canonical::greedy_run;
use crate::classify::{classify, Class};
use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};

/// All `n s1 n s2 n s3` with `s1` a palindrome, for `n ≡ 3 (mod 4)`.
///
/// `s1` is built flip by flip from `-f_n`. A flip `k` is tried only when it
/// is even and the pancakes at positions `k` and `k+1` form a clan pair,
/// so that the flip breaks it. Once half of `s1` is placed, the rest is
/// the mirror image around a central `n-1`. The last two phases are read
/// off greedily and the whole sequence is verified.
pub fn search_palindromic_odd(n: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    if n < 3 || n % 4 != 3 {
        return Err(Error::SearchPrecondition(format!(
            "palindromic odd search needs n ≡ 3 (mod 4), got {n}"
        )));
    }
    let control = Control::new(config);
    let mut worker = Worker::new(&control);
    let mut stack = SignedPerm::minus_identity(n);
    stack.flip_in_place(n);
    let mut flips = vec![n];
    extend(&mut worker, &mut stack, &mut flips, n);
    Ok(finish(n, Mode::PalindromicOdd, &control, vec![worker]))
}

fn extend(w: &mut Worker<'_>, stack: &mut SignedPerm, flips: &mut Vec<usize>, n: usize) {
    if w.tick() {
        return;
    }
    let m = n.div_ceil(2);
    let k = flips.len();
    if k == m {
        complete(w, stack, flips, n);
        return;
    }
    let mirror = m - k;
    if mirror <= k {
        let size = if mirror < k { flips[mirror] } else { n - 1 };
        try_flip(w, stack, flips, n, size);
    } else {
        for size in (2..n).step_by(2) {
            try_flip(w, stack, flips, n, size);
            if w.control.stopped() {
                return;
            }
        }
    }
}

fn try_flip(
    w: &mut Worker<'_>,
    stack: &mut SignedPerm,
    flips: &mut Vec<usize>,
    n: usize,
    size: usize,
) {
    let s = stack.as_slice();
    if s[size] != s[size - 1] - 1 {
        return;
    }
    stack.flip_in_place(size);
    flips.push(size);
    extend(w, stack, flips, n);
    flips.pop();
    stack.flip_in_place(size);
}

fn complete(w: &mut Worker<'_>, stack: &SignedPerm, flips: &[usize], n: usize) {
    if stack.top() >= 0 {
        return;
    }
    let m = flips.len();
    let mut seq = FlipSequence::new(n, flips.to_vec()).expect("flips are in range");
    let mut t = stack.clone();
    for phase in 1..=2 {
        t.flip_in_place(n);
        seq.push(n);
        greedy_run(&mut t, &mut seq);
        if seq.len() != (phase + 1) * m {
            return;
        }
    }
    let cert = classify(&seq);
    if cert.has(Class::OddFortuitous) && cert.has(Class::Palindromic) && cert.failures.is_empty() {
        w.emit(seq.flips().to_vec());
    }
}
