//! Checkpoints and the greedy extraction that rebuilds a fortuitous
//! sequence from the stack reached after its first phase.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};
use crate::potential::{lower_bound, BoundaryKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CheckpointKind {
    TwoClanStack,
    OddPatchwork,
    EvenPatchwork,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Checkpoint {
    pub stack: SignedPerm,
    pub kind: CheckpointKind,
}

impl Checkpoint {
    pub fn new(stack: SignedPerm) -> Result<Self> {
        match checkpoint_kind(&stack) {
            Some(kind) => Ok(Self { stack, kind }),
            None => Err(Error::NotFortuitousShape(stack.to_string())),
        }
    }

    pub fn n(&self) -> usize {
        self.stack.n()
    }
}

/// Structural test for the three checkpoint shapes.
///
/// Odd `n`: pancake 1 at the bottom and positions `1..n-1` paired
/// `(1,2), (3,4), ...`, every pair a clan or a block, with no piece running
/// past its pair. Even `n`: the same over positions `2..n-1`, with `-n` on top.
pub fn checkpoint_kind(stack: &SignedPerm) -> Option<CheckpointKind> {
    let s = stack.as_slice();
    let n = s.len();
    if n < 2 || s[n - 1] != 1 {
        return None;
    }
    let first = if n % 2 == 0 {
        if s[0] != -(n as i32) {
            return None;
        }
        1
    } else {
        0
    };
    let between = |i: usize| BoundaryKind::between(s[i], s[i + 1]);
    if first == 1 && between(0) != BoundaryKind::Neither {
        return None;
    }
    let mut all_clans = true;
    let mut i = first;
    while i + 1 < n - 1 {
        match between(i) {
            BoundaryKind::Adjacency => all_clans = false,
            BoundaryKind::AntiAdjacency => {}
            BoundaryKind::Neither => return None,
        }
        if between(i + 1) != BoundaryKind::Neither {
            return None;
        }
        i += 2;
    }
    if n % 2 == 0 {
        Some(CheckpointKind::EvenPatchwork)
    } else if all_clans && s[0] < 0 && s[0] % 2 == 0 {
        Some(CheckpointKind::TwoClanStack)
    } else {
        Some(CheckpointKind::OddPatchwork)
    }
}

/// The stack reached from `-I_n` just before the second flip `n`.
pub fn checkpoint_of(seq: &FlipSequence) -> Result<Checkpoint> {
    let n = seq.n();
    let flips = seq.flips();
    if flips.first() != Some(&n) {
        return Err(Error::NotFortuitousShape(format!(
            "sequence {seq} does not begin with flip {n}"
        )));
    }
    let second = flips[1..].iter().position(|&k| k == n).ok_or_else(|| {
        Error::NotFortuitousShape(format!("sequence {seq} has a single flip {n}"))
    })? + 1;
    let mut stack = SignedPerm::minus_identity(n);
    for &k in &flips[..second] {
        stack.flip_in_place(k);
    }
    Checkpoint::new(stack)
}

/// Checkpoint of the first reading of `seq`, or of a rotation of it that
/// starts at a later flip `n`, whose first phase ends in a checkpoint shape.
/// Returns the rotation offset with the checkpoint.
pub fn find_checkpoint(seq: &FlipSequence) -> Result<(usize, Checkpoint)> {
    let first = checkpoint_of(seq);
    if let Ok(cp) = first {
        return Ok((0, cp));
    }
    let n = seq.n();
    for k in (1..seq.len()).filter(|&k| seq.flips()[k] == n) {
        if let Ok(cp) = checkpoint_of(&seq.rotated(k)?) {
            return Ok((k, cp));
        }
    }
    first.map(|cp| (0, cp))
}

/// Repeatedly flip so that the top pancake `t` lands directly above `1 - t`,
/// until no such flip exists. Each step adds one adjacency and breaks none.
pub fn greedy_adjacency_sort(stack: &SignedPerm) -> (FlipSequence, SignedPerm) {
    let n = stack.n();
    let mut s = stack.clone();
    let mut flips = FlipSequence::empty(n);
    greedy_run(&mut s, &mut flips);
    (flips, s)
}

pub(crate) fn greedy_run(s: &mut SignedPerm, out: &mut FlipSequence) {
    let n = s.n();
    let mut pos = vec![0usize; 2 * n + 1];
    let index = |v: i32| (v + n as i32) as usize;
    for (i, &v) in s.as_slice().iter().enumerate() {
        pos[index(v)] = i + 1;
        pos[index(-v)] = 0;
    }
    // a greedy step never breaks an adjacency, so n steps is a hard ceiling
    for _ in 0..n {
        let want = 1 - s.top();
        if want.unsigned_abs() as usize > n || want == 0 {
            return;
        }
        let j = pos[index(want)];
        if j < 2 {
            return;
        }
        let k = j - 1;
        s.flip_in_place(k);
        for (i, &v) in s.as_slice()[..k].iter().enumerate() {
            pos[index(v)] = i + 1;
            pos[index(-v)] = 0;
        }
        out.push(k);
    }
}

/// Number of phases (`n` separators) of a fortuitous sequence of size `n`.
pub fn phase_count(n: usize) -> usize {
    if n % 2 == 1 {
        3
    } else {
        2
    }
}

/// Rebuild `n s1 n s2 [n s3]` from its checkpoint.
///
/// `s1` is read off by sorting `-cp^-1` after one flip `n`; the remaining
/// phases continue from `cp` itself. The result must be as short as the
/// potential bound allows and must sort `-I_n`.
pub fn extract(cp: &Checkpoint) -> Result<FlipSequence> {
    extract_stack(&cp.stack)
}

pub(crate) fn extract_stack(cp: &SignedPerm) -> Result<FlipSequence> {
    let n = cp.n();
    let expected = lower_bound(n)?;
    let mut seq = FlipSequence::empty(n);

    let mut t = cp.invert().negate();
    t.flip_in_place(n);
    seq.push(n);
    greedy_run(&mut t, &mut seq);
    if !t.is_identity() {
        return Err(Error::ExtractionStuck {
            phase: 1,
            stack: t.to_string(),
        });
    }

    let mut t = cp.clone();
    let phases = phase_count(n);
    for phase in 2..=phases {
        t.flip_in_place(n);
        seq.push(n);
        greedy_run(&mut t, &mut seq);
        if seq.len() > expected {
            return Err(Error::WrongLength {
                len: seq.len(),
                expected,
            });
        }
        if phase == phases && !t.is_identity() {
            return Err(Error::ExtractionStuck {
                phase,
                stack: t.to_string(),
            });
        }
    }
    if seq.len() != expected {
        return Err(Error::WrongLength {
            len: seq.len(),
            expected,
        });
    }
    if !seq.sorts() {
        return Err(Error::DoesNotSort(n));
    }
    Ok(seq)
}

/// `f_n ∘ cp^-1 ∘ f_n`: the checkpoint of the sequence read with its phases
/// mirrored, `n s̃1 n s̃3 n s̃2` (odd) or `n s̃1 n s̃2` (even).
pub fn mirror_checkpoint(cp: &Checkpoint) -> Result<Checkpoint> {
    let n = cp.n();
    let fnn = SignedPerm::reversal(n, n)?;
    let h = fnn.compose(&cp.stack.invert())?.compose(&fnn)?;
    Checkpoint::new(h)
}

/// Split a sequence at each flip `n`: returns the inner segments `s1, s2, ...`
/// when the sequence starts with `n`, otherwise `None`.
pub fn split_phases(seq: &FlipSequence) -> Option<Vec<Vec<usize>>> {
    let n = seq.n();
    let flips = seq.flips();
    if flips.first() != Some(&n) {
        return None;
    }
    Some(flips[1..].split(|&k| k == n).map(|s| s.to_vec()).collect())
}

/// Greedy runs from the four stacks `-cp`, `cp^-1`, `-cp^-1` then flip `n`,
/// and `cp` then flip `n`; they must reproduce, respectively, `s̃1`, `s̃3`
/// (odd) or `s̃2` (even), `s1` and `s2`. Returns one message per disagreement.
pub fn cross_check(cp: &Checkpoint, seq: &FlipSequence) -> Vec<String> {
    let mut problems = Vec::new();
    let n = cp.n();
    let Some(phases) = split_phases(seq) else {
        return vec![format!("sequence {seq} does not begin with flip {n}")];
    };
    if phases.len() != phase_count(n) {
        return vec![format!(
            "expected {} phases, found {}",
            phase_count(n),
            phases.len()
        )];
    }
    let rev = |v: &Vec<usize>| v.iter().rev().copied().collect::<Vec<_>>();
    let last = phases.len() - 1;

    let mut a = cp.stack.invert().negate();
    a.flip_in_place(n);
    let mut b = cp.stack.clone();
    b.flip_in_place(n);
    let runs = [
        ("-f", cp.stack.negate(), rev(&phases[0])),
        ("f^-1", cp.stack.invert(), rev(&phases[last])),
        ("-f_n f^-1", a, phases[0].clone()),
        ("f_n f", b, phases[1].clone()),
    ];
    for (name, start, want) in runs {
        let (got, _) = greedy_adjacency_sort(&start);
        if !got.flips().starts_with(&want) {
            problems.push(format!(
                "greedy from {name} gave {got}, expected prefix {}",
                FlipSequence::new(n, want)
                    .map(|w| w.to_string())
                    .unwrap_or_default()
            ));
        }
    }
    problems
}
