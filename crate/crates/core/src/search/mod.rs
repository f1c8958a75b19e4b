//! Exhaustive depth-first searches for fortuitous sequences.
//!
//! Three searchers share the same scaffolding: a [`PartialPerm`] built up
//! with an undo journal, a node budget/deadline, and a result set that is
//! deduplicated and sorted lexicographically by flip list, so the output
//! does not depend on exploration order or on the number of workers.

mod hints;
mod palin;
pub mod partial;
mod patchwork;
mod triple;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::FlipSequence;

pub use hints::HintPreset;
pub use palin::search_palindromic_odd;
pub use partial::PartialPerm;
pub use patchwork::search_patchwork;
pub use triple::search_triple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Mode {
    PalindromicOdd,
    Triple,
    Patchwork,
}

impl Mode {
    pub fn keyword(self) -> &'static str {
        match self {
            Mode::PalindromicOdd => "palin",
            Mode::Triple => "triple",
            Mode::Patchwork => "patchwork",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Mode::PalindromicOdd, Mode::Triple, Mode::Patchwork]
            .into_iter()
            .find(|m| m.keyword() == s)
            .ok_or_else(|| Error::Parse(format!("unknown search mode '{s}'")))
    }
}

/// Extra conditions on the checkpoint `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    /// `f^-1 = -f`: the sequence is `(n s)^2`.
    Double,
    /// `f = -f_n ∘ f ∘ f_n`: palindromic with central flip `n-1`.
    PalCenterNminus1,
    /// `f = f_n ∘ f^-1 ∘ f_n`: palindromic with central flip `n`.
    PalCenterN,
}

impl Symmetry {
    pub fn keyword(self) -> &'static str {
        match self {
            Symmetry::Double => "double",
            Symmetry::PalCenterNminus1 => "pal-n1",
            Symmetry::PalCenterN => "pal-n",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Symmetry::Double,
            Symmetry::PalCenterNminus1,
            Symmetry::PalCenterN,
        ]
        .into_iter()
        .find(|m| m.keyword() == s)
        .ok_or_else(|| Error::Parse(format!("unknown symmetry '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Emit {
    #[default]
    First,
    All,
}

#[derive(Debug, Clone, Default)]
pub struct SearchConfig {
    pub symmetries: BTreeSet<Symmetry>,
    /// Values `f(i) = j` fixed before the search starts.
    pub hints: Vec<(i32, i32)>,
    pub emit: Emit,
    /// Wall-clock limit; the outcome is marked incomplete when it runs out.
    pub budget: Option<Duration>,
    /// Node limit, mostly useful for tests.
    pub max_nodes: Option<u64>,
}

impl SearchConfig {
    pub fn all() -> Self {
        Self {
            emit: Emit::All,
            ..Self::default()
        }
    }

    pub fn with_symmetry(mut self, s: Symmetry) -> Self {
        self.symmetries.insert(s);
        self
    }

    /// Adds the preset's forced values and the symmetry it is meant for.
    pub fn with_preset(mut self, preset: HintPreset, n: usize) -> Result<Self> {
        self.hints.extend(preset.hints(n)?);
        if let Some(s) = preset.symmetry() {
            self.symmetries.insert(s);
        }
        Ok(self)
    }

    pub fn has(&self, s: Symmetry) -> bool {
        self.symmetries.contains(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub mode: Mode,
    /// Verified sequences, sorted by flip list.
    pub sequences: Vec<FlipSequence>,
    /// False when the budget ran out before the search space was exhausted.
    pub complete: bool,
    pub nodes: u64,
}

pub fn search(mode: Mode, n: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    match mode {
        Mode::PalindromicOdd => search_palindromic_odd(n, config),
        Mode::Triple => search_triple(n, config),
        Mode::Patchwork => search_patchwork(n, config),
    }
}

/// `d(i) = sgn(i) (-1)^i`.
pub fn d(i: i32) -> i32 {
    let s = i.signum();
    if i % 2 == 0 {
        s
    } else {
        -s
    }
}

/// `f_n` as a map on signed positions: `i ↦ -(n+1-i)` for `i > 0`.
pub(crate) fn reflect(i: i32, n: usize) -> i32 {
    let n = n as i32;
    if i > 0 {
        i - n - 1
    } else {
        i + n + 1
    }
}

/// Shared stop flags for one search, possibly split across workers.
pub(crate) struct Control {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
    emit: Emit,
    stop: AtomicBool,
    timed_out: AtomicBool,
}

impl Control {
    pub(crate) fn new(config: &SearchConfig) -> Self {
        Self {
            deadline: config.budget.map(|b| Instant::now() + b),
            max_nodes: config.max_nodes,
            emit: config.emit,
            stop: AtomicBool::new(false),
            timed_out: AtomicBool::new(false),
        }
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn halt(&self, timeout: bool) {
        if timeout {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        self.stop.store(true, Ordering::Relaxed);
    }

    pub(crate) fn complete(&self) -> bool {
        !self.timed_out.load(Ordering::Relaxed)
    }
}

/// Per-worker counters and results.
pub(crate) struct Worker<'a> {
    pub(crate) control: &'a Control,
    pub(crate) nodes: u64,
    pub(crate) found: BTreeSet<Vec<usize>>,
}

impl<'a> Worker<'a> {
    pub(crate) fn new(control: &'a Control) -> Self {
        Self {
            control,
            nodes: 0,
            found: BTreeSet::new(),
        }
    }

    /// Count a node; true when the search must unwind.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.control.stopped() {
            return true;
        }
        if self.control.max_nodes.is_some_and(|m| self.nodes > m) {
            self.control.halt(true);
            return true;
        }
        if self.nodes % 512 == 0 && self.control.deadline.is_some_and(|d| Instant::now() >= d) {
            self.control.halt(true);
            return true;
        }
        false
    }

    pub(crate) fn emit(&mut self, flips: Vec<usize>) {
        self.found.insert(flips);
        if self.control.emit == Emit::First {
            self.control.halt(false);
        }
    }
}

pub(crate) fn finish(
    n: usize,
    mode: Mode,
    control: &Control,
    workers: Vec<Worker<'_>>,
) -> SearchOutcome {
    let mut found = BTreeSet::new();
    let mut nodes = 0;
    for w in workers {
        nodes += w.nodes;
        found.extend(w.found);
    }
    let mut sequences: Vec<FlipSequence> = found
        .into_iter()
        .map(|f| FlipSequence::new(n, f).expect("searchers emit flips in 1..=n"))
        .collect();
    if control.emit == Emit::First {
        sequences.truncate(1);
    }
    SearchOutcome {
        n,
        mode,
        sequences,
        complete: control.complete(),
        nodes,
    }
}
