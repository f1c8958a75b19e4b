//! Block/clan decomposition and the integer potential function.
//!
//! A pancake scores 3 inside a block, 1 at the end of a block, -1 at the end
//! of a clan, -3 inside a clan and 0 as a singleton; the top pancake counts
//! double. With the plate enabled, the plate joins a block under a bottom
//! `n` or a clan under a bottom `1` and contributes +1 or -1 itself.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::SignedPerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundaryKind {
    Adjacency,
    AntiAdjacency,
    Neither,
}

impl BoundaryKind {
    /// Kind of the boundary with `upper` directly above `lower`.
    #[inline]
    pub fn between(upper: i32, lower: i32) -> Self {
        if lower == upper + 1 {
            BoundaryKind::Adjacency
        } else if lower == upper - 1 {
            BoundaryKind::AntiAdjacency
        } else {
            BoundaryKind::Neither
        }
    }

    /// Kind of the boundary between a bottom pancake and the plate.
    #[inline]
    pub fn plate(bottom: i32, n: usize) -> Self {
        if bottom == n as i32 {
            BoundaryKind::Adjacency
        } else if bottom == 1 {
            BoundaryKind::AntiAdjacency
        } else {
            BoundaryKind::Neither
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieceKind {
    Block,
    Clan,
    Singleton,
}

/// A maximal run of pancakes. `start` is the 1-indexed position of its top
/// pancake; `on_plate` is set when the plate boundary extends it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub kind: PieceKind,
    pub start: usize,
    pub len: usize,
    pub on_plate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// `boundaries[i]` lies between positions `i + 1` and `i + 2`.
    pub boundaries: Vec<BoundaryKind>,
    pub plate: BoundaryKind,
    pub pieces: Vec<Piece>,
}

pub fn decompose(stack: &SignedPerm, with_plate: bool) -> Decomposition {
    let s = stack.as_slice();
    let n = s.len();
    let boundaries: Vec<_> = s
        .windows(2)
        .map(|w| BoundaryKind::between(w[0], w[1]))
        .collect();
    let plate = if with_plate {
        BoundaryKind::plate(s[n - 1], n)
    } else {
        BoundaryKind::Neither
    };

    let mut pieces = Vec::new();
    let mut start = 0;
    while start < n {
        let kind = if start + 1 < n {
            boundaries[start]
        } else {
            plate
        };
        let mut end = start + 1;
        if kind != BoundaryKind::Neither {
            while end < n && boundaries[end - 1] == kind {
                end += 1;
            }
        }
        let on_plate =
            end == n && plate != BoundaryKind::Neither && (kind == plate || end - start == 1);
        let kind = match (kind, on_plate, plate) {
            (BoundaryKind::Adjacency, _, _) => PieceKind::Block,
            (BoundaryKind::AntiAdjacency, _, _) => PieceKind::Clan,
            (_, true, BoundaryKind::Adjacency) => PieceKind::Block,
            (_, true, BoundaryKind::AntiAdjacency) => PieceKind::Clan,
            _ => PieceKind::Singleton,
        };
        pieces.push(Piece {
            kind,
            start: start + 1,
            len: end - start,
            on_plate,
        });
        start = end;
    }
    Decomposition {
        boundaries,
        plate,
        pieces,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialBreakdown {
    pub per_pancake: Vec<i32>,
    pub plate: i32,
    pub total: i32,
}

impl PotentialBreakdown {
    /// Stack on one row, potentials under it, total beneath.
    pub fn render(&self, stack: &SignedPerm, with_plate: bool) -> String {
        let mut top: Vec<String> = stack.as_slice().iter().map(|v| v.to_string()).collect();
        let mut bottom: Vec<String> = self.per_pancake.iter().map(|v| v.to_string()).collect();
        if with_plate {
            top.push("plate".into());
            bottom.push(self.plate.to_string());
        }
        let widths: Vec<usize> = top
            .iter()
            .zip(&bottom)
            .map(|(a, b)| a.len().max(b.len()))
            .collect();
        let mut out = String::new();
        for (row, open, close) in [(&top, "[", "]"), (&bottom, " ", " ")] {
            out.push_str(open);
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{cell:>w$}", w = widths[i]);
            }
            out.push_str(close);
            let trimmed = out.trim_end().len();
            out.truncate(trimmed);
            out.push('\n');
        }
        let _ = writeln!(out, "total {}", self.total);
        out
    }
}

#[inline]
fn score(above: BoundaryKind, below: BoundaryKind) -> i32 {
    use BoundaryKind::*;
    match (above, below) {
        (Adjacency, Adjacency) => 3,
        (AntiAdjacency, AntiAdjacency) => -3,
        (Adjacency, _) | (_, Adjacency) => 1,
        (AntiAdjacency, _) | (_, AntiAdjacency) => -1,
        _ => 0,
    }
}

/// Potential of the pancake at 0-indexed `pos` in the stack read through `at`.
#[inline]
fn pancake_at(at: &impl Fn(usize) -> i32, n: usize, pos: usize, with_plate: bool) -> i32 {
    let v = at(pos);
    let above = if pos == 0 {
        BoundaryKind::Neither
    } else {
        BoundaryKind::between(at(pos - 1), v)
    };
    let below = if pos + 1 < n {
        BoundaryKind::between(v, at(pos + 1))
    } else if with_plate {
        BoundaryKind::plate(v, n)
    } else {
        BoundaryKind::Neither
    };
    let p = score(above, below);
    if pos == 0 {
        2 * p
    } else {
        p
    }
}

#[inline]
fn plate_score(bottom: i32, n: usize) -> i32 {
    match BoundaryKind::plate(bottom, n) {
        BoundaryKind::Adjacency => 1,
        BoundaryKind::AntiAdjacency => -1,
        BoundaryKind::Neither => 0,
    }
}

/// Full breakdown. A one-pancake stack has no meaningful plate, so the plate
/// is ignored when `n == 1`.
pub fn potential(stack: &SignedPerm, with_plate: bool) -> PotentialBreakdown {
    let s = stack.as_slice();
    let n = s.len();
    let with_plate = with_plate && n >= 2;
    let at = |i: usize| s[i];
    let per_pancake: Vec<i32> = (0..n).map(|i| pancake_at(&at, n, i, with_plate)).collect();
    let plate = if with_plate {
        plate_score(s[n - 1], n)
    } else {
        0
    };
    let total = per_pancake.iter().sum::<i32>() + plate;
    PotentialBreakdown {
        per_pancake,
        plate,
        total,
    }
}

pub fn total(stack: &SignedPerm, with_plate: bool) -> i32 {
    potential(stack, with_plate).total
}

/// `potential(flip(stack, k)) - potential(stack)`, touching only the pancakes
/// whose neighbourhood changes. Boundaries strictly inside the flipped
/// prefix survive the flip with their kind intact.
pub fn flip_delta(stack: &SignedPerm, k: usize, with_plate: bool) -> Result<i32> {
    let s = stack.as_slice();
    let n = s.len();
    if k == 0 || k > n {
        return Err(Error::FlipOutOfRange { k, n });
    }
    let with_plate = with_plate && n >= 2;
    let old = |i: usize| s[i];
    let new = |i: usize| if i < k { -s[k - 1 - i] } else { s[i] };

    let mut positions = [0usize, k - 1, k];
    let mut count = if k < n { 3 } else { 2 };
    if k == 1 {
        positions = [0, 1, 1];
        count = if n > 1 { 2 } else { 1 };
    }
    let mut delta = 0;
    for &pos in &positions[..count] {
        delta += pancake_at(&new, n, pos, with_plate) - pancake_at(&old, n, pos, with_plate);
    }
    if with_plate && k == n {
        delta += plate_score(new(n - 1), n) - plate_score(old(n - 1), n);
    }
    Ok(delta)
}

/// `floor((3n + 3) / 2)`, the least number of flips that can sort `-I_n`.
pub fn lower_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::SizeTooSmall { n, min: 2 });
    }
    Ok((3 * n + 3) / 2)
}
