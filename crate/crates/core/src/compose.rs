//! Splicing two fortuitous sequences into one for a larger stack.
//!
//! The splice is done on checkpoints: the smaller checkpoint, minus its
//! bottom pancake 1, is renumbered and put in place of the top piece of the
//! other one. The sequence is then re-derived by extraction.

use crate::canonical::{extract, find_checkpoint, Checkpoint};
use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};

fn shift(v: i32, by: i32) -> i32 {
    v.signum() * (v.abs() + by)
}

/// Odd splice: `a` (size `n1`) replaces the top clan `(-x, -x-1)` of `b`'s
/// checkpoint. Pancakes `2..n1` of `a` become `x..x+n1-2`, pancakes of `b`
/// from `x+2` up move by `n1-3`, and the rest of `b` is kept.
pub fn compose_odd_checkpoint(a: &Checkpoint, b: &Checkpoint) -> Result<Checkpoint> {
    let (n1, n2) = (a.n(), b.n());
    if n1 % 2 == 0 || n2 % 2 == 0 {
        return Err(Error::ShapeMismatch(format!(
            "odd splice needs odd sizes, got {n1} and {n2}"
        )));
    }
    let sb = b.stack.as_slice();
    let x = -sb[0];
    if n2 < 3 || x < 2 || sb[1] != -x - 1 {
        return Err(Error::ShapeMismatch(format!(
            "top piece of {} is not a clan (-x, -x-1)",
            b.stack
        )));
    }
    let mut image: Vec<i32> = a.stack.as_slice()[..n1 - 1]
        .iter()
        .map(|&v| shift(v, x - 2))
        .collect();
    image.extend(sb[2..].iter().map(|&v| {
        if v.abs() >= x + 2 {
            shift(v, n1 as i32 - 3)
        } else {
            v
        }
    }));
    Checkpoint::new(SignedPerm::new(image)?)
}

/// Even splice: `a` (size `n1`) replaces the top singleton `-n2` of `b`'s
/// checkpoint, its pancakes `2..n1` renumbered `n2..n1+n2-2`.
pub fn compose_even_checkpoint(a: &Checkpoint, b: &Checkpoint) -> Result<Checkpoint> {
    let (n1, n2) = (a.n(), b.n());
    if n1 % 2 == 1 || n2 % 2 == 1 {
        return Err(Error::ShapeMismatch(format!(
            "even splice needs even sizes, got {n1} and {n2}"
        )));
    }
    let sb = b.stack.as_slice();
    if sb[0] != -(n2 as i32) {
        return Err(Error::ShapeMismatch(format!(
            "top of {} is not -{n2}",
            b.stack
        )));
    }
    let mut image: Vec<i32> = a.stack.as_slice()[..n1 - 1]
        .iter()
        .map(|&v| shift(v, n2 as i32 - 2))
        .collect();
    image.extend_from_slice(&sb[1..]);
    Checkpoint::new(SignedPerm::new(image)?)
}

pub fn compose_odd(a: &FlipSequence, b: &FlipSequence) -> Result<FlipSequence> {
    let (_, ca) = find_checkpoint(a)?;
    let (_, cb) = find_checkpoint(b)?;
    extract(&compose_odd_checkpoint(&ca, &cb)?)
}

pub fn compose_even(a: &FlipSequence, b: &FlipSequence) -> Result<FlipSequence> {
    let (_, ca) = find_checkpoint(a)?;
    let (_, cb) = find_checkpoint(b)?;
    extract(&compose_even_checkpoint(&ca, &cb)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_sequence, parse_stack};

    fn s(t: &str) -> FlipSequence {
        parse_sequence(t).unwrap()
    }

    #[test]
    fn degenerate_splices_are_neutral() {
        let fifteen = s("(15 10 4 6 14 6 4 10)^3");
        assert_eq!(compose_odd(&s("(3 2)^3"), &fifteen).unwrap(), fifteen);
        assert_eq!(
            compose_odd(&s("(3 2)^3"), &s("(3 2)^3")).unwrap(),
            s("(3 2)^3")
        );
        assert_eq!(
            compose_even(&s("(2 1)^2"), &s("(2 1)^2")).unwrap(),
            s("(2 1)^2")
        );
    }

    #[test]
    fn shape_errors() {
        let a = Checkpoint::new(parse_stack("[-2 -3 1]").unwrap()).unwrap();
        let odd_block = Checkpoint::new(parse_stack("[2 3 1]").unwrap()).unwrap();
        assert!(matches!(
            compose_odd_checkpoint(&a, &odd_block),
            Err(Error::ShapeMismatch(_))
        ));
        let even = Checkpoint::new(parse_stack("[-2 1]").unwrap()).unwrap();
        assert!(matches!(
            compose_odd_checkpoint(&even, &a),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            compose_even_checkpoint(&a, &even),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
