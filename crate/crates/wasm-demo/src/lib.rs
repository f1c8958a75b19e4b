//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain strings (JSON on success) so the
//! page needs no generated type glue beyond the functions themselves. The
//! `*_json` functions do the work and are what the native tests call.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use pancake_core::classify::{classify, Certificate};
use pancake_core::format::{format_sequence, parse_sequence, parse_sequence_file, parse_stack};
use pancake_core::patterns::generate;
use pancake_core::potential::{potential, total};
use pancake_core::SignedPerm;

#[derive(Serialize)]
struct PotentialView {
    stack: Vec<i32>,
    per_pancake: Vec<i32>,
    plate: i32,
    total: i32,
    text: String,
}

#[derive(Serialize)]
struct Frame {
    /// Flip applied to reach this stack; 0 for the start.
    flip: usize,
    stack: Vec<i32>,
    potential: i32,
}

#[derive(Serialize)]
struct Animation {
    n: usize,
    sequence: String,
    length: usize,
    bound: Option<usize>,
    frames: Vec<Frame>,
}

#[derive(Serialize)]
struct Verdict {
    line: usize,
    pass: bool,
    problems: Vec<String>,
    certificate: Certificate,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn potential_json(stack: &str, plate: bool) -> Result<String, String> {
    let s = parse_stack(stack).map_err(|e| e.to_string())?;
    let b = potential(&s, plate);
    to_json(&PotentialView {
        text: b.render(&s, plate),
        stack: s.as_slice().to_vec(),
        per_pancake: b.per_pancake,
        plate: b.plate,
        total: b.total,
    })
}

/// The stacks visited while a sequence sorts `-I_n`. `source` is either a
/// size, which picks the pattern-family sequence, or a sequence literal.
pub fn animation_json(source: &str) -> Result<String, String> {
    let source = source.trim();
    let seq = match source.parse::<usize>() {
        Ok(n) => generate(n),
        Err(_) => parse_sequence(source),
    }
    .map_err(|e| e.to_string())?;
    let n = seq.n();
    let mut stack = SignedPerm::minus_identity(n);
    let mut frames = vec![Frame {
        flip: 0,
        stack: stack.as_slice().to_vec(),
        potential: total(&stack, true),
    }];
    for &k in seq.flips() {
        stack.flip_in_place(k);
        frames.push(Frame {
            flip: k,
            stack: stack.as_slice().to_vec(),
            potential: total(&stack, true),
        });
    }
    let cert = classify(&seq);
    to_json(&Animation {
        n,
        sequence: format_sequence(&seq),
        length: seq.len(),
        bound: cert.bound,
        frames,
    })
}

/// One verdict per sequence in `text`, which uses the sequence-file format.
pub fn verify_json(text: &str) -> Result<String, String> {
    let entries = parse_sequence_file(text).map_err(|e| e.to_string())?;
    let verdicts: Vec<Verdict> = entries
        .into_iter()
        .map(|e| {
            let certificate = classify(&e.sequence);
            let mut problems = Vec::new();
            if !certificate.sorts {
                problems.push(format!("does not sort -I_{}", certificate.n));
            }
            problems.extend(e.claims.check(&certificate));
            Verdict {
                line: e.line,
                pass: problems.is_empty(),
                problems,
                certificate,
            }
        })
        .collect();
    to_json(&verdicts)
}

#[wasm_bindgen]
pub fn potential_view(stack: &str, plate: bool) -> Result<String, JsError> {
    potential_json(stack, plate).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn animate(source: &str) -> Result<String, JsError> {
    animation_json(source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(text: &str) -> Result<String, JsError> {
    verify_json(text).map_err(|e| JsError::new(&e))
}
