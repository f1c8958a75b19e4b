//! Text formats for stacks, flip sequences and sequence files.
//!
//! Stack literal: `[v1 v2 ... vn]`, signed integers, top first. Separators
//! may be spaces, commas or `|`; a minus sign also starts a new number, so
//! `[-20-21 1]` reads as three values.
//!
//! Sequence literal: an optional `n=<N>` followed by one or more groups
//! `(f1 f2 ...)`, each optionally raised to a power `^k`. Flips may be
//! separated by spaces or commas. Without `n=`, the size is the first flip.
//!
//! Sequence file: one sequence literal per line, optionally followed by
//! `=>` and a list of claims. A claim is a class keyword (`sorting`, `odd`,
//! `generalized-odd`, `even`, `palindromic`, `triple`, `double`), a negated
//! keyword (`!odd`), `optimal`, or `central=<c>`. `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::classify::{Certificate, Class};
use crate::error::{Error, Result};
use crate::perm::{FlipSequence, SignedPerm};

fn parse_ints(body: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let flush = |cur: &mut String, out: &mut Vec<i64>| -> Result<()> {
        if !cur.is_empty() {
            if cur == "-" || cur == "+" {
                return Err(Error::Parse("dangling sign".into()));
            }
            out.push(
                cur.parse()
                    .map_err(|_| Error::Parse(format!("bad number '{cur}'")))?,
            );
            cur.clear();
        }
        Ok(())
    };
    for ch in body.chars() {
        match ch {
            '0'..='9' => cur.push(ch),
            '-' | '+' => {
                flush(&mut cur, &mut out)?;
                cur.push(ch);
            }
            c if c.is_whitespace() || c == ',' || c == '|' => flush(&mut cur, &mut out)?,
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    flush(&mut cur, &mut out)?;
    Ok(out)
}

pub fn parse_stack(text: &str) -> Result<SignedPerm> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("stack must be written [v1 ... vn], got '{t}'")))?;
    let values = parse_ints(inner)?
        .into_iter()
        .map(|v| i32::try_from(v).map_err(|_| Error::Parse(format!("value {v} too large"))))
        .collect::<Result<Vec<_>>>()?;
    SignedPerm::new(values)
}

pub fn parse_sequence(text: &str) -> Result<FlipSequence> {
    let mut rest = text.trim();
    let mut n = None;
    if let Some(r) = rest.strip_prefix("n=") {
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        let size: usize = r[..end]
            .parse()
            .map_err(|_| Error::Parse("expected a size after 'n='".into()))?;
        n = Some(size);
        rest = r[end..].trim_start();
    }
    let mut flips = Vec::new();
    let mut groups = 0;
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at '{rest}'")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| Error::Parse("missing ')'".into()))?;
        let mut group = Vec::new();
        for v in parse_ints(&body_start[..close])? {
            if v <= 0 {
                return Err(Error::Parse(format!("flip sizes are positive, got {v}")));
            }
            group.push(v as usize);
        }
        rest = body_start[close + 1..].trim_start();
        let mut times = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let r = r.trim_start();
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            times = r[..end]
                .parse()
                .map_err(|_| Error::Parse("expected an exponent after '^'".into()))?;
            rest = r[end..].trim_start();
        }
        for _ in 0..times {
            flips.extend_from_slice(&group);
        }
        groups += 1;
    }
    if groups == 0 {
        return Err(Error::Parse("expected a sequence '(f1 f2 ...)'".into()));
    }
    match n {
        Some(n) => FlipSequence::new(n, flips),
        None => FlipSequence::from_flips(flips),
    }
}

/// Canonical text: `(f1 f2 ...)`, prefixed by `n=<N> ` unless the size is
/// the first flip.
pub fn format_sequence(seq: &FlipSequence) -> String {
    if seq.flips().first() == Some(&seq.n()) {
        seq.to_string()
    } else {
        format!("n={} {}", seq.n(), seq)
    }
}

pub fn format_stack(stack: &SignedPerm) -> String {
    stack.to_string()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Claims {
    pub classes: BTreeSet<Class>,
    pub excluded: BTreeSet<Class>,
    pub optimal: bool,
    pub central: Option<usize>,
}

impl Claims {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
            && self.excluded.is_empty()
            && !self.optimal
            && self.central.is_none()
    }

    /// One message per claim the certificate contradicts.
    pub fn check(&self, cert: &Certificate) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.classes {
            if !cert.has(*c) {
                out.push(format!("claimed class {c} does not hold"));
            }
        }
        for c in &self.excluded {
            if cert.has(*c) {
                out.push(format!("class {c} holds but was excluded"));
            }
        }
        if self.optimal && !cert.optimal() {
            out.push(format!(
                "length {} is not the lower bound {}",
                cert.length,
                cert.bound.map_or("-".into(), |b| b.to_string())
            ));
        }
        if let Some(c) = self.central {
            if cert.central_flip() != Some(c) {
                out.push(format!(
                    "central flip is {:?}, claimed {c}",
                    cert.central_flip()
                ));
            }
        }
        out
    }
}

impl std::fmt::Display for Claims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        parts.extend(self.excluded.iter().map(|c| format!("!{c}")));
        if self.optimal {
            parts.push("optimal".into());
        }
        if let Some(c) = self.central {
            parts.push(format!("central={c}"));
        }
        f.write_str(&parts.join(" "))
    }
}

pub fn parse_claims(text: &str) -> Result<Claims> {
    let mut claims = Claims::default();
    for word in text.split_whitespace() {
        if word == "optimal" {
            claims.optimal = true;
        } else if let Some(c) = word.strip_prefix("central=") {
            claims.central = Some(
                c.parse()
                    .map_err(|_| Error::Parse(format!("bad central flip '{c}'")))?,
            );
        } else if let Some(c) = word.strip_prefix('!') {
            claims.excluded.insert(c.parse()?);
        } else {
            claims.classes.insert(word.parse()?);
        }
    }
    Ok(claims)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceEntry {
    /// 1-indexed line number in the source text.
    pub line: usize,
    pub sequence: FlipSequence,
    pub claims: Claims,
}

impl SequenceEntry {
    pub fn to_line(&self) -> String {
        let mut s = format_sequence(&self.sequence);
        if !self.claims.is_empty() {
            let _ = write!(s, " => {}", self.claims);
        }
        s
    }
}

pub fn parse_sequence_file(text: &str) -> Result<Vec<SequenceEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |e: Error| Error::Parse(format!("line {}: {}", i + 1, strip_prefix(&e)));
        let (body, claims) = match line.split_once("=>") {
            Some((b, c)) => (b, parse_claims(c).map_err(at)?),
            None => (line, Claims::default()),
        };
        out.push(SequenceEntry {
            line: i + 1,
            sequence: parse_sequence(body).map_err(at)?,
            claims,
        });
    }
    Ok(out)
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::Parse(m) => m.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stacks() {
        let s = parse_stack("[-20-21|6  7 -9 1 2 -3 4 5 8 10 11 12 13 14 15 16 17 18 19]").unwrap();
        assert_eq!(s.as_slice()[..3], [-20, -21, 6]);
        assert_eq!(format_stack(&parse_stack("[ 1, -2 ]").unwrap()), "[1 -2]");
        assert!(parse_stack("1 2").is_err());
        assert!(parse_stack("[1 1]").is_err());
        assert!(parse_stack("[1 x]").is_err());
        assert!(parse_stack("[1 -]").is_err());
    }

    #[test]
    fn sequences() {
        let s = parse_sequence("(3 2)^3").unwrap();
        assert_eq!(s.flips(), &[3, 2, 3, 2, 3, 2]);
        assert_eq!(s.n(), 3);
        let s = parse_sequence("(19, 14, 7, 4)").unwrap();
        assert_eq!(s.flips(), &[19, 14, 7, 4]);
        let s = parse_sequence("n=5 (2 3)(1)^2").unwrap();
        assert_eq!((s.n(), s.flips()), (5, &[2, 3, 1, 1][..]));
        assert_eq!(format_sequence(&s), "n=5 (2 3 1 1)");
        assert_eq!(parse_sequence(&format_sequence(&s)).unwrap(), s);
        assert_eq!(
            format_sequence(&parse_sequence("(3 2)^3").unwrap()),
            "(3 2 3 2 3 2)"
        );
        assert!(parse_sequence("n=3 ()").unwrap().is_empty());
        assert!(parse_sequence("()").is_err());
        assert!(parse_sequence("(3 4)").is_err());
        assert!(parse_sequence("(3 0)").is_err());
        assert!(parse_sequence("3 2").is_err());
        assert!(parse_sequence("(3 2").is_err());
        assert!(parse_sequence("").is_err());
    }

    #[test]
    fn files() {
        let text =
            "# header\n\n(2 1)^2 => even double optimal\n(3 2)^3 => odd !even central=2 # tail\n";
        let entries = parse_sequence_file(text).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].line, 3);
        assert!(entries[0].claims.optimal);
        assert_eq!(entries[1].claims.central, Some(2));
        assert!(entries[1].claims.excluded.contains(&Class::EvenFortuitous));
        assert_eq!(entries[1].to_line(), "(3 2 3 2 3 2) => odd !even central=2");
        let again = parse_sequence_file(&entries[1].to_line()).unwrap();
        assert_eq!(again[0].sequence, entries[1].sequence);
        assert_eq!(again[0].claims, entries[1].claims);

        let err = parse_sequence_file("(2 1)\n(2 3)\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(parse_sequence_file("(2 1) => shiny").is_err());
    }
}
