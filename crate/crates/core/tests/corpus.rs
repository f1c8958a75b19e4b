use pancake_core::classify::classify;
use pancake_core::format::parse_sequence_file;

const CORPUS: &str = include_str!("../data/known_sequences.txt");

#[test]
fn every_known_sequence_carries_its_claims() {
    let entries = parse_sequence_file(CORPUS).unwrap();
    assert!(entries.len() >= 50);
    let mut bad = Vec::new();
    for e in &entries {
        let cert = classify(&e.sequence);
        let problems = e.claims.check(&cert);
        if !problems.is_empty() || !cert.failures.is_empty() {
            bad.push(format!(
                "line {} n={}: {:?} {:?} classes={:?}",
                e.line, cert.n, problems, cert.failures, cert.classes
            ));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
