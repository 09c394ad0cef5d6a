//! Acceptance for the serialization surface: parse∘serialize identity on a
//! corpus including extraction outputs, and deterministic SVG bytes.

use plof::extraction::extract_f;
use plof::thompson::{f0, f1, generator};
use plof::words::Word;
use plof::GenSet;
use plof_cli::mapfile::MapFile;
use plof_cli::svg;

#[test]
fn criterion_9_round_trip_and_deterministic_svg() {
    // corpus: the standard pair, the generator family, and every pair the
    // extraction pipeline produces along the way
    let mut corpus: Vec<(String, plof::PLMap)> = vec![
        ("f0".to_string(), f0()),
        ("f1".to_string(), f1()),
    ];
    for i in 2..=5usize {
        corpus.push((format!("g{}", i), generator(i)));
    }
    let trace = extract_f(&GenSet::pair(f0(), f1()), Some(&Word::letter(1, 1)), 8).unwrap();
    for s in &trace.steps {
        corpus.push((format!("step{}a", s.step), s.pair.0.clone()));
        corpus.push((format!("step{}b", s.step), s.pair.1.clone()));
    }
    corpus.push(("final0".to_string(), trace.final_pair.0.clone()));
    corpus.push(("final1".to_string(), trace.final_pair.1.clone()));

    let file = MapFile::from_named(&corpus);
    let text = file.serialize();
    let back = MapFile::parse(&text).unwrap();
    assert_eq!(back, file, "parse(serialize(file)) must be the same file");
    assert_eq!(back.serialize(), text, "serialization must be byte-stable");
    let realized = back.realize_all().unwrap();
    for ((name, original), (rname, reparsed)) in corpus.iter().zip(realized.iter()) {
        assert_eq!(name, rname);
        assert_eq!(original, reparsed, "map {} changed in the round trip", name);
    }

    // deterministic SVG bytes for fixed inputs and size
    let drawn: Vec<(String, plof::PLMap)> = corpus[..6].to_vec();
    let a = svg::render(&drawn, 640, 480);
    let b = svg::render(&drawn, 640, 480);
    assert_eq!(a.as_bytes(), b.as_bytes());

    println!(
        "[acceptance] criterion 9: PASS — {} maps round-trip byte-stably; SVG bytes deterministic",
        corpus.len()
    );
}
