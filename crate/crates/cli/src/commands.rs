//! The five commands, as pure functions from inputs to an exit code plus
//! output text, so the whole surface is testable in-process.
//!
//! Exit codes: 0 success (for `word-eq`: the words are equal); 1 unequal
//! words; 2 file or syntax errors; 3 semantically invalid maps or names;
//! 4 the one-sided approach hypothesis was not verified; 5 a conjugate or
//! word search exhausted its depth; 6 the verified pair commutes; 7 a
//! presentation relation fails.

use plof::extraction::extract_f;
use plof::thompson::{certify_f_pair, Verdict};
use plof::words::equal_in_f;
use plof::{Error, GenSet};

use crate::mapfile::MapFile;
use crate::svg;
use crate::trace::TraceFile;
use crate::wordsyntax::parse_word;
use crate::CmdError;

pub struct Outcome {
    pub code: i32,
    pub output: String,
    /// Payload destined for a file (`--out`): an SVG document or a trace.
    pub artifact: Option<String>,
}

impl Outcome {
    fn text(code: i32, output: String) -> Outcome {
        Outcome {
            code,
            output,
            artifact: None,
        }
    }
}

fn fail(err: CmdError) -> Outcome {
    Outcome::text(err.exit_code(), format!("error: {}", err.message()))
}

/// `analyze`: orbitals of the generating set, with full classification when
/// exactly two generators are selected.
pub fn run_analyze(input: &str, names: &[String]) -> Outcome {
    let file = match MapFile::parse(input) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let selected = if names.is_empty() {
        file.realize_all()
    } else {
        file.realize_named(names)
    };
    let maps = match selected {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let mut out = String::new();
    let list: Vec<String> = maps.iter().map(|(n, _)| n.clone()).collect();
    out.push_str(&format!(
        "{} generator{}: {}\n",
        maps.len(),
        if maps.len() == 1 { "" } else { "s" },
        list.join(", ")
    ));
    let gens = GenSet::new(maps.iter().map(|(_, m)| m.clone()).collect());
    let orbitals = gens.orbitals();
    out.push_str(&format!(
        "{} orbital{}\n",
        orbitals.len(),
        if orbitals.len() == 1 { "" } else { "s" }
    ));
    if gens.len() == 2 {
        match gens.orbital_table() {
            Ok(table) => {
                for info in table {
                    out.push_str(&format!("  {}\n", info));
                }
            }
            Err(e) => return Outcome::text(3, format!("error: {}", e)),
        }
    } else {
        for orbital in &orbitals {
            out.push_str(&format!("  {}\n", orbital));
        }
    }
    out.push_str(&format!("alpha = {}", gens.alpha()));
    for i in 0..gens.len() {
        out.push_str(&format!(", beta{} = {}", i, gens.beta(i)));
    }
    out.push('\n');
    Outcome::text(0, out)
}

/// `verify`: certificate verdict for a named pair.
pub fn run_verify(input: &str, p: &str, q: &str) -> Outcome {
    let file = match MapFile::parse(input) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let maps = match file.realize_named(&[p.to_string(), q.to_string()]) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let cert = certify_f_pair(&maps[0].1, &maps[1].1);
    let mut out = format!("{}\n", cert.verdict);
    let code = match cert.verdict {
        Verdict::IsomorphicToF => {
            out.push_str(&format!(
                "the pair ({}, {}) generates a copy of Thompson's group F\n",
                p, q
            ));
            0
        }
        Verdict::Commuting => 6,
        Verdict::RelationsFail => {
            if let Some(tag) = cert.failing_relation {
                out.push_str(&format!("failing relation: {}\n", tag));
            }
            7
        }
    };
    Outcome::text(code, out)
}

/// `word-eq`: exact equality of two words in F.
pub fn run_word_eq(u: &str, v: &str) -> Outcome {
    let (wu, wv) = match (parse_word(u), parse_word(v)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    if equal_in_f(&wu, &wv) {
        Outcome::text(0, "equal\n".to_string())
    } else {
        Outcome::text(1, "not equal\n".to_string())
    }
}

/// `extract`: run the pipeline on all maps in the file; the artifact is the
/// full trace as JSON.
pub fn run_extract(input: &str, witness: Option<&str>, depth: usize) -> Outcome {
    let file = match MapFile::parse(input) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let maps = match file.realize_all() {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let witness_word = match witness.map(parse_word).transpose() {
        Ok(w) => w,
        Err(e) => return fail(e),
    };
    let gens = GenSet::new(maps.iter().map(|(_, m)| m.clone()).collect());
    match extract_f(&gens, witness_word.as_ref(), depth) {
        Ok(trace) => {
            let mut out = String::new();
            out.push_str(&format!(
                "witness {} is one-sided at {} of orbital {}\n",
                trace.witness, trace.endpoint, trace.orbital
            ));
            out.push_str(&format!(
                "seed threshold {} (exponent {}), conjugator {}\n",
                trace.seed.threshold,
                trace.seed.exponent,
                trace
                    .seed
                    .conjugator
                    .as_ref()
                    .map(|w| w.to_string())
                    .unwrap_or_else(|| "1".to_string()),
            ));
            for s in &trace.steps {
                out.push_str(&format!("{}\n", s));
            }
            out.push_str(&format!("certificate: {}\n", trace.certificate.verdict));
            let artifact = TraceFile::from_trace(&trace).serialize();
            Outcome {
                code: 0,
                output: out,
                artifact: Some(artifact),
            }
        }
        Err(Error::HypothesisNotVerified(d)) => Outcome::text(
            4,
            format!(
                "hypothesis not verified at search depth {} (not a disproof)\n",
                d
            ),
        ),
        Err(Error::SearchExhausted(d)) | Err(Error::NotFound(d)) => Outcome::text(
            5,
            format!("search exhausted at depth {}; retry with --depth\n", d),
        ),
        Err(Error::IndexOutOfRange(g, n)) => Outcome::text(
            3,
            format!("witness refers to g{} but the file has {} maps\n", g, n),
        ),
        Err(e) => Outcome::text(1, format!("extraction failed: {}\n", e)),
    }
}

/// `render`: SVG of the named maps at the requested size.
pub fn run_render(input: &str, names: &[String], width: u32, height: u32) -> Outcome {
    let file = match MapFile::parse(input) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let selected = if names.is_empty() {
        file.realize_all()
    } else {
        file.realize_named(names)
    };
    let maps = match selected {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let svg = svg::render(&maps, width, height);
    Outcome {
        code: 0,
        output: format!("rendered {} map(s)\n", maps.len()),
        artifact: Some(svg),
    }
}

/// Parses a `WIDTHxHEIGHT` size argument.
pub fn parse_size(s: &str) -> Result<(u32, u32), CmdError> {
    let bad = || CmdError::Parse(format!("bad size '{}', expected WIDTHxHEIGHT", s));
    let (w, h) = s.split_once('x').ok_or_else(bad)?;
    let w: u32 = w.parse().map_err(|_| bad())?;
    let h: u32 = h.parse().map_err(|_| bad())?;
    if w < 120 || h < 120 {
        return Err(CmdError::Parse("size must be at least 120x120".into()));
    }
    Ok((w, h))
}
