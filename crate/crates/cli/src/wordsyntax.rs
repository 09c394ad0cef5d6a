//! The word grammar: whitespace-separated terms composing left to right,
//! each term `g<digits>` with an optional `^` and a signed exponent, e.g.
//! `g0^-1 g1 g0`.

use plof::Word;

use crate::CmdError;

pub fn parse_word(s: &str) -> Result<Word, CmdError> {
    let bad = |tok: &str| CmdError::Parse(format!("bad term '{}'", tok));
    let mut letters = vec![];
    let mut any = false;
    for tok in s.split_whitespace() {
        any = true;
        let rest = tok.strip_prefix('g').ok_or_else(|| bad(tok))?;
        let (index_str, exponent) = match rest.split_once('^') {
            None => (rest, 1i64),
            Some((i, e)) => {
                let digits = e.strip_prefix('-').unwrap_or(e);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad(tok));
                }
                (i, e.parse().map_err(|_| bad(tok))?)
            }
        };
        if index_str.is_empty() || !index_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(tok));
        }
        let index: usize = index_str.parse().map_err(|_| bad(tok))?;
        letters.push((index, exponent));
    }
    if !any {
        return Err(CmdError::Parse("empty word".into()));
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        assert_eq!(
            parse_word("g0^-1 g1 g0").unwrap(),
            Word::new(vec![(0, -1), (1, 1), (0, 1)])
        );
        assert_eq!(parse_word("g2").unwrap(), Word::letter(2, 1));
        assert_eq!(parse_word("g0^3").unwrap(), Word::letter(0, 3));
        // reduction happens on construction
        assert_eq!(parse_word("g0 g0^-1").unwrap(), Word::empty());
        assert_eq!(parse_word("g1^0").unwrap(), Word::empty());
    }

    #[test]
    fn rejects_bad_syntax() {
        for bad in ["g0^", "h0", "g", "g0^+2", "g0^x", "", "  ", "g-1", "0"] {
            let err = parse_word(bad).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{:?} for {:?}", err, bad);
        }
    }

    #[test]
    fn round_trips_through_display() {
        for text in ["g0^-1 g1 g0", "g0^2 g1^-3", "g5"] {
            let w = parse_word(text).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }
}
