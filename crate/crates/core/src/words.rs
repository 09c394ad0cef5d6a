//! Formal words over a generator alphabet, the realization homomorphism and
//! an exact word-equality oracle for Thompson's group F.
//!
//! A [`Word`] is a freely reduced sequence of letters `(generator index,
//! non-zero exponent)` with adjacent letters carrying distinct indices. Over
//! the alphabet `{g0, g1}` a word can be realized as a PL map by the
//! homomorphism sending `g0, g1` to the standard generating pair; since that
//! realization is faithful on F, exact equality of the realized maps decides
//! the word problem. Letters `g_i` with `i ≥ 2` are treated as abbreviations
//! and expanded via `g_i = g0^(1-i) g1 g0^(i-1)` first.

use std::fmt;

use crate::plmap::PLMap;
use crate::thompson;

/// A freely reduced word: adjacent letters have distinct generator indices
/// and no exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word { letters: vec![] }
    }

    /// Builds a word from letters, freely reducing: adjacent letters with
    /// equal index merge and zero exponents vanish.
    pub fn new(letters: Vec<(usize, i64)>) -> Word {
        let mut reduced: Vec<(usize, i64)> = Vec::with_capacity(letters.len());
        for (g, e) in letters {
            if e == 0 {
                continue;
            }
            match reduced.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        reduced.pop();
                    }
                }
                _ => reduced.push((g, e)),
            }
        }
        Word { letters: reduced }
    }

    /// A single-letter word.
    pub fn letter(generator: usize, exponent: i64) -> Word {
        Word::new(vec![(generator, exponent)])
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word length as a product of single generators: the sum of the
    /// absolute values of the exponents.
    pub fn len(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Largest generator index used, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|(g, _)| *g).max()
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word::new(letters)
    }

    /// The inverse word.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|(g, e)| (*g, -e)).collect(),
        }
    }

    /// The word repeated `n` times (inverted when `n < 0`).
    pub fn pow(&self, n: i64) -> Word {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The conjugate `b⁻¹ w b` of `self = w` by `b`.
    pub fn conjugated_by(&self, b: &Word) -> Word {
        b.inverse().concat(self).concat(b)
    }

    /// Appends a single letter, keeping the word reduced.
    pub fn push(&self, generator: usize, exponent: i64) -> Word {
        self.concat(&Word::letter(generator, exponent))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "g{}", g)?;
            } else {
                write!(f, "g{}^{}", g, e)?;
            }
        }
        Ok(())
    }
}

/// Rewrites every letter `g_i` with `i ≥ 2` into `g0^(1-i) g1^e g0^(i-1)`
/// and reduces; the result uses only `g0` and `g1`. One pass suffices since
/// the expansions introduce only indices 0 and 1.
pub fn expand(w: &Word) -> Word {
    let mut letters: Vec<(usize, i64)> = vec![];
    for (g, e) in w.letters() {
        if *g <= 1 {
            letters.push((*g, *e));
        } else {
            let shift = *g as i64 - 1;
            letters.push((0, -shift));
            letters.push((1, *e));
            letters.push((0, shift));
        }
    }
    Word::new(letters)
}

/// The realization homomorphism at the standard pair: `g0 ↦ f0`, `g1 ↦ f1`,
/// products left to right. Higher-index letters are expanded first, so the
/// map is defined on any word.
pub fn realize(w: &Word) -> PLMap {
    let gens = [thompson::f0(), thompson::f1()];
    let mut acc = PLMap::identity();
    for (g, e) in expand(w).letters() {
        acc = acc.compose(&gens[*g].power(*e));
    }
    acc
}

/// Exact word equality in F, decided through the faithful realization.
pub fn equal_in_f(u: &Word, v: &Word) -> bool {
    realize(u) == realize(v)
}

/// One verified identity in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub pass: bool,
}

/// Report produced by [`commutator_pair_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.pass { "pass" } else { "FAIL" }, c.label)?;
        }
        Ok(())
    }
}

/// Verifies the identities behind the final commutator replacement of the
/// extraction pipeline.
///
/// With `G0 = g0^-2 g1 g0^2 g1^-1`, `G1 = g0^-1 g1 g0 g1^-1` and
/// `G_i = G0^(1-i) G1 G0^(i-1)`, the report checks, via the exact word
/// oracle: the closed forms of `G2`, `G3`, `G4` in the `g`-letters, the two
/// conjugation identities that give the defining relations for the new pair,
/// and that the commutator of `G1` and `G0^-1` is not trivial.
pub fn commutator_pair_identities() -> IdentityReport {
    let g = |i: usize, e: i64| Word::letter(i, e);

    let g0_big = g(0, -2).concat(&g(1, 1)).concat(&g(0, 2)).concat(&g(1, -1));
    let g1_big = g(0, -1).concat(&g(1, 1)).concat(&g(0, 1)).concat(&g(1, -1));
    let big = |i: i64| -> Word {
        g0_big
            .pow(1 - i)
            .concat(&g1_big)
            .concat(&g0_big.pow(i - 1))
    };

    let mut checks = vec![];
    let mut check = |label: &str, lhs: &Word, rhs: &Word, want_equal: bool| {
        let pass = equal_in_f(lhs, rhs) == want_equal;
        checks.push(IdentityCheck {
            label: label.to_string(),
            pass,
        });
    };

    // closed forms: G_{k+1} = g1^k g2 g1^-(k+1) for k = 1, 2, 3
    let g2_closed = g(1, 1).concat(&g(2, 1)).concat(&g(1, -2));
    check("G2 = g1 g2 g1^-2", &big(2), &g2_closed, true);
    let g3_closed = g(1, 2).concat(&g(2, 1)).concat(&g(1, -3));
    check("G3 = g1^2 g2 g1^-3", &big(3), &g3_closed, true);
    let g4_closed = g(1, 3).concat(&g(2, 1)).concat(&g(1, -4));
    check("G4 = g1^3 g2 g1^-4", &big(4), &g4_closed, true);

    // defining relations for the new pair
    check(
        "G1^-1 G2 G1 = G3",
        &big(2).conjugated_by(&big(1)),
        &big(3),
        true,
    );
    check(
        "G1^-1 G3 G1 = G4",
        &big(3).conjugated_by(&big(1)),
        &big(4),
        true,
    );

    // non-commutation: G1 G0^-1 G1^-1 G0 is not trivial
    let comm = g1_big
        .concat(&g0_big.inverse())
        .concat(&g1_big.inverse())
        .concat(&g0_big);
    check("G1 G0^-1 G1^-1 G0 != 1", &comm, &Word::empty(), false);

    IdentityReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thompson::generator;

    fn w(letters: &[(usize, i64)]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn free_reduction() {
        assert_eq!(w(&[(0, 1), (0, -1)]), Word::empty());
        assert_eq!(w(&[(0, 2), (0, -1)]), Word::letter(0, 1));
        let reduced = w(&[(0, 1), (1, -2), (0, 3)]);
        assert_eq!(Word::new(reduced.letters().to_vec()), reduced);
        // cascading cancellation
        assert_eq!(
            w(&[(0, 1), (1, 1), (1, -1), (0, -1)]),
            Word::empty()
        );
        assert_eq!(w(&[(0, 1), (1, 0), (0, 1)]), Word::letter(0, 2));
    }

    #[test]
    fn word_algebra() {
        let u = w(&[(0, 1), (1, 2)]);
        assert_eq!(u.inverse(), w(&[(1, -2), (0, -1)]));
        assert_eq!(u.concat(&u.inverse()), Word::empty());
        assert_eq!(u.len(), 3);
        assert_eq!(u.pow(0), Word::empty());
        assert_eq!(u.pow(-1), u.inverse());
        assert_eq!(u.pow(2), u.concat(&u));
        let c = u.conjugated_by(&w(&[(0, 1)]));
        assert_eq!(c, w(&[(0, -1), (0, 1), (1, 2), (0, 1)]));
        assert_eq!(c, w(&[(1, 2), (0, 1)]));
    }

    #[test]
    fn expansion() {
        assert_eq!(expand(&Word::letter(2, 1)), w(&[(0, -1), (1, 1), (0, 1)]));
        assert_eq!(expand(&Word::letter(1, 1)), Word::letter(1, 1));
        assert_eq!(
            expand(&Word::letter(3, -1)),
            w(&[(0, -2), (1, -1), (0, 2)])
        );
        // expanding twice changes nothing
        let u = w(&[(2, 1), (4, -2), (1, 1)]);
        assert_eq!(expand(&expand(&u)), expand(&u));
    }

    #[test]
    fn realization() {
        assert_eq!(realize(&Word::empty()), PLMap::identity());
        assert_eq!(realize(&Word::letter(0, 1)), generator(0));
        assert_eq!(realize(&expand(&Word::letter(2, 1))), generator(2));
        assert_eq!(realize(&Word::letter(2, 1)), generator(2));
        // homomorphism property on a couple of words
        let u = w(&[(0, 1), (1, -1)]);
        let v = w(&[(1, 2), (0, 1)]);
        assert_eq!(
            realize(&u.concat(&v)),
            realize(&u).compose(&realize(&v))
        );
    }

    #[test]
    fn word_equality() {
        assert!(!equal_in_f(&w(&[(0, 1), (1, 1)]), &w(&[(1, 1), (0, 1)])));
        // first defining relation: g1^(g0 g0) = g1^(g0 g1)
        let lhs = Word::letter(1, 1).conjugated_by(&w(&[(0, 2)]));
        let rhs = Word::letter(1, 1).conjugated_by(&w(&[(0, 1), (1, 1)]));
        assert!(equal_in_f(&lhs, &rhs));
        let any = w(&[(0, 3), (1, -2)]);
        assert!(equal_in_f(&any, &any));
    }

    #[test]
    fn family_relations_under_the_oracle() {
        // g_j^(g_i) = g_(j+1) for i < j <= 6
        for j in 1..=6usize {
            for i in 0..j {
                let lhs = Word::letter(j, 1).conjugated_by(&Word::letter(i, 1));
                let rhs = Word::letter(j + 1, 1);
                assert!(equal_in_f(&lhs, &rhs), "g{}^(g{})", j, i);
            }
        }
    }

    #[test]
    fn rewriting_facts_hold_under_the_oracle() {
        // g3^-1 g2 = g2 g4^-1 and g1^-1 g3 = g4 g1^-1
        let lhs = Word::letter(3, -1).concat(&Word::letter(2, 1));
        let rhs = Word::letter(2, 1).concat(&Word::letter(4, -1));
        assert!(equal_in_f(&lhs, &rhs));
        let lhs = Word::letter(1, -1).concat(&Word::letter(3, 1));
        let rhs = Word::letter(4, 1).concat(&Word::letter(1, -1));
        assert!(equal_in_f(&lhs, &rhs));
    }

    #[test]
    fn commutator_pair_report_passes() {
        let report = commutator_pair_identities();
        assert_eq!(report.checks.len(), 6);
        assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn congruence_property() {
        let u = Word::letter(1, 1).conjugated_by(&w(&[(0, 2)]));
        let v = Word::letter(1, 1).conjugated_by(&w(&[(0, 1), (1, 1)]));
        let prefix = w(&[(1, -1), (0, 2)]);
        assert!(equal_in_f(&prefix.concat(&u), &prefix.concat(&v)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_word() -> impl Strategy<Value = Word> {
            proptest::collection::vec((0usize..3, -2i64..=2), 0..6).prop_map(Word::new)
        }

        proptest! {
            #[test]
            fn reduction_is_idempotent(u in arb_word()) {
                prop_assert_eq!(Word::new(u.letters().to_vec()), u);
            }

            #[test]
            fn inverse_cancels(u in arb_word()) {
                prop_assert_eq!(u.concat(&u.inverse()), Word::empty());
                prop_assert_eq!(u.inverse().concat(&u), Word::empty());
            }

            #[test]
            fn realization_is_a_homomorphism(u in arb_word(), v in arb_word()) {
                prop_assert_eq!(
                    realize(&u.concat(&v)),
                    realize(&u).compose(&realize(&v))
                );
            }

            #[test]
            fn equality_is_a_congruence(u in arb_word()) {
                // a known relation stays a relation after any prefix
                let lhs = Word::letter(1, 1).conjugated_by(&Word::letter(0, 2));
                let rhs = Word::letter(1, 1)
                    .conjugated_by(&Word::letter(0, 1).concat(&Word::letter(1, 1)));
                prop_assert!(equal_in_f(&u.concat(&lhs), &u.concat(&rhs)));
            }
        }
    }
}
