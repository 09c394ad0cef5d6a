//! Analysis of finitely generated subgroups of the PL homeomorphism group.
//!
//! A group is handled through a [`GenSet`], an *ordered* sequence of
//! generators; the order matters because orbital classification is defined
//! relative to a fixed ordered pair. The group support is the union of the
//! generator supports, its components are the orbitals, and each orbital of
//! a pair carries a type `(m0, m1)` counting how many of its endpoints each
//! generator approaches, together with purity, emptiness and — for pure
//! `(2,1)` orbitals — the pair of approach signs at the shared endpoint.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::plmap::PLMap;
use crate::rational::Rational;
use crate::words::Word;

/// True when some support component of `h` inside `a` has `e` as an
/// endpoint; `e` must be an endpoint of `a`.
pub fn approaches(h: &PLMap, e: &Rational, a: &Interval) -> Result<bool> {
    if !a.has_endpoint(e) {
        return Err(Error::EndpointMismatch {
            point: Box::new(e.clone()),
            lo: Box::new(a.lo().clone()),
            hi: Box::new(a.hi().clone()),
        });
    }
    Ok(h.support()
        .components()
        .iter()
        .any(|b| b.subset_of(a) && b.has_endpoint(e)))
}

/// The sign of the approach of `h` to the endpoint `e` of `a`: `+1` when
/// positive powers of `h` push points of the approaching component toward
/// `e`, `-1` otherwise.
///
/// Exactly decidable: on the approaching component the displacement
/// `h(x) - x` has constant sign, so a single interior sample settles it.
pub fn sign_of_approach(h: &PLMap, e: &Rational, a: &Interval) -> Result<i8> {
    if !approaches(h, e, a)? {
        return Err(Error::DoesNotApproach(Box::new(e.clone())));
    }
    let support = h.support();
    let b = support
        .components()
        .iter()
        .find(|b| b.subset_of(a) && b.has_endpoint(e))
        .expect("approach verified above");
    let mid = b.midpoint();
    let moved_right = h.at(&mid) > mid;
    let e_is_right_end = e == b.hi();
    Ok(if moved_right == e_is_right_end { 1 } else { -1 })
}

/// Classification of one orbital of an ordered generator pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitalInfo {
    /// The orbital itself.
    pub interval: Interval,
    /// `(m0, m1)`: endpoints of the orbital approached by each generator.
    pub orbital_type: (u8, u8),
    /// The orbital coincides with a support component of the generator that
    /// approaches both ends (defined for types (2,1), (1,2), (2,0), (0,2)).
    pub pure: bool,
    /// For pure (2,0) / (0,2): the other generator is the identity here.
    pub empty: bool,
    /// For pure (2,1): approach signs of both generators at the shared end.
    pub sigma: Option<(i8, i8)>,
}

impl fmt::Display for OrbitalInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: type ({},{})",
            self.interval, self.orbital_type.0, self.orbital_type.1
        )?;
        if self.pure {
            write!(f, " pure")?;
        }
        if self.empty {
            write!(f, " empty")?;
        }
        if let Some((s0, s1)) = self.sigma {
            write!(f, " σ=({:+},{:+})", s0, s1)?;
        }
        Ok(())
    }
}

/// An ordered, finite generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    generators: Vec<PLMap>,
}

impl GenSet {
    pub fn new(generators: Vec<PLMap>) -> GenSet {
        GenSet { generators }
    }

    pub fn pair(h0: PLMap, h1: PLMap) -> GenSet {
        GenSet {
            generators: vec![h0, h1],
        }
    }

    pub fn generators(&self) -> &[PLMap] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, i: usize) -> &PLMap {
        &self.generators[i]
    }

    fn expect_pair(&self) -> (&PLMap, &PLMap) {
        assert!(
            self.generators.len() == 2,
            "this analysis is defined for an ordered pair of generators"
        );
        (&self.generators[0], &self.generators[1])
    }

    /// The support of the group: the union of the generator supports. A
    /// point fixed by every generator is fixed by the whole group.
    pub fn support(&self) -> IntervalSet {
        self.generators
            .iter()
            .fold(IntervalSet::empty(), |acc, g| acc.union(&g.support()))
    }

    /// The orbitals: components of the group support, sorted.
    pub fn orbitals(&self) -> Vec<Interval> {
        self.support().components().to_vec()
    }

    /// Number of orbitals of the group.
    pub fn alpha(&self) -> usize {
        self.support().len()
    }

    /// Number of orbitals (support components) of the `i`-th generator.
    pub fn beta(&self, i: usize) -> usize {
        self.generators[i].support().len()
    }

    /// Classifies the orbital `a` with respect to an ordered pair.
    pub fn classify_orbital(&self, a: &Interval) -> Result<OrbitalInfo> {
        let (h0, h1) = self.expect_pair();
        if !self.orbitals().contains(a) {
            return Err(Error::NotAnOrbital {
                lo: Box::new(a.lo().clone()),
                hi: Box::new(a.hi().clone()),
            });
        }
        let ends = [a.lo().clone(), a.hi().clone()];
        let count = |h: &PLMap| -> Result<u8> {
            let mut m = 0u8;
            for e in &ends {
                if approaches(h, e, a)? {
                    m += 1;
                }
            }
            Ok(m)
        };
        let m0 = count(h0)?;
        let m1 = count(h1)?;
        debug_assert!(m0 + m1 >= 2, "an orbital end must be approached");

        // purity: the orbital is itself a support component of the
        // generator approaching both ends
        let full_gen = match (m0, m1) {
            (2, 1) | (2, 0) => Some(h0),
            (1, 2) | (0, 2) => Some(h1),
            _ => None,
        };
        let pure = full_gen
            .map(|h| h.support().components().contains(a))
            .unwrap_or(false);

        let empty = pure
            && match (m0, m1) {
                (2, 0) => h1.support().intersect_interval(a).is_empty(),
                (0, 2) => h0.support().intersect_interval(a).is_empty(),
                _ => false,
            };

        let sigma = if pure && (m0, m1) == (2, 1) {
            // the shared end is the one the second generator approaches
            let shared = if approaches(h1, a.hi(), a)? {
                a.hi().clone()
            } else {
                a.lo().clone()
            };
            Some((
                sign_of_approach(h0, &shared, a)?,
                sign_of_approach(h1, &shared, a)?,
            ))
        } else {
            None
        };

        Ok(OrbitalInfo {
            interval: a.clone(),
            orbital_type: (m0, m1),
            pure,
            empty,
            sigma,
        })
    }

    /// The full classified orbital table of an ordered pair.
    pub fn orbital_table(&self) -> Result<Vec<OrbitalInfo>> {
        self.orbitals()
            .iter()
            .map(|a| self.classify_orbital(a))
            .collect()
    }

    /// Left-to-right product of generator powers described by `w`.
    pub fn evaluate_word(&self, w: &Word) -> Result<PLMap> {
        let mut acc = PLMap::identity();
        for (g, e) in w.letters() {
            let gen = self
                .generators
                .get(*g)
                .ok_or(Error::IndexOutOfRange(*g, self.generators.len()))?;
            acc = acc.compose(&gen.power(*e));
        }
        Ok(acc)
    }

    /// The projection onto the orbital `a`: every generator restricted to
    /// `a`, identity elsewhere.
    pub fn projection(&self, a: &Interval) -> Result<GenSet> {
        if !self.orbitals().contains(a) {
            return Err(Error::NotAnOrbital {
                lo: Box::new(a.lo().clone()),
                hi: Box::new(a.hi().clone()),
            });
        }
        let set = IntervalSet::singleton(a.clone());
        let generators = self
            .generators
            .iter()
            .map(|g| g.restrict_to(&set))
            .collect::<Result<Vec<_>>>()?;
        Ok(GenSet { generators })
    }

    /// Whether the projection of an ordered pair onto `a` is abelian,
    /// decided by checking that the two restricted generators commute
    /// (sufficient for a 2-generated group).
    pub fn projection_is_abelian(&self, a: &Interval) -> Result<bool> {
        let proj = self.projection(a)?;
        let (p0, p1) = proj.expect_pair();
        Ok(p0.commutator(p1).is_identity())
    }

    /// Breadth-first enumeration of freely reduced words together with
    /// their realizations, in order of (length, generator index, exponent
    /// sign with `+1` first). Words realizing a map already seen are pruned,
    /// which keeps the first (lexicographically least) witness for every
    /// group element. Stops early when `visit` returns `Some`.
    pub(crate) fn bfs_words<R>(
        &self,
        max_len: usize,
        mut visit: impl FnMut(&Word, &PLMap) -> Option<R>,
    ) -> Option<R> {
        // PLMap's interior cache never feeds Hash or Eq, so it is a sound key
        #[allow(clippy::mutable_key_type)]
        let mut seen: HashSet<PLMap> = HashSet::new();
        let mut layer: Vec<(Word, PLMap)> = vec![(Word::empty(), PLMap::identity())];
        seen.insert(PLMap::identity());
        if let Some(r) = visit(&layer[0].0, &layer[0].1) {
            return Some(r);
        }
        for _ in 0..max_len {
            let mut next: Vec<(Word, PLMap)> = vec![];
            for (word, map) in &layer {
                for g in 0..self.generators.len() {
                    for e in [1i64, -1] {
                        // appending the inverse of the last letter shortens
                        // the word; that element was already visited
                        if let Some((lg, le)) = word.letters().last() {
                            if *lg == g && le.signum() == -e {
                                continue;
                            }
                        }
                        let w = word.push(g, e);
                        let m = map.compose(&self.generators[g].power(e));
                        if !seen.insert(m.clone()) {
                            continue;
                        }
                        if let Some(r) = visit(&w, &m) {
                            return Some(r);
                        }
                        next.push((w, m));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        None
    }

    /// Finds the first word (breadth-first, deterministic) whose realization
    /// carries `x` into the open interval `target`.
    pub fn find_moving_word(
        &self,
        x: &Rational,
        target: &Interval,
        max_len: usize,
    ) -> Result<Word> {
        self.bfs_words(max_len, |w, m| {
            if target.contains(&m.at(x)) {
                Some(w.clone())
            } else {
                None
            }
        })
        .ok_or(Error::NotFound(max_len))
    }

    /// Looks for an orbital `a` of the group and a word whose realization
    /// approaches exactly one end of `a`.
    ///
    /// With a witness the word is verified as given; otherwise words up to
    /// `max_len` are searched breadth-first. Failure means the search bound
    /// was hit, not that no such element exists.
    pub fn hypothesis_check(
        &self,
        witness: Option<&Word>,
        max_len: usize,
    ) -> Result<(Interval, Word)> {
        let orbitals = self.orbitals();
        let one_sided = |m: &PLMap| -> Option<Interval> {
            for a in &orbitals {
                let at_lo = approaches(m, a.lo(), a).expect("endpoint of its own orbital");
                let at_hi = approaches(m, a.hi(), a).expect("endpoint of its own orbital");
                if at_lo != at_hi {
                    return Some(a.clone());
                }
            }
            None
        };
        if let Some(w) = witness {
            let m = self.evaluate_word(w)?;
            return match one_sided(&m) {
                Some(a) => Ok((a, w.clone())),
                None => Err(Error::HypothesisNotVerified(max_len)),
            };
        }
        self.bfs_words(max_len, |w, m| one_sided(m).map(|a| (a, w.clone())))
            .ok_or(Error::HypothesisNotVerified(max_len))
    }
}
