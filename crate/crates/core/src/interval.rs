//! Open intervals, finite unions of open intervals, and closed fixed sets.
//!
//! Supports of maps and groups are open subsets of `[0, 1]` and are stored as
//! sorted lists of disjoint open intervals. Two adjacent components never
//! share an endpoint with each other in a mergeable way: `(a, c)` and
//! `(c, b)` stay separate because the common endpoint `c` belongs to neither.
//! Fixed sets are the closed complements and are stored as sorted lists of
//! disjoint closed components, a component with equal endpoints being a
//! single point.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonempty open interval `(lo, hi)` with `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Panics unless `lo < hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo < hi, "interval endpoints must satisfy lo < hi");
        Interval { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Open-interval membership.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Containment of open intervals: `self ⊆ other`.
    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// True when `x` equals one of the two endpoints.
    pub fn has_endpoint(&self, x: &Rational) -> bool {
        x == &self.lo || x == &self.hi
    }

    /// The midpoint, convenient as an interior sample.
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// Overlap test for open intervals (shared endpoints do not count).
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// A finite union of disjoint open subintervals of `[0, 1]`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { components: vec![] }
    }

    pub fn singleton(iv: Interval) -> Self {
        IntervalSet {
            components: vec![iv],
        }
    }

    /// Builds a set from arbitrary intervals, merging overlapping ones.
    pub fn from_intervals(intervals: Vec<Interval>) -> Self {
        let mut ivs = intervals;
        ivs.sort();
        let mut components: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match components.last_mut() {
                // strict overlap merges; a shared endpoint does not, since
                // the point belongs to neither open interval
                Some(last) if iv.lo < last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => components.push(iv),
            }
        }
        IntervalSet { components }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// True when `iv` is contained in one of the components.
    pub fn contains_interval(&self, iv: &Interval) -> bool {
        self.components.iter().any(|c| iv.subset_of(c))
    }

    /// Union of two sets.
    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut ivs = self.components.clone();
        ivs.extend(other.components.iter().cloned());
        IntervalSet::from_intervals(ivs)
    }

    /// The part of the set inside `iv` (componentwise clipping).
    pub fn intersect_interval(&self, iv: &Interval) -> IntervalSet {
        let mut out = vec![];
        for c in &self.components {
            let lo = if c.lo > iv.lo { c.lo.clone() } else { iv.lo.clone() };
            let hi = if c.hi < iv.hi { c.hi.clone() } else { iv.hi.clone() };
            if lo < hi {
                out.push(Interval::new(lo, hi));
            }
        }
        IntervalSet { components: out }
    }

    /// Convex hull of the set, `None` when empty.
    pub fn hull(&self) -> Option<Interval> {
        let first = self.components.first()?;
        let last = self.components.last()?;
        Some(Interval::new(first.lo.clone(), last.hi.clone()))
    }

    /// True when the two sets intersect (as open sets).
    pub fn intersects(&self, other: &IntervalSet) -> bool {
        self.components
            .iter()
            .any(|a| other.components.iter().any(|b| a.overlaps(b)))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "}}")
    }
}

/// A closed subset of `[0, 1]`: finitely many disjoint closed intervals and
/// isolated points, sorted. A component with `lo == hi` is a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedSet {
    components: Vec<(Rational, Rational)>,
}

impl FixedSet {
    /// Builds a fixed set from closed components, merging touching ones.
    pub fn from_components(mut comps: Vec<(Rational, Rational)>) -> Self {
        comps.retain(|(lo, hi)| lo <= hi);
        comps.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(comps.len());
        for (lo, hi) in comps {
            match merged.last_mut() {
                // closed components merge even when they only touch
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        FixedSet { components: merged }
    }

    pub fn components(&self) -> &[(Rational, Rational)] {
        &self.components
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|(lo, hi)| lo <= x && x <= hi)
    }

    /// The open complement of this set within `[0, 1]`.
    ///
    /// Assumes 0 and 1 belong to the set, which holds for every fixed set of
    /// an orientation-preserving self-homeomorphism of `[0, 1]`.
    pub fn complement(&self) -> IntervalSet {
        let mut out = vec![];
        for pair in self.components.windows(2) {
            let gap_lo = pair[0].1.clone();
            let gap_hi = pair[1].0.clone();
            if gap_lo < gap_hi {
                out.push(Interval::new(gap_lo, gap_hi));
            }
        }
        IntervalSet { components: out }
    }
}

impl fmt::Display for FixedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, (lo, hi)) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if lo == hi {
                write!(f, "{}", lo)?;
            } else {
                write!(f, "[{}, {}]", lo, hi)?;
            }
        }
        write!(f, "}}")
    }
}

/// Clips the components of `set` so the result stays within `[0, 1]`,
/// returning an error when any component leaves the unit interval.
pub(crate) fn require_within_unit(set: &IntervalSet) -> Result<()> {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    for c in set.components() {
        if c.lo() < &zero || c.hi() > &one {
            return Err(Error::OutOfDomain(format!(
                "interval {} leaves [0,1]",
                c
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn iv(a: (i64, i64), b: (i64, i64)) -> Interval {
        Interval::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn union_merges_overlap_but_not_touching() {
        let s = IntervalSet::from_intervals(vec![iv((0, 1), (1, 2)), iv((1, 4), (3, 4))]);
        assert_eq!(s.components().len(), 1);
        assert_eq!(s.components()[0], iv((0, 1), (3, 4)));

        let t = IntervalSet::from_intervals(vec![iv((0, 1), (1, 2)), iv((1, 2), (1, 1))]);
        assert_eq!(t.components().len(), 2);
    }

    #[test]
    fn union_is_transitive_through_a_bridge() {
        let s = IntervalSet::from_intervals(vec![
            iv((0, 1), (1, 2)),
            iv((1, 2), (1, 1)),
            iv((1, 4), (3, 4)),
        ]);
        assert_eq!(s.components().len(), 1);
        assert_eq!(s.components()[0], iv((0, 1), (1, 1)));
    }

    #[test]
    fn fixed_set_complement() {
        // fixed on [0,1/2] and {1}: support is (1/2, 1)
        let f = FixedSet::from_components(vec![
            (rat(0, 1), rat(1, 2)),
            (rat(1, 1), rat(1, 1)),
        ]);
        let c = f.complement();
        assert_eq!(c.components(), &[iv((1, 2), (1, 1))]);
    }

    #[test]
    fn fixed_set_merges_touching_components() {
        let f = FixedSet::from_components(vec![
            (rat(0, 1), rat(1, 4)),
            (rat(1, 4), rat(1, 2)),
            (rat(3, 4), rat(3, 4)),
            (rat(1, 1), rat(1, 1)),
        ]);
        assert_eq!(f.components().len(), 3);
        assert!(f.contains(&rat(1, 4)));
        let c = f.complement();
        assert_eq!(
            c.components(),
            &[iv((1, 2), (3, 4)), iv((3, 4), (1, 1))]
        );
    }

    #[test]
    fn hull_and_intersection() {
        let s = IntervalSet::from_intervals(vec![iv((0, 1), (1, 4)), iv((1, 2), (3, 4))]);
        assert_eq!(s.hull().unwrap(), iv((0, 1), (3, 4)));
        let clipped = s.intersect_interval(&iv((1, 8), (5, 8)));
        assert_eq!(
            clipped.components(),
            &[iv((1, 8), (1, 4)), iv((1, 2), (5, 8))]
        );
    }
}
