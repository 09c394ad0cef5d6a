//! Piecewise-linear, orientation-preserving self-homeomorphisms of `[0, 1]`.
//!
//! A [`PLMap`] is stored as its breakpoint sequence in canonical form: the
//! first pair is `(0, 0)`, the last is `(1, 1)`, both coordinate sequences
//! are strictly increasing, and no three consecutive breakpoints are
//! collinear. Equality of maps is therefore structural equality of the
//! breakpoint sequences, which makes every group-theoretic identity in this
//! crate decidable bit-exactly.
//!
//! Maps are composed left to right: `x.apply-f-then-g` is written
//! `f.compose(&g)` and the conjugate of `a` by `b` is `b⁻¹ a b`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::{require_within_unit, FixedSet, Interval, IntervalSet};
use crate::rational::Rational;

fn zero() -> Rational {
    Rational::zero()
}

fn one() -> Rational {
    Rational::one()
}

/// Which side of a point a one-sided quantity is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A piecewise-linear orientation-preserving bijection of `[0, 1]`.
///
/// The fixed-point set is computed lazily and cached; maps are immutable so
/// the cache is sound, and identity, equality and hashing see only the
/// breakpoints.
#[derive(Clone)]
pub struct PLMap {
    breakpoints: Vec<(Rational, Rational)>,
    fixed: std::sync::OnceLock<FixedSet>,
}

impl PartialEq for PLMap {
    fn eq(&self, other: &Self) -> bool {
        self.breakpoints == other.breakpoints
    }
}

impl Eq for PLMap {}

impl std::hash::Hash for PLMap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.breakpoints.hash(state);
    }
}

/// True when the three points are collinear.
fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
    (&b.1 - &a.1) * (&c.0 - &b.0) == (&c.1 - &b.1) * (&b.0 - &a.0)
}

/// Removes interior points lying on the segment through their neighbours.
/// Assumes both coordinate sequences are strictly increasing.
fn normalize(points: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
    for p in points {
        while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
            out.pop();
        }
        out.push(p);
    }
    out
}

impl PLMap {
    /// Builds a map from breakpoints, validating and normalizing.
    ///
    /// The points must start at `(0, 0)`, end at `(1, 1)` and be strictly
    /// increasing in both coordinates; otherwise [`Error::NotBijection`] is
    /// returned. Collinear interior points are removed.
    ///
    /// ```
    /// use plof::rational::rat;
    /// use plof::PLMap;
    ///
    /// let f = PLMap::make(vec![
    ///     (rat(0, 1), rat(0, 1)),
    ///     (rat(1, 4), rat(1, 2)),
    ///     (rat(1, 2), rat(3, 4)),
    ///     (rat(1, 1), rat(1, 1)),
    /// ])
    /// .unwrap();
    /// assert_eq!(f.eval(&rat(1, 4)).unwrap(), rat(1, 2));
    /// assert_eq!(f.compose(&f.inverse()), PLMap::identity());
    /// ```
    pub fn make(points: Vec<(Rational, Rational)>) -> Result<PLMap> {
        if points.is_empty() {
            return Err(Error::NotBijection("no breakpoints".into()));
        }
        let first = points.first().unwrap();
        if first.0 != zero() || first.1 != zero() {
            return Err(Error::NotBijection("first breakpoint must be (0,0)".into()));
        }
        let last = points.last().unwrap();
        if last.0 != one() || last.1 != one() {
            return Err(Error::NotBijection("last breakpoint must be (1,1)".into()));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::NotBijection(format!(
                    "x-coordinates not strictly increasing at x = {}",
                    w[1].0
                )));
            }
            if w[0].1 >= w[1].1 {
                return Err(Error::NotBijection(format!(
                    "y-coordinates not strictly increasing at y = {}",
                    w[1].1
                )));
            }
        }
        Ok(PLMap {
            breakpoints: normalize(points),
            fixed: std::sync::OnceLock::new(),
        })
    }

    /// Internal constructor for points already known to be strictly
    /// increasing with the correct endpoints.
    fn from_monotone(points: Vec<(Rational, Rational)>) -> PLMap {
        debug_assert!(points.first().map(|p| p.0.is_zero() && p.1.is_zero()) == Some(true));
        debug_assert!(points.last().map(|p| p.0.is_one() && p.1.is_one()) == Some(true));
        PLMap {
            breakpoints: normalize(points),
            fixed: std::sync::OnceLock::new(),
        }
    }

    /// The identity map.
    pub fn identity() -> PLMap {
        PLMap {
            breakpoints: vec![(zero(), zero()), (one(), one())],
            fixed: std::sync::OnceLock::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.breakpoints.len() == 2
    }

    /// The canonical breakpoint sequence.
    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    /// Evaluates the map at `x`; errors unless `0 ≤ x ≤ 1`.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x < &zero() || x > &one() {
            return Err(Error::OutOfDomain(format!("{} is outside [0,1]", x)));
        }
        Ok(self.at(x))
    }

    /// Evaluation without the domain check; `x` must lie in `[0, 1]`.
    pub(crate) fn at(&self, x: &Rational) -> Rational {
        // index of the first breakpoint with coordinate >= x
        let idx = self.breakpoints.partition_point(|(bx, _)| bx < x);
        let (x1, y1) = &self.breakpoints[idx];
        if x1 == x {
            return y1.clone();
        }
        let (x0, y0) = &self.breakpoints[idx - 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Left-to-right composition: the returned map sends `x` to `g(f(x))`
    /// where `f` is `self` and `g` is `other`.
    ///
    /// Breakpoints of the composite occur at breakpoints of `f` and at
    /// preimages under `f` of breakpoints of `g`; a single merge sweep
    /// collects them in order.
    pub fn compose(&self, other: &PLMap) -> PLMap {
        let fb = &self.breakpoints;
        let gb = &other.breakpoints;
        let mut points: Vec<(Rational, Rational)> = Vec::with_capacity(fb.len() + gb.len());
        let mut j = 0usize; // g-segment cursor
        for i in 0..fb.len() - 1 {
            let (x0, y0) = &fb[i];
            let (x1, y1) = &fb[i + 1];
            // place the cursor so gb[j].0 <= y0 < gb[j+1].0
            while gb[j + 1].0 <= *y0 {
                j += 1;
            }
            let image = if &gb[j].0 == y0 {
                gb[j].1.clone()
            } else {
                let (u0, v0) = &gb[j];
                let (u1, v1) = &gb[j + 1];
                v0 + (v1 - v0) * (y0 - u0) / (u1 - u0)
            };
            points.push((x0.clone(), image));
            // g-breaks interior to this segment pull back to new breakpoints
            let mut jj = j + 1;
            while jj < gb.len() && gb[jj].0 < *y1 {
                let v = &gb[jj].0;
                if v > y0 {
                    let x = x0 + (v - y0) * (x1 - x0) / (y1 - y0);
                    points.push((x, gb[jj].1.clone()));
                }
                jj += 1;
            }
        }
        points.push((one(), one()));
        PLMap::from_monotone(points)
    }

    /// The group inverse; breakpoints are the swapped pairs.
    pub fn inverse(&self) -> PLMap {
        let out = PLMap {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
            fixed: std::sync::OnceLock::new(),
        };
        // a map and its inverse fix exactly the same points
        if let Some(f) = self.fixed.get() {
            let _ = out.fixed.set(f.clone());
        }
        out
    }

    /// Iterated composition; `n == 0` gives the identity and negative `n`
    /// uses the inverse.
    pub fn power(&self, n: i64) -> PLMap {
        if n == 0 {
            return PLMap::identity();
        }
        let base = if n > 0 { self.clone() } else { self.inverse() };
        let mut acc = base.clone();
        for _ in 1..n.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// The conjugate `b⁻¹ a b` of `self = a` by `b`, under left-to-right
    /// composition.
    pub fn conjugate(&self, b: &PLMap) -> PLMap {
        b.inverse().compose(self).compose(b)
    }

    /// The commutator `a⁻¹ b⁻¹ a b` of `self = a` and `b`.
    pub fn commutator(&self, b: &PLMap) -> PLMap {
        self.inverse().compose(&b.inverse()).compose(self).compose(b)
    }

    /// Closed components of the fixed-point set: finitely many isolated
    /// points and closed intervals, always containing 0 and 1. Cached.
    pub fn fixed_set(&self) -> FixedSet {
        self.fixed_ref().clone()
    }

    pub(crate) fn fixed_ref(&self) -> &FixedSet {
        self.fixed.get_or_init(|| {
            let mut comps: Vec<(Rational, Rational)> = vec![];
            for w in self.breakpoints.windows(2) {
                let (x0, y0) = &w[0];
                let (x1, y1) = &w[1];
                if y0 == x0 && y1 == x1 {
                    comps.push((x0.clone(), x1.clone()));
                    continue;
                }
                // f(x) - x is affine on the segment; find its zero if any
                let slope_minus_one = (y1 - y0) / (x1 - x0) - one();
                if slope_minus_one.is_zero() {
                    continue; // constant nonzero displacement
                }
                let root = x0 + (x0 - y0) / &slope_minus_one;
                if &root >= x0 && &root <= x1 {
                    comps.push((root.clone(), root));
                }
            }
            FixedSet::from_components(comps)
        })
    }

    /// The open set where the map moves points; its components are the
    /// orbitals of the cyclic group the map generates.
    pub fn support(&self) -> IntervalSet {
        self.fixed_ref().complement()
    }

    /// One-sided slope at `e`, looking into `[0, 1]` on the given side.
    pub fn slope_at(&self, e: &Rational, side: Side) -> Result<Rational> {
        if e < &zero() || e > &one() {
            return Err(Error::OutOfDomain(format!("{} is outside [0,1]", e)));
        }
        let segment = match side {
            Side::Left => {
                if e.is_zero() {
                    return Err(Error::OutOfDomain(
                        "no left neighbourhood of 0 inside [0,1]".into(),
                    ));
                }
                let idx = self.breakpoints.partition_point(|(bx, _)| bx < e);
                (&self.breakpoints[idx - 1], &self.breakpoints[idx])
            }
            Side::Right => {
                if e.is_one() {
                    return Err(Error::OutOfDomain(
                        "no right neighbourhood of 1 inside [0,1]".into(),
                    ));
                }
                let idx = self.breakpoints.partition_point(|(bx, _)| bx <= e);
                (&self.breakpoints[idx - 1], &self.breakpoints[idx])
            }
        };
        let ((x0, y0), (x1, y1)) = segment;
        Ok((y1 - y0) / (x1 - x0))
    }

    /// The map that agrees with `self` on `a` and is the identity elsewhere.
    ///
    /// Errors with [`Error::NotInvariant`] unless the map carries every
    /// component of `a` onto itself (equivalently, fixes both endpoints of
    /// each component).
    pub fn restrict_to(&self, a: &IntervalSet) -> Result<PLMap> {
        for c in a.components() {
            if &self.at(c.lo()) != c.lo() || &self.at(c.hi()) != c.hi() {
                return Err(Error::NotInvariant);
            }
        }
        let mut points: Vec<(Rational, Rational)> = vec![(zero(), zero())];
        let mut push = |p: (Rational, Rational)| {
            if points.last().map(|q| q.0 != p.0).unwrap_or(true) {
                points.push(p);
            }
        };
        for c in a.components() {
            push((c.lo().clone(), c.lo().clone()));
            for (x, y) in &self.breakpoints {
                if x > c.lo() && x < c.hi() {
                    push((x.clone(), y.clone()));
                }
            }
            push((c.hi().clone(), c.hi().clone()));
        }
        push((one(), one()));
        Ok(PLMap::from_monotone(points))
    }

    /// Image of an interval set: each component `(u, v)` maps to
    /// `(f(u), f(v))`.
    pub fn image_of(&self, s: &IntervalSet) -> IntervalSet {
        IntervalSet::from_intervals(
            s.components()
                .iter()
                .map(|c| Interval::new(self.at(c.lo()), self.at(c.hi())))
                .collect(),
        )
    }

    /// Conjugation by the orientation-reversing flip `x ↦ 1 - x`. The result
    /// is again orientation preserving; supports and approach signs mirror.
    pub(crate) fn flip(&self) -> PLMap {
        let breakpoints = self
            .breakpoints
            .iter()
            .rev()
            .map(|(x, y)| (&one() - x, &one() - y))
            .collect();
        PLMap {
            breakpoints,
            fixed: std::sync::OnceLock::new(),
        }
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.breakpoints.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({},{})", x, y)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLMap[{}]", self)
    }
}

/// The affine map `x ↦ fixed_point + slope · (x − fixed_point)`, used to
/// transport intervals and maps that live near its fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineGerm {
    slope: Rational,
    fixed_point: Rational,
}

impl AffineGerm {
    /// Panics unless `slope > 0`.
    pub fn new(slope: Rational, fixed_point: Rational) -> Self {
        assert!(slope > zero(), "germ slope must be positive");
        AffineGerm { slope, fixed_point }
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn fixed_point(&self) -> &Rational {
        &self.fixed_point
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.fixed_point + &self.slope * (x - &self.fixed_point)
    }

    pub fn inverse(&self) -> AffineGerm {
        AffineGerm {
            slope: self.slope.recip(),
            fixed_point: self.fixed_point.clone(),
        }
    }

    /// The germ raised to an integer power.
    pub fn power(&self, n: i64) -> AffineGerm {
        let slope = num_traits::pow::Pow::pow(&self.slope, n as i32);
        AffineGerm {
            slope,
            fixed_point: self.fixed_point.clone(),
        }
    }

    /// Exact affine image of each component; errors when the image leaves
    /// `[0, 1]`.
    pub fn apply_set(&self, s: &IntervalSet) -> Result<IntervalSet> {
        let image = IntervalSet::from_intervals(
            s.components()
                .iter()
                .map(|c| Interval::new(self.apply(c.lo()), self.apply(c.hi())))
                .collect(),
        );
        require_within_unit(&image)?;
        Ok(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::test_support::{bp, f0, f1};

    #[test]
    fn make_identity_and_normalization() {
        let id = PLMap::make(bp(&[(0, 1, 0, 1), (1, 1, 1, 1)])).unwrap();
        assert_eq!(id, PLMap::identity());
        // collinear interior point is removed
        let also_id = PLMap::make(bp(&[(0, 1, 0, 1), (1, 2, 1, 2), (1, 1, 1, 1)])).unwrap();
        assert_eq!(also_id, PLMap::identity());
        assert!(also_id.is_identity());
    }

    #[test]
    fn make_rejects_non_bijections() {
        // repeated x-coordinate
        let err = PLMap::make(bp(&[(0, 1, 0, 1), (1, 2, 1, 4), (1, 2, 3, 4), (1, 1, 1, 1)]));
        assert!(matches!(err, Err(Error::NotBijection(_))));
        // wrong endpoint
        let err = PLMap::make(bp(&[(0, 1, 0, 1), (1, 2, 3, 4)]));
        assert!(matches!(err, Err(Error::NotBijection(_))));
        // decreasing y
        let err = PLMap::make(bp(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 2, 1, 4), (1, 1, 1, 1)]));
        assert!(matches!(err, Err(Error::NotBijection(_))));
        // empty
        assert!(matches!(PLMap::make(vec![]), Err(Error::NotBijection(_))));
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = f0();
        let again = PLMap::make(f.breakpoints().to_vec()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(f0().eval(&rat(1, 4)).unwrap(), rat(1, 2));
        assert_eq!(f1().eval(&rat(3, 8)).unwrap(), rat(3, 8));
        let q = rat(5, 7);
        assert_eq!(PLMap::identity().eval(&q).unwrap(), q);
        assert!(matches!(
            f0().eval(&rat(3, 2)),
            Err(Error::OutOfDomain(_))
        ));
        assert!(matches!(
            f0().eval(&rat(-1, 2)),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let f = f0();
        assert_eq!(f.compose(&f.inverse()), PLMap::identity());
        assert_eq!(f.compose(&PLMap::identity()), f);
        assert_eq!(PLMap::identity().compose(&f), f);
        // oracle: two exact evaluations, 1/4 -> 1/2 -> 3/4
        let ff = f.compose(&f);
        assert_eq!(ff.eval(&rat(1, 4)).unwrap(), rat(3, 4));
        let via_evals = f.eval(&f.eval(&rat(1, 4)).unwrap()).unwrap();
        assert_eq!(via_evals, rat(3, 4));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(PLMap::identity().inverse(), PLMap::identity());
        assert_eq!(f0().inverse().eval(&rat(1, 2)).unwrap(), rat(1, 4));
        assert_eq!(f1().inverse().inverse(), f1());
    }

    #[test]
    fn power_examples() {
        assert_eq!(f1().power(0), PLMap::identity());
        assert_eq!(f0().power(2).eval(&rat(1, 2)).unwrap(), rat(7, 8));
        assert_eq!(f0().power(-1), f0().inverse());
        assert_eq!(f0().power(3), f0().compose(&f0()).compose(&f0()));
    }

    #[test]
    fn conjugate_examples() {
        let f = f1();
        assert_eq!(f.conjugate(&PLMap::identity()), f);
        assert_eq!(PLMap::identity().conjugate(&f0()), PLMap::identity());
        // support transport: the image of (1/2, 1) under f0 is (3/4, 1)
        let support = f1().conjugate(&f0()).support();
        assert_eq!(
            support.components(),
            &[Interval::new(rat(3, 4), rat_int(1))]
        );
    }

    #[test]
    fn support_examples() {
        assert!(PLMap::identity().support().is_empty());
        assert_eq!(
            f1().support().components(),
            &[Interval::new(rat(1, 2), rat_int(1))]
        );
        assert_eq!(
            f0().support().components(),
            &[Interval::new(rat_int(0), rat_int(1))]
        );
    }

    #[test]
    fn fixed_set_examples() {
        assert_eq!(
            PLMap::identity().fixed_set().components(),
            &[(rat_int(0), rat_int(1))]
        );
        assert_eq!(
            f0().fixed_set().components(),
            &[(rat_int(0), rat_int(0)), (rat_int(1), rat_int(1))]
        );
        assert_eq!(
            f1().fixed_set().components(),
            &[(rat_int(0), rat(1, 2)), (rat_int(1), rat_int(1))]
        );
    }

    #[test]
    fn fixed_set_finds_interior_crossings() {
        // moves (0, 1/2), fixes [1/2, 1]; crossing at an interior breakpoint
        let f = PLMap::make(bp(&[
            (0, 1, 0, 1),
            (1, 4, 3, 8),
            (1, 2, 1, 2),
            (1, 1, 1, 1),
        ]))
        .unwrap();
        assert_eq!(
            f.fixed_set().components(),
            &[(rat_int(0), rat_int(0)), (rat(1, 2), rat_int(1))]
        );
    }

    #[test]
    fn slope_at_examples() {
        assert_eq!(f0().slope_at(&rat_int(1), Side::Left).unwrap(), rat(1, 2));
        assert_eq!(f1().slope_at(&rat_int(1), Side::Left).unwrap(), rat(1, 2));
        assert_eq!(f0().slope_at(&rat_int(0), Side::Right).unwrap(), rat_int(2));
        let e = rat(1, 3);
        assert_eq!(
            PLMap::identity().slope_at(&e, Side::Left).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            PLMap::identity().slope_at(&e, Side::Right).unwrap(),
            rat_int(1)
        );
        assert!(f0().slope_at(&rat_int(0), Side::Left).is_err());
        assert!(f0().slope_at(&rat_int(1), Side::Right).is_err());
        // slope is taken on the correct side of a breakpoint
        assert_eq!(f0().slope_at(&rat(1, 4), Side::Left).unwrap(), rat_int(2));
        assert_eq!(f0().slope_at(&rat(1, 4), Side::Right).unwrap(), rat_int(1));
    }

    #[test]
    fn restrict_to_examples() {
        let f = f1();
        assert_eq!(f.restrict_to(&f.support()).unwrap(), f);
        assert_eq!(
            f.restrict_to(&IntervalSet::empty()).unwrap(),
            PLMap::identity()
        );
        // a full orbital of a group restricts fine even when the map is
        // identity on part of it
        let whole = IntervalSet::singleton(Interval::new(rat_int(0), rat_int(1)));
        assert_eq!(f.restrict_to(&whole).unwrap(), f);
    }

    #[test]
    fn restrict_to_two_bumps() {
        use crate::test_support::two_bump;
        let (g, first, second) = two_bump();
        let a = IntervalSet::singleton(first.support().components()[0].clone());
        assert_eq!(g.restrict_to(&a).unwrap(), first);
        let b = IntervalSet::singleton(second.support().components()[0].clone());
        assert_eq!(g.restrict_to(&b).unwrap(), second);
        // an interval the map does not preserve
        let bad = IntervalSet::singleton(Interval::new(rat(1, 4), rat(3, 4)));
        assert!(matches!(g.restrict_to(&bad), Err(Error::NotInvariant)));
    }

    #[test]
    fn affine_germ_examples() {
        let s = IntervalSet::singleton(Interval::new(rat(1, 2), rat_int(1)));
        // slope 1 leaves everything unchanged
        let unit = AffineGerm::new(rat_int(1), rat(1, 3));
        assert_eq!(unit.apply_set(&s).unwrap(), s);
        // slope 1/2 fixing 1 carries (1/2, 1) to (3/4, 1)
        let lambda = AffineGerm::new(rat(1, 2), rat_int(1));
        assert_eq!(
            lambda.apply_set(&s).unwrap().components(),
            &[Interval::new(rat(3, 4), rat_int(1))]
        );
        // inverse transports back
        let back = lambda.inverse().apply_set(&lambda.apply_set(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        // an image leaving [0,1] is refused
        let expanding = AffineGerm::new(rat_int(2), rat_int(0));
        assert!(expanding.apply_set(&s).is_err());
    }

    #[test]
    fn affine_germ_powers() {
        let lambda = AffineGerm::new(rat(1, 2), rat_int(1));
        assert_eq!(lambda.power(3).slope(), &rat(1, 8));
        assert_eq!(lambda.power(-1).slope(), &rat_int(2));
        assert_eq!(lambda.power(0).slope(), &rat_int(1));
        assert_eq!(lambda.power(2).apply(&rat(1, 2)), rat(7, 8));
    }

    #[test]
    fn flip_mirrors_everything() {
        let f = f1();
        let m = f.flip();
        // support mirrors from (1/2, 1) to (0, 1/2)
        assert_eq!(
            m.support().components(),
            &[Interval::new(rat_int(0), rat(1, 2))]
        );
        assert_eq!(m.flip(), f);
        // powers commute with the flip
        assert_eq!(m.power(2), f.power(2).flip());
        // slope mirrors side
        assert_eq!(
            m.slope_at(&rat_int(0), Side::Right).unwrap(),
            f.slope_at(&rat_int(1), Side::Left).unwrap()
        );
    }

    mod props {
        use super::*;
        use crate::test_support::{arb_dyadic_map, arb_dyadic_point};
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn group_axioms(
                f in arb_dyadic_map(4),
                g in arb_dyadic_map(4),
                h in arb_dyadic_map(4),
            ) {
                prop_assert_eq!(
                    f.compose(&g).compose(&h),
                    f.compose(&g.compose(&h))
                );
                prop_assert_eq!(f.compose(&f.inverse()), PLMap::identity());
                prop_assert_eq!(f.inverse().compose(&f), PLMap::identity());
            }

            #[test]
            fn power_addition(f in arb_dyadic_map(4), m in -3i64..=3, n in -3i64..=3) {
                prop_assert_eq!(f.power(m + n), f.power(m).compose(&f.power(n)));
            }

            #[test]
            fn normalization_idempotent(f in arb_dyadic_map(4)) {
                prop_assert_eq!(PLMap::make(f.breakpoints().to_vec()).unwrap(), f);
            }

            #[test]
            fn eval_monotone_and_invertible(
                f in arb_dyadic_map(4),
                x in arb_dyadic_point(5),
                y in arb_dyadic_point(5),
            ) {
                let fx = f.eval(&x).unwrap();
                let fy = f.eval(&y).unwrap();
                prop_assert_eq!(x.cmp(&y), fx.cmp(&fy));
                prop_assert_eq!(f.inverse().eval(&fx).unwrap(), x);
            }

            #[test]
            fn support_transport(a in arb_dyadic_map(4), b in arb_dyadic_map(4)) {
                let conj = a.conjugate(&b);
                prop_assert_eq!(conj.support(), b.image_of(&a.support()));
            }

            #[test]
            fn support_stable_under_inverse_and_powers(
                f in arb_dyadic_map(4),
                n in 1i64..=3,
            ) {
                prop_assert_eq!(f.support(), f.inverse().support());
                prop_assert_eq!(f.support(), f.power(n).support());
                prop_assert_eq!(f.support(), f.power(-n).support());
            }
        }
    }
}
