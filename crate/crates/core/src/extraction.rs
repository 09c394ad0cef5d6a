//! The constructive extraction pipeline.
//!
//! Given a finitely generated subgroup with an orbital one of whose ends is
//! approached by some element on exactly one side, this module produces a
//! pair of elements generating a copy of Thompson's group F together with a
//! full audit trail: the threshold computation that seeds the pair, a record
//! of every replacement step with the classified orbital table after it, and
//! a final exact certificate.
//!
//! The pipeline repeatedly replaces the current group by a subgroup — the
//! seed pair, conjugate replacements that maximize the orbital count, power
//! replacements past computed thresholds, and word replacements that shift,
//! detach or commutator-ize the generating pair — until the projection to
//! every orbital is either a copy of F in standard position, a wreath
//! product whose commutators vanish, or abelian. The final pair of
//! commutator words then satisfies the two-relation presentation exactly and
//! fails to commute, which certifies the isomorphism type.

use std::fmt;

use crate::analysis::{approaches, sign_of_approach, GenSet, OrbitalInfo};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::plmap::{PLMap, Side};
use crate::rational::Rational;
use crate::thompson::{certify_f_pair, FCertificate, Verdict};
use crate::words::Word;

const ITERATION_CAP: u32 = 1_000_000;

/// Trace of the seed-pair construction: the exact quantities from which the
/// power threshold is derived, and the resulting pair.
///
/// All quantities are stated for an endpoint approached from the left (the
/// right end of the orbital); for a left endpoint the inequalities mirror.
#[derive(Debug, Clone, PartialEq)]
pub struct GermExtraction {
    /// The orbital the construction works in.
    pub orbital: Interval,
    /// The end of the orbital approached by `h` and not by its other end.
    pub endpoint: Rational,
    /// `+1` when positive powers push points toward the endpoint.
    pub sign: i8,
    /// The common one-sided slope of both maps at the endpoint.
    pub slope: Rational,
    /// The edge of the support of `h` far from the endpoint.
    pub support_edge: Rational,
    /// Both maps are affine between here and the endpoint.
    pub affine_from: Rational,
    /// Least `m ≥ 1` carrying the support edge past `affine_from`.
    pub inner_power: u32,
    /// The image of the support edge under that power of `f`.
    pub carried_edge: Rational,
    /// The conjugate of `h` by that power is affine from here on.
    pub conj_affine_from: Rational,
    /// Least `n ≥ 1` carrying `carried_edge` past `conj_affine_from`.
    pub outer_power: u32,
    /// `max(inner_power, outer_power)`; any strictly larger exponent works.
    pub threshold: u32,
    /// The exponent actually used, `threshold + 1`.
    pub exponent: u32,
    /// The certified pair `(f, h)` raised to `exponent · sign`.
    pub pair: (PLMap, PLMap),
    /// The conjugating word, when the pair came from a one-sided witness.
    pub conjugator: Option<Word>,
}

/// Largest breakpoint coordinate of `f` strictly below `e`.
fn last_break_below(f: &PLMap, e: &Rational) -> Rational {
    f.breakpoints()
        .iter()
        .rev()
        .find(|(x, _)| x < e)
        .map(|(x, _)| x.clone())
        .expect("every map has a breakpoint below a positive point")
}

fn flip_point(x: &Rational) -> Rational {
    Rational::from_integer(1.into()) - x
}

fn flip_interval(a: &Interval) -> Interval {
    Interval::new(flip_point(a.hi()), flip_point(a.lo()))
}

/// Checks the postconditions of a seed pair: both presentation relations
/// hold, the commutator is non-trivial, and the support of the second
/// component is a proper subset of one orbital of the first.
fn check_seed_pair(pair: &(PLMap, PLMap)) -> std::result::Result<(), String> {
    let cert = certify_f_pair(&pair.0, &pair.1);
    if cert.verdict != Verdict::IsomorphicToF {
        return Err(format!("seed pair certificate is {}", cert.verdict));
    }
    let s1 = pair.1.support();
    let orbitals0 = pair.0.support();
    let home = orbitals0.components().iter().find(|c| {
        s1.components().iter().all(|m| m.subset_of(c))
    });
    match home {
        None => Err("support of the second component is not inside one orbital of the first".into()),
        Some(c) => {
            if s1.components() == std::slice::from_ref(c) {
                Err("support of the second component is not a proper subset".into())
            } else {
                Ok(())
            }
        }
    }
}

/// The threshold quantities alone, without the pair.
struct GermQuantities {
    sign: i8,
    slope: Rational,
    support_edge: Rational,
    affine_from: Rational,
    inner_power: u32,
    carried_edge: Rational,
    conj_affine_from: Rational,
    outer_power: u32,
    threshold: u32,
}

/// Quantities for an endpoint approached from the left (`e = orbital.hi()`).
/// Preconditions are assumed verified by the caller.
fn germ_quantities_right(f: &PLMap, h: &PLMap, a: &Interval) -> GermQuantities {
    let e = a.hi();
    let sign = sign_of_approach(h, e, a).expect("approach verified by caller");
    debug_assert_eq!(sign, sign_of_approach(f, e, a).unwrap());
    let slope = h.slope_at(e, Side::Left).expect("interior side");

    let supp_h = h.support();
    let support_edge = supp_h.components()[0].lo().clone();
    let affine_from = last_break_below(f, e).max(last_break_below(h, e));
    debug_assert!(support_edge < affine_from);

    let f_step = f.power(sign as i64);
    let mut carried_edge = support_edge.clone();
    let mut inner_power = 0u32;
    while carried_edge <= affine_from {
        carried_edge = f_step.at(&carried_edge);
        inner_power += 1;
        assert!(inner_power < ITERATION_CAP, "carrying the support edge diverged");
    }

    let q = h.conjugate(&f.power(inner_power as i64 * sign as i64));
    let conj_affine_from = last_break_below(&q, e);

    let h_step = h.power(sign as i64);
    let mut reach = carried_edge.clone();
    let mut outer_power = 0u32;
    while reach <= conj_affine_from {
        reach = h_step.at(&reach);
        outer_power += 1;
        assert!(outer_power < ITERATION_CAP, "carrying past the conjugate diverged");
    }

    GermQuantities {
        sign,
        slope,
        support_edge,
        affine_from,
        inner_power,
        carried_edge,
        conj_affine_from,
        outer_power,
        threshold: inner_power.max(outer_power),
    }
}

/// Validates the germ-pair preconditions, then computes the quantities,
/// mirroring through `x ↦ 1 - x` for a left endpoint.
fn germ_quantities(f: &PLMap, h: &PLMap, a: &Interval, e: &Rational) -> Result<GermQuantities> {
    if !a.has_endpoint(e) {
        return Err(Error::EndpointMismatch {
            point: Box::new(e.clone()),
            lo: Box::new(a.lo().clone()),
            hi: Box::new(a.hi().clone()),
        });
    }
    let group = GenSet::pair(f.clone(), h.clone());
    if group.orbitals() != vec![a.clone()] {
        return Err(Error::PreconditionFailed("not-only-orbital"));
    }
    if !f.support().components().contains(a) {
        return Err(Error::PreconditionFailed("not-orbital-of-f"));
    }
    let other = if e == a.lo() { a.hi() } else { a.lo() };
    if !approaches(h, e, a)? {
        return Err(Error::PreconditionFailed("does-not-approach"));
    }
    if approaches(h, other, a)? {
        return Err(Error::PreconditionFailed("approaches-both-ends"));
    }
    let side = if e == a.hi() { Side::Left } else { Side::Right };
    if f.slope_at(e, side)? != h.slope_at(e, side)? {
        return Err(Error::PreconditionFailed("not-same-germ"));
    }

    if e == a.hi() {
        Ok(germ_quantities_right(f, h, a))
    } else {
        let t = germ_quantities_right(&f.flip(), &h.flip(), &flip_interval(a));
        Ok(GermQuantities {
            sign: t.sign,
            slope: t.slope,
            support_edge: flip_point(&t.support_edge),
            affine_from: flip_point(&t.affine_from),
            inner_power: t.inner_power,
            carried_edge: flip_point(&t.carried_edge),
            conj_affine_from: flip_point(&t.conj_affine_from),
            outer_power: t.outer_power,
            threshold: t.threshold,
        })
    }
}

/// Builds a certified pair from two maps sharing a germ at an end of their
/// common orbital.
///
/// Preconditions, each with a named failure: `a` is the only orbital of the
/// group generated by `f` and `h` (`not-only-orbital`); `a` is an orbital of
/// `f` itself (`not-orbital-of-f`); `h` approaches `e` (`does-not-approach`)
/// and not the other end (`approaches-both-ends`); `f` and `h` have the same
/// one-sided slope at `e` (`not-same-germ`), which for maps fixing `e` means
/// they agree near `e`.
///
/// The returned pair is `(f, h)` raised to `(threshold + 1) · sign` and is
/// verified to satisfy both presentation relations with a non-trivial
/// commutator, the support of the second component a proper subset of one
/// orbital of the first.
pub fn extract_germ_pair(
    f: &PLMap,
    h: &PLMap,
    a: &Interval,
    e: &Rational,
) -> Result<GermExtraction> {
    let q = germ_quantities(f, h, a, e)?;
    let exponent = q.threshold + 1;
    let exp = exponent as i64 * q.sign as i64;
    let trace = GermExtraction {
        orbital: a.clone(),
        endpoint: e.clone(),
        sign: q.sign,
        slope: q.slope,
        support_edge: q.support_edge,
        affine_from: q.affine_from,
        inner_power: q.inner_power,
        carried_edge: q.carried_edge,
        conj_affine_from: q.conj_affine_from,
        outer_power: q.outer_power,
        threshold: q.threshold,
        exponent,
        pair: (f.power(exp), h.power(exp)),
        conjugator: None,
    };
    check_seed_pair(&trace.pair).map_err(|message| Error::InvariantViolated {
        step: 0,
        message,
        steps: vec![],
    })?;
    Ok(trace)
}

/// Builds a certified pair from a witness word whose realization approaches
/// the end `e` of the group's single orbital and not the other end.
///
/// A conjugating word is found by breadth-first search: it must carry the
/// far edge of the witness's support into the witness's orbital at `e`. The
/// conjugated witness then shares the witness's germ at `e`, reducing to
/// [`extract_germ_pair`], and the returned pair is
/// `(h, conjugate of h)` raised to the computed exponent, with the
/// conjugating word recorded.
pub fn extract_witness_pair(
    gens: &GenSet,
    witness: &Word,
    a: &Interval,
    e: &Rational,
    max_len: usize,
) -> Result<GermExtraction> {
    if !a.has_endpoint(e) {
        return Err(Error::EndpointMismatch {
            point: Box::new(e.clone()),
            lo: Box::new(a.lo().clone()),
            hi: Box::new(a.hi().clone()),
        });
    }
    if gens.orbitals() != vec![a.clone()] {
        return Err(Error::PreconditionFailed("not-only-orbital"));
    }
    let h = gens.evaluate_word(witness)?;
    if !approaches(&h, e, a)? {
        return Err(Error::PreconditionFailed("does-not-approach"));
    }
    let other = if e == a.lo() { a.hi() } else { a.lo() };
    if approaches(&h, other, a)? {
        return Err(Error::PreconditionFailed("approaches-both-ends"));
    }

    let supp_h = h.support();
    let b = supp_h
        .components()
        .iter()
        .find(|c| c.subset_of(a) && c.has_endpoint(e))
        .expect("approach verified above")
        .clone();
    let far_edge = if e == a.hi() {
        supp_h.components().first().unwrap().lo().clone()
    } else {
        supp_h.components().last().unwrap().hi().clone()
    };

    let conj_word = gens.find_moving_word(&far_edge, &b, max_len)?;
    let carrier = gens.evaluate_word(&conj_word)?;
    let h_conj = h.conjugate(&carrier);
    let h_on_b = h.restrict_to(&IntervalSet::singleton(b.clone()))?;

    let mut trace = extract_germ_pair(&h_on_b, &h_conj, &b, e)?;

    // the pair uses the unrestricted witness, which may act on other
    // orbitals of a larger ambient group
    let exp = trace.exponent as i64 * trace.sign as i64;
    trace.pair = (h.power(exp), h_conj.power(exp));
    trace.conjugator = Some(conj_word);
    check_seed_pair(&trace.pair).map_err(|message| Error::InvariantViolated {
        step: 0,
        message,
        steps: vec![],
    })?;
    Ok(trace)
}

/// First orbital in the table violating the purity conclusions, ignoring
/// orbitals on which the projection of the pair is abelian: an orbital of
/// type `(1,1)`, or an impure orbital of type `(1,2)`, `(2,1)`, `(0,2)` or
/// `(2,0)`.
fn violation_in_table(pair: &GenSet, table: &[OrbitalInfo]) -> Result<Option<OrbitalInfo>> {
    for info in table {
        let violating = match info.orbital_type {
            (1, 1) => true,
            (1, 2) | (2, 1) | (0, 2) | (2, 0) => !info.pure,
            _ => false,
        };
        if violating && !pair.projection_is_abelian(&info.interval)? {
            return Ok(Some(info.clone()));
        }
    }
    Ok(None)
}

fn find_conclusion_violation(pair: &GenSet) -> Result<Option<OrbitalInfo>> {
    let table = pair.orbital_table()?;
    violation_in_table(pair, &table)
}

/// Conjugate replacement until no orbital violates the purity conclusions:
/// no orbital of type `(1,1)` and every orbital of type `(1,2)`, `(2,1)`,
/// `(0,2)`, `(2,0)` pure, among orbitals with non-abelian projection.
///
/// While a violation exists, a breadth-first search over conjugating words
/// (applied to either generator, first hit wins) looks for a replacement
/// that strictly increases the number of orbitals. The orbital count is
/// bounded by the sum of the generators' orbital counts, which conjugation
/// preserves, so the loop terminates. [`Error::SearchExhausted`] reports a
/// remaining violation with no improving conjugate within `max_len`.
pub fn purify(pair: &GenSet, max_len: usize) -> Result<GenSet> {
    assert!(pair.len() == 2, "purification works on an ordered pair");
    let mut cur = pair.clone();
    let bound = cur.beta(0) + cur.beta(1);
    let mut rounds = 0usize;
    loop {
        if find_conclusion_violation(&cur)?.is_none() {
            return Ok(cur);
        }
        let base_alpha = cur.alpha();
        let snapshot = cur.clone();
        let improved = snapshot.bfs_words(max_len, |_, m| {
            if m.is_identity() {
                return None;
            }
            for gi in 0..2 {
                let mut gens = snapshot.generators().to_vec();
                gens[gi] = gens[gi].conjugate(m);
                let cand = GenSet::new(gens);
                if cand.alpha() > base_alpha {
                    return Some(cand);
                }
            }
            None
        });
        match improved {
            Some(next) => cur = next,
            None => return Err(Error::SearchExhausted(max_len)),
        }
        rounds += 1;
        assert!(rounds <= bound, "orbital count exceeded its invariant bound");
    }
}

/// Least `k ≥ 1` such that the `k`-th power of the full-orbital generator
/// carries the open convex hull of the other generator's support inside the
/// orbital off itself.
fn hull_clearing_power(pair: &GenSet, info: &OrbitalInfo) -> u32 {
    let (full, other) = if info.orbital_type == (2, 0) {
        (pair.get(0), pair.get(1))
    } else {
        (pair.get(1), pair.get(0))
    };
    let inside = other.support().intersect_interval(&info.interval);
    let hull = match inside.hull() {
        Some(h) => h,
        None => return 1,
    };
    let mut lo = hull.lo().clone();
    let mut hi = hull.hi().clone();
    let mut k = 0u32;
    loop {
        k += 1;
        lo = full.at(&lo);
        hi = full.at(&hi);
        if &hi <= hull.lo() || &lo >= hull.hi() {
            return k;
        }
        assert!(k < ITERATION_CAP, "hull clearing diverged");
    }
}

/// Least `k ≥ 1` such that the signed `k`-th power of the full-orbital
/// generator carries the other generator's support inside the orbital into a
/// single orbital of the other generator.
fn single_orbital_power(pair: &GenSet, info: &OrbitalInfo) -> Result<u32> {
    let (full, other) = if info.orbital_type == (2, 1) {
        (pair.get(0), pair.get(1))
    } else {
        (pair.get(1), pair.get(0))
    };
    let a = &info.interval;
    let shared = if approaches(other, a.hi(), a)? {
        a.hi().clone()
    } else {
        a.lo().clone()
    };
    let sgn = sign_of_approach(full, &shared, a)?;
    let step = full.power(sgn as i64);
    let mut moving = other.support().intersect_interval(a);
    if moving.is_empty() {
        return Ok(1);
    }
    let targets = other.support();
    let mut k = 0u32;
    loop {
        k += 1;
        moving = step.image_of(&moving);
        let inside_one = targets
            .components()
            .iter()
            .any(|c| moving.components().iter().all(|m| m.subset_of(c)));
        if inside_one {
            return Ok(k);
        }
        assert!(k < ITERATION_CAP, "single-orbital carry diverged");
    }
}

/// Least `k ≥ 1` such that for all `|i| ≥ k`, the image under the `i`-th
/// power of either generator of the other generator's fixed set inside the
/// orbital is disjoint from that fixed set. Fixed points of conjugates and
/// of all eight sign/order commutator combinations reduce to this condition.
fn fixed_point_escape_power(pair: &GenSet, info: &OrbitalInfo) -> u32 {
    let a = &info.interval;
    let mut k = 1u32;
    for (fi, mi) in [(0usize, 1usize), (1, 0)] {
        let fix = pair.get(fi).fixed_set();
        let mover = pair.get(mi);
        let msupp = mover.support();
        let comps: Vec<(Rational, Rational)> = fix
            .components()
            .iter()
            .filter(|(lo, hi)| hi > a.lo() && lo < a.hi())
            .cloned()
            .collect();
        for (l, r) in &comps {
            // in a (2,2) orbital the fixed set is interior, and each fixed
            // component is moved entirely by the other generator
            debug_assert!(l > a.lo() && r < a.hi());
            let home = msupp
                .components()
                .iter()
                .find(|c| c.contains(l))
                .expect("a point fixed by one generator is moved by the other")
                .clone();
            for dir in [1i64, -1] {
                let step = mover.power(dir);
                let to_right = step.at(l) > *l;
                let eps = if to_right { home.hi() } else { home.lo() };
                let limit = comps
                    .iter()
                    .filter(|(c2, d2)| if to_right { d2 < eps } else { c2 > eps })
                    .map(|(c2, d2)| if to_right { d2.clone() } else { c2.clone() })
                    .reduce(|x, y| if to_right { x.max(y) } else { x.min(y) });
                let limit = match limit {
                    Some(l) => l,
                    None => continue,
                };
                let mut lo_img = l.clone();
                let mut hi_img = r.clone();
                let mut j = 0u32;
                let mut last_hit = 0u32;
                loop {
                    j += 1;
                    lo_img = step.at(&lo_img);
                    hi_img = step.at(&hi_img);
                    if comps.iter().any(|(c2, d2)| &lo_img <= d2 && c2 <= &hi_img) {
                        last_hit = j;
                    }
                    let passed = if to_right {
                        lo_img > limit
                    } else {
                        hi_img < limit
                    };
                    if passed {
                        break;
                    }
                    assert!(j < ITERATION_CAP, "fixed-point escape diverged");
                }
                k = k.max(last_hit + 1);
            }
        }
    }
    k
}

/// The power-replacement threshold for a pair satisfying the purity
/// conclusions: the maximum, over the orbitals, of the least powers that
/// (for pure non-empty `(2,0)`/`(0,2)`) clear the convex hull of the other
/// generator's support off itself, (for pure `(2,1)`/`(1,2)`) carry the
/// other generator's support into a single orbital of that generator, and
/// (for `(2,2)`) separate images of each generator's fixed points from that
/// fixed set. At least 1.
pub fn power_threshold(pair: &GenSet) -> Result<u32> {
    let table = pair.orbital_table()?;
    power_threshold_with(pair, &table)
}

fn power_threshold_with(pair: &GenSet, table: &[OrbitalInfo]) -> Result<u32> {
    assert!(pair.len() == 2, "thresholds are defined for an ordered pair");
    if violation_in_table(pair, table)?.is_some() {
        return Err(Error::PreconditionFailed("conclusions-not-satisfied"));
    }
    let mut k = 1u32;
    for info in table {
        match info.orbital_type {
            (2, 0) | (0, 2) if info.pure && !info.empty => {
                k = k.max(hull_clearing_power(pair, info));
            }
            (2, 1) | (1, 2) if info.pure => {
                k = k.max(single_orbital_power(pair, info)?);
            }
            (2, 2) => {
                k = k.max(fixed_point_escape_power(pair, info));
            }
            _ => {}
        }
    }
    Ok(k)
}

/// Additional threshold for equal-power replacement: on every pure `(2,1)`
/// orbital where the two generators share their germ at the common end, the
/// seed-pair threshold of the projections. Past this power the projection is
/// a copy of F in standard position.
fn germ_power_threshold(pair: &GenSet, table: &[OrbitalInfo]) -> Result<u32> {
    let mut k = 1u32;
    for info in table {
        if info.orbital_type != (2, 1) || !info.pure {
            continue;
        }
        let a = &info.interval;
        let shared = if approaches(pair.get(1), a.hi(), a)? {
            a.hi().clone()
        } else {
            a.lo().clone()
        };
        let side = if &shared == a.hi() { Side::Left } else { Side::Right };
        if pair.get(0).slope_at(&shared, side)? != pair.get(1).slope_at(&shared, side)? {
            continue;
        }
        let set = IntervalSet::singleton(a.clone());
        let f = pair.get(0).restrict_to(&set)?;
        let h = pair.get(1).restrict_to(&set)?;
        let q = germ_quantities(&f, &h, a, &shared)?;
        k = k.max(q.threshold);
    }
    Ok(k)
}

/// Checks that `base` generates a restricted wreath product with `h_top` on
/// top: the support of `base` must fit in a fundamental domain of `h_top`
/// (half-open, so distinct power-images are disjoint), and every conjugate
/// of `base` by a power `h_top^k`, `1 ≤ |k| ≤ depth`, must commute
/// elementwise with `base`, exactly. Returns `false` on any failure.
pub fn wreath_check(h_top: &PLMap, base: &GenSet, depth: u32) -> bool {
    if h_top.is_identity() {
        return false;
    }
    if let Some(hull) = base.support().hull() {
        let up = h_top.at(hull.lo());
        let down = h_top.at(hull.hi());
        let fits_right = &up >= hull.hi();
        let fits_left = &down <= hull.lo();
        if !fits_right && !fits_left {
            return false;
        }
    }
    for k in 1..=depth {
        for sign in [1i64, -1] {
            let p = h_top.power(sign * k as i64);
            for u in base.generators() {
                for v in base.generators() {
                    let vc = v.conjugate(&p);
                    if u.compose(&vc) != vc.compose(u) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// One row of the sign-transition table for the shift replacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTransition {
    pub old_sigma: (i8, i8),
    pub new_type: (u8, u8),
    pub new_sigma: Option<(i8, i8)>,
}

/// How the shift replacement transforms a pure `(2,1)` orbital with the
/// given sign pair: the type and sign pair of the one non-empty orbital it
/// leaves behind.
pub fn sigma_transition(old_sigma: (i8, i8)) -> SigmaTransition {
    let (new_type, new_sigma) = match old_sigma {
        (1, 1) => ((2, 1), Some((1, 1))),
        (1, -1) => ((2, 1), Some((-1, -1))),
        (-1, 1) => ((1, 2), None),
        (-1, -1) => ((1, 2), None),
        _ => panic!("approach signs must be ±1"),
    };
    SigmaTransition {
        old_sigma,
        new_type,
        new_sigma,
    }
}

fn two(pair: &GenSet) -> (&PLMap, &PLMap) {
    assert!(pair.len() == 2, "this replacement works on an ordered pair");
    (pair.get(0), pair.get(1))
}

/// The replacement `(g0, g1) ↦ (g1, g0⁻¹ g1 g0)`.
pub fn shift_pair(pair: &GenSet) -> GenSet {
    let (g0, g1) = two(pair);
    GenSet::pair(g1.clone(), g1.conjugate(g0))
}

/// The replacement `(g0, g1) ↦ (g1, g1 g0⁻¹ g1⁻¹ g0)`: the new second
/// generator's support detaches from the end the pair jointly approaches.
pub fn detach_pair(pair: &GenSet) -> GenSet {
    let (g0, g1) = two(pair);
    let second = g1
        .compose(&g0.inverse())
        .compose(&g1.inverse())
        .compose(g0);
    GenSet::pair(g1.clone(), second)
}

/// The replacement `(g0, g1) ↦ (g0⁻¹, g1⁻¹)`, flipping approach signs.
pub fn invert_pair(pair: &GenSet) -> GenSet {
    let (g0, g1) = two(pair);
    GenSet::pair(g0.inverse(), g1.inverse())
}

/// The final replacement `(g0, g1) ↦ (g0⁻² g1 g0² g1⁻¹, g0⁻¹ g1 g0 g1⁻¹)`.
/// Both components are commutators, so their images in any wreath-product
/// projection commute.
pub fn commutator_pair(pair: &GenSet) -> GenSet {
    let (g0, g1) = two(pair);
    let first = g0
        .power(-2)
        .compose(g1)
        .compose(&g0.power(2))
        .compose(&g1.inverse());
    let second = g0
        .inverse()
        .compose(g1)
        .compose(g0)
        .compose(&g1.inverse());
    GenSet::pair(first, second)
}

/// The replacement `(g0, g1) ↦ (g0^(k+1), g1^(k+1))`, the deterministic
/// smallest choice of powers exceeding the threshold `k`. The `equal` flag
/// records whether equal powers are required; the deterministic choice
/// coincides in both modes.
pub fn raise_powers(pair: &GenSet, k: u32, equal: bool) -> GenSet {
    let _ = equal;
    let (g0, g1) = two(pair);
    let e = (k + 1) as i64;
    GenSet::pair(g0.power(e), g1.power(e))
}

/// The state after one pipeline step.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    /// Step number, 1 through 11; the two repetition rounds both record as 5.
    pub step: u8,
    pub note: String,
    pub pair: (PLMap, PLMap),
    /// Classified orbital table of the pair after the step.
    pub orbitals: Vec<OrbitalInfo>,
    /// The tracked distinguished pure (2,1) orbital.
    pub distinguished: Interval,
    /// The power threshold used, for power-replacement steps.
    pub threshold: Option<u32>,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {:2} [{}]", self.step, self.note)?;
        if let Some(k) = self.threshold {
            write!(f, " threshold {}", k)?;
        }
        for o in &self.orbitals {
            write!(f, "\n    {}", o)?;
        }
        Ok(())
    }
}

/// Complete audit trail of one extraction.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionTrace {
    /// The witness word and the orbital/endpoint it is one-sided at.
    pub witness: Word,
    pub orbital: Interval,
    pub endpoint: Rational,
    /// The seed-pair construction with its exact threshold quantities.
    pub seed: GermExtraction,
    /// One record per pipeline step.
    pub steps: Vec<StepRecord>,
    /// The certified generating pair.
    pub final_pair: (PLMap, PLMap),
    pub certificate: FCertificate,
}

struct Pipeline {
    pair: GenSet,
    /// Classified table of the current pair, refreshed once per replacement.
    table: Vec<OrbitalInfo>,
    a0: Interval,
    steps: Vec<StepRecord>,
}

impl Pipeline {
    fn start(pair: GenSet, a0: Interval) -> Result<Pipeline> {
        let table = pair.orbital_table()?;
        Ok(Pipeline {
            pair,
            table,
            a0,
            steps: vec![],
        })
    }

    fn replace(&mut self, pair: GenSet) -> Result<()> {
        self.table = pair.orbital_table()?;
        self.pair = pair;
        Ok(())
    }

    fn violated(&self, step: u8, message: String) -> Error {
        Error::InvariantViolated {
            step,
            message,
            steps: self.steps.clone(),
        }
    }

    fn record(&mut self, step: u8, note: &str, threshold: Option<u32>) {
        self.steps.push(StepRecord {
            step,
            note: note.to_string(),
            pair: (self.pair.get(0).clone(), self.pair.get(1).clone()),
            orbitals: self.table.clone(),
            distinguished: self.a0.clone(),
            threshold,
        });
    }

    /// Relocates the distinguished orbital: the unique pure (2,1) orbital of
    /// the current pair contained in the previous one.
    fn relocate_a0(&mut self, step: u8) -> Result<()> {
        let mut found: Vec<Interval> = self
            .table
            .iter()
            .filter(|o| o.orbital_type == (2, 1) && o.pure && o.interval.subset_of(&self.a0))
            .map(|o| o.interval.clone())
            .collect();
        if found.len() != 1 {
            return Err(self.violated(
                step,
                format!(
                    "expected exactly one pure (2,1) orbital inside {}, found {}",
                    self.a0,
                    found.len()
                ),
            ));
        }
        self.a0 = found.pop().unwrap();
        Ok(())
    }

    fn assert_a0_sigma(&self, step: u8, want: (i8, i8)) -> Result<()> {
        let info = self
            .table
            .iter()
            .find(|o| o.interval == self.a0)
            .ok_or_else(|| {
                self.violated(step, format!("distinguished orbital {} vanished", self.a0))
            })?;
        if !(info.orbital_type == (2, 1) && info.pure && info.sigma == Some(want)) {
            return Err(self.violated(
                step,
                format!(
                    "distinguished orbital should be pure (2,1) with σ=({:+},{:+}) but is {}",
                    want.0, want.1, info
                ),
            ));
        }
        Ok(())
    }

    fn assert_conclusions(&self, step: u8) -> Result<()> {
        if let Some(v) = violation_in_table(&self.pair, &self.table)? {
            return Err(self.violated(step, format!("purity conclusions fail on {}", v)));
        }
        Ok(())
    }

    /// Orbitals whose projection is not abelian; step-profile assertions are
    /// scoped to these.
    fn essential_orbitals(&self) -> Result<Vec<OrbitalInfo>> {
        let mut out = vec![];
        for info in &self.table {
            if !self.pair.projection_is_abelian(&info.interval)? {
                out.push(info.clone());
            }
        }
        Ok(out)
    }

    fn assert_profile_unchanged(&self, step: u8, before: &[OrbitalInfo]) -> Result<()> {
        if self.table != before {
            return Err(self.violated(
                step,
                "power replacement changed the orbital table".to_string(),
            ));
        }
        Ok(())
    }
}

/// Runs the full extraction pipeline.
///
/// The witness, given or found by search, must approach exactly one end of
/// one orbital of the group. The pipeline then replaces the group by a
/// chain of subgroups — the seed pair, purifying conjugate replacements,
/// power replacements past computed thresholds and the shift / detach /
/// invert / commutator word replacements — recording the classified orbital
/// table after every step and checking the profile each step guarantees.
/// The final pair is certified exactly; anything short of
/// `IsomorphicToF` is an [`Error::InvariantViolated`] carrying the records.
pub fn extract_f(
    gens: &GenSet,
    witness: Option<&Word>,
    search_depth: usize,
) -> Result<ExtractionTrace> {
    let (orbital, h_word) = gens.hypothesis_check(witness, search_depth)?;
    let h = gens.evaluate_word(&h_word)?;
    let e = if approaches(&h, orbital.lo(), &orbital)? {
        orbital.lo().clone()
    } else {
        orbital.hi().clone()
    };

    // the seed quantities are computed in the projection to the orbital,
    // then the pair is realized by the same words in the full group
    let proj = gens.projection(&orbital)?;
    let seed = extract_witness_pair(&proj, &h_word, &orbital, &e, search_depth)?;
    let conj_word = seed
        .conjugator
        .clone()
        .expect("the witness path records its conjugator");
    let carrier = gens.evaluate_word(&conj_word)?;
    let exp = seed.exponent as i64 * seed.sign as i64;
    let g0 = h.power(exp);
    let g1 = h.conjugate(&carrier).power(exp);

    let mut pl = Pipeline::start(GenSet::pair(g0, g1), seed.orbital.clone())?;

    pl.record(1, "replace the group by the seed pair", None);
    pl.assert_a0_sigma(1, (1, 1))?;

    let purified = purify(&pl.pair, search_depth)?;
    pl.replace(purified)?;
    pl.relocate_a0(2)?;
    pl.record(2, "conjugate replacement until purity conclusions hold", None);
    pl.assert_conclusions(2)?;
    pl.assert_a0_sigma(2, (1, 1))?;

    for round in 1..=3u8 {
        let (power_step, shift_step) = if round == 1 { (3, 4) } else { (5, 5) };
        let k = power_threshold_with(&pl.pair, &pl.table)?;
        let before = pl.table.clone();
        let raised = raise_powers(&pl.pair, k, false);
        pl.replace(raised)?;
        pl.record(
            power_step,
            &format!("raise both generators to power {} (round {})", k + 1, round),
            Some(k),
        );
        pl.assert_profile_unchanged(power_step, &before)?;

        let shifted = shift_pair(&pl.pair);
        pl.replace(shifted)?;
        pl.relocate_a0(shift_step)?;
        pl.record(shift_step, &format!("shift the pair (round {})", round), None);
        pl.assert_a0_sigma(shift_step, (1, 1))?;
    }
    for o in pl.essential_orbitals()? {
        let fine = o.orbital_type == (2, 2)
            || (o.orbital_type == (2, 1) && o.pure && o.sigma == Some((1, 1)));
        if !fine {
            return Err(pl.violated(
                5,
                format!("after the repeated rounds, unexpected orbital {}", o),
            ));
        }
    }

    let k6 = power_threshold_with(&pl.pair, &pl.table)?;
    let before = pl.table.clone();
    let raised = raise_powers(&pl.pair, k6, false);
    pl.replace(raised)?;
    pl.record(
        6,
        &format!("raise both generators to power {}", k6 + 1),
        Some(k6),
    );
    pl.assert_profile_unchanged(6, &before)?;

    let detached = detach_pair(&pl.pair);
    pl.replace(detached)?;
    pl.relocate_a0(7)?;
    pl.record(7, "detach the second generator from the shared end", None);
    pl.assert_a0_sigma(7, (-1, -1))?;

    let purified = purify(&pl.pair, search_depth)?;
    pl.replace(purified)?;
    pl.relocate_a0(8)?;
    pl.record(8, "conjugate replacement until purity conclusions hold", None);
    pl.assert_conclusions(8)?;
    for o in pl.essential_orbitals()? {
        if o.orbital_type == (2, 1) && o.sigma != Some((-1, -1)) {
            return Err(pl.violated(8, format!("pure (2,1) orbital with wrong signs: {}", o)));
        }
        if o.orbital_type == (1, 2) {
            return Err(pl.violated(8, format!("unexpected (1,2) orbital: {}", o)));
        }
    }

    let inverted = invert_pair(&pl.pair);
    pl.replace(inverted)?;
    pl.record(9, "invert both generators", None);
    pl.assert_a0_sigma(9, (1, 1))?;

    let k10 = power_threshold_with(&pl.pair, &pl.table)?
        .max(germ_power_threshold(&pl.pair, &pl.table)?);
    let before = pl.table.clone();
    let raised = raise_powers(&pl.pair, k10, true);
    pl.replace(raised)?;
    pl.record(
        10,
        &format!("raise both generators to the equal power {}", k10 + 1),
        Some(k10),
    );
    pl.assert_profile_unchanged(10, &before)?;

    let final_replacement = commutator_pair(&pl.pair);
    pl.replace(final_replacement)?;
    pl.record(11, "replace the generators by the commutator words", None);

    let final_pair = (pl.pair.get(0).clone(), pl.pair.get(1).clone());
    let certificate = certify_f_pair(&final_pair.0, &final_pair.1);
    if certificate.verdict != Verdict::IsomorphicToF {
        return Err(pl.violated(
            11,
            format!("final certificate is {}", certificate.verdict),
        ));
    }

    Ok(ExtractionTrace {
        witness: h_word,
        orbital,
        endpoint: e,
        seed,
        steps: pl.steps,
        final_pair,
        certificate,
    })
}
