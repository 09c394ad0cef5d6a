//! Thompson's group F realized inside the dyadic subgroup of the PL
//! homeomorphism group of `[0, 1]`.
//!
//! The dyadic subgroup consists of the maps whose slopes are integral powers
//! of 2 and whose breakpoints have dyadic coordinates. The standard
//! generating pair lives there, relations of both classical presentations of
//! F can be verified bit-exactly, and a pair of maps can be issued a
//! certificate: it generates a copy of F as soon as it satisfies the
//! two-relation presentation and does not commute, because F has no proper
//! non-abelian quotients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::plmap::PLMap;
use crate::rational::{is_dyadic, is_power_of_two_ratio, rat, Rational};

/// The first standard generator:
/// breakpoints `(0,0), (1/4,1/2), (1/2,3/4), (1,1)`.
pub fn f0() -> PLMap {
    PLMap::make(vec![
        (rat(0, 1), rat(0, 1)),
        (rat(1, 4), rat(1, 2)),
        (rat(1, 2), rat(3, 4)),
        (rat(1, 1), rat(1, 1)),
    ])
    .unwrap()
}

/// The second standard generator, supported on `(1/2, 1)`:
/// breakpoints `(0,0), (1/2,1/2), (5/8,3/4), (3/4,7/8), (1,1)`.
pub fn f1() -> PLMap {
    PLMap::make(vec![
        (rat(0, 1), rat(0, 1)),
        (rat(1, 2), rat(1, 2)),
        (rat(5, 8), rat(3, 4)),
        (rat(3, 4), rat(7, 8)),
        (rat(1, 1), rat(1, 1)),
    ])
    .unwrap()
}

/// The standard generator family: `g(0)` and `g(1)` are the pair above and
/// `g(i)` for `i ≥ 2` is the conjugate of `g(1)` by the `(i-1)`-th power of
/// `g(0)`.
pub fn generator(i: usize) -> PLMap {
    match i {
        0 => f0(),
        1 => f1(),
        _ => f1().conjugate(&f0().power(i as i64 - 1)),
    }
}

/// Membership in the dyadic subgroup: every segment slope is an integral
/// power of 2 and every breakpoint coordinate is dyadic.
pub fn is_dyadic_map(f: &PLMap) -> bool {
    let bps = f.breakpoints();
    for (x, y) in bps {
        if !is_dyadic(x) || !is_dyadic(y) {
            return false;
        }
    }
    for w in bps.windows(2) {
        let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
        if !is_power_of_two_ratio(&slope) {
            return false;
        }
    }
    true
}

/// Tags for the two defining relations of the finite presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationTag {
    First,
    Second,
}

impl std::fmt::Display for RelationTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationTag::First => write!(f, "g1^(g0 g0) = g1^(g0 g1)"),
            RelationTag::Second => write!(f, "g1^(g0 g0 g0) = g1^(g0 g0 g1)"),
        }
    }
}

/// Returns the first failing relation of the two-relation presentation for
/// the pair `(p, q)` in the roles of `(g0, g1)`, or `None` when both hold.
///
/// Conjugation is `a^b = b⁻¹ a b` and exponent words multiply left to right.
pub fn check_relations(p: &PLMap, q: &PLMap) -> Option<RelationTag> {
    let pp = p.compose(p);
    let pq = p.compose(q);
    if q.conjugate(&pp) != q.conjugate(&pq) {
        return Some(RelationTag::First);
    }
    let ppp = pp.compose(p);
    let ppq = pp.compose(q);
    if q.conjugate(&ppp) != q.conjugate(&ppq) {
        return Some(RelationTag::Second);
    }
    None
}

/// True when the pair satisfies both relations of the finite presentation,
/// checked by exact equality of canonical breakpoint sequences.
pub fn verify_presentation1(p: &PLMap, q: &PLMap) -> bool {
    check_relations(p, q).is_none()
}

/// Checks `g_j^(g_i) = g_(j+1)` for all `0 ≤ i < j ≤ n`, with the family
/// `g_k` realized from the pair `(p, q)`.
pub fn verify_presentation2_prefix(p: &PLMap, q: &PLMap, n: usize) -> bool {
    assert!(n >= 2, "the prefix must include at least g2");
    let mut gens: Vec<PLMap> = vec![p.clone(), q.clone()];
    for k in 2..=(n + 1) {
        gens.push(q.conjugate(&p.power(k as i64 - 1)));
    }
    for j in 1..=n {
        for i in 0..j {
            if gens[j].conjugate(&gens[i]) != gens[j + 1] {
                return false;
            }
        }
    }
    true
}

/// Outcome of [`certify_f_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Both relations hold and the pair does not commute, so the generated
    /// group is isomorphic to F.
    IsomorphicToF,
    /// The relations hold trivially because the pair commutes.
    Commuting,
    /// A relation fails.
    RelationsFail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::IsomorphicToF => write!(f, "IsomorphicToF"),
            Verdict::Commuting => write!(f, "Commuting"),
            Verdict::RelationsFail => write!(f, "RelationsFail"),
        }
    }
}

/// Exact certificate for a candidate generating pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FCertificate {
    pub verdict: Verdict,
    pub failing_relation: Option<RelationTag>,
    pub commutator_witness: Option<PLMap>,
}

/// Decides whether `(p, q)` generates a copy of F.
///
/// `RelationsFail` when a presentation relation fails; `Commuting` when the
/// relations hold but the pair commutes (the relations are satisfied by any
/// commuting pair, so nothing is certified); otherwise `IsomorphicToF`
/// together with the non-identity commutator as witness.
pub fn certify_f_pair(p: &PLMap, q: &PLMap) -> FCertificate {
    if let Some(tag) = check_relations(p, q) {
        return FCertificate {
            verdict: Verdict::RelationsFail,
            failing_relation: Some(tag),
            commutator_witness: None,
        };
    }
    let comm = p.commutator(q);
    if comm.is_identity() {
        FCertificate {
            verdict: Verdict::Commuting,
            failing_relation: None,
            commutator_witness: None,
        }
    } else {
        FCertificate {
            verdict: Verdict::IsomorphicToF,
            failing_relation: None,
            commutator_witness: Some(comm),
        }
    }
}

/// Conjugation by `x ↦ x/2`: the result acts as `f` squeezed onto `[0, 1/2]`
/// and is the identity elsewhere.
pub fn scale_embed_half(f: &PLMap) -> PLMap {
    let two = Rational::from_integer(2.into());
    let mut points: Vec<(Rational, Rational)> = f
        .breakpoints()
        .iter()
        .map(|(x, y)| (x / &two, y / &two))
        .collect();
    points.push((Rational::one(), Rational::one()));
    PLMap::make(points).expect("squeezed breakpoints stay monotone")
}

/// Conjugation by `x ↦ x + 1/4` of a map fixed off `[0, 1/2]`: the result
/// acts on `[1/4, 3/4]` and is the identity elsewhere.
pub fn shift_embed_quarter(f: &PLMap) -> Result<PLMap> {
    let half = rat(1, 2);
    if let Some(hull) = f.support().hull() {
        if hull.hi() > &half {
            return Err(Error::OutOfDomain(
                "the map must be fixed off [0, 1/2]".into(),
            ));
        }
    }
    let quarter = rat(1, 4);
    let mut points = vec![(Rational::zero(), Rational::zero())];
    for (x, y) in f.breakpoints() {
        if x <= &half {
            points.push((x + &quarter, y + &quarter));
        }
    }
    // ensure the plateau reaches (3/4, 3/4) before returning to the diagonal
    if points.last().map(|p| p.0 != rat(3, 4)).unwrap_or(true) {
        points.push((rat(3, 4), rat(3, 4)));
    }
    points.push((Rational::one(), Rational::one()));
    Ok(PLMap::make(points).expect("shifted breakpoints stay monotone"))
}

/// Exponent of the denominator of a dyadic rational in lowest terms.
fn dyadic_exponent(r: &Rational) -> u64 {
    r.denom().magnitude().trailing_zeros().unwrap_or(0)
}

/// Greedy partition of a dyadic interval `[lo, hi]` into standard dyadic
/// intervals `[k/2^n, (k+1)/2^n]`, taking the largest such interval at each
/// step.
fn standard_partition(lo: &Rational, hi: &Rational) -> Vec<(Rational, Rational)> {
    let mut parts = vec![];
    let mut p = lo.clone();
    while &p < hi {
        let mut n = dyadic_exponent(&p);
        loop {
            let step = rat(1, 1) / Rational::from_integer(num_bigint::BigInt::from(1) << n);
            let q = &p + &step;
            if &q <= hi {
                parts.push((p.clone(), q.clone()));
                p = q;
                break;
            }
            n += 1;
        }
    }
    parts
}

/// Splits intervals (widest first, leftmost on ties) until the partition has
/// exactly `target` parts.
fn refine_to(parts: &mut Vec<(Rational, Rational)>, target: usize) {
    while parts.len() < target {
        let widest = parts
            .iter()
            .enumerate()
            .max_by(|(ia, a), (ib, b)| {
                let wa = &a.1 - &a.0;
                let wb = &b.1 - &b.0;
                wa.cmp(&wb).then(ib.cmp(ia))
            })
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi) = parts[widest].clone();
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        parts[widest] = (lo, mid.clone());
        parts.insert(widest + 1, (mid, hi));
    }
}

/// A member of the dyadic subgroup carrying `1/4 ↦ a` and `3/4 ↦ b`.
///
/// Built by partitioning `[0,1/4]`, `[1/4,3/4]`, `[3/4,1]` and their target
/// intervals `[0,a]`, `[a,b]`, `[b,1]` into matching numbers of standard
/// dyadic intervals and mapping them in order; every piece then has a
/// power-of-two slope and dyadic breaks. The output is one valid choice, not
/// a distinguished one.
pub fn carry_interval(a: &Rational, b: &Rational) -> Result<PLMap> {
    if !is_dyadic(a) {
        return Err(Error::NotDyadic(Box::new(a.clone())));
    }
    if !is_dyadic(b) {
        return Err(Error::NotDyadic(Box::new(b.clone())));
    }
    let (zero, one) = (Rational::zero(), Rational::one());
    if !(&zero < a && a < b && b < &one) {
        return Err(Error::BadOrder);
    }
    let sources = [
        (rat(0, 1), rat(1, 4)),
        (rat(1, 4), rat(3, 4)),
        (rat(3, 4), rat(1, 1)),
    ];
    let targets = [
        (zero.clone(), a.clone()),
        (a.clone(), b.clone()),
        (b.clone(), one.clone()),
    ];
    let mut points = vec![(zero, Rational::zero())];
    for ((slo, shi), (tlo, thi)) in sources.iter().zip(targets.iter()) {
        let mut src = standard_partition(slo, shi);
        let mut tgt = standard_partition(tlo, thi);
        let n = src.len().max(tgt.len());
        refine_to(&mut src, n);
        refine_to(&mut tgt, n);
        for (s, t) in src.iter().zip(tgt.iter()) {
            points.push((s.1.clone(), t.1.clone()));
        }
    }
    PLMap::make(points)
}
