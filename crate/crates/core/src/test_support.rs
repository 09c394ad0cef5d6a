//! Shared fixtures and generators for the unit tests.

use proptest::prelude::*;

use crate::plmap::PLMap;
use crate::rational::{rat, Rational};
use crate::thompson;

/// Breakpoints from `(x_num, x_den, y_num, y_den)` quadruples.
pub fn bp(quads: &[(i64, i64, i64, i64)]) -> Vec<(Rational, Rational)> {
    quads
        .iter()
        .map(|(xn, xd, yn, yd)| (rat(*xn, *xd), rat(*yn, *yd)))
        .collect()
}

pub fn f0() -> PLMap {
    thompson::f0()
}

pub fn f1() -> PLMap {
    thompson::f1()
}

/// A bump supported on `(1/4, 1/2)` with dyadic breaks and slopes 2, 1, 1/2.
pub fn quarter_bump() -> PLMap {
    PLMap::make(bp(&[
        (0, 1, 0, 1),
        (1, 4, 1, 4),
        (5, 16, 3, 8),
        (3, 8, 7, 16),
        (1, 2, 1, 2),
        (1, 1, 1, 1),
    ]))
    .unwrap()
}

/// A map with two bumps, one on `(0, 1/2)` and one on `(1/2, 1)`, returned
/// together with the single-bump factors.
pub fn two_bump() -> (PLMap, PLMap, PLMap) {
    let first = PLMap::make(bp(&[
        (0, 1, 0, 1),
        (1, 16, 1, 4),
        (1, 2, 1, 2),
        (1, 1, 1, 1),
    ]))
    .unwrap();
    let second = PLMap::make(bp(&[
        (0, 1, 0, 1),
        (1, 2, 1, 2),
        (9, 16, 3, 4),
        (1, 1, 1, 1),
    ]))
    .unwrap();
    (first.compose(&second), first, second)
}

/// A bump supported on `(1/4, 3/4)`, pushing points to the right.
pub fn middle_bump() -> PLMap {
    PLMap::make(bp(&[
        (0, 1, 0, 1),
        (1, 4, 1, 4),
        (5, 16, 5, 8),
        (3, 4, 3, 4),
        (1, 1, 1, 1),
    ]))
    .unwrap()
}

/// Strategy producing PL maps with dyadic breakpoints on a `1/2^depth` grid.
pub fn arb_dyadic_map(depth: u32) -> impl Strategy<Value = PLMap> {
    let cells = (1u64 << depth) - 1;
    let grid = move |picks: &[u64]| -> Vec<Rational> {
        let mut v: Vec<u64> = picks.to_vec();
        v.sort_unstable();
        v.dedup();
        v.into_iter()
            .map(|i| rat(i as i64, 1i64 << depth))
            .collect()
    };
    (
        proptest::collection::vec(1..=cells, 0..5),
        proptest::collection::vec(1..=cells, 0..5),
    )
        .prop_map(move |(xs, ys)| {
            let mut xs = grid(&xs);
            let mut ys = grid(&ys);
            let n = xs.len().min(ys.len());
            xs.truncate(n);
            ys.truncate(n);
            let mut points = vec![(rat(0, 1), rat(0, 1))];
            points.extend(xs.into_iter().zip(ys));
            points.push((rat(1, 1), rat(1, 1)));
            PLMap::make(points).unwrap()
        })
}

/// Strategy producing dyadic points strictly inside `(0, 1)`.
pub fn arb_dyadic_point(depth: u32) -> impl Strategy<Value = Rational> {
    let cells = (1u64 << depth) - 1;
    (1..=cells).prop_map(move |i| rat(i as i64, 1i64 << depth))
}
