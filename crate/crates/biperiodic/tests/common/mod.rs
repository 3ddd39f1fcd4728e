//! Shared fixtures for the integration tests: an independent recurrence
//! implementation (plain vector fill, no caching, no shared code with
//! `SequenceEngine`) and the parameter grid the suites sweep.

// Each integration-test target compiles this module separately and not
// every target uses every helper.
#![allow(dead_code)]

use biperiodic::{Params, Rational};

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `w[0..=len]` by a direct forward loop: even steps multiply by `a`, odd
/// steps by `b`.
pub fn forward_terms(
    a: &Rational,
    b: &Rational,
    w0: &Rational,
    w1: &Rational,
    len: usize,
) -> Vec<Rational> {
    let mut v = vec![w0.clone(), w1.clone()];
    for n in 2..=len {
        let m = if n % 2 == 0 { a } else { b };
        let next = &(m * &v[n - 1]) + &v[n - 2];
        v.push(next);
    }
    v.truncate(len + 1);
    v
}

/// `w[-1], w[-2], ..., w[-len]` by direct backward substitution:
/// `w[k] = w[k+2] - m(k+2) * w[k+1]` with `m` the forward multiplier at
/// the landing index.
pub fn backward_terms(
    a: &Rational,
    b: &Rational,
    w0: &Rational,
    w1: &Rational,
    len: usize,
) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut next1 = w1.clone(); // w[k+2]
    let mut next0 = w0.clone(); // w[k+1]
    for k in 1..=len {
        // Computing w[-k]; the forward step landing on -k + 2 uses `a`
        // when that index is even.
        let landing = -(k as i64) + 2;
        let m = if landing.rem_euclid(2) == 0 { a } else { b };
        let value = &next1 - &(m * &next0);
        next1 = next0;
        next0 = value.clone();
        out.push(value);
    }
    out
}

/// The parameter grid shared by the integration suites: several multiplier
/// pairs (including a negative and a non-integer one) crossed with several
/// initial pairs, plus the companion-family parameters for each multiplier
/// pair.
pub fn param_grid() -> Vec<Params> {
    let pairs = [
        (int(1), int(1)),
        (int(2), int(1)),
        (int(1), int(2)),
        (int(2), int(3)),
        (int(1), int(-3)),
        (rat(1, 2), int(3)),
    ];
    let inits = [(int(0), int(1)), (int(1), int(1)), (int(1), int(4))];
    let mut grid = Vec::new();
    for (a, b) in &pairs {
        for (w0, w1) in &inits {
            grid.push(
                Params::new(a.clone(), b.clone(), w0.clone(), w1.clone())
                    .expect("grid parameters are valid"),
            );
        }
        grid.push(Params::lucas(a.clone(), b.clone()).expect("companion parameters are valid"));
    }
    grid
}
