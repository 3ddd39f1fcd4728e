//! Exact formal power series and the generating functions of the
//! hypercomplex sequences.
//!
//! A [`PowerSeries`] is a truncated expansion with exact rational
//! coefficients; a [`RationalFunction`] is a ratio of polynomials that can
//! be expanded whenever its denominator has a nonzero constant term.
//! Expansion uses the standard linear recursion on coefficients — no
//! floating point, no approximation beyond truncation order.
//!
//! The component generating functions are assembled exactly the way the
//! closed form prescribes: a core function generating the odd-indexed
//! scalar terms, a shifted correction series per basis component, and a
//! final division by `1 - b t - t^2`. Coefficients are then compared
//! against recurrence terms by the callers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hypercomplex::{Hypercomplex, RationalOctonion, RationalQuaternion};
use crate::rational::Rational;
use crate::scalar::SequenceEngine;

/// Dense polynomial with exact rational coefficients (`coeffs[d]` is the
/// `t^d` coefficient); trailing zeros are trimmed on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

/// Truncated power series: `coeffs[d]` is the `t^d` coefficient, stored up
/// to some truncation order.
///
/// Equality compares the **common prefix** of two series: coefficients
/// beyond either truncation order are unknown, so they do not participate.
/// This makes `==` non-transitive across different orders, hence no `Eq`.
#[derive(Debug, Clone)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Highest stored degree.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl PartialEq for PowerSeries {
    fn eq(&self, other: &Self) -> bool {
        let common = self.coeffs.len().min(other.coeffs.len());
        self.coeffs[..common] == other.coeffs[..common]
    }
}

/// Ratio of two polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Precondition("denominator must be nonzero"));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }
}

fn divide_coeffs(
    num_coeff: impl Fn(usize) -> Rational,
    den: &Polynomial,
    order: usize,
) -> Result<PowerSeries, Error> {
    let den0 = den.coeff(0);
    if den0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let den_len = den.coeffs().len();
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num_coeff(k);
        for j in 1..den_len.min(k + 1) {
            acc = &acc - &(&den.coeff(j) * &out[k - j]);
        }
        out.push(&acc / &den0);
    }
    Ok(PowerSeries::new(out))
}

/// Expands `num/den` to the given truncation order. Fails with
/// [`Error::PoleAtOrigin`] when the denominator's constant term vanishes.
pub fn series_expand(rf: &RationalFunction, order: usize) -> Result<PowerSeries, Error> {
    divide_coeffs(|k| rf.num().coeff(k), rf.den(), order)
}

/// Divides a truncated series by a polynomial, to the given order.
pub fn divide_series(
    num: &PowerSeries,
    den: &Polynomial,
    order: usize,
) -> Result<PowerSeries, Error> {
    divide_coeffs(|k| num.coeff(k), den, order)
}

/// Multiplies a series by `t^shift` (negative `shift` divides). Dividing
/// requires every coefficient below the shift amount to vanish; a nonzero
/// one is reported as [`Error::NegativeExponentAfterShift`].
fn shift_series(series: &PowerSeries, shift: i64, order: usize) -> Result<PowerSeries, Error> {
    let mut out = vec![Rational::zero(); order + 1];
    if shift >= 0 {
        let shift = shift as usize;
        for (d, slot) in out.iter_mut().enumerate().skip(shift) {
            *slot = series.coeff(d - shift);
        }
    } else {
        let down = (-shift) as usize;
        for low in 0..down.min(series.coeffs().len()) {
            if !series.coeff(low).is_zero() {
                return Err(Error::NegativeExponentAfterShift);
            }
        }
        for (d, slot) in out.iter_mut().enumerate() {
            *slot = series.coeff(d + down);
        }
    }
    Ok(PowerSeries::new(out))
}

/// The generating function of the odd-indexed scalar terms,
/// `sum over k of w[2k+1] t^(2k+1)`:
///
/// ```text
/// ( w1 t + (b w0 - w1) t^3 ) / ( 1 - (ab+2) t^2 + t^4 )
/// ```
pub fn odd_index_genfunc(engine: &SequenceEngine) -> RationalFunction {
    let p = engine.params();
    let num = Polynomial::new(vec![
        Rational::zero(),
        p.w1().clone(),
        Rational::zero(),
        &(p.b() * p.w0()) - p.w1(),
    ]);
    let den = Polynomial::new(vec![
        Rational::from_integer(1),
        Rational::zero(),
        -&(&p.ab() + &Rational::from_integer(2)),
        Rational::zero(),
        Rational::from_integer(1),
    ]);
    RationalFunction::new(num, den).expect("denominator has constant term 1")
}

/// Per-component correction series: the odd-index generating function with
/// its first `floor((s+1)/2)` terms removed, then shifted by `t^(1-s)`.
/// `s` addresses a basis component (`0..=7`).
pub fn correction_series(
    engine: &SequenceEngine,
    s: usize,
    order: usize,
) -> Result<PowerSeries, Error> {
    if s > 7 {
        return Err(Error::Precondition("component index must be at most 7"));
    }
    let shift = 1 - s as i64;
    // When shifting down we need the unshifted series to reach farther.
    let raw_order = order + s.saturating_sub(1);
    let f = series_expand(&odd_index_genfunc(engine), raw_order)?;
    let mut coeffs: Vec<Rational> = f.coeffs().to_vec();
    let cutoff = s.div_ceil(2);
    for k in 1..=cutoff {
        let d = 2 * k - 1;
        if d < coeffs.len() {
            coeffs[d] = &coeffs[d] - &engine.term(d as i64);
        }
    }
    shift_series(&PowerSeries::new(coeffs), shift, order)
}

/// Generating function of the component-`s` term sequence `(w[n+s])`,
/// expanded to the given order:
///
/// ```text
/// ( w[s] + (w[s+1] - b w[s]) t + (a - b) R_s(t) ) / ( 1 - b t - t^2 )
/// ```
///
/// with `R_s` the correction series.
pub fn component_genfunc(
    engine: &SequenceEngine,
    s: usize,
    order: usize,
) -> Result<PowerSeries, Error> {
    let p = engine.params();
    let r = correction_series(engine, s, order)?;
    let w_s = engine.term(s as i64);
    let w_s1 = engine.term(s as i64 + 1);
    let a_minus_b = p.a() - p.b();
    let mut num = vec![Rational::zero(); order + 1];
    for (d, slot) in num.iter_mut().enumerate() {
        *slot = &a_minus_b * &r.coeff(d);
    }
    if !num.is_empty() {
        num[0] = &num[0] + &w_s;
    }
    if num.len() > 1 {
        num[1] = &num[1] + &(&w_s1 - &(p.b() * &w_s));
    }
    let den = Polynomial::new(vec![
        Rational::from_integer(1),
        -p.b(),
        Rational::from_integer(-1),
    ]);
    divide_series(&PowerSeries::new(num), &den, order)
}

/// Generic form of [`quaternion_genfunc`]/[`octonion_genfunc`]: entry `d`
/// of the returned vector is the degree-`d` coefficient of the
/// dimension-`N` generating function.
pub fn hyper_genfunc<const N: usize>(
    engine: &SequenceEngine,
    order: usize,
) -> Result<Vec<Hypercomplex<Rational, N>>, Error> {
    let mut components: Vec<PowerSeries> = Vec::with_capacity(N);
    for s in 0..N {
        components.push(component_genfunc(engine, s, order)?);
    }
    let mut out = Vec::with_capacity(order + 1);
    for d in 0..=order {
        out.push(Hypercomplex::from_fn(|s| components[s].coeff(d)));
    }
    Ok(out)
}

/// Degree-by-degree coefficients of the quaternion generating function:
/// entry `d` is the quaternion coefficient of `t^d`, which the closed form
/// claims equals the quaternion term `W[d]`.
pub fn quaternion_genfunc(
    engine: &SequenceEngine,
    order: usize,
) -> Result<Vec<RationalQuaternion>, Error> {
    hyper_genfunc::<4>(engine, order)
}

/// Octonion analogue of [`quaternion_genfunc`].
pub fn octonion_genfunc(
    engine: &SequenceEngine,
    order: usize,
) -> Result<Vec<RationalOctonion>, Error> {
    hyper_genfunc::<8>(engine, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperseq::{octonion_term, quaternion_term};
    use crate::scalar::Params;
    use proptest::prelude::*;

    fn engine(a: i64, b: i64, w0: i64, w1: i64) -> SequenceEngine {
        SequenceEngine::new(
            Params::new(
                Rational::from_integer(a),
                Rational::from_integer(b),
                Rational::from_integer(w0),
                Rational::from_integer(w1),
            )
            .unwrap(),
        )
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from_integer(v)).collect()
    }

    #[test]
    fn polynomial_trims_and_multiplies() {
        let p = Polynomial::new(ints(&[1, 2, 0, 0]));
        assert_eq!(p.degree(), Some(1));
        let q = Polynomial::new(ints(&[0, 1]));
        assert_eq!(p.mul(&q).coeffs(), ints(&[0, 1, 2]).as_slice());
        assert!(Polynomial::new(ints(&[0, 0])).is_zero());
        assert!(Polynomial::zero().mul(&p).is_zero());
    }

    #[test]
    fn geometric_series() {
        let rf =
            RationalFunction::new(Polynomial::new(ints(&[1])), Polynomial::new(ints(&[1, -1])))
                .unwrap();
        let s = series_expand(&rf, 6).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 1, 1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn pole_at_origin_is_reported() {
        let rf = RationalFunction::new(Polynomial::new(ints(&[1])), Polynomial::new(ints(&[0, 1])))
            .unwrap();
        assert_eq!(series_expand(&rf, 3), Err(Error::PoleAtOrigin));
        assert!(matches!(
            RationalFunction::new(Polynomial::new(ints(&[1])), Polynomial::zero()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn series_equality_uses_common_prefix() {
        let a = PowerSeries::new(ints(&[1, 2, 3]));
        let b = PowerSeries::new(ints(&[1, 2]));
        let c = PowerSeries::new(ints(&[1, 9]));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn shift_series_behaviour() {
        let s = PowerSeries::new(ints(&[0, 0, 5, 7]));
        let up = shift_series(&s, 1, 4).unwrap();
        assert_eq!(up.coeffs(), ints(&[0, 0, 0, 5, 7]).as_slice());
        let down = shift_series(&s, -2, 3).unwrap();
        assert_eq!(down.coeffs(), ints(&[5, 7, 0, 0]).as_slice());
        let bad = shift_series(&PowerSeries::new(ints(&[0, 1, 2])), -2, 3);
        assert_eq!(bad, Err(Error::NegativeExponentAfterShift));
    }

    #[test]
    fn odd_index_genfunc_fibonacci() {
        let e = engine(1, 1, 0, 1);
        let s = series_expand(&odd_index_genfunc(&e), 7).unwrap();
        assert_eq!(s.coeffs(), ints(&[0, 1, 0, 2, 0, 5, 0, 13]).as_slice());
    }

    #[test]
    fn odd_index_genfunc_two_one() {
        let e = engine(2, 1, 0, 1);
        let s = series_expand(&odd_index_genfunc(&e), 7).unwrap();
        assert_eq!(s.coeffs(), ints(&[0, 1, 0, 3, 0, 11, 0, 41]).as_slice());
    }

    #[test]
    fn correction_series_matches_odd_layout() {
        let e = engine(2, 1, 0, 1);
        // Component 0: the odd-index series shifted up by one degree.
        let r0 = correction_series(&e, 0, 8).unwrap();
        assert_eq!(r0.coeffs(), ints(&[0, 0, 1, 0, 3, 0, 11, 0, 41]).as_slice());
        // Component 1: first odd term removed, no shift.
        let r1 = correction_series(&e, 1, 6).unwrap();
        assert_eq!(r1.coeffs(), ints(&[0, 0, 0, 3, 0, 11, 0]).as_slice());
        assert!(matches!(
            correction_series(&e, 8, 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn component_genfunc_generates_shifted_terms() {
        for (a, b, w0, w1) in [(1, 1, 0, 1), (2, 1, 0, 1), (2, 3, 2, 2), (1, -3, 1, 4)] {
            let e = engine(a, b, w0, w1);
            for s in 0..8 {
                let g = component_genfunc(&e, s, 14).unwrap();
                for d in 0..=14 {
                    assert_eq!(
                        g.coeff(d),
                        e.term(d as i64 + s as i64),
                        "component {s} coefficient {d} diverged for ({a}, {b}, {w0}, {w1})"
                    );
                }
            }
        }
    }

    #[test]
    fn quaternion_genfunc_matches_terms() {
        let e = engine(1, 1, 0, 1);
        let coeffs = quaternion_genfunc(&e, 12).unwrap();
        assert_eq!(coeffs[0].component_strings(), ["0", "1", "1", "2"]);
        for (d, coeff) in coeffs.iter().enumerate() {
            assert_eq!(coeff, &quaternion_term(&e, d as i64));
        }
    }

    #[test]
    fn octonion_genfunc_matches_terms() {
        let e = engine(2, 3, 2, 2);
        let coeffs = octonion_genfunc(&e, 10).unwrap();
        for (d, coeff) in coeffs.iter().enumerate() {
            assert_eq!(coeff, &octonion_term(&e, d as i64));
        }
    }

    #[test]
    fn genfunc_handles_rational_parameters() {
        let e = SequenceEngine::new(
            Params::new(
                Rational::new(1, 2),
                Rational::from_integer(3),
                Rational::from_integer(1),
                Rational::from_integer(1),
            )
            .unwrap(),
        );
        let coeffs = quaternion_genfunc(&e, 10).unwrap();
        for (d, coeff) in coeffs.iter().enumerate() {
            assert_eq!(coeff, &quaternion_term(&e, d as i64));
        }
    }

    prop_compose! {
        fn arb_poly()(coeffs in prop::collection::vec(-6i64..=6, 1..5)) -> Polynomial {
            Polynomial::new(coeffs.into_iter().map(Rational::from_integer).collect())
        }
    }

    prop_compose! {
        fn arb_unit_poly()(p in arb_poly()) -> Polynomial {
            // Force a nonzero constant term so expansion is defined.
            let mut coeffs = p.coeffs().to_vec();
            if coeffs.is_empty() {
                coeffs.push(Rational::from_integer(1));
            } else if coeffs[0].is_zero() {
                coeffs[0] = Rational::from_integer(1);
            }
            Polynomial::new(coeffs)
        }
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(
            n1 in arb_poly(), d1 in arb_unit_poly(),
            n2 in arb_poly(), d2 in arb_unit_poly(),
        ) {
            let f1 = RationalFunction::new(n1, d1).unwrap();
            let f2 = RationalFunction::new(n2, d2).unwrap();
            let order = 8;
            let s1 = series_expand(&f1, order).unwrap();
            let s2 = series_expand(&f2, order).unwrap();
            let s12 = series_expand(&f1.mul(&f2), order).unwrap();
            for k in 0..=order {
                let mut conv = Rational::zero();
                for j in 0..=k {
                    conv = &conv + &(&s1.coeff(j) * &s2.coeff(k - j));
                }
                prop_assert_eq!(conv, s12.coeff(k));
            }
        }

        #[test]
        fn expansion_times_denominator_recovers_numerator(
            n in arb_poly(), d in arb_unit_poly(),
        ) {
            let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
            let order = 10;
            let s = series_expand(&f, order).unwrap();
            for k in 0..=order {
                let mut conv = Rational::zero();
                for j in 0..=k.min(d.coeffs().len().saturating_sub(1)) {
                    conv = &conv + &(&d.coeff(j) * &s.coeff(k - j));
                }
                prop_assert_eq!(conv, n.coeff(k));
            }
        }
    }
}
