//! Quaternions and octonions whose components are consecutive sequence
//! terms, plus their closed forms.
//!
//! For a scalar sequence `w` (see [`crate::scalar`]), the hypercomplex
//! term at index `n` is
//!
//! ```text
//! W[n] = sum over l of w[n + l] * e_l,    l = 0..N
//! ```
//!
//! with `N = 4` (quaternion) or `N = 8` (octonion). [`hyper_term`] builds
//! these directly from the recurrence engine — that is the oracle side.
//! [`quaternion_closed_form`]/[`octonion_closed_form`] evaluate the root-
//! power closed form instead, and the classical checks compare the printed
//! closed forms of the `w0 = 0, w1 = 1` family and its companion family
//! against engine output.

use alloc::string::String;

use crate::error::Error;
use crate::hypercomplex::{Hypercomplex, RationalOctonion, RationalQuaternion};
use crate::quadratic::QuadraticElement;
use crate::rational::Rational;
use crate::report::{format_components, index_map, IdentityReport};
use crate::scalar::{floor_half, zeta, Params, SequenceEngine};

/// `W[n]` with components `w[n] .. w[n+N-1]`, straight from the recurrence.
pub fn hyper_term<const N: usize>(engine: &SequenceEngine, n: i64) -> Hypercomplex<Rational, N> {
    Hypercomplex::from_fn(|l| engine.term(n + l as i64))
}

pub fn quaternion_term(engine: &SequenceEngine, n: i64) -> RationalQuaternion {
    hyper_term::<4>(engine, n)
}

pub fn octonion_term(engine: &SequenceEngine, n: i64) -> RationalOctonion {
    hyper_term::<8>(engine, n)
}

/// Extracts plain rational components from a hypercomplex value over the
/// quadratic ring, if every component's irrational part is zero.
pub fn rational_components<const N: usize>(
    value: &Hypercomplex<QuadraticElement, N>,
) -> Option<Hypercomplex<Rational, N>> {
    let mut out: [Rational; N] = core::array::from_fn(|_| Rational::zero());
    for (slot, component) in out.iter_mut().zip(value.c.iter()) {
        *slot = component.clone().into_rational()?;
    }
    Some(Hypercomplex::new(out))
}

/// Basis-weight vector attached to one root `r`, component `l`:
///
/// ```text
/// a^(zeta(l+1)) / (ab)^(floor(l/2)) * r^l
/// ```
///
/// For the base family (`w0 = 0, w1 = 1`) these are the weights the closed
/// form of `W[n]` attaches to the basis directions when `n` is even; the
/// companion family uses the same vector at odd `n` instead.
pub fn even_weight_vector<const N: usize>(
    params: &Params,
    root: &QuadraticElement,
) -> Hypercomplex<QuadraticElement, N> {
    let ab = params.ab();
    Hypercomplex::from_fn(|l| {
        let li = l as i64;
        let weight = &params.a().pow(zeta(li + 1) as i64) * &ab.pow(-floor_half(li));
        root.pow_nonneg(l as u64).scale(&weight)
    })
}

/// Companion basis-weight vector attached to one root `r`, component `l`:
///
/// ```text
/// a^(zeta(l)) / (ab)^(floor((l+1)/2)) * r^l
/// ```
///
/// Used by the base family at odd `n` and by the companion family at
/// even `n`.
pub fn odd_weight_vector<const N: usize>(
    params: &Params,
    root: &QuadraticElement,
) -> Hypercomplex<QuadraticElement, N> {
    let ab = params.ab();
    Hypercomplex::from_fn(|l| {
        let li = l as i64;
        let weight = &params.a().pow(zeta(li) as i64) * &ab.pow(-floor_half(li + 1));
        root.pow_nonneg(l as u64).scale(&weight)
    })
}

fn hyper_closed_form<const N: usize>(
    params: &Params,
    n: i64,
) -> Result<Hypercomplex<Rational, N>, Error> {
    if n < 0 {
        return Err(Error::Precondition("index must be nonnegative"));
    }
    let (plus, minus) = params.roots();
    let (coeff_a, coeff_b) = params.binet_constants();
    let (vec_plus, vec_minus) = if zeta(n) == 0 {
        (
            even_weight_vector::<N>(params, &plus),
            even_weight_vector::<N>(params, &minus),
        )
    } else {
        (
            odd_weight_vector::<N>(params, &plus),
            odd_weight_vector::<N>(params, &minus),
        )
    };
    let prefactor = params.ab().pow(-floor_half(n));
    let scale_plus = (&coeff_a * &plus.pow(n - 1)?).scale(&prefactor);
    let scale_minus = (&coeff_b * &minus.pow(n - 1)?).scale(&prefactor);
    let combined = &vec_plus.scale(&scale_plus) - &vec_minus.scale(&scale_minus);
    rational_components(&combined).ok_or(Error::NonRationalBinet)
}

/// Closed form of the quaternion term `W[n]`, `n >= 0`. The irrational
/// parts must cancel exactly; a residue is reported as an error, never
/// rounded away.
pub fn quaternion_closed_form(params: &Params, n: i64) -> Result<RationalQuaternion, Error> {
    hyper_closed_form::<4>(params, n)
}

/// Closed form of the octonion term `W[n]`, `n >= 0`.
pub fn octonion_closed_form(params: &Params, n: i64) -> Result<RationalOctonion, Error> {
    hyper_closed_form::<8>(params, n)
}

/// The four classical closed-form families: base (`0, 1` initial values)
/// and companion (`2, a` initial values with swapped multipliers), each
/// in quaternion and octonion shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    FibonacciQuaternion,
    LucasQuaternion,
    FibonacciOctonion,
    LucasOctonion,
}

impl ClassicalKind {
    pub fn identity_name(self) -> &'static str {
        match self {
            ClassicalKind::FibonacciQuaternion => "classical-binet-fibonacci-quaternion",
            ClassicalKind::LucasQuaternion => "classical-binet-lucas-quaternion",
            ClassicalKind::FibonacciOctonion => "classical-binet-fibonacci-octonion",
            ClassicalKind::LucasOctonion => "classical-binet-lucas-octonion",
        }
    }

    fn is_lucas(self) -> bool {
        matches!(
            self,
            ClassicalKind::LucasQuaternion | ClassicalKind::LucasOctonion
        )
    }

    fn is_octonion(self) -> bool {
        matches!(
            self,
            ClassicalKind::FibonacciOctonion | ClassicalKind::LucasOctonion
        )
    }
}

fn classical_rhs<const N: usize>(
    base: &Params,
    lucas: bool,
    n: i64,
) -> Result<Hypercomplex<Rational, N>, Error> {
    let ctx = base.context();
    let (plus, minus) = base.roots();
    let plus_n = plus.pow_nonneg(n as u64);
    let minus_n = minus.pow_nonneg(n as u64);
    let combined = if lucas {
        // weight(+) * r_plus^n + weight(-) * r_minus^n, over (ab)^floor((n+1)/2);
        // even n takes the companion weights, odd n the base ones.
        let (wp, wm) = if zeta(n) == 0 {
            (
                odd_weight_vector::<N>(base, &plus),
                odd_weight_vector::<N>(base, &minus),
            )
        } else {
            (
                even_weight_vector::<N>(base, &plus),
                even_weight_vector::<N>(base, &minus),
            )
        };
        let pre = ctx.from_rational(base.ab().pow(-floor_half(n + 1)));
        let coeff_p = &plus_n * &pre;
        let coeff_m = &minus_n * &pre;
        &wp.scale(&coeff_p) + &wm.scale(&coeff_m)
    } else {
        // (weight(+) * r_plus^n - weight(-) * r_minus^n) / (r_plus - r_minus),
        // over (ab)^floor(n/2); even n takes the base weights, odd n the
        // companion ones.
        let (wp, wm) = if zeta(n) == 0 {
            (
                even_weight_vector::<N>(base, &plus),
                even_weight_vector::<N>(base, &minus),
            )
        } else {
            (
                odd_weight_vector::<N>(base, &plus),
                odd_weight_vector::<N>(base, &minus),
            )
        };
        let inv_diff = (&plus - &minus).inv()?;
        let pre = ctx.from_rational(base.ab().pow(-floor_half(n)));
        let coeff_p = &(&plus_n * &inv_diff) * &pre;
        let coeff_m = &(&minus_n * &inv_diff) * &pre;
        &wp.scale(&coeff_p) - &wm.scale(&coeff_m)
    };
    rational_components(&combined).ok_or(Error::NonRationalBinet)
}

/// Checks one classical closed form at index `n >= 0` against the
/// recurrence: the left side is the engine-built hypercomplex term, the
/// right side the printed root-power expression.
pub fn classical_binet_check(
    kind: ClassicalKind,
    a: Rational,
    b: Rational,
    n: i64,
) -> Result<IdentityReport, Error> {
    if n < 0 {
        return Err(Error::Precondition("index must be nonnegative"));
    }
    let base = Params::fibonacci(a.clone(), b.clone())?;
    let engine_params = if kind.is_lucas() {
        Params::lucas(a, b)?
    } else {
        base.clone()
    };
    let engine = SequenceEngine::new(engine_params.clone());
    let (lhs, rhs): (String, String) = if kind.is_octonion() {
        let lhs = hyper_term::<8>(&engine, n);
        let rhs = classical_rhs::<8>(&base, kind.is_lucas(), n)?;
        (format_components(&lhs), format_components(&rhs))
    } else {
        let lhs = hyper_term::<4>(&engine, n);
        let rhs = classical_rhs::<4>(&base, kind.is_lucas(), n)?;
        (format_components(&lhs), format_components(&rhs))
    };
    let equal = lhs == rhs;
    Ok(IdentityReport::new(
        kind.identity_name(),
        engine_params,
        index_map([("n", n)]),
        lhs,
        rhs,
        equal,
        None,
    ))
}
