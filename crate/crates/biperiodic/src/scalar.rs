//! Parameter set and scalar sequence engine.
//!
//! The sequence `w` is defined by two nonzero rational multipliers `a`, `b`
//! and initial values `w0`, `w1`:
//!
//! ```text
//! w[n] = a * w[n-1] + w[n-2]   for even n >= 2
//! w[n] = b * w[n-1] + w[n-2]   for odd  n >= 2
//! ```
//!
//! Negative indices extend the recurrence backwards:
//! `w[k] = w[k+2] - m(k+2) * w[k+1]` where `m(k+2)` is the multiplier `a`
//! or `b` that the forward step at index `k+2` would use.
//!
//! [`SequenceEngine`] evaluates terms by the recurrence alone (memoized);
//! [`binet_term`] evaluates the closed form built from the quadratic roots.
//! Keeping the two routes independent is the point: every closed-form claim
//! in this crate is checked against engine output, never against itself.

use alloc::collections::BTreeMap;
use core::cell::RefCell;

use crate::error::Error;
use crate::quadratic::{QuadraticContext, QuadraticElement};
use crate::rational::Rational;

/// `0` for even `n`, `1` for odd `n` (also for negative `n`).
pub fn zeta(n: i64) -> u32 {
    n.rem_euclid(2) as u32
}

/// Floor of `n/2` (exact for negative `n` too).
pub fn floor_half(n: i64) -> i64 {
    n.div_euclid(2)
}

/// The defining data of one sequence: multipliers and initial values.
///
/// Requirements enforced at construction:
/// * `a != 0`, `b != 0` (each multiplier appears as a divisor in the
///   closed forms),
/// * `a^2 b^2 + 4ab != 0` (the quadratic `x^2 - abx - ab` must have
///   distinct roots),
/// * `(w0, w1) != (0, 0)` (otherwise the sequence is identically zero and
///   several normalized statements degenerate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    a: Rational,
    b: Rational,
    w0: Rational,
    w1: Rational,
    d: Rational,
}

impl Params {
    pub fn new(a: Rational, b: Rational, w0: Rational, w1: Rational) -> Result<Self, Error> {
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroParameter("b"));
        }
        let ab = &a * &b;
        let d = &(&ab * &ab) + &(&Rational::from_integer(4) * &ab);
        if d.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        if w0.is_zero() && w1.is_zero() {
            return Err(Error::ZeroInitialPair);
        }
        Ok(Params { a, b, w0, w1, d })
    }

    /// The base sequence of the family: `w0 = 0`, `w1 = 1`.
    pub fn fibonacci(a: Rational, b: Rational) -> Result<Self, Error> {
        Self::new(a, b, Rational::zero(), Rational::from_integer(1))
    }

    /// The companion sequence with initial values `2, a` and the two
    /// multipliers swapped. With `a = b = 1` this yields `2, 1, 3, 4, 7,
    /// 11, ...`; its own even steps multiply by the original `b` and its
    /// odd steps by the original `a`.
    pub fn lucas(a: Rational, b: Rational) -> Result<Self, Error> {
        let w1 = a.clone();
        Self::new(b, a, Rational::from_integer(2), w1)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn w0(&self) -> &Rational {
        &self.w0
    }

    pub fn w1(&self) -> &Rational {
        &self.w1
    }

    pub fn ab(&self) -> Rational {
        &self.a * &self.b
    }

    /// `(ab)^2 + 4ab`, the discriminant of `x^2 - abx - ab`.
    pub fn discriminant(&self) -> &Rational {
        &self.d
    }

    /// The quadratic ring `Q[sqrt(D)]` this parameter set lives in.
    pub fn context(&self) -> QuadraticContext {
        QuadraticContext::new(self.d.clone()).expect("discriminant checked nonzero")
    }

    /// The roots `r_plus = (ab + sqrt(D))/2`, `r_minus = (ab - sqrt(D))/2`
    /// of `x^2 - abx - ab`, as elements of the quadratic ring.
    pub fn roots(&self) -> (QuadraticElement, QuadraticElement) {
        let ctx = self.context();
        let half = Rational::new(1, 2);
        let half_ab = &self.ab() * &half;
        let plus = ctx.element(half_ab.clone(), half.clone());
        let minus = ctx.element(half_ab, -&half);
        (plus, minus)
    }

    /// Coefficients `A = (r_plus*w1 + b*w0) / (r_plus - r_minus)` and
    /// `B = (r_minus*w1 + b*w0) / (r_plus - r_minus)` of the closed form.
    pub fn binet_constants(&self) -> (QuadraticElement, QuadraticElement) {
        let ctx = self.context();
        let (plus, minus) = self.roots();
        let w1 = ctx.from_rational(self.w1.clone());
        let bw0 = ctx.from_rational(&self.b * &self.w0);
        let denom = (&plus - &minus)
            .inv()
            .expect("r_plus - r_minus = sqrt(D) has nonzero norm -D");
        let a_coeff = &(&(&plus * &w1) + &bw0) * &denom;
        let b_coeff = &(&(&minus * &w1) + &bw0) * &denom;
        (a_coeff, b_coeff)
    }
}

/// Memoizing recurrence evaluator over all integer indices.
#[derive(Debug)]
pub struct SequenceEngine {
    params: Params,
    cache: RefCell<BTreeMap<i64, Rational>>,
}

impl SequenceEngine {
    pub fn new(params: Params) -> Self {
        let mut seed = BTreeMap::new();
        seed.insert(0, params.w0().clone());
        seed.insert(1, params.w1().clone());
        SequenceEngine {
            params,
            cache: RefCell::new(seed),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Multiplier used by the forward step landing on index `n`.
    fn multiplier(&self, n: i64) -> &Rational {
        if zeta(n) == 0 {
            self.params.a()
        } else {
            self.params.b()
        }
    }

    /// `w[n]` by the recurrence, for any integer `n`.
    pub fn term(&self, n: i64) -> Rational {
        if let Some(v) = self.cache.borrow().get(&n) {
            return v.clone();
        }
        if n > 1 {
            let mut hi = *self
                .cache
                .borrow()
                .range(2..)
                .next_back()
                .map(|(k, _)| k)
                .unwrap_or(&1)
                .max(&1);
            while hi < n {
                hi += 1;
                let (prev1, prev2) = {
                    let cache = self.cache.borrow();
                    (cache[&(hi - 1)].clone(), cache[&(hi - 2)].clone())
                };
                let next = &(self.multiplier(hi) * &prev1) + &prev2;
                self.cache.borrow_mut().insert(hi, next);
            }
        } else {
            let mut lo = *self
                .cache
                .borrow()
                .range(..0)
                .next()
                .map(|(k, _)| k)
                .unwrap_or(&0)
                .min(&0);
            while lo > n {
                lo -= 1;
                let (next2, next1) = {
                    let cache = self.cache.borrow();
                    (cache[&(lo + 2)].clone(), cache[&(lo + 1)].clone())
                };
                let value = &next2 - &(self.multiplier(lo + 2) * &next1);
                self.cache.borrow_mut().insert(lo, value);
            }
        }
        self.cache.borrow()[&n].clone()
    }
}

/// `w[n]` by the closed form, for `n >= 0`:
///
/// ```text
/// w[n] = a^(zeta(n+1)) / (ab)^(floor(n/2)) * (A r_plus^(n-1) - B r_minus^(n-1))
/// ```
///
/// The quadratic part must cancel; if it does not (it never should for
/// valid parameters), this reports [`Error::NonRationalBinet`].
pub fn binet_term(params: &Params, n: i64) -> Result<Rational, Error> {
    if n < 0 {
        return Err(Error::Precondition("index must be nonnegative"));
    }
    let (plus, minus) = params.roots();
    let (a_coeff, b_coeff) = params.binet_constants();
    let plus_pow = plus.pow(n - 1)?;
    let minus_pow = minus.pow(n - 1)?;
    let combo = &(&a_coeff * &plus_pow) - &(&b_coeff * &minus_pow);
    let prefactor = &params.a().pow(zeta(n + 1) as i64) * &params.ab().pow(-floor_half(n));
    let value = combo.scale(&prefactor);
    value.into_rational().ok_or(Error::NonRationalBinet)
}
