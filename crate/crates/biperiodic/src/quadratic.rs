//! The quadratic extension ring Q\[sqrt(D)\], realized as Q\[t\]/(t² − D).
//!
//! An element is a pair `(x, y)` standing for `x + y·sqrt(D)`. D is any
//! nonzero rational — **not** required to be a non-square. When D is a
//! perfect square the quotient is a ring with zero divisors rather than a
//! field, so inversion is conjugate-based and checked: it fails exactly when
//! the norm `x² − D·y²` vanishes. That keeps every closed form in this crate
//! evaluable for all admissible parameter choices; the elements actually
//! inverted (the recurrence roots, their difference, and powers thereof)
//! always have nonzero norm.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::hypercomplex::Ring;
use crate::rational::Rational;

/// The ring Q\[sqrt(D)\] for one fixed nonzero D.
///
/// Elements carry their context; operations on elements from different
/// contexts are rejected (checked ops) or panic (operator sugar).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticContext {
    d: Rational,
}

impl QuadraticContext {
    /// A context for Q\[sqrt(d)\]. Fails with [`Error::ZeroDiscriminant`]
    /// when `d` is zero (the quotient would be degenerate).
    pub fn new(d: Rational) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        Ok(QuadraticContext { d })
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// The element `x + y·sqrt(D)`.
    pub fn element(&self, x: Rational, y: Rational) -> QuadraticElement {
        QuadraticElement {
            x,
            y,
            context: self.clone(),
        }
    }

    /// Embeds a rational as `x + 0·sqrt(D)`.
    pub fn from_rational(&self, x: Rational) -> QuadraticElement {
        self.element(x, Rational::zero())
    }

    pub fn zero(&self) -> QuadraticElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> QuadraticElement {
        self.from_rational(Rational::one())
    }

    /// The generator `sqrt(D)` itself, i.e. `(0, 1)`.
    pub fn sqrt_d(&self) -> QuadraticElement {
        self.element(Rational::zero(), Rational::one())
    }
}

/// `x + y·sqrt(D)` with exact rational components.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticElement {
    x: Rational,
    y: Rational,
    context: QuadraticContext,
}

impl QuadraticElement {
    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn context(&self) -> &QuadraticContext {
        &self.context
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// True when the sqrt(D) component vanishes.
    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// The rational value, if the sqrt(D) component vanishes.
    pub fn into_rational(self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.x)
        } else {
            None
        }
    }

    /// Conjugation `x + y·sqrt(D) → x − y·sqrt(D)`; an involutive ring
    /// automorphism that fixes the rationals.
    pub fn conj(&self) -> Self {
        self.context.element(self.x.clone(), -&self.y)
    }

    /// The norm `x² − D·y²` (= element times conjugate, as a rational).
    pub fn norm(&self) -> Rational {
        &(&self.x * &self.x) - &(self.context.d() * &(&self.y * &self.y))
    }

    /// Product with a context check instead of the panicking `*` operator.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.context != rhs.context {
            return Err(Error::MixedContexts);
        }
        Ok(self * rhs)
    }

    /// Conjugate inversion: `conj(u) / norm(u)`.
    ///
    /// Fails with [`Error::NonInvertible`] when the norm vanishes, which
    /// covers zero and — for perfect-square D — the zero divisors.
    pub fn inv(&self) -> Result<Self, Error> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NonInvertible);
        }
        let scale = n.recip();
        Ok(self.context.element(&self.x * &scale, -&(&self.y * &scale)))
    }

    /// Integer power; negative exponents go through [`QuadraticElement::inv`].
    pub fn pow(&self, exp: i64) -> Result<Self, Error> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_nonneg(exp.unsigned_abs()))
    }

    /// Power with a known-nonnegative exponent; never fails.
    pub fn pow_nonneg(&self, mut exp: u64) -> Self {
        let mut acc = self.context.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise scaling by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        self.context.element(&self.x * r, &self.y * r)
    }

    fn assert_same_context(&self, rhs: &Self) {
        assert!(self.context == rhs.context, "mixed quadratic contexts");
    }
}

impl Add for &QuadraticElement {
    type Output = QuadraticElement;
    fn add(self, rhs: &QuadraticElement) -> QuadraticElement {
        self.assert_same_context(rhs);
        self.context.element(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &QuadraticElement {
    type Output = QuadraticElement;
    fn sub(self, rhs: &QuadraticElement) -> QuadraticElement {
        self.assert_same_context(rhs);
        self.context.element(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul for &QuadraticElement {
    type Output = QuadraticElement;
    /// `(x1 + y1·s)(x2 + y2·s) = (x1x2 + D·y1y2) + (x1y2 + y1x2)·s`.
    fn mul(self, rhs: &QuadraticElement) -> QuadraticElement {
        self.assert_same_context(rhs);
        let d = self.context.d();
        let x = &(&self.x * &rhs.x) + &(d * &(&self.y * &rhs.y));
        let y = &(&self.x * &rhs.y) + &(&self.y * &rhs.x);
        self.context.element(x, y)
    }
}

impl Neg for &QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        self.context.element(-&self.x, -&self.y)
    }
}

impl Add for QuadraticElement {
    type Output = QuadraticElement;
    fn add(self, rhs: QuadraticElement) -> QuadraticElement {
        &self + &rhs
    }
}

impl Sub for QuadraticElement {
    type Output = QuadraticElement;
    fn sub(self, rhs: QuadraticElement) -> QuadraticElement {
        &self - &rhs
    }
}

impl Mul for QuadraticElement {
    type Output = QuadraticElement;
    fn mul(self, rhs: QuadraticElement) -> QuadraticElement {
        &self * &rhs
    }
}

impl Neg for QuadraticElement {
    type Output = QuadraticElement;
    fn neg(self) -> QuadraticElement {
        -(&self)
    }
}

impl Ring for QuadraticElement {
    fn zero_like(&self) -> Self {
        self.context.zero()
    }
    fn one_like(&self) -> Self {
        self.context.one()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        QuadraticElement::is_zero(self)
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{} + {}*sqrt({})", self.x, self.y, self.context.d())
        }
    }
}

impl fmt::Debug for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ctx(n: i64, d: i64) -> QuadraticContext {
        QuadraticContext::new(r(n, d)).unwrap()
    }

    #[test]
    fn zero_discriminant_rejected() {
        assert_eq!(
            QuadraticContext::new(Rational::zero()),
            Err(Error::ZeroDiscriminant)
        );
    }

    #[test]
    fn sqrt_d_squares_to_d() {
        let c5 = ctx(5, 1);
        let s = c5.sqrt_d();
        assert_eq!(&s * &s, c5.from_rational(r(5, 1)));
    }

    #[test]
    fn product_of_conjugate_roots() {
        // With D = 5, (1/2 + 1/2 s)(1/2 - 1/2 s) = 1/4 - 5/4 = -1.
        let c5 = ctx(5, 1);
        let alpha = c5.element(r(1, 2), r(1, 2));
        let beta = c5.element(r(1, 2), r(-1, 2));
        assert_eq!(&alpha * &beta, c5.from_rational(r(-1, 1)));
    }

    #[test]
    fn one_is_identity() {
        let c = ctx(-3, 1);
        let u = c.element(r(2, 3), r(-1, 4));
        assert_eq!(&u * &c.one(), u.clone());
        assert_eq!(&c.one() * &u, u);
    }

    #[test]
    fn checked_mul_rejects_mixed_contexts() {
        let a = ctx(5, 1).one();
        let b = ctx(12, 1).one();
        assert_eq!(a.checked_mul(&b), Err(Error::MixedContexts));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic contexts")]
    fn operator_mul_panics_on_mixed_contexts() {
        let a = ctx(5, 1).one();
        let b = ctx(12, 1).one();
        let _ = &a * &b;
    }

    #[test]
    fn inversion() {
        let c5 = ctx(5, 1);
        let alpha = c5.element(r(1, 2), r(1, 2));
        let inv = alpha.inv().unwrap();
        assert_eq!(inv, c5.element(r(-1, 2), r(1, 2)));
        assert_eq!(&alpha * &inv, c5.one());
        assert_eq!(c5.one().inv().unwrap(), c5.one());
    }

    #[test]
    fn zero_divisor_is_not_invertible() {
        // D = 9 is a perfect square: 3 + 1*sqrt(9) has norm 9 - 9 = 0.
        let c9 = ctx(9, 1);
        let zd = c9.element(r(3, 1), r(1, 1));
        assert_eq!(zd.inv(), Err(Error::NonInvertible));
        assert_eq!(c9.zero().inv(), Err(Error::NonInvertible));
        // ... and it really is a zero divisor:
        let other = c9.element(r(3, 1), r(-1, 1));
        assert!((&zd * &other).is_zero());
    }

    #[test]
    fn conjugation_examples() {
        let c5 = ctx(5, 1);
        let u = c5.element(r(1, 2), r(1, 2));
        assert_eq!(u.conj(), c5.element(r(1, 2), r(-1, 2)));
        let rat = c5.from_rational(r(7, 3));
        assert_eq!(rat.conj(), rat);
        assert_eq!(u.conj().conj(), u);
    }

    #[test]
    fn negative_powers() {
        let c5 = ctx(5, 1);
        let alpha = c5.element(r(1, 2), r(1, 2));
        let a2 = alpha.pow(2).unwrap();
        let am2 = alpha.pow(-2).unwrap();
        assert_eq!(&a2 * &am2, c5.one());
        assert_eq!(alpha.pow(0).unwrap(), c5.one());
    }

    #[test]
    fn rationality_predicate() {
        let c5 = ctx(5, 1);
        assert!(c5.from_rational(r(3, 2)).is_rational());
        assert!(!c5.sqrt_d().is_rational());
        assert_eq!(c5.from_rational(r(3, 2)).into_rational(), Some(r(3, 2)));
        assert_eq!(c5.sqrt_d().into_rational(), None);
    }

    prop_compose! {
        fn arb_rational()(n in -20i64..=20, d in 1i64..=9) -> Rational {
            Rational::new(n, d)
        }
    }

    prop_compose! {
        fn arb_d()(n in -9i64..=9, d in 1i64..=4) -> Rational {
            if n == 0 {
                Rational::new(5, 1)
            } else {
                Rational::new(n, d)
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(
            d in arb_d(),
            (x1, y1) in (arb_rational(), arb_rational()),
            (x2, y2) in (arb_rational(), arb_rational()),
            (x3, y3) in (arb_rational(), arb_rational()),
        ) {
            let c = QuadraticContext::new(d).unwrap();
            let u = c.element(x1, y1);
            let v = c.element(x2, y2);
            let w = c.element(x3, y3);
            prop_assert_eq!(&(&u + &v) + &w, &u + &(&v + &w));
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!(&u + &v, &v + &u);
            prop_assert_eq!(&u * &v, &v * &u);
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
            prop_assert_eq!(&u + &c.zero(), u.clone());
            prop_assert_eq!(&u * &c.one(), u.clone());
            prop_assert_eq!(&u + &(-&u), c.zero());
        }

        #[test]
        fn conj_is_ring_homomorphism(
            d in arb_d(),
            (x1, y1) in (arb_rational(), arb_rational()),
            (x2, y2) in (arb_rational(), arb_rational()),
        ) {
            let c = QuadraticContext::new(d).unwrap();
            let u = c.element(x1, y1);
            let v = c.element(x2, y2);
            prop_assert_eq!((&u * &v).conj(), &u.conj() * &v.conj());
            prop_assert_eq!((&u + &v).conj(), &u.conj() + &v.conj());
            prop_assert_eq!(u.conj().conj(), u);
        }

        #[test]
        fn inverse_multiplies_to_one(
            d in arb_d(),
            (x, y) in (arb_rational(), arb_rational()),
        ) {
            let c = QuadraticContext::new(d).unwrap();
            let u = c.element(x, y);
            match u.inv() {
                Ok(inv) => prop_assert_eq!(&u * &inv, c.one()),
                Err(e) => {
                    prop_assert_eq!(e, Error::NonInvertible);
                    prop_assert!(u.norm().is_zero());
                }
            }
        }

        #[test]
        fn norm_is_multiplicative(
            d in arb_d(),
            (x1, y1) in (arb_rational(), arb_rational()),
            (x2, y2) in (arb_rational(), arb_rational()),
        ) {
            let c = QuadraticContext::new(d).unwrap();
            let u = c.element(x1, y1);
            let v = c.element(x2, y2);
            prop_assert_eq!((&u * &v).norm(), &u.norm() * &v.norm());
        }
    }
}
