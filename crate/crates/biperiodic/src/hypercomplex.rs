//! Quaternion and octonion algebras over a commutative coefficient ring.
//!
//! Both algebras are realized the same way: a value is a fixed-length array
//! of coefficients over the basis `e0..e{N-1}` (with `e0 = 1`), and basis
//! products come from a **data table** rather than hard-coded branch logic.
//! Each table cell holds `(sign, index)` meaning `e_i * e_j = sign * e_index`.
//!
//! The 4-dimensional table encodes the classical quaternion rules
//! (`e1*e2 = e3 = -e2*e1`, cyclically, `e_l^2 = -1`); the 8-dimensional
//! table extends them to the standard non-associative octonion product.
//! The octonion table is kept alongside an independently transcribed
//! reference copy, and [`validate_tables`] checks structural invariants
//! (identity row/column, diagonal squares, antisymmetry off the diagonal)
//! plus entry-for-entry agreement with that reference. Verification drivers
//! run it up front so a corrupted operational table is caught as a reported
//! mismatch, not silently absorbed.
//!
//! Coefficients only need commutative-ring operations with exact equality
//! ([`Ring`]), so the same types serve values over [`Rational`] and over
//! the quadratic ring [`crate::QuadraticElement`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Commutative coefficient ring with exact equality.
///
/// `zero_like`/`one_like` derive identities *compatible with the receiver* —
/// necessary because quadratic elements carry a context that a nullary
/// constructor could not know.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Basis-product table: `e_i * e_j = sign[i][j] * e_{index[i][j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable<const N: usize> {
    pub sign: [[i8; N]; N],
    pub index: [[usize; N]; N],
}

/// One table cell as written in the reference layout: `(sign, basis index)`.
pub type Cell = (i8, usize);

impl<const N: usize> MulTable<N> {
    pub const fn from_cells(cells: &[[Cell; N]; N]) -> Self {
        let mut sign = [[0i8; N]; N];
        let mut index = [[0usize; N]; N];
        let mut i = 0;
        while i < N {
            let mut j = 0;
            while j < N {
                sign[i][j] = cells[i][j].0;
                index[i][j] = cells[i][j].1;
                j += 1;
            }
            i += 1;
        }
        MulTable { sign, index }
    }

    /// Structural invariants every Cayley-type basis table must satisfy:
    /// row 0 and column 0 act as identity, every non-real basis element
    /// squares to -1, off-diagonal products anticommute, all signs are ±1,
    /// and all indices are in range.
    pub fn validate_structure(&self) -> Result<(), String> {
        for i in 0..N {
            for j in 0..N {
                let (s, k) = (self.sign[i][j], self.index[i][j]);
                if s != 1 && s != -1 {
                    return Err(format!("sign out of range at ({i}, {j})"));
                }
                if k >= N {
                    return Err(format!("index out of range at ({i}, {j})"));
                }
            }
        }
        for j in 0..N {
            if (self.sign[0][j], self.index[0][j]) != (1, j) {
                return Err(format!("identity row violated at column {j}"));
            }
            if (self.sign[j][0], self.index[j][0]) != (1, j) {
                return Err(format!("identity column violated at row {j}"));
            }
        }
        for i in 1..N {
            if (self.sign[i][i], self.index[i][i]) != (-1, 0) {
                return Err(format!("diagonal square violated at {i}"));
            }
        }
        for i in 1..N {
            for j in 1..N {
                if i == j {
                    continue;
                }
                if self.index[i][j] != self.index[j][i] {
                    return Err(format!("index symmetry violated at ({i}, {j})"));
                }
                if self.sign[i][j] != -self.sign[j][i] {
                    return Err(format!("antisymmetry violated at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }
}

#[rustfmt::skip]
const QUATERNION_CELLS: [[Cell; 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

#[rustfmt::skip]
const OCTONION_CELLS_BASE: [[Cell; 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Reference transcription of the octonion basis products, kept separate
/// from the operational cells on purpose: conformance checks compare the
/// two, so an accidental (or injected) edit of the operational table is
/// detected instead of propagating silently.
#[rustfmt::skip]
pub const OCTONION_REFERENCE_CELLS: [[Cell; 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

#[cfg(feature = "table-fault")]
const fn apply_table_fault(mut cells: [[Cell; 8]; 8]) -> [[Cell; 8]; 8] {
    // Flip the e1*e2 / e2*e1 pair consistently so structural validation
    // still passes and only reference conformance can catch it.
    cells[1][2].0 = -cells[1][2].0;
    cells[2][1].0 = -cells[2][1].0;
    cells
}

#[cfg(feature = "table-fault")]
const OCTONION_CELLS: [[Cell; 8]; 8] = apply_table_fault(OCTONION_CELLS_BASE);
#[cfg(not(feature = "table-fault"))]
const OCTONION_CELLS: [[Cell; 8]; 8] = OCTONION_CELLS_BASE;

pub static QUATERNION_TABLE: MulTable<4> = MulTable::from_cells(&QUATERNION_CELLS);
pub static OCTONION_TABLE: MulTable<8> = MulTable::from_cells(&OCTONION_CELLS);

/// First mismatch between the operational octonion table and the reference
/// transcription, if any, as `(i, j, got, want)`.
pub fn octonion_reference_mismatch() -> Option<(usize, usize, Cell, Cell)> {
    for (i, row) in OCTONION_REFERENCE_CELLS.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let got = (OCTONION_TABLE.sign[i][j], OCTONION_TABLE.index[i][j]);
            if got != want {
                return Some((i, j, got, want));
            }
        }
    }
    None
}

/// Checks both tables' structure, octonion agreement with the reference
/// transcription, and that the quaternion table is the upper-left octonion
/// block. Run by verification drivers at startup and by the test suites.
pub fn validate_tables() -> Result<(), String> {
    QUATERNION_TABLE
        .validate_structure()
        .map_err(|e| format!("quaternion table: {e}"))?;
    OCTONION_TABLE
        .validate_structure()
        .map_err(|e| format!("octonion table: {e}"))?;
    if let Some((i, j, got, want)) = octonion_reference_mismatch() {
        return Err(format!(
            "octonion table deviates from reference at ({i}, {j}): \
             got ({}, e{}), want ({}, e{})",
            got.0, got.1, want.0, want.1
        ));
    }
    for i in 0..4 {
        for j in 0..4 {
            if QUATERNION_TABLE.sign[i][j] != OCTONION_TABLE.sign[i][j]
                || QUATERNION_TABLE.index[i][j] != OCTONION_TABLE.index[i][j]
            {
                return Err(format!(
                    "quaternion table is not the octonion upper-left block at ({i}, {j})"
                ));
            }
        }
    }
    Ok(())
}

/// A hypercomplex number: coefficients over the basis `e0..e{N-1}`.
///
/// `N = 4` is a quaternion, `N = 8` an octonion; multiplication is defined
/// for exactly those via the static tables.
#[derive(Clone, PartialEq)]
pub struct Hypercomplex<C: Ring, const N: usize> {
    pub c: [C; N],
}

pub type Quaternion<C> = Hypercomplex<C, 4>;
pub type Octonion<C> = Hypercomplex<C, 8>;

impl<C: Ring, const N: usize> Hypercomplex<C, N> {
    pub fn new(c: [C; N]) -> Self {
        Hypercomplex { c }
    }

    pub fn from_fn(f: impl FnMut(usize) -> C) -> Self {
        Hypercomplex {
            c: core::array::from_fn(f),
        }
    }

    pub fn zero_like(&self) -> Self {
        Self::from_fn(|l| self.c[l].zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    /// Componentwise scaling. Coefficient rings here are commutative, so
    /// scalars are central and the side does not matter.
    pub fn scale(&self, s: &C) -> Self {
        Self::from_fn(|l| self.c[l].ring_mul(s))
    }

    /// Conjugation: negate every non-real component.
    pub fn conj(&self) -> Self {
        Self::from_fn(|l| {
            if l == 0 {
                self.c[0].clone()
            } else {
                self.c[l].ring_neg()
            }
        })
    }

    /// Sum of squared components; equals the `e0` part of `self * conj(self)`
    /// (asserted inside [`Quaternion::norm`] / [`Octonion::norm`]).
    pub fn norm_sum_squares(&self) -> C {
        let mut acc = self.c[0].zero_like();
        for l in 0..N {
            acc = acc.ring_add(&self.c[l].ring_mul(&self.c[l]));
        }
        acc
    }

    /// String forms of the components, in basis order.
    pub fn component_strings(&self) -> Vec<String>
    where
        C: fmt::Display,
    {
        self.c.iter().map(|v| format!("{v}")).collect()
    }

    fn mul_with(&self, rhs: &Self, table: &MulTable<N>) -> Self {
        let mut acc: [C; N] = core::array::from_fn(|l| self.c[l].zero_like());
        for i in 0..N {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..N {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let term = self.c[i].ring_mul(&rhs.c[j]);
                let k = table.index[i][j];
                acc[k] = if table.sign[i][j] == 1 {
                    acc[k].ring_add(&term)
                } else {
                    acc[k].ring_sub(&term)
                };
            }
        }
        Hypercomplex { c: acc }
    }

    fn norm_with(&self, table: &MulTable<N>) -> C {
        let product = self.mul_with(&self.conj(), table);
        let via_product = product.c[0].clone();
        let via_squares = self.norm_sum_squares();
        assert!(
            via_product == via_squares,
            "norm routes disagree: product route != sum of squares"
        );
        via_product
    }
}

impl<C: Ring> Quaternion<C> {
    /// Norm via `self * conj(self)`, cross-checked against the sum of squares.
    pub fn norm(&self) -> C {
        self.norm_with(&QUATERNION_TABLE)
    }
}

impl<C: Ring> Octonion<C> {
    pub fn norm(&self) -> C {
        self.norm_with(&OCTONION_TABLE)
    }

    /// The quaternion formed by components 0..3. The octonion basis extends
    /// the quaternion one, so structures built here project onto their
    /// quaternion counterparts by dropping the top half.
    pub fn quaternion_part(&self) -> Quaternion<C> {
        Quaternion::from_fn(|l| self.c[l].clone())
    }
}

impl<C: Ring, const N: usize> Add for &Hypercomplex<C, N> {
    type Output = Hypercomplex<C, N>;
    fn add(self, rhs: &Hypercomplex<C, N>) -> Hypercomplex<C, N> {
        Hypercomplex::from_fn(|l| self.c[l].ring_add(&rhs.c[l]))
    }
}

impl<C: Ring, const N: usize> Sub for &Hypercomplex<C, N> {
    type Output = Hypercomplex<C, N>;
    fn sub(self, rhs: &Hypercomplex<C, N>) -> Hypercomplex<C, N> {
        Hypercomplex::from_fn(|l| self.c[l].ring_sub(&rhs.c[l]))
    }
}

impl<C: Ring, const N: usize> Neg for &Hypercomplex<C, N> {
    type Output = Hypercomplex<C, N>;
    fn neg(self) -> Hypercomplex<C, N> {
        Hypercomplex::from_fn(|l| self.c[l].ring_neg())
    }
}

impl<C: Ring> Mul for &Quaternion<C> {
    type Output = Quaternion<C>;
    fn mul(self, rhs: &Quaternion<C>) -> Quaternion<C> {
        self.mul_with(rhs, &QUATERNION_TABLE)
    }
}

impl<C: Ring> Mul for &Octonion<C> {
    type Output = Octonion<C>;
    fn mul(self, rhs: &Octonion<C>) -> Octonion<C> {
        self.mul_with(rhs, &OCTONION_TABLE)
    }
}

impl<C: Ring, const N: usize> fmt::Debug for Hypercomplex<C, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (l, v) in self.c.iter().enumerate() {
            if l > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, ")")
    }
}

/// Quaternions and octonions over [`Rational`], the value types of the
/// sequence layer.
pub type RationalQuaternion = Quaternion<Rational>;
pub type RationalOctonion = Octonion<Rational>;
