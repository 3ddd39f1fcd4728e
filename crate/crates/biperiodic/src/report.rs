//! Outcome record for one checked statement.
//!
//! Every checker in this crate produces an [`IdentityReport`]: which
//! statement was checked, for which parameters and indices, the exact
//! rendered left- and right-hand values, and whether they agreed. The
//! record is plain data — presentation (JSON, CSV, console) lives in the
//! companion crate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::hypercomplex::{Hypercomplex, Ring};
use crate::rational::Rational;
use crate::scalar::Params;

use core::fmt;

/// Result of checking one statement at one point.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    identity: &'static str,
    params: Params,
    indices: BTreeMap<&'static str, i64>,
    lhs: String,
    rhs: String,
    equal: bool,
    note: Option<String>,
}

impl IdentityReport {
    pub fn new(
        identity: &'static str,
        params: Params,
        indices: BTreeMap<&'static str, i64>,
        lhs: String,
        rhs: String,
        equal: bool,
        note: Option<String>,
    ) -> Self {
        IdentityReport {
            identity,
            params,
            indices,
            lhs,
            rhs,
            equal,
            note,
        }
    }

    /// Stable machine name of the statement, e.g. `"cassini-quaternion"`.
    pub fn identity(&self) -> &'static str {
        self.identity
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Index values the statement was instantiated at, keyed by letter.
    pub fn indices(&self) -> &BTreeMap<&'static str, i64> {
        &self.indices
    }

    pub fn lhs(&self) -> &str {
        &self.lhs
    }

    pub fn rhs(&self) -> &str {
        &self.rhs
    }

    pub fn equal(&self) -> bool {
        self.equal
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }
}

/// Renders a rational in the exact `p` / `p/q` form.
pub fn format_rational(v: &Rational) -> String {
    format!("{v}")
}

/// Renders a hypercomplex value as a bracketed component list:
/// `[0, 1, 1, 2]`. Exact strings, fixed basis order.
pub fn format_components<C: Ring + fmt::Display, const N: usize>(
    value: &Hypercomplex<C, N>,
) -> String {
    let parts: Vec<String> = value.component_strings();
    format!("[{}]", parts.join(", "))
}

/// Renders a 2x2 matrix of hypercomplex values as nested bracket lists,
/// row-major.
pub fn format_matrix2<C: Ring + fmt::Display, const N: usize>(
    m: &[[Hypercomplex<C, N>; 2]; 2],
) -> String {
    format!(
        "[[{}, {}], [{}, {}]]",
        format_components(&m[0][0]),
        format_components(&m[0][1]),
        format_components(&m[1][0]),
        format_components(&m[1][1]),
    )
}

/// Convenience constructor for the index map.
pub fn index_map<const K: usize>(pairs: [(&'static str, i64); K]) -> BTreeMap<&'static str, i64> {
    pairs.into_iter().collect()
}
