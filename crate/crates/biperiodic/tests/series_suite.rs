//! Generating functions versus the independent recurrence fill.

mod common;

use biperiodic::series::{
    component_genfunc, correction_series, octonion_genfunc, odd_index_genfunc, quaternion_genfunc,
    series_expand, Polynomial, RationalFunction,
};
use biperiodic::{Error, Rational, SequenceEngine};
use common::{forward_terms, int, param_grid};

#[test]
fn odd_index_genfunc_generates_odd_terms() {
    for params in param_grid() {
        let engine = SequenceEngine::new(params.clone());
        let series = series_expand(&odd_index_genfunc(&engine), 25).unwrap();
        let oracle = forward_terms(params.a(), params.b(), params.w0(), params.w1(), 25);
        for (d, term) in oracle.iter().enumerate() {
            let want = if d % 2 == 1 {
                term.clone()
            } else {
                Rational::zero()
            };
            assert_eq!(
                series.coeff(d),
                want,
                "odd-index generating function wrong at degree {d} for {params:?}"
            );
        }
    }
}

#[test]
fn component_genfuncs_generate_shifted_terms() {
    for params in param_grid() {
        let engine = SequenceEngine::new(params.clone());
        let oracle = forward_terms(params.a(), params.b(), params.w0(), params.w1(), 33);
        for s in 0..8usize {
            let series = component_genfunc(&engine, s, 25).unwrap();
            for d in 0..=25usize {
                assert_eq!(
                    series.coeff(d),
                    oracle[d + s],
                    "component {s} generating function wrong at degree {d} for {params:?}"
                );
            }
        }
    }
}

#[test]
fn hypercomplex_genfunc_coefficients_are_terms() {
    for params in param_grid() {
        let engine = SequenceEngine::new(params.clone());
        let oracle = forward_terms(params.a(), params.b(), params.w0(), params.w1(), 33);
        let quat = quaternion_genfunc(&engine, 25).unwrap();
        assert_eq!(quat.len(), 26);
        for (d, coeff) in quat.iter().enumerate() {
            for l in 0..4 {
                assert_eq!(
                    coeff.c[l],
                    oracle[d + l],
                    "quaternion coefficient {d} component {l} wrong for {params:?}"
                );
            }
        }
        let oct = octonion_genfunc(&engine, 25).unwrap();
        for (d, coeff) in oct.iter().enumerate() {
            for l in 0..8 {
                assert_eq!(
                    coeff.c[l],
                    oracle[d + l],
                    "octonion coefficient {d} component {l} wrong for {params:?}"
                );
            }
        }
    }
}

#[test]
fn correction_series_drops_low_odd_terms() {
    // For component s, the correction series removes the first
    // floor((s+1)/2) odd-degree terms of the odd-index generating function
    // and shifts the remainder; its lowest nonzero degree must therefore
    // be at least 2*floor((s+1)/2) + 1 - (s - 1) ... in particular the
    // shift may never expose a negative exponent.
    for params in param_grid() {
        let engine = SequenceEngine::new(params.clone());
        for s in 0..8usize {
            let series = correction_series(&engine, s, 20)
                .unwrap_or_else(|e| panic!("component {s} failed for {params:?}: {e}"));
            assert_eq!(series.coeffs().len(), 21);
        }
    }
}

#[test]
fn expansion_error_paths() {
    let pole = RationalFunction::new(
        Polynomial::new(vec![int(1)]),
        Polynomial::new(vec![int(0), int(1)]),
    )
    .unwrap();
    assert_eq!(series_expand(&pole, 4), Err(Error::PoleAtOrigin));
    assert!(matches!(
        RationalFunction::new(Polynomial::new(vec![int(1)]), Polynomial::zero()),
        Err(Error::Precondition(_))
    ));
}
