#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use slicecert::{CycField, CycNum, LaurentPoly, Rational};

pub fn field(p: u64) -> CycField {
    CycField::cyclotomic(p).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

pub fn element(f: CycField) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(rational(), f.degree()).prop_map(move |c| CycNum::from_coords(f, c).unwrap())
}

pub fn integral_element(f: CycField) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(-4i64..=4, f.degree())
        .prop_map(move |c| CycNum::from_coords(f, c.into_iter().map(|v| q(v, 1)).collect()).unwrap())
}

pub fn nonzero_element(f: CycField) -> impl Strategy<Value = CycNum> {
    element(f).prop_filter("nonzero", |a| !a.is_zero())
}

/// Laurent polynomial with up to `len` coefficients, possibly zero.
pub fn poly(f: CycField, len: usize) -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(element(f), 1..=len)).prop_map(move |(k, c)| LaurentPoly::new(f, k, c).unwrap())
}

pub fn nonconstant_poly(f: CycField, len: usize) -> impl Strategy<Value = LaurentPoly> {
    poly(f, len).prop_filter("nonconstant", |g| g.span() >= 1)
}

/// Monic ordinary polynomial of the given degree with small integral coordinates.
pub fn monic(f: CycField, degree: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(integral_element(f), degree).prop_map(move |mut c| {
        c.push(CycNum::one(f));
        LaurentPoly::new(f, 0, c).unwrap()
    })
}

pub fn int_poly(coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(CycField::RATIONALS, 0, coeffs)
}

pub fn mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a.checked_mul(b).unwrap()
}
