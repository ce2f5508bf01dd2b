//! Real-root counting and unit-circle root counting.

mod numeric;
mod sturm;

use std::fmt;

use serde::Serialize;

use crate::cyclo::{CycField, Rational};
use crate::error::{Error, Result};
use crate::factor::norm_polynomial;
use crate::poly::LaurentPoly;

pub use sturm::{chebyshev_transform, sturm_count, RealInterval};

/// Largest norm degree for which a non-rational `gcd(f, ι f)` is first tried
/// through its norm before falling back to numerics.
const NORM_ROUTE_MAX_DEGREE: usize = 96;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CircleMethod {
    GcdReduction,
    ExactPalindromic,
    CertifiedNumeric,
}

impl CircleMethod {
    pub fn is_exact(self) -> bool {
        self != CircleMethod::CertifiedNumeric
    }
}

impl fmt::Display for CircleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CircleMethod::GcdReduction => "gcd-reduction",
            CircleMethod::ExactPalindromic => "exact-palindromic",
            CircleMethod::CertifiedNumeric => "certified-numeric",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleRootReport {
    /// Roots on `|t| = 1`, with multiplicity.
    pub count: usize,
    /// The weakest method any square-free part needed.
    pub method: CircleMethod,
    pub certified: bool,
}

/// Roots of the monic part of `f` on the unit circle.
pub fn unit_circle_root_count(f: &LaurentPoly) -> Result<CircleRootReport> {
    unit_circle_root_count_with_cap(f, numeric::MAX_BITS)
}

/// As [`unit_circle_root_count`], with the numeric precision cap in bits.
pub fn unit_circle_root_count_with_cap(f: &LaurentPoly, max_bits: u32) -> Result<CircleRootReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let max_bits = max_bits.max(numeric::START_BITS);
    let mut report = CircleRootReport { count: 0, method: CircleMethod::GcdReduction, certified: true };
    for (part, mult) in f.squarefree_decomposition()? {
        let (count, method, certified) = squarefree_count(&part, max_bits)?;
        report.count += count * mult as usize;
        report.method = report.method.max(method);
        report.certified &= certified;
    }
    Ok(report)
}

fn squarefree_count(g: &LaurentPoly, max_bits: u32) -> Result<(usize, CircleMethod, bool)> {
    let field = g.field();
    let mut g = g.clone();
    let mut count = 0;
    for s in [1, -1] {
        if g.evaluate_rational(&Rational::from_integer(s.into()))?.is_zero() {
            g = g.div_exact(&LaurentPoly::from_ints(field, 0, &[-s, 1]))?;
            count += 1;
        }
    }
    if g.span() == 0 {
        return Ok((count, CircleMethod::GcdReduction, true));
    }
    let h = g.gcd(&g.conj_reciprocal()?)?;
    if h.span() == 0 {
        return Ok((count, CircleMethod::GcdReduction, true));
    }
    if h.is_rational() {
        if let Ok(q) = chebyshev_transform(&h) {
            let open = RealInterval::from_ints(-2, 2)?;
            return Ok((count + 2 * sturm_count(&q, &open)?, CircleMethod::ExactPalindromic, true));
        }
    } else if h.span() * field.degree() <= NORM_ROUTE_MAX_DEGREE {
        // Circle roots of h are circle roots of its norm.
        let n = norm_polynomial(&h)?.embed(CycField::RATIONALS)?;
        let r = unit_circle_root_count(&n)?;
        if r.certified && r.count == 0 {
            return Ok((count, CircleMethod::ExactPalindromic, true));
        }
    }
    let (c, certified) = numeric::circle_count(&h, max_bits);
    Ok((count + c, CircleMethod::CertifiedNumeric, certified))
}
