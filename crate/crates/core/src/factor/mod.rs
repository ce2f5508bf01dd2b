//! Factorization into irreducibles over ℚ (Zassenhaus) and over ℚ(ω_p)
//! (Trager's norm method), with re-multiplication checked certificates.

mod capelli;
mod modp;
mod norm;
mod recover;
mod zassenhaus;
mod zpoly;

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::cyclo::{CycField, CycNum, Rational};
use crate::dense;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest `|s|` tried for the shift `t ↦ t - s·ω`.
pub const MAX_TRAGER_SHIFT: i64 = 50;

/// Primes scanned for a modular square-freeness proof.
const SQUAREFREE_PRIMES: usize = 12;

/// `input = unit_scalar · t^t_power · ∏ factor^multiplicity`, checked exactly on
/// construction. Factors are monic with nonzero constant term and positive
/// degree, sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCertificate {
    input: LaurentPoly,
    unit_scalar: CycNum,
    t_power: i64,
    factors: Vec<(LaurentPoly, u32)>,
}

/// Deterministic order on polynomials of one field: span, then coordinates
/// from the constant term up.
pub(crate) fn poly_order(a: &LaurentPoly, b: &LaurentPoly) -> Ordering {
    a.span()
        .cmp(&b.span())
        .then_with(|| a.min_degree().cmp(&b.min_degree()))
        .then_with(|| a.coeffs().iter().map(CycNum::coords).cmp(b.coeffs().iter().map(CycNum::coords)))
}

impl FactorizationCertificate {
    pub fn new(
        input: LaurentPoly,
        unit_scalar: CycNum,
        t_power: i64,
        mut factors: Vec<(LaurentPoly, u32)>,
    ) -> Result<Self> {
        let field = input.field();
        if input.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if unit_scalar.field() != field {
            return Err(Error::FieldMismatch(field, unit_scalar.field()));
        }
        if unit_scalar.is_zero() {
            return Err(Error::Certificate("unit scalar is zero".into()));
        }
        for (f, m) in &factors {
            if f.field() != field {
                return Err(Error::FieldMismatch(field, f.field()));
            }
            if *m == 0 {
                return Err(Error::Certificate("factor with multiplicity 0".into()));
            }
            if f.min_degree() != 0 || f.span() == 0 || !f.leading_coeff().is_some_and(CycNum::is_one) {
                return Err(Error::Certificate(format!(
                    "factor {f} is not monic of positive degree with nonzero constant term"
                )));
            }
        }
        factors.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
        if factors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Certificate("repeated factor".into()));
        }
        let mut product = LaurentPoly::constant(unit_scalar.clone()).shift(t_power);
        for (f, m) in &factors {
            product = &product * &f.pow(*m);
        }
        if product != input {
            return Err(Error::Certificate("re-multiplication does not reproduce the input".into()));
        }
        Ok(FactorizationCertificate { input, unit_scalar, t_power, factors })
    }

    pub fn input(&self) -> &LaurentPoly {
        &self.input
    }

    pub fn unit_scalar(&self) -> &CycNum {
        &self.unit_scalar
    }

    pub fn t_power(&self) -> i64 {
        self.t_power
    }

    pub fn factors(&self) -> &[(LaurentPoly, u32)] {
        &self.factors
    }

    pub fn field(&self) -> CycField {
        self.input.field()
    }

    /// Exactly one factor, of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiplicity of a monic factor (0 if absent).
    pub fn multiplicity(&self, factor: &LaurentPoly) -> u32 {
        self.factors.iter().find(|(f, _)| f == factor).map_or(0, |(_, m)| *m)
    }
}

fn to_rational_field(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.field().is_rationals() {
        return Ok(f.clone());
    }
    f.embed(CycField::RATIONALS).map_err(|_| Error::NotRational)
}

fn prime_floor(field: CycField, degree: usize) -> u64 {
    2 * field.conductor().max(1) as u64 * degree.max(1) as u64
}

/// Proof of square-freeness of a primitive integer polynomial by finding a
/// prime `ℓ ∤ lc` with `f mod ℓ` square-free. `false` means "not proven".
fn squarefree_by_reduction(f: &[num_bigint::BigInt], floor: u64) -> bool {
    let lc = f.last().unwrap();
    let mut tried = 0;
    let mut cand = floor.max(3) + 1;
    while tried < SQUAREFREE_PRIMES {
        if crate::cyclo::is_prime_u64(cand) {
            let l = num_bigint::BigInt::from(cand);
            if !(lc % &l).is_zero() {
                tried += 1;
                if modp::is_squarefree(&zpoly::reduce_word(f, cand), cand) {
                    return true;
                }
            }
        }
        cand += 1;
    }
    false
}

/// Monic irreducible factors over ℚ of a monic square-free rational
/// polynomial with nonzero constant term (dense, lowest first).
fn factor_squarefree_rational(m: &[Rational], floor: u64) -> Result<Vec<Vec<Rational>>> {
    if m.len() <= 2 {
        return Ok(vec![m.to_vec()]);
    }
    let (prim, _) = zpoly::primitive_from_rationals(m);
    let (factors, _) = zassenhaus::factor_squarefree(&prim, floor)?;
    Ok(factors.iter().map(|g| dense::monic(&zpoly::to_rationals(g))).collect())
}

/// Square-free decomposition of a monic rational polynomial, short-cutting
/// through a modular square-freeness proof.
fn squarefree_parts_rational(m: &[Rational], floor: u64) -> Vec<(Vec<Rational>, u32)> {
    let (prim, _) = zpoly::primitive_from_rationals(m);
    if prim.len() <= 2 || squarefree_by_reduction(&prim, floor) {
        return vec![(m.to_vec(), 1)];
    }
    dense::squarefree_decomposition(m, &Rational::one())
}

fn certificate_from_parts(
    f: &LaurentPoly,
    unit: CycNum,
    t_power: i64,
    parts: Vec<(LaurentPoly, u32)>,
) -> Result<FactorizationCertificate> {
    FactorizationCertificate::new(f.clone(), unit, t_power, parts)
}

/// Complete factorization over ℚ of a polynomial with rational coefficients.
pub fn factor_rational(f: &LaurentPoly) -> Result<FactorizationCertificate> {
    let f = to_rational_field(f)?;
    let nf = f.normalize()?;
    let monic = nf.monic_part.coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect::<Vec<_>>();
    let floor = prime_floor(CycField::RATIONALS, monic.len().saturating_sub(1));
    let mut out = Vec::new();
    for (part, mult) in squarefree_parts_rational(&monic, floor) {
        if part.len() <= 1 {
            continue;
        }
        for g in factor_squarefree_rational(&part, floor)? {
            out.push((LaurentPoly::from_rationals(CycField::RATIONALS, 0, &g), mult));
        }
    }
    certificate_from_parts(&f, nf.unit_scalar, nf.t_power, out)
}

/// `∏_{ν=1}^{p-1} σ_ν(f)`, a polynomial over ℚ of degree `(p-1)·deg f`.
/// Over ℚ itself the norm is `f`.
pub fn norm_polynomial(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    if field.is_rationals() {
        return Ok(f.clone());
    }
    let coeffs = norm::norm_dense(f);
    let min_degree = f.min_degree() * field.degree() as i64;
    Ok(LaurentPoly::from_rationals(CycField::RATIONALS, min_degree, &coeffs))
}

/// The norm computed by multiplying Galois conjugates directly (slow path,
/// kept for cross-checking).
pub fn norm_polynomial_by_conjugates(f: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let prod = norm::norm_by_conjugates(f);
    to_rational_field(&prod).map_err(|_| Error::Internal("norm has irrational coefficients".into()))
}

/// Square-free norm of `g(t - s·ω)` as a primitive integer polynomial, if it
/// can be proven square-free.
fn squarefree_norm(g: &LaurentPoly, floor: u64) -> Result<Option<Vec<Rational>>> {
    let n = norm_polynomial(g)?;
    let dense_n: Vec<Rational> = n.ordinary_dense()?.iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let (prim, _) = zpoly::primitive_from_rationals(&dense_n);
    // A root at 0 of g would appear in every conjugate.
    if prim[0].is_zero() {
        return Ok(None);
    }
    if squarefree_by_reduction(&prim, floor) {
        Ok(Some(dense_n))
    } else {
        Ok(None)
    }
}

fn shifts() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=MAX_TRAGER_SHIFT).flat_map(|k| [k, -k]))
}

/// Monic irreducible factors over ℚ(ω_p) of a monic square-free `g` with
/// nonzero constant term.
fn trager(g: &LaurentPoly, known_norm: Option<Vec<Rational>>) -> Result<Vec<LaurentPoly>> {
    let field = g.field();
    if g.span() <= 1 {
        return Ok(vec![g.clone()]);
    }
    let floor = prime_floor(field, g.span() * field.degree());
    let omega = CycNum::omega_pow(field, 1);
    let mut known_norm = known_norm;
    for s in shifts() {
        let shift = omega.scale(&Rational::from_integer(s.into()));
        let gs = if s == 0 { g.clone() } else { g.taylor_shift(&-&shift)? };
        let norm = match known_norm.take() {
            Some(n) if s == 0 => n,
            _ => match squarefree_norm(&gs, floor)? {
                Some(n) => n,
                None => continue,
            },
        };
        let q_factors = factor_squarefree_rational(&dense::monic(&norm), floor)?;
        if q_factors.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        let mut out = Vec::new();
        for nq in q_factors {
            // Each ℚ-factor of a square-free norm is the norm of one K-factor.
            let d = (nq.len() - 1) / field.degree();
            let h = match recover::gcd_with_rational(&gs, &nq, d) {
                Some(h) => h,
                None => gs.gcd(&LaurentPoly::from_rationals(field, 0, &nq))?,
            };
            if h.span() != d {
                return Err(Error::Internal("norm factor does not match a factor over the field".into()));
            }
            out.push(if s == 0 { h } else { h.taylor_shift(&shift)? });
        }
        return Ok(out);
    }
    Err(Error::Internal(format!("no square-free norm for shifts |s| <= {MAX_TRAGER_SHIFT}")))
}

/// Complete factorization over the coefficient field of `f`.
pub fn factor_cyclotomic(f: &LaurentPoly) -> Result<FactorizationCertificate> {
    let field = f.field();
    if field.is_rationals() {
        return factor_rational(f);
    }
    let nf = f.normalize()?;
    let m = nf.monic_part;
    let mut out = Vec::new();
    let n = capelli::exponent_gcd(&m);
    if m.span() >= 1 && n >= 2 {
        for (g, mult) in factor_cyclotomic(&capelli::compress(&m, n))?.factors() {
            let lifted = g.compose_power(n)?;
            if capelli::proves_irreducible(g, n) {
                out.push((lifted, *mult));
            } else {
                for h in trager(&lifted, None)? {
                    out.push((h, *mult));
                }
            }
        }
    } else if m.span() >= 1 {
        let floor = prime_floor(field, m.span() * field.degree());
        match squarefree_norm(&m, floor)? {
            // A square-free norm proves m square-free and fixes the shift s = 0.
            Some(norm) => {
                for h in trager(&m, Some(norm))? {
                    out.push((h, 1));
                }
            }
            None => {
                for (part, mult) in m.squarefree_decomposition()? {
                    if part.span() == 0 {
                        continue;
                    }
                    for h in trager(&part, None)? {
                        out.push((h, mult));
                    }
                }
            }
        }
    }
    certificate_from_parts(f, nf.unit_scalar, nf.t_power, out)
}

/// Factorization over the coefficient field; dispatches on the field.
pub fn factor(f: &LaurentPoly) -> Result<FactorizationCertificate> {
    factor_cyclotomic(f)
}

/// Irreducibility over the coefficient field, with its certificate.
pub fn irreducibility_certificate(f: &LaurentPoly) -> Result<(bool, FactorizationCertificate)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.span() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let cert = factor(f)?;
    Ok((cert.is_irreducible(), cert))
}

/// True iff the factorization has exactly one factor of multiplicity one.
pub fn is_irreducible(f: &LaurentPoly) -> Result<bool> {
    Ok(irreducibility_certificate(f)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CycField {
        CycField::RATIONALS
    }

    fn k13() -> CycField {
        CycField::new(13).unwrap()
    }

    fn ints(v: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(q(), 0, v)
    }

    fn delta_817() -> LaurentPoly {
        ints(&[1, -4, 8, -11, 8, -4, 1])
    }

    #[test]
    fn t4_minus_1() {
        let cert = factor_rational(&ints(&[-1, 0, 0, 0, 1])).unwrap();
        let fs: Vec<_> = cert.factors().iter().map(|(f, m)| (f.clone(), *m)).collect();
        assert_eq!(fs, vec![(ints(&[-1, 1]), 1), (ints(&[1, 1]), 1), (ints(&[1, 0, 1]), 1)]);
        assert!(cert.unit_scalar().is_one());
    }

    #[test]
    fn delta_817_is_irreducible() {
        // Oracle: no root in ±1 and no monic integer quadratic/cubic divisor
        // with coefficients bounded by the Mignotte bound (checked by exhaustive
        // search over small patterns below).
        let d = delta_817();
        let cert = factor_rational(&d).unwrap();
        assert!(cert.is_irreducible());
        for a in -12i64..=12 {
            for b in [-1i64, 1] {
                let quad = ints(&[b, a, 1]);
                assert!(!d.divisible_by(&quad).unwrap());
                for c in -12i64..=12 {
                    let cubic = ints(&[b, c, a, 1]);
                    assert!(!d.divisible_by(&cubic).unwrap());
                }
            }
        }
    }

    #[test]
    fn repeated_factor_with_unit() {
        let lin = ints(&[1, -1]);
        let f = &(&lin * &lin) * &ints(&[1, 0, 1]);
        let cert = factor_rational(&f).unwrap();
        assert_eq!(cert.factors().len(), 2);
        assert_eq!(cert.multiplicity(&ints(&[-1, 1])), 2);
        assert_eq!(cert.multiplicity(&ints(&[1, 0, 1])), 1);
        assert!(cert.unit_scalar().is_one());
        let g = f.scale(&CycNum::from_int(q(), -3)).unwrap().shift(-2);
        let cert = factor_rational(&g).unwrap();
        assert_eq!(*cert.unit_scalar(), CycNum::from_int(q(), -3));
        assert_eq!(cert.t_power(), -2);
    }

    #[test]
    fn norm_examples() {
        let w = CycNum::omega_pow(k13(), 1);
        let lin = LaurentPoly::new(k13(), 0, vec![-&w, CycNum::one(k13())]).unwrap();
        let n = norm_polynomial(&lin).unwrap();
        assert_eq!(n, ints(&[1; 13]));
        assert_eq!(norm_polynomial_by_conjugates(&lin).unwrap(), n);
        let r = LaurentPoly::from_ints(k13(), 0, &[2, -1, 3]);
        assert_eq!(norm_polynomial(&r).unwrap(), ints(&[2, -1, 3]).pow(12));
        let mixed = LaurentPoly::new(k13(), -1, vec![w.clone(), CycNum::from_int(k13(), 5), &w * &w]).unwrap();
        let fast = norm_polynomial(&mixed).unwrap();
        assert_eq!(fast, norm_polynomial_by_conjugates(&mixed).unwrap());
        assert_eq!(fast.span(), 24);
        assert_eq!(fast.min_degree(), -12);
    }

    #[test]
    fn cyclotomic_splits_completely() {
        let cert = factor_cyclotomic(&LaurentPoly::from_ints(k13(), 0, &[1; 13])).unwrap();
        assert_eq!(cert.factors().len(), 12);
        for i in 1..13 {
            let lin = LaurentPoly::new(k13(), 0, vec![-CycNum::omega_pow(k13(), i), CycNum::one(k13())]).unwrap();
            assert_eq!(cert.multiplicity(&lin), 1);
        }
    }

    #[test]
    fn t2_t_1_stays_irreducible() {
        let f = LaurentPoly::from_ints(k13(), 0, &[1, 1, 1]);
        assert!(is_irreducible(&f).unwrap());
        // Oracle: its norm is (t²+t+1)^12, and the shifted norm is irreducible over ℚ.
        assert_eq!(norm_polynomial(&f).unwrap(), ints(&[1, 1, 1]).pow(12));
    }

    #[test]
    fn irreducibility_edge_cases() {
        assert!(is_irreducible(&ints(&[1, -1])).unwrap());
        assert!(!is_irreducible(&ints(&[1, 0, -1])).unwrap());
        assert_eq!(is_irreducible(&ints(&[3])), Err(Error::ConstantPolynomial));
        assert_eq!(is_irreducible(&LaurentPoly::zero(q())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn certificate_constructor_rejects_bad_products() {
        let f = ints(&[-1, 0, 1]);
        let one = CycNum::one(q());
        assert!(FactorizationCertificate::new(
            f.clone(),
            one.clone(),
            0,
            vec![(ints(&[-1, 1]), 1), (ints(&[1, 1]), 1)]
        )
        .is_ok());
        assert!(FactorizationCertificate::new(f.clone(), one.clone(), 0, vec![(ints(&[-1, 1]), 2)]).is_err());
        assert!(FactorizationCertificate::new(
            f.clone(),
            one.clone(),
            0,
            vec![(ints(&[1, -1]), 1), (ints(&[-1, -1]), 1)]
        )
        .is_err());
        assert!(FactorizationCertificate::new(f, one, 0, vec![(ints(&[-1, 1]), 0), (ints(&[1, 1]), 1)]).is_err());
    }

    #[test]
    fn factors_over_k_with_repeats_and_shift() {
        let w = CycNum::omega_pow(k13(), 1);
        let one = CycNum::one(k13());
        let a = LaurentPoly::new(k13(), 0, vec![w.clone(), one.clone()]).unwrap();
        let b = LaurentPoly::new(k13(), 0, vec![one.clone(), w.clone(), one.clone()]).unwrap();
        let f = (&(&a * &a) * &b).shift(3);
        let cert = factor_cyclotomic(&f).unwrap();
        assert_eq!(cert.t_power(), 3);
        assert_eq!(cert.multiplicity(&a), 2);
        let quad_irreducible = cert.multiplicity(&b) == 1;
        let total: usize = cert.factors().iter().map(|(g, m)| g.span() * *m as usize).sum();
        assert_eq!(total, 4);
        if !quad_irreducible {
            assert_eq!(cert.factors().len(), 3);
        }
    }
}
