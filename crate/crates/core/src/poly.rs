//! Laurent polynomials in `t` over ℚ or ℚ(ω_p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::cyclo::{CycField, CycNum, GaloisMap, Rational};
use crate::dense;
use crate::error::{Error, Result};

/// `Σ coeffs[i] · t^{min_degree + i}` with nonzero extreme coefficients.
///
/// The derived equality is raw coefficient equality; use
/// [`LaurentPoly::is_associate`] for equality up to units `a·t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: CycField,
    min_degree: i64,
    coeffs: Vec<CycNum>,
}

/// `original = unit_scalar · t^t_power · monic_part`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub monic_part: LaurentPoly,
    pub unit_scalar: CycNum,
    pub t_power: i64,
}

impl LaurentPoly {
    pub fn new(field: CycField, min_degree: i64, coeffs: Vec<CycNum>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, c.field()));
        }
        Ok(Self::from_parts(field, min_degree, coeffs))
    }

    /// Trims zero coefficients at both ends.
    pub(crate) fn from_parts(field: CycField, mut min_degree: i64, coeffs: Vec<CycNum>) -> Self {
        let mut coeffs = dense::trim(coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            min_degree += lead_zeros as i64;
        }
        if coeffs.is_empty() {
            min_degree = 0;
        }
        LaurentPoly { field, min_degree, coeffs }
    }

    pub fn zero(field: CycField) -> Self {
        LaurentPoly { field, min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one(field: CycField) -> Self {
        Self::constant(CycNum::one(field))
    }

    pub fn constant(c: CycNum) -> Self {
        Self::from_parts(c.field(), 0, vec![c])
    }

    pub fn monomial(c: CycNum, k: i64) -> Self {
        Self::from_parts(c.field(), k, vec![c])
    }

    /// The variable `t`.
    pub fn t(field: CycField) -> Self {
        Self::monomial(CycNum::one(field), 1)
    }

    pub fn from_rationals(field: CycField, min_degree: i64, coeffs: &[Rational]) -> Self {
        let coeffs = coeffs.iter().map(|q| CycNum::from_rational(field, q.clone())).collect();
        Self::from_parts(field, min_degree, coeffs)
    }

    pub fn from_ints(field: CycField, min_degree: i64, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&n| CycNum::from_int(field, n)).collect();
        Self::from_parts(field, min_degree, coeffs)
    }

    pub(crate) fn from_dense(field: CycField, coeffs: Vec<CycNum>) -> Self {
        Self::from_parts(field, 0, coeffs)
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest exponent present; `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.min_degree + self.coeffs.len() as i64 - 1)
    }

    /// `max_degree - min_degree`, the degree of the monic part.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> CycNum {
        let i = k - self.min_degree;
        if i < 0 || i >= self.coeffs.len() as i64 {
            CycNum::zero(self.field)
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_degree == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// No negative powers of `t`.
    pub fn is_ordinary(&self) -> bool {
        self.min_degree >= 0
    }

    pub fn leading_coeff(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&CycNum> {
        self.coeffs.first()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Dense coefficients `[c_0, …, c_d]` of an ordinary polynomial, including
    /// leading zeros for `t`-power factors.
    pub(crate) fn ordinary_dense(&self) -> Result<Vec<CycNum>> {
        if !self.is_ordinary() {
            return Err(Error::NotOrdinary);
        }
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let mut out = vec![CycNum::zero(self.field); self.min_degree as usize];
        out.extend(self.coeffs.iter().cloned());
        Ok(out)
    }

    /// Rational coefficients of `t^-min_degree · self`, if all are rational.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.as_rational().cloned()).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }

    /// Re-express over `target`; only rational coefficients may move between
    /// different fields.
    pub fn embed(&self, target: CycField) -> Result<Self> {
        if target == self.field {
            return Ok(self.clone());
        }
        let coeffs = self.coeffs.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly { field: target, min_degree: self.min_degree, coeffs })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Result<Self> {
        self.same_field(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if subtract { -other } else { other.clone() });
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let coeffs = (lo..=hi)
            .map(|k| {
                let (a, b) = (self.coeff(k), other.coeff(k));
                if subtract {
                    &a - &b
                } else {
                    &a + &b
                }
            })
            .collect();
        Ok(Self::from_parts(self.field, lo, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let coeffs = dense::mul(&self.coeffs, &other.coeffs);
        Ok(Self::from_parts(self.field, self.min_degree + other.min_degree, coeffs))
    }

    pub fn scale(&self, c: &CycNum) -> Result<Self> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        Ok(Self::from_parts(self.field, self.min_degree, dense::scale(&self.coeffs, c)))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let coeffs = if q.is_zero() { Vec::new() } else { self.coeffs.iter().map(|c| c.scale(q)).collect() };
        Self::from_parts(self.field, self.min_degree, coeffs)
    }

    /// `t^k · self`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { field: self.field, min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f(t^n)` for `n ≥ 1`.
    pub fn compose_power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("compose_power needs n >= 1".into()));
        }
        if self.is_zero() || n == 1 {
            return Ok(self.clone());
        }
        let n = n as usize;
        let mut coeffs = vec![CycNum::zero(self.field); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        Ok(Self::from_parts(self.field, self.min_degree * n as i64, coeffs))
    }

    /// Apply a Galois map to every coefficient.
    pub fn galois(&self, map: &GaloisMap) -> Result<Self> {
        if map.field() != self.field {
            return Err(Error::FieldMismatch(self.field, map.field()));
        }
        Ok(self.galois_unchecked(map.exponent()))
    }

    pub(crate) fn galois_unchecked(&self, nu: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.galois_unchecked(nu)).collect();
        LaurentPoly { field: self.field, min_degree: self.min_degree, coeffs }
    }

    /// `conj(f)(t^-1)` without normalization.
    pub fn conj_reciprocal_raw(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<CycNum> = self.coeffs.iter().rev().map(CycNum::conj).collect();
        LaurentPoly { field: self.field, min_degree: -self.max_degree().unwrap(), coeffs }
    }

    /// Conjugate-reciprocal involution `ι(f) = conj(f)(t^-1)`, returned as its
    /// monic associate.
    pub fn conj_reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.conj_reciprocal_raw().monic_part()
    }

    pub fn normalize(&self) -> Result<NormalForm> {
        let Some(lc) = self.coeffs.last() else {
            return Err(Error::ZeroPolynomial);
        };
        let monic = dense::monic(&self.coeffs);
        Ok(NormalForm {
            monic_part: LaurentPoly { field: self.field, min_degree: 0, coeffs: monic },
            unit_scalar: lc.clone(),
            t_power: self.min_degree,
        })
    }

    pub fn monic_part(&self) -> Result<Self> {
        Ok(self.normalize()?.monic_part)
    }

    /// Equal up to a factor `a·t^k`, `a ≠ 0`.
    pub fn is_associate(&self, other: &Self) -> bool {
        match (self.monic_part(), other.monic_part()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => self.field == other.field,
            _ => false,
        }
    }

    /// `conj_reciprocal(f)` is associate to `f`.
    pub fn is_conj_self_reciprocal(&self) -> bool {
        match self.conj_reciprocal() {
            Ok(r) => self.is_associate(&r),
            Err(_) => false,
        }
    }

    /// Coefficient sequence equal to its reverse.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Division of ordinary polynomials.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = self.ordinary_dense()?;
        let b = divisor.ordinary_dense()?;
        let (q, r) = dense::div_rem(&a, &b);
        Ok((Self::from_dense(self.field, q), Self::from_dense(self.field, r)))
    }

    /// Exact division in the Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let q = dense::div_exact(&self.coeffs, &divisor.coeffs).ok_or(Error::InexactDivision)?;
        Ok(Self::from_parts(self.field, self.min_degree - divisor.min_degree, q))
    }

    /// Whether `divisor` divides `self` in the Laurent ring.
    pub fn divisible_by(&self, divisor: &Self) -> Result<bool> {
        match self.div_exact(divisor) {
            Ok(_) => Ok(true),
            Err(Error::InexactDivision) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Monic gcd of the monic parts; `1` when coprime.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let one = CycNum::one(self.field);
        let g = dense::gcd(&self.coeffs, &other.coeffs, &one);
        Ok(Self::from_dense(self.field, g))
    }

    /// Classical resultant of two nonzero ordinary polynomials.
    pub fn resultant(&self, other: &Self) -> Result<CycNum> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let a = self.ordinary_dense()?;
        let b = other.ordinary_dense()?;
        Ok(dense::resultant(&a, &b, &CycNum::one(self.field)))
    }

    /// Exact value at `a`; rational points embed into the coefficient field.
    pub fn evaluate(&self, a: &CycNum) -> Result<CycNum> {
        let a = a.embed(self.field)?;
        if self.is_zero() {
            return Ok(CycNum::zero(self.field));
        }
        if a.is_zero() {
            if self.min_degree < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.coeff(0));
        }
        let body = dense::eval(&self.coeffs, &a);
        let power = if self.min_degree >= 0 {
            a.pow(self.min_degree as u64)
        } else {
            a.inv()?.pow(self.min_degree.unsigned_abs())
        };
        Ok(&body * &power)
    }

    pub fn evaluate_rational(&self, x: &Rational) -> Result<CycNum> {
        self.evaluate(&CycNum::from_rational(self.field, x.clone()))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from_integer((self.min_degree + i as i64).into())))
            .collect();
        Self::from_parts(self.field, self.min_degree - 1, coeffs)
    }

    /// Square-free decomposition of the monic part: `(part, multiplicity)` with
    /// monic, pairwise coprime square-free parts.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let one = CycNum::one(self.field);
        Ok(dense::squarefree_decomposition(&self.coeffs, &one)
            .into_iter()
            .map(|(p, m)| (Self::from_dense(self.field, p), m))
            .collect())
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Self> {
        let mut acc = Self::one(self.field);
        for (p, _) in self.squarefree_decomposition()? {
            acc = &acc * &p;
        }
        Ok(acc)
    }

    /// `f(t + c)` for ordinary `f`.
    pub fn taylor_shift(&self, c: &CycNum) -> Result<Self> {
        let c = c.embed(self.field)?;
        let a = self.ordinary_dense()?;
        Ok(Self::from_dense(self.field, dense::taylor_shift(&a, &c)))
    }

    /// Strip every factor `(1 - t)`; returns the quotient and the count.
    pub fn strip_one_minus_t(&self) -> Result<(Self, u32)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let linear = Self::from_ints(self.field, 0, &[1, -1]);
        let mut cur = self.clone();
        let mut count = 0;
        while cur.evaluate(&CycNum::one(self.field))?.is_zero() {
            cur = cur.div_exact(&linear)?;
            count += 1;
        }
        Ok((cur, count))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.min_degree + i as i64;
            let (neg, body) = match c.as_rational() {
                Some(q) if q.is_negative() => (true, format!("{}", -q)),
                _ => (false, format!("{c}")),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = c.as_rational().is_some_and(|q| q.abs().is_one());
            match (k, unit) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{body}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{body}*t^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the fields differ; use the `checked_` form otherwise.
            fn $method(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("polynomial field mismatch")
            }
        }
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { field: self.field, min_degree: self.min_degree, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
