//! Exact arithmetic in ℚ and in the cyclotomic fields ℚ(ω_p), p prime.
//!
//! Elements are stored in the power basis `1, ω, …, ω^{p-2}` so that two
//! elements are equal exactly when their coordinate vectors are. Conductor 1
//! is ℚ itself with the single coordinate `1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dense;
use crate::error::{Error, Result};
use crate::interval::{cos_sin_turn, ComplexRect, Interval};

pub type Rational = BigRational;

/// Largest accepted conductor.
pub const MAX_CONDUCTOR: u64 = 10_007;

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycField {
    conductor: u32,
}

impl CycField {
    pub const RATIONALS: CycField = CycField { conductor: 1 };

    pub fn new(conductor: u64) -> Result<Self> {
        if conductor == 1 || (conductor <= MAX_CONDUCTOR && is_prime_u64(conductor)) {
            Ok(CycField { conductor: conductor as u32 })
        } else {
            Err(Error::InvalidConductor(conductor))
        }
    }

    pub fn cyclotomic(p: u64) -> Result<Self> {
        Self::new(p)
    }

    pub fn conductor(self) -> u32 {
        self.conductor
    }

    /// Number of power-basis coordinates, `max(p - 1, 1)`.
    pub fn degree(self) -> usize {
        (self.conductor as usize).saturating_sub(1).max(1)
    }

    pub fn is_rationals(self) -> bool {
        self.conductor == 1
    }

    /// Exponents `ν` of the Galois maps `ω ↦ ω^ν`, in increasing order.
    pub fn galois_exponents(self) -> Vec<u32> {
        if self.conductor <= 2 {
            vec![1]
        } else {
            (1..self.conductor).collect()
        }
    }

    /// Exponent of complex conjugation.
    pub fn conjugation_exponent(self) -> u32 {
        if self.conductor <= 2 {
            1
        } else {
            self.conductor - 1
        }
    }
}

impl fmt::Display for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            write!(f, "Q")
        } else {
            write!(f, "Q(w{})", self.conductor)
        }
    }
}

/// Element of ℚ(ω_p) in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    field: CycField,
    coords: Vec<Rational>,
}

impl CycNum {
    pub fn zero(field: CycField) -> Self {
        CycNum { field, coords: vec![Rational::zero(); field.degree()] }
    }

    pub fn one(field: CycField) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: CycField, q: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = q;
        CycNum { field, coords }
    }

    pub fn from_int(field: CycField, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    /// `ω^k`; any integer exponent is accepted.
    pub fn omega_pow(field: CycField, k: i64) -> Self {
        let p = field.conductor as i64;
        let e = if p == 1 { 0 } else { k.rem_euclid(p) as usize };
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::reduce(field, &raw)
    }

    /// Coordinates must already be in the power basis.
    pub fn from_coords(field: CycField, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::Parse(format!(
                "expected {} coordinates for {field}, got {}",
                field.degree(),
                coords.len()
            )));
        }
        Ok(CycNum { field, coords })
    }

    /// Canonical representative of `Σ raw[k] ω^k` (any length), folding with
    /// `ω^p = 1` and `ω^{p-1} = -(1 + ω + … + ω^{p-2})`.
    pub fn reduce(field: CycField, raw: &[Rational]) -> Self {
        let p = field.conductor as usize;
        if p == 1 {
            let s = raw.iter().fold(Rational::zero(), |acc, x| acc + x);
            return Self::from_rational(field, s);
        }
        let mut folded = vec![Rational::zero(); p];
        for (k, c) in raw.iter().enumerate() {
            if !c.is_zero() {
                folded[k % p] += c;
            }
        }
        let top = folded.pop().unwrap();
        let coords = folded.into_iter().map(|c| c - &top).collect();
        CycNum { field, coords }
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Coordinates on `ω, ω², …, ω^{p-1}` (the basis printed for twisted
    /// polynomials). Over ℚ this is the single rational value.
    pub fn normal_coords(&self) -> Vec<Rational> {
        if self.field.is_rationals() {
            return self.coords.clone();
        }
        let a0 = &self.coords[0];
        let mut out: Vec<Rational> = self.coords[1..].iter().map(|c| c - a0).collect();
        out.push(-a0);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// View a rational element inside another field.
    pub fn embed(&self, target: CycField) -> Result<Self> {
        if self.field == target {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(q) if self.field.is_rationals() || target.is_rationals() => Ok(Self::from_rational(target, q.clone())),
            _ => Err(Error::FieldMismatch(self.field, target)),
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(CycNum { field: self.field, coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(CycNum { field: self.field, coords })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.mul_same(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycNum { field: self.field, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    /// Common denominator and the integer numerators over it.
    pub(crate) fn integral_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }

    /// Builds from integers `c` indexed by powers `0..p` of ω, divided by `den`.
    pub(crate) fn from_cyclic_integers(field: CycField, mut c: Vec<BigInt>, den: &BigInt) -> Self {
        let p = field.conductor as usize;
        debug_assert_eq!(c.len(), p.max(1));
        if p == 1 {
            return Self::from_rational(field, Rational::new(c.swap_remove(0), den.clone()));
        }
        let top = c.pop().unwrap();
        let coords = c.into_iter().map(|x| Rational::new(x - &top, den.clone())).collect();
        CycNum { field, coords }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let p = self.field.conductor as usize;
        if p == 1 {
            return Self::from_rational(self.field, &self.coords[0] * &other.coords[0]);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        let (a, da) = self.integral_parts();
        let (b, db) = other.integral_parts();
        let mut c = vec![BigInt::zero(); p];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                c[k] += x * y;
            }
        }
        Self::from_cyclic_integers(self.field, c, &(da * db))
    }

    pub fn pow(&self, e: u64) -> Self {
        dense::pow_elem(self, e)
    }

    /// Multiplicative inverse, as `∏_{ν≠1} σ_ν(a) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.field, q.recip()));
        }
        let mut cofactor = Self::one(self.field);
        for nu in self.field.galois_exponents().into_iter().skip(1) {
            cofactor = cofactor.mul_same(&self.galois_unchecked(nu));
        }
        let n = self.mul_same(&cofactor);
        let n = n.as_rational().expect("product of all conjugates is rational").clone();
        Ok(cofactor.scale(&n.recip()))
    }

    pub(crate) fn galois_unchecked(&self, nu: u32) -> Self {
        let p = self.field.conductor as usize;
        if p <= 2 || nu == 1 {
            return self.clone();
        }
        let mut raw = vec![Rational::zero(); p];
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                raw[(k * nu as usize) % p] += c;
            }
        }
        Self::reduce(self.field, &raw)
    }

    pub fn galois(&self, map: &GaloisMap) -> Result<Self> {
        if map.field != self.field {
            return Err(Error::FieldMismatch(map.field, self.field));
        }
        Ok(self.galois_unchecked(map.exponent))
    }

    /// Complex conjugation, `σ_{p-1}`.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(self.field.conjugation_exponent())
    }

    /// Field norm `N_{K/ℚ}`, computed as `Res(Φ_p, a(x))`.
    pub fn norm(&self) -> Rational {
        let p = self.field.conductor as usize;
        if p == 1 {
            return self.coords[0].clone();
        }
        let phi = vec![Rational::one(); p];
        let a = dense::trim(self.coords.clone());
        dense::resultant(&phi, &a, &Rational::one())
    }

    /// Field norm as the product of all Galois conjugates.
    pub fn norm_by_conjugates(&self) -> Rational {
        let mut acc = Self::one(self.field);
        for nu in self.field.galois_exponents() {
            acc = acc.mul_same(&self.galois_unchecked(nu));
        }
        acc.as_rational().expect("norm is rational").clone()
    }

    /// Whether `a ∈ ℤ[ω_p]` is a unit, i.e. `N(a) = ±1`.
    pub fn is_algebraic_unit(&self) -> Result<bool> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(self.norm().abs().is_one())
    }

    /// Rectangle containing the image under `ω ↦ e^{2πi/p}`, with sides at
    /// most `2^-precision_bits`.
    pub fn numeric_embed(&self, precision_bits: u32) -> Result<ComplexRect> {
        if precision_bits < 16 {
            return Err(Error::Precondition("precision_bits must be at least 16".into()));
        }
        let magnitude = self.coords.iter().fold(Rational::zero(), |acc, c| acc + c.abs());
        let guard = 16 + magnitude.ceil().to_integer().bits() as u32 + (self.field.conductor.max(2)).ilog2() + 1;
        let table = Embedding::new(self.field, precision_bits + guard);
        Ok(table.embed(self))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{mag}*w")?,
                (_, true) => write!(f, "w^{k}")?,
                (_, false) => write!(f, "{mag}*w^{k}")?,
            }
        }
        write!(f, ")")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            /// Panics if the fields differ; use the `checked_` form otherwise.
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic field mismatch")
            }
        }
        impl $trait for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// The automorphism `σ_ν: ω ↦ ω^ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisMap {
    field: CycField,
    exponent: u32,
}

impl GaloisMap {
    pub fn new(field: CycField, exponent: i64) -> Result<Self> {
        let p = field.conductor as i64;
        let valid = if p <= 2 { exponent == 1 } else { (1..p).contains(&exponent) };
        if !valid {
            return Err(Error::InvalidGaloisExponent { field, exponent });
        }
        Ok(GaloisMap { field, exponent: exponent as u32 })
    }

    pub fn identity(field: CycField) -> Self {
        GaloisMap { field, exponent: 1 }
    }

    pub fn conjugation(field: CycField) -> Self {
        GaloisMap { field, exponent: field.conjugation_exponent() }
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn apply(&self, a: &CycNum) -> Result<CycNum> {
        a.galois(self)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &GaloisMap) -> Result<GaloisMap> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let p = self.field.conductor.max(2) as u64;
        let e = if self.field.conductor <= 2 { 1 } else { (self.exponent as u64 * other.exponent as u64) % p };
        Ok(GaloisMap { field: self.field, exponent: e as u32 })
    }
}

/// Certified images of `1, ω, …, ω^{p-1}` under `ω ↦ e^{2πi/p}`.
#[derive(Clone, Debug)]
pub struct Embedding {
    field: CycField,
    prec: u32,
    powers: Vec<ComplexRect>,
}

impl Embedding {
    /// Table at working precision `prec`; an element with coordinates `c_k`
    /// embeds with error about `Σ|c_k| · 2^-prec`.
    pub fn new(field: CycField, prec: u32) -> Self {
        let p = field.conductor as u64;
        let powers = if p == 1 {
            vec![ComplexRect::new(Interval::from_int(&BigInt::one(), prec), Interval::zero(prec))]
        } else {
            (0..p)
                .map(|k| {
                    let num = if 2 * k > p { k as i64 - p as i64 } else { k as i64 };
                    let (c, s) = cos_sin_turn(num, p, prec);
                    ComplexRect::new(c, s)
                })
                .collect()
        };
        Embedding { field, prec, powers }
    }

    pub fn field(&self) -> CycField {
        self.field
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Enclosure of `e^{2πik/p}`.
    pub fn root_power(&self, k: i64) -> &ComplexRect {
        let p = self.powers.len() as i64;
        &self.powers[k.rem_euclid(p) as usize]
    }

    pub fn embed(&self, a: &CycNum) -> ComplexRect {
        assert_eq!(a.field, self.field, "embedding field mismatch");
        let mut acc = ComplexRect::zero(self.prec);
        for (k, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                acc = acc.add(&ComplexRect::new(Interval::from_rational(c, self.prec), Interval::zero(self.prec)));
            } else {
                acc = acc.add(&self.powers[k].mul_rational(c));
            }
        }
        acc
    }
}
