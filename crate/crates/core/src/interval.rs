//! Outward-rounded interval arithmetic on dyadic rationals.
//!
//! An [`Interval`] stores integer endpoints scaled by `2^prec`; every
//! operation rounds the lower endpoint down and the upper endpoint up, so the
//! exact real result of the operation on any points of the operands is always
//! enclosed. Operands of a binary operation must share the same precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclo::Rational;

fn floor_shift(x: &BigInt, k: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << k))
}

fn ceil_shift(x: &BigInt, k: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << k)))
}

fn div_ceil(x: &BigInt, d: &BigInt) -> BigInt {
    -((-x).div_floor(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

impl Interval {
    /// `[lo, hi] · 2^-prec`.
    pub fn from_scaled(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Interval { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    pub fn from_int(v: &BigInt, prec: u32) -> Self {
        let s = v << prec;
        Interval { lo: s.clone(), hi: s, prec }
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        let lo = scaled.div_floor(q.denom());
        let hi = div_ceil(&scaled, q.denom());
        Interval { lo, hi, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, BigInt::one() << self.prec)
    }

    pub fn midpoint(&self) -> Rational {
        Rational::new(&self.hi + &self.lo, BigInt::one() << (self.prec + 1))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo() <= *x && *x <= self.hi()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Scaled upper bound on `|x|`.
    pub fn mag_scaled(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// Scaled lower bound on `|x|`.
    pub fn mig_scaled(&self) -> BigInt {
        if self.contains_zero() {
            BigInt::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.prec, other.prec, "interval precision mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, prec: self.prec }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let products = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let min = products.iter().min().unwrap();
        let max = products.iter().max().unwrap();
        Interval { lo: floor_shift(min, self.prec), hi: ceil_shift(max, self.prec), prec: self.prec }
    }

    pub fn sqr(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let (min, max) =
            if self.contains_zero() { (BigInt::zero(), a.max(b)) } else { (a.clone().min(b.clone()), a.max(b)) };
        Interval { lo: floor_shift(&min, self.prec), hi: ceil_shift(&max, self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a, prec: self.prec }
        } else {
            Interval { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, d: &BigInt) -> Self {
        assert!(d.is_positive());
        Interval { lo: self.lo.div_floor(d), hi: div_ceil(&self.hi, d), prec: self.prec }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.mul_int(q.numer()).div_int(q.denom())
    }

    /// Widen by `eps · 2^-prec` on both sides.
    pub fn inflate(&self, eps: &BigInt) -> Self {
        Interval { lo: &self.lo - eps, hi: &self.hi + eps, prec: self.prec }
    }

    /// Re-express at another precision, rounding outward.
    pub fn with_prec(&self, prec: u32) -> Self {
        if prec >= self.prec {
            let k = prec - self.prec;
            Interval { lo: &self.lo << k, hi: &self.hi << k, prec }
        } else {
            let k = self.prec - prec;
            Interval { lo: floor_shift(&self.lo, k), hi: ceil_shift(&self.hi, k), prec }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = rational_to_f64(&self.lo());
        let hi = rational_to_f64(&self.hi());
        write!(f, "[{lo:.6e}, {hi:.6e}]")
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Axis-parallel rectangle in ℂ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexRect {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexRect {
    pub fn new(re: Interval, im: Interval) -> Self {
        assert_eq!(re.prec, im.prec);
        ComplexRect { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        ComplexRect { re: Interval::zero(prec), im: Interval::zero(prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexRect { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexRect { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexRect { re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)), im: self.re.mul(&o.im).add(&self.im.mul(&o.re)) }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        ComplexRect { re: self.re.mul_rational(q), im: self.im.mul_rational(q) }
    }

    /// Enclosure of `|z|^2`.
    pub fn abs2(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Longest side.
    pub fn width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn is_real(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }

    /// Exact test; operands of different precision are compared at the finer one.
    pub fn intersects(&self, o: &Self) -> bool {
        let prec = self.prec().max(o.prec());
        let (a, b) = (self.with_prec(prec), o.with_prec(prec));
        a.re.lo <= b.re.hi && b.re.lo <= a.re.hi && a.im.lo <= b.im.hi && b.im.lo <= a.im.hi
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        ComplexRect { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }
}

impl fmt::Display for ComplexRect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + i·{}", self.re, self.im)
    }
}

/// `arctan(1/x)` for an integer `x ≥ 2`.
fn arctan_inv(x: u64, prec: u32) -> Interval {
    let one = BigInt::one() << prec;
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = one / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut err = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        err += 3;
        power /= &x2;
        k += 1;
    }
    err += power + 2;
    Interval { lo: &sum - &err, hi: &sum + &err, prec }
}

/// Enclosure of π (Machin's formula).
pub fn pi(prec: u32) -> Interval {
    let work = prec + 16;
    let a = arctan_inv(5, work).mul_int(&BigInt::from(16));
    let b = arctan_inv(239, work).mul_int(&BigInt::from(4));
    a.sub(&b).with_prec(prec)
}

/// Enclosures of `(cos θ, sin θ)` for `θ = 2π·num/den`, `|num/den| ≤ 1/2`.
pub fn cos_sin_turn(num: i64, den: u64, prec: u32) -> (Interval, Interval) {
    assert!(den > 0 && 2 * num.unsigned_abs() <= den);
    let work = prec + 24;
    let theta = pi(work).mul_int(&BigInt::from(2 * num)).div_int(&BigInt::from(den));
    let theta2 = theta.sqr();
    let unit = BigInt::one();
    // cos
    let mut cos = Interval::from_int(&unit, work);
    let mut term = Interval::from_int(&unit, work);
    let mut j: u64 = 1;
    loop {
        term = term.mul(&theta2).div_int(&BigInt::from((2 * j - 1) * (2 * j))).neg();
        if j >= 3 && term.mag_scaled() <= unit {
            cos = cos.inflate(&(term.mag_scaled() + 1u32));
            break;
        }
        cos = cos.add(&term);
        j += 1;
    }
    // sin
    let mut sin = theta.clone();
    let mut term = theta;
    let mut j: u64 = 1;
    loop {
        term = term.mul(&theta2).div_int(&BigInt::from((2 * j) * (2 * j + 1))).neg();
        if j >= 3 && term.mag_scaled() <= unit {
            sin = sin.inflate(&(term.mag_scaled() + 1u32));
            break;
        }
        sin = sin.add(&term);
        j += 1;
    }
    (cos.with_prec(prec), sin.with_prec(prec))
}

/// Enclosure of `sqrt(x)` for a non-negative rational, as `(lower, upper)`
/// rationals with denominator `2^prec`.
pub fn sqrt_bounds(x: &Rational, prec: u32) -> (Rational, Rational) {
    assert!(!x.is_negative());
    let scale = BigInt::one() << (2 * prec);
    let scaled = (x.numer() * &scale).div_floor(x.denom());
    let lo = scaled.sqrt();
    let hi = if &lo * &lo * x.denom() == x.numer() * &scale { lo.clone() } else { &lo + 1u32 };
    let den = BigInt::one() << prec;
    (Rational::new(lo, den.clone()), Rational::new(hi, den))
}
