//! Dense univariate polynomial routines over an exact field.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no trailing
//! zeros; the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{CycNum, Rational};

pub(crate) trait FieldElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    fn times_int(&self, k: i64) -> Self;
}

impl FieldElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn times_int(&self, k: i64) -> Self {
        self * Rational::from_integer(BigInt::from(k))
    }
}

impl FieldElem for CycNum {
    fn zero_like(&self) -> Self {
        CycNum::zero(self.field())
    }
    fn one_like(&self) -> Self {
        CycNum::one(self.field())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.inv().expect("inverse of zero")
    }
    fn times_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }
}

pub(crate) fn trim<T: FieldElem>(mut a: Vec<T>) -> Vec<T> {
    while a.last().is_some_and(|c| c.is_zero_elem()) {
        a.pop();
    }
    a
}

pub(crate) fn degree<T>(a: &[T]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add<T: FieldElem>(a: &[T], b: &[T]) -> Vec<T> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = o.plus(s);
    }
    trim(out)
}

pub(crate) fn sub<T: FieldElem>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = a.to_vec();
    for (i, s) in b.iter().enumerate() {
        if i < out.len() {
            out[i] = out[i].minus(s);
        } else {
            out.push(s.negated());
        }
    }
    trim(out)
}

pub(crate) fn scale<T: FieldElem>(a: &[T], c: &T) -> Vec<T> {
    if c.is_zero_elem() {
        return Vec::new();
    }
    a.iter().map(|x| x.times(c)).collect()
}

pub(crate) fn mul<T: FieldElem>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_elem() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero_elem() {
                continue;
            }
            out[i + j] = out[i + j].plus(&x.times(y));
        }
    }
    trim(out)
}

/// Division with remainder; panics if `b` is zero.
pub(crate) fn div_rem<T: FieldElem>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let db = degree(b).expect("division by zero polynomial");
    let Some(da) = degree(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), a.to_vec());
    }
    let monic_divisor = b[db] == b[db].one_like();
    let lc_inv = if monic_divisor { b[db].clone() } else { b[db].inverse() };
    let mut rem = a.to_vec();
    let mut quot = vec![a[0].zero_like(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = &rem[k + db];
        if top.is_zero_elem() {
            continue;
        }
        let q = if monic_divisor { top.clone() } else { top.times(&lc_inv) };
        for (j, bj) in b.iter().enumerate().take(db) {
            if bj.is_zero_elem() {
                continue;
            }
            rem[k + j] = rem[k + j].minus(&q.times(bj));
        }
        rem[k + db] = q.zero_like();
        quot[k] = q;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

pub(crate) fn rem<T: FieldElem>(a: &[T], b: &[T]) -> Vec<T> {
    div_rem(a, b).1
}

/// Exact quotient, or `None` if the remainder is nonzero.
pub(crate) fn div_exact<T: FieldElem>(a: &[T], b: &[T]) -> Option<Vec<T>> {
    let (q, r) = div_rem(a, b);
    r.is_empty().then_some(q)
}

pub(crate) fn monic<T: FieldElem>(a: &[T]) -> Vec<T> {
    match a.last() {
        None => Vec::new(),
        Some(lc) if *lc == lc.one_like() => a.to_vec(),
        Some(lc) => scale(a, &lc.inverse()),
    }
}

/// Monic gcd. `one` supplies the field for the result when it is 1.
pub(crate) fn gcd<T: FieldElem>(a: &[T], b: &[T], one: &T) -> Vec<T> {
    let mut x = monic(a);
    let mut y = monic(b);
    if degree(&x) < degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = monic(&rem(&x, &y));
        x = y;
        y = r;
    }
    if x.is_empty() {
        return Vec::new();
    }
    if x.len() == 1 {
        return vec![one.clone()];
    }
    x
}

pub(crate) fn derivative<T: FieldElem>(a: &[T]) -> Vec<T> {
    trim(a.iter().enumerate().skip(1).map(|(k, c)| c.times_int(k as i64)).collect())
}

pub(crate) fn eval<T: FieldElem>(a: &[T], x: &T) -> T {
    let mut acc = x.zero_like();
    for c in a.iter().rev() {
        acc = acc.times(x).plus(c);
    }
    acc
}

pub(crate) fn pow_elem<T: FieldElem>(x: &T, mut e: u64) -> T {
    let mut base = x.clone();
    let mut acc = x.one_like();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.times(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.times(&base);
        }
    }
    acc
}

/// Resultant by the Euclidean remainder sequence over the field.
/// Returns zero when either input is zero.
pub(crate) fn resultant<T: FieldElem>(a: &[T], b: &[T], one: &T) -> T {
    let (Some(_), Some(_)) = (degree(a), degree(b)) else {
        return one.zero_like();
    };
    let mut acc = one.clone();
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    loop {
        let dx = degree(&x).unwrap();
        let dy = degree(&y).unwrap();
        if dy == 0 {
            return acc.times(&pow_elem(&y[0], dx as u64));
        }
        let r = rem(&x, &y);
        let Some(dr) = degree(&r) else {
            return one.zero_like();
        };
        if (dx * dy) % 2 == 1 {
            acc = acc.negated();
        }
        acc = acc.times(&pow_elem(&y[dy], (dx - dr) as u64));
        x = y;
        y = r;
    }
}

/// Square-free decomposition (Yun). Returns monic `(part, multiplicity)` pairs
/// with `monic(a) = ∏ part^multiplicity`; parts of degree zero are omitted.
pub(crate) fn squarefree_decomposition<T: FieldElem>(a: &[T], one: &T) -> Vec<(Vec<T>, u32)> {
    let a = monic(a);
    let mut out = Vec::new();
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let da = derivative(&a);
    let g = gcd(&a, &da, one);
    let mut b = div_exact(&a, &g).expect("gcd divides");
    let c = div_exact(&da, &g).expect("gcd divides derivative");
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1u32;
    while degree(&b).unwrap_or(0) > 0 {
        let part = gcd(&b, &d, one);
        let next_b = div_exact(&b, &part).expect("gcd divides");
        let c = div_exact(&d, &part).expect("gcd divides");
        if degree(&part).unwrap_or(0) > 0 {
            out.push((part, i));
        }
        d = sub(&c, &derivative(&next_b));
        b = next_b;
        i += 1;
    }
    out
}

/// `a(t + c)` by Horner's scheme.
pub(crate) fn taylor_shift<T: FieldElem>(a: &[T], c: &T) -> Vec<T> {
    let mut acc: Vec<T> = Vec::new();
    for coeff in a.iter().rev() {
        // acc = acc * (t + c) + coeff
        let mut next = vec![coeff.zero_like(); acc.len() + 1];
        for (i, x) in acc.iter().enumerate() {
            next[i + 1] = next[i + 1].plus(x);
            next[i] = next[i].plus(&x.times(c));
        }
        next[0] = next[0].plus(coeff);
        acc = trim(next);
    }
    acc
}

#[cfg(test)]
pub(crate) fn rationals_from_ints(v: &[i64]) -> Vec<Rational> {
    trim(v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
}

/// Sign of a rational polynomial at a rational point.
pub(crate) fn sign_at(a: &[Rational], x: &Rational) -> i8 {
    let v = eval(a, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[allow(dead_code)]
pub(crate) fn is_one<T: FieldElem>(a: &[T]) -> bool {
    a.len() == 1 && a[0] == a[0].one_like()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        rationals_from_ints(v)
    }

    #[test]
    fn division_and_gcd() {
        let a = q(&[-1, 0, 1]);
        let b = q(&[-1, 1]);
        let (quot, r) = div_rem(&a, &b);
        assert_eq!(quot, q(&[1, 1]));
        assert!(r.is_empty());
        let one = Rational::one();
        assert_eq!(gcd(&a, &q(&[1, 1]), &one), q(&[1, 1]));
        assert_eq!(gcd(&q(&[1, 1]), &q(&[2, 1]), &one), q(&[1]));
    }

    #[test]
    fn resultant_small() {
        let one = Rational::one();
        // Res(t^2 - 1, t - 2) = 3
        assert_eq!(resultant(&q(&[-1, 0, 1]), &q(&[-2, 1]), &one), Rational::from_integer(3.into()));
        // Res(t - a, g) = g(a)
        let g = q(&[5, -3, 2]);
        assert_eq!(resultant(&q(&[-7, 1]), &g, &one), eval(&g, &Rational::from_integer(7.into())));
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let one = Rational::one();
        let lin = q(&[-1, 1]);
        let quad = q(&[1, 0, 1]);
        let f = mul(&mul(&mul(&lin, &lin), &lin), &quad);
        let parts = squarefree_decomposition(&f, &one);
        assert_eq!(parts, vec![(quad, 1), (lin, 3)]);
    }

    #[test]
    fn shift_round_trip() {
        let f = q(&[3, -1, 4, 1]);
        let c = Rational::from_integer(2.into());
        let g = taylor_shift(&f, &c);
        assert_eq!(taylor_shift(&g, &-c), f);
    }
}
