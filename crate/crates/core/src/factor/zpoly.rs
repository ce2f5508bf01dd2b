//! Dense integer polynomials and their reductions modulo word primes and
//! prime powers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::Rational;

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// `f = scalar · F` with `F` primitive in ℤ[t] and positive leading coefficient.
pub(crate) fn primitive_from_rationals(f: &[Rational]) -> (ZPoly, Rational) {
    let den = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = f.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = content(&ints);
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_zero() {
        return (Vec::new(), Rational::zero());
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (prim, Rational::new(g, den))
}

pub(crate) fn to_rationals(a: &[BigInt]) -> Vec<Rational> {
    a.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient in ℤ[t], or `None`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let b = b.to_vec();
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rm) = r[i + db].div_rem(lc);
        if !rm.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

/// Squared Euclidean norm.
pub(crate) fn norm2_sq(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c * c).sum()
}

pub(crate) fn reduce_word(a: &[BigInt], l: u64) -> Vec<u64> {
    let lb = BigInt::from(l);
    super::modp::trim(a.iter().map(|c| c.mod_floor(&lb).to_u64().unwrap()).collect())
}

pub(crate) fn lift_word(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Coefficientwise reduction into `[0, m)`.
pub(crate) fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficientwise symmetric representative in `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

pub(crate) fn symmetric_int(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if r > (m >> 1) {
        r - m
    } else {
        r
    }
}

pub(crate) fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

pub(crate) fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

pub(crate) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&mul(a, b), m)
}

/// Division by a monic polynomial modulo `m`.
pub(crate) fn div_rem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(b.last().is_some_and(One::is_one));
    let a = reduce(a, m);
    if a.len() < b.len() {
        return (Vec::new(), a);
    }
    let db = b.len() - 1;
    let mut r = a;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] = (&r[i + j] - &c * bj).mod_floor(m);
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), reduce(&r, m))
}

/// Ceiling of `sqrt(x)` for `x ≥ 0`.
pub(crate) fn ceil_sqrt(x: &BigInt) -> BigInt {
    let s = x.sqrt();
    if &s * &s == *x {
        s
    } else {
        s + 1
    }
}
