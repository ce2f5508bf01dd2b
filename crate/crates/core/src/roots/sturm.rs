//! Sturm chains and the `x = t + 1/t` substitution, over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclo::{CycField, Rational};
use crate::dense;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Closed real interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub low: Rational,
    pub high: Rational,
}

impl RealInterval {
    pub fn new(low: Rational, high: Rational) -> Result<Self> {
        if low > high {
            return Err(Error::Precondition(format!("interval [{low}, {high}] has low > high")));
        }
        Ok(RealInterval { low, high })
    }

    pub fn from_ints(low: i64, high: i64) -> Result<Self> {
        Self::new(Rational::from_integer(low.into()), Rational::from_integer(high.into()))
    }
}

/// Positive rescaling to a primitive integer vector; signs are unchanged.
fn primitive(a: Vec<Rational>) -> Vec<Rational> {
    let lcm = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = a.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return a;
    }
    ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect()
}

/// Dense rational coefficients of `f` as a function on the reals: ordinary
/// polynomials keep their `t`-power factor (so `t = 0` can be a root);
/// genuinely Laurent ones are multiplied through by `t^-min_degree`.
pub(crate) fn real_dense(f: &LaurentPoly) -> Result<Vec<Rational>> {
    let coeffs = if f.is_ordinary() { f.ordinary_dense()? } else { f.coeffs().to_vec() };
    coeffs.iter().map(|c| c.as_rational().cloned().ok_or(Error::NotRational)).collect()
}

pub(crate) struct SturmChain {
    chain: Vec<Vec<Rational>>,
}

impl SturmChain {
    /// Chain of the square-free part of a nonzero `a`.
    pub(crate) fn new(a: &[Rational]) -> Self {
        let one = Rational::one();
        let da = dense::derivative(a);
        let g = dense::gcd(a, &da, &one);
        let p0 = primitive(dense::div_exact(a, &g).expect("gcd divides"));
        let p1 = primitive(dense::derivative(&p0));
        let mut chain = vec![p0];
        if !p1.is_empty() {
            chain.push(p1);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = dense::rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(primitive(r.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = dense::sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(low, high]`.
    pub(crate) fn count(&self, low: &Rational, high: &Rational) -> usize {
        if low >= high {
            return 0;
        }
        self.variations(low) - self.variations(high)
    }
}

/// Number of distinct real roots of `f` in `(low, high]`.
pub fn sturm_count(f: &LaurentPoly, interval: &RealInterval) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = real_dense(f)?;
    Ok(SturmChain::new(&a).count(&interval.low, &interval.high))
}

/// The polynomial `q` with `q(t + 1/t)·t^m = f(t)` for palindromic `f` of
/// degree `2m` (taken up to a unit `a·t^k`).
pub fn chebyshev_transform(f: &LaurentPoly) -> Result<LaurentPoly> {
    let m = f.monic_part()?;
    let a: Vec<Rational> = m.rational_coeffs().ok_or(Error::NotRational)?;
    if !m.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    let span = a.len() - 1;
    if span % 2 == 1 {
        return Err(Error::OddDegree(span));
    }
    let half = span / 2;
    // V_0 = 2, V_1 = x, V_{j+1} = x·V_j - V_{j-1}, so that V_j(t + 1/t) = t^j + t^-j.
    let x = vec![Rational::zero(), Rational::one()];
    let mut prev = vec![Rational::from_integer(2.into())];
    let mut cur = x.clone();
    let mut q = vec![a[half].clone()];
    for j in 1..=half {
        if j > 1 {
            let next = dense::sub(&dense::mul(&x, &cur), &prev);
            prev = std::mem::replace(&mut cur, next);
        }
        q = dense::add(&q, &dense::scale(&cur, &a[half + j]));
    }
    Ok(LaurentPoly::from_rationals(CycField::RATIONALS, 0, &q))
}
