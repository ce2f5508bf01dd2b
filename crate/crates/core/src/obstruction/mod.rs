//! Branched-cover orders, satellite polynomials, the norm-form test, prime
//! screening and the pair enumeration.

mod pair;
mod screen;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclo::{CycField, Rational};
use crate::error::{Error, Result};
use crate::factor::factor_cyclotomic;
use crate::poly::LaurentPoly;

pub use crate::data::{Character, TwistedPolyRecord};
pub use pair::{
    certify_pair, certify_pair_with, family_polynomial, EqOneSelector, ObstructionReport, PairFamily, Verdict, Witness,
};
pub use screen::{screen_primes, screen_primes_with, PrimeVerdict, ScreenOptions, ScreenReport, ScreenStatus};

/// Bring two polynomials into one field, embedding a ℚ-polynomial if needed.
pub(crate) fn common_field(a: &LaurentPoly, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    if a.field() == b.field() {
        Ok((a.clone(), b.clone()))
    } else if a.field().is_rationals() {
        Ok((a.embed(b.field())?, b.clone()))
    } else if b.field().is_rationals() {
        Ok((a.clone(), b.embed(a.field())?))
    } else {
        Err(Error::FieldMismatch(a.field(), b.field()))
    }
}

/// `|H_1|` of the `q`-fold branched cover, `|∏_{i=1}^{q-1} Δ(ω_q^i)|`, as
/// `|Res(t^q - 1, Δ) / Δ(1)|`. Zero means the homology is infinite.
pub fn branched_cover_order(delta: &LaurentPoly, q: u32) -> Result<BigInt> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q < 2 {
        return Err(Error::Precondition(format!("cover degree must be at least 2, got {q}")));
    }
    let d = delta.embed(CycField::RATIONALS).map_err(|_| Error::NotRational)?;
    let d = d.shift(-d.min_degree());
    if !d.coeffs().iter().all(|c| c.is_integral()) {
        return Err(Error::NotIntegral);
    }
    let at_one = d.evaluate_rational(&Rational::one())?;
    if !at_one.as_rational().is_some_and(|v| v.abs().is_one()) {
        return Err(Error::Precondition(format!("Δ(1) = {at_one}, expected ±1")));
    }
    let mut cyc = vec![0i64; q as usize + 1];
    cyc[0] = -1;
    cyc[q as usize] = 1;
    let res = LaurentPoly::from_ints(CycField::RATIONALS, 0, &cyc).resultant(&d)?;
    let value = res.as_rational().expect("rational resultant") / at_one.as_rational().unwrap();
    Ok(value.to_integer().abs())
}

/// `Δ_K(t^n) · Δ_P(t)`.
pub fn satellite_polynomial(delta_k: &LaurentPoly, delta_pattern: &LaurentPoly, n: u32) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::Precondition("winding number must be positive".into()));
    }
    let (k, p) = common_field(&delta_k.compose_power(n)?, delta_pattern)?;
    k.checked_mul(&p)
}

/// `Δ_ρ(t^n) · companion`; the companion defaults to 1.
pub fn twisted_satellite_polynomial(
    twisted: &TwistedPolyRecord,
    n: u32,
    companion: Option<&LaurentPoly>,
) -> Result<LaurentPoly> {
    let one = LaurentPoly::one(twisted.poly.field());
    satellite_polynomial(&twisted.poly, companion.unwrap_or(&one), n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingEntry {
    pub factor: String,
    pub multiplicity: u32,
    /// `None` when `ι(factor)` is associate to the factor itself.
    pub partner: Option<String>,
    pub partner_multiplicity: u32,
    pub ok: bool,
}

/// How the irreducible factors of a polynomial match up under `ι`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingDescription {
    pub t_power: i64,
    pub one_minus_t_power: u32,
    pub entries: Vec<PairingEntry>,
    /// First factor that has no valid partner.
    pub breaking_factor: Option<String>,
}

/// Decide whether `g = a·t^k·(1-t)^j·f(t)·ι(f)(t)` for some `f`, `a`, `j`, `k`.
pub fn norm_form_test(g: &LaurentPoly) -> Result<(bool, PairingDescription)> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = g.field();
    let one_minus_t = LaurentPoly::from_ints(field, 0, &[1, -1]);
    if !one_minus_t.is_conj_self_reciprocal() {
        return Err(Error::Internal("1 - t is not conjugate-self-reciprocal".into()));
    }
    let t_power = g.min_degree();
    let (stripped, j) = g.strip_one_minus_t()?;
    let mut desc = PairingDescription { t_power, one_minus_t_power: j, entries: Vec::new(), breaking_factor: None };
    if stripped.span() == 0 {
        return Ok((true, desc));
    }
    let cert = factor_cyclotomic(&stripped)?;
    let factors = cert.factors();
    for (f, m) in factors {
        let image = f.conj_reciprocal()?;
        let entry = if image == *f {
            PairingEntry {
                factor: f.to_string(),
                multiplicity: *m,
                partner: None,
                partner_multiplicity: *m,
                ok: m % 2 == 0,
            }
        } else {
            let pm = cert.multiplicity(&image);
            PairingEntry {
                factor: f.to_string(),
                multiplicity: *m,
                partner: Some(image.to_string()),
                partner_multiplicity: pm,
                ok: pm == *m,
            }
        };
        if !entry.ok && desc.breaking_factor.is_none() {
            desc.breaking_factor = Some(entry.factor.clone());
        }
        desc.entries.push(entry);
    }
    Ok((desc.breaking_factor.is_none(), desc))
}

/// Result of [`perfect_power_primes`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PerfectPowerPrimes {
    /// `|c| = 1`: every prime is a candidate.
    Unit,
    Primes(Vec<u64>),
}

pub(crate) fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for k in (i * i..=n).step_by(i) {
                sieve[k] = false;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn is_perfect_power(a: &BigInt, p: u64) -> bool {
    let r = a.nth_root(p as u32);
    num_traits::pow(r, p as usize) == *a
}

/// Primes `p` with `|c|` a perfect `p`-th power.
pub fn perfect_power_primes(c: &BigInt) -> Result<PerfectPowerPrimes> {
    if c.is_zero() {
        return Err(Error::Precondition("perfect-power screen of 0".into()));
    }
    let a = c.abs();
    if a.is_one() {
        return Ok(PerfectPowerPrimes::Unit);
    }
    let log2 = a.bits() - 1;
    Ok(PerfectPowerPrimes::Primes(primes_up_to(log2).into_iter().filter(|&p| is_perfect_power(&a, p)).collect()))
}

/// Primes `p` with `|c|` the `p`-th power of a rational.
pub(crate) fn rational_power_primes(c: &Rational) -> Result<PerfectPowerPrimes> {
    if c.is_zero() {
        return Err(Error::Precondition("perfect-power screen of 0".into()));
    }
    let (n, d) = (c.numer().abs(), c.denom().clone());
    if n.is_one() && d.is_one() {
        return Ok(PerfectPowerPrimes::Unit);
    }
    let log2 = n.bits().max(d.bits()) - 1;
    Ok(PerfectPowerPrimes::Primes(
        primes_up_to(log2).into_iter().filter(|&p| is_perfect_power(&n, p) && is_perfect_power(&d, p)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycNum;
    use crate::data::bundled_poly;

    fn q(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(CycField::RATIONALS, 0, c)
    }

    #[test]
    fn branched_orders() {
        let alex = bundled_poly("8_17.alex").unwrap().poly;
        assert_eq!(branched_cover_order(&alex, 2).unwrap(), BigInt::from(37));
        assert_eq!(branched_cover_order(&alex, 3).unwrap(), BigInt::from(169));
        assert_eq!(branched_cover_order(&q(&[1]), 5).unwrap(), BigInt::from(1));
        // Trefoil: |Δ(-1)| = 3, and Δ vanishes at the primitive 6th roots of unity.
        let trefoil = q(&[1, -1, 1]);
        assert_eq!(branched_cover_order(&trefoil, 2).unwrap(), BigInt::from(3));
        assert_eq!(branched_cover_order(&trefoil, 6).unwrap(), BigInt::from(0));
        assert!(branched_cover_order(&q(&[2, 1]), 2).is_err());
        assert!(branched_cover_order(&alex, 1).is_err());
    }

    #[test]
    fn satellites() {
        let alex = bundled_poly("8_17.alex").unwrap().poly;
        assert_eq!(satellite_polynomial(&alex, &q(&[1]), 3).unwrap(), alex.compose_power(3).unwrap());
        let pat = q(&[1, -1, 1]);
        assert_eq!(satellite_polynomial(&alex, &pat, 1).unwrap(), &alex * &pat);
        assert!(satellite_polynomial(&q(&[1]), &q(&[1]), 4).unwrap().is_one());
        let r3 = bundled_poly("8_17.rho3").unwrap();
        let s = twisted_satellite_polynomial(&r3, 5, None).unwrap();
        assert_eq!(s.span(), 20);
        let s = twisted_satellite_polynomial(&r3, 1, Some(&pat)).unwrap();
        assert_eq!(s, &r3.poly * &pat.embed(r3.poly.field()).unwrap());
    }

    #[test]
    fn norm_form_examples() {
        let k = CycField::new(5).unwrap();
        let w = CycNum::omega_pow(k, 1);
        let f = LaurentPoly::new(k, 0, vec![CycNum::from_int(k, 3), w, CycNum::one(k)]).unwrap();
        let g = &f * &f.conj_reciprocal_raw();
        assert!(norm_form_test(&g).unwrap().0);
        let junk = q(&[1, -1]).pow(3).shift(2).scale_rational(&Rational::from_integer(5.into()));
        let (ok, d) = norm_form_test(&junk).unwrap();
        assert!(ok);
        assert_eq!((d.t_power, d.one_minus_t_power, d.entries.len()), (2, 3, 0));
        let (ok, d) = norm_form_test(&f).unwrap();
        assert!(!ok);
        assert!(d.breaking_factor.is_some());
        // A self-paired factor needs even multiplicity.
        assert!(!norm_form_test(&q(&[1, 0, 1])).unwrap().0);
        assert!(norm_form_test(&q(&[1, 0, 1]).pow(2)).unwrap().0);
    }

    #[test]
    fn twisted_products_are_not_norms() {
        let r0 = bundled_poly("8_17.rho0").unwrap().poly;
        let r3 = bundled_poly("8_17.rho3").unwrap().poly;
        let r9 = bundled_poly("8_17.rho9").unwrap().poly;
        assert!(!norm_form_test(&(&r3 * &r9)).unwrap().0);
        let (a, b) = common_field(&r3, &r0).unwrap();
        assert!(!norm_form_test(&(&a * &b)).unwrap().0);
        assert!(norm_form_test(&(&r3 * &r3)).unwrap().0);
    }

    #[test]
    fn perfect_powers() {
        let pp = |c: i64| perfect_power_primes(&BigInt::from(c)).unwrap();
        assert_eq!(pp(8), PerfectPowerPrimes::Primes(vec![3]));
        assert_eq!(pp(64), PerfectPowerPrimes::Primes(vec![2, 3]));
        assert_eq!(pp(-32), PerfectPowerPrimes::Primes(vec![5]));
        assert_eq!(pp(-1), PerfectPowerPrimes::Unit);
        assert_eq!(pp(6), PerfectPowerPrimes::Primes(vec![]));
        assert!(perfect_power_primes(&BigInt::zero()).is_err());
        let r = Rational::new(8.into(), 27.into());
        assert_eq!(rational_power_primes(&r).unwrap(), PerfectPowerPrimes::Primes(vec![3]));
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
