//! Irreducibility of `G(t^n)` from irreducibility of `G`.
//!
//! With θ a root of an irreducible `G` over K and L = K(θ), `G(t^n)` is
//! irreducible iff `t^n − θ` is irreducible over L (Capelli): θ must not be a
//! q-th power in L for any prime q | n, nor lie in −4L⁴ when 4 | n. Each
//! condition is witnessed at a prime 𝔓 of L: a simple factor φ of `G mod 𝔭`
//! gives L → F_ℓ[t]/φ, and an element that is not an e-th power there is not
//! one in L.

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp;
use super::norm::root_of_unity;
use crate::cyclo::{is_prime_u64, Rational};
use crate::poly::LaurentPoly;

/// Primes ℓ tried per condition before giving up.
const CANDIDATE_PRIMES: usize = 120;

/// gcd of the exponents carrying nonzero coefficients, for `m` with
/// `min_degree == 0` and nonzero constant term.
pub(crate) fn exponent_gcd(m: &LaurentPoly) -> u32 {
    m.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(0u32, |g, (k, _)| g.gcd(&(k as u32)))
}

/// `G` with `m = G(t^n)`.
pub(crate) fn compress(m: &LaurentPoly, n: u32) -> LaurentPoly {
    let coeffs = m.coeffs().iter().step_by(n as usize).cloned().collect();
    LaurentPoly::new(m.field(), 0, coeffs).expect("compressed coefficients share the field")
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn reduce_rational(q: &Rational, l: u64) -> Option<u64> {
    let lb = l.into();
    let num = q.numer().mod_floor(&lb).to_u64()?;
    let den = q.denom().mod_floor(&lb).to_u64()?;
    (den != 0).then(|| num * modp::inv(den, l) % l)
}

/// `g` mod ℓ under ω ↦ r, lowest first; `None` if a denominator vanishes.
fn reduce(g: &LaurentPoly, r: u64, l: u64) -> Option<Vec<u64>> {
    g.coeffs()
        .iter()
        .map(|c| {
            let mut acc = 0u64;
            let mut rk = 1u64;
            for q in c.coords() {
                acc = (acc + reduce_rational(q, l)? * rk) % l;
                rk = rk * r % l;
            }
            Some(acc)
        })
        .collect()
}

/// Whether some prime of L proves `scale · θ` is not an e-th power.
fn not_power_witness(g: &LaurentPoly, e: u64, scale: &Rational) -> bool {
    let p = g.field().conductor() as u64;
    let modulus = if p <= 2 { e } else { e.lcm(&p) };
    let mut rng = ChaCha8Rng::seed_from_u64(0x6361_7065);
    let mut tried = 0;
    let mut l = modulus + 1;
    while tried < CANDIDATE_PRIMES {
        l += modulus;
        if !is_prime_u64(l) {
            continue;
        }
        tried += 1;
        let r = if p <= 2 { 1 } else { root_of_unity(p, l) };
        let (Some(gbar), Some(c)) = (reduce(g, r, l), reduce_rational(scale, l)) else {
            continue;
        };
        if c == 0 || gbar.last() != Some(&1) || !modp::is_squarefree(&gbar, l) {
            continue;
        }
        for phi in modp::factor_squarefree(&gbar, l, &mut rng) {
            let k = (phi.len() - 1) as u32;
            if phi == [0, 1] {
                continue;
            }
            let Some(size) = l.checked_pow(k) else { continue };
            let x = modp::pow_mod(&[0, c], (size - 1) / e, &phi, l);
            if x != [1] {
                return true;
            }
        }
    }
    false
}

/// True only if `G(t^n)` is proven irreducible, given `G` monic irreducible
/// with `G(0) ≠ 0`. False means no proof was found, not reducibility.
pub(crate) fn proves_irreducible(g: &LaurentPoly, n: u32) -> bool {
    let one = Rational::from_integer(1.into());
    let all_primes = prime_divisors(n).into_iter().all(|q| not_power_witness(g, q as u64, &one));
    all_primes && (!n.is_multiple_of(4) || not_power_witness(g, 4, &Rational::new((-1).into(), 4.into())))
}
