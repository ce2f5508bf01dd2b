//! `N(f) = ∏_ν σ_ν(f)` for `f` over ℚ(ω_p), via CRT over primes `ℓ ≡ 1 mod p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::zpoly;
use crate::cyclo::{is_prime_u64, Rational};
use crate::poly::LaurentPoly;

/// Element of order `p` in F_ℓ^×.
pub(crate) fn root_of_unity(p: u64, l: u64) -> u64 {
    (2..l).map(|x| modp::pow_u64(x, (l - 1) / p, l)).find(|&r| r != 1).unwrap()
}

/// Integral coordinates of every coefficient over a common denominator.
fn integral_coords(f: &LaurentPoly) -> (Vec<Vec<BigInt>>, BigInt) {
    let den = f.coeffs().iter().flat_map(|c| c.coords()).fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let rows = f.coeffs().iter().map(|c| c.coords().iter().map(|q| q.numer() * (&den / q.denom())).collect()).collect();
    (rows, den)
}

/// Rational coefficients (shifted, lowest first) of the norm of a nonzero
/// polynomial over a cyclotomic field of conductor `p ≥ 3`.
pub(crate) fn norm_dense(f: &LaurentPoly) -> Vec<Rational> {
    let field = f.field();
    let p = field.conductor() as u64;
    let deg = field.degree();
    let (rows, den) = integral_coords(f);
    // ‖σ(F)‖₁ ≤ S for every embedding, so |coefficients of N(F)| ≤ S^{p-1}.
    let s: BigInt = rows.iter().flatten().map(|c| c.abs()).sum();
    let bound = s.pow(deg as u32) * 2 + 1;

    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut l = (1u64 << 30) / p * p + 1;
    while modulus <= bound {
        while !is_prime_u64(l) {
            l += p;
        }
        let r = root_of_unity(p, l);
        let lb = BigInt::from(l);
        let reduced: Vec<Vec<u64>> =
            rows.iter().map(|row| row.iter().map(|c| c.mod_floor(&lb).to_u64().unwrap()).collect()).collect();
        let mut prod = vec![1u64];
        for nu in 1..p {
            let rnu = modp::pow_u64(r, nu, l);
            let conj: Vec<u64> = reduced
                .iter()
                .map(|row| {
                    let mut x = 0u64;
                    let mut pw = 1u64;
                    for &c in row {
                        x = (x + c * pw) % l;
                        pw = pw * rnu % l;
                    }
                    x
                })
                .collect();
            prod = modp::mul(&prod, &conj, l);
        }
        let n = prod.len().max(acc.len());
        prod.resize(n, 0);
        acc.resize(n, BigInt::zero());
        // Incremental CRT: x ≡ acc (mod modulus), x ≡ prod (mod ℓ).
        let m_inv = modp::inv((&modulus % &lb).to_u64().unwrap(), l);
        for (a, &v) in acc.iter_mut().zip(&prod) {
            let am = a.mod_floor(&lb).to_u64().unwrap();
            let k = (v + l - am) % l * m_inv % l;
            *a += &modulus * BigInt::from(k);
        }
        modulus *= &lb;
        l += p;
    }
    let scale = den.pow(deg as u32);
    zpoly::symmetric(&acc, &modulus).into_iter().map(|c| Rational::new(c, scale.clone())).collect()
}

/// Same result by multiplying the Galois conjugates directly.
pub(crate) fn norm_by_conjugates(f: &LaurentPoly) -> LaurentPoly {
    let field = f.field();
    let mut acc = LaurentPoly::one(field);
    for nu in field.galois_exponents() {
        acc = &acc * &f.galois_unchecked(nu);
    }
    acc
}
