//! Modular recovery of `gcd(g, n)` over ℚ(ω_p) for a polynomial `n` over ℚ
//! when the degree of the gcd is known in advance.
//!
//! For primes `ℓ ≡ 1 mod p` every embedding `ω ↦ r^ν` gives a gcd over F_ℓ;
//! the power-basis coordinates are interpolated from the `p - 1` images,
//! combined by CRT and rationally reconstructed. Candidates are accepted only
//! after exact division checks over the field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{modp, norm};
use crate::cyclo::{is_prime_u64, CycNum, Rational};
use crate::poly::LaurentPoly;

const MAX_PRIMES: usize = 400;

fn reduce_rational(q: &Rational, l: u64) -> Option<u64> {
    let lb = BigInt::from(l);
    let d = q.denom().mod_floor(&lb).to_u64().unwrap();
    if d == 0 {
        return None;
    }
    let n = q.numer().mod_floor(&lb).to_u64().unwrap();
    Some(n * modp::inv(d, l) % l)
}

/// Inverse of the `(p-1)×(p-1)` matrix `V[ν-1][k] = r^{νk}` mod ℓ.
fn vandermonde_inverse(r: u64, p: u64, l: u64) -> Vec<Vec<u64>> {
    let n = (p - 1) as usize;
    let mut a: Vec<Vec<u64>> = (1..p)
        .map(|nu| {
            let x = modp::pow_u64(r, nu, l);
            let mut row: Vec<u64> = (0..n as u64).map(|k| modp::pow_u64(x, k, l)).collect();
            row.extend((0..n).map(|j| u64::from(j + 1 == nu as usize)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| a[i][col] != 0).expect("Vandermonde matrix is invertible");
        a.swap(col, piv);
        let inv = modp::inv(a[col][col], l);
        for v in a[col].iter_mut() {
            *v = *v * inv % l;
        }
        let pivot = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && row[col] != 0 {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + l - f * p % l) % l;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// `n/d ≡ a (mod m)` with `|n|, d ≤ sqrt(m/2)`.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let half: BigInt = m >> 1u32;
    let bound = half.sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(Rational::new(r1, s1))
}

/// Monic `gcd(g, n)` of known degree `d`, or `None` if the modular search
/// did not converge (callers then fall back to the Euclidean algorithm).
pub(crate) fn gcd_with_rational(g: &LaurentPoly, n: &[Rational], d: usize) -> Option<LaurentPoly> {
    let field = g.field();
    let p = field.conductor() as u64;
    let width = field.degree();
    let coords: Vec<&[Rational]> = g.coeffs().iter().map(CycNum::coords).collect();
    let nk = LaurentPoly::from_rationals(field, 0, n);

    let mut residues: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); width]; d + 1];
    let mut modulus = BigInt::one();
    let mut last: Option<LaurentPoly> = None;
    let mut l = (1u64 << 29) / p * p + 1;
    let mut used = 0;
    while used < MAX_PRIMES {
        l += p;
        if !is_prime_u64(l) {
            continue;
        }
        let Some(nl) = n.iter().map(|q| reduce_rational(q, l)).collect::<Option<Vec<u64>>>() else {
            continue;
        };
        let Some(gl) = coords
            .iter()
            .map(|row| row.iter().map(|q| reduce_rational(q, l)).collect::<Option<Vec<u64>>>())
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        used += 1;
        let r = norm::root_of_unity(p, l);
        let mut images = Vec::with_capacity(width);
        for nu in 1..p {
            let x = modp::pow_u64(r, nu, l);
            let g_nu: Vec<u64> =
                gl.iter().map(|row| row.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % l)).collect();
            let h = modp::gcd(&modp::trim(g_nu), &modp::trim(nl.clone()), l);
            if h.len() != d + 1 {
                break;
            }
            images.push(h);
        }
        if images.len() != width {
            continue;
        }
        let vinv = vandermonde_inverse(r, p, l);
        let lb = BigInt::from(l);
        let m_inv = modp::inv((&modulus % &lb).to_u64().unwrap(), l);
        for (j, res_j) in residues.iter_mut().enumerate() {
            for (k, res) in res_j.iter_mut().enumerate() {
                let v = (0..width).fold(0u64, |acc, nu| (acc + vinv[k][nu] * images[nu][j]) % l);
                let cur = res.mod_floor(&lb).to_u64().unwrap();
                let step = (v + l - cur) % l * m_inv % l;
                *res += &modulus * BigInt::from(step);
            }
        }
        modulus *= &lb;

        let cand: Option<Vec<CycNum>> = residues
            .iter()
            .map(|row| {
                let c = row.iter().map(|a| rational_reconstruct(a, &modulus)).collect::<Option<Vec<_>>>()?;
                CycNum::from_coords(field, c).ok()
            })
            .collect();
        let Some(cand) = cand else { continue };
        let h = LaurentPoly::new(field, 0, cand).ok()?;
        if last.as_ref() == Some(&h) && verify(&h, g, &nk, d) {
            return Some(h);
        }
        last = Some(h);
    }
    None
}

fn verify(h: &LaurentPoly, g: &LaurentPoly, n: &LaurentPoly, d: usize) -> bool {
    h.span() == d
        && h.min_degree() == 0
        && h.leading_coeff().is_some_and(CycNum::is_one)
        && g.divisible_by(h).unwrap_or(false)
        && n.divisible_by(h).unwrap_or(false)
}
