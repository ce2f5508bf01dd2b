//! Factorization of primitive square-free integer polynomials: modular
//! factorization, quadratic Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp;
use super::zpoly::{self, ZPoly};
use crate::cyclo::is_prime_u64;
use crate::error::{Error, Result};

/// Number of good primes whose degree patterns are intersected.
const PATTERN_PRIMES: usize = 6;
/// Candidate primes examined before giving up on finding good ones.
const PRIME_SCAN_LIMIT: usize = 5000;

/// Audit data from the modular stage.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ModularTrace {
    /// `(ℓ, sorted irreducible factor degrees of f mod ℓ)`.
    pub patterns: Vec<(u64, Vec<usize>)>,
    /// Prime used for lifting, when recombination was needed.
    pub lifting_prime: Option<u64>,
}

/// Subset sums of `pattern` as a membership table over `0..=n`.
fn subset_sums(pattern: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in pattern {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Good primes above `floor` for `f`: ℓ ∤ lc(f) and f mod ℓ square-free.
fn good_primes(f: &[BigInt], floor: u64, want: usize) -> Result<Vec<u64>> {
    let lc = f.last().unwrap();
    let mut out = Vec::new();
    let mut cand = floor.max(3) + 1;
    let mut scanned = 0;
    while out.len() < want {
        if scanned > PRIME_SCAN_LIMIT {
            if out.is_empty() {
                return Err(Error::Internal("no good modular prime found".into()));
            }
            break;
        }
        if is_prime_u64(cand) {
            scanned += 1;
            if !(lc % BigInt::from(cand)).is_zero() {
                let fl = zpoly::reduce_word(f, cand);
                if modp::is_squarefree(&fl, cand) {
                    out.push(cand);
                }
            }
        }
        cand += 1;
    }
    Ok(out)
}

/// Factor a primitive, square-free `f ∈ ℤ[t]` with positive leading
/// coefficient and `f(0) ≠ 0` into primitive irreducibles.
pub(crate) fn factor_squarefree(f: &[BigInt], prime_floor: u64) -> Result<(Vec<ZPoly>, ModularTrace)> {
    let n = f.len() - 1;
    let mut trace = ModularTrace::default();
    if n <= 1 {
        return Ok((vec![f.to_vec()], trace));
    }
    let primes = good_primes(f, prime_floor, PATTERN_PRIMES)?;
    let mut allowed = vec![true; n + 1];
    let mut best: Option<(usize, u64)> = None;
    for &l in &primes {
        let fl = modp::monic(&zpoly::reduce_word(f, l), l);
        let pattern = modp::degree_pattern(&fl, l);
        let sums = subset_sums(&pattern, n);
        for (a, s) in allowed.iter_mut().zip(&sums) {
            *a &= *s;
        }
        if best.is_none_or(|(r, _)| pattern.len() < r) {
            best = Some((pattern.len(), l));
        }
        trace.patterns.push((l, pattern));
        if allowed.iter().filter(|&&a| a).count() == 2 {
            return Ok((vec![f.to_vec()], trace));
        }
    }
    let (_, l) = best.unwrap();
    trace.lifting_prime = Some(l);
    let fl = modp::monic(&zpoly::reduce_word(f, l), l);
    let mut rng = ChaCha8Rng::seed_from_u64(l);
    let modular = modp::factor_squarefree(&fl, l, &mut rng);
    if modular.len() == 1 {
        return Ok((vec![f.to_vec()], trace));
    }

    // Landau–Mignotte: lc(f)/lc(g) · g has coefficients below 2^n ‖f‖₂.
    let lc = f.last().unwrap().clone();
    let bound = (BigInt::one() << n) * zpoly::ceil_sqrt(&zpoly::norm2_sq(f)) * &lc;
    let target = &bound * 2 + 1;
    let lb = BigInt::from(l);
    let mut modulus = lb.clone();
    while modulus <= target {
        modulus *= &lb;
    }
    let lifted = lift_all(f, &modular, l, &modulus);
    Ok((recombine(f, lifted, &modulus, &allowed), trace))
}

/// Inverse of `a` modulo `m` (gcd assumed 1).
fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// One quadratic Hensel step modulo `m → m²`: from `f ≡ g·h`, `s·g + t·h ≡ 1`
/// (h monic) mod `m` to the same relations mod `m²`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zpoly::sub_mod(f, &zpoly::mul(g, h), &m2);
    let (q, r) = zpoly::div_rem_monic_mod(&zpoly::mul(s, &e), h, &m2);
    let g1 = zpoly::reduce(&zpoly::add_mod(&zpoly::add_mod(g, &zpoly::mul(t, &e), &m2), &zpoly::mul(&q, g), &m2), &m2);
    let h1 = zpoly::add_mod(h, &r, &m2);
    let b = zpoly::sub_mod(&zpoly::add_mod(&zpoly::mul(s, &g1), &zpoly::mul(t, &h1), &m2), &[BigInt::one()], &m2);
    let (c, d) = zpoly::div_rem_monic_mod(&zpoly::mul(s, &b), &h1, &m2);
    let s1 = zpoly::sub_mod(s, &d, &m2);
    let t1 = zpoly::sub_mod(&zpoly::sub_mod(t, &zpoly::mul(t, &b), &m2), &zpoly::mul(&c, &g1), &m2);
    (g1, h1, s1, t1)
}

/// Lift monic `factors` of `f mod ℓ` to monic factors mod `modulus` (a power of ℓ).
fn lift_all(f: &[BigInt], factors: &[Vec<u64>], l: u64, modulus: &BigInt) -> Vec<ZPoly> {
    let lc = f.last().unwrap();
    if factors.len() == 1 {
        let inv = inv_mod(lc, modulus);
        return vec![zpoly::reduce(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), modulus)];
    }
    let (a, b) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, p| modp::mul(&acc, p, l));
    let lcl = (lc.mod_floor(&BigInt::from(l))).to_u64_digits().1.first().copied().unwrap_or(0);
    let g0 = modp::scale(&prod(a), lcl, l);
    let h0 = prod(b);
    let (one, s0, t0) = modp::xgcd(&g0, &h0, l);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h) = (zpoly::lift_word(&g0), zpoly::lift_word(&h0));
    let (mut s, mut t) = (zpoly::lift_word(&s0), zpoly::lift_word(&t0));
    let mut m = BigInt::from(l);
    while &m < modulus {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let g = zpoly::reduce(&g, modulus);
    let h = zpoly::reduce(&h, modulus);
    let mut out = lift_all(&g, a, l, modulus);
    out.extend(lift_all(&h, b, l, modulus));
    out
}

fn primitive(a: ZPoly) -> ZPoly {
    let mut c = zpoly::content(&a);
    if a.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    a.into_iter().map(|x| x / &c).collect()
}

/// Subset recombination (smallest subsets first) with constant-term pruning.
fn recombine(f: &[BigInt], lifted: Vec<ZPoly>, modulus: &BigInt, allowed: &[bool]) -> Vec<ZPoly> {
    let mut rest = f.to_vec();
    let mut pool: Vec<ZPoly> = lifted;
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= pool.len() {
        let lc = rest.last().unwrap().clone();
        let target_const = &lc * &rest[0];
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let degree: usize = subset.iter().map(|&i| pool[i].len() - 1).sum();
            if allowed[degree] {
                let c0 = subset.iter().fold(lc.clone(), |acc, &i| (acc * &pool[i][0]).mod_floor(modulus));
                let c0 = zpoly::symmetric_int(&c0, modulus);
                if !c0.is_zero() && (&target_const % &c0).is_zero() {
                    let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| zpoly::mul_mod(&acc, &pool[i], modulus));
                    let cand = primitive(zpoly::symmetric(&prod, modulus));
                    if let Some(q) = zpoly::div_exact(&rest, &cand) {
                        found.push(cand);
                        rest = q;
                        let mut k = 0;
                        pool.retain(|_| {
                            let keep = !subset.contains(&k);
                            k += 1;
                            keep
                        });
                        continue 'outer;
                    }
                }
            }
            if !next_subset(&mut subset, pool.len()) {
                break;
            }
        }
        size += 1;
    }
    found.push(rest);
    found
}

/// Advance to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
