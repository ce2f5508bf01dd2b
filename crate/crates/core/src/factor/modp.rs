//! Dense polynomials over F_ℓ for a word-sized odd prime ℓ < 2^31.
//!
//! Coefficients are `u64` in `[0, ℓ)`, lowest degree first, trimmed.

use rand::Rng;

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn inv(a: u64, l: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(l));
    pow_u64(a, l - 2, l)
}

pub(crate) fn pow_u64(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut acc = 1u64;
    b %= l;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], l: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0);
            if x >= l {
                x - l
            } else {
                x
            }
        })
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], l: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n).map(|i| (a.get(i).copied().unwrap_or(0) + l - b.get(i).copied().unwrap_or(0)) % l).collect();
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, l: u64) -> Poly {
    trim(a.iter().map(|&x| x * c % l).collect())
}

pub(crate) fn mul(a: &[u64], b: &[u64], l: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Accumulate in u128 and reduce once per output coefficient.
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += (x * y) as u128;
        }
    }
    trim(acc.into_iter().map(|v| (v % l as u128) as u64).collect())
}

pub(crate) fn monic(a: &[u64], l: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, l), l),
    }
}

pub(crate) fn div_rem(a: &[u64], b: &[u64], l: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by zero polynomial mod l");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = b.len() - 1;
    let lc_inv = inv(b[db], l);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] * lc_inv % l;
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + l - c * bj % l) % l;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &[u64], b: &[u64], l: u64) -> Poly {
    div_rem(a, b, l).1
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], l: u64) -> Poly {
    rem(&mul(a, b, l), m, l)
}

pub(crate) fn derivative(a: &[u64], l: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % l) * c % l).collect())
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u64], b: &[u64], l: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, l);
        a = b;
        b = r;
    }
    monic(&a, l)
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
pub(crate) fn xgcd(a: &[u64], b: &[u64], l: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, l);
        let s2 = sub(&s0, &mul(&q, &s1, l), l);
        let t2 = sub(&t0, &mul(&q, &t1, l), l);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let c = inv(*r0.last().expect("xgcd of zeros"), l);
    (scale(&r0, c, l), scale(&s0, c, l), scale(&t0, c, l))
}

pub(crate) fn pow_mod(base: &[u64], mut e: u64, m: &[u64], l: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, l);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, l);
        }
        e >>= 1;
        if e > 0 {
            b = mul_mod(&b, &b, m, l);
        }
    }
    rem(&acc, m, l)
}

pub(crate) fn is_squarefree(a: &[u64], l: u64) -> bool {
    let d = derivative(a, l);
    !d.is_empty() && gcd(a, &d, l).len() == 1
}

/// Matrix of the Frobenius `h ↦ h^ℓ` on `F_ℓ[x]/(m)`: row `i` holds
/// `x^{iℓ} mod m`.
pub(crate) struct Frobenius {
    rows: Vec<Poly>,
    modulus: Poly,
    l: u64,
}

impl Frobenius {
    pub(crate) fn new(m: &[u64], l: u64) -> Self {
        let n = m.len() - 1;
        let xl = pow_mod(&[0, 1], l, m, l);
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            rows.push(cur.clone());
            cur = mul_mod(&cur, &xl, m, l);
        }
        Frobenius { rows, modulus: m.to_vec(), l }
    }

    /// `h^ℓ mod m` for `deg h < deg m`.
    pub(crate) fn apply(&self, h: &[u64]) -> Poly {
        let n = self.modulus.len() - 1;
        let mut acc = vec![0u128; n];
        for (i, &c) in h.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, &r) in self.rows[i].iter().enumerate() {
                acc[j] += (c * r) as u128;
            }
        }
        trim(acc.into_iter().map(|v| (v % self.l as u128) as u64).collect())
    }
}

/// Distinct-degree factorization of a monic square-free polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &[u64], l: u64) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let frob = Frobenius::new(f, l);
    let mut rest = f.to_vec();
    let mut h = rem(&[0, 1], f, l);
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
            break;
        }
        h = frob.apply(&h);
        let g = gcd(&rest, &sub(&h, &[0, 1], l), l);
        if g.len() > 1 {
            rest = div_rem(&rest, &g, l).0;
            out.push((g, d));
        }
    }
    out
}

/// Multiset of irreducible factor degrees of a monic square-free polynomial.
pub(crate) fn degree_pattern(f: &[u64], l: u64) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, l) {
        out.extend(std::iter::repeat_n(d, (g.len() - 1) / d));
    }
    out.sort_unstable();
    out
}

/// Split a monic product of irreducibles of common degree `d` (Cantor–Zassenhaus).
pub(crate) fn equal_degree<R: Rng>(f: &[u64], d: usize, l: u64, rng: &mut R) -> Vec<Poly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let frob = Frobenius::new(f, l);
    loop {
        let a = trim((0..n).map(|_| rng.gen_range(0..l)).collect());
        if a.len() <= 1 {
            continue;
        }
        let g = gcd(f, &a, l);
        if g.len() > 1 && g.len() < f.len() {
            return split_both(f, &g, d, l, rng);
        }
        // a^{(ℓ^d - 1)/2} = (a · a^ℓ ⋯ a^{ℓ^{d-1}})^{(ℓ-1)/2}
        let mut conj = a.clone();
        let mut norm = a;
        for _ in 1..d {
            conj = frob.apply(&conj);
            norm = mul_mod(&norm, &conj, f, l);
        }
        let b = pow_mod(&norm, (l - 1) / 2, f, l);
        let g = gcd(f, &sub(&b, &[1], l), l);
        if g.len() > 1 && g.len() < f.len() {
            return split_both(f, &g, d, l, rng);
        }
    }
}

fn split_both<R: Rng>(f: &[u64], g: &[u64], d: usize, l: u64, rng: &mut R) -> Vec<Poly> {
    let h = div_rem(f, g, l).0;
    let mut out = equal_degree(g, d, l, rng);
    out.extend(equal_degree(&h, d, l, rng));
    out
}

/// Complete factorization of a monic square-free polynomial into monic
/// irreducibles, sorted.
pub(crate) fn factor_squarefree<R: Rng>(f: &[u64], l: u64, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, l) {
        out.extend(equal_degree(&g, d, l, rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const L: u64 = 101;

    fn from_roots(roots: &[u64]) -> Poly {
        roots.iter().fold(vec![1], |acc, &r| mul(&acc, &[(L - r) % L, 1], L))
    }

    #[test]
    fn inverse_and_division() {
        for a in 1..L {
            assert_eq!(a * inv(a, L) % L, 1);
        }
        let a = from_roots(&[1, 2, 3, 4]);
        let b = from_roots(&[2, 5]);
        let (q, r) = div_rem(&a, &b, L);
        assert_eq!(add(&mul(&q, &b, L), &r, L), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn xgcd_identity() {
        let a = from_roots(&[1, 2, 3]);
        let b = from_roots(&[3, 7]);
        let (g, s, t) = xgcd(&a, &b, L);
        assert_eq!(g, from_roots(&[3]));
        assert_eq!(add(&mul(&s, &a, L), &mul(&t, &b, L), L), g);
    }

    #[test]
    fn factors_split_roots_and_irreducibles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // x^2 + 1 is irreducible mod 103 (103 ≡ 3 mod 4).
        let l = 103;
        let quad = vec![1, 0, 1];
        let f = mul(&mul(&quad, &[l - 5, 1], l), &[l - 9, 1], l);
        assert_eq!(degree_pattern(&f, l), vec![1, 1, 2]);
        let fs = factor_squarefree(&f, l, &mut rng);
        assert_eq!(fs, vec![vec![l - 9, 1], vec![l - 5, 1], quad]);
        let roots: Vec<u64> = (1..20).collect();
        let g = from_roots(&roots);
        let fs = factor_squarefree(&g, L, &mut rng);
        assert_eq!(fs.len(), 19);
        assert_eq!(fs.iter().fold(vec![1], |acc, p| mul(&acc, p, L)), g);
    }

    #[test]
    fn squarefree_detection() {
        assert!(!is_squarefree(&from_roots(&[4, 4, 1]), L));
        assert!(is_squarefree(&from_roots(&[4, 5, 1]), L));
    }
}
