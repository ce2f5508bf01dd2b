//! Certified unit-circle root counting for square-free polynomials whose root
//! set is closed under `z ↦ 1/z̄`.
//!
//! Roots are approximated by Aberth iteration in fixed point, then enclosed in
//! the disks `D(z_i, n·|f(z_i) / (lc·∏_{j≠i}(z_i - z_j))|)`. When those disks are
//! pairwise disjoint each holds exactly one root. A disk clear of the circle
//! holds an off-circle root; a disk whose image under `z ↦ 1/z̄` meets no
//! other disk holds a root fixed by the reflection, i.e. one on the circle.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo::{Embedding, Rational};
use crate::interval::{sqrt_bounds, ComplexRect, Interval};
use crate::poly::LaurentPoly;

pub(crate) const START_BITS: u32 = 64;
pub(crate) const MAX_BITS: u32 = 4096;
const GUARD: u32 = 32;

#[derive(Clone, Debug)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

impl Cx {
    fn zero() -> Self {
        Cx { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Cx, prec: u32) -> Cx {
        Cx { re: (&self.re * &o.re - &self.im * &o.im) >> prec, im: (&self.re * &o.im + &self.im * &o.re) >> prec }
    }
    fn div(&self, o: &Cx, prec: u32) -> Option<Cx> {
        let d = &o.re * &o.re + &o.im * &o.im;
        if d.is_zero() {
            return None;
        }
        let nr = &self.re * &o.re + &self.im * &o.im;
        let ni = &self.im * &o.re - &self.re * &o.im;
        Some(Cx { re: (nr << prec) / &d, im: (ni << prec) / &d })
    }
    fn mag(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
    fn rescale(&self, from: u32, to: u32) -> Cx {
        if to >= from {
            Cx { re: &self.re << (to - from), im: &self.im << (to - from) }
        } else {
            Cx { re: &self.re >> (from - to), im: &self.im >> (from - to) }
        }
    }
}

fn from_f64(x: f64, prec: u32) -> BigInt {
    let m = (x * (1u64 << 52) as f64).round() as i64;
    if prec >= 52 {
        BigInt::from(m) << (prec - 52)
    } else {
        BigInt::from(m) >> (52 - prec)
    }
}

fn to_f64(x: &BigInt, prec: u32) -> f64 {
    let bits = x.bits() as i64;
    let drop = (bits - 60).max(0) as u32;
    let head = (x >> drop).to_f64().unwrap_or(0.0);
    head * 2f64.powi(drop as i32 - prec as i32)
}

fn midpoint(r: &ComplexRect) -> Cx {
    Cx { re: (r.re.lo_scaled() + r.re.hi_scaled()) >> 1u32, im: (r.im.lo_scaled() + r.im.hi_scaled()) >> 1u32 }
}

/// Value and derivative by Horner; `coeffs` lowest degree first.
fn horner(coeffs: &[Cx], z: &Cx, prec: u32) -> (Cx, Cx) {
    let mut v = Cx::zero();
    let mut d = Cx::zero();
    for c in coeffs.iter().rev() {
        d = d.mul(z, prec).add(&v);
        v = v.mul(z, prec).add(c);
    }
    (v, d)
}

fn initial_guesses(coeffs: &[Cx], prec: u32) -> Vec<Cx> {
    let n = coeffs.len() - 1;
    let a0 = (to_f64(&coeffs[0].re, prec).hypot(to_f64(&coeffs[0].im, prec))).max(1e-300);
    let an = (to_f64(&coeffs[n].re, prec).hypot(to_f64(&coeffs[n].im, prec))).max(1e-300);
    let radius = (a0 / an).powf(1.0 / n as f64).clamp(1e-3, 1e3);
    (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.4;
            Cx { re: from_f64(radius * theta.cos(), prec), im: from_f64(radius * theta.sin(), prec) }
        })
        .collect()
}

/// Aberth sweeps until every correction is below `2^(16 - prec)`.
fn aberth(coeffs: &[Cx], zs: &mut [Cx], prec: u32, max_iter: usize) {
    let n = zs.len();
    let one = Cx { re: BigInt::one() << prec, im: BigInt::zero() };
    let tol = BigInt::one() << 16u32;
    for _ in 0..max_iter {
        let mut done = true;
        for i in 0..n {
            let (v, d) = horner(coeffs, &zs[i], prec);
            let Some(ratio) = v.div(&d, prec) else {
                zs[i].re += BigInt::one() << (prec / 2);
                done = false;
                continue;
            };
            let mut s = Cx::zero();
            for j in 0..n {
                if j != i {
                    if let Some(q) = one.div(&zs[i].sub(&zs[j]), prec) {
                        s = s.add(&q);
                    }
                }
            }
            let denom = one.sub(&ratio.mul(&s, prec));
            let w = ratio.div(&denom, prec).unwrap_or(ratio);
            if w.mag() > tol {
                done = false;
            }
            zs[i] = zs[i].sub(&w);
        }
        if done {
            break;
        }
    }
}

fn point(z: &Cx, prec: u32) -> ComplexRect {
    ComplexRect::new(
        Interval::from_scaled(z.re.clone(), z.re.clone(), prec),
        Interval::from_scaled(z.im.clone(), z.im.clone(), prec),
    )
}

fn dyadic(x: &BigInt, prec: u32) -> Rational {
    Rational::new(x.clone(), BigInt::one() << prec)
}

fn disks_disjoint(c1: &(Rational, Rational), r1: &Rational, c2: &(Rational, Rational), r2: &Rational) -> bool {
    let dx = &c1.0 - &c2.0;
    let dy = &c1.1 - &c2.1;
    let s = r1 + r2;
    &s * &s < &dx * &dx + &dy * &dy
}

/// Number of roots on the circle, if the enclosure certifies it.
fn certify(coeffs: &[ComplexRect], zs: &[Cx], prec: u32) -> Option<usize> {
    let n = zs.len();
    let pts: Vec<ComplexRect> = zs.iter().map(|z| point(z, prec)).collect();
    let lc = coeffs.last()?;
    let n2 = Rational::from_integer(BigInt::from(n * n));
    let mut centers = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = ComplexRect::zero(prec);
        for c in coeffs.iter().rev() {
            v = v.mul(&pts[i]).add(c);
        }
        let mut prod = lc.clone();
        for j in 0..n {
            if j != i {
                prod = prod.mul(&pts[i].sub(&pts[j]));
            }
        }
        let below = prod.abs2().lo();
        if !below.is_positive() {
            return None;
        }
        let r2 = &n2 * v.abs2().hi() / below;
        radii.push(sqrt_bounds(&r2, prec).1);
        centers.push((dyadic(&zs[i].re, prec), dyadic(&zs[i].im, prec)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !disks_disjoint(&centers[i], &radii[i], &centers[j], &radii[j]) {
                return None;
            }
        }
    }
    let one = Rational::one();
    let mut on_circle = 0;
    for i in 0..n {
        let (cx, cy) = &centers[i];
        let r = &radii[i];
        let m2 = cx * cx + cy * cy;
        let outer = &one + r;
        if m2 > &outer * &outer {
            continue;
        }
        if r < &one {
            let inner = &one - r;
            if m2 < &inner * &inner {
                continue;
            }
        }
        let den = &m2 - r * r;
        if !den.is_positive() {
            return None;
        }
        let image = (cx / &den, cy / &den);
        let image_r = r / &den;
        if (0..n).any(|j| j != i && !disks_disjoint(&image, &image_r, &centers[j], &radii[j])) {
            return None;
        }
        on_circle += 1;
    }
    Some(on_circle)
}

/// `(count, certified)` for a square-free, conjugate-self-reciprocal `h` of
/// positive degree, refining up to `max_bits` of precision.
pub(crate) fn circle_count(h: &LaurentPoly, max_bits: u32) -> (usize, bool) {
    let field = h.field();
    let mut prec = START_BITS;
    let mut zs: Vec<Cx> = Vec::new();
    let mut last_prec = prec;
    loop {
        let table = Embedding::new(field, prec + GUARD);
        let rects: Vec<ComplexRect> = h.coeffs().iter().map(|c| table.embed(c)).collect();
        let mids: Vec<Cx> = rects.iter().map(|r| midpoint(r).rescale(prec + GUARD, prec)).collect();
        let iters = if zs.is_empty() {
            zs = initial_guesses(&mids, prec);
            400 + 20 * zs.len()
        } else {
            zs = zs.iter().map(|z| z.rescale(last_prec, prec)).collect();
            60
        };
        aberth(&mids, &mut zs, prec, iters);
        let scaled: Vec<Cx> = zs.iter().map(|z| z.rescale(prec, prec + GUARD)).collect();
        if let Some(count) = certify(&rects, &scaled, prec + GUARD) {
            return (count, true);
        }
        if prec >= max_bits {
            let approx = zs
                .iter()
                .filter(|z| {
                    let m = to_f64(&z.re, prec).hypot(to_f64(&z.im, prec));
                    (m - 1.0).abs() < 1e-6
                })
                .count();
            return (approx, false);
        }
        last_prec = prec;
        prec = (prec * 2).min(max_bits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{CycField, CycNum};

    #[test]
    fn cyclotomic_roots_are_pinned() {
        let phi = LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1; 13]);
        assert_eq!(circle_count(&phi, MAX_BITS), (12, true));
    }

    #[test]
    fn off_circle_pairs() {
        // (t - 2)(t - 1/2) and t^2 - 3t + 1 (roots (3 ± √5)/2).
        let f = LaurentPoly::from_ints(CycField::RATIONALS, 0, &[2, -5, 2]);
        assert_eq!(circle_count(&f, MAX_BITS), (0, true));
        let g = LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1, -3, 1]);
        assert_eq!(circle_count(&g, MAX_BITS), (0, true));
    }

    #[test]
    fn linear_over_cyclotomic_field() {
        let k = CycField::new(13).unwrap();
        let w = CycNum::omega_pow(k, 3);
        let f = LaurentPoly::new(k, 0, vec![-w, CycNum::one(k)]).unwrap();
        assert_eq!(circle_count(&f, MAX_BITS), (1, true));
    }

    #[test]
    fn mixed_roots() {
        // (t^2 + 1)(t^2 - 3t + 1): two on the circle, two off.
        let f = LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1, -3, 2, -3, 1]);
        assert_eq!(circle_count(&f, MAX_BITS), (2, true));
    }
}
