mod common;

use common::*;
use proptest::prelude::*;
use slicecert::factor::{factor, factor_cyclotomic, factor_rational, norm_polynomial};
use slicecert::{CycField, CycNum, FactorizationCertificate, LaurentPoly};

fn remultiply(cert: &FactorizationCertificate) -> LaurentPoly {
    let f = cert.field();
    let body = cert.factors().iter().fold(LaurentPoly::one(f), |acc, (g, e)| mul(&acc, &g.pow(*e)));
    body.scale(cert.unit_scalar()).unwrap().shift(cert.t_power())
}

fn sorted_multiset(cert: &FactorizationCertificate) -> Vec<(LaurentPoly, u32)> {
    let mut v = cert.factors().to_vec();
    v.sort_by(|a, b| format!("{:?}", a).cmp(&format!("{:?}", b)));
    v
}

fn linear(a: &CycNum) -> LaurentPoly {
    let f = a.field();
    LaurentPoly::new(f, 0, vec![-a.clone(), CycNum::one(f)]).unwrap()
}

/// Degree ≤ 4 over ℚ with a known factorization: rational roots and
/// quadratics t² − d (d not a square) or t² + c (c > 0).
fn planted_rational() -> impl Strategy<Value = (LaurentPoly, Vec<(LaurentPoly, u32)>)> {
    let piece = prop_oneof![
        (-6i64..=6).prop_filter("t itself lives in t_power", |r| *r != 0).prop_map(|r| int_poly(&[-r, 1])),
        prop::sample::select(vec![2i64, 3, 5, 6, 7, 10]).prop_map(|d| int_poly(&[-d, 0, 1])),
        (1i64..=9).prop_map(|c| int_poly(&[c, 0, 1])),
    ];
    prop::collection::vec(piece, 1..=3)
        .prop_filter("degree at most 4", |ps| ps.iter().map(|p| p.span()).sum::<usize>() <= 4)
        .prop_map(|ps| {
            let f = ps.iter().fold(int_poly(&[1]), |acc, p| mul(&acc, p));
            let mut expected: Vec<(LaurentPoly, u32)> = Vec::new();
            for p in ps {
                match expected.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, e)) => *e += 1,
                    None => expected.push((p, 1)),
                }
            }
            expected.sort_by(|a, b| format!("{:?}", a).cmp(&format!("{:?}", b)));
            (f, expected)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn brute_force_oracle_over_rationals((f, expected) in planted_rational(), k in -2i64..=2, c in 1i64..5) {
        let g = f.shift(k).scale_rational(&q(-c, 3));
        let cert = factor_rational(&g).unwrap();
        prop_assert_eq!(remultiply(&cert), g);
        prop_assert_eq!(sorted_multiset(&cert), expected);
    }

    #[test]
    fn planted_linear_factors_over_cyclotomic(roots in prop::collection::vec(integral_element(field(5)), 1..=3)) {
        let f = roots.iter().fold(LaurentPoly::one(field(5)), |acc, a| mul(&acc, &linear(a)));
        let cert = factor_cyclotomic(&f).unwrap();
        prop_assert_eq!(remultiply(&cert), f.clone());
        let total: u32 = cert.factors().iter().map(|(g, e)| { assert_eq!(g.span(), 1); *e }).sum();
        prop_assert_eq!(total as usize, roots.len());
    }

    #[test]
    fn factor_of_product_is_union((f, g) in prop::sample::select(vec![CycField::RATIONALS, field(5)])
        .prop_flat_map(|k| (monic(k, 3), monic(k, 3)))) {
        prop_assume!(f.gcd(&g).unwrap().span() == 0);
        let fg = factor(&mul(&f, &g)).unwrap();
        let (cf, cg) = (factor(&f).unwrap(), factor(&g).unwrap());
        prop_assert_eq!(remultiply(&fg), mul(&f, &g));
        let mut union = cf.factors().to_vec();
        union.extend(cg.factors().iter().cloned());
        union.sort_by(|a, b| format!("{:?}", a).cmp(&format!("{:?}", b)));
        prop_assert_eq!(sorted_multiset(&fg), union);
    }

    #[test]
    fn norms_of_irreducible_factors_are_isotypic(f in monic(field(5), 3)) {
        let cert = factor_cyclotomic(&f).unwrap();
        for (g, _) in cert.factors() {
            let n = norm_polynomial(g).unwrap();
            let nc = factor_rational(&n).unwrap();
            let d = nc.factors()[0].0.span();
            prop_assert!(nc.factors().iter().all(|(h, _)| h.span() == d));
            // g divides exactly one rational factor.
            let hits = nc.factors().iter().filter(|(h, _)| {
                h.embed(field(5)).unwrap().divisible_by(g).unwrap()
            }).count();
            prop_assert_eq!(hits, 1);
        }
    }

    #[test]
    fn power_substitution_splits_perfect_powers(a in integral_element(field(5)), n in 2u32..=3) {
        prop_assume!(!a.is_zero());
        // t^n − a^n always has the factor t − a.
        let an = a.pow(n as u64);
        let f = linear(&an).compose_power(n).unwrap();
        let cert = factor_cyclotomic(&f).unwrap();
        prop_assert_eq!(remultiply(&cert), f);
        prop_assert!(cert.factors().len() >= 2);
        prop_assert!(cert.factors().iter().any(|(g, _)| g.is_associate(&linear(&a))));
    }

    #[test]
    fn power_substitution_agrees_with_planted_roots(roots in prop::collection::vec(integral_element(field(5)), 1..=2), n in 2u32..=3) {
        let g = roots.iter().fold(LaurentPoly::one(field(5)), |acc, a| mul(&acc, &linear(a)));
        let f = g.compose_power(n).unwrap();
        let cert = factor_cyclotomic(&f).unwrap();
        prop_assert_eq!(remultiply(&cert), f);
        for (h, _) in cert.factors() {
            let nc = factor_rational(&norm_polynomial(h).unwrap()).unwrap();
            let d = nc.factors()[0].0.span();
            prop_assert!(nc.factors().iter().all(|(p, _)| p.span() == d));
        }
    }
}

#[test]
fn every_bundled_certificate_remultiplies() {
    for name in slicecert::data::bundled_names() {
        let rec = slicecert::data::bundled_poly(name).unwrap();
        let cert = factor(&rec.poly).unwrap();
        assert_eq!(remultiply(&cert), rec.poly, "{name}");
    }
}

#[test]
fn known_power_substitutions() {
    // t⁴ + 4 = (t² + 2t + 2)(t² − 2t + 2); t⁴ + 3 is irreducible.
    let c = factor_rational(&int_poly(&[4, 0, 0, 0, 1])).unwrap();
    assert_eq!(c.factors().len(), 2);
    assert!(factor_rational(&int_poly(&[3, 0, 0, 0, 1])).unwrap().is_irreducible());
    let k = field(13);
    let c = factor_cyclotomic(&LaurentPoly::from_ints(k, 0, &[4, 0, 0, 0, 1])).unwrap();
    assert_eq!(remultiply(&c), LaurentPoly::from_ints(k, 0, &[4, 0, 0, 0, 1]));
    assert_eq!(c.factors().len(), 2);
    // ω is a 5th power in ℚ(ω₁₃), so t⁵ − ω has a linear factor.
    let w = CycNum::omega_pow(k, 1);
    let c = factor_cyclotomic(&linear(&w).compose_power(5).unwrap()).unwrap();
    assert!(c.factors().iter().any(|(g, _)| g.span() == 1));
}
