mod common;

use common::*;
use proptest::prelude::*;
use slicecert::{CycField, GaloisMap};

fn fields() -> impl Strategy<Value = CycField> {
    prop::sample::select(vec![CycField::RATIONALS, field(3), field(5), field(7), field(13)])
}

fn triple() -> impl Strategy<Value = (slicecert::CycNum, slicecert::CycNum, slicecert::CycNum)> {
    fields().prop_flat_map(|f| (element(f), element(f), element(f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let rhs = ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        if !a.is_zero() {
            prop_assert!(a.checked_mul(&a.inv().unwrap()).unwrap().is_one());
        }
    }

    #[test]
    fn norm_multiplicative((a, b) in fields().prop_flat_map(|f| (integral_element(f), integral_element(f)))) {
        let n = a.checked_mul(&b).unwrap().norm();
        prop_assert_eq!(n, a.norm() * b.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn galois_maps_compose(a in element(field(13)), nu in 1i64..13, mu in 1i64..13) {
        let f = field(13);
        let s = GaloisMap::new(f, nu).unwrap();
        let t = GaloisMap::new(f, mu).unwrap();
        let st = GaloisMap::new(f, nu * mu % 13).unwrap();
        prop_assert_eq!(a.galois(&t).unwrap().galois(&s).unwrap(), a.galois(&st).unwrap());
        prop_assert_eq!(s.compose(&t).unwrap(), st);
    }

    #[test]
    fn norm_is_galois_invariant(a in element(field(7)), nu in 1i64..7) {
        let s = GaloisMap::new(field(7), nu).unwrap();
        prop_assert_eq!(a.galois(&s).unwrap().norm(), a.norm());
    }

    #[test]
    fn norm_paths_agree(a in element(field(13))) {
        prop_assert_eq!(a.norm(), a.norm_by_conjugates());
    }

    #[test]
    fn embedding_respects_arithmetic(a in element(field(13)), b in element(field(13))) {
        let prec = 64;
        // Embeddings carry element-dependent guard bits; operate at a common precision.
        let ea = a.numeric_embed(prec).unwrap();
        let eb = b.numeric_embed(prec).unwrap();
        let common = ea.prec().max(eb.prec());
        let (ea, eb) = (ea.with_prec(common), eb.with_prec(common));
        let sum = a.checked_add(&b).unwrap().numeric_embed(prec).unwrap();
        let prod = a.checked_mul(&b).unwrap().numeric_embed(prec).unwrap();
        prop_assert!(sum.intersects(&ea.add(&eb)));
        prop_assert!(prod.intersects(&ea.mul(&eb)));
    }
}
