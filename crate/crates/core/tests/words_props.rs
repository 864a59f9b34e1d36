mod common;

use common::random_reduced_word;
use polyinv_core::words::{
    fox_derivative, parse_word, FreeWord, FreeWordSum, Presentation, X, Y,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0u8..2, any::<bool>()), 0..=max_len).prop_map(|ls| {
        FreeWord::from_letters(
            ls.into_iter()
                .map(|(g, inv)| polyinv_core::words::Letter::new(g, inv)),
        )
    })
}

fn fundamental_rhs(w: &FreeWord) -> FreeWordSum {
    fox_derivative(w, X)
        .mul(&FreeWordSum::generator_minus_one(X))
        .add(&fox_derivative(w, Y).mul(&FreeWordSum::generator_minus_one(Y)))
}

fn w_minus_one(w: &FreeWord) -> FreeWordSum {
    FreeWordSum::monomial(w.clone(), 1).sub(&FreeWordSum::one())
}

#[test]
fn fox_suite_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let a = rng.gen_range(0..=16);
        let b = rng.gen_range(0..=16);
        let u = random_reduced_word(&mut rng, a);
        let v = random_reduced_word(&mut rng, b);
        let uv = u.mul(&v);
        for g in [X, Y] {
            let lhs = fox_derivative(&uv, g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul_word(&u));
            assert_eq!(lhs, rhs, "product rule for {u} * {v}");
        }
        assert_eq!(w_minus_one(&uv), fundamental_rhs(&uv), "fundamental identity for {uv}");
    }
}

#[test]
fn fox_of_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let len = rng.gen_range(0..=12);
        let w = random_reduced_word(&mut rng, len);
        for g in [X, Y] {
            let expected = fox_derivative(&w, g).left_mul_word(&w.inverse()).neg();
            assert_eq!(fox_derivative(&w.inverse(), g), expected);
        }
    }
}

proptest! {
    #[test]
    fn reduction_is_confluent(a in word(10), b in word(10), c in word(10)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_empty());
        let text = format!("{a}{b}");
        prop_assert_eq!(parse_word(&text).unwrap(), a.mul(&b));
    }

    #[test]
    fn display_round_trips(w in word(16)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn cyclic_reduce_is_rotation_invariant(w in word(14), k in 0usize..20) {
        let c = w.cyclic_reduce();
        prop_assert!(c.is_cyclically_reduced());
        if !c.is_empty() {
            let r = c.rotate(k % c.len());
            prop_assert!(r.is_cyclically_reduced());
            prop_assert_eq!(r.exponent_sums(2), c.exponent_sums(2));
            prop_assert_eq!(r.is_proper_power().unwrap(), c.is_proper_power().unwrap());
            let pr = Presentation::from_word(r).unwrap();
            let pc = Presentation::from_word(c).unwrap();
            prop_assert_eq!(pr.b1(), pc.b1());
            prop_assert_eq!(pr.is_nice(), pc.is_nice());
        }
    }

    #[test]
    fn b1_matches_rank_of_relation_module(w in word(14)) {
        prop_assume!(!w.is_empty());
        let p = Presentation::from_word(w.clone()).unwrap();
        let sums = w.exponent_sums(2);
        // H = Z^2 / <(ex, ey)> has rank 2 - rank of the single row.
        let expected = if sums == vec![0, 0] { 2 } else { 1 };
        prop_assert_eq!(p.b1(), expected);
        prop_assert_eq!(p.abelianization().rank(), expected as usize);
        if expected == 1 {
            // The relator dies in H, and the map onto H is surjective.
            prop_assert!(p.abelianization().project(&w).is_origin());
            let gx = p.abelianization().generator_image(X);
            let gy = p.abelianization().generator_image(Y);
            let g = num_integer::Integer::gcd(&gx.coords()[0], &gy.coords()[0]);
            prop_assert_eq!(g, num_bigint::BigInt::from(1));
        }
    }

    #[test]
    fn proper_powers_are_detected(w in word(6), k in 2i64..4) {
        let c = w.cyclic_reduce();
        prop_assume!(!c.is_empty());
        prop_assert!(c.pow(k).is_proper_power().unwrap());
    }

    #[test]
    fn group_ring_distributes(a in word(5), b in word(5), c in word(5)) {
        let f = FreeWordSum::monomial(a.clone(), 2).add(&FreeWordSum::monomial(b.clone(), -1));
        let g = FreeWordSum::monomial(c.clone(), 3).add(&FreeWordSum::one());
        let h = FreeWordSum::generator_minus_one(Y);
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }
}
