#![allow(dead_code)]

use polyinv_core::words::{FreeWord, Letter, Presentation};
use polyinv_core::{IntegralPolytope, LatticePoint};
use rand::Rng;

/// A random freely reduced word of exactly `len` letters over `x, y`.
pub fn random_reduced_word<R: Rng>(rng: &mut R, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..2), rng.gen_bool(0.5));
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

/// A random nice presentation (zero exponent sums, cyclically reduced, not a
/// proper power) with relator length at most `max_len`.
pub fn random_nice_presentation<R: Rng>(rng: &mut R, max_len: usize) -> Presentation {
    loop {
        let len = 2 * rng.gen_range(1..=max_len / 2);
        let w = random_reduced_word(rng, len);
        if !w.is_cyclically_reduced() || w.exponent_sums(2) != vec![0, 0] {
            continue;
        }
        if w.is_proper_power().unwrap() {
            continue;
        }
        let p = Presentation::from_word(w).unwrap();
        assert!(p.is_nice());
        return p;
    }
}

/// A random planar polytope with at most `max_points` generators and
/// coordinates in `[-r, r]`.
pub fn random_polytope2<R: Rng>(rng: &mut R, max_points: usize, r: i64) -> IntegralPolytope {
    let n = rng.gen_range(1..=max_points);
    IntegralPolytope::hull(
        (0..n).map(|_| LatticePoint::from([rng.gen_range(-r..=r), rng.gen_range(-r..=r)])),
    )
    .unwrap()
}

pub fn random_polytope1<R: Rng>(rng: &mut R, r: i64) -> IntegralPolytope {
    IntegralPolytope::hull(
        (0..2).map(|_| LatticePoint::from([rng.gen_range(-r..=r)])),
    )
    .unwrap()
}
