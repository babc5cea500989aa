//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use monoglue::{minimal_generators, validate_gluing, Gluing, Monomial, NumericalSemigroup};
use rand::Rng;

/// `H(n) = #{s ∈ S : ord(s) = n}` for `n ≤ upto`, where `ord(s)` is the
/// longest factorization of `s`. Elements of order `≤ upto` are bounded by
/// `upto · max generator`.
pub fn order_oracle(gens: &[u64], upto: usize) -> Vec<u64> {
    let bound = upto * *gens.iter().max().unwrap() as usize;
    let mut ord: Vec<Option<usize>> = vec![None; bound + 1];
    ord[0] = Some(0);
    for s in 1..=bound {
        ord[s] = gens
            .iter()
            .filter(|&&g| g as usize <= s)
            .filter_map(|&g| ord[s - g as usize].map(|o| o + 1))
            .max();
    }
    let mut h = vec![0u64; upto + 1];
    for o in ord.into_iter().flatten() {
        if o <= upto {
            h[o] += 1;
        }
    }
    h
}

/// Standard monomials of `K[x]/⟨gens⟩` counted degree by degree.
pub fn standard_monomial_counts(gens: &[Monomial], nvars: usize, upto: usize) -> Vec<i64> {
    let mut counts = vec![0i64; upto + 1];
    let mut exps = vec![0u32; nvars];
    loop {
        let d: u32 = exps.iter().sum();
        let m = Monomial::new(&exps);
        if !gens.iter().any(|g| g.divides(&m)) {
            counts[d as usize] += 1;
        }
        // odometer over exponent vectors of total degree ≤ upto
        let mut i = 0;
        loop {
            if i == nvars {
                return counts;
            }
            exps[i] += 1;
            if exps.iter().sum::<u32>() as usize <= upto {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// A random numerical semigroup with `kmin..=kmax` minimal generators in
/// `2..=max`, retrying until the gcd is one.
pub fn random_semigroup<R: Rng>(
    rng: &mut R,
    kmin: usize,
    kmax: usize,
    max: u64,
) -> NumericalSemigroup {
    loop {
        let k = rng.random_range(kmin..=kmax);
        let raw: Vec<u64> = (0..k).map(|_| rng.random_range(2..=max)).collect();
        if let Ok(s) = minimal_generators(&raw) {
            if s.len() >= kmin {
                return s;
            }
        }
    }
}

/// A random nice gluing of the given shapes. `q = a₁n₁` with `a₁ ≥ 2`,
/// `p` drawn from `S₁` until every condition holds.
pub fn random_nice_gluing<R: Rng>(
    rng: &mut R,
    s1_shape: (usize, usize, u64),
    s2_shape: (usize, usize, u64),
) -> Gluing {
    loop {
        let s1 = random_semigroup(rng, s1_shape.0, s1_shape.1, s1_shape.2);
        let s2 = random_semigroup(rng, s2_shape.0, s2_shape.1, s2_shape.2);
        let a1 = rng.random_range(2..=4u64);
        let q = a1 * s2.multiplicity();
        let top = 4 * s1.largest_generator();
        for _ in 0..20 {
            let p = rng.random_range(s1.multiplicity()..=top);
            if let Ok(gluing) = validate_gluing(&s1, &s2, p, q) {
                if gluing.nice {
                    return gluing;
                }
            }
        }
    }
}
