mod common;

use monoglue::basis::{buchberger, leading_ideal, mora_weak_nf, standard_basis};
use monoglue::polyalg::Polynomial;
use monoglue::tangentcone::tangent_cone;
use monoglue::{
    defining_ideal, minimal_generators, validate_gluing, verify_instance, Monomial, MonomialCurve,
    MonomialOrder,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{order_oracle, random_nice_gluing, random_semigroup, standard_monomial_counts};

fn semigroup_strategy(kmax: usize, max: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2..=max, 1..=kmax).prop_filter_map("gcd one", |g| {
        minimal_generators(&g).ok().map(|s| s.generators().to_vec())
    })
}

/// Monomials of weighted degree `s` in the grading `deg xᵢ = gens[i]`.
fn monomials_of_weight(gens: &[u64], s: u64) -> Vec<Monomial> {
    fn rec(gens: &[u64], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == gens.len() {
            if rest == 0 {
                out.push(Monomial::new(cur));
            }
            return;
        }
        for e in 0..=rest / gens[i] {
            cur[i] = e as u32;
            rec(gens, i + 1, rest - e * gens[i], cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(gens, 0, s, &mut vec![0; gens.len()], &mut out);
    out
}

#[test]
fn oracles_agree_on_known_values() {
    assert_eq!(order_oracle(&[6, 7, 15], 6), vec![1, 3, 4, 5, 5, 6, 6]);
    assert_eq!(order_oracle(&[2, 3], 4), vec![1, 2, 2, 2, 2]);
    assert_eq!(
        standard_monomial_counts(&[Monomial::new(&[0, 2])], 2, 4),
        vec![1, 2, 2, 2, 2]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Each graded piece of K[x]/I(C) in the semigroup grading has dimension
    /// one on S and zero off S: the kernel of the map from monomials of
    /// weight s to t^s has codimension exactly one.
    #[test]
    fn defining_ideal_is_complete_in_low_weights(gens in semigroup_strategy(4, 25)) {
        let curve = MonomialCurve::from_generators(&gens).unwrap();
        let ideal = defining_ideal(&curve);
        let gb = buchberger(&ideal, &curve.global_order()).unwrap();
        let lms = gb.leading_monomials();
        let bound = 3 * curve.semigroup().largest_generator();
        for s in 0..=bound {
            let standard = monomials_of_weight(curve.generators(), s)
                .into_iter()
                .filter(|m| !lms.iter().any(|l| l.divides(m)))
                .count();
            let expected = usize::from(curve.semigroup().is_member(s));
            prop_assert_eq!(standard, expected, "weight {}", s);
        }
    }

    #[test]
    fn buchberger_keeps_binomials(gens in semigroup_strategy(4, 30)) {
        let curve = MonomialCurve::from_generators(&gens).unwrap();
        let gb = buchberger(&defining_ideal(&curve), &curve.global_order()).unwrap();
        prop_assert!(gb.elements.iter().all(Polynomial::is_binomial));
    }

    /// The minimal leading ideal does not depend on the input order of the generators.
    #[test]
    fn standard_basis_input_order_invariance(gens in semigroup_strategy(4, 30), seed in any::<u64>()) {
        let curve = MonomialCurve::from_generators(&gens).unwrap();
        let order = MonomialOrder::local_with_priority(curve.canonical_priority()).unwrap();
        let mut ideal = defining_ideal(&curve);
        let a = leading_ideal(&standard_basis(&ideal, &order).unwrap());
        let n = ideal.len();
        if n > 1 {
            ideal.rotate_left((seed as usize) % n);
            ideal.reverse();
        }
        let sb = standard_basis(&ideal, &order).unwrap();
        let mut b = leading_ideal(&sb);
        let mut a = a;
        a.sort_by(|x, y| order.cmp(x, y));
        b.sort_by(|x, y| order.cmp(x, y));
        prop_assert_eq!(a, b);
        for f in &ideal {
            prop_assert!(mora_weak_nf(f, &sb.elements, &order).unwrap().is_zero());
        }
    }

    /// The Hilbert function stabilizes at the smallest generator, with or
    /// without a Cohen–Macaulay cone.
    #[test]
    fn multiplicity_is_smallest_generator(gens in semigroup_strategy(4, 30)) {
        let curve = MonomialCurve::from_generators(&gens).unwrap();
        let report = tangent_cone(&curve);
        let hf = monoglue::HilbertData::from_leading_ideal(&report.leading_monomials, curve.nvars(), None).unwrap();
        prop_assert_eq!(hf.multiplicity as u64, curve.semigroup().multiplicity());
        let h = hf.reduced_numerator.degree().unwrap();
        prop_assert!(hf.hf_prefix[h..].iter().all(|&v| v as i64 == hf.multiplicity));
    }
}

/// Any valid gluing, nice or not: gluing generators and elimination agree,
/// and no check fails.
#[test]
fn arbitrary_gluings_pass_every_check() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen = 0;
    while seen < 40 {
        let s1 = random_semigroup(&mut rng, 2, 3, 12);
        let s2 = random_semigroup(&mut rng, 1, 2, 12);
        let p = rng.random_range(2..=60);
        let q = rng.random_range(2..=60);
        let Ok(gluing) = validate_gluing(&s1, &s2, p, q) else {
            continue;
        };
        let r = verify_instance(&gluing).unwrap();
        assert!(r.ideal_agreement, "{s1} {s2} {p} {q}");
        assert!(
            r.violations().is_empty(),
            "{s1} {s2} {p} {q}: {:?}",
            r.violations()
        );
        let oracle = order_oracle(&r.glued.generators, r.glued.hf_prefix.len() - 1);
        assert_eq!(r.glued.hf_prefix, oracle, "{s1} {s2} {p} {q}");
        seen += 1;
    }
}

/// For nice gluings the gluing generators is already a standard basis under the
/// decomposition order, so the leading ideal splits.
#[test]
fn nice_gluings_with_larger_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let gluing = random_nice_gluing(&mut rng, (3, 3, 12), (2, 3, 10));
        let r = verify_instance(&gluing).unwrap();
        assert_eq!(r.smallest_generator_ok, Some(true));
        if r.monotone_transfer_applicable {
            assert!(
                r.decomposition.as_ref().unwrap().ok,
                "{:?}",
                r.decomposition
            );
            assert_eq!(r.factorization_ok, Some(true));
        }
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }
}
