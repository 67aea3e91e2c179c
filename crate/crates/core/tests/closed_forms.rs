//! Closed forms against exhaustive enumeration, and their shape in n and m.

use artin_randlab_core::classify::ClassId;
use artin_randlab_core::exact::{self, ExactProb};
use artin_randlab_core::oracle::{self, exact_probability, moments_by_enumeration};
use artin_randlab_core::{BigRational, EnumBudget, Label, Predicate, SampleSpace};
use proptest::prelude::*;

fn space(n: usize, m: u32) -> SampleSpace {
    SampleSpace::new(n, m).unwrap()
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn oracle_p(c: ClassId, n: usize, m: u32) -> BigRational {
    exact_probability(Predicate::class(c), space(n, m), EnumBudget::DEFAULT).unwrap()
}

fn rational(p: ExactProb) -> BigRational {
    p.rational().cloned().unwrap()
}

const SMALL: [(usize, u32); 12] =
    [(1, 2), (2, 2), (2, 5), (3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3)];

#[test]
fn label_classes_match_their_closed_forms() {
    let classes = [
        ClassId::LargeType,
        ClassId::ExtraLarge,
        ClassId::XXL,
        ClassId::FreeOfInfinity,
        ClassId::RAAG,
        ClassId::TwoTwoFree,
    ];
    for (n, m) in SMALL {
        for c in classes {
            let closed = exact::closed_form(Predicate::class(c), n, m).unwrap();
            assert_eq!(rational(closed), oracle_p(c, n, m), "{c} at ({n},{m})");
            let not = exact::closed_form(Predicate::not(c), n, m).unwrap();
            assert_eq!(rational(not), q(1, 1) - oracle_p(c, n, m), "not {c} at ({n},{m})");
        }
    }
}

#[test]
fn known_values() {
    assert_eq!(oracle_p(ClassId::TwoTwoFree, 3, 3), q(20, 27));
    assert_eq!(rational(exact::prob_22_free_exact(3, 5)), q(112, 125));
    assert_eq!(exact::expectation_x(4, 2).unwrap(), q(6, 1));
    assert_eq!(oracle_p(ClassId::Connected, 2, 2), q(1, 2));
    // Two vertices: spherical iff the single pair is finite.
    assert_eq!(oracle_p(ClassId::Spherical, 2, 3), q(2, 3));
}

#[test]
fn moments_match_enumeration() {
    for (n, m) in [(3, 2), (3, 3), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (6, 2)] {
        let o = moments_by_enumeration(space(n, m), EnumBudget::DEFAULT).unwrap();
        let r = exact::expectation_x2(n, m);
        assert_eq!(o.e_x, r.e_x, "E[X] at ({n},{m})");
        assert_eq!(o.e_x2, r.e_x2, "E[X^2] at ({n},{m})");
        assert!(r.lower_bound <= o.p_nonzero);
        assert!(o.p_nonzero <= rational(exact::markov_upper_bound(n, m)));
    }
}

#[test]
fn union_bounds_hold_on_enumerated_spaces() {
    for (n, m) in SMALL {
        assert!(oracle_p(ClassId::Cone, n, m) <= rational(exact::cone_upper_bound(n, m)));
        if n >= 2 {
            let bound = rational(exact::join_upper_bound(n, m));
            for k in [Label::Finite(2), Label::Infinite, Label::Finite(3)] {
                assert!(oracle_p(ClassId::KJoin(k), n, m) <= bound, "{k}-join at ({n},{m})");
            }
        }
        if n >= 3 {
            assert!(oracle_p(ClassId::FCType, n, m) <= rational(exact::fc_type_upper_bound(n, m)));
        }
    }
}

/// `P[F] + P[H] = P[F and H] + P[F or H]` for every pair of classes.
#[test]
fn intersection_identity_for_all_class_pairs() {
    for (n, m) in [(3, 3), (4, 2), (4, 3)] {
        let s = space(n, m);
        let total = oracle::checked_size(s, EnumBudget::DEFAULT).unwrap();
        let classes = ClassId::ALL;
        let mut single = [0u64; 15];
        let mut both = [[0u64; 15]; 15];
        let mut either = [[0u64; 15]; 15];
        oracle::for_each_in_range(s, 0..total, |g| {
            let f: Vec<bool> = classes.iter().map(|c| c.contains(g).unwrap()).collect();
            for a in 0..15 {
                single[a] += u64::from(f[a]);
                for b in 0..15 {
                    both[a][b] += u64::from(f[a] && f[b]);
                    either[a][b] += u64::from(f[a] || f[b]);
                }
            }
        });
        for a in 0..15 {
            for b in 0..15 {
                assert_eq!(single[a] + single[b], both[a][b] + either[a][b]);
            }
        }
    }
}

#[test]
fn two_dimensional_versus_22_free_bounds() {
    for (n, m) in [(3, 2), (3, 3), (3, 5), (4, 2), (4, 3), (4, 5), (5, 3)] {
        let s = space(n, m);
        let total = oracle::checked_size(s, EnumBudget::DEFAULT).unwrap();
        let (mut deficit, mut excess) = (0u64, 0u64);
        oracle::for_each_in_range(s, 0..total, |g| {
            let d = ClassId::TwoDimensional.contains(g).unwrap();
            let b = ClassId::TwoTwoFree.contains(g).unwrap();
            deficit += u64::from(b && !d);
            excess += u64::from(d && !b);
        });
        let frac = |c: u64| BigRational::new(c.into(), total.into());
        assert!(frac(deficit) <= rational(exact::two_dim_deficit_bound(n, m)), "({n},{m})");
        assert!(frac(excess) <= rational(exact::two_dim_excess_bound(n, m)), "({n},{m})");
    }
}

#[test]
fn growth_with_exponent_three_halves() {
    let g: artin_randlab_core::GrowthSpec = "1*N^3/2".parse().unwrap();
    assert_eq!(g.eval(5), 11);
    assert_eq!(g.eval(190), 2618);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// More vertices never help (2,2)-freeness; a bigger alphabet always does.
    #[test]
    fn two_two_free_is_monotone(n in 1usize..60, m in 2u32..64) {
        let p = |n, m| exact::prob_22_free_ln(n, m);
        prop_assert!(p(n + 1, m) <= p(n, m) + 1e-12);
        prop_assert!(p(n, m) <= p(n, m + 1) + 1e-12);
    }

    #[test]
    fn forbidding_more_labels_lowers_probability(n in 2usize..40, m in 3u32..200, k in 0u32..3) {
        prop_assume!(k + 1 < m);
        let a = exact::prob_forbidden_labels(n, m, k).unwrap();
        let b = exact::prob_forbidden_labels(n, m, k + 1).unwrap();
        prop_assert!(b.ln() <= a.ln());
    }

    #[test]
    fn log_and_rational_agree(n in 1usize..30, m in 2u32..40) {
        let r = exact::prob_22_free_rational(n, m).unwrap();
        let ln = exact::prob_22_free_ln(n, m);
        prop_assert!((ExactProb::from_rational(r).ln() - ln).abs() < 1e-10);
    }
}
