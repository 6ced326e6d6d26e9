//! Property-based invariants. Proptest drives seeds and shapes; the
//! structured generators in `lab` turn them into exact matrices over Q,
//! Q(i) and F_p.

use proptest::prelude::*;

use coreinv::geninv::{
    self, axioms_hold, dual_core_inverse, mp_inverse, mp_via_lemma, sample_one_three,
    InverseKind,
};
use coreinv::lab::{gen_with_rank, random_matrix, trial_rng};
use coreinv::{FieldSpec, Scalar, StarMatrix};

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Q),
        Just(FieldSpec::Qi),
        Just(FieldSpec::fp(5).unwrap()),
        Just(FieldSpec::fp(7).unwrap()),
    ]
}

fn shapes() -> impl Strategy<Value = (FieldSpec, usize, usize, u64)> {
    (fields(), 1usize..=4)
        .prop_flat_map(|(f, n)| (Just(f), Just(n), 0..=n, any::<u64>()))
        .prop_map(|(f, n, r, seed)| (f, n, r, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn star_is_an_involution((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        let b = random_matrix(field, n, &mut trial_rng(seed, 1));
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(
            a.mul(&b).unwrap().star(),
            b.star().mul(&a.star()).unwrap()
        );
        prop_assert_eq!(a.add(&b).unwrap().star(), a.star().add(&b.star()).unwrap());
    }

    #[test]
    fn rank_form_reconstructs((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        prop_assert_eq!(a.rank(), r);
        prop_assert_eq!(a.star().rank(), r);
        let rf = a.rank_form();
        let paq = rf.p.mul(&a).unwrap().mul(&rf.q).unwrap();
        let d = StarMatrix::from_fn(field, n, |i, j| {
            Scalar::from_i64(field, i64::from(i == j && i < r))
        });
        prop_assert_eq!(paq, d);
    }

    #[test]
    fn scalar_display_round_trips((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        let text = a.to_string();
        let back = StarMatrix::parse_text(&text).unwrap();
        prop_assert_eq!(a, back);
    }

    #[test]
    fn certified_solvers_satisfy_axioms((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        for kind in [
            InverseKind::Inner,
            InverseKind::OneThree,
            InverseKind::OneFour,
            InverseKind::Group,
            InverseKind::MoorePenrose,
            InverseKind::Core,
            InverseKind::DualCore,
        ] {
            if let Ok(cert) = geninv::solve(kind, &a) {
                prop_assert!(axioms_hold(kind, &a, &cert.value));
                prop_assert!(cert.axiom_check.iter().all(|(_, ok)| *ok));
            }
        }
    }

    #[test]
    fn projector_is_choice_independent((field, n, r, seed) in shapes()) {
        // a a^(1,3) does not depend on which {1,3}-inverse is chosen
        let a = gen_with_rank(field, n, r, seed);
        if let Some(first) = sample_one_three(&a, seed) {
            let p = a.mul(&first).unwrap();
            for i in 1..20u64 {
                let g = sample_one_three(&a, seed.wrapping_add(i)).unwrap();
                prop_assert!(axioms_hold(InverseKind::OneThree, &a, &g));
                prop_assert_eq!(a.mul(&g).unwrap(), p.clone());
            }
        }
    }

    #[test]
    fn core_product_is_choice_independent((field, n, r, seed) in shapes()) {
        // a^# a a^(1,3) gives the same matrix for every {1,3}-choice
        let a = gen_with_rank(field, n, r, seed);
        let (Ok(grp), Some(g0)) = (geninv::group_inverse(&a), sample_one_three(&a, seed)) else {
            return Ok(());
        };
        let core = geninv::core_inverse(&a).unwrap().value;
        for (i, g) in [g0]
            .into_iter()
            .chain((1..20u64).map(|i| sample_one_three(&a, seed.wrapping_add(i)).unwrap()))
            .enumerate()
        {
            let candidate = grp.value.mul(&a).unwrap().mul(&g).unwrap();
            prop_assert_eq!(candidate, core.clone(), "choice {}", i);
        }
    }

    #[test]
    fn mp_routes_agree((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        match (mp_inverse(&a), mp_via_lemma(&a)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x.value, y.value),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "existence disagreement: {:?} vs {:?}",
                x.map(|c| c.value), y.map(|c| c.value)),
        }
    }

    #[test]
    fn duality_swaps_core_and_dual_core((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        let via_star = geninv::core_inverse(&a.star()).map(|c| c.value.star());
        match (dual_core_inverse(&a), via_star) {
            (Ok(d), Ok(s)) => prop_assert_eq!(d.value, s),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "existence disagreement under duality"),
        }
    }

    #[test]
    fn group_inverse_double_inverse((field, n, r, seed) in shapes()) {
        let a = gen_with_rank(field, n, r, seed);
        if let Ok(g) = geninv::group_inverse(&a) {
            let gg = geninv::group_inverse(&g.value).unwrap();
            prop_assert_eq!(gg.value, a);
        }
    }
}
