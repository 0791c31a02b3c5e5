use gordon_overpartitions::bijections::{
    durfee_frobenius, durfee_frobenius_inverse, frobenius_to_overpartition, frobenius_to_path,
    overpartition_to_frobenius, path_to_frobenius, uplift, uplift_inverse, uplift_observed, UpliftCertificate,
};
use gordon_overpartitions::objects::{
    gap_condition, generalized_durfee_size, multiplicity_condition, phi_two_modular, phi_two_modular_inverse,
    Overpartition, Part, TwoModularDiagram,
};
use gordon_overpartitions::paths::{
    major_index, peaks, relative_height_profile, validate, LatticePath, PeakKind, Step,
};
use gordon_overpartitions::qseries::{Monomial, Series};
use proptest::prelude::*;

fn arb_overpartition() -> impl Strategy<Value = Overpartition> {
    prop::collection::vec((1u32..25, any::<bool>()), 0..14).prop_map(|raw| {
        let mut values: Vec<u32> = raw.iter().map(|r| r.0).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts = Vec::new();
        for (idx, &v) in values.iter().enumerate() {
            let last = values.get(idx + 1) != Some(&v);
            let flagged = raw.iter().any(|r| r.0 == v && r.1);
            parts.push(Part { v, o: last && flagged });
        }
        Overpartition::new(parts).unwrap()
    })
}

/// Drives a walk with the given choices among the allowed steps, then
/// closes it with the shortest legal ending.
fn build_path(k: usize, i: usize, choices: &[u8], allow_south: bool) -> LatticePath {
    let k = k as i64;
    let mut y = k - i as i64;
    let mut steps: Vec<Step> = Vec::new();
    for &c in choices {
        let last = steps.last().copied();
        let mut options = Vec::new();
        if y + 1 < k {
            options.push(Step::NE);
        }
        if y > 0 {
            options.push(Step::SE);
            if allow_south && last == Some(Step::NE) {
                options.push(Step::S);
            }
        }
        if y == 0 {
            options.push(Step::E);
        }
        let s = options[c as usize % options.len()];
        y += match s {
            Step::NE => 1,
            Step::SE | Step::S => -1,
            Step::E => 0,
        };
        steps.push(s);
    }
    if steps.last() == Some(&Step::E) {
        steps.extend([Step::NE, Step::SE]);
    }
    while y > 0 {
        steps.push(Step::SE);
        y -= 1;
    }
    LatticePath::new((k - i as i64) as u32, steps)
}

fn arb_path() -> impl Strategy<Value = (usize, usize, LatticePath)> {
    (2usize..=5)
        .prop_flat_map(|k| (Just(k), 1..=k, prop::collection::vec(any::<u8>(), 0..30)))
        .prop_map(|(k, i, c)| (k, i, build_path(k, i, &c, true)))
}

fn arb_certificate() -> impl Strategy<Value = UpliftCertificate> {
    (2usize..=5)
        .prop_flat_map(|k| {
            (
                Just(k),
                1..=k,
                prop::collection::vec(any::<u8>(), 0..16),
                prop::collection::vec(any::<bool>(), 0..12),
                prop::collection::vec(0u32..6, 0..4),
            )
        })
        .prop_map(|(k, i, c, lam, mut b)| {
            let inner = if i == 1 { 1 } else { i - 1 };
            let base = if k == 2 { LatticePath::default() } else { build_path(k - 1, inner, &c, false) };
            b.sort_unstable_by(|x, y| y.cmp(x));
            let n1 = (peaks(&base).len() + b.len()) as u32;
            let lambda: Vec<u32> = (0..n1).rev().filter(|&j| lam.get(j as usize).copied().unwrap_or(false)).collect();
            UpliftCertificate { base, lambda, b, k, i }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn hook_map_round_trips(op in arb_overpartition()) {
        let f = overpartition_to_frobenius(&op);
        prop_assert_eq!(f.weight(), op.weight());
        prop_assert_eq!(frobenius_to_overpartition(&f), op);
    }

    #[test]
    fn durfee_map_round_trips_and_transports_statistics(op in arb_overpartition()) {
        let f = durfee_frobenius_inverse(&op);
        prop_assert_eq!(f.weight(), op.weight());
        prop_assert_eq!(f.columns(), generalized_durfee_size(&op));
        prop_assert_eq!(f.plain_bottom_count(), op.overlined_count());
        prop_assert_eq!(durfee_frobenius(&f), op);
    }

    #[test]
    fn both_forms_of_the_multiplicity_condition_agree(op in arb_overpartition(), k in 2usize..6) {
        prop_assert_eq!(gap_condition(&op, k), multiplicity_condition(&op, k));
    }

    #[test]
    fn two_modular_map_round_trips(op in arb_overpartition()) {
        let d = phi_two_modular_inverse(&op);
        prop_assert_eq!(d.weight(), 2 * op.weight() - op.overlined_count() as u64);
        prop_assert_eq!(d.ones(), op.overlined_count());
        prop_assert_eq!(TwoModularDiagram::new(d.rows().to_vec()).ok(), Some(d.clone()));
        prop_assert_eq!(phi_two_modular(&d), op);
    }

    #[test]
    fn paths_and_rank_window_symbols_correspond((k, i, p) in arb_path()) {
        prop_assert!(validate(&p, k, i), "{}", p);
        let pk = peaks(&p);
        let nes = pk.iter().filter(|q| q.kind == PeakKind::NES).count();
        prop_assert_eq!(nes, p.south_steps());
        let f = path_to_frobenius(&p, k, i).unwrap();
        prop_assert_eq!(f.weight(), major_index(&p));
        prop_assert_eq!(f.columns(), pk.len());
        prop_assert_eq!(f.plain_bottom_count(), p.south_steps());
        let (lo, hi) = (2 - i as i64, 2 * k as i64 - i as i64 - 1);
        prop_assert!(f.successive_ranks().iter().all(|&r| lo <= r && r <= hi));
        prop_assert_eq!(frobenius_to_path(&f, k, i).unwrap(), p);
    }

    #[test]
    fn relative_height_profiles_are_nonincreasing((k, _i, p) in arb_path()) {
        let prof = relative_height_profile(&p, k);
        prop_assert_eq!(prof.len(), k - 1);
        prop_assert!(prof.windows(2).all(|w| w[0] >= w[1]));
        if let Some(&first) = prof.first() {
            prop_assert_eq!(first, peaks(&p).len());
        }
    }

    #[test]
    fn uplift_inverse_then_uplift_is_identity((k, i, p) in arb_path()) {
        let c = uplift_inverse(&p, k, i).unwrap();
        prop_assert_eq!(major_index(&c.base) + c.weight_gain(), major_index(&p));
        prop_assert_eq!(uplift(&c).unwrap(), p);
    }

    #[test]
    fn uplift_then_inverse_is_identity(c in arb_certificate()) {
        let p = uplift(&c).unwrap();
        prop_assert!(validate(&p, c.k, c.i));
        let mut want = vec![c.n1()];
        want.extend(relative_height_profile(&c.base, c.k - 1).into_iter().take(c.k - 2));
        prop_assert_eq!(relative_height_profile(&p, c.k), want);
        prop_assert_eq!(uplift_inverse(&p, c.k, c.i).unwrap(), c);
    }

    #[test]
    fn single_moves_keep_the_relative_height_profile(c in arb_certificate()) {
        let staged = UpliftCertificate { b: vec![0; c.b.len()], ..c.clone() };
        let before = relative_height_profile(&uplift(&staged).unwrap(), c.k);
        let mut after_each = Vec::new();
        uplift_observed(&c, |p| after_each.push(relative_height_profile(p, c.k))).unwrap();
        prop_assert_eq!(after_each.len() as u32, c.b.iter().sum::<u32>());
        for prof in after_each {
            prop_assert_eq!(&prof, &before);
        }
    }

    #[test]
    fn reciprocal_inverts(coeffs in prop::collection::vec(-5i64..=5, 0..12), a_marks in prop::collection::vec(0i32..3, 12)) {
        let qmax = 14;
        let mut s = Series::one(qmax);
        for (d, &c) in coeffs.iter().enumerate() {
            s.add_monomial(Monomial::new(c, a_marks[d], d as i64 + 1));
        }
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul(&r), Series::one(qmax));
    }
}
