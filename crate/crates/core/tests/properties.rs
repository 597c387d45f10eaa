//! Randomized invariants for the weight, Weyl-group and critical-set layers.

use proptest::prelude::*;

use rankin_core::hodge::{critical_set_automorphic, gamma_inventory};
use rankin_core::weights::rho_doubled;
use rankin_core::weyl::{find_balanced, kostant_reps, longest_element, BalanceStatus, Perm};
use rankin_core::Weight;

/// Dominant weight of rank `n` and degree `r` with small entries.
fn arb_weight(n: usize, r: usize) -> impl Strategy<Value = Weight> {
    let embedding = (proptest::collection::vec(0i64..5, n - 1), -6i64..=6).prop_map(
        move |(gaps, base)| {
            let mut coords = vec![base; n];
            for j in (0..n - 1).rev() {
                coords[j] = coords[j + 1] + gaps[j];
            }
            coords
        },
    );
    proptest::collection::vec(embedding, r)
        .prop_map(move |coords| Weight::new(n, r, coords).unwrap())
}

/// Pure dominant weight: mirror-symmetric gaps in each embedding, with the
/// embeddings shifted so they share one purity weight.
fn arb_pure_weight(n: usize, r: usize) -> impl Strategy<Value = Weight> {
    let half = n / 2;
    let embedding = proptest::collection::vec(0i64..5, half).prop_map(move |half_gaps| {
        let mut gaps = vec![0i64; n - 1];
        for (i, g) in half_gaps.iter().enumerate() {
            if n % 2 == 0 && i == half - 1 {
                // middle gap of an even-rank weight: keep it even so that
                // every embedding has an even purity weight
                gaps[i] = 2 * g;
            } else {
                gaps[i] = *g;
                gaps[n - 2 - i] = *g;
            }
        }
        let mut coords = vec![0i64; n];
        for j in (0..n - 1).rev() {
            coords[j] = coords[j + 1] + gaps[j];
        }
        coords
    });
    (proptest::collection::vec(embedding, r), -6i64..=6).prop_map(move |(mut coords, base)| {
        let top = coords.iter().map(|c| c[0]).max().unwrap();
        for c in coords.iter_mut() {
            let shift = (top - c[0]) / 2 + base;
            for x in c.iter_mut() {
                *x += shift;
            }
        }
        let w = Weight::new(n, r, coords).unwrap();
        assert!(w.is_pure());
        w
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |(), mut rng| {
        let mut line: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            line.swap(i, j);
        }
        Perm::from_one_line(&line).unwrap()
    })
}

proptest! {
    #[test]
    fn fundamental_round_trip(w in (2usize..=5, 1usize..=3).prop_flat_map(|(n, r)| arb_weight(n, r))) {
        let f = w.to_fundamental();
        prop_assert!(f.is_integral(w.rank()));
        prop_assert_eq!(f.to_weight(w.rank()).unwrap(), w);
    }

    #[test]
    fn dual_is_an_involution_preserving_parameters(
        w in (2usize..=5, 1usize..=3).prop_flat_map(|(n, r)| arb_pure_weight(n, r)),
    ) {
        let d = w.dual();
        prop_assert!(d.is_dominant());
        prop_assert_eq!(d.dual(), w.clone());
        // the infinitesimal-character parameters are antisymmetric, so they
        // survive dualizing unchanged
        prop_assert_eq!(
            d.cuspidal_params().unwrap().ell,
            w.cuspidal_params().unwrap().ell
        );
    }

    #[test]
    fn tate_twist_shifts_purity_and_fixes_parameters(
        w in arb_pure_weight(3, 2),
        m in -4i64..=4,
    ) {
        let t = w.tate_twist(m);
        prop_assert!(t.is_pure());
        let (cw, ct) = (w.cuspidal_params().unwrap(), t.cuspidal_params().unwrap());
        prop_assert_eq!(cw.ell, ct.ell);
        prop_assert_eq!(ct.purity_weight_doubled, cw.purity_weight_doubled - 2 * m);
    }

    #[test]
    fn cuspidal_width_is_symmetric_and_twist_invariant(
        a in arb_pure_weight(3, 1),
        b in arb_pure_weight(2, 1),
        m in -3i64..=3,
    ) {
        prop_assert_eq!(a.cuspidal_width(&b).unwrap(), b.cuspidal_width(&a).unwrap());
        prop_assert_eq!(a.tate_twist(m).cuspidal_width(&b).unwrap(), a.cuspidal_width(&b).unwrap());
    }

    #[test]
    fn dot_action_is_a_group_action(
        w1 in arb_perm(6),
        w2 in arb_perm(6),
        lam in proptest::collection::vec(-8i64..=8, 6),
    ) {
        prop_assert_eq!(w1.compose(&w2).dot(&lam), w1.dot(&w2.dot(&lam)));
        prop_assert_eq!(Perm::identity(6).dot(&lam), lam);
    }

    #[test]
    fn length_under_inverse_and_longest_element(w in arb_perm(7)) {
        let n = 7u64;
        prop_assert_eq!(w.length(), w.inverse().length());
        let w0 = longest_element(7);
        prop_assert_eq!(w0.compose(&w).length(), n * (n - 1) / 2 - w.length());
    }

    #[test]
    fn kostant_inverses_sort_within_blocks(n in 1usize..=4, big_n in 4usize..=7) {
        prop_assume!(n < big_n);
        let reps = kostant_reps(big_n, n).unwrap();
        let rho = rho_doubled(big_n);
        for w in &reps {
            prop_assert!(w.is_kostant(&[n, big_n - n]));
            // minimal-length coset representatives keep the shifted
            // coordinates strictly decreasing inside each block
            let moved = w.permute(&rho);
            prop_assert!(moved[..n].windows(2).all(|p| p[0] > p[1]));
            prop_assert!(moved[n..].windows(2).all(|p| p[0] > p[1]));
        }
    }

    #[test]
    fn balanced_search_output_is_consistent(
        mu in arb_weight(2, 1),
        mup in arb_weight(2, 1),
    ) {
        let out = find_balanced(&mu, &mup).unwrap();
        match out.status {
            BalanceStatus::Collision => prop_assert!(out.element.is_none()),
            BalanceStatus::Balanced => {
                prop_assert!(out.lengths.iter().all(|&l| l == 2));
                let lam = out.dominant_lambda.unwrap();
                prop_assert!(lam.is_dominant());
            }
            BalanceStatus::Unbalanced => {
                prop_assert!(out.element.is_some());
                prop_assert!(out.lengths.iter().any(|&l| l != 2));
            }
        }
    }

    #[test]
    fn inventory_scan_agrees_with_closed_form_window(
        mu in arb_pure_weight(2, 1),
        mup in arb_pure_weight(2, 1),
    ) {
        let width = mu.cuspidal_width(&mup).unwrap();
        prop_assume!(width > 0);
        let closed = critical_set_automorphic(&mu, &mup).unwrap();
        let scanned = gamma_inventory(&mu, &mup, None).unwrap().critical_set().unwrap();
        prop_assert_eq!(scanned.doubled_points(), closed.doubled_points());
        prop_assert_eq!(closed.len() as i64, width);
    }
}
