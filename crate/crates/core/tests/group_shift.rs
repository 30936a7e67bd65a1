mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use gshift::blocks::{BlockGroup, Word};
use gshift::finite_group::FiniteGroup;
use gshift::group_shift::GroupShift;
use gshift::morphisms::{decode_1step, recode_1step};
use proptest::prelude::*;

fn c2() -> Arc<FiniteGroup> {
    arc(FiniteGroup::cyclic(2))
}

/// Periodic points counted as cyclic words whose cyclic windows all lie in the window.
fn brute_periodic(alph: &FiniteGroup, w: usize, window: &BlockGroup, p: usize) -> usize {
    let q = alph.order();
    (0..q.pow(p as u32))
        .filter(|&code| {
            let word: Word = (0..p)
                .map(|j| (code / q.pow(j as u32) % q) as u32)
                .collect();
            (0..p).all(|s| {
                let block: Word = (0..=w).map(|t| word[(s + t) % p]).collect();
                window.contains(&block)
            })
        })
        .count()
}

fn s3_over_a3() -> GroupShift {
    let s3 = arc(FiniteGroup::symmetric(3).unwrap());
    let a3 = s3.composition_series()[1].elements().to_vec();
    overgroup_then_full(s3, &a3)
}

#[test]
fn window_constructions() {
    let window = BlockGroup::full(&c2(), 1).unwrap();
    let g = GroupShift::from_window(c2(), 0, &window).unwrap();
    assert!(g.equals(&GroupShift::full_shift(c2())).unwrap());

    let ex = example_two_tracks();
    assert_eq!(ex.state_count(), 8);
    assert_eq!(ex.window().order(), 32);
    assert_eq!(ex.width(), 1);

    let diag = diagonal_c2();
    assert_eq!(diag.point_count(), Some(2));
}

#[test]
fn full_shift_constructor() {
    let one = GroupShift::full_shift(arc(FiniteGroup::trivial()));
    assert_eq!(one.point_count(), Some(1));
    assert_eq!(GroupShift::full_shift(c2()).limit_degree(), 2);
    let a5 = GroupShift::full_shift(arc(FiniteGroup::alternating(5).unwrap()));
    assert_eq!(a5.limit_degree(), 60);
    assert!((a5.entropy() - 60f64.ln()).abs() < 1e-12);
}

#[test]
fn forward_trimming() {
    let into_zero = BlockGroup::from_words(&c2(), 2, vec![vec![0, 0], vec![1, 0]]).unwrap();
    let g = GroupShift::from_window(c2(), 1, &into_zero).unwrap();
    assert_eq!(g.blocks(1).unwrap().words(), &[vec![0, 0], vec![1, 0]]);
    assert_eq!(g.point_count(), Some(2));

    let only_zero = BlockGroup::trivial(2);
    let g = GroupShift::from_window(c2(), 1, &only_zero).unwrap();
    assert_eq!(g.state_count(), 1);
    assert_eq!(g.point_count(), Some(1));
}

#[test]
fn block_groups() {
    assert_eq!(GroupShift::full_shift(c2()).blocks(2).unwrap().order(), 8);
    let ex = example_two_tracks();
    assert_eq!(ex.blocks(0).unwrap().order(), 8);
    assert_eq!(ex.blocks(1).unwrap().order(), 32);
}

#[test]
fn kernel_chains() {
    let full = GroupShift::full_shift(c2());
    let kc = full.kernel_chain();
    assert!(kc.sizes.iter().all(|&s| s == 2));
    assert_eq!((kc.limit_degree, kc.minimal_step), (2, 0));
    assert_eq!(example_two_tracks().limit_degree(), 4);
    assert_eq!(diagonal_c2().limit_degree(), 1);
    assert_eq!(
        example_two_tracks().kernel_sizes_upto(5).unwrap(),
        vec![4; 5]
    );
}

#[test]
fn entropies() {
    let one = GroupShift::trivial(c2());
    assert_eq!(one.entropy(), 0.0);
    assert!((example_two_tracks().entropy() - 4f64.ln()).abs() < 1e-12);
}

#[test]
fn one_step_recoding() {
    let full = GroupShift::full_shift(c2());
    let (r, _) = recode_1step(&full).unwrap();
    assert_eq!(r.alphabet().order(), 2);
    assert_eq!(r.limit_degree(), 2);

    let ex = example_two_tracks();
    let (r, _) = recode_1step(&ex).unwrap();
    assert_eq!(r.alphabet().order(), 32);
    assert_eq!(r.limit_degree(), 4);
    let b0 = r.blocks(0).unwrap().order();
    assert_eq!(r.blocks(1).unwrap().order() / b0, 4);

    let (r, _) = recode_1step(&diagonal_c2()).unwrap();
    assert_eq!(r.alphabet().order(), 2);
    assert!((0..r.state_count()).all(|s| r.successors(s).len() == 1));
}

#[test]
fn finite_enumeration() {
    let pts = diagonal_c2().enumerate_finite().unwrap();
    assert_eq!(pts.len(), 2);
    assert!(pts.iter().all(|p| (0..5).all(|i| p.at(i) == p.at(0))));
    assert!(!GroupShift::full_shift(c2()).is_finite());
    assert!(GroupShift::full_shift(c2()).enumerate_finite().is_err());
}

#[test]
fn sigma_images() {
    let full = GroupShift::full_shift(c2());
    assert!(full.sigma_image(3).unwrap().equals(&full).unwrap());

    let g = s3_over_a3();
    let a3 = g.alphabet().composition_series()[1].elements().to_vec();
    let expected = GroupShift::full_on_subgroup(g.alphabet().clone(), &a3).unwrap();
    assert!(g.sigma_image(1).unwrap().equals(&expected).unwrap());

    let diag = diagonal_c2();
    assert!(diag.sigma_image(3).unwrap().equals(&diag).unwrap());
}

#[test]
fn kernels_of_sigma_powers() {
    let ex = example_two_tracks();
    assert_eq!(ex.ker_sigma_power(0).unwrap().point_count(), Some(1));
    assert_eq!(
        GroupShift::full_shift(c2())
            .ker_sigma_power(2)
            .unwrap()
            .point_count(),
        Some(4)
    );
    let k = ex.ker_sigma_power(1).unwrap();
    assert_eq!(k.point_count(), Some(4));
    // Each point is one letter followed by identities.
    for p in k.enumerate_finite().unwrap() {
        assert!((1..6).all(|i| p.at(i) == 0));
    }
}

#[test]
fn sigma_preimages() {
    let full = GroupShift::full_shift(c2());
    assert!(GroupShift::sigma_preimage(&full, &full, 5)
        .unwrap()
        .equals(&full)
        .unwrap());
    let triv = GroupShift::trivial(c2());
    let pre = GroupShift::sigma_preimage(&triv, &full, 2).unwrap();
    assert!(pre.equals(&full.ker_sigma_power(2).unwrap()).unwrap());

    let g = s3_over_a3();
    let a3 = g.alphabet().composition_series()[1].elements().to_vec();
    let later = GroupShift::full_on_subgroup(g.alphabet().clone(), &a3).unwrap();
    assert!(GroupShift::sigma_preimage(&later, &g, 1)
        .unwrap()
        .equals(&g)
        .unwrap());
    assert!(GroupShift::sigma_preimage(&g, &later, 1).is_err());
}

#[test]
fn equality_and_containment() {
    let full = GroupShift::full_shift(c2());
    assert!(full.equals(&full).unwrap());
    let diag = diagonal_c2();
    assert!(full.contains(&diag).unwrap());
    assert!(!full.equals(&diag).unwrap());
    assert!(!diag.contains(&full).unwrap());

    let ex = example_two_tracks();
    let (r, enc) = recode_1step(&ex).unwrap();
    let dec = decode_1step(&r, &ex).unwrap();
    assert!(dec.image().unwrap().equals(&ex).unwrap());
    let round = enc.compose(&dec).unwrap();
    for w in ex.blocks(4).unwrap().words() {
        assert_eq!(
            round.apply(w).unwrap(),
            w[..w.len() - round.anticipation()].to_vec()
        );
    }

    let c3 = GroupShift::full_shift(arc(FiniteGroup::cyclic(3)));
    assert!(full.equals(&c3).is_err());
}

#[test]
fn periodic_counts() {
    let full = GroupShift::full_shift(arc(FiniteGroup::cyclic(3)));
    for p in 1..6 {
        assert_eq!(
            full.periodic_count(p).to_string(),
            3usize.pow(p as u32).to_string()
        );
    }
    assert_eq!(example_two_tracks().periodic_count(1).to_string(), "4");
    assert_eq!(diagonal_c2().periodic_count(3).to_string(), "2");
    let big = GroupShift::full_shift(arc(FiniteGroup::alternating(5).unwrap()));
    assert_eq!(big.periodic_count(12).to_string(), "2176782336000000000000");
}

#[test]
fn budget_errors_are_reported() {
    let big = GroupShift::full_shift(arc(FiniteGroup::alternating(5).unwrap()));
    gshift::error::set_budget(1000);
    let err = big.blocks(3).unwrap_err();
    gshift::error::set_budget(gshift::error::DEFAULT_BUDGET);
    assert!(matches!(err, gshift::error::Error::Budget { .. }), "{err}");
}

#[test]
fn oracle_on_two_step_windows() {
    let v = arc(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap());
    let windows = word_subgroups(&v, 3);
    let mut seen = BTreeSet::new();
    for window in windows.iter().step_by(3) {
        let g = GroupShift::from_window(v.clone(), 2, window).unwrap();
        if !seen.insert(g.canonical_key()) {
            continue;
        }
        for i in 0..=4 {
            let oracle = brute_force_blocks(&v, 2, window, i, 17);
            let mine: BTreeSet<Word> = g.blocks(i).unwrap().words().iter().cloned().collect();
            assert_eq!(mine, oracle, "window {:?}, i = {i}", window.words());
        }
    }
}

fn arb_shift() -> impl Strategy<Value = (Arc<FiniteGroup>, usize, Vec<Word>)> {
    let groups = || {
        vec![
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
        ]
    };
    (0usize..5, 1usize..=2, 1usize..=3).prop_flat_map(move |(gi, w, ngens)| {
        let g = arc(groups().swap_remove(gi));
        let q = g.order() as u32;
        let word = proptest::collection::vec(0..q, w + 1);
        (Just(g), Just(w), proptest::collection::vec(word, ngens))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn blocks_match_oracle((g, w, gens) in arb_shift()) {
        let window = BlockGroup::generated(&g, w + 1, &gens).unwrap();
        let shift = GroupShift::from_window(g.clone(), w, &window).unwrap();
        let states = g.order().pow(w as u32);
        for i in 0..=3 {
            let oracle = brute_force_blocks(&g, w, &window, i, states + 1);
            let mine: BTreeSet<Word> = shift.blocks(i).unwrap().words().iter().cloned().collect();
            prop_assert_eq!(mine, oracle);
        }
    }

    #[test]
    fn kernel_chain_settles((g, w, gens) in arb_shift()) {
        let shift = GroupShift::from_generators(g, w, &gens).unwrap();
        let sizes = shift.kernel_sizes_upto(shift.width() + 4).unwrap();
        prop_assert!(sizes.windows(2).all(|p| p[0] >= p[1]));
        prop_assert!(sizes[shift.minimal_step().max(1) - 1..].iter().all(|&s| s == shift.limit_degree()));
        let degrees: BTreeSet<usize> = (0..shift.state_count()).map(|s| shift.successors(s).len()).collect();
        prop_assert_eq!(degrees.len(), 1);
    }

    #[test]
    fn periodic_counts_match_oracle((g, w, gens) in arb_shift()) {
        let window = BlockGroup::generated(&g, w + 1, &gens).unwrap();
        let shift = GroupShift::from_window(g.clone(), w, &window).unwrap();
        for p in 1..=4 {
            prop_assert_eq!(shift.periodic_count(p).to_string(), brute_periodic(&g, w, &window, p).to_string());
            prop_assert_eq!(shift.sigma_image(1).unwrap().periodic_count(p), shift.periodic_count(p));
        }
    }

    #[test]
    fn infinite_shifts_have_nontrivial_sigma_kernel((g, w, gens) in arb_shift()) {
        let shift = GroupShift::from_generators(g, w, &gens).unwrap();
        if shift.limit_degree() > 1 {
            prop_assert!(shift.ker_sigma_power(1).unwrap().point_count().unwrap() > 1);
        }
    }

    #[test]
    fn recoding_round_trips((g, w, gens) in arb_shift()) {
        let shift = GroupShift::from_generators(g, w, &gens).unwrap();
        let (r, enc) = recode_1step(&shift).unwrap();
        let dec = decode_1step(&r, &shift).unwrap();
        let round = enc.compose(&dec).unwrap();
        let k = round.anticipation();
        for word in shift.blocks(k + 2).unwrap().words() {
            prop_assert_eq!(round.apply(word).unwrap(), word[..3].to_vec());
        }
        prop_assert!(dec.image().unwrap().equals(&shift).unwrap());
    }
}
