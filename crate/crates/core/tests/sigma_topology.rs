mod common;

use common::*;
use gshift::finite_group::FiniteGroup;
use gshift::group_shift::GroupShift;
use gshift::morphisms::{is_normal_in, is_trivial, quotient};
use gshift::sigma_topology::*;

fn c2_full() -> GroupShift {
    GroupShift::full_shift(arc(FiniteGroup::cyclic(2)))
}

fn is_identity_map(h: &gshift::finite_group::GroupHom) -> bool {
    h.table().iter().enumerate().all(|(i, &x)| x as usize == i)
}

/// Corpus shifts over alphabets of order at most `max`.
fn small_corpus(max: usize) -> Vec<(String, GroupShift)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| g.alphabet().order() <= max)
        .collect()
}

#[test]
fn component_counts() {
    assert_eq!(sigma_components(&c2_full()).unwrap().count, 1);
    assert_eq!(sigma_components(&diagonal_c2()).unwrap().count, 2);
    let r = sigma_components(&example_three_tracks()).unwrap();
    assert_eq!(r.count, 2);
    assert_eq!(r.head.order(), 2);
    assert!(is_identity_map(&r.head_sigma));
    assert_eq!(
        r.state_component.len(),
        example_three_tracks().state_count()
    );
}

#[test]
fn identity_components() {
    let f = c2_full();
    assert!(identity_component(&f).unwrap().equals(&f).unwrap());
    assert!(is_trivial(&identity_component(&diagonal_c2()).unwrap()));
    let g = example_three_tracks();
    let sc = identity_component(&g).unwrap();
    assert_eq!(head_index(&g, &sc).unwrap(), 2);
    assert!(g.contains(&sc).unwrap());
    assert_eq!(sc.limit_degree(), g.limit_degree());
}

#[test]
fn heads() {
    let (h, _) = head(&c2_full()).unwrap();
    assert_eq!(h.order(), 1);
    let (h, s) = head(&diagonal_c2()).unwrap();
    assert!(h.is_isomorphic(&FiniteGroup::cyclic(2)).unwrap());
    assert!(is_identity_map(&s));
    let (h, s) = head(&example_three_tracks()).unwrap();
    assert_eq!(h.order(), 2);
    assert!(is_identity_map(&s));
    assert_eq!(orbit_count(&s), 2);
}

#[test]
fn sigma_infinitesimal_shifts() {
    let one = GroupShift::trivial(arc(FiniteGroup::cyclic(2)));
    assert!(is_sigma_infinitesimal(&one));
    assert_eq!(nilpotency_index(&one).unwrap(), 0);
    let c4 = arc(FiniteGroup::cyclic(4));
    let tail = GroupShift::full_shift(c4).ker_sigma_power(1).unwrap();
    assert!(is_sigma_infinitesimal(&tail));
    assert_eq!(nilpotency_index(&tail).unwrap(), 1);
    assert_eq!(tail.point_count(), Some(4));
    assert!(!is_sigma_infinitesimal(&diagonal_c2()));
    assert!(nilpotency_index(&diagonal_c2()).is_err());
    let deep = c2_full().ker_sigma_power(3).unwrap();
    assert_eq!(nilpotency_index(&deep).unwrap(), 3);
}

#[test]
fn sigma_connectedness() {
    assert!(is_sigma_connected(&example_two_tracks()).unwrap());
    assert!(!is_sigma_connected(&diagonal_c2()).unwrap());
    let a5 = GroupShift::full_shift(arc(FiniteGroup::alternating(5).unwrap()));
    assert!(is_sigma_connected(&a5).unwrap());
}

#[test]
fn invariants_of_examples() {
    for (name, g) in small_groups().into_iter().skip(1) {
        let n = g.order() as u64;
        let f = GroupShift::full_shift(arc(g));
        let inv = conjugacy_invariants(&f, 6, 4).unwrap();
        assert_eq!(inv.d, n, "{name}");
        assert!(inv.f.iter().all(|x| *x == Some(1)), "{name}");
        assert_eq!(
            inv.cycle_counts,
            vec![Some(1), Some(0), Some(0), Some(0), Some(0), Some(0)],
            "{name}"
        );
        assert_eq!(inv.ell, Some(0), "{name}");
        assert!(inv.consistent);
    }

    let s3 = arc(FiniteGroup::symmetric(3).unwrap());
    let a3 = s3.composition_series()[1].elements().to_vec();
    let g = overgroup_then_full(s3, &a3);
    let inv = conjugacy_invariants(&g, 6, 8).unwrap();
    assert_eq!(inv.d, 3);
    assert!(inv.f.iter().all(|x| *x == Some(1)));
    assert_eq!(inv.ell, Some(1));

    let inv = conjugacy_invariants(&example_two_tracks(), 4, 16).unwrap();
    assert_eq!(inv.d, 4);
    assert_eq!(inv.f[0], Some(1));
    assert!(inv.fixed_alphabet_check);

    let inv = conjugacy_invariants(&diagonal_c2(), 6, 4).unwrap();
    assert_eq!(inv.f, vec![Some(2); 6]);
    assert_eq!(inv.cycle_counts[0], Some(2));
    assert!(conjugacy_invariants(&diagonal_c2(), 0, 4).is_err());
}

#[test]
fn stabilization_bound_is_reported_when_exceeded() {
    let deep = c2_full().ker_sigma_power(3).unwrap();
    let inv = conjugacy_invariants(&deep, 3, 1).unwrap();
    assert_eq!(inv.ell, None);
    assert_eq!(inv.ell_bound, 1);
    assert_eq!(conjugacy_invariants(&deep, 3, 8).unwrap().ell, Some(3));
}

#[test]
fn identity_component_properties_on_corpus() {
    for (name, g) in small_corpus(6) {
        let sc = identity_component(&g).unwrap();
        assert!(is_normal_in(&sc, &g).unwrap(), "{name}");
        assert!(is_sigma_connected(&sc).unwrap(), "{name}");
        assert_eq!(sc.limit_degree(), g.limit_degree(), "{name}");
        assert!(
            identity_component(&sc).unwrap().equals(&sc).unwrap(),
            "{name}"
        );
        let (_, sigma) = head(&g).unwrap();
        assert!(sigma.is_bijective(), "{name}");
    }
}

#[test]
fn finite_connected_shifts_are_infinitesimal() {
    let mut finite_connected = 0;
    for (name, g) in small_corpus(4) {
        if g.is_finite() && is_sigma_connected(&g).unwrap() {
            finite_connected += 1;
            assert!(is_sigma_infinitesimal(&g), "{name}");
        }
    }
    assert!(finite_connected > 5);
}

/// Pairs `(G, N)` of corpus shifts over one alphabet with `N` normal in `G`.
fn normal_pairs(prefix: &str) -> Vec<(GroupShift, GroupShift)> {
    let shifts: Vec<GroupShift> = corpus()
        .into_iter()
        .filter(|(n, _)| n.starts_with(prefix))
        .map(|(_, g)| g)
        .collect();
    let mut out = Vec::new();
    for g in &shifts {
        for n in &shifts {
            if g.contains(n).unwrap() && is_normal_in(n, g).unwrap() {
                out.push((g.clone(), n.clone()));
            }
        }
    }
    out
}

#[test]
fn components_under_extensions_and_images() {
    let mut absorbed = 0;
    let mut extensions = 0;
    for prefix in ["C2#", "C4#", "C2xC2#", "S3#"] {
        for (g, n) in normal_pairs(prefix) {
            let q = quotient(&g, &n).unwrap().quotient;
            // A finite quotient on which σ is onto, hence bijective, absorbs the identity component.
            if q.is_finite() && q.sigma_image(1).unwrap().equals(&q).unwrap() {
                absorbed += 1;
                assert!(n.contains(&identity_component(&g).unwrap()).unwrap());
            }
            if is_sigma_connected(&n).unwrap() && is_sigma_connected(&q).unwrap() {
                extensions += 1;
                assert!(is_sigma_connected(&g).unwrap());
            }
            if is_sigma_connected(&g).unwrap() {
                assert!(is_sigma_connected(&q).unwrap());
            }
        }
    }
    assert!(absorbed > 20 && extensions > 20, "{absorbed} {extensions}");
}
