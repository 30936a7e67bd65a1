mod common;

use common::*;
use gshift::decomposition::*;
use gshift::finite_group::FiniteGroup;
use gshift::group_shift::GroupShift;
use gshift::morphisms::{is_trivial, letter_code};
use gshift::sigma_topology::is_sigma_infinitesimal;

fn full(g: FiniteGroup) -> GroupShift {
    GroupShift::full_shift(arc(g))
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[test]
fn standard_embeddings() {
    let f = full(FiniteGroup::cyclic(2));
    let st = standard_embedding(&f).unwrap();
    assert_eq!(st.ell, 0);
    assert_eq!(st.meet.order(), 2);
    assert!(st.check(&f).unwrap().is_empty());

    let one = GroupShift::trivial(arc(FiniteGroup::cyclic(3)));
    let st = standard_embedding(&one).unwrap();
    assert_eq!(st.alphabet.order(), 1);
    assert!(!st.terminal);
    assert!(descend(&one, &st).is_err());

    let ex = example_two_tracks();
    let st = standard_embedding(&ex).unwrap();
    assert_eq!(st.alphabet.order(), ex.blocks(ex.width()).unwrap().order());
    assert!(st.check(&ex).unwrap().is_empty());
    assert!(st.image.equals(&st.code.image().unwrap()).unwrap());
}

#[test]
fn descent_shrinks_the_alphabet() {
    let s3 = arc(FiniteGroup::symmetric(3).unwrap());
    let a3 = s3.composition_series()[1].elements().to_vec();
    let g = overgroup_then_full(s3, &a3);
    let mut st = standard_embedding(&g).unwrap();
    let mut steps = 0;
    while !st.terminal {
        let next = descend(&g, &st).unwrap();
        assert!(next.alphabet.order() < st.alphabet.order());
        assert!(next.check(&g).unwrap().is_empty(), "{:?}", next.check(&g));
        st = next;
        steps += 1;
    }
    assert!(steps >= 1);
    assert_eq!(st.alphabet.order(), 3);
    assert!(st.ell >= 1);
}

#[test]
fn factor_extraction() {
    match extract_factor(&full(FiniteGroup::cyclic(4)), TieBreak::Forward).unwrap() {
        Extraction::Middle(n) => assert_eq!(n.limit_degree(), 2),
        Extraction::Simple { .. } => panic!("C4 is not simple"),
    }
    match extract_factor(
        &full(FiniteGroup::alternating(5).unwrap()),
        TieBreak::Forward,
    )
    .unwrap()
    {
        Extraction::Simple { group, code, ell } => {
            assert_eq!(group.structure_tag(), "A5");
            assert_eq!(ell, 0);
            assert!(is_trivial(&code.kernel().unwrap()));
        }
        Extraction::Middle(_) => panic!("A5 is simple"),
    }
    match extract_factor(&example_two_tracks(), TieBreak::Reversed).unwrap() {
        Extraction::Middle(n) => assert_eq!(n.limit_degree(), 2),
        Extraction::Simple { .. } => panic!("ld 4 has no simple factor of that order"),
    }
    assert!(extract_factor(&diagonal_c2(), TieBreak::Forward).is_err());
}

#[test]
fn series_of_a_cyclic_full_shift() {
    let g = full(FiniteGroup::cyclic(4));
    let s = decompose(&g).unwrap();
    assert_eq!(s.len(), 3);
    assert_eq!(s.factor_tags(), ["C2", "C2"]);
    assert_eq!(s.chain[1].limit_degree(), 2);
    assert!(is_trivial(s.tail()));
    assert!(verify_series(&g, &s).unwrap().passed());
}

#[test]
fn series_with_a_finite_first_coordinate() {
    let s3 = arc(FiniteGroup::symmetric(3).unwrap());
    let a3 = s3.composition_series()[1].elements().to_vec();
    let g = overgroup_then_full(s3, &a3);
    let s = decompose(&g).unwrap();
    assert_eq!(s.head.order(), 1);
    assert_eq!(s.factor_tags(), ["C3"]);
    assert!(is_sigma_infinitesimal(s.tail()));
    assert_eq!(s.tail_nilpotency, 1);
    let points = s.tail().point_count().unwrap();
    assert!(points > 1 && 6 % points == 0, "{points}");
    assert!(verify_series(&g, &s).unwrap().passed());
}

/// The series `G ⊇ {(g, 0) : g ∈ {0, 2}}^ℕ ⊇ 1` for the two-track example.
fn manual_two_track_series() -> (GroupShift, DecompositionSeries) {
    let g = example_two_tracks();
    let c2 = arc(FiniteGroup::cyclic(2));
    let target = GroupShift::full_shift(c2.clone());
    let first = letter_code(&g, &target, |x| x % 2).unwrap();
    let g2 = first.kernel().unwrap();
    let second = letter_code(&g2, &target, |x| x / 4).unwrap();
    let g3 = second.kernel().unwrap();
    let auto = decompose(&g).unwrap();
    let series = DecompositionSeries {
        head: auto.head,
        head_sigma: auto.head_sigma,
        chain: vec![g.clone(), g2, g3],
        factors: vec![
            Factor {
                group: c2.clone(),
                certificate: first,
            },
            Factor {
                group: c2,
                certificate: second,
            },
        ],
        tail_nilpotency: 0,
    };
    (g, series)
}

#[test]
fn verification_of_hand_built_series() {
    let (g, s) = manual_two_track_series();
    let v = verify_series(&g, &s).unwrap();
    assert!(v.passed(), "{:?}", v.failures);
    let auto = decompose(&g).unwrap();
    assert!(uniqueness_report(&s, &auto).unwrap().passed());

    let mut swapped = s.clone();
    swapped.factors.swap(0, 1);
    let v = verify_series(&g, &swapped).unwrap();
    assert!(
        v.failures.iter().any(|f| f.contains("wrong source")),
        "{:?}",
        v.failures
    );

    let mut short = s.clone();
    short.chain.pop();
    assert!(!verify_series(&g, &short).unwrap().passed());

    let mut wrong_tail = s;
    wrong_tail.tail_nilpotency = 2;
    let v = verify_series(&g, &wrong_tail).unwrap();
    assert_eq!(v.failures, ["tail nilpotency index does not match"]);
}

#[test]
fn uniqueness_reports() {
    let c4 = arc(FiniteGroup::cyclic(4));
    let a = series_from_composition(c4.clone()).unwrap();
    let b = decompose(&GroupShift::full_shift(c4.clone())).unwrap();
    assert!(verify_series(&GroupShift::full_shift(c4), &a)
        .unwrap()
        .passed());
    assert!(uniqueness_report(&a, &b).unwrap().passed());

    let two = series_from_composition(arc(FiniteGroup::cyclic(2))).unwrap();
    let three = series_from_composition(arc(FiniteGroup::cyclic(3))).unwrap();
    let r = uniqueness_report(&two, &three).unwrap();
    assert!(r.same_length);
    assert!(!r.same_first_member);
    assert!(!r.same_factors);
}

#[test]
fn full_shift_certificates_for_factors() {
    let s3 = full(FiniteGroup::symmetric(3).unwrap());
    let cert = full_shift_certificate(&s3).unwrap().unwrap();
    assert_eq!(cert.letters.order(), 6);
    assert!(full_shift_certificate(&diagonal_c2()).unwrap().is_none());
    let cert = full_shift_certificate(&example_two_tracks()).unwrap();
    assert!(
        cert.is_none(),
        "ld 4 with two factors is not certified as one full shift"
    );
}

#[test]
fn factor_orders_multiply_to_the_limit_degree() {
    let corpus = corpus();
    let failures = par_failures(
        &corpus.iter().step_by(5).collect::<Vec<_>>(),
        |(name, g)| {
            let s = match decompose(g) {
                Ok(s) => s,
                Err(e) => return Some(format!("{name}: {e}")),
            };
            let product: u64 = s.factor_orders().iter().map(|&o| o as u64).product();
            if product != g.limit_degree() {
                return Some(format!(
                    "{name}: product {product}, ld {}",
                    g.limit_degree()
                ));
            }
            if is_prime(g.limit_degree()) && s.factors.len() != 1 {
                return Some(format!("{name}: prime ld with {} factors", s.factors.len()));
            }
            if g.limit_degree() == 1 && s.len() != 1 {
                return Some(format!(
                    "{name}: finite shift with chain length {}",
                    s.len()
                ));
            }
            None
        },
    );
    assert!(failures.is_empty(), "{failures:?}");
}
