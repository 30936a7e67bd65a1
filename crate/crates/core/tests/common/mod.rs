//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use gshift::blocks::{BlockGroup, Word};
use gshift::finite_group::FiniteGroup;
use gshift::group_shift::GroupShift;

pub fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
    Arc::new(g)
}

/// `C4 × C2` with `(g, h)` at index `2g + h`, and the shift with `σ(h) = g²h`.
pub fn example_two_tracks() -> GroupShift {
    let alph = arc(FiniteGroup::product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2)).unwrap());
    let e = |g: u32, h: u32| 2 * g + h;
    let gens = vec![
        vec![e(1, 0), e(0, 1)],
        vec![e(0, 1), e(0, 1)],
        vec![e(0, 0), e(1, 0)],
    ];
    GroupShift::from_generators(alph, 1, &gens).unwrap()
}

/// Index of `(a, b, c)` in `C4 × C4 × C2`.
pub fn e3(a: u32, b: u32, c: u32) -> u32 {
    (a * 4 + b) * 2 + c
}

/// The shift on `C4 × C4 × C2` with `σ(g₁) = g₂²` and `σ(g₃) = g₃`.
pub fn example_three_tracks() -> GroupShift {
    let c4 = FiniteGroup::cyclic(4);
    let alph = arc(FiniteGroup::product(
        &FiniteGroup::product(&c4, &c4).unwrap(),
        &FiniteGroup::cyclic(2),
    )
    .unwrap());
    let gens = vec![
        vec![e3(1, 0, 0), e3(0, 0, 0)],
        vec![e3(0, 1, 0), e3(2, 0, 0)],
        vec![e3(0, 0, 1), e3(0, 0, 1)],
        vec![e3(0, 0, 0), e3(0, 1, 0)],
    ];
    GroupShift::from_generators(alph, 1, &gens).unwrap()
}

/// `Γ' × Γ × Γ × …` for `Γ ≤ Γ'` given by elements.
pub fn overgroup_then_full(big: Arc<FiniteGroup>, small: &[u32]) -> GroupShift {
    let mut gens: Vec<Word> = Vec::new();
    for a in 0..big.order() as u32 {
        gens.push(vec![a, 0]);
    }
    for &b in small {
        gens.push(vec![0, b]);
    }
    GroupShift::from_generators(big, 1, &gens).unwrap()
}

/// The two constant points of the binary full shift.
pub fn diagonal_c2() -> GroupShift {
    GroupShift::from_generators(arc(FiniteGroup::cyclic(2)), 1, &[vec![1, 1]]).unwrap()
}

/// All words of length `i + 1` whose `(w+1)`-windows lie in `window` and
/// which extend forward by `extra` further letters.
pub fn brute_force_blocks(
    alph: &FiniteGroup,
    w: usize,
    window: &BlockGroup,
    i: usize,
    extra: usize,
) -> BTreeSet<Word> {
    let q = alph.order() as u32;
    let mut memo: HashMap<(Word, usize), bool> = HashMap::new();
    fn extendable(
        q: u32,
        window: &BlockGroup,
        last: &[u32],
        steps: usize,
        memo: &mut HashMap<(Word, usize), bool>,
    ) -> bool {
        if steps == 0 {
            return true;
        }
        if let Some(&v) = memo.get(&(last.to_vec(), steps)) {
            return v;
        }
        let mut ok = false;
        for a in 0..q {
            let mut cand = last.to_vec();
            cand.push(a);
            if window.contains(&cand) {
                let next = cand[1..].to_vec();
                if extendable(q, window, &next, steps - 1, memo) {
                    ok = true;
                    break;
                }
            }
        }
        memo.insert((last.to_vec(), steps), ok);
        ok
    }
    let len = i + 1;
    let mut words: Vec<Word> = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|p| {
                (0..q).map(move |a| {
                    let mut v = p.clone();
                    v.push(a);
                    v
                })
            })
            .filter(|v| v.len() < w + 1 || window.contains(&v[v.len() - w - 1..]))
            .collect();
    }
    let mut out = BTreeSet::new();
    if len >= w {
        for v in words {
            if extendable(q, window, &v[len - w..], extra, &mut memo) {
                out.insert(v);
            }
        }
    } else {
        // Shorter than a state: pad through a full state first.
        let full = brute_force_blocks(alph, w, window, w, extra);
        for v in full {
            out.insert(v[..len].to_vec());
        }
    }
    out
}

/// All groups of order at most 8 up to isomorphism, with short names.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    let c = FiniteGroup::cyclic;
    let p = |a: &FiniteGroup, b: &FiniteGroup| FiniteGroup::product(a, b).unwrap();
    vec![
        ("C1", FiniteGroup::trivial()),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2xC2", p(&c(2), &c(2))),
        ("C5", c(5)),
        ("C6", c(6)),
        ("S3", FiniteGroup::symmetric(3).unwrap()),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", p(&c(4), &c(2))),
        ("C2xC2xC2", p(&p(&c(2), &c(2)), &c(2))),
        ("D4", FiniteGroup::dihedral(4).unwrap()),
        ("Q8", FiniteGroup::quaternion().unwrap()),
    ]
}

/// Every subgroup of `Γ × Γ` for `|Γ| ≤ 8`, as bit masks over the index `a·|Γ| + b`.
pub fn pair_subgroups(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order();
    let m = n * n;
    assert!(m <= 64, "bit masks hold at most 64 elements");
    let mul = |x: usize, y: usize| -> usize {
        let (a, b) = (x / n, x % n);
        let (c, d) = (y / n, y % n);
        g.mul(a as u32, c as u32) as usize * n + g.mul(b as u32, d as u32) as usize
    };
    let close = |mask: u64, x: usize| -> u64 {
        let mut elems: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let mut cur = mask | 1;
        if cur >> x & 1 == 0 {
            cur |= 1 << x;
            elems.push(x);
        }
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i];
            for j in 0..elems.len() {
                for y in [mul(e, elems[j]), mul(elems[j], e)] {
                    if cur >> y & 1 == 0 {
                        cur |= 1 << y;
                        elems.push(y);
                    }
                }
            }
            i += 1;
        }
        cur
    };
    let mut found: BTreeSet<u64> = BTreeSet::new();
    found.insert(1);
    let mut queue = vec![1u64];
    while let Some(h) = queue.pop() {
        for x in 0..m {
            if h >> x & 1 == 1 {
                continue;
            }
            let k = close(h, x);
            if found.insert(k) {
                queue.push(k);
            }
        }
    }
    found.into_iter().collect()
}

/// All width-1 group shifts over groups of order at most 8, deduplicated per alphabet.
pub fn corpus() -> Vec<(String, GroupShift)> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        let n = g.order();
        let alph = arc(g);
        let mut seen: BTreeSet<(usize, Vec<Word>)> = BTreeSet::new();
        for mask in pair_subgroups(&alph) {
            let words: Vec<Word> = (0..n * n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| vec![(i / n) as u32, (i % n) as u32])
                .collect();
            let window = BlockGroup::from_words(&alph, 2, words).unwrap();
            let shift = GroupShift::from_window(alph.clone(), 1, &window).unwrap();
            if seen.insert(shift.canonical_key()) {
                out.push((format!("{name}#{mask:x}"), shift));
            }
        }
    }
    out
}

/// Every subgroup of `Γ^len`, found by closing under one extra generator at a time.
pub fn word_subgroups(g: &FiniteGroup, len: usize) -> Vec<BlockGroup> {
    let all = BlockGroup::full(g, len).unwrap();
    let mut found: BTreeSet<Vec<Word>> = BTreeSet::new();
    let start = BlockGroup::trivial(len);
    found.insert(start.words().to_vec());
    let mut out = vec![start.clone()];
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for x in all.words() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.generators(g);
            gens.push(x.clone());
            let k = BlockGroup::generated(g, len, &gens).unwrap();
            if found.insert(k.words().to_vec()) {
                out.push(k.clone());
                queue.push(k);
            }
        }
    }
    out
}

/// Runs `check` on every item across all cores and collects the failure messages.
pub fn par_failures<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Option<String> + Sync,
) -> Vec<String> {
    let threads = std::thread::available_parallelism()
        .map_or(4, |n| n.get())
        .min(items.len().max(1));
    let check = &check;
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                s.spawn(move || {
                    items
                        .iter()
                        .skip(t)
                        .step_by(threads)
                        .filter_map(check)
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    })
}
