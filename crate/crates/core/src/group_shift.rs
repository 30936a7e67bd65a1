//! One-sided group shifts held as trimmed, minimal-width window presentations.
//!
//! A shift over the alphabet `Γ` with window `W ≤ Γ^(w+1)` consists of all
//! sequences whose length-`(w+1)` blocks lie in `W`. The state graph has the
//! `w`-blocks as vertices and the window words as edges. Every shift is
//! normalized at construction: states without an outgoing edge are removed
//! until none remain, and the width is reduced to the first index at which the
//! kernel chain `|ker(G[i] → G[i-1])|` reaches its stable value.
//!
//! The follower chain is constant from index `w` on, because prefixing a block
//! with identity letters keeps it admissible (the all-identity block lies in
//! every window). So the chain never needs to be computed past `w + 1`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::blocks::{BlockGroup, Word};
use crate::error::{check_budget, Error, Result};
use crate::finite_group::FiniteGroup;

/// How the state graph is pruned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Trim {
    /// Remove states without successors (one-sided shifts).
    Forward,
    /// Remove states without successors or without predecessors (two-sided shifts).
    Both,
}

/// Canonical presentation data shared by one- and two-sided shifts.
#[derive(Clone, Debug)]
pub(crate) struct Presentation {
    pub(crate) alphabet: Arc<FiniteGroup>,
    pub(crate) width: usize,
    pub(crate) window: BlockGroup,
    /// `K_0 ..= K_{width+1}` with `K_0 = |G[0]|`.
    pub(crate) chain: Vec<u64>,
    pub(crate) ld: u64,
    /// States are the `width`-blocks; a single empty state when `width = 0`.
    pub(crate) states: BlockGroup,
    /// Outgoing edges of each state as `(window word index, target state)`.
    pub(crate) succ: Vec<Vec<(u32, u32)>>,
}

fn validate_window(alphabet: &FiniteGroup, w: usize, window: &BlockGroup) -> Result<()> {
    if window.word_len() != w + 1 {
        return Err(Error::NotSubgroup(format!(
            "window words have length {}, expected {}",
            window.word_len(),
            w + 1
        )));
    }
    for word in window.words() {
        if let Some(&x) = word.iter().find(|&&x| x as usize >= alphabet.order()) {
            return Err(Error::IndexOutOfRange {
                index: x as usize,
                order: alphabet.order(),
            });
        }
    }
    Ok(())
}

/// Removes dead states of the width-`w` graph and returns the surviving edges.
fn trim_edges(w: usize, window: &BlockGroup, mode: Trim) -> BlockGroup {
    if w == 0 {
        return window.clone();
    }
    let mut ids: HashMap<&[u32], usize> = HashMap::new();
    let mut edges = Vec::with_capacity(window.order());
    for word in window.words() {
        let n = ids.len();
        let s = *ids.entry(&word[..w]).or_insert(n);
        let n = ids.len();
        let t = *ids.entry(&word[1..]).or_insert(n);
        edges.push((s, t));
    }
    let n = ids.len();
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(s, t)) in edges.iter().enumerate() {
        out_deg[s] += 1;
        in_deg[t] += 1;
        incoming[t].push(e);
        outgoing[s].push(e);
    }
    let mut dead = vec![false; n];
    let mut edge_dead = vec![false; edges.len()];
    let mut queue: Vec<usize> = (0..n)
        .filter(|&v| out_deg[v] == 0 || (mode == Trim::Both && in_deg[v] == 0))
        .collect();
    for &v in &queue {
        dead[v] = true;
    }
    while let Some(v) = queue.pop() {
        for &e in incoming[v].iter().chain(&outgoing[v]) {
            if std::mem::replace(&mut edge_dead[e], true) {
                continue;
            }
            let (s, t) = edges[e];
            out_deg[s] -= 1;
            in_deg[t] -= 1;
            for u in [s, t] {
                if !dead[u] && (out_deg[u] == 0 || (mode == Trim::Both && in_deg[u] == 0)) {
                    dead[u] = true;
                    queue.push(u);
                }
            }
        }
    }
    let words = window
        .words()
        .iter()
        .zip(&edge_dead)
        .filter(|(_, &d)| !d)
        .map(|(w, _)| w.clone())
        .collect();
    BlockGroup::from_closed(w + 1, words)
}

/// Number of edges leaving the identity state of a width-`w` edge set.
fn identity_out_degree(w: usize, edges: &BlockGroup) -> u64 {
    edges
        .words()
        .iter()
        .filter(|e| e[..w].iter().all(|&x| x == 0))
        .count() as u64
}

impl Presentation {
    pub(crate) fn new(
        alphabet: Arc<FiniteGroup>,
        w: usize,
        window: &BlockGroup,
        mode: Trim,
    ) -> Result<Self> {
        validate_window(&alphabet, w, window)?;
        let trimmed = trim_edges(w, window, mode);
        let mut sizes = Vec::with_capacity(w + 2);
        let mut prev = 1u64;
        for i in 0..=w {
            let s = if i == w {
                trimmed.order() as u64
            } else {
                trimmed.project(0, i + 1).order() as u64
            };
            sizes.push(s / prev);
            prev = s;
        }
        let ld = identity_out_degree(w, &trimmed);
        sizes.push(ld);
        let n = sizes
            .iter()
            .position(|&k| k == ld)
            .expect("chain reaches its limit by index w");
        let canonical = if n == w {
            trimmed
        } else {
            trimmed.project(0, n + 1)
        };
        let mut chain = sizes[..=n].to_vec();
        chain.push(ld);
        Ok(Self::assemble(alphabet, n, canonical, chain, ld))
    }

    fn assemble(
        alphabet: Arc<FiniteGroup>,
        n: usize,
        window: BlockGroup,
        chain: Vec<u64>,
        ld: u64,
    ) -> Self {
        let states = if n == 0 {
            BlockGroup::trivial(0)
        } else {
            window.project(0, n)
        };
        let mut succ = vec![Vec::new(); states.order()];
        for (e, word) in window.words().iter().enumerate() {
            let (s, t) = if n == 0 {
                (0, 0)
            } else {
                (
                    states.index_of(&word[..n]).expect("prefix is a state"),
                    states
                        .index_of(&word[1..])
                        .expect("trimmed target is a state"),
                )
            };
            succ[s].push((e as u32, t as u32));
        }
        Presentation {
            alphabet,
            width: n,
            window,
            chain,
            ld,
            states,
            succ,
        }
    }

    /// The length-`(i+1)` words occurring in points.
    pub(crate) fn blocks(&self, i: usize) -> Result<BlockGroup> {
        let n = self.width;
        if i <= n {
            return Ok(if i == n {
                self.window.clone()
            } else {
                self.window.project(0, i + 1)
            });
        }
        let size = (self.window.order() as u128)
            .saturating_mul((self.ld as u128).saturating_pow((i - n) as u32));
        check_budget("block group", size)?;
        let mut words: Vec<Word> = self.window.words().to_vec();
        let mut state_of: Vec<u32> = self
            .window
            .words()
            .iter()
            .map(|w| {
                if n == 0 {
                    0
                } else {
                    self.states.index_of(&w[1..]).expect("state") as u32
                }
            })
            .collect();
        for _ in n..i {
            let mut next = Vec::with_capacity(words.len() * self.ld as usize);
            let mut next_state = Vec::with_capacity(next.capacity());
            for (w, &s) in words.iter().zip(&state_of) {
                for &(e, t) in &self.succ[s as usize] {
                    let mut v = w.clone();
                    v.push(
                        *self.window.words()[e as usize]
                            .last()
                            .expect("nonempty edge"),
                    );
                    next.push(v);
                    next_state.push(t);
                }
            }
            words = next;
            state_of = next_state;
        }
        Ok(BlockGroup::from_closed(i + 1, words))
    }

    pub(crate) fn identity_state(&self) -> usize {
        0
    }

    /// `|{x : σ^p x = x}|`, counted as closed walks of length `p`.
    pub(crate) fn periodic_count(&self, p: usize) -> BigUint {
        assert!(p >= 1, "period must be positive");
        let s = self.states.order();
        // Closed walks at the identity state.
        let mut cur = vec![BigUint::zero(); s];
        cur[0] = BigUint::one();
        for _ in 0..p {
            let mut next = vec![BigUint::zero(); s];
            for (u, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for &(_, t) in &self.succ[u] {
                    next[t as usize] += c;
                }
            }
            cur = next;
        }
        let at_identity = cur[0].clone();
        // Closed walks from any state form a coset of those at the identity, or none.
        let mut returning = 0u64;
        let mut reach = vec![false; s];
        let mut next = vec![false; s];
        for start in 0..s {
            reach.iter_mut().for_each(|x| *x = false);
            reach[start] = true;
            for _ in 0..p {
                next.iter_mut().for_each(|x| *x = false);
                for (u, &r) in reach.iter().enumerate() {
                    if r {
                        for &(_, t) in &self.succ[u] {
                            next[t as usize] = true;
                        }
                    }
                }
                std::mem::swap(&mut reach, &mut next);
            }
            if reach[start] {
                returning += 1;
            }
        }
        at_identity * BigUint::from(returning)
    }

    /// Canonical key: equal keys iff equal shifts over the same alphabet.
    pub(crate) fn key(&self) -> (usize, &[Word]) {
        (self.width, self.window.words())
    }
}

/// Builds a shift from exact block groups `B_0, B_1, …` whose limit degree is known.
///
/// The first index `i` with `|B_i| / |B_{i-1}| = target_ld` yields the window.
pub(crate) fn from_block_oracle(
    alphabet: Arc<FiniteGroup>,
    target_ld: u64,
    mut blocks: impl FnMut(usize) -> Result<BlockGroup>,
) -> Result<GroupShift> {
    let mut prev = 1u64;
    for i in 0.. {
        let b = blocks(i)?;
        let size = b.order() as u64;
        if !size.is_multiple_of(prev) {
            return Err(Error::Precondition(format!(
                "block group sizes {prev} and {size} are not nested"
            )));
        }
        let k = size / prev;
        if k == target_ld {
            return GroupShift::from_window(alphabet, i, &b);
        }
        if k < target_ld {
            return Err(Error::Precondition(format!(
                "kernel chain fell to {k} below the expected limit degree {target_ld}"
            )));
        }
        prev = size;
    }
    unreachable!("loop exits by return")
}

/// A one-sided group shift in canonical form.
#[derive(Clone, Debug)]
pub struct GroupShift {
    pub(crate) p: Presentation,
}

/// Sizes of the kernel chain together with derived quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelChainReport {
    /// `|ker(G[i] → G[i-1])|` for `i = 1..=width+1`.
    pub sizes: Vec<u64>,
    pub limit_degree: u64,
    pub minimal_step: usize,
    pub entropy_log: f64,
}

/// A point of a finite shift written as `preperiod · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EventuallyPeriodic {
    pub preperiod: Word,
    pub period: Word,
}

impl EventuallyPeriodic {
    /// Letter at position `i`.
    pub fn at(&self, i: usize) -> u32 {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }
}

impl GroupShift {
    /// The shift of all sequences whose `(w+1)`-blocks lie in `window`.
    pub fn from_window(alphabet: Arc<FiniteGroup>, w: usize, window: &BlockGroup) -> Result<Self> {
        Ok(GroupShift {
            p: Presentation::new(alphabet, w, window, Trim::Forward)?,
        })
    }

    /// Convenience constructor taking window generators.
    pub fn from_generators(alphabet: Arc<FiniteGroup>, w: usize, gens: &[Word]) -> Result<Self> {
        let window = BlockGroup::generated(&alphabet, w + 1, gens)?;
        Self::from_window(alphabet, w, &window)
    }

    /// The full shift `Γ^ℕ`.
    pub fn full_shift(alphabet: Arc<FiniteGroup>) -> Self {
        let window = BlockGroup::full(&alphabet, 1).expect("alphabet fits the budget");
        Self::from_window(alphabet, 0, &window).expect("full window is valid")
    }

    /// The full shift `H^ℕ` on a subgroup `H` of the alphabet, given by its elements.
    pub fn full_on_subgroup(alphabet: Arc<FiniteGroup>, elements: &[u32]) -> Result<Self> {
        let gens: Vec<Word> = elements.iter().map(|&x| vec![x]).collect();
        Self::from_generators(alphabet, 0, &gens)
    }

    /// The one-point shift.
    pub fn trivial(alphabet: Arc<FiniteGroup>) -> Self {
        Self::from_window(alphabet, 0, &BlockGroup::trivial(1)).expect("trivial window is valid")
    }

    pub fn alphabet(&self) -> &Arc<FiniteGroup> {
        &self.p.alphabet
    }

    /// Canonical width, equal to the minimal step.
    pub fn width(&self) -> usize {
        self.p.width
    }

    /// The canonical window `G[width]`.
    pub fn window(&self) -> &BlockGroup {
        &self.p.window
    }

    pub fn states(&self) -> &BlockGroup {
        &self.p.states
    }

    /// Outgoing edges of state `s` as `(window word index, target state)`.
    pub fn successors(&self, s: usize) -> &[(u32, u32)] {
        &self.p.succ[s]
    }

    pub fn state_count(&self) -> usize {
        self.p.states.order()
    }

    pub fn identity_state(&self) -> usize {
        self.p.identity_state()
    }

    /// `G[i]`, the length-`(i+1)` words occurring in points.
    pub fn blocks(&self, i: usize) -> Result<BlockGroup> {
        self.p.blocks(i)
    }

    pub fn kernel_chain(&self) -> KernelChainReport {
        KernelChainReport {
            sizes: self.p.chain[1..].to_vec(),
            limit_degree: self.p.ld,
            minimal_step: self.p.width,
            entropy_log: (self.p.ld as f64).ln(),
        }
    }

    /// Kernel sizes `|ker(G[i] → G[i-1])|` for `i = 1..=bound`, computed from block groups.
    pub fn kernel_sizes_upto(&self, bound: usize) -> Result<Vec<u64>> {
        let mut prev = self.blocks(0)?.order() as u64;
        let mut out = Vec::with_capacity(bound);
        for i in 1..=bound {
            let cur = self.blocks(i)?.order() as u64;
            out.push(cur / prev);
            prev = cur;
        }
        Ok(out)
    }

    pub fn limit_degree(&self) -> u64 {
        self.p.ld
    }

    pub fn entropy(&self) -> f64 {
        (self.p.ld as f64).ln()
    }

    pub fn minimal_step(&self) -> usize {
        self.p.width
    }

    pub fn is_finite(&self) -> bool {
        self.p.ld == 1
    }

    /// Every point of a finite shift.
    pub fn enumerate_finite(&self) -> Result<Vec<EventuallyPeriodic>> {
        if !self.is_finite() {
            return Err(Error::Precondition(
                "enumerating the points of an infinite shift".into(),
            ));
        }
        let n = self.p.width;
        let first_letter = |s: usize| -> u32 {
            if n == 0 {
                0
            } else {
                self.p.states.words()[s][0]
            }
        };
        let mut points = Vec::with_capacity(self.state_count());
        for start in 0..self.state_count() {
            let mut pos: HashMap<usize, usize> = HashMap::new();
            let mut seq = Vec::new();
            let mut s = start;
            while !pos.contains_key(&s) {
                pos.insert(s, seq.len());
                seq.push(s);
                s = self.p.succ[s][0].1 as usize;
            }
            let mu = pos[&s];
            let letters: Vec<u32> = seq.iter().map(|&v| first_letter(v)).collect();
            points.push(EventuallyPeriodic {
                preperiod: letters[..mu].to_vec(),
                period: letters[mu..].to_vec(),
            });
        }
        points.sort();
        Ok(points)
    }

    /// Number of points (`None` for infinite shifts).
    pub fn point_count(&self) -> Option<usize> {
        self.is_finite().then(|| self.state_count())
    }

    /// `|{x : σ^p x = x}|`.
    pub fn periodic_count(&self, p: usize) -> BigUint {
        self.p.periodic_count(p)
    }

    fn check_alphabet(&self, other: &GroupShift) -> Result<()> {
        if Arc::ptr_eq(&self.p.alphabet, &other.p.alphabet) || *self.p.alphabet == *other.p.alphabet
        {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(format!(
                "alphabets of order {} and {}",
                self.p.alphabet.order(),
                other.p.alphabet.order()
            )))
        }
    }

    /// Equality of shifts over the same alphabet.
    pub fn equals(&self, other: &GroupShift) -> Result<bool> {
        self.check_alphabet(other)?;
        Ok(self.p.key() == other.p.key())
    }

    /// True iff every point of `small` lies in `self`.
    pub fn contains(&self, small: &GroupShift) -> Result<bool> {
        self.check_alphabet(small)?;
        let m = self.width().max(small.width());
        Ok(small.blocks(m)?.is_subset_of(&self.blocks(m)?))
    }

    /// Hashable canonical form, consistent with [`Self::equals`] for a fixed alphabet.
    pub fn canonical_key(&self) -> (usize, Vec<Word>) {
        (self.p.width, self.p.window.words().to_vec())
    }

    /// `σ^i(G)`, whose blocks are suffix projections of `G[i+j]`.
    pub fn sigma_image(&self, i: usize) -> Result<GroupShift> {
        if i == 0 {
            return Ok(self.clone());
        }
        from_block_oracle(self.p.alphabet.clone(), self.p.ld, |j| {
            let b = self.blocks(i + j)?;
            Ok(b.project(i, i + j + 1))
        })
    }

    /// `ker σ^ℓ`: points whose letters from position `ℓ` on are all the identity.
    pub fn ker_sigma_power(&self, ell: usize) -> Result<GroupShift> {
        let m = self.width().max(ell);
        let window = self.blocks(m)?.filter(|b| b[ell..].iter().all(|&x| x == 0));
        GroupShift::from_window(self.p.alphabet.clone(), m, &window)
    }

    /// `{x ∈ ambient : σ^r(x) ∈ sub}`.
    pub fn sigma_preimage(sub: &GroupShift, ambient: &GroupShift, r: usize) -> Result<GroupShift> {
        if !ambient.contains(sub)? {
            return Err(Error::NotContained(
                "sigma preimage of a shift outside the ambient".into(),
            ));
        }
        let ws = sub.width();
        let m = ambient.width().max(r + ws);
        let window = ambient
            .blocks(m)?
            .filter(|b| (r..=m - ws).all(|j| sub.window().contains(&b[j..j + ws + 1])));
        GroupShift::from_window(ambient.p.alphabet.clone(), m, &window)
    }

    /// Smallest `ℓ ≤ bound` with `σ^ℓ(G) = σ^(ℓ+1)(G)`.
    pub fn image_stabilization(&self, bound: usize) -> Result<Option<usize>> {
        let mut cur = self.clone();
        for ell in 0..=bound {
            let next = cur.sigma_image(1)?;
            if next.equals(&cur)? {
                return Ok(Some(ell));
            }
            cur = next;
        }
        Ok(None)
    }
}
