//! Subnormal series of group shifts whose factors are full shifts on finite simple groups.
//!
//! The search keeps a code `φ: G → 𝒢^ℕ` with `ker φ = ker σ^ℓ` whose image has
//! the same limit degree as `G`, and shrinks the alphabet `𝒢` until either a
//! normal subshift of intermediate limit degree appears or `φ` is onto the full
//! shift on a simple group. The series is assembled recursively: split off the
//! finite head, divide by an intermediate normal subshift, decompose both parts
//! and pull the pieces back into the original alphabet.

use std::sync::Arc;

use crate::blocks::{BlockGroup, Word};
use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, GroupHom, Subgroup};
use crate::group_shift::GroupShift;
use crate::morphisms::{
    block_quotient, intersection, is_full_shift, is_normal_in, is_trivial, quotient, recode_1step,
    SlidingBlockCode,
};
use crate::sigma_topology::{
    head, identity_component, is_sigma_infinitesimal, nilpotency_index, orbit_count,
};

/// Which normal subgroup to split along when the final alphabet is not simple.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest nontrivial normal subgroup, lexicographic among equal orders.
    #[default]
    Forward,
    /// Largest proper normal subgroup, reverse lexicographic among equal orders.
    Reversed,
}

/// How many homomorphism extensions to inspect when shortening a certificate.
const UNSHIFT_SEARCH: usize = 64;

/// A code into a full shift satisfying the embedding conditions.
#[derive(Clone, Debug)]
pub struct EmbeddingState {
    pub alphabet: Arc<FiniteGroup>,
    /// `G → 𝒢^ℕ`.
    pub code: SlidingBlockCode,
    /// `ker(code) = ker σ^ell`.
    pub ell: usize,
    /// The image `φ(G)`, a 1-step shift over `𝒢`.
    pub image: GroupShift,
    /// `{b : (1, b) ∈ φ(G)[1]}`.
    pub follower: Subgroup,
    /// `{a : (a, 1) ∈ φ(G)[1]}`.
    pub predecessor: Subgroup,
    /// `follower ∩ predecessor`.
    pub meet: Subgroup,
    pub terminal: bool,
}

fn letters_of(block: &BlockGroup, pos: usize, other_is_identity: bool) -> Vec<u32> {
    let mut out: Vec<u32> = block
        .words()
        .iter()
        .filter(|w| !other_is_identity || w[1 - pos] == 0)
        .map(|w| w[pos])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl EmbeddingState {
    fn new(alphabet: Arc<FiniteGroup>, code: SlidingBlockCode, ell: usize) -> Result<Self> {
        let image = code.image()?;
        let x1 = image.blocks(1)?;
        let follower = alphabet.subgroup_from_elements(&letters_of(&x1, 1, true))?;
        let predecessor = alphabet.subgroup_from_elements(&letters_of(&x1, 0, true))?;
        let meet_els: Vec<u32> = follower
            .elements()
            .iter()
            .copied()
            .filter(|&x| predecessor.contains(x))
            .collect();
        let meet = alphabet.subgroup_from_elements(&meet_els)?;
        let second = letters_of(&x1, 1, false);
        let terminal = second.len() == alphabet.order() && meet.order() > 1;
        Ok(EmbeddingState {
            alphabet,
            code,
            ell,
            image,
            follower,
            predecessor,
            meet,
            terminal,
        })
    }

    /// Itemized failures of the three embedding conditions.
    pub fn check(&self, g: &GroupShift) -> Result<Vec<String>> {
        let mut problems = Vec::new();
        if self.image.blocks(0)?.order() != self.alphabet.order() {
            problems.push("image letters do not exhaust the alphabet".to_string());
        }
        let b0 = self.image.blocks(0)?.order() as u64;
        let b1 = self.image.blocks(1)?.order() as u64;
        if b1 / b0 != g.limit_degree() {
            problems.push(format!(
                "first kernel of the image is {} but the limit degree is {}",
                b1 / b0,
                g.limit_degree()
            ));
        }
        if !self.code.kernel()?.equals(&g.ker_sigma_power(self.ell)?)? {
            problems.push(format!(
                "kernel of the code differs from ker σ^{}",
                self.ell
            ));
        }
        Ok(problems)
    }
}

/// The embedding `G → G[n]^ℕ` through the width-1 recoding, with `ℓ = 0`.
pub fn standard_embedding(g: &GroupShift) -> Result<EmbeddingState> {
    let (recoded, code) = recode_1step(g)?;
    let alphabet = recoded.alphabet().clone();
    let code = code.retarget(&GroupShift::full_shift(alphabet.clone()))?;
    EmbeddingState::new(alphabet, code, 0)
}

/// One descent step, or the unchanged state when it is terminal.
pub fn descend(g: &GroupShift, st: &EmbeddingState) -> Result<EmbeddingState> {
    if st.terminal {
        return Ok(st.clone());
    }
    let alph = &st.alphabet;
    let x1 = st.image.blocks(1)?;
    let k = st.code.anticipation();
    let second = letters_of(&x1, 1, false);
    if second.len() < alph.order() {
        let sub = alph.subgroup_from_elements(&second)?;
        let (h, emb) = alph.subgroup_as_group(&sub)?;
        let h = Arc::new(h);
        let code = SlidingBlockCode::build(g, &GroupShift::full_shift(h.clone()), k + 1, |b| {
            let v = st.code.rule_at(&b[1..]).expect("suffix block");
            emb.binary_search(&v)
                .expect("second letter lies in the subgroup") as u32
        })?;
        return EmbeddingState::new(h, code, st.ell + 1);
    }
    if st.predecessor.order() == 1 {
        return Err(Error::Precondition("descent reached a finite shift".into()));
    }
    let (h, coset, pairs) = pair_quotient(alph, &x1, &st.predecessor, &st.follower)?;
    let h = Arc::new(h);
    let code = SlidingBlockCode::build(g, &GroupShift::full_shift(h.clone()), k + 1, |b| {
        let out = st.code.apply(b).expect("source block");
        coset[pairs.index_of(&out).expect("pair block")]
    })?;
    EmbeddingState::new(h, code, st.ell + 1)
}

/// `X[1] / (𝒢' × 𝒢₁)` and the coset index of every word of `X[1]`.
fn pair_quotient(
    alph: &FiniteGroup,
    x1: &BlockGroup,
    predecessor: &Subgroup,
    follower: &Subgroup,
) -> Result<(FiniteGroup, Vec<u32>, BlockGroup)> {
    let mut words: Vec<Word> = Vec::with_capacity(predecessor.order() * follower.order());
    for &a in predecessor.elements() {
        for &b in follower.elements() {
            words.push(vec![a, b]);
        }
    }
    let small = BlockGroup::from_words(alph, 2, words)?;
    let (h, coset) = block_quotient(alph, x1, &small)?;
    Ok((h, coset, x1.clone()))
}

/// The 2-block quotient code `g ↦ (φ(g)_i, φ(g)_{i+1}) mod (𝒢' × 𝒢₁)`.
fn pair_code(g: &GroupShift, st: &EmbeddingState) -> Result<SlidingBlockCode> {
    let x1 = st.image.blocks(1)?;
    let (h, coset, pairs) = pair_quotient(&st.alphabet, &x1, &st.predecessor, &st.follower)?;
    let h = Arc::new(h);
    SlidingBlockCode::build(
        g,
        &GroupShift::full_shift(h),
        st.code.anticipation() + 1,
        |b| {
            let out = st.code.apply(b).expect("source block");
            coset[pairs.index_of(&out).expect("pair block")]
        },
    )
}

/// Result of one factor search.
#[derive(Clone, Debug)]
pub enum Extraction {
    /// A normal subshift with `1 < ld(N) < ld(G)`.
    Middle(GroupShift),
    /// `code` maps onto the full shift on the simple group, with kernel `ker σ^ell`.
    Simple {
        group: Arc<FiniteGroup>,
        code: Box<SlidingBlockCode>,
        ell: usize,
    },
}

/// Runs the descent to a terminal state and classifies the outcome.
pub fn extract_factor(g: &GroupShift, tie: TieBreak) -> Result<Extraction> {
    if g.is_finite() {
        return Err(Error::Precondition(
            "factor extraction on a finite shift".into(),
        ));
    }
    let mut st = standard_embedding(g)?;
    let start = st.alphabet.order();
    for _ in 0..=start {
        if st.terminal {
            break;
        }
        let next = descend(g, &st)?;
        debug_assert!(next.alphabet.order() < st.alphabet.order());
        debug_assert!(next.check(g).map(|p| p.is_empty()).unwrap_or(false));
        st = next;
    }
    if !st.terminal {
        return Err(Error::Precondition("descent did not terminate".into()));
    }
    let ld = g.limit_degree();
    let n = pair_code(g, &st)?.kernel()?;
    if n.limit_degree() < ld {
        return Ok(Extraction::Middle(n));
    }
    if st.image.width() != 0 || st.image.window().order() != st.alphabet.order() {
        return Err(Error::Precondition(
            "terminal embedding is not onto the full shift".into(),
        ));
    }
    let alph = st.alphabet.clone();
    if alph.is_simple()? {
        let code = st.code.retarget(&GroupShift::full_shift(alph.clone()))?;
        return Ok(Extraction::Simple {
            group: alph,
            code: Box::new(code),
            ell: st.ell,
        });
    }
    let normals = alph.normal_subgroups();
    let proper: Vec<&Subgroup> = normals
        .iter()
        .filter(|s| s.order() > 1 && s.order() < alph.order())
        .collect();
    let chosen = match tie {
        TieBreak::Forward => proper.first(),
        TieBreak::Reversed => proper.last(),
    }
    .expect("non-simple group has a proper nontrivial normal subgroup");
    let sub = GroupShift::full_on_subgroup(alph.clone(), chosen.elements())?;
    let n = st.code.preimage(&sub)?;
    Ok(Extraction::Middle(n))
}

/// One step `G_i ⊇ G_{i+1}` of a series with its certificate.
#[derive(Clone, Debug)]
pub struct Factor {
    pub group: Arc<FiniteGroup>,
    /// `G_i → 𝒢_i^ℕ`, onto, with kernel `G_{i+1}`.
    pub certificate: SlidingBlockCode,
}

#[derive(Clone, Debug)]
pub struct DecompositionSeries {
    pub head: FiniteGroup,
    pub head_sigma: GroupHom,
    /// `G_1 ⊇ … ⊇ G_n`.
    pub chain: Vec<GroupShift>,
    /// `factors[i]` maps `chain[i]` onto a full shift with kernel `chain[i+1]`.
    pub factors: Vec<Factor>,
    pub tail_nilpotency: usize,
}

impl DecompositionSeries {
    /// `n`, the number of chain members.
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn tail(&self) -> &GroupShift {
        self.chain.last().expect("series has at least one member")
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().map(|f| f.group.order()).collect();
        v.sort_unstable();
        v
    }

    /// Structure tags of the factors, sorted.
    pub fn factor_tags(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .factors
            .iter()
            .map(|f| f.group.structure_tag())
            .collect();
        v.sort();
        v
    }
}

/// A chain starting at a σ-connected shift, without head data.
struct Piece {
    chain: Vec<GroupShift>,
    factors: Vec<Factor>,
}

/// Decomposes with the default tie-break.
pub fn decompose(g: &GroupShift) -> Result<DecompositionSeries> {
    decompose_with(g, TieBreak::Forward)
}

pub fn decompose_with(g: &GroupShift, tie: TieBreak) -> Result<DecompositionSeries> {
    let (h, h_sigma) = head(g)?;
    let sc = identity_component(g)?;
    let depth = prime_factor_count(g.limit_degree()) + 1;
    let piece = decompose_connected(&sc, tie, depth)?;
    let tail = piece.chain.last().expect("nonempty chain");
    let tail_nilpotency = nilpotency_index(tail)?;
    Ok(DecompositionSeries {
        head: h,
        head_sigma: h_sigma,
        chain: piece.chain,
        factors: piece.factors,
        tail_nilpotency,
    })
}

fn prime_factor_count(mut n: u64) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    count + usize::from(n > 1)
}

fn decompose_connected(s: &GroupShift, tie: TieBreak, depth: usize) -> Result<Piece> {
    assert!(
        depth > 0,
        "recursion deeper than the number of prime factors of the limit degree"
    );
    if s.is_finite() {
        return Ok(Piece {
            chain: vec![s.clone()],
            factors: Vec::new(),
        });
    }
    let mut piece = match extract_factor(s, tie)? {
        Extraction::Simple { group, code, .. } => {
            let tail = code.kernel()?;
            Piece {
                chain: vec![s.clone(), tail],
                factors: vec![Factor {
                    group,
                    certificate: *code,
                }],
            }
        }
        Extraction::Middle(n) => {
            let n = identity_component(&n)?;
            let q = quotient(s, &n)?;
            let upper = decompose_connected(&q.quotient, tie, depth - 1)?;
            let lower = decompose_connected(&n, tie, depth - 1)?;
            splice(s, &q.projection, upper, lower)?
        }
    };
    shorten(&mut piece)?;
    Ok(piece)
}

/// Pulls the quotient's chain back along `projection`, then appends the chain
/// of the kernel pulled back along `σ^r`, `r` the nilpotency index of the
/// quotient's tail.
fn splice(
    s: &GroupShift,
    projection: &SlidingBlockCode,
    upper: Piece,
    lower: Piece,
) -> Result<Piece> {
    let mut chain = Vec::new();
    let mut factors = Vec::new();
    for q in &upper.chain {
        chain.push(projection.preimage(q)?);
    }
    chain[0] = s.clone();
    for (i, f) in upper.factors.iter().enumerate() {
        let restricted = projection.restrict(&chain[i])?;
        let cert = restricted
            .compose(&f.certificate)?
            .with_minimal_anticipation();
        factors.push(Factor {
            group: f.group.clone(),
            certificate: cert,
        });
    }
    let r = nilpotency_index(upper.chain.last().expect("nonempty"))?;
    let gn = chain.last().expect("nonempty").clone();
    let pulled = splice_sigma(&gn, r, &lower)?;
    chain.pop();
    chain.extend(pulled.chain);
    factors.extend(pulled.factors);
    Ok(Piece { chain, factors })
}

/// `H_i = σ^{-r}(N_i) ∩ G_n` with certificates `χ_i ∘ σ^r`.
fn splice_sigma(gn: &GroupShift, r: usize, lower: &Piece) -> Result<Piece> {
    let mut chain = Vec::with_capacity(lower.chain.len());
    for n in &lower.chain {
        chain.push(GroupShift::sigma_preimage(n, gn, r)?);
    }
    chain[0] = gn.clone();
    let mut factors = Vec::with_capacity(lower.factors.len());
    for (i, f) in lower.factors.iter().enumerate() {
        let chi = &f.certificate;
        let k = chi.anticipation();
        let cert = SlidingBlockCode::build(&chain[i], chi.target(), k + r, |b| {
            chi.rule_at(&b[r..])
                .expect("σ^r lands in the kernel's series member")
        })?
        .with_minimal_anticipation();
        factors.push(Factor {
            group: f.group.clone(),
            certificate: cert,
        });
    }
    Ok(Piece { chain, factors })
}

/// Shortens certificates from the top down.
///
/// When `ψ_i` ignores its first coordinate it is replaced by a code `ψ'` with
/// `ψ' ∘ σ = ψ_i`, whose kernel `K` is smaller. The members below are then cut
/// down to `G_j ∩ K` and their certificates restricted; the restrictions stay
/// onto because limit degrees are unchanged by finite differences.
fn shorten(piece: &mut Piece) -> Result<()> {
    for i in 0..piece.factors.len() {
        let code = piece.factors[i]
            .certificate
            .fully_unshifted(UNSHIFT_SEARCH)?;
        let kernel = code.kernel()?;
        let current = &piece.chain[i + 1];
        let m = kernel.width().max(current.width());
        if kernel.blocks(m)?.order() >= current.blocks(m)?.order() {
            piece.factors[i].certificate = piece.factors[i].certificate.with_minimal_anticipation();
            continue;
        }
        piece.factors[i].certificate = code;
        piece.chain[i + 1] = kernel.clone();
        for j in i + 2..piece.chain.len() {
            piece.chain[j] = intersection(&piece.chain[j], &kernel)?;
        }
        for j in i + 1..piece.factors.len() {
            let c = piece.factors[j].certificate.restrict(&piece.chain[j])?;
            piece.factors[j].certificate = c;
        }
    }
    Ok(())
}

/// The series `Γ_1^ℕ ⊇ Γ_2^ℕ ⊇ … ⊇ 1` induced by a composition series of the alphabet.
pub fn series_from_composition(alphabet: Arc<FiniteGroup>) -> Result<DecompositionSeries> {
    let comp = alphabet.composition_series();
    let mut chain = Vec::with_capacity(comp.len());
    for sub in &comp {
        chain.push(GroupShift::full_on_subgroup(
            alphabet.clone(),
            sub.elements(),
        )?);
    }
    let mut factors = Vec::with_capacity(comp.len().saturating_sub(1));
    for i in 0..comp.len().saturating_sub(1) {
        let (big, emb) = alphabet.subgroup_as_group(&comp[i])?;
        let small_els: Vec<u32> = comp[i + 1]
            .elements()
            .iter()
            .map(|x| emb.binary_search(x).expect("nested") as u32)
            .collect();
        let small = big.subgroup_from_elements(&small_els)?;
        let (q, proj) = big.quotient_group(&small)?;
        let q = Arc::new(q);
        let cert = SlidingBlockCode::new(&chain[i], &GroupShift::full_shift(q.clone()), 0, |b| {
            proj.apply(emb.binary_search(&b[0]).expect("letter in subgroup") as u32)
        })?;
        factors.push(Factor {
            group: q,
            certificate: cert,
        });
    }
    let g = GroupShift::full_shift(alphabet);
    let (h, h_sigma) = head(&g)?;
    Ok(DecompositionSeries {
        head: h,
        head_sigma: h_sigma,
        chain,
        factors,
        tail_nilpotency: 0,
    })
}

/// An isomorphism `g → 𝒢^ℕ` together with its inverse, when one can be certified.
#[derive(Clone, Debug)]
pub struct FullShiftCertificate {
    pub letters: Arc<FiniteGroup>,
    pub forward: SlidingBlockCode,
    pub backward: SlidingBlockCode,
}

/// Recognizes `g` as a full shift up to isomorphism.
///
/// Succeeds when the canonical presentation is literally full, or when the
/// decomposition has trivial head and tail and a single factor. `None` means
/// no certificate was found, which for a non-simple letter group does not
/// rule out an isomorphism.
pub fn full_shift_certificate(g: &GroupShift) -> Result<Option<FullShiftCertificate>> {
    let forward = if let Some(letters) = is_full_shift(g) {
        let elems: Vec<u32> = g.window().words().iter().map(|w| w[0]).collect();
        let sub = g.alphabet().subgroup_from_elements(&elems)?;
        let (_, emb) = g.alphabet().subgroup_as_group(&sub)?;
        let target = GroupShift::full_shift(Arc::new(letters));
        SlidingBlockCode::new(g, &target, 0, |b| {
            emb.binary_search(&b[0]).expect("letter") as u32
        })?
    } else {
        if !crate::sigma_topology::is_sigma_connected(g)? {
            return Ok(None);
        }
        let s = decompose(g)?;
        if s.factors.len() != 1 || !is_trivial(s.tail()) {
            return Ok(None);
        }
        s.factors[0].certificate.clone()
    };
    let bound = g.width() + g.state_count();
    Ok(forward
        .inverse(bound)?
        .map(|backward| FullShiftCertificate {
            letters: forward.target_alphabet().clone(),
            forward,
            backward,
        }))
}

/// Outcome of [`verify_series`]; an empty failure list means every check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeriesVerdict {
    pub failures: Vec<String>,
}

impl SeriesVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every defining property of a series for `g`, collecting failures.
pub fn verify_series(g: &GroupShift, s: &DecompositionSeries) -> Result<SeriesVerdict> {
    let mut failures = Vec::new();
    if s.chain.is_empty() {
        failures.push("empty chain".to_string());
        return Ok(SeriesVerdict { failures });
    }
    if s.factors.len() + 1 != s.chain.len() {
        failures.push(format!(
            "{} factors for a chain of {} members",
            s.factors.len(),
            s.chain.len()
        ));
        return Ok(SeriesVerdict { failures });
    }
    if !s.chain[0].equals(&identity_component(g)?)? {
        failures.push("first member is not the σ-identity component".to_string());
    }
    for (i, pair) in s.chain.windows(2).enumerate() {
        if !pair[0].contains(&pair[1])? {
            failures.push(format!(
                "member {} does not contain member {}",
                i + 1,
                i + 2
            ));
        } else if !is_normal_in(&pair[1], &pair[0])? {
            failures.push(format!(
                "member {} is not normal in member {}",
                i + 2,
                i + 1
            ));
        }
    }
    for (i, f) in s.factors.iter().enumerate() {
        let c = &f.certificate;
        let label = format!("certificate {}", i + 1);
        if !c.source().equals(&s.chain[i])? {
            failures.push(format!("{label} has the wrong source"));
            continue;
        }
        if **c.target_alphabet() != *f.group {
            failures.push(format!("{label} targets a different alphabet"));
            continue;
        }
        for p in c.validate()? {
            failures.push(format!("{label}: {p}"));
        }
        if !c
            .image()?
            .equals(&GroupShift::full_shift(f.group.clone()))?
        {
            failures.push(format!("{label} is not onto the full shift"));
        }
        if !c.kernel()?.equals(&s.chain[i + 1])? {
            failures.push(format!(
                "{label} has kernel different from member {}",
                i + 2
            ));
        }
        if f.group.order() < 2 || !f.group.is_simple()? {
            failures.push(format!("factor group {} is not simple", i + 1));
        }
    }
    let tail = s.tail();
    if !is_sigma_infinitesimal(tail) {
        failures.push("tail is not σ-infinitesimal".to_string());
    } else if nilpotency_index(tail)? != s.tail_nilpotency {
        failures.push("tail nilpotency index does not match".to_string());
    }
    let (h, hs) = head(g)?;
    if !head_matches(&h, &hs, &s.head, &s.head_sigma)? {
        failures.push("head does not match".to_string());
    }
    let product: u64 = s.factors.iter().map(|f| f.group.order() as u64).product();
    if product != g.limit_degree() {
        failures.push(format!(
            "factor orders multiply to {product}, limit degree is {}",
            g.limit_degree()
        ));
    }
    Ok(SeriesVerdict { failures })
}

fn head_matches(a: &FiniteGroup, sa: &GroupHom, b: &FiniteGroup, sb: &GroupHom) -> Result<bool> {
    if a.order() != b.order() || orbit_count(sa) != orbit_count(sb) {
        return Ok(false);
    }
    if a == b && sa == sb {
        return Ok(true);
    }
    a.is_isomorphic(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub same_length: bool,
    pub same_first_member: bool,
    pub same_factors: bool,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.same_length && self.same_first_member && self.same_factors
    }
}

/// Compares two series for the same shift: length, `G_1`, and simple factors up to isomorphism.
pub fn uniqueness_report(
    a: &DecompositionSeries,
    b: &DecompositionSeries,
) -> Result<UniquenessReport> {
    let same_length = a.len() == b.len();
    let same_first_member = match (a.chain.first(), b.chain.first()) {
        (Some(x), Some(y)) => x.alphabet() == y.alphabet() && x.equals(y)?,
        _ => false,
    };
    let mut unmatched: Vec<&Arc<FiniteGroup>> = b.factors.iter().map(|f| &f.group).collect();
    let mut same_factors = a.factors.len() == b.factors.len();
    if same_factors {
        for f in &a.factors {
            let mut hit = None;
            for (j, g) in unmatched.iter().enumerate() {
                if f.group.is_isomorphic(g)? {
                    hit = Some(j);
                    break;
                }
            }
            match hit {
                Some(j) => {
                    unmatched.swap_remove(j);
                }
                None => {
                    same_factors = false;
                    break;
                }
            }
        }
    }
    Ok(UniquenessReport {
        same_length,
        same_first_member,
        same_factors,
    })
}
