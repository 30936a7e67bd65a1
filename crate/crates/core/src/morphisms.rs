//! Sliding block codes between group shifts, and the constructions built on them:
//! images, kernels, preimages, quotients, products and intersections.

use std::collections::HashMap;
use std::sync::Arc;

use crate::blocks::{is_identity_word, mul_words, word_label, BlockGroup, Word};
use crate::error::{check_budget, Error, Result};
use crate::finite_group::FiniteGroup;
use crate::group_shift::{from_block_oracle, GroupShift};

/// A shift-commuting group homomorphism `x ↦ (rule(x_i … x_{i+k}))_i`.
#[derive(Clone, Debug)]
pub struct SlidingBlockCode {
    source: GroupShift,
    target: GroupShift,
    anticipation: usize,
    /// `source[k]`; `rule[j]` is the image of `domain.words()[j]`.
    domain: BlockGroup,
    rule: Vec<u32>,
}

impl SlidingBlockCode {
    /// Builds and validates a code from a rule on `source[k]`.
    pub fn new(
        source: &GroupShift,
        target: &GroupShift,
        anticipation: usize,
        rule: impl Fn(&[u32]) -> u32,
    ) -> Result<Self> {
        let code = Self::build(source, target, anticipation, rule)?;
        let problems = code.validate()?;
        if let Some(p) = problems.first() {
            return Err(Error::NotHomomorphism(p.clone()));
        }
        Ok(code)
    }

    /// Builds from an explicit table parallel to `source.blocks(k)`.
    pub fn from_table(
        source: &GroupShift,
        target: &GroupShift,
        anticipation: usize,
        table: Vec<u32>,
    ) -> Result<Self> {
        let domain = source.blocks(anticipation)?;
        if table.len() != domain.order() {
            return Err(Error::NotHomomorphism(format!(
                "rule table has {} entries for {} blocks",
                table.len(),
                domain.order()
            )));
        }
        let code = SlidingBlockCode {
            source: source.clone(),
            target: target.clone(),
            anticipation,
            domain,
            rule: table,
        };
        if let Some(p) = code.validate()?.first() {
            return Err(Error::NotHomomorphism(p.clone()));
        }
        Ok(code)
    }

    /// Builds without validation; callers guarantee the homomorphism property.
    pub(crate) fn build(
        source: &GroupShift,
        target: &GroupShift,
        anticipation: usize,
        rule: impl Fn(&[u32]) -> u32,
    ) -> Result<Self> {
        let domain = source.blocks(anticipation)?;
        let rule = domain.words().iter().map(|w| rule(w)).collect();
        Ok(SlidingBlockCode {
            source: source.clone(),
            target: target.clone(),
            anticipation,
            domain,
            rule,
        })
    }

    pub fn identity(shift: &GroupShift) -> Self {
        Self::build(shift, shift, 0, |b| b[0]).expect("letters fit the budget")
    }

    /// `σ^ℓ` as a code from a shift to itself.
    pub fn sigma_power(shift: &GroupShift, ell: usize) -> Result<Self> {
        Self::build(shift, shift, ell, |b| b[ell])
    }

    pub fn source(&self) -> &GroupShift {
        &self.source
    }

    pub fn target(&self) -> &GroupShift {
        &self.target
    }

    pub fn target_alphabet(&self) -> &Arc<FiniteGroup> {
        self.target.alphabet()
    }

    pub fn anticipation(&self) -> usize {
        self.anticipation
    }

    pub fn domain(&self) -> &BlockGroup {
        &self.domain
    }

    pub fn rule_table(&self) -> &[u32] {
        &self.rule
    }

    /// Image of a single `(k+1)`-block occurring in the source.
    pub fn rule_at(&self, block: &[u32]) -> Option<u32> {
        self.domain.index_of(block).map(|j| self.rule[j])
    }

    /// Applies the code to a source word of length at least `k + 1`.
    pub fn apply(&self, word: &[u32]) -> Result<Word> {
        let k = self.anticipation;
        if word.len() < k + 1 {
            return Err(Error::Precondition(format!(
                "word of length {} is shorter than the code window {}",
                word.len(),
                k + 1
            )));
        }
        word.windows(k + 1)
            .map(|b| {
                self.rule_at(b).ok_or_else(|| {
                    Error::NotContained(format!("block {b:?} does not occur in the source"))
                })
            })
            .collect()
    }

    /// Image words of all source blocks of length `i + k + 1`.
    pub fn image_blocks(&self, i: usize) -> Result<BlockGroup> {
        let src = self.source.blocks(i + self.anticipation)?;
        let words: Vec<Word> = src
            .words()
            .iter()
            .map(|b| self.apply(b))
            .collect::<Result<_>>()?;
        Ok(BlockGroup::from_closed(i + 1, words))
    }

    /// Itemized problems: failures of the homomorphism law or of landing in the target.
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut problems = Vec::new();
        let alph = self.source.alphabet();
        let tgt = self.target.alphabet();
        if self.rule.first().copied() != Some(0) {
            problems.push("rule does not send the identity block to the identity".to_string());
        }
        if let Some(&x) = self.rule.iter().find(|&&x| x as usize >= tgt.order()) {
            problems.push(format!("rule value {x} outside the target alphabet"));
            return Ok(problems);
        }
        let gens = self.domain.generators(alph);
        'outer: for (j, w) in self.domain.words().iter().enumerate() {
            for g in &gens {
                let prod = mul_words(alph, w, g);
                let lhs = self.rule_at(&prod).expect("domain is a group");
                let rhs = tgt.mul(self.rule[j], self.rule_at(g).expect("generator in domain"));
                if lhs != rhs {
                    problems.push(format!(
                        "rule is not multiplicative at block {w:?} times {g:?}"
                    ));
                    break 'outer;
                }
            }
        }
        let wt = self.target.width();
        let img = self.image_blocks(wt)?;
        if !img.is_subset_of(self.target.window()) {
            problems.push("image leaves the target shift".to_string());
        }
        Ok(problems)
    }

    /// `g ∘ self`. Anticipations add.
    pub fn compose(&self, g: &SlidingBlockCode) -> Result<SlidingBlockCode> {
        if *self.target.alphabet() != *g.source.alphabet() {
            return Err(Error::AlphabetMismatch(
                "composing codes over different alphabets".into(),
            ));
        }
        let k = self.anticipation + g.anticipation;
        let domain = self.source.blocks(k)?;
        let rule = domain
            .words()
            .iter()
            .map(|b| {
                let mid = self.apply(b)?;
                g.rule_at(&mid).ok_or_else(|| {
                    Error::NotContained("first code leaves the source of the second".into())
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(SlidingBlockCode {
            source: self.source.clone(),
            target: g.target.clone(),
            anticipation: k,
            domain,
            rule,
        })
    }

    /// The same rule on a subshift of the source.
    pub fn restrict(&self, sub: &GroupShift) -> Result<SlidingBlockCode> {
        if !self.source.contains(sub)? {
            return Err(Error::NotContained(
                "restriction to a shift outside the source".into(),
            ));
        }
        let domain = sub.blocks(self.anticipation)?;
        let rule = domain
            .words()
            .iter()
            .map(|b| self.rule_at(b).expect("sub-block occurs in source"))
            .collect();
        Ok(SlidingBlockCode {
            source: sub.clone(),
            target: self.target.clone(),
            anticipation: self.anticipation,
            domain,
            rule,
        })
    }

    /// The same map with a different target shift that still contains the image.
    pub fn retarget(&self, target: &GroupShift) -> Result<SlidingBlockCode> {
        let code = SlidingBlockCode {
            target: target.clone(),
            ..self.clone()
        };
        if code.validate()?.iter().any(|p| p.contains("target")) {
            return Err(Error::NotContained(
                "new target does not contain the image".into(),
            ));
        }
        Ok(code)
    }

    /// Drops trailing window coordinates the rule does not read.
    pub fn with_minimal_anticipation(&self) -> SlidingBlockCode {
        let mut code = self.clone();
        while code.anticipation > 0 {
            let k = code.anticipation;
            let ignores_last = code
                .domain
                .words()
                .iter()
                .zip(&code.rule)
                .all(|(w, &r)| !(w[..k].iter().all(|&x| x == 0)) || r == 0);
            if !ignores_last {
                break;
            }
            let domain = code.domain.project(0, k);
            let mut table = vec![u32::MAX; domain.order()];
            for (w, &r) in code.domain.words().iter().zip(&code.rule) {
                table[domain.index_of(&w[..k]).expect("prefix")] = r;
            }
            code.anticipation = k - 1;
            code.domain = domain;
            code.rule = table;
        }
        code
    }

    /// `ker(φ)`: source points all of whose output letters are the identity.
    pub fn kernel(&self) -> Result<GroupShift> {
        let k = self.anticipation;
        let m = self.source.width().max(k);
        let window = self
            .source
            .blocks(m)?
            .filter(|b| b.windows(k + 1).all(|w| self.rule_at(w) == Some(0)));
        GroupShift::from_window(self.source.alphabet().clone(), m, &window)
    }

    /// `φ(G)` inside the target alphabet's full shift.
    pub fn image(&self) -> Result<GroupShift> {
        let ker = self.kernel()?;
        let ld = self.source.limit_degree() / ker.limit_degree();
        from_block_oracle(self.target.alphabet().clone(), ld, |i| self.image_blocks(i))
    }

    /// `{x ∈ source : φ(x) ∈ sub}`.
    pub fn preimage(&self, sub: &GroupShift) -> Result<GroupShift> {
        if !self.target.contains(sub)? {
            return Err(Error::NotContained(
                "preimage of a shift outside the target".into(),
            ));
        }
        let k = self.anticipation;
        let s = sub.width();
        let m = self.source.width().max(k + s);
        let window = self.source.blocks(m)?.filter(|b| {
            let out = self.apply(b).expect("source block");
            out.windows(s + 1).all(|w| sub.window().contains(w))
        });
        GroupShift::from_window(self.source.alphabet().clone(), m, &window)
    }

    /// Replaces `φ` by `ψ` with `φ = ψ ∘ σ` when the rule ignores its first coordinate.
    ///
    /// `ψ` is pinned on `σ(G)[k-1]` and extended to `G[k-1]` by a homomorphism
    /// search. Among the extensions found, one with the smallest kernel is kept;
    /// kernels are compared by block counts at a common width. Since `ψ ∘ σ`
    /// restricts to `φ`, the new kernel lies inside the old one. Returns `None`
    /// when the rule reads its first coordinate or no extension exists.
    pub fn unshift(&self, max_extensions: usize) -> Result<Option<SlidingBlockCode>> {
        let k = self.anticipation;
        if k == 0 {
            return Ok(None);
        }
        let pinned = self
            .domain
            .words()
            .iter()
            .zip(&self.rule)
            .map(|(w, &r)| (w[1..].to_vec(), r));
        self.factor_through_sigma(pinned, k - 1, max_extensions)
    }

    /// Like [`Self::unshift`], but `ψ` keeps the anticipation `k` and reads one
    /// letter further ahead, so the rule only has to be determined by the
    /// following `k + 1` letters rather than ignore its first one.
    pub fn unshift_padded(&self, max_extensions: usize) -> Result<Option<SlidingBlockCode>> {
        let k = self.anticipation;
        let longer = self.source.blocks(k + 1)?;
        let pinned: Vec<(Word, u32)> = longer
            .words()
            .iter()
            .map(|w| {
                (
                    w[1..].to_vec(),
                    self.rule_at(&w[..=k]).expect("prefix block occurs"),
                )
            })
            .collect();
        self.factor_through_sigma(pinned.into_iter(), k, max_extensions)
    }

    /// Homomorphisms `ψ` on `G[k_new]` with prescribed values on `σ(G)[k_new]`,
    /// keeping one with the smallest kernel.
    fn factor_through_sigma(
        &self,
        values: impl Iterator<Item = (Word, u32)>,
        k_new: usize,
        max_extensions: usize,
    ) -> Result<Option<SlidingBlockCode>> {
        let alph = self.source.alphabet().clone();
        let tgt = self.target.alphabet().clone();
        let mut pinned: HashMap<Word, u32> = HashMap::new();
        for (tail, r) in values {
            match pinned.get(&tail) {
                Some(&v) if v != r => return Ok(None),
                Some(_) => {}
                None => {
                    pinned.insert(tail, r);
                }
            }
        }
        let full = self.source.blocks(k_new)?;
        let sub = BlockGroup::from_closed(k_new + 1, pinned.keys().cloned().collect());
        let sub_gens: Vec<(Word, u32)> = sub
            .generators(&alph)
            .into_iter()
            .map(|g| {
                let v = pinned[&g];
                (g, v)
            })
            .collect();
        let tables = extend_homomorphism(&alph, &tgt, &full, &sub, &sub_gens, max_extensions)?;
        let mut candidates = Vec::with_capacity(tables.len());
        for table in tables {
            let code = SlidingBlockCode {
                source: self.source.clone(),
                target: self.target.clone(),
                anticipation: k_new,
                domain: full.clone(),
                rule: table,
            };
            let ker = code.kernel()?;
            candidates.push((ker, code));
        }
        let m = candidates
            .iter()
            .map(|(ker, _)| ker.width())
            .max()
            .unwrap_or(0);
        let mut best: Option<(usize, SlidingBlockCode)> = None;
        for (ker, code) in candidates {
            let size = ker.blocks(m)?.order();
            if best.as_ref().is_none_or(|(s, _)| size < *s) {
                best = Some((size, code));
            }
        }
        Ok(best.map(|(_, c)| c))
    }

    /// Repeats [`Self::unshift`], falling back to [`Self::unshift_padded`],
    /// while the kernel keeps shrinking.
    pub fn fully_unshifted(&self, max_extensions: usize) -> Result<SlidingBlockCode> {
        let mut code = self.with_minimal_anticipation();
        loop {
            if let Some(next) = code.unshift(max_extensions)? {
                code = next.with_minimal_anticipation();
                continue;
            }
            let Some(next) = code.unshift_padded(max_extensions)? else {
                break;
            };
            let (old_k, new_k) = (code.kernel()?, next.kernel()?);
            let m = old_k.width().max(new_k.width());
            if new_k.blocks(m)?.order() >= old_k.blocks(m)?.order() {
                break;
            }
            code = next.with_minimal_anticipation();
        }
        Ok(code)
    }

    /// The inverse code of a bijection onto the target, with anticipation at
    /// most `max_anticipation`. `None` if the code is not a bijection or its
    /// inverse needs a longer window.
    pub fn inverse(&self, max_anticipation: usize) -> Result<Option<SlidingBlockCode>> {
        if !is_trivial(&self.kernel()?) || !self.image()?.equals(&self.target)? {
            return Ok(None);
        }
        let k = self.anticipation;
        'width: for a in 0..=max_anticipation {
            let mut first_letter: HashMap<Word, u32> = HashMap::new();
            for b in self.source.blocks(a + k)?.words() {
                let y = self.apply(b)?;
                match first_letter.get(&y) {
                    Some(&x) if x != b[0] => continue 'width,
                    Some(_) => {}
                    None => {
                        first_letter.insert(y, b[0]);
                    }
                }
            }
            let table: Option<Vec<u32>> = self
                .target
                .blocks(a)?
                .words()
                .iter()
                .map(|y| first_letter.get(y).copied())
                .collect();
            if let Some(table) = table {
                return SlidingBlockCode::from_table(&self.target, &self.source, a, table)
                    .map(Some);
            }
        }
        Ok(None)
    }
}

/// Homomorphisms `full → tgt` agreeing with the given generator values on `sub`.
///
/// Generators outside `sub` are added greedily; their images are tried in
/// index order, so extensions sending them to the identity come first.
fn extend_homomorphism(
    alph: &FiniteGroup,
    tgt: &FiniteGroup,
    full: &BlockGroup,
    sub: &BlockGroup,
    sub_gens: &[(Word, u32)],
    max_results: usize,
) -> Result<Vec<Vec<u32>>> {
    // Extra generators: greedy additions outside the growing subgroup.
    let mut extra: Vec<Word> = Vec::new();
    {
        let mut gens: Vec<Word> = sub_gens.iter().map(|(g, _)| g.clone()).collect();
        let mut current = sub.clone();
        for w in full.words() {
            if current.order() == full.order() {
                break;
            }
            if current.contains(w) {
                continue;
            }
            gens.push(w.clone());
            extra.push(w.clone());
            current = BlockGroup::generated(alph, full.word_len(), &gens)?;
        }
    }
    let mut results = Vec::new();
    let mut images: Vec<u32> = Vec::new();
    let mut steps = 0usize;
    search_extensions(
        alph,
        tgt,
        full,
        sub_gens,
        &extra,
        &mut images,
        &mut results,
        max_results,
        &mut steps,
    )?;
    Ok(results)
}

#[allow(clippy::too_many_arguments)]
fn search_extensions(
    alph: &FiniteGroup,
    tgt: &FiniteGroup,
    full: &BlockGroup,
    sub_gens: &[(Word, u32)],
    extra: &[Word],
    images: &mut Vec<u32>,
    results: &mut Vec<Vec<u32>>,
    max_results: usize,
    steps: &mut usize,
) -> Result<()> {
    if results.len() >= max_results {
        return Ok(());
    }
    let mut gens: Vec<(Word, u32)> = sub_gens.to_vec();
    gens.extend(extra.iter().cloned().zip(images.iter().copied()));
    let Some(table) = propagate(alph, tgt, full, &gens) else {
        return Ok(());
    };
    if images.len() == extra.len() {
        if table.iter().all(|&v| v != u32::MAX) {
            results.push(table);
        }
        return Ok(());
    }
    for y in 0..tgt.order() as u32 {
        *steps += 1;
        check_budget("homomorphism extension search", *steps as u128)?;
        images.push(y);
        search_extensions(
            alph,
            tgt,
            full,
            sub_gens,
            extra,
            images,
            results,
            max_results,
            steps,
        )?;
        images.pop();
        if results.len() >= max_results {
            break;
        }
    }
    Ok(())
}

/// Propagates generator images over the generated subgroup; `None` on a conflict.
fn propagate(
    alph: &FiniteGroup,
    tgt: &FiniteGroup,
    full: &BlockGroup,
    gens: &[(Word, u32)],
) -> Option<Vec<u32>> {
    let mut table = vec![u32::MAX; full.order()];
    table[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (g, v) in gens {
            let y = full
                .index_of(&mul_words(alph, &full.words()[x], g))
                .expect("closed");
            let val = tgt.mul(table[x], *v);
            match table[y] {
                u32::MAX => {
                    table[y] = val;
                    queue.push(y);
                }
                w if w != val => return None,
                _ => {}
            }
        }
        i += 1;
    }
    Some(table)
}

/// A quotient shift together with its projection code.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub quotient: GroupShift,
    pub projection: SlidingBlockCode,
}

/// Coset group `G[m] / N[m]` with minimal representatives and the coset map.
pub(crate) fn block_quotient(
    alph: &FiniteGroup,
    big: &BlockGroup,
    small: &BlockGroup,
) -> Result<(FiniteGroup, Vec<u32>)> {
    let mut coset = vec![u32::MAX; big.order()];
    let mut reps: Vec<usize> = Vec::new();
    for j in 0..big.order() {
        if coset[j] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(j);
        for m in small.words() {
            let y = big
                .index_of(&mul_words(alph, &big.words()[j], m))
                .ok_or_else(|| Error::NotContained("subgroup outside the block group".into()))?;
            coset[y] = id;
        }
    }
    check_budget("quotient alphabet", reps.len() as u128)?;
    let labels = reps
        .iter()
        .map(|&r| word_label(alph, &big.words()[r]))
        .collect();
    let q = FiniteGroup::from_fn(reps.len(), Some(labels), |a, b| {
        let prod = mul_words(
            alph,
            &big.words()[reps[a as usize]],
            &big.words()[reps[b as usize]],
        );
        coset[big.index_of(&prod).expect("closed")]
    })?;
    Ok((q, coset))
}

/// True iff `n` is normal in `g`, tested on blocks of length `width(n) + 1`.
pub fn is_normal_in(n: &GroupShift, g: &GroupShift) -> Result<bool> {
    if !g.contains(n)? {
        return Err(Error::NotContained(
            "normality test for a shift outside the ambient".into(),
        ));
    }
    let gb = g.blocks(n.width())?;
    Ok(block_normalizes(g.alphabet(), &gb, n.window()))
}

/// True iff conjugating `n` by every element of `g` stays in `n`; both of equal word length.
pub(crate) fn block_normalizes(alph: &FiniteGroup, g: &BlockGroup, n: &BlockGroup) -> bool {
    let ngens = n.generators(alph);
    g.generators(alph).iter().all(|x| {
        let xi: Word = x.iter().map(|&a| alph.inv(a)).collect();
        ngens
            .iter()
            .all(|y| n.contains(&mul_words(alph, &mul_words(alph, x, y), &xi)))
    })
}

/// `G / N` with the projection `x ↦ (x_i … x_{i+n} · N[n])_i`, `n` the width of `N`.
pub fn quotient(g: &GroupShift, n: &GroupShift) -> Result<QuotientPresentation> {
    if !is_normal_in(n, g)? {
        return Err(Error::NotNormal("quotient by a non-normal subshift".into()));
    }
    let m = n.width();
    let big = g.blocks(m)?;
    let (h, coset) = block_quotient(g.alphabet(), &big, n.window())?;
    let h = Arc::new(h);
    let full = GroupShift::full_shift(h.clone());
    let code =
        SlidingBlockCode::build(g, &full, m, |b| coset[big.index_of(b).expect("block of g")])?;
    let ld = g.limit_degree() / n.limit_degree();
    let q = from_block_oracle(h, ld, |i| code.image_blocks(i))?;
    let projection = SlidingBlockCode {
        target: q.clone(),
        ..code
    };
    Ok(QuotientPresentation {
        quotient: q,
        projection,
    })
}

/// `HN` for `H` normalizing `N`, both inside `ambient`.
pub fn product_subgroup(
    h: &GroupShift,
    n: &GroupShift,
    ambient: &GroupShift,
) -> Result<GroupShift> {
    if !ambient.contains(h)? || !ambient.contains(n)? {
        return Err(Error::NotContained(
            "product of shifts outside the ambient".into(),
        ));
    }
    let alph = ambient.alphabet();
    let w = n.width().max(h.width());
    if !block_normalizes(alph, &h.blocks(w)?, &n.blocks(w)?) {
        return Err(Error::NotNormal("H does not normalize N".into()));
    }
    let meet = intersection(h, n)?;
    let ld = h.limit_degree() * n.limit_degree() / meet.limit_degree();
    from_block_oracle(alph.clone(), ld, |i| {
        let hb = h.blocks(i)?;
        let nb = n.blocks(i)?;
        let mut gens = hb.generators(alph);
        gens.extend(nb.generators(alph));
        BlockGroup::generated(alph, i + 1, &gens)
    })
}

/// `H ∩ N`.
pub fn intersection(h: &GroupShift, n: &GroupShift) -> Result<GroupShift> {
    if *h.alphabet() != *n.alphabet() {
        return Err(Error::AlphabetMismatch(
            "intersection over different alphabets".into(),
        ));
    }
    let m = h.width().max(n.width());
    let window = h.blocks(m)?.intersect(&n.blocks(m)?);
    GroupShift::from_window(h.alphabet().clone(), m, &window)
}

/// The letter group `G[0]` when the canonical presentation is a full shift on it.
pub fn is_full_shift(g: &GroupShift) -> Option<FiniteGroup> {
    if g.width() != 0 {
        return None;
    }
    let letters: Vec<u32> = g.window().words().iter().map(|w| w[0]).collect();
    let alph = g.alphabet();
    if letters.len() == alph.order() {
        return Some((**alph).clone());
    }
    let sub = alph.subgroup_from_elements(&letters).ok()?;
    alph.subgroup_as_group(&sub).ok().map(|(grp, _)| grp)
}

/// Width-1 recoding on the alphabet `G[n]`, with the code `G → recoding`.
pub fn recode_1step(g: &GroupShift) -> Result<(GroupShift, SlidingBlockCode)> {
    let n = g.width();
    let letters = g.window().clone();
    let h = Arc::new(letters.as_group(g.alphabet())?);
    let next = g.blocks(n + 1)?;
    let words: Vec<Word> = next
        .words()
        .iter()
        .map(|b| {
            vec![
                letters.index_of(&b[..n + 1]).expect("prefix block") as u32,
                letters.index_of(&b[1..]).expect("suffix block") as u32,
            ]
        })
        .collect();
    let window = BlockGroup::from_closed(2, words);
    let recoded = GroupShift::from_window(h, 1, &window)?;
    let code = SlidingBlockCode::build(g, &recoded, n, |b| {
        letters.index_of(b).expect("block") as u32
    })?;
    Ok((recoded, code))
}

/// The inverse of [`recode_1step`]: read the first letter of each block.
pub fn decode_1step(recoded: &GroupShift, original: &GroupShift) -> Result<SlidingBlockCode> {
    let letters = original.window().clone();
    SlidingBlockCode::build(recoded, original, 0, |b| letters.words()[b[0] as usize][0])
}

/// The code `G → H^ℕ` reading letters through an alphabet homomorphism.
pub fn letter_code(
    g: &GroupShift,
    target: &GroupShift,
    hom: impl Fn(u32) -> u32,
) -> Result<SlidingBlockCode> {
    SlidingBlockCode::new(g, target, 0, |b| hom(b[0]))
}

/// True iff every window word is the identity, i.e. the shift has one point.
pub fn is_trivial(g: &GroupShift) -> bool {
    g.window().order() == 1 && is_identity_word(&g.window().words()[0])
}
