//! Two-sided group shifts and the star construction.
//!
//! A two-sided shift uses the same window data as a one-sided one; only the
//! trimming differs, removing states without successors or without
//! predecessors. The star of a one-sided shift keeps its window and reads it
//! on bi-infinite sequences.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::blocks::BlockGroup;
use crate::decomposition::{verify_series, DecompositionSeries};
use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, GroupHom};
use crate::group_shift::{GroupShift, Presentation, Trim};
use crate::morphisms::block_normalizes;

/// A closed shift-invariant subgroup of `Γ^ℤ` in canonical form.
#[derive(Clone, Debug)]
pub struct TwoSidedGroupShift {
    p: Presentation,
}

impl TwoSidedGroupShift {
    pub fn from_window(alphabet: Arc<FiniteGroup>, w: usize, window: &BlockGroup) -> Result<Self> {
        Ok(TwoSidedGroupShift {
            p: Presentation::new(alphabet, w, window, Trim::Both)?,
        })
    }

    pub fn full_shift(alphabet: Arc<FiniteGroup>) -> Self {
        let window = BlockGroup::full(&alphabet, 1).expect("alphabet fits the budget");
        Self::from_window(alphabet, 0, &window).expect("full window is valid")
    }

    pub fn alphabet(&self) -> &Arc<FiniteGroup> {
        &self.p.alphabet
    }

    pub fn width(&self) -> usize {
        self.p.width
    }

    pub fn window(&self) -> &BlockGroup {
        &self.p.window
    }

    pub fn states(&self) -> &BlockGroup {
        &self.p.states
    }

    pub fn state_count(&self) -> usize {
        self.p.states.order()
    }

    pub fn successors(&self, s: usize) -> &[(u32, u32)] {
        &self.p.succ[s]
    }

    pub fn identity_state(&self) -> usize {
        self.p.identity_state()
    }

    /// Length-`(i+1)` words occurring in bi-infinite points.
    pub fn blocks(&self, i: usize) -> Result<BlockGroup> {
        self.p.blocks(i)
    }

    pub fn limit_degree(&self) -> u64 {
        self.p.ld
    }

    pub fn periodic_count(&self, p: usize) -> BigUint {
        self.p.periodic_count(p)
    }

    /// True iff the shift is the single identity point.
    pub fn is_trivial(&self) -> bool {
        self.p.window.order() == 1
    }

    /// Number of points, for finite shifts.
    pub fn point_count(&self) -> Option<usize> {
        (self.p.ld == 1).then(|| self.state_count())
    }

    /// The letter group when the canonical presentation is a full shift on it.
    pub fn is_full(&self) -> Option<FiniteGroup> {
        if self.p.width != 0 {
            return None;
        }
        let letters: Vec<u32> = self.p.window.words().iter().map(|w| w[0]).collect();
        let alph = &self.p.alphabet;
        let sub = alph.subgroup_from_elements(&letters).ok()?;
        alph.subgroup_as_group(&sub).ok().map(|(g, _)| g)
    }

    fn check_alphabet(&self, other: &TwoSidedGroupShift) -> Result<()> {
        if *self.p.alphabet == *other.p.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(
                "two-sided shifts over different alphabets".into(),
            ))
        }
    }

    pub fn equals(&self, other: &TwoSidedGroupShift) -> Result<bool> {
        self.check_alphabet(other)?;
        Ok(self.p.key() == other.p.key())
    }

    pub fn contains(&self, small: &TwoSidedGroupShift) -> Result<bool> {
        self.check_alphabet(small)?;
        let m = self.width().max(small.width());
        Ok(small.blocks(m)?.is_subset_of(&self.blocks(m)?))
    }

    pub fn is_normal_in(&self, big: &TwoSidedGroupShift) -> Result<bool> {
        if !big.contains(self)? {
            return Err(Error::NotContained(
                "normality test for a shift outside the ambient".into(),
            ));
        }
        Ok(block_normalizes(
            &self.p.alphabet,
            &big.blocks(self.width())?,
            self.window(),
        ))
    }
}

/// `G*`: the same window read on bi-infinite sequences.
pub fn star(g: &GroupShift) -> TwoSidedGroupShift {
    TwoSidedGroupShift::from_window(g.alphabet().clone(), g.width(), g.window())
        .expect("a valid one-sided window is a valid two-sided window")
}

/// A sliding block homomorphism from a two-sided shift to a full two-sided shift.
#[derive(Clone, Debug)]
pub struct TwoSidedCode {
    source: TwoSidedGroupShift,
    target: Arc<FiniteGroup>,
    anticipation: usize,
    domain: BlockGroup,
    rule: Vec<u32>,
}

impl TwoSidedCode {
    /// The two-sided reading of a one-sided code, restricted to `source`.
    pub fn from_one_sided(
        code: &crate::morphisms::SlidingBlockCode,
        source: &TwoSidedGroupShift,
    ) -> Result<Self> {
        let k = code.anticipation();
        let domain = source.blocks(k)?;
        let rule = domain
            .words()
            .iter()
            .map(|b| {
                code.rule_at(b).ok_or_else(|| {
                    Error::NotContained("two-sided block outside the one-sided source".into())
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(TwoSidedCode {
            source: source.clone(),
            target: code.target_alphabet().clone(),
            anticipation: k,
            domain,
            rule,
        })
    }

    pub fn source(&self) -> &TwoSidedGroupShift {
        &self.source
    }

    pub fn target_alphabet(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn anticipation(&self) -> usize {
        self.anticipation
    }

    fn rule_at(&self, b: &[u32]) -> Option<u32> {
        self.domain.index_of(b).map(|j| self.rule[j])
    }

    /// Images of the source blocks of length `i + k + 1`.
    pub fn image_blocks(&self, i: usize) -> Result<BlockGroup> {
        let k = self.anticipation;
        let src = self.source.blocks(i + k)?;
        let words = src
            .words()
            .iter()
            .map(|b| {
                b.windows(k + 1)
                    .map(|w| self.rule_at(w).expect("source block"))
                    .collect()
            })
            .collect();
        Ok(BlockGroup::from_closed(i + 1, words))
    }

    pub fn kernel(&self) -> Result<TwoSidedGroupShift> {
        let k = self.anticipation;
        let m = self.source.width().max(k);
        let window = self
            .source
            .blocks(m)?
            .filter(|b| b.windows(k + 1).all(|w| self.rule_at(w) == Some(0)));
        TwoSidedGroupShift::from_window(self.source.alphabet().clone(), m, &window)
    }

    /// Onto the full shift: letters and letter pairs are all hit, and the
    /// limit degrees of source, kernel and `|target|` fit together.
    pub fn is_onto_full(&self) -> Result<bool> {
        let q = self.target.order();
        if self.image_blocks(0)?.order() != q || self.image_blocks(1)?.order() != q * q {
            return Ok(false);
        }
        let ker = self.kernel()?;
        Ok(self.source.limit_degree() == ker.limit_degree() * q as u64)
    }
}

#[derive(Clone, Debug)]
pub struct TwoSidedFactor {
    pub group: Arc<FiniteGroup>,
    pub certificate: TwoSidedCode,
}

/// The two-sided series obtained by starring each member of a one-sided series.
#[derive(Clone, Debug)]
pub struct StarSeries {
    pub head: FiniteGroup,
    pub head_sigma: GroupHom,
    /// `G_1* ⊇ … ⊇ G_n* = 1`.
    pub chain: Vec<TwoSidedGroupShift>,
    pub factors: Vec<TwoSidedFactor>,
}

impl StarSeries {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factors.iter().map(|f| f.group.order()).collect();
        v.sort_unstable();
        v
    }
}

/// Stars a verified one-sided series. The σ-infinitesimal tail stars to the
/// one-point shift, so it disappears from the two-sided series.
pub fn star_series(g: &GroupShift, s: &DecompositionSeries) -> Result<StarSeries> {
    let verdict = verify_series(g, s)?;
    if !verdict.passed() {
        return Err(Error::Precondition(format!(
            "starring an unverified series: {}",
            verdict.failures.join("; ")
        )));
    }
    let chain: Vec<TwoSidedGroupShift> = s.chain.iter().map(star).collect();
    let factors = s
        .factors
        .iter()
        .zip(&chain)
        .map(|(f, src)| {
            Ok(TwoSidedFactor {
                group: f.group.clone(),
                certificate: TwoSidedCode::from_one_sided(&f.certificate, src)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StarSeries {
        head: s.head.clone(),
        head_sigma: s.head_sigma.clone(),
        chain,
        factors,
    })
}

/// Checks a two-sided series: nesting, normality, certificates, simple factors
/// and the trivial last member. Returns itemized failures.
pub fn verify_star_series(s: &StarSeries) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    if s.chain.is_empty() || s.factors.len() + 1 != s.chain.len() {
        failures.push("chain and factor counts do not match".to_string());
        return Ok(failures);
    }
    for (i, pair) in s.chain.windows(2).enumerate() {
        if !pair[0].contains(&pair[1])? {
            failures.push(format!(
                "member {} does not contain member {}",
                i + 1,
                i + 2
            ));
        } else if !pair[1].is_normal_in(&pair[0])? {
            failures.push(format!(
                "member {} is not normal in member {}",
                i + 2,
                i + 1
            ));
        }
    }
    for (i, f) in s.factors.iter().enumerate() {
        if !f.certificate.kernel()?.equals(&s.chain[i + 1])? {
            failures.push(format!(
                "certificate {} has kernel different from member {}",
                i + 1,
                i + 2
            ));
        }
        if !f.certificate.is_onto_full()? {
            failures.push(format!("certificate {} is not onto the full shift", i + 1));
        }
        if !f.group.is_simple()? {
            failures.push(format!("factor group {} is not simple", i + 1));
        }
    }
    if !s.chain.last().expect("nonempty").is_trivial() {
        failures.push("last member is not trivial".to_string());
    }
    Ok(failures)
}
