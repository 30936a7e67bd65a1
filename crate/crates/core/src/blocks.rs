//! Sets of equal-length words over a finite group that form a subgroup of a direct power.
//!
//! These carry no Cayley table of their own; products are taken letter by
//! letter in the alphabet, so block groups far larger than a tabulated group
//! remain cheap to hold.

use std::collections::{HashMap, HashSet};

use crate::error::{check_budget, Error, Result};
use crate::finite_group::FiniteGroup;

pub type Word = Vec<u32>;

pub fn mul_words(g: &FiniteGroup, a: &[u32], b: &[u32]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect()
}

pub fn inv_word(g: &FiniteGroup, a: &[u32]) -> Word {
    a.iter().map(|&x| g.inv(x)).collect()
}

pub fn is_identity_word(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// A subgroup of `Γ^len`, held as a sorted list of words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockGroup {
    len: usize,
    words: Vec<Word>,
}

impl BlockGroup {
    /// Wraps words already known to form a subgroup.
    pub(crate) fn from_closed(len: usize, mut words: Vec<Word>) -> Self {
        words.sort_unstable();
        words.dedup();
        debug_assert!(words.first().is_some_and(|w| is_identity_word(w)));
        BlockGroup { len, words }
    }

    /// The trivial subgroup of `Γ^len`.
    pub fn trivial(len: usize) -> Self {
        BlockGroup {
            len,
            words: vec![vec![0; len]],
        }
    }

    /// All of `Γ^len`.
    pub fn full(g: &FiniteGroup, len: usize) -> Result<Self> {
        let size = (g.order() as u128)
            .checked_pow(len as u32)
            .unwrap_or(u128::MAX);
        check_budget("full block group", size)?;
        let mut words = vec![vec![]];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w: Word| {
                    (0..g.order() as u32).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        Ok(Self::from_closed(len, words))
    }

    /// The subgroup of `Γ^len` generated by `gens`.
    pub fn generated(g: &FiniteGroup, len: usize, gens: &[Word]) -> Result<Self> {
        for w in gens {
            if w.len() != len {
                return Err(Error::NotSubgroup(format!(
                    "generator {w:?} does not have length {len}"
                )));
            }
            if let Some(&x) = w.iter().find(|&&x| x as usize >= g.order()) {
                return Err(Error::IndexOutOfRange {
                    index: x as usize,
                    order: g.order(),
                });
            }
        }
        let gens: Vec<&Word> = gens.iter().filter(|w| !is_identity_word(w)).collect();
        let mut seen: HashSet<Word> = HashSet::new();
        let id = vec![0u32; len];
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for gw in &gens {
                let y = mul_words(g, &list[i], gw);
                if !seen.contains(&y) {
                    check_budget("block group", list.len() as u128 + 1)?;
                    seen.insert(y.clone());
                    list.push(y);
                }
            }
            i += 1;
        }
        Ok(Self::from_closed(len, list))
    }

    /// Validates that `words` is closed under multiplication, then wraps it.
    pub fn from_words(g: &FiniteGroup, len: usize, words: Vec<Word>) -> Result<Self> {
        let claimed = Self {
            len,
            words: {
                let mut w = words;
                w.sort_unstable();
                w.dedup();
                w
            },
        };
        let closed = Self::generated(g, len, &claimed.words)?;
        if closed != claimed {
            return Err(Error::NotSubgroup(format!(
                "{} words of length {len} are not closed under multiplication",
                claimed.words.len()
            )));
        }
        Ok(closed)
    }

    /// Word length.
    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &[u32]) -> bool {
        self.index_of(w).is_some()
    }

    pub fn index_of(&self, w: &[u32]) -> Option<usize> {
        self.words.binary_search_by(|x| x.as_slice().cmp(w)).ok()
    }

    pub fn is_subset_of(&self, other: &BlockGroup) -> bool {
        self.len == other.len && self.words.iter().all(|w| other.contains(w))
    }

    /// Image under the projection onto coordinates `from..to`.
    pub fn project(&self, from: usize, to: usize) -> BlockGroup {
        assert!(
            from <= to && to <= self.len,
            "projection range out of bounds"
        );
        let words = self.words.iter().map(|w| w[from..to].to_vec()).collect();
        Self::from_closed(to - from, words)
    }

    pub fn intersect(&self, other: &BlockGroup) -> BlockGroup {
        assert_eq!(
            self.len, other.len,
            "intersection of block groups of different lengths"
        );
        let words = self
            .words
            .iter()
            .filter(|w| other.contains(w))
            .cloned()
            .collect();
        Self::from_closed(self.len, words)
    }

    /// Words satisfying `keep`; the predicate must cut out a subgroup.
    pub(crate) fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> BlockGroup {
        let words = self.words.iter().filter(|w| keep(w)).cloned().collect();
        Self::from_closed(self.len, words)
    }

    /// A short generating set chosen greedily in word order.
    pub fn generators(&self, g: &FiniteGroup) -> Vec<Word> {
        let mut member: HashSet<&[u32]> = HashSet::new();
        let id = &self.words[0];
        member.insert(id);
        let mut current: Vec<Word> = vec![id.clone()];
        let mut gens: Vec<Word> = Vec::new();
        for w in &self.words {
            if current.len() == self.words.len() {
                break;
            }
            if member.contains(w.as_slice()) {
                continue;
            }
            gens.push(w.clone());
            let mut i = 0;
            while i < current.len() {
                for gw in &gens {
                    let y = mul_words(g, &current[i], gw);
                    if let Some(k) = self.index_of(&y) {
                        let stored = self.words[k].as_slice();
                        if member.insert(stored) {
                            current.push(y);
                        }
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Tabulates this block group as a finite group; word `i` becomes element `i`.
    pub fn as_group(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        let index: HashMap<&[u32], u32> = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_slice(), i as u32))
            .collect();
        let labels = self.words.iter().map(|w| word_label(g, w)).collect();
        FiniteGroup::from_fn(self.words.len(), Some(labels), |a, b| {
            index[mul_words(g, &self.words[a as usize], &self.words[b as usize]).as_slice()]
        })
    }
}

pub fn word_label(g: &FiniteGroup, w: &[u32]) -> String {
    if w.len() == 1 {
        return g.label(w[0]);
    }
    let parts: Vec<String> = w.iter().map(|&x| g.label(x)).collect();
    format!("[{}]", parts.join(" "))
}
