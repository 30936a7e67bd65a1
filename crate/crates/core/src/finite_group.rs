//! Finite groups stored as Cayley tables over dense indices.
//!
//! Every group pins its identity to index 0. Subgroups are sorted index lists
//! together with a generating set, and homomorphisms are plain lookup tables.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{budget, check_budget, Error, Result};

/// Largest number of Cayley-table entries a group may allocate, as a multiple of the budget.
const TABLE_FACTOR: u128 = 16;

fn check_table(what: &str, order: usize) -> Result<()> {
    check_budget(what, order as u128)?;
    let entries = (order as u128) * (order as u128);
    if entries > TABLE_FACTOR * budget() as u128 {
        return Err(Error::Budget {
            what: format!("{what} (Cayley table entries)"),
            size: entries,
            limit: budget(),
        });
    }
    Ok(())
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a trusted multiplication rule whose identity is index 0.
    pub(crate) fn from_fn(
        order: usize,
        labels: Option<Vec<String>>,
        mut op: impl FnMut(u32, u32) -> u32,
    ) -> Result<Self> {
        check_table("group", order)?;
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order as u32 {
            for b in 0..order as u32 {
                mul.push(op(a, b));
            }
        }
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            inv[a] = row
                .iter()
                .position(|&x| x == 0)
                .ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?
                as u32;
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            labels,
        })
    }

    /// Builds a group from Cayley table rows, validating every group axiom.
    ///
    /// The identity may sit at any index; it is moved to index 0 and the
    /// remaining elements keep their relative order.
    pub fn from_table(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidTable(format!(
                    "{} labels for {} elements",
                    l.len(),
                    n
                )));
            }
        }
        check_table("group", n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    order: n,
                });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // Move the identity to index 0.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.remove(e);
        perm.insert(0, e);
        let mut pos = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let labels = labels.map(|l| perm.iter().map(|&o| l[o].clone()).collect());
        let g = Self::from_fn(n, labels, |a, b| {
            pos[rows[perm[a as usize]][perm[b as usize]]] as u32
        })?;
        if !g.check_axioms() {
            return Err(Error::InvalidTable("some element has no inverse".into()));
        }
        Ok(g)
    }

    /// The group with one element.
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group of order `n`, written additively.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(n, Some(labels), |a, b| (a + b) % n as u32)
            .expect("cyclic group within budget")
    }

    /// The direct product `a × b`; element `(x, y)` has index `x * |b| + y`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let nb = b.order as u32;
        let labels = (0..a.order as u32)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
            .collect();
        Self::from_fn(a.order * b.order, Some(labels), |p, q| {
            a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb)
        })
    }

    /// The direct power `g^k` in mixed-radix encoding (first coordinate most significant).
    pub fn direct_power(g: &FiniteGroup, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition(
                "direct power exponent must be positive".into(),
            ));
        }
        let size = (g.order as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        check_table("direct power", size.min(usize::MAX as u128) as usize)?;
        let n = size as usize;
        let m = g.order as u32;
        Self::from_fn(n, None, |a, b| {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut scale = 1u32;
            for _ in 0..k {
                out += g.mul(a % m, b % m) * scale;
                a /= m;
                b /= m;
                scale = scale.wrapping_mul(m);
            }
            out
        })
    }

    /// The group generated by permutations of `0..degree` given as image lists.
    ///
    /// Elements are sorted lexicographically by their image lists, so the
    /// identity permutation is index 0. Multiplication is composition with
    /// the right factor applied first.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for p in generators {
            let mut seen = vec![false; degree];
            if p.len() != degree
                || p.iter()
                    .any(|&x| x >= degree || std::mem::replace(&mut seen[x], true))
            {
                return Err(Error::InvalidTable(format!(
                    "{p:?} is not a permutation of 0..{degree}"
                )));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if !seen.contains(&y) {
                    check_budget("permutation group", seen.len() as u128 + 1)?;
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index: HashMap<&[usize], u32> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        Self::from_fn(elems.len(), Some(labels), |a, b| {
            let (pa, pb) = (&elems[a as usize], &elems[b as usize]);
            let c: Vec<usize> = pb.iter().map(|&i| pa[i]).collect();
            index[c.as_slice()]
        })
    }

    /// The symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial());
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(n, &[swap, cycle])
    }

    /// The alternating group on `n ≥ 3` points, generated by 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize) -> Result<Self> {
        if n < 3 {
            return Ok(Self::trivial());
        }
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        Self::from_permutations(n, &gens)
    }

    /// The dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Self::product(&Self::cyclic(2), &Self::cyclic(n.max(1)));
        }
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[rot, refl])
    }

    /// The quaternion group of order 8, as permutations of its regular action.
    pub fn quaternion() -> Result<Self> {
        // Elements ±1, ±i, ±j, ±k encoded 0..8 as (sign, unit); left multiplication by i and j.
        let q = |s: usize, u: usize| s * 4 + u;
        // unit products: table[u][v] = (sign, unit) for unit_u * unit_v with units 1,i,j,k.
        let t = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let left = |u: usize| -> Vec<usize> {
            (0..8)
                .map(|x| {
                    let (s, v) = (x / 4, x % 4);
                    let (s2, w) = t[u][v];
                    q((s + s2) % 2, w)
                })
                .collect()
        };
        Self::from_permutations(8, &[left(1), left(2)])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Name of element `a`, falling back to its index.
    pub fn label(&self, a: u32) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable("label count differs from order".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Multiplication table rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| {
                self.mul[a * self.order..(a + 1) * self.order]
                    .iter()
                    .map(|&x| x as usize)
                    .collect()
            })
            .collect()
    }

    /// Checks associativity, the identity law and inverses exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.order as u32;
        (0..n).all(|g| self.mul(0, g) == g && self.mul(g, 0) == g && self.mul(g, self.inv(g)) == 0)
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = self.mul(a, b);
                    (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
                })
            })
    }

    pub fn power(&self, a: u32, k: u64) -> u32 {
        let mut acc = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order as u32;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    fn check_indices(&self, xs: &[u32]) -> Result<()> {
        match xs.iter().find(|&&x| x as usize >= self.order) {
            Some(&x) => Err(Error::IndexOutOfRange {
                index: x as usize,
                order: self.order,
            }),
            None => Ok(()),
        }
    }

    /// The smallest subgroup containing `generators`.
    pub fn closure(&self, generators: &[u32]) -> Result<Subgroup> {
        self.check_indices(generators)?;
        let gens: Vec<u32> = {
            let mut g: Vec<u32> = generators.iter().copied().filter(|&x| x != 0).collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0u32];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        Ok(Subgroup {
            parent_order: self.order,
            generators: gens,
            elements: elems,
        })
    }

    pub fn whole(&self) -> Subgroup {
        let elements: Vec<u32> = (0..self.order as u32).collect();
        let gens = self.small_generating_set(&elements);
        Subgroup {
            parent_order: self.order,
            generators: gens,
            elements,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent_order: self.order,
            generators: vec![],
            elements: vec![0],
        }
    }

    /// A greedy generating set for the subgroup with the given (closed) element list.
    pub fn small_generating_set(&self, elements: &[u32]) -> Vec<u32> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut current = vec![0u32];
        let mut gens = Vec::new();
        // Prefer elements of large order so the greedy set stays short.
        let mut cands: Vec<u32> = elements.to_vec();
        cands.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for &c in &cands {
            if member[c as usize] {
                continue;
            }
            gens.push(c);
            let mut i = 0;
            while i < current.len() {
                let x = current[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !member[y as usize] {
                        member[y as usize] = true;
                        current.push(y);
                    }
                }
                i += 1;
            }
            if current.len() == elements.len() {
                break;
            }
        }
        gens.sort_unstable();
        gens
    }

    /// Builds a subgroup record from a closed element list.
    pub fn subgroup_from_elements(&self, elements: &[u32]) -> Result<Subgroup> {
        self.check_indices(elements)?;
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        let gens = self.small_generating_set(&els);
        let sub = self.closure(&gens)?;
        if sub.elements != els {
            return Err(Error::NotSubgroup(format!(
                "{} listed elements do not form a subgroup",
                els.len()
            )));
        }
        Ok(sub)
    }

    /// True iff `g n g⁻¹ ⊆ n` for every `g ∈ within`.
    pub fn is_normal(&self, n: &Subgroup, within: &Subgroup) -> Result<bool> {
        if !n.elements.iter().all(|&x| within.contains(x)) {
            return Err(Error::NotContained(
                "subgroup is not inside the ambient subgroup".into(),
            ));
        }
        Ok(within.generators.iter().all(|&g| {
            n.generators
                .iter()
                .all(|&x| n.contains(self.conjugate(g, x)))
        }))
    }

    /// The coset group `self / n` with canonical minimal representatives, and its projection.
    pub fn quotient_group(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_normal(n, &self.whole())? {
            return Err(Error::NotNormal("quotient by a non-normal subgroup".into()));
        }
        let mut coset = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order as u32 {
            if coset[x as usize] == u32::MAX {
                let id = reps.len() as u32;
                reps.push(x);
                for &m in &n.elements {
                    coset[self.mul(x, m) as usize] = id;
                }
            }
        }
        let labels = reps.iter().map(|&r| self.label(r)).collect();
        let q = FiniteGroup::from_fn(reps.len(), Some(labels), |a, b| {
            coset[self.mul(reps[a as usize], reps[b as usize]) as usize]
        })?;
        let hom = GroupHom {
            source_order: self.order,
            target_order: q.order,
            image_table: coset,
        };
        Ok((q, hom))
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[u32]) -> Result<Subgroup> {
        self.check_indices(set)?;
        let mut gens = BTreeSet::new();
        for &s in set {
            for g in 0..self.order as u32 {
                gens.insert(self.conjugate(g, s));
            }
        }
        let sub = self.closure(&gens.into_iter().collect::<Vec<_>>())?;
        let gens = self.small_generating_set(&sub.elements);
        Ok(Subgroup {
            generators: gens,
            ..sub
        })
    }

    /// All normal subgroups sorted by order, then by element list.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<(usize, Vec<u32>)> = BTreeSet::new();
        let mut by_key: HashMap<Vec<u32>, Subgroup> = HashMap::new();
        let mut atoms: Vec<Subgroup> = Vec::new();
        let mut covered = vec![false; self.order];
        let conj_class = |x: u32| -> Vec<u32> {
            let mut c: Vec<u32> = (0..self.order as u32)
                .map(|g| self.conjugate(g, x))
                .collect();
            c.sort_unstable();
            c.dedup();
            c
        };
        for x in 0..self.order as u32 {
            if covered[x as usize] {
                continue;
            }
            for y in conj_class(x) {
                covered[y as usize] = true;
            }
            let s = self.normal_closure(&[x]).expect("indices in range");
            if !by_key.contains_key(&s.elements) {
                found.insert((s.order(), s.elements.clone()));
                by_key.insert(s.elements.clone(), s.clone());
                atoms.push(s);
            }
        }
        let mut frontier: Vec<Subgroup> = by_key.values().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &atoms {
                    if b.elements.iter().all(|&x| a.contains(x)) {
                        continue;
                    }
                    let mut gens = a.generators.clone();
                    gens.extend_from_slice(&b.generators);
                    let j = self.closure(&gens).expect("indices in range");
                    if !by_key.contains_key(&j.elements) {
                        let gens = self.small_generating_set(&j.elements);
                        let j = Subgroup {
                            generators: gens,
                            ..j
                        };
                        found.insert((j.order(), j.elements.clone()));
                        by_key.insert(j.elements.clone(), j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        found
            .into_iter()
            .map(|(_, e)| by_key.remove(&e).expect("recorded"))
            .collect()
    }

    /// True iff the group is simple. The trivial group is rejected.
    pub fn is_simple(&self) -> Result<bool> {
        if self.order < 2 {
            return Err(Error::Precondition(
                "simplicity of the trivial group".into(),
            ));
        }
        for x in 1..self.order as u32 {
            if self.normal_closure(&[x])?.order() != self.order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A subgroup re-indexed as a group in its own right, with its embedding.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> Result<(FiniteGroup, Vec<u32>)> {
        let els = sub.elements.clone();
        let pos: HashMap<u32, u32> = els
            .iter()
            .enumerate()
            .map(|(i, &x)| (x, i as u32))
            .collect();
        let labels = els.iter().map(|&x| self.label(x)).collect();
        let g = FiniteGroup::from_fn(els.len(), Some(labels), |a, b| {
            pos[&self.mul(els[a as usize], els[b as usize])]
        })?;
        Ok((g, els))
    }

    /// Normal subgroups of `sub` (as a group in its own right), in parent indices.
    pub fn normal_subgroups_of(&self, sub: &Subgroup) -> Result<Vec<Subgroup>> {
        let (h, emb) = self.subgroup_as_group(sub)?;
        h.normal_subgroups()
            .into_iter()
            .map(|n| {
                let els: Vec<u32> = n.elements.iter().map(|&x| emb[x as usize]).collect();
                self.subgroup_from_elements(&els)
            })
            .collect()
    }

    /// Maximal-normal descent from the whole group to the trivial subgroup.
    ///
    /// At each step the smallest maximal normal subgroup is chosen, ties broken
    /// by the lexicographically smallest element list.
    pub fn composition_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let cur = series.last().expect("nonempty").clone();
            if cur.order() == 1 {
                break;
            }
            let ns = self.normal_subgroups_of(&cur).expect("subgroup of self");
            let proper: Vec<&Subgroup> = ns.iter().filter(|n| n.order() < cur.order()).collect();
            let maximal = proper
                .iter()
                .filter(|n| {
                    !proper
                        .iter()
                        .any(|m| m.order() > n.order() && n.elements.iter().all(|&x| m.contains(x)))
                })
                .min_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)))
                .expect("trivial subgroup is proper");
            series.push((*maximal).clone());
        }
        series
    }

    /// Orders of the composition factors, following [`Self::composition_series`].
    pub fn composition_factor_orders(&self) -> Vec<usize> {
        self.composition_series()
            .windows(2)
            .map(|w| w[0].order() / w[1].order())
            .collect()
    }

    /// Histogram of element orders, a cheap isomorphism invariant.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut h: HashMap<usize, usize> = HashMap::new();
        for a in 0..self.order as u32 {
            *h.entry(self.element_order(a)).or_default() += 1;
        }
        let mut v: Vec<_> = h.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Invariant factors of the abelianization, smallest first, each dividing the next.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        let commutators: Vec<u32> = (0..self.order as u32)
            .flat_map(|a| (0..self.order as u32).map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect();
        let derived = self.normal_closure(&commutators).expect("indices in range");
        let (ab, _) = self
            .quotient_group(&derived)
            .expect("derived subgroup is normal");
        abelian_invariant_factors(&ab)
    }

    /// Searches for an isomorphism `self → other`; `None` when none exists.
    ///
    /// Gives up with a budget error once the search visits more candidate
    /// assignments than the element budget allows.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Result<Option<GroupHom>> {
        if self.order != other.order || self.order_statistics() != other.order_statistics() {
            return Ok(None);
        }
        if self.is_abelian() != other.is_abelian() {
            return Ok(None);
        }
        let gens = self.small_generating_set(&(0..self.order as u32).collect::<Vec<_>>());
        let cands: Vec<Vec<u32>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..other.order as u32)
                    .filter(|&y| other.element_order(y) == o)
                    .collect()
            })
            .collect();
        let mut images = Vec::with_capacity(gens.len());
        let mut steps = 0usize;
        let found = self.iso_search(other, &gens, &cands, &mut images, &mut steps)?;
        Ok(found.map(|table| GroupHom {
            source_order: self.order,
            target_order: other.order,
            image_table: table,
        }))
    }

    fn iso_search(
        &self,
        other: &FiniteGroup,
        gens: &[u32],
        cands: &[Vec<u32>],
        images: &mut Vec<u32>,
        steps: &mut usize,
    ) -> Result<Option<Vec<u32>>> {
        let k = images.len();
        if k == gens.len() {
            let map = self.extend_hom(other, gens, images);
            return Ok(map.filter(|m| {
                let mut seen = vec![false; other.order];
                m.iter()
                    .all(|&y| y != u32::MAX && !std::mem::replace(&mut seen[y as usize], true))
            }));
        }
        for &c in &cands[k] {
            *steps += 1;
            check_budget("isomorphism search", *steps as u128)?;
            images.push(c);
            if self.extend_hom(other, &gens[..=k], images).is_some() {
                if let Some(m) = self.iso_search(other, gens, cands, images, steps)? {
                    return Ok(Some(m));
                }
            }
            images.pop();
        }
        Ok(None)
    }

    /// Extends generator images to a homomorphism on the generated subgroup, if consistent.
    fn extend_hom(&self, other: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
        let mut map = vec![u32::MAX; self.order];
        map[0] = 0;
        let mut queue = vec![0u32];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&g, &y) in gens.iter().zip(images) {
                let xg = self.mul(x, g);
                let v = other.mul(map[x as usize], y);
                match map[xg as usize] {
                    u32::MAX => {
                        map[xg as usize] = v;
                        queue.push(xg);
                    }
                    w if w != v => return None,
                    _ => {}
                }
            }
            i += 1;
        }
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> Result<bool> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// A short structural name: `C<n>` for cyclic, `A5` for the order-60 simple group,
    /// otherwise `G<order>`.
    pub fn structure_tag(&self) -> String {
        if self.order == 1 {
            return "1".into();
        }
        if (0..self.order as u32).any(|a| self.element_order(a) == self.order) {
            return format!("C{}", self.order);
        }
        if self.is_abelian() {
            let inv = abelian_invariant_factors(self);
            return inv
                .iter()
                .map(|d| format!("C{d}"))
                .collect::<Vec<_>>()
                .join("x");
        }
        if self.order == 60 && self.is_simple().unwrap_or(false) {
            return "A5".into();
        }
        if self.order == 6 {
            return "S3".into();
        }
        format!("G{}", self.order)
    }
}

fn abelian_invariant_factors(ab: &FiniteGroup) -> Vec<usize> {
    // For each prime p, the p-part is determined by counts of elements of order dividing p^k.
    let n = ab.order();
    if n == 1 {
        return vec![];
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // elementary divisors per prime
    let mut elementary: Vec<Vec<usize>> = Vec::new();
    for &p in &primes {
        let mut counts = Vec::new(); // counts[k] = #{x : x^(p^k) = 1}
        let mut pk = 1u64;
        loop {
            let c = (0..n as u32).filter(|&x| ab.power(x, pk) == 0).count();
            counts.push(c);
            if counts.len() > 1 && c == counts[counts.len() - 2] {
                break;
            }
            pk *= p as u64;
        }
        // number of cyclic factors of order ≥ p^k is log_p(counts[k]/counts[k-1])
        let logp = |x: usize| -> usize {
            let mut x = x;
            let mut e = 0;
            while x > 1 {
                x /= p;
                e += 1;
            }
            e
        };
        let ge: Vec<usize> = (1..counts.len())
            .map(|k| logp(counts[k] / counts[k - 1]))
            .collect();
        let mut divs = Vec::new();
        for k in 0..ge.len() {
            let exactly = ge[k] - ge.get(k + 1).copied().unwrap_or(0);
            for _ in 0..exactly {
                divs.push(p.pow(k as u32 + 1));
            }
        }
        divs.sort_unstable_by(|a, b| b.cmp(a));
        elementary.push(divs);
    }
    let len = elementary.iter().map(|d| d.len()).max().unwrap_or(0);
    let mut inv: Vec<usize> = (0..len)
        .map(|i| {
            elementary
                .iter()
                .map(|d| d.get(i).copied().unwrap_or(1))
                .product()
        })
        .collect();
    inv.reverse();
    inv
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&x.to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// A subgroup of a finite group: a generating set and the sorted element list it closes to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    generators: Vec<u32>,
    elements: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// A homomorphism between finite groups, stored as an image table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source_order: usize,
    target_order: usize,
    image_table: Vec<u32>,
}

impl GroupHom {
    /// Validates `table` as a homomorphism `source → target`.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, table: Vec<u32>) -> Result<Self> {
        if table.len() != source.order() {
            return Err(Error::NotHomomorphism(
                "table length differs from source order".into(),
            ));
        }
        target.check_indices(&table)?;
        let gens = source.whole().generators;
        for a in 0..source.order() as u32 {
            for &g in &gens {
                if table[source.mul(a, g) as usize]
                    != target.mul(table[a as usize], table[g as usize])
                {
                    return Err(Error::NotHomomorphism(format!("fails at ({a},{g})")));
                }
            }
        }
        if table[0] != 0 {
            return Err(Error::NotHomomorphism("identity not preserved".into()));
        }
        Ok(GroupHom {
            source_order: source.order(),
            target_order: target.order(),
            image_table: table,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source_order: g.order(),
            target_order: g.order(),
            image_table: (0..g.order() as u32).collect(),
        }
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.image_table[x as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.image_table
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            source_order: self.source_order,
            target_order: other.target_order,
            image_table: self.image_table.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn kernel(&self, source: &FiniteGroup) -> Subgroup {
        let els: Vec<u32> = (0..self.source_order as u32)
            .filter(|&x| self.apply(x) == 0)
            .collect();
        source
            .subgroup_from_elements(&els)
            .expect("kernel of a homomorphism is a subgroup")
    }

    pub fn image(&self, target: &FiniteGroup) -> Subgroup {
        let els: Vec<u32> = self
            .image_table
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        target
            .subgroup_from_elements(&els)
            .expect("image of a homomorphism is a subgroup")
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        self.image_table
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }
}
