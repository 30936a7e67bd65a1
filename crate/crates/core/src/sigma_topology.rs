//! σ-connected components, the σ-identity component and its finite head,
//! σ-infinitesimal shifts, and periodic-point invariants of conjugacy.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use petgraph::unionfind::UnionFind;

use crate::blocks::BlockGroup;
use crate::error::{Error, Result};
use crate::finite_group::{FiniteGroup, GroupHom};
use crate::group_shift::GroupShift;
use crate::morphisms::block_quotient;

/// The σ-component structure of a shift.
#[derive(Clone, Debug)]
pub struct SigmaComponentReport {
    pub count: usize,
    /// Component index of every state of the canonical presentation.
    pub state_component: Vec<usize>,
    pub identity_component: GroupShift,
    pub head: FiniteGroup,
    /// The automorphism of the head induced by σ.
    pub head_sigma: GroupHom,
}

fn state_graph(g: &GroupShift) -> DiGraph<(), ()> {
    let mut graph = DiGraph::new();
    let nodes: Vec<_> = (0..g.state_count()).map(|_| graph.add_node(())).collect();
    for s in 0..g.state_count() {
        for &(_, t) in g.successors(s) {
            graph.add_edge(nodes[s], nodes[t as usize], ());
        }
    }
    graph
}

/// Reachability sets by breadth-first search from each state.
fn reachable_from(g: &GroupShift, start: usize) -> Vec<bool> {
    let mut seen = vec![false; g.state_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(_, t) in g.successors(u) {
            if !std::mem::replace(&mut seen[t as usize], true) {
                stack.push(t as usize);
            }
        }
    }
    seen
}

/// Components of the meta-graph whose vertices are the strongly connected
/// pieces carrying a cycle, joined whenever one reaches the other.
pub fn sigma_components(g: &GroupShift) -> Result<SigmaComponentReport> {
    let graph = state_graph(g);
    let sccs = tarjan_scc(&graph);
    let cyclic: Vec<Vec<usize>> = sccs
        .into_iter()
        .map(|c| c.into_iter().map(|v| v.index()).collect::<Vec<_>>())
        .filter(|c: &Vec<usize>| {
            c.len() > 1 || g.successors(c[0]).iter().any(|&(_, t)| t as usize == c[0])
        })
        .collect();
    let mut piece_of = vec![usize::MAX; g.state_count()];
    for (i, c) in cyclic.iter().enumerate() {
        for &v in c {
            piece_of[v] = i;
        }
    }
    let mut uf = UnionFind::<usize>::new(cyclic.len());
    let mut reach_piece: Vec<Vec<bool>> = Vec::with_capacity(cyclic.len());
    for c in &cyclic {
        let r = reachable_from(g, c[0]);
        let mut hits = vec![false; cyclic.len()];
        for (v, &ok) in r.iter().enumerate() {
            if ok && piece_of[v] != usize::MAX {
                hits[piece_of[v]] = true;
            }
        }
        reach_piece.push(hits);
    }
    for (i, hits) in reach_piece.iter().enumerate() {
        for (j, &h) in hits.iter().enumerate() {
            if h {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut roots: Vec<usize> = labels.clone();
    roots.sort_unstable();
    roots.dedup();
    let comp_of_piece: Vec<usize> = labels
        .iter()
        .map(|l| roots.binary_search(l).expect("root"))
        .collect();
    let mut state_component = vec![0usize; g.state_count()];
    for (s, slot) in state_component.iter_mut().enumerate() {
        let r = reachable_from(g, s);
        let piece = (0..g.state_count())
            .find(|&v| r[v] && piece_of[v] != usize::MAX)
            .map(|v| piece_of[v])
            .expect("trimmed graphs reach a cycle from every state");
        *slot = comp_of_piece[piece];
    }
    let sc = identity_component(g)?;
    let (head, head_sigma) = head_of(g, &sc)?;
    Ok(SigmaComponentReport {
        count: roots.len(),
        state_component,
        identity_component: sc,
        head,
        head_sigma,
    })
}

/// `G^sc`: points whose states can all reach the identity state.
pub fn identity_component(g: &GroupShift) -> Result<GroupShift> {
    let n = g.width();
    if n == 0 {
        return Ok(g.clone());
    }
    let s = g.state_count();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); s];
    for u in 0..s {
        for &(_, t) in g.successors(u) {
            preds[t as usize].push(u);
        }
    }
    let id = g.identity_state();
    let mut good = vec![false; s];
    good[id] = true;
    let mut stack = vec![id];
    while let Some(v) = stack.pop() {
        for &u in &preds[v] {
            if !std::mem::replace(&mut good[u], true) {
                stack.push(u);
            }
        }
    }
    let states = g.states();
    let window = g
        .window()
        .filter(|w| good[states.index_of(&w[1..]).expect("target state")]);
    GroupShift::from_window(g.alphabet().clone(), n, &window)
}

/// `G/G^sc` as a finite group together with the automorphism induced by σ.
pub fn head(g: &GroupShift) -> Result<(FiniteGroup, GroupHom)> {
    let sc = identity_component(g)?;
    head_of(g, &sc)
}

fn head_of(g: &GroupShift, sc: &GroupShift) -> Result<(FiniteGroup, GroupHom)> {
    let m = g.width().max(sc.width());
    let big = g.blocks(m)?;
    let small = sc.blocks(m)?;
    let (q, coset) = block_quotient(g.alphabet(), &big, &small)?;
    let longer = g.blocks(m + 1)?;
    let mut table = vec![u32::MAX; q.order()];
    for w in longer.words() {
        let from = coset[big.index_of(&w[..m + 1]).expect("prefix")] as usize;
        let to = coset[big.index_of(&w[1..]).expect("suffix")];
        table[from] = to;
    }
    let sigma = GroupHom::new(&q, &q, table)?;
    Ok((q, sigma))
}

pub fn is_sigma_connected(g: &GroupShift) -> Result<bool> {
    g.equals(&identity_component(g)?)
}

/// Distance of every state to the identity state along the unique successor,
/// when the shift is finite and every state gets there.
fn funnel_distances(g: &GroupShift) -> Option<Vec<usize>> {
    if !g.is_finite() {
        return None;
    }
    let id = g.identity_state();
    if g.successors(id)[0].1 as usize != id {
        return None;
    }
    let s = g.state_count();
    let mut dist = vec![usize::MAX; s];
    dist[id] = 0;
    for start in 0..s {
        let mut path = Vec::new();
        let mut v = start;
        while dist[v] == usize::MAX {
            if path.len() > s {
                return None;
            }
            path.push(v);
            v = g.successors(v)[0].1 as usize;
        }
        let base = dist[v];
        for (i, &u) in path.iter().rev().enumerate() {
            dist[u] = base + i + 1;
        }
    }
    Some(dist)
}

/// True iff some power of σ kills every point.
pub fn is_sigma_infinitesimal(g: &GroupShift) -> bool {
    funnel_distances(g).is_some()
}

/// Smallest `r` with `σ^r = 1` on a σ-infinitesimal shift.
pub fn nilpotency_index(g: &GroupShift) -> Result<usize> {
    funnel_distances(g)
        .map(|d| d.into_iter().max().unwrap_or(0))
        .ok_or_else(|| {
            Error::Precondition("nilpotency index of a shift that is not σ-infinitesimal".into())
        })
}

/// Periodic-point data of the conjugacy model `A^ℕ × F`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugacyInvariants {
    /// `|A|`, the limit degree.
    pub d: u64,
    /// Whether `F` has a σ-fixed point, i.e. `f_1 ≥ 1`.
    pub fixed_alphabet_check: bool,
    /// `Per_p(G)` for `p = 1..=P`.
    pub periodic_counts: Vec<BigUint>,
    /// `f_p = Per_p(G) / d^p`; `None` where the division is not exact.
    pub f: Vec<Option<u64>>,
    /// Number of σ-cycles of exact length `q` on `F`.
    pub cycle_counts: Vec<Option<i64>>,
    pub consistent: bool,
    /// Image stabilization index, when found within the bound.
    pub ell: Option<usize>,
    pub ell_bound: usize,
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Default search bound for the stabilization index.
pub fn default_ell_bound(g: &GroupShift) -> usize {
    2 * g.state_count()
}

pub fn conjugacy_invariants(
    g: &GroupShift,
    period_bound: usize,
    ell_bound: usize,
) -> Result<ConjugacyInvariants> {
    if period_bound == 0 {
        return Err(Error::Precondition(
            "period bound must be at least 1".into(),
        ));
    }
    let d = g.limit_degree();
    let big_d = BigUint::from(d);
    let mut periodic_counts = Vec::with_capacity(period_bound);
    let mut f = Vec::with_capacity(period_bound);
    let mut power = BigUint::one();
    for p in 1..=period_bound {
        power *= &big_d;
        let per = g.periodic_count(p);
        let exact = (&per % &power).is_zero();
        f.push(if exact {
            (&per / &power).to_u64()
        } else {
            None
        });
        periodic_counts.push(per);
    }
    let mut cycle_counts = Vec::with_capacity(period_bound);
    for q in 1..=period_bound {
        let mut sum = BigInt::zero();
        let mut defined = true;
        for m in (1..=q).filter(|m| q % m == 0) {
            match f[m - 1] {
                Some(v) => sum += BigInt::from(mobius(q / m)) * BigInt::from(v),
                None => defined = false,
            }
        }
        let qb = BigInt::from(q);
        cycle_counts.push(if defined && (&sum % &qb).is_zero() {
            (sum / qb).to_i64()
        } else {
            None
        });
    }
    let fixed_alphabet_check = matches!(f[0], Some(v) if v >= 1);
    let consistent = fixed_alphabet_check
        && f.iter().all(Option::is_some)
        && cycle_counts.iter().all(|c| matches!(c, Some(v) if *v >= 0));
    let ell = g.image_stabilization(ell_bound)?;
    Ok(ConjugacyInvariants {
        d,
        fixed_alphabet_check,
        periodic_counts,
        f,
        cycle_counts,
        consistent,
        ell,
        ell_bound,
    })
}

/// Number of orbits of an automorphism given by its table.
pub fn orbit_count(sigma: &GroupHom) -> usize {
    let n = sigma.source_order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = sigma.apply(v as u32) as usize;
        }
    }
    count
}

/// Index `|G[m] : G^sc[m]|` at the common canonical width.
pub fn head_index(g: &GroupShift, sc: &GroupShift) -> Result<usize> {
    let m = g.width().max(sc.width());
    let big: BlockGroup = g.blocks(m)?;
    Ok(big.order() / sc.blocks(m)?.order())
}
