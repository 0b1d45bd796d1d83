//! Pruned depth-first enumeration of star labellings.
//!
//! Vertices are labelled one at a time in breadth-first order from the lowest
//! id, trying the permutations of each vertex's labels in lexicographic order.
//! A family of target exponents supplies, per edge, the set of admissible final
//! weights; a partial labelling is abandoned as soon as some edge can no
//! longer reach an admissible weight. Completed labellings are classified by
//! the family into numbered members.
//!
//! The tree can be cut at a fixed depth into independent prefixes, and the
//! per-prefix tallies sum to the full tally in any order, so a parallel
//! executor produces the same result as the sequential one.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::{check_length, SignedCount, UNSET};
use crate::error::Error;
use crate::graph::{EdgeId, Flag, Multigraph, VertexId};

/// A set of target exponents, queried edge by edge during the search.
pub trait ExponentFamily: Sync {
    /// Bitmask of weights edge `e` may end with (bit `k` = weight `k`).
    fn allowed(&self, e: EdgeId) -> u64;
    /// Member index of a complete exponent, or `None` when outside the family.
    fn member(&self, exponent: &[u8]) -> Option<u32>;
}

/// Exactly one exponent; member 0.
pub struct SingleWeight<'a>(pub &'a [u8]);

impl ExponentFamily for SingleWeight<'_> {
    fn allowed(&self, e: EdgeId) -> u64 {
        bit(self.0[e])
    }

    fn member(&self, exponent: &[u8]) -> Option<u32> {
        (exponent == self.0).then_some(0)
    }
}

/// An explicit list of exponents; the member is the first matching position.
pub struct WeightList {
    weights: Vec<Vec<u8>>,
    masks: Vec<u64>,
}

impl WeightList {
    pub fn new(edge_count: usize, weights: Vec<Vec<u8>>) -> Self {
        let mut masks = alloc::vec![0u64; edge_count];
        for w in &weights {
            for (e, &x) in w.iter().enumerate() {
                masks[e] |= bit(x);
            }
        }
        WeightList { weights, masks }
    }
}

impl ExponentFamily for WeightList {
    fn allowed(&self, e: EdgeId) -> u64 {
        self.masks[e]
    }

    fn member(&self, exponent: &[u8]) -> Option<u32> {
        self.weights.iter().position(|w| w == exponent).map(|i| i as u32)
    }
}

fn bit(x: u8) -> u64 {
    if x < 64 {
        1u64 << x
    } else {
        0
    }
}

/// Number of labellings and signed sum for one family member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bucket {
    pub labellings: u64,
    pub signed: i128,
}

/// Per-member results; merging is plain addition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub members: BTreeMap<u32, Bucket>,
}

impl Tally {
    pub fn record(&mut self, member: u32, sign: i8) {
        let b = self.members.entry(member).or_default();
        b.labellings += 1;
        b.signed += i128::from(sign);
    }

    pub fn merge(&mut self, other: &Tally) {
        for (&k, b) in &other.members {
            let mine = self.members.entry(k).or_default();
            mine.labellings += b.labellings;
            mine.signed += b.signed;
        }
    }

    pub fn signed_total(&self) -> i128 {
        self.members.values().map(|b| b.signed).sum()
    }

    pub fn labellings(&self) -> u64 {
        self.members.values().map(|b| b.labellings).sum()
    }

    pub fn signed(&self, member: u32) -> i128 {
        self.members.get(&member).map_or(0, |b| b.signed)
    }
}

/// A completed labelling handed to visitors.
pub struct Leaf<'a> {
    pub labels: &'a [u8],
    pub exponent: &'a [u8],
    pub sign: i8,
    pub member: u32,
}

struct Slot {
    edge: EdgeId,
    own: usize,
    other: usize,
    // labels the far end can still take: bits 0..d(far)
    window: u64,
}

struct Step {
    vertex: VertexId,
    slots: Vec<Slot>,
}

/// Permutations of `0..d` in lexicographic order with their parities.
fn permutations(d: usize) -> Vec<(Vec<u8>, i8)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    let mut used = alloc::vec![false; d];
    fn rec(d: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<(Vec<u8>, i8)>) {
        if current.len() == d {
            out.push((current.clone(), super::permutation_sign(current)));
            return;
        }
        for l in 0..d {
            if !used[l] {
                used[l] = true;
                current.push(l as u8);
                rec(d, current, used, out);
                current.pop();
                used[l] = false;
            }
        }
    }
    rec(d, &mut current, &mut used, &mut out);
    out
}

/// Breadth-first vertex order, restarting at the lowest unvisited id.
pub fn search_order(g: &Multigraph) -> Vec<VertexId> {
    let mut seen = alloc::vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &e in g.incident(v) {
                let w = g.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

pub struct StarSearch<'a, F: ExponentFamily> {
    g: &'a Multigraph,
    family: &'a F,
    steps: Vec<Step>,
    tables: Vec<Vec<(Vec<u8>, i8)>>,
    masks: Vec<u64>,
}

impl<'a, F: ExponentFamily> StarSearch<'a, F> {
    pub fn new(g: &'a Multigraph, family: &'a F) -> Self {
        let order = search_order(g);
        let steps = order
            .iter()
            .map(|&v| Step {
                vertex: v,
                slots: g
                    .incident(v)
                    .iter()
                    .map(|&e| {
                        let own = g.flag_index(Flag { vertex: v, edge: e });
                        let far = g.other_end(e, v);
                        Slot { edge: e, own, other: own ^ 1, window: (1u64 << g.degree(far).min(63)) - 1 }
                    })
                    .collect(),
            })
            .collect();
        let max_degree = g.max_degree();
        let tables = (0..=max_degree).map(permutations).collect();
        let masks = (0..g.edge_count()).map(|e| family.allowed(e)).collect();
        StarSearch { g, family, steps, tables, masks }
    }

    pub fn graph(&self) -> &Multigraph {
        self.g
    }

    /// Vertex visiting order.
    pub fn order(&self) -> Vec<VertexId> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    fn fits(&self, step: &Step, perm: &[u8], labels: &[u8]) -> bool {
        step.slots.iter().zip(perm).all(|(slot, &l)| {
            let mask = self.masks[slot.edge];
            let far = labels[slot.other];
            if far != UNSET {
                mask >> (l + far) & 1 == 1
            } else {
                (slot.window << l) & mask != 0
            }
        })
    }

    fn apply(step: &Step, perm: &[u8], labels: &mut [u8]) {
        for (slot, &l) in step.slots.iter().zip(perm) {
            labels[slot.own] = l;
        }
    }

    fn clear(step: &Step, labels: &mut [u8]) {
        for slot in &step.slots {
            labels[slot.own] = UNSET;
        }
    }

    /// Feasible permutation-index prefixes for the first `depth` vertices.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u16>> {
        let depth = depth.min(self.steps.len());
        let mut out = Vec::new();
        let mut labels = alloc::vec![UNSET; self.g.flag_count()];
        let mut prefix = Vec::new();
        self.collect_prefixes(0, depth, &mut labels, &mut prefix, &mut out);
        out
    }

    fn collect_prefixes(&self, i: usize, depth: usize, labels: &mut [u8], prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == depth {
            out.push(prefix.clone());
            return;
        }
        let step = &self.steps[i];
        for (k, (perm, _)) in self.tables[step.slots.len()].iter().enumerate() {
            if self.fits(step, perm, labels) {
                Self::apply(step, perm, labels);
                prefix.push(k as u16);
                self.collect_prefixes(i + 1, depth, labels, prefix, out);
                prefix.pop();
                Self::clear(step, labels);
            }
        }
    }

    /// Visits every family member labelling extending `prefix`.
    pub fn for_each(&self, prefix: &[u16], visit: &mut dyn FnMut(&Leaf<'_>)) {
        let mut labels = alloc::vec![UNSET; self.g.flag_count()];
        let mut sign = 1i8;
        for (i, &k) in prefix.iter().enumerate() {
            let step = &self.steps[i];
            let (perm, parity) = &self.tables[step.slots.len()][k as usize];
            if !self.fits(step, perm, &labels) {
                return;
            }
            Self::apply(step, perm, &mut labels);
            sign *= parity;
        }
        let mut exponent = alloc::vec![0u8; self.g.edge_count()];
        self.dfs(prefix.len(), &mut labels, sign, &mut exponent, visit);
    }

    fn dfs(&self, i: usize, labels: &mut [u8], sign: i8, exponent: &mut [u8], visit: &mut dyn FnMut(&Leaf<'_>)) {
        if i == self.steps.len() {
            for (e, x) in exponent.iter_mut().enumerate() {
                *x = labels[2 * e] + labels[2 * e + 1];
            }
            if let Some(member) = self.family.member(exponent) {
                visit(&Leaf { labels, exponent, sign, member });
            }
            return;
        }
        let step = &self.steps[i];
        for (perm, parity) in &self.tables[step.slots.len()] {
            if self.fits(step, perm, labels) {
                Self::apply(step, perm, labels);
                self.dfs(i + 1, labels, sign * parity, exponent, visit);
                Self::clear(step, labels);
            }
        }
    }

    pub fn tally_prefix(&self, prefix: &[u16]) -> Tally {
        let mut tally = Tally::default();
        self.for_each(prefix, &mut |leaf| tally.record(leaf.member, leaf.sign));
        tally
    }
}

/// Strategy for evaluating a search, possibly in parallel.
pub trait Executor {
    fn tally<F: ExponentFamily>(&self, search: &StarSearch<'_, F>) -> Tally;
}

/// Runs the whole tree on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn tally<F: ExponentFamily>(&self, search: &StarSearch<'_, F>) -> Tally {
        search.tally_prefix(&[])
    }
}

/// Default edge limit for full enumeration.
pub const ENUMERATION_GUARD_EDGES: usize = 24;

pub(crate) fn guard(g: &Multigraph, limit: usize) -> Result<(), Error> {
    if g.edge_count() > limit {
        return Err(Error::SizeGuard { what: "edges for star-labelling enumeration", actual: g.edge_count(), limit });
    }
    Ok(())
}

/// Coefficient of `x^w` in the edge monomial, by signed enumeration.
///
/// Each vertex of degree `d` contributes a Vandermonde factor, which equals
/// `(-1)^(d(d-1)/2)` times the signed sum of its label permutations, so the
/// coefficient is the signed labelling count times `(-1)^D` for the total
/// degree `D`. For cubic graphs `D` is even and the factor is 1.
pub fn coefficient(g: &Multigraph, w: &[u8]) -> Result<SignedCount, Error> {
    coefficient_with(g, w, &Sequential, ENUMERATION_GUARD_EDGES)
}

pub fn coefficient_with(g: &Multigraph, w: &[u8], exec: &impl Executor, limit: usize) -> Result<SignedCount, Error> {
    check_length(g, w)?;
    guard(g, limit)?;
    if w.iter().map(|&x| usize::from(x)).sum::<usize>() != g.monomial_degree() {
        return Ok(SignedCount::from(0));
    }
    let family = SingleWeight(w);
    let search = StarSearch::new(g, &family);
    let parity = if g.monomial_degree().is_multiple_of(2) { 1 } else { -1 };
    Ok(SignedCount::from(parity * exec.tally(&search).signed(0)))
}

/// Signed number of labellings whose exponent lies in `family`, without the
/// `(-1)^D` factor that [`coefficient`] applies.
pub fn multi_term_sum<F: ExponentFamily>(g: &Multigraph, family: &F, exec: &impl Executor, limit: usize) -> Result<Tally, Error> {
    guard(g, limit)?;
    let search = StarSearch::new(g, family);
    Ok(exec.tally(&search))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::nullstellensatz::sign_of;

    type Step = (VertexId, Vec<(Vec<u8>, i8)>);

    fn brute_force(g: &Multigraph, w: &[u8]) -> (u64, i128) {
        let steps: Vec<Step> =
            (0..g.vertex_count()).map(|v| (v, permutations(g.degree(v)))).collect();
        let mut labels = alloc::vec![0u8; g.flag_count()];
        let mut count = 0;
        let mut signed = 0;
        fn rec(g: &Multigraph, w: &[u8], steps: &[Step], i: usize, labels: &mut [u8], count: &mut u64, signed: &mut i128) {
            if i == steps.len() {
                if super::super::exponent(labels) == w {
                    *count += 1;
                    *signed += i128::from(sign_of(g, labels));
                }
                return;
            }
            let (v, perms) = &steps[i];
            for (perm, _) in perms {
                for (&e, &l) in g.incident(*v).iter().zip(perm) {
                    labels[g.flag_index(Flag { vertex: *v, edge: e })] = l;
                }
                rec(g, w, steps, i + 1, labels, count, signed);
            }
        }
        rec(g, w, &steps, 0, &mut labels, &mut count, &mut signed);
        (count, signed)
    }

    #[test]
    fn permutation_tables() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0].0, alloc::vec![0, 1, 2]);
        assert_eq!(p[1], (alloc::vec![0, 2, 1], -1));
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn theta_and_k4_constant_two() {
        let theta = corpus::theta();
        assert_eq!(coefficient(&theta, &[2, 2, 2]).unwrap(), SignedCount::from(-6));
        assert_eq!(brute_force(&theta, &[2, 2, 2]), (6, -6));
        let k4 = corpus::k4();
        let c = coefficient(&k4, &[2; 6]).unwrap();
        assert_eq!(brute_force(&k4, &[2; 6]).1, i128::try_from(c.0.clone()).unwrap());
        assert_eq!(brute_force(&k4, &[2; 6]).0, 6);
        assert!(c == SignedCount::from(6) || c == SignedCount::from(-6));
    }

    #[test]
    fn wrong_degree_is_zero() {
        assert!(coefficient(&corpus::k4(), &[2, 2, 2, 2, 2, 1]).unwrap().is_zero());
        assert!(coefficient(&corpus::theta(), &[3, 3, 3]).unwrap().is_zero());
    }

    #[test]
    fn prefixes_partition_the_tree() {
        let g = corpus::prism();
        let w = [2u8; 9];
        let family = SingleWeight(&w);
        let search = StarSearch::new(&g, &family);
        let whole = search.tally_prefix(&[]);
        for depth in 0..4 {
            let mut merged = Tally::default();
            for p in search.prefixes(depth) {
                merged.merge(&search.tally_prefix(&p));
            }
            assert_eq!(merged, whole);
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for g in corpus::small_multigraphs().iter().filter(|g| g.vertex_count() <= 5 && g.edge_count() <= 6) {
            let w: Vec<u8> = (0..g.edge_count())
                .map(|e| {
                    let (u, v) = g.endpoints(e);
                    ((g.degree(u) + g.degree(v) - 2) / 2) as u8
                })
                .collect();
            let (_, signed) = brute_force(g, &w);
            let got = if w.iter().map(|&x| x as usize).sum::<usize>() == g.monomial_degree() {
                coefficient(g, &w).unwrap()
            } else {
                SignedCount::from(signed)
            };
            assert_eq!(got, SignedCount::from(signed), "{:?}", g.edges());
        }
    }
}
