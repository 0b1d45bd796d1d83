//! Ground-truth list edge colouring on small graphs.
//!
//! The exhaustive check works with colour classes instead of lists: a list
//! assignment is the same thing as a multiset of edge sets, one per colour,
//! covering every edge `f(e)` times. A class that falls into several
//! line-graph components may be split into one colour per component without
//! changing which colourings exist, and a colour owned by a single edge lets
//! that edge be coloured last. So an edge set `S` is `f`-choosable exactly
//! when every `S - e` is, and every cover of `S` by line-connected classes
//! of size at least 2 admits a colouring. An edge whose list is longer than
//! its line degree is also coloured last and is dropped first. Finally, a
//! class can be skipped when one of its edges may take the class colour
//! while the other class edges lose it and the rest stays choosable.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{EdgeId, Multigraph};

/// Edge limit for the exhaustive checks.
pub const EXHAUSTIVE_GUARD_EDGES: usize = 8;

/// Colour list per edge, each sorted and without repeats.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn uniform(edge_count: usize, colours: &[u32]) -> Self {
        ListAssignment { lists: alloc::vec![colours.to_vec(); edge_count] }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }
}

fn line_neighbours(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    (0..g.edge_count())
        .map(|e| (0..g.edge_count()).filter(|&x| x != e && g.shared_ends(e, x) > 0).collect())
        .collect()
}

/// An `L`-edge colouring, or `None` after exhausting the search tree.
///
/// Edges are coloured in order of fewest remaining colours, ties by index;
/// colours are tried in increasing order.
pub fn find_l_colouring(g: &Multigraph, lists: &ListAssignment) -> Option<Vec<u32>> {
    let nb = line_neighbours(g);
    let mut colour: Vec<Option<u32>> = alloc::vec![None; g.edge_count()];
    if colour_rec(&nb, &lists.lists, &mut colour) {
        Some(colour.into_iter().map(|c| c.expect("all edges coloured")).collect())
    } else {
        None
    }
}

fn available<'a>(nb: &'a [Vec<EdgeId>], lists: &'a [Vec<u32>], colour: &'a [Option<u32>], e: EdgeId) -> impl Iterator<Item = u32> + 'a {
    lists[e].iter().copied().filter(move |&c| nb[e].iter().all(|&x| colour[x] != Some(c)))
}

fn colour_rec(nb: &[Vec<EdgeId>], lists: &[Vec<u32>], colour: &mut [Option<u32>]) -> bool {
    let next = (0..colour.len())
        .filter(|&e| colour[e].is_none())
        .map(|e| (available(nb, lists, colour, e).count(), e))
        .min();
    let Some((count, e)) = next else {
        return true;
    };
    if count == 0 {
        return false;
    }
    let options: Vec<u32> = available(nb, lists, colour, e).collect();
    for c in options {
        colour[e] = Some(c);
        if colour_rec(nb, lists, colour) {
            return true;
        }
    }
    colour[e] = None;
    false
}

fn exhaustive_guard(g: &Multigraph) -> Result<(), Error> {
    if g.edge_count() > EXHAUSTIVE_GUARD_EDGES {
        return Err(Error::SizeGuard { what: "edges for exhaustive choosability", actual: g.edge_count(), limit: EXHAUSTIVE_GUARD_EDGES });
    }
    Ok(())
}

/// Exhaustive `f`-choosability on one graph, memoized over edge sets and
/// list sizes so repeated queries share work.
pub struct ExhaustiveSolver<'a> {
    g: &'a Multigraph,
    nb: Vec<Vec<EdgeId>>,
    memo: BTreeMap<(u32, Vec<u8>), Option<ListAssignment>>,
}

impl<'a> ExhaustiveSolver<'a> {
    pub fn new(g: &'a Multigraph) -> Result<Self, Error> {
        exhaustive_guard(g)?;
        Ok(ExhaustiveSolver { g, nb: line_neighbours(g), memo: BTreeMap::new() })
    }

    /// A list assignment with `|L(e)| = f(e)` and no `L`-edge colouring, if one exists.
    pub fn counterexample(&mut self, f: &[u8]) -> Result<Option<ListAssignment>, Error> {
        check_f(self.g, f)?;
        let all = if self.g.edge_count() == 0 { 0 } else { u32::MAX >> (32 - self.g.edge_count()) };
        Ok(self.bad(all, f))
    }

    pub fn choosable(&mut self, f: &[u8]) -> Result<bool, Error> {
        self.counterexample(f).map(|c| c.is_none())
    }

    fn degree_in(&self, e: EdgeId, set: u32) -> usize {
        self.nb[e].iter().filter(|&&x| set >> x & 1 == 1).count()
    }

    /// Gives every edge outside `set` its own fresh colours.
    fn extend(&self, witness: &ListAssignment, set: u32, f: &[u8]) -> ListAssignment {
        let mut next = witness.lists.iter().flatten().max().map_or(0, |&c| c + 1);
        let mut lists = witness.lists.clone();
        for (e, list) in lists.iter_mut().enumerate() {
            if set >> e & 1 == 0 {
                *list = (next..next + u32::from(f[e])).collect();
                next += u32::from(f[e]);
            }
        }
        ListAssignment { lists }
    }

    fn bad(&mut self, set: u32, f: &[u8]) -> Option<ListAssignment> {
        let key: Vec<u8> = f.iter().enumerate().map(|(e, &x)| if set >> e & 1 == 1 { x } else { 0 }).collect();
        let result = match self.memo.get(&(set, key.clone())) {
            Some(known) => known.clone(),
            None => {
                let result = self.solve(set, &key);
                self.memo.insert((set, key), result.clone());
                result
            }
        };
        result.map(|w| self.extend(&w, set, f))
    }

    /// A bad assignment on `set` with empty lists elsewhere.
    fn solve(&mut self, set: u32, f: &[u8]) -> Option<ListAssignment> {
        if set == 0 {
            return None;
        }
        let m = self.g.edge_count();
        let empty = ListAssignment { lists: alloc::vec![Vec::new(); m] };
        if (0..m).any(|e| set >> e & 1 == 1 && f[e] == 0) {
            return Some(empty);
        }
        let edges: Vec<EdgeId> = (0..m).filter(|&e| set >> e & 1 == 1).collect();
        if let Some(&e) = edges.iter().find(|&&e| usize::from(f[e]) > self.degree_in(e, set)) {
            let rest = set & !(1 << e);
            return self.bad(rest, f).map(|w| self.clear_outside(w, set));
        }
        for &e in &edges {
            let rest = set & !(1 << e);
            if let Some(w) = self.bad(rest, f) {
                return Some(self.clear_outside(w, set));
            }
        }
        let classes: Vec<u32> = self.connected_classes(set).into_iter().filter(|&c| self.admissible(set, f, c)).collect();
        let mut need: Vec<u8> = f.to_vec();
        let mut chosen = Vec::new();
        let mut found = None;
        self.covers(&classes, &mut need, 0, &mut chosen, &mut found);
        found
    }

    fn clear_outside(&self, mut w: ListAssignment, set: u32) -> ListAssignment {
        for (e, list) in w.lists.iter_mut().enumerate() {
            if set >> e & 1 == 0 {
                list.clear();
            }
        }
        w
    }

    // If some edge of the class can take its colour while the rest of the
    // class loses it and what remains is still choosable, the class cannot
    // occur in a minimal bad assignment.
    fn admissible(&mut self, set: u32, f: &[u8], class: u32) -> bool {
        (0..self.g.edge_count()).filter(|&e| class >> e & 1 == 1).all(|e| {
            let reduced: Vec<u8> = f.iter().enumerate().map(|(x, &v)| if class >> x & 1 == 1 && x != e { v - 1 } else { v }).collect();
            self.bad(set & !(1 << e), &reduced).is_some()
        })
    }

    /// Line-connected subsets of `set` with at least two edges, ascending by mask.
    fn connected_classes(&self, set: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut sub = set;
        while sub != 0 {
            if sub.count_ones() >= 2 && self.is_connected(sub) {
                out.push(sub);
            }
            sub = (sub - 1) & set;
        }
        out.sort_unstable();
        out
    }

    fn is_connected(&self, sub: u32) -> bool {
        let start = sub.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = alloc::vec![start];
        while let Some(e) = stack.pop() {
            for &x in &self.nb[e] {
                if sub >> x & 1 == 1 && seen >> x & 1 == 0 {
                    seen |= 1 << x;
                    stack.push(x);
                }
            }
        }
        seen == sub
    }

    // Each class is placed at the step of its lowest edge, in nondecreasing
    // mask order there, so every multiset is generated once.
    fn covers(&self, classes: &[u32], need: &mut [u8], from: usize, chosen: &mut Vec<u32>, found: &mut Option<ListAssignment>) {
        if found.is_some() {
            return;
        }
        let Some(low) = need.iter().position(|&x| x > 0) else {
            let lists = (0..need.len())
                .map(|e| (0..chosen.len() as u32).filter(|&c| chosen[c as usize] >> e & 1 == 1).collect())
                .collect();
            let assignment = ListAssignment { lists };
            let full: u32 = chosen.iter().fold(0, |a, &c| a | c);
            let sub = restrict(self.g, full);
            if find_l_colouring(&sub.0, &sub.1.restrict(&assignment)).is_none() {
                *found = Some(assignment);
            }
            return;
        };
        for (i, &c) in classes.iter().enumerate().skip(from) {
            if c.trailing_zeros() as usize != low || (0..need.len()).any(|e| c >> e & 1 == 1 && need[e] == 0) {
                continue;
            }
            for (e, n) in need.iter_mut().enumerate() {
                if c >> e & 1 == 1 {
                    *n -= 1;
                }
            }
            chosen.push(c);
            let next_from = if need[low] > 0 { i } else { 0 };
            self.covers(classes, need, next_from, chosen, found);
            chosen.pop();
            for (e, n) in need.iter_mut().enumerate() {
                if c >> e & 1 == 1 {
                    *n += 1;
                }
            }
            if found.is_some() {
                return;
            }
        }
    }
}

struct EdgeMap(Vec<EdgeId>);

impl EdgeMap {
    fn restrict(&self, a: &ListAssignment) -> ListAssignment {
        ListAssignment { lists: self.0.iter().map(|&e| a.lists[e].clone()).collect() }
    }
}

fn restrict(g: &Multigraph, set: u32) -> (Multigraph, EdgeMap) {
    let kept: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| set >> e & 1 == 1).collect();
    let edges = kept.iter().map(|&e| g.endpoints(e)).collect();
    (Multigraph::new(g.vertex_count(), edges).expect("subgraph of a loopless graph"), EdgeMap(kept))
}

fn check_f(g: &Multigraph, f: &[u8]) -> Result<(), Error> {
    if f.len() != g.edge_count() {
        return Err(Error::WeightLength { expected: g.edge_count(), actual: f.len() });
    }
    Ok(())
}

/// A list assignment with `|L(e)| = f(e)` and no `L`-edge colouring, if one exists.
pub fn exhaustive_counterexample(g: &Multigraph, f: &[u8]) -> Result<Option<ListAssignment>, Error> {
    ExhaustiveSolver::new(g)?.counterexample(f)
}

/// True iff every list assignment with `|L(e)| = f(e)` has an `L`-edge colouring.
pub fn is_f_choosable_exhaustive(g: &Multigraph, f: &[u8]) -> Result<bool, Error> {
    exhaustive_counterexample(g, f).map(|c| c.is_none())
}

/// Fewest edges that need lists of size `k + 1` when all others get size `k`.
///
/// Upgraded sets are tried by size, then in lexicographic order; the first
/// choosable one is returned with the count.
pub fn s_exact_with(g: &Multigraph, k: u8) -> Result<(usize, Vec<EdgeId>), Error> {
    let mut solver = ExhaustiveSolver::new(g)?;
    let m = g.edge_count();
    for size in 0..=m {
        let mut combo: Vec<EdgeId> = (0..size).collect();
        loop {
            let mut f = alloc::vec![k; m];
            for &e in &combo {
                f[e] = k + 1;
            }
            if solver.choosable(&f)? {
                return Ok((size, combo));
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Err(Error::Internal("upgrading every edge must suffice"))
}

pub fn s_exact(g: &Multigraph, k: u8) -> Result<usize, Error> {
    s_exact_with(g, k).map(|(s, _)| s)
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Outcome of sampled list assignments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomCheck {
    pub trials: u64,
    pub successes: u64,
    /// Lowest failing trial and its lists.
    pub counterexample: Option<(u64, ListAssignment)>,
}

impl RandomCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Combines results of disjoint trial ranges.
    pub fn merge(&mut self, other: RandomCheck) {
        self.trials += other.trials;
        self.successes += other.successes;
        self.counterexample = match (self.counterexample.take(), other.counterexample) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
    }
}

/// Lists for one trial: trial 0 gives every edge `{0, .., f(e) - 1}`; other
/// trials draw `f(e)` distinct colours from `max f + 3` with a ChaCha8 stream
/// keyed by the seed and the trial number.
pub fn trial_lists(f: &[u8], seed: u64, trial: u64) -> ListAssignment {
    if trial == 0 {
        return ListAssignment { lists: f.iter().map(|&x| (0..u32::from(x)).collect()).collect() };
    }
    let universe = usize::from(f.iter().copied().max().unwrap_or(0)) + 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let lists = f
        .iter()
        .map(|&x| {
            let mut list: Vec<u32> = sample(&mut rng, universe, usize::from(x)).into_iter().map(|c| c as u32).collect();
            list.sort_unstable();
            list
        })
        .collect();
    ListAssignment { lists }
}

/// Checks trials `range` of the sampling sequence.
pub fn random_list_range(g: &Multigraph, f: &[u8], seed: u64, range: core::ops::Range<u64>) -> RandomCheck {
    let mut out = RandomCheck { trials: 0, successes: 0, counterexample: None };
    for trial in range {
        out.trials += 1;
        let lists = trial_lists(f, seed, trial);
        if find_l_colouring(g, &lists).is_some() {
            out.successes += 1;
        } else if out.counterexample.is_none() {
            out.counterexample = Some((trial, lists));
        }
    }
    out
}

pub fn random_list_check(g: &Multigraph, f: &[u8], trials: u64, seed: u64) -> Result<RandomCheck, Error> {
    check_f(g, f)?;
    Ok(random_list_range(g, f, seed, 0..trials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn is_colouring(g: &Multigraph, lists: &ListAssignment, c: &[u32]) -> bool {
        (0..g.edge_count()).all(|e| lists.lists[e].contains(&c[e]))
            && (0..g.edge_count()).all(|e| (e + 1..g.edge_count()).all(|x| g.shared_ends(e, x) == 0 || c[e] != c[x]))
    }

    fn brute_choosable(g: &Multigraph, f: &[u8]) -> bool {
        let universe: u32 = f.iter().map(|&x| u32::from(x)).sum();
        let options: Vec<Vec<Vec<u32>>> = f.iter().map(|&x| subsets(universe, usize::from(x))).collect();
        let mut idx = alloc::vec![0usize; f.len()];
        loop {
            let lists = ListAssignment { lists: idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect() };
            if find_l_colouring(g, &lists).is_none() {
                return false;
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                return true;
            }
        }
    }

    fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            out.push(combo.iter().map(|&c| c as u32).collect());
            if !next_combination(&mut combo, n as usize) {
                return out;
            }
        }
    }

    #[test]
    fn colouring_examples() {
        let k4 = corpus::k4();
        let l = ListAssignment::uniform(6, &[1, 2, 3]);
        let c = find_l_colouring(&k4, &l).unwrap();
        assert!(is_colouring(&k4, &l, &c));
        assert_eq!(find_l_colouring(&corpus::theta(), &ListAssignment::uniform(3, &[1, 2])), None);
        let leaf = Multigraph::from_edges(&[(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(find_l_colouring(&leaf, &ListAssignment::uniform(8, &[1, 2, 3])), None);
    }

    #[test]
    fn exhaustive_examples() {
        let theta = corpus::theta();
        assert!(is_f_choosable_exhaustive(&theta, &[3, 3, 3]).unwrap());
        let bad = exhaustive_counterexample(&theta, &[2, 2, 2]).unwrap().unwrap();
        assert_eq!(bad.sizes(), alloc::vec![2, 2, 2]);
        assert_eq!(find_l_colouring(&theta, &bad), None);
        assert!(is_f_choosable_exhaustive(&corpus::path(2), &[2, 2]).unwrap());
        assert!(!is_f_choosable_exhaustive(&corpus::path(2), &[1, 1]).unwrap());
        assert!(matches!(is_f_choosable_exhaustive(&corpus::petersen(), &[3; 15]), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let graphs = [
            corpus::path(2),
            corpus::path(3),
            corpus::theta(),
            Multigraph::from_edges(&[(0, 1), (1, 2), (2, 0)]).unwrap(),
            Multigraph::from_edges(&[(0, 1), (0, 1), (1, 2)]).unwrap(),
            Multigraph::from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            let m = g.edge_count();
            let mut f = alloc::vec![1u8; m];
            loop {
                if f.iter().map(|&x| u32::from(x)).sum::<u32>() <= 9 {
                    assert_eq!(is_f_choosable_exhaustive(g, &f).unwrap(), brute_choosable(g, &f), "{:?} f={f:?}", g.edges());
                }
                let mut k = 0;
                while k < m {
                    f[k] += 1;
                    if f[k] <= 3 {
                        break;
                    }
                    f[k] = 1;
                    k += 1;
                }
                if k == m {
                    break;
                }
            }
        }
    }

    #[test]
    fn s_values() {
        assert_eq!(s_exact(&corpus::theta(), 3).unwrap(), 0);
        assert_eq!(s_exact(&corpus::k4(), 3).unwrap(), 0);
        assert!(s_exact(&corpus::one_bridge_gadget(), 3).unwrap() >= 1);
    }

    #[test]
    fn random_checks() {
        let dumbbell = corpus::dumbbell();
        let threes = alloc::vec![3u8; dumbbell.edge_count()];
        let r = random_list_check(&dumbbell, &threes, 50, 7).unwrap();
        assert_eq!(r.counterexample.as_ref().map(|c| c.0), Some(0));
        let r = random_list_check(&dumbbell, &threes, 0, 7).unwrap();
        assert!(r.passed() && r.trials == 0);
        let mut a = random_list_range(&dumbbell, &threes, 7, 0..20);
        a.merge(random_list_range(&dumbbell, &threes, 7, 20..50));
        assert_eq!(a, random_list_check(&dumbbell, &threes, 50, 7).unwrap());
        assert_eq!(trial_lists(&threes, 7, 3), trial_lists(&threes, 7, 3));
        assert_ne!(trial_lists(&threes, 7, 3), trial_lists(&threes, 7, 4));
    }
}
