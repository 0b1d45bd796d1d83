//! Star labellings of the whole graph seen through the thread decomposition.
//!
//! Every thread gets a catalog of its named 1-footed prestar labellings. A
//! star labelling whose exponent lies in the family `{w_S}` restricts to a
//! catalog entry on every thread; reading off the head and tail labels of the
//! derived threads gives the derived labelling of the derived graph, whose
//! `(1,1)` edges form a perfect matching and whose `0 -> 2` arcs orient the
//! complementary 2-factor.

use alloc::vec::Vec;

use super::prestar::{enumerate_prestar, PrestarLabelling};
use super::search::ExponentFamily;
use super::{sign_of, StarLabelling, UNSET};
use crate::error::Error;
use crate::graph::{EdgeId, Flag, Multigraph, VertexId};
use crate::matching::{two_factor_cycles, DirectedCycle};
use crate::thread::{ThreadClass, ThreadId, ThreadOrigin, ThreadPiece};
use crate::weighting::{assemble_w, thread_weights, HeadedDecomposition, ThreadWeightKind};

/// Name of a prestar labelling by its exponent and type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrestarName {
    /// Exponent constant 2, type `(i, j)`.
    Rho(u8, u8),
    /// Exponent `w_ij`, type `(i, j)`.
    Pi(u8, u8),
    /// Exponent `w_02`, type `(1, 1)`, on a thread of order 1.
    PiPrime11,
    /// Any other type for the given exponent.
    Unnamed(ThreadWeightKind, u8, u8),
}

impl PrestarName {
    pub fn label(self) -> alloc::string::String {
        use alloc::format;
        match self {
            PrestarName::Rho(i, j) => format!("rho{i}{j}"),
            PrestarName::Pi(i, j) => format!("pi{i}{j}"),
            PrestarName::PiPrime11 => alloc::string::String::from("pi'11"),
            PrestarName::Unnamed(k, i, j) => format!("{}:{i}{j}", k.name()),
        }
    }

    /// The partner under the odd-cycle flip, for the four flippable names.
    pub fn flipped(self) -> Option<PrestarName> {
        match self {
            PrestarName::Rho(0, 2) => Some(PrestarName::Rho(2, 0)),
            PrestarName::Rho(2, 0) => Some(PrestarName::Rho(0, 2)),
            PrestarName::Pi(0, 2) => Some(PrestarName::Pi(2, 0)),
            PrestarName::Pi(2, 0) => Some(PrestarName::Pi(0, 2)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: PrestarName,
    pub weight: ThreadWeightKind,
    pub labelling: PrestarLabelling,
}

/// The 1-footed prestar labellings of one oriented thread for the weightings
/// it can carry in the family.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub thread: ThreadId,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, name: PrestarName) -> Option<&CatalogEntry> {
        self.entries.iter().find(|c| c.name == name)
    }

    /// The entry `full` restricts to on this thread.
    pub fn identify(&self, full: &[u8]) -> Option<&CatalogEntry> {
        self.entries.iter().find(|c| c.labelling.matches(full))
    }
}

/// Weightings thread `t` may carry in the family.
pub fn family_kinds(h: &HeadedDecomposition, t: ThreadId) -> Vec<ThreadWeightKind> {
    match h.class(t) {
        ThreadClass::UnmatchedOdd => alloc::vec![ThreadWeightKind::W02, ThreadWeightKind::W20],
        _ => alloc::vec![h.kind_in_family(t, false)],
    }
}

/// Names every 1-footed prestar labelling of `t` with exponent of kind `kind`.
pub fn name_labellings(g: &Multigraph, t: &ThreadPiece, kind: ThreadWeightKind) -> Vec<CatalogEntry> {
    let mut w = alloc::vec![0u8; g.edge_count()];
    for (e, x) in thread_weights(t, kind) {
        w[e] = x;
    }
    enumerate_prestar(g, t, &w, true, false)
        .into_iter()
        .map(|p| {
            let (i, j) = p.kind();
            let distinct_closed = t.shape != crate::thread::ThreadShape::Closed || i != j;
            let name = match kind {
                ThreadWeightKind::Two if distinct_closed => PrestarName::Rho(i, j),
                k if k.kind() == Some((i, j)) && distinct_closed => PrestarName::Pi(i, j),
                ThreadWeightKind::W02 if (i, j) == (1, 1) && t.order == 1 && distinct_closed => PrestarName::PiPrime11,
                k => PrestarName::Unnamed(k, i, j),
            };
            CatalogEntry { name, weight: kind, labelling: p }
        })
        .collect()
}

pub fn thread_catalog(g: &Multigraph, h: &HeadedDecomposition, t: ThreadId) -> Catalog {
    let entries = family_kinds(h, t).into_iter().flat_map(|k| name_labellings(g, &h.threads[t], k)).collect();
    Catalog { thread: t, entries }
}

pub fn catalogs(g: &Multigraph, h: &HeadedDecomposition) -> Vec<Catalog> {
    (0..h.threads.len()).map(|t| thread_catalog(g, h, t)).collect()
}

/// Upper limit on the number of odd 2-factor threads in a family sum.
pub const FAMILY_GUARD_THREADS: usize = 20;

struct Group {
    thread: ThreadId,
    edges: Vec<EdgeId>,
    // values on `edges` without and with the thread in S
    values: [Vec<u8>; 2],
}

/// The family `{w_S : S ⊆ odd 2-factor threads}`; member = bitmask of `S`
/// with bit `i` for the `i`-th odd 2-factor thread.
pub struct ThreadFamily {
    base: Vec<u8>,
    in_group: Vec<bool>,
    groups: Vec<Group>,
    masks: Vec<u64>,
}

impl ThreadFamily {
    pub fn new(h: &HeadedDecomposition) -> Result<Self, Error> {
        if h.unmatched_odd.len() > FAMILY_GUARD_THREADS {
            return Err(Error::SizeGuard {
                what: "odd threads on 2-factor edges",
                actual: h.unmatched_odd.len(),
                limit: FAMILY_GUARD_THREADS,
            });
        }
        let base = assemble_w(h, &[])?.values;
        let mut in_group = alloc::vec![false; base.len()];
        let mut masks: Vec<u64> = base.iter().map(|&x| 1u64 << x).collect();
        let mut groups = Vec::new();
        for &t in &h.unmatched_odd {
            let thread = &h.threads[t];
            let edges = thread.edges();
            let value = |kind| {
                let tw = thread_weights(thread, kind);
                edges.iter().map(|e| tw.iter().find(|(f, _)| f == e).expect("thread edge").1).collect::<Vec<u8>>()
            };
            let values = [value(ThreadWeightKind::W02), value(ThreadWeightKind::W20)];
            for (k, &e) in edges.iter().enumerate() {
                in_group[e] = true;
                masks[e] = (1u64 << values[0][k]) | (1u64 << values[1][k]);
            }
            groups.push(Group { thread: t, edges, values });
        }
        Ok(ThreadFamily { base, in_group, groups, masks })
    }

    pub fn size(&self) -> usize {
        1 << self.groups.len()
    }

    /// Threads of `S` for a member bitmask.
    pub fn subset(&self, member: u32) -> Vec<ThreadId> {
        self.groups.iter().enumerate().filter(|(i, _)| member >> i & 1 == 1).map(|(_, g)| g.thread).collect()
    }

    pub fn member_of(&self, s: &[ThreadId]) -> u32 {
        self.groups.iter().enumerate().filter(|(_, g)| s.contains(&g.thread)).map(|(i, _)| 1u32 << i).sum()
    }

    pub fn weighting(&self, member: u32) -> Vec<u8> {
        let mut w = self.base.clone();
        for (i, g) in self.groups.iter().enumerate() {
            let vals = &g.values[(member >> i & 1) as usize];
            for (&e, &x) in g.edges.iter().zip(vals) {
                w[e] = x;
            }
        }
        w
    }
}

impl ExponentFamily for ThreadFamily {
    fn allowed(&self, e: EdgeId) -> u64 {
        self.masks[e]
    }

    fn member(&self, exponent: &[u8]) -> Option<u32> {
        if exponent.iter().zip(&self.base).zip(&self.in_group).any(|((x, b), &grouped)| !grouped && x != b) {
            return None;
        }
        let mut member = 0u32;
        for (i, g) in self.groups.iter().enumerate() {
            let found = g.edges.iter().map(|&e| exponent[e]);
            if found.clone().eq(g.values[1].iter().copied()) {
                member |= 1 << i;
            } else if !found.eq(g.values[0].iter().copied()) {
                return None;
            }
        }
        Some(member)
    }
}

/// Labelling of the derived graph with its matching and oriented 2-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedLabelling {
    /// Labels by derived flag index.
    pub labels: Vec<u8>,
    /// derived edge -> labelled `(1, 1)`
    pub matched: Vec<bool>,
    /// derived edge -> vertex labelled 0, for edges outside the matching
    pub arc_source: Vec<Option<VertexId>>,
}

impl DerivedLabelling {
    pub fn matching(&self) -> Vec<EdgeId> {
        (0..self.matched.len()).filter(|&e| self.matched[e]).collect()
    }

    /// Cycles of the 2-factor with the canonical orientation, in order of minimum vertex.
    pub fn cycles(&self, dg: &Multigraph) -> Vec<DirectedCycle> {
        let all: Vec<EdgeId> = (0..dg.edge_count()).collect();
        two_factor_cycles(dg, &all, &self.matched)
    }

    pub fn is_bipartite(&self, dg: &Multigraph) -> bool {
        self.cycles(dg).iter().all(|c| c.len() % 2 == 0)
    }
}

/// Restriction of `labels` to the head and tail flags of the derived threads.
pub fn derived_labelling(g: &Multigraph, h: &HeadedDecomposition, family: &ThreadFamily, labels: &[u8]) -> Result<DerivedLabelling, Error> {
    if family.member(&super::exponent(labels)).is_none() {
        return Err(Error::ExponentNotInFamily);
    }
    let dg = &h.dec.derived.graph;
    let mut out = alloc::vec![UNSET; dg.flag_count()];
    let mut matched = alloc::vec![false; dg.edge_count()];
    let mut arc_source = alloc::vec![None; dg.edge_count()];
    for d in 0..dg.edge_count() {
        let t = &h.threads[h.dec.derived.edge_thread[d]];
        let ends = [t.head(), t.tail()];
        let mut got = [0u8; 2];
        for (slot, end) in got.iter_mut().zip(ends) {
            let u = h.dec.derived.derived_vertex(end.vertex).ok_or(Error::Internal("thread end is not a branch vertex"))?;
            *slot = labels[g.flag_index(end)];
            out[dg.flag_index(Flag { vertex: u, edge: d })] = *slot;
        }
        match got {
            [1, 1] => matched[d] = true,
            [0, 2] | [2, 0] => {
                let src = if got[0] == 0 { ends[0].vertex } else { ends[1].vertex };
                arc_source[d] = h.dec.derived.derived_vertex(src);
            }
            _ => return Err(Error::Internal("derived edge type outside {11, 02, 20}")),
        }
    }
    Ok(DerivedLabelling { labels: out, matched, arc_source })
}

/// Sort key fixing a total order on the cycles of the derived graph.
fn cycle_key(c: &DirectedCycle) -> (Vec<VertexId>, Vec<EdgeId>) {
    let mut vs = c.vertices.clone();
    vs.sort_unstable();
    let mut es = c.edges.clone();
    es.sort_unstable();
    (vs, es)
}

/// The first odd cycle of the derived 2-factor in the fixed cycle order.
pub fn first_odd_cycle(dg: &Multigraph, dl: &DerivedLabelling) -> Option<DirectedCycle> {
    dl.cycles(dg).into_iter().filter(|c| c.len() % 2 == 1).min_by_key(cycle_key)
}

/// Reverses the first odd cycle of the derived 2-factor of `labels`.
///
/// Along that cycle, trivial threads exchange labels 0 and 2 on their two
/// flags; other threads swap `pi20 <-> pi02` or `rho20 <-> rho02`.
pub fn flip_odd_cycle(
    g: &Multigraph,
    h: &HeadedDecomposition,
    family: &ThreadFamily,
    cats: &[Catalog],
    labels: &[u8],
) -> Result<Vec<u8>, Error> {
    let dg = &h.dec.derived.graph;
    let dl = derived_labelling(g, h, family, labels)?;
    let cycle = first_odd_cycle(dg, &dl).ok_or(Error::NoOddCycle)?;
    let mut out = labels.to_vec();
    for &d in &cycle.edges {
        let t = h.dec.derived.edge_thread[d];
        let thread = &h.threads[t];
        if thread.is_trivial() {
            for end in [thread.head(), thread.tail()] {
                let f = g.flag_index(end);
                out[f] = 2 - out[f];
            }
            continue;
        }
        let entry = cats[t].identify(labels).ok_or(Error::Internal("thread labelling not in its catalog"))?;
        let partner = entry.name.flipped().ok_or(Error::Internal("non-flippable labelling on an odd cycle"))?;
        let target = cats[t].get(partner).ok_or(Error::Internal("flip partner missing from catalog"))?;
        target.labelling.write(&mut out);
    }
    Ok(out)
}

/// Name of the catalog entry the reference labelling uses on thread `t`.
pub fn reference_name(h: &HeadedDecomposition, t: ThreadId) -> PrestarName {
    let thread = &h.threads[t];
    let forward = || match thread.origin {
        ThreadOrigin::Derived(d) => h.matching.arc_source(d) == Some(h.head_derived_vertex(t)),
        _ => true,
    };
    match h.class(t) {
        ThreadClass::VertexBlock | ThreadClass::MatchedNontrivial => PrestarName::Pi(1, 1),
        ThreadClass::UnmatchedOdd | ThreadClass::ClosedEven => PrestarName::Pi(0, 2),
        ThreadClass::ClosedOdd => PrestarName::Rho(0, 2),
        ThreadClass::MatchedTrivial => PrestarName::Rho(1, 1),
        ThreadClass::UnmatchedEven | ThreadClass::UnmatchedTrivial => {
            if forward() {
                PrestarName::Rho(0, 2)
            } else {
                PrestarName::Rho(2, 0)
            }
        }
    }
}

/// The reference labelling: exponent `w_∅`, matching `M`, 2-factor oriented
/// as chosen, and `rho02` on every odd closed thread.
pub fn build_reference(g: &Multigraph, h: &HeadedDecomposition, cats: &[Catalog]) -> Result<StarLabelling, Error> {
    let mut labels = alloc::vec![UNSET; g.flag_count()];
    for (t, cat) in cats.iter().enumerate() {
        let entry = cat.get(reference_name(h, t)).ok_or(Error::Internal("reference prestar labelling missing"))?;
        for &(f, l) in &entry.labelling.labels {
            if labels[f] != UNSET {
                return Err(Error::Internal("threads overlap on a flag"));
            }
            labels[f] = l;
        }
    }
    let pi = StarLabelling { labels };
    if !pi.is_valid(g) {
        return Err(Error::Internal("reference labelling is not a star labelling"));
    }
    if pi.exponent() != assemble_w(h, &[])?.values {
        return Err(Error::Internal("reference labelling has the wrong exponent"));
    }
    Ok(pi)
}

/// Sign of the reference labelling.
pub fn reference_sign(g: &Multigraph, h: &HeadedDecomposition, cats: &[Catalog]) -> Result<i8, Error> {
    Ok(sign_of(g, &build_reference(g, h, cats)?.labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::decomposition::decompose;
    use crate::matching::find_matching;
    use crate::nullstellensatz::search::StarSearch;
    use crate::weighting::assign_heads;

    fn headed(g: &Multigraph) -> HeadedDecomposition {
        let d = decompose(g, None).unwrap();
        let mc = find_matching(&d).unwrap();
        assign_heads(&d, &mc)
    }

    fn family_leaves(g: &Multigraph, family: &ThreadFamily) -> Vec<(Vec<u8>, i8, u32)> {
        let search = StarSearch::new(g, family);
        let mut out = Vec::new();
        search.for_each(&[], &mut |leaf| out.push((leaf.labels.to_vec(), leaf.sign, leaf.member)));
        out
    }

    fn small_family() -> Vec<corpus::NamedGraph> {
        corpus::bridged_family().into_iter().filter(|n| n.graph.edge_count() <= 18).collect()
    }

    #[test]
    fn reference_exists_on_family() {
        for named in corpus::bridged_family().into_iter().chain(corpus::bridgeless_planar()) {
            let g = &named.graph;
            let h = headed(g);
            let cats = catalogs(g, &h);
            let pi = build_reference(g, &h, &cats).unwrap();
            let family = ThreadFamily::new(&h).unwrap();
            let dl = derived_labelling(g, &h, &family, &pi.labels).unwrap();
            assert_eq!(dl.matched, h.matching.matched, "{}", named.name);
            for d in 0..dl.matched.len() {
                if !dl.matched[d] {
                    assert_eq!(dl.arc_source[d], h.matching.arc_source(d), "{}", named.name);
                }
            }
        }
    }

    #[test]
    fn family_labellings_restrict_to_catalogs() {
        for named in small_family() {
            let g = &named.graph;
            let h = headed(g);
            let cats = catalogs(g, &h);
            let family = ThreadFamily::new(&h).unwrap();
            let base = h.dec.base_flags();
            for (labels, _, member) in family_leaves(g, &family) {
                for f in &base {
                    assert_eq!(labels[g.flag_index(*f)], 1, "{}", named.name);
                }
                for cat in &cats {
                    assert!(cat.identify(&labels).is_some(), "{} thread {}", named.name, cat.thread);
                }
                assert_eq!(family.weighting(member), super::super::exponent(&labels));
                let dg = &h.dec.derived.graph;
                let dl = derived_labelling(g, &h, &family, &labels).unwrap();
                for v in 0..dg.vertex_count() {
                    assert_eq!(dg.incident(v).iter().filter(|&&e| dl.matched[e]).count(), 1, "{}", named.name);
                }
            }
        }
    }

    #[test]
    fn reference_is_unique_given_matching_orientation_and_closed_types() {
        for named in small_family() {
            let g = &named.graph;
            let h = headed(g);
            let cats = catalogs(g, &h);
            let pi = build_reference(g, &h, &cats).unwrap();
            let family = ThreadFamily::new(&h).unwrap();
            let arcs: Vec<Option<VertexId>> = (0..h.matching.matched.len())
                .map(|d| if h.matching.matched[d] { None } else { h.matching.arc_source(d) })
                .collect();
            let hits: Vec<Vec<u8>> = family_leaves(g, &family)
                .into_iter()
                .filter(|(_, _, member)| *member == 0)
                .map(|(labels, _, _)| labels)
                .filter(|labels| {
                    let dl = derived_labelling(g, &h, &family, labels).unwrap();
                    let closed_rho02 = cats.iter().filter(|c| h.class(c.thread) == ThreadClass::ClosedOdd).all(|c| {
                        c.identify(labels).map(|entry| entry.name) == Some(PrestarName::Rho(0, 2))
                    });
                    dl.matched == h.matching.matched && dl.arc_source == arcs && closed_rho02
                })
                .collect();
            assert_eq!(hits, alloc::vec![pi.labels.clone()], "{}", named.name);
        }
    }

    #[test]
    fn flip_is_a_sign_reversing_involution() {
        for named in small_family() {
            let g = &named.graph;
            let h = headed(g);
            let cats = catalogs(g, &h);
            let family = ThreadFamily::new(&h).unwrap();
            let dg = &h.dec.derived.graph;
            for (labels, sign, member) in family_leaves(g, &family) {
                let dl = derived_labelling(g, &h, &family, &labels).unwrap();
                if dl.is_bipartite(dg) {
                    assert_eq!(flip_odd_cycle(g, &h, &family, &cats, &labels), Err(Error::NoOddCycle));
                    continue;
                }
                let flipped = flip_odd_cycle(g, &h, &family, &cats, &labels).unwrap();
                assert_ne!(flipped, labels);
                assert_eq!(family.member(&super::super::exponent(&flipped)), Some(member), "{}", named.name);
                assert_eq!(sign_of(g, &flipped), -sign, "{}", named.name);
                assert_eq!(flip_odd_cycle(g, &h, &family, &cats, &flipped).unwrap(), labels, "{}", named.name);
            }
        }
    }

    #[test]
    fn bipartite_labellings_share_the_reference_sign() {
        for named in small_family() {
            let g = &named.graph;
            let h = headed(g);
            let cats = catalogs(g, &h);
            let s0 = reference_sign(g, &h, &cats).unwrap();
            let family = ThreadFamily::new(&h).unwrap();
            let dg = &h.dec.derived.graph;
            for (labels, sign, _) in family_leaves(g, &family) {
                if derived_labelling(g, &h, &family, &labels).unwrap().is_bipartite(dg) {
                    assert_eq!(sign, s0, "{}", named.name);
                }
            }
        }
    }

    #[test]
    fn family_members_round_trip() {
        let g = corpus::bridged_family().into_iter().find(|n| n.name == "theta111-root").unwrap().graph;
        let h = headed(&g);
        let family = ThreadFamily::new(&h).unwrap();
        assert_eq!(family.size(), 1 << h.unmatched_odd.len());
        for member in 0..family.size() as u32 {
            let s = family.subset(member);
            assert_eq!(family.member_of(&s), member);
            assert_eq!(family.weighting(member), assemble_w(&h, &s).unwrap().values);
            assert_eq!(family.member(&family.weighting(member)), Some(member));
        }
    }
}
