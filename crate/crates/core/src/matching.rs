//! Perfect matchings of the derived graph with bipartite complement.
//!
//! Per component, the matching must contain the base edge, its complementary
//! 2-factor must consist of even cycles only, and among those it maximizes the
//! number of matching edges realized by nontrivial threads. Ties go to the
//! lexicographically smallest sorted edge list.

use alloc::vec::Vec;

use crate::decomposition::Decomposition;
use crate::error::Error;
use crate::graph::{EdgeId, Multigraph, VertexId};

/// A cycle of the 2-factor with a cyclic direction: arc `edges[i]` runs from
/// `vertices[i]` to `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl DirectedCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Tail vertex of the arc on `e`, if `e` lies on this cycle.
    pub fn source_of(&self, e: EdgeId) -> Option<VertexId> {
        self.edges.iter().position(|&x| x == e).map(|i| self.vertices[i])
    }

    pub fn reversed(&self) -> DirectedCycle {
        let len = self.vertices.len();
        let vertices = (0..len).map(|i| self.vertices[(len - i) % len]).collect();
        let edges = (0..len).map(|i| self.edges[len - 1 - i]).collect();
        DirectedCycle { vertices, edges }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingChoice {
    /// derived edge -> in M
    pub matched: Vec<bool>,
    /// M, ascending.
    pub matching: Vec<EdgeId>,
    /// The oriented cycles of D, ordered by their minimum vertex.
    pub cycles: Vec<DirectedCycle>,
    pub nontrivial_in_m: usize,
}

impl MatchingChoice {
    /// Source vertex of the arc on 2-factor edge `e`.
    pub fn arc_source(&self, e: EdgeId) -> Option<VertexId> {
        self.cycles.iter().find_map(|c| c.source_of(e))
    }

    /// The same matching with every cycle of D reversed.
    pub fn reversed(&self) -> MatchingChoice {
        let mut out = self.clone();
        out.cycles = self.cycles.iter().map(DirectedCycle::reversed).collect();
        out
    }

    /// Proper 3-edge-colouring extending M: colour 0 on M, colours 1 and 2
    /// alternating around each cycle of D.
    pub fn three_edge_colouring(&self) -> Vec<u8> {
        let mut colour = alloc::vec![0u8; self.matched.len()];
        for c in &self.cycles {
            for (i, &e) in c.edges.iter().enumerate() {
                colour[e] = 1 + (i % 2) as u8;
            }
        }
        colour
    }
}

/// All perfect matchings of the subgraph spanned by `edges` on `vertices`
/// that contain `forced`, each as an ascending edge list.
pub fn enumerate_perfect_matchings(
    g: &Multigraph,
    vertices: &[VertexId],
    edges: &[EdgeId],
    forced: Option<EdgeId>,
) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut search = Search::new(g, vertices, edges);
    if let Some(e) = forced {
        if !search.try_take(e) {
            return out;
        }
    }
    search.enumerate(&mut |m| out.push(m.to_vec()));
    out.sort();
    out
}

/// Cycles of the 2-factor `D = edges - matching`, oriented canonically.
///
/// Each cycle starts at its minimum vertex and first steps to the smaller of
/// its two neighbours; a 2-cycle leaves along its smaller edge.
pub fn two_factor_cycles(g: &Multigraph, edges: &[EdgeId], matched: &[bool]) -> Vec<DirectedCycle> {
    let mut in_d = alloc::vec![false; g.edge_count()];
    for &e in edges {
        in_d[e] = !matched[e];
    }
    let mut used = alloc::vec![false; g.edge_count()];
    let mut visited = alloc::vec![false; g.vertex_count()];
    let mut starts: Vec<VertexId> = edges
        .iter()
        .filter(|&&e| in_d[e])
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    starts.sort_unstable();
    starts.dedup();
    let mut cycles = Vec::new();
    for start in starts {
        if visited[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut cycle_edges = Vec::new();
        let first = g
            .incident(start)
            .iter()
            .copied()
            .filter(|&e| in_d[e])
            .min_by_key(|&e| (g.other_end(e, start), e))
            .expect("2-factor vertex");
        let mut cur = start;
        let mut step = first;
        loop {
            visited[cur] = true;
            used[step] = true;
            vertices.push(cur);
            cycle_edges.push(step);
            cur = g.other_end(step, cur);
            if cur == start {
                break;
            }
            step = g.incident(cur).iter().copied().find(|&e| in_d[e] && !used[e]).expect("2-factor is 2-regular");
        }
        cycles.push(DirectedCycle { vertices, edges: cycle_edges });
    }
    cycles
}

struct Search<'a> {
    g: &'a Multigraph,
    vertices: &'a [VertexId],
    in_part: Vec<bool>,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Multigraph, vertices: &'a [VertexId], edges: &[EdgeId]) -> Self {
        let mut in_part = alloc::vec![false; g.edge_count()];
        for &e in edges {
            in_part[e] = true;
        }
        Search { g, vertices, in_part, covered: alloc::vec![false; g.vertex_count()], chosen: Vec::new() }
    }

    fn try_take(&mut self, e: EdgeId) -> bool {
        let (u, v) = self.g.endpoints(e);
        if self.covered[u] || self.covered[v] {
            return false;
        }
        self.covered[u] = true;
        self.covered[v] = true;
        self.chosen.push(e);
        true
    }

    fn release(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        self.covered[u] = false;
        self.covered[v] = false;
        self.chosen.pop();
    }

    /// Calls `leaf` on every completion, always covering the smallest uncovered vertex next.
    fn enumerate(&mut self, leaf: &mut dyn FnMut(&[EdgeId])) {
        let Some(&v) = self.vertices.iter().find(|&&v| !self.covered[v]) else {
            leaf(&self.chosen);
            return;
        };
        let incident: Vec<EdgeId> = self.g.incident(v).to_vec();
        for e in incident {
            if self.in_part[e] && self.try_take(e) {
                self.enumerate(leaf);
                self.release(e);
            }
        }
    }
}

fn solve_component(
    g: &Multigraph,
    vertices: &[VertexId],
    edges: &[EdgeId],
    base: Option<EdgeId>,
    nontrivial: &[bool],
) -> Option<Vec<EdgeId>> {
    let mut search = Search::new(g, vertices, edges);
    if let Some(e) = base {
        if !search.try_take(e) {
            return None;
        }
    }
    let mut best: Option<(usize, Vec<EdgeId>)> = None;
    let mut matched = alloc::vec![false; g.edge_count()];
    let mut leaf = |m: &[EdgeId]| {
        for &e in m {
            matched[e] = true;
        }
        let bipartite = two_factor_cycles(g, edges, &matched).iter().all(|c| c.len() % 2 == 0);
        for &e in m {
            matched[e] = false;
        }
        if !bipartite {
            return;
        }
        let score = m.iter().filter(|&&e| nontrivial[e]).count();
        let mut sorted = m.to_vec();
        sorted.sort_unstable();
        let better = match &best {
            None => true,
            Some((s, b)) => score > *s || (score == *s && sorted < *b),
        };
        if better {
            best = Some((score, sorted));
        }
    };
    search.enumerate(&mut leaf);
    best.map(|(_, m)| m)
}

/// Admissible matching of an arbitrary cubic graph treated as a derived graph.
///
/// Components are taken in order of their minimum vertex; `base_edges` lists
/// the forced edges (at most one per component) and `nontrivial[e]` marks the
/// edges whose matching counts towards the maximized score.
pub fn find_matching_on(g: &Multigraph, base_edges: &[EdgeId], nontrivial: &[bool]) -> Result<MatchingChoice, Error> {
    let (comp, count) = g.components();
    let mut parts: Vec<(Vec<VertexId>, Vec<EdgeId>, Option<EdgeId>)> =
        (0..count).map(|_| (Vec::new(), Vec::new(), None)).collect();
    for v in 0..g.vertex_count() {
        parts[comp[v]].0.push(v);
    }
    for e in 0..g.edge_count() {
        parts[comp[g.endpoints(e).0]].1.push(e);
    }
    for &e in base_edges {
        parts[comp[g.endpoints(e).0]].2 = Some(e);
    }
    solve_parts(g, &parts, nontrivial)
}

fn solve_parts(
    g: &Multigraph,
    parts: &[(Vec<VertexId>, Vec<EdgeId>, Option<EdgeId>)],
    nontrivial: &[bool],
) -> Result<MatchingChoice, Error> {
    let mut matched = alloc::vec![false; g.edge_count()];
    for (index, (vertices, edges, base)) in parts.iter().enumerate() {
        let m = solve_component(g, vertices, edges, *base, nontrivial)
            .ok_or(Error::NoAdmissibleMatching { component: index })?;
        for e in m {
            matched[e] = true;
        }
    }
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let matching: Vec<EdgeId> = all.iter().copied().filter(|&e| matched[e]).collect();
    let nontrivial_in_m = matching.iter().filter(|&&e| nontrivial[e]).count();
    let cycles = two_factor_cycles(g, &all, &matched);
    Ok(MatchingChoice { matched, matching, cycles, nontrivial_in_m })
}

/// Admissible matching of the derived graph of `dec`, components in block order.
pub fn find_matching(dec: &Decomposition) -> Result<MatchingChoice, Error> {
    let g = &dec.derived.graph;
    let nontrivial: Vec<bool> = (0..g.edge_count()).map(|e| !dec.derived_thread(e).is_trivial()).collect();
    let parts: Vec<(Vec<VertexId>, Vec<EdgeId>, Option<EdgeId>)> =
        dec.derived.components.iter().map(|c| (c.vertices.clone(), c.edges.clone(), c.base_edge)).collect();
    solve_parts(g, &parts, &nontrivial)
}

/// Re-derives the canonical orientation of D from M alone.
pub fn orient_two_factor(g: &Multigraph, mc: &MatchingChoice) -> MatchingChoice {
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut out = mc.clone();
    out.cycles = two_factor_cycles(g, &all, &mc.matched);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::decomposition::decompose;

    fn all_edges(g: &Multigraph) -> Vec<EdgeId> {
        (0..g.edge_count()).collect()
    }

    #[test]
    fn k4_matchings_all_admissible() {
        let g = corpus::k4();
        let vs: Vec<VertexId> = (0..4).collect();
        let ms = enumerate_perfect_matchings(&g, &vs, &all_edges(&g), None);
        assert_eq!(ms.len(), 3);
        let mc = find_matching_on(&g, &[], &[false; 6]).unwrap();
        assert_eq!(mc.matching, alloc::vec![0, 5]);
        assert_eq!(mc.cycles.len(), 1);
        assert_eq!(mc.cycles[0].vertices, alloc::vec![0, 2, 1, 3]);
    }

    #[test]
    fn square_orientation() {
        let g = Multigraph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cycles = two_factor_cycles(&g, &all_edges(&g), &[false; 4]);
        assert_eq!(cycles, alloc::vec![DirectedCycle { vertices: alloc::vec![0, 1, 2, 3], edges: alloc::vec![0, 1, 2, 3] }]);
        let r = cycles[0].reversed();
        assert_eq!(r.vertices, alloc::vec![0, 3, 2, 1]);
        assert_eq!(r.edges, alloc::vec![3, 2, 1, 0]);
    }

    #[test]
    fn petersen_has_no_admissible_matching() {
        let g = corpus::petersen();
        let vs: Vec<VertexId> = (0..10).collect();
        assert_eq!(enumerate_perfect_matchings(&g, &vs, &all_edges(&g), None).len(), 6);
        assert_eq!(find_matching_on(&g, &[], &[false; 15]), Err(Error::NoAdmissibleMatching { component: 0 }));
    }

    #[test]
    fn dumbbell_forces_base_and_nontrivial() {
        let g = corpus::dumbbell();
        let d = decompose(&g, None).unwrap();
        let mc = find_matching(&d).unwrap();
        for &b in &d.derived.base_edges {
            assert!(mc.matched[b]);
        }
        assert_eq!(mc.nontrivial_in_m, 2);
    }

    #[test]
    fn family_matchings_are_optimal_and_colourable() {
        for named in corpus::bridged_family() {
            let d = decompose(&named.graph, None).unwrap();
            let mc = find_matching(&d).unwrap();
            let dg = &d.derived.graph;
            let colour = mc.three_edge_colouring();
            for v in 0..dg.vertex_count() {
                let mut seen: Vec<u8> = dg.incident(v).iter().map(|&e| colour[e]).collect();
                seen.sort_unstable();
                assert_eq!(seen, alloc::vec![0, 1, 2], "{}", named.name);
            }
            for comp in &d.derived.components {
                let best = enumerate_perfect_matchings(dg, &comp.vertices, &comp.edges, comp.base_edge)
                    .into_iter()
                    .filter(|m| {
                        let mut matched = alloc::vec![false; dg.edge_count()];
                        m.iter().for_each(|&e| matched[e] = true);
                        two_factor_cycles(dg, &comp.edges, &matched).iter().all(|c| c.len() % 2 == 0)
                    })
                    .map(|m| m.iter().filter(|&&e| !d.derived_thread(e).is_trivial()).count())
                    .max()
                    .unwrap();
                let got = comp.edges.iter().filter(|&&e| mc.matched[e] && !d.derived_thread(e).is_trivial()).count();
                assert_eq!(got, best, "{}", named.name);
            }
        }
    }
}
