//! Loopless multigraphs with a fixed edge order.
//!
//! The edge order is part of the object's identity: the sign of every star
//! labelling, and therefore every coefficient of the edge monomial, is read
//! relative to it. Edges are never re-sorted after construction.

use alloc::vec::Vec;

use crate::error::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// An incident (vertex, edge) pair.
///
/// Flags are addressed by `2 * edge + side`, where side 0 is the first listed
/// endpoint. Parallel edges therefore never share a flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    // incident edges of each vertex, sorted by edge index
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, Error> {
        let mut incidence = alloc::vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::Loop { edge: index, vertex: u });
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::VertexOutOfRange { edge: index, vertex: u.max(v), vertex_count });
            }
            incidence[u].push(index);
            incidence[v].push(index);
        }
        Ok(Multigraph { vertex_count, edges, incidence })
    }

    /// Builds a graph whose vertex count is one more than the largest id used.
    pub fn from_edges(edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::new(n, edges.to_vec())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident edges of `v` in increasing index order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Degree of every vertex, parallel edges counted with multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Total degree of the edge monomial: adjacent edge pairs, counted with multiplicity.
    pub fn monomial_degree(&self) -> usize {
        self.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum()
    }

    pub fn is_cubic(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() == 3)
    }

    /// Number of vertices shared by two distinct edges (0, 1 or 2).
    pub fn shared_ends(&self, a: EdgeId, b: EdgeId) -> usize {
        let (a0, a1) = self.edges[a];
        let (b0, b1) = self.edges[b];
        [a0, a1].iter().filter(|&&x| x == b0 || x == b1).count()
    }

    pub fn flag_index(&self, flag: Flag) -> usize {
        let (u, _) = self.edges[flag.edge];
        2 * flag.edge + usize::from(u != flag.vertex)
    }

    pub fn flag_at(&self, index: usize) -> Flag {
        let edge = index / 2;
        let (u, v) = self.edges[edge];
        Flag { vertex: if index.is_multiple_of(2) { u } else { v }, edge }
    }

    pub fn flag_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Component id of every vertex, numbered in order of smallest member, and the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        self.components_avoiding(&[])
    }

    /// Components of the graph with the edges flagged in `removed` deleted.
    pub fn components_avoiding(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let mut comp = alloc::vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &e in &self.incidence[v] {
                    if removed.get(e).copied().unwrap_or(false) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Splits the graph into connected components.
    ///
    /// Each part keeps the relative order of its edges, so signs computed on a
    /// part agree with the restriction of the host ordering.
    pub fn split_components(&self) -> Vec<Component> {
        let (comp, count) = self.components();
        let mut parts: Vec<Component> = (0..count)
            .map(|_| Component { vertices: Vec::new(), edges: Vec::new(), graph: Multigraph::empty() })
            .collect();
        let mut local = alloc::vec![0; self.vertex_count];
        for v in 0..self.vertex_count {
            local[v] = parts[comp[v]].vertices.len();
            parts[comp[v]].vertices.push(v);
        }
        let mut local_edges: Vec<Vec<(VertexId, VertexId)>> = alloc::vec![Vec::new(); count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let c = comp[u];
            parts[c].edges.push(e);
            local_edges[c].push((local[u], local[v]));
        }
        for (part, edges) in parts.iter_mut().zip(local_edges) {
            part.graph = Multigraph::new(part.vertices.len(), edges).expect("component of a loopless graph");
        }
        parts
    }

    fn empty() -> Self {
        Multigraph { vertex_count: 0, edges: Vec::new(), incidence: Vec::new() }
    }
}

/// A connected component with maps back to the host graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Multigraph,
    /// local vertex id -> host vertex id
    pub vertices: Vec<VertexId>,
    /// local edge id -> host edge id
    pub edges: Vec<EdgeId>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_small_graphs() {
        let theta = Multigraph::from_edges(&[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(theta.degrees(), alloc::vec![3, 3]);
        assert!(theta.is_cubic());
        let k4 = Multigraph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.degrees().iter().all(|&d| d == 3));
        assert!(k4.is_cubic());
        let empty = Multigraph::new(0, Vec::new()).unwrap();
        assert!(empty.degrees().is_empty());
        let k2 = Multigraph::from_edges(&[(0, 1)]).unwrap();
        assert!(!k2.is_cubic());
    }

    #[test]
    fn loops_are_rejected() {
        assert_eq!(Multigraph::from_edges(&[(0, 0)]), Err(Error::Loop { edge: 0, vertex: 0 }));
    }

    #[test]
    fn flags_distinguish_parallel_edges() {
        let g = Multigraph::from_edges(&[(0, 1), (0, 1)]).unwrap();
        let a = g.flag_index(Flag { vertex: 0, edge: 0 });
        let b = g.flag_index(Flag { vertex: 0, edge: 1 });
        assert_ne!(a, b);
        assert_eq!(g.flag_at(b), Flag { vertex: 0, edge: 1 });
        assert_eq!(g.flag_at(3), Flag { vertex: 1, edge: 1 });
    }

    #[test]
    fn components_keep_edge_order() {
        let g = Multigraph::from_edges(&[(2, 3), (0, 1), (3, 2), (1, 0)]).unwrap();
        let parts = g.split_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].vertices, alloc::vec![0, 1]);
        assert_eq!(parts[0].edges, alloc::vec![1, 3]);
        assert_eq!(parts[0].graph.edges(), &[(0, 1), (1, 0)]);
        assert_eq!(parts[1].edges, alloc::vec![0, 2]);
    }
}
