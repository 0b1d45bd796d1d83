//! Blocks, the block tree, the derived graph, and the thread partition.
//!
//! Blocks here are the components of `G - B(G)`, not 2-connected blocks. In a
//! cubic graph every vertex has 0, 2 or 3 non-bridge edges, so each block is a
//! single vertex, a cycle, or a subdivision of a 2-connected cubic multigraph.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::bridges::find_bridges;
use crate::error::Error;
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::thread::{ThreadClass, ThreadId, ThreadOrigin, ThreadPiece, ThreadShape};

pub type BlockId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockKind {
    Vertex,
    Cycle,
    Proper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub vertices: Vec<VertexId>,
    /// Non-bridge edges inside the block.
    pub edges: Vec<EdgeId>,
    pub is_root: bool,
    /// Parent block in the block tree.
    pub parent: Option<BlockId>,
    /// The cut-edge towards the root (`e_H`).
    pub parent_bridge: Option<EdgeId>,
    /// The endpoint of `e_H` inside this block (`v_H`).
    pub attachment: Option<VertexId>,
    /// Incident cut-edges other than `e_H` (`B(H)`).
    pub outgoing: Vec<EdgeId>,
}

impl Block {
    /// Edge set of the extended block `H+`.
    pub fn extended_edges(&self) -> Vec<EdgeId> {
        let mut out = self.edges.clone();
        out.extend_from_slice(&self.outgoing);
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedComponent {
    pub block: BlockId,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub base_edge: Option<EdgeId>,
}

/// Proper blocks with degree-2 vertices suppressed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraph {
    pub graph: Multigraph,
    /// derived vertex -> host vertex
    pub host_vertex: Vec<VertexId>,
    /// derived edge -> thread realizing it
    pub edge_thread: Vec<ThreadId>,
    pub base_edges: Vec<EdgeId>,
    pub components: Vec<DerivedComponent>,
}

impl DerivedGraph {
    pub fn derived_vertex(&self, host: VertexId) -> Option<VertexId> {
        self.host_vertex.binary_search(&host).ok()
    }

    pub fn component_of_vertex(&self, v: VertexId) -> usize {
        self.components.iter().position(|c| c.vertices.binary_search(&v).is_ok()).expect("vertex in a component")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub bridges: Vec<EdgeId>,
    pub is_bridge: Vec<bool>,
    pub blocks: Vec<Block>,
    /// host vertex -> block
    pub block_of: Vec<BlockId>,
    pub root: BlockId,
    pub derived: DerivedGraph,
    pub threads: Vec<ThreadPiece>,
    /// host edge -> thread containing it
    pub edge_thread: Vec<ThreadId>,
}

/// Parity data of a closed thread.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedParity {
    pub thread: ThreadId,
    pub cycle_length: usize,
    pub order: usize,
}

impl ClosedParity {
    pub fn opposite(&self) -> bool {
        self.cycle_length % 2 != self.order % 2
    }
}

pub fn decompose(g: &Multigraph, root_choice: Option<BlockId>) -> Result<Decomposition, Error> {
    for v in 0..g.vertex_count() {
        if g.degree(v) != 3 {
            return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let bridges = find_bridges(g);
    let mut is_bridge = alloc::vec![false; g.edge_count()];
    for &e in &bridges {
        is_bridge[e] = true;
    }
    let inner_degree = |v: VertexId| g.incident(v).iter().filter(|&&e| !is_bridge[e]).count();

    let (block_of, block_count) = g.components_avoiding(&is_bridge);
    let mut blocks: Vec<Block> = (0..block_count)
        .map(|_| Block {
            kind: BlockKind::Vertex,
            vertices: Vec::new(),
            edges: Vec::new(),
            is_root: false,
            parent: None,
            parent_bridge: None,
            attachment: None,
            outgoing: Vec::new(),
        })
        .collect();
    for v in 0..g.vertex_count() {
        blocks[block_of[v]].vertices.push(v);
    }
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if !is_bridge[e] {
            blocks[block_of[u]].edges.push(e);
        }
    }
    for block in &mut blocks {
        let degs: Vec<usize> = block.vertices.iter().map(|&v| inner_degree(v)).collect();
        block.kind = if block.vertices.len() == 1 {
            BlockKind::Vertex
        } else if degs.iter().all(|&d| d == 2) {
            BlockKind::Cycle
        } else {
            BlockKind::Proper
        };
    }

    let root = match root_choice {
        Some(b) if b >= blocks.len() => return Err(Error::NoSuchBlock(b)),
        Some(b) if blocks[b].kind != BlockKind::Proper => return Err(Error::RootNotProper(b)),
        Some(b) => b,
        None => {
            let v = (0..g.vertex_count()).find(|&v| inner_degree(v) == 3).ok_or(Error::Internal("no proper block"))?;
            block_of[v]
        }
    };
    blocks[root].is_root = true;

    // block tree, bridges as tree edges
    let mut tree: Vec<Vec<EdgeId>> = alloc::vec![Vec::new(); block_count];
    for &e in &bridges {
        let (u, v) = g.endpoints(e);
        tree[block_of[u]].push(e);
        tree[block_of[v]].push(e);
    }
    let mut seen = alloc::vec![false; block_count];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(b) = queue.pop_front() {
        for &e in &tree[b] {
            let (u, v) = g.endpoints(e);
            let far = if block_of[u] == b { v } else { u };
            let child = block_of[far];
            if seen[child] {
                continue;
            }
            seen[child] = true;
            blocks[child].parent = Some(b);
            blocks[child].parent_bridge = Some(e);
            blocks[child].attachment = Some(far);
            queue.push_back(child);
        }
    }
    for (b, block) in blocks.iter_mut().enumerate() {
        let mut outgoing: Vec<EdgeId> = tree[b].iter().copied().filter(|&e| Some(e) != block.parent_bridge).collect();
        outgoing.sort_unstable();
        block.outgoing = outgoing;
    }

    // bridge hanging at a degree-2 vertex of a block
    let bridge_at = |v: VertexId| g.incident(v).iter().copied().find(|&e| is_bridge[e]);

    // derived graph and derived threads
    let host_vertex: Vec<VertexId> =
        (0..g.vertex_count()).filter(|&v| blocks[block_of[v]].kind == BlockKind::Proper && inner_degree(v) == 3).collect();
    let derived_id = |v: VertexId| host_vertex.binary_search(&v).expect("branch vertex");
    let mut threads: Vec<ThreadPiece> = Vec::new();
    let mut derived_edges = Vec::new();
    let mut visited = alloc::vec![false; g.edge_count()];
    for &x in &host_vertex {
        for &first in g.incident(x) {
            if is_bridge[first] || visited[first] {
                continue;
            }
            let block = block_of[x];
            let mut spine_vertices = alloc::vec![x];
            let mut spine = alloc::vec![first];
            let mut feet = Vec::new();
            let mut missing_edge = None;
            visited[first] = true;
            let mut prev = first;
            let mut cur = g.other_end(first, x);
            while inner_degree(cur) == 2 {
                spine_vertices.push(cur);
                let foot = bridge_at(cur).ok_or(Error::Internal("degree-2 vertex without bridge"))?;
                if Some(foot) == blocks[block].parent_bridge {
                    feet.push(None);
                    missing_edge = Some(foot);
                } else {
                    feet.push(Some(foot));
                }
                let next = g
                    .incident(cur)
                    .iter()
                    .copied()
                    .find(|&e| !is_bridge[e] && e != prev)
                    .ok_or(Error::Internal("broken path"))?;
                visited[next] = true;
                spine.push(next);
                prev = next;
                cur = g.other_end(next, cur);
            }
            if cur == x {
                return Err(Error::Internal("derived loop"));
            }
            spine_vertices.push(cur);
            let derived_edge = derived_edges.len();
            derived_edges.push((derived_id(x), derived_id(cur)));
            let order = feet.len();
            threads.push(ThreadPiece {
                shape: if missing_edge.is_some() { ThreadShape::Injured } else { ThreadShape::Open },
                order,
                spine_vertices,
                spine,
                feet,
                missing_edge,
                origin: ThreadOrigin::Derived(derived_edge),
                block: Some(block),
                class: None,
            });
        }
    }
    let derived_graph = Multigraph::new(host_vertex.len(), derived_edges)?;
    let edge_thread_derived: Vec<ThreadId> = (0..derived_graph.edge_count()).collect();

    // vertex and cycle blocks
    for (b, block) in blocks.iter().enumerate() {
        match block.kind {
            BlockKind::Proper => {}
            BlockKind::Vertex => {
                let v = block.vertices[0];
                let [e0, e1] = [block.outgoing[0], block.outgoing[1]];
                threads.push(ThreadPiece {
                    shape: ThreadShape::Injured,
                    order: 1,
                    spine_vertices: alloc::vec![g.other_end(e0, v), v, g.other_end(e1, v)],
                    spine: alloc::vec![e0, e1],
                    feet: alloc::vec![None],
                    missing_edge: block.parent_bridge,
                    origin: ThreadOrigin::VertexBlock(b),
                    block: Some(b),
                    class: Some(ThreadClass::VertexBlock),
                });
            }
            BlockKind::Cycle => {
                let start = block.attachment.ok_or(Error::Internal("cycle block as root"))?;
                let first = g.incident(start).iter().copied().find(|&e| !is_bridge[e]).expect("cycle edge");
                let mut spine_vertices = alloc::vec![start];
                let mut spine = alloc::vec![first];
                let mut feet = Vec::new();
                let mut prev = first;
                let mut cur = g.other_end(first, start);
                while cur != start {
                    spine_vertices.push(cur);
                    feet.push(Some(bridge_at(cur).expect("cycle vertex bridge")));
                    let next = g.incident(cur).iter().copied().find(|&e| !is_bridge[e] && e != prev).expect("cycle edge");
                    spine.push(next);
                    prev = next;
                    cur = g.other_end(next, cur);
                }
                spine_vertices.push(start);
                let order = feet.len();
                threads.push(ThreadPiece {
                    shape: ThreadShape::Closed,
                    order,
                    spine_vertices,
                    spine,
                    feet,
                    missing_edge: None,
                    origin: ThreadOrigin::CycleBlock(b),
                    block: Some(b),
                    class: Some(if order % 2 == 1 { ThreadClass::ClosedOdd } else { ThreadClass::ClosedEven }),
                });
            }
        }
    }

    let mut edge_thread = alloc::vec![usize::MAX; g.edge_count()];
    for (t, thread) in threads.iter().enumerate() {
        for e in thread.edges() {
            if edge_thread[e] != usize::MAX {
                return Err(Error::Internal("threads overlap"));
            }
            edge_thread[e] = t;
        }
    }
    if edge_thread.contains(&usize::MAX) {
        return Err(Error::Internal("threads do not cover the edge set"));
    }

    let mut components = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        if block.kind != BlockKind::Proper {
            continue;
        }
        let vertices: Vec<VertexId> = (0..host_vertex.len()).filter(|&d| block_of[host_vertex[d]] == b).collect();
        let edges: Vec<EdgeId> = (0..derived_graph.edge_count()).filter(|&d| threads[d].block == Some(b)).collect();
        let bases: Vec<EdgeId> = edges.iter().copied().filter(|&d| threads[d].shape == ThreadShape::Injured).collect();
        let expected = if block.is_root { 0 } else { 1 };
        if bases.len() != expected {
            return Err(Error::Internal("derived component base edge count"));
        }
        components.push(DerivedComponent { block: b, vertices, edges, base_edge: bases.first().copied() });
    }
    let base_edges = components.iter().filter_map(|c| c.base_edge).collect();

    Ok(Decomposition {
        bridges,
        is_bridge,
        blocks,
        block_of,
        root,
        derived: DerivedGraph {
            graph: derived_graph,
            host_vertex,
            edge_thread: edge_thread_derived,
            base_edges,
            components,
        },
        threads,
        edge_thread,
    })
}

impl Decomposition {
    pub fn block_count(&self, kind: BlockKind) -> usize {
        self.blocks.iter().filter(|b| b.kind == kind).count()
    }

    /// Cycle length and order of every closed thread.
    pub fn classify_parities(&self) -> Vec<ClosedParity> {
        self.threads
            .iter()
            .enumerate()
            .filter(|(_, t)| t.shape == ThreadShape::Closed)
            .map(|(i, t)| ClosedParity { thread: i, cycle_length: t.spine.len(), order: t.order })
            .collect()
    }

    /// Thread realizing derived edge `e`.
    pub fn derived_thread(&self, e: EdgeId) -> &ThreadPiece {
        &self.threads[self.derived.edge_thread[e]]
    }

    /// Flags `(v_H, e_H)` of every nonroot block.
    pub fn base_flags(&self) -> Vec<crate::graph::Flag> {
        self.blocks
            .iter()
            .filter_map(|b| Some(crate::graph::Flag { vertex: b.attachment?, edge: b.parent_bridge? }))
            .collect()
    }

    /// Blocks on the tree path from `b` up to the root, `b` first.
    pub fn path_to_root(&self, mut b: BlockId) -> Vec<BlockId> {
        let mut path = alloc::vec![b];
        while let Some(p) = self.blocks[b].parent {
            path.push(p);
            b = p;
        }
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn check_partitions(g: &Multigraph, d: &Decomposition) {
        let thread_total: usize = d.threads.iter().map(|t| t.spine.len() + t.foot_count()).sum();
        assert_eq!(thread_total, g.edge_count());
        let block_total: usize = d.blocks.iter().map(|b| b.extended_edges().len()).sum();
        assert_eq!(block_total, g.edge_count());
        let mut seen = alloc::vec![0; g.edge_count()];
        for b in &d.blocks {
            for e in b.extended_edges() {
                seen[e] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
        assert!(d.derived.graph.is_cubic());
        assert_eq!(d.blocks.iter().filter(|b| b.is_root).count(), 1);
        assert_eq!(d.blocks[d.root].kind, BlockKind::Proper);
    }

    #[test]
    fn k4_is_one_root_block() {
        let g = corpus::k4();
        let d = decompose(&g, None).unwrap();
        check_partitions(&g, &d);
        assert_eq!(d.blocks.len(), 1);
        assert!(d.bridges.is_empty());
        assert_eq!(d.derived.graph.edge_count(), 6);
        assert!(d.threads.iter().all(|t| t.shape == ThreadShape::Open && t.order == 0));
    }

    #[test]
    fn dumbbell_threads() {
        let g = corpus::dumbbell();
        let d = decompose(&g, None).unwrap();
        check_partitions(&g, &d);
        assert_eq!(d.block_count(BlockKind::Proper), 2);
        assert_eq!(d.derived.components.len(), 2);
        assert_eq!(d.derived.graph.vertex_count(), 8);
        let open1: Vec<_> = d.threads.iter().filter(|t| t.shape == ThreadShape::Open && t.order == 1).collect();
        assert_eq!(open1.len(), 1);
        assert_eq!(open1[0].feet, alloc::vec![Some(d.bridges[0])]);
        assert_eq!(open1[0].block, Some(d.root));
        let injured: Vec<_> = d.threads.iter().filter(|t| t.shape == ThreadShape::Injured).collect();
        assert_eq!(injured.len(), 1);
        assert_eq!(injured[0].missing_edge, Some(d.bridges[0]));
        assert_eq!(d.threads.iter().filter(|t| t.order == 0).count(), 10);
        assert_eq!(d.derived.base_edges.len(), 1);
    }

    #[test]
    fn cycle_block_parity() {
        for named in corpus::bridged_family() {
            let d = decompose(&named.graph, None).unwrap();
            for p in d.classify_parities() {
                assert!(p.opposite(), "{}", named.name);
                let class = d.threads[p.thread].class.unwrap();
                assert_eq!(class == ThreadClass::ClosedOdd, p.order % 2 == 1);
            }
        }
        // two parallel edges form a cycle block of length 2, order 1
        let g = corpus::build(|b| {
            let leaf_a = b.theta_leaf();
            let leaf_b = b.theta_leaf();
            let cyc = b.cycle(2);
            b.bridge(leaf_a, cyc[0]);
            b.bridge(cyc[1], leaf_b);
        });
        let d = decompose(&g, None).unwrap();
        let parities = d.classify_parities();
        assert_eq!(parities.len(), 1);
        assert_eq!((parities[0].cycle_length, parities[0].order), (2, 1));
    }

    #[test]
    fn invariants_over_family() {
        for named in corpus::bridged_family() {
            let g = &named.graph;
            let d = decompose(g, None).unwrap();
            check_partitions(g, &d);
            for (i, block) in d.blocks.iter().enumerate() {
                if let Some(e) = block.parent_bridge {
                    assert!(d.is_bridge[e]);
                    let parent = block.parent.unwrap();
                    let (u, v) = g.endpoints(e);
                    let ends = [d.block_of[u], d.block_of[v]];
                    assert!(ends.contains(&i) && ends.contains(&parent));
                    assert_eq!(*d.path_to_root(i).last().unwrap(), d.root);
                }
            }
            // injured threads sit exactly at the parent cut-edge of their block
            for t in &d.threads {
                if t.shape == ThreadShape::Injured {
                    assert_eq!(t.missing_edge, d.blocks[t.block.unwrap()].parent_bridge);
                }
                for f in t.feet.iter().flatten() {
                    assert!(d.base_flags().iter().any(|fl| fl.edge == *f));
                }
            }
            // re-subdividing every derived edge along its thread gives back H+
            for comp in &d.derived.components {
                let mut edges: Vec<EdgeId> = comp.edges.iter().flat_map(|&e| d.derived_thread(e).edges()).collect();
                edges.sort_unstable();
                assert_eq!(edges, d.blocks[comp.block].extended_edges(), "{}", named.name);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let path = Multigraph::from_edges(&[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(decompose(&path, None), Err(Error::NotCubic { .. })));
        let two = Multigraph::from_edges(&[(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)]).unwrap();
        assert_eq!(decompose(&two, None), Err(Error::Disconnected));
        let g = corpus::dumbbell();
        let d = decompose(&g, None).unwrap();
        let other = (0..d.blocks.len()).find(|&b| b != d.root).unwrap();
        let d2 = decompose(&g, Some(other)).unwrap();
        assert_eq!(d2.root, other);
        let chain = corpus::bridged_family().into_iter().find(|n| n.name == "star-3theta").unwrap();
        let dc = decompose(&chain.graph, None).unwrap();
        let vertex_block = dc.blocks.iter().position(|b| b.kind == BlockKind::Vertex).unwrap();
        assert_eq!(decompose(&chain.graph, Some(vertex_block)), Err(Error::RootNotProper(vertex_block)));
    }
}
