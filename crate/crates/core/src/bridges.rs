//! Cut-edges of a multigraph by low-link DFS.

use alloc::vec::Vec;

use crate::graph::{EdgeId, Multigraph};

/// Indices of all cut-edges, ascending. A parallel edge is never a bridge
/// because the DFS skips only the tree edge by id, not by endpoint.
pub fn find_bridges(g: &Multigraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = alloc::vec![usize::MAX; n];
    let mut low = alloc::vec![0usize; n];
    let mut bridges = Vec::new();
    let mut clock = 0;
    // (vertex, edge used to enter it, next incident position)
    let mut stack: Vec<(usize, Option<EdgeId>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
            let inc = g.incident(v);
            if *pos < inc.len() {
                let e = inc[*pos];
                *pos += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(e) = parent_edge {
                    let u = g.other_end(e, v);
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        bridges.push(e);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

pub fn bridge_mask(g: &Multigraph) -> Vec<bool> {
    let mut mask = alloc::vec![false; g.edge_count()];
    for e in find_bridges(g) {
        mask[e] = true;
    }
    mask
}
