//! Small named graphs and a composable builder for bridged cubic multigraphs.
//!
//! Used by the test suites and by the CLI's example corpus. Everything built
//! here is planar: leaves are subdivided thetas or subdivided K4s, inner
//! pieces are vertex blocks, cycles, or subdivided planar cubic graphs.

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Multigraph, VertexId};

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Multigraph,
}

fn named(name: &str, graph: Multigraph) -> NamedGraph {
    NamedGraph { name: String::from(name), graph }
}

fn graph(edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(edges).expect("corpus graphs are loopless")
}

pub fn k2() -> Multigraph {
    graph(&[(0, 1)])
}

pub fn theta() -> Multigraph {
    graph(&[(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> Multigraph {
    graph(&K4_EDGES)
}

pub fn prism() -> Multigraph {
    graph(&PRISM_EDGES)
}

pub fn cube() -> Multigraph {
    graph(&[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
    ])
}

pub fn k33() -> Multigraph {
    graph(&[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
}

pub fn petersen() -> Multigraph {
    graph(&[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
    ])
}

/// Path with `len` edges.
pub fn path(len: usize) -> Multigraph {
    let edges: Vec<(usize, usize)> = (0..len).map(|i| (i, i + 1)).collect();
    graph(&edges)
}

/// Two subdivided K4s whose subdivision vertices are joined by a cut-edge.
pub fn dumbbell() -> Multigraph {
    build(|b| {
        let x = b.k4_leaf();
        let y = b.k4_leaf();
        b.bridge(x, y);
    })
}

/// Subdivided theta with a pendant edge at the subdivision vertex.
pub fn one_bridge_gadget() -> Multigraph {
    graph(&[(0, 1), (0, 1), (0, 2), (2, 1), (2, 3)])
}

const THETA_EDGES: [(usize, usize); 3] = [(0, 1), (0, 1), (0, 1)];
const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const PRISM_EDGES: [(usize, usize); 9] = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (5, 3)];

/// Incremental construction of a multigraph out of blocks.
#[derive(Default)]
pub struct Builder {
    count: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub fn vertex(&mut self) -> VertexId {
        self.count += 1;
        self.count - 1
    }

    pub fn edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    pub fn bridge(&mut self, u: VertexId, v: VertexId) {
        self.edge(u, v);
    }

    /// Copies a cubic base graph, subdividing base edge `i` `subdivisions[i]`
    /// times. Returns the subdivision vertices in creation order.
    pub fn subdivided(&mut self, base: &[(usize, usize)], subdivisions: &[usize]) -> Vec<VertexId> {
        let n = base.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let ids: Vec<VertexId> = (0..n).map(|_| self.vertex()).collect();
        let mut attach = Vec::new();
        for (i, &(u, v)) in base.iter().enumerate() {
            let k = subdivisions.get(i).copied().unwrap_or(0);
            let mut prev = ids[u];
            for _ in 0..k {
                let s = self.vertex();
                self.edge(prev, s);
                attach.push(s);
                prev = s;
            }
            self.edge(prev, ids[v]);
        }
        attach
    }

    /// Theta with one edge subdivided once.
    pub fn theta_leaf(&mut self) -> VertexId {
        self.subdivided(&THETA_EDGES, &[1])[0]
    }

    /// K4 with one edge subdivided once.
    pub fn k4_leaf(&mut self) -> VertexId {
        self.subdivided(&K4_EDGES, &[1])[0]
    }

    pub fn theta_with(&mut self, subdivisions: &[usize]) -> Vec<VertexId> {
        self.subdivided(&THETA_EDGES, subdivisions)
    }

    pub fn k4_with(&mut self, subdivisions: &[usize]) -> Vec<VertexId> {
        self.subdivided(&K4_EDGES, subdivisions)
    }

    pub fn prism_with(&mut self, subdivisions: &[usize]) -> Vec<VertexId> {
        self.subdivided(&PRISM_EDGES, subdivisions)
    }

    /// Cycle of the given length; every vertex still needs one cut-edge.
    pub fn cycle(&mut self, len: usize) -> Vec<VertexId> {
        let vs: Vec<VertexId> = (0..len).map(|_| self.vertex()).collect();
        for i in 0..len {
            self.edge(vs[i], vs[(i + 1) % len]);
        }
        vs
    }

    pub fn finish(self) -> Multigraph {
        Multigraph::new(self.count, self.edges).expect("builder graphs are loopless")
    }
}

pub fn build(f: impl FnOnce(&mut Builder)) -> Multigraph {
    let mut b = Builder::default();
    f(&mut b);
    b.finish()
}

/// Bridgeless planar cubic graphs up to eight vertices.
pub fn bridgeless_planar() -> Vec<NamedGraph> {
    alloc::vec![named("theta", theta()), named("k4", k4()), named("prism", prism()), named("cube", cube())]
}

/// Bridged planar cubic graphs with at most 14 vertices.
pub fn bridged_family() -> Vec<NamedGraph> {
    let mut out = Vec::new();
    let mut add = |name: &str, g: Multigraph| out.push(named(name, g));

    add("theta-theta", build(|b| {
        let x = b.theta_leaf();
        let y = b.theta_leaf();
        b.bridge(x, y);
    }));
    add("theta-k4", build(|b| {
        let x = b.theta_leaf();
        let y = b.k4_leaf();
        b.bridge(x, y);
    }));
    add("dumbbell", dumbbell());
    add("star-3theta", build(|b| {
        let v = b.vertex();
        for _ in 0..3 {
            let x = b.theta_leaf();
            b.bridge(v, x);
        }
    }));
    add("star-2theta-k4", build(|b| {
        let k = b.k4_leaf();
        let v = b.vertex();
        b.bridge(k, v);
        for _ in 0..2 {
            let x = b.theta_leaf();
            b.bridge(v, x);
        }
    }));
    add("c2-2theta", build(|b| {
        let x = b.theta_leaf();
        let c = b.cycle(2);
        let y = b.theta_leaf();
        b.bridge(x, c[0]);
        b.bridge(c[1], y);
    }));
    add("c2-theta-k4", build(|b| {
        let x = b.k4_leaf();
        let c = b.cycle(2);
        let y = b.theta_leaf();
        b.bridge(x, c[0]);
        b.bridge(c[1], y);
    }));
    add("c3-3theta", build(|b| {
        let x = b.theta_leaf();
        let c = b.cycle(3);
        b.bridge(x, c[0]);
        for &cv in &c[1..] {
            let y = b.theta_leaf();
            b.bridge(cv, y);
        }
    }));
    add("c3-2theta-k4", build(|b| {
        let x = b.k4_leaf();
        let c = b.cycle(3);
        b.bridge(x, c[0]);
        for &cv in &c[1..] {
            let y = b.theta_leaf();
            b.bridge(cv, y);
        }
    }));
    add("chain-c2-c2", build(|b| {
        let x = b.theta_leaf();
        let c1 = b.cycle(2);
        let c2 = b.cycle(2);
        let y = b.theta_leaf();
        b.bridge(x, c1[0]);
        b.bridge(c1[1], c2[0]);
        b.bridge(c2[1], y);
    }));
    add("chain-c2-c2-c2", build(|b| {
        let x = b.theta_leaf();
        let mut prev = x;
        for _ in 0..3 {
            let c = b.cycle(2);
            b.bridge(prev, c[0]);
            prev = c[1];
        }
        let y = b.theta_leaf();
        b.bridge(prev, y);
    }));
    add("theta2-root", build(|b| {
        let r = b.theta_with(&[2]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("theta11-root", build(|b| {
        let r = b.theta_with(&[1, 1]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("theta111-root", build(|b| {
        let r = b.theta_with(&[1, 1, 1]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("theta3-root", build(|b| {
        let r = b.theta_with(&[3]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("k4-opposite-root", build(|b| {
        // edges 0 = (0,1) and 5 = (2,3) are disjoint
        let r = b.k4_with(&[1, 0, 0, 0, 0, 1]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("k4-adjacent-root", build(|b| {
        let r = b.k4_with(&[1, 1]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("k4-double-root", build(|b| {
        let r = b.k4_with(&[2]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("prism-sub", build(|b| {
        let r = b.prism_with(&[1]);
        let x = b.theta_leaf();
        b.bridge(r[0], x);
    }));
    add("prism-rung-sub", build(|b| {
        let r = b.prism_with(&[0, 0, 0, 1]);
        let x = b.theta_leaf();
        b.bridge(r[0], x);
    }));
    add("prism-2sub", build(|b| {
        let r = b.prism_with(&[1, 0, 0, 0, 0, 0, 1]);
        for &a in &r {
            let x = b.theta_leaf();
            b.bridge(a, x);
        }
    }));
    add("double-star", build(|b| {
        let v1 = b.vertex();
        let v2 = b.vertex();
        b.bridge(v1, v2);
        for v in [v1, v1, v2, v2] {
            let x = b.theta_leaf();
            b.bridge(v, x);
        }
    }));
    add("c2-vertex", build(|b| {
        let x = b.theta_leaf();
        let c = b.cycle(2);
        let v = b.vertex();
        b.bridge(x, c[0]);
        b.bridge(c[1], v);
        for _ in 0..2 {
            let y = b.theta_leaf();
            b.bridge(v, y);
        }
    }));
    add("vertex-c2", build(|b| {
        let v = b.vertex();
        let x = b.theta_leaf();
        b.bridge(v, x);
        let y = b.theta_leaf();
        b.bridge(v, y);
        let c = b.cycle(2);
        b.bridge(v, c[0]);
        let z = b.theta_leaf();
        b.bridge(c[1], z);
    }));
    add("k4-leaf-theta2", build(|b| {
        let r = b.theta_with(&[0, 0, 2]);
        let x = b.k4_leaf();
        b.bridge(r[0], x);
        let y = b.theta_leaf();
        b.bridge(r[1], y);
    }));
    out
}

/// Loopless multigraphs with at most ten edges and maximum degree at most four.
///
/// Hand-picked shapes first, then seeded random multigraphs.
pub fn small_multigraphs() -> Vec<Multigraph> {
    let mut out = alloc::vec![
        k2(),
        theta(),
        k4(),
        path(2),
        path(3),
        path(4),
        path(5),
        graph(&[(0, 1), (0, 1)]),
        graph(&[(0, 1), (0, 1), (1, 2)]),
        graph(&[(0, 1), (0, 1), (1, 2), (1, 2)]),
        graph(&[(0, 1), (1, 2), (2, 0)]),
        graph(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
        graph(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        graph(&[(0, 1), (0, 2), (0, 3)]),
        graph(&[(0, 1), (0, 2), (0, 3), (0, 4)]),
        graph(&[(0, 1), (1, 2), (2, 0), (0, 3)]),
        graph(&[(0, 1), (0, 1), (0, 1), (1, 2)]),
        graph(&[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        graph(&[(0, 1), (0, 1), (0, 2), (1, 2)]),
        one_bridge_gadget(),
        graph(&[(0, 1), (0, 1), (2, 3), (2, 3), (1, 2)]),
        graph(&[(0, 1), (2, 3)]),
        prism(),
        k33(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while out.len() < 64 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=10);
        let mut deg = alloc::vec![0usize; n];
        let mut edges = Vec::new();
        let mut attempts = 0;
        while edges.len() < m && attempts < 200 {
            attempts += 1;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || deg[u] >= 4 || deg[v] >= 4 {
                continue;
            }
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
        if !edges.is_empty() {
            out.push(Multigraph::new(n, edges).expect("loopless by construction"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_is_cubic_and_bridged() {
        let fam = bridged_family();
        assert!(fam.len() >= 20);
        for g in &fam {
            assert!(g.graph.is_cubic(), "{}", g.name);
            assert!(g.graph.vertex_count() <= 14, "{} has {}", g.name, g.graph.vertex_count());
            assert!(g.graph.is_connected(), "{}", g.name);
            assert!(!crate::bridges::find_bridges(&g.graph).is_empty(), "{}", g.name);
        }
        let d = dumbbell();
        assert_eq!((d.vertex_count(), d.edge_count()), (10, 15));
    }

    #[test]
    fn small_corpus_bounds() {
        let c = small_multigraphs();
        assert!(c.len() >= 50);
        assert!(c.iter().all(|g| g.edge_count() <= 10 && g.max_degree() <= 4));
    }
}
