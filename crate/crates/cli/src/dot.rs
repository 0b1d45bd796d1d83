//! Graphviz text for blocks, threads and derived graphs.

use std::fmt::Write;

use clap::ValueEnum;
use fewlists_core::decomposition::BlockKind;
use fewlists_core::pipeline::Analysis;
use fewlists_core::thread::ThreadClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Blocks,
    Threads,
    Derived,
}

pub fn class_colour(class: ThreadClass) -> &'static str {
    match class {
        ThreadClass::VertexBlock => "darkorange",
        ThreadClass::ClosedOdd => "purple",
        ThreadClass::ClosedEven => "magenta",
        ThreadClass::MatchedTrivial => "black",
        ThreadClass::MatchedNontrivial => "blue",
        ThreadClass::UnmatchedOdd => "red",
        ThreadClass::UnmatchedEven => "darkgreen",
        ThreadClass::UnmatchedTrivial => "gray40",
    }
}

fn block_shape(kind: BlockKind) -> &'static str {
    match kind {
        BlockKind::Vertex => "point",
        BlockKind::Cycle => "circle",
        BlockKind::Proper => "box",
    }
}

pub fn render(a: &Analysis, what: What) -> String {
    let mut s = String::from("graph fewlists {\n");
    for (ci, c) in a.components.iter().enumerate() {
        let dec = &c.headed.dec;
        match what {
            What::Blocks => {
                for (id, b) in dec.blocks.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "  c{ci}_b{id} [label=\"{id}: {:?} ({} v)\", shape={}{}];",
                        b.kind,
                        b.vertices.len(),
                        block_shape(b.kind),
                        if b.is_root { ", peripheries=2" } else { "" }
                    );
                }
                for &e in &dec.bridges {
                    let (u, v) = c.graph.endpoints(e);
                    let _ = writeln!(s, "  c{ci}_b{} -- c{ci}_b{} [label=\"e{}\"];", dec.block_of[u], dec.block_of[v], c.edges[e]);
                }
            }
            What::Threads => {
                for &v in &c.vertices {
                    let _ = writeln!(s, "  v{v} [label=\"{v}\"];");
                }
                for (e, &(u, v)) in c.graph.edges().iter().enumerate() {
                    let t = c.headed.dec.edge_thread[e];
                    let class = c.headed.class(t);
                    let _ = writeln!(
                        s,
                        "  v{} -- v{} [label=\"e{} t{t} f={}\", color={}, class=\"{}\"];",
                        c.vertices[u],
                        c.vertices[v],
                        c.edges[e],
                        c.f.values[e],
                        class_colour(class),
                        class.name()
                    );
                }
            }
            What::Derived => {
                let dg = &dec.derived.graph;
                for d in 0..dg.vertex_count() {
                    let _ = writeln!(s, "  c{ci}_d{d} [label=\"{}\"];", c.vertices[dec.derived.host_vertex[d]]);
                }
                for (d, &(u, v)) in dg.edges().iter().enumerate() {
                    let t = dec.derived.edge_thread[d];
                    let class = c.headed.class(t);
                    let style = if c.headed.matching.matched[d] { "bold" } else { "solid" };
                    let _ = writeln!(
                        s,
                        "  c{ci}_d{u} -- c{ci}_d{v} [label=\"t{t}\", color={}, style={style}, class=\"{}\"];",
                        class_colour(class),
                        class.name()
                    );
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
