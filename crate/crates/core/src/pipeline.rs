//! Decomposition, matching, list sizes and optional certificate, per component.

use alloc::vec::Vec;

use crate::certificate::{certify, Certificate};
use crate::decomposition::{decompose, BlockId};
use crate::error::Error;
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::matching::find_matching;
use crate::nullstellensatz::search::{Executor, ENUMERATION_GUARD_EDGES};
use crate::weighting::{assign_heads, choose_f, CountReport, EdgeWeighting, HeadedDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Root block for the first component; later components use their default.
    pub root: Option<BlockId>,
    pub certify: bool,
    pub guard_edges: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { root: None, certify: false, guard_edges: ENUMERATION_GUARD_EDGES }
    }
}

pub struct ComponentAnalysis {
    /// Host ids of the component's vertices and edges, in local order.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub graph: Multigraph,
    pub headed: HeadedDecomposition,
    /// List sizes by local edge.
    pub f: EdgeWeighting,
    pub report: CountReport,
    pub certificate: Option<Certificate>,
}

impl ComponentAnalysis {
    pub fn w(&self) -> EdgeWeighting {
        EdgeWeighting { values: self.f.values.iter().map(|x| x - 1).collect() }
    }
}

pub struct Analysis {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub components: Vec<ComponentAnalysis>,
}

impl Analysis {
    pub fn bridges(&self) -> usize {
        self.components.iter().map(|c| c.report.b).sum()
    }

    pub fn fours(&self) -> usize {
        self.components.iter().map(|c| c.report.fours).sum()
    }

    /// List sizes by host edge.
    pub fn f(&self) -> Vec<u8> {
        let mut out = alloc::vec![0; self.edge_count];
        for c in &self.components {
            for (&e, &x) in c.edges.iter().zip(&c.f.values) {
                out[e] = x;
            }
        }
        out
    }
}

pub fn analyze(g: &Multigraph, opts: &Options, exec: &impl Executor) -> Result<Analysis, Error> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
    }
    let mut components = Vec::new();
    for (i, part) in g.split_components().into_iter().enumerate() {
        let root = if i == 0 { opts.root } else { None };
        let dec = decompose(&part.graph, root)?;
        let mc = find_matching(&dec).map_err(|e| match e {
            Error::NoAdmissibleMatching { .. } => Error::NoAdmissibleMatching { component: i },
            other => other,
        })?;
        let headed = assign_heads(&dec, &mc);
        let (f, report) = choose_f(&headed)?;
        let mut c = ComponentAnalysis { vertices: part.vertices, edges: part.edges, graph: part.graph, headed, f, report, certificate: None };
        if opts.certify {
            c.certificate = Some(certify(&c.graph, &c.headed, &c.w(), exec, opts.guard_edges)?);
        }
        components.push(c);
    }
    Ok(Analysis { vertex_count: g.vertex_count(), edge_count: g.edge_count(), components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::nullstellensatz::search::Sequential;

    #[test]
    fn k4_and_dumbbell() {
        let opts = Options { certify: true, ..Options::default() };
        let a = analyze(&corpus::k4(), &opts, &Sequential).unwrap();
        assert_eq!(a.fours(), 0);
        assert_eq!(a.components[0].certificate.as_ref().unwrap().total, 6);
        let a = analyze(&corpus::dumbbell(), &Options::default(), &Sequential).unwrap();
        assert_eq!((a.fours(), a.components[0].report.bound), (2, 2));
    }

    #[test]
    fn components_and_errors() {
        let mut edges: Vec<(usize, usize)> = corpus::theta().edges().to_vec();
        edges.extend(corpus::k4().edges().iter().map(|&(u, v)| (u + 2, v + 2)));
        let g = Multigraph::from_edges(&edges).unwrap();
        let a = analyze(&g, &Options::default(), &Sequential).unwrap();
        assert_eq!(a.components.len(), 2);
        assert_eq!(a.f(), alloc::vec![3; 9]);
        assert!(matches!(analyze(&corpus::path(2), &Options::default(), &Sequential), Err(Error::NotCubic { .. })));
        let small = Options { certify: true, guard_edges: 3, ..Options::default() };
        assert!(matches!(analyze(&corpus::k4(), &small, &Sequential), Err(Error::SizeGuard { .. })));
        assert!(matches!(analyze(&corpus::petersen(), &Options::default(), &Sequential), Err(Error::NoAdmissibleMatching { component: 0 })));
    }
}
