//! The `fewlists/1` JSON report and its plain-text rendering.

use std::collections::BTreeMap;

use fewlists_core::certificate::Certificate;
use fewlists_core::choosability::{ListAssignment, RandomCheck};
use fewlists_core::decomposition::BlockKind;
use fewlists_core::pipeline::{Analysis, ComponentAnalysis};
use fewlists_core::thread::{ThreadClass, ThreadShape};
use fewlists_core::weighting::CountReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "fewlists/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub input: InputSummary,
    pub options: OptionsEcho,
    pub components: Vec<ComponentReport>,
    pub totals: Totals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionsEcho {
    pub root: Option<usize>,
    pub certify: bool,
    pub oracle: bool,
    pub trials: u64,
    pub seed: u64,
    pub guard_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub b: usize,
    pub fours: usize,
    pub bound: usize,
    pub bound_check: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub index: usize,
    /// Host vertex ids.
    pub vertices: Vec<usize>,
    /// Host edge ids; per-edge arrays below follow this order.
    pub edges: Vec<usize>,
    pub root_block: usize,
    pub blocks: Vec<BlockReport>,
    pub block_census: BTreeMap<String, usize>,
    pub threads: Vec<ThreadReport>,
    pub derived: DerivedReport,
    pub f: Vec<u8>,
    pub counts: CountsReport,
    pub bound_check: String,
    pub certificate: CertificateReport,
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub id: usize,
    pub kind: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub parent: Option<usize>,
    pub parent_bridge: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreadReport {
    pub id: usize,
    pub class: String,
    pub shape: String,
    pub order: usize,
    /// Host ids of the spine edges from head to tail.
    pub spine: Vec<usize>,
    /// Host ids of the feet, `null` where a foot is absent.
    pub feet: Vec<Option<usize>>,
    /// Host vertex at the head.
    pub head: usize,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedReport {
    pub vertices: usize,
    pub edges: usize,
    /// Derived edge -> thread id.
    pub edge_thread: Vec<usize>,
    /// Derived edges of the perfect matching.
    pub matching: Vec<usize>,
    /// Oriented 2-factor cycles as derived vertex sequences.
    pub cycles: Vec<Vec<usize>>,
    pub base_edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    pub b: usize,
    pub n11: usize,
    pub n02: usize,
    pub n20: usize,
    pub m11: usize,
    pub m02: usize,
    pub m20: usize,
    pub m2_contacts: usize,
    pub classes: BTreeMap<String, usize>,
    pub threes_reference: usize,
    pub threes_mirror: usize,
    pub fours: usize,
    pub bound: usize,
    pub choice: String,
    pub literal_double_count: bool,
    pub literal_far_side: bool,
    pub literal_mirror_threes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    /// `not_requested`, `certified` or `zero`.
    pub status: String,
    pub reference_sign: Option<i8>,
    pub family_size: Option<usize>,
    /// Normalized family sum, as a decimal string.
    pub family_sum: Option<String>,
    pub members: Vec<MemberReport>,
    pub certified: Option<CertifiedReport>,
    pub chosen_coefficient: Option<String>,
    pub chosen_certified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub subset: Vec<usize>,
    pub labellings: u64,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedReport {
    pub subset: Vec<usize>,
    pub coefficient: String,
    pub mirror_coefficient: String,
    pub mirrored: bool,
    pub f: Vec<u8>,
    pub fours: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub random: RandomReport,
    /// `null` when the component exceeds the exhaustive edge limit.
    pub exhaustive_choosable: Option<bool>,
    pub s_exact: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomReport {
    pub trials: u64,
    pub successes: u64,
    pub counterexample: Option<CounterexampleReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub trial: u64,
    /// Host edge id -> colour list.
    pub lists: BTreeMap<usize, Vec<u32>>,
}

/// Oracle results for one component, indexed like its edges.
pub struct OracleRun {
    pub random: RandomCheck,
    pub exhaustive_choosable: Option<bool>,
    pub s_exact: Option<usize>,
}

fn kind_name(kind: BlockKind) -> &'static str {
    match kind {
        BlockKind::Vertex => "vertex",
        BlockKind::Cycle => "cycle",
        BlockKind::Proper => "proper",
    }
}

fn shape_name(shape: ThreadShape) -> &'static str {
    match shape {
        ThreadShape::Open => "open",
        ThreadShape::Closed => "closed",
        ThreadShape::Injured => "injured",
    }
}

fn counts(r: &CountReport) -> CountsReport {
    CountsReport {
        b: r.b,
        n11: r.n11,
        n02: r.n02,
        n20: r.n20,
        m11: r.m11,
        m02: r.m02,
        m20: r.m20,
        m2_contacts: r.m2_contacts,
        classes: r.class_counts.iter().map(|(c, k)| (c.name().to_string(), *k)).collect(),
        threes_reference: r.threes_reference,
        threes_mirror: r.threes_mirror,
        fours: r.fours,
        bound: r.bound,
        choice: r.choice.name().to_string(),
        literal_double_count: r.literal_double_count,
        literal_far_side: r.literal_far_side,
        literal_mirror_threes: r.literal_mirror_threes,
    }
}

fn pass(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

fn certificate(c: Option<&Certificate>) -> CertificateReport {
    let Some(c) = c else {
        return CertificateReport {
            status: "not_requested".into(),
            reference_sign: None,
            family_size: None,
            family_sum: None,
            members: Vec::new(),
            certified: None,
            chosen_coefficient: None,
            chosen_certified: None,
        };
    };
    CertificateReport {
        status: if c.certified.is_some() { "certified" } else { "zero" }.into(),
        reference_sign: Some(c.reference_sign),
        family_size: Some(c.family_size),
        family_sum: Some(c.total.to_string()),
        members: c
            .members
            .iter()
            .map(|m| MemberReport { subset: m.subset.clone(), labellings: m.labellings, value: m.normalized.to_string() })
            .collect(),
        certified: c.certified.as_ref().map(|x| CertifiedReport {
            subset: x.subset.clone(),
            coefficient: x.coefficient.to_string(),
            mirror_coefficient: x.mirror_coefficient.to_string(),
            mirrored: x.mirrored,
            f: x.f.values.clone(),
            fours: x.fours,
        }),
        chosen_coefficient: Some(c.chosen_coefficient.to_string()),
        chosen_certified: Some(c.chosen_certified()),
    }
}

fn oracle(run: &OracleRun, c: &ComponentAnalysis) -> OracleReport {
    OracleReport {
        random: RandomReport {
            trials: run.random.trials,
            successes: run.random.successes,
            counterexample: run.random.counterexample.as_ref().map(|(trial, lists): &(u64, ListAssignment)| CounterexampleReport {
                trial: *trial,
                lists: lists.lists.iter().enumerate().map(|(e, l)| (c.edges[e], l.clone())).collect(),
            }),
        },
        exhaustive_choosable: run.exhaustive_choosable,
        s_exact: run.s_exact,
    }
}

pub fn component(index: usize, c: &ComponentAnalysis, run: Option<&OracleRun>) -> ComponentReport {
    let hv = |v: usize| c.vertices[v];
    let he = |e: usize| c.edges[e];
    let h = &c.headed;
    let dec = &h.dec;
    let blocks = dec
        .blocks
        .iter()
        .enumerate()
        .map(|(id, b)| BlockReport {
            id,
            kind: kind_name(b.kind).into(),
            vertices: b.vertices.iter().map(|&v| hv(v)).collect(),
            edges: b.edges.iter().map(|&e| he(e)).collect(),
            parent: b.parent,
            parent_bridge: b.parent_bridge.map(he),
        })
        .collect();
    let block_census = [BlockKind::Vertex, BlockKind::Cycle, BlockKind::Proper]
        .into_iter()
        .map(|k| (kind_name(k).to_string(), dec.block_count(k)))
        .collect();
    let threads = h
        .threads
        .iter()
        .enumerate()
        .map(|(id, t)| ThreadReport {
            id,
            class: t.class.map_or("unclassified", ThreadClass::name).into(),
            shape: shape_name(t.shape).into(),
            order: t.order,
            spine: t.spine.iter().map(|&e| he(e)).collect(),
            feet: t.feet.iter().map(|f| f.map(he)).collect(),
            head: hv(t.head().vertex),
            weight: h.kind_in_family(id, false).name().into(),
        })
        .collect();
    let dg = &dec.derived.graph;
    let derived = DerivedReport {
        vertices: dg.vertex_count(),
        edges: dg.edge_count(),
        edge_thread: dec.derived.edge_thread.clone(),
        matching: h.matching.matching.clone(),
        cycles: h.matching.cycles.iter().map(|cy| cy.vertices.clone()).collect(),
        base_edges: dec.derived.base_edges.clone(),
    };
    ComponentReport {
        index,
        vertices: c.vertices.clone(),
        edges: c.edges.clone(),
        root_block: dec.root,
        blocks,
        block_census,
        threads,
        derived,
        f: c.f.values.clone(),
        counts: counts(&c.report),
        bound_check: pass(c.report.bound_holds()),
        certificate: certificate(c.certificate.as_ref()),
        oracle: run.map(|r| oracle(r, c)),
    }
}

pub fn build(a: &Analysis, options: OptionsEcho, runs: &[Option<OracleRun>]) -> Report {
    let components: Vec<ComponentReport> =
        a.components.iter().enumerate().map(|(i, c)| component(i, c, runs.get(i).and_then(Option::as_ref))).collect();
    let b = a.bridges();
    let fours = a.fours();
    let bound = components.iter().map(|c| c.counts.bound).sum();
    Report {
        schema: SCHEMA.into(),
        input: InputSummary { n: a.vertex_count, m: a.edge_count, b },
        options,
        totals: Totals { b, fours, bound, bound_check: pass(components.iter().all(|c| c.bound_check == "pass")) },
        components,
    }
}

pub fn to_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(r: &Report) -> String {
    let mut s = format!("graph: n={} m={} b={}\n", r.input.n, r.input.m, r.input.b);
    for c in &r.components {
        let census: Vec<String> = c.block_census.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("component {}: {} vertices, {} edges, blocks {}\n", c.index, c.vertices.len(), c.edges.len(), census.join(" ")));
        let classes: Vec<String> = c.counts.classes.iter().filter(|(_, &v)| v > 0).map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("  threads: {}\n", classes.join(" ")));
        s.push_str(&format!(
            "  choice={} fours={} bound={} {}\n",
            c.counts.choice, c.counts.fours, c.counts.bound, c.bound_check
        ));
        let f: Vec<String> = c.edges.iter().zip(&c.f).map(|(e, x)| format!("{e}:{x}")).collect();
        s.push_str(&format!("  f: {}\n", f.join(" ")));
        let cert = &c.certificate;
        match cert.status.as_str() {
            "not_requested" => {}
            status => {
                s.push_str(&format!(
                    "  certificate: {status}, family sum {} over {} weightings",
                    cert.family_sum.as_deref().unwrap_or("-"),
                    cert.family_size.unwrap_or(0)
                ));
                if let Some(x) = &cert.certified {
                    s.push_str(&format!(", certified subset {:?} coefficient {}", x.subset, x.coefficient));
                }
                s.push('\n');
            }
        }
        if let Some(o) = &c.oracle {
            s.push_str(&format!("  random lists: {}/{} colourable", o.random.successes, o.random.trials));
            if let Some(cx) = &o.random.counterexample {
                s.push_str(&format!(", first failure at trial {}", cx.trial));
            }
            s.push('\n');
            if let Some(ok) = o.exhaustive_choosable {
                s.push_str(&format!("  exhaustive: f-choosable={ok} s(G,3)={}\n", o.s_exact.map_or("-".into(), |v| v.to_string())));
            }
        }
    }
    s.push_str(&format!("totals: b={} fours={} bound={} {}\n", r.totals.b, r.totals.fours, r.totals.bound, r.totals.bound_check));
    s
}
