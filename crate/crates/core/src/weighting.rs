//! Thread heads, thread weightings, the family `w_S`, its mirror, and the
//! final list sizes `f = w + 1` with their counting report.

use alloc::vec::Vec;

use crate::decomposition::Decomposition;
use crate::error::Error;
use crate::graph::EdgeId;
use crate::matching::MatchingChoice;
use crate::thread::{ThreadClass, ThreadId, ThreadOrigin, ThreadPiece};

/// The four special weightings of an oriented thread.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadWeightKind {
    /// 2 everywhere.
    Two,
    /// `e_0 -> 1`, `e_m -> 3`.
    W11,
    /// `e_0 -> 1`, `f_1 -> 3`.
    W02,
    /// `e_0 -> 3`, `e_1 -> 0`, `f_1 -> 3`.
    W20,
}

impl ThreadWeightKind {
    pub fn name(self) -> &'static str {
        match self {
            ThreadWeightKind::Two => "w2",
            ThreadWeightKind::W11 => "w11",
            ThreadWeightKind::W02 => "w02",
            ThreadWeightKind::W20 => "w20",
        }
    }

    /// The prestar type this weighting is named after.
    pub fn kind(self) -> Option<(u8, u8)> {
        match self {
            ThreadWeightKind::Two => None,
            ThreadWeightKind::W11 => Some((1, 1)),
            ThreadWeightKind::W02 => Some((0, 2)),
            ThreadWeightKind::W20 => Some((2, 0)),
        }
    }
}

/// Weights of `kind` on the edges of the oriented thread `t`.
pub fn thread_weights(t: &ThreadPiece, kind: ThreadWeightKind) -> Vec<(EdgeId, u8)> {
    let mut out: Vec<(EdgeId, u8)> = t.edges().into_iter().map(|e| (e, 2)).collect();
    let mut set = |e: EdgeId, x: u8| {
        if let Some(slot) = out.iter_mut().find(|(f, _)| *f == e) {
            slot.1 = x;
        }
    };
    let foot1 = || t.feet.first().copied().flatten().expect("weighting needs the first foot");
    match kind {
        ThreadWeightKind::Two => {}
        ThreadWeightKind::W11 => {
            set(t.spine[0], 1);
            set(t.spine[t.order], 3);
        }
        ThreadWeightKind::W02 => {
            set(t.spine[0], 1);
            set(foot1(), 3);
        }
        ThreadWeightKind::W20 => {
            set(t.spine[0], 3);
            set(t.spine[1], 0);
            set(foot1(), 3);
        }
    }
    out
}

/// Edge weighting in host edge order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeWeighting {
    pub values: Vec<u8>,
}

impl EdgeWeighting {
    pub fn count(&self, value: u8) -> usize {
        self.values.iter().filter(|&&x| x == value).count()
    }

    pub fn total(&self) -> usize {
        self.values.iter().map(|&x| usize::from(x)).sum()
    }

    pub fn plus_one(&self) -> EdgeWeighting {
        EdgeWeighting { values: self.values.iter().map(|&x| x + 1).collect() }
    }

    fn paint(&mut self, t: &ThreadPiece, kind: ThreadWeightKind) {
        for (e, x) in thread_weights(t, kind) {
            self.values[e] = x;
        }
    }
}

/// Decomposition with thread heads fixed and every thread classified.
#[derive(Clone, Debug)]
pub struct HeadedDecomposition {
    pub dec: Decomposition,
    pub matching: MatchingChoice,
    /// Threads in decomposition order, oriented, with `class` set.
    pub threads: Vec<ThreadPiece>,
    /// The odd threads on 2-factor edges, ascending.
    pub unmatched_odd: Vec<ThreadId>,
}

impl HeadedDecomposition {
    pub fn class(&self, t: ThreadId) -> ThreadClass {
        self.threads[t].class.expect("classified")
    }

    pub fn edge_count(&self) -> usize {
        self.dec.edge_thread.len()
    }

    pub fn class_count(&self, class: ThreadClass) -> usize {
        self.threads.iter().filter(|t| t.class == Some(class)).count()
    }

    /// Derived vertex at the head of derived thread `t`.
    pub fn head_derived_vertex(&self, t: ThreadId) -> usize {
        self.dec.derived.derived_vertex(self.threads[t].head().vertex).expect("branch vertex")
    }

    /// Weighting kind of thread `t` in `w_S` with `in_s` telling whether `t` is in `S`.
    pub fn kind_in_family(&self, t: ThreadId, in_s: bool) -> ThreadWeightKind {
        match self.class(t) {
            ThreadClass::VertexBlock | ThreadClass::MatchedNontrivial => ThreadWeightKind::W11,
            ThreadClass::UnmatchedOdd if in_s => ThreadWeightKind::W20,
            ThreadClass::UnmatchedOdd | ThreadClass::ClosedEven => ThreadWeightKind::W02,
            ThreadClass::MatchedTrivial
            | ThreadClass::UnmatchedTrivial
            | ThreadClass::UnmatchedEven
            | ThreadClass::ClosedOdd => ThreadWeightKind::Two,
        }
    }
}

/// Classifies the derived threads from the matching and fixes all heads.
///
/// An odd thread on a 2-factor edge is headed at the source of that edge's
/// arc; every other thread takes the end flag with the smaller
/// `(vertex, edge)` pair as its head.
pub fn assign_heads(dec: &Decomposition, mc: &MatchingChoice) -> HeadedDecomposition {
    let mut threads = Vec::with_capacity(dec.threads.len());
    let mut unmatched_odd = Vec::new();
    for (i, t) in dec.threads.iter().enumerate() {
        let mut t = t.canonical();
        if let ThreadOrigin::Derived(d) = t.origin {
            let class = match (mc.matched[d], t.order) {
                (true, 0) => ThreadClass::MatchedTrivial,
                (true, _) => ThreadClass::MatchedNontrivial,
                (false, 0) => ThreadClass::UnmatchedTrivial,
                (false, m) if m % 2 == 1 => ThreadClass::UnmatchedOdd,
                (false, _) => ThreadClass::UnmatchedEven,
            };
            if class == ThreadClass::UnmatchedOdd {
                let source = mc.arc_source(d).expect("2-factor edge has an arc");
                if dec.derived.host_vertex[source] != t.head().vertex {
                    t = t.reversed();
                }
                unmatched_odd.push(i);
            }
            t.class = Some(class);
        }
        threads.push(t);
    }
    HeadedDecomposition { dec: dec.clone(), matching: mc.clone(), threads, unmatched_odd }
}

fn check_subset(h: &HeadedDecomposition, s: &[ThreadId]) -> Result<(), Error> {
    match s.iter().find(|t| !h.unmatched_odd.contains(t)) {
        Some(&t) => Err(Error::NotUnmatchedOdd(t)),
        None => Ok(()),
    }
}

/// The weighting `w_S`.
pub fn assemble_w(h: &HeadedDecomposition, s: &[ThreadId]) -> Result<EdgeWeighting, Error> {
    check_subset(h, s)?;
    let mut w = EdgeWeighting { values: alloc::vec![2; h.edge_count()] };
    for (i, t) in h.threads.iter().enumerate() {
        w.paint(t, h.kind_in_family(i, s.contains(&i)));
    }
    Ok(w)
}

/// Mirror of `w_S`: every odd 2-factor thread is reversed and `S` is complemented.
pub fn mirror_of(h: &HeadedDecomposition, s: &[ThreadId]) -> Result<EdgeWeighting, Error> {
    check_subset(h, s)?;
    let mut w = assemble_w(h, s)?;
    for &i in &h.unmatched_odd {
        let kind = if s.contains(&i) { ThreadWeightKind::W02 } else { ThreadWeightKind::W20 };
        w.paint(&h.threads[i].reversed(), kind);
    }
    Ok(w)
}

/// The mirror `w'` of `w_∅`.
pub fn mirror_w(h: &HeadedDecomposition) -> EdgeWeighting {
    mirror_of(h, &[]).expect("empty set is a valid subset")
}

/// Which of the two candidate weightings was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    Reference,
    Mirror,
}

impl Choice {
    pub fn name(self) -> &'static str {
        match self {
            Choice::Reference => "w_empty",
            Choice::Mirror => "w_mirror",
        }
    }
}

/// Thread and weight census for `w_∅` and its mirror.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub b: usize,
    pub n11: usize,
    pub n02: usize,
    pub n20: usize,
    pub m11: usize,
    pub m02: usize,
    pub m20: usize,
    /// Cut-edge contacts of threads weighted constant 2.
    pub m2_contacts: usize,
    pub class_counts: [(ThreadClass, usize); 8],
    pub threes_reference: usize,
    pub threes_mirror: usize,
    pub fours: usize,
    pub bound: usize,
    pub choice: Choice,
    /// `m11 + m02 + m20 == 2b`, as printed in the literature.
    pub literal_double_count: bool,
    /// `m11 >= m02 + m20`, as printed in the literature.
    pub literal_far_side: bool,
    /// `|w'^{-1}(3)| == n11 + 2 n02 + n20`, as printed in the literature.
    pub literal_mirror_threes: bool,
}

impl CountReport {
    pub fn bound_holds(&self) -> bool {
        self.fours <= self.bound
    }
}

/// Picks the candidate with fewer weight-3 edges (ties keep `w_∅`) and returns `f = w + 1`.
pub fn choose_f(h: &HeadedDecomposition) -> Result<(EdgeWeighting, CountReport), Error> {
    let w = assemble_w(h, &[])?;
    let wm = mirror_w(h);
    let b = h.dec.bridges.len();
    let (mut n11, mut n02, mut n20, mut m11, mut m02, mut m20, mut m2) = (0, 0, 0, 0, 0, 0, 0);
    for (i, t) in h.threads.iter().enumerate() {
        let c = t.contacts();
        match h.kind_in_family(i, false) {
            ThreadWeightKind::W11 => (n11, m11) = (n11 + 1, m11 + c),
            ThreadWeightKind::W02 => (n02, m02) = (n02 + 1, m02 + c),
            ThreadWeightKind::W20 => (n20, m20) = (n20 + 1, m20 + c),
            ThreadWeightKind::Two => m2 += c,
        }
    }
    let class_counts = ThreadClass::ALL.map(|c| (c, h.class_count(c)));
    let threes_reference = w.count(3);
    let threes_mirror = wm.count(3);
    let (choice, chosen) = if threes_mirror < threes_reference { (Choice::Mirror, &wm) } else { (Choice::Reference, &w) };
    let f = chosen.plus_one();
    let report = CountReport {
        b,
        n11,
        n02,
        n20,
        m11,
        m02,
        m20,
        m2_contacts: m2,
        class_counts,
        threes_reference,
        threes_mirror,
        fours: f.count(4),
        bound: 5 * b / 2,
        choice,
        literal_double_count: m11 + m02 + m20 == 2 * b,
        literal_far_side: m11 >= m02 + m20,
        literal_mirror_threes: threes_mirror == n11 + 2 * n02 + n20,
    };
    verify(h, &report, &w, &wm, &f)?;
    Ok((f, report))
}

fn verify(h: &HeadedDecomposition, r: &CountReport, w: &EdgeWeighting, wm: &EdgeWeighting, f: &EdgeWeighting) -> Result<(), Error> {
    let m = h.edge_count();
    let d_odd = h.unmatched_odd.len();
    let closed_even = h.class_count(ThreadClass::ClosedEven);
    let checks = [
        (w.total() == 2 * m && wm.total() == 2 * m, "weightings must average 2"),
        (f.total() == 3 * m, "list sizes must average 3"),
        (r.n11 <= r.m11 && r.n02 <= r.m02 && r.n20 <= r.m20, "thread counts must not exceed contact counts"),
        (r.m11 + r.m02 + r.m20 + r.m2_contacts == 2 * r.b, "every cut-edge has exactly two thread contacts"),
        (r.n11 + r.n02 + r.n20 <= 2 * r.b, "weighted threads are at most twice the cut-edges"),
        (r.threes_reference == r.n11 + r.n02 + 2 * r.n20, "weight-3 count of the reference weighting"),
        (r.threes_mirror == r.n11 + 2 * d_odd + closed_even, "weight-3 count of the mirror weighting"),
        (r.fours <= 2 * (r.n11 + r.n02 + r.n20), "weight-3 count is at most twice the weighted threads"),
        (r.fours == r.threes_reference.min(r.threes_mirror), "chosen weighting has the fewer weight-3 edges"),
        (r.bound_holds(), "weight-3 count within five halves of the cut-edges"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some(&(_, msg)) => Err(Error::Internal(msg)),
        None => Ok(()),
    }
}
