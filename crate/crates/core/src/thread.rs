//! General threads: open, closed and injured.
//!
//! A thread of order `m` is a path `v_0 e_0 v_1 ... e_m v_{m+1}` with a pendant
//! foot edge `f_k = v_k w_k` at each interior vertex. A closed thread identifies
//! `v_0` with `v_{m+1}`; an injured thread is missing one foot. The head is the
//! flag `(v_0, e_0)` and the tail is `(v_{m+1}, e_m)`, so reorienting a thread
//! is just reversing its spine.

use alloc::vec::Vec;

use crate::graph::{EdgeId, Flag, Multigraph, VertexId};

pub type ThreadId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadShape {
    Open,
    Closed,
    Injured,
}

/// Which part of the graph produced a thread.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreadOrigin {
    /// A derived-graph edge of a proper block.
    Derived(EdgeId),
    /// The extended block of a vertex block.
    VertexBlock(usize),
    /// The extended block of a cycle block.
    CycleBlock(usize),
    /// A standalone model thread built for enumeration tests.
    Model,
}

/// The eight thread classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadClass {
    /// Extended vertex block.
    VertexBlock,
    /// Extended cycle block with odd order (even cycle length).
    ClosedOdd,
    /// Extended cycle block with even order (odd cycle length).
    ClosedEven,
    /// Trivial thread on a matching edge.
    MatchedTrivial,
    /// Nontrivial thread on a matching edge.
    MatchedNontrivial,
    /// Odd-order thread on a 2-factor edge.
    UnmatchedOdd,
    /// Even-order (at least 2) thread on a 2-factor edge.
    UnmatchedEven,
    /// Trivial thread on a 2-factor edge.
    UnmatchedTrivial,
}

impl ThreadClass {
    pub const ALL: [ThreadClass; 8] = [
        ThreadClass::VertexBlock,
        ThreadClass::ClosedOdd,
        ThreadClass::ClosedEven,
        ThreadClass::MatchedTrivial,
        ThreadClass::MatchedNontrivial,
        ThreadClass::UnmatchedOdd,
        ThreadClass::UnmatchedEven,
        ThreadClass::UnmatchedTrivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThreadClass::VertexBlock => "T1",
            ThreadClass::ClosedOdd => "Tcirc_odd",
            ThreadClass::ClosedEven => "Tcirc_even",
            ThreadClass::MatchedTrivial => "TM_0",
            ThreadClass::MatchedNontrivial => "TM_ge1",
            ThreadClass::UnmatchedOdd => "TD_odd",
            ThreadClass::UnmatchedEven => "TD_even",
            ThreadClass::UnmatchedTrivial => "TD_0",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadPiece {
    pub shape: ThreadShape,
    pub order: usize,
    /// `v_0 .. v_{m+1}`; for closed threads the last entry repeats the first.
    pub spine_vertices: Vec<VertexId>,
    /// `e_0 .. e_m`.
    pub spine: Vec<EdgeId>,
    /// `f_1 .. f_m`, `None` at the missing foot of an injured thread.
    pub feet: Vec<Option<EdgeId>>,
    /// The host edge sitting where the missing foot would be (the parent
    /// cut-edge); `None` for model threads, which have no host around them.
    pub missing_edge: Option<EdgeId>,
    pub origin: ThreadOrigin,
    pub block: Option<usize>,
    pub class: Option<ThreadClass>,
}

impl ThreadPiece {
    pub fn is_trivial(&self) -> bool {
        self.order == 0
    }

    pub fn head(&self) -> Flag {
        Flag { vertex: self.spine_vertices[0], edge: self.spine[0] }
    }

    pub fn tail(&self) -> Flag {
        Flag { vertex: self.spine_vertices[self.order + 1], edge: self.spine[self.order] }
    }

    /// 1-based position of the missing foot.
    pub fn missing_position(&self) -> Option<usize> {
        self.feet.iter().position(Option::is_none).map(|i| i + 1)
    }

    pub fn foot_count(&self) -> usize {
        self.feet.iter().flatten().count()
    }

    /// Spine edges followed by the present feet.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = self.spine.clone();
        out.extend(self.feet.iter().flatten().copied());
        out
    }

    /// Flag indices of every thread edge, ascending.
    pub fn flag_indices(&self) -> Vec<usize> {
        let mut flags: Vec<usize> = self.edges().iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect();
        flags.sort_unstable();
        flags
    }

    /// Vertices where the thread meets a cut-edge at a vertex of degree at
    /// least two in the thread: feet, the missing foot, and the junction of a
    /// closed thread. For vertex-block threads both spine edges are cut-edges too.
    pub fn contacts(&self) -> usize {
        match (self.shape, self.origin) {
            (ThreadShape::Injured, ThreadOrigin::VertexBlock(_)) => 3,
            (ThreadShape::Closed, _) => self.order + 1,
            _ => self.order,
        }
    }

    /// The same thread with head and tail exchanged.
    pub fn reversed(&self) -> ThreadPiece {
        let mut out = self.clone();
        out.spine_vertices.reverse();
        out.spine.reverse();
        out.feet.reverse();
        out
    }

    /// Canonical orientation: the end flag with the smaller (vertex, edge) pair is the head.
    pub fn canonical(&self) -> ThreadPiece {
        let head = self.head();
        let tail = self.tail();
        if (tail.vertex, tail.edge) < (head.vertex, head.edge) {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// Interior vertex `v_k` (1-based) together with its three incident thread
    /// flags `(v_k e_{k-1}, v_k e_k, v_k f_k)`; the foot flag is `None` when missing.
    pub fn interior(&self, k: usize) -> (VertexId, EdgeId, EdgeId, Option<EdgeId>) {
        (self.spine_vertices[k], self.spine[k - 1], self.spine[k], self.feet[k - 1])
    }

    /// Builds a standalone copy of a thread of the given shape and order.
    ///
    /// Vertices are numbered along the spine first, then the feet; edges are
    /// `e_0..e_m` followed by `f_1..f_m`. `missing` is the 1-based position of
    /// the deleted foot for injured threads.
    pub fn model(shape: ThreadShape, order: usize, missing: Option<usize>) -> (Multigraph, ThreadPiece) {
        let m = order;
        assert!(shape == ThreadShape::Open || m >= 1);
        let closed = shape == ThreadShape::Closed;
        let spine_len = m + 1;
        let path_vertices = if closed { m + 1 } else { m + 2 };
        let vertex = |k: usize| if closed && k == m + 1 { 0 } else { k };
        let mut edges = Vec::new();
        for k in 0..spine_len {
            edges.push((vertex(k), vertex(k + 1)));
        }
        let mut feet = Vec::new();
        let mut next = path_vertices;
        for k in 1..=m {
            if shape == ThreadShape::Injured && Some(k) == missing {
                feet.push(None);
                continue;
            }
            feet.push(Some(edges.len()));
            edges.push((k, next));
            next += 1;
        }
        let g = Multigraph::new(next, edges).expect("model thread is loopless");
        let piece = ThreadPiece {
            shape,
            order: m,
            spine_vertices: (0..=m + 1).map(vertex).collect(),
            spine: (0..spine_len).collect(),
            feet,
            missing_edge: None,
            origin: ThreadOrigin::Model,
            block: None,
            class: None,
        };
        (g, piece)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_shapes_have_expected_sizes() {
        let (g, t) = ThreadPiece::model(ThreadShape::Open, 3, None);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(t.foot_count(), 3);
        let (g, t) = ThreadPiece::model(ThreadShape::Closed, 2, None);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(t.head().vertex, t.tail().vertex);
        let (g, t) = ThreadPiece::model(ThreadShape::Injured, 3, Some(2));
        assert_eq!(g.edge_count(), 6);
        assert_eq!(t.foot_count(), 2);
        assert_eq!(t.missing_position(), Some(2));
    }

    #[test]
    fn reversal_moves_missing_foot() {
        let (_, t) = ThreadPiece::model(ThreadShape::Injured, 4, Some(1));
        let r = t.reversed();
        assert_eq!(r.missing_position(), Some(4));
        assert_eq!(r.head(), t.tail());
        assert_eq!(r.reversed(), t);
    }
}
