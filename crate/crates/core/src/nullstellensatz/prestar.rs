//! Prestar labellings of a single thread.
//!
//! Only the interior vertices `v_1 .. v_m` carry a star condition; the end
//! flags and the far flags of the feet take any value in `{0, 1, 2}`. At the
//! missing foot of an injured thread the absent flag counts as labelled 1, so
//! the two spine flags there take labels `{0, 2}`. The sign multiplies the
//! interior parities, with the three edges at `v_k` in increasing host index
//! order (an absent foot sorts as its host edge, or last in a model).

use alloc::vec::Vec;

use super::permutation_sign;
use crate::graph::{EdgeId, Flag, Multigraph};
use crate::thread::ThreadPiece;

/// Labels on the flags of a thread, by host flag index, ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrestarLabelling {
    pub labels: Vec<(usize, u8)>,
    pub head: u8,
    pub tail: u8,
    pub sign: i8,
    pub one_footed: bool,
}

impl PrestarLabelling {
    pub fn kind(&self) -> (u8, u8) {
        (self.head, self.tail)
    }

    /// True iff `full` (labels by host flag index) agrees on every thread flag.
    pub fn matches(&self, full: &[u8]) -> bool {
        self.labels.iter().all(|&(f, l)| full[f] == l)
    }

    pub fn write(&self, full: &mut [u8]) {
        for &(f, l) in &self.labels {
            full[f] = l;
        }
    }
}

struct Chain<'a> {
    g: &'a Multigraph,
    t: &'a ThreadPiece,
    w: &'a [u8],
    one_footed: bool,
    distinct_ends: bool,
}

fn fit(x: i16) -> Option<u8> {
    (0..=2).contains(&x).then_some(x as u8)
}

impl Chain<'_> {
    fn flag(&self, vertex: usize, edge: EdgeId) -> usize {
        self.g.flag_index(Flag { vertex, edge })
    }

    fn local_sign(&self, k: usize, into: u8, out: u8, foot: u8) -> i8 {
        let (_, prev, next, f) = self.t.interior(k);
        let foot_edge = f.or(self.t.missing_edge).unwrap_or(usize::MAX);
        let mut trio = [(prev, into), (next, out), (foot_edge, foot)];
        trio.sort_unstable_by_key(|&(e, _)| e);
        permutation_sign(&[trio[0].1, trio[1].1, trio[2].1])
    }

    fn run(&self, out: &mut Vec<PrestarLabelling>) {
        for head in 0..=2u8 {
            let mut labels = alloc::vec![(self.flag(self.t.spine_vertices[0], self.t.spine[0]), head)];
            self.extend(1, head, head, 1, &mut labels, out);
        }
    }

    // `prev_out` is the label at v_{k-1} on e_{k-1}
    fn extend(&self, k: usize, head: u8, prev_out: u8, sign: i8, labels: &mut Vec<(usize, u8)>, out: &mut Vec<PrestarLabelling>) {
        let t = self.t;
        let m = t.order;
        let e_prev = t.spine[k - 1];
        let Some(into) = fit(i16::from(self.w[e_prev]) - i16::from(prev_out)) else {
            return;
        };
        if k == m + 1 {
            let tail = into;
            if self.distinct_ends && tail == head {
                return;
            }
            let tail_flag = self.flag(t.spine_vertices[m + 1], e_prev);
            labels.push((tail_flag, tail));
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            out.push(PrestarLabelling { labels: sorted, head, tail, sign, one_footed: self.one_footed });
            labels.pop();
            return;
        }
        let (v, _, e_next, foot) = t.interior(k);
        let into_flag = self.flag(v, e_prev);
        let out_flag = self.flag(v, e_next);
        match foot {
            None => {
                if into == 1 {
                    return;
                }
                let o = 2 - into;
                let s = self.local_sign(k, into, o, 1);
                labels.extend([(into_flag, into), (out_flag, o)]);
                self.extend(k + 1, head, o, sign * s, labels, out);
                labels.truncate(labels.len() - 2);
            }
            Some(f) => {
                let w_k = self.g.other_end(f, v);
                for o in (0..=2u8).filter(|&o| o != into) {
                    let near = 3 - into - o;
                    let Some(far) = fit(i16::from(self.w[f]) - i16::from(near)) else {
                        continue;
                    };
                    if self.one_footed && far != 1 {
                        continue;
                    }
                    let s = self.local_sign(k, into, o, near);
                    labels.extend([(into_flag, into), (out_flag, o), (self.flag(v, f), near), (self.flag(w_k, f), far)]);
                    self.extend(k + 1, head, o, sign * s, labels, out);
                    labels.truncate(labels.len() - 4);
                }
            }
        }
    }
}

/// All prestar labellings of thread `t` (as oriented) whose exponent agrees
/// with `w` (indexed by host edge) on the thread's edges.
///
/// `distinct_ends` keeps only labellings whose head and tail labels differ; it
/// is meaningful for closed threads, whose head and tail share a vertex.
pub fn enumerate_prestar(g: &Multigraph, t: &ThreadPiece, w: &[u8], one_footed: bool, distinct_ends: bool) -> Vec<PrestarLabelling> {
    let mut out = Vec::new();
    Chain { g, t, w, one_footed, distinct_ends }.run(&mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thread::ThreadShape;
    use crate::weighting::{thread_weights, ThreadWeightKind};

    fn weights(g: &Multigraph, t: &ThreadPiece, kind: ThreadWeightKind) -> Vec<u8> {
        let mut w = alloc::vec![0u8; g.edge_count()];
        for (e, x) in thread_weights(t, kind) {
            w[e] = x;
        }
        w
    }

    #[test]
    fn trivial_thread_has_three() {
        let (g, t) = ThreadPiece::model(ThreadShape::Open, 0, None);
        let all = enumerate_prestar(&g, &t, &weights(&g, &t, ThreadWeightKind::Two), false, false);
        let kinds: Vec<(u8, u8)> = all.iter().map(PrestarLabelling::kind).collect();
        assert_eq!(kinds, alloc::vec![(0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn t1_w02_has_pi02_and_pi11_prime() {
        let (g, t) = ThreadPiece::model(ThreadShape::Open, 1, None);
        let all = enumerate_prestar(&g, &t, &weights(&g, &t, ThreadWeightKind::W02), true, false);
        let kinds: Vec<(u8, u8)> = all.iter().map(PrestarLabelling::kind).collect();
        assert_eq!(kinds, alloc::vec![(0, 2), (1, 1)]);
        assert_eq!(all[0].sign, -all[1].sign);
    }

    #[test]
    fn injured_is_unique() {
        for m in 1..=5 {
            for k in 1..=m {
                let (g, t) = ThreadPiece::model(ThreadShape::Injured, m, Some(k));
                let all = enumerate_prestar(&g, &t, &weights(&g, &t, ThreadWeightKind::W11), true, false);
                assert_eq!(all.len(), 1, "m={m} k={k}");
                assert_eq!(all[0].kind(), (1, 1));
            }
        }
    }
}
