//! Star labellings and coefficients of the edge monomial.
//!
//! A star labelling assigns each flag at a vertex of degree `d` a distinct
//! label in `0..d`. Its exponent sums the two labels of every edge and its
//! sign multiplies the parities of the per-vertex permutations, read with
//! the incident edges in increasing index order. Summing signs over all
//! labellings with a fixed exponent gives that monomial's coefficient.

use core::fmt;

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::error::Error;
use crate::graph::{Flag, Multigraph};

pub mod derived;
pub mod expansion;
pub mod prestar;
pub mod search;

pub use expansion::{coefficient_by_expansion, expand};
pub use search::{coefficient, multi_term_sum, ExponentFamily, Executor, Sequential, StarSearch, Tally};

/// Marker for a flag without a label.
pub const UNSET: u8 = u8::MAX;

/// Labels indexed by flag index `2 * edge + side`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarLabelling {
    pub labels: Vec<u8>,
}

impl StarLabelling {
    pub fn label(&self, g: &Multigraph, flag: Flag) -> u8 {
        self.labels[g.flag_index(flag)]
    }

    /// True iff the labels at every vertex form a bijection onto `0..d`.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        if self.labels.len() != g.flag_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let d = g.degree(v);
            let mut seen = alloc::vec![false; d];
            g.incident(v).iter().all(|&e| {
                let l = self.labels[g.flag_index(Flag { vertex: v, edge: e })] as usize;
                l < d && !core::mem::replace(&mut seen[l], true)
            })
        })
    }

    pub fn exponent(&self) -> Vec<u8> {
        exponent(&self.labels)
    }

    pub fn sign(&self, g: &Multigraph) -> i8 {
        sign_of(g, &self.labels)
    }
}

/// Edge weights `label(2e) + label(2e + 1)`.
pub fn exponent(labels: &[u8]) -> Vec<u8> {
    labels.chunks_exact(2).map(|p| p[0] + p[1]).collect()
}

/// Parity of a sequence of distinct small integers, as `+1` or `-1`.
pub fn permutation_sign(seq: &[u8]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of a star labelling under the graph's edge order.
pub fn sign_of(g: &Multigraph, labels: &[u8]) -> i8 {
    let mut sign = 1i8;
    for v in 0..g.vertex_count() {
        let seq: Vec<u8> = g.incident(v).iter().map(|&e| labels[g.flag_index(Flag { vertex: v, edge: e })]).collect();
        sign *= permutation_sign(&seq);
    }
    sign
}

/// Arbitrary-precision signed sum of labelling signs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedCount(pub BigInt);

impl SignedCount {
    pub fn is_zero(&self) -> bool {
        self.0 == BigInt::from(0)
    }
}

impl From<i128> for SignedCount {
    fn from(v: i128) -> Self {
        SignedCount(BigInt::from(v))
    }
}

impl fmt::Display for SignedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub(crate) fn check_length(g: &Multigraph, w: &[u8]) -> Result<(), Error> {
    if w.len() != g.edge_count() {
        return Err(Error::WeightLength { expected: g.edge_count(), actual: w.len() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn local_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[0, 2, 1]), -1);
        assert_eq!(permutation_sign(&[2, 1, 0]), -1);
        assert_eq!(permutation_sign(&[]), 1);
    }

    #[test]
    fn theta_complement_sign() {
        let g = corpus::theta();
        // flags: 2e is at vertex 0, 2e+1 at vertex 1
        let labels = alloc::vec![0, 2, 1, 1, 2, 0];
        let pi = StarLabelling { labels };
        assert!(pi.is_valid(&g));
        assert_eq!(pi.exponent(), alloc::vec![2, 2, 2]);
        assert_eq!(pi.sign(&g), -1);
    }
}
