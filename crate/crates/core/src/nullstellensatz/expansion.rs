//! The edge monomial by direct sparse expansion of its product form.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{check_length, SignedCount};
use crate::error::Error;
use crate::graph::Multigraph;

/// Edge limit for the expansion oracle.
pub const EXPANSION_GUARD_EDGES: usize = 12;

/// Every term of `prod_{i<j} (x_i - x_j)^c(i,j)` as exponent vector -> coefficient.
pub fn expand(g: &Multigraph) -> Result<BTreeMap<Vec<u8>, i128>, Error> {
    let m = g.edge_count();
    if m > EXPANSION_GUARD_EDGES {
        return Err(Error::SizeGuard { what: "edges for polynomial expansion", actual: m, limit: EXPANSION_GUARD_EDGES });
    }
    let mut poly: BTreeMap<Vec<u8>, i128> = BTreeMap::new();
    poly.insert(alloc::vec![0; m], 1);
    for i in 0..m {
        for j in i + 1..m {
            for _ in 0..g.shared_ends(i, j) {
                let mut next: BTreeMap<Vec<u8>, i128> = BTreeMap::new();
                for (mono, &c) in &poly {
                    let mut a = mono.clone();
                    a[i] += 1;
                    *next.entry(a).or_insert(0) += c;
                    let mut b = mono.clone();
                    b[j] += 1;
                    *next.entry(b).or_insert(0) -= c;
                }
                next.retain(|_, c| *c != 0);
                poly = next;
            }
        }
    }
    Ok(poly)
}

/// Coefficient of `x^w`, read off the full expansion.
pub fn coefficient_by_expansion(g: &Multigraph, w: &[u8]) -> Result<SignedCount, Error> {
    check_length(g, w)?;
    let poly = expand(g)?;
    Ok(SignedCount::from(poly.get(w).copied().unwrap_or(0)))
}
