//! Signed sums over the weighting family, normalized by the reference labelling.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Multigraph;
use crate::nullstellensatz::derived::{build_reference, catalogs, ThreadFamily};
use crate::nullstellensatz::search::{coefficient_with, multi_term_sum, Executor};
use crate::thread::ThreadId;
use crate::weighting::{assemble_w, mirror_of, EdgeWeighting, HeadedDecomposition};

/// Labellings and normalized signed sum for one `w_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberSum {
    pub member: u32,
    pub subset: Vec<ThreadId>,
    pub labellings: u64,
    pub normalized: i128,
}

/// A single weighting of the family with a nonzero coefficient, and the
/// better of it and its mirror.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedChoice {
    pub member: u32,
    pub subset: Vec<ThreadId>,
    /// Normalized coefficient of `x^{w_S}`.
    pub coefficient: i128,
    /// Normalized coefficient of `x^{w'_S}`.
    pub mirror_coefficient: i128,
    pub mirrored: bool,
    /// `w + 1` for the certified weighting with fewer weight-3 edges.
    pub f: EdgeWeighting,
    pub fours: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub reference_sign: i8,
    /// Members with at least one labelling, by member index.
    pub members: Vec<MemberSum>,
    pub family_size: usize,
    /// Normalized signed sum over the whole family.
    pub total: i128,
    pub certified: Option<CertifiedChoice>,
    /// Normalized coefficient of `x^{f-1}` for the `f` chosen by the counting step.
    pub chosen_coefficient: i128,
}

impl Certificate {
    pub fn chosen_certified(&self) -> bool {
        self.chosen_coefficient != 0
    }
}

/// Runs the family sum and the single-weighting follow-ups.
///
/// `chosen` is `f - 1` for the counting step's choice.
pub fn certify(g: &Multigraph, h: &HeadedDecomposition, chosen: &EdgeWeighting, exec: &impl Executor, limit: usize) -> Result<Certificate, Error> {
    let cats = catalogs(g, h);
    let reference = build_reference(g, h, &cats)?;
    let s0 = reference.sign(g);
    let norm = i128::from(s0);
    let family = ThreadFamily::new(h)?;
    let tally = multi_term_sum(g, &family, exec, limit)?;
    let members: Vec<MemberSum> = tally
        .members
        .iter()
        .map(|(&member, b)| MemberSum { member, subset: family.subset(member), labellings: b.labellings, normalized: norm * b.signed })
        .collect();
    let total = norm * tally.signed_total();
    let single = |w: &[u8]| -> Result<i128, Error> {
        let c = coefficient_with(g, w, exec, limit)?;
        i128::try_from(c.0).map_err(|_| Error::Internal("coefficient exceeds 128 bits")).map(|v| norm * v)
    };
    let certified = match members.iter().find(|m| m.normalized != 0) {
        None => None,
        Some(m) => {
            let w = assemble_w(h, &m.subset)?;
            let wm = mirror_of(h, &m.subset)?;
            let mirror_coefficient = single(&wm.values)?;
            let mirrored = wm.count(3) < w.count(3);
            let f = if mirrored { wm.plus_one() } else { w.plus_one() };
            Some(CertifiedChoice {
                member: m.member,
                subset: m.subset.clone(),
                coefficient: m.normalized,
                mirror_coefficient,
                mirrored,
                fours: f.count(4),
                f,
            })
        }
    };
    let chosen_coefficient = if chosen.values == family.weighting(0) { norm * tally.signed(0) } else { single(&chosen.values)? };
    Ok(Certificate { reference_sign: s0, members, family_size: family.size(), total, certified, chosen_coefficient })
}
