//! Word shortening: rewrite a colouring vector so every entry is `0` or `±b`
//! for a chosen basis `b`.

use alloc::vec::Vec;

use super::moves::{lambda1, lambda2, Move, Variant};
use super::symplectic::symplectic_reduce;
use super::{require_valid, SurfaceData};
use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};

/// The shortened data together with the moves that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortened {
    pub data: SurfaceData,
    pub moves: Vec<Move>,
}

fn apply(data: SurfaceData, mv: Move, moves: &mut Vec<Move>) -> Result<SurfaceData> {
    let out = match &mv {
        Move::Lambda1(u) => lambda1(&data, u)?,
        Move::Lambda2 { c, variant } => lambda2(&data, c, *variant)?,
        Move::Lambda2Inverse => unreachable!("shortening never destabilises"),
    };
    moves.push(mv);
    Ok(out)
}

fn with_entries(n: usize, entries: &[(usize, usize, i64)]) -> Mat {
    let mut u = matrix::identity(n);
    for &(i, j, k) in entries {
        u[i][j] = k;
    }
    u
}

/// Greedy shortening with respect to `basis`.
///
/// Each step stabilises with a pair `(0; b)` and slides it into the first long
/// entry by a symplectic transvection.
pub fn shorten_vector(data: &SurfaceData, basis: &[GroupElement]) -> Result<Shortened> {
    require_valid(data)?;
    let spec = data.spec();
    let lengths = spec.word_lengths(basis)?;
    if !lengths.all_reachable() {
        return Err(Error::NonGenerating);
    }
    let len = |a: &GroupElement| lengths.get(a).unwrap();
    let long = |d: &SurfaceData| d.vector().iter().position(|a| len(a) > 1);
    let mut moves = Vec::new();
    if long(data).is_none() {
        return Ok(Shortened { data: data.clone(), moves });
    }
    let steps: Vec<GroupElement> = basis.iter().flat_map(|b| [b.clone(), spec.neg(b)]).collect();
    let elems: Vec<GroupElement> = spec.elements().collect();
    let mut cur = apply(data.clone(), Move::Lambda1(symplectic_reduce(data.matrix())?), &mut moves)?;
    while let Some(p) = long(&cur) {
        let a = &cur.vector()[p];
        let b = steps.iter().find(|b| len(&spec.add(a, b)) < len(a)).unwrap().clone();
        // (t − 1) is a bijection because φ has no nonzero fixed points.
        let u = elems.iter().find(|u| spec.act_minus_one(u) == b).ok_or(Error::InternalInconsistency)?;
        let c = spec.express(cur.vector(), u)?.ok_or(Error::InternalInconsistency)?;
        let q = cur.matrix().len();
        cur = apply(cur, Move::Lambda2 { c, variant: Variant::Two }, &mut moves)?;
        let n = q + 2;
        let slide = if p % 2 == 0 {
            with_entries(n, &[(p, q + 1, -1), (q, p + 1, -1)])
        } else {
            cur = apply(
                cur,
                Move::Lambda1(with_entries(n, &[(q, q, 0), (q + 1, q + 1, 0), (q, q + 1, -1), (q + 1, q, 1)])),
                &mut moves,
            )?;
            with_entries(n, &[(p, q, -1), (q + 1, p - 1, -1)])
        };
        cur = apply(cur, Move::Lambda1(slide), &mut moves)?;
    }
    Ok(Shortened { data: cur, moves })
}
