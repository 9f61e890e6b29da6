//! The S-equivalence moves Λ₁ (unimodular congruence) and Λ₂ (stabilisation).

use alloc::vec::Vec;

use super::{apply_matrix, SurfaceData};
use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};

/// Which of the two stabilisation patterns Λ₂ appends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Appended block `[[0, −1], [0, 0]]`, new entries `(0; φ⁻¹((t − 1)·Σ cᵢvᵢ))`.
    One,
    /// Appended block `[[0, 0], [1, 0]]`, new entries `(0; (t − 1)·Σ cᵢvᵢ)`.
    Two,
}

impl TryFrom<u8> for Variant {
    type Error = Error;

    fn try_from(v: u8) -> Result<Variant> {
        match v {
            1 => Ok(Variant::One),
            2 => Ok(Variant::Two),
            _ => Err(Error::BadParameters(alloc::format!("Λ₂ variant must be 1 or 2, got {v}"))),
        }
    }
}

/// A recorded move.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    Lambda1(Mat),
    Lambda2 { c: Vec<i64>, variant: Variant },
    Lambda2Inverse,
}

pub fn apply_move(data: &SurfaceData, mv: &Move) -> Result<SurfaceData> {
    match mv {
        Move::Lambda1(u) => lambda1(data, u),
        Move::Lambda2 { c, variant } => lambda2(data, c, *variant),
        Move::Lambda2Inverse => lambda2_inverse(data),
    }
}

/// `(UᵀMU, U⁻¹V)`.
pub fn lambda1(data: &SurfaceData, u: &Mat) -> Result<SurfaceData> {
    if u.len() != data.matrix.len() || !matrix::is_square(u) {
        return Err(Error::NotUnimodular);
    }
    let u_inv = matrix::inverse_unimodular(u)?;
    let m = matrix::mul(&matrix::mul(&matrix::transpose(u), &data.matrix)?, u)?;
    let vector = apply_matrix(&data.spec, &u_inv, &data.vector);
    Ok(SurfaceData { spec: data.spec.clone(), matrix: m, vector })
}

fn stabilised_entry(data: &SurfaceData, c: &[i64], variant: Variant) -> GroupElement {
    let spec = &data.spec;
    let sum = c.iter().zip(&data.vector).fold(spec.zero(), |acc, (&k, v)| spec.add(&acc, &spec.scale(v, k)));
    let x = spec.act_minus_one(&sum);
    match variant {
        Variant::One => spec.act_inv(&x),
        Variant::Two => x,
    }
}

/// Stabilises by two rows and columns carrying the integers `c`.
pub fn lambda2(data: &SurfaceData, c: &[i64], variant: Variant) -> Result<SurfaceData> {
    let s = data.matrix.len();
    if c.len() != s {
        return Err(Error::BadShape(alloc::format!("Λ₂ needs {s} integers, got {}", c.len())));
    }
    let mut m = matrix::zeros(s + 2, s + 2);
    for i in 0..s {
        m[i][..s].copy_from_slice(&data.matrix[i]);
        m[i][s] = c[i];
        m[s][i] = c[i];
    }
    match variant {
        Variant::One => m[s][s + 1] = -1,
        Variant::Two => m[s + 1][s] = 1,
    }
    let mut vector = data.vector.clone();
    vector.push(data.spec.zero());
    vector.push(stabilised_entry(data, c, variant));
    Ok(SurfaceData { spec: data.spec.clone(), matrix: m, vector })
}

/// Removes a trailing stabilised pair produced by either Λ₂ variant.
pub fn lambda2_inverse(data: &SurfaceData) -> Result<SurfaceData> {
    let n = data.matrix.len();
    if n < 2 {
        return Err(Error::PatternMismatch);
    }
    let (p, q) = (n - 2, n - 1);
    let m = &data.matrix;
    let c: Vec<i64> = (0..p).map(|i| m[p][i]).collect();
    let variant = match (m[p][q], m[q][p]) {
        (-1, 0) => Variant::One,
        (0, 1) => Variant::Two,
        _ => return Err(Error::PatternMismatch),
    };
    let symmetric = (0..p).all(|i| m[i][p] == c[i]);
    let q_clear = (0..p).all(|i| m[i][q] == 0 && m[q][i] == 0);
    if !symmetric || !q_clear || m[p][p] != 0 || m[q][q] != 0 {
        return Err(Error::PatternMismatch);
    }
    let inner = SurfaceData {
        spec: data.spec.clone(),
        matrix: m[..p].iter().map(|r| r[..p].to_vec()).collect(),
        vector: data.vector[..p].to_vec(),
    };
    if !data.vector[p].is_zero() || data.vector[q] != stabilised_entry(&inner, &c, variant) {
        return Err(Error::PatternMismatch);
    }
    Ok(inner)
}
