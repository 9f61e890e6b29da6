//! Surface data `(M, V)`: validation, enumeration and connect sums.
//!
//! `M` is a `2g×2g` integer Seifert matrix with `det(M − Mᵀ) = 1` and `V` a
//! colouring vector in `A^{2g}`. The data records a colouring when the entries
//! of `V` generate `A` and `MᵀV = M·(t·V)` holds in `A^{2g}`.

mod moves;
mod shorten;
mod symplectic;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use moves::{apply_move, lambda1, lambda2, lambda2_inverse, Move, Variant};
pub use shorten::{shorten_vector, Shortened};
pub use symplectic::{canonical_vector, standard_class, standard_seifert, symplectic_reduce, wedge_class};

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceData {
    spec: GroupSpec,
    matrix: Mat,
    vector: Vec<GroupElement>,
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    pub generates: bool,
    pub equation_holds: bool,
    pub genus_ok: bool,
    pub valid: bool,
}

/// Checks that `m` is a Seifert matrix: square, even size, `det(M − Mᵀ) = 1`.
pub fn check_seifert(m: &Mat) -> Result<()> {
    if !matrix::is_square(m) {
        return Err(Error::BadShape("Seifert matrix is not square".into()));
    }
    if !m.len().is_multiple_of(2) {
        return Err(Error::BadShape(format!("Seifert matrix has odd size {}", m.len())));
    }
    let d = matrix::det(&matrix::skew_part(m)?)?;
    if d != 1 {
        return Err(Error::NotSeifert(d));
    }
    Ok(())
}

impl SurfaceData {
    pub fn new(spec: GroupSpec, matrix: Mat, vector: Vec<GroupElement>) -> Result<SurfaceData> {
        check_seifert(&matrix)?;
        if vector.len() != matrix.len() {
            return Err(Error::BadShape(format!(
                "vector has {} entries, matrix has size {}",
                vector.len(),
                matrix.len()
            )));
        }
        for v in &vector {
            spec.check(v)?;
        }
        Ok(SurfaceData { spec, matrix, vector })
    }

    /// Builds data from raw coordinate tuples, reducing them.
    pub fn from_coords(spec: GroupSpec, matrix: Mat, coords: &[Vec<i64>]) -> Result<SurfaceData> {
        let vector = coords.iter().map(|c| spec.element(c)).collect::<Result<Vec<_>>>()?;
        SurfaceData::new(spec, matrix, vector)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn vector(&self) -> &[GroupElement] {
        &self.vector
    }

    pub fn genus(&self) -> usize {
        self.matrix.len() / 2
    }

    pub fn into_parts(self) -> (GroupSpec, Mat, Vec<GroupElement>) {
        (self.spec, self.matrix, self.vector)
    }
}

/// `X·V` for an integer matrix `X` acting on a vector over `A`.
pub fn apply_matrix(spec: &GroupSpec, x: &Mat, v: &[GroupElement]) -> Vec<GroupElement> {
    x.iter().map(|row| row.iter().zip(v).fold(spec.zero(), |acc, (&k, a)| spec.add(&acc, &spec.scale(a, k)))).collect()
}

/// `t·V`, entrywise.
pub fn act_vector(spec: &GroupSpec, v: &[GroupElement]) -> Vec<GroupElement> {
    v.iter().map(|a| spec.act(a)).collect()
}

/// Whether `MᵀV = M·(t·V)` holds.
pub fn equation_holds(spec: &GroupSpec, m: &Mat, v: &[GroupElement]) -> bool {
    apply_matrix(spec, &matrix::transpose(m), v) == apply_matrix(spec, m, &act_vector(spec, v))
}

/// The equivalent form `V = S⁻¹·M·(t − 1)·V` with `S = Mᵀ − M`.
fn equation_holds_solved(spec: &GroupSpec, m: &Mat, v: &[GroupElement]) -> Result<bool> {
    let s = matrix::sub(&matrix::transpose(m), m)?;
    let s_inv = matrix::inverse_unimodular(&s)?;
    let tm1: Vec<GroupElement> = v.iter().map(|a| spec.act_minus_one(a)).collect();
    let rhs = apply_matrix(spec, &s_inv, &apply_matrix(spec, m, &tm1));
    Ok(rhs == v)
}

pub fn validate(data: &SurfaceData) -> Result<ValidationReport> {
    let spec = &data.spec;
    let generates = spec.generates(&data.vector)?;
    let equation = equation_holds(spec, &data.matrix, &data.vector);
    if equation != equation_holds_solved(spec, &data.matrix, &data.vector)? {
        return Err(Error::InternalInconsistency);
    }
    let genus_ok = data.matrix.len() >= spec.min_generators();
    Ok(ValidationReport { generates, equation_holds: equation, genus_ok, valid: generates && equation && genus_ok })
}

/// Errors with [`Error::InvalidData`] unless the data validates.
pub fn require_valid(data: &SurfaceData) -> Result<()> {
    if validate(data)?.valid {
        Ok(())
    } else {
        Err(Error::InvalidData)
    }
}

/// Default candidate budget for exhaustive searches.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// All colouring vectors for `m`, in lexicographic order.
///
/// Searches the cube `A^{2g}`, which must hold at most `budget` vectors.
pub fn enumerate_colourings(spec: &GroupSpec, m: &Mat, budget: u128) -> Result<Vec<Vec<GroupElement>>> {
    check_seifert(m)?;
    let size = m.len();
    let needed = (0..size).fold(1u128, |acc, _| acc.saturating_mul(spec.order()));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let elems: Vec<GroupElement> = spec.elements().collect();
    // contrib[j][e] is the contribution of vⱼ = elems[e] to MᵀV − M·(t·V).
    let contrib: Vec<Vec<Vec<GroupElement>>> = (0..size)
        .map(|j| {
            elems
                .iter()
                .map(|a| {
                    let ta = spec.act(a);
                    (0..size).map(|i| spec.sub(&spec.scale(a, m[j][i]), &spec.scale(&ta, m[i][j]))).collect()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; size];
    let mut sums = vec![vec![spec.zero(); size]; size + 1];
    search(spec, &elems, &contrib, 0, &mut choice, &mut sums, m, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    spec: &GroupSpec,
    elems: &[GroupElement],
    contrib: &[Vec<Vec<GroupElement>>],
    depth: usize,
    choice: &mut [usize],
    sums: &mut [Vec<GroupElement>],
    m: &Mat,
    out: &mut Vec<Vec<GroupElement>>,
) -> Result<()> {
    let size = choice.len();
    if depth == size {
        if sums[size].iter().all(GroupElement::is_zero) {
            let v: Vec<GroupElement> = choice.iter().map(|&e| elems[e].clone()).collect();
            if spec.generates(&v)? && size >= spec.min_generators() {
                debug_assert!(equation_holds(spec, m, &v));
                out.push(v);
            }
        }
        return Ok(());
    }
    for e in 0..elems.len() {
        choice[depth] = e;
        let next: Vec<GroupElement> = sums[depth].iter().zip(&contrib[depth][e]).map(|(s, c)| spec.add(s, c)).collect();
        sums[depth + 1] = next;
        search(spec, elems, contrib, depth + 1, choice, sums, m, out)?;
    }
    Ok(())
}

/// Block sum `M₁ ⊕ M₂` with concatenated vectors.
pub fn connect_sum(d1: &SurfaceData, d2: &SurfaceData) -> Result<SurfaceData> {
    if d1.spec != d2.spec {
        return Err(Error::GroupMismatch);
    }
    let mut vector = d1.vector.clone();
    vector.extend(d2.vector.iter().cloned());
    Ok(SurfaceData { spec: d1.spec.clone(), matrix: matrix::block_diag(&d1.matrix, &d2.matrix), vector })
}
