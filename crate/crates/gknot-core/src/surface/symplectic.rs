//! Symplectic bases for `S = M − Mᵀ` and the wedge class of a colouring vector.

use alloc::vec::Vec;

use super::check_seifert;
use crate::abelian::{FiniteAbelian, GroupElement, Wedge2};
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};

fn form(s: &Mat, x: &[i128], y: &[i128]) -> i128 {
    let mut acc = 0i128;
    for (i, row) in s.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        for (j, &e) in row.iter().enumerate() {
            acc += x[i] * e as i128 * y[j];
        }
    }
    acc
}

fn axpy(x: &mut [i128], k: i128, y: &[i128]) -> Result<()> {
    for (a, &b) in x.iter_mut().zip(y) {
        *a = k.checked_mul(b).and_then(|p| a.checked_add(p)).ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// Unimodular `P` with `Pᵀ(M − Mᵀ)P` the standard block form.
///
/// The columns of `P` are `e₁, f₁, e₂, f₂, …` with `ω(eₖ, fₖ) = −1`.
pub fn symplectic_reduce(m: &Mat) -> Result<Mat> {
    check_seifert(m).map_err(|e| match e {
        Error::NotSeifert(_) => Error::NotSymplecticable,
        other => other,
    })?;
    let n = m.len();
    let s = matrix::skew_part(m)?;
    let mut rest: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut cols: Vec<Vec<i128>> = Vec::with_capacity(n);
    while !rest.is_empty() {
        let (e, f) = loop {
            let k = rest.len();
            let unit = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .find(|&(i, j)| form(&s, &rest[i], &rest[j]).abs() == 1);
            if let Some((i, j)) = unit {
                let w = form(&s, &rest[i], &rest[j]);
                let (a, b) = if w == -1 { (i, j) } else { (j, i) };
                let (e, f) = (rest[a].clone(), rest[b].clone());
                let (hi, lo) = (i.max(j), i.min(j));
                rest.remove(hi);
                rest.remove(lo);
                break (e, f);
            }
            // Euclid on the first row with a nonzero pairing.
            let i =
                (0..k).find(|&i| (0..k).any(|j| form(&s, &rest[i], &rest[j]) != 0)).ok_or(Error::NotSymplecticable)?;
            let j = (0..k)
                .filter(|&j| form(&s, &rest[i], &rest[j]) != 0)
                .min_by_key(|&j| form(&s, &rest[i], &rest[j]).abs())
                .unwrap();
            let wj = form(&s, &rest[i], &rest[j]);
            let mut progressed = false;
            for l in 0..k {
                let wl = form(&s, &rest[i], &rest[l]);
                if l != j && wl != 0 {
                    let q = wl.div_euclid(wj);
                    let rj = rest[j].clone();
                    axpy(&mut rest[l], -q, &rj)?;
                    progressed = true;
                }
            }
            if !progressed {
                return Err(Error::NotSymplecticable);
            }
        };
        for x in rest.iter_mut() {
            let (xf, xe) = (form(&s, x, &f), form(&s, x, &e));
            axpy(x, xf, &e)?;
            axpy(x, -xe, &f)?;
        }
        cols.push(e);
        cols.push(f);
    }
    let mut p = matrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            p[i][j] = i64::try_from(c[i]).map_err(|_| Error::Overflow)?;
        }
    }
    let check = matrix::mul(&matrix::mul(&matrix::transpose(&p), &s)?, &p)?;
    if check != matrix::standard_symplectic(n / 2) {
        return Err(Error::NotSymplecticable);
    }
    Ok(p)
}

/// `Σⱼ w₂ⱼ ∧ w₂ⱼ₊₁` for a vector already in a symplectic basis.
pub fn standard_class(group: &FiniteAbelian, v: &[GroupElement]) -> Result<Wedge2> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::BadShape(alloc::format!("vector of odd length {}", v.len())));
    }
    v.chunks(2).try_fold(group.wedge2_zero(), |acc, c| acc.add(&group.wedge2(&c[0], &c[1])?))
}

/// `standard_class(P⁻¹V)` with `P = symplectic_reduce(M)`.
pub fn wedge_class(group: &FiniteAbelian, m: &Mat, v: &[GroupElement]) -> Result<Wedge2> {
    if v.len() != m.len() {
        return Err(Error::BadShape(alloc::format!("vector has {} entries, matrix has size {}", v.len(), m.len())));
    }
    let p_inv = matrix::inverse_unimodular(&symplectic_reduce(m)?)?;
    let w: Vec<GroupElement> = p_inv
        .iter()
        .map(|row| row.iter().zip(v).fold(group.zero(), |acc, (&k, a)| group.add(&acc, &group.scale(a, k))))
        .collect();
    standard_class(group, &w)
}

/// The vector `(sᵢ; sⱼ)` repeated `c` times per pair, then `(0; sₖ)` for every `k`.
pub fn canonical_vector(w: &Wedge2, group: &FiniteAbelian) -> Result<Vec<GroupElement>> {
    if w.moduli() != group.wedge2_zero().moduli() {
        return Err(Error::GroupMismatch);
    }
    let mut out = Vec::new();
    for (i, j, c) in w.pair_coords() {
        for _ in 0..c {
            out.push(group.basis(i));
            out.push(group.basis(j));
        }
    }
    for k in 0..group.rank() {
        out.push(group.zero());
        out.push(group.basis(k));
    }
    Ok(out)
}

/// A Seifert matrix of genus `g` whose skew part is already standard.
pub fn standard_seifert(g: usize) -> Mat {
    let mut m = matrix::zeros(2 * g, 2 * g);
    for k in 0..g {
        m[2 * k + 1][2 * k] = 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::super::tests::{figure_eight, trefoil};
    use super::*;
    use proptest::prelude::*;

    fn check(m: &Mat) {
        let p = symplectic_reduce(m).unwrap();
        let s = matrix::skew_part(m).unwrap();
        let j = matrix::mul(&matrix::mul(&matrix::transpose(&p), &s).unwrap(), &p).unwrap();
        assert_eq!(j, matrix::standard_symplectic(m.len() / 2));
        assert_eq!(matrix::det(&p).unwrap().abs(), 1);
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(symplectic_reduce(&standard_seifert(2)).unwrap(), matrix::identity(4));
        assert_eq!(symplectic_reduce(&trefoil()).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        check(&figure_eight());
        check(&vec![vec![0, 2, 0, 1], vec![1, 0, 3, 0], vec![0, 2, 0, 0], vec![1, 0, 1, 0]]);
        assert_eq!(symplectic_reduce(&vec![vec![1, 0], vec![0, 1]]), Err(Error::NotSymplecticable));
        assert_eq!(symplectic_reduce(&vec![]).unwrap(), Vec::<Vec<i64>>::new());
    }

    #[test]
    fn canonical_examples() {
        let g = FiniteAbelian::new(vec![3, 3, 3]).unwrap();
        let w = g.wedge2(&g.basis(0), &g.basis(1)).unwrap();
        let w = w.add(&w).unwrap();
        let v = canonical_vector(&w, &g).unwrap();
        let b = |i| g.basis(i);
        let z = g.zero();
        assert_eq!(v, vec![b(0), b(1), b(0), b(1), z.clone(), b(0), z.clone(), b(1), z, b(2)]);
        let g = FiniteAbelian::new(vec![2, 2]).unwrap();
        assert_eq!(canonical_vector(&g.wedge2_zero(), &g).unwrap(), vec![g.zero(), g.basis(0), g.zero(), g.basis(1)]);
        let other = FiniteAbelian::new(vec![3, 3]).unwrap();
        assert_eq!(canonical_vector(&other.wedge2_zero(), &g), Err(Error::GroupMismatch));
    }

    #[test]
    fn canonical_round_trip_exhaustive() {
        for orders in [vec![2, 2], vec![4, 6], vec![3, 3, 3], vec![2, 4, 4]] {
            let g = FiniteAbelian::new(orders).unwrap();
            for w in g.wedge2_elements() {
                let v = canonical_vector(&w, &g).unwrap();
                let m = standard_seifert(v.len() / 2);
                assert_eq!(wedge_class(&g, &m, &v).unwrap(), w);
            }
        }
    }

    fn seifert_4x4() -> impl Strategy<Value = Mat> {
        (proptest::collection::vec(-3i64..4, 16), proptest::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..8))
            .prop_map(|(sym, ops)| {
                // A symmetric perturbation of a standard matrix, then a unimodular congruence.
                let mut m = standard_seifert(2);
                for i in 0..4 {
                    for j in i..4 {
                        let x = sym[4 * i + j];
                        m[i][j] += x;
                        if i != j {
                            m[j][i] += x;
                        }
                    }
                }
                let mut u = matrix::identity(4);
                for (i, j, k) in ops {
                    if i != j {
                        u = matrix::mul(&u, &matrix::elementary(4, i, j, k)).unwrap();
                    }
                }
                matrix::mul(&matrix::mul(&matrix::transpose(&u), &m).unwrap(), &u).unwrap()
            })
    }

    proptest! {
        #[test]
        fn reduce_gives_standard_form(m in seifert_4x4()) {
            check(&m);
        }
    }
}
