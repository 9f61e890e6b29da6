//! Dense integer matrices as `Vec<Vec<i64>>`, with overflow-checked products.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Mat = Vec<Vec<i64>>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![0; cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// `I + k e_i e_jᵀ` for `i ≠ j`.
pub fn elementary(n: usize, i: usize, j: usize, k: i64) -> Mat {
    let mut m = identity(n);
    m[i][j] += k;
    m
}

pub fn is_square(m: &Mat) -> bool {
    m.iter().all(|r| r.len() == m.len())
}

pub fn transpose(m: &Mat) -> Mat {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut t = zeros(cols, rows);
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            t[j][i] = x;
        }
    }
    t
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

pub fn mul(a: &Mat, b: &Mat) -> Result<Mat> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        if row.len() != inner {
            return Err(Error::BadShape("matrix product dimensions".into()));
        }
        for j in 0..cols {
            let mut acc = 0i128;
            for k in 0..inner {
                acc += row[k] as i128 * b[k][j] as i128;
            }
            out[i][j] = narrow(acc)?;
        }
    }
    Ok(out)
}

pub fn mul_vec(a: &Mat, v: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .map(|row| {
            if row.len() != v.len() {
                return Err(Error::BadShape("matrix-vector dimensions".into()));
            }
            narrow(row.iter().zip(v).map(|(&x, &y)| x as i128 * y as i128).sum())
        })
        .collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Result<Mat> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| x.checked_sub(y).ok_or(Error::Overflow)).collect())
        .collect()
}

pub fn neg(a: &Mat) -> Mat {
    a.iter().map(|r| r.iter().map(|&x| -x).collect()).collect()
}

/// `a ⊕ b`.
pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let (p, q) = (a.len(), b.len());
    let mut out = zeros(p + q, p + q);
    for i in 0..p {
        out[i][..p].copy_from_slice(&a[i]);
    }
    for i in 0..q {
        out[p + i][p..].copy_from_slice(&b[i]);
    }
    out
}

/// `S = M − Mᵀ`.
pub fn skew_part(m: &Mat) -> Result<Mat> {
    sub(m, &transpose(m))
}

/// Determinant by fraction-free elimination.
pub fn det(m: &Mat) -> Result<i64> {
    let n = m.len();
    if !is_square(m) {
        return Err(Error::BadShape("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|p| a[i][k].checked_mul(a[k][j]).and_then(|q| p.checked_sub(q)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = x / prev;
            }
        }
        prev = a[k][k];
    }
    narrow(sign * a[n - 1][n - 1])
}

/// Exact inverse of a matrix with determinant ±1.
pub fn inverse_unimodular(u: &Mat) -> Result<Mat> {
    let n = u.len();
    if !is_square(u) {
        return Err(Error::NotUnimodular);
    }
    let mut a: Vec<Vec<i128>> = u.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut inv: Vec<Vec<i128>> = identity(n).into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    for c in 0..n {
        // Euclid on column c among rows c.. until a single nonzero entry remains.
        loop {
            let nz: Vec<usize> = (c..n).filter(|&i| a[i][c] != 0).collect();
            if nz.is_empty() {
                return Err(Error::NotUnimodular);
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            if nz.len() == 1 {
                a.swap(p, c);
                inv.swap(p, c);
                break;
            }
            for &i in &nz {
                if i != p {
                    let q = a[i][c].div_euclid(a[p][c]);
                    for j in 0..n {
                        a[i][j] -= q * a[p][j];
                        inv[i][j] -= q * inv[p][j];
                    }
                }
            }
        }
        if a[c][c].abs() != 1 {
            return Err(Error::NotUnimodular);
        }
        if a[c][c] == -1 {
            for j in 0..n {
                a[c][j] = -a[c][j];
                inv[c][j] = -inv[c][j];
            }
        }
        for i in 0..n {
            if i != c && a[i][c] != 0 {
                let q = a[i][c];
                for j in 0..n {
                    a[i][j] -= q * a[c][j];
                    inv[i][j] -= q * inv[c][j];
                }
            }
        }
        if a.iter().flatten().chain(inv.iter().flatten()).any(|x| x.abs() > i64::MAX as i128) {
            return Err(Error::Overflow);
        }
    }
    inv.into_iter().map(|r| r.into_iter().map(narrow).collect()).collect()
}

/// The `g`-fold block sum of `[[0,−1],[1,0]]`.
pub fn standard_symplectic(g: usize) -> Mat {
    let mut j = zeros(2 * g, 2 * g);
    for k in 0..g {
        j[2 * k][2 * k + 1] = -1;
        j[2 * k + 1][2 * k] = 1;
    }
    j
}
