//! The invariants su, cu and s of valid surface data, and the Y-obstruction.
//!
//! su and cu are computed by lift-and-divide. Both lift `V` to integers,
//! push the lift through an integer matrix, divide by the factor modulus and
//! pair the quotient with the lift. Lifts of `t·V` (and its powers) come from a
//! fixed integer lift `Ñ` of the action with `Ñ^m ≡ I` rowwise mod `nᵢ²`.

use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelian, GroupElement, GroupSpec, Wedge2, Wedge3};
use crate::arith::{gcd, modn};
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};
use crate::surface::{require_valid, wedge_class, SurfaceData, DEFAULT_BUDGET};

/// su, cu and s of one piece of surface data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub su: GroupElement,
    pub cu: GroupElement,
    pub s: Wedge2,
}

pub fn invariants(data: &SurfaceData) -> Result<Invariants> {
    Ok(Invariants { su: su(data)?, cu: cu(data)?, s: vector_class(data)? })
}

/// Working modulus `lcm(nᵢ)²`; every quantity below is only needed modulo it.
fn work_modulus(group: &FiniteAbelian) -> Result<i128> {
    let l =
        group.orders().iter().try_fold(1i64, |acc, &n| (acc / gcd(acc, n)).checked_mul(n)).ok_or(Error::Overflow)?;
    (l as i128).checked_mul(l as i128).filter(|&q| q <= i64::MAX as i128).ok_or(Error::Overflow)
}

type Lift = Vec<Vec<i128>>;

fn mat_vec_mod(a: &Mat, x: &[i128], q: i128) -> Vec<i128> {
    a.iter().map(|row| row.iter().zip(x).fold(0i128, |acc, (&e, &y)| (acc + e as i128 * y).rem_euclid(q))).collect()
}

fn mat_mul_mod(a: &Mat, b: &Mat, q: i128) -> Mat {
    let n = b.len();
    a.iter()
        .map(|row| {
            (0..b.first().map_or(0, |r| r.len()))
                .map(|j| (0..n).fold(0i128, |acc, k| (acc + row[k] as i128 * b[k][j] as i128).rem_euclid(q)) as i64)
                .collect()
        })
        .collect()
}

fn mat_pow_mod(a: &Mat, e: u32, q: i128) -> Mat {
    (0..e).fold(matrix::identity(a.len()), |acc, _| mat_mul_mod(&acc, a, q))
}

fn is_structured(spec: &GroupSpec, nt: &Mat, q: i128) -> bool {
    let p = mat_pow_mod(nt, spec.m(), q);
    let orders = spec.orders();
    p.iter().enumerate().all(|(i, row)| {
        let n2 = orders[i] as i128 * orders[i] as i128;
        row.iter().enumerate().all(|(j, &e)| (e as i128 - i128::from(i == j)).rem_euclid(n2) == 0)
    })
}

/// The first integer lift `Ñ` of the action, in lexicographic order over
/// entries in `[0, nᵢ²)`, with `Ñ^m ≡ I` mod `nᵢ²` in row `i`.
pub fn lift_action(spec: &GroupSpec) -> Result<Mat> {
    let r = spec.rank();
    let orders = spec.orders();
    let q = work_modulus(spec)?;
    let needed = orders.iter().fold(1u128, |acc, &n| acc.saturating_mul((n as u128).saturating_pow(r as u32)));
    if needed > DEFAULT_BUDGET {
        return Err(Error::BudgetExceeded { needed, budget: DEFAULT_BUDGET });
    }
    let base: Mat =
        spec.action().iter().enumerate().map(|(i, row)| row.iter().map(|&e| modn(e, orders[i])).collect()).collect();
    let mut steps = vec![0i64; r * r];
    loop {
        let nt: Mat = (0..r).map(|i| (0..r).map(|j| base[i][j] + steps[i * r + j] * orders[i]).collect()).collect();
        if is_structured(spec, &nt, q) {
            return Ok(nt);
        }
        let mut k = r * r;
        loop {
            if k == 0 {
                return Err(Error::LiftFailure);
            }
            k -= 1;
            steps[k] += 1;
            if steps[k] < orders[k / r] {
                break;
            }
            steps[k] = 0;
        }
    }
}

/// Minimal non-negative lifts of the entries of `V`.
pub fn minimal_lift(v: &[GroupElement]) -> Vec<Vec<i64>> {
    v.iter().map(|a| a.coords().to_vec()).collect()
}

fn check_lift(spec: &GroupSpec, v: &[GroupElement], nt: &Mat, x: &[Vec<i64>], q: i128) -> Result<Lift> {
    let r = spec.rank();
    if nt.len() != r || !matrix::is_square(nt) {
        return Err(Error::BadShape("action lift has the wrong size".into()));
    }
    for (i, row) in nt.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if modn(e - spec.action()[i][j], spec.orders()[i]) != 0 {
                return Err(Error::LiftFailure);
            }
        }
    }
    if !is_structured(spec, nt, q) {
        return Err(Error::LiftFailure);
    }
    if x.len() != v.len() {
        return Err(Error::BadShape("vector lift has the wrong length".into()));
    }
    x.iter()
        .zip(v)
        .map(|(xi, a)| {
            if xi.len() != r || xi.iter().zip(a.coords()).zip(spec.orders()).any(|((&l, &c), &n)| modn(l - c, n) != 0) {
                return Err(Error::LiftFailure);
            }
            Ok(xi.iter().map(|&l| (l as i128).rem_euclid(q)).collect())
        })
        .collect()
}

/// Divides `w` (already reduced mod the working modulus) by `n`.
fn divide(w: Vec<i128>, n: i64) -> Result<Vec<i128>> {
    w.into_iter()
        .map(|e| if e % n as i128 == 0 { Ok(e / n as i128) } else { Err(Error::DivisibilityFailure) })
        .collect()
}

/// `Σⱼ Σ_d [n_c | n_d] · xⱼ,d · zⱼ mod n_c` for every factor `c`.
fn pair(spec: &GroupSpec, x: &Lift, z: &[Vec<i128>]) -> Result<GroupElement> {
    let orders = spec.orders();
    let coords: Vec<i64> = (0..spec.rank())
        .map(|c| {
            let n = orders[c] as i128;
            let mut acc = 0i128;
            for (j, xj) in x.iter().enumerate() {
                let e: i128 = (0..spec.rank()).filter(|&d| orders[d] % orders[c] == 0).map(|d| xj[d] % n).sum();
                acc = (acc + e * (z[c][j] % n)).rem_euclid(n);
            }
            acc as i64
        })
        .collect();
    spec.element(&coords)
}

/// Per-factor column of a lift.
fn column(x: &Lift, c: usize) -> Vec<i128> {
    x.iter().map(|e| e[c]).collect()
}

pub fn su(data: &SurfaceData) -> Result<GroupElement> {
    let nt = lift_action(data.spec())?;
    su_with_lift(data, &nt, &minimal_lift(data.vector()))
}

/// su computed from a given structured lift `(Ñ, Ṽ)`.
pub fn su_with_lift(data: &SurfaceData, nt: &Mat, x: &[Vec<i64>]) -> Result<GroupElement> {
    require_valid(data)?;
    let spec = data.spec();
    let q = work_modulus(spec)?;
    let x = check_lift(spec, data.vector(), nt, x, q)?;
    let y: Lift = x.iter().map(|e| mat_vec_mod(nt, e, q)).collect();
    let m = data.matrix();
    let mt = matrix::transpose(m);
    let z = (0..spec.rank())
        .map(|c| {
            let my = mat_vec_mod(m, &column(&y, c), q);
            let mx = mat_vec_mod(&mt, &column(&x, c), q);
            divide(my.iter().zip(&mx).map(|(a, b)| (a - b).rem_euclid(q)).collect(), spec.orders()[c])
        })
        .collect::<Result<Vec<_>>>()?;
    pair(spec, &x, &z)
}

/// Block tridiagonal matrix with `m − 1` block rows: diagonal
/// blocks `M + Mᵀ`, superdiagonal `Mᵀ`, subdiagonal `M`.
pub fn lmatrix(m: &Mat, order: u32) -> Result<Mat> {
    if order < 2 {
        return Err(Error::UnsupportedM(order));
    }
    let g = m.len();
    let k = order as usize - 1;
    let mt = matrix::transpose(m);
    let mut l = matrix::zeros(g * k, g * k);
    for b in 0..k {
        for i in 0..g {
            for j in 0..g {
                l[b * g + i][b * g + j] = m[i][j].checked_add(mt[i][j]).ok_or(Error::Overflow)?;
                if b + 1 < k {
                    l[b * g + i][(b + 1) * g + j] = mt[i][j];
                    l[(b + 1) * g + i][b * g + j] = m[i][j];
                }
            }
        }
    }
    Ok(l)
}

/// Block lifts fed to `L(M)`: `tʲ·Ṽ` for `m ≤ 3`, and
/// `(−1)ʲ t⁻ʲ(1 + t + … + tʲ)·Ṽ` with `t⁻¹ = Ñ^{m−1}` otherwise.
fn cu_blocks(spec: &GroupSpec, nt: &Mat, x: &Lift, q: i128) -> Lift {
    let m = spec.m();
    let mut blocks = Vec::new();
    if m <= 3 {
        let mut cur = x.clone();
        for _ in 0..m - 1 {
            let next = cur.iter().map(|e| mat_vec_mod(nt, e, q)).collect();
            blocks.extend(cur);
            cur = next;
        }
        return blocks;
    }
    let inv = mat_pow_mod(nt, m - 1, q);
    let mut sum = x.clone();
    let mut term = x.clone();
    for j in 0..m - 1 {
        if j > 0 {
            term = term.iter().map(|e| mat_vec_mod(&inv, e, q)).collect();
            for (s, t) in sum.iter_mut().zip(&term) {
                for (a, b) in s.iter_mut().zip(t) {
                    *a = (*a + b).rem_euclid(q);
                }
            }
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        blocks.extend(sum.iter().map(|e| e.iter().map(|&a| (sign * a).rem_euclid(q)).collect::<Vec<_>>()));
    }
    blocks
}

pub fn cu(data: &SurfaceData) -> Result<GroupElement> {
    let nt = lift_action(data.spec())?;
    cu_with_lift(data, &nt, &minimal_lift(data.vector()))
}

/// cu computed from a given structured lift `(Ñ, Ṽ)`.
pub fn cu_with_lift(data: &SurfaceData, nt: &Mat, x: &[Vec<i64>]) -> Result<GroupElement> {
    require_valid(data)?;
    let spec = data.spec();
    let q = work_modulus(spec)?;
    let x = check_lift(spec, data.vector(), nt, x, q)?;
    let blocks = cu_blocks(spec, nt, &x, q);
    let l = lmatrix(data.matrix(), spec.m())?;
    let z = (0..spec.rank())
        .map(|c| divide(mat_vec_mod(&l, &column(&blocks, c), q), spec.orders()[c]))
        .collect::<Result<Vec<_>>>()?;
    pair(spec, &blocks, &z)
}

/// The class s: `Σⱼ w₂ⱼ ∧ w₂ⱼ₊₁` for `W = P⁻¹V` in a symplectic basis.
pub fn vector_class(data: &SurfaceData) -> Result<Wedge2> {
    require_valid(data)?;
    wedge_class(data.spec(), data.matrix(), data.vector())
}

/// `Σ k · (a ∧ b ∧ c)` over weighted triples.
pub fn y_obstruction(group: &FiniteAbelian, triples: &[([GroupElement; 3], i64)]) -> Result<Wedge3> {
    triples.iter().try_fold(group.wedge3_zero(), |acc, ([a, b, c], k)| acc.add(&group.wedge3(a, b, c)?.scale(*k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{connect_sum, enumerate_colourings, lambda1, lambda2, standard_seifert, validate, Variant};
    use proptest::prelude::*;

    fn spec(m: u32, orders: &[i64], action: &[&[i64]]) -> GroupSpec {
        GroupSpec::new(m, orders.to_vec(), action.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn d2n(n: i64) -> GroupSpec {
        spec(2, &[n], &[&[n - 1]])
    }

    fn a4() -> GroupSpec {
        spec(3, &[2, 2], &[&[0, 1], &[-1, -1]])
    }

    fn data(g: &GroupSpec, m: Mat, v: &[&[i64]]) -> SurfaceData {
        let coords: Vec<Vec<i64>> = v.iter().map(|c| c.to_vec()).collect();
        SurfaceData::from_coords(g.clone(), m, &coords).unwrap()
    }

    fn tref() -> Mat {
        vec![vec![-1, 1], vec![0, -1]]
    }

    fn fig() -> Mat {
        vec![vec![1, 1], vec![0, -1]]
    }

    /// Seifert matrix of a twist knot; `det(M + Mᵀ) = 4k − 1`.
    fn twist(k: i64) -> Mat {
        vec![vec![k, 0], vec![1, 1]]
    }

    #[test]
    fn action_lifts() {
        assert_eq!(lift_action(&a4()).unwrap(), vec![vec![0, 1], vec![3, 3]]);
        let nt = lift_action(&d2n(3)).unwrap();
        assert_eq!(nt, vec![vec![8]]);
        let c3 = spec(3, &[7], &[&[2]]);
        let nt = lift_action(&c3).unwrap();
        assert_eq!(modn(nt[0][0], 7), 2);
        assert_eq!(crate::arith::pow_mod(nt[0][0], 3, 49), 1);
    }

    #[test]
    fn lift_rejections() {
        let d = data(&d2n(3), tref(), &[&[1], &[2]]);
        assert_eq!(su_with_lift(&d, &vec![vec![2]], &minimal_lift(d.vector())), Err(Error::LiftFailure));
        assert_eq!(su_with_lift(&d, &vec![vec![8]], &[vec![0], vec![2]]), Err(Error::LiftFailure));
        let bad = data(&d2n(3), tref(), &[&[1], &[1]]);
        assert_eq!(su(&bad), Err(Error::InvalidData));
        assert_eq!(cu(&bad), Err(Error::InvalidData));
        assert_eq!(lmatrix(&tref(), 1), Err(Error::UnsupportedM(1)));
    }

    #[test]
    fn lmatrix_shape() {
        let l = lmatrix(&tref(), 3).unwrap();
        assert_eq!(l, vec![vec![-2, 1, -1, 0], vec![1, -2, 1, -1], vec![-1, 1, -2, 1], vec![0, -1, 1, -2]]);
        assert_eq!(lmatrix(&tref(), 2).unwrap(), vec![vec![-2, 1], vec![1, -2]]);
    }

    #[test]
    fn metacyclic_base_knot_su() {
        // M = [[4, 0], [1, 1]], V = (1; 1) over D₆.
        let d = data(&d2n(3), vec![vec![4, 0], vec![1, 1]], &[&[1], &[1]]);
        assert!(validate(&d).unwrap().valid);
        assert_eq!(su(&d).unwrap().coords(), &[2]);
    }

    #[test]
    fn a4_genus_one() {
        let g = a4();
        let t = data(&g, tref(), &[&[0, 1], &[1, 1]]);
        let f = data(&g, fig(), &[&[0, 1], &[1, 1]]);
        assert_eq!(cu(&t).unwrap().coords(), &[1, 1]);
        assert_eq!(cu(&f).unwrap().coords(), &[0, 0]);
        assert_eq!(su(&t).unwrap().coords(), &[0, 0]);
        assert_eq!(su(&f).unwrap().coords(), &[1, 0]);
        let s = vector_class(&data(&g, tref(), &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.pair_coords(), vec![(0, 1, 1)]);
    }

    #[test]
    fn class_with_zero_pairs() {
        let g = a4();
        let m = standard_seifert(2);
        let d =
            SurfaceData::from_coords(g.clone(), m.clone(), &[vec![1, 0], vec![0, 0], vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(wedge_class(&g, &m, d.vector()).unwrap(), g.wedge2_zero());
    }

    #[test]
    fn twist_family_cu_distinct() {
        let g = d2n(5);
        let mut seen = Vec::new();
        for j in 0..5 {
            let m = twist(4 + 5 * j);
            let vs = enumerate_colourings(&g, &m, DEFAULT_BUDGET).unwrap();
            let d = SurfaceData::new(g.clone(), m, vs[0].clone()).unwrap();
            seen.push(cu(&d).unwrap());
        }
        let mut uniq = seen.clone();
        uniq.sort_by(|a, b| a.coords().cmp(b.coords()));
        uniq.dedup();
        assert_eq!(uniq.len(), 5);
    }

    #[test]
    fn y_obstruction_examples() {
        let g = FiniteAbelian::new(vec![2, 2, 2]).unwrap();
        let b = |i| g.basis(i);
        let y = y_obstruction(&g, &[([b(0), b(1), b(2)], 1)]).unwrap();
        assert_eq!(y.coords(), &[1]);
        assert!(y_obstruction(&g, &[([g.zero(), b(1), b(2)], 1)]).unwrap().is_zero());
        assert!(y_obstruction(&g, &[([b(0), b(1), b(2)], 2)]).unwrap().is_zero());
        let r2 = FiniteAbelian::new(vec![5, 5]).unwrap();
        assert!(y_obstruction(&r2, &[([r2.basis(0), r2.basis(1), r2.basis(0)], 3)]).unwrap().is_zero());
        let other = FiniteAbelian::new(vec![3]).unwrap();
        assert_eq!(y_obstruction(&g, &[([other.basis(0), b(1), b(2)], 1)]), Err(Error::GroupMismatch));
    }

    fn fixtures() -> Vec<SurfaceData> {
        let c2 = spec(2, &[3, 5], &[&[2, 0], &[0, 4]]);
        let mut out = Vec::new();
        for g in [d2n(3), d2n(5), a4(), c2, spec(4, &[5], &[&[2]]), spec(5, &[11], &[&[3]])] {
            for m in [tref(), fig(), twist(1), twist(4), twist(3), twist(2), twist(9)] {
                for v in enumerate_colourings(&g, &m, DEFAULT_BUDGET).unwrap() {
                    out.push(SurfaceData::new(g.clone(), m.clone(), v).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn fixtures_cover_every_group() {
        let f = fixtures();
        for orders in [vec![3], vec![5], vec![2, 2], vec![3, 5], vec![11]] {
            assert!(f.iter().any(|d| d.spec().orders() == orders.as_slice()), "{orders:?}");
        }
        assert!(f.iter().any(|d| d.spec().m() == 4));
    }

    #[test]
    fn lift_perturbation_exhaustive() {
        for d in fixtures() {
            let spec = d.spec();
            let nt = lift_action(spec).unwrap();
            let base = cu(&d).unwrap();
            let n = spec.orders();
            for shift in -1i64..=1 {
                let x: Vec<Vec<i64>> = minimal_lift(d.vector())
                    .into_iter()
                    .map(|e| e.iter().zip(n).map(|(&a, &k)| a + shift * k).collect())
                    .collect();
                let nt2: Mat =
                    nt.iter().enumerate().map(|(i, r)| r.iter().map(|&e| e + shift * n[i] * n[i]).collect()).collect();
                assert_eq!(cu_with_lift(&d, &nt2, &x).unwrap(), base);
                assert_eq!(cu_with_lift(&d, &nt, &x).unwrap(), base);
            }
        }
    }

    #[test]
    fn connect_sum_additive() {
        let f = fixtures();
        for a in f.iter().step_by(3) {
            for b in f.iter().filter(|b| b.spec() == a.spec()).step_by(2) {
                let s = connect_sum(a, b).unwrap();
                let (ia, ib, is) = (invariants(a).unwrap(), invariants(b).unwrap(), invariants(&s).unwrap());
                let g = a.spec();
                assert_eq!(is.su, g.add(&ia.su, &ib.su));
                assert_eq!(is.cu, g.add(&ia.cu, &ib.cu));
                assert_eq!(is.s, ia.s.add(&ib.s).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn cu_and_s_invariant_under_moves(
            idx in any::<prop::sample::Index>(),
            ops in proptest::collection::vec((0usize..8, 0usize..8, -2i64..3, proptest::collection::vec(-3i64..4, 8), 0u8..3), 1..4),
        ) {
            let f = fixtures();
            let d = &f[idx.index(f.len())];
            let base = invariants(d).unwrap();
            let mut cur = d.clone();
            for (i, j, k, c, kind) in ops {
                let n = cur.matrix().len();
                cur = match kind {
                    0 => {
                        let (i, j) = (i % n, j % n);
                        let u = if i == j { matrix::identity(n) } else { matrix::elementary(n, i, j, k) };
                        lambda1(&cur, &u).unwrap()
                    }
                    1 => lambda2(&cur, &c[..n.min(c.len())].iter().copied().chain(core::iter::repeat(0)).take(n).collect::<Vec<_>>(), Variant::One).unwrap(),
                    _ => lambda2(&cur, &c.iter().copied().chain(core::iter::repeat(0)).take(n).collect::<Vec<_>>(), Variant::Two).unwrap(),
                };
                prop_assert!(validate(&cur).unwrap().valid);
            }
            let after = invariants(&cur).unwrap();
            prop_assert_eq!(&after.cu, &base.cu);
            prop_assert_eq!(&after.s, &base.s);
            if d.spec().m() == 2 {
                prop_assert_eq!(&after.su, &base.su);
            }
        }
    }
}
