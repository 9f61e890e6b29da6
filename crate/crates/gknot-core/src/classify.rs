//! Base-knot tables with their invariants and class-count bounds.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{GroupElement, GroupSpec, Wedge2};
use crate::arith::{additive_order, crt, gcd, inv_mod, modn, mul_mod, pow_mod};
use crate::error::{Error, Result};
use crate::invariants::{cu, invariants, Invariants};
use crate::matrix::{self, Mat};
use crate::surface::{connect_sum, validate, SurfaceData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Metacyclic,
    Rank2Diag,
    Rank2NonDiag,
    A4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Metacyclic => "metacyclic",
            Family::Rank2Diag => "rank2diag",
            Family::Rank2NonDiag => "rank2nondiag",
            Family::A4 => "a4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    /// Sub-family or knot name, e.g. `"genus2"` or `"3_1^l"`.
    pub label: String,
    pub k: Option<i64>,
    pub l: Option<i64>,
    pub i: Option<i64>,
    pub data: SurfaceData,
    pub invariants: Invariants,
}

/// A named lower bound on the number of ρ-classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub name: String,
    pub value: i64,
}

/// A closed-form count compared against the emitted entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub name: String,
    pub formula: u128,
    pub observed: u128,
}

impl CountCheck {
    pub fn matches(&self) -> bool {
        self.formula == self.observed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    pub family: Family,
    pub spec: GroupSpec,
    pub entries: Vec<TableEntry>,
    /// `|H₃(A)|`, the bound on the number of ρ̄-classes.
    pub upper_bound: u128,
    pub lower_bounds: Vec<Bound>,
    pub counts: Vec<CountCheck>,
}

impl FamilyTable {
    /// Whether the `(s, su)` pairs of the entries are pairwise distinct.
    pub fn distinct_s_su(&self) -> bool {
        distinct(self.entries.iter().map(|e| (e.invariants.s.clone(), e.invariants.su.clone())))
            == self.entries.len() as u128
    }
}

fn distinct<T: Ord>(items: impl Iterator<Item = T>) -> u128 {
    items.collect::<BTreeSet<_>>().len() as u128
}

fn entry(label: &str, k: Option<i64>, l: Option<i64>, i: Option<i64>, data: SurfaceData) -> Result<TableEntry> {
    if !validate(&data)?.valid {
        return Err(Error::InternalInconsistency);
    }
    let invariants = invariants(&data)?;
    Ok(TableEntry { label: label.to_string(), k, l, i, data, invariants })
}

fn unit(x: i64, n: i64, what: &str) -> Result<i64> {
    inv_mod(x, n).ok_or_else(|| Error::BadParameters(format!("{what} = {} is not a unit mod {n}", modn(x, n))))
}

fn build_spec(m: u32, orders: Vec<i64>, action: Mat) -> Result<GroupSpec> {
    GroupSpec::new(m, orders, action).map_err(|e| match e {
        Error::BadParameters(_) | Error::Overflow => e,
        other => Error::BadParameters(format!("parameters do not define a group: {other}")),
    })
}

fn elem(spec: &GroupSpec, coords: &[i64]) -> Result<GroupElement> {
    spec.element(coords)
}

fn data(spec: &GroupSpec, m: Mat, v: &[&[i64]]) -> Result<SurfaceData> {
    let v = v.iter().map(|c| elem(spec, c)).collect::<Result<Vec<_>>>()?;
    SurfaceData::new(spec.clone(), m, v)
}

/// `additive_order(2(1 − ξ⁻³), n)`.
pub fn metacyclic_bound(n: i64, xi: i64) -> Result<i64> {
    let inv = unit(xi, n, "ξ")?;
    Ok(additive_order(2 * (1 - pow_mod(inv, 3, n)), n))
}

/// The `n` base knots `M_k = [[a + kn, 0], [1, 1]]`, `V = (s; ξ/(1 − ξ)·s)`, for `C_m ⋉ Z/n`.
pub fn metacyclic_table(m: u32, n: i64, xi: i64) -> Result<FamilyTable> {
    if n < 2 {
        return Err(Error::BadParameters(format!("n must be at least 2, got {n}")));
    }
    let one_minus = unit(1 - xi, n, "1 − ξ")?;
    unit(xi, n, "ξ")?;
    if pow_mod(xi, u64::from(m), n) != 1 {
        return Err(Error::BadParameters(format!("ξ^m ≢ 1 mod {n}")));
    }
    let spec = build_spec(m, vec![n], vec![vec![xi]])?;
    let a = modn(-mul_mod(xi, mul_mod(one_minus, one_minus, n), n), n);
    let v2 = mul_mod(xi, one_minus, n);
    let entries = (1..=n)
        .map(|k| {
            let mk = vec![vec![a + k * n, 0], vec![1, 1]];
            entry("base", Some(k), None, None, data(&spec, mk, &[&[1], &[v2]])?)
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = metacyclic_bound(n, xi)?;
    let counts = vec![
        CountCheck {
            name: "distinct_cu".into(),
            formula: bound as u128,
            observed: distinct(entries.iter().map(|e| e.invariants.cu.clone())),
        },
        CountCheck { name: "entries".into(), formula: spec.h3_order()?, observed: entries.len() as u128 },
    ];
    Ok(FamilyTable {
        family: Family::Metacyclic,
        upper_bound: spec.h3_order()?,
        spec,
        entries,
        lower_bounds: vec![Bound { name: "cu".into(), value: bound }],
        counts,
    })
}

/// Rank-two diagonal action `diag(ξ₁, ξ₂)` on `Z/n₁ × Z/n₂`.
pub fn rank2_diag_table(m: u32, n1: i64, n2: i64, xi1: i64, xi2: i64) -> Result<FamilyTable> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::BadParameters(format!("orders must be at least 2, got {n1}, {n2}")));
    }
    for (n, xi, name) in [(n1, xi1, "ξ₁"), (n2, xi2, "ξ₂")] {
        unit(xi, n, name)?;
        unit(1 - xi, n, &format!("1 − {name}"))?;
        if pow_mod(xi, u64::from(m), n) != 1 {
            return Err(Error::BadParameters(format!("{name}^m ≢ 1 mod {n}")));
        }
    }
    let spec = build_spec(m, vec![n1, n2], vec![vec![xi1, 0], vec![0, xi2]])?;
    let x1 = mul_mod(xi1, unit(1 - xi1, n1, "1 − ξ₁")?, n1);
    let x2 = mul_mod(xi2, unit(1 - xi2, n2, "1 − ξ₂")?, n2);
    let d = gcd(n1, n2);
    let x = crt(x1, n1, unit(xi2 - 1, n2, "ξ₂ − 1")?, n2);
    let mut entries = Vec::new();
    if let Some(x) = x {
        for k in 1..=n1 {
            for l in 1..=n2 {
                for i in 1..d {
                    let mk = vec![vec![k * n1, x], vec![x + 1, l * n2]];
                    entries.push(entry("genus1", Some(k), Some(l), Some(i), data(&spec, mk, &[&[1, 0], &[0, i]])?)?);
                }
            }
        }
    }
    for k in 1..=n1 {
        for l in 1..=n2 {
            let mk = vec![vec![k * n1, x1, 0, 0], vec![x1 + 1, 0, 0, 0], vec![0, 0, l * n2, x2], vec![0, 0, x2 + 1, 0]];
            entries.push(entry(
                "genus2",
                Some(k),
                Some(l),
                None,
                data(&spec, mk, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]])?,
            )?);
        }
    }
    let h3 = spec.h3_order()?;
    let mut counts = vec![CountCheck {
        name: "genus2_distinct_su".into(),
        formula: (n1 * n2) as u128,
        observed: distinct(entries.iter().filter(|e| e.label == "genus2").map(|e| e.invariants.su.clone())),
    }];
    if x.is_some() {
        counts.push(CountCheck { name: "entries".into(), formula: h3, observed: entries.len() as u128 });
    }
    Ok(FamilyTable {
        family: Family::Rank2Diag,
        spec,
        entries,
        upper_bound: h3,
        lower_bounds: vec![
            Bound { name: "cu_k".into(), value: metacyclic_bound(n1, xi1)? },
            Bound { name: "cu_l".into(), value: metacyclic_bound(n2, xi2)? },
        ],
        counts,
    })
}

/// `additive_order(6(1 + N₂₂ + N₂₂² − N₂₁²), n)`, for `m = 3` only.
pub fn rank2_nondiag_bound(m: u32, n: i64, n21: i64, n22: i64) -> Result<i64> {
    if m != 3 {
        return Err(Error::UnsupportedM(m));
    }
    let c = modn(1 + n22 + mul_mod(n22, n22, n) - mul_mod(n21, n21, n), n);
    Ok(additive_order(6 * c, n))
}

/// Rank-two action with `φ(s₁) = s₂`, `φ(s₂) = N₂₁s₁ + N₂₂s₂` on `(Z/n)²`.
pub fn rank2_nondiag_table(m: u32, n: i64, n21: i64, n22: i64) -> Result<FamilyTable> {
    if n < 2 {
        return Err(Error::BadParameters(format!("n must be at least 2, got {n}")));
    }
    unit(n21, n, "N₂₁")?;
    let xi = unit(1 - n21 - n22, n, "1 − N₂₁ − N₂₂")?;
    let spec = build_spec(m, vec![n, n], vec![vec![0, n21], vec![1, n22]])?;
    let mut entries = Vec::new();
    if modn(n21 + 1, n) == 0 {
        let n22p = modn(n22, n);
        if modn(1 - 2 * xi + xi * n22p, n) != 0 {
            return Err(Error::InternalInconsistency);
        }
        for k in 1..=n {
            for l in 1..=n {
                for i in (1..n).filter(|&i| gcd(i, n) == 1) {
                    let ii = inv_mod(i, n).unwrap();
                    // Entry (2,1) is ξ̃(1 − N′₂₂) shifted by a multiple of n so that det(M − Mᵀ) = 1.
                    let mk = vec![vec![xi * (i + k * n), -xi], vec![1 - xi, xi * (ii + l * n)]];
                    entries.push(entry("J", Some(k), Some(l), Some(i), data(&spec, mk, &[&[1, 0], &[0, i]])?)?);
                }
            }
        }
    }
    let xn = xi * n21;
    for k in 1..=n {
        for l in 1..=n {
            let mk =
                vec![vec![k * n, xn, 0, xn], vec![xn + 1, 0, xi, 0], vec![0, xi, l * n, xi - 1], vec![xn, 0, xi, 0]];
            entries.push(entry("J*", Some(k), Some(l), None, data(&spec, mk, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]])?)?);
        }
    }
    let mut counts = Vec::new();
    if modn(n21 + 1, n) == 0 {
        let formula: i64 = n * (1..n).map(|j| n / gcd(n, j)).sum::<i64>();
        let observed = distinct(
            entries.iter().filter(|e| e.label == "J").map(|e| (e.invariants.s.clone(), e.invariants.su.clone())),
        );
        counts.push(CountCheck { name: "J_distinct_s_su".into(), formula: formula as u128, observed });
    }
    counts.push(CountCheck {
        name: "Jstar_distinct_su".into(),
        formula: (n * additive_order(n22 - n21 + 1, n)) as u128,
        observed: distinct(entries.iter().filter(|e| e.label == "J*").map(|e| e.invariants.su.clone())),
    });
    let lower_bounds = match rank2_nondiag_bound(m, n, n21, n22) {
        Ok(value) => vec![Bound { name: "cu".into(), value }],
        Err(Error::UnsupportedM(_)) => Vec::new(),
        Err(e) => return Err(e),
    };
    Ok(FamilyTable { family: Family::Rank2NonDiag, upper_bound: spec.h3_order()?, spec, entries, lower_bounds, counts })
}

/// The two ρ-classes of `A₄`-coloured knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum A4Class {
    Trefoil,
    FigureEight,
}

impl A4Class {
    pub fn name(self) -> &'static str {
        match self {
            A4Class::Trefoil => "trefoil_class",
            A4Class::FigureEight => "figure8_class",
        }
    }
}

/// `A₄ = C₃ ⋉ (Z/2)²` with `φ(s₁) = s₂`, `φ(s₂) = s₁ + s₂`.
pub fn a4_spec() -> GroupSpec {
    GroupSpec::new(3, vec![2, 2], vec![vec![0, 1], vec![-1, -1]]).expect("A₄ presentation")
}

pub fn left_trefoil() -> Mat {
    vec![vec![-1, 1], vec![0, -1]]
}

pub fn figure_eight() -> Mat {
    vec![vec![1, 1], vec![0, -1]]
}

/// Mirror image: `−Mᵀ`.
pub fn mirror(m: &Mat) -> Mat {
    matrix::neg(&matrix::transpose(m))
}

/// The genus-one representatives `3_1^l, 3_1^r, 4_1^l, 4_1^r`.
pub fn a4_knots() -> Vec<(&'static str, SurfaceData)> {
    let g = a4_spec();
    let d = |m: Mat, v: &[&[i64]]| data(&g, m, v).expect("A₄ representative");
    vec![
        ("3_1^l", d(left_trefoil(), &[&[0, 1], &[1, 1]])),
        ("3_1^r", d(mirror(&left_trefoil()), &[&[0, 1], &[1, 0]])),
        ("4_1^l", d(figure_eight(), &[&[0, 1], &[1, 1]])),
        ("4_1^r", d(mirror(&figure_eight()), &[&[0, 1], &[1, 0]])),
    ]
}

/// The four genus-one representatives followed by the four listed connect sums.
pub fn a4_representatives() -> Result<FamilyTable> {
    let spec = a4_spec();
    let knots = a4_knots();
    let mut entries = Vec::new();
    for (name, d) in &knots {
        entries.push(entry(name, None, None, None, d.clone())?);
    }
    for (a, b) in [(0, 0), (0, 2), (0, 3), (2, 3)] {
        let label = format!("{}#{}", knots[a].0, knots[b].0);
        entries.push(entry(&label, None, None, None, connect_sum(&knots[a].1, &knots[b].1)?)?);
    }
    let observed = distinct(entries.iter().map(|e| (e.invariants.s.clone(), e.invariants.su.clone())));
    Ok(FamilyTable {
        family: Family::A4,
        upper_bound: spec.h3_order()?,
        counts: vec![
            CountCheck { name: "distinct_s_su".into(), formula: spec.h3_order()?, observed },
            CountCheck {
                name: "distinct_cu".into(),
                formula: 2,
                observed: distinct(entries.iter().map(|e| e.invariants.cu.clone())),
            },
        ],
        lower_bounds: vec![Bound { name: "cu".into(), value: 2 }],
        spec,
        entries,
    })
}

/// Trefoil class exactly when cu agrees with that of `3_1^l`.
pub fn a4_class(data: &SurfaceData) -> Result<A4Class> {
    let spec = data.spec();
    let target = a4_spec();
    let reduced =
        |g: &GroupSpec| -> Mat { g.action().iter().map(|r| r.iter().map(|&e| modn(e, 2)).collect()).collect() };
    if spec.m() != target.m() || spec.orders() != target.orders() || reduced(spec) != reduced(&target) {
        return Err(Error::NotA4);
    }
    let trefoil_cu = cu(&a4_knots()[0].1)?;
    Ok(if cu(data)? == trefoil_cu { A4Class::Trefoil } else { A4Class::FigureEight })
}

/// Connect sum on classes: `C₂` with the figure-eight class as identity.
pub fn a4_sum_class(a: A4Class, b: A4Class) -> A4Class {
    if a == b {
        A4Class::FigureEight
    } else {
        A4Class::Trefoil
    }
}

/// The wedge class of `(s₁; s₂)` in `A₄`'s `A ∧ A`.
pub fn a4_generator_class() -> Wedge2 {
    let g = a4_spec();
    g.wedge2(&g.basis(0), &g.basis(1)).expect("same group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::enumerate_colourings;

    fn su_values(t: &FamilyTable) -> Vec<i64> {
        t.entries.iter().map(|e| e.invariants.su.coords()[0]).collect()
    }

    #[test]
    fn metacyclic_examples() {
        let t = metacyclic_table(2, 3, 2).unwrap();
        assert_eq!(t.entries.len(), 3);
        assert_eq!(t.entries[0].data.matrix(), &vec![vec![4, 0], vec![1, 1]]);
        assert_eq!(t.entries[0].data.vector()[1].coords(), &[1]);
        let mut su = su_values(&t);
        su.sort_unstable();
        assert_eq!(su, vec![0, 1, 2]);
        assert_eq!(t.lower_bounds[0].value, 3);
        assert!(t.counts.iter().all(CountCheck::matches));
        assert_eq!(metacyclic_table(3, 7, 2).unwrap().lower_bounds[0].value, 1);
        assert_eq!(metacyclic_bound(5, 4).unwrap(), 5);
    }

    #[test]
    fn metacyclic_su_steps() {
        for (m, n, xi) in [(2, 3, 2), (2, 5, 4), (2, 7, 6), (3, 7, 2), (2, 11, 10), (4, 5, 2), (3, 13, 3)] {
            let t = metacyclic_table(m, n, xi).unwrap();
            let su = su_values(&t);
            for w in su.windows(2) {
                assert_eq!(modn(w[1] - w[0], n), modn(xi - 1, n));
            }
            assert!(t.distinct_s_su());
            if m <= 3 {
                assert_eq!(t.counts[0].observed as i64, t.lower_bounds[0].value, "{m} {n} {xi}");
            }
        }
    }

    #[test]
    fn metacyclic_rejections() {
        assert!(matches!(metacyclic_table(2, 3, 1), Err(Error::BadParameters(_))));
        assert!(matches!(metacyclic_table(2, 5, 2), Err(Error::BadParameters(_))));
        assert!(matches!(metacyclic_table(2, 1, 0), Err(Error::BadParameters(_))));
        assert!(matches!(metacyclic_table(2, 6, 5), Err(Error::BadParameters(_))));
    }

    #[test]
    fn rank2_diag_examples() {
        let t = rank2_diag_table(2, 3, 5, 2, 4).unwrap();
        assert_eq!(t.entries.len(), 15);
        assert_eq!(t.upper_bound, 15);
        let e = &t.entries[0];
        assert_eq!(e.data.matrix(), &vec![vec![3, 1, 0, 0], vec![2, 0, 0, 0], vec![0, 0, 5, 2], vec![0, 0, 3, 0]]);
        for e in &t.entries {
            let (k, l) = (e.k.unwrap(), e.l.unwrap());
            assert_eq!(e.invariants.su.coords(), &[modn(k, 3), modn(3 * l, 5)]);
        }
        assert!(t.distinct_s_su() && t.counts.iter().all(CountCheck::matches));
        let t = rank2_diag_table(2, 3, 3, 2, 2).unwrap();
        assert_eq!(t.entries.len(), 27);
        assert!(t.distinct_s_su() && t.counts.iter().all(CountCheck::matches));
        let t = rank2_diag_table(6, 7, 7, 3, 3).unwrap();
        assert!(t.entries.iter().all(|e| e.label == "genus2"));
        let t = rank2_diag_table(2, 3, 9, 2, 8).unwrap();
        assert!(t.entries.iter().any(|e| e.label == "genus1"));
    }

    #[test]
    fn rank2_nondiag_examples() {
        assert_eq!(rank2_nondiag_bound(3, 2, 1, 1).unwrap(), 1);
        for n in [2, 5, 7, 11] {
            assert_eq!(rank2_nondiag_bound(3, n, -1, -1).unwrap(), 1);
        }
        assert_eq!(rank2_nondiag_bound(6, 5, -1, 1), Err(Error::UnsupportedM(6)));
        for n in [2, 7] {
            let t = rank2_nondiag_table(3, n, -1, -1).unwrap();
            let jstar: Vec<_> = t.entries.iter().filter(|e| e.label == "J*").collect();
            assert_eq!(jstar.len() as i64, n * n);
            for e in jstar {
                let (k, l) = (e.k.unwrap(), e.l.unwrap());
                assert_eq!(e.invariants.su.coords(), &[modn(-l - k, n), modn(k - 2 * l, n)]);
            }
            assert!(t.counts.iter().all(CountCheck::matches), "{:?}", t.counts);
            assert!(t.distinct_s_su());
        }
        let t = rank2_nondiag_table(6, 5, -1, 1).unwrap();
        assert!(t.lower_bounds.is_empty());
        assert!(t.counts.iter().all(CountCheck::matches), "{:?}", t.counts);
    }

    #[test]
    fn a4_table() {
        let t = a4_representatives().unwrap();
        assert_eq!(t.entries.len(), 8);
        assert_eq!(t.upper_bound, 8);
        assert!(t.distinct_s_su());
        assert!(t.counts.iter().all(CountCheck::matches));
        let g = a4_spec();
        let tref = SurfaceData::new(g.clone(), left_trefoil(), vec![g.basis(0), g.basis(1)]).unwrap();
        assert_eq!(crate::invariants::vector_class(&tref).unwrap(), a4_generator_class());
        assert_eq!(enumerate_colourings(&g, &left_trefoil(), 1_000).unwrap().len(), 3);
    }

    #[test]
    fn a4_class_law() {
        let knots = a4_knots();
        let names: Vec<A4Class> = knots.iter().map(|(_, d)| a4_class(d).unwrap()).collect();
        assert_eq!(names, vec![A4Class::Trefoil, A4Class::Trefoil, A4Class::FigureEight, A4Class::FigureEight]);
        for (_, a) in &knots {
            for (_, b) in &knots {
                let s = connect_sum(a, b).unwrap();
                assert_eq!(a4_class(&s).unwrap(), a4_sum_class(a4_class(a).unwrap(), a4_class(b).unwrap()));
            }
        }
        let lr = connect_sum(&knots[0].1, &knots[1].1).unwrap();
        assert_eq!(a4_class(&lr).unwrap(), A4Class::FigureEight);
        assert_eq!(a4_sum_class(A4Class::FigureEight, A4Class::FigureEight), A4Class::FigureEight);
        let d6 = GroupSpec::new(2, vec![3], vec![vec![2]]).unwrap();
        let other = SurfaceData::new(d6.clone(), left_trefoil(), vec![d6.basis(0), d6.scale(&d6.basis(0), 2)]).unwrap();
        assert_eq!(a4_class(&other), Err(Error::NotA4));
    }
}
