//! Knot diagrams as PD codes, the coset quandle of `G = C_m ⋉ A`, and
//! exhaustive quandle colourings.
//!
//! A crossing lists four strand labels `[a, b, c, d]` counterclockwise from the
//! incoming under-strand `a`; `c` is the outgoing under-strand and `b`, `d`
//! belong to the over-strand. Labels may name edges (standard PD codes, each
//! label used twice) or Wirtinger arcs directly (`b = d`). In both cases the
//! arcs are the classes of labels joined through over-strands.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{GroupElement, GroupSpec};
use crate::error::{Error, Result};

/// `a ∗ b = φ(a − b) + b`: the outgoing under-arc label when `t·a` passes under `t·b`.
pub fn quandle_op(spec: &GroupSpec, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    spec.check(a)?;
    spec.check(b)?;
    Ok(spec.add(&spec.act(&spec.sub(a, b)), b))
}

/// The inverse operation `a ∗⁻¹ b = φ⁻¹(a − b) + b`.
pub fn quandle_op_inv(spec: &GroupSpec, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    spec.check(a)?;
    spec.check(b)?;
    Ok(spec.add(&spec.act_inv(&spec.sub(a, b)), b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub sign: i8,
    pub labels: [i64; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    base_arc: i64,
    /// Label → arc index; arcs are numbered by their smallest label.
    arc_of: BTreeMap<i64, usize>,
    arc_names: Vec<i64>,
}

fn find(parent: &mut BTreeMap<i64, i64>, x: i64) -> i64 {
    let p = parent[&x];
    if p == x {
        return x;
    }
    let r = find(parent, p);
    parent.insert(x, r);
    r
}

impl Diagram {
    pub fn new(crossings: Vec<Crossing>, base_arc: i64) -> Result<Diagram> {
        let mut parent: BTreeMap<i64, i64> = BTreeMap::new();
        parent.insert(base_arc, base_arc);
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::BadDiagram(format!("crossing sign must be ±1, got {}", c.sign)));
            }
            for &l in &c.labels {
                parent.entry(l).or_insert(l);
            }
        }
        for c in &crossings {
            let (x, y) = (find(&mut parent, c.labels[1]), find(&mut parent, c.labels[3]));
            if x != y {
                parent.insert(x.max(y), x.min(y));
            }
        }
        let labels: Vec<i64> = parent.keys().copied().collect();
        let mut roots: BTreeMap<i64, usize> = BTreeMap::new();
        let mut arc_of = BTreeMap::new();
        let mut arc_names = Vec::new();
        for l in labels {
            let r = find(&mut parent, l);
            let idx = *roots.entry(r).or_insert_with(|| {
                arc_names.push(r);
                arc_names.len() - 1
            });
            arc_of.insert(l, idx);
        }
        let arcs = arc_names.len();
        if crossings.is_empty() {
            if arcs != 1 {
                return Err(Error::BadDiagram("a diagram without crossings has a single arc".into()));
            }
        } else {
            if arcs != crossings.len() {
                return Err(Error::BadDiagram(format!("{} crossings but {arcs} arcs", crossings.len())));
            }
            let mut ends = vec![0usize; arcs];
            for c in &crossings {
                ends[arc_of[&c.labels[0]]] += 1;
                ends[arc_of[&c.labels[2]]] += 1;
            }
            if let Some(i) = ends.iter().position(|&e| e != 2) {
                return Err(Error::BadDiagram(format!("arc {} has {} under-strand ends", arc_names[i], ends[i])));
            }
        }
        Ok(Diagram { crossings, base_arc, arc_of, arc_names })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn base_arc(&self) -> i64 {
        self.base_arc
    }

    /// Arc names (smallest label in each arc), ascending.
    pub fn arcs(&self) -> &[i64] {
        &self.arc_names
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    fn standard_edges(&self) -> Option<i64> {
        let n = 2 * self.crossings.len() as i64;
        let mut count = vec![0usize; n as usize];
        for c in &self.crossings {
            for &l in &c.labels {
                if l < 1 || l > n {
                    return None;
                }
                count[l as usize - 1] += 1;
            }
        }
        count.iter().all(|&k| k == 2).then_some(n)
    }

    /// Connect sum of two standard PD codes with edges `1..2n` in traversal order.
    ///
    /// The last edge of each diagram is cut and the ends are joined crosswise.
    pub fn connect_sum(&self, other: &Diagram) -> Result<Diagram> {
        let (Some(n1), Some(n2)) = (self.standard_edges(), other.standard_edges()) else {
            return Err(Error::BadDiagram("connect sum needs standard PD codes".into()));
        };
        if n1 == 0 || n2 == 0 {
            return Ok(if n1 == 0 { other.clone() } else { self.clone() });
        }
        // The head of the last edge is the crossing where it meets edge 1 on one strand.
        let head = |c: &Crossing, last: i64, first: i64| {
            let l = c.labels;
            (l[0] == last && l[2] == first) || (l[1] == last && l[3] == first) || (l[3] == last && l[1] == first)
        };
        let mut out = Vec::new();
        for c in &self.crossings {
            let mut c = *c;
            if head(&c, n1, 1) {
                for l in c.labels.iter_mut().filter(|l| **l == n1) {
                    *l = n1 + n2;
                }
            }
            out.push(c);
        }
        for c in &other.crossings {
            let is_head = head(c, n2, 1);
            let mut c = *c;
            for l in c.labels.iter_mut() {
                *l = if is_head && *l == n2 { n1 } else { *l + n1 };
            }
            out.push(c);
        }
        Diagram::new(out, 1)
    }

    /// The same diagram with every crossing switched.
    pub fn mirror(&self) -> Result<Diagram> {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [i, j, k, l] = c.labels;
                // The new under-strand runs in the direction of the old over-strand.
                let labels = if c.sign < 0 { [j, k, l, i] } else { [l, i, j, k] };
                Crossing { sign: -c.sign, labels }
            })
            .collect();
        Diagram::new(crossings, self.base_arc)
    }
}

/// Arc labels of a colouring, keyed by arc name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleColouring {
    pub labels: Vec<(i64, GroupElement)>,
}

fn surjective(spec: &GroupSpec, labels: &[GroupElement]) -> Result<bool> {
    let mut gens = Vec::new();
    for a in labels {
        let mut x = a.clone();
        for _ in 0..spec.m() {
            gens.push(x.clone());
            x = spec.act(&x);
        }
    }
    spec.generates(&gens)
}

/// All colourings with the base arc labelled `0`, keeping only surjective ones.
pub fn enumerate_diagram_colourings(
    diagram: &Diagram,
    spec: &GroupSpec,
    budget: u128,
) -> Result<Vec<QuandleColouring>> {
    let arcs = diagram.arc_names.len();
    let needed = (1..arcs).fold(1u128, |acc, _| acc.saturating_mul(spec.order()));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let base = diagram.arc_of[&diagram.base_arc];
    // Visit the base arc first, then the rest by name.
    let order: Vec<usize> = core::iter::once(base).chain((0..arcs).filter(|&i| i != base)).collect();
    let rank: Vec<usize> = {
        let mut r = vec![0; arcs];
        for (pos, &a) in order.iter().enumerate() {
            r[a] = pos;
        }
        r
    };
    // Each relation is checked once its last arc (in visiting order) is assigned.
    let mut checks: Vec<Vec<(usize, usize, usize, i8)>> = vec![Vec::new(); arcs];
    for c in &diagram.crossings {
        let (a, b, o) = (diagram.arc_of[&c.labels[0]], diagram.arc_of[&c.labels[2]], diagram.arc_of[&c.labels[1]]);
        let last = [a, b, o].into_iter().max_by_key(|&x| rank[x]).unwrap();
        checks[rank[last]].push((a, b, o, c.sign));
    }
    let elems: Vec<GroupElement> = spec.elements().collect();
    let mut labels = vec![spec.zero(); arcs];
    let mut out = Vec::new();
    let mut found: Vec<Vec<GroupElement>> = Vec::new();
    dfs(spec, &elems, &order, &checks, 0, &mut labels, &mut found)?;
    for f in found {
        if surjective(spec, &f)? {
            let mut v: Vec<(i64, GroupElement)> = diagram.arc_names.iter().copied().zip(f).collect();
            v.sort_by_key(|(name, _)| *name);
            out.push(QuandleColouring { labels: v });
        }
    }
    Ok(out)
}

fn dfs(
    spec: &GroupSpec,
    elems: &[GroupElement],
    order: &[usize],
    checks: &[Vec<(usize, usize, usize, i8)>],
    depth: usize,
    labels: &mut [GroupElement],
    out: &mut Vec<Vec<GroupElement>>,
) -> Result<()> {
    if depth == order.len() {
        out.push(labels.to_vec());
        return Ok(());
    }
    let candidates: &[GroupElement] = if depth == 0 { core::slice::from_ref(&elems[0]) } else { elems };
    for e in candidates {
        labels[order[depth]] = e.clone();
        let mut ok = true;
        for &(a, b, o, sign) in &checks[depth] {
            let z = if sign > 0 {
                quandle_op(spec, &labels[a], &labels[o])?
            } else {
                quandle_op_inv(spec, &labels[a], &labels[o])?
            };
            if z != labels[b] {
                ok = false;
                break;
            }
        }
        if ok {
            dfs(spec, elems, order, checks, depth + 1, labels, out)?;
        }
    }
    Ok(())
}

fn pd(codes: &[[i64; 4]]) -> Diagram {
    let n = 2 * codes.len() as i64;
    let crossings = codes
        .iter()
        .map(|&[i, j, k, l]| {
            // Positive exactly when the over-strand runs from `l` to `j`.
            let sign = if (j - l).rem_euclid(n) == 1 { 1 } else { -1 };
            Crossing { sign, labels: [i, j, k, l] }
        })
        .collect();
    Diagram::new(crossings, 1).expect("catalog diagram")
}

/// Built-in diagrams: the unknot, both trefoils, the figure-eight and their pairwise connect sums.
pub fn catalog() -> Vec<(&'static str, Diagram)> {
    let unknot = pd(&[[1, 2, 2, 1]]);
    let left = pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]);
    let right = left.mirror().expect("mirror");
    let eight = pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]);
    let sum = |a: &Diagram, b: &Diagram| a.connect_sum(b).expect("catalog sum");
    vec![
        ("unknot", unknot),
        ("3_1^l", left.clone()),
        ("3_1^r", right.clone()),
        ("4_1", eight.clone()),
        ("3_1^l#3_1^l", sum(&left, &left)),
        ("3_1^l#3_1^r", sum(&left, &right)),
        ("3_1^r#3_1^r", sum(&right, &right)),
        ("3_1^l#4_1", sum(&left, &eight)),
        ("3_1^r#4_1", sum(&right, &eight)),
        ("4_1#4_1", sum(&eight, &eight)),
    ]
}

pub fn catalog_diagram(name: &str) -> Option<Diagram> {
    catalog().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{a4_spec, figure_eight, left_trefoil, mirror};
    use crate::matrix::block_diag;
    use crate::surface::{enumerate_colourings, DEFAULT_BUDGET};

    fn d2n(n: i64) -> GroupSpec {
        GroupSpec::new(2, vec![n], vec![vec![n - 1]]).unwrap()
    }

    #[test]
    fn a4_conjugation_table() {
        let g = a4_spec();
        let (a, b, c, d) = (g.zero(), g.basis(0), g.basis(1), g.add(&g.basis(0), &g.basis(1)));
        let labels = [a.clone(), b.clone(), c.clone(), d.clone()];
        // Row x, column y holds x ∗ y.
        let table = [[&a, &d, &b, &c], [&c, &b, &d, &a], [&d, &a, &c, &b], [&b, &c, &a, &d]];
        for (x, row) in labels.iter().zip(table) {
            for (y, want) in labels.iter().zip(row) {
                assert_eq!(&quandle_op(&g, x, y).unwrap(), want);
            }
        }
    }

    #[test]
    fn fox_rule() {
        let g = d2n(7);
        for a in g.elements() {
            for b in g.elements() {
                let want = g.sub(&g.scale(&b, 2), &a);
                assert_eq!(quandle_op(&g, &a, &b).unwrap(), want);
            }
        }
        let other = a4_spec();
        assert_eq!(quandle_op(&g, &other.basis(0), &g.basis(0)), Err(Error::GroupMismatch));
    }

    #[test]
    fn quandle_axioms() {
        let specs = [
            d2n(3),
            a4_spec(),
            GroupSpec::new(3, vec![7], vec![vec![2]]).unwrap(),
            GroupSpec::new(2, vec![3, 5], vec![vec![2, 0], vec![0, 4]]).unwrap(),
            GroupSpec::new(3, vec![8, 8], vec![vec![0, -1], vec![1, -1]]).unwrap(),
        ];
        for g in specs {
            let e: Vec<GroupElement> = g.elements().collect();
            for a in &e {
                assert_eq!(&quandle_op(&g, a, a).unwrap(), a);
                for b in &e {
                    let x = quandle_op(&g, a, b).unwrap();
                    assert_eq!(&quandle_op_inv(&g, &x, b).unwrap(), a);
                }
            }
            for a in e.iter().step_by(3) {
                for b in &e {
                    for c in &e {
                        let lhs = quandle_op(&g, &quandle_op(&g, a, b).unwrap(), c).unwrap();
                        let rhs =
                            quandle_op(&g, &quandle_op(&g, a, c).unwrap(), &quandle_op(&g, b, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_shapes() {
        let cat = catalog();
        let writhe: Vec<i64> = cat.iter().map(|(_, d)| d.writhe()).collect();
        assert_eq!(&writhe[..4], &[1, -3, 3, 0]);
        assert_eq!(catalog_diagram("4_1#4_1").unwrap().arcs().len(), 8);
        assert!(catalog_diagram("5_1").is_none());
    }

    #[test]
    fn diagram_rejections() {
        let bad = |c: Vec<Crossing>| Diagram::new(c, 1);
        assert!(matches!(bad(vec![Crossing { sign: 2, labels: [1, 2, 2, 1] }]), Err(Error::BadDiagram(_))));
        assert!(matches!(bad(vec![Crossing { sign: 1, labels: [1, 4, 2, 5] }]), Err(Error::BadDiagram(_))));
        assert!(Diagram::new(vec![], 0).is_ok());
        let arcs = vec![
            Crossing { sign: -1, labels: [0, 2, 1, 2] },
            Crossing { sign: -1, labels: [1, 0, 2, 0] },
            Crossing { sign: -1, labels: [2, 1, 0, 1] },
        ];
        let d = Diagram::new(arcs, 0).unwrap();
        assert_eq!(d.arcs(), &[0, 1, 2]);
        assert_eq!(enumerate_diagram_colourings(&d, &d2n(3), DEFAULT_BUDGET).unwrap().len(), 2);
    }

    #[test]
    fn counts_match_surface_data() {
        let seifert: [(&str, Vec<Vec<i64>>); 4] = [
            ("3_1^l", left_trefoil()),
            ("3_1^r", mirror(&left_trefoil())),
            ("4_1", figure_eight()),
            ("3_1^l#4_1", block_diag(&left_trefoil(), &figure_eight())),
        ];
        for g in [d2n(3), d2n(5), a4_spec()] {
            for (name, m) in &seifert {
                let diagram = catalog_diagram(name).unwrap();
                let a = enumerate_diagram_colourings(&diagram, &g, DEFAULT_BUDGET).unwrap().len();
                let b = enumerate_colourings(&g, m, DEFAULT_BUDGET).unwrap().len();
                assert_eq!(a, b, "{name} over {:?}", g.orders());
            }
            assert!(enumerate_diagram_colourings(&catalog_diagram("unknot").unwrap(), &g, DEFAULT_BUDGET)
                .unwrap()
                .is_empty());
        }
        let d = catalog_diagram("3_1^l").unwrap();
        let c = enumerate_diagram_colourings(&d, &d2n(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|q| q.labels.iter().any(|(n, e)| *n == d.base_arc() && e.is_zero())));
        assert!(matches!(
            enumerate_diagram_colourings(&d, &d2n(3), 2),
            Err(Error::BudgetExceeded { needed: 9, budget: 2 })
        ));
    }
}
