//! JSON interchange formats.

use gknot_core::abelian::{pairs, triples, FiniteAbelian};
use gknot_core::classify::FamilyTable;
use gknot_core::diagram::{Crossing, Diagram, QuandleColouring};
use gknot_core::invariants::Invariants;
use gknot_core::matrix::Mat;
use gknot_core::{GroupElement, GroupSpec, SurfaceData, Wedge2, Wedge3};
use serde::{Deserialize, Serialize};

/// `{"m": int, "orders": [int], "action": [[int]]}`; the action is in column
/// convention, so column `j` holds `φ(sⱼ)`. `m` and `action` may be omitted
/// where only the abelian group matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub orders: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Mat>,
}

impl GroupJson {
    pub fn from_spec(spec: &GroupSpec) -> GroupJson {
        GroupJson { m: Some(spec.m()), orders: spec.orders().to_vec(), action: Some(spec.action().clone()) }
    }

    /// `None` when `m` or `action` is missing.
    pub fn to_spec(&self) -> Option<gknot_core::Result<GroupSpec>> {
        match (&self.m, &self.action) {
            (Some(m), Some(a)) => Some(GroupSpec::new(*m, self.orders.clone(), a.clone())),
            _ => None,
        }
    }

    pub fn to_abelian(&self) -> gknot_core::Result<FiniteAbelian> {
        FiniteAbelian::new(self.orders.clone())
    }
}

/// `{"group": <group>, "seifert": [[int]], "vector": [[int]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupJson>,
    pub seifert: Mat,
    pub vector: Vec<Vec<i64>>,
}

impl DataJson {
    pub fn from_data(data: &SurfaceData) -> DataJson {
        DataJson {
            group: Some(GroupJson::from_spec(data.spec())),
            seifert: data.matrix().clone(),
            vector: coords_of(data.vector()),
        }
    }

    pub fn to_data(&self, spec: GroupSpec) -> gknot_core::Result<SurfaceData> {
        SurfaceData::from_coords(spec, self.seifert.clone(), &self.vector)
    }
}

pub fn coords_of(v: &[GroupElement]) -> Vec<Vec<i64>> {
    v.iter().map(|a| a.coords().to_vec()).collect()
}

/// `{"pairs": [[i, j, c], …]}` over every pair `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeJson {
    pub pairs: Vec<(usize, usize, i64)>,
}

impl WedgeJson {
    pub fn from_wedge(w: &Wedge2) -> WedgeJson {
        WedgeJson { pairs: w.pair_coords() }
    }

    pub fn to_wedge(&self, group: &FiniteAbelian) -> gknot_core::Result<Wedge2> {
        let expected = pairs(group.rank());
        let mut coords = vec![0; expected.len()];
        for &(i, j, c) in &self.pairs {
            let idx = expected
                .iter()
                .position(|&p| p == (i, j))
                .ok_or_else(|| gknot_core::Error::BadShape(format!("no pair ({i}, {j}) in rank {}", group.rank())))?;
            coords[idx] = c;
        }
        group.wedge2_from(&coords)
    }
}

/// `{"triples": [[i, j, k, c], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wedge3Json {
    pub triples: Vec<(usize, usize, usize, i64)>,
}

impl Wedge3Json {
    pub fn from_wedge(w: &Wedge3, rank: usize) -> Wedge3Json {
        Wedge3Json { triples: triples(rank).into_iter().zip(w.coords()).map(|((i, j, k), &c)| (i, j, k, c)).collect() }
    }
}

/// One weighted triple for the Y-obstruction: `{"triple": [a, b, c], "multiplicity": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    pub triple: [Vec<i64>; 3],
    #[serde(default = "one")]
    pub multiplicity: i64,
}

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsJson {
    pub su: Vec<i64>,
    pub cu: Vec<i64>,
    pub s: WedgeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Wedge3Json>,
}

impl InvariantsJson {
    pub fn from_invariants(inv: &Invariants) -> InvariantsJson {
        InvariantsJson {
            su: inv.su.coords().to_vec(),
            cu: inv.cu.coords().to_vec(),
            s: WedgeJson::from_wedge(&inv.s),
            y: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingJson {
    pub sign: i8,
    pub arcs: [i64; 4],
}

/// `{"crossings": [{"sign": ±1, "arcs": [a, b, c, d]}], "base_arc": id}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdJson {
    pub crossings: Vec<CrossingJson>,
    pub base_arc: i64,
}

impl PdJson {
    pub fn from_diagram(d: &Diagram) -> PdJson {
        PdJson {
            crossings: d.crossings().iter().map(|c| CrossingJson { sign: c.sign, arcs: c.labels }).collect(),
            base_arc: d.base_arc(),
        }
    }

    pub fn to_diagram(&self) -> gknot_core::Result<Diagram> {
        Diagram::new(self.crossings.iter().map(|c| Crossing { sign: c.sign, labels: c.arcs }).collect(), self.base_arc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringJson {
    /// `[arc, label]` pairs in ascending arc order.
    pub labels: Vec<(i64, Vec<i64>)>,
}

impl ColouringJson {
    pub fn from_colouring(c: &QuandleColouring) -> ColouringJson {
        ColouringJson { labels: c.labels.iter().map(|(a, e)| (*a, e.coords().to_vec())).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryJson {
    pub label: String,
    pub k: Option<i64>,
    pub l: Option<i64>,
    pub i: Option<i64>,
    pub seifert: Mat,
    pub vector: Vec<Vec<i64>>,
    pub su: Vec<i64>,
    pub cu: Vec<i64>,
    pub s: WedgeJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountJson {
    pub name: String,
    pub formula: u128,
    pub observed: u128,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableJson {
    pub family: &'static str,
    pub group: GroupJson,
    pub upper_bound: u128,
    pub lower_bounds: Vec<BoundJson>,
    pub counts: Vec<CountJson>,
    pub distinct_s_su: bool,
    pub entries: Vec<EntryJson>,
}

impl TableJson {
    pub fn from_table(t: &FamilyTable) -> TableJson {
        TableJson {
            family: t.family.name(),
            group: GroupJson::from_spec(&t.spec),
            upper_bound: t.upper_bound,
            lower_bounds: t.lower_bounds.iter().map(|b| BoundJson { name: b.name.clone(), value: b.value }).collect(),
            counts: t
                .counts
                .iter()
                .map(|c| CountJson {
                    name: c.name.clone(),
                    formula: c.formula,
                    observed: c.observed,
                    matches: c.matches(),
                })
                .collect(),
            distinct_s_su: t.distinct_s_su(),
            entries: t
                .entries
                .iter()
                .map(|e| EntryJson {
                    label: e.label.clone(),
                    k: e.k,
                    l: e.l,
                    i: e.i,
                    seifert: e.data.matrix().clone(),
                    vector: coords_of(e.data.vector()),
                    su: e.invariants.su.coords().to_vec(),
                    cu: e.invariants.cu.coords().to_vec(),
                    s: WedgeJson::from_wedge(&e.invariants.s),
                })
                .collect(),
        }
    }

    /// Tab-separated rows, one per entry, cells in compact JSON.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("label\tk\tl\ti\tsu\tcu\ts\tseifert\tvector\n");
        for e in &self.entries {
            let opt = |x: Option<i64>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                e.label,
                opt(e.k),
                opt(e.l),
                opt(e.i),
                cell(&e.su),
                cell(&e.cu),
                cell(&e.s.pairs),
                cell(&e.seifert),
                cell(&e.vector),
            ));
        }
        out
    }
}

fn cell<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serialises")
}
