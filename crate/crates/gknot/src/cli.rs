//! The `gknot` command line.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use gknot_core::classify::{a4_representatives, metacyclic_table, rank2_diag_table, rank2_nondiag_table, FamilyTable};
use gknot_core::diagram::{catalog, catalog_diagram, enumerate_diagram_colourings, Diagram};
use gknot_core::invariants::{invariants, y_obstruction};
use gknot_core::matrix::Mat;
use gknot_core::surface::{
    enumerate_colourings, lambda1, lambda2, lambda2_inverse, shorten_vector, validate, Move, Variant, DEFAULT_BUDGET,
};
use gknot_core::{Error, GroupElement, GroupSpec, SurfaceData};

use crate::json::{
    coords_of, ColouringJson, DataJson, GroupJson, InvariantsJson, PdJson, TableJson, TripleJson, Wedge3Json,
};

#[derive(Debug, Parser)]
#[command(name = "gknot", version, about = "Surface data and untying invariants of metabelian-coloured knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that surface data describes a colouring.
    Validate {
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        data: PathBuf,
    },
    /// Compute su, cu and s, and optionally the Y-obstruction of weighted triples.
    Invariant {
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        data: PathBuf,
        /// JSON file with `[{"triple": [a, b, c], "multiplicity": k}]`.
        #[arg(long)]
        y: Option<PathBuf>,
    },
    /// List every colouring vector of a Seifert matrix.
    Enumerate {
        #[arg(long)]
        group: PathBuf,
        /// JSON file holding the Seifert matrix.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_search: u128,
    },
    /// Apply a move to surface data.
    Move {
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_enum)]
        kind: MoveKind,
        /// Unimodular matrix for lambda1, inline JSON.
        #[arg(long)]
        u: Option<String>,
        /// Integers for lambda2, inline JSON.
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value_t = 2)]
        variant: u8,
        /// Ordered basis for shorten, inline JSON list of coordinate tuples.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Emit a base-knot table.
    Classify {
        #[command(subcommand)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
    },
    /// Order of the third homology of the abelian group.
    H3 {
        #[arg(long)]
        group: PathBuf,
    },
    /// Enumerate surjective quandle colourings of a PD-coded diagram.
    ColourDiagram {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, required_unless_present = "knot", conflicts_with = "knot")]
        pd: Option<PathBuf>,
        /// Name of a built-in diagram instead of a PD file.
        #[arg(long)]
        knot: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_search: u128,
    },
    /// Print the built-in PD codes.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MoveKind {
    Lambda1,
    Lambda2,
    Lambda2Inverse,
    Shorten,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum FamilyArgs {
    Metacyclic {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        xi: i64,
    },
    Rank2diag {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
        #[arg(long, allow_negative_numbers = true)]
        xi1: i64,
        #[arg(long, allow_negative_numbers = true)]
        xi2: i64,
    },
    Rank2nondiag {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        n21: i64,
        #[arg(long, allow_negative_numbers = true)]
        n22: i64,
    },
    A4,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Unreadable or unparsable input: exit 1.
    Malformed(String),
    /// A well-formed request the mathematics rejects: exit 2.
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn error_json(kind: &str, message: &str) -> String {
    line(&json!({"error": {"kind": kind, "message": message}}))
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 1 } else { 0 };
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome {
                    code,
                    stdout: error_json("MalformedInput", e.kind().as_str().unwrap_or("bad arguments")),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Malformed(msg)) => {
            Outcome { code: 1, stdout: error_json("MalformedInput", &msg), stderr: format!("error: {msg}\n") }
        }
        Err(Failure::Domain(e)) => {
            let msg = e.to_string();
            Outcome { code: 2, stdout: error_json(e.kind(), &msg), stderr: String::new() }
        }
    }
}

/// Single-line JSON followed by a newline.
fn line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serialises");
    s.push('\n');
    s
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Res<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn inline_json<T: DeserializeOwned>(flag: &str, text: &str) -> Res<T> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("--{flag}: {e}")))
}

fn spec_of(g: &GroupJson) -> Res<GroupSpec> {
    match g.to_spec() {
        Some(r) => Ok(r?),
        None => Err(Failure::Malformed("group JSON needs \"m\" and \"action\" here".into())),
    }
}

/// Reads surface data, taking the group from `--group` or from the data file.
fn load_data(group: Option<&Path>, data: &Path) -> Res<SurfaceData> {
    let d: DataJson = read_json(data)?;
    let g = match group {
        Some(p) => {
            let g: GroupJson = read_json(p)?;
            if let Some(inner) = &d.group {
                if spec_of(inner)? != spec_of(&g)? {
                    return Err(Error::GroupMismatch.into());
                }
            }
            g
        }
        None => {
            d.group.clone().ok_or_else(|| Failure::Malformed("no group: pass --group or embed \"group\"".into()))?
        }
    };
    Ok(d.to_data(spec_of(&g)?)?)
}

fn elements(spec: &GroupSpec, coords: &[Vec<i64>]) -> Res<Vec<GroupElement>> {
    Ok(coords.iter().map(|c| spec.element(c)).collect::<gknot_core::Result<Vec<_>>>()?)
}

fn move_json(m: &Move) -> serde_json::Value {
    match m {
        Move::Lambda1(u) => json!({"kind": "lambda1", "u": u}),
        Move::Lambda2 { c, variant } => {
            json!({"kind": "lambda2", "c": c, "variant": if *variant == Variant::One { 1 } else { 2 }})
        }
        Move::Lambda2Inverse => json!({"kind": "lambda2-inverse"}),
    }
}

fn table_output(t: &FamilyTable, format: Format) -> String {
    let j = TableJson::from_table(t);
    match format {
        Format::Json => line(&j),
        Format::Tsv => j.to_tsv(),
    }
}

fn dispatch(cmd: &Command) -> Res<String> {
    match cmd {
        Command::Validate { group, data } => {
            let d = load_data(group.as_deref(), data)?;
            let r = validate(&d)?;
            Ok(line(&json!({
                "valid": r.valid,
                "generates": r.generates,
                "equation_holds": r.equation_holds,
                "genus_ok": r.genus_ok,
                "genus": d.genus(),
            })))
        }
        Command::Invariant { group, data, y } => {
            let d = load_data(group.as_deref(), data)?;
            let triples: Option<Vec<TripleJson>> = y.as_deref().map(read_json).transpose()?;
            let mut out = InvariantsJson::from_invariants(&invariants(&d)?);
            if let Some(ts) = triples {
                let spec = d.spec();
                let parsed = ts
                    .iter()
                    .map(|t| {
                        let e = elements(spec, &t.triple)?;
                        Ok(([e[0].clone(), e[1].clone(), e[2].clone()], t.multiplicity))
                    })
                    .collect::<Res<Vec<_>>>()?;
                out.y = Some(Wedge3Json::from_wedge(&y_obstruction(spec, &parsed)?, spec.rank()));
            }
            Ok(line(&out))
        }
        Command::Enumerate { group, matrix, max_search } => {
            let spec = spec_of(&read_json(group)?)?;
            let m: Mat = read_json(matrix)?;
            let found = enumerate_colourings(&spec, &m, *max_search)?;
            let vectors: Vec<Vec<Vec<i64>>> = found.iter().map(|v| coords_of(v)).collect();
            Ok(line(&json!({"count": vectors.len(), "vectors": vectors})))
        }
        Command::Move { group, data, kind, u, c, variant, basis } => {
            let d = load_data(group.as_deref(), data)?;
            let need = |flag: &str, v: &Option<String>| {
                v.clone().ok_or_else(|| Failure::Malformed(format!("--kind needs --{flag}")))
            };
            match kind {
                MoveKind::Lambda1 => {
                    let u: Mat = inline_json("u", &need("u", u)?)?;
                    Ok(line(&DataJson::from_data(&lambda1(&d, &u)?)))
                }
                MoveKind::Lambda2 => {
                    let c: Vec<i64> = inline_json("c", &need("c", c)?)?;
                    let v = Variant::try_from(*variant)?;
                    Ok(line(&DataJson::from_data(&lambda2(&d, &c, v)?)))
                }
                MoveKind::Lambda2Inverse => Ok(line(&DataJson::from_data(&lambda2_inverse(&d)?))),
                MoveKind::Shorten => {
                    let b: Vec<Vec<i64>> = inline_json("basis", &need("basis", basis)?)?;
                    let b = elements(d.spec(), &b)?;
                    let s = shorten_vector(&d, &b)?;
                    let moves: Vec<serde_json::Value> = s.moves.iter().map(move_json).collect();
                    Ok(line(&json!({"data": DataJson::from_data(&s.data), "moves": moves})))
                }
            }
        }
        Command::Classify { family, format } => {
            let t = match family {
                FamilyArgs::Metacyclic { m, n, xi } => metacyclic_table(*m, *n, *xi)?,
                FamilyArgs::Rank2diag { m, n1, n2, xi1, xi2 } => rank2_diag_table(*m, *n1, *n2, *xi1, *xi2)?,
                FamilyArgs::Rank2nondiag { m, n, n21, n22 } => rank2_nondiag_table(*m, *n, *n21, *n22)?,
                FamilyArgs::A4 => a4_representatives()?,
            };
            Ok(table_output(&t, *format))
        }
        Command::H3 { group } => {
            let g: GroupJson = read_json(group)?;
            if g.m.is_some() || g.action.is_some() {
                spec_of(&g)?;
            }
            Ok(line(&json!({"h3_order": g.to_abelian()?.h3_order()?})))
        }
        Command::ColourDiagram { group, pd, knot, max_search } => {
            let spec = spec_of(&read_json(group)?)?;
            let diagram: Diagram = match (pd, knot) {
                (Some(p), _) => read_json::<PdJson>(p)?.to_diagram()?,
                (None, Some(name)) => {
                    catalog_diagram(name).ok_or_else(|| Failure::Malformed(format!("no built-in diagram {name:?}")))?
                }
                (None, None) => unreachable!("clap requires one of --pd, --knot"),
            };
            let found = enumerate_diagram_colourings(&diagram, &spec, *max_search)?;
            let colourings: Vec<ColouringJson> = found.iter().map(ColouringJson::from_colouring).collect();
            Ok(line(&json!({"count": colourings.len(), "arcs": diagram.arcs(), "colourings": colourings})))
        }
        Command::Catalog { name } => {
            let entries: Vec<serde_json::Value> = catalog()
                .into_iter()
                .filter(|(n, _)| name.as_deref().is_none_or(|want| want == *n))
                .map(|(n, d)| json!({"name": n, "writhe": d.writhe(), "pd": PdJson::from_diagram(&d)}))
                .collect();
            if entries.is_empty() {
                return Err(Failure::Malformed(format!("no built-in diagram {:?}", name.as_deref().unwrap_or(""))));
            }
            Ok(line(&entries))
        }
    }
}
