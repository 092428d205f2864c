//! JSON workspace documents and certificate files.
//!
//! ```json
//! {
//!   "ring": "Z",
//!   "group": {"family": "cyclic", "params": {"order": 2}},
//!   "modules": {"M": {"gens": 1, "relations": [["2"]], "action": [[["1"]]]}},
//!   "maps": {"f": {"source": "M", "target": "trivial", "matrix": [["1"]]}}
//! }
//! ```
//!
//! Matrices are arrays of rows of decimal strings; `"a/b"` is accepted over
//! localised rings. A group is either `{family, params}` or `{table}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::builtins;
use crate::error::{Error, Result};
use crate::gmodule::{EquivariantMap, GModule};
use crate::group::{FiniteGroup, GroupSpec};
use crate::kmod::in_span;
use crate::matrix::ExactMatrix;
use crate::ring::CoefficientRing;
use crate::stable::HigmanCertificate;

pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Table {
        table: Vec<Vec<usize>>,
    },
    Family {
        family: String,
        #[serde(default, skip_serializing_if = "Map::is_empty")]
        params: Map<String, Value>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub gens: usize,
    #[serde(default)]
    pub relations: MatrixDoc,
    pub action: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub source: String,
    pub target: String,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceDocument {
    pub ring: String,
    pub group: GroupDoc,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapDoc>,
}

fn parse_error(loc: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{loc}: {e}"))
}

impl GroupDoc {
    pub fn to_spec(&self) -> Result<GroupSpec> {
        match self {
            GroupDoc::Table { table } => Ok(GroupSpec::Table { table: table.clone() }),
            GroupDoc::Family { family, params } => {
                let mut obj = Map::new();
                obj.insert("family".into(), Value::String(family.clone()));
                for (k, v) in params {
                    if family == "product" && k == "factors" {
                        let factors: Vec<GroupDoc> =
                            serde_json::from_value(v.clone()).map_err(|e| parse_error("group.params.factors", e))?;
                        let specs = factors.iter().map(|f| f.to_spec()).collect::<Result<Vec<_>>>()?;
                        obj.insert(k.clone(), serde_json::to_value(specs).expect("serialisable"));
                    } else {
                        obj.insert(k.clone(), v.clone());
                    }
                }
                serde_json::from_value(Value::Object(obj)).map_err(|e| parse_error("group", e))
            }
        }
    }

    pub fn from_spec(spec: &GroupSpec) -> Self {
        if let GroupSpec::Table { table } = spec {
            return GroupDoc::Table { table: table.clone() };
        }
        let Value::Object(mut obj) = serde_json::to_value(spec).expect("serialisable") else {
            unreachable!("group specs serialise to objects")
        };
        let family = match obj.remove("family") {
            Some(Value::String(s)) => s,
            _ => unreachable!("tagged enum"),
        };
        if let GroupSpec::Product { factors } = spec {
            let docs: Vec<GroupDoc> = factors.iter().map(GroupDoc::from_spec).collect();
            obj.insert("factors".into(), serde_json::to_value(docs).expect("serialisable"));
        }
        GroupDoc::Family { family, params: obj }
    }

    /// Accepts a short name such as `C2` or `D8` as well.
    pub fn short(name: &str) -> Result<Self> {
        Ok(GroupDoc::from_spec(&FiniteGroup::parse_short(name)?))
    }
}

pub fn matrix_doc(x: &ExactMatrix) -> MatrixDoc {
    (0..x.rows())
        .map(|i| x.row(i).iter().map(|e| e.to_string()).collect())
        .collect()
}

pub fn parse_matrix(ring: &CoefficientRing, rows: usize, cols: Option<usize>, doc: &MatrixDoc, loc: &str) -> Result<ExactMatrix> {
    if doc.is_empty() && (rows == 0 || cols.is_none_or(|c| c == 0)) {
        return Ok(ExactMatrix::zeros(ring, rows, cols.unwrap_or(0)));
    }
    if doc.len() != rows {
        return Err(parse_error(loc, format!("expected {rows} rows, found {}", doc.len())));
    }
    let width = cols.unwrap_or_else(|| doc.first().map_or(0, |r| r.len()));
    let mut entries = Vec::with_capacity(rows * width);
    for (i, row) in doc.iter().enumerate() {
        if row.len() != width {
            return Err(parse_error(loc, format!("row {i} has {} entries, expected {width}", row.len())));
        }
        for (j, s) in row.iter().enumerate() {
            entries.push(ring.parse_element(s).map_err(|e| parse_error(&format!("{loc}[{i}][{j}]"), e))?);
        }
    }
    ExactMatrix::from_entries(ring, rows, width, entries).map_err(|e| parse_error(loc, e))
}

pub fn module_doc(m: &GModule) -> ModuleDoc {
    ModuleDoc {
        gens: m.gens(),
        relations: if m.relations().cols() == 0 { Vec::new() } else { matrix_doc(m.relations()) },
        action: m.action().iter().map(matrix_doc).collect(),
    }
}

pub fn parse_module(ring: &CoefficientRing, group: &Arc<FiniteGroup>, doc: &ModuleDoc, loc: &str) -> Result<GModule> {
    let relations = parse_matrix(ring, doc.gens, None, &doc.relations, &format!("{loc}.relations"))?;
    let action = doc
        .action
        .iter()
        .enumerate()
        .map(|(i, a)| parse_matrix(ring, doc.gens, Some(doc.gens), a, &format!("{loc}.action[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    GModule::new(ring, group, relations, action).map_err(|e| parse_error(loc, e))
}

/// A parsed document: ring, group, named modules and maps.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub ring: CoefficientRing,
    pub group: Arc<FiniteGroup>,
    pub group_doc: GroupDoc,
    pub modules: BTreeMap<String, GModule>,
    pub maps: BTreeMap<String, EquivariantMap>,
    /// Source and target expressions of each named map.
    pub map_ends: BTreeMap<String, (String, String)>,
}

impl Workspace {
    pub fn new(ring: CoefficientRing, group_doc: GroupDoc) -> Result<Self> {
        let group = Arc::new(FiniteGroup::from_spec(&group_doc.to_spec()?)?);
        Ok(Workspace {
            ring,
            group,
            group_doc,
            modules: BTreeMap::new(),
            maps: BTreeMap::new(),
            map_ends: BTreeMap::new(),
        })
    }

    /// Parses a document. With `validate`, every module and map is checked
    /// against the module and equivariance axioms.
    pub fn load(doc: &WorkspaceDocument, validate: bool) -> Result<Self> {
        let ring: CoefficientRing = doc.ring.parse().map_err(|e| parse_error("ring", e))?;
        let mut ws = Workspace::new(ring, doc.group.clone())?;
        for (name, m) in &doc.modules {
            let loc = format!("modules.{name}");
            let module = parse_module(&ws.ring, &ws.group, m, &loc)?.with_label(name.clone());
            if validate {
                if let Err(f) = module.validate() {
                    return Err(parse_error(&loc, f));
                }
            }
            ws.modules.insert(name.clone(), module);
        }
        for (name, f) in &doc.maps {
            let loc = format!("maps.{name}");
            let source = ws.module(&f.source).map_err(|e| parse_error(&format!("{loc}.source"), e))?;
            let target = ws.module(&f.target).map_err(|e| parse_error(&format!("{loc}.target"), e))?;
            let matrix = parse_matrix(&ws.ring, target.gens(), Some(source.gens()), &f.matrix, &format!("{loc}.matrix"))?;
            let map = if validate {
                EquivariantMap::new(&source, &target, matrix)
            } else {
                EquivariantMap::new_unchecked(&source, &target, matrix)
            }
            .map_err(|e| parse_error(&loc, e))?;
            ws.maps.insert(name.clone(), map);
            ws.map_ends.insert(name.clone(), (f.source.clone(), f.target.clone()));
        }
        Ok(ws)
    }

    /// Resolves a document module name or a builtin expression.
    pub fn module(&self, expr: &str) -> Result<GModule> {
        if let Some(m) = self.modules.get(expr) {
            return Ok(m.clone());
        }
        let e = builtins::parse(expr)?;
        builtins::build_with(&e, &self.ring, &self.group, &|name| self.modules.get(name).cloned())
    }

    pub fn to_document(&self) -> WorkspaceDocument {
        WorkspaceDocument {
            ring: self.ring.to_string(),
            group: self.group_doc.clone(),
            modules: self.modules.iter().map(|(k, m)| (k.clone(), module_doc(m))).collect(),
            maps: self
                .maps
                .iter()
                .map(|(k, f)| {
                    let (source, target) = self.map_ends[k].clone();
                    (
                        k.clone(),
                        MapDoc {
                            source,
                            target,
                            matrix: matrix_doc(&f.matrix),
                        },
                    )
                })
                .collect(),
        }
    }
}

pub fn parse_document(text: &str) -> Result<WorkspaceDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("document: {e}")))
}

/// Parses, validates and re-serialises a document in canonical form.
pub fn canonical_json(text: &str) -> Result<String> {
    let ws = Workspace::load(&parse_document(text)?, true)?;
    Ok(serde_json::to_string_pretty(&ws.to_document()).expect("serialisable"))
}

/// A Higman certificate as a self-contained file entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub statement: String,
    pub ring: String,
    pub group: GroupDoc,
    pub module: ModuleDoc,
    pub theta: MatrixDoc,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CertificateBundle {
    pub certificates: Vec<CertificateDoc>,
}

pub fn certificate_doc(statement: impl Into<String>, cert: &HigmanCertificate, group_doc: &GroupDoc) -> CertificateDoc {
    CertificateDoc {
        statement: statement.into(),
        ring: cert.module.ring().to_string(),
        group: group_doc.clone(),
        module: module_doc(&cert.module),
        theta: matrix_doc(&cert.theta),
    }
}

/// Re-checks a certificate by evaluating `Σ_g A_g·θ·A_{g⁻¹} − I` and
/// testing that `θ` and the difference land in the relation span.
pub fn check_certificate(doc: &CertificateDoc) -> Result<std::result::Result<(), String>> {
    let ring: CoefficientRing = doc.ring.parse().map_err(|e| parse_error("ring", e))?;
    let group = Arc::new(FiniteGroup::from_spec(&doc.group.to_spec()?)?);
    let m = parse_module(&ring, &group, &doc.module, "module")?;
    let n = m.gens();
    let theta = parse_matrix(&ring, n, Some(n), &doc.theta, "theta")?;
    if let Err(f) = m.validate() {
        return Ok(Err(format!("module is invalid: {f}")));
    }
    let rel = m.relations();
    if !in_span(&(&theta * rel), rel)? {
        return Ok(Err("θ does not preserve the relations".into()));
    }
    let mut sum = ExactMatrix::zeros(&ring, n, n);
    for g in 0..group.order() {
        sum = &sum + &(&(m.element(g) * &theta) * m.element(group.inverse(g)));
    }
    let diff = &sum - &ExactMatrix::identity(&ring, n);
    if !in_span(&diff, rel)? {
        return Ok(Err("Tr(θ) differs from the identity".into()));
    }
    Ok(Ok(()))
}
