//! The JSON fixture format.
//!
//! Every file is one object with a `kind` tag. Identifiers are dense
//! integers, tables are arrays of `[lhs, rhs, result]` triples, and `names`
//! carries optional labels that the library ignores. The canonical form sorts
//! keys and triples and puts each innermost array on one line.

use std::collections::BTreeMap;

use doublelift::doublecat::DoubleCategory;
use doublelift::twocat::BicategoryData;
use doublelift::{
    DecoratedBicategory, FiniteCategory, FunctorData, Monoid, Precosheaf, StrictBicategory, StrictMonoidalCategory,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub type Triple = [usize; 3];
pub type Names = BTreeMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDoc {
    pub size: usize,
    pub unit: usize,
    pub table: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: usize,
    pub arrows: Vec<[usize; 2]>,
    pub identities: Vec<usize>,
    pub compose: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub category: CategoryDoc,
    pub unit: usize,
    pub tensor_objects: Vec<Triple>,
    pub tensor_morphisms: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicategoryDoc {
    pub cells0: usize,
    pub cells1: Vec<[usize; 2]>,
    pub cells2: Vec<[usize; 2]>,
    pub id1: Vec<usize>,
    pub id2: Vec<usize>,
    pub vcomp: Vec<Triple>,
    pub hcomp1: Vec<Triple>,
    pub hcomp2: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecoratedDoc {
    pub decoration: CategoryDoc,
    pub bicategory: BicategoryDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrecosheafDoc {
    pub base: CategoryDoc,
    pub fibers: Vec<MonoidalDoc>,
    pub actions: Vec<FunctorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleDoc {
    /// Objects and vertical morphisms.
    pub objects: CategoryDoc,
    /// Horizontal morphisms and squares under vertical composition.
    pub squares: CategoryDoc,
    pub source: FunctorDoc,
    pub target: FunctorDoc,
    pub horizontal_identity: FunctorDoc,
    pub hcomp_cells: Vec<Triple>,
    pub hcomp_squares: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Monoid(MonoidDoc),
    Category(CategoryDoc),
    MonoidalCategory(MonoidalDoc),
    Bicategory(BicategoryDoc),
    DecoratedBicategory(DecoratedDoc),
    Precosheaf(PrecosheafDoc),
    DoubleCategory(DoubleDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Monoid(_) => "monoid",
            Document::Category(_) => "category",
            Document::MonoidalCategory(_) => "monoidal-category",
            Document::Bicategory(_) => "bicategory",
            Document::DecoratedBicategory(_) => "decorated-bicategory",
            Document::Precosheaf(_) => "precosheaf",
            Document::DoubleCategory(_) => "double-category",
        }
    }

    /// Parses a document; syntax errors carry a line and column.
    pub fn parse(text: &str) -> Result<Document, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// The same document with every triple table sorted.
    pub fn canonicalized(&self) -> Document {
        let mut doc = self.clone();
        doc.sort_tables();
        doc
    }

    /// Builds the library value and converts it back, dropping `names`.
    pub fn rebuild(&self) -> Result<Document, CliError> {
        Ok(match self {
            Document::Monoid(m) => Document::Monoid((&m.build()?).into()),
            Document::Category(c) => Document::Category((&c.build()?).into()),
            Document::MonoidalCategory(m) => Document::MonoidalCategory((&m.build()?).into()),
            Document::Bicategory(b) => Document::Bicategory((&b.build()?).into()),
            Document::DecoratedBicategory(d) => Document::DecoratedBicategory((&d.build()?).into()),
            Document::Precosheaf(p) => Document::Precosheaf((&p.build()?).into()),
            Document::DoubleCategory(d) => Document::DoubleCategory(DoubleDoc::from(&d.build()?)),
        })
    }

    pub fn to_canonical(&self) -> String {
        let doc = self.canonicalized();
        let mut out = String::new();
        write_value(&mut out, &serde_json::to_value(&doc).expect("documents serialize"), 0);
        out.push('\n');
        out
    }

    fn sort_tables(&mut self) {
        match self {
            Document::Monoid(m) => m.table.sort_unstable(),
            Document::Category(c) => c.sort_tables(),
            Document::MonoidalCategory(m) => m.sort_tables(),
            Document::Bicategory(b) => b.sort_tables(),
            Document::DecoratedBicategory(d) => {
                d.decoration.sort_tables();
                d.bicategory.sort_tables();
            }
            Document::Precosheaf(p) => {
                p.base.sort_tables();
                p.fibers.iter_mut().for_each(MonoidalDoc::sort_tables);
            }
            Document::DoubleCategory(d) => {
                d.objects.sort_tables();
                d.squares.sort_tables();
                d.hcomp_cells.sort_unstable();
                d.hcomp_squares.sort_unstable();
            }
        }
    }
}

impl CategoryDoc {
    fn sort_tables(&mut self) {
        self.compose.sort_unstable();
    }
}

impl MonoidalDoc {
    fn sort_tables(&mut self) {
        self.category.sort_tables();
        self.tensor_objects.sort_unstable();
        self.tensor_morphisms.sort_unstable();
    }
}

impl BicategoryDoc {
    fn sort_tables(&mut self) {
        self.vcomp.sort_unstable();
        self.hcomp1.sort_unstable();
        self.hcomp2.sort_unstable();
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat_n(' ', n));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, indent + 2);
                write_value(out, x, indent + 2);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                pad(out, indent + 2);
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(out, &map[k.as_str()], indent + 2);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

// Dense table from triples, or a malformed-structure error naming the gap.
fn dense(n: usize, triples: &[Triple], what: &str) -> Result<Vec<usize>, CliError> {
    let mut t = vec![None; n * n];
    for &[a, b, c] in triples {
        if a >= n || b >= n {
            return Err(CliError::invalid(what, format!("entry [{a}, {b}, {c}] out of range")));
        }
        if t[a * n + b].replace(c).is_some() {
            return Err(CliError::invalid(what, format!("entry for ({a}, {b}) given twice")));
        }
    }
    t.into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| CliError::invalid(what, format!("no entry for ({}, {})", i / n, i % n))))
        .collect()
}

fn triples_of(n: usize, table: &[usize]) -> Vec<Triple> {
    table.iter().enumerate().map(|(i, &c)| [i / n, i % n, c]).collect()
}

fn tuple3(t: &[Triple]) -> Vec<(usize, usize, usize)> {
    t.iter().map(|&[a, b, c]| (a, b, c)).collect()
}

fn array3(t: Vec<(usize, usize, usize)>) -> Vec<Triple> {
    t.into_iter().map(|(a, b, c)| [a, b, c]).collect()
}

impl MonoidDoc {
    pub fn build(&self) -> Result<Monoid, CliError> {
        Ok(Monoid::from_parts_unchecked(self.size, self.unit, dense(self.size, &self.table, "monoid table")?)?)
    }
}

impl From<&Monoid> for MonoidDoc {
    fn from(m: &Monoid) -> Self {
        MonoidDoc { size: m.size(), unit: m.unit(), table: triples_of(m.size(), m.table()), names: None }
    }
}

impl CategoryDoc {
    pub fn build(&self) -> Result<FiniteCategory, CliError> {
        let arrows = self.arrows.iter().map(|&[d, c]| (d, c)).collect();
        Ok(FiniteCategory::from_parts_unchecked(self.objects, arrows, self.identities.clone(), tuple3(&self.compose))?)
    }
}

impl From<&FiniteCategory> for CategoryDoc {
    fn from(c: &FiniteCategory) -> Self {
        CategoryDoc {
            objects: c.num_objects(),
            arrows: c.arrows().iter().map(|&(d, c)| [d, c]).collect(),
            identities: c.identities().to_vec(),
            compose: array3(c.compose_triples()),
            names: None,
        }
    }
}

impl MonoidalDoc {
    pub fn build(&self) -> Result<StrictMonoidalCategory, CliError> {
        let base = self.category.build()?;
        let to = dense(base.num_objects(), &self.tensor_objects, "object tensor")?;
        let tm = dense(base.num_morphisms(), &self.tensor_morphisms, "morphism tensor")?;
        Ok(StrictMonoidalCategory::from_parts_unchecked(base, to, tm, self.unit)?)
    }
}

impl From<&StrictMonoidalCategory> for MonoidalDoc {
    fn from(m: &StrictMonoidalCategory) -> Self {
        MonoidalDoc {
            category: m.base().into(),
            unit: m.unit(),
            tensor_objects: triples_of(m.base().num_objects(), m.tensor_obj_table()),
            tensor_morphisms: triples_of(m.base().num_morphisms(), m.tensor_mor_table()),
            names: None,
        }
    }
}

impl BicategoryDoc {
    pub fn build(&self) -> Result<StrictBicategory, CliError> {
        let pairs = |v: &[[usize; 2]]| v.iter().map(|&[a, b]| (a, b)).collect();
        Ok(StrictBicategory::from_data_unchecked(BicategoryData {
            cells0: self.cells0,
            cells1: pairs(&self.cells1),
            cells2: pairs(&self.cells2),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            vcomp: tuple3(&self.vcomp),
            hcomp1: tuple3(&self.hcomp1),
            hcomp2: tuple3(&self.hcomp2),
        })?)
    }
}

impl From<&StrictBicategory> for BicategoryDoc {
    fn from(b: &StrictBicategory) -> Self {
        let d = b.to_data();
        let pairs = |v: Vec<(usize, usize)>| v.into_iter().map(|(a, b)| [a, b]).collect();
        BicategoryDoc {
            cells0: d.cells0,
            cells1: pairs(d.cells1),
            cells2: pairs(d.cells2),
            id1: d.id1,
            id2: d.id2,
            vcomp: array3(d.vcomp),
            hcomp1: array3(d.hcomp1),
            hcomp2: array3(d.hcomp2),
            names: None,
        }
    }
}

impl DecoratedDoc {
    pub fn build(&self) -> Result<DecoratedBicategory, CliError> {
        Ok(DecoratedBicategory::new(self.decoration.build()?, self.bicategory.build()?)?)
    }
}

impl From<&DecoratedBicategory> for DecoratedDoc {
    fn from(d: &DecoratedBicategory) -> Self {
        DecoratedDoc { decoration: d.decoration().into(), bicategory: d.bicat().into(), names: None }
    }
}

impl FunctorDoc {
    pub fn build(&self) -> FunctorData {
        FunctorData { object_map: self.objects.clone(), morphism_map: self.morphisms.clone() }
    }
}

impl From<&FunctorData> for FunctorDoc {
    fn from(f: &FunctorData) -> Self {
        FunctorDoc { objects: f.object_map.clone(), morphisms: f.morphism_map.clone() }
    }
}

impl PrecosheafDoc {
    pub fn build(&self) -> Result<Precosheaf, CliError> {
        let at = self.fibers.iter().map(MonoidalDoc::build).collect::<Result<_, _>>()?;
        let action = self.actions.iter().map(FunctorDoc::build).collect();
        Ok(Precosheaf::from_parts_unchecked(self.base.build()?, at, action)?)
    }
}

impl From<&Precosheaf> for PrecosheafDoc {
    fn from(p: &Precosheaf) -> Self {
        PrecosheafDoc {
            base: p.base().into(),
            fibers: p.fibers().iter().map(Into::into).collect(),
            actions: p.actions().iter().map(Into::into).collect(),
            names: None,
        }
    }
}

impl DoubleDoc {
    pub fn build(&self) -> Result<DoubleCategory, CliError> {
        Ok(DoubleCategory::from_parts_unchecked(
            self.objects.build()?,
            self.squares.build()?,
            self.source.build(),
            self.target.build(),
            self.horizontal_identity.build(),
            &tuple3(&self.hcomp_cells),
            &tuple3(&self.hcomp_squares),
        )?)
    }
}

impl From<&DoubleCategory> for DoubleDoc {
    fn from(d: &DoubleCategory) -> Self {
        DoubleDoc {
            objects: d.c0().into(),
            squares: d.c1().into(),
            source: d.src().into(),
            target: d.tgt().into(),
            horizontal_identity: d.hid().into(),
            hcomp_cells: array3(d.hcomp_cell_triples()),
            hcomp_squares: array3(d.hcomp_square_triples()),
            names: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout() {
        let doc = Document::Monoid((&Monoid::cyclic(2)).into());
        let text = doc.to_canonical();
        assert_eq!(
            text,
            "{\n  \"kind\": \"monoid\",\n  \"size\": 2,\n  \"table\": [\n    [0, 0, 0],\n    [0, 1, 1],\n    [1, 0, 1],\n    [1, 1, 0]\n  ],\n  \"unit\": 0\n}\n"
        );
        assert_eq!(Document::parse(&text).unwrap(), doc);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Document::parse("{\n  \"kind\": \"monoid\",\n  \"size\": 2,,\n}").unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (3, 13)),
            other => panic!("{other:?}"),
        }
        assert!(Document::parse("{\"kind\": \"ring\"}").is_err());
    }

    #[test]
    fn missing_entries_are_named() {
        let doc = MonoidDoc { size: 2, unit: 0, table: vec![[0, 0, 0]], names: None };
        let msg = doc.build().unwrap_err().to_string();
        assert!(msg.contains("no entry for (0, 1)"), "{msg}");
    }
}
