//! Result documents: exact JSON and plain text renderings.

use std::fmt::Write as _;

use a1deg_core::{FieldElement, Matrix, Result, UnstableClass};
use serde::Serialize;
use serde_json::Value;

/// Exact scalar text: `p/q`, an integer, or a residue.
pub fn scalar(x: &FieldElement) -> String {
    x.to_string()
}

pub fn scalars(xs: &[FieldElement]) -> Vec<String> {
    xs.iter().map(scalar).collect()
}

pub fn matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| scalars(r)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassDoc {
    pub positive: Vec<String>,
    pub negative: Vec<String>,
    pub unit: String,
    pub rank: i64,
    pub discriminant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
}

pub fn class(c: &UnstableClass) -> Result<ClassDoc> {
    let form = c.form();
    Ok(ClassDoc {
        positive: scalars(form.positive_entries()),
        negative: scalars(form.negative_entries()),
        unit: scalar(c.unit()),
        rank: c.rank(),
        discriminant: scalar(&form.discriminant()?),
        signature: form.signature(),
    })
}

pub fn class_value(c: &UnstableClass) -> Result<Value> {
    Ok(serde_json::to_value(class(c)?).expect("class documents serialize"))
}

/// Multi-line text rendering of a matrix, indented by `indent` spaces.
pub fn matrix_text(m: &Matrix, indent: usize) -> String {
    let rows = matrix(m);
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "{:indent$}[{}]", "", cells.join("  "));
    }
    out
}

pub fn class_text(c: &UnstableClass) -> Result<String> {
    let doc = class(c)?;
    let mut s = format!("{c}\n    rank {}, discriminant {}", doc.rank, doc.discriminant);
    if let Some(sig) = doc.signature {
        let _ = write!(s, ", signature {sig}");
    }
    Ok(s)
}
