//! JSON input documents: a dimension plus exactly one of `points`, `vertices`
//! or `cclass`.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use latpolar::{realize_cclass, saturate, CClassSpec, LatticePoint, LatticeSet};
use num_bigint::BigInt;
use serde::Deserialize;

/// An integer given either as a JSON number or as a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Number(i64),
    Text(String),
}

impl Int {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Int::Number(v) => Ok(BigInt::from(*v)),
            Int::Text(s) => s
                .trim()
                .parse()
                .with_context(|| format!("{s:?} is not an integer")),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CClassInput {
    pub beta1: Int,
    pub beta2: Int,
    pub upper: Vec<Vec<Int>>,
    pub lower: Vec<Vec<Int>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub dim: usize,
    #[serde(default)]
    pub points: Option<Vec<Vec<Int>>>,
    #[serde(default)]
    pub vertices: Option<Vec<Vec<Int>>>,
    #[serde(default)]
    pub cclass: Option<CClassInput>,
}

fn ints(v: &[Int], len: usize, what: &str) -> Result<Vec<BigInt>> {
    if v.len() != len {
        bail!("{what} has length {}, expected {len}", v.len());
    }
    v.iter().map(Int::to_bigint).collect()
}

fn points(rows: &[Vec<Int>], dim: usize) -> Result<Vec<LatticePoint>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| ints(r, dim, &format!("point {i}")).map(LatticePoint::new))
        .collect()
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: InputDocument = serde_json::from_str(text).context("malformed input document")?;
        if doc.dim == 0 {
            bail!("dim must be positive");
        }
        let given = [
            doc.points.is_some(),
            doc.vertices.is_some(),
            doc.cclass.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            bail!("exactly one of points, vertices or cclass must be given");
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        InputDocument::parse(&text)
    }

    /// The lattice set described by the document. Points are taken as given,
    /// vertices are saturated, and a C-class specification is realized.
    pub fn lattice_set(&self) -> Result<LatticeSet> {
        let n = self.dim;
        if let Some(rows) = &self.points {
            return Ok(LatticeSet::new(n, points(rows, n)?)?);
        }
        if let Some(rows) = &self.vertices {
            return Ok(saturate(&points(rows, n)?, n)?);
        }
        let c = self.cclass.as_ref().expect("checked in parse");
        let slopes = |rows: &[Vec<Int>], what: &str| -> Result<Vec<Vec<BigInt>>> {
            rows.iter()
                .enumerate()
                .map(|(i, r)| ints(r, n - 1, &format!("{what} slope {i}")))
                .collect()
        };
        let spec = CClassSpec::new(
            n,
            c.beta1.to_bigint()?,
            c.beta2.to_bigint()?,
            slopes(&c.upper, "upper")?,
            slopes(&c.lower, "lower")?,
        )?;
        Ok(realize_cclass(&spec)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_forms() {
        let v =
            InputDocument::parse(r#"{"dim":2,"vertices":[[-1,1],[0,2],[2,0],[0,-2]]}"#).unwrap();
        assert_eq!(v.lattice_set().unwrap().len(), 10);
        let p = InputDocument::parse(r#"{"dim":2,"points":[[0,0],["5",1]]}"#).unwrap();
        assert_eq!(p.lattice_set().unwrap().len(), 2);
        let c = InputDocument::parse(
            r#"{"dim":2,"cclass":{"beta1":1,"beta2":-1,"upper":[[1],[-1]],"lower":[[1],[-1]]}}"#,
        )
        .unwrap();
        assert_eq!(c.lattice_set().unwrap(), latpolar::cross_polytope(2));
    }

    #[test]
    fn malformed_documents() {
        assert!(InputDocument::parse(r#"{"dim":2}"#).is_err());
        assert!(InputDocument::parse(r#"{"dim":2,"points":[[0,0]],"vertices":[[0,0]]}"#).is_err());
        assert!(InputDocument::parse(r#"{"dim":2,"points":[[0.5,0]]}"#).is_err());
        assert!(InputDocument::parse(r#"{"dim":2,"points":[[0,0]],"extra":1}"#).is_err());
        let short = InputDocument::parse(r#"{"dim":2,"points":[[0]]}"#).unwrap();
        assert!(short.lattice_set().is_err());
    }
}
