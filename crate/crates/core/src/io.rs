//! JSON file formats.
//!
//! Rationals are written as canonical strings (`"3"`, `"-1/2"`), object keys come out in a
//! fixed order, and every file ends with a newline, so emitting a parsed file reproduces it
//! byte for byte.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::affine::{AssociativeAlgebra, ComplexAlgebraStructure};
use crate::complex::ComplexStructure;
use crate::decomposition::{AffineCertificate, FlagDecomposition};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, LinearMap, Rational, Subspace, Vector};
use crate::obstructions::{Evidence, ObstructionReport};

pub const SCHEMA_VERSION: &str = "1";

type Coefficients = BTreeMap<String, String>;

/// Lie algebra file: only the nonzero brackets `[e_i, e_j]` with `i < j` are stored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub schema_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<(String, String, Coefficients)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
}

/// Associative algebra file: every nonzero product `e_i·e_j`, plus an optional complex
/// structure `i_map`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssociativeFile {
    pub schema_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<(String, String, Coefficients)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_map: Option<Vec<Vec<String>>>,
}

/// A linear map; `matrix[i][j]` is row `i`, column `j`, and column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub schema_version: String,
    pub matrix: Vec<Vec<String>>,
}

fn check_schema(v: &str) -> Result<()> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported schema_version {v:?}")))
    }
}

pub fn matrix_to_strings(m: &LinearMap) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<LinearMap> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(Error::Parse("ragged matrix".into()));
            }
            r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_rows(parsed, cols)
}

fn coefficients(names: &[String], v: &[Rational]) -> Coefficients {
    names.iter().zip(v).filter(|(_, x)| !x.is_zero()).map(|(n, x)| (n.clone(), format_rational(x))).collect()
}

fn check_names(dim: usize, basis: &[String]) -> Result<()> {
    if basis.len() != dim {
        return Err(Error::Parse(format!("dim is {dim} but {} basis names given", basis.len())));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = basis.iter().find(|n| !seen.insert(n.as_str())) {
        return Err(Error::Parse(format!("duplicate basis name {dup:?}")));
    }
    Ok(())
}

fn resolve(basis: &[String], name: &str) -> Result<usize> {
    basis.iter().position(|n| n == name).ok_or_else(|| Error::Parse(format!("unknown basis name {name:?}")))
}

fn vector_from(basis: &[String], coeffs: &Coefficients) -> Result<Vector> {
    let mut v = vec![Rational::zero(); basis.len()];
    for (name, value) in coeffs {
        v[resolve(basis, name)?] = parse_rational(value)?;
    }
    Ok(v)
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let names = g.basis_names();
        let mut brackets = Vec::new();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let v = g.structure_constants(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    brackets.push((names[i].clone(), names[j].clone(), coefficients(names, v)));
                }
            }
        }
        Self { schema_version: SCHEMA_VERSION.into(), dim: g.dim(), basis: names.to_vec(), brackets, gram: None }
    }

    /// Builds and validates the algebra; a pair listed twice is rejected.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        check_schema(&self.schema_version)?;
        check_names(self.dim, &self.basis)?;
        let mut seen = HashSet::new();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (a, b, coeffs) in &self.brackets {
            let (i, j) = (resolve(&self.basis, a)?, resolve(&self.basis, b)?);
            if i == j {
                return Err(Error::Parse(format!("bracket of {a:?} with itself")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::Parse(format!("bracket [{a}, {b}] given twice")));
            }
            brackets.push((i, j, vector_from(&self.basis, coeffs)?));
        }
        LieAlgebra::from_brackets(self.basis.clone(), &brackets)
    }

    pub fn gram_matrix(&self) -> Result<Option<LinearMap>> {
        self.gram.as_deref().map(matrix_from_strings).transpose()
    }
}

impl AssociativeFile {
    pub fn from_algebra(a: &AssociativeAlgebra, i_map: Option<&LinearMap>) -> Self {
        let names = a.basis_names();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let v = a.product_table(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    products.push((names[i].clone(), names[j].clone(), coefficients(names, v)));
                }
            }
        }
        Self {
            schema_version: SCHEMA_VERSION.into(),
            dim: a.dim(),
            basis: names.to_vec(),
            products,
            i_map: i_map.map(matrix_to_strings),
        }
    }

    pub fn from_complex(c: &ComplexAlgebraStructure) -> Self {
        Self::from_algebra(c.base(), Some(c.i_map()))
    }

    pub fn to_algebra(&self) -> Result<AssociativeAlgebra> {
        check_schema(&self.schema_version)?;
        check_names(self.dim, &self.basis)?;
        let n = self.dim;
        let mut m = vec![vec![vec![Rational::zero(); n]; n]; n];
        let mut seen = HashSet::new();
        for (a, b, coeffs) in &self.products {
            let (i, j) = (resolve(&self.basis, a)?, resolve(&self.basis, b)?);
            if !seen.insert((i, j)) {
                return Err(Error::Parse(format!("product {a}·{b} given twice")));
            }
            m[i][j] = vector_from(&self.basis, coeffs)?;
        }
        AssociativeAlgebra::new(self.basis.clone(), m)
    }

    /// The complex algebra, when `i_map` is present.
    pub fn to_complex(&self) -> Result<Option<ComplexAlgebraStructure>> {
        match &self.i_map {
            Some(rows) => Ok(Some(ComplexAlgebraStructure::new(self.to_algebra()?, matrix_from_strings(rows)?)?)),
            None => Ok(None),
        }
    }
}

impl StructureFile {
    pub fn from_map(m: &LinearMap) -> Self {
        Self { schema_version: SCHEMA_VERSION.into(), matrix: matrix_to_strings(m) }
    }

    pub fn to_map(&self) -> Result<LinearMap> {
        check_schema(&self.schema_version)?;
        matrix_from_strings(&self.matrix)
    }

    /// Loads `J` for an algebra of dimension `dim`; rejects shape mismatches and `J² ≠ −I`.
    pub fn to_structure(&self, dim: usize) -> Result<ComplexStructure> {
        let m = self.to_map()?;
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::ShapeMismatch { left: (dim, dim), right: (m.rows(), m.cols()) });
        }
        ComplexStructure::new(m)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_json(value)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn emit_algebra(g: &LieAlgebra) -> Result<String> {
    to_json(&AlgebraFile::from_algebra(g))
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    from_json::<AlgebraFile>(text)?.to_algebra()
}

pub fn emit_structure(j: &ComplexStructure) -> Result<String> {
    to_json(&StructureFile::from_map(j.matrix()))
}

pub fn parse_structure(text: &str, dim: usize) -> Result<ComplexStructure> {
    from_json::<StructureFile>(text)?.to_structure(dim)
}

fn vector_json(v: &[Rational]) -> Value {
    Value::from(v.iter().map(format_rational).collect::<Vec<_>>())
}

pub fn subspace_json(s: &Subspace) -> Value {
    Value::from(s.basis_vectors().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
}

pub fn matrix_json(m: &LinearMap) -> Value {
    json!(matrix_to_strings(m))
}

pub fn certificate_json(c: &AffineCertificate) -> Value {
    json!({
        "u": subspace_json(&c.u),
        "dim_a": c.dim_a(),
        "a": AssociativeFile::from_algebra(&c.a, None),
        "a_class": format!("{:?}", c.identification.class),
        "generators": c.generators.iter().map(matrix_json).collect::<Vec<_>>(),
        "f": matrix_json(&c.f),
        "kernel": subspace_json(&c.kernel),
        "verified": true,
    })
}

pub fn flag_json(flag: &FlagDecomposition) -> Value {
    let steps: Vec<Value> = flag
        .steps
        .iter()
        .map(|st| {
            json!({
                "ideal": subspace_json(&st.ideal),
                "quotient_dim": st.quotient_dim,
                "certificate": certificate_json(&st.certificate),
            })
        })
        .collect();
    json!({ "steps": steps, "derived_length": flag.derived_length })
}

pub fn obstruction_json(r: &ObstructionReport) -> Value {
    let evidence = match &r.evidence {
        Evidence::Codim { dim, commutator_dim } => json!({ "dim": dim, "commutator_dim": commutator_dim }),
        Evidence::OddDimension { dim } => json!({ "dim": dim }),
        Evidence::Search { candidates } => json!({ "candidates": candidates }),
        Evidence::Commutant { j_span_dim, commutant_dim, family } => json!({
            "j_span_dim": j_span_dim,
            "commutant_dim": commutant_dim,
            "gram": matrix_json(&family.gram),
            "v": subspace_json(&family.v),
            "z": subspace_json(&family.z),
            "j_maps": family.maps.iter().map(matrix_json).collect::<Vec<_>>(),
        }),
    };
    let mut out = json!({
        "algebra_id": r.algebra_id,
        "verdict": r.verdict_str(),
        "reason": r.reason.as_str(),
        "evidence": evidence,
    });
    if let Some(j) = r.witness() {
        out["witness"] = matrix_json(j.matrix());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_ids, by_id};

    #[test]
    fn algebra_round_trip() {
        for id in catalog_ids() {
            let e = by_id(&id).unwrap();
            let text = emit_algebra(&e.algebra).unwrap();
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, e.algebra, "{id}");
            assert_eq!(emit_algebra(&back).unwrap(), text);
        }
    }

    #[test]
    fn rejects_bad_files() {
        let ok = r#"{"schema_version":"1","dim":2,"basis":["x","y"],"brackets":[["x","y",{"x":"1"}]]}"#;
        assert!(parse_algebra(ok).is_ok());
        let unknown = ok.replace(r#"{"x":"1"}"#, r#"{"q":"1"}"#);
        assert!(matches!(parse_algebra(&unknown), Err(Error::Parse(_))));
        let dup = r#"{"schema_version":"1","dim":2,"basis":["x","x"],"brackets":[]}"#;
        assert!(matches!(parse_algebra(dup), Err(Error::Parse(_))));
        let twice = r#"{"schema_version":"1","dim":2,"basis":["x","y"],"brackets":[["x","y",{}],["y","x",{}]]}"#;
        assert!(matches!(parse_algebra(twice), Err(Error::Parse(_))));
        assert!(matches!(parse_algebra("{"), Err(Error::Parse(_))));
        // [x,y] = x, [x,z] = x, [y,z] = y violates Jacobi
        let bad = r#"{"schema_version":"1","dim":3,"basis":["x","y","z"],"brackets":[["x","y",{"x":"1"}],["x","z",{"x":"1"}],["y","z",{"y":"1"}]]}"#;
        assert!(matches!(parse_algebra(bad), Err(Error::InvalidLieAlgebra(_))));
    }

    #[test]
    fn structure_round_trip() {
        let j = ComplexStructure::new(LinearMap::standard_rotation(2)).unwrap();
        let text = emit_structure(&j).unwrap();
        assert_eq!(parse_structure(&text, 4).unwrap(), j);
        assert!(matches!(parse_structure(&text, 2), Err(Error::ShapeMismatch { .. })));
        let not_j = to_json(&StructureFile::from_map(&LinearMap::identity(2))).unwrap();
        assert_eq!(parse_structure(&not_j, 2), Err(Error::NotAComplexStructure));
    }

    #[test]
    fn associative_round_trip() {
        let c = crate::affine::toeplitz_algebra(3).unwrap();
        let file = AssociativeFile::from_complex(&c);
        let text = to_json(&file).unwrap();
        let back: AssociativeFile = from_json(&text).unwrap();
        assert_eq!(back.to_complex().unwrap().unwrap(), c);
        assert_eq!(to_json(&back).unwrap(), text);
    }
}
