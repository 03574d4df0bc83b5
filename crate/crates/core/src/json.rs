//! JSON documents for algebras, elements, subspaces and certificates.
//!
//! Scalars are strings (`"3"`, `"-1/2"`); integers are also accepted on
//! input. An algebra is either a full document
//! `{"field": {"p": 3}, "dim", "table", "unit", "label"}` or a named
//! constructor such as `{"matrix": {"n": 2, "p": 3}}`, where the field may
//! also sit next to the constructor as `"field": {"p": 3}`.

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::experiments::LatticeReport;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Vector;
use crate::mathieu::RadicalCertificate;
use crate::poly::Poly;
use crate::subspace::Subspace;

fn bad(what: impl Into<String>) -> Error {
    Error::Parse(what.into())
}

fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn rows_to_json(rows: &[Vector]) -> Value {
    Value::Array(rows.iter().map(|r| vector_to_json(r)).collect())
}

pub fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => field.parse_scalar(&n.to_string()),
        other => Err(bad(format!("expected a scalar, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what}: expected an array")))
}

fn vector_from_json(field: FieldSpec, v: &Value, what: &str) -> Result<Vector> {
    array(v, what)?.iter().map(|s| scalar_from_json(field, s)).collect()
}

fn rows_from_json(field: FieldSpec, v: &Value, what: &str) -> Result<Vec<Vector>> {
    array(v, what)?.iter().map(|r| vector_from_json(field, r, what)).collect()
}

fn uint(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{what}: expected a nonnegative integer")))
}

pub fn field_to_json(field: FieldSpec) -> Value {
    json!({ "p": field.characteristic() })
}

/// `{"p": int}`, with `0` for the rationals.
pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let p = v.get("p").ok_or_else(|| bad("field: missing \"p\""))?;
    FieldSpec::new(uint(p, "field.p")?)
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let table: Vec<Value> = alg.table().iter().map(|row| rows_to_json(row)).collect();
    json!({
        "field": field_to_json(alg.field()),
        "dim": alg.dim(),
        "table": table,
        "unit": vector_to_json(alg.unit()),
        "label": alg.label(),
    })
}

/// The field of a named constructor: `"p"` or `"field"` inside its
/// arguments, else the `"field"` next to it.
fn constructor_field(args: &Value, outer: Option<FieldSpec>) -> Result<FieldSpec> {
    if let Some(p) = args.get("p") {
        return FieldSpec::new(uint(p, "p")?);
    }
    if let Some(f) = args.get("field") {
        return field_from_json(f);
    }
    outer.ok_or_else(|| bad("named constructor without a field"))
}

fn algebra_from_object(obj: &Map<String, Value>, outer: Option<FieldSpec>) -> Result<Algebra> {
    let field = match obj.get("field") {
        Some(f) => Some(field_from_json(f)?),
        None => outer,
    };
    let alg = if let Some(args) = obj.get("matrix") {
        let n = uint(args.get("n").ok_or_else(|| bad("matrix: missing \"n\""))?, "matrix.n")?;
        Algebra::matrix(n as usize, constructor_field(args, field)?)?
    } else if let Some(args) = obj.get("poly_quotient") {
        let field = constructor_field(args, field)?;
        let modulus = args.get("modulus").ok_or_else(|| bad("poly_quotient: missing \"modulus\""))?;
        Algebra::poly_quotient(&Poly::new(field, vector_from_json(field, modulus, "modulus")?)?)?
    } else if let Some(parts) = obj.get("direct_sum") {
        let parts = array(parts, "direct_sum")?;
        if parts.len() != 2 {
            return Err(bad("direct_sum takes exactly two algebras"));
        }
        Algebra::direct_sum(&algebra_from_value(&parts[0], field)?, &algebra_from_value(&parts[1], field)?)?
    } else if let Some(inner) = obj.get("opposite") {
        Algebra::opposite(&algebra_from_value(inner, field)?)
    } else if let Some(table) = obj.get("table") {
        let field = field.ok_or_else(|| bad("algebra: missing \"field\""))?;
        let table: Vec<Vec<Vector>> =
            array(table, "table")?.iter().map(|row| rows_from_json(field, row, "table")).collect::<Result<_>>()?;
        if let Some(dim) = obj.get("dim") {
            if uint(dim, "dim")? as usize != table.len() {
                return Err(bad(format!("dim {dim} does not match a table of {} rows", table.len())));
            }
        }
        let unit = vector_from_json(field, obj.get("unit").ok_or_else(|| bad("algebra: missing \"unit\""))?, "unit")?;
        Algebra::new(field, table, unit, "algebra", true)?
    } else {
        return Err(bad("unrecognized algebra document"));
    };
    Ok(match obj.get("label").and_then(Value::as_str) {
        Some(label) => alg.with_label(label),
        None => alg,
    })
}

fn algebra_from_value(v: &Value, outer: Option<FieldSpec>) -> Result<Algebra> {
    let obj = v.as_object().ok_or_else(|| bad("algebra: expected an object"))?;
    algebra_from_object(obj, outer)
}

/// A full document or a named constructor. Full documents are checked for
/// associativity and the unit law.
pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    algebra_from_value(v, None)
}

pub fn element_to_json(e: &Element) -> Value {
    vector_to_json(e.coords())
}

pub fn element_from_json(alg: &Algebra, v: &Value) -> Result<Element> {
    alg.element(vector_from_json(alg.field(), v, "element")?)
}

/// `{"ambient": label, "basis": rows}`, rows in reduced row echelon form.
pub fn subspace_to_json(alg: &Algebra, v: &Subspace) -> Value {
    json!({ "ambient": alg.label(), "basis": rows_to_json(v.basis()) })
}

/// `{"basis": rows}` or a bare array of rows; the rows need only span the
/// subspace. The `"ambient"` label is informational.
pub fn subspace_from_json(alg: &Algebra, v: &Value) -> Result<Subspace> {
    let rows = match v {
        Value::Object(obj) => obj.get("basis").ok_or_else(|| bad("subspace: missing \"basis\""))?,
        other => other,
    };
    let rows = rows_from_json(alg.field(), rows, "basis")?;
    let elements = rows.into_iter().map(|r| alg.element(r)).collect::<Result<Vec<_>>>()?;
    Subspace::span(alg, &elements)
}

pub fn certificate_to_json(cert: &RadicalCertificate) -> Value {
    json!({ "N": cert.exponent, "ideal_basis": rows_to_json(cert.ideal.basis()) })
}

pub fn lattice_to_json(alg: &Algebra, report: &LatticeReport) -> Value {
    let spaces = |vs: &[Subspace]| Value::Array(vs.iter().map(|v| subspace_to_json(alg, v)).collect());
    json!({
        "theta": report.theta,
        "all": spaces(&report.all),
        "maximal_nontrivial": spaces(&report.maximal_nontrivial),
        "minimal_nonzero": spaces(&report.minimal_nonzero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let f3 = FieldSpec::new(3).unwrap();
        for alg in [
            Algebra::matrix(2, f3).unwrap(),
            Algebra::poly_quotient(&Poly::from_i64s(f3, &[1, 0, 1])).unwrap(),
            Algebra::matrix(2, FieldSpec::RATIONALS).unwrap(),
        ] {
            let back = algebra_from_json(&algebra_to_json(&alg)).unwrap();
            assert_eq!(back, alg);
            assert_eq!(back.label(), alg.label());
        }
    }

    #[test]
    fn named_constructors() {
        let m = algebra_from_json(&json!({"matrix": {"n": 2}, "field": {"p": 3}})).unwrap();
        assert_eq!(m, Algebra::matrix(2, FieldSpec::new(3).unwrap()).unwrap());
        let m = algebra_from_json(&json!({"matrix": {"n": 2, "p": 3}})).unwrap();
        assert_eq!(m.dim(), 4);
        let f4 = algebra_from_json(&json!({"poly_quotient": {"modulus": [1, 1, "1"], "p": 2}})).unwrap();
        assert_eq!(f4.dim(), 2);
        let kk = algebra_from_json(&json!({
            "direct_sum": [{"matrix": {"n": 1}}, {"matrix": {"n": 1}}],
            "field": {"p": 2},
        }))
        .unwrap();
        assert!(kk.is_commutative() && kk.dim() == 2);
        let opp = algebra_from_json(&json!({"opposite": {"matrix": {"n": 2, "p": 2}}, "label": "opp"})).unwrap();
        assert_eq!(opp.label(), "opp");
        assert!(algebra_from_json(&json!({"matrix": {"n": 2}})).is_err());
        assert!(algebra_from_json(&json!({"matrix": {"n": 2, "p": 4}})).is_err());
    }

    #[test]
    fn full_document_is_verified() {
        // e0 e0 = e1 with unit e0 breaks the unit law
        let doc = json!({
            "field": {"p": 2}, "dim": 2,
            "table": [[["0", "1"], ["0", "1"]], [["0", "1"], ["0", "1"]]],
            "unit": ["1", "0"], "label": "broken",
        });
        assert!(algebra_from_json(&doc).is_err());
    }

    #[test]
    fn subspace_and_certificate() {
        let f5 = FieldSpec::new(5).unwrap();
        let m2 = Algebra::matrix(2, f5).unwrap();
        let v = subspace_from_json(&m2, &json!([[2, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])).unwrap();
        assert_eq!(v.dim(), 2);
        let doc = subspace_to_json(&m2, &v);
        assert_eq!(doc["basis"], json!([["1", "0", "0", "0"], ["0", "1", "0", "0"]]));
        assert_eq!(subspace_from_json(&m2, &doc).unwrap(), v);
        let cert = RadicalCertificate { exponent: 2, ideal: Subspace::zero(&m2) };
        assert_eq!(certificate_to_json(&cert), json!({"N": 2, "ideal_basis": []}));
        let q = Algebra::matrix(1, FieldSpec::RATIONALS).unwrap();
        assert_eq!(element_from_json(&q, &json!(["-1/2"])).unwrap().to_string(), "[-1/2]");
    }
}
