//! Algebra specs and JSON arguments.

use std::fs;

use mathieu_core::json::{algebra_from_json, element_from_json, subspace_from_json};
use mathieu_core::{Algebra, Element, Error, FieldSpec, Poly, Result, Subspace};
use serde_json::Value;

fn bad(what: impl Into<String>) -> Error {
    Error::Parse(what.into())
}

/// Reads `@path` from disk, otherwise returns the text itself.
fn text_or_file(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| bad(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))
}

fn field(p: &str) -> Result<FieldSpec> {
    FieldSpec::new(p.trim().parse().map_err(|_| bad(format!("invalid characteristic {p:?}")))?)
}

/// Shorthand specs, JSON documents and `@file`.
pub fn algebra(spec: &str) -> Result<Algebra> {
    let spec = spec.trim();
    if spec.starts_with('@') || spec.starts_with('{') {
        return algebra_from_json(&parse_json(&text_or_file(spec)?)?);
    }
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad(format!("unknown algebra spec {spec:?}")))?;
    match kind {
        "mat" => {
            let (n, p) = rest.split_once(':').ok_or_else(|| bad("expected mat:n:p"))?;
            let n = n.parse().map_err(|_| bad(format!("invalid matrix size {n:?}")))?;
            Algebra::matrix(n, field(p)?)
        }
        "polyq" => {
            let (p, coeffs) = rest.split_once(':').ok_or_else(|| bad("expected polyq:p:c0,c1,...,1"))?;
            let field = field(p)?;
            let coeffs = coeffs.split(',').map(|c| field.parse_scalar(c)).collect::<Result<Vec<_>>>()?;
            Algebra::poly_quotient(&Poly::new(field, coeffs)?)
        }
        "dsum" => {
            // the first '+' at which both halves parse
            for (i, _) in rest.match_indices('+') {
                if let (Ok(a), Ok(b)) = (algebra(&rest[..i]), algebra(&rest[i + 1..])) {
                    return Algebra::direct_sum(&a, &b);
                }
            }
            Err(bad(format!("expected dsum:spec+spec, got {spec:?}")))
        }
        "opp" => Ok(Algebra::opposite(&algebra(rest)?)),
        _ => Err(bad(format!("unknown algebra spec {spec:?}"))),
    }
}

/// A JSON array, a comma-separated list of scalars, or `@file`.
pub fn element(alg: &Algebra, arg: &str) -> Result<Element> {
    let text = text_or_file(arg)?;
    let text = text.trim();
    if text.starts_with('[') {
        return element_from_json(alg, &parse_json(text)?);
    }
    let coords = text.split(',').map(|c| alg.field().parse_scalar(c)).collect::<Result<Vec<_>>>()?;
    alg.element(coords)
}

/// A subspace document, an array of rows, or `@file` holding either.
pub fn subspace(alg: &Algebra, arg: &str) -> Result<Subspace> {
    subspace_from_json(alg, &parse_json(&text_or_file(arg)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_specs() {
        assert_eq!(algebra("mat:2:3").unwrap().dim(), 4);
        assert_eq!(algebra("mat:2:0").unwrap().field(), FieldSpec::RATIONALS);
        assert_eq!(algebra("polyq:2:1,1,1").unwrap().dim(), 2);
        let kk = algebra("dsum:mat:1:2+mat:1:2").unwrap();
        assert!(kk.is_commutative() && kk.dim() == 2);
        let nested = algebra("dsum:dsum:mat:1:3+mat:1:3+polyq:3:0,0,1").unwrap();
        assert_eq!(nested.dim(), 4);
        assert_eq!(algebra("opp:mat:2:2").unwrap().label(), "opp(M_2(F_2))");
        assert!(algebra("mat:2:4").is_err());
        assert!(algebra("ring:2").is_err());
    }

    #[test]
    fn element_forms() {
        let m = algebra("mat:2:5").unwrap();
        let a = element(&m, "[1, \"2\", 0, -1]").unwrap();
        assert_eq!(a, element(&m, "1,2,0,4").unwrap());
        assert!(element(&m, "1,2").is_err());
    }
}
