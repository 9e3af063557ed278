//! JSON structure documents: a chart declaration plus a bracket table, with
//! optional weights and parameter specializations.
//!
//! ```json
//! {
//!   "variables": ["w", "x", "y", "z"],
//!   "parameters": ["eta", "nu"],
//!   "brackets": { "w,x": "x", "y,z": "eta*x^2 + nu*y*z" },
//!   "specialize": { "eta": "3", "nu": "1" }
//! }
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num::bigint::BigInt;
use serde::Deserialize;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poisson::{from_brackets, PoissonStructure};
use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub variables: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default)]
    pub weights: Option<BTreeMap<String, u32>>,
    pub brackets: BTreeMap<String, String>,
    #[serde(default)]
    pub specialize: Option<BTreeMap<String, String>>,
}

/// Parses "p" or "p/q" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("`{s}` is not a rational number"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl StructureDocument {
    pub fn from_json(source: &str) -> Result<Self> {
        serde_json::from_str(source)
            .map_err(|e| Error::Invalid(format!("bad structure document: {e}")))
    }

    pub fn context(&self) -> Result<Arc<VariableContext>> {
        match &self.weights {
            None => VariableContext::new(self.variables.clone(), self.parameters.clone()),
            Some(map) => {
                let weights: Vec<u32> = self
                    .variables
                    .iter()
                    .map(|v| {
                        map.get(v).copied().ok_or_else(|| {
                            Error::Invalid(format!("missing weight for variable `{v}`"))
                        })
                    })
                    .collect::<Result<_>>()?;
                VariableContext::with_weights(
                    self.variables.clone(),
                    self.parameters.clone(),
                    weights,
                )
            }
        }
    }

    fn bracket_table(
        &self,
        ctx: &Arc<VariableContext>,
    ) -> Result<Vec<((String, String), Polynomial)>> {
        let mut table = Vec::new();
        for (key, value) in &self.brackets {
            let (u, v) = key.split_once(',').ok_or_else(|| {
                Error::Invalid(format!(
                    "bracket key `{key}` must be two comma-separated variables"
                ))
            })?;
            let p = parse_poly(value, ctx)?;
            table.push(((u.trim().to_string(), v.trim().to_string()), p));
        }
        Ok(table)
    }

    /// The structure with parameters kept symbolic; the `specialize` block is
    /// ignored.
    pub fn symbolic_structure(&self) -> Result<PoissonStructure> {
        let ctx = self.context()?;
        from_brackets(&ctx, self.bracket_table(&ctx)?)
    }

    /// The structure with every parameter replaced by its `specialize` value;
    /// the result lives in a parameter-free context. Errors if any parameter
    /// has no specialization.
    pub fn specialized_structure(&self) -> Result<PoissonStructure> {
        if self.parameters.is_empty() {
            return self.symbolic_structure();
        }
        let spec = self.specialize.as_ref().ok_or_else(|| {
            Error::ParameterNotSpecialized(self.parameters[0].clone())
        })?;
        let mut values: BTreeMap<String, Rational> = BTreeMap::new();
        for p in &self.parameters {
            let v = spec
                .get(p)
                .ok_or_else(|| Error::ParameterNotSpecialized(p.clone()))?;
            values.insert(p.clone(), parse_rational(v)?);
        }
        let full_ctx = self.context()?;
        let plain_ctx = match &self.weights {
            None => VariableContext::new(self.variables.clone(), Vec::<String>::new())?,
            Some(_) => {
                let weights: Vec<u32> = self
                    .variables
                    .iter()
                    .map(|v| self.weights.as_ref().unwrap()[v])
                    .collect();
                VariableContext::with_weights(
                    self.variables.clone(),
                    Vec::<String>::new(),
                    weights,
                )?
            }
        };
        let nv = self.variables.len();
        let table = self
            .bracket_table(&full_ctx)?
            .into_iter()
            .map(|(pair, p)| {
                let specialized = p.substitute(&values)?;
                let moved = Polynomial::from_terms(
                    &plain_ctx,
                    specialized.terms().map(|(m, c)| (m[..nv].to_vec(), c.clone())),
                );
                Ok((pair, moved))
            })
            .collect::<Result<Vec<_>>>()?;
        from_brackets(&plain_ctx, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::JacobiStatus;

    const E6TILDE: &str = r#"{
        "variables": ["w", "x", "y", "z"],
        "parameters": ["eta", "nu"],
        "brackets": {
            "w,x": "x", "w,y": "y", "w,z": "z",
            "y,z": "eta*x^2 + nu*y*z",
            "z,x": "eta*y^2 + nu*z*x",
            "x,y": "eta*z^2 + nu*x*y"
        },
        "specialize": { "eta": "3", "nu": "1" }
    }"#;

    #[test]
    fn document_roundtrip() {
        let doc = StructureDocument::from_json(E6TILDE).unwrap();
        let mut sym = doc.symbolic_structure().unwrap();
        assert!(sym.jacobi_obstruction().unwrap().is_zero());
        assert!(matches!(sym.jacobi_status(), JacobiStatus::Holds));

        let spec = doc.specialized_structure().unwrap();
        assert_eq!(spec.context().num_params(), 0);
        let h = spec.bivector().pfaffian().unwrap();
        assert!(!h.is_zero());
    }

    #[test]
    fn missing_specialization_rejected() {
        let doc = StructureDocument::from_json(
            r#"{"variables":["x","y"],"parameters":["t"],"brackets":{"x,y":"t*x"}}"#,
        )
        .unwrap();
        assert!(matches!(
            doc.specialized_structure(),
            Err(Error::ParameterNotSpecialized(_))
        ));
        assert!(doc.symbolic_structure().is_ok());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), crate::poly::rat_int(3));
        assert_eq!(parse_rational("-1/2").unwrap(), crate::poly::rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn bad_documents_rejected() {
        assert!(StructureDocument::from_json("{").is_err());
        assert!(StructureDocument::from_json(r#"{"variables":["x"],"brackets":{},"bogus":1}"#).is_err());
        let doc = StructureDocument::from_json(
            r#"{"variables":["x","y"],"brackets":{"x": "y"}}"#,
        )
        .unwrap();
        assert!(doc.symbolic_structure().is_err());
    }
}
