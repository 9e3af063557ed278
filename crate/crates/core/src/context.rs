use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A coordinate chart: an ordered list of variables, an ordered list of inert
/// parameters, and optional positive integer weights on the variables.
///
/// Exponent vectors on polynomials index variables first, then parameters.
/// Parameters behave as extra commuting generators of weight zero on which
/// every derivation vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    variables: Vec<String>,
    parameters: Vec<String>,
    weights: Option<Vec<u32>>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        Self::with_weights_opt(variables, parameters, None)
    }

    pub fn with_weights<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = S>,
        weights: impl IntoIterator<Item = u32>,
    ) -> Result<Arc<Self>> {
        Self::with_weights_opt(variables, parameters, Some(weights.into_iter().collect()))
    }

    fn with_weights_opt<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = S>,
        weights: Option<Vec<u32>>,
    ) -> Result<Arc<Self>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        let mut seen = BTreeMap::new();
        for name in variables.iter().chain(parameters.iter()) {
            if name.is_empty() {
                return Err(Error::Invalid("empty identifier".into()));
            }
            if seen.insert(name.clone(), ()).is_some() {
                return Err(Error::Invalid(format!("duplicate identifier `{name}`")));
            }
        }
        if let Some(w) = &weights {
            if w.len() != variables.len() {
                return Err(Error::Invalid(
                    "weights must cover every variable".into(),
                ));
            }
            if w.iter().any(|&wi| wi == 0) {
                return Err(Error::Invalid("weights must be >= 1".into()));
            }
        }
        Ok(Arc::new(VariableContext {
            variables,
            parameters,
            weights,
        }))
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn num_params(&self) -> usize {
        self.parameters.len()
    }

    /// Total number of generators (variables + parameters) = exponent vector length.
    pub fn num_gens(&self) -> usize {
        self.variables.len() + self.parameters.len()
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn weight_of(&self, var_index: usize) -> Option<u32> {
        self.weights.as_ref().map(|w| w[var_index])
    }

    /// Index of `name` in the combined generator list, variables first.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.variables.iter().position(|v| v == name) {
            return Ok(i);
        }
        if let Some(i) = self.parameters.iter().position(|p| p == name) {
            return Ok(self.variables.len() + i);
        }
        Err(Error::UndeclaredIdentifier(name.to_string()))
    }

    /// Index of `name` among the variables only.
    pub fn variable_index(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.variables.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.parameters.iter().any(|p| p == name) {
            return Err(Error::DerivativeOfParameter(name.to_string()));
        }
        Err(Error::UndeclaredIdentifier(name.to_string()))
    }

    pub fn gen_name(&self, index: usize) -> &str {
        if index < self.variables.len() {
            &self.variables[index]
        } else {
            &self.parameters[index - self.variables.len()]
        }
    }

    pub fn is_parameter_index(&self, index: usize) -> bool {
        index >= self.variables.len()
    }
}

pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}
