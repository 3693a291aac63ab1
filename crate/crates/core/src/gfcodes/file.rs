use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::code::{CodeVector, LinearCode};
use super::field::{FieldSpec, GaloisField};
use crate::error::{Error, Result};

/// One field element in a code file: coordinates, or the integer `sum a_i q^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Coords(Vec<u32>),
    Int(u64),
}

/// JSON description of a linear code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub generator: Vec<Vec<ElementRepr>>,
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        match &self.modulus {
            Some(m) => FieldSpec::new(self.q, self.m, m.clone()),
            None => FieldSpec::default_for(self.q, self.m),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Arc::new(GaloisField::new(self.field_spec()?));
        let rows = self
            .generator
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        ElementRepr::Coords(c) => field.from_coeffs(c),
                        ElementRepr::Int(v) => field.from_int(*v),
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(CodeVector)
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(field, self.n, rows)
    }

    /// Canonical file for `code`, with coordinate arrays.
    pub fn from_code(code: &LinearCode) -> Self {
        let field = code.field();
        CodeFile {
            q: field.q(),
            m: field.m(),
            modulus: Some(field.spec().modulus.clone()),
            n: code.n(),
            generator: code
                .generator()
                .iter()
                .map(|row| row.entries().iter().map(|&e| ElementRepr::Coords(field.coeffs(e).to_vec())).collect())
                .collect(),
        }
    }
}
