//! Structured results and their text, JSON and LaTeX renderings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use pdr_core::{BiLaurentPoly, LaurentPoly, TruncatedSeries};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One monomial: an exponent per variable and a decimal coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(flatten)]
    pub exponents: BTreeMap<String, i64>,
    pub coeff: String,
}

/// A polynomial in exponent-map form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyPayload {
    pub variables: Vec<String>,
    pub terms: Vec<Term>,
}

impl PolyPayload {
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let var = p.var().to_string();
        PolyPayload {
            terms: p
                .terms()
                .map(|(e, c)| Term {
                    exponents: BTreeMap::from([(var.clone(), e)]),
                    coeff: c.to_string(),
                })
                .collect(),
            variables: vec![var],
        }
    }

    pub fn from_bilaurent(p: &BiLaurentPoly) -> Self {
        PolyPayload {
            variables: vec!["x".into(), "y".into()],
            terms: p
                .terms()
                .map(|((x, y), c)| Term {
                    exponents: BTreeMap::from([("x".into(), x), ("y".into(), y)]),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_series(s: &TruncatedSeries) -> Self {
        Self::from_laurent(&s.to_laurent())
    }

    fn coeffs(&self) -> Result<Vec<(Vec<i64>, BigInt)>, String> {
        self.terms
            .iter()
            .map(|t| {
                let exps = self
                    .variables
                    .iter()
                    .map(|v| {
                        t.exponents
                            .get(v)
                            .copied()
                            .ok_or_else(|| format!("term lacks {v}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let c = BigInt::from_str(&t.coeff)
                    .map_err(|e| format!("coefficient {:?}: {e}", t.coeff))?;
                Ok((exps, c))
            })
            .collect()
    }

    /// Rebuild a one-variable polynomial.
    pub fn to_laurent(&self) -> Result<LaurentPoly, String> {
        if self.variables.len() != 1 {
            return Err(format!(
                "expected one variable, found {}",
                self.variables.len()
            ));
        }
        Ok(LaurentPoly::from_terms(
            self.coeffs()?.into_iter().map(|(e, c)| (e[0], c)),
        ))
    }

    /// Rebuild a polynomial in `x` and `y`.
    pub fn to_bilaurent(&self) -> Result<BiLaurentPoly, String> {
        if self.variables != ["x", "y"] {
            return Err(format!(
                "expected variables x, y, found {:?}",
                self.variables
            ));
        }
        Ok(BiLaurentPoly::from_terms(
            self.coeffs()?.into_iter().map(|(e, c)| ((e[0], e[1]), c)),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub subcommand: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub convention: String,
    pub ms: u64,
    pub cache_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub query: Query,
    pub result: PolyPayload,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extras: BTreeMap<String, serde_json::Value>,
    /// Present for subcommands that check an identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    pub meta: Meta,
}

impl QueryResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// A computed value ready for display in any format.
pub enum Value {
    Laurent(LaurentPoly),
    Bi(BiLaurentPoly),
    Series(TruncatedSeries),
}

impl Value {
    pub fn payload(&self) -> PolyPayload {
        match self {
            Value::Laurent(p) => PolyPayload::from_laurent(p),
            Value::Bi(p) => PolyPayload::from_bilaurent(p),
            Value::Series(s) => PolyPayload::from_series(s),
        }
    }

    pub fn text(&self) -> String {
        match self {
            Value::Laurent(p) => p.to_string(),
            Value::Bi(p) => p.to_string(),
            Value::Series(s) => s.to_string(),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Value::Laurent(p) => p.to_latex(),
            Value::Bi(p) => p.to_latex(),
            Value::Series(s) => {
                let head = s.to_laurent().to_latex();
                format!("{head} + O(y^{{{}}})", s.order() + 1)
            }
        }
    }
}
