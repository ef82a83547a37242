//! JSON job documents.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cli::parse::{parse_polynomial, parse_rational};
use crate::error::{Error, Result};
use crate::order::{TermOrder, WeightVector};
use crate::poly::{format_rational, Polynomial, Rational, Ring};
use crate::sagbi::SagbiGuards;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum RationalValue {
    Text(String),
    Integer(i64),
}

impl RationalValue {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            RationalValue::Text(s) => parse_rational(s),
            RationalValue::Integer(v) => Ok(Rational::from_integer((*v).into())),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        RationalValue::Text(format_rational(r))
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum OrderSpec {
    Matrix { matrix: Vec<Vec<RationalValue>> },
    Preset { preset: String, priority: Option<Vec<String>> },
}

impl OrderSpec {
    pub fn from_order(order: &TermOrder) -> Self {
        OrderSpec::Matrix {
            matrix: order
                .rows()
                .iter()
                .map(|r| r.iter().map(RationalValue::from_rational).collect())
                .collect(),
        }
    }

    /// Expands presets to explicit matrices.
    pub fn resolve(&self, ring: &Ring) -> Result<TermOrder> {
        let n = ring.nvars();
        match self {
            OrderSpec::Matrix { matrix } => {
                if matrix.len() != n {
                    return Err(Error::InvalidOrder(format!("matrix must be {n} x {n}")));
                }
                let rows = matrix
                    .iter()
                    .map(|r| r.iter().map(RationalValue::to_rational).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                TermOrder::new(rows)
            }
            OrderSpec::Preset { preset, priority } => {
                let priority: Vec<usize> = match priority {
                    Some(names) => names
                        .iter()
                        .map(|v| ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.clone())))
                        .collect::<Result<_>>()?,
                    None => (0..n).collect(),
                };
                match preset.as_str() {
                    "lex" => TermOrder::lex(n, &priority),
                    "deglex" => TermOrder::deglex(n, &priority),
                    "degrevlex" => TermOrder::degrevlex(n, &priority),
                    other => Err(Error::InvalidOrder(format!("unknown preset `{other}`"))),
                }
            }
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
pub struct GuardSpec {
    pub max_passes: Option<usize>,
    pub max_degree: Option<u64>,
    pub max_steps: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
pub struct FlagSpec {
    pub validate_input: Option<bool>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct JobSpec {
    pub variables: Vec<String>,
    /// Output documents call this `final_basis`; accepting it lets a result
    /// be fed straight back in.
    #[serde(alias = "final_basis")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_order: Option<OrderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_order: Option<OrderSpec>,
    /// Order for the single-order commands; falls back to `start_order`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
    /// Weight for the `initial` command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<RationalValue>>,
    /// Polynomial to reduce for the `normalform` command.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub guards: Option<GuardSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagSpec>,
}

/// A job with every string parsed.
pub struct Job {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
    pub spec: JobSpec,
}

impl Job {
    pub fn from_json(text: &str) -> Result<Job> {
        let spec: JobSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("invalid job document: {e}"),
        })?;
        Job::from_spec(spec)
    }

    pub fn from_spec(spec: JobSpec) -> Result<Job> {
        let ring = Ring::new(spec.variables.iter().cloned())?;
        let generators = spec
            .generators
            .iter()
            .map(|g| parse_polynomial(g, &ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Job { ring, generators, spec })
    }

    pub fn start_order(&self) -> Result<TermOrder> {
        self.required(&self.spec.start_order, "start_order")
    }

    pub fn target_order(&self) -> Result<TermOrder> {
        self.required(&self.spec.target_order, "target_order")
    }

    pub fn single_order(&self) -> Result<TermOrder> {
        let spec = self.spec.order.as_ref().or(self.spec.start_order.as_ref());
        match spec {
            Some(s) => s.resolve(&self.ring),
            None => Err(Error::InvalidOrder("job needs `order` or `start_order`".into())),
        }
    }

    fn required(&self, spec: &Option<OrderSpec>, key: &str) -> Result<TermOrder> {
        spec.as_ref()
            .ok_or_else(|| Error::InvalidOrder(format!("job needs `{key}`")))?
            .resolve(&self.ring)
    }

    pub fn weight(&self) -> Result<WeightVector> {
        let w = self
            .spec
            .weight
            .as_ref()
            .ok_or_else(|| Error::InvalidWeight("job needs `weight`".into()))?;
        if w.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), found: w.len() });
        }
        WeightVector::new(w.iter().map(RationalValue::to_rational).collect::<Result<_>>()?)
    }

    pub fn polynomial(&self) -> Result<Polynomial> {
        let src = self
            .spec
            .polynomial
            .as_ref()
            .ok_or_else(|| Error::parse(0, "job needs `polynomial`"))?;
        parse_polynomial(src, &self.ring)
    }

    pub fn guards(&self) -> SagbiGuards {
        let mut g = SagbiGuards::default();
        if let Some(spec) = &self.spec.guards {
            if let Some(v) = spec.max_passes {
                g.max_passes = v;
            }
            if let Some(v) = spec.max_degree {
                g.max_degree = v;
            }
            if let Some(v) = spec.max_steps {
                g.max_steps = v;
            }
        }
        g
    }

    pub fn validate_input(&self) -> bool {
        self.spec.flags.as_ref().and_then(|f| f.validate_input).unwrap_or(true)
    }
}
