//! JSON space documents.
//!
//! Two forms, exactly one of which must be present:
//!
//! ```json
//! {"points": ["a", "b"], "leq": [["a", "b"]]}
//! {"points": ["a", "b"], "closed_sets": [[], ["a"], ["a", "b"]]}
//! ```
//!
//! `leq` pairs `[x, y]` mean `x ≤ y`; reflexive pairs may be omitted. A
//! non-transitive relation is rejected with a witness triple unless the
//! caller asks for the reflexive-transitive closure to be taken.

use alextop_core::{specialisation_preorder, validate_topology, PointSet, Preorder, PreorderError, TopologyError};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    #[serde(default)]
    pub leq: Option<Vec<(String, String)>>,
    #[serde(default)]
    pub closed_sets: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("exactly one of \"leq\" and \"closed_sets\" must be present")]
    AmbiguousForm,
    #[error("duplicate point name {0:?}")]
    DuplicatePoint(String),
    #[error("unknown point name {0:?}")]
    UnknownPoint(String),
    #[error("{0}")]
    Preorder(PreorderError),
    #[error("{0}")]
    Topology(#[from] TopologyError),
}

impl From<PreorderError> for FormatError {
    fn from(e: PreorderError) -> Self {
        FormatError::Preorder(e)
    }
}

impl SpaceDocument {
    pub fn parse(json: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(json)?)
    }

    /// Resolves the document into a labeled preorder. `close` takes the
    /// reflexive-transitive closure of a `leq` edge list instead of
    /// rejecting a non-transitive one.
    pub fn into_preorder(self, close: bool) -> Result<Preorder, FormatError> {
        let n = self.points.len();
        let mut index = std::collections::HashMap::new();
        for (i, name) in self.points.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(FormatError::DuplicatePoint(name.clone()));
            }
        }
        let resolve = |name: &String| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| FormatError::UnknownPoint(name.clone()))
        };
        let p = match (self.leq, self.closed_sets) {
            (Some(pairs), None) => {
                let pairs: Vec<(usize, usize)> = pairs
                    .iter()
                    .map(|(x, y)| Ok((resolve(x)?, resolve(y)?)))
                    .collect::<Result<_, FormatError>>()?;
                if close {
                    Preorder::from_pairs_closed(n, &pairs)?
                } else {
                    Preorder::from_pairs(n, &pairs)?
                }
            }
            (None, Some(families)) => {
                let sets: Vec<PointSet> = families
                    .iter()
                    .map(|members| {
                        let mut s = PointSet::empty(n);
                        for name in members {
                            s.insert(resolve(name)?);
                        }
                        Ok(s)
                    })
                    .collect::<Result<_, FormatError>>()?;
                specialisation_preorder(&validate_topology(&sets, n)?)
            }
            _ => return Err(FormatError::AmbiguousForm),
        };
        Ok(p.with_labels(self.points))
    }
}

pub fn load_space(json: &str, close: bool) -> Result<Preorder, FormatError> {
    SpaceDocument::parse(json)?.into_preorder(close)
}

/// `{a,b}` with the preorder's labels, point indices when unlabeled.
pub fn set_display(s: &PointSet, labels: Option<&[String]>) -> String {
    let names: Vec<String> = s
        .iter()
        .map(|x| match labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        })
        .collect();
    format!("{{{}}}", names.join(","))
}

pub fn point_display(x: usize, labels: Option<&[String]>) -> String {
    match labels {
        Some(l) => l[x].clone(),
        None => x.to_string(),
    }
}
