//! JSON instance files.
//!
//! ```json
//! {
//!   "version": 1,
//!   "matroid": { "kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]] },
//!   "costs": [[1, 2], ["1/2", 0], [3, "-4"]]
//! }
//! ```

use std::io::Read;
use std::path::Path;

use esn_core::matroid::{ElementId, MatroidError, MatroidInstance};
use esn_core::{BiCost, Rational};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        ground_size: usize,
        rank: usize,
    },
    Partition {
        /// Block index of each element.
        blocks: Vec<usize>,
        capacities: Vec<usize>,
    },
    /// Minor of `base` with `delete` removed and `contract` committed.
    View {
        base: Box<MatroidSpec>,
        #[serde(default)]
        delete: Vec<usize>,
        #[serde(default)]
        contract: Vec<usize>,
    },
}

impl MatroidSpec {
    pub fn ground_size(&self) -> usize {
        match self {
            MatroidSpec::Graphic { edges, .. } => edges.len(),
            MatroidSpec::Uniform { ground_size, .. } => *ground_size,
            MatroidSpec::Partition { blocks, .. } => blocks.len(),
            MatroidSpec::View { base, .. } => base.ground_size(),
        }
    }

    pub fn build(&self) -> Result<MatroidInstance, MatroidError> {
        match self {
            MatroidSpec::Graphic { vertices, edges } => MatroidInstance::graphic(*vertices, edges.clone()),
            MatroidSpec::Uniform { ground_size, rank } => MatroidInstance::uniform(*ground_size, *rank),
            MatroidSpec::Partition { blocks, capacities } => {
                MatroidInstance::partition(blocks.clone(), capacities.clone())
            }
            MatroidSpec::View { base, delete, contract } => {
                let ids = |v: &[usize]| v.iter().copied().map(ElementId).collect::<Vec<_>>();
                base.build()?.restrict_contract(&ids(delete), &ids(contract))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub version: u32,
    pub matroid: MatroidSpec,
    /// `(c1, c2)` per element, as integers or "p/q" strings.
    pub costs: Vec<(Rational, Rational)>,
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid instance: {0}")]
    Validation(String),
}

impl From<MatroidError> for InstanceError {
    fn from(e: MatroidError) -> Self {
        InstanceError::Validation(e.to_string())
    }
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        serde_json::from_str(text).map_err(|e| InstanceError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, InstanceError> {
        let mut text = String::new();
        let io = |source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        };
        if path.as_os_str() == "-" {
            std::io::stdin().read_to_string(&mut text).map_err(io)?;
        } else {
            text = std::fs::read_to_string(path).map_err(io)?;
        }
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    /// Validates and builds the matroid and cost vector.
    pub fn build(&self) -> Result<(MatroidInstance, BiCost), InstanceError> {
        if self.version != FORMAT_VERSION {
            return Err(InstanceError::Validation(format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        let m = self.matroid.ground_size();
        if self.costs.len() != m {
            return Err(InstanceError::Validation(format!(
                "matroid has {m} elements but {} cost rows were given",
                self.costs.len()
            )));
        }
        let instance = self.matroid.build()?;
        Ok((instance, BiCost::new(self.costs.clone())))
    }

    /// SHA-256 of the canonical compact JSON, so whitespace and integer vs
    /// string spellings of the same cost do not change it.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("instance serializes");
        hex::encode(Sha256::digest(canonical))
    }
}

/// Reads, parses and validates in one step.
pub fn parse_instance(path: &Path) -> Result<(InstanceFile, MatroidInstance, BiCost), InstanceError> {
    let file = InstanceFile::read(path)?;
    let (instance, costs) = file.build()?;
    Ok((file, instance, costs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use esn_core::matroid::IndependenceOracle;

    const FIG1: &str = r#"{
        "version": 1,
        "matroid": {"kind": "graphic", "vertices": 5, "edges": [[0,1],[0,2],[1,2],[2,3],[2,4],[3,4]]},
        "costs": [[-1, 4], [0, 0], [0, 0], [0, 4], [4, 0], [2, 2]]
    }"#;

    #[test]
    fn parses_graphic() {
        let file = InstanceFile::from_json(FIG1).unwrap();
        let (g, costs) = file.build().unwrap();
        assert_eq!(g.ground_size(), 6);
        assert_eq!(g.rank_of(), 4);
        assert_eq!(costs.c1(ElementId(0)), &Rational::from(-1));
    }

    #[test]
    fn rational_strings_and_digest() {
        let a = InstanceFile::from_json(FIG1).unwrap();
        let b = InstanceFile::from_json(&FIG1.replace("[-1, 4]", r#"["-2/2", "4"]"#)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.digest(), b.digest());
        assert_eq!(InstanceFile::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn count_mismatch_is_rejected() {
        let text = FIG1.replace(", [2, 2]]", "]");
        let file = InstanceFile::from_json(&text).unwrap();
        assert!(matches!(file.build(), Err(InstanceError::Validation(_))));
    }

    #[test]
    fn disconnected_and_bad_denominator() {
        let text = FIG1.replace(r#""vertices": 5"#, r#""vertices": 6"#);
        assert!(matches!(
            InstanceFile::from_json(&text).unwrap().build(),
            Err(InstanceError::Validation(_))
        ));
        let text = FIG1.replace("[0, 4], [4, 0]", r#"["1/0", 4], [4, 0]"#);
        match InstanceFile::from_json(&text) {
            Err(InstanceError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn view_and_partition_kinds() {
        let text = r#"{"version": 1,
            "matroid": {"kind": "view", "base": {"kind": "partition", "blocks": [0,0,1,1], "capacities": [1,2]}, "contract": [2]},
            "costs": [[1,1],[2,2],[3,3],[4,4]]}"#;
        let (g, _) = InstanceFile::from_json(text).unwrap().build().unwrap();
        assert_eq!(g.rank_of(), 2);
        let text = r#"{"version": 1, "matroid": {"kind": "partition", "blocks": [0,3], "capacities": [1]}, "costs": [[1,1],[2,2]]}"#;
        assert!(InstanceFile::from_json(text).unwrap().build().is_err());
    }
}
