//! The JSON job description shared by `--spec` files, stdin and the flag
//! interface.

use std::io::Read;
use std::sync::Arc;

use jetscheme::{Field, Ideal, MonomialOrder, PolyRing};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default = "grevlex")]
    pub order: String,
    #[serde(default)]
    pub modulus: Option<u32>,
}

fn grevlex() -> String {
    "grevlex".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub ring: RingSpec,
    pub generators: Vec<String>,
    #[serde(default)]
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl JobSpec {
    /// Reads a spec from a path, or from stdin for `-`.
    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {path}: {e}")))?
        };
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid job spec: {e}")))
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>, CliError> {
        for v in &self.ring.vars {
            if has_jet_suffix(v) {
                return Err(CliError::Input(format!(
                    "variable `{v}` ends in _<digits>, which is reserved for jet variables"
                )));
            }
        }
        let order = match self.ring.order.as_str() {
            "grevlex" => MonomialOrder::Grevlex,
            "lex" => MonomialOrder::Lex,
            other => return Err(CliError::Input(format!("unknown monomial order `{other}`"))),
        };
        let field = match self.ring.modulus {
            None => Field::Rational,
            Some(p) => Field::prime(p).map_err(|e| CliError::Input(e.to_string()))?,
        };
        PolyRing::new(self.ring.vars.iter().cloned(), order, field).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn ideal(&self) -> Result<Ideal, CliError> {
        let ring = self.ring()?;
        Ideal::parse(&ring, &self.generators).map_err(|e| CliError::Input(e.to_string()))
    }
}

/// `x_1`, `foo_23`: names the jet ring would produce itself.
pub fn has_jet_suffix(name: &str) -> bool {
    match name.rsplit_once('_') {
        Some((_, tail)) => !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()),
        None => false,
    }
}

/// Splits a comma-separated flag value, dropping surrounding blanks.
pub fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(|p| p.trim().to_string())
        .filter(|p| !p.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"ring":{"vars":["x","y"],"order":"grevlex","modulus":null},"generators":["x*y"],"m":2}"#;
        let spec = JobSpec::from_json(text).unwrap();
        assert_eq!(spec.m, 2);
        assert_eq!(serde_json::to_string(&spec).unwrap(), text);
        let with_point = JobSpec {
            point: Some(vec!["0".into(), "1/2".into()]),
            ..spec
        };
        let again = JobSpec::from_json(&serde_json::to_string(&with_point).unwrap()).unwrap();
        assert_eq!(again, with_point);
    }

    #[test]
    fn jet_suffixes() {
        assert!(has_jet_suffix("x_0"));
        assert!(has_jet_suffix("abc_12"));
        assert!(!has_jet_suffix("x_"));
        assert!(!has_jet_suffix("x_a1"));
        assert!(!has_jet_suffix("x1"));
    }

    #[test]
    fn rejects_reserved_names() {
        let spec = JobSpec::from_json(r#"{"ring":{"vars":["x_1"]},"generators":[]}"#).unwrap();
        assert!(matches!(spec.ring(), Err(CliError::Input(_))));
    }

    #[test]
    fn unknown_fields_are_errors() {
        assert!(JobSpec::from_json(r#"{"ring":{"vars":["x"]},"generators":[],"q":1}"#).is_err());
    }
}
