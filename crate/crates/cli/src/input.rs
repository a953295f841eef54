//! Arrangement files: either explicit points or a seeded generator.

use linecone::PointSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub general: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Generator>,
}

impl ArrangementFile {
    /// Parses the file text. Errors carry the line and column from the
    /// JSON reader, or name the offending field.
    pub fn from_json(text: &str) -> Result<Self, String> {
        let file: ArrangementFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        match (&file.points, &file.generator) {
            (Some(_), Some(_)) => Err("give either \"points\" or \"generator\", not both".into()),
            (None, None) => Err("missing field: expected \"points\" or \"generator\"".into()),
            _ => Ok(file),
        }
    }

    /// Replaces the generator seed, if the file uses a generator.
    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        if let (Some(g), Some(s)) = (self.generator.as_mut(), seed) {
            g.seed = s;
        }
        self
    }

    /// SHA-256 of the compact JSON serialization.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("serializable");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn point_set(&self) -> linecone::Result<PointSet> {
        match (&self.points, &self.generator) {
            (Some(pts), _) => PointSet::parse(pts),
            (None, Some(g)) => PointSet::random_general(g.general, g.seed),
            (None, None) => unreachable!("validated in from_json"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_survives_a_round_trip() {
        let f = ArrangementFile::from_json(r#"{"points": [["1","0","0"], ["0","1/2","0"]]}"#).unwrap();
        let echoed = serde_json::to_string_pretty(&f).unwrap();
        assert_eq!(ArrangementFile::from_json(&echoed).unwrap().digest(), f.digest());
    }

    #[test]
    fn rejects_ambiguous_or_empty_files() {
        assert!(ArrangementFile::from_json("{}").is_err());
        assert!(ArrangementFile::from_json(r#"{"points": [], "generator": {"general": 3, "seed": 1}}"#).is_err());
        assert!(ArrangementFile::from_json(r#"{"pts": []}"#).is_err());
    }

    #[test]
    fn seed_flag_only_touches_generators() {
        let g = ArrangementFile::from_json(r#"{"generator": {"general": 3, "seed": 1}}"#).unwrap();
        assert_eq!(g.with_seed(Some(9)).generator.unwrap().seed, 9);
        let p = ArrangementFile::from_json(r#"{"points": [["1","0","0"]]}"#).unwrap();
        assert_eq!(p.clone().with_seed(Some(9)), p);
    }
}
