//! Braid systems: ordered tuples of braids of a common degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::garside::NormalForm;

/// On-disk form of a braid system. Components use the signed-token word
/// syntax, e.g. `{"degree": 4, "components": ["1,2,-3", "3", "-2", "-1"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub degree: usize,
    pub components: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl SystemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| BraidError::Format(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("system files always serialize")
    }

    pub fn to_system(&self) -> Result<BraidSystem> {
        let components = self
            .components
            .iter()
            .map(|c| BraidWord::parse(c, self.degree))
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::new(self.degree, components)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SystemFile", into = "SystemFile")]
pub struct BraidSystem {
    degree: usize,
    components: Vec<BraidWord>,
}

impl TryFrom<SystemFile> for BraidSystem {
    type Error = BraidError;
    fn try_from(file: SystemFile) -> Result<Self> {
        file.to_system()
    }
}

impl From<BraidSystem> for SystemFile {
    fn from(s: BraidSystem) -> Self {
        s.to_file(None)
    }
}

impl BraidSystem {
    pub fn new(degree: usize, components: Vec<BraidWord>) -> Result<Self> {
        if components.is_empty() {
            return Err(BraidError::EmptySystem);
        }
        for c in &components {
            if c.degree() != degree {
                return Err(BraidError::DegreeMismatch {
                    left: degree,
                    right: c.degree(),
                });
            }
        }
        Ok(BraidSystem { degree, components })
    }

    /// Parses each component with the word syntax.
    pub fn parse(degree: usize, components: &[&str]) -> Result<Self> {
        let words = components
            .iter()
            .map(|c| BraidWord::parse(c, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, words)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[BraidWord] {
        &self.components
    }

    pub fn into_components(self) -> Vec<BraidWord> {
        self.components
    }

    /// The ordered product `b_1 ⋯ b_n`.
    pub fn trace(&self) -> BraidWord {
        let letters = self
            .components
            .iter()
            .flat_map(|c| c.letters().iter().copied())
            .collect();
        BraidWord::from_parts_unchecked(self.degree, letters)
    }

    pub fn normal_forms(&self) -> Vec<NormalForm> {
        self.components.iter().map(NormalForm::from_word).collect()
    }

    /// Componentwise equality as braids.
    pub fn braids_equal(&self, other: &BraidSystem) -> bool {
        self.degree == other.degree
            && self.len() == other.len()
            && self.normal_forms() == other.normal_forms()
    }

    pub fn to_file(&self, name: Option<String>) -> SystemFile {
        SystemFile {
            degree: self.degree,
            components: self.components.iter().map(|c| c.to_token_string()).collect(),
            name,
        }
    }
}

impl fmt::Display for BraidSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ") in B_{}^{}", self.degree, self.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let text = r#"{"degree": 4, "components": ["1,2,-3", "3", "-2", "-1"], "name": "b"}"#;
        let file = SystemFile::from_json(text).unwrap();
        let s = file.to_system().unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_file(Some("b".into())), file);
        let via_serde: BraidSystem = serde_json::from_str(text).unwrap();
        assert_eq!(via_serde, s);
    }

    #[test]
    fn rejects_bad_files() {
        assert_eq!(
            SystemFile::from_json(r#"{"degree": 3, "components": []}"#).unwrap().to_system(),
            Err(BraidError::EmptySystem)
        );
        assert!(SystemFile::from_json(r#"{"degree": 3, "components": ["3"]}"#)
            .unwrap()
            .to_system()
            .is_err());
        assert!(SystemFile::from_json(r#"{"degree": 3}"#).is_err());
        assert!(SystemFile::from_json("not json").is_err());
    }

    #[test]
    fn trace_is_concatenation() {
        let s = BraidSystem::parse(4, &["1,2,-3", "3", "-2", "-1"]).unwrap();
        assert_eq!(s.trace().letters(), &[1, 2, -3, 3, -2, -1]);
        assert!(crate::garside::is_identity(&s.trace()));
    }
}
