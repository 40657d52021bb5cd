//! Certificate files: JSON documents naming a configuration and a tuple of
//! roots with multiplicities.
//!
//! ```json
//! {"family": "E", "rank": 6, "parabolic_omitted_index": 1, "d": 1,
//!  "entries": [{"root_coords": [1, 0, 1, 1, 0, 0], "multiplicity": 1}]}
//! ```

use std::fs;
use std::path::Path;

use lmp_core::vanishing::{Certificate, CertificateEntry};
use lmp_core::{Parabolic, Root, RootSystemType};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};
use crate::report::RootEntry;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub family: String,
    pub rank: usize,
    pub parabolic_omitted_index: usize,
    pub d: usize,
    pub entries: Vec<RootEntry>,
}

impl CertificateFile {
    pub fn from_certificate(cert: &Certificate) -> Result<Self> {
        Ok(Self {
            family: cert.kind.family().to_string(),
            rank: cert.kind.rank(),
            parabolic_omitted_index: cert.parabolic.omitted_index()? + 1,
            d: cert.d + 1,
            entries: cert
                .entries
                .iter()
                .map(|e| RootEntry {
                    root_coords: e.root.coords().to_vec(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
        })
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        let kind = RootSystemType::new(self.family.parse()?, self.rank)?;
        let n = self.rank;
        let bad = |msg: String| VerifyError::CertificateFile(msg);
        if !(1..=n).contains(&self.parabolic_omitted_index) {
            return Err(bad(format!(
                "parabolic_omitted_index {} out of range 1..={n}",
                self.parabolic_omitted_index
            )));
        }
        if !(1..=n).contains(&self.d) {
            return Err(bad(format!("d = {} out of range 1..={n}", self.d)));
        }
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if e.root_coords.len() != n {
                    return Err(bad(format!(
                        "entry {} has {} coordinates, expected {n}",
                        i + 1,
                        e.root_coords.len()
                    )));
                }
                Ok(CertificateEntry::new(
                    Root::new(e.root_coords.clone()),
                    e.multiplicity,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            kind,
            parabolic: Parabolic::maximal(n, self.parabolic_omitted_index - 1)?,
            d: self.d - 1,
            entries,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| VerifyError::CertificateFile(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| VerifyError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()? + "\n").map_err(|source| VerifyError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}
