//! The on-disk ring document: a single JSON file carrying the full tables,
//! validated (or provenance-trusted) on load.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::ring::{validate_ring, AxiomViolation, FiniteRing, Provenance, RawRing};

pub const FORMAT_VERSION: u32 = 1;

/// Orders above this are only accepted with constructor provenance; the full
/// cubic axiom scan stops being a reasonable per-load cost beyond it.
pub const FULL_SCAN_ORDER_CAP: usize = 512;

/// Hard ceiling on loadable orders unless the caller raises it explicitly.
pub const DEFAULT_LOAD_CAP: usize = 1024;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingDocument {
    pub format_version: u32,
    pub order: usize,
    /// Row-major `order * order` addition table; zero must be index 0
    /// (documents violating this are re-indexed on load).
    pub add: Vec<usize>,
    /// Row-major `order * order` multiplication table.
    pub mul: Vec<usize>,
    pub one: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("order {order} exceeds the load cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("order {order} requires constructor provenance above the full-scan cap {cap}")]
    TooBigForRawImport { order: usize, cap: usize },
    #[error("document has no additive identity")]
    NoZero,
    #[error("ring axioms violated: {0:?}")]
    Axioms(Vec<AxiomViolation>),
}

impl RingDocument {
    pub fn from_ring(r: &FiniteRing, note: Option<String>) -> RingDocument {
        RingDocument {
            format_version: FORMAT_VERSION,
            order: r.order(),
            add: r.add_table(),
            mul: r.mul_table(),
            one: r.one(),
            labels: r.labels().map(|l| l.to_vec()),
            provenance: r.provenance(),
            note,
        }
    }

    /// Validates (or provenance-accepts) the document into a ring.
    ///
    /// Raw imports of order up to [`FULL_SCAN_ORDER_CAP`] get the complete
    /// cubic axiom scan. Constructor-provenance documents skip it: those
    /// tables come from property-tested constructors, and the load still
    /// fails if the basic group structure is broken.
    pub fn into_ring(self, cap: usize) -> Result<FiniteRing, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version));
        }
        if self.order > cap {
            return Err(DocumentError::OrderCap {
                order: self.order,
                cap,
            });
        }
        let doc = self.reindex_zero()?;
        match doc.provenance {
            Provenance::RawImport => {
                if doc.order > FULL_SCAN_ORDER_CAP {
                    return Err(DocumentError::TooBigForRawImport {
                        order: doc.order,
                        cap: FULL_SCAN_ORDER_CAP,
                    });
                }
                validate_ring(&RawRing {
                    order: doc.order,
                    add: doc.add,
                    mul: doc.mul,
                    one: doc.one,
                    labels: doc.labels,
                })
                .map_err(DocumentError::Axioms)
            }
            Provenance::ConstructorBuilt => {
                let n = doc.order;
                if doc.add.len() != n * n
                    || doc.mul.len() != n * n
                    || doc.add.iter().chain(doc.mul.iter()).any(|&v| v >= n)
                    || doc.one >= n
                {
                    return Err(DocumentError::Axioms(vec![AxiomViolation::BadShape {
                        order: n,
                    }]));
                }
                let add = doc.add.clone();
                let mul = doc.mul.clone();
                Ok(FiniteRing::build_with(
                    n,
                    doc.one,
                    doc.labels,
                    |a, b| add[a * n + b],
                    |a, b| mul[a * n + b],
                ))
            }
        }
    }

    /// Finds the additive identity and, if it is not index 0, swaps it into
    /// place so the canonical-form invariant holds.
    fn reindex_zero(self) -> Result<RingDocument, DocumentError> {
        let n = self.order;
        if n == 0 || self.add.len() != n * n {
            return Err(DocumentError::Axioms(vec![AxiomViolation::BadShape {
                order: n,
            }]));
        }
        if self.add.iter().chain(self.mul.iter()).any(|&v| v >= n) {
            // Leave range errors for the validator, which reports positions.
            return Ok(self);
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| self.add[z * n + a] == a && self.add[a * n + z] == a));
        let Some(z) = zero else {
            return Err(DocumentError::NoZero);
        };
        if z == 0 {
            return Ok(self);
        }
        // Transpose indices 0 and z.
        let sigma = |x: usize| -> usize {
            if x == 0 {
                z
            } else if x == z {
                0
            } else {
                x
            }
        };
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = sigma(self.add[sigma(a) * n + sigma(b)]);
                mul[a * n + b] = sigma(self.mul[sigma(a) * n + sigma(b)]);
            }
        }
        let labels = self.labels.map(|ls| {
            let mut out = ls.clone();
            out.swap(0, z);
            out
        });
        Ok(RingDocument {
            add,
            mul,
            one: sigma(self.one),
            labels,
            ..self
        })
    }
}

pub fn save_ring(r: &FiniteRing, path: &Path, note: Option<String>) -> Result<(), DocumentError> {
    let doc = RingDocument::from_ring(r, note);
    let json = serde_json::to_string_pretty(&doc)?;
    std::fs::write(path, json)?;
    Ok(())
}

pub fn load_ring(path: &Path, cap: usize) -> Result<FiniteRing, DocumentError> {
    let text = std::fs::read_to_string(path)?;
    let doc: RingDocument = serde_json::from_str(&text)?;
    doc.into_ring(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{zmod, OrderCap};

    #[test]
    fn round_trip_z4() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        let dir = std::env::temp_dir().join("ringlab-doc-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("z4.json");
        save_ring(&z4, &path, Some("test".into())).unwrap();
        let back = load_ring(&path, DEFAULT_LOAD_CAP).unwrap();
        assert_eq!(back.add_table(), z4.add_table());
        assert_eq!(back.mul_table(), z4.mul_table());
        assert_eq!(back.one(), z4.one());
        assert_eq!(back.content_hash(), z4.content_hash());
    }

    #[test]
    fn raw_import_is_fully_scanned() {
        let z4 = zmod(4, OrderCap::default()).unwrap();
        let mut doc = RingDocument::from_ring(&z4, None);
        doc.provenance = Provenance::RawImport;
        doc.mul[1 * 4 + 1] = 0; // break one*one
        let err = doc.into_ring(DEFAULT_LOAD_CAP).unwrap_err();
        assert!(matches!(err, DocumentError::Axioms(_)));
    }

    #[test]
    fn nonzero_zero_gets_reindexed() {
        // Z3 with elements relabeled by the swap 0 <-> 2.
        let z3 = zmod(3, OrderCap::default()).unwrap();
        let sigma = |x: usize| [2usize, 1, 0][x];
        let mut add = vec![0; 9];
        let mut mul = vec![0; 9];
        for a in 0..3 {
            for b in 0..3 {
                add[a * 3 + b] = sigma(z3.add(sigma(a), sigma(b)));
                mul[a * 3 + b] = sigma(z3.mul(sigma(a), sigma(b)));
            }
        }
        let doc = RingDocument {
            format_version: FORMAT_VERSION,
            order: 3,
            add,
            mul,
            one: 1,
            labels: None,
            provenance: Provenance::RawImport,
            note: None,
        };
        let ring = doc.into_ring(DEFAULT_LOAD_CAP).unwrap();
        assert_eq!(ring.add_table(), z3.add_table());
        assert_eq!(ring.mul_table(), z3.mul_table());
    }

    #[test]
    fn oversized_raw_import_rejected() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let mut doc = RingDocument::from_ring(&z2, None);
        doc.order = 600; // claim a huge order with mismatched tables
        doc.provenance = Provenance::RawImport;
        let err = doc.into_ring(DEFAULT_LOAD_CAP).unwrap_err();
        assert!(matches!(err, DocumentError::TooBigForRawImport { .. }));
    }

    #[test]
    fn load_cap_precedes_everything() {
        let z2 = zmod(2, OrderCap::default()).unwrap();
        let mut doc = RingDocument::from_ring(&z2, None);
        doc.order = 5000;
        let err = doc.into_ring(DEFAULT_LOAD_CAP).unwrap_err();
        assert!(matches!(err, DocumentError::OrderCap { .. }));
    }

    #[test]
    fn document_without_zero_rejected() {
        let doc = RingDocument {
            format_version: FORMAT_VERSION,
            order: 2,
            add: vec![1, 1, 1, 1],
            mul: vec![0, 0, 0, 0],
            one: 1,
            labels: None,
            provenance: Provenance::RawImport,
            note: None,
        };
        assert!(matches!(
            doc.into_ring(DEFAULT_LOAD_CAP).unwrap_err(),
            DocumentError::NoZero
        ));
    }
}
