//! Erratum ledger for the transcribed bracket tables.
//!
//! Catalog brackets are transcribed verbatim from the classification. If an
//! identity check were to fail for a family at all sampled parameters, the
//! offending coefficient would be re-derived at fixed small `n` by an
//! independent linear solve, the correction applied here, and the verbatim
//! transcription kept reachable through strict mode.
//!
//! Every transcribed table currently passes its identity at all sampled
//! parameters, so the ledger is empty and strict mode builds the same
//! tensors as the default mode.

use super::{AlgebraDescriptor, Family};
use crate::tensor::StructureTensor;

/// One recorded correction to a transcribed coefficient.
#[derive(Clone, Copy, Debug)]
pub struct PatchEntry {
    pub family: Family,
    /// Which bracket table line the correction touches.
    pub locus: &'static str,
    /// The coefficient as printed.
    pub original: &'static str,
    /// The coefficient actually required by the identity.
    pub corrected: &'static str,
    /// How the correction was re-derived.
    pub justification: &'static str,
}

/// All recorded corrections. Empty: the transcription passes as printed.
pub static LEDGER: &[PatchEntry] = &[];

pub fn entries_for(family: Family) -> impl Iterator<Item = &'static PatchEntry> {
    LEDGER.iter().filter(move |e| e.family == family)
}

/// Applies ledger corrections to a freshly built tensor (no-op while the
/// ledger is empty).
pub(super) fn apply(_desc: &AlgebraDescriptor, _tensor: &mut StructureTensor) {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_is_empty() {
        assert!(LEDGER.is_empty());
        assert_eq!(entries_for(Family::G1).count(), 0);
    }
}
