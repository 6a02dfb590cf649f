//! Acceptance suite: every numbered criterion at its stated range and
//! tolerance (all tolerances are exact equality). Each test prints one
//! pass/fail line; run with `--nocapture` to see them on success.

use leibniz_core::suite::{
    criterion_derivation_matrices, criterion_left_catalog, criterion_nil_independence,
    criterion_nilradical, criterion_oracle_crosschecks, criterion_prenormalization,
    criterion_published_series, criterion_right_catalog, criterion_structural_laws,
    criterion_transform_replay, CriterionResult,
};

const SEED: u64 = 42;
const SAMPLES: usize = 20;
const NS_MAIN: [usize; 5] = [4, 5, 6, 7, 8];
const NS_WIDE: [usize; 7] = [4, 5, 6, 7, 8, 9, 10];
const NS_REPLAY: [usize; 2] = [5, 6];

fn assert_criterion(result: CriterionResult) {
    println!(
        "criterion {:>2} ({}): {} [{} checks]",
        result.index,
        result.name,
        if result.passed { "PASS" } else { "FAIL" },
        result.checks
    );
    assert!(
        result.passed,
        "criterion {} ({}) failed:\n{}",
        result.index,
        result.name,
        result.failures.join("\n")
    );
}

#[test]
fn criterion_01_nilradical_invariants() {
    assert_criterion(criterion_nilradical(&NS_WIDE));
}

#[test]
fn criterion_02_right_catalog_identity() {
    assert_criterion(criterion_right_catalog(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_03_left_catalog_identity() {
    assert_criterion(criterion_left_catalog(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_04_published_series() {
    assert_criterion(criterion_published_series(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_05_prenormalization_families() {
    assert_criterion(criterion_prenormalization(
        &NS_MAIN, SAMPLES, SEED, true, false,
    ));
}

#[test]
fn criterion_05b_prenormalization_strict_transcription() {
    // The ledger is empty, so verbatim transcription must already pass.
    assert_criterion(criterion_prenormalization(
        &NS_MAIN, SAMPLES, SEED, true, true,
    ));
}

#[test]
fn criterion_06_derivation_matrices() {
    assert_criterion(criterion_derivation_matrices(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_07_nil_independence() {
    // Outer pairs at n = 5..8; the inner-nilpotency side runs on 4..8.
    assert_criterion(criterion_nil_independence(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_08_structural_laws() {
    assert_criterion(criterion_structural_laws(&NS_MAIN, SAMPLES, SEED, true));
}

#[test]
fn criterion_09_transformation_replay() {
    assert_criterion(criterion_transform_replay(&NS_REPLAY, 5, SEED, true));
}

#[test]
fn criterion_10_oracle_cross_checks() {
    assert_criterion(criterion_oracle_crosschecks(SEED));
}
