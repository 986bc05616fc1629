//! The acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`).
//!
//! Run with `cargo test -p parmon-core --release --test acceptance`.

use parmon_core::verify::{self, CheckOutcome, VerifyConfig};

fn report(outcome: CheckOutcome) {
    println!("{}", outcome.line());
    if let Some(f) = &outcome.failure {
        println!("      failure: {f}");
    }
    assert!(outcome.passed, "{} failed", outcome.id);
}

fn cfg() -> VerifyConfig {
    VerifyConfig { seed: 7, trials: 2 }
}

#[test]
fn criterion_1_young_unit_oracle() {
    report(verify::criterion1_young_oracle());
}

#[test]
fn criterion_2_order2_matrix_units() {
    report(verify::criterion2_order2_units());
}

#[test]
fn criterion_3_dimension_decompositions() {
    report(verify::criterion3_dimensions());
}

#[test]
fn criterion_4_bijection_fixtures_and_round_trips() {
    report(verify::criterion4_bijections());
}

#[test]
fn criterion_5_multiplication_table_fixture() {
    report(verify::criterion5_table_fixture());
}

#[test]
fn criterion_6_monoid_closure() {
    report(verify::criterion6_closure(cfg()));
}

#[test]
fn criterion_7_transition_matrix_oracle() {
    let (outcome, _report) = verify::criterion7_transition_matrix();
    report(outcome);
}

#[test]
fn criterion_8_monoid_axioms() {
    report(verify::criterion8_monoid_axioms(cfg()));
}
