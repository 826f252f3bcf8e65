//! Acceptance suite: one test per criterion, each printing its record line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! records on success; on failure the record is in the panic message.

use hampow_core::batch::{
    check_decomposition_oracle, check_exponent_oracle, check_gk4_certificate,
    check_gk5_lower_bound, check_power_laws, check_prop12_suite, check_prop13_suite,
    check_thm21_structure, check_threshold, CheckResult,
};

const SEED: u64 = 0xACCE97;

fn assert_pass(r: CheckResult) {
    println!("{}", r.record());
    assert!(r.pass, "{}", r.record());
}

#[test]
fn criterion_1_gk4_certificate() {
    assert_pass(check_gk4_certificate());
}

#[test]
fn criterion_2_gk5_lower_bound() {
    assert_pass(check_gk5_lower_bound());
}

#[test]
fn criterion_3_prop12_suite() {
    assert_pass(check_prop12_suite(SEED));
}

#[test]
fn criterion_4_prop13_suite() {
    assert_pass(check_prop13_suite(SEED).0);
}

#[test]
fn criterion_5_decomposition_oracle() {
    assert_pass(check_decomposition_oracle(SEED));
}

#[test]
fn criterion_6_power_laws() {
    assert_pass(check_power_laws(SEED));
}

#[test]
fn criterion_7_exponent_oracle() {
    assert_pass(check_exponent_oracle(SEED));
}

#[test]
fn criterion_8_thm21_structure() {
    let (_, reduced) = check_prop13_suite(SEED);
    assert_pass(check_thm21_structure(&reduced));
}

#[test]
fn criterion_9_threshold() {
    assert_pass(check_threshold());
}
