//! Runs every acceptance criterion at its pinned tolerance and time budget,
//! printing one PASS/FAIL line each. `cargo test -p sl2cp --test acceptance -- --nocapture`
//! shows the lines.

use std::time::Instant;

use sl2cp::acceptance::{run_criterion, Config, CRITERIA, MIN_PROPERTY_CASES, TOLERANCE};

fn criterion(id: u8) {
    let target = CRITERIA[id as usize - 1];
    assert_eq!(target.id, id);
    let start = Instant::now();
    let outcome = run_criterion(id, &Config::default());
    let elapsed = start.elapsed();
    let in_budget = elapsed <= target.budget;
    let pass = outcome.passed && in_budget;
    println!(
        "{} criterion {} ({}): {} checks, tolerance {}, {:.2}s of {}s budget",
        if pass { "PASS" } else { "FAIL" },
        id,
        target.name,
        outcome.checks,
        TOLERANCE,
        elapsed.as_secs_f64(),
        target.budget.as_secs(),
    );
    for f in outcome.failures.iter().take(10) {
        println!("    {}", f);
    }
    assert!(
        outcome.passed,
        "criterion {} failed: {:?}",
        id, outcome.failures
    );
    assert!(
        in_budget,
        "criterion {} took {:?}, budget {:?}",
        id, elapsed, target.budget
    );
    if id == 9 {
        assert!(outcome.checks >= MIN_PROPERTY_CASES);
    }
}

#[test]
fn criterion_1_irreducible_formula() {
    criterion(1);
}

#[test]
fn criterion_2_specialized_product_identity() {
    criterion(2);
}

#[test]
fn criterion_3_bijection() {
    criterion(3);
}

#[test]
fn criterion_4_tensor_three_way_identity() {
    criterion(4);
}

#[test]
fn criterion_5_monoid_laws() {
    criterion(5);
}

#[test]
fn criterion_6_symmetry_identity() {
    criterion(6);
}

#[test]
fn criterion_7_conjugation_construction() {
    criterion(7);
}

#[test]
fn criterion_8_adjoint_restriction() {
    criterion(8);
}

#[test]
fn criterion_9_property_suites() {
    criterion(9);
}
