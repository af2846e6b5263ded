//! The acceptance suite: one test per verification criterion, each printing a
//! single `criterion N: PASS (x.y s)` line (visible under `--nocapture`) and
//! failing with the first mismatch spelled out.
//!
//! These are the same checks the `verify --suite desk` subcommand runs; the
//! seed is fixed so the whole suite is reproducible bit for bit.

use equiproj::verify::criteria;
use std::time::Instant;

const SEED: u64 = 42;

fn run(number: usize) {
    let (name, check) = criteria()[number - 1];
    let start = Instant::now();
    let outcome = check(SEED);
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => println!("criterion {number}: PASS ({seconds:.1} s)"),
        Err(e) => {
            println!("criterion {number}: FAIL ({seconds:.1} s)");
            panic!("criterion {number} ({name}): {e}");
        }
    }
}

#[test]
fn criterion_1_projected_face_counts_type_a() {
    run(1);
}

#[test]
fn criterion_2_projected_face_counts_type_b() {
    run(2);
}

#[test]
fn criterion_3_belt_formula_specializations() {
    run(3);
}

#[test]
fn criterion_4_characteristic_polynomials() {
    run(4);
}

#[test]
fn criterion_5_face_vectors_and_euler_relation() {
    run(5);
}

#[test]
fn criterion_6_angle_sum_grids() {
    run(6);
}

#[test]
fn criterion_7_subspace_intersection_counts() {
    run(7);
}

#[test]
fn criterion_8_zonotope_characterization() {
    run(8);
}

#[test]
fn criterion_9_monte_carlo_angles() {
    run(9);
}
