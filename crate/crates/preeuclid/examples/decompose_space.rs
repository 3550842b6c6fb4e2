//! Split a space into orthogonal, operator-invariant blocks read off the
//! weak components of the associated graph, then re-verify every
//! structural claim of the decomposition.
//!
//! Run with: cargo run --example decompose_space

use preeuclid::{decompose, verify_decomposition, Field, Matrix, Scalar, StructureSpec};

fn main() {
    // Six-dimensional rational space with three weak components:
    // {e1, e2, e3}, {e4}, {e5, e6}.
    let mut gram = Matrix::zero(6, 6, Field::Rational);
    gram.set(0, 1, Scalar::one(Field::Rational));
    gram.set(4, 5, Scalar::one(Field::Rational));
    let op = Matrix::from_ints(
        Field::Rational,
        &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 1, 0],
        ],
    );
    let labels: Vec<String> = (1..=6).map(|i| format!("e{i}")).collect();
    let spec = StructureSpec::new(labels, gram, op).expect("valid structure");

    let d = decompose(&spec).expect("decomposition verifies");
    println!("signature (block dimensions, descending): {:?}", d.signature());
    for (i, comp) in d.components().iter().enumerate() {
        println!("block {}: {{{}}}", i + 1, comp.labels.join(", "));
    }

    // The operator splits into one summand per block; they add up to f.
    let mut total = Matrix::zero(6, 6, Field::Rational);
    for comp in d.components() {
        total = total.add(&comp.summand_full).unwrap();
    }
    assert_eq!(&total, spec.op());
    println!("operator summands add up to f: true");

    let report = verify_decomposition(&spec, &d);
    for check in &report.checks {
        println!("check {:<25} {}", check.name, if check.pass { "pass" } else { "FAIL" });
    }
}
