//! Decide indecomposability, weak symmetry, and minimality for a space,
//! cross-checking each fast decision against its brute-force oracle.
//!
//! Run with: cargo run --example check_properties

use preeuclid::{
    indecomposable_oracle, is_f_indecomposable, is_minimal, minimality_oracle, AssocGraph, Field,
    Matrix, StructureSpec,
};

fn main() {
    // The form is a directed 4-cycle e1 -> e2 -> e3 -> e4 -> e1 and the
    // operator is the identity: connected and weakly symmetric, yet
    // span{e1} is an invariant inherited-basis subspace.
    let gram = Matrix::from_ints(
        Field::Rational,
        &[
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
        ],
    );
    let op = Matrix::identity(4, Field::Rational);
    let labels: Vec<String> = (1..=4).map(|i| format!("e{i}")).collect();
    let spec = StructureSpec::new(labels, gram, op).expect("valid structure");
    let graph = AssocGraph::build(&spec);

    let indecomposable = is_f_indecomposable(&spec);
    println!(
        "f-indecomposable: {indecomposable} (oracle agrees: {})",
        indecomposable == indecomposable_oracle(&spec)
    );

    let (weakly_symmetric, violation) = graph.is_weakly_symmetric();
    println!("weakly symmetric: {weakly_symmetric}");
    if let Some((u, v)) = violation {
        println!(
            "  edge ({}, {}) has no directed path back",
            spec.labels()[u],
            spec.labels()[v]
        );
    }

    let (minimal, witness) = is_minimal(&spec);
    println!(
        "minimal: {minimal} (oracle agrees: {})",
        minimal == minimality_oracle(&spec)
    );
    if let Some(indices) = witness {
        let names: Vec<&str> = indices.iter().map(|&i| spec.labels()[i].as_str()).collect();
        println!("  proper invariant subspace: span{{{}}}", names.join(", "));
    }
}
