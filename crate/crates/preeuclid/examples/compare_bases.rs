//! Compare two bases of the same space: graph isomorphism between the two
//! associated graphs, decomposition signatures, and an exhaustive search
//! for an f-equivalence witness, combined into one verdict.
//!
//! Run with: cargo run --example compare_bases

use preeuclid::{compare_bases, Field, Matrix, StructureSpec, Verdict};

fn report(title: &str, spec: &StructureSpec, t: &Matrix, new_labels: Vec<String>) {
    println!("== {title} ==");
    let r = compare_bases(spec, t, new_labels).expect("comparison runs");
    match &r.graph_isomorphism {
        Some(pi) => println!("graphs isomorphic, vertex map {pi:?}"),
        None => println!("graphs not isomorphic"),
    }
    println!("signatures: old {:?}, new {:?}", r.signature_old, r.signature_new);
    match &r.equivalence_witness {
        Some(w) => println!("f-equivalence witness: basis bijection {:?}", w.mapping),
        None => println!("no f-equivalence witness"),
    }
    let verdict = match r.verdict {
        Verdict::EquivalentWitnessed => "EQUIVALENT_WITNESSED",
        Verdict::NotEquivalentBySignature => "NOT_EQUIVALENT_BY_SIGNATURE",
        Verdict::Inconclusive => "INCONCLUSIVE",
    };
    println!("verdict: {verdict}\n");
}

fn main() {
    let w_labels: Vec<String> = (1..=3).map(|i| format!("w{i}")).collect();

    // Zero operator with an asymmetric form. Against the basis
    // w1 = v1+v2, w2 = v1-v2, w3 = v3 the two associated graphs are
    // isomorphic, yet no form-preserving bijection exists: the graph
    // invariant alone cannot settle equivalence.
    let gram = Matrix::from_ints(Field::Rational, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let op = Matrix::zero(3, 3, Field::Rational);
    let labels: Vec<String> = (1..=3).map(|i| format!("v{i}")).collect();
    let spec = StructureSpec::new(labels, gram, op).unwrap();
    let t = Matrix::from_ints(Field::Rational, &[&[1, 1, 0], &[1, -1, 0], &[0, 0, 1]]);
    report("isomorphic graphs, no equivalence", &spec, &t, w_labels.clone());

    // The same space against a plain permutation of its own basis: here a
    // witness exists and the verdict is affirmative.
    let gram = Matrix::from_ints(Field::Rational, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
    let op = Matrix::from_ints(Field::Rational, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let labels: Vec<String> = (1..=3).map(|i| format!("v{i}")).collect();
    let spec = StructureSpec::new(labels, gram, op).unwrap();
    // swap the first two basis vectors
    let t = Matrix::from_ints(Field::Rational, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    report("permuted basis of the same space", &spec, &t, w_labels);
}
