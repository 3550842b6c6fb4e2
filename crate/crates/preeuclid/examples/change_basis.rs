//! Rewrite a structure on a new basis: the Gram matrix transforms by
//! congruence (T^t G T) and the operator by similarity (T^-1 F T), both
//! in exact rational arithmetic.
//!
//! Run with: cargo run --example change_basis

use preeuclid::{Field, Matrix, Scalar, StructureSpec};

fn print_matrix(title: &str, m: &Matrix) {
    println!("{title}:");
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn main() {
    // Five-dimensional space on basis v1..v5: the operator sends v1, v2,
    // v3 each to 2 v1 + 2 v2 + v3, fixes v4, and annihilates v5.
    let gram = Matrix::from_ints(
        Field::Rational,
        &[
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 3],
            &[0, 3, 1, 0, 0],
            &[0, 0, 0, 0, 0],
        ],
    );
    let op = Matrix::from_ints(
        Field::Rational,
        &[
            &[2, 2, 2, 0, 0],
            &[2, 2, 2, 0, 0],
            &[1, 1, 1, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0],
        ],
    );
    let v_labels: Vec<String> = (1..=5).map(|i| format!("v{i}")).collect();
    let spec = StructureSpec::new(v_labels, gram, op).expect("valid structure");

    // New basis: w1 = v1+v2, w2 = v1-v2, w3 = v4+v5, w4 = v4-v5, w5 = v3.
    // Columns of T are the new basis vectors in old coordinates.
    let t = Matrix::from_ints(
        Field::Rational,
        &[
            &[1, 1, 0, 0, 0],
            &[1, -1, 0, 0, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 1, 1, 0],
            &[0, 0, 1, -1, 0],
        ],
    );
    let w_labels: Vec<String> = (1..=5).map(|i| format!("w{i}")).collect();
    let moved = spec.change_basis(&t, w_labels).expect("invertible transition");

    print_matrix("Gram matrix on w-basis (T^t G T)", moved.gram());
    print_matrix("operator on w-basis (T^-1 F T)", moved.op());

    // Read f(w1) off the first column of the transformed operator.
    let image = moved.apply_operator(&moved.basis_vector(0)).unwrap();
    let terms: Vec<String> = image
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{c} {}", moved.labels()[i]))
        .collect();
    println!("f(w1) = {}", terms.join(" + "));

    // A basis change is exactly reversible.
    let back = moved
        .change_basis(&t.inverse().unwrap(), spec.labels().to_vec())
        .unwrap();
    assert_eq!(back, spec);
    println!("round trip through T and T^-1 restores the original: true");

    // Bilinear values are basis-independent: compare <v1+v2, v4+v5> with
    // <w1, w3> computed on the new presentation.
    let one = Scalar::one(Field::Rational);
    let mut x = vec![Scalar::zero(Field::Rational); 5];
    x[0] = one.clone();
    x[1] = one.clone();
    let mut y = vec![Scalar::zero(Field::Rational); 5];
    y[3] = one.clone();
    y[4] = one;
    let old_value = spec.bilinear_eval(&x, &y).unwrap();
    let new_value = moved
        .bilinear_eval(&moved.basis_vector(0), &moved.basis_vector(2))
        .unwrap();
    assert_eq!(old_value, new_value);
    println!("<v1+v2, v4+v5> = <w1, w3> = {old_value}");
}
