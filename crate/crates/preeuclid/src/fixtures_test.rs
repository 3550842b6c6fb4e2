//! Shared hand-built structures used as fixtures across unit tests.

use num_rational::BigRational;

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::structure::StructureSpec;

pub fn e_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn v_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

pub fn w_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("w{i}")).collect()
}

pub fn zero_spec(n: usize) -> StructureSpec {
    StructureSpec::new(
        e_labels(n),
        Matrix::zero(n, n, Field::Rational),
        Matrix::zero(n, n, Field::Rational),
    )
    .unwrap()
}

/// 5-dim rational space, one form entry (e2, e5) = 7, operator sending
/// e1, e3, e5 to e1 + 2 e3 + e5 and e2, e4 to -e4. Connected graph.
pub fn five_dim_indecomposable() -> StructureSpec {
    let gram = Matrix::from_ints(
        Field::Rational,
        &[
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 7],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0],
        ],
    );
    let op = Matrix::from_ints(
        Field::Rational,
        &[
            &[1, 0, 1, 0, 1],
            &[0, 0, 0, 0, 0],
            &[2, 0, 2, 0, 2],
            &[0, -1, 0, -1, 0],
            &[1, 0, 1, 0, 1],
        ],
    );
    StructureSpec::new(e_labels(5), gram, op).unwrap()
}

/// 5-dim rational space on basis v1..v5 with a denser form; the operator
/// sends v1, v2, v3 to 2 v1 + 2 v2 + v3, fixes v4 and kills v5.
pub fn five_dim_coupled() -> StructureSpec {
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
    StructureSpec::new(v_labels(5), gram, op).unwrap()
}

/// `five_dim_coupled` together with the transition to the basis
/// w1 = v1+v2, w2 = v1-v2, w3 = v4+v5, w4 = v4-v5, w5 = v3.
pub fn basis_change_to_w() -> (StructureSpec, Matrix, Vec<String>) {
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
    (five_dim_coupled(), t, w_labels(5))
}

fn gauss(re: i64, im: i64) -> Scalar {
    Scalar::gaussian(
        BigRational::from_integer(re.into()),
        BigRational::from_integer(im.into()),
    )
}

/// 5-dim Gaussian-rational space with form entries (e1, e3) = 4i and
/// (e4, e5) = 2 - 11i; operator e1 -> 2 e1 - e2, e2 -> e3, rest zero.
/// Two weak components: {e1, e2, e3} and {e4, e5}.
pub fn five_dim_complex() -> StructureSpec {
    let f = Field::GaussianRational;
    let mut gram = Matrix::zero(5, 5, f);
    gram.set(0, 2, gauss(0, 4));
    gram.set(3, 4, gauss(2, -11));
    let mut op = Matrix::zero(5, 5, f);
    op.set(0, 0, gauss(2, 0));
    op.set(1, 0, gauss(-1, 0));
    op.set(2, 1, gauss(1, 0));
    StructureSpec::new(e_labels(5), gram, op).unwrap()
}

/// 4-dim rational space splitting into {e1, e3} and {e2, e4}.
pub fn four_dim_two_components() -> StructureSpec {
    let gram = Matrix::from_ints(
        Field::Rational,
        &[
            &[0, 0, -5, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ],
    );
    let op = Matrix::from_ints(
        Field::Rational,
        &[
            &[0, 0, 0, 0],
            &[0, 5, 0, 5],
            &[-2, 0, -2, 0],
            &[0, 1, 0, 1],
        ],
    );
    StructureSpec::new(e_labels(4), gram, op).unwrap()
}

/// 6-dim rational space with three weak components {e1, e2, e3}, {e4},
/// {e5, e6} (the two form parameters instantiated to 1).
pub fn six_dim_three_components() -> StructureSpec {
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
    StructureSpec::new(e_labels(6), gram, op).unwrap()
}

/// 3-dim rational space with zero operator whose graphs before/after the
/// basis change w1 = v1+v2, w2 = v1-v2, w3 = v3 are isomorphic even
/// though the bases are not related by a form-preserving map.
pub fn three_dim_zero_op() -> (StructureSpec, Matrix, Vec<String>) {
    let gram = Matrix::from_ints(Field::Rational, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
    let op = Matrix::zero(3, 3, Field::Rational);
    let spec = StructureSpec::new(v_labels(3), gram, op).unwrap();
    let t = Matrix::from_ints(Field::Rational, &[&[1, 1, 0], &[1, -1, 0], &[0, 0, 1]]);
    (spec, t, w_labels(3))
}

/// 4-dim space whose form is a directed 4-cycle and whose operator is the
/// identity: connected and weakly symmetric, but span{e1} is invariant.
pub fn cycle_form_identity() -> StructureSpec {
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
    StructureSpec::new(e_labels(4), gram, op).unwrap()
}
