//! Comparing two bases of the same space: a witness search for a
//! form-preserving, operator-commuting map carrying one basis onto the
//! other, alongside graph-isomorphism and block-signature checks.
//!
//! The comparison is deliberately not a complete decision procedure:
//! a found witness settles equivalence, differing signatures refute it,
//! and everything else stays inconclusive.

use serde::Serialize;

use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::graph::AssocGraph;
use crate::matrix::Matrix;
use crate::structure::StructureSpec;

/// Factorial search cap for the bijection enumeration.
pub const MAX_SEARCH_DIM: usize = 10;

/// A basis bijection that induces a form-preserving map commuting with
/// the operator. `mapping[i] = j` sends old basis vector i to new basis
/// vector j; `matrix` is the map in old coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceWitness {
    pub mapping: Vec<usize>,
    pub matrix: Matrix,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    EquivalentWitnessed,
    NotEquivalentBySignature,
    Inconclusive,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComparisonReport {
    /// Vertex bijection between the two associated graphs, if any.
    pub graph_isomorphism: Option<Vec<usize>>,
    pub equivalence_witness: Option<EquivalenceWitness>,
    /// Block-dimension multisets of the two decompositions, sorted descending.
    pub signature_old: Vec<usize>,
    pub signature_new: Vec<usize>,
    pub verdict: Verdict,
}

/// Search all bijections from the old basis onto the new one (columns of
/// `transition`, in old coordinates) for a map that preserves the form and
/// commutes with the operator. Returns the lexicographically least witness.
///
/// Partial assignments are pruned on the form condition; an accepted
/// mapping is re-verified from scratch before being returned.
pub fn find_f_equivalence(
    spec: &StructureSpec,
    transition: &Matrix,
) -> Result<Option<EquivalenceWitness>> {
    let n = spec.dim();
    if n > MAX_SEARCH_DIM {
        return Err(Error::TooLarge {
            n,
            max: MAX_SEARCH_DIM,
        });
    }
    transition.inverse()?; // reject singular transitions up front
    // Pairwise form values of the new basis vectors, in one n x n table.
    let new_gram = transition.transpose().mul(spec.gram())?.mul(transition)?;

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !search(spec, transition, &new_gram, &mut mapping, &mut used, 0) {
        return Ok(None);
    }
    let p = permuted_transition(spec, transition, &mapping);
    // Self-contained verification of the accepted witness.
    let form_ok = p.transpose().mul(spec.gram())?.mul(&p)? == *spec.gram();
    let commute_ok = spec.op().mul(&p)? == p.mul(spec.op())?;
    if !form_ok || !commute_ok {
        return Err(Error::Invariant(
            "accepted equivalence witness failed re-verification".into(),
        ));
    }
    Ok(Some(EquivalenceWitness { mapping, matrix: p }))
}

/// The candidate map in old coordinates: column c is the new basis vector
/// `mapping[c]`, i.e. column `mapping[c]` of the transition.
fn permuted_transition(spec: &StructureSpec, transition: &Matrix, mapping: &[usize]) -> Matrix {
    let n = spec.dim();
    Matrix::from_fn(n, n, spec.field(), |r, c| {
        transition.get(r, mapping[c]).clone()
    })
}

fn search(
    spec: &StructureSpec,
    transition: &Matrix,
    new_gram: &Matrix,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    let n = spec.dim();
    if k == n {
        let p = permuted_transition(spec, transition, mapping);
        let fp = spec.op().mul(&p).expect("square");
        let pf = p.mul(spec.op()).expect("square");
        return fp == pf;
    }
    'candidates: for c in 0..n {
        if used[c] {
            continue;
        }
        // form preservation on every pair involving the new assignment
        for a in 0..=k {
            let b = if a == k { c } else { mapping[a] };
            if spec.gram().get(a, k) != new_gram.get(b, c)
                || spec.gram().get(k, a) != new_gram.get(c, b)
            {
                continue 'candidates;
            }
        }
        mapping[k] = c;
        used[c] = true;
        if search(spec, transition, new_gram, mapping, used, k + 1) {
            return true;
        }
        mapping[k] = usize::MAX;
        used[c] = false;
    }
    false
}

/// Full comparison of a structure with its re-expression on a new basis.
pub fn compare_bases(
    spec: &StructureSpec,
    transition: &Matrix,
    new_labels: Vec<String>,
) -> Result<ComparisonReport> {
    let moved = spec.change_basis(transition, new_labels)?;
    let g_old = AssocGraph::build(spec);
    let g_new = AssocGraph::build(&moved);
    let graph_isomorphism = g_old.find_isomorphism(&g_new);
    let equivalence_witness = find_f_equivalence(spec, transition)?;
    let signature_old = decompose(spec)?.signature();
    let signature_new = decompose(&moved)?.signature();
    let verdict = if equivalence_witness.is_some() {
        Verdict::EquivalentWitnessed
    } else if signature_old != signature_new {
        Verdict::NotEquivalentBySignature
    } else {
        Verdict::Inconclusive
    };
    Ok(ComparisonReport {
        graph_isomorphism,
        equivalence_witness,
        signature_old,
        signature_new,
        verdict,
    })
}
