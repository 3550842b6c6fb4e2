//! Shared helpers for the integration suites: seeded random structures,
//! random digraphs, and small brute-force utilities.

#![allow(dead_code)]

use preeuclid::{AssocGraph, Field, Matrix, Scalar, StructureSpec};
use rand::Rng;

pub fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Sparse random scalar: zero most of the time, otherwise a small
/// fraction p/q with p in [-3, 3] and q in {1, 2, 3}.
pub fn random_scalar(rng: &mut impl Rng, zero_prob: f64) -> Scalar {
    if rng.gen_bool(zero_prob) {
        Scalar::zero(Field::Rational)
    } else {
        let p = loop {
            let p = rng.gen_range(-3..=3);
            if p != 0 {
                break p;
            }
        };
        let q = rng.gen_range(1..=3);
        Scalar::from_ratio(p, q, Field::Rational)
    }
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, zero_prob: f64) -> Matrix {
    Matrix::from_fn(n, n, Field::Rational, |_, _| random_scalar(rng, zero_prob))
}

pub fn random_spec(rng: &mut impl Rng, n: usize) -> StructureSpec {
    let gram = random_matrix(rng, n, 0.75);
    let op = random_matrix(rng, n, 0.75);
    StructureSpec::new(labels(n), gram, op).unwrap()
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> AssocGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    AssocGraph::from_edges(labels(n), edges)
}

/// Weak symmetry straight from the definition: for every edge (u, v)
/// there must be a directed path from v back to u.
pub fn weak_symmetry_by_definition(g: &AssocGraph) -> bool {
    g.edges().all(|((u, v), _)| g.reachable_from(v).contains(&u))
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for c in 0..n {
            if !used[c] {
                used[c] = true;
                current.push(c);
                rec(n, current, used, out);
                current.pop();
                used[c] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// True when `pi` maps the edge set of g1 exactly onto the edge set of g2.
pub fn preserves_edges(g1: &AssocGraph, g2: &AssocGraph, pi: &[usize]) -> bool {
    let n = g1.vertex_count();
    (0..n).all(|u| (0..n).all(|v| g1.has_edge(u, v) == g2.has_edge(pi[u], pi[v])))
}
