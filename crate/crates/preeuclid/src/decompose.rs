//! Orthogonal block decomposition of the space and the operator, read off
//! the weak components of the associated graph, plus the indecomposability
//! and minimality analyses with their brute-force counterparts.

use crate::error::{Error, Result};
use crate::graph::AssocGraph;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::structure::StructureSpec;

/// One block of a decomposition: an inherited-basis subspace together with
/// the operator summand supported on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    /// Basis indices of this block, sorted ascending.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// The form restricted to the block (k x k).
    pub block_gram: Matrix,
    /// The operator restricted to the block (k x k).
    pub block_op: Matrix,
    /// The summand as a full n x n matrix: agrees with the operator on the
    /// block's columns and is zero on all other columns.
    pub summand_full: Matrix,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    components: Vec<Component>,
    source: StructureSpec,
}

impl Decomposition {
    /// Assemble the block data for a given partition of the basis indices.
    /// No orthogonality or invariance checking happens here; see
    /// [`verify_decomposition`].
    pub fn from_blocks(spec: &StructureSpec, blocks: Vec<Vec<usize>>) -> Decomposition {
        let n = spec.dim();
        let field = spec.field();
        let components = blocks
            .into_iter()
            .map(|indices| {
                let k = indices.len();
                let labels = indices
                    .iter()
                    .map(|&i| spec.labels()[i].clone())
                    .collect();
                let block_gram = Matrix::from_fn(k, k, field, |r, c| {
                    spec.gram().get(indices[r], indices[c]).clone()
                });
                let block_op = Matrix::from_fn(k, k, field, |r, c| {
                    spec.op().get(indices[r], indices[c]).clone()
                });
                let summand_full = Matrix::from_fn(n, n, field, |r, c| {
                    if indices.contains(&c) {
                        spec.op().get(r, c).clone()
                    } else {
                        Scalar::zero(field)
                    }
                });
                Component {
                    indices,
                    labels,
                    block_gram,
                    block_op,
                    summand_full,
                }
            })
            .collect();
        Decomposition {
            components,
            source: spec.clone(),
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn source(&self) -> &StructureSpec {
        &self.source
    }

    /// Multiset of block dimensions, sorted descending.
    pub fn signature(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.components.iter().map(|c| c.indices.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Decompose along the weak components of the associated graph. The result
/// is re-verified; a failure here means a bug, not bad input.
pub fn decompose(spec: &StructureSpec) -> Result<Decomposition> {
    let graph = AssocGraph::build(spec);
    let blocks = graph.weak_components().blocks().to_vec();
    let d = Decomposition::from_blocks(spec, blocks);
    let report = verify_decomposition(spec, &d);
    if let Some(check) = report.checks.iter().find(|c| !c.pass) {
        return Err(Error::Invariant(format!(
            "decomposition check {:?} failed: {}",
            check.name,
            check.witness.as_deref().unwrap_or("no witness")
        )));
    }
    Ok(d)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Human-readable description of the first offending entry, if any.
    pub witness: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check every structural requirement of a decomposition against its spec:
/// the blocks partition the basis, distinct blocks are orthogonal (both
/// argument orders), the operator maps each block into itself, the stored
/// block matrices and summands match the operator, the summands add up to
/// the operator, and each block's induced subgraph is connected.
pub fn verify_decomposition(spec: &StructureSpec, d: &Decomposition) -> VerificationReport {
    let n = spec.dim();
    let label = |i: usize| spec.labels()[i].clone();
    let mut checks = Vec::new();

    let mut owner = vec![usize::MAX; n];
    let mut partition_ok = true;
    let mut partition_witness = None;
    for (ci, comp) in d.components().iter().enumerate() {
        for &i in &comp.indices {
            if i >= n || owner[i] != usize::MAX {
                partition_ok = false;
                partition_witness
                    .get_or_insert_with(|| format!("index {i} repeated or out of range"));
            } else {
                owner[i] = ci;
            }
        }
    }
    if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
        partition_ok = false;
        partition_witness.get_or_insert_with(|| format!("index {i} not covered"));
    }
    checks.push(Check {
        name: "partition",
        pass: partition_ok,
        witness: partition_witness,
    });
    if !partition_ok {
        return VerificationReport { checks };
    }

    let mut witness = None;
    'gram: for i in 0..n {
        for j in 0..n {
            if owner[i] != owner[j] && !spec.gram().get(i, j).is_zero() {
                witness = Some(format!(
                    "form({}, {}) = {} crosses blocks",
                    label(i),
                    label(j),
                    spec.gram().get(i, j)
                ));
                break 'gram;
            }
        }
    }
    checks.push(Check {
        name: "cross_gram_zero",
        pass: witness.is_none(),
        witness,
    });

    let mut witness = None;
    'op: for c in 0..n {
        for r in 0..n {
            if owner[r] != owner[c] && !spec.op().get(r, c).is_zero() {
                witness = Some(format!(
                    "operator coefficient of {} in the image of {} is {}, crossing blocks",
                    label(r),
                    label(c),
                    spec.op().get(r, c)
                ));
                break 'op;
            }
        }
    }
    checks.push(Check {
        name: "operator_invariance",
        pass: witness.is_none(),
        witness,
    });

    let mut witness = None;
    for comp in d.components() {
        let k = comp.indices.len();
        for r in 0..k {
            for c in 0..k {
                if comp.block_gram.get(r, c) != spec.gram().get(comp.indices[r], comp.indices[c]) {
                    witness.get_or_insert_with(|| {
                        format!("block gram entry ({r}, {c}) disagrees with the source form")
                    });
                }
                if comp.block_op.get(r, c) != spec.op().get(comp.indices[r], comp.indices[c]) {
                    witness.get_or_insert_with(|| {
                        format!("block operator entry ({r}, {c}) disagrees with the source")
                    });
                }
            }
        }
        for c in 0..n {
            let in_block = comp.indices.contains(&c);
            for r in 0..n {
                let expected = if in_block {
                    spec.op().get(r, c).clone()
                } else {
                    Scalar::zero(spec.field())
                };
                if comp.summand_full.get(r, c) != &expected {
                    witness.get_or_insert_with(|| {
                        format!("summand column for {} malformed", label(c))
                    });
                }
            }
        }
    }
    checks.push(Check {
        name: "blocks_match_source",
        pass: witness.is_none(),
        witness,
    });

    let mut sum = Matrix::zero(n, n, spec.field());
    for comp in d.components() {
        sum = sum.add(&comp.summand_full).expect("same shape");
    }
    let sum_ok = &sum == spec.op();
    checks.push(Check {
        name: "summands_total_operator",
        pass: sum_ok,
        witness: (!sum_ok).then(|| "sum of summands differs from the operator".into()),
    });

    let graph = AssocGraph::build(spec);
    let mut witness = None;
    for comp in d.components() {
        if !induced_connected(&graph, &comp.indices) {
            witness.get_or_insert_with(|| {
                format!(
                    "induced subgraph on {{{}}} is disconnected",
                    comp.labels.join(", ")
                )
            });
        }
    }
    checks.push(Check {
        name: "components_connected",
        pass: witness.is_none(),
        witness,
    });

    VerificationReport { checks }
}

fn induced_connected(graph: &AssocGraph, indices: &[usize]) -> bool {
    if indices.len() <= 1 {
        return true;
    }
    let pos = |v: usize| indices.iter().position(|&i| i == v);
    let mut adj = vec![Vec::new(); indices.len()];
    for ((u, v), _) in graph.edges() {
        if let (Some(a), Some(b)) = (pos(u), pos(v)) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; indices.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connectivity of the associated graph decides indecomposability.
pub fn is_f_indecomposable(spec: &StructureSpec) -> bool {
    AssocGraph::build(spec).is_connected()
}

/// Brute force over all nontrivial bipartitions of the basis: the space is
/// decomposable iff some bipartition is orthogonal in both argument orders
/// and operator-invariant on both sides. Exponential; for small n only.
pub fn indecomposable_oracle(spec: &StructureSpec) -> bool {
    let n = spec.dim();
    if n == 1 {
        return true;
    }
    // Vertex 0 stays on side A, halving the enumeration.
    for mask in 0..(1u64 << (n - 1)) {
        let side_b: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        if side_b.is_empty() || side_b.len() == n {
            continue;
        }
        let in_b = |i: usize| side_b.contains(&i);
        let splits = (0..n).all(|i| {
            (0..n).all(|j| {
                if in_b(i) == in_b(j) {
                    true
                } else {
                    spec.gram().get(i, j).is_zero() && spec.op().get(j, i).is_zero()
                }
            })
        });
        if splits {
            return false;
        }
    }
    true
}

/// The operator-only digraph: edge (i, j) iff the image of basis vector i
/// has a nonzero coefficient on basis vector j.
pub fn f_support_digraph(spec: &StructureSpec) -> AssocGraph {
    AssocGraph::operator_support(spec)
}

/// Minimality: no proper nonempty subset of the basis spans an
/// operator-invariant subspace. Decided via reachability closures in the
/// operator support digraph; the closed sets are exactly the unions of
/// closures, so the space is minimal iff every closure is the whole basis.
///
/// On failure the smallest closure is returned (ties broken
/// lexicographically).
pub fn is_minimal(spec: &StructureSpec) -> (bool, Option<Vec<usize>>) {
    let n = spec.dim();
    if n == 1 {
        return (true, None);
    }
    let support = f_support_digraph(spec);
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let closure = support.reachable_from(v);
        if closure.len() < n {
            let better = match &best {
                None => true,
                Some(b) => (closure.len(), &closure) < (b.len(), b),
            };
            if better {
                best = Some(closure);
            }
        }
    }
    match best {
        Some(witness) => (false, Some(witness)),
        None => (true, None),
    }
}

/// Brute force over all proper nonempty basis subsets: returns false iff
/// some subset is closed under the operator. Exponential; for small n only.
pub fn minimality_oracle(spec: &StructureSpec) -> bool {
    let n = spec.dim();
    for mask in 1..(1u64 << n) - 1 {
        let in_s = |i: usize| mask >> i & 1 == 1;
        let closed = (0..n)
            .filter(|&c| in_s(c))
            .all(|c| (0..n).all(|r| in_s(r) || spec.op().get(r, c).is_zero()));
        if closed {
            return false;
        }
    }
    true
}
