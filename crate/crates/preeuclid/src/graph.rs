//! The directed graph attached to an operator and a bilinear form on a
//! fixed basis, and the graph queries the analyses are built on.
//!
//! Vertices are basis indices. There is an edge (i, j) when the form is
//! nonzero on the pair (in either order) or the image of basis vector i
//! has a nonzero coefficient on basis vector j.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::structure::StructureSpec;

/// Why an edge exists: the form, the operator, or both.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Form,
    Operator,
    Both,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssocGraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), Provenance>,
}

/// Disjoint index blocks covering 0..n-1; each block sorted ascending,
/// blocks ordered by smallest element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    fn from_ids(ids: &[usize]) -> Partition {
        let mut by_id: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &id) in ids.iter().enumerate() {
            by_id.entry(id).or_default().push(v);
        }
        let mut blocks: Vec<Vec<usize>> = by_id.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl AssocGraph {
    /// The graph of a structure, per the edge rule in the module docs.
    pub fn build(spec: &StructureSpec) -> AssocGraph {
        let n = spec.dim();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let form = !spec.gram().get(i, j).is_zero() || !spec.gram().get(j, i).is_zero();
                let operator = !spec.op().get(j, i).is_zero();
                let prov = match (form, operator) {
                    (true, true) => Provenance::Both,
                    (true, false) => Provenance::Form,
                    (false, true) => Provenance::Operator,
                    (false, false) => continue,
                };
                edges.insert((i, j), prov);
            }
        }
        AssocGraph {
            labels: spec.labels().to_vec(),
            edges,
        }
    }

    /// The operator-only subgraph: edge (i, j) iff the image of basis
    /// vector i has a nonzero coefficient on basis vector j.
    pub fn operator_support(spec: &StructureSpec) -> AssocGraph {
        let n = spec.dim();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if !spec.op().get(j, i).is_zero() {
                    edges.insert((i, j), Provenance::Operator);
                }
            }
        }
        AssocGraph {
            labels: spec.labels().to_vec(),
            edges,
        }
    }

    /// Build an arbitrary digraph; edges get OPERATOR provenance.
    pub fn from_edges(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> AssocGraph {
        let edges = edges
            .into_iter()
            .map(|e| (e, Provenance::Operator))
            .collect();
        AssocGraph { labels, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains_key(&(from, to))
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Provenance)> + '_ {
        self.edges.iter().map(|(&e, &p)| (e, p))
    }

    pub fn provenance(&self, from: usize, to: usize) -> Option<Provenance> {
        self.edges.get(&(from, to)).copied()
    }

    fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in self.edges.keys() {
            adj[u].push(v);
        }
        adj
    }

    /// Components under paths that ignore edge direction.
    pub fn weak_components(&self) -> Partition {
        let mut uf = UnionFind::new(self.vertex_count());
        for &(u, v) in self.edges.keys() {
            uf.union(u, v);
        }
        let ids: Vec<usize> = (0..self.vertex_count()).map(|v| uf.find(v)).collect();
        Partition::from_ids(&ids)
    }

    pub fn is_connected(&self) -> bool {
        self.weak_components().len() == 1
    }

    /// Maximal blocks of mutually reachable vertices (Tarjan).
    pub fn strong_components(&self) -> Partition {
        let ids = self.scc_ids();
        Partition::from_ids(&ids)
    }

    fn scc_ids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let adj = self.out_adjacency();
        let mut state = TarjanState {
            next_index: 0,
            next_comp: 0,
            indices: vec![None; n],
            lowlinks: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            comp: vec![usize::MAX; n],
        };
        for v in 0..n {
            if state.indices[v].is_none() {
                strongconnect(&adj, &mut state, v);
            }
        }
        state.comp
    }

    /// True when every edge can be walked back along directed edges,
    /// i.e. every edge stays inside one strong component. On failure the
    /// least offending edge is returned.
    pub fn is_weakly_symmetric(&self) -> (bool, Option<(usize, usize)>) {
        let ids = self.scc_ids();
        for &(u, v) in self.edges.keys() {
            if ids[u] != ids[v] {
                return (false, Some((u, v)));
            }
        }
        (true, None)
    }

    /// Vertices reachable from `start` along directed edges, including
    /// `start` itself; sorted ascending.
    pub fn reachable_from(&self, start: usize) -> Vec<usize> {
        let adj = self.out_adjacency();
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.vertex_count()).filter(|&v| seen[v]).collect()
    }

    /// Edge-preserving vertex bijection onto `other`, if one exists.
    /// Returns the lexicographically least witness.
    pub fn find_isomorphism(&self, other: &AssocGraph) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return None;
        }
        let sig1 = degree_signatures(self);
        let sig2 = degree_signatures(other);
        {
            let mut s1 = sig1.clone();
            let mut s2 = sig2.clone();
            s1.sort_unstable();
            s2.sort_unstable();
            if s1 != s2 {
                return None;
            }
        }
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if assign(self, other, &sig1, &sig2, &mut mapping, &mut used, 0) {
            Some(mapping)
        } else {
            None
        }
    }

    /// Deterministic Graphviz rendering. Vertices in index order; edges in
    /// (source, target) order; a mutual non-loop pair with one provenance
    /// collapses to a single dir="both" edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for label in &self.labels {
            let _ = writeln!(out, "  {};", dot_id(label));
        }
        for (&(u, v), &prov) in &self.edges {
            let prov_attr = match prov {
                Provenance::Form => "FORM",
                Provenance::Operator => "OPERATOR",
                Provenance::Both => "BOTH",
            };
            let mirror = self.edges.get(&(v, u));
            if u != v && mirror == Some(&prov) {
                if u > v {
                    continue; // already emitted at (v, u)
                }
                let _ = writeln!(
                    out,
                    "  {} -> {} [dir=\"both\", provenance=\"{}\"];",
                    dot_id(&self.labels[u]),
                    dot_id(&self.labels[v]),
                    prov_attr
                );
            } else {
                let _ = writeln!(
                    out,
                    "  {} -> {} [provenance=\"{}\"];",
                    dot_id(&self.labels[u]),
                    dot_id(&self.labels[v]),
                    prov_attr
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(label: &str) -> String {
    let plain = !label.is_empty()
        && !label.as_bytes()[0].is_ascii_digit()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_');
    if plain {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// (out-degree, in-degree, has-loop) per vertex, loops counted once.
fn degree_signatures(g: &AssocGraph) -> Vec<(usize, usize, bool)> {
    let n = g.vertex_count();
    let mut sig = vec![(0usize, 0usize, false); n];
    for ((u, v), _) in g.edges() {
        if u == v {
            sig[u].2 = true;
        } else {
            sig[u].0 += 1;
            sig[v].1 += 1;
        }
    }
    sig
}

fn assign(
    g1: &AssocGraph,
    g2: &AssocGraph,
    sig1: &[(usize, usize, bool)],
    sig2: &[(usize, usize, bool)],
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    let n = g1.vertex_count();
    if k == n {
        return true;
    }
    'candidates: for c in 0..n {
        if used[c] || sig1[k] != sig2[c] {
            continue;
        }
        for j in 0..k {
            if g1.has_edge(k, j) != g2.has_edge(c, mapping[j])
                || g1.has_edge(j, k) != g2.has_edge(mapping[j], c)
            {
                continue 'candidates;
            }
        }
        mapping[k] = c;
        used[c] = true;
        if assign(g1, g2, sig1, sig2, mapping, used, k + 1) {
            return true;
        }
        mapping[k] = usize::MAX;
        used[c] = false;
    }
    false
}

struct TarjanState {
    next_index: usize,
    next_comp: usize,
    indices: Vec<Option<usize>>,
    lowlinks: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    comp: Vec<usize>,
}

fn strongconnect(adj: &[Vec<usize>], state: &mut TarjanState, v: usize) {
    state.indices[v] = Some(state.next_index);
    state.lowlinks[v] = state.next_index;
    state.next_index += 1;
    state.stack.push(v);
    state.on_stack[v] = true;

    for &w in &adj[v] {
        if state.indices[w].is_none() {
            strongconnect(adj, state, w);
            state.lowlinks[v] = state.lowlinks[v].min(state.lowlinks[w]);
        } else if state.on_stack[w] {
            state.lowlinks[v] = state.lowlinks[v].min(state.indices[w].unwrap());
        }
    }

    if state.lowlinks[v] == state.indices[v].unwrap() {
        loop {
            let w = state.stack.pop().unwrap();
            state.on_stack[w] = false;
            state.comp[w] = state.next_comp;
            if w == v {
                break;
            }
        }
        state.next_comp += 1;
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
