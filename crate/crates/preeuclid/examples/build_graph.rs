//! Build the associated graph of an operator/form pair and print its
//! edges, weak components, and Graphviz rendering.
//!
//! Run with: cargo run --example build_graph

use preeuclid::{AssocGraph, Field, Matrix, StructureSpec};

fn main() {
    // Five-dimensional rational space. The form couples e2 with e5; the
    // operator sends e1, e3, e5 each to e1 + 2 e3 + e5 and e2, e4 to -e4.
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
    let labels: Vec<String> = (1..=5).map(|i| format!("e{i}")).collect();
    let spec = StructureSpec::new(labels, gram, op).expect("valid structure");

    let graph = AssocGraph::build(&spec);
    println!("{} vertices, {} edges", graph.vertex_count(), graph.edge_count());
    for ((u, v), provenance) in graph.edges() {
        println!(
            "  {} -> {}  [{provenance:?}]",
            spec.labels()[u],
            spec.labels()[v]
        );
    }

    let components = graph.weak_components();
    println!("connected: {}", graph.is_connected());
    for block in components.blocks() {
        let names: Vec<&str> = block.iter().map(|&i| spec.labels()[i].as_str()).collect();
        println!("weak component: {{{}}}", names.join(", "));
    }

    println!("\nGraphviz:\n{}", graph.to_dot());
}
