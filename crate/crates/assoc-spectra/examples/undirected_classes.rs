//! For symmetric digraphs (undirected graphs) the satisfied
//! bracketing identities fall into exactly three classes; this example
//! classifies a few graphs and verifies the parity prediction of the
//! middle class. Run with `cargo run --example undirected_classes`.

use assoc_spectra::decision::{classify_undirected, decide_identity, UndirectedClass};
use assoc_spectra::digraph::Digraph;
use assoc_spectra::pairparams::pair_params;
use assoc_spectra::terms::enumerate_dfs_trees;

fn main() {
    let samples = [
        (
            "complete with loops on {a, b}",
            Digraph::from_edges(&[("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]),
        ),
        (
            "single undirected edge",
            Digraph::from_edges(&[("a", "b"), ("b", "a")]),
        ),
        (
            "symmetric path a - b - c",
            Digraph::from_edges(&[("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")]),
        ),
        (
            "triangle with loops",
            Digraph::from_edges(&[
                ("a", "a"),
                ("b", "b"),
                ("c", "c"),
                ("a", "b"),
                ("b", "a"),
                ("a", "c"),
                ("c", "a"),
                ("b", "c"),
                ("c", "b"),
            ]),
        ),
        (
            "loopless triangle",
            Digraph::from_edges(&[
                ("a", "b"),
                ("b", "a"),
                ("a", "c"),
                ("c", "a"),
                ("b", "c"),
                ("c", "b"),
            ]),
        ),
    ];
    for (name, g) in &samples {
        println!("{name}: {}", classify_undirected(g).expect("symmetric"));
    }

    // In the parity class a pair is satisfied exactly when its
    // parameter M (the gcd of all depth differences) is even.
    let g = &samples[1].1;
    assert_eq!(
        classify_undirected(g).expect("symmetric"),
        UndirectedClass::EvenMIdentities
    );
    println!("\non the single undirected edge, over all pairs from B_4:");
    let trees: Vec<_> = enumerate_dfs_trees(4).map(|t| t.bracketing()).collect();
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            let m = pair_params(&trees[i], &trees[j]).expect("distinct").m;
            let holds = decide_identity(g, &trees[i], &trees[j])
                .expect("same size")
                .satisfied;
            assert_eq!(holds, m.is_multiple_of(2));
            println!(
                "  {:<14} ~ {:<14} M = {m}: {}",
                trees[i].to_string(),
                trees[j].to_string(),
                if holds { "satisfied" } else { "not satisfied" }
            );
        }
    }
}
