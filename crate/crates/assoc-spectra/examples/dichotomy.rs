//! Sorts small digraphs into the three possible spectrum growth
//! classes: constant 1 (associative), constant 2, or exponential.
//! Run with `cargo run --example dichotomy`.

use assoc_spectra::decision::{classify_dichotomy, SpectrumKind};
use assoc_spectra::digraph::{enumerate_digraphs, Digraph};

fn main() {
    println!("growth classes of all digraphs on at most 3 labeled vertices:");
    for k in 1..=3 {
        let (mut one, mut two, mut exp) = (0, 0, 0);
        for g in enumerate_digraphs(k) {
            match classify_dichotomy(&g).kind {
                SpectrumKind::Constant1 => one += 1,
                SpectrumKind::Constant2 => two += 1,
                SpectrumKind::Exponential => exp += 1,
            }
        }
        println!("  {k} vertex graphs: {one} constant-1, {two} constant-2, {exp} exponential");
    }

    println!("\nexamples:");
    let samples = [
        (
            "complete with loops",
            Digraph::from_edges(&[("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]),
        ),
        ("single directed edge", Digraph::from_edges(&[("a", "b")])),
        ("2-cycle", Digraph::from_edges(&[("a", "b"), ("b", "a")])),
        (
            "fork with loop",
            Digraph::from_edges(&[("u", "v"), ("u", "w"), ("w", "w")]),
        ),
    ];
    for (name, g) in samples {
        println!("  {name}: {}", classify_dichotomy(&g));
    }
}
