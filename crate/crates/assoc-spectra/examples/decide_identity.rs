//! Decides whether two bracketings induce the same term operation on a
//! graph algebra, printing the full ten-condition report. Run with
//! `cargo run --example decide_identity`.

use assoc_spectra::decision::decide_identity;
use assoc_spectra::digraph::Digraph;

fn main() {
    let looped = Digraph::from_edges(&[("a", "a")]);
    let edge = Digraph::from_edges(&[("a", "b")]);
    let a = "(x1x2)x3".parse().expect("well formed");
    let b = "x1(x2x3)".parse().expect("well formed");

    println!("associativity on the single looped vertex (a complete graph with loops):");
    println!("{}\n", decide_identity(&looped, &a, &b).expect("same size"));

    println!("associativity on the single directed edge a -> b:");
    println!("{}\n", decide_identity(&edge, &a, &b).expect("same size"));

    // On the 2-cycle, satisfaction depends only on the parity
    // parameter M of the pair.
    let two_cycle = Digraph::from_edges(&[("a", "b"), ("b", "a")]);
    let even = [
        "x1(x2(x3x4))".parse().expect("well formed"),
        "(x1(x2x3))x4".parse().expect("well formed"),
    ];
    let d = decide_identity(&two_cycle, &even[0], &even[1]).expect("same size");
    println!(
        "on the 2-cycle, {} ~ {} is {}",
        even[0],
        even[1],
        if d.satisfied {
            "satisfied (all depth differences even)"
        } else {
            "not satisfied"
        }
    );
}
