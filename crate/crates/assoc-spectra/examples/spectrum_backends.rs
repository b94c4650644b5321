//! Computes associative spectra two ways: by grouping brute-force
//! homomorphism signatures and by the condition-based decider. On the
//! fork-with-loop graph the counts match the filtered-word sequence.
//! Run with `cargo run --example spectrum_backends`.

use assoc_spectra::digraph::Digraph;
use assoc_spectra::oracle::DEFAULT_MAX_MAPS;
use assoc_spectra::spectrum::{enumerate_r_words, spectrum, Backend};

fn main() {
    let g = Digraph::from_edges(&[("u", "v"), ("u", "w"), ("w", "w")]);

    println!("n  s_n(theorem)  s_n(oracle)  |R_(n-1)|");
    for n in 3..=9 {
        let fast = spectrum(&g, n, Backend::Theorem, DEFAULT_MAX_MAPS).expect("in budget");
        let slow = spectrum(&g, n, Backend::Oracle, DEFAULT_MAX_MAPS).expect("in budget");
        let words = enumerate_r_words(n - 1).expect("n >= 3").len();
        assert_eq!(fast.s_n, slow.s_n);
        println!("{n}  {:>12}  {:>11}  {:>9}", fast.s_n, slow.s_n, words);
    }

    let rep = spectrum(&g, 4, Backend::Theorem, DEFAULT_MAX_MAPS).expect("in budget");
    println!("\nequivalence classes of B_4 on this graph:");
    for (i, class) in rep.classes.iter().enumerate() {
        println!("  class {}: {}", i + 1, class.join("  "));
    }
}
