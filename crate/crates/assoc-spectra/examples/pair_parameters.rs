//! Computes the comparison parameters of pairs of bracketings, from
//! the three-variable associativity pair up to a 20-leaf pair with a
//! rich disagreement profile. Run with
//! `cargo run --example pair_parameters`.

use assoc_spectra::pairparams::{pair_params, PairParams};
use assoc_spectra::terms::DfsTree;

fn main() {
    let a = "x1(x2x3)".parse().expect("well formed");
    let b = "(x1x2)x3".parse().expect("well formed");
    println!("the associativity pair x1(x2x3) ~ (x1x2)x3:");
    println!("{}", pair_params(&a, &b).expect("distinct pair"));

    // Two 20-leaf trees differing across several subtrees.
    let t = DfsTree::from_parents(&[
        0, 1, 2, 3, 4, 4, 1, 7, 8, 9, 10, 11, 12, 8, 14, 7, 16, 16, 18, 19,
    ])
    .expect("valid parent array");
    let t2 = DfsTree::from_parents(&[
        0, 1, 2, 3, 4, 5, 1, 7, 8, 9, 10, 10, 12, 9, 14, 7, 16, 17, 16, 19,
    ])
    .expect("valid parent array");
    println!("\na 20-leaf pair:");
    println!("  {}", t.bracketing());
    println!("  {}", t2.bracketing());
    let p = PairParams::from_trees(&t, &t2).expect("distinct pair");
    println!("{p}");
    println!(
        "omega(r) for r = 0..6: {:?}",
        (0..=6).map(|r| p.omega(r)).collect::<Vec<_>>()
    );
}
