//! Walks the three equivalent encodings of a bracketing: the
//! parenthesized term, its DFS tree (parent array), and the depth
//! sequence. Run with `cargo run --example enumerate_trees`.

use assoc_spectra::terms::{catalan, enumerate_dfs_trees};

fn main() {
    println!("bracketings of x1..x4, with parent arrays and depth sequences:");
    for t in enumerate_dfs_trees(4) {
        println!(
            "  {:<14} parents {:?}  depths {:?}",
            t.bracketing().to_string(),
            t.parents(),
            t.depth_sequence().as_slice(),
        );
    }

    println!("\ncounts match the Catalan numbers:");
    for n in 1..=10 {
        let count = enumerate_dfs_trees(n).count() as u64;
        assert_eq!(count, catalan(n - 1));
        println!("  |B_{n}| = {count}");
    }

    // Round trip: text -> tree -> text.
    let t: assoc_spectra::terms::Bracketing = "x1((x2x3)x4)".parse().expect("well formed");
    let tree = t.dfs_tree();
    println!(
        "\n'{t}' has height {} and reparses to itself: {}",
        tree.height(),
        tree.bracketing()
    );
}
