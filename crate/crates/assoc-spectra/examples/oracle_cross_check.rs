//! Shows the brute-force oracle at work: evaluating a term over a
//! graph algebra, listing homomorphism signatures, and cross-checking
//! the two independent decision routes on every 2-vertex digraph.
//! Run with `cargo run --example oracle_cross_check`.

use assoc_spectra::digraph::{enumerate_digraphs, Digraph};
use assoc_spectra::oracle::{
    decide_identity_oracle_cross_checked, eval_term, hom_signature, AlgebraElement,
    DEFAULT_MAX_MAPS,
};
use assoc_spectra::terms::Bracketing;

fn main() {
    let g = Digraph::from_edges(&[("u", "v"), ("u", "w"), ("w", "w")]);
    let t: Bracketing = "(x1x2)x3".parse().expect("well formed");

    // The product u.v keeps the left operand when (u, v) is an edge
    // and collapses to the absorbing element otherwise.
    use AlgebraElement::{Bottom, Vertex};
    let assignment = [Vertex(0), Vertex(1), Vertex(2)]; // u, v, w
    println!(
        "(x1x2)x3 at (u, v, w) evaluates to {:?}",
        eval_term(&g, &t, &assignment)
    );
    let assignment = [Vertex(0), Vertex(1), Vertex(0)]; // u, v, u
    assert_eq!(eval_term(&g, &t, &assignment), Bottom);
    println!("(x1x2)x3 at (u, v, u) collapses to the absorbing element: u has no loop");

    // Two bracketings induce the same term operation exactly when
    // their homomorphism sets into the graph coincide.
    let sig = hom_signature(&g, &t.dfs_tree(), DEFAULT_MAX_MAPS).expect("in budget");
    println!(
        "\n(x1x2)x3 admits {} homomorphisms into the graph",
        sig.0.len()
    );

    let pairs = [
        ("(x1x2)x3", "x1(x2x3)"),
        ("x1(x2(x3x4))", "(x1(x2x3))x4"),
        ("((x1x2)x3)x4", "(x1x2)(x3x4)"),
    ];
    println!("\nper-pair agreement of the two oracle routes on all 16 two-vertex digraphs:");
    for (s, s2) in pairs {
        let a: Bracketing = s.parse().expect("well formed");
        let b: Bracketing = s2.parse().expect("well formed");
        let satisfied = enumerate_digraphs(2)
            .filter(|g| {
                decide_identity_oracle_cross_checked(g, &a, &b, DEFAULT_MAX_MAPS)
                    .expect("in budget")
            })
            .count();
        println!("  {s} ~ {s2}: satisfied on {satisfied} of 16");
    }
}
