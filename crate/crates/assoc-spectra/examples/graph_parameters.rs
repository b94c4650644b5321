//! Loads the bundled 34-vertex gallery graph and prints its structural
//! parameters, whirl decomposition, and a slice of the omega_G table.
//! Run with `cargo run --example graph_parameters`.

use assoc_spectra::digraph::{omega_g, Digraph};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn main() {
    let text = std::fs::read_to_string(fixture("whirl_gallery.g")).expect("bundled fixture");
    let g = Digraph::parse(&text).expect("fixture parses");
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("{}", g.params());

    println!("\nnontrivial strongly connected components:");
    let scc = g.scc();
    for c in scc.nontrivial_component_ids().collect::<Vec<_>>() {
        match g.whirl(c) {
            Some(w) => {
                let blocks: Vec<String> = w
                    .blocks_named(&g)
                    .iter()
                    .map(|b| format!("{{{}}}", b.join(", ")))
                    .collect();
                println!("  a {}-whirl with blocks {}", w.m, blocks.join(" -> "));
            }
            None => println!("  component {c} is not a whirl"),
        }
    }

    println!("\nomega_G(l, r) for l <= 5 (rows l, columns r = 1..=l):");
    for ell in 1..=5 {
        let row: Vec<String> = (1..=ell)
            .map(|r| omega_g(&g, ell, r).expect("in range").to_string())
            .collect();
        println!("  l = {ell}: {}", row.join(" "));
    }
}
