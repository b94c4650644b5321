//! Brute-force semantic ground truth.
//!
//! Everything else in this crate is judged against direct evaluation:
//! the graph algebra multiplies by u·v = u when (u,v) is an edge and
//! collapses to the absorbing element otherwise, and an identity t ≈ t'
//! holds exactly when the two terms agree under every assignment.
//! Equivalently (and faster), it holds exactly when the same maps
//! φ : {x1..xn} → V are homomorphisms of the two DFS trees into the
//! graph; both routes are available so they can cross-check each other.

use crate::digraph::Digraph;
use crate::terms::{Bracketing, DfsTree};
use serde::Serialize;
use thiserror::Error;

/// Default ceiling on the number of enumerated assignments.
pub const DEFAULT_MAX_MAPS: u64 = 100_000_000;

/// Environment override for the enumeration budget.
pub const MAX_MAPS_ENV: &str = "ASSOC_SPECTRA_MAX_MAPS";

/// The enumeration budget: the environment override when set and
/// parseable, the default otherwise.
pub fn max_maps_from_env() -> u64 {
    std::env::var(MAX_MAPS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_MAPS)
}

/// Errors from the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "enumeration budget exceeded: {required} assignments needed, limit {limit} \
         (raise with --max-maps or {MAX_MAPS_ENV})"
    )]
    BudgetExceeded { required: u128, limit: u64 },
}

/// An element of the graph algebra: a vertex or the absorbing element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraElement {
    Vertex(usize),
    Bottom,
}

/// Evaluates `t` under `assignment` (indexed by variable, so
/// `assignment[i-1]` is the value of xi). The product of two vertices
/// joined by an edge is the left one; every other product is absorbing.
pub fn eval_term(g: &Digraph, t: &Bracketing, assignment: &[AlgebraElement]) -> AlgebraElement {
    match t {
        Bracketing::Leaf(i) => assignment[i - 1],
        Bracketing::Node(l, r) => {
            match (eval_term(g, l, assignment), eval_term(g, r, assignment)) {
                (AlgebraElement::Vertex(u), AlgebraElement::Vertex(v)) if g.has_edge(u, v) => {
                    AlgebraElement::Vertex(u)
                }
                _ => AlgebraElement::Bottom,
            }
        }
    }
}

/// Whether `phi` (indexed by label, `phi[v-1]` the image of v) maps
/// every tree edge of `t` onto a graph edge.
pub fn is_homomorphism(t: &DfsTree, g: &Digraph, phi: &[usize]) -> bool {
    (2..=t.n()).all(|v| {
        let p = t.parent(v).expect("non-root vertices have parents");
        g.has_edge(phi[p - 1], phi[v - 1])
    })
}

/// The homomorphism set of a tree into a graph, canonically encoded:
/// each map φ becomes the base-|V| number with φ(x1) most significant,
/// and the list is ascending. Two same-size bracketings have equal
/// signatures exactly when the graph algebra satisfies their identity,
/// which also makes the signature a grouping key for spectra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomSignature(pub Vec<u64>);

/// Checks the budget: enumerating `base^n` assignments must stay within
/// `max_maps`.
fn check_budget(base: usize, n: usize, max_maps: u64) -> Result<(), OracleError> {
    let required = (base as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > max_maps as u128 {
        return Err(OracleError::BudgetExceeded {
            required,
            limit: max_maps,
        });
    }
    Ok(())
}

/// Collects the homomorphisms of `t` into `g` by assigning labels in
/// DFS order with immediate edge checks; the parent of a label is
/// always smaller, so each partial map is pruned as soon as it breaks.
/// Ascending choices in label order emit the encodings pre-sorted.
pub fn hom_signature(g: &Digraph, t: &DfsTree, max_maps: u64) -> Result<HomSignature, OracleError> {
    let k = g.vertex_count();
    let n = t.n();
    check_budget(k, n, max_maps)?;
    let mut out: Vec<u64> = Vec::new();
    let mut phi = vec![0usize; n];
    fn assign(
        g: &Digraph,
        t: &DfsTree,
        phi: &mut [usize],
        v: usize,
        code: u64,
        out: &mut Vec<u64>,
    ) {
        let n = t.n();
        if v > n {
            out.push(code);
            return;
        }
        let k = g.vertex_count() as u64;
        match t.parent(v) {
            None => {
                for u in 0..g.vertex_count() {
                    phi[v - 1] = u;
                    assign(g, t, phi, v + 1, code * k + u as u64, out);
                }
            }
            Some(p) => {
                for &u in g.out_neighbors(phi[p - 1]) {
                    phi[v - 1] = u;
                    assign(g, t, phi, v + 1, code * k + u as u64, out);
                }
            }
        }
    }
    assign(g, t, &mut phi, 1, 0, &mut out);
    debug_assert!(
        out.windows(2).all(|w| w[0] < w[1]),
        "encodings arrive strictly ascending"
    );
    Ok(HomSignature(out))
}

/// Oracle decision by homomorphism sets: the identity holds iff the two
/// trees admit exactly the same maps into `g`.
pub fn decide_identity_oracle(
    g: &Digraph,
    t: &Bracketing,
    t_prime: &Bracketing,
    max_maps: u64,
) -> Result<bool, OracleError> {
    Ok(hom_signature(g, &t.dfs_tree(), max_maps)?
        == hom_signature(g, &t_prime.dfs_tree(), max_maps)?)
}

/// Oracle decision by exhaustive evaluation: the identity holds iff the
/// two terms evaluate equally under every assignment into V ∪ {⊥}. The
/// budget covers the (|V|+1)^n assignments this route enumerates.
pub fn decide_identity_oracle_by_evaluation(
    g: &Digraph,
    t: &Bracketing,
    t_prime: &Bracketing,
    max_maps: u64,
) -> Result<bool, OracleError> {
    let k = g.vertex_count();
    let n = t.n().max(t_prime.n());
    check_budget(k + 1, n, max_maps)?;
    let mut assignment = vec![AlgebraElement::Bottom; n];
    // Odometer over (V ∪ {⊥})^n; digit k encodes ⊥.
    let mut digits = vec![0usize; n];
    loop {
        for (slot, &d) in assignment.iter_mut().zip(&digits) {
            *slot = if d == k {
                AlgebraElement::Bottom
            } else {
                AlgebraElement::Vertex(d)
            };
        }
        if eval_term(g, t, &assignment) != eval_term(g, t_prime, &assignment) {
            return Ok(false);
        }
        let mut i = 0;
        while i < n && digits[i] == k {
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            return Ok(true);
        }
        digits[i] += 1;
    }
}

/// Runs both oracle routes and insists they agree; a split would mean
/// the homomorphism criterion and direct evaluation disagree, which is
/// a bug, not an input problem.
pub fn decide_identity_oracle_cross_checked(
    g: &Digraph,
    t: &Bracketing,
    t_prime: &Bracketing,
    max_maps: u64,
) -> Result<bool, OracleError> {
    let by_homs = decide_identity_oracle(g, t, t_prime, max_maps)?;
    let by_eval = decide_identity_oracle_by_evaluation(g, t, t_prime, max_maps)?;
    assert_eq!(
        by_homs, by_eval,
        "oracle routes disagree on {t} vs {t_prime}: homomorphism sets say {by_homs}, \
         direct evaluation says {by_eval}"
    );
    Ok(by_homs)
}
