//! Deciding bracketing identities of graph algebras and computing their
//! associative spectra.
//!
//! The graph algebra of a digraph G multiplies by the Shallon product:
//! `u * v = u` when `(u, v)` is an edge of G, and the absorbing element
//! otherwise. Two bracketings t, t' of `x1..xn` induce the same term
//! operation on that algebra exactly when a handful of structural
//! parameters of G line up with combinatorial parameters of the pair
//! (t, t'). This crate implements both parameter families, the resulting
//! decision procedure, a brute-force semantic oracle the procedure is
//! tested against, and the spectrum and classification machinery built
//! on top.
//!
//! Modules:
//! - [`terms`]: bracketings, DFS trees, depth sequences, enumeration.
//! - [`digraph`]: digraphs, SCC and whirl analysis, walk extremals,
//!   graph parameters.
//! - [`pairparams`]: parameters of a pair of distinct bracketings.
//! - [`decision`]: the identity decision procedure and whole-graph
//!   classifiers.
//! - [`oracle`]: brute-force term evaluation and homomorphism counting.
//! - [`spectrum`]: fine and associative spectra, the restricted word
//!   sequence, growth-rate checks.
//! - [`cli`]: command-line front end over the library.
//!
//! ```
//! use assoc_spectra::decision::decide_identity;
//! use assoc_spectra::digraph::Digraph;
//! use assoc_spectra::oracle::{decide_identity_oracle, DEFAULT_MAX_MAPS};
//! use assoc_spectra::spectrum::{spectrum, Backend};
//!
//! // u -> v, u -> w, w -> w: a graph whose spectrum grows like 1.755^n.
//! let g = Digraph::from_edges(&[("u", "v"), ("u", "w"), ("w", "w")]);
//!
//! let t = "(x1x2)x3".parse().unwrap();
//! let t2 = "x1(x2x3)".parse().unwrap();
//! let decision = decide_identity(&g, &t, &t2).unwrap();
//! assert!(!decision.satisfied);
//! assert_eq!(
//!     decide_identity_oracle(&g, &t, &t2, DEFAULT_MAX_MAPS).unwrap(),
//!     decision.satisfied,
//! );
//!
//! let report = spectrum(&g, 5, Backend::Theorem, DEFAULT_MAX_MAPS).unwrap();
//! assert_eq!(report.s_n, 7);
//! ```

#![forbid(unsafe_code)]

pub mod cli;
pub mod decision;
pub mod digraph;
pub mod oracle;
pub mod pairparams;
pub mod spectrum;
pub mod terms;
