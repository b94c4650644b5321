//! Associative spectra, the R_n word family, and growth-rate checks.
//!
//! The associative spectrum of a graph algebra is the sequence s_n of
//! equivalence classes of bracketings under "the identity t ≈ t'
//! holds". Two backends compute it: the oracle groups bracketings by
//! their homomorphism signatures, and the theorem backend unions pairs
//! the condition engine accepts. The R_n binary words govern the least
//! possible exponential growth rate; their count, recurrence, and limit
//! ratio live here too.

use crate::decision::IdentityDecider;
use crate::digraph::Digraph;
use crate::oracle::{hom_signature, HomSignature, OracleError};
use crate::terms::{catalan, enumerate_dfs_trees, DfsTree};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

/// Default guard for the theorem backend: Catalan(n−1)² pair decisions
/// grow fast, so sizes beyond this need [`spectrum_with_limits`].
pub const THEOREM_MAX_N: usize = 12;

/// Which engine computes a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Group bracketings by brute-force homomorphism signatures.
    Oracle,
    /// Merge bracketings whenever the ten-condition decision accepts.
    Theorem,
}

/// Errors from spectra and R-sequence computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Budget(#[from] OracleError),
    #[error("spectrum requires n >= 2, got {n}")]
    SpectrumTooSmall { n: usize },
    #[error(
        "theorem backend is guarded to n <= {max}, got {n}; \
         raise the limit with spectrum_with_limits"
    )]
    TheoremGuard { n: usize, max: usize },
    #[error("the R-word family starts at length 2, got {n}")]
    RTooSmall { n: usize },
    #[error("|R_{n}| does not fit in 64 bits")]
    ROverflow { n: usize },
    #[error("word of length {len} is not a valid R-word: {reason}")]
    InvalidRWord { len: usize, reason: &'static str },
}

/// One spectrum entry: the class count s_n and the full partition of
/// the bracketings of size n, as canonical term strings. Classes are
/// ordered by their first member in enumeration order and each class
/// lists members in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub s_n: u64,
    pub backend: Backend,
    pub classes: Vec<Vec<String>>,
}

/// Computes the size-n spectrum of `g` with the default theorem guard.
pub fn spectrum(
    g: &Digraph,
    n: usize,
    backend: Backend,
    max_maps: u64,
) -> Result<SpectrumReport, SpectrumError> {
    spectrum_with_limits(g, n, backend, max_maps, THEOREM_MAX_N)
}

/// Total assignments the oracle backend enumerates: a |V|^n sweep per
/// bracketing, Catalan(n−1) bracketings. Saturates for sizes far
/// beyond any feasible budget.
fn oracle_work(k: usize, n: usize) -> u128 {
    if n > 36 {
        return u128::MAX;
    }
    (catalan(n - 1) as u128).saturating_mul((k.max(1) as u128).saturating_pow(n as u32))
}

/// [`spectrum`] with an explicit theorem-backend size guard.
pub fn spectrum_with_limits(
    g: &Digraph,
    n: usize,
    backend: Backend,
    max_maps: u64,
    theorem_max_n: usize,
) -> Result<SpectrumReport, SpectrumError> {
    if n < 2 {
        return Err(SpectrumError::SpectrumTooSmall { n });
    }
    // Guard and budget checks come before materializing B_n, whose size
    // is itself exponential.
    match backend {
        Backend::Theorem if n > theorem_max_n => {
            return Err(SpectrumError::TheoremGuard {
                n,
                max: theorem_max_n,
            });
        }
        Backend::Oracle => {
            let required = oracle_work(g.vertex_count(), n);
            if required > max_maps as u128 {
                return Err(OracleError::BudgetExceeded {
                    required,
                    limit: max_maps,
                }
                .into());
            }
        }
        _ => {}
    }
    let trees: Vec<DfsTree> = enumerate_dfs_trees(n).collect();
    let classes: Vec<Vec<usize>> = match backend {
        Backend::Oracle => {
            let signatures: Vec<HomSignature> = trees
                .par_iter()
                .map(|t| hom_signature(g, t, max_maps))
                .collect::<Result<_, _>>()?;
            let mut class_of: HashMap<&HomSignature, usize> = HashMap::new();
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for (i, s) in signatures.iter().enumerate() {
                match class_of.get(s) {
                    Some(&c) => classes[c].push(i),
                    None => {
                        class_of.insert(s, classes.len());
                        classes.push(vec![i]);
                    }
                }
            }
            classes
        }
        Backend::Theorem => {
            let decider = IdentityDecider::new(g, n);
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for i in 0..trees.len() {
                // Representatives of distinct classes never satisfy the
                // identity with each other, so at most one class matches
                // and a parallel search is still deterministic.
                let hit = classes
                    .par_iter()
                    .position_any(|c| decider.decide_trees(&trees[c[0]], &trees[i]));
                match hit {
                    Some(c) => classes[c].push(i),
                    None => classes.push(vec![i]),
                }
            }
            classes
        }
    };
    let classes: Vec<Vec<String>> = classes
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|i| trees[i].bracketing().to_string())
                .collect()
        })
        .collect();
    Ok(SpectrumReport {
        n,
        s_n: classes.len() as u64,
        backend,
        classes,
    })
}

// ---------------------------------------------------------------------
// The R_n words

/// A binary word with no prefix 01, no suffix 10, and no factor 101.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RWord(String);

/// Shared membership test over 0/1 bytes.
fn r_violation(bits: &[u8]) -> Option<&'static str> {
    if bits.len() < 2 {
        return Some("length must be at least 2");
    }
    if bits[0] == 0 && bits[1] == 1 {
        return Some("starts with 01");
    }
    if bits[bits.len() - 2] == 1 && bits[bits.len() - 1] == 0 {
        return Some("ends with 10");
    }
    if bits.windows(3).any(|w| w == [1, 0, 1]) {
        return Some("contains 101");
    }
    None
}

impl RWord {
    pub fn new(word: &str) -> Result<RWord, SpectrumError> {
        let mut bits = Vec::with_capacity(word.len());
        for c in word.chars() {
            match c {
                '0' => bits.push(0u8),
                '1' => bits.push(1u8),
                _ => {
                    return Err(SpectrumError::InvalidRWord {
                        len: word.len(),
                        reason: "contains a character other than 0 and 1",
                    })
                }
            }
        }
        match r_violation(&bits) {
            Some(reason) => Err(SpectrumError::InvalidRWord {
                len: word.len(),
                reason,
            }),
            None => Ok(RWord(word.to_string())),
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// All R-words of length `n` in ascending binary order. Exponential in
/// `n`; meant for small lengths.
pub fn enumerate_r_words(n: usize) -> Result<Vec<RWord>, SpectrumError> {
    if n < 2 {
        return Err(SpectrumError::RTooSmall { n });
    }
    assert!(
        n <= 30,
        "R-word enumeration is exponential; use the recurrence beyond n = 30"
    );
    let mut out = Vec::new();
    let mut bits = vec![0u8; n];
    for mask in 0u64..(1 << n) {
        for (i, b) in bits.iter_mut().enumerate() {
            *b = ((mask >> (n - 1 - i)) & 1) as u8;
        }
        if r_violation(&bits).is_none() {
            let word: String = bits.iter().map(|&b| char::from(b'0' + b)).collect();
            out.push(RWord(word));
        }
    }
    Ok(out)
}

/// How to compute |R_n|.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMethod {
    /// Filter all 2^n words; exact but exponential.
    Enumerate,
    /// Seed lengths 2..=5 by enumeration, then
    /// |R_n| = |R_{n-1}| + |R_{n-2}| + |R_{n-4}|.
    Recurrence,
}

/// |R_n| by either method; the two agree wherever enumeration is
/// feasible.
pub fn r_count(n: usize, method: RMethod) -> Result<u64, SpectrumError> {
    if n < 2 {
        return Err(SpectrumError::RTooSmall { n });
    }
    match method {
        RMethod::Enumerate => Ok(enumerate_r_words(n)?.len() as u64),
        RMethod::Recurrence => {
            let mut a: Vec<u64> = (2..=5.min(n))
                .map(|k| r_count(k, RMethod::Enumerate))
                .collect::<Result<_, _>>()?;
            for k in a.len() + 2..=n {
                // a[i] holds |R_{i+2}|.
                let next = a[k - 3]
                    .checked_add(a[k - 4])
                    .and_then(|s| s.checked_add(a[k - 6]))
                    .ok_or(SpectrumError::ROverflow { n: k })?;
                a.push(next);
            }
            Ok(a[n - 2])
        }
    }
}

/// The growth rate α as the radical closed form of the unique positive
/// root of x⁴ − x³ − x² − 1.
pub fn alpha_closed_form() -> f64 {
    let s = 69.0f64.sqrt();
    ((25.0 + 3.0 * s) / 2.0).cbrt() / 3.0 + ((25.0 - 3.0 * s) / 2.0).cbrt() / 3.0 + 2.0 / 3.0
}

/// |x⁴ − x³ − x² − 1| at the closed form; near zero when the radical
/// expression really is the root.
pub fn alpha_root_residual() -> f64 {
    let a = alpha_closed_form();
    (a.powi(4) - a.powi(3) - a.powi(2) - 1.0).abs()
}

/// The consecutive-ratio estimate |R_{N+1}| / |R_N| of α.
pub fn alpha_estimate(n_cap: usize) -> f64 {
    assert!(n_cap >= 10, "the ratio estimate needs N >= 10");
    let num = r_count(n_cap + 1, RMethod::Recurrence).expect("n_cap + 1 >= 2");
    let den = r_count(n_cap, RMethod::Recurrence).expect("n_cap >= 2");
    num as f64 / den as f64
}

// ---------------------------------------------------------------------
// Counting

/// The number of distinct level-one label sets over all DFS trees of
/// size n, by direct enumeration. Label 2 is always a child of the
/// root and any subset of 3..n can join it, so the count is 2^(n-2).
pub fn level_one_class_count(n: usize) -> u64 {
    assert!(n >= 2, "level-one classes need n >= 2");
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in enumerate_dfs_trees(n) {
        sets.insert(t.children(1).to_vec());
    }
    sets.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::count_height_at_most_2;

    fn fork_loop() -> Digraph {
        Digraph::from_edges(&[("u", "v"), ("u", "w"), ("w", "w")])
    }

    #[test]
    fn edge_spectrum_isolates_the_left_comb() {
        let g = Digraph::from_edges(&[("a", "b")]);
        let rep = spectrum(&g, 4, Backend::Oracle, 1_000_000).unwrap();
        assert_eq!(rep.s_n, 2);
        assert_eq!(rep.classes[0], vec!["((x1x2)x3)x4".to_string()]);
        assert_eq!(rep.classes[1].len(), 4);
        let thm = spectrum(&g, 4, Backend::Theorem, 1_000_000).unwrap();
        assert_eq!(rep.classes, thm.classes);
    }

    #[test]
    fn looped_vertex_has_constant_spectrum_one() {
        let g = Digraph::from_edges(&[("a", "a")]);
        for n in 2..=6 {
            for backend in [Backend::Oracle, Backend::Theorem] {
                let rep = spectrum(&g, n, backend, 10_000_000).unwrap();
                assert_eq!(rep.s_n, 1, "n = {n}, backend {backend:?}");
                assert_eq!(rep.classes[0].len() as u64, catalan(n - 1));
            }
        }
    }

    #[test]
    fn two_cycle_spectrum_is_two_to_the_n_minus_2() {
        let g = Digraph::from_edges(&[("a", "b"), ("b", "a")]);
        for n in 3..=7 {
            for backend in [Backend::Oracle, Backend::Theorem] {
                let rep = spectrum(&g, n, backend, 10_000_000).unwrap();
                assert_eq!(rep.s_n, 1u64 << (n - 2), "n = {n}, backend {backend:?}");
            }
        }
    }

    #[test]
    fn fork_loop_spectrum_counts_r_words() {
        let g = fork_loop();
        assert_eq!(spectrum(&g, 3, Backend::Oracle, 10_000_000).unwrap().s_n, 2);
        assert_eq!(spectrum(&g, 4, Backend::Oracle, 10_000_000).unwrap().s_n, 4);
        for n in 3..=7 {
            let expect = r_count(n - 1, RMethod::Enumerate).unwrap();
            for backend in [Backend::Oracle, Backend::Theorem] {
                let rep = spectrum(&g, n, backend, 100_000_000).unwrap();
                assert_eq!(rep.s_n, expect, "n = {n}, backend {backend:?}");
            }
        }
    }

    #[test]
    fn backends_agree_as_partitions_on_sample_graphs() {
        let graphs = [
            fork_loop(),
            Digraph::from_edges(&[("a", "b")]),
            Digraph::from_edges(&[("a", "b"), ("b", "c"), ("c", "a")]),
            Digraph::from_edges(&[("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]),
            Digraph::from_edges(&[("a", "b"), ("b", "b"), ("b", "c")]),
        ];
        for g in &graphs {
            for n in 3..=6 {
                let oracle = spectrum(g, n, Backend::Oracle, 100_000_000).unwrap();
                let theorem = spectrum(g, n, Backend::Theorem, 100_000_000).unwrap();
                assert_eq!(oracle.classes, theorem.classes, "n = {n}");
                assert_eq!(oracle.s_n, oracle.classes.len() as u64);
                assert!(oracle.s_n <= catalan(n - 1));
                let total: usize = oracle.classes.iter().map(|c| c.len()).sum();
                assert_eq!(total as u64, catalan(n - 1), "classes partition B_n");
            }
        }
    }

    #[test]
    fn spectrum_guards() {
        let g = fork_loop();
        assert_eq!(
            spectrum(&g, 1, Backend::Oracle, 100).unwrap_err(),
            SpectrumError::SpectrumTooSmall { n: 1 }
        );
        assert_eq!(
            spectrum(&g, 13, Backend::Theorem, 100).unwrap_err(),
            SpectrumError::TheoremGuard {
                n: 13,
                max: THEOREM_MAX_N
            }
        );
        match spectrum(&g, 20, Backend::Oracle, 100).unwrap_err() {
            SpectrumError::Budget(OracleError::BudgetExceeded { required, limit }) => {
                assert_eq!(required, catalan(19) as u128 * 3u128.pow(20));
                assert_eq!(limit, 100);
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn r_word_membership() {
        assert!(RWord::new("00").is_ok());
        assert!(RWord::new("1000").is_ok());
        assert_eq!(
            RWord::new("01").unwrap_err(),
            SpectrumError::InvalidRWord {
                len: 2,
                reason: "starts with 01"
            }
        );
        assert_eq!(
            RWord::new("110").unwrap_err(),
            SpectrumError::InvalidRWord {
                len: 3,
                reason: "ends with 10"
            }
        );
        assert_eq!(
            RWord::new("11011").unwrap_err(),
            SpectrumError::InvalidRWord {
                len: 5,
                reason: "contains 101"
            }
        );
        assert_eq!(
            RWord::new("0x1").unwrap_err(),
            SpectrumError::InvalidRWord {
                len: 3,
                reason: "contains a character other than 0 and 1"
            }
        );
        assert_eq!(
            RWord::new("1").unwrap_err(),
            SpectrumError::InvalidRWord {
                len: 1,
                reason: "length must be at least 2"
            }
        );
    }

    #[test]
    fn small_r_families_match_hand_filtering() {
        let words2: Vec<&str> = vec!["00", "11"];
        let words3: Vec<&str> = vec!["000", "001", "100", "111"];
        assert_eq!(
            enumerate_r_words(2)
                .unwrap()
                .iter()
                .map(RWord::as_str)
                .collect::<Vec<_>>(),
            words2
        );
        assert_eq!(
            enumerate_r_words(3)
                .unwrap()
                .iter()
                .map(RWord::as_str)
                .collect::<Vec<_>>(),
            words3
        );
        let counts: Vec<u64> = (2..=5)
            .map(|n| r_count(n, RMethod::Enumerate).unwrap())
            .collect();
        assert_eq!(counts, vec![2, 4, 7, 12]);
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for n in 2..=20 {
            assert_eq!(
                r_count(n, RMethod::Recurrence).unwrap(),
                r_count(n, RMethod::Enumerate).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(
            r_count(1, RMethod::Recurrence),
            Err(SpectrumError::RTooSmall { n: 1 })
        );
    }

    #[test]
    fn alpha_is_the_quartic_root_and_the_ratio_limit() {
        assert!(
            alpha_root_residual() < 1e-9,
            "residual {}",
            alpha_root_residual()
        );
        let a = alpha_closed_form();
        assert!((alpha_estimate(40) - 1.7549).abs() < 1e-3);
        assert!((alpha_estimate(40) - a).abs() < (alpha_estimate(10) - a).abs());
    }

    #[test]
    fn level_one_classes_count_powers_of_two() {
        assert_eq!(level_one_class_count(3), 2);
        assert_eq!(level_one_class_count(4), 4);
        assert_eq!(level_one_class_count(6), 16);
        for n in 2..=10 {
            assert_eq!(level_one_class_count(n), 1u64 << (n - 2));
            assert_eq!(level_one_class_count(n), count_height_at_most_2(n).unwrap());
        }
    }
}
