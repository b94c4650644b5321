//! Parameters of a pair of distinct bracketings.
//!
//! For distinct bracketings t, t' of x1..xn with DFS trees T, T', the
//! decision procedure compares graph parameters against a family of
//! quantities read off the two trees: height and depth agreements,
//! subtree agreements, and the profile set of the disagreement region.
//! Every quantity here is symmetric in the pair.

use crate::terms::{Bracketing, DfsTree};
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// Errors from pair parameter construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("pair parameters need two distinct bracketings")]
    EqualTerms,
    #[error("bracketings have different sizes: {left} vs {right} leaves")]
    SizeMismatch { left: usize, right: usize },
}

/// Parameters of a pair of distinct same-size bracketings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairParams {
    /// H: the smaller of the two tree heights.
    pub h: i64,
    /// M: gcd of all depth differences |d(x) - d'(x)|.
    pub m: u64,
    /// L: largest l such that depth <= l in either tree forces equal
    /// depths. Always >= 0 (roots agree) and < H.
    pub l: i64,
    /// Y: largest m such that subtree height <= m in either tree forces
    /// equal subtrees; -1 exactly when the trees differ at a leaf.
    pub y: i64,
    /// Z: smallest height of a vertex with equal subtrees but distinct
    /// parents. Such a vertex always exists for distinct bracketings.
    pub z: i64,
    /// Delta: variables whose subtrees differ, ascending; contains x1.
    pub delta: Vec<usize>,
    /// Omega: the (depth, subtree height) profiles, in both trees, of
    /// all Delta members; sorted.
    pub omega_set: Vec<(u64, u64)>,
    /// xi: minimum of depth + height over the profile set.
    pub xi: i64,
    /// omega(0), ..., omega(xi); see [`PairParams::omega`].
    pub omega_prefix: Vec<i64>,
    /// Lambda: variables with differing depths, one of which is L + 1;
    /// nonempty by maximality of L.
    pub lambda_set: Vec<usize>,
    /// lambda: minimum over Lambda of the larger subtree height.
    pub lambda: i64,
}

impl std::fmt::Display for PairParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vars = |xs: &[usize]| {
            xs.iter()
                .map(|x| format!("x{x}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(f, "H      = {}", self.h)?;
        writeln!(f, "M      = {}", self.m)?;
        writeln!(f, "L      = {}", self.l)?;
        writeln!(f, "Y      = {}", self.y)?;
        writeln!(f, "Z      = {}", self.z)?;
        writeln!(f, "Delta  = {{{}}}", vars(&self.delta))?;
        writeln!(
            f,
            "Omega  = {{{}}}",
            self.omega_set
                .iter()
                .map(|&(d, h)| format!("({d},{h})"))
                .collect::<Vec<_>>()
                .join(", ")
        )?;
        writeln!(f, "xi     = {}", self.xi)?;
        writeln!(
            f,
            "omega  = [{}]",
            self.omega_prefix
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )?;
        writeln!(f, "Lambda = {{{}}}", vars(&self.lambda_set))?;
        write!(f, "lambda = {}", self.lambda)
    }
}

/// True when the subtrees rooted at `x` coincide as labeled trees.
/// Subtrees are label intervals, so equal spans plus equal parents over
/// the interior decide it.
fn subtree_eq(a: &DfsTree, b: &DfsTree, x: usize) -> bool {
    let end = a.span_end(x);
    end == b.span_end(x) && (x + 1..=end).all(|v| a.parent(v) == b.parent(v))
}

/// Parameters of the pair (t, t'); the terms must be distinct and have
/// the same number of variables.
pub fn pair_params(t: &Bracketing, t_prime: &Bracketing) -> Result<PairParams, PairError> {
    if t.n() != t_prime.n() {
        return Err(PairError::SizeMismatch {
            left: t.n(),
            right: t_prime.n(),
        });
    }
    if t == t_prime {
        return Err(PairError::EqualTerms);
    }
    Ok(PairParams::from_trees_unchecked(
        &t.dfs_tree(),
        &t_prime.dfs_tree(),
    ))
}

impl PairParams {
    /// Tree-level entry point used when the DFS trees are already at
    /// hand.
    pub fn from_trees(a: &DfsTree, b: &DfsTree) -> Result<PairParams, PairError> {
        if a.n() != b.n() {
            return Err(PairError::SizeMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        if a == b {
            return Err(PairError::EqualTerms);
        }
        Ok(Self::from_trees_unchecked(a, b))
    }

    fn from_trees_unchecked(a: &DfsTree, b: &DfsTree) -> PairParams {
        let n = a.n();
        let h = a.height().min(b.height()) as i64;

        let mut delta = Vec::new();
        let mut y_threshold = usize::MAX;
        for x in 1..=n {
            if !subtree_eq(a, b, x) {
                delta.push(x);
                y_threshold = y_threshold.min(a.subtree_height(x).min(b.subtree_height(x)));
            }
        }
        debug_assert_eq!(delta.first(), Some(&1), "distinct trees differ at the root");
        let y = y_threshold as i64 - 1;

        let mut l_threshold = usize::MAX;
        let mut m: u64 = 0;
        for x in 1..=n {
            let (da, db) = (a.depth(x), b.depth(x));
            if da != db {
                l_threshold = l_threshold.min(da.min(db));
                m = m.gcd(&(da.abs_diff(db) as u64));
            }
        }
        debug_assert!(
            l_threshold < usize::MAX,
            "distinct trees have differing depths"
        );
        let l = l_threshold as i64 - 1;

        let lambda_set: Vec<usize> = (1..=n)
            .filter(|&x| {
                let (da, db) = (a.depth(x), b.depth(x));
                da != db && (da as i64 == l + 1 || db as i64 == l + 1)
            })
            .collect();
        let lambda = lambda_set
            .iter()
            .map(|&x| a.subtree_height(x).max(b.subtree_height(x)) as i64)
            .min()
            .expect("a depth-(L+1) disagreement witnesses the maximality of L");

        let z = (2..=n)
            .filter(|&x| a.parent(x) != b.parent(x) && subtree_eq(a, b, x))
            .map(|x| a.subtree_height(x) as i64)
            .min()
            .expect("distinct bracketings have a vertex with equal subtrees and distinct parents");

        let mut profiles: BTreeSet<(u64, u64)> = BTreeSet::new();
        for &x in &delta {
            profiles.insert((a.depth(x) as u64, a.subtree_height(x) as u64));
            profiles.insert((b.depth(x) as u64, b.subtree_height(x) as u64));
        }
        let omega_set: Vec<(u64, u64)> = profiles.into_iter().collect();
        let xi = omega_set
            .iter()
            .map(|&(d, hh)| (d + hh) as i64)
            .min()
            .expect("Delta is nonempty");
        let omega_prefix: Vec<i64> = (0..=xi)
            .map(|r| {
                if r == xi {
                    xi
                } else {
                    omega_set
                        .iter()
                        .filter(|&&(d, _)| (d as i64) <= r)
                        .map(|&(d, hh)| (d + hh) as i64)
                        .min()
                        .expect("x1 contributes a depth-0 profile")
                }
            })
            .collect();

        PairParams {
            h,
            m,
            l,
            y,
            z,
            delta,
            omega_set,
            xi,
            omega_prefix,
            lambda_set,
            lambda,
        }
    }

    /// omega(r): the smallest depth + height over profiles of depth at
    /// most r, saturating at xi once r reaches it. omega(0) equals H.
    pub fn omega(&self, r: usize) -> i64 {
        if r as i64 >= self.xi {
            self.xi
        } else {
            self.omega_prefix[r]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::enumerate_dfs_trees;

    fn pp(t: &str, t2: &str) -> PairParams {
        pair_params(&t.parse().unwrap(), &t2.parse().unwrap()).unwrap()
    }

    #[test]
    fn rejects_equal_terms_and_size_mismatch() {
        let t: Bracketing = "x1(x2x3)".parse().unwrap();
        assert_eq!(pair_params(&t, &t.clone()), Err(PairError::EqualTerms));
        let s: Bracketing = "x1x2".parse().unwrap();
        assert_eq!(
            pair_params(&t, &s),
            Err(PairError::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn associativity_pair_parameters() {
        let p = pp("x1(x2x3)", "(x1x2)x3");
        assert_eq!(p.h, 1);
        assert_eq!(p.m, 1);
        assert_eq!(p.l, 0);
        assert_eq!(p.y, -1);
        assert_eq!(p.z, 0);
        assert_eq!(p.delta, vec![1, 2]);
        assert_eq!(p.omega_set, vec![(0, 1), (0, 2), (1, 0), (1, 1)]);
        assert_eq!(p.xi, 1);
        assert_eq!(p.omega_prefix, vec![1, 1]);
        assert_eq!(p.lambda_set, vec![3]);
        assert_eq!(p.lambda, 0);
        assert_eq!(p.omega(0), 1);
        assert_eq!(p.omega(5), 1);
    }

    #[test]
    fn depth_two_pair_parameters() {
        // Trees [0,1,2,3] and [0,1,2,1]: a pair whose depth differences
        // are all even.
        let p = pp("x1(x2(x3x4))", "(x1(x2x3))x4");
        assert_eq!(p.h, 2);
        assert_eq!(p.m, 2);
        assert_eq!(p.l, 0);
        assert_eq!(p.y, -1);
        assert_eq!(p.z, 0);
        assert_eq!(p.delta, vec![1, 2, 3]);
        assert_eq!(
            p.omega_set,
            vec![(0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1)]
        );
        assert_eq!(p.xi, 2);
        assert_eq!(p.omega_prefix, vec![2, 2, 2]);
        assert_eq!(p.lambda_set, vec![4]);
        assert_eq!(p.lambda, 0);
    }

    #[test]
    fn fourteen_vertex_pair_pins_y_and_z() {
        // Two B_14 trees differing only in the parent of x11.
        let a = DfsTree::from_parents(&[0, 1, 2, 3, 4, 5, 5, 4, 8, 9, 2, 11, 12, 11]).unwrap();
        let b = DfsTree::from_parents(&[0, 1, 2, 3, 4, 5, 5, 4, 8, 9, 3, 11, 12, 11]).unwrap();
        let p = PairParams::from_trees(&a, &b).unwrap();
        assert_eq!(p.h, 6);
        assert_eq!(p.m, 1);
        assert_eq!(p.l, 1);
        assert_eq!(p.y, 3);
        assert_eq!(p.z, 2);
        assert_eq!(p.delta, vec![1, 2, 3]);
    }

    #[test]
    fn twenty_vertex_pair_pins_omega_and_lambda() {
        let a = DfsTree::from_parents(&[
            0, 1, 2, 3, 4, 4, 1, 7, 8, 9, 10, 11, 12, 8, 14, 7, 16, 16, 18, 19,
        ])
        .unwrap();
        let b = DfsTree::from_parents(&[
            0, 1, 2, 3, 4, 5, 1, 7, 8, 9, 10, 10, 12, 9, 14, 7, 16, 17, 16, 19,
        ])
        .unwrap();
        let p = PairParams::from_trees(&a, &b).unwrap();
        assert_eq!(p.h, 6);
        assert_eq!(p.m, 1);
        assert_eq!(p.l, 2);
        assert_eq!(p.xi, 3);
        assert_eq!(p.omega_prefix, vec![6, 4, 4, 3]);
        assert_eq!(p.lambda_set, vec![14, 18, 19]);
        assert_eq!(p.lambda, 1);
        assert_eq!(p.delta, vec![1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 16, 17, 18]);
        assert_eq!(
            p.omega_set,
            vec![
                (0, 6),
                (0, 7),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 0),
                (3, 1),
                (3, 2),
                (3, 3),
                (3, 4),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 0),
                (5, 2),
            ]
        );
    }

    #[test]
    fn invariants_hold_over_all_small_pairs() {
        for n in 3..=6 {
            let trees: Vec<DfsTree> = enumerate_dfs_trees(n).collect();
            for i in 0..trees.len() {
                for j in i + 1..trees.len() {
                    let p = PairParams::from_trees(&trees[i], &trees[j]).unwrap();
                    let q = PairParams::from_trees(&trees[j], &trees[i]).unwrap();
                    assert_eq!(p, q, "pair parameters must be symmetric");
                    assert_eq!(p.omega(0), p.h, "omega(0) = H");
                    assert!(p.omega_prefix.iter().all(|&w| w > p.l), "omega > L");
                    assert!(-1 <= p.y && p.y < p.h, "-1 <= Y < H");
                    assert!(0 <= p.z && p.z < p.h, "0 <= Z < H");
                    assert!(0 <= p.l && p.l < p.h, "0 <= L < H");
                    assert_eq!(p.delta.first(), Some(&1), "x1 in Delta");
                    assert!(!p.lambda_set.is_empty(), "Lambda nonempty");
                    assert!(p.m >= 1);
                    for x in 1..=n {
                        let diff = trees[i].depth(x).abs_diff(trees[j].depth(x)) as u64;
                        assert_eq!(diff % p.m, 0, "M divides every depth difference");
                    }
                    let leaves_differ = (1..=n).any(|x| {
                        (trees[i].children(x).is_empty()) != (trees[j].children(x).is_empty())
                    });
                    assert_eq!(p.y == -1, leaves_differ, "Y = -1 iff a leaf moves");
                }
            }
        }
    }
}
