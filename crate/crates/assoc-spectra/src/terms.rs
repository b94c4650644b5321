//! Bracketings of x1..xn, their DFS trees, and depth sequences.
//!
//! A bracketing is a full binary tree whose leaves read x1..xn from left
//! to right; B_n is the set of all of them, of size Catalan(n-1). Each
//! bracketing corresponds to a unique rooted tree on vertex labels 1..n:
//! a single leaf maps to a single vertex, and the tree of `(t1 t2)` is
//! the tree of `t1` with the root of the tree of `t2` attached as a new
//! last child of the root. The labels of such a tree occur in
//! depth-first order with children visited in increasing label order, so
//! the tree is determined by its depth sequence `d`, characterized by
//! `d[1] = 0` and `1 <= d[i+1] <= d[i] + 1`. This module houses all
//! three representations, the bijections among them, and enumeration in
//! lexicographic depth-sequence order.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from parsing and validating terms, trees, and depth sequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    /// Malformed bracketing text; `pos` is a 0-based byte offset.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    /// Leaves must read x1..xn from left to right.
    #[error("variables must read x1..xn left to right: expected x{expected}, found x{found}")]
    VariableOrder { expected: usize, found: usize },
    /// Depth sequence that is not a zag sequence; `index` is 1-based.
    #[error("not a valid depth sequence at position {index}: {msg}")]
    NotZag { index: usize, msg: String },
    /// Parent array that is not a DFS tree; vertex labels are 1-based.
    #[error("invalid parent array: {msg}")]
    InvalidParents { msg: String },
    /// Argument below the smallest size the operation is defined for.
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    /// Result does not fit the return type.
    #[error("result for n = {n} overflows u64")]
    Overflow { n: usize },
}

/// A bracketing (full binary tree) over leaves x1..xn.
///
/// The leaf labels are redundant, the in-order positions force them, but
/// carrying them keeps evaluation and display cheap. `parse` and the
/// bijections only ever construct label sequences 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bracketing {
    Leaf(usize),
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    /// Parses the grammar `term := var | '(' term term ')'` with
    /// `var := 'x' <positive integer>`. Whitespace is allowed between
    /// tokens, the outermost parentheses may be omitted, and the leaves
    /// must read x1..xn in order.
    pub fn parse(text: &str) -> Result<Bracketing, TermError> {
        let mut p = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        if p.peek().is_none() {
            return Err(TermError::Syntax {
                pos: p.pos,
                msg: "empty term".into(),
            });
        }
        let first = p.parse_primary()?;
        p.skip_ws();
        let term = if p.peek().is_none() {
            first
        } else {
            let second = p.parse_primary()?;
            p.skip_ws();
            if let Some(b) = p.peek() {
                return Err(TermError::Syntax {
                    pos: p.pos,
                    msg: format!("unexpected '{}' after term", b as char),
                });
            }
            Bracketing::Node(Box::new(first), Box::new(second))
        };
        let leaves = term.leaves();
        for (i, &leaf) in leaves.iter().enumerate() {
            if leaf != i + 1 {
                return Err(TermError::VariableOrder {
                    expected: i + 1,
                    found: leaf,
                });
            }
        }
        Ok(term)
    }

    /// Number of leaves.
    pub fn n(&self) -> usize {
        match self {
            Bracketing::Leaf(_) => 1,
            Bracketing::Node(l, r) => l.n() + r.n(),
        }
    }

    /// Leaf labels in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        fn walk(t: &Bracketing, out: &mut Vec<usize>) {
            match t {
                Bracketing::Leaf(v) => out.push(*v),
                Bracketing::Node(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// The DFS tree of this bracketing.
    pub fn dfs_tree(&self) -> DfsTree {
        let n = self.n();
        let mut parent = vec![0usize; n];
        let mut next = 0usize;
        // Returns the root label of the subterm; the right root becomes a
        // new last child of the left root.
        fn build(t: &Bracketing, parent: &mut [usize], next: &mut usize) -> usize {
            match t {
                Bracketing::Leaf(_) => {
                    *next += 1;
                    *next
                }
                Bracketing::Node(l, r) => {
                    let root = build(l, parent, next);
                    let sub = build(r, parent, next);
                    parent[sub - 1] = root;
                    root
                }
            }
        }
        let root = build(self, &mut parent, &mut next);
        debug_assert_eq!(root, 1);
        DfsTree::from_parents(&parent).expect("a bracketing always yields a valid DFS tree")
    }
}

impl fmt::Display for Bracketing {
    /// Canonical form: every non-leaf subterm parenthesized except the
    /// outermost, variables written `x1..xn`, no whitespace.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn inner(t: &Bracketing, f: &mut fmt::Formatter<'_>, outer: bool) -> fmt::Result {
            match t {
                Bracketing::Leaf(v) => write!(f, "x{v}"),
                Bracketing::Node(l, r) => {
                    if !outer {
                        write!(f, "(")?;
                    }
                    inner(l, f, false)?;
                    inner(r, f, false)?;
                    if !outer {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
            }
        }
        inner(self, f, true)
    }
}

impl FromStr for Bracketing {
    type Err = TermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bracketing::parse(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse_primary(&mut self) -> Result<Bracketing, TermError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let l = self.parse_primary()?;
                let r = self.parse_primary()?;
                self.skip_ws();
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(Bracketing::Node(Box::new(l), Box::new(r)))
                    }
                    Some(b) => Err(TermError::Syntax {
                        pos: self.pos,
                        msg: format!("expected ')', found '{}'", b as char),
                    }),
                    None => Err(TermError::Syntax {
                        pos: self.pos,
                        msg: "expected ')', found end of input".into(),
                    }),
                }
            }
            Some(b'x') => {
                self.pos += 1;
                self.parse_var_index().map(Bracketing::Leaf)
            }
            Some(b) => Err(TermError::Syntax {
                pos: self.pos,
                msg: format!("expected '(' or variable, found '{}'", b as char),
            }),
            None => Err(TermError::Syntax {
                pos: self.pos,
                msg: "expected '(' or variable, found end of input".into(),
            }),
        }
    }

    fn parse_var_index(&mut self) -> Result<usize, TermError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.bytes[start..self.pos];
        if digits.is_empty() {
            return Err(TermError::Syntax {
                pos: start,
                msg: "expected digits after 'x'".into(),
            });
        }
        if digits[0] == b'0' {
            return Err(TermError::Syntax {
                pos: start,
                msg: "variable index must be a positive integer without leading zeros".into(),
            });
        }
        std::str::from_utf8(digits)
            .expect("ascii digits")
            .parse::<usize>()
            .map_err(|_| TermError::Syntax {
                pos: start,
                msg: "variable index overflows".into(),
            })
    }
}

/// The DFS tree of a bracketing: a rooted tree on labels 1..n whose
/// labels occur in depth-first order, children in increasing label
/// order. Vertex accessors are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DfsTree {
    n: usize,
    /// `parent[i]` is the parent of vertex `i + 1`; `parent[0] == 0`.
    parent: Vec<usize>,
    /// `depth[i]` is the root distance of vertex `i + 1`.
    depth: Vec<usize>,
    /// `children[i]` are the children of vertex `i + 1`, increasing.
    children: Vec<Vec<usize>>,
    /// `height[i]` is the height of the subtree rooted at vertex `i + 1`.
    height: Vec<usize>,
    /// `span_end[i]` is the largest label in the subtree at vertex `i + 1`;
    /// subtrees are exactly the label intervals `i + 1 ..= span_end[i]`.
    span_end: Vec<usize>,
}

impl DfsTree {
    /// Builds a tree from a parent array: `parent[i]` is the parent of
    /// vertex `i + 1`, and `parent[0]` must be 0 for the root. Rejects
    /// arrays whose labels are not in depth-first order.
    pub fn from_parents(parent: &[usize]) -> Result<DfsTree, TermError> {
        let n = parent.len();
        if n == 0 {
            return Err(TermError::InvalidParents {
                msg: "empty parent array".into(),
            });
        }
        if parent[0] != 0 {
            return Err(TermError::InvalidParents {
                msg: format!(
                    "vertex 1 is the root and must have parent 0, got {}",
                    parent[0]
                ),
            });
        }
        let mut depth = vec![0usize; n];
        for i in 1..n {
            let p = parent[i];
            if p < 1 || p > i {
                return Err(TermError::InvalidParents {
                    msg: format!(
                        "vertex {} has parent {}, expected a label in 1..={}",
                        i + 1,
                        p,
                        i
                    ),
                });
            }
            depth[i] = depth[p - 1] + 1;
        }
        // Depth-first label order forces each parent to be the latest
        // earlier vertex one level up.
        let mut last_at_depth = vec![0usize; n + 1];
        last_at_depth[0] = 1;
        for i in 1..n {
            let want = last_at_depth[depth[i] - 1];
            if want == 0 || parent[i] != want {
                return Err(TermError::InvalidParents {
                    msg: format!(
                        "vertex {} has parent {}, but depth-first order forces parent {}",
                        i + 1,
                        parent[i],
                        want
                    ),
                });
            }
            last_at_depth[depth[i]] = i + 1;
        }
        Ok(Self::from_validated(parent.to_vec(), depth))
    }

    fn from_validated(parent: Vec<usize>, depth: Vec<usize>) -> DfsTree {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        for i in 1..n {
            children[parent[i] - 1].push(i + 1);
        }
        let mut height = vec![0usize; n];
        let mut span_end = vec![0usize; n];
        for i in (0..n).rev() {
            match children[i].last() {
                None => {
                    height[i] = 0;
                    span_end[i] = i + 1;
                }
                Some(&last) => {
                    height[i] = 1 + children[i].iter().map(|&c| height[c - 1]).max().unwrap();
                    span_end[i] = span_end[last - 1];
                }
            }
        }
        DfsTree {
            n,
            parent,
            depth,
            children,
            height,
            span_end,
        }
    }

    /// Builds the unique tree with the given depth sequence.
    pub fn from_depth_sequence(d: &DepthSequence) -> DfsTree {
        let d = d.as_slice();
        let n = d.len();
        let mut parent = vec![0usize; n];
        // Stack of the current root-to-leaf path; parent of the next
        // vertex is the path vertex one level above it.
        let mut path: Vec<usize> = vec![1];
        for i in 1..n {
            path.truncate(d[i]);
            parent[i] = *path.last().expect("zag sequences never drop to depth 0");
            path.push(i + 1);
        }
        let tree = Self::from_validated(parent, d.to_vec());
        debug_assert_eq!(tree.depth, d);
        tree
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Parent of vertex `v`, or `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            0 => None,
            p => Some(p),
        }
    }

    /// Root distance of vertex `v`.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v - 1]
    }

    /// Children of vertex `v` in increasing label order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v - 1]
    }

    /// Height of the subtree rooted at `v`.
    pub fn subtree_height(&self, v: usize) -> usize {
        self.height[v - 1]
    }

    /// Height of the whole tree.
    pub fn height(&self) -> usize {
        self.height[0]
    }

    /// The subtree at `v` covers exactly the labels `v ..= span_end(v)`.
    pub fn span_end(&self, v: usize) -> usize {
        self.span_end[v - 1]
    }

    /// The depth sequence `d(1), ..., d(n)`.
    pub fn depth_sequence(&self) -> DepthSequence {
        DepthSequence(self.depth.clone())
    }

    /// The bracketing this tree came from: a vertex with children
    /// `c1 < ... < ck` unfolds to `(..((v t_c1) t_c2) .. t_ck)`.
    pub fn bracketing(&self) -> Bracketing {
        fn unfold(tree: &DfsTree, v: usize) -> Bracketing {
            let mut t = Bracketing::Leaf(v);
            for &c in tree.children(v) {
                t = Bracketing::Node(Box::new(t), Box::new(unfold(tree, c)));
            }
            t
        }
        unfold(self, 1)
    }

    /// Parent array in the serialized layout: entry `i` is the parent of
    /// vertex `i + 1`, with 0 for the root.
    pub fn parents(&self) -> &[usize] {
        &self.parent
    }
}

impl Serialize for DfsTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DfsTreeJson {
            n: self.n,
            parent: self.parent.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DfsTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = DfsTreeJson::deserialize(deserializer)?;
        let full;
        let parent: &[usize] = if raw.parent.len() == raw.n {
            &raw.parent
        } else if raw.parent.len() + 1 == raw.n {
            // The root entry may be omitted.
            full = std::iter::once(0)
                .chain(raw.parent.iter().copied())
                .collect::<Vec<_>>();
            &full
        } else {
            return Err(D::Error::custom(format!(
                "parent array has length {}, expected {} or {}",
                raw.parent.len(),
                raw.n,
                raw.n.saturating_sub(1)
            )));
        };
        DfsTree::from_parents(parent).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct DfsTreeJson {
    n: usize,
    parent: Vec<usize>,
}

/// A zag sequence: `d[1] = 0` and `1 <= d[i+1] <= d[i] + 1`. These are
/// exactly the depth sequences of DFS trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DepthSequence(Vec<usize>);

impl DepthSequence {
    /// Validates the zag condition; on failure reports the 1-based index
    /// of the first offending entry.
    pub fn new(d: Vec<usize>) -> Result<DepthSequence, TermError> {
        if d.is_empty() {
            return Err(TermError::NotZag {
                index: 1,
                msg: "sequence is empty".into(),
            });
        }
        if d[0] != 0 {
            return Err(TermError::NotZag {
                index: 1,
                msg: format!("first entry must be 0, got {}", d[0]),
            });
        }
        for i in 1..d.len() {
            if d[i] < 1 || d[i] > d[i - 1] + 1 {
                return Err(TermError::NotZag {
                    index: i + 1,
                    msg: format!(
                        "entry {} must lie in 1..={}, got {}",
                        i + 1,
                        d[i - 1] + 1,
                        d[i]
                    ),
                });
            }
        }
        Ok(DepthSequence(d))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Enumerates all DFS trees on n vertices in lexicographic order of
/// their depth sequences. The count is Catalan(n-1).
pub fn enumerate_dfs_trees(n: usize) -> DfsTreeIter {
    assert!(n >= 1, "n must be at least 1");
    DfsTreeIter {
        d: (0..n).map(|i| usize::from(i > 0)).collect(),
        done: false,
    }
}

/// Iterator over DFS trees in lexicographic depth-sequence order.
pub struct DfsTreeIter {
    d: Vec<usize>,
    done: bool,
}

impl Iterator for DfsTreeIter {
    type Item = DfsTree;

    fn next(&mut self) -> Option<DfsTree> {
        if self.done {
            return None;
        }
        let seq = DepthSequence(self.d.clone());
        let tree = DfsTree::from_depth_sequence(&seq);
        // Advance: bump the rightmost entry that can still grow, reset
        // the tail to all ones.
        let mut bumped = false;
        for i in (1..self.d.len()).rev() {
            if self.d[i] <= self.d[i - 1] {
                self.d[i] += 1;
                for j in i + 1..self.d.len() {
                    self.d[j] = 1;
                }
                bumped = true;
                break;
            }
        }
        if !bumped {
            self.done = true;
        }
        Some(tree)
    }
}

/// Catalan number C_k; panics if the value overflows u64 (k > 35).
pub fn catalan(k: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    u64::try_from(c).expect("Catalan number overflows u64")
}

/// Number of bracketings in B_n whose DFS tree has height at most 2.
/// Equals 2^(n-2) for n >= 2.
pub fn count_height_at_most_2(n: usize) -> Result<u64, TermError> {
    if n < 2 {
        return Err(TermError::TooSmall { n, min: 2 });
    }
    1u64.checked_shl((n - 2) as u32)
        .ok_or(TermError::Overflow { n })
}
