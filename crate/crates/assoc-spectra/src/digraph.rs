//! Digraphs and their structural parameters.
//!
//! Everything downstream keys on a small family of quantities read off a
//! digraph G: which strongly connected components are nontrivial, which
//! of those are whirls (block-cyclic complete structures), how long
//! pleasant (all-trivial-vertex) paths can get, how walks enter and
//! leave the nontrivial part, and a two-parameter family `omega_G(l, r)`
//! measuring how far a second walk can run after sharing a prefix with a
//! walk into a nontrivial component. Values that can be unbounded or
//! vacuous live in [`ExtInt`]. A [`Digraph`] is immutable once built and
//! caches its analysis behind a `OnceLock`.
//!
//! Two text formats are read: a plain format with one `u -> v` edge per
//! line (plus `vertex u` lines for isolated vertices, `#` comments), and
//! the edge/node-statement subset of DOT `digraph` files.

use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Errors from graph parsing, construction, and parameter queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Malformed graph text; `line` is 1-based.
    #[error("graph parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Structurally invalid construction input.
    #[error("invalid graph: {msg}")]
    Invalid { msg: String },
    /// `omega_g` requires `1 <= r <= l`.
    #[error("omega_G is defined for 1 <= r <= l, got l = {ell}, r = {r}")]
    OmegaRange { ell: usize, r: usize },
}

/// An integer extended with two infinities; `-inf` marks vacuous maxima
/// and `inf` unbounded ones. The derived order puts `-inf < finite < inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn fin(v: i64) -> ExtInt {
        ExtInt::Fin(v)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        }
    }

    /// Shifts finite values by `k`; infinities are fixed points.
    pub fn plus(self, k: i64) -> ExtInt {
        match self {
            ExtInt::Fin(v) => ExtInt::Fin(v + k),
            inf => inf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::PosInf => write!(f, "inf"),
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> ExtInt {
        ExtInt::Fin(v)
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::NegInf => serializer.serialize_str("-inf"),
            ExtInt::PosInf => serializer.serialize_str("inf"),
            ExtInt::Fin(v) => serializer.serialize_i64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = ExtInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer, \"inf\", or \"-inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtInt, E> {
                Ok(ExtInt::Fin(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtInt, E> {
                i64::try_from(v)
                    .map(ExtInt::Fin)
                    .map_err(|_| E::custom("integer out of range"))
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<ExtInt, E> {
                match s {
                    "inf" => Ok(ExtInt::PosInf),
                    "-inf" => Ok(ExtInt::NegInf),
                    _ => Err(E::custom(format!(
                        "expected \"inf\" or \"-inf\", got {s:?}"
                    ))),
                }
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// A finite digraph with named vertices, immutable after construction.
#[derive(Clone, Debug)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// Sorted, deduplicated adjacency; the graph has no multi-edges.
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    analysis: OnceLock<Analysis>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Digraph {
    /// Builds a digraph from vertex names and index pairs. Names must be
    /// unique and match `[A-Za-z0-9_]+`; duplicate edges collapse.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Digraph, GraphError> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(GraphError::Invalid {
                    msg: format!("vertex name {name:?} is not of the form [A-Za-z0-9_]+"),
                });
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(GraphError::Invalid {
                    msg: format!("duplicate vertex name {name:?}"),
                });
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::Invalid {
                    msg: format!("edge ({u}, {v}) out of range for {n} vertices"),
                });
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph {
            names,
            index,
            out,
            inn,
            analysis: OnceLock::new(),
        })
    }

    /// Test and example convenience: builds from named edges, interning
    /// vertices in order of first appearance. Panics on invalid names.
    pub fn from_edges(edges: &[(&str, &str)]) -> Digraph {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let mut intern = |name: &str| -> usize {
                *index.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            let iu = intern(u);
            let iv = intern(v);
            pairs.push((iu, iv));
        }
        Digraph::new(names, &pairs).expect("edge list forms a valid digraph")
    }

    /// Builds the digraph on `n` single-letter vertices `a, b, c, ...`
    /// whose edge `(u, v)` is present exactly when bit `u * n + v` of
    /// `mask` is set. Panics if `n > 8`.
    pub fn from_mask(n: usize, mask: u64) -> Digraph {
        assert!(n <= 8, "from_mask supports at most 8 vertices");
        let names = (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if mask >> (u * n + v) & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Digraph::new(names, &edges).expect("mask graph is valid")
    }

    /// Parses either the plain `u -> v` line format or the edge and
    /// node-statement subset of DOT (chosen when the text leads with
    /// `digraph ... {`).
    pub fn parse(text: &str) -> Result<Digraph, GraphError> {
        let looks_dot = text
            .lines()
            .map(|l| l.split(['#']).next().unwrap_or("").trim())
            .find(|l| !l.is_empty() && !l.starts_with("//"))
            .is_some_and(|l| l.split_whitespace().next() == Some("digraph"));
        if looks_dot {
            parse_dot(text)
        } else {
            parse_plain(text)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// First edge whose reverse is missing, if any.
    pub fn first_asymmetric_edge(&self) -> Option<(usize, usize)> {
        self.edges().find(|&(u, v)| !self.has_edge(v, u))
    }

    /// The subgraph induced on `vertices` (deduplicated, kept in sorted
    /// order), with vertex names carried over.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut verts: Vec<usize> = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let names = verts.iter().map(|&v| self.names[v].clone()).collect();
        let back: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for &u in &verts {
            for &v in &self.out[u] {
                if let Some(&j) = back.get(&v) {
                    edges.push((back[&u], j));
                }
            }
        }
        Digraph::new(names, &edges).expect("induced subgraph is valid")
    }

    fn analysis(&self) -> &Analysis {
        self.analysis.get_or_init(|| Analysis::compute(self))
    }

    /// The SCC decomposition, components sorted by smallest vertex.
    pub fn scc(&self) -> &SccDecomposition {
        &self.analysis().scc
    }

    /// The whirl structure of component `comp_id`, if that component is
    /// a whirl. Trivial components are never whirls.
    pub fn whirl(&self, comp_id: usize) -> Option<&WhirlStructure> {
        self.analysis().whirls[comp_id].as_ref()
    }

    /// Longest number of edges over walks starting at `v`; `inf` exactly
    /// when `v` reaches a vertex of a nontrivial SCC (possibly itself).
    pub fn longest_walk_from(&self, v: usize) -> ExtInt {
        self.analysis().lwf[v]
    }

    /// Longest number of edges over walks ending at `v`; `inf` exactly
    /// when `v` is reachable from a vertex of a nontrivial SCC.
    pub fn longest_walk_to(&self, v: usize) -> ExtInt {
        self.analysis().lwt[v]
    }

    /// The seven structural parameters, computed once and cached.
    pub fn params(&self) -> &GraphParams {
        &self.analysis().params
    }

    /// True when every nontrivial SCC is a whirl.
    pub fn all_nontrivial_sccs_are_whirls(&self) -> bool {
        let a = self.analysis();
        a.scc
            .components()
            .iter()
            .enumerate()
            .all(|(i, c)| !c.nontrivial || a.whirls[i].is_some())
    }

    /// True when no walk leads from one nontrivial SCC to a different
    /// nontrivial SCC.
    pub fn no_path_between_nontrivial_sccs(&self) -> bool {
        let scc = self.scc();
        for (cid, comp) in scc.components().iter().enumerate() {
            if !comp.nontrivial {
                continue;
            }
            // Forward closure from this component.
            let mut seen = vec![false; self.vertex_count()];
            let mut stack: Vec<usize> = comp.vertices.clone();
            for &v in &comp.vertices {
                seen[v] = true;
            }
            while let Some(v) = stack.pop() {
                for &w in &self.out[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            for (v, hit) in seen.iter().enumerate() {
                if *hit && scc.component_of(v) != cid && !scc.is_trivial_vertex(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates every digraph on `n <= 4` fixed vertices, one per subset
/// of the `n * n` possible edges.
pub fn enumerate_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    assert!(n <= 4, "refusing to enumerate 2^(n*n) digraphs for n > 4");
    (0..(1u64 << (n * n))).map(move |mask| Digraph::from_mask(n, mask))
}

// ---------------------------------------------------------------------
// Parsing

fn parse_plain(text: &str) -> Result<Digraph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut intern = |name: &str, line: usize| -> Result<usize, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::Parse {
                line,
                msg: format!("vertex name {name:?} is not of the form [A-Za-z0-9_]+"),
            });
        }
        Ok(*index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        }))
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.contains("->") {
            let parts: Vec<&str> = line.split("->").map(str::trim).collect();
            let mut prev: Option<usize> = None;
            for part in parts {
                let v = intern(part, line_no)?;
                if let Some(u) = prev {
                    edges.push((u, v));
                }
                prev = Some(v);
            }
        } else {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["vertex", name] => {
                    intern(name, line_no)?;
                }
                _ => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("expected 'u -> v' or 'vertex u', got {line:?}"),
                    });
                }
            }
        }
    }
    Digraph::new(names, &edges)
}

#[derive(Debug, Clone, PartialEq)]
enum DotTok {
    Ident(String),
    LBrace,
    RBrace,
    Semi,
    Arrow,
}

fn dot_tokens(text: &str) -> Result<Vec<(DotTok, usize)>, GraphError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let mut line = 1;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'\n' => {
                line += 1;
                i += 1;
            }
            _ if b.is_ascii_whitespace() => i += 1,
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'*') => {
                i += 2;
                loop {
                    match bytes.get(i) {
                        None => {
                            return Err(GraphError::Parse {
                                line,
                                msg: "unterminated block comment".into(),
                            })
                        }
                        Some(b'\n') => {
                            line += 1;
                            i += 1;
                        }
                        Some(b'*') if bytes.get(i + 1) == Some(&b'/') => {
                            i += 2;
                            break;
                        }
                        Some(_) => i += 1,
                    }
                }
            }
            b'{' => {
                toks.push((DotTok::LBrace, line));
                i += 1;
            }
            b'}' => {
                toks.push((DotTok::RBrace, line));
                i += 1;
            }
            b';' => {
                toks.push((DotTok::Semi, line));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                toks.push((DotTok::Arrow, line));
                i += 2;
            }
            _ if b.is_ascii_alphanumeric() || b == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let ident = std::str::from_utf8(&bytes[start..i])
                    .expect("ascii")
                    .to_string();
                toks.push((DotTok::Ident(ident), line));
            }
            _ => {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("unexpected character '{}'", b as char),
                });
            }
        }
    }
    Ok(toks)
}

fn parse_dot(text: &str) -> Result<Digraph, GraphError> {
    let toks = dot_tokens(text)?;
    let mut pos = 0;
    let line_at = |p: usize| {
        toks.get(p)
            .map_or_else(|| toks.last().map_or(1, |t| t.1), |t| t.1)
    };
    let expect_ident = |p: &mut usize| -> Result<String, GraphError> {
        match toks.get(*p) {
            Some((DotTok::Ident(s), _)) => {
                *p += 1;
                Ok(s.clone())
            }
            other => Err(GraphError::Parse {
                line: line_at(*p),
                msg: format!("expected a name, got {:?}", other.map(|t| &t.0)),
            }),
        }
    };
    match toks.get(pos) {
        Some((DotTok::Ident(kw), _)) if kw == "digraph" => pos += 1,
        _ => {
            return Err(GraphError::Parse {
                line: line_at(pos),
                msg: "expected 'digraph'".into(),
            })
        }
    }
    if matches!(toks.get(pos), Some((DotTok::Ident(_), _))) {
        pos += 1; // optional graph name
    }
    match toks.get(pos) {
        Some((DotTok::LBrace, _)) => pos += 1,
        _ => {
            return Err(GraphError::Parse {
                line: line_at(pos),
                msg: "expected '{'".into(),
            })
        }
    }
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut intern = |name: String| -> usize {
        *index.entry(name.clone()).or_insert_with(|| {
            names.push(name);
            names.len() - 1
        })
    };
    loop {
        match toks.get(pos) {
            Some((DotTok::RBrace, _)) => {
                pos += 1;
                break;
            }
            Some((DotTok::Semi, _)) => {
                pos += 1;
            }
            Some((DotTok::Ident(_), _)) => {
                let mut prev = intern(expect_ident(&mut pos)?);
                while matches!(toks.get(pos), Some((DotTok::Arrow, _))) {
                    pos += 1;
                    let next = intern(expect_ident(&mut pos)?);
                    edges.push((prev, next));
                    prev = next;
                }
            }
            other => {
                return Err(GraphError::Parse {
                    line: line_at(pos),
                    msg: format!(
                        "expected a statement or '}}', got {:?}",
                        other.map(|t| &t.0)
                    ),
                });
            }
        }
    }
    if pos != toks.len() {
        return Err(GraphError::Parse {
            line: line_at(pos),
            msg: "unexpected tokens after closing '}'".into(),
        });
    }
    Digraph::new(names, &edges)
}

// ---------------------------------------------------------------------
// SCC decomposition

/// SCCs of a digraph; components are sorted by their smallest vertex and
/// vertices inside a component are sorted.
#[derive(Clone, Debug)]
pub struct SccDecomposition {
    comp_of: Vec<usize>,
    components: Vec<Scc>,
}

/// One strongly connected component. Nontrivial means it has at least
/// two vertices or a loop.
#[derive(Clone, Debug)]
pub struct Scc {
    pub vertices: Vec<usize>,
    pub nontrivial: bool,
}

impl SccDecomposition {
    fn compute(g: &Digraph) -> SccDecomposition {
        let n = g.vertex_count();
        // Kosaraju: forward DFS finish order, then reverse-graph sweeps.
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some(frame) = stack.last_mut() {
                let v = frame.0;
                if frame.1 < g.out[v].len() {
                    let w = g.out[v][frame.1];
                    frame.1 += 1;
                    if !visited[w] {
                        visited[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &s in order.iter().rev() {
            if comp_of[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            comp_of[s] = id;
            let mut stack = vec![s];
            let mut members = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &g.inn[v] {
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        stack.push(w);
                        members.push(w);
                    }
                }
            }
            groups.push(members);
        }
        for m in &mut groups {
            m.sort_unstable();
        }
        groups.sort_by_key(|m| m[0]);
        let mut components = Vec::with_capacity(groups.len());
        for (id, members) in groups.into_iter().enumerate() {
            for &v in &members {
                comp_of[v] = id;
            }
            let nontrivial = members.len() > 1 || g.has_edge(members[0], members[0]);
            components.push(Scc {
                vertices: members,
                nontrivial,
            });
        }
        SccDecomposition {
            comp_of,
            components,
        }
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v]
    }

    pub fn components(&self) -> &[Scc] {
        &self.components
    }

    /// A vertex is trivial when its SCC is trivial.
    pub fn is_trivial_vertex(&self, v: usize) -> bool {
        !self.components[self.comp_of[v]].nontrivial
    }

    pub fn nontrivial_component_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.nontrivial)
            .map(|(i, _)| i)
    }

    pub fn has_nontrivial(&self) -> bool {
        self.components.iter().any(|c| c.nontrivial)
    }
}

// ---------------------------------------------------------------------
// Whirls

/// The block structure of an m-whirl: the component splits into blocks
/// `B_0, ..., B_{m-1}` cycling `B_0 -> B_1 -> ... -> B_0`, with internal
/// edges exactly the union of `B_i x B_{i+1 mod m}`. `blocks[0]`
/// contains the smallest vertex and each block is sorted, making the
/// representation canonical. A 1-whirl is a complete graph with all
/// loops, a 2-whirl a complete bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhirlStructure {
    pub m: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl WhirlStructure {
    pub fn blocks_named<'g>(&self, g: &'g Digraph) -> Vec<Vec<&'g str>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&v| g.vertex_name(v)).collect())
            .collect()
    }
}

/// Decides whether the set `component` induces a whirl in `g` and if so
/// returns the unique block structure. The blocks of a whirl are the
/// classes of equal out-neighborhood within the set, so the structure is
/// recovered by grouping and following the succession from the block of
/// the smallest vertex.
pub fn whirl_structure(g: &Digraph, component: &[usize]) -> Option<WhirlStructure> {
    if component.is_empty() {
        return None;
    }
    let mut members: Vec<usize> = component.to_vec();
    members.sort_unstable();
    members.dedup();
    let inside = |v: usize| members.binary_search(&v).is_ok();
    // Group members by out-neighborhood restricted to the set.
    let mut key_of: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in &members {
        let key: Vec<usize> = g.out[v].iter().copied().filter(|&w| inside(w)).collect();
        if key.is_empty() {
            return None;
        }
        key_of.insert(v, key);
    }
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (key, members)
    for &v in &members {
        let key = &key_of[&v];
        match groups.iter_mut().find(|(k, _)| k == key) {
            Some((_, ms)) => ms.push(v),
            None => groups.push((key.clone(), vec![v])),
        }
    }
    // Members were scanned in sorted order, so each group's member list
    // is sorted. Follow the succession starting at the smallest vertex.
    let start = groups.iter().position(|(_, ms)| ms.contains(&members[0]))?;
    let mut order = vec![start];
    let mut current = start;
    loop {
        let next_set = &groups[current].0;
        let next = groups.iter().position(|(_, ms)| ms == next_set)?;
        if next == start {
            break;
        }
        if order.contains(&next) {
            return None; // succession cycles without returning to B_0
        }
        order.push(next);
        current = next;
    }
    if order.len() != groups.len() {
        return None; // succession missed some block
    }
    let blocks: Vec<Vec<usize>> = order.iter().map(|&i| groups[i].1.clone()).collect();
    // Grouping by out-neighborhood plus an exact block succession pins
    // the internal edges to the block cycle already.
    debug_assert_eq!(
        members.iter().map(|&v| key_of[&v].len()).sum::<usize>(),
        (0..blocks.len())
            .map(|i| blocks[i].len() * blocks[(i + 1) % blocks.len()].len())
            .sum::<usize>()
    );
    Some(WhirlStructure {
        m: blocks.len(),
        blocks,
    })
}

// ---------------------------------------------------------------------
// Cached analysis and parameters

/// The seven structural parameters of a digraph.
///
/// `m_g` is the least common multiple of the whirl sizes among the SCCs
/// (1 when there is none). The rest extremize walk lengths: `p_g` over
/// pleasant paths, `e_g` over entryways, `o_g` over outlets, `z_g` over
/// continuations that one block mate of a whirl can take but another
/// cannot, `b_g` over walks reaching a vertex with edges into two
/// different nontrivial SCCs, and `lambda_g` over continuations that
/// distinguish a longest entryway's tail from a vertex pointing at its
/// head inside the component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    pub m_g: u64,
    pub p_g: ExtInt,
    pub e_g: ExtInt,
    pub o_g: ExtInt,
    pub z_g: ExtInt,
    pub b_g: ExtInt,
    pub lambda_g: ExtInt,
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "M_G      = {}", self.m_g)?;
        writeln!(f, "P_G      = {}", self.p_g)?;
        writeln!(f, "E_G      = {}", self.e_g)?;
        writeln!(f, "O_G      = {}", self.o_g)?;
        writeln!(f, "Z_G      = {}", self.z_g)?;
        writeln!(f, "B_G      = {}", self.b_g)?;
        write!(f, "lambda_G = {}", self.lambda_g)
    }
}

#[derive(Clone, Debug)]
struct Analysis {
    scc: SccDecomposition,
    whirls: Vec<Option<WhirlStructure>>,
    lwf: Vec<ExtInt>,
    lwt: Vec<ExtInt>,
    params: GraphParams,
}

/// Longest edge count over paths inside `allowed`, starting at each
/// allowed vertex. The allowed-induced subgraph must be acyclic, which
/// holds for any set of trivial vertices.
fn longest_within(adj: &[Vec<usize>], allowed: &[bool]) -> Vec<i64> {
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for v in 0..n {
        if allowed[v] {
            for &w in &adj[v] {
                if allowed[w] {
                    indeg[w] += 1;
                }
            }
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| allowed[v] && indeg[v] == 0).collect();
    let mut topo = Vec::new();
    while let Some(v) = queue.pop() {
        topo.push(v);
        for &w in &adj[v] {
            if allowed[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
    }
    debug_assert_eq!(
        topo.len(),
        allowed.iter().filter(|&&a| a).count(),
        "allowed subgraph must be acyclic"
    );
    let mut val = vec![0i64; n];
    for &v in topo.iter().rev() {
        val[v] = adj[v]
            .iter()
            .filter(|&&w| allowed[w])
            .map(|&w| val[w] + 1)
            .max()
            .unwrap_or(0);
    }
    val
}

/// Vertices reachable from `seeds` following `adj`, including the seeds.
fn closure(adj: &[Vec<usize>], seeds: impl Iterator<Item = usize>, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = seeds.collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

impl Analysis {
    fn compute(g: &Digraph) -> Analysis {
        let n = g.vertex_count();
        let scc = SccDecomposition::compute(g);
        let whirls: Vec<Option<WhirlStructure>> = scc
            .components()
            .iter()
            .map(|c| {
                if c.nontrivial {
                    whirl_structure(g, &c.vertices)
                } else {
                    None
                }
            })
            .collect();
        let trivial: Vec<bool> = (0..n).map(|v| scc.is_trivial_vertex(v)).collect();
        let nontrivial_vertices = || (0..n).filter(|&v| !trivial[v]);

        let pleasant_from = longest_within(&g.out, &trivial);
        let pleasant_to = longest_within(&g.inn, &trivial);

        // Vertices that reach (resp. are reached from) the nontrivial part.
        let reaches = closure(&g.inn, nontrivial_vertices(), n);
        let reached = closure(&g.out, nontrivial_vertices(), n);
        let free_fwd: Vec<bool> = (0..n).map(|v| !reaches[v]).collect();
        let free_bwd: Vec<bool> = (0..n).map(|v| !reached[v]).collect();
        let fin_from = longest_within(&g.out, &free_fwd);
        let fin_to = longest_within(&g.inn, &free_bwd);
        let lwf: Vec<ExtInt> = (0..n)
            .map(|v| {
                if reaches[v] {
                    ExtInt::PosInf
                } else {
                    ExtInt::Fin(fin_from[v])
                }
            })
            .collect();
        let lwt: Vec<ExtInt> = (0..n)
            .map(|v| {
                if reached[v] {
                    ExtInt::PosInf
                } else {
                    ExtInt::Fin(fin_to[v])
                }
            })
            .collect();

        let params = compute_params(
            g,
            &scc,
            &whirls,
            &trivial,
            &pleasant_from,
            &pleasant_to,
            &lwf,
            &lwt,
        );
        Analysis {
            scc,
            whirls,
            lwf,
            lwt,
            params,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn compute_params(
    g: &Digraph,
    scc: &SccDecomposition,
    whirls: &[Option<WhirlStructure>],
    trivial: &[bool],
    pleasant_from: &[i64],
    pleasant_to: &[i64],
    lwf: &[ExtInt],
    lwt: &[ExtInt],
) -> GraphParams {
    let n = g.vertex_count();
    let has_nontrivial = scc.has_nontrivial();

    let m_g = whirls
        .iter()
        .flatten()
        .map(|w| w.m as u64)
        .fold(1u64, |acc, m| acc.lcm(&m));

    let p_g = (0..n)
        .filter(|&v| trivial[v])
        .map(|v| ExtInt::Fin(pleasant_from[v]))
        .max()
        .unwrap_or(ExtInt::NegInf);

    let e_g = if !has_nontrivial {
        ExtInt::NegInf
    } else {
        let longest = g
            .edges()
            .filter(|&(a, k)| trivial[a] && !trivial[k])
            .map(|(a, _)| pleasant_to[a] + 1)
            .max()
            .unwrap_or(0);
        ExtInt::Fin(longest)
    };

    let o_g = if !has_nontrivial {
        ExtInt::NegInf
    } else {
        let longest = g
            .edges()
            .filter(|&(k, a)| !trivial[k] && trivial[a])
            .map(|(_, a)| pleasant_from[a] + 1)
            .max()
            .unwrap_or(0);
        ExtInt::Fin(longest)
    };

    let mut z_g = ExtInt::NegInf;
    for w in whirls.iter().flatten() {
        for block in &w.blocks {
            if block.len() < 2 {
                continue;
            }
            for &u in block {
                for &mate in block {
                    if mate == u {
                        continue;
                    }
                    for &v0 in g.out_neighbors(u) {
                        if !g.has_edge(mate, v0) {
                            z_g = z_g.max(lwf[v0]);
                        }
                    }
                }
            }
        }
    }

    let mut b_g = ExtInt::NegInf;
    for (x, &walk_to_x) in lwt.iter().enumerate() {
        let mut seen_comp: Option<usize> = None;
        let mut branches = false;
        for &v in g.out_neighbors(x) {
            if trivial[v] {
                continue;
            }
            let c = scc.component_of(v);
            match seen_comp {
                None => seen_comp = Some(c),
                Some(c0) if c0 != c => {
                    branches = true;
                    break;
                }
                Some(_) => {}
            }
        }
        if branches {
            b_g = b_g.max(walk_to_x);
        }
    }

    let lambda_g = match e_g {
        ExtInt::Fin(e) if e >= 1 => {
            let mut best = ExtInt::NegInf;
            for (a, k) in g.edges() {
                if !(trivial[a] && !trivial[k] && pleasant_to[a] == e - 1) {
                    continue;
                }
                let comp = &scc.components()[scc.component_of(k)];
                for &w in &comp.vertices {
                    if !g.has_edge(w, k) {
                        continue;
                    }
                    // Candidates start anywhere exactly one of w, a points.
                    for &v0 in g.out_neighbors(w).iter().chain(g.out_neighbors(a)) {
                        if g.has_edge(w, v0) != g.has_edge(a, v0) {
                            best = best.max(lwf[v0]);
                        }
                    }
                }
            }
            best
        }
        _ => ExtInt::NegInf,
    };

    GraphParams {
        m_g,
        p_g,
        e_g,
        o_g,
        z_g,
        b_g,
        lambda_g,
    }
}

/// `omega_G(l, r)` for `1 <= r <= l`: over all vertices `x` that end
/// some walk of exactly `r - 1` edges and start some walk of exactly
/// `l - r + 1` edges into a nontrivial-SCC vertex, the largest total
/// length `l + longest_walk_from(y)` over trivial `y` lying exactly
/// `l - r + 1` edges after `x`; `-inf` when no such configuration
/// exists.
pub fn omega_g(g: &Digraph, ell: usize, r: usize) -> Result<ExtInt, GraphError> {
    if r < 1 || r > ell {
        return Err(GraphError::OmegaRange { ell, r });
    }
    let n = g.vertex_count();
    let a = g.analysis();
    let trivial: Vec<bool> = (0..n).map(|v| a.scc.is_trivial_vertex(v)).collect();
    let step = |cur: &[bool]| -> Vec<bool> {
        let mut next = vec![false; n];
        for (v, active) in cur.iter().enumerate() {
            if *active {
                for &w in &g.out[v] {
                    next[w] = true;
                }
            }
        }
        next
    };
    // Vertices ending a walk of exactly r - 1 edges.
    let mut starts = vec![true; n];
    for _ in 0..r - 1 {
        starts = step(&starts);
    }
    let k = ell - r + 1;
    let mut best = ExtInt::NegInf;
    for x in 0..n {
        if !starts[x] {
            continue;
        }
        let mut frontier = vec![false; n];
        frontier[x] = true;
        for _ in 0..k {
            frontier = step(&frontier);
        }
        if !(0..n).any(|v| frontier[v] && !trivial[v]) {
            continue;
        }
        for y in 0..n {
            if frontier[y] && trivial[y] {
                best = best.max(a.lwf[y].plus(ell as i64));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    fn gallery() -> Digraph {
        graph(include_str!("../fixtures/whirl_gallery.g"))
    }

    fn idx(g: &Digraph, name: &str) -> usize {
        g.vertex_index(name)
            .unwrap_or_else(|| panic!("no vertex {name}"))
    }

    #[test]
    fn plain_format_parses_edges_vertices_and_comments() {
        let g = graph("a -> b # comment\n\n# full line\nvertex c\nb -> a\nd -> d\n");
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.vertex_name(0), "a");
        assert_eq!(g.vertex_name(2), "c");
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
        assert!(g.has_edge(3, 3));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edge_count(), 3);
        // Chains and duplicate edges are accepted; duplicates collapse.
        let h = graph("a -> b -> c\na -> b\n");
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(1, 2));
    }

    #[test]
    fn plain_format_reports_line_numbers() {
        match Digraph::parse("a -> b\nnonsense here today\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Digraph::parse("a -> b!\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dot_subset_parses() {
        let g = graph("digraph demo {\n  a -> b -> c;\n  d;\n  c -> a\n  // comment\n}\n");
        assert_eq!(g.vertex_count(), 4);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
        assert!(g.has_edge(2, 0));
        assert_eq!(g.edge_count(), 3);
        assert!(Digraph::parse("digraph { a -> }").is_err());
        assert!(Digraph::parse("digraph { a -> b").is_err());
        assert!(Digraph::parse("digraph g { a [shape=box] }").is_err());
    }

    #[test]
    fn scc_decomposition_is_canonical() {
        let g = graph("a -> b\nb -> a\nb -> c\nc -> d\nd -> c\nvertex e\n");
        let scc = g.scc();
        let comps: Vec<(Vec<usize>, bool)> = scc
            .components()
            .iter()
            .map(|c| (c.vertices.clone(), c.nontrivial))
            .collect();
        assert_eq!(
            comps,
            vec![(vec![0, 1], true), (vec![2, 3], true), (vec![4], false)]
        );
        assert_eq!(scc.component_of(1), 0);
        assert!(scc.is_trivial_vertex(4));
        assert!(!scc.is_trivial_vertex(0));
        // A loop makes a singleton nontrivial.
        let h = graph("a -> a\nvertex b\n");
        assert!(!h.scc().is_trivial_vertex(0));
        assert!(h.scc().is_trivial_vertex(1));
    }

    #[test]
    fn whirl_detection_matches_known_shapes() {
        // 2-cycle: 2-whirl with singleton blocks.
        let g = graph("a -> b\nb -> a\n");
        let w = whirl_structure(&g, &[0, 1]).unwrap();
        assert_eq!(w.m, 2);
        assert_eq!(w.blocks, vec![vec![0], vec![1]]);
        // Loop: 1-whirl.
        let g = graph("a -> a\n");
        assert_eq!(whirl_structure(&g, &[0]).unwrap().m, 1);
        // Directed 3-cycle: 3-whirl.
        let g = graph("a -> b\nb -> c\nc -> a\n");
        assert_eq!(whirl_structure(&g, &[0, 1, 2]).unwrap().m, 3);
        // Complete bipartite (both directions): 2-whirl with fat block.
        // Vertex indices follow first appearance: a = 0, c = 1, b = 2.
        let g = graph("a -> c\nc -> a\nb -> c\nc -> b\n");
        let w = whirl_structure(&g, &[0, 1, 2]).unwrap();
        assert_eq!(w.m, 2);
        assert_eq!(w.blocks, vec![vec![0, 2], vec![1]]);
        // Complete with loops on two vertices: 1-whirl.
        let g = graph("a -> a\na -> b\nb -> a\nb -> b\n");
        let w = whirl_structure(&g, &[0, 1]).unwrap();
        assert_eq!(w.m, 1);
        assert_eq!(w.blocks, vec![vec![0, 1]]);
        // 3-cycle with a chord is strongly connected but no whirl.
        let g = graph("a -> b\nb -> c\nc -> a\na -> c\n");
        assert!(whirl_structure(&g, &[0, 1, 2]).is_none());
        // Symmetric triangle without loops is no whirl either.
        let g = graph("a -> b\nb -> a\nb -> c\nc -> b\na -> c\nc -> a\n");
        assert!(whirl_structure(&g, &[0, 1, 2]).is_none());
    }

    #[test]
    fn whirl_blocks_are_canonical_under_relabeling() {
        // The same 3-whirl presented with scrambled vertex order.
        let g = graph("m -> v\nm -> u\nu -> a\nv -> a\na -> m\n");
        let comp = &g.scc().components()[0].vertices;
        let w = whirl_structure(&g, comp).unwrap();
        assert_eq!(w.m, 3);
        // Vertex 0 is "m"; its block leads, and blocks list members in
        // index order ("v" was interned before "u").
        let named = w.blocks_named(&g);
        assert_eq!(named, vec![vec!["m"], vec!["v", "u"], vec!["a"]]);
    }

    #[test]
    fn walk_extremals_match_pinned_examples() {
        let g = graph("a -> b\n");
        assert_eq!(g.longest_walk_from(0), ExtInt::Fin(1));
        assert_eq!(g.longest_walk_from(1), ExtInt::Fin(0));
        assert_eq!(g.longest_walk_to(0), ExtInt::Fin(0));
        assert_eq!(g.longest_walk_to(1), ExtInt::Fin(1));
        let gal = gallery();
        assert_eq!(gal.longest_walk_from(idx(&gal, "o0")), ExtInt::PosInf);
        assert_eq!(gal.longest_walk_from(idx(&gal, "o1")), ExtInt::Fin(2));
        assert_eq!(gal.longest_walk_to(idx(&gal, "o3")), ExtInt::PosInf);
        // Nothing nontrivial reaches the p-chain; the entry chain caps it.
        assert_eq!(gal.longest_walk_to(idx(&gal, "p9")), ExtInt::Fin(9));
        assert_eq!(gal.longest_walk_to(idx(&gal, "b2")), ExtInt::Fin(2));
        assert_eq!(gal.longest_walk_from(idx(&gal, "p0")), ExtInt::Fin(9));
    }

    #[test]
    fn params_on_tiny_graphs_match_pinned_values() {
        let g = graph("a -> b\n");
        assert_eq!(
            *g.params(),
            GraphParams {
                m_g: 1,
                p_g: ExtInt::Fin(1),
                e_g: ExtInt::NegInf,
                o_g: ExtInt::NegInf,
                z_g: ExtInt::NegInf,
                b_g: ExtInt::NegInf,
                lambda_g: ExtInt::NegInf,
            }
        );
        let g = graph("a -> b\nb -> a\n");
        assert_eq!(
            *g.params(),
            GraphParams {
                m_g: 2,
                p_g: ExtInt::NegInf,
                e_g: ExtInt::Fin(0),
                o_g: ExtInt::Fin(0),
                z_g: ExtInt::NegInf,
                b_g: ExtInt::NegInf,
                lambda_g: ExtInt::NegInf,
            }
        );
    }

    #[test]
    fn params_on_the_gallery_graph() {
        let g = gallery();
        assert_eq!(g.vertex_count(), 34);
        assert_eq!(
            *g.params(),
            GraphParams {
                m_g: 12,
                p_g: ExtInt::Fin(9),
                e_g: ExtInt::Fin(4),
                o_g: ExtInt::Fin(3),
                z_g: ExtInt::Fin(1),
                b_g: ExtInt::Fin(2),
                lambda_g: ExtInt::Fin(1),
            }
        );
        assert!(g.all_nontrivial_sccs_are_whirls());
        assert!(g.no_path_between_nontrivial_sccs());
        let scc = g.scc();
        let whirl_sizes: Vec<usize> = scc
            .nontrivial_component_ids()
            .map(|c| g.whirl(c).expect("gallery components are whirls").m)
            .collect();
        assert_eq!(whirl_sizes, vec![3, 4]);
    }

    #[test]
    fn omega_on_the_gallery_graph_matches_the_table() {
        let g = gallery();
        let table: &[(usize, &[i64])] = &[
            (1, &[3]),
            (2, &[6, 4]),
            (3, &[7, 7, 5]),
            (4, &[8, 8, 8, 6]),
            (5, &[8, 8, 8, 7, 7]),
            (6, &[8, 8, 8, 8, 8, 8]),
            (7, &[9, 9, 9, 9, 9, 9, 9]),
            (8, &[10, 10, 10, 10, 10, 10, 10, 10]),
        ];
        for &(ell, row) in table {
            for (i, &want) in row.iter().enumerate() {
                let r = i + 1;
                assert_eq!(
                    omega_g(&g, ell, r).unwrap(),
                    ExtInt::Fin(want),
                    "omega_G({ell}, {r})"
                );
            }
        }
        // Beyond the table the values settle at l + 2.
        for ell in 6..=10 {
            for r in 1..=ell {
                assert_eq!(omega_g(&g, ell, r).unwrap(), ExtInt::Fin(ell as i64 + 2));
            }
        }
        assert_eq!(omega_g(&g, 9, 1).unwrap(), ExtInt::Fin(11));
    }

    #[test]
    fn omega_rejects_out_of_range_parameters() {
        let g = graph("a -> b\n");
        assert!(matches!(
            omega_g(&g, 0, 1),
            Err(GraphError::OmegaRange { .. })
        ));
        assert!(matches!(
            omega_g(&g, 2, 3),
            Err(GraphError::OmegaRange { .. })
        ));
        assert!(matches!(
            omega_g(&g, 2, 0),
            Err(GraphError::OmegaRange { .. })
        ));
        // No nontrivial component reachable: -inf.
        assert_eq!(omega_g(&g, 1, 1).unwrap(), ExtInt::NegInf);
        // 2-cycle: walks end nontrivial but never at a trivial vertex.
        let g2 = graph("a -> b\nb -> a\n");
        assert_eq!(omega_g(&g2, 1, 1).unwrap(), ExtInt::NegInf);
    }

    #[test]
    fn params_serialize_with_infinity_strings() {
        let g = graph("a -> b\n");
        let json = serde_json::to_string(g.params()).unwrap();
        assert_eq!(
            json,
            r#"{"m_g":1,"p_g":1,"e_g":"-inf","o_g":"-inf","z_g":"-inf","b_g":"-inf","lambda_g":"-inf"}"#
        );
        let back: GraphParams = serde_json::from_str(&json).unwrap();
        assert_eq!(back, *g.params());
        assert_eq!(
            serde_json::from_str::<ExtInt>("\"inf\"").unwrap(),
            ExtInt::PosInf
        );
        assert_eq!(
            serde_json::from_str::<ExtInt>("-3").unwrap(),
            ExtInt::Fin(-3)
        );
    }

    // -----------------------------------------------------------------
    // Definitional brute force. Each parameter is recomputed straight
    // from its definition by enumerating walks; a witness walk that
    // revisits a vertex can be pumped, certifying an unbounded value,
    // and by pigeonhole every witness longer than the vertex count
    // revisits, so enumerating up to n + 3 edges is exhaustive.

    fn for_each_walk(g: &Digraph, start: usize, max_edges: usize, f: &mut impl FnMut(&[usize])) {
        fn rec(g: &Digraph, w: &mut Vec<usize>, max_edges: usize, f: &mut impl FnMut(&[usize])) {
            f(w);
            if w.len() <= max_edges {
                let last = *w.last().unwrap();
                for i in 0..g.out_neighbors(last).len() {
                    let u = g.out_neighbors(last)[i];
                    w.push(u);
                    rec(g, w, max_edges, f);
                    w.pop();
                }
            }
        }
        let mut w = vec![start];
        rec(g, &mut w, max_edges, f);
    }

    fn has_repeat(w: &[usize]) -> bool {
        (0..w.len()).any(|i| (i + 1..w.len()).any(|j| w[i] == w[j]))
    }

    fn reach_matrix(g: &Digraph) -> Vec<Vec<bool>> {
        // reach[u][v]: walk of at least one edge from u to v.
        let n = g.vertex_count();
        let mut reach = vec![vec![false; n]; n];
        for (u, row) in reach.iter_mut().enumerate() {
            let mut stack: Vec<usize> = g.out_neighbors(u).to_vec();
            for &v in &stack {
                row[v] = true;
            }
            while let Some(v) = stack.pop() {
                for &w in g.out_neighbors(v) {
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach
    }

    fn brute_components(g: &Digraph) -> (Vec<usize>, Vec<Vec<usize>>, Vec<bool>) {
        let n = g.vertex_count();
        let reach = reach_matrix(g);
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if comp_of[v] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let members: Vec<usize> = (0..n)
                .filter(|&u| u == v || (reach[v][u] && reach[u][v]))
                .collect();
            for &u in &members {
                comp_of[u] = id;
            }
            comps.push(members);
        }
        let nontrivial: Vec<bool> = (0..n).map(|v| reach[v][v]).collect();
        (comp_of, comps, nontrivial)
    }

    /// All ordered block partitions (B_0 holding the smallest member)
    /// whose block cycle is exactly the induced edge set.
    fn brute_whirl(g: &Digraph, comp: &[usize]) -> Option<(usize, Vec<Vec<usize>>)> {
        let k = comp.len();
        let mut found: Option<(usize, Vec<Vec<usize>>)> = None;
        for m in 1..=k {
            let mut assign = vec![0usize; k];
            loop {
                let ok_partition = (0..m).all(|b| assign.contains(&b)) && assign[0] == 0;
                if ok_partition {
                    let edges_ok = (0..k).all(|i| {
                        (0..k).all(|j| {
                            let expected = assign[j] == (assign[i] + 1) % m;
                            g.has_edge(comp[i], comp[j]) == expected
                        })
                    });
                    if edges_ok {
                        let mut blocks = vec![Vec::new(); m];
                        for (i, &b) in assign.iter().enumerate() {
                            blocks[b].push(comp[i]);
                        }
                        let cert = (m, blocks);
                        if let Some(prev) = &found {
                            assert_eq!(*prev, cert, "whirl structure must be unique");
                        } else {
                            found = Some(cert);
                        }
                    }
                }
                // Next assignment in base m.
                let mut i = 0;
                loop {
                    if i == k {
                        break;
                    }
                    assign[i] += 1;
                    if assign[i] < m {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        found
    }

    fn brute_params(g: &Digraph) -> GraphParams {
        let n = g.vertex_count();
        let cap = n + 3;
        let (comp_of, comps, nontrivial) = brute_components(g);
        let trivial = |v: usize| !nontrivial[v];

        let mut m_g: u64 = 1;
        let mut whirl_certs: Vec<Option<(usize, Vec<Vec<usize>>)>> = Vec::new();
        for members in &comps {
            let is_nontrivial = members.iter().any(|&v| nontrivial[v]);
            whirl_certs.push(if is_nontrivial {
                brute_whirl(g, members)
            } else {
                None
            });
        }
        for cert in whirl_certs.iter().flatten() {
            m_g = m_g.lcm(&(cert.0 as u64));
        }

        let mut p_g = ExtInt::NegInf;
        let mut e_g = ExtInt::NegInf;
        let mut o_g = ExtInt::NegInf;
        if (0..n).any(|v| nontrivial[v]) {
            e_g = ExtInt::Fin(0);
            o_g = ExtInt::Fin(0);
        }
        for start in 0..n {
            for_each_walk(g, start, cap, &mut |w| {
                if has_repeat(w) {
                    return;
                }
                let len = (w.len() - 1) as i64;
                if w.iter().all(|&v| trivial(v)) {
                    p_g = p_g.max(ExtInt::Fin(len));
                }
                if nontrivial[*w.last().unwrap()] && w[..w.len() - 1].iter().all(|&v| trivial(v)) {
                    e_g = e_g.max(ExtInt::Fin(len));
                }
                if nontrivial[w[0]] && w[1..].iter().all(|&v| trivial(v)) {
                    o_g = o_g.max(ExtInt::Fin(len));
                }
            });
        }

        let mut z_g = ExtInt::NegInf;
        for (_, blocks) in whirl_certs.iter().flatten() {
            for block in blocks {
                for &u in block {
                    for &mate in block {
                        if mate == u {
                            continue;
                        }
                        for_each_walk(g, u, cap, &mut |w| {
                            if w.len() >= 2 && !g.has_edge(mate, w[1]) {
                                let m_val = (w.len() - 2) as i64;
                                z_g = z_g.max(if has_repeat(w) {
                                    ExtInt::PosInf
                                } else {
                                    ExtInt::Fin(m_val)
                                });
                            }
                        });
                    }
                }
            }
        }

        let mut b_g = ExtInt::NegInf;
        for start in 0..n {
            for_each_walk(g, start, cap, &mut |w| {
                let x = *w.last().unwrap();
                let comps_hit: std::collections::BTreeSet<usize> = g
                    .out_neighbors(x)
                    .iter()
                    .filter(|&&v| nontrivial[v])
                    .map(|&v| comp_of[v])
                    .collect();
                if comps_hit.len() >= 2 {
                    let len = (w.len() - 1) as i64;
                    b_g = b_g.max(if has_repeat(w) {
                        ExtInt::PosInf
                    } else {
                        ExtInt::Fin(len)
                    });
                }
            });
        }

        let mut lambda_g = ExtInt::NegInf;
        if let ExtInt::Fin(e) = e_g {
            if e >= 1 {
                for start in 0..n {
                    for_each_walk(g, start, cap, &mut |w| {
                        let len = (w.len() - 1) as i64;
                        if len != e
                            || has_repeat(w)
                            || !nontrivial[*w.last().unwrap()]
                            || !w[..w.len() - 1].iter().all(|&v| trivial(v))
                        {
                            return;
                        }
                        let a = w[w.len() - 2];
                        let k = *w.last().unwrap();
                        for &mate in &comps[comp_of[k]] {
                            if !g.has_edge(mate, k) {
                                continue;
                            }
                            for v0 in 0..n {
                                if g.has_edge(mate, v0) == g.has_edge(a, v0) {
                                    continue;
                                }
                                for_each_walk(g, v0, cap, &mut |w2| {
                                    let m_val = (w2.len() - 1) as i64;
                                    lambda_g = lambda_g.max(if has_repeat(w2) {
                                        ExtInt::PosInf
                                    } else {
                                        ExtInt::Fin(m_val)
                                    });
                                });
                            }
                        }
                    });
                }
            }
        }

        GraphParams {
            m_g,
            p_g,
            e_g,
            o_g,
            z_g,
            b_g,
            lambda_g,
        }
    }

    fn brute_omega(g: &Digraph, ell: usize, r: usize) -> ExtInt {
        let n = g.vertex_count();
        let (_, _, nontrivial) = brute_components(g);
        // Valid anchors x: end a walk of exactly r - 1 edges and start a
        // walk of exactly l - r + 1 edges into the nontrivial part.
        let mut anchors = std::collections::BTreeSet::new();
        for start in 0..n {
            for_each_walk(g, start, ell, &mut |w| {
                if w.len() == ell + 1 && nontrivial[*w.last().unwrap()] {
                    anchors.insert(w[r - 1]);
                }
            });
        }
        let idx = ell - r + 1;
        let cap = idx + n + 2;
        let mut best = ExtInt::NegInf;
        for &x in &anchors {
            for_each_walk(g, x, cap, &mut |w2| {
                if w2.len() <= idx || nontrivial[w2[idx]] {
                    return;
                }
                let m_val = (r - 1 + w2.len() - 1) as i64;
                best = best.max(if has_repeat(&w2[idx..]) {
                    ExtInt::PosInf
                } else {
                    ExtInt::Fin(m_val)
                });
            });
        }
        best
    }

    #[test]
    fn params_agree_with_brute_force_on_all_small_digraphs() {
        for n in 0..=3 {
            if n == 0 {
                let g = Digraph::new(vec![], &[]).unwrap();
                assert_eq!(*g.params(), brute_params(&g));
                continue;
            }
            for g in enumerate_digraphs(n) {
                let fast = *g.params();
                let brute = brute_params(&g);
                assert_eq!(
                    fast,
                    brute,
                    "params mismatch on n = {n}, edges {:?}",
                    g.edges().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn whirl_detection_agrees_with_brute_force_on_all_small_digraphs() {
        for n in 1..=3 {
            for g in enumerate_digraphs(n) {
                let scc = g.scc();
                for (cid, comp) in scc.components().iter().enumerate() {
                    if !comp.nontrivial {
                        assert!(g.whirl(cid).is_none());
                        continue;
                    }
                    let brute = brute_whirl(&g, &comp.vertices);
                    match (g.whirl(cid), brute) {
                        (None, None) => {}
                        (Some(w), Some((m, blocks))) => {
                            assert_eq!(w.m, m);
                            assert_eq!(w.blocks, blocks);
                        }
                        (fast, brute) => panic!(
                            "whirl mismatch on edges {:?}: fast {fast:?}, brute {brute:?}",
                            g.edges().collect::<Vec<_>>()
                        ),
                    }
                }
            }
        }
    }

    #[test]
    fn omega_agrees_with_brute_force_on_sampled_small_digraphs() {
        // Every 13th mask plus the masks of named shapes.
        let mut masks: Vec<u64> = (0..512).step_by(13).collect();
        masks.extend([0b000_000_010, 0b000_001_010, 0b100_001_010, 0b111_111_111]);
        for &mask in &masks {
            let g = Digraph::from_mask(3, mask);
            for ell in 1..=4 {
                for r in 1..=ell {
                    assert_eq!(
                        omega_g(&g, ell, r).unwrap(),
                        brute_omega(&g, ell, r),
                        "omega mismatch on mask {mask:#b}, l = {ell}, r = {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn omega_dominates_outlet_extensions_on_all_small_digraphs() {
        // Following a longest entry into a whirl and leaving along a
        // longest outlet always realizes l + O_G - 1.
        for g in enumerate_digraphs(3) {
            let o_g = g.params().o_g;
            if let ExtInt::Fin(o) = o_g {
                if o < 1 {
                    continue;
                }
                for ell in 1..=5 {
                    for r in 1..=ell {
                        let w = omega_g(&g, ell, r).unwrap();
                        assert!(
                            w >= ExtInt::Fin(ell as i64 + o - 1),
                            "omega_G({ell},{r}) = {w} < l + O_G - 1 on {:?}",
                            g.edges().collect::<Vec<_>>()
                        );
                    }
                }
            }
        }
        let g = gallery();
        for ell in 1..=8 {
            for r in 1..=ell {
                assert!(omega_g(&g, ell, r).unwrap() >= ExtInt::Fin(ell as i64 + 3 - 1));
            }
        }
    }

    #[test]
    fn induced_subgraph_keeps_names_and_edges() {
        let g = graph("a -> b\nb -> c\nc -> a\nc -> d\n");
        let h = g.induced(&[0, 1, 2]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.vertex_name(2), "c");
        assert!(h.has_edge(2, 0));
        assert!(!h.edges().any(|(_, v)| v >= 3));
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn asymmetric_edge_detection() {
        let g = graph("a -> b\nb -> a\nb -> c\n");
        assert_eq!(g.first_asymmetric_edge(), Some((1, 2)));
        let h = graph("a -> b\nb -> a\n");
        assert_eq!(h.first_asymmetric_edge(), None);
    }
}
