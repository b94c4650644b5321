//! Identity decisions, associativity, and spectrum classification.
//!
//! A digraph's algebra satisfies a bracketing identity t ≈ t' exactly
//! when ten comparisons between graph-side parameters and pair-side
//! parameters all pass. This module evaluates those conditions (with a
//! full per-condition report on request), specializes the test to
//! associativity, classifies symmetric digraphs by which identities
//! they satisfy, and sorts arbitrary digraphs into the three spectrum
//! growth classes.

use crate::digraph::{omega_g, Digraph, ExtInt, GraphParams};
use crate::pairparams::{pair_params, PairParams};
use crate::terms::{Bracketing, DfsTree};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Errors from the decision-layer entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("bracketings have different sizes: {left} vs {right} leaves")]
    SizeMismatch { left: usize, right: usize },
    #[error("graph is not symmetric: edge {u} -> {v} has no reverse")]
    NotSymmetric { u: String, v: String },
}

/// One row of the condition report: the requirement, the two computed
/// quantities being compared, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Roman numeral "i" through "x".
    pub id: &'static str,
    pub requirement: &'static str,
    pub left: String,
    pub right: String,
    pub passed: bool,
}

/// Outcome of deciding t ≈ t' on a graph algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decision {
    /// True when the identity holds. Equivalent to every row of
    /// `condition_report` passing (vacuously for identical terms).
    pub satisfied: bool,
    /// True when the two bracketings were identical, in which case no
    /// conditions were evaluated.
    pub trivial: bool,
    pub condition_report: Vec<ConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_params: Option<GraphParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_params: Option<PairParams>,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "satisfied: {}",
            if self.satisfied { "yes" } else { "no" }
        )?;
        if self.trivial {
            return write!(f, "\nthe bracketings are identical; no conditions to check");
        }
        let wr = self
            .condition_report
            .iter()
            .map(|c| c.requirement.len())
            .max()
            .unwrap_or(0);
        let wl = self
            .condition_report
            .iter()
            .map(|c| c.left.len())
            .max()
            .unwrap_or(0);
        let ww = self
            .condition_report
            .iter()
            .map(|c| c.right.len())
            .max()
            .unwrap_or(0);
        for c in &self.condition_report {
            write!(
                f,
                "\n({:>4})  {:<wr$}  {:<wl$}  {:<ww$}  {}",
                c.id,
                c.requirement,
                c.left,
                c.right,
                if c.passed { "pass" } else { "FAIL" },
            )?;
        }
        Ok(())
    }
}

/// Finds a path between two distinct nontrivial components, as vertex
/// name sets, for reporting. `None` when no such path exists.
fn nontrivial_link_witness(g: &Digraph) -> Option<(String, String)> {
    let scc = g.scc();
    let ids: Vec<usize> = scc.nontrivial_component_ids().collect();
    for &c in &ids {
        // Forward closure from the component, excluding its own members.
        let mut seen = vec![false; g.vertex_count()];
        let mut stack: Vec<usize> = scc.components()[c].vertices.clone();
        while let Some(v) = stack.pop() {
            for &w in g.out_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        for &d in &ids {
            if d != c && scc.components()[d].vertices.iter().any(|&v| seen[v]) {
                let names = |id: usize| {
                    let v: Vec<&str> = scc.components()[id]
                        .vertices
                        .iter()
                        .map(|&x| g.vertex_name(x))
                        .collect();
                    format!("{{{}}}", v.join(","))
                };
                return Some((names(c), names(d)));
            }
        }
    }
    None
}

/// Evaluates the ten conditions for a distinct pair with parameters `p`
/// on `g`. `omega_g_at(l, r)` must return ω_G(l, r) for 1 ≤ r ≤ l.
///
/// With `collect` set, all ten conditions are evaluated and reported;
/// without it, evaluation stops at the first failure and no strings are
/// built. Both the reporting and the bulk decision path go through this
/// one function so they cannot drift apart.
fn evaluate_conditions<F: FnMut(usize, usize) -> ExtInt>(
    g: &Digraph,
    p: &PairParams,
    mut omega_g_at: F,
    collect: bool,
) -> (bool, Vec<ConditionReport>) {
    let gp = *g.params();
    let mut rows: Vec<ConditionReport> = Vec::new();
    let mut all = true;

    macro_rules! record {
        ($id:literal, $req:literal, $passed:expr, $left:expr, $right:expr) => {{
            let passed = $passed;
            all &= passed;
            if collect {
                rows.push(ConditionReport {
                    id: $id,
                    requirement: $req,
                    left: $left,
                    right: $right,
                    passed,
                });
            } else if !passed {
                return (false, rows);
            }
        }};
    }

    // (i) every nontrivial SCC is a whirl.
    {
        let scc = g.scc();
        let bad: Vec<usize> = scc
            .nontrivial_component_ids()
            .filter(|&c| g.whirl(c).is_none())
            .collect();
        record!(
            "i",
            "every nontrivial SCC is a whirl",
            bad.is_empty(),
            if bad.is_empty() {
                "non-whirl nontrivial SCCs: none".to_string()
            } else {
                let sets: Vec<String> = bad
                    .iter()
                    .map(|&c| {
                        let names: Vec<&str> = scc.components()[c]
                            .vertices
                            .iter()
                            .map(|&v| g.vertex_name(v))
                            .collect();
                        format!("{{{}}}", names.join(","))
                    })
                    .collect();
                format!("non-whirl nontrivial SCCs: {}", sets.join(" "))
            },
            "none".to_string()
        );
    }

    // (ii) no path between distinct nontrivial SCCs.
    record!(
        "ii",
        "no path joins two distinct nontrivial SCCs",
        g.no_path_between_nontrivial_sccs(),
        match nontrivial_link_witness(g) {
            None => "paths between distinct nontrivial SCCs: none".to_string(),
            Some((from, to)) => format!("path from {from} to {to}"),
        },
        "none".to_string()
    );

    // (iii) M_G divides M.
    record!(
        "iii",
        "M_G divides M",
        p.m.is_multiple_of(gp.m_g),
        format!("M_G = {}", gp.m_g),
        format!("M = {}", p.m)
    );

    // (iv) P_G < H.
    record!(
        "iv",
        "P_G < H",
        gp.p_g < ExtInt::Fin(p.h),
        format!("P_G = {}", gp.p_g),
        format!("H = {}", p.h)
    );

    // (v) E_G <= L + 1.
    record!(
        "v",
        "E_G <= L + 1",
        gp.e_g <= ExtInt::Fin(p.l + 1),
        format!("E_G = {}", gp.e_g),
        format!("L + 1 = {}", p.l + 1)
    );

    // (vi) O_G <= Y + 1.
    record!(
        "vi",
        "O_G <= Y + 1",
        gp.o_g <= ExtInt::Fin(p.y + 1),
        format!("O_G = {}", gp.o_g),
        format!("Y + 1 = {}", p.y + 1)
    );

    // (vii) Z_G < Z.
    record!(
        "vii",
        "Z_G < Z",
        gp.z_g < ExtInt::Fin(p.z),
        format!("Z_G = {}", gp.z_g),
        format!("Z = {}", p.z)
    );

    // (viii) B_G < L.
    record!(
        "viii",
        "B_G < L",
        gp.b_g < ExtInt::Fin(p.l),
        format!("B_G = {}", gp.b_g),
        format!("L = {}", p.l)
    );

    // (ix) omega_G(L + 1, r) < omega(r) for every r in 1..=L+1.
    {
        let ell = (p.l + 1) as usize;
        let mut lhs = Vec::new();
        let mut passed = true;
        for r in 1..=ell {
            let w = omega_g_at(ell, r);
            let ok = w < ExtInt::Fin(p.omega(r));
            passed &= ok;
            if collect {
                lhs.push(w.to_string());
            } else if !ok {
                return (false, rows);
            }
        }
        record!(
            "ix",
            "omega_G(L+1, r) < omega(r) for r = 1..=L+1",
            passed,
            format!("omega_G(L+1, .) = [{}]", lhs.join(", ")),
            format!(
                "omega(.) = [{}]",
                (1..=ell)
                    .map(|r| p.omega(r).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        );
    }

    // (x) if E_G = L + 1 then lambda_G < lambda.
    {
        let applies = gp.e_g == ExtInt::Fin(p.l + 1);
        record!(
            "x",
            "if E_G = L + 1 then lambda_G < lambda",
            !applies || gp.lambda_g < ExtInt::Fin(p.lambda),
            if applies {
                format!("lambda_G = {}", gp.lambda_g)
            } else {
                format!("vacuous: E_G = {} differs from L + 1 = {}", gp.e_g, p.l + 1)
            },
            format!("lambda = {}", p.lambda)
        );
    }

    (all, rows)
}

/// Decides whether the graph algebra of `g` satisfies t ≈ t', with a
/// full condition report. Identical terms are satisfied trivially with
/// no conditions evaluated.
pub fn decide_identity(
    g: &Digraph,
    t: &Bracketing,
    t_prime: &Bracketing,
) -> Result<Decision, DecisionError> {
    if t.n() != t_prime.n() {
        return Err(DecisionError::SizeMismatch {
            left: t.n(),
            right: t_prime.n(),
        });
    }
    if t == t_prime {
        return Ok(Decision {
            satisfied: true,
            trivial: true,
            condition_report: Vec::new(),
            graph_params: None,
            pair_params: None,
        });
    }
    let p = pair_params(t, t_prime).expect("terms are distinct and sized alike");
    let (satisfied, condition_report) =
        evaluate_conditions(g, &p, |l, r| omega_g(g, l, r).expect("1 <= r <= l"), true);
    Ok(Decision {
        satisfied,
        trivial: false,
        condition_report,
        graph_params: Some(*g.params()),
        pair_params: Some(p),
    })
}

/// Bulk decision engine for many pairs over one graph: graph parameters
/// are computed once and ω_G(l, r) is tabulated up front, so individual
/// decisions touch the graph only through cached values and can run
/// from multiple threads (`decide_trees` takes `&self`).
pub struct IdentityDecider<'g> {
    g: &'g Digraph,
    /// ω_G(l, r) for 1 ≤ r ≤ l ≤ max_leaves − 1, indexed [l-1][r-1].
    omega_table: Vec<Vec<ExtInt>>,
}

impl<'g> IdentityDecider<'g> {
    /// Prepares a decider for bracketings with up to `max_leaves`
    /// variables (so L + 1 ≤ max_leaves − 1 stays within the table).
    pub fn new(g: &'g Digraph, max_leaves: usize) -> Self {
        let _ = g.params();
        let omega_table = (1..=max_leaves.saturating_sub(1))
            .map(|l| {
                (1..=l)
                    .map(|r| omega_g(g, l, r).expect("1 <= r <= l"))
                    .collect()
            })
            .collect();
        IdentityDecider { g, omega_table }
    }

    /// Fast no-report decision for a pair of same-size DFS trees.
    pub fn decide_trees(&self, a: &DfsTree, b: &DfsTree) -> bool {
        if a == b {
            return true;
        }
        let p = PairParams::from_trees(a, b).expect("distinct trees of equal size");
        let omega = |l: usize, r: usize| match self.omega_table.get(l - 1) {
            Some(row) => row[r - 1],
            None => omega_g(self.g, l, r).expect("1 <= r <= l"),
        };
        evaluate_conditions(self.g, &p, omega, false).0
    }
}

/// Whether `g` satisfies x1(x2x3) ≈ (x1x2)x3. The decision procedure is
/// authoritative; see [`associativity_report`] for the structural
/// cross-check.
pub fn is_associative(g: &Digraph) -> bool {
    let t: Bracketing = "x1(x2x3)".parse().expect("well-formed term");
    let t_prime: Bracketing = "(x1x2)x3".parse().expect("well-formed term");
    let p = pair_params(&t, &t_prime).expect("distinct terms");
    evaluate_conditions(g, &p, |l, r| omega_g(g, l, r).expect("1 <= r <= l"), false).0
}

/// Associativity computed two ways: by the identity decision (the
/// `associative` field, authoritative) and by the structural
/// characterization (nontrivial SCCs are complete graphs with loops and
/// every out-neighbourhood is an entire nontrivial SCC). The two can
/// disagree on vertices with no out-edges, which satisfy every identity
/// by direct evaluation yet violate the structural description; any
/// disagreement is reported, never silently reconciled.
#[derive(Clone, Debug, Serialize)]
pub struct AssociativityReport {
    pub associative: bool,
    pub structural: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disagreement: Option<String>,
}

/// First violation of the structural characterization, if any.
fn structural_violation(g: &Digraph) -> Option<String> {
    let scc = g.scc();
    for c in scc.nontrivial_component_ids() {
        if g.whirl(c).is_none_or(|w| w.m != 1) {
            let names: Vec<&str> = scc.components()[c]
                .vertices
                .iter()
                .map(|&v| g.vertex_name(v))
                .collect();
            return Some(format!(
                "nontrivial SCC {{{}}} is not a complete graph with loops",
                names.join(",")
            ));
        }
    }
    for v in 0..g.vertex_count() {
        let out = g.out_neighbors(v);
        let ok = out.first().is_some_and(|&w| {
            let c = scc.component_of(w);
            scc.components()[c].nontrivial && scc.components()[c].vertices == out
        });
        if !ok {
            return Some(format!(
                "the out-neighbourhood of vertex '{}' is not an entire nontrivial SCC",
                g.vertex_name(v)
            ));
        }
    }
    None
}

pub fn associativity_report(g: &Digraph) -> AssociativityReport {
    let associative = is_associative(g);
    let violation = structural_violation(g);
    let structural = violation.is_none();
    let disagreement = (associative != structural).then(|| {
        if associative {
            format!(
                "the identity holds by direct decision, but the structural \
                 characterization fails: {}",
                violation.expect("structural check failed")
            )
        } else {
            "the structural characterization holds, but the decision procedure \
             rejects the identity"
                .to_string()
        }
    });
    AssociativityReport {
        associative,
        structural,
        disagreement,
    }
}

/// Which bracketing identities a symmetric digraph satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UndirectedClass {
    /// Every component is trivial or complete-with-loops: all identities.
    AllIdentities,
    /// Some component is complete bipartite (and the rest are trivial or
    /// complete-with-loops): exactly the identities with M even.
    EvenMIdentities,
    /// Anything else: only the trivial identities t ≈ t.
    NoIdentities,
}

impl fmt::Display for UndirectedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UndirectedClass::AllIdentities => "AllIdentities",
            UndirectedClass::EvenMIdentities => "EvenMIdentities",
            UndirectedClass::NoIdentities => "NoIdentities",
        })
    }
}

/// Classifies a symmetric digraph by the identities it satisfies. In a
/// symmetric graph connected components coincide with SCCs, and a
/// nontrivial symmetric whirl has 1 or 2 blocks: complete-with-loops or
/// complete bipartite. Errors on non-symmetric input.
pub fn classify_undirected(g: &Digraph) -> Result<UndirectedClass, DecisionError> {
    if let Some((u, v)) = g.first_asymmetric_edge() {
        return Err(DecisionError::NotSymmetric {
            u: g.vertex_name(u).to_string(),
            v: g.vertex_name(v).to_string(),
        });
    }
    let scc = g.scc();
    let mut saw_bipartite = false;
    for c in scc.nontrivial_component_ids() {
        match g.whirl(c) {
            Some(w) if w.m == 1 => {}
            Some(w) if w.m == 2 => saw_bipartite = true,
            _ => return Ok(UndirectedClass::NoIdentities),
        }
    }
    Ok(if saw_bipartite {
        UndirectedClass::EvenMIdentities
    } else {
        UndirectedClass::AllIdentities
    })
}

/// Growth class of the associative spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpectrumKind {
    /// Associative: one equivalence class at every size.
    Constant1,
    /// Exactly two classes from size 3 on.
    Constant2,
    /// Exponentially many classes.
    Exponential,
}

/// Dichotomy class with, for the exponential case, the weakly connected
/// component that forces the growth (by vertex name).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumClass {
    pub kind: SpectrumKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpectrumKind::Constant1 => f.write_str("Constant1"),
            SpectrumKind::Constant2 => f.write_str("Constant2"),
            SpectrumKind::Exponential => {
                write!(
                    f,
                    "Exponential (witness component: {{{}}})",
                    self.witness.as_deref().unwrap_or(&[]).join(",")
                )
            }
        }
    }
}

/// Weakly connected components, each sorted, ordered by smallest vertex.
fn weak_components(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// No vertex carries a loop or both an in-edge and an out-edge, and
/// there is at least one edge: every edge runs from a source side to a
/// sink side. Edgeless graphs do not qualify.
fn is_directed_bipartite_with_edge(g: &Digraph) -> bool {
    if g.edge_count() == 0 {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        !g.has_edge(v, v) && (g.out_neighbors(v).is_empty() || g.in_neighbors(v).is_empty())
    })
}

/// Sorts `g` into the three spectrum growth classes. Identities over a
/// disjoint union hold exactly when they hold on every component, so
/// the classifier works one weakly connected component at a time:
/// associative components keep the spectrum at 1, source-to-sink
/// bipartite components with an edge cap it at 2, and any other
/// component forces exponential growth and is returned as the witness.
pub fn classify_dichotomy(g: &Digraph) -> SpectrumClass {
    if is_associative(g) {
        return SpectrumClass {
            kind: SpectrumKind::Constant1,
            witness: None,
        };
    }
    for comp in weak_components(g) {
        let induced = g.induced(&comp);
        if is_associative(&induced) || is_directed_bipartite_with_edge(&induced) {
            continue;
        }
        let names = comp.iter().map(|&v| g.vertex_name(v).to_string()).collect();
        return SpectrumClass {
            kind: SpectrumKind::Exponential,
            witness: Some(names),
        };
    }
    SpectrumClass {
        kind: SpectrumKind::Constant2,
        witness: None,
    }
}
