//! Executable forms of the structural characterizations, evaluated over a
//! corpus of semigroups.
//!
//! Every check computes two [`Value`]s from a semigroup by independent
//! routes: one from the graph side, one from the algebra side. The check
//! agrees on an instance when the values are equal (`Iff`) or when a true
//! premise comes with a true conclusion (`Implies`). Disagreements are kept
//! with the canonical table so they can be replayed.

use std::cell::OnceCell;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{canonical_form, DedupMode, MAX_CANONICAL_ORDER};
use crate::epgraph::{component_of_in, enhanced_power_graph_from};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::green::{green_relations, is_subgroup, GreenPartition, GreenRelation};
use crate::props::{classify, independence_number, is_planar, GraphClassification};
use crate::semigroup::{
    all_monogenic_data, complete_partial_table, exponent, idempotents, is_monogenic,
    maximal_monogenic, CayleyTable, Element, MonogenicData, SubsemigroupSet,
};

/// The outcome of one side of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Bool(bool),
    Int(i64),
    Elements(Vec<Element>),
    Sets(Vec<Vec<Element>>),
    Tuple(Vec<Value>),
}

impl Value {
    fn truth(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Iff,
    Implies,
}

impl Direction {
    pub fn agrees(self, lhs: &Value, rhs: &Value) -> bool {
        match self {
            Direction::Iff => lhs == rhs,
            Direction::Implies => match (lhs, rhs) {
                (Value::Tuple(a), Value::Tuple(b)) => {
                    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| self.agrees(x, y))
                }
                _ => match (lhs.truth(), rhs.truth()) {
                    (Some(p), Some(q)) => !p || q,
                    _ => false,
                },
            },
        }
    }

    /// Per-component agreement when both sides are tuples of equal length.
    fn component_agreement(self, lhs: &Value, rhs: &Value) -> Option<Vec<bool>> {
        match (lhs, rhs) {
            (Value::Tuple(a), Value::Tuple(b)) if a.len() == b.len() => {
                Some(a.iter().zip(b).map(|(x, y)| self.agrees(x, y)).collect())
            }
            _ => None,
        }
    }
}

/// A semigroup with its derived structures computed on first use.
pub struct Instance {
    table: CayleyTable,
    data: OnceCell<Vec<MonogenicData>>,
    graph: OnceCell<SimpleGraph>,
    classification: OnceCell<GraphClassification>,
    green: OnceCell<GreenPartition>,
    maximal: OnceCell<Vec<SubsemigroupSet>>,
    planar: OnceCell<bool>,
}

impl Instance {
    pub fn new(table: CayleyTable) -> Self {
        Instance {
            table,
            data: OnceCell::new(),
            graph: OnceCell::new(),
            classification: OnceCell::new(),
            green: OnceCell::new(),
            maximal: OnceCell::new(),
            planar: OnceCell::new(),
        }
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn data(&self) -> &[MonogenicData] {
        self.data.get_or_init(|| all_monogenic_data(&self.table))
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.graph
            .get_or_init(|| enhanced_power_graph_from(&self.table, self.data()))
    }

    pub fn classification(&self) -> &GraphClassification {
        self.classification.get_or_init(|| classify(self.graph()))
    }

    pub fn green(&self) -> &GreenPartition {
        self.green.get_or_init(|| green_relations(&self.table))
    }

    pub fn maximal(&self) -> &[SubsemigroupSet] {
        self.maximal.get_or_init(|| maximal_monogenic(&self.table))
    }

    pub fn planar(&self) -> bool {
        *self.planar.get_or_init(|| is_planar(self.graph()).planar)
    }

    fn order(&self) -> usize {
        self.table.order()
    }

    fn pi_within_two(&self) -> bool {
        self.data().iter().all(|d| d.order() <= 2)
    }

    fn graph_components(&self) -> Vec<Vec<Element>> {
        self.graph().components()
    }

    /// `{S_f : f in E(S)}` from power chains, ordered by least element.
    fn s_f_family(&self) -> Vec<Vec<Element>> {
        let mut family: Vec<Vec<Element>> = idempotents(&self.table)
            .into_iter()
            .map(|f| {
                (0..self.order())
                    .filter(|&a| self.data()[a].powers.contains(&f))
                    .collect()
            })
            .collect();
        family.sort();
        family
    }

    /// Distinct monogenic subsemigroups `<a>` as sorted sets.
    fn monogenic_sets(&self) -> Vec<Vec<Element>> {
        let mut sets: Vec<Vec<Element>> =
            self.data().iter().map(MonogenicData::element_set).collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// Some partition of `S` into monogenic subsemigroups, all of size
    /// `size` when given, by exact-cover search.
    pub fn monogenic_partition(&self, size: Option<usize>) -> Option<Vec<Vec<Element>>> {
        let sets: Vec<Vec<Element>> = self
            .monogenic_sets()
            .into_iter()
            .filter(|s| size.is_none_or(|k| s.len() == k))
            .collect();
        let mut covered = vec![false; self.order()];
        let mut chosen = Vec::new();
        fn cover(sets: &[Vec<Element>], covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
            let Some(first) = covered.iter().position(|c| !c) else {
                return true;
            };
            for (i, set) in sets.iter().enumerate() {
                if !set.contains(&first) || set.iter().any(|&x| covered[x]) {
                    continue;
                }
                for &x in set {
                    covered[x] = true;
                }
                chosen.push(i);
                if cover(sets, covered, chosen) {
                    return true;
                }
                chosen.pop();
                for &x in set {
                    covered[x] = false;
                }
            }
            false
        }
        cover(&sets, &mut covered, &mut chosen)
            .then(|| chosen.into_iter().map(|i| sets[i].clone()).collect())
    }

    fn isolated_vertices(&self) -> Vec<Element> {
        let g = self.graph();
        (0..self.order()).filter(|&v| g.degree(v) == 0).collect()
    }

    fn s_a(&self, a: Element) -> Vec<Element> {
        (0..self.order())
            .filter(|&x| self.data()[x].powers.contains(&a))
            .collect()
    }

    /// Idempotent with a trivial H-class, plus `extra`.
    fn isolated_by(&self, extra: impl Fn(&Self, Element) -> bool) -> Vec<Element> {
        (0..self.order())
            .filter(|&a| {
                self.table.mul(a, a) == a
                    && self.green().class_of(GreenRelation::H, a) == vec![a]
                    && extra(self, a)
            })
            .collect()
    }

    /// Three distinct elements of order four and index two whose monogenic
    /// subsemigroups share exactly three elements.
    pub fn shared_kernel_triple(&self) -> Option<(Element, Element, Element)> {
        let cand: Vec<Element> = (0..self.order())
            .filter(|&a| self.data()[a].order() == 4 && self.data()[a].index == 2)
            .collect();
        for (i, &a) in cand.iter().enumerate() {
            for (j, &b) in cand.iter().enumerate().skip(i + 1) {
                for &c in &cand[j + 1..] {
                    let common = self.data()[a]
                        .powers
                        .iter()
                        .filter(|x| self.data()[b].contains(**x) && self.data()[c].contains(**x))
                        .count();
                    if common == 3 {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

type Predicate = fn(&Instance) -> bool;
type Evaluator = fn(&Instance) -> Value;

pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub direction: Direction,
    pub hypothesis: Predicate,
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

impl TheoremCheck {
    pub fn evaluate(&self, instance: &Instance) -> Option<(Value, Value)> {
        (self.hypothesis)(instance).then(|| ((self.lhs)(instance), (self.rhs)(instance)))
    }
}

fn always(_: &Instance) -> bool {
    true
}

fn b(v: bool) -> Value {
    Value::Bool(v)
}

fn int(v: usize) -> Value {
    Value::Int(v as i64)
}

/// The sixteen checks, in the order they are reported.
pub fn builtin_checks() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck {
            id: "P-components-formula",
            statement: "the sets C(x) are exactly the connected components",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let mut parts: Vec<Vec<Element>> =
                    (0..s.order()).map(|x| component_of_in(s.data(), x)).collect();
                parts.sort();
                parts.dedup();
                Value::Sets(parts)
            },
            rhs: |s| Value::Sets(s.graph_components()),
        },
        TheoremCheck {
            id: "C-connected",
            statement: "connected iff <x> meets <y> for all x, y; then diameter <= 2",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let c = s.classification().connected;
                Value::Tuple(vec![b(c), b(c)])
            },
            rhs: |s| {
                let d = s.data();
                let meets = (0..s.order()).all(|x| {
                    (0..s.order()).all(|y| d[x].powers.iter().any(|p| d[y].contains(*p)))
                });
                let c = s.classification();
                let diam = c.diameter_per_component.iter().copied().max().unwrap_or(0);
                Value::Tuple(vec![b(meets), b(c.connected && diam <= 2)])
            },
        },
        TheoremCheck {
            id: "L-unique-idempotent",
            statement: "every <a> contains exactly one idempotent",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| int(s.order()),
            rhs: |s| {
                let t = s.table();
                int(s
                    .data()
                    .iter()
                    .filter(|d| d.powers.iter().filter(|&&p| t.mul(p, p) == p).count() == 1)
                    .count())
            },
        },
        TheoremCheck {
            id: "T-components-idempotents",
            statement: "the components are the sets S_f and there are |E(S)| of them",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let comps = s.graph_components();
                let count = comps.len();
                Value::Tuple(vec![Value::Sets(comps), int(count)])
            },
            rhs: |s| {
                Value::Tuple(vec![
                    Value::Sets(s.s_f_family()),
                    int(idempotents(s.table()).len()),
                ])
            },
        },
        TheoremCheck {
            id: "C-band-null",
            statement: "S is a band iff the graph is null",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| b((0..s.order()).all(|a| s.table().mul(a, a) == a)),
            rhs: |s| b(s.classification().null),
        },
        TheoremCheck {
            id: "L-exponent-bound",
            statement: "o(x) <= 2 * exponent, and every <x> lies in a maximal monogenic subsemigroup",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |_| Value::Tuple(vec![b(true), b(true)]),
            rhs: |s| {
                let bound = exponent(s.table()).is_ok_and(|e| {
                    s.data().iter().all(|d| (d.order() as u64) <= 2 * e)
                });
                let covered = s.data().iter().all(|d| {
                    s.maximal()
                        .iter()
                        .any(|m| d.powers.iter().all(|p| m.elements.binary_search(p).is_ok()))
                });
                Value::Tuple(vec![b(bound), b(covered)])
            },
        },
        TheoremCheck {
            id: "T-complete-monogenic",
            statement: "the graph is complete iff S is monogenic",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| b(s.classification().complete),
            rhs: |s| b(is_monogenic(s.table()).is_some()),
        },
        TheoremCheck {
            id: "T-bipartite",
            statement: "pi(S) within {1,2} iff acyclic iff bipartite",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let p = s.pi_within_two();
                Value::Tuple(vec![b(p), b(p)])
            },
            rhs: |s| {
                let c = s.classification();
                Value::Tuple(vec![b(c.acyclic), b(c.bipartite)])
            },
        },
        TheoremCheck {
            id: "C-tree",
            statement: "the graph is a tree iff |E(S)| = 1 and pi(S) within {1,2}",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| b(s.classification().tree),
            rhs: |s| b(idempotents(s.table()).len() == 1 && s.pi_within_two()),
        },
        TheoremCheck {
            id: "T-regular",
            statement: "k-regular iff S is a disjoint union of monogenic subsemigroups of size k+1",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| Value::Int(s.classification().regular_degree.map_or(-1, |k| k as i64)),
            rhs: |s| {
                let size = (1..=s.order()).find(|&k| s.monogenic_partition(Some(k)).is_some());
                Value::Int(size.map_or(-1, |k| k as i64 - 1))
            },
        },
        TheoremCheck {
            id: "T-components-complete",
            statement: "every component is complete iff S is a disjoint union of monogenic subsemigroups",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let g = s.graph();
                b(s.graph_components().iter().all(|c| {
                    c.iter()
                        .enumerate()
                        .all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                }))
            },
            rhs: |s| b(s.monogenic_partition(None).is_some()),
        },
        TheoremCheck {
            id: "T-completely-regular",
            statement: "S is completely regular iff every component is a group",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                b(s.green()
                    .classes(GreenRelation::H)
                    .iter()
                    .all(|h| is_subgroup(s.table(), h)))
            },
            rhs: |s| {
                b(s.graph_components()
                    .iter()
                    .all(|c| is_subgroup(s.table(), c)))
            },
        },
        TheoremCheck {
            id: "P-isolated",
            statement: "a is isolated iff a is idempotent with H_a = {a} and, first reading, m_x = 1 on S_a, second reading, S_a = {a}",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let iso = s.isolated_vertices();
                Value::Tuple(vec![Value::Elements(iso.clone()), Value::Elements(iso)])
            },
            rhs: |s| {
                let printed = s.isolated_by(|s, a| s.s_a(a).iter().all(|&x| s.data()[x].index == 1));
                let proof = s.isolated_by(|s, a| s.s_a(a) == vec![a]);
                Value::Tuple(vec![Value::Elements(printed), Value::Elements(proof)])
            },
        },
        TheoremCheck {
            id: "P-planar-order",
            statement: "planar implies o(a) < 5 for all a",
            direction: Direction::Implies,
            hypothesis: always,
            lhs: |s| b(s.planar()),
            rhs: |s| b(s.data().iter().all(|d| d.order() < 5)),
        },
        TheoremCheck {
            id: "T-planarity",
            statement: "if order-four elements have index 1 or 2: planar iff o(a) <= 4 and no shared-kernel triple",
            direction: Direction::Iff,
            hypothesis: |s| {
                s.data()
                    .iter()
                    .all(|d| d.order() != 4 || d.index <= 2)
            },
            lhs: |s| b(s.planar()),
            rhs: |s| {
                b(s.data().iter().all(|d| d.order() <= 4) && s.shared_kernel_triple().is_none())
            },
        },
        TheoremCheck {
            id: "T-degree-independence",
            statement: "min degree = min o(x) over maximal generators - 1, and alpha = number of maximal monogenic subsemigroups",
            direction: Direction::Iff,
            hypothesis: always,
            lhs: |s| {
                let (alpha, _) = independence_number(s.graph());
                Value::Tuple(vec![int(s.classification().min_degree), int(alpha)])
            },
            rhs: |s| {
                let m = s
                    .maximal()
                    .iter()
                    .map(|m| m.elements.len())
                    .min()
                    .unwrap_or(1);
                Value::Tuple(vec![int(m - 1), int(s.maximal().len())])
            },
        },
    ]
}

/// Checks whose id is listed, in built-in order; `all` selects everything.
pub fn select_checks(ids: &[String]) -> Result<Vec<TheoremCheck>> {
    let all = builtin_checks();
    if ids.is_empty() || ids.iter().any(|i| i == "all") {
        return Ok(all);
    }
    for id in ids {
        if !all.iter().any(|c| c.id == id) {
            return Err(Error::InvalidParams(format!("unknown check {id:?}")));
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| ids.iter().any(|i| i == c.id))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub table: CayleyTable,
    pub lhs: Value,
    pub rhs: Value,
}

impl Counterexample {
    /// Re-evaluates both sides and confirms the stored disagreement.
    pub fn reverify(&self, check: &TheoremCheck) -> bool {
        let instance = Instance::new(self.table.clone());
        match check.evaluate(&instance) {
            Some((lhs, rhs)) => {
                lhs == self.lhs && rhs == self.rhs && !check.direction.agrees(&lhs, &rhs)
            }
            None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub statement: String,
    pub direction: Direction,
    pub corpus_size: usize,
    pub hypothesis_count: usize,
    pub agreements: usize,
    /// For tuple-valued checks, agreements per component.
    pub component_agreements: Vec<usize>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub checks: Vec<CheckReport>,
}

impl AuditReport {
    pub fn counterexample_count(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples.len()).sum()
    }

    pub fn check(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// One line per check, then any counterexamples.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.counterexamples.is_empty() {
                "PASS"
            } else {
                "FAIL"
            };
            let _ = write!(
                out,
                "{verdict} {:<26} corpus={} hypothesis={} agree={}",
                c.id, c.corpus_size, c.hypothesis_count, c.agreements
            );
            if !c.component_agreements.is_empty() {
                let parts: Vec<String> = c
                    .component_agreements
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let _ = write!(out, " parts=[{}]", parts.join(","));
            }
            let _ = writeln!(out, " counterexamples={}", c.counterexamples.len());
        }
        for c in &self.checks {
            for cx in &c.counterexamples {
                let _ = writeln!(
                    out,
                    "counterexample {}: table={:?} lhs={} rhs={}",
                    cx.check,
                    cx.table.rows(),
                    serde_json::to_string(&cx.lhs).unwrap_or_default(),
                    serde_json::to_string(&cx.rhs).unwrap_or_default()
                );
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} counterexamples",
            self.checks.len(),
            self.counterexample_count()
        );
        out
    }

    /// Line-delimited JSON, one record per disagreement.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            for cx in &c.counterexamples {
                out.push_str(&serde_json::to_string(cx).expect("records serialize"));
                out.push('\n');
            }
        }
        out
    }
}

enum Outcome {
    Skipped,
    Agreed(Option<Vec<bool>>),
    Disagreed(Value, Value, Option<Vec<bool>>),
}

fn evaluate_all(checks: &[TheoremCheck], table: &CayleyTable) -> Vec<Outcome> {
    let instance = Instance::new(table.clone());
    checks
        .iter()
        .map(|check| match check.evaluate(&instance) {
            None => Outcome::Skipped,
            Some((lhs, rhs)) => {
                let parts = check.direction.component_agreement(&lhs, &rhs);
                if check.direction.agrees(&lhs, &rhs) {
                    Outcome::Agreed(parts)
                } else {
                    Outcome::Disagreed(lhs, rhs, parts)
                }
            }
        })
        .collect()
}

/// Evaluates every check on every corpus member. Instances are processed
/// in parallel; the report follows check order and corpus order.
pub fn run_audit(checks: &[TheoremCheck], corpus: &[CayleyTable]) -> AuditReport {
    let outcomes: Vec<Vec<Outcome>> = corpus.par_iter().map(|t| evaluate_all(checks, t)).collect();
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|c| CheckReport {
            id: c.id.to_string(),
            statement: c.statement.to_string(),
            direction: c.direction,
            corpus_size: corpus.len(),
            hypothesis_count: 0,
            agreements: 0,
            component_agreements: Vec::new(),
            counterexamples: Vec::new(),
        })
        .collect();
    for (table, per_check) in corpus.iter().zip(outcomes) {
        for (report, outcome) in reports.iter_mut().zip(per_check) {
            let parts = match outcome {
                Outcome::Skipped => continue,
                Outcome::Agreed(parts) => {
                    report.agreements += 1;
                    parts
                }
                Outcome::Disagreed(lhs, rhs, parts) => {
                    let stored = if table.order() <= MAX_CANONICAL_ORDER {
                        canonical_form(table, DedupMode::UpToIsoAndAnti)
                            .unwrap_or_else(|_| table.clone())
                    } else {
                        table.clone()
                    };
                    // Canonical relabeling can permute element-valued sides,
                    // so the stored values are recomputed on the stored table.
                    let (lhs, rhs) = if stored == *table {
                        (lhs, rhs)
                    } else {
                        let check = checks.iter().find(|c| c.id == report.id).expect("check");
                        check
                            .evaluate(&Instance::new(stored.clone()))
                            .unwrap_or((lhs, rhs))
                    };
                    report.counterexamples.push(Counterexample {
                        check: report.id.clone(),
                        table: stored,
                        lhs,
                        rhs,
                    });
                    parts
                }
            };
            report.hypothesis_count += 1;
            if let Some(parts) = parts {
                if report.component_agreements.len() < parts.len() {
                    report.component_agreements.resize(parts.len(), 0);
                }
                for (slot, ok) in report.component_agreements.iter_mut().zip(parts) {
                    *slot += usize::from(ok);
                }
            }
        }
    }
    AuditReport { checks: reports }
}

/// Element labels of the shared-kernel example, in index order.
pub const EXAMPLE_315_LABELS: [&str; 6] = ["a", "x", "y", "z", "b", "c"];

/// A six-element semigroup `{a, x, y, z, b, c}` in which `a`, `b` and `c`
/// each generate a copy of `M(2, 3)` on the shared kernel `{x, y, z}`
/// (`g^2 = x`, `g^3 = y`, `g^4 = z`, `g^5 = x`).
///
/// Products inside each `<g>` are fixed; the six products of distinct
/// generators are left to an associative completion search, which takes
/// the lexicographically least solution.
pub fn reconstruct_example_315() -> Result<CayleyTable> {
    const A: usize = 0;
    const B: usize = 4;
    const C: usize = 5;
    let n = 6;
    // element -> exponent of the generator it is a power of
    let exponent_of = |e: usize| match e {
        A | B | C => 1,
        1 => 2,
        2 => 3,
        3 => 4,
        _ => unreachable!(),
    };
    let power = |k: usize| {
        let k = if k < 5 { k } else { 2 + (k - 2) % 3 };
        [0, A, 1, 2, 3][k]
    };
    let mut partial = vec![None; n * n];
    for g in [A, B, C] {
        for u in [g, 1, 2, 3] {
            for v in [g, 1, 2, 3] {
                let k = exponent_of(u) + exponent_of(v);
                // k >= 2, so the power lies in the shared kernel
                partial[u * n + v] = Some(power(k));
            }
        }
    }
    let table = complete_partial_table(n, &partial)?.ok_or_else(|| {
        Error::ConstructionFailed("no associative completion of the shared-kernel table".into())
    })?;
    let labels = EXAMPLE_315_LABELS.iter().map(|s| s.to_string()).collect();
    let table = table.with_labels(labels)?;
    for g in [A, B, C] {
        let d = crate::semigroup::monogenic_data(&table, g)?;
        if d.index != 2 || d.period != 3 || d.powers != vec![g, 1, 2, 3] {
            return Err(Error::ConstructionFailed(format!(
                "generator {} has powers {:?}",
                EXAMPLE_315_LABELS[g], d.powers
            )));
        }
    }
    Ok(table)
}
