//! The enhanced power graph of a semigroup and its sibling graphs.

use crate::graph::SimpleGraph;
use crate::semigroup::{all_monogenic_data, CayleyTable, Element, MonogenicData};

/// Which graph on the elements of a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `x ~ y` iff both lie in some `<z>`.
    EnhancedPower,
    /// `x ~ y` iff one is a power of the other.
    Power,
    /// `x ~ y` iff `<{x, y}>` is monogenic.
    Cyclic,
    /// `x ~ y` iff `xy = yx`.
    Commuting,
}

impl GraphKind {
    pub fn build(self, s: &CayleyTable) -> SimpleGraph {
        match self {
            GraphKind::EnhancedPower => enhanced_power_graph(s),
            GraphKind::Power => power_graph(s),
            GraphKind::Cyclic => cyclic_graph(s),
            GraphKind::Commuting => commuting_graph(s),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            GraphKind::EnhancedPower => "epg",
            GraphKind::Power => "power",
            GraphKind::Cyclic => "cyclic",
            GraphKind::Commuting => "commuting",
        }
    }
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "epg" | "enhanced" | "enhanced_power" => Ok(GraphKind::EnhancedPower),
            "power" => Ok(GraphKind::Power),
            "cyclic" => Ok(GraphKind::Cyclic),
            "commuting" => Ok(GraphKind::Commuting),
            other => Err(format!("unknown graph kind {other:?}")),
        }
    }
}

fn labelled_graph(s: &CayleyTable) -> SimpleGraph {
    let g = SimpleGraph::new(s.order());
    match s.labels() {
        Some(labels) => g.with_labels(labels.to_vec()),
        None => g,
    }
}

/// Inserts every pair inside each power list.
pub fn enhanced_power_graph(s: &CayleyTable) -> SimpleGraph {
    enhanced_power_graph_from(s, &all_monogenic_data(s))
}

pub(crate) fn enhanced_power_graph_from(s: &CayleyTable, data: &[MonogenicData]) -> SimpleGraph {
    let mut g = labelled_graph(s);
    for d in data {
        for (i, &x) in d.powers.iter().enumerate() {
            for &y in &d.powers[i + 1..] {
                g.add_edge(x, y);
            }
        }
    }
    g
}

pub fn power_graph(s: &CayleyTable) -> SimpleGraph {
    let mut g = labelled_graph(s);
    for d in all_monogenic_data(s) {
        for &p in &d.powers {
            if p != d.generator {
                g.add_edge(d.generator, p);
            }
        }
    }
    g
}

pub fn commuting_graph(s: &CayleyTable) -> SimpleGraph {
    let mut g = labelled_graph(s);
    for x in s.elements() {
        for y in x + 1..s.order() {
            if s.mul(x, y) == s.mul(y, x) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

pub fn cyclic_graph(s: &CayleyTable) -> SimpleGraph {
    let data = all_monogenic_data(s);
    let mut g = labelled_graph(s);
    for x in s.elements() {
        for y in x + 1..s.order() {
            let generated = s.generated_by(&[x, y]);
            if generated
                .iter()
                .any(|&c| data[c].order() == generated.len())
            {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// `C(x)`: the union of `{y : x^m = y^n}` over `1 <= m <= o(x)` and
/// `1 <= n <= max o(y)`.
pub fn component_of(s: &CayleyTable, x: Element) -> Vec<Element> {
    component_of_in(&all_monogenic_data(s), x)
}

pub(crate) fn component_of_in(data: &[MonogenicData], x: Element) -> Vec<Element> {
    let dx = &data[x];
    let max_order = data.iter().map(MonogenicData::order).max().unwrap_or(1);
    (0..data.len())
        .filter(|&y| {
            (1..=dx.order()).any(|m| {
                let xm = dx.power(m);
                (1..=max_order).any(|n| data[y].power(n) == xm)
            })
        })
        .collect()
}
