//! Green's relations via principal ideals in `S^1`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::semigroup::{adjoin_identity, CayleyTable, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GreenRelation {
    L,
    R,
    J,
    H,
    D,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 5] = [
        GreenRelation::L,
        GreenRelation::R,
        GreenRelation::J,
        GreenRelation::H,
        GreenRelation::D,
    ];
}

/// Class labels for the five relations. Labels are assigned in order of
/// first appearance, so element 0 is always in class 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenPartition {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub j: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
}

impl GreenPartition {
    pub fn labels(&self, rel: GreenRelation) -> &[usize] {
        match rel {
            GreenRelation::L => &self.l,
            GreenRelation::R => &self.r,
            GreenRelation::J => &self.j,
            GreenRelation::H => &self.h,
            GreenRelation::D => &self.d,
        }
    }

    pub fn class_count(&self, rel: GreenRelation) -> usize {
        self.labels(rel).iter().max().map_or(0, |m| m + 1)
    }

    /// Member lists of every class, in label order.
    pub fn classes(&self, rel: GreenRelation) -> Vec<Vec<Element>> {
        let labels = self.labels(rel);
        let mut out = vec![Vec::new(); self.class_count(rel)];
        for (x, &c) in labels.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn class_of(&self, rel: GreenRelation, x: Element) -> Vec<Element> {
        let labels = self.labels(rel);
        (0..labels.len())
            .filter(|&y| labels[y] == labels[x])
            .collect()
    }

    pub fn related(&self, rel: GreenRelation, x: Element, y: Element) -> bool {
        let labels = self.labels(rel);
        labels[x] == labels[y]
    }
}

/// Relabels arbitrary keys to dense ids in order of first appearance.
fn dense_labels<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Vec<usize> {
    let mut seen: HashMap<K, usize> = HashMap::new();
    keys.into_iter()
        .map(|k| {
            let next = seen.len();
            *seen.entry(k).or_insert(next)
        })
        .collect()
}

/// `S` itself when it has an identity, `S^1` otherwise.
pub(crate) fn monoid_closure(s: &CayleyTable) -> CayleyTable {
    if s.identity().is_some() {
        s.clone()
    } else {
        adjoin_identity(s)
    }
}

fn ideal(mut members: Vec<bool>) -> Vec<u64> {
    let mut words = vec![0u64; members.len().div_ceil(64)];
    for (i, m) in members.drain(..).enumerate() {
        if m {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

pub fn green_relations(s: &CayleyTable) -> GreenPartition {
    let n = s.order();
    let s1 = monoid_closure(s);
    let ext = s1.elements();

    let left_ideal = |x: Element| {
        let mut m = vec![false; n];
        for u in ext.clone() {
            m[s1.mul(u, x)] = true;
        }
        ideal(m)
    };
    let right_ideal = |x: Element| {
        let mut m = vec![false; n];
        for u in ext.clone() {
            m[s1.mul(x, u)] = true;
        }
        ideal(m)
    };
    let two_sided = |x: Element| {
        let mut m = vec![false; n];
        for u in ext.clone() {
            let ux = s1.mul(u, x);
            for v in ext.clone() {
                m[s1.mul(ux, v)] = true;
            }
        }
        ideal(m)
    };

    let l = dense_labels(s.elements().map(left_ideal));
    let r = dense_labels(s.elements().map(right_ideal));
    let j = dense_labels(s.elements().map(two_sided));
    let h = dense_labels(s.elements().map(|x| (l[x], r[x])));

    // x D y iff x L z and z R y for some z: the D-class of x is the union of
    // the R-classes met by the L-class of x.
    let d_key = |x: Element| {
        let mut r_classes: Vec<usize> = s
            .elements()
            .filter(|&z| l[z] == l[x])
            .map(|z| r[z])
            .collect();
        r_classes.sort_unstable();
        r_classes.dedup();
        r_classes
    };
    let d = dense_labels(s.elements().map(d_key));

    GreenPartition { l, r, j, h, d }
}

/// Whether the H-class of `x`, checked directly, is a subgroup.
pub fn h_class_is_group(s: &CayleyTable, x: Element) -> bool {
    let green = green_relations(s);
    h_class_is_group_in(s, &green, x)
}

pub(crate) fn h_class_is_group_in(s: &CayleyTable, green: &GreenPartition, x: Element) -> bool {
    let class = green.class_of(GreenRelation::H, x);
    is_subgroup(s, &class)
}

/// Closure, a two-sided identity inside the set, and inverses.
pub(crate) fn is_subgroup(s: &CayleyTable, set: &[Element]) -> bool {
    if set.is_empty() || !s.is_closed(set) {
        return false;
    }
    let Some(&e) = set
        .iter()
        .find(|&&e| set.iter().all(|&a| s.mul(e, a) == a && s.mul(a, e) == a))
    else {
        return false;
    };
    set.iter()
        .all(|&a| set.iter().any(|&b| s.mul(a, b) == e && s.mul(b, a) == e))
}

/// The first element whose H-class is not a group, if any.
pub fn non_regular_witness(s: &CayleyTable) -> Option<Element> {
    let green = green_relations(s);
    let classes = green.classes(GreenRelation::H);
    let mut witness: Option<Element> = None;
    for class in classes {
        if !is_subgroup(s, &class) {
            witness = Some(witness.map_or(class[0], |w| w.min(class[0])));
        }
    }
    witness
}

pub fn is_completely_regular(s: &CayleyTable) -> bool {
    non_regular_witness(s).is_none()
}
