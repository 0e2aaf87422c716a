use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Elements are dense indices `0..n`.
pub type Element = usize;

/// A finite semigroup given by its multiplication table.
///
/// Equality, ordering and hashing look at the order and the products only.
/// Labels are presentation data and never take part in comparisons. The
/// ordering is row-major lexicographic on the table, which is the order used
/// for canonical forms.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct CayleyTable {
    order: usize,
    cells: Vec<Element>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    table: Vec<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawTable> for CayleyTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        let table = validate(&raw.table)?;
        match raw.labels {
            Some(labels) => table.with_labels(labels),
            None => Ok(table),
        }
    }
}

impl From<CayleyTable> for RawTable {
    fn from(t: CayleyTable) -> Self {
        RawTable {
            table: t.rows(),
            labels: t.labels,
        }
    }
}

/// Checks closure and associativity of a square table.
///
/// The associativity scan is exhaustive and reports the lexicographically
/// first failing triple.
pub fn validate(raw: &[Vec<Element>]) -> Result<CayleyTable> {
    let n = raw.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut cells = Vec::with_capacity(n * n);
    for (row, entries) in raw.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NotSquare {
                row,
                len: entries.len(),
                expected: n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(Error::NotClosed {
                    row,
                    col,
                    value,
                    order: n,
                });
            }
        }
        cells.extend_from_slice(entries);
    }
    CayleyTable::from_cells(n, cells)
}

impl CayleyTable {
    /// Builds a table from row-major cells, checking closure and associativity.
    pub fn from_cells(order: usize, cells: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Empty);
        }
        if cells.len() != order * order {
            return Err(Error::NotSquare {
                row: 0,
                len: cells.len(),
                expected: order * order,
            });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= order) {
            return Err(Error::NotClosed {
                row: pos / order,
                col: pos % order,
                value: cells[pos],
                order,
            });
        }
        let table = CayleyTable {
            order,
            cells,
            labels: None,
        };
        if let Some((i, j, k)) = table.associativity_failure() {
            return Err(Error::NotAssociative { i, j, k });
        }
        Ok(table)
    }

    /// Wraps cells that are already known to form a semigroup.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<Element>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        CayleyTable {
            order,
            cells,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::LabelCount {
                got: labels.len(),
                expected: self.order,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.cells[a * self.order + b]
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: Element, k: usize) -> Element {
        assert!(k >= 1, "powers start at 1");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    pub fn row(&self, a: Element) -> &[Element] {
        &self.cells[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.cells.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The display label of `a`, falling back to its index.
    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn check_element(&self, a: Element) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.order,
            })
        }
    }

    pub fn associativity_failure(&self) -> Option<(Element, Element, Element)> {
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.mul(i, j);
                for k in self.elements() {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<Element> {
        self.elements().find(|&e| {
            self.elements()
                .all(|a| self.mul(e, a) == a && self.mul(a, e) == a)
        })
    }

    /// The opposite semigroup, with product `a * b = b a`.
    pub fn transpose(&self) -> CayleyTable {
        let n = self.order;
        let cells = (0..n * n)
            .map(|p| self.cells[(p % n) * n + p / n])
            .collect();
        CayleyTable {
            order: n,
            cells,
            labels: self.labels.clone(),
        }
    }

    /// The isomorphic copy in which element `a` is renamed `perm[a]`.
    pub fn relabel(&self, perm: &[Element]) -> CayleyTable {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut out = vec![String::new(); n];
            for a in 0..n {
                out[perm[a]] = labels[a].clone();
            }
            out
        });
        CayleyTable {
            order: n,
            cells,
            labels,
        }
    }

    /// The subsemigroup generated by `gens`, as a sorted element list.
    pub fn generated_by(&self, gens: &[Element]) -> Vec<Element> {
        let mut member = vec![false; self.order];
        let mut found: Vec<Element> = Vec::new();
        for &g in gens {
            if !member[g] {
                member[g] = true;
                found.push(g);
            }
        }
        let mut next = 0;
        while next < found.len() {
            let x = found[next];
            next += 1;
            for &g in gens {
                for p in [self.mul(x, g), self.mul(g, x)] {
                    if !member[p] {
                        member[p] = true;
                        found.push(p);
                    }
                }
            }
        }
        found.sort_unstable();
        found
    }

    pub fn is_closed(&self, set: &[Element]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        set.iter()
            .all(|&x| set.iter().all(|&y| member[self.mul(x, y)]))
    }
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for CayleyTable {}

impl Hash for CayleyTable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.cells.hash(state);
    }
}

impl PartialOrd for CayleyTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CayleyTable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.cells.cmp(&other.cells))
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyTable")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.elements() {
            let row: Vec<String> = self.row(a).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
