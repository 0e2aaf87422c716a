//! Standard semigroup families and table completion.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::backtrack::{PartialTable, MAX_SEARCH_ORDER};
use crate::error::{Error, Result};

use super::table::{CayleyTable, Element};

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidParams(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn build(n: usize, product: impl Fn(usize, usize) -> usize) -> CayleyTable {
    let cells = (0..n * n).map(|p| product(p / n, p % n)).collect();
    CayleyTable::from_cells_unchecked(n, cells)
}

fn labelled(table: CayleyTable, labels: Vec<String>) -> CayleyTable {
    table
        .with_labels(labels)
        .expect("constructor label count matches order")
}

/// `M(m, r) = <a : a^m = a^(m+r)>`. Element `i` is the power `a^(i+1)`.
pub fn monogenic(index: usize, period: usize) -> Result<CayleyTable> {
    positive("index", index)?;
    positive("period", period)?;
    let n = index + period - 1;
    let reduce = |e: usize| {
        if e < index + period {
            e
        } else {
            index + (e - index) % period
        }
    };
    let table = build(n, |i, j| reduce(i + j + 2) - 1);
    let labels = (1..=n)
        .map(|k| {
            if k == 1 {
                "a".to_string()
            } else {
                format!("a^{k}")
            }
        })
        .collect();
    Ok(labelled(table, labels))
}

/// `Z_n` under addition; element 0 is the identity.
pub fn cyclic_group(n: usize) -> Result<CayleyTable> {
    positive("n", n)?;
    let table = build(n, |i, j| (i + j) % n);
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    Ok(labelled(table, labels))
}

/// `(Z_2)^k` realised as bit vectors under xor.
pub fn elementary_abelian_2(k: usize) -> Result<CayleyTable> {
    if k > 12 {
        return Err(Error::InvalidParams(format!("rank {k} is too large")));
    }
    Ok(build(1 << k, |i, j| i ^ j))
}

/// `x y = x`.
pub fn left_zero(n: usize) -> Result<CayleyTable> {
    positive("n", n)?;
    Ok(build(n, |i, _| i))
}

/// `x y = y`.
pub fn right_zero(n: usize) -> Result<CayleyTable> {
    positive("n", n)?;
    Ok(build(n, |_, j| j))
}

/// Every product equals element 0.
pub fn zero_semigroup(n: usize) -> Result<CayleyTable> {
    positive("n", n)?;
    Ok(build(n, |_, _| 0))
}

/// `S x T`, with pair `(s, t)` stored at index `s * |T| + t`.
pub fn direct_product(s: &CayleyTable, t: &CayleyTable) -> CayleyTable {
    let m = t.order();
    let n = s.order() * m;
    let table = build(n, |a, b| s.mul(a / m, b / m) * m + t.mul(a % m, b % m));
    let labels = (0..n)
        .map(|p| format!("({},{})", s.label(p / m), t.label(p % m)))
        .collect();
    labelled(table, labels)
}

/// `S^1`: a new element `n` acting as a two-sided identity.
pub fn adjoin_identity(s: &CayleyTable) -> CayleyTable {
    let n = s.order();
    let one = n;
    let table = build(n + 1, |a, b| {
        if a == one {
            b
        } else if b == one {
            a
        } else {
            s.mul(a, b)
        }
    });
    let mut labels: Vec<String> = s.elements().map(|a| s.label(a)).collect();
    labels.push("1".to_string());
    labelled(table, labels)
}

/// Fills the unset cells of `partial` (row-major, `None` = free) with the
/// lexicographically least associative completion, if one exists.
pub fn complete_partial_table(
    order: usize,
    partial: &[Option<Element>],
) -> Result<Option<CayleyTable>> {
    if order == 0 || partial.len() != order * order {
        return Err(Error::InvalidParams(format!(
            "partial table needs {} cells",
            order * order
        )));
    }
    if order > MAX_SEARCH_ORDER {
        return Err(Error::OrderCapExceeded {
            order,
            cap: MAX_SEARCH_ORDER,
        });
    }
    let mut table = PartialTable::new(order);
    let mut free = Vec::new();
    for (pos, cell) in partial.iter().enumerate() {
        match *cell {
            Some(v) if v >= order => {
                return Err(Error::NotClosed {
                    row: pos / order,
                    col: pos % order,
                    value: v,
                    order,
                })
            }
            Some(v) => {
                if !table.assign(pos / order, pos % order, v as u8) {
                    return Ok(None);
                }
            }
            None => free.push(pos),
        }
    }
    let mut found = None;
    let _ = table.complete(&free, &mut |t| {
        found = Some(t.cells().iter().map(|&c| c as usize).collect::<Vec<_>>());
        ControlFlow::Break(())
    });
    Ok(found.map(|cells| CayleyTable::from_cells_unchecked(order, cells)))
}

/// A textual recipe for a table, e.g. `monogenic:2,3` or
/// `direct_product(left_zero:2,cyclic_group:2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Monogenic {
        index: usize,
        period: usize,
    },
    CyclicGroup(usize),
    ElementaryAbelian2(usize),
    LeftZero(usize),
    RightZero(usize),
    ZeroSemigroup(usize),
    DirectProduct(Box<Generator>, Box<Generator>),
    AdjoinIdentity(Box<Generator>),
    /// The six-element semigroup with three order-four generators sharing a
    /// cyclic kernel.
    SharedKernel,
}

impl Generator {
    pub fn build(&self) -> Result<CayleyTable> {
        match self {
            Generator::Monogenic { index, period } => monogenic(*index, *period),
            Generator::CyclicGroup(n) => cyclic_group(*n),
            Generator::ElementaryAbelian2(k) => elementary_abelian_2(*k),
            Generator::LeftZero(n) => left_zero(*n),
            Generator::RightZero(n) => right_zero(*n),
            Generator::ZeroSemigroup(n) => zero_semigroup(*n),
            Generator::DirectProduct(a, b) => Ok(direct_product(&a.build()?, &b.build()?)),
            Generator::AdjoinIdentity(a) => Ok(adjoin_identity(&a.build()?)),
            Generator::SharedKernel => crate::audit::reconstruct_example_315(),
        }
    }
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn parse_params(kind: &str, params: &str, want: usize) -> Result<Vec<usize>> {
    let values: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidParams(format!("{kind}: {e}")))?;
    if values.len() != want {
        return Err(Error::InvalidParams(format!(
            "{kind} takes {want} parameter(s), got {}",
            values.len()
        )));
    }
    Ok(values)
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s
            .strip_prefix("direct_product(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let (a, b) = split_top_level(inner)
                .ok_or_else(|| Error::InvalidParams("direct_product needs two arguments".into()))?;
            return Ok(Generator::DirectProduct(
                Box::new(a.parse()?),
                Box::new(b.parse()?),
            ));
        }
        if let Some(inner) = s
            .strip_prefix("adjoin_identity(")
            .and_then(|r| r.strip_suffix(')'))
        {
            return Ok(Generator::AdjoinIdentity(Box::new(inner.parse()?)));
        }
        if s == "example_315" || s == "shared_kernel" {
            return Ok(Generator::SharedKernel);
        }
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParams(format!("expected kind:params, got {s:?}")))?;
        let one = |name| parse_params(name, params, 1).map(|v| v[0]);
        match kind.trim() {
            "monogenic" => {
                let v = parse_params(kind, params, 2)?;
                Ok(Generator::Monogenic {
                    index: v[0],
                    period: v[1],
                })
            }
            "cyclic_group" | "cyclic" => Ok(Generator::CyclicGroup(one(kind)?)),
            "elementary_abelian_2" => Ok(Generator::ElementaryAbelian2(one(kind)?)),
            "left_zero" => Ok(Generator::LeftZero(one(kind)?)),
            "right_zero" => Ok(Generator::RightZero(one(kind)?)),
            "zero_semigroup" | "zero" => Ok(Generator::ZeroSemigroup(one(kind)?)),
            other => Err(Error::InvalidParams(format!(
                "unknown constructor {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Monogenic { index, period } => write!(f, "monogenic:{index},{period}"),
            Generator::CyclicGroup(n) => write!(f, "cyclic_group:{n}"),
            Generator::ElementaryAbelian2(k) => write!(f, "elementary_abelian_2:{k}"),
            Generator::LeftZero(n) => write!(f, "left_zero:{n}"),
            Generator::RightZero(n) => write!(f, "right_zero:{n}"),
            Generator::ZeroSemigroup(n) => write!(f, "zero_semigroup:{n}"),
            Generator::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
            Generator::AdjoinIdentity(a) => write!(f, "adjoin_identity({a})"),
            Generator::SharedKernel => write!(f, "shared_kernel"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_are_associative() {
        let tables = [
            monogenic(3, 4).unwrap(),
            cyclic_group(7).unwrap(),
            elementary_abelian_2(3).unwrap(),
            left_zero(4).unwrap(),
            right_zero(4).unwrap(),
            zero_semigroup(4).unwrap(),
            direct_product(&left_zero(2).unwrap(), &cyclic_group(3).unwrap()),
            adjoin_identity(&left_zero(2).unwrap()),
        ];
        for t in &tables {
            assert_eq!(t.associativity_failure(), None, "{t:?}");
        }
    }

    #[test]
    fn monogenic_one_four_is_cyclic_of_order_four() {
        let t = monogenic(1, 4).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.identity(), Some(3));
        assert!(t.elements().all(|a| t.elements().any(|b| t.mul(a, b) == 3)));
    }

    #[test]
    fn monogenic_two_three_relation() {
        let t = monogenic(2, 3).unwrap();
        assert_eq!(t.order(), 4);
        // a^5 = a^2
        assert_eq!(t.pow(0, 5), t.pow(0, 2));
        assert_eq!(t.pow(0, 4), 3);
        assert_eq!(t.label(3), "a^4");
    }

    #[test]
    fn adjoined_identity_row_and_column() {
        let t = adjoin_identity(&left_zero(2).unwrap());
        assert_eq!(t.order(), 3);
        assert_eq!(t.row(2), &[0, 1, 2]);
        assert!(t.elements().all(|a| t.mul(a, 2) == a));
        assert_eq!(t.identity(), Some(2));
    }

    #[test]
    fn zero_sizes_are_rejected() {
        assert!(matches!(monogenic(0, 2), Err(Error::InvalidParams(_))));
        assert!(matches!(monogenic(2, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(cyclic_group(0), Err(Error::InvalidParams(_))));
        assert!(matches!(left_zero(0), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn generator_strings() {
        for s in [
            "monogenic:2,3",
            "cyclic_group:6",
            "elementary_abelian_2:2",
            "left_zero:3",
            "right_zero:2",
            "zero_semigroup:3",
            "direct_product(left_zero:2,cyclic_group:2)",
            "adjoin_identity(direct_product(left_zero:2,right_zero:2))",
            "shared_kernel",
        ] {
            let g: Generator = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
            assert!(g.build().is_ok(), "{s}");
        }
        assert!("monogenic:2".parse::<Generator>().is_err());
        assert!("bogus:1".parse::<Generator>().is_err());
        assert!("direct_product(left_zero:2)".parse::<Generator>().is_err());
    }

    #[test]
    fn completion_of_an_empty_table_is_the_least_semigroup() {
        let t = complete_partial_table(2, &[None; 4]).unwrap().unwrap();
        assert_eq!(t.cells(), &[0, 0, 0, 0]);
    }

    #[test]
    fn completion_detects_impossible_constraints() {
        // (01)1 = 1*1 = 0 but 0(11) = 0*0 = 1.
        let partial = [Some(1), Some(1), Some(1), Some(0)];
        assert_eq!(complete_partial_table(2, &partial).unwrap(), None);
        let fixed = [Some(1), None, None, Some(1)];
        let t = complete_partial_table(2, &fixed).unwrap().unwrap();
        assert_eq!(t.associativity_failure(), None);
    }
}
