//! Exhaustive enumeration of semigroups of small order.
//!
//! Tables are filled row-major with associativity rechecked on each cell.
//! In the deduplicating modes a complete table is kept only when it is the
//! lexicographically least member of its orbit, so every isomorphism class
//! (optionally merged with its opposite) appears exactly once.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::backtrack::PartialTable;
use crate::error::{Error, Result};
use crate::semigroup::CayleyTable;

pub const MAX_ENUMERATION_ORDER: usize = 6;
pub const MAX_CANONICAL_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DedupMode {
    /// Every table on `{0, .., n-1}`.
    Labeled,
    /// One table per isomorphism class.
    UpToIso,
    /// One table per class of isomorphism or anti-isomorphism.
    UpToIsoAndAnti,
}

impl FromStr for DedupMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "labeled" | "labelled" | "none" => Ok(DedupMode::Labeled),
            "iso" | "up_to_iso" => Ok(DedupMode::UpToIso),
            "iso-anti" | "iso_anti" | "up_to_iso_and_anti" => Ok(DedupMode::UpToIsoAndAnti),
            other => Err(format!("unknown dedup mode {other:?}")),
        }
    }
}

impl fmt::Display for DedupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DedupMode::Labeled => "labeled",
            DedupMode::UpToIso => "iso",
            DedupMode::UpToIsoAndAnti => "iso-anti",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub order: usize,
    pub dedup: DedupMode,
    pub parallel_width: usize,
}

impl EnumerationConfig {
    pub fn new(order: usize, dedup: DedupMode) -> Self {
        EnumerationConfig {
            order,
            dedup,
            parallel_width: 1,
        }
    }

    pub fn with_parallel_width(mut self, width: usize) -> Self {
        self.parallel_width = width;
        self
    }

    fn check(&self) -> Result<()> {
        if self.order == 0 || self.parallel_width == 0 {
            return Err(Error::InvalidParams(
                "order and parallel width must be at least 1".into(),
            ));
        }
        if self.order > MAX_ENUMERATION_ORDER {
            return Err(Error::OrderCapExceeded {
                order: self.order,
                cap: MAX_ENUMERATION_ORDER,
            });
        }
        Ok(())
    }
}

/// A permutation and its inverse, as bytes.
struct Relabeling {
    forward: Vec<u8>,
    inverse: Vec<u8>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn relabelings(n: usize) -> Vec<Relabeling> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut inverse = vec![0u8; n];
            for (a, &b) in p.iter().enumerate() {
                inverse[b] = a as u8;
            }
            Relabeling {
                forward: p.into_iter().map(|x| x as u8).collect(),
                inverse,
            }
        })
        .collect()
}

/// Whether no relabeling (or relabeled opposite) of `cells` is smaller.
fn is_canonical(cells: &[u8], n: usize, perms: &[Relabeling], anti: bool) -> bool {
    let beats = |perm: &Relabeling, transpose: bool| {
        for p in 0..n {
            for q in 0..n {
                let (a, b) = (perm.inverse[p] as usize, perm.inverse[q] as usize);
                let src = if transpose {
                    cells[b * n + a]
                } else {
                    cells[a * n + b]
                };
                let image = perm.forward[src as usize];
                let own = cells[p * n + q];
                if image != own {
                    return image < own;
                }
            }
        }
        false
    };
    perms
        .iter()
        .all(|perm| !beats(perm, false) && !(anti && beats(perm, true)))
}

/// The lexicographically least table in the orbit of `s` under relabeling,
/// and under relabeling of the opposite table as well in anti mode. Labels
/// are dropped.
pub fn canonical_form(s: &CayleyTable, mode: DedupMode) -> Result<CayleyTable> {
    let n = s.order();
    if mode == DedupMode::Labeled {
        return Ok(s.clone().without_labels());
    }
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderCapExceeded {
            order: n,
            cap: MAX_CANONICAL_ORDER,
        });
    }
    let base = s.clone().without_labels();
    let mut sources = vec![base.clone()];
    if mode == DedupMode::UpToIsoAndAnti {
        sources.push(base.transpose());
    }
    let best = permutations(n)
        .iter()
        .flat_map(|p| sources.iter().map(move |t| t.relabel(p)))
        .min()
        .expect("at least the identity relabeling");
    Ok(best)
}

/// All first rows that survive the associativity checks, in lex order.
fn first_rows(n: usize) -> Vec<PartialTable> {
    let mut prefixes = Vec::new();
    let mut table = PartialTable::new(n);
    let free: Vec<usize> = (0..n).collect();
    let _ = table.complete(&free, &mut |t| {
        prefixes.push(t.clone());
        ControlFlow::Continue(())
    });
    prefixes
}

fn run<T, F>(cfg: &EnumerationConfig, per_leaf: F) -> Result<Vec<Vec<T>>>
where
    T: Send,
    F: Fn(&[u8]) -> Option<T> + Sync,
{
    cfg.check()?;
    let n = cfg.order;
    let perms = relabelings(n);
    let anti = cfg.dedup == DedupMode::UpToIsoAndAnti;
    let dedup = cfg.dedup != DedupMode::Labeled;
    let rest: Vec<usize> = (n..n * n).collect();
    let prefixes = first_rows(n);
    let explore = |prefix: &PartialTable| {
        let mut table = prefix.clone();
        let mut found = Vec::new();
        let _ = table.complete(&rest, &mut |t| {
            if !dedup || is_canonical(t.cells(), t.order(), &perms, anti) {
                if let Some(item) = per_leaf(t.cells()) {
                    found.push(item);
                }
            }
            ControlFlow::Continue(())
        });
        found
    };
    if cfg.parallel_width == 1 {
        return Ok(prefixes.iter().map(explore).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallel_width)
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    Ok(pool.install(|| prefixes.par_iter().map(explore).collect()))
}

/// Every semigroup of the configured order, in lexicographic table order.
pub fn enumerate_semigroups(cfg: &EnumerationConfig) -> Result<Vec<CayleyTable>> {
    let n = cfg.order;
    let chunks = run(cfg, |cells| {
        Some(CayleyTable::from_cells_unchecked(
            n,
            cells.iter().map(|&c| c as usize).collect(),
        ))
    })?;
    let out: Vec<CayleyTable> = chunks.into_iter().flatten().collect();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// The number of tables [`enumerate_semigroups`] would return, without
/// materialising them.
pub fn count_semigroups(cfg: &EnumerationConfig) -> Result<u64> {
    let chunks = run(cfg, |_| Some(()))?;
    Ok(chunks.iter().map(|c| c.len() as u64).sum())
}

/// All semigroups of orders `1..=max_order` under `dedup`, by order.
pub fn corpus_up_to(max_order: usize, dedup: DedupMode, width: usize) -> Result<Vec<CayleyTable>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let cfg = EnumerationConfig::new(n, dedup).with_parallel_width(width);
        out.extend(enumerate_semigroups(&cfg)?);
    }
    Ok(out)
}
