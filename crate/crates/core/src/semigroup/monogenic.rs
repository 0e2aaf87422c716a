//! Index, period, kernel and idempotent of each monogenic subsemigroup,
//! and the element-wide invariants built from them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::table::{CayleyTable, Element};

/// The monogenic subsemigroup `<a> = {a, a^2, ..., a^(m+r-1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonogenicData {
    pub generator: Element,
    /// `m`: the least exponent whose power recurs.
    pub index: usize,
    /// `r`: the least gap with `a^(m+r) = a^m`.
    pub period: usize,
    /// `powers[k]` is `a^(k+1)`; all distinct.
    pub powers: Vec<Element>,
    /// The exponent `m + g`, `0 <= g < r`, divisible by `r`.
    pub idempotent_power: usize,
    /// `K_a = {a^m, ..., a^(m+r-1)}` in power order.
    pub kernel: Vec<Element>,
}

impl MonogenicData {
    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn idempotent(&self) -> Element {
        self.powers[self.idempotent_power - 1]
    }

    /// `a^k` for any `k >= 1`, reduced through the period.
    pub fn power(&self, k: usize) -> Element {
        assert!(k >= 1);
        let m = self.index;
        let reduced = if k < m + self.period {
            k
        } else {
            m + (k - m) % self.period
        };
        self.powers[reduced - 1]
    }

    pub fn contains(&self, x: Element) -> bool {
        self.powers.contains(&x)
    }

    /// `<a>` as a sorted element list.
    pub fn element_set(&self) -> Vec<Element> {
        let mut set = self.powers.clone();
        set.sort_unstable();
        set
    }
}

/// Iterates `a, a^2, ...` until the first repeat.
pub fn monogenic_data(s: &CayleyTable, a: Element) -> Result<MonogenicData> {
    s.check_element(a)?;
    Ok(monogenic_data_unchecked(s, a))
}

pub(crate) fn monogenic_data_unchecked(s: &CayleyTable, a: Element) -> MonogenicData {
    let mut first_seen = vec![0usize; s.order()];
    let mut powers = Vec::new();
    let mut current = a;
    let mut exponent = 1;
    loop {
        if first_seen[current] != 0 {
            break;
        }
        first_seen[current] = exponent;
        powers.push(current);
        current = s.mul(current, a);
        exponent += 1;
    }
    let index = first_seen[current];
    let period = exponent - index;
    let g = (period - index % period) % period;
    let kernel = powers[index - 1..].to_vec();
    MonogenicData {
        generator: a,
        index,
        period,
        powers,
        idempotent_power: index + g,
        kernel,
    }
}

/// Monogenic data for every element, indexed by element.
pub fn all_monogenic_data(s: &CayleyTable) -> Vec<MonogenicData> {
    s.elements()
        .map(|a| monogenic_data_unchecked(s, a))
        .collect()
}

/// `E(S)`, ascending.
pub fn idempotents(s: &CayleyTable) -> Vec<Element> {
    s.elements().filter(|&a| s.mul(a, a) == a).collect()
}

pub fn is_band(s: &CayleyTable) -> bool {
    s.elements().all(|a| s.mul(a, a) == a)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The least `N >= 1` with `x^N` idempotent for every `x`.
///
/// `x^N` is idempotent exactly when `N >= m_x` and `r_x | N`, so the
/// exponent is the least multiple of `lcm(r_x)` that is at least `max(m_x)`.
pub fn exponent(s: &CayleyTable) -> Result<u64> {
    let mut lcm: u64 = 1;
    let mut max_index: u64 = 1;
    for d in all_monogenic_data(s) {
        let r = d.period as u64;
        lcm = (lcm / gcd(lcm, r))
            .checked_mul(r)
            .ok_or(Error::ExponentOverflow)?;
        max_index = max_index.max(d.index as u64);
    }
    let multiples = max_index.div_ceil(lcm);
    multiples.checked_mul(lcm).ok_or(Error::ExponentOverflow)
}

/// `S_f`: the elements some power of which equals `f`.
///
/// The family of these sets partitions `S`. `S_f` need not be closed
/// under the product, so it is returned as a plain sorted element list.
pub fn s_f(s: &CayleyTable, f: Element) -> Result<Vec<Element>> {
    s.check_element(f)?;
    if s.mul(f, f) != f {
        return Err(Error::NotIdempotent(f));
    }
    Ok(s.elements()
        .filter(|&a| monogenic_data_unchecked(s, a).idempotent() == f)
        .collect())
}

/// `pi(S)`: the set of element orders.
pub fn pi_set(s: &CayleyTable) -> BTreeSet<usize> {
    s.elements()
        .map(|a| monogenic_data_unchecked(s, a).order())
        .collect()
}

/// A subsemigroup together with the elements that generate it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsemigroupSet {
    pub elements: Vec<Element>,
    pub generators: Vec<Element>,
}

/// Distinct `<a>` not properly contained in any `<b>`.
///
/// Sets are deduplicated by their elements; each lists all of its
/// generators in ascending order. The result is ordered by least generator.
pub fn maximal_monogenic(s: &CayleyTable) -> Vec<SubsemigroupSet> {
    let mut by_set: BTreeMap<Vec<Element>, Vec<Element>> = BTreeMap::new();
    for d in all_monogenic_data(s) {
        by_set.entry(d.element_set()).or_default().push(d.generator);
    }
    let sets: Vec<(Vec<Element>, Vec<Element>)> = by_set.into_iter().collect();
    let is_subset = |small: &[Element], big: &[Element]| {
        small.len() < big.len() && small.iter().all(|x| big.binary_search(x).is_ok())
    };
    let mut maximal: Vec<SubsemigroupSet> = sets
        .iter()
        .filter(|(set, _)| !sets.iter().any(|(other, _)| is_subset(set, other)))
        .map(|(set, gens)| SubsemigroupSet {
            elements: set.clone(),
            generators: gens.clone(),
        })
        .collect();
    maximal.sort_by_key(|m| m.generators[0]);
    maximal
}

/// Some `a` with `<a> = S`, preferring the least index.
pub fn is_monogenic(s: &CayleyTable) -> Option<Element> {
    s.elements()
        .find(|&a| monogenic_data_unchecked(s, a).order() == s.order())
}

/// `<x> ∩ <y>`, ascending.
pub fn gen_intersection(s: &CayleyTable, x: Element, y: Element) -> Result<Vec<Element>> {
    s.check_element(x)?;
    s.check_element(y)?;
    let gx = monogenic_data_unchecked(s, x);
    let gy = monogenic_data_unchecked(s, y);
    Ok(gx
        .element_set()
        .into_iter()
        .filter(|e| gy.contains(*e))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{cyclic_group, elementary_abelian_2, left_zero, monogenic};

    #[test]
    fn monogenic_two_three_generator() {
        let s = monogenic(2, 3).unwrap();
        let d = monogenic_data(&s, 0).unwrap();
        assert_eq!((d.index, d.period, d.order()), (2, 3, 4));
        assert_eq!(d.powers, vec![0, 1, 2, 3]);
        assert_eq!(d.idempotent_power, 3);
        assert_eq!(d.idempotent(), 2);
        assert_eq!(d.kernel, vec![1, 2, 3]);
        assert_eq!(d.power(5), d.power(2));
        assert_eq!(d.power(12), s.pow(0, 12));
    }

    #[test]
    fn group_and_band_generators() {
        let g = cyclic_group(6).unwrap();
        let d = monogenic_data(&g, 1).unwrap();
        assert_eq!((d.index, d.period, d.order()), (1, 6, 6));
        assert_eq!(d.idempotent(), 0);

        let lz = left_zero(3).unwrap();
        for a in 0..3 {
            let d = monogenic_data(&lz, a).unwrap();
            assert_eq!((d.index, d.period, d.order()), (1, 1, 1));
            assert_eq!(d.powers, vec![a]);
        }
        assert!(monogenic_data(&lz, 3).is_err());
    }

    #[test]
    fn idempotent_sets() {
        assert_eq!(idempotents(&left_zero(3).unwrap()), vec![0, 1, 2]);
        assert_eq!(idempotents(&monogenic(2, 3).unwrap()), vec![2]);
        assert_eq!(idempotents(&cyclic_group(4).unwrap()), vec![0]);
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(exponent(&elementary_abelian_2(2).unwrap()), Ok(2));
        assert_eq!(exponent(&monogenic(2, 3).unwrap()), Ok(3));
        assert_eq!(exponent(&left_zero(5).unwrap()), Ok(1));
        assert_eq!(exponent(&monogenic(7, 2).unwrap()), Ok(8));
        assert_eq!(exponent(&cyclic_group(6).unwrap()), Ok(6));
    }

    #[test]
    fn s_f_examples() {
        let m = monogenic(2, 3).unwrap();
        assert_eq!(s_f(&m, 2).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(s_f(&m, 0), Err(Error::NotIdempotent(0)));
        let lz = left_zero(3).unwrap();
        assert_eq!(s_f(&lz, 1).unwrap(), vec![1]);
        assert_eq!(s_f(&cyclic_group(4).unwrap(), 0).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn pi_set_examples() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(pi_set(&elementary_abelian_2(2).unwrap()), set(&[1, 2]));
        assert_eq!(pi_set(&cyclic_group(6).unwrap()), set(&[1, 2, 3, 6]));
        // o(a) = 4, o(a^2) = o(a^4) = 3, o(a^3) = 1.
        assert_eq!(pi_set(&monogenic(2, 3).unwrap()), set(&[1, 3, 4]));
    }

    #[test]
    fn maximal_monogenic_examples() {
        let c4 = maximal_monogenic(&cyclic_group(4).unwrap());
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0].elements, vec![0, 1, 2, 3]);
        assert_eq!(c4[0].generators, vec![1, 3]);

        let lz = maximal_monogenic(&left_zero(3).unwrap());
        assert_eq!(lz.len(), 3);
        assert!(lz.iter().all(|m| m.elements.len() == 1));

        let v4 = maximal_monogenic(&elementary_abelian_2(2).unwrap());
        let sets: Vec<Vec<usize>> = v4.into_iter().map(|m| m.elements).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    }

    #[test]
    fn monogenic_and_band_tests() {
        assert_eq!(is_monogenic(&monogenic(2, 3).unwrap()), Some(0));
        assert_eq!(is_monogenic(&elementary_abelian_2(2).unwrap()), None);
        let c5 = cyclic_group(5).unwrap();
        let g = is_monogenic(&c5).unwrap();
        assert_ne!(g, 0);
        assert!(is_band(&left_zero(4).unwrap()));
        assert!(!is_band(&cyclic_group(2).unwrap()));
        assert!(!is_band(&monogenic(2, 3).unwrap()));
    }

    #[test]
    fn intersections() {
        let m = monogenic(2, 3).unwrap();
        let a2 = monogenic_data(&m, 1).unwrap().element_set();
        assert_eq!(gen_intersection(&m, 0, 1).unwrap(), a2);
        assert!(gen_intersection(&left_zero(2).unwrap(), 0, 1)
            .unwrap()
            .is_empty());
        assert_eq!(gen_intersection(&m, 3, 3).unwrap(), vec![1, 2, 3]);
    }
}
