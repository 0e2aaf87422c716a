//! Cell-by-cell completion of partial multiplication tables.
//!
//! After each assignment only the triples that read the new cell are
//! rechecked, so a partial table is rejected as soon as any fully
//! determined triple breaks associativity.

use std::ops::ControlFlow;

pub(crate) const UNSET: u8 = u8::MAX;

/// Largest order the byte-cell search supports.
pub(crate) const MAX_SEARCH_ORDER: usize = 16;

#[derive(Clone)]
pub(crate) struct PartialTable {
    n: usize,
    cells: Vec<u8>,
}

impl PartialTable {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n <= MAX_SEARCH_ORDER);
        PartialTable {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn cells(&self) -> &[u8] {
        &self.cells
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u8 {
        self.cells[a * self.n + b]
    }

    /// Sets a cell and reports whether every determined triple touching it
    /// still associates. The cell is left set either way.
    pub(crate) fn assign(&mut self, i: usize, j: usize, v: u8) -> bool {
        self.cells[i * self.n + j] = v;
        self.consistent_at(i, j)
    }

    pub(crate) fn unset(&mut self, i: usize, j: usize) {
        self.cells[i * self.n + j] = UNSET;
    }

    fn consistent_at(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        let v = self.get(i, j) as usize;
        // (i j) z  vs  i (j z)
        for z in 0..n {
            let left = self.get(v, z);
            let jz = self.get(j, z);
            if left != UNSET && jz != UNSET {
                let right = self.get(i, jz as usize);
                if right != UNSET && left != right {
                    return false;
                }
            }
        }
        // (x i) j  vs  x (i j)
        for x in 0..n {
            let right = self.get(x, v);
            let xi = self.get(x, i);
            if right != UNSET && xi != UNSET {
                let left = self.get(xi as usize, j);
                if left != UNSET && left != right {
                    return false;
                }
            }
        }
        // (x y) j with x y = i, against x (y j)
        for x in 0..n {
            for y in 0..n {
                if self.get(x, y) as usize == i {
                    let yj = self.get(y, j);
                    if yj != UNSET {
                        let right = self.get(x, yj as usize);
                        if right != UNSET && right as usize != v {
                            return false;
                        }
                    }
                }
            }
        }
        // i (y z) with y z = j, against (i y) z
        for y in 0..n {
            for z in 0..n {
                if self.get(y, z) as usize == j {
                    let iy = self.get(i, y);
                    if iy != UNSET {
                        let left = self.get(iy as usize, z);
                        if left != UNSET && left as usize != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Depth-first completion of the cells listed in `free`, in that order,
    /// trying values in ascending order. `visit` is called on every complete
    /// table; leaves are therefore produced in lexicographic order of the
    /// free cells.
    pub(crate) fn complete<F>(&mut self, free: &[usize], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&PartialTable) -> ControlFlow<()>,
    {
        let Some((&pos, rest)) = free.split_first() else {
            return visit(self);
        };
        let (i, j) = (pos / self.n, pos % self.n);
        for v in 0..self.n as u8 {
            if self.assign(i, j, v) {
                self.complete(rest, visit)?;
            }
        }
        self.unset(i, j);
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(n: usize) -> usize {
        let cells = n * n;
        let mut count = 0;
        let total = n.pow(cells as u32);
        for code in 0..total {
            let mut t = vec![0usize; cells];
            let mut c = code;
            for slot in t.iter_mut() {
                *slot = c % n;
                c /= n;
            }
            let m = |a: usize, b: usize| t[a * n + b];
            let assoc =
                (0..n).all(|a| (0..n).all(|b| (0..n).all(|d| m(m(a, b), d) == m(a, m(b, d)))));
            if assoc {
                count += 1;
            }
        }
        count
    }

    fn search_count(n: usize) -> usize {
        let mut p = PartialTable::new(n);
        let free: Vec<usize> = (0..n * n).collect();
        let mut count = 0;
        let _ = p.complete(&free, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    #[test]
    fn pruned_search_matches_full_scan() {
        for n in 1..=3 {
            assert_eq!(search_count(n), brute_force_count(n), "order {n}");
        }
    }

    #[test]
    fn leaves_are_associative_and_sorted() {
        let mut p = PartialTable::new(3);
        let free: Vec<usize> = (0..9).collect();
        let mut leaves: Vec<Vec<u8>> = Vec::new();
        let _ = p.complete(&free, &mut |t| {
            leaves.push(t.cells().to_vec());
            ControlFlow::Continue(())
        });
        assert!(leaves.windows(2).all(|w| w[0] < w[1]));
        for cells in &leaves {
            let m = |a: usize, b: usize| cells[a * 3 + b] as usize;
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        assert_eq!(m(m(a, b), c), m(a, m(b, c)));
                    }
                }
            }
        }
    }
}
