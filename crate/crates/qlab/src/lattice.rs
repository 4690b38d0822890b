//! Finite sup-lattices given by explicit join tables.
//!
//! Elements are dense indices `0..n`. The join table is the single source of
//! truth; the order `a <= b  iff  join(a,b) = b` and all meets are derived
//! from it, never stored redundantly. Bottom and top are located during
//! validation and cached. A validated lattice is immutable.

use crate::error::{Error, Result};

/// A finite complete lattice: `n` elements and an `n x n` join table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    n: usize,
    join: Vec<usize>, // join[a * n + b]
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Validates a join table and builds the lattice. The table must be
    /// commutative, associative and idempotent, with a unique bottom and top.
    /// Returns the first violated axiom with witness elements otherwise.
    pub fn from_join_table(table: &[Vec<usize>]) -> Result<Lattice> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NoBottom);
        }
        let mut join = vec![0usize; n * n];
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::EntryOutOfRange { row: a, col: row.len(), value: 0 });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: a, col: b, value: v });
                }
                join[a * n + b] = v;
            }
        }
        Self::from_flat_join(n, join)
    }

    pub(crate) fn from_flat_join(n: usize, join: Vec<usize>) -> Result<Lattice> {
        assert_eq!(join.len(), n * n);
        for (i, &v) in join.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange { row: i / n, col: i % n, value: v });
            }
        }
        let j = |a: usize, b: usize| join[a * n + b];
        for a in 0..n {
            if j(a, a) != a {
                return Err(Error::NonIdempotent(a));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if j(a, b) != j(b, a) {
                    return Err(Error::NonCommutativeJoin(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if j(j(a, b), c) != j(a, j(b, c)) {
                        return Err(Error::NonAssociativeJoin(a, b, c));
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&z| (0..n).all(|x| j(z, x) == x))
            .ok_or(Error::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| j(t, x) == t))
            .ok_or(Error::NoTop)?;
        Ok(Lattice { n, join, bottom, top })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    /// `a <= b` in the derived order.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    /// Join of an arbitrary subset, folded left over the binary table.
    /// The empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Greatest lower bound, derived: the join of all common lower bounds.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.join_all((0..self.n).filter(|&x| self.leq(x, a) && self.leq(x, b)))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Flat meet table, row-major. Used where a carrier needs its own
    /// join table in the reversed order.
    pub fn meet_table(&self) -> Vec<usize> {
        let mut t = vec![0usize; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                t[a * self.n + b] = self.meet(a, b);
            }
        }
        t
    }

    pub fn join_table(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.join(a, b)).collect())
            .collect()
    }

    pub(crate) fn flat_join(&self) -> &[usize] {
        &self.join
    }

    /// Join-irreducible elements: nonbottom elements that are not the join
    /// of their strict lower set.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| {
                a != self.bottom
                    && self.join_all((0..self.n).filter(|&x| x != a && self.leq(x, a))) != a
            })
            .collect()
    }

    /// Elements covered by exactly nothing below except bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| {
                a != self.bottom
                    && (0..self.n).all(|x| !(self.leq(x, a) && x != a && x != self.bottom))
            })
            .collect()
    }

    // ----- stock constructors used as test fixtures -----

    /// Chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Lattice {
        assert!(n >= 1, "chain needs at least one element");
        let join = (0..n)
            .flat_map(|a| (0..n).map(move |b| a.max(b)))
            .collect();
        Lattice::from_flat_join(n, join).expect("chain is a lattice")
    }

    /// The five-element diamond: bottom 0, three pairwise-incomparable
    /// atoms 1, 2, 3, top 4.
    pub fn diamond_m5() -> Lattice {
        let n = 5;
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = if a == b {
                    a
                } else if a == 0 {
                    b
                } else if b == 0 {
                    a
                } else {
                    4
                };
            }
        }
        Lattice::from_flat_join(n, join).expect("diamond is a lattice")
    }

    /// Boolean lattice of all subsets of a k-set, elements are bitmasks,
    /// join is bitwise or.
    pub fn powerset(k: u32) -> Result<Lattice> {
        if k > 6 {
            return Err(Error::SizeLimitExceeded { n: 1 << k, max: 64 });
        }
        let n = 1usize << k;
        let join = (0..n).flat_map(|a| (0..n).map(move |b| a | b)).collect();
        Lattice::from_flat_join(n, join)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent meet oracle: scan for the element that is a lower bound
    /// of both and above every other common lower bound.
    fn meet_oracle(l: &Lattice, a: usize, b: usize) -> usize {
        (0..l.n())
            .find(|&m| {
                l.leq(m, a)
                    && l.leq(m, b)
                    && (0..l.n()).all(|c| !(l.leq(c, a) && l.leq(c, b)) || l.leq(c, m))
            })
            .expect("finite lattice has all meets")
    }

    #[test]
    fn one_element_lattice() {
        let l = Lattice::from_join_table(&[vec![0]]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
    }

    #[test]
    fn two_chain() {
        let l = Lattice::from_join_table(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert_eq!(l.meet(0, 1), 0);
    }

    #[test]
    fn noncommutative_rejected() {
        let err = Lattice::from_join_table(&[vec![0, 0], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NonCommutativeJoin(0, 1));
    }

    #[test]
    fn nonidempotent_rejected() {
        let err = Lattice::from_join_table(&[vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NonIdempotent(0));
    }

    #[test]
    fn no_bottom_rejected() {
        // two incomparable elements under a common top
        let err =
            Lattice::from_join_table(&[vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap_err();
        assert_eq!(err, Error::NoBottom);
    }

    #[test]
    fn out_of_range_rejected() {
        let err = Lattice::from_join_table(&[vec![0, 5], vec![5, 1]]).unwrap_err();
        assert!(matches!(err, Error::EntryOutOfRange { .. }));
    }

    #[test]
    fn diamond_meets_of_atoms_are_bottom() {
        let l = Lattice::diamond_m5();
        assert_eq!(l.atoms(), vec![1, 2, 3]);
        for &a in &[1, 2, 3] {
            for &b in &[1, 2, 3] {
                if a != b {
                    assert_eq!(l.meet(a, b), 0);
                    assert_eq!(l.join(a, b), 4);
                }
            }
        }
    }

    #[test]
    fn top_is_neutral_for_meet() {
        for l in [Lattice::chain(4), Lattice::diamond_m5(), Lattice::powerset(2).unwrap()] {
            for x in 0..l.n() {
                assert_eq!(l.meet(l.top(), x), x);
            }
        }
    }

    #[test]
    fn meet_agrees_with_oracle_and_absorption_holds() {
        for l in [
            Lattice::chain(1),
            Lattice::chain(3),
            Lattice::diamond_m5(),
            Lattice::powerset(3).unwrap(),
        ] {
            for a in 0..l.n() {
                for b in 0..l.n() {
                    let m = l.meet(a, b);
                    assert_eq!(m, meet_oracle(&l, a, b));
                    assert_eq!(l.join(a, l.meet(a, b)), a, "absorption a | (a & b)");
                    assert_eq!(l.meet(a, l.join(a, b)), a, "absorption a & (a | b)");
                }
            }
        }
    }

    #[test]
    fn powerset_two_is_boolean_four() {
        let l = Lattice::powerset(2).unwrap();
        assert_eq!(l.n(), 4);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert_eq!(l.atoms(), vec![1, 2]);
    }

    #[test]
    fn join_irreducibles() {
        assert_eq!(Lattice::chain(4).join_irreducibles(), vec![1, 2, 3]);
        assert_eq!(Lattice::diamond_m5().join_irreducibles(), vec![1, 2, 3]);
        assert_eq!(Lattice::powerset(2).unwrap().join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn subset_join_is_order_independent() {
        let l = Lattice::diamond_m5();
        let subsets: [&[usize]; 4] = [&[], &[1, 2], &[3, 1, 0], &[4, 2]];
        for s in subsets {
            let forward = l.join_all(s.iter().copied());
            let backward = l.join_all(s.iter().rev().copied());
            assert_eq!(forward, backward);
        }
        assert_eq!(l.join_all([]), l.bottom());
    }

    mod prop {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // random tables either fail cleanly or produce a lattice whose
            // axioms recheck
            #[test]
            fn validation_is_total(n in 1usize..5, seed in any::<u64>()) {
                let mut state = seed;
                let mut next = || {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 33) as usize
                };
                let table: Vec<Vec<usize>> =
                    (0..n).map(|_| (0..n).map(|_| next() % n).collect()).collect();
                if let Ok(l) = Lattice::from_join_table(&table) {
                    for a in 0..n {
                        for b in 0..n {
                            prop_assert_eq!(l.join(a, b), l.join(b, a));
                            prop_assert!(l.leq(l.bottom(), a));
                            prop_assert!(l.leq(a, l.top()));
                            let m = l.meet(a, b);
                            prop_assert!(l.leq(m, a) && l.leq(m, b));
                        }
                    }
                }
            }
        }
    }
}
