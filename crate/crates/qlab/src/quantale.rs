//! Quantales and *-quantales as explicit tables over a finite sup-lattice.
//!
//! Multiplication must be associative and distribute over joins on both
//! sides; an involution, when present, is a join-preserving product-reversing
//! permutation of period two. Distributivity is validated on binary joins
//! plus bottom: every join in a finite lattice is a fold of those cases.
//!
//! Both residuations are cached at construction:
//!
//! - `residuate_right(a, c)` is the largest `b` with `a*b <= c`,
//! - `residuate_left(c, a)` is the largest `b` with `b*a <= c`,
//!
//! so `a*b <= c  iff  b <= residuate_right(a, c)  iff  a <= residuate_left(c, b)`.

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// A finite quantale: lattice, multiplication table, optional involution.
/// Immutable after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantale {
    lat: Lattice,
    mult: Vec<usize>, // mult[a * n + b]
    star: Option<Vec<usize>>,
    rr: Vec<usize>, // rr[a * n + c] = residuate_right(a, c)
    lr: Vec<usize>, // lr[a * n + c] = residuate_left(c, a)
}

impl Quantale {
    /// Validates multiplication (and involution when given) over an already
    /// validated lattice. Returns the first violated law with witnesses.
    pub fn from_tables(
        lat: Lattice,
        mult_table: &[Vec<usize>],
        star: Option<Vec<usize>>,
    ) -> Result<Quantale> {
        let n = lat.n();
        if mult_table.len() != n {
            return Err(Error::EntryOutOfRange { row: mult_table.len(), col: 0, value: 0 });
        }
        let mut mult = vec![0usize; n * n];
        for (a, row) in mult_table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::EntryOutOfRange { row: a, col: row.len(), value: 0 });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: a, col: b, value: v });
                }
                mult[a * n + b] = v;
            }
        }
        Self::from_flat(lat, mult, star)
    }

    pub(crate) fn from_flat(
        lat: Lattice,
        mult: Vec<usize>,
        star: Option<Vec<usize>>,
    ) -> Result<Quantale> {
        let n = lat.n();
        assert_eq!(mult.len(), n * n);
        let m = |a: usize, b: usize| mult[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NonAssociative(a, b, c));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(a, lat.join(b, c)) != lat.join(m(a, b), m(a, c)) {
                        return Err(Error::NotLeftDistributive(a, b, c));
                    }
                    if m(lat.join(b, c), a) != lat.join(m(b, a), m(c, a)) {
                        return Err(Error::NotRightDistributive(a, b, c));
                    }
                }
            }
        }
        let bot = lat.bottom();
        for a in 0..n {
            if m(a, bot) != bot || m(bot, a) != bot {
                return Err(Error::BottomNotAbsorbed(a));
            }
        }
        if let Some(s) = &star {
            if s.len() != n {
                return Err(Error::EntryOutOfRange { row: 0, col: s.len(), value: 0 });
            }
            for (a, &v) in s.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: 0, col: a, value: v });
                }
            }
            for a in 0..n {
                if s[s[a]] != a {
                    return Err(Error::StarNotInvolutive(a));
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if s[m(a, b)] != m(s[b], s[a]) {
                        return Err(Error::StarNotAntihomomorphic(a, b));
                    }
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if s[lat.join(a, b)] != lat.join(s[a], s[b]) {
                        return Err(Error::StarNotJoinPreserving(a, b));
                    }
                }
            }
        }
        // residuation caches, built once from the defining joins
        let mut rr = vec![0usize; n * n];
        let mut lr = vec![0usize; n * n];
        for a in 0..n {
            for c in 0..n {
                rr[a * n + c] = lat.join_all((0..n).filter(|&b| lat.leq(m(a, b), c)));
                lr[a * n + c] = lat.join_all((0..n).filter(|&b| lat.leq(m(b, a), c)));
            }
        }
        Ok(Quantale { lat, mult, star, rr, lr })
    }

    /// The locale on a lattice: multiplication is binary meet.
    pub fn locale(lat: Lattice) -> Quantale {
        let n = lat.n();
        let mult = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| lat.meet(a, b))
            .collect();
        Quantale::from_flat(lat, mult, None).expect("meet multiplication is a quantale")
    }

    /// The zero quantale on a lattice: every product is bottom.
    pub fn zero(lat: Lattice) -> Quantale {
        let n = lat.n();
        let mult = vec![lat.bottom(); n * n];
        Quantale::from_flat(lat, mult, None).expect("constant-bottom multiplication is a quantale")
    }

    /// Replaces the involution after validating the *-laws against this
    /// quantale's tables.
    pub fn with_star(&self, star: Vec<usize>) -> Result<Quantale> {
        Quantale::from_flat(self.lat.clone(), self.mult.clone(), Some(star))
    }

    pub fn n(&self) -> usize {
        self.lat.n()
    }

    pub fn lat(&self) -> &Lattice {
        &self.lat
    }

    pub fn bottom(&self) -> usize {
        self.lat.bottom()
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lat.join(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lat.meet(a, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lat.leq(a, b)
    }

    #[inline]
    pub fn mult(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.lat.n() + b]
    }

    /// Triple product, the `a 1 b` shape used by primes and faithfulness.
    pub fn mult3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mult(self.mult(a, b), c)
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn star(&self, a: usize) -> Result<usize> {
        self.star.as_ref().map(|s| s[a]).ok_or(Error::StarMissing)
    }

    pub fn star_table(&self) -> Option<&[usize]> {
        self.star.as_deref()
    }

    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n).map(|a| (0..n).map(|b| self.mult(a, b)).collect()).collect()
    }

    pub(crate) fn flat_mult(&self) -> &[usize] {
        &self.mult
    }

    /// Largest `b` with `a * b <= c`.
    #[inline]
    pub fn residuate_right(&self, a: usize, c: usize) -> usize {
        self.rr[a * self.lat.n() + c]
    }

    /// Largest `b` with `b * a <= c`.
    #[inline]
    pub fn residuate_left(&self, c: usize, a: usize) -> usize {
        self.lr[a * self.lat.n() + c]
    }

    /// The defining fold for `residuate_right`, bypassing the cache.
    pub fn residuate_right_direct(&self, a: usize, c: usize) -> usize {
        self.lat
            .join_all((0..self.n()).filter(|&b| self.leq(self.mult(a, b), c)))
    }

    /// The defining fold for `residuate_left`, bypassing the cache.
    pub fn residuate_left_direct(&self, c: usize, a: usize) -> usize {
        self.lat
            .join_all((0..self.n()).filter(|&b| self.leq(self.mult(b, a), c)))
    }

    /// The two-sided residual: the largest `q` with `a * q * b <= c`.
    pub fn residuate_between(&self, a: usize, c: usize, b: usize) -> usize {
        self.residuate_left(self.residuate_right(a, c), b)
    }
}

/// The sided element sets of a quantale, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidedSets {
    /// `a` with `a * top <= a`.
    pub right: Vec<usize>,
    /// `a` with `top * a <= a`.
    pub left: Vec<usize>,
    /// Both of the above.
    pub two_sided: Vec<usize>,
    /// Fixed points of the involution; `None` without a star.
    pub hermitian: Option<Vec<usize>>,
    /// Hermitian and two-sided; `None` without a star.
    pub hermitian_two_sided: Option<Vec<usize>>,
}

/// Computes all sided sets by the defining inequalities.
pub fn sided_elements(q: &Quantale) -> SidedSets {
    let n = q.n();
    let top = q.top();
    let right: Vec<usize> = (0..n).filter(|&a| q.leq(q.mult(a, top), a)).collect();
    let left: Vec<usize> = (0..n).filter(|&a| q.leq(q.mult(top, a), a)).collect();
    let two_sided: Vec<usize> = right
        .iter()
        .copied()
        .filter(|a| left.contains(a))
        .collect();
    let hermitian = q
        .star_table()
        .map(|s| (0..n).filter(|&a| s[a] == a).collect::<Vec<_>>());
    let hermitian_two_sided = hermitian.as_ref().map(|h| {
        h.iter()
            .copied()
            .filter(|a| two_sided.contains(a))
            .collect()
    });
    SidedSets { right, left, two_sided, hermitian, hermitian_two_sided }
}

/// True iff the two-sided elements are exactly bottom and top, distinct.
pub fn is_factor(q: &Quantale) -> bool {
    let s = sided_elements(q);
    q.bottom() != q.top() && s.two_sided == sorted_pair(q.bottom(), q.top())
}

/// True iff the hermitian two-sided elements are exactly bottom and top,
/// distinct. Errors on a quantale without involution.
pub fn is_star_factor(q: &Quantale) -> Result<bool> {
    if !q.has_star() {
        return Err(Error::StarMissing);
    }
    let s = sided_elements(q);
    let ht = s.hermitian_two_sided.expect("star present");
    Ok(q.bottom() != q.top() && ht == sorted_pair(q.bottom(), q.top()))
}

fn sorted_pair(a: usize, b: usize) -> Vec<usize> {
    let mut v = vec![a, b];
    v.sort_unstable();
    v
}

/// True iff `l*a*r = l*b*r` for all left-sided `l` and right-sided `r`
/// forces `a = b`.
pub fn is_strictly_faithful(q: &Quantale) -> bool {
    let s = sided_elements(q);
    for a in 0..q.n() {
        for b in a + 1..q.n() {
            let separated = s
                .left
                .iter()
                .any(|&l| s.right.iter().any(|&r| q.mult3(l, a, r) != q.mult3(l, b, r)));
            if !separated {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c2_locale, c3_locale, swap_star_square, z2};

    #[test]
    fn locale_and_zero_validate() {
        c2_locale();
        c3_locale();
        z2();
        Quantale::locale(Lattice::diamond_m5());
    }

    #[test]
    fn zero_quantale_laws_hold_directly() {
        let q = z2();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(q.mult(a, b), 0);
            }
        }
    }

    #[test]
    fn swap_star_on_two_chain_locale_rejected() {
        // the swap moves bottom, so the involution cannot respect joins
        // and products over the chain
        let err = c2_locale().with_star(vec![1, 0]).unwrap_err();
        assert!(
            matches!(
                err,
                Error::StarNotJoinPreserving(_, _) | Error::StarNotAntihomomorphic(_, _)
            ),
            "got {err:?}"
        );
    }

    #[test]
    fn swap_star_square_validates() {
        let q = swap_star_square();
        assert_eq!(q.star(1).unwrap(), 2);
        assert_eq!(q.star(0).unwrap(), 0);
    }

    #[test]
    fn nonassociative_mult_rejected() {
        // on the 3-chain: 1*1 = 2 but everything else behaves like meet
        let lat = Lattice::chain(3);
        let mut mult = lat.meet_table();
        mult[1 * 3 + 1] = 2;
        let err = Quantale::from_flat(lat, mult, None).unwrap_err();
        assert!(matches!(
            err,
            Error::NonAssociative(..) | Error::NotLeftDistributive(..) | Error::NotRightDistributive(..)
        ));
    }

    #[test]
    fn residuation_frozen_values() {
        let c2 = c2_locale();
        assert_eq!(c2.residuate_right(1, 0), 0);
        let z = z2();
        assert_eq!(z.residuate_right(1, 0), 1);
        let c3 = c3_locale();
        assert_eq!(c3.residuate_right(2, 1), 1);
        assert_eq!(c3.residuate_left(1, 2), 1);
        for q in [&c2, &z, &c3] {
            for a in 0..q.n() {
                assert_eq!(q.residuate_right(a, q.top()), q.top());
                assert_eq!(q.residuate_left(q.top(), a), q.top());
            }
        }
    }

    #[test]
    fn residuation_satisfies_adjunction() {
        for q in [c2_locale(), c3_locale(), z2(), swap_star_square()] {
            for a in 0..q.n() {
                for b in 0..q.n() {
                    for c in 0..q.n() {
                        let ab_le_c = q.leq(q.mult(a, b), c);
                        assert_eq!(ab_le_c, q.leq(b, q.residuate_right(a, c)));
                        assert_eq!(ab_le_c, q.leq(a, q.residuate_left(c, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn residuation_cache_matches_direct_fold() {
        for q in [c3_locale(), z2(), swap_star_square(), Quantale::locale(Lattice::diamond_m5())] {
            for a in 0..q.n() {
                for c in 0..q.n() {
                    assert_eq!(q.residuate_right(a, c), q.residuate_right_direct(a, c));
                    assert_eq!(q.residuate_left(c, a), q.residuate_left_direct(c, a));
                }
            }
        }
    }

    #[test]
    fn commutative_residuations_coincide() {
        let q = c3_locale();
        for a in 0..q.n() {
            for c in 0..q.n() {
                assert_eq!(q.residuate_right(a, c), q.residuate_left(c, a));
            }
        }
    }

    #[test]
    fn sided_sets_on_fixtures() {
        let all: Vec<usize> = (0..2).collect();
        let s = sided_elements(&c2_locale());
        assert_eq!((s.right, s.left, s.two_sided), (all.clone(), all.clone(), all.clone()));
        let s = sided_elements(&z2());
        assert_eq!((s.right, s.left, s.two_sided), (all.clone(), all.clone(), all));
        assert_eq!(s.hermitian, None);
    }

    #[test]
    fn factor_flags() {
        assert!(is_factor(&c2_locale()));
        assert!(!is_factor(&c3_locale()));
        let sq = swap_star_square();
        assert!(!is_factor(&sq));
        assert!(is_star_factor(&sq).unwrap());
        assert_eq!(is_star_factor(&c2_locale()).unwrap_err(), Error::StarMissing);
        // the one-element quantale is neither
        let one = Quantale::locale(Lattice::chain(1));
        assert!(!is_factor(&one));
    }

    #[test]
    fn strict_faithfulness() {
        assert!(is_strictly_faithful(&c2_locale()));
        assert!(is_strictly_faithful(&c3_locale()));
        assert!(is_strictly_faithful(&swap_star_square()));
        assert!(!is_strictly_faithful(&z2()));
    }

    #[test]
    fn sided_sets_closed_under_join_and_translation() {
        for q in [c2_locale(), c3_locale(), z2(), swap_star_square()] {
            let s = sided_elements(&q);
            for &r in &s.right {
                for c in 0..q.n() {
                    assert!(s.right.contains(&q.mult(c, r)), "c*r stays right-sided");
                }
                for &r2 in &s.right {
                    assert!(s.right.contains(&q.join(r, r2)));
                }
            }
            for &l in &s.left {
                for c in 0..q.n() {
                    assert!(s.left.contains(&q.mult(l, c)), "l*c stays left-sided");
                }
                for &l2 in &s.left {
                    assert!(s.left.contains(&q.join(l, l2)));
                }
            }
            assert!(s.right.contains(&q.bottom()) && s.left.contains(&q.bottom()));
        }
    }

    #[test]
    fn residuation_identities() {
        for q in [c2_locale(), c3_locale(), z2(), swap_star_square()] {
            let n = q.n();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        // mixed associativity of the two residuals
                        assert_eq!(
                            q.residuate_left(q.residuate_right(b, c), a),
                            q.residuate_right(b, q.residuate_left(c, a))
                        );
                        // composing on one side turns into a product
                        assert_eq!(
                            q.residuate_right(a, q.residuate_right(b, c)),
                            q.residuate_right(q.mult(b, a), c)
                        );
                        assert_eq!(
                            q.residuate_left(q.residuate_left(c, a), b),
                            q.residuate_left(c, q.mult(b, a))
                        );
                        // joins turn into meets
                        assert_eq!(
                            q.residuate_right(q.join(a, b), c),
                            q.meet(q.residuate_right(a, c), q.residuate_right(b, c))
                        );
                        assert_eq!(
                            q.residuate_left(c, q.join(a, b)),
                            q.meet(q.residuate_left(c, a), q.residuate_left(c, b))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn star_exchanges_residuations() {
        let sq = swap_star_square();
        let c3_id = c3_locale().with_star(vec![0, 1, 2]).unwrap();
        for q in [sq, c3_id] {
            for a in 0..q.n() {
                for b in 0..q.n() {
                    let lhs = q.star(q.residuate_right(a, b)).unwrap();
                    let rhs =
                        q.residuate_left(q.star(b).unwrap(), q.star(a).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
