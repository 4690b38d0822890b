//! Quantale congruences: generation by closure, exhaustive enumeration,
//! quotients, and the simplicity decisions built on them.
//!
//! A congruence is stored as a class vector in canonical form: class ids are
//! assigned by first occurrence scanning elements upward, which makes
//! equality and deduplication exact.
//!
//! Enumeration runs two routes and cross-checks them at small orders:
//! closing the principal congruences under pairwise join, and filtering all
//! set partitions by the compatibility laws. The partition route explodes
//! with the Bell numbers, so it is only used as an oracle for `n <= 6`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::guard;
use crate::quantale::Quantale;

/// A congruence in canonical class-vector form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes an arbitrary class labelling.
    pub fn from_class_vector(raw: &[usize]) -> Congruence {
        let mut relabel: Vec<Option<usize>> = vec![None; raw.len() + 1];
        let mut next = 0usize;
        let class_of = raw
            .iter()
            .map(|&c| {
                *relabel[c].get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Congruence { class_of }
    }

    pub fn diagonal(n: usize) -> Congruence {
        Congruence { class_of: (0..n).collect() }
    }

    pub fn full(n: usize) -> Congruence {
        Congruence { class_of: vec![0; n] }
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    #[inline]
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_diagonal(&self) -> bool {
        self.num_classes() == self.n()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() <= 1
    }

    /// True iff every class of `self` is contained in a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        assert_eq!(self.n(), other.n());
        let mut image: Vec<Option<usize>> = vec![None; self.num_classes()];
        for x in 0..self.n() {
            match image[self.class_of[x]] {
                None => image[self.class_of[x]] = Some(other.class_of[x]),
                Some(c) if c == other.class_of[x] => {}
                Some(_) => return false,
            }
        }
        true
    }

    /// First element of each class, ascending by class id. With canonical
    /// numbering these are exactly the first occurrences.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_classes()];
        for x in (0..self.n()).rev() {
            reps[self.class_of[x]] = x;
        }
        reps
    }
}

/// Whether the involution participates in generation and compatibility.
fn want_star(q: &Quantale, star_flag: bool) -> Result<bool> {
    if star_flag && !q.has_star() {
        return Err(Error::StarMissing);
    }
    Ok(star_flag)
}

/// Checks that a partition is compatible with joins, multiplication on both
/// sides, and (when flagged) the involution. Returns the first violation.
pub fn verify_congruence(q: &Quantale, cong: &Congruence, star_flag: bool) -> Result<()> {
    let star = want_star(q, star_flag)?;
    let n = q.n();
    if cong.n() != n {
        return Err(Error::IncompatibleCongruence(format!(
            "partition is over {} elements, quantale has {}",
            cong.n(),
            n
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !cong.same(a, b) {
                continue;
            }
            for c in 0..n {
                if !cong.same(q.join(a, c), q.join(b, c)) {
                    return Err(Error::IncompatibleCongruence(format!(
                        "{a}~{b} but {a}|{c} !~ {b}|{c}"
                    )));
                }
                if !cong.same(q.mult(c, a), q.mult(c, b)) {
                    return Err(Error::IncompatibleCongruence(format!(
                        "{a}~{b} but {c}*{a} !~ {c}*{b}"
                    )));
                }
                if !cong.same(q.mult(a, c), q.mult(b, c)) {
                    return Err(Error::IncompatibleCongruence(format!(
                        "{a}~{b} but {a}*{c} !~ {b}*{c}"
                    )));
                }
            }
            if star && !cong.same(q.star(a)?, q.star(b)?) {
                return Err(Error::IncompatibleCongruence(format!("{a}~{b} but {a}* !~ {b}*")));
            }
        }
    }
    Ok(())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The least congruence (or *-congruence) containing the given pairs.
///
/// Worklist closure over a union-find: every merged element pair is pushed
/// through all unary translations (join with c, multiplication by c on
/// either side, the involution). The binary compatibility laws follow from
/// the unary ones by transitivity, and the loop terminates because every
/// merge coarsens a finite partition.
pub fn generated_congruence(
    q: &Quantale,
    pairs: &[(usize, usize)],
    star_flag: bool,
) -> Result<Congruence> {
    let star = want_star(q, star_flag)?;
    let n = q.n();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra == rb {
            continue;
        }
        parent[ra] = rb;
        for c in 0..n {
            work.push((q.join(c, a), q.join(c, b)));
            work.push((q.mult(c, a), q.mult(c, b)));
            work.push((q.mult(a, c), q.mult(b, c)));
        }
        if star {
            work.push((q.star(a)?, q.star(b)?));
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let cong = Congruence::from_class_vector(&roots);
    debug_assert!(verify_congruence(q, &cong, star_flag).is_ok());
    Ok(cong)
}

/// Join in the congruence lattice: the least congruence containing both.
pub fn join_congruences(
    q: &Quantale,
    a: &Congruence,
    b: &Congruence,
    star_flag: bool,
) -> Result<Congruence> {
    let mut pairs = Vec::new();
    for c in [a, b] {
        let reps = c.representatives();
        for x in 0..c.n() {
            let r = reps[c.class_of()[x]];
            if r != x {
                pairs.push((r, x));
            }
        }
    }
    generated_congruence(q, &pairs, star_flag)
}

/// Meet of a family of congruences: the common refinement. The empty family
/// meets to the full relation.
pub fn intersect_congruences(n: usize, congs: &[&Congruence]) -> Congruence {
    let mut signature: Vec<Vec<usize>> = vec![Vec::with_capacity(congs.len()); n];
    for c in congs {
        for x in 0..n {
            signature[x].push(c.class_of()[x]);
        }
    }
    let mut seen: Vec<(&Vec<usize>, usize)> = Vec::new();
    let mut raw = vec![0usize; n];
    for x in 0..n {
        if let Some(&(_, id)) = seen.iter().find(|(s, _)| **s == signature[x]) {
            raw[x] = id;
        } else {
            let id = seen.len();
            seen.push((&signature[x], id));
            raw[x] = id;
        }
    }
    Congruence::from_class_vector(&raw)
}

/// All (*-)congruences, in sorted canonical order.
///
/// Route: close the principal congruences under pairwise join. For `n <= 6`
/// the result is cross-checked against brute-force partition filtering.
pub fn enumerate_congruences(q: &Quantale, star_flag: bool) -> Result<Vec<Congruence>> {
    want_star(q, star_flag)?;
    let n = q.n();
    let max = guard::congruence_order_limit();
    if n > max {
        return Err(Error::SizeLimitExceeded { n, max });
    }
    let mut set: BTreeSet<Congruence> = BTreeSet::new();
    set.insert(Congruence::diagonal(n));
    let mut fresh: Vec<Congruence> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let c = generated_congruence(q, &[(a, b)], star_flag)?;
            if set.insert(c.clone()) {
                fresh.push(c);
            }
        }
    }
    // semi-naive join closure: only join new congruences against the set
    while let Some(c) = fresh.pop() {
        let snapshot: Vec<Congruence> = set.iter().cloned().collect();
        for d in snapshot {
            let j = join_congruences(q, &c, &d, star_flag)?;
            if set.insert(j.clone()) {
                fresh.push(j);
            }
        }
    }
    let result: Vec<Congruence> = set.into_iter().collect();
    if n <= 6 {
        let oracle = enumerate_congruences_by_partitions(q, star_flag)?;
        assert_eq!(
            result, oracle,
            "join-closure and partition-filter congruence enumerations disagree"
        );
    }
    Ok(result)
}

/// Brute-force route: every set partition of the carrier, filtered by the
/// compatibility laws. Exponential in n (Bell numbers); guarded at 6.
pub fn enumerate_congruences_by_partitions(
    q: &Quantale,
    star_flag: bool,
) -> Result<Vec<Congruence>> {
    want_star(q, star_flag)?;
    let n = q.n();
    if n > 6 {
        return Err(Error::SizeLimitExceeded { n, max: 6 });
    }
    let mut out = BTreeSet::new();
    let mut labels = vec![0usize; n];
    enumerate_partitions(&mut labels, 1, q, star_flag, &mut out);
    Ok(out.into_iter().collect())
}

/// Restricted-growth enumeration of set partitions.
fn enumerate_partitions(
    labels: &mut Vec<usize>,
    pos: usize,
    q: &Quantale,
    star_flag: bool,
    out: &mut BTreeSet<Congruence>,
) {
    let n = labels.len();
    if pos == n {
        let cong = Congruence::from_class_vector(labels);
        if verify_congruence(q, &cong, star_flag).is_ok() {
            out.insert(cong);
        }
        return;
    }
    let max_used = labels[..pos].iter().copied().max().unwrap_or(0);
    for label in 0..=max_used + 1 {
        labels[pos] = label;
        enumerate_partitions(labels, pos + 1, q, star_flag, out);
    }
    labels[pos] = 0;
}

/// Simple: the top product is not bottom and there are exactly two
/// congruences.
pub fn is_simple(q: &Quantale) -> Result<bool> {
    let nontrivial = q.mult(q.top(), q.top()) != q.bottom();
    Ok(nontrivial && enumerate_congruences(q, false)?.len() == 2)
}

/// Same decision over *-congruences.
pub fn is_star_simple(q: &Quantale) -> Result<bool> {
    let nontrivial = q.mult(q.top(), q.top()) != q.bottom();
    Ok(nontrivial && enumerate_congruences(q, true)?.len() == 2)
}

/// Quotient quantale on class representatives, together with the projection
/// map element -> class id. The involution descends exactly when the
/// congruence is star-compatible.
pub fn quotient(q: &Quantale, cong: &Congruence) -> Result<(Quantale, Vec<usize>)> {
    verify_congruence(q, cong, false)?;
    let k = cong.num_classes();
    let reps = cong.representatives();
    let cls = cong.class_of();
    let join: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| cls[q.join(reps[i], reps[j])]).collect())
        .collect();
    let mult: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| cls[q.mult(reps[i], reps[j])]).collect())
        .collect();
    let star = if q.has_star() && verify_congruence(q, cong, true).is_ok() {
        Some(
            (0..k)
                .map(|i| q.star(reps[i]).map(|s| cls[s]))
                .collect::<Result<Vec<usize>>>()?,
        )
    } else {
        None
    };
    let lat = crate::lattice::Lattice::from_join_table(&join)
        .map_err(|e| Error::IncompatibleCongruence(format!("quotient join table invalid: {e}")))?;
    let quot = Quantale::from_tables(lat, &mult, star)
        .map_err(|e| Error::IncompatibleCongruence(format!("quotient tables invalid: {e}")))?;
    Ok((quot, cls.to_vec()))
}

/// Congruences covered only by the full relation, the full relation itself
/// excluded.
pub fn maximal_congruences(q: &Quantale, star_flag: bool) -> Result<Vec<Congruence>> {
    let all = enumerate_congruences(q, star_flag)?;
    Ok(all
        .iter()
        .filter(|c| !c.is_full())
        .filter(|c| {
            all.iter()
                .all(|d| !(c.refines(d) && *c != d && !d.is_full()))
        })
        .cloned()
        .collect())
}

/// The maximal congruences whose quotient is simple. These are the
/// congruences in bijection with two-sided proper primes and cyclic sets;
/// a maximal congruence can fail the cut when the quotient kills the top
/// product.
pub fn simple_quotient_congruences(q: &Quantale) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    for c in maximal_congruences(q, false)? {
        let (quot, _) = quotient(q, &c)?;
        if is_simple(&quot)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Maximal *-congruences with a *-simple quotient.
pub fn star_simple_quotient_congruences(q: &Quantale) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    for c in maximal_congruences(q, true)? {
        let (quot, _) = quotient(q, &c)?;
        if is_star_simple(&quot)? {
            out.push(c);
        }
    }
    Ok(out)
}
