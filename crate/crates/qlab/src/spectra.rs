//! Prime elements, cyclic and separating sets, their bijections with
//! congruences and quotients, semisimplicity, and the variants relative to
//! a multiplicative subsemigroup.
//!
//! Conventions fixed here:
//!
//! - a prime is `p` with `a * top * b <= p` forcing `a <= p` or `b <= p`;
//!   top is prime vacuously, so the proper two-sided primes exclude it.
//!   Top also cannot generate a cyclic set (its residual orbit collapses),
//!   which is why the bijections below run over proper two-sided primes.
//! - a cyclic set is a nonempty top-free `P` whose two-sided residual orbit
//!   `{ largest q with a*q*b <= p }` is exactly `P + top` for every `p`.

use std::collections::BTreeSet;

use crate::congruence::{
    intersect_congruences, is_simple, is_star_simple, quotient, simple_quotient_congruences,
    star_simple_quotient_congruences, verify_congruence, Congruence,
};
use crate::error::{Error, Result};
use crate::guard;
use crate::quantale::{sided_elements, Quantale};

/// The primes of a quantale and the two-sided proper ones among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    pub primes: Vec<usize>,
    /// Primes that are two-sided, with top excluded.
    pub two_sided_proper: Vec<usize>,
}

/// A cyclic set together with its witness prime, the meet of its elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicSet {
    pub elems: Vec<usize>,
    pub witness_prime: usize,
}

pub fn is_prime(q: &Quantale, p: usize) -> bool {
    let top = q.top();
    for a in 0..q.n() {
        for b in 0..q.n() {
            if q.leq(q.mult(q.mult(a, top), b), p) && !q.leq(a, p) && !q.leq(b, p) {
                return false;
            }
        }
    }
    true
}

pub fn prime_set(q: &Quantale) -> PrimeSet {
    let primes: Vec<usize> = (0..q.n()).filter(|&p| is_prime(q, p)).collect();
    let two_sided = sided_elements(q).two_sided;
    let two_sided_proper = primes
        .iter()
        .copied()
        .filter(|p| *p != q.top() && two_sided.contains(p))
        .collect();
    PrimeSet { primes, two_sided_proper }
}

/// True iff every strict non-order pair is split by some element of `set`:
/// whenever `a` is not above `b`, some `p` has `a <= p` and `b` not.
pub fn is_separating(q: &Quantale, set: &[usize]) -> bool {
    for a in 0..q.n() {
        for b in 0..q.n() {
            if !q.leq(b, a) && !set.iter().any(|&p| q.leq(a, p) && !q.leq(b, p)) {
                return false;
            }
        }
    }
    true
}

/// Separation by `set` together with its image under the involution.
pub fn is_star_separating(q: &Quantale, set: &[usize]) -> Result<bool> {
    let mut both: Vec<usize> = set.to_vec();
    for &p in set {
        both.push(q.star(p)?);
    }
    both.sort_unstable();
    both.dedup();
    Ok(is_separating(q, &both))
}

fn sorted_set(xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let s: BTreeSet<usize> = xs.into_iter().collect();
    s.into_iter().collect()
}

/// The two-sided residual orbit of `p`: every `a -> p <- b` over the given
/// ranges of `a` and `b`.
fn residual_orbit(q: &Quantale, p: usize, range_a: &[usize], range_b: &[usize]) -> Vec<usize> {
    sorted_set(
        range_a
            .iter()
            .flat_map(|&a| range_b.iter().map(move |&b| q.residuate_between(a, p, b))),
    )
}

/// Cyclicity by the definition, cross-checked against the characterization
/// through residual closure and the common witness meet. The two routes
/// must agree; disagreement is an implementation bug.
pub fn is_cyclic_set(q: &Quantale, set: &[usize]) -> bool {
    let set = sorted_set(set.iter().copied());
    let all: Vec<usize> = (0..q.n()).collect();
    let mut with_top = set.clone();
    with_top.push(q.top());
    let with_top = sorted_set(with_top);

    let by_definition = !set.is_empty()
        && !set.contains(&q.top())
        && set
            .iter()
            .all(|&p| residual_orbit(q, p, &all, &all) == with_top);

    // characterization: the set plus top is residually closed, all elements
    // share the witness meet, and each element is recovered from it
    let by_characterization = !set.is_empty() && !set.contains(&q.top()) && {
        let closed = with_top.iter().all(|&p| {
            (0..q.n()).all(|a| {
                with_top.binary_search(&q.residuate_right(a, p)).is_ok()
                    && with_top.binary_search(&q.residuate_left(p, a)).is_ok()
            })
        });
        let t = q.lat().meet_all(set.iter().copied());
        let witnessed = set
            .iter()
            .all(|&p| q.residuate_between(q.top(), p, q.top()) == t);
        let recovered = set.iter().all(|&p| {
            (0..q.n())
                .any(|a| (0..q.n()).any(|b| q.residuate_between(a, t, b) == p))
        });
        closed && witnessed && recovered
    };

    assert_eq!(
        by_definition, by_characterization,
        "cyclicity routes disagree on {set:?}"
    );
    by_definition
}

/// Builds the cyclic set generated by a proper two-sided prime: its full
/// residual orbit with top removed.
pub fn cyclic_set_from_prime(q: &Quantale, t: usize) -> Result<CyclicSet> {
    if t == q.top() {
        return Err(Error::TopPrimeRejected);
    }
    let ps = prime_set(q);
    if !ps.two_sided_proper.contains(&t) {
        return Err(Error::NotTwoSidedPrime(t));
    }
    let all: Vec<usize> = (0..q.n()).collect();
    let elems: Vec<usize> = residual_orbit(q, t, &all, &all)
        .into_iter()
        .filter(|&x| x != q.top())
        .collect();
    assert!(is_cyclic_set(q, &elems), "orbit of a two-sided prime must be cyclic");
    let witness = q.lat().meet_all(elems.iter().copied());
    assert_eq!(witness, t, "the witness meet must recover the generating prime");
    Ok(CyclicSet { elems, witness_prime: t })
}

/// One cyclic set per proper two-sided prime, sorted. The generating map is
/// injective; the reverse map is the witness meet.
pub fn enumerate_cyclic_sets(q: &Quantale) -> Vec<CyclicSet> {
    let mut out: Vec<CyclicSet> = prime_set(q)
        .two_sided_proper
        .iter()
        .map(|&t| cyclic_set_from_prime(q, t).expect("two-sided proper prime"))
        .collect();
    out.sort();
    for w in out.windows(2) {
        assert_ne!(w[0].elems, w[1].elems, "distinct primes gave one cyclic set");
    }
    out
}

/// Exhaustive oracle: every subset of the carrier tested for cyclicity.
pub fn enumerate_cyclic_sets_by_subsets(q: &Quantale) -> Result<Vec<Vec<usize>>> {
    let n = q.n();
    let max = guard::subset_oracle_limit();
    if n > max {
        return Err(Error::SizeLimitExceeded { n, max });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if is_cyclic_set(q, &set) {
            out.push(set);
        }
    }
    Ok(out)
}

/// Closure of a set under both residuations by arbitrary elements.
pub fn residually_closed(q: &Quantale, set: &[usize]) -> bool {
    let set = sorted_set(set.iter().copied());
    set.iter().all(|&p| {
        (0..q.n()).all(|a| {
            set.binary_search(&q.residuate_right(a, p)).is_ok()
                && set.binary_search(&q.residuate_left(p, a)).is_ok()
        })
    })
}

/// Exhaustively verifies that residuals of primes are primes (or top, which
/// is itself prime). A witness `(p, a)` signals an implementation bug.
pub fn primes_closed_under_residuation(q: &Quantale) -> std::result::Result<(), (usize, usize)> {
    let primes = prime_set(q).primes;
    for &p in &primes {
        for a in 0..q.n() {
            if !is_prime(q, q.residuate_right(a, p)) || !is_prime(q, q.residuate_left(p, a)) {
                return Err((p, a));
            }
        }
    }
    Ok(())
}

/// The congruence identifying elements that lie below the same part of a
/// cyclic set. Its quotient is simple.
pub fn congruence_from_cyclic_set(q: &Quantale, set: &[usize]) -> Result<Congruence> {
    if !is_cyclic_set(q, set) {
        return Err(Error::NotCyclic);
    }
    let n = q.n();
    let signatures: Vec<Vec<bool>> = (0..n)
        .map(|x| set.iter().map(|&p| q.leq(x, p)).collect())
        .collect();
    let mut seen: Vec<&Vec<bool>> = Vec::new();
    let mut raw = vec![0usize; n];
    for x in 0..n {
        if let Some(pos) = seen.iter().position(|s| **s == signatures[x]) {
            raw[x] = pos;
        } else {
            raw[x] = seen.len();
            seen.push(&signatures[x]);
        }
    }
    let cong = Congruence::from_class_vector(&raw);
    verify_congruence(q, &cong, false)
        .expect("the cyclic-set relation must be a congruence");
    if cong.num_classes() <= guard::congruence_order_limit() {
        let (quot, _) = quotient(q, &cong)?;
        assert!(
            is_simple(&quot)?,
            "the quotient by a cyclic-set congruence must be simple"
        );
    }
    Ok(cong)
}

/// Transports a cyclic set of a simple quotient back along the projection
/// adjoint `r -> largest s with proj(s) <= r`.
pub fn pullback_cyclic_set(
    q: &Quantale,
    cong: &Congruence,
    quotient_set: &[usize],
) -> Result<CyclicSet> {
    let (quot, proj) = quotient(q, cong)?;
    if !is_simple(&quot)? {
        return Err(Error::QuotientNotSimple);
    }
    if !is_cyclic_set(&quot, quotient_set) {
        return Err(Error::NotCyclic);
    }
    let elems = sorted_set(quotient_set.iter().map(|&r| {
        q.lat()
            .join_all((0..q.n()).filter(|&s| quot.leq(proj[s], r)))
    }));
    assert!(is_cyclic_set(q, &elems), "pullback of a cyclic set must be cyclic");
    let witness = q.lat().meet_all(elems.iter().copied());
    Ok(CyclicSet { elems, witness_prime: witness })
}

/// All elements of all cyclic sets, deduplicated.
pub fn union_of_cyclic_sets(q: &Quantale) -> Vec<usize> {
    sorted_set(
        enumerate_cyclic_sets(q)
            .into_iter()
            .flat_map(|c| c.elems),
    )
}

/// Semisimplicity by separation: the union of cyclic sets separates.
pub fn semisimple_by_separation(q: &Quantale) -> bool {
    is_separating(q, &union_of_cyclic_sets(q))
}

/// Semisimplicity by subdirect decomposition: the simple-quotient
/// congruences meet in the diagonal.
pub fn semisimple_by_congruences(q: &Quantale) -> Result<bool> {
    let congs = simple_quotient_congruences(q)?;
    let refs: Vec<&Congruence> = congs.iter().collect();
    Ok(intersect_congruences(q.n(), &refs).is_diagonal())
}

/// Decides semisimplicity by both routes, which must agree.
pub fn is_semisimple(q: &Quantale) -> Result<bool> {
    let by_sep = semisimple_by_separation(q);
    let by_cong = semisimple_by_congruences(q)?;
    assert_eq!(by_sep, by_cong, "semisimplicity routes disagree");
    Ok(by_sep)
}

/// *-semisimplicity: the *-simple-quotient *-congruences meet in the
/// diagonal. Equal to plain semisimplicity, which is asserted.
pub fn is_star_semisimple(q: &Quantale) -> Result<bool> {
    if !q.has_star() {
        return Err(Error::StarMissing);
    }
    let congs = star_simple_quotient_congruences(q)?;
    let refs: Vec<&Congruence> = congs.iter().collect();
    let by_star = intersect_congruences(q.n(), &refs).is_diagonal();
    assert_eq!(
        by_star,
        is_semisimple(q)?,
        "*-semisimplicity must coincide with semisimplicity"
    );
    Ok(by_star)
}

/// A cyclic set fixed (as a set) by the involution.
pub fn star_cyclic_check(q: &Quantale, set: &[usize]) -> Result<bool> {
    let image = sorted_set(
        set.iter()
            .map(|&p| q.star(p))
            .collect::<Result<Vec<usize>>>()?,
    );
    Ok(is_cyclic_set(q, set) && image == sorted_set(set.iter().copied()))
}

/// Proper two-sided primes fixed by the involution. Each generates a
/// star-fixed cyclic set, which is asserted.
pub fn hermitian_two_sided_primes(q: &Quantale) -> Result<Vec<usize>> {
    if !q.has_star() {
        return Err(Error::StarMissing);
    }
    let out: Vec<usize> = prime_set(q)
        .two_sided_proper
        .into_iter()
        .filter(|&p| q.star(p).unwrap() == p)
        .collect();
    for &p in &out {
        let c = cyclic_set_from_prime(q, p)?;
        assert!(
            star_cyclic_check(q, &c.elems)?,
            "hermitian two-sided prime {p} must generate a star-fixed cyclic set"
        );
    }
    Ok(out)
}

// ----- predicates relative to a multiplicative subsemigroup -----

/// S must contain bottom and be closed under multiplication. Join closure
/// is not required.
pub fn validate_subsemigroup(q: &Quantale, s: &[usize]) -> Result<Vec<usize>> {
    let s = sorted_set(s.iter().copied());
    if s.binary_search(&q.bottom()).is_err() {
        return Err(Error::BottomNotInS);
    }
    for &a in &s {
        for &b in &s {
            if s.binary_search(&q.mult(a, b)).is_err() {
                return Err(Error::NotSubsemigroup(a, b));
            }
        }
    }
    Ok(s)
}

/// Separation quantified over pairs from S only.
pub fn is_s_separating(q: &Quantale, s: &[usize], set: &[usize]) -> Result<bool> {
    let s = validate_subsemigroup(q, s)?;
    for &a in &s {
        for &b in &s {
            if !q.leq(b, a) && !set.iter().any(|&p| q.leq(a, p) && !q.leq(b, p)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Residual closure with divisors restricted to S; top may appear.
pub fn is_residually_s_closed(q: &Quantale, s: &[usize], set: &[usize]) -> Result<bool> {
    let s = validate_subsemigroup(q, s)?;
    let mut with_top = sorted_set(set.iter().copied());
    if with_top.binary_search(&q.top()).is_err() {
        with_top.push(q.top());
        with_top.sort_unstable();
    }
    Ok(set.iter().all(|&p| {
        s.iter().all(|&a| {
            with_top.binary_search(&q.residuate_right(a, p)).is_ok()
                && with_top.binary_search(&q.residuate_left(p, a)).is_ok()
        })
    }))
}

/// The cyclic condition with the residual orbit restricted to S.
pub fn is_s_cyclic(q: &Quantale, s: &[usize], set: &[usize]) -> Result<bool> {
    let s = validate_subsemigroup(q, s)?;
    let set = sorted_set(set.iter().copied());
    if set.is_empty() || set.contains(&q.top()) {
        return Ok(false);
    }
    let mut with_top = set.clone();
    with_top.push(q.top());
    let with_top = sorted_set(with_top);
    Ok(set
        .iter()
        .all(|&p| residual_orbit(q, p, &s, &s) == with_top))
}
