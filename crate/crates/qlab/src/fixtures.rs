//! Shared unit-test fixtures.

use crate::lattice::Lattice;
use crate::quantale::Quantale;

pub(crate) fn c2_locale() -> Quantale {
    Quantale::locale(Lattice::chain(2))
}

pub(crate) fn c3_locale() -> Quantale {
    Quantale::locale(Lattice::chain(3))
}

pub(crate) fn c4_locale() -> Quantale {
    Quantale::locale(Lattice::chain(4))
}

pub(crate) fn z2() -> Quantale {
    Quantale::zero(Lattice::chain(2))
}

/// 2x2 boolean locale with the coordinate-swap involution.
pub(crate) fn swap_star_square() -> Quantale {
    Quantale::locale(Lattice::powerset(2).unwrap())
        .with_star(vec![0, 2, 1, 3])
        .unwrap()
}

pub(crate) fn c3_identity_star() -> Quantale {
    c3_locale().with_star(vec![0, 1, 2]).unwrap()
}
