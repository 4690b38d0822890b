//! Finite quantale workbench.
//!
//! Quantales, *-quantales and their modules are represented as explicit
//! tables over element indices `0..n`. Every definition is mechanized and
//! every structural theorem about simplicity, semisimplicity, primes,
//! cyclic sets and simple modules can be checked by brute force on small
//! instances.
//!
//! - [`lattice`]: finite sup-lattices from join tables.
//! - [`quantale`]: multiplication, involution, residuations, sided elements.
//! - [`congruence`]: congruence generation, enumeration, quotients,
//!   simplicity.
//! - [`spectra`]: primes, cyclic and separating sets, their bijections with
//!   congruences, semisimplicity, subsemigroup-relative variants.
//! - [`qmodule`]: quantale modules, duals, simple modules, the module side
//!   of the cyclic-set correspondence.
//! - [`constructions`]: endomorphism quantales, products, exhaustive
//!   enumeration and random sampling of small quantales.
//! - [`io`]: the plain-text table format and analysis reports.
//! - [`checks`]: the law and theorem suite run by `check` and `selftest`.

pub mod checks;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod guard;
pub mod io;
pub mod lattice;
pub mod qmodule;
pub mod quantale;
pub mod report;
pub mod spectra;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
pub use lattice::Lattice;
pub use quantale::Quantale;
