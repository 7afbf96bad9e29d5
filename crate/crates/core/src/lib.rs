//! Exact graded commutative algebra over prime fields.
//!
//! The crate computes Groebner bases, Hilbert series, minimal free
//! resolutions and the invariants built on them (depth, local cohomology
//! socle ranks, dimension filtrations, Hilbert-Samuel coefficients, index of
//! reducibility) for quotients of polynomial rings `F_p[x_1, ..., x_n]` by
//! homogeneous ideals.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod module;
pub mod monomial;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod sop;
pub mod checks;

pub use error::{AlgebraError, Result};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use hilbert::HilbertSeries;
pub use ideal::{length_subquotient, Ideal};
pub use module::{FreeModule, ModTerm, ModuleElement};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{ModuleOrder, TermOrder};
pub use poly::{PolyRing, Polynomial, Term};
