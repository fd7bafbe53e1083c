//! Closed-form prime functions and the numerical machinery built on them.
//!
//! The crate is organised bottom-up:
//!
//! * [`primes`] evaluates the floor/sign double product that decides
//!   primality, the generating function `Ψ(u) = u·Λ(u)`, counting and
//!   enumeration built on it.
//! * [`estimates`] compares the counting function with Gauss' logarithmic
//!   integral and checks the Schoenfeld and Trudgian π-bounds on ranges.
//! * [`euler`] truncates the Euler product, including the table-free
//!   variant whose factors are selected by `Λ`.
//! * [`zeta`] evaluates the truncated Dirichlet-eta form of ζ on the strip
//!   and its split into prime and composite terms.
//! * [`action`] holds the harmonic-oscillator action built from `|ζ|²`,
//!   its closed forms, and the grid scans that locate zeros from it.
//! * [`chebyshev`] evaluates ψ(x) both from a prime list and from `Λ`
//!   alone, and checks the Schoenfeld ψ-bound.
//! * [`table`] reproduces the random odd-integer generator used to
//!   exercise `Ψ` on scattered inputs.
//!
//! [`quadrature`] and [`search`] are the shared numerical helpers.

pub mod action;
pub mod chebyshev;
pub mod error;
pub mod estimates;
pub mod euler;
pub mod primes;
pub mod quadrature;
pub mod search;
pub mod table;
pub mod zeta;

pub use error::{Error, Result};
pub use primes::Mode;
pub use zeta::{ComplexPoint, ZetaValue};
