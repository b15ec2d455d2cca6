//! Exact construction of the minimal polynomials of `4sin^2(pi/n)` via
//! cyclotomic polynomials, together with computational verification of the
//! identities tying their values at `{0, 1, 2, 3, 4}` to the prime-power
//! indicator `nu(n)`.
//!
//! The crate is organized around:
//! - [`polyz`]: dense exact integer polynomial arithmetic;
//! - [`numtheory`]: factorization, totient, Möbius, `nu`, radical;
//! - [`cyclotomic`]: the cyclotomic polynomials `C_n` and their
//!   substitution identities;
//! - [`chebylucas`]: Lucas polynomials, spread polynomials `Z_n`, and the
//!   palindromic-to-Lucas-basis reduction;
//! - [`minpoly`]: `psi_n`, `phi_n`, `Phi_n` and the factorization
//!   `Z_n = prod_{d|n} Phi_d`;
//! - [`cycloring`]: exact arithmetic in `Z[zeta_12]` and the normalized
//!   values `w(n, z)`;
//! - [`theorems`]: the five sign rules, sweep verification and value
//!   tables;
//! - [`format`]: pretty, JSON and CSV interchange.

pub mod chebylucas;
pub mod cyclotomic;
pub mod cycloring;
pub mod format;
pub mod minpoly;
pub mod numtheory;
pub mod polyz;
pub mod theorems;

pub use polyz::IntPoly;
