//! Exact computational machinery for automorphisms of free groups and the
//! finite groups they map onto.
//!
//! The crate is organised around a handful of self-contained layers:
//!
//! * [`freegroup`] — freely reduced words in `F_n` and their algebra;
//! * [`autf`] — the named automorphisms `rho`, `lam`, `sig`, `sigbar`,
//!   `eps`, `delta`, `gamma` of `F_n`, with composition, conjugation,
//!   commutators and order computation;
//! * [`linearize`] — abelianisation to integer matrices, reduction mod `p`,
//!   and the induced images in `L_n(p)`;
//! * [`groups`] — a brute-force finite-group engine (closure from
//!   generators, conjugacy classes, centraliser data, central quotients,
//!   minimal faithful permutation degrees);
//! * [`repcheck`] — simultaneous eigenspace decomposition of commuting
//!   involution actions over odd prime fields;
//! * [`orders`] — exact order formulas for the finite simple groups and
//!   the inequality sweeps built on them;
//! * [`bounds`] — the action-size bound `k(n)` and related inequalities;
//! * [`verify`] — named check suites binding each claim to a computation,
//!   emitting machine-readable reports.
//!
//! Everything is exact: unbounded integers, prime-field arithmetic, and
//! full enumeration. No floating point anywhere.

pub mod autf;
pub mod bounds;
pub mod fp;
pub mod freegroup;
pub mod groups;
pub mod linearize;
pub mod orders;
pub mod repcheck;
pub mod report;
pub mod verify;
