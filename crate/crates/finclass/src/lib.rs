//! Combinatorics of finite classical groups at desk scale.
//!
//! The crate has five layers:
//!
//! - [`algebra`]: exact finite-field, polynomial, and matrix arithmetic plus
//!   classical group order formulas;
//! - [`symfun`]: integer partitions, border strips, and Murnaghan-Nakayama
//!   evaluation of symmetric-group characters;
//! - [`symbols`]: the symbol calculus behind unipotent characters of types
//!   B/C/D — rank, defect, level, hooks, cohooks, enumeration, and the
//!   level-versus-degree estimates;
//! - [`howe`]: the interleaving partial order, the linking relation between
//!   symbols, and the symbol-level transfer maps of the orthogonal-symplectic
//!   duality, with their uniqueness guarantees;
//! - [`groupsim`]: fully enumerated small matrix groups — conjugacy classes,
//!   supports, Weil values, regular orbits, factorization counts, and
//!   class-square coverage.
//!
//! The [`verify`] module packages the whole property battery behind named,
//! machine-readable checks; the `finclass` binary is a thin front end over it.
//! Start with the `examples/` directory for runnable tours of each layer.

pub mod algebra;
pub mod config;
pub mod groupsim;
pub mod howe;
pub mod symbols;
pub mod symfun;
pub mod verify;
