//! Exact computer algebra for finite-dimensional Hopf algebras over
//! prime fields, represented by structure constants.
//!
//! The crate builds verified Hopf algebras (a p²-dimensional family
//! generated by a group-like and a skew-primitive element, group algebras
//! from Cayley tables, or user files), computes their left/right integral
//! spaces, and evaluates higher Frobenius-Schur indicators by two
//! independent exact methods that must agree: the trace of the antipode
//! composed with Sweedler powers, and the evaluation of a normalized
//! integral pair. Indicator sequences are linearly recursive; their
//! minimal polynomials come from Berlekamp-Massey with an explicit
//! verification window, and periods are detected with a three-period
//! confirmation rule.
//!
//! All arithmetic is exact over F_p and every output is deterministic:
//! same input, same bytes.
//!
//! Start with [`zoo::build_radford`] or [`zoo::resolve_selector`], then
//! [`indicators::indicators`]. The `examples/` directory walks through
//! each capability; the thin `radford` binary exposes the same operations
//! as subcommands.

pub mod cli;
pub mod error;
pub mod field;
pub mod free_bialgebra;
pub mod hopf;
pub mod indicators;
pub mod integrals;
pub mod linalg;
mod rewrite;
pub mod zoo;

pub use error::Error;
