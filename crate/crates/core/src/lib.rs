//! Exact construction and verification of a Gaussian-integer family of
//! solutions of `A^5 + B^5 = C^5 ± 1`.
//!
//! The pipeline runs from a polynomial evenness identity, through the
//! sequence `F_{n+2} = -2F_{n+1} + 2F_n` and its closed forms, to the raw
//! family `(A_n, B_n, C_n, d_n)` and its `2^n`-scaled form `(a_n, b_n, c_n)`,
//! with the rational generating functions of the scaled and raw sequences.
//! Every step is checked by at least two independent routes.

pub mod error;
pub mod genfunc;
pub mod par;
pub mod recurrence;
pub mod rings;
pub mod solutions;
pub mod sympoly;
pub mod verify;

pub use error::{Error, Result};
pub use genfunc::{builtin_gf, GfKind, RationalGF, UniPoly};
pub use par::Execution;
pub use recurrence::{f_closed, f_rec, FState, Product};
pub use rings::{
    ring_pow, AsInteger, BiquadElem, GaussianInt, GaussianRational, QuadElem, Rational,
};
pub use solutions::{abcd_from_f, solution, verify_quintic, RawSolution, Sign, SolutionRecord};
pub use sympoly::{build_g, verify_param_identity, BiPoly};
