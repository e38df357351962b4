//! Exact computation of Hilbert-Kunz functions, Hilbert-Kunz multiplicities and
//! F-signatures of the two-dimensional ADE hypersurface rings, together with the
//! Hilbert series of Frobenius pull-backs of syzygy modules and their
//! classification against the catalogs of indecomposable maximal Cohen-Macaulay
//! modules.
//!
//! Everything is exact: big integers, big rationals and finite-field linear
//! algebra. Every closed form can be cross-checked against an independent
//! brute-force oracle (Buchberger over F_p plus graded linear algebra).
//!
//! The main entry points:
//!
//! - [`catalog::AdeRing`] — ring specifications for A(n), D(n), E6, E7, E8
//! - [`hk`] — closed-form Hilbert-Kunz arithmetic and F-signature
//! - [`groebner`] / [`syzygy`] — the brute-force oracle
//! - [`engine`] — Hilbert series of syzygy modules via the graded recursion
//! - [`delta`] — Han's δ-function and the weighted τ-function
//! - [`matfac`] — matrix factorization verification and syzygy extraction

pub mod catalog;
pub mod delta;
pub mod engine;
pub mod field;
pub mod groebner;
pub mod hk;
pub mod matfac;
pub mod poly;
pub mod rat;
pub mod series;
pub mod syzygy;

pub use catalog::{AdeFamily, AdeRing};
pub use rat::Rat;
pub use series::{IntPoly, RationalSeries};
