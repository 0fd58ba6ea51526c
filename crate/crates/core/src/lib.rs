//! Exact-arithmetic toolkit for the geometry of compact complex homogeneous
//! spaces with vanishing first Chern class.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this crate. The crate is
//! `no_std`-compatible (it only needs `alloc`); IO, file formats and the
//! command-line surface live in the companion `koszul-cli` crate.
//!
//! Module map:
//! * [`rootsys`] — classical root systems A/B/C/D with exact weight arithmetic;
//! * [`painted`] — painted Dynkin diagrams, Koszul forms and the c₁ = 0
//!   decision procedure for torus embeddings;
//! * [`intlat`] — integer linear algebra: Smith/Hermite normal forms, integer
//!   kernels and SL(k,ℤ) completions;
//! * [`exforms`] — invariant exterior calculus on Lie algebra presentations,
//!   CYT and balanced-metric verifiers, the heterotic anomaly report;
//! * [`ssq`] — the integral Borel spectral sequence of the SU(4)/U(1) family;
//! * [`catalog`] — the example catalog, with every entry recomputable.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod exforms;
pub mod intlat;
pub mod painted;
pub mod rat;
pub mod rootsys;
pub mod ssq;
