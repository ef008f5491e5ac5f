//! Exact and numerical verification of unramified Plancherel densities for
//! split even orthogonal groups, driven by hook-type nilpotent data.
//!
//! The library computes, by several independent routes, the spectral mass
//! of the basic function on the twisted homogeneous space attached to a
//! hook parameter pair `(k, a)`:
//!
//! * exact Laurent-polynomial algebra in the Satake variables ([`algebra`]),
//! * root systems and Weyl groups of types B/C/D ([`roots`]),
//! * explicit rational matrix models of `so_N`/`sp_N`, sl2-triples from
//!   partitions, centralizers, and the graded slice ([`lie`]),
//! * graded characters, local L-factors, and the Satake-parameter lift
//!   ([`lfactors`]),
//! * the Macdonald Plancherel density with lattice quadrature on the
//!   compact dual torus ([`density`]),
//! * orders and Tamagawa volumes of finite classical groups ([`counts`]),
//! * and a suite of five cross-checking identities ([`verify`]).
//!
//! Start from the runnable examples (`cargo run --example ...`) or the
//! `plancherel` binary (`slice`, `density`, `verify` subcommands).

pub mod algebra;
pub mod cli;
pub mod config;
pub mod counts;
pub mod density;
pub mod lfactors;
pub mod verify;
pub mod lie;
pub mod rng;
pub mod roots;
