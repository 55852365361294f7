//! Finite Coxeter groups and their Beauville structures.
//!
//! The crate is layered bottom-up: exact arithmetic ([`algebra`]), signed
//! permutations ([`perms`]), concrete Coxeter groups ([`groups`]), a
//! Schreier–Sims engine ([`stabchain`]), the Beauville checks themselves
//! ([`beauville`], [`mixed`]) and the catalogue of explicit structures
//! ([`paperdata`]).

pub mod algebra;
pub mod beauville;
pub mod groups;
pub mod mixed;
pub mod paperdata;
pub mod perms;
pub mod stabchain;
