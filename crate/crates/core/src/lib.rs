//! Multimode simple type theory with a pluggable mode theory, a type checker
//! that elaborates every accepted term into an executable presheaf model, and
//! extraction of closed denotations to host values.
//!
//! Two instantiations ship with the crate: guarded recursion ([`guarded`]) and
//! a binary parametricity theory ([`param`]).

#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod check;
pub mod extract;
pub mod gen;
pub mod guarded;
pub mod instance;
pub mod mode_theory;
pub mod model;
pub mod param;
pub mod syntax;
pub mod tcm;
