//! Surface syntax and command-line front-end for multimode simple type
//! theory.
//!
//! Source files hold `def` declarations over the term language of
//! [`mstt_core`]. The [`commands`] module implements `check`, `eval` and
//! `extract` on top of the library's elaborator and extraction.

pub mod commands;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod pretty;

pub use commands::{Options, TheoryChoice};
pub use error::CliError;
pub use parser::{parse_program, parse_term, parse_type, Def, Program};
