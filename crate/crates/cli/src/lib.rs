//! Library side of the `eqsym` command: suite registry, cache, expression
//! evaluation and command bodies.

pub mod cache;
pub mod commands;
pub mod config;
pub mod expr;
pub mod suites;
