//! Eulerian quasisymmetric functions and the identities around them.

pub mod characters;
pub mod identities;
pub mod qfun;
pub mod structure;
pub mod symmetry;
pub mod table;

pub use qfun::{a_n, a_poly, q_fun, q_lambda, q_nj, q_njk, q_sym, APoly, EulerianQ, PermClass, Selector, Stat};
pub use table::{table, ClassKey, EulerianTable, EULERIAN_SIZE_CAP};
pub use characters::{char_table, g_lambda, verify_character_formula, CharTable};
pub use structure::verify_representation_structure;
