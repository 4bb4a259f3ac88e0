//! Exact construction and verification toolkit for Eulerian quasisymmetric
//! functions.
//!
//! The crate builds `Q_{n,j}`, `Q_{n,j,k}` and `Q_{lambda,j}` directly from
//! permutation statistics, converts them between the classical symmetric
//! function bases, implements the necklace/banner bijections behind their
//! combinatorial descriptions, and checks the surrounding identities against
//! brute-force enumeration.

pub mod bijections;
pub mod combinatorics;
pub mod error;
pub mod eulerian;
pub mod polyalg;
pub mod related;
pub mod report;
pub mod symfunc;

pub use combinatorics::{BicoloredLetter, MarkedSequence, Partition, Permutation};
pub use error::{Error, Result};
pub use polyalg::{Poly, PolyFraction, QExpSeries, TruncSeries, Var};
pub use report::{CheckKind, Status, VerifyReport};
pub use symfunc::{Basis, MonExpansion, QSymF, SymF, SymPoly};
