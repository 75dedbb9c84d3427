//! Exact Hochschild and cyclic (co)homology of homogeneous down-up algebras.

pub mod cli;
pub mod exactfield;
pub mod koszul;
pub mod linalg;
pub mod pbw;
pub mod series;
pub mod verify;
pub mod wordoracle;
