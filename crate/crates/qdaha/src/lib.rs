//! Exact symbolic toolkit for quantum tori, their twisted group algebras,
//! double affine Hecke algebras realized as difference-reflection operators,
//! and q-normal forms of loop group elements.

pub mod clifford;
pub mod config;
pub mod daha;
pub mod error;
pub mod linalg;
pub mod loops;
pub mod modules;
pub mod par;
pub mod qtorus;
pub mod report;
pub mod rootdata;
pub mod scalars;
pub mod spherical;
pub mod suite;

pub use error::{Error, Result};
