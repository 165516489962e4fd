//! Root data, Weyl groups, the skew form on `X ⊕ Y` and affine roots.

mod affine;
mod datum;
mod weyl;

pub use affine::{ext_affine_mul, AffineRoot, SkewForm};
pub use datum::{builtin_cartan, CustomDatum, LatticeChoice, Root, RootDatum, BUILTIN_TYPES};
pub use weyl::{WeylElement, WeylGroup, DEFAULT_WEYL_BOUND};
